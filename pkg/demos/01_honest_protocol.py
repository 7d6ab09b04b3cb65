#!/usr/bin/env python3
# Honest run of the commitment scheme, end to end, over n = 35 with
# discrete logs visible (transparent backend) so every step is readable.

import random

from paircommit import (
    binding_key_from_exponent,
    commit,
    extract,
    hiding_key_from_exponent,
    homomorphic_combine,
    setup_transparent,
    trapdoor_open,
    verify,
    wi_prove,
)
from paircommit.commitment import Opening

rng = random.Random(1)

print("== group setup ==")
ctx = setup_transparent(5, 7)
print(f"n = {ctx.n} = {ctx.p} * {ctx.q}; g = {ctx.g.to_text()} (exponents are visible)")

print("\n== binding mode: the verifier's world ==")
ck, xk = binding_key_from_exponent(ctx, 3)
print(f"h = g^(p*x) = g^15 = {ck.h.to_text()}  -> h spans the order-q subgroup")

m, r = 1, 2
c = commit(ck, m, r)
pi = wi_prove(ck, m, r)
print(f"commit(m={m}, r={r})  -> c  = {c.c.to_text()}")
print(f"prove(m={m}, r={r})   -> pi = {pi.pi.to_text()}")
print(f"verify: e(c, c*g^-1) =? e(h, pi)  -> {verify(ck, c, pi)}")

recovered = extract(xk, c, bound=16)
print(f"extraction with q={xk.q}: c^q = (g^q)^m  -> m = {recovered}")

print("\n== homomorphic combination ==")
c1, c2 = commit(ck, 1, 2), commit(ck, 0, 4)
combined = homomorphic_combine(c1, c2)
print(f"commit(1,2) * commit(0,4) = {combined.c.to_text()} = commit(1, 6): "
      f"{combined == commit(ck, 1, 6)}")

print("\n== hiding mode: the equivocator's world ==")
hk, tk = hiding_key_from_exponent(ctx, 3)
print(f"h = g^x = g^3 = {hk.h.to_text()}  -> h has full order n")

c = commit(hk, 0, 4)
print(f"commit(m=0, r=4) -> c = {c.c.to_text()}")
reopened = trapdoor_open(tk, c, Opening(0, 4), 1)
print(f"trapdoor re-opening to m=1: r' = {reopened.r}")
print(f"commit(1, {reopened.r}) == c: {commit(hk, 1, reopened.r) == c}")
back = trapdoor_open(tk, c, reopened, 0)
print(f"re-opening back to m=0 recovers r = {back.r}")

print("\nhonest protocol: every check above should read True")
