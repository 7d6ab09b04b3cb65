#!/usr/bin/env python3
# The same group realized as a genuine pairing: the order-n subgroup of
# a supersingular curve, with the distortion-map Tate pairing. Every
# protocol decision must match the transparent backend bit for bit.

import random

from paircommit import (
    binding_key_from_exponent,
    commit,
    forge,
    pair,
    setup_curve,
    setup_transparent,
    verify,
    wi_prove,
)

rng = random.Random(4)
p, q = 5, 7
n = p * q

print("== constructing the curve group for n = 35 ==")
for cof in (2, 4):
    cand = cof * n - 1
    factors = [d for d in range(2, cand) if cand % d == 0][:2]
    status = f"composite ({'*'.join(map(str, factors))})" if factors else \
        f"prime, {cand} mod 4 = {cand % 4}"
    print(f"  cofactor {cof}: fp = {cof}*{n} - 1 = {cand} -> {status}")

ctx = setup_curve(p, q, rng)
print(f"chosen field prime fp = {ctx.field_prime}, cofactor = {ctx.cofactor}")
print(f"curve: y^2 = x^3 + x over F_{ctx.field_prime}, "
      f"#E = fp + 1 = {ctx.field_prime + 1} = {ctx.cofactor} * {n}")
print(f"generator g = {ctx.g.to_text()} of order exactly {n}")

print("\n== pairing laws, checked numerically ==")
ok = all(
    pair(ctx.g ** s, ctx.g ** t) == ctx.gt ** (s * t)
    for s, t in ((rng.randrange(n), rng.randrange(n)) for _ in range(50)))
print(f"bilinearity over 50 random exponent pairs: {ok}")
ok = all(
    pair(a, b) == pair(b, a)
    for a, b in ((ctx.g ** rng.randrange(n), ctx.g ** rng.randrange(n))
                 for _ in range(50)))
print(f"symmetry over 50 random element pairs:     {ok}")
print(f"pair(g,g)^(n/p) != 1: {not (ctx.gt ** q).is_identity()}; "
      f"pair(g,g)^(n/q) != 1: {not (ctx.gt ** p).is_identity()}")

print("\n== the two backends agree on every decision ==")
tctx = setup_transparent(p, q)
agree = True
for _ in range(50):
    x = rng.randrange(1, q)
    m, r = rng.randrange(2), rng.randrange(n)
    beta1 = rng.randrange(1, n)
    decisions = []
    for c in (tctx, ctx):
        ck, _ = binding_key_from_exponent(c, x)
        com = commit(ck, m, r)
        proof = wi_prove(ck, m, r)
        rec = forge(ck, p, q, beta1=beta1)
        decisions.append((verify(ck, com, proof), verify(ck, rec.c, rec.pi)))
    agree &= decisions[0] == decisions[1]
print(f"50 transcripts (honest verify + forged verify): identical = {agree}")
