#!/usr/bin/env python3
# The parameter-holder forgery, step by step. Whoever generated the
# group knows p and q, and that is enough to make the verifier accept a
# commitment that never came from a bit opening.

from paircommit import (
    binding_key_from_exponent,
    claim_report,
    ext_gcd,
    forge,
    mod_inverse,
    setup_transparent,
    verify,
)

p, q = 5, 7
n = p * q
ctx = setup_transparent(p, q)
ck, xk = binding_key_from_exponent(ctx, 3)
print(f"group: n = {n} = {p} * {q}; binding key h = {ck.h.to_text()}")

print("\n== the exponent system ==")
print("c = g^a1 h^a2 and pi = g^b1 h^b2 pass verification whenever")
print("  a1*(a1 - 1) = 0          (mod n)")
print("  2*a1*a2 - a2 = b1        (mod n)")
print("  a2^2 = b2                (mod n)")

print("\n== solving it with the factorization ==")
_, k, t = ext_gcd(q, p)
ell = -t
print(f"extended Euclid on (q, p): {k}*{q} - {ell}*{p} = {k * q - ell * p}")
alpha1 = k * q % n
print(f"a1 = k*q = {alpha1}; a1*(a1-1) = {alpha1 * (alpha1 - 1)} = "
      f"{alpha1 * (alpha1 - 1) % n} (mod {n})")

beta1 = 2
inv = mod_inverse(2 * k * q - 1, n)
alpha2 = beta1 * inv % n
beta2 = alpha2 ** 2 % n
print(f"pick b1 = {beta1}; (2*k*q - 1)^-1 = {inv};  a2 = {alpha2}, b2 = {beta2}")

rec = forge(ck, p, q, beta1=beta1)
assert (rec.alpha1, rec.alpha2, rec.beta2) == (alpha1, alpha2, beta2)
print(f"\nforged commitment c  = {rec.c.c.to_text()}")
print(f"forged proof      pi = {rec.pi.pi.to_text()}")
print(f"verify(c, pi): {verify(ck, rec.c, rec.pi)}")

print("\n== what the construction itself computes ==")
print(f"a1 = {rec.alpha1} is not 0 or 1: {rec.alpha1 % n not in (0, 1)}")
g_a1_q = ctx.g ** (rec.alpha1 * q)
print(f"(g^a1)^q = {g_a1_q.to_text()} = g^q = {(ctx.g ** q).to_text()}, "
      f"not the identity: {not g_a1_q.is_identity()}")
print("so g^a1 is NOT in the order-q subgroup, and g^a1 alone is not h^w for any w")

print("\n== what the audit oracle says about c itself ==")
report = claim_report(rec, ck, p, q)
for line in report.lines():
    print(f"  {line}")
print("\nnote the last three lines: c = g^a1 h^a2 (not g^a1 alone) is what the")
print("verifier judges, and the oracle places it inside the valid set.")
print("run 03_audit_census.py for the exhaustive ground truth.")
