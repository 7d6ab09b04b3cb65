"""Supersingular curve internals for the pairing backend.

The curve is E: y^2 = x^3 + x over F_fp with fp prime, fp = 3 (mod 4).
For such fp the curve is supersingular with #E(F_fp) = fp + 1, and
-1 is a non-residue, so F_fp2 = F_fp(i) with i^2 = -1.

The distortion map (x, y) -> (-x, i*y) sends E(F_fp) into a linearly
independent subgroup over F_fp2, which makes the modified Tate pairing
e(P, Q) = f_{n,P}(distort(Q))^((fp^2-1)/n) symmetric and non-degenerate
on the order-n subgroup.

Points are affine (x, y) tuples of ints, with None for the point at
infinity. F_fp2 elements are (a, b) tuples meaning a + b*i. The Miller
loop is the plain affine double-and-add, denominators kept.
"""

import random
from typing import Optional, Tuple

from .arith import is_probable_prime
from .errors import DegeneratePairing

Point = Optional[Tuple[int, int]]
Fp2 = Tuple[int, int]

F2_ONE: Fp2 = (1, 0)
F2_ZERO: Fp2 = (0, 0)


# ---------------------------------------------------------------------------
# quadratic extension F_fp(i), i^2 = -1

def f2_mul(fp: int, u: Fp2, v: Fp2) -> Fp2:
    a, b = u
    c, d = v
    return ((a * c - b * d) % fp, (a * d + b * c) % fp)


def f2_inv(fp: int, u: Fp2) -> Fp2:
    a, b = u
    norm = (a * a + b * b) % fp
    if norm == 0:
        raise ZeroDivisionError("inverse of zero in F_fp2")
    ninv = pow(norm, -1, fp)
    return (a * ninv % fp, -b * ninv % fp)


def f2_pow(fp: int, u: Fp2, e: int) -> Fp2:
    if e < 0:
        u = f2_inv(fp, u)
        e = -e
    result = F2_ONE
    while e:
        if e & 1:
            result = f2_mul(fp, result, u)
        u = f2_mul(fp, u, u)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# curve group, affine chord-and-tangent

def is_on_curve(fp: int, pt: Point) -> bool:
    if pt is None:
        return True
    x, y = pt
    return (y * y - (x * x * x + x)) % fp == 0


def ec_neg(fp: int, pt: Point) -> Point:
    if pt is None:
        return None
    return (pt[0], -pt[1] % fp)


def ec_add(fp: int, a: Point, b: Point) -> Point:
    if a is None:
        return b
    if b is None:
        return a
    x1, y1 = a
    x2, y2 = b
    if x1 == x2:
        if (y1 + y2) % fp == 0:
            return None
        lam = (3 * x1 * x1 + 1) * pow(2 * y1, -1, fp) % fp
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, fp) % fp
    x3 = (lam * lam - x1 - x2) % fp
    y3 = (lam * (x1 - x3) - y1) % fp
    return (x3, y3)


def ec_mul(fp: int, pt: Point, k: int) -> Point:
    if k < 0:
        pt = ec_neg(fp, pt)
        k = -k
    result: Point = None
    addend = pt
    while k:
        if k & 1:
            result = ec_add(fp, result, addend)
        addend = ec_add(fp, addend, addend)
        k >>= 1
    return result


def sqrt_mod(fp: int, a: int) -> Optional[int]:
    """Square root mod fp for fp = 3 (mod 4); None if a is a non-residue."""
    a %= fp
    if a == 0:
        return 0
    r = pow(a, (fp + 1) // 4, fp)
    if r * r % fp != a:
        return None
    return r


def random_point(fp: int, rng: random.Random) -> Point:
    """Uniformish random affine point with y != 0."""
    while True:
        x = rng.randrange(fp)
        rhs = (x * x * x + x) % fp
        if rhs == 0:
            continue
        y = sqrt_mod(fp, rhs)
        if y is None:
            continue
        return (x, y) if rng.getrandbits(1) else (x, -y % fp)


def find_curve_field(n: int, bound: int = 2 ** 20,
                     rng: Optional[random.Random] = None) -> Tuple[int, int]:
    """Smallest even cofactor c >= 2 with c*n - 1 prime and = 3 (mod 4).

    Returns (cofactor, field prime). fp must be odd, hence even cofactors only.
    """
    for cof in range(2, bound + 1, 2):
        fp = cof * n - 1
        if fp % 4 == 3 and is_probable_prime(fp, rng=rng):
            return cof, fp
    raise ValueError(
        f"no suitable field prime with cofactor <= {bound} for n={n}; "
        "try a different prime pair")


# ---------------------------------------------------------------------------
# modified Tate pairing

def distort(fp: int, pt: Point) -> Optional[Tuple[Fp2, Fp2]]:
    """(x, y) -> (-x, i*y), raising the point into E(F_fp2)."""
    if pt is None:
        return None
    x, y = pt
    return ((-x % fp, 0), (0, y))


def _vert(fp: int, a: Point, s: Tuple[Fp2, Fp2]) -> Fp2:
    # vertical line through a, evaluated at s; through infinity it is 1
    if a is None:
        return F2_ONE
    sx = s[0]
    return ((sx[0] - a[0]) % fp, sx[1])


def _line(fp: int, a: Point, b: Point, s: Tuple[Fp2, Fp2]) -> Fp2:
    # chord through a and b (tangent if equal), evaluated at s
    if a is None:
        return _vert(fp, b, s)
    if b is None:
        return _vert(fp, a, s)
    x1, y1 = a
    x2, y2 = b
    if x1 == x2 and (y1 + y2) % fp == 0:
        return _vert(fp, a, s)
    if a == b:
        lam = (3 * x1 * x1 + 1) * pow(2 * y1, -1, fp) % fp
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, fp) % fp
    sx, sy = s
    return ((lam * (sx[0] - x1) - (sy[0] - y1)) % fp,
            (lam * sx[1] - sy[1]) % fp)


def tate_pairing(fp: int, n: int, p_pt: Point, q_pt: Point) -> Fp2:
    """Reduced modified Tate pairing of two points of order dividing n.

    Miller loop of length n on (p_pt, distort(q_pt)), then final
    exponentiation to (fp^2 - 1)/n. Result lies in the order-n subgroup
    of F_fp2^*; the identity is (1, 0).
    """
    if p_pt is None or q_pt is None:
        return F2_ONE
    s = distort(fp, q_pt)
    assert s is not None
    num = F2_ONE
    den = F2_ONE
    r = p_pt
    for bit in bin(n)[3:]:
        lv = _line(fp, r, r, s)
        r = ec_add(fp, r, r)
        vv = _vert(fp, r, s)
        num = f2_mul(fp, f2_mul(fp, num, num), lv)
        den = f2_mul(fp, f2_mul(fp, den, den), vv)
        if bit == "1":
            lv = _line(fp, r, p_pt, s)
            r = ec_add(fp, r, p_pt)
            vv = _vert(fp, r, s)
            num = f2_mul(fp, num, lv)
            den = f2_mul(fp, den, vv)
    if num == F2_ZERO or den == F2_ZERO:
        raise DegeneratePairing("line evaluation hit the distorted point")
    f = f2_mul(fp, num, f2_inv(fp, den))
    return f2_pow(fp, f, (fp * fp - 1) // n)
