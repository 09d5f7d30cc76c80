"""Independent brute-force oracles backing the closed-form implementations.

Everything here recomputes a quantity from first principles by a different
route than the main code path: graded dimensions by explicit exponent
enumeration, stable Homs through the derived category of the equioriented
type-A quiver, and domain membership straight from the defining vanishing
conditions.  Tests and the verification suites compare the two routes.
"""

from __future__ import annotations

from .bundles import Bundle, Ext2, hom_nonzero, rigid_pair, shift
from .lattice import Degree, Lattice


def dim_graded_basis_scan(lat: Lattice, x: Degree) -> int:
    """Count monomials X1^e1 X2^e2 X3^e3 X4^e4, e1 <= 1, of degree x."""
    if x.ell < 0:
        return 0
    p = lat.p
    bound2 = 2 * x.ell + 2
    bound4 = p * (x.ell + 1) + p
    count = 0
    for e1 in (0, 1):
        for e2 in range(0, bound2):
            for e3 in range(0, bound2):
                for e4 in range(0, bound4):
                    if lat.normalize(e1, e2, e3, e4, 0) == x:
                        count += 1
    return count


def monomial_count(lat: Lattice, x: Degree) -> int:
    """Monomials of the free ring k[X1..X4] in degree x (all exponents free)."""
    if x.ell < 0:
        return 0
    count = 0
    bound2 = 2 * x.ell + 2
    bound4 = lat.p * (x.ell + 1) + lat.p
    for e1 in range(0, bound2):
        for e2 in range(0, bound2):
            for e3 in range(0, bound2):
                for e4 in range(0, bound4):
                    if lat.normalize(e1, e2, e3, e4, 0) == x:
                        count += 1
    return count


def dim_graded_resolution(lat: Lattice, x: Degree) -> int:
    """dim R_x as M(x) - M(x - c) from the length-one free resolution."""
    return monomial_count(lat, x) - monomial_count(lat, lat.sub(x, lat.c))


# -- stable Homs through the derived category of the A_{p-1} quiver -------------


class IntervalObject(tuple):
    """Shifted interval module M[a, b][s] of the quiver 1 -> 2 -> ... -> n."""

    __slots__ = ()

    def __new__(cls, a: int, b: int, s: int):
        return super().__new__(cls, (a, b, s))


def _tau_model(n: int, obj: IntervalObject) -> IntervalObject:
    a, b, s = obj
    if b < n:
        return IntervalObject(a + 1, b + 1, s)
    return IntervalObject(1, a, s - 1)


def _tau_inv_model(n: int, obj: IntervalObject) -> IntervalObject:
    a, b, s = obj
    if a > 1:
        return IntervalObject(a - 1, b - 1, s)
    return IntervalObject(b, n, s + 1)


def model_object(p: int, bundle: Ext2) -> IntervalObject:
    """Dictionary <i,0> -> projective M[p-1-i, p-1], transported by tau."""
    n = p - 1
    obj = IntervalObject(n - bundle.i, n, 0)
    k = bundle.k
    while k > 0:
        obj = _tau_inv_model(n, obj)
        k -= 1
    while k < 0:
        obj = _tau_model(n, obj)
        k += 1
    return obj


def model_hom_nonzero(n: int, u: IntervalObject, v: IntervalObject) -> bool:
    """Hom(M[a,b][s], M[c,d][t]) != 0 in the derived category."""
    a, b, s = u
    c, d, t = v
    if t == s:
        return c <= a <= d <= b
    if t == s + 1:
        return b < n and a + 1 <= c <= b + 1 <= d
    return False


def stable_hom_oracle(p: int, x: Ext2, y: Ext2) -> bool:
    return model_hom_nonzero(p - 1, model_object(p, x), model_object(p, y))


# -- rigid domains from the defining conditions ----------------------------------


def dom_plus_direct(lat: Lattice, x: Bundle, e: Ext2) -> bool:
    """Membership in the plus part straight from the definition."""
    if not rigid_pair(lat, x, e):
        return False
    return (not hom_nonzero(lat, x, shift(lat, e, lat.neg(lat.x4)))
            and not hom_nonzero(lat, shift(lat, e, lat.x4), x))


def interval_elements_scan(lat: Lattice, lo: Degree, hi: Degree) -> list[Degree]:
    """Interval membership re-derived by scanning a wide normal-form box."""
    d = lat.sub(hi, lo)
    if d.ell < 0:
        return []
    out = []
    for ell in range(0, d.ell + 4):
        for l4 in range(lat.p):
            for l1 in (0, 1):
                for l2 in (0, 1):
                    for l3 in (0, 1):
                        z = lat.add(lo, Degree(l1, l2, l3, l4, ell))
                        if lat.leq(lo, z) and lat.leq(z, hi):
                            out.append(z)
    uniq = sorted(set(out), key=lat.sort_key)
    return uniq
