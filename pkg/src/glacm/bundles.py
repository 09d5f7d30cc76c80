"""Indecomposable ACM bundles and their rigidity calculus.

Every indecomposable is a line bundle Line(x) or a rank-four bundle
Ext2(i, k) with 0 <= i <= p-2, the k*x4-twisted two-step extension sitting
at row i of the Auslander-Reiten quiver.  Extended coordinates enlarge the
row index to [-1, p-1]: row -1 holds the lines O(omega + k*x4 + g) and row
p-1 the lines O((k-1)*x4 + g), one for each twist g.  Rank-four bundles
absorb every twist, so their coordinates carry none.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, NamedTuple, Union

from .lattice import Branch, Degree, Lattice, TWIST_TAGS
from .stable import stable_hom_nonzero


class Line(NamedTuple):
    x: Degree

    def to_json(self) -> dict:
        return {"type": "line", "x": self.x.to_json()}


class Ext2(NamedTuple):
    i: int
    k: int

    def to_json(self) -> dict:
        return {"type": "ext", "i": self.i, "k": self.k}


Bundle = Union[Line, Ext2]


class Coord(NamedTuple):
    """Extended coordinate <level, offset>_twist with level in [-1, p-1]."""

    level: int
    offset: int
    twist: str

    def to_json(self) -> dict:
        return {"level": self.level, "offset": self.offset, "g": self.twist}


class Dom(Enum):
    OUTSIDE = "outside"
    DOM_PLUS_UP = "dom_plus_up"        # level <= anchor wedge of the plus part
    DOM_PLUS_DOWN = "dom_plus_down"    # level >= anchor wedge of the plus part
    DOM_PLUS_BOTH = "dom_plus_both"
    DOM_MINUS = "dom_minus"


class DomainFormMismatch(ArithmeticError):
    """Closed-form domain membership disagreed with the first-principles test."""


def rank(b: Bundle) -> int:
    return 1 if isinstance(b, Line) else 4


def bundle_from_json(lat: Lattice, data: dict) -> Bundle:
    if data["type"] == "line":
        return Line(lat.from_json(data["x"]))
    return Ext2(int(data["i"]), int(data["k"]))


def bundle_key(lat: Lattice, b: Bundle):
    """Canonical sort key: rank-four summands first, then lines."""
    if isinstance(b, Ext2):
        return (0, b.i, b.k, 0, 0, 0)
    return (1,) + lat.sort_key(b.x)


# -- degree shifts, suspension, translation -----------------------------------


def shift(lat: Lattice, b: Bundle, y: Degree) -> Bundle:
    """Degree shift b(y).

    On rank four the generator rules are x4: (i,k) -> (i,k+1) and
    xj (j <= 3): (i,k) -> (p-2-i, i+k+1); any decomposition of y gives the
    same answer because the rules present the L-action.
    """
    if isinstance(b, Line):
        return Line(lat.add(b.x, y))
    p, i, k = lat.p, b.i, b.k
    # apply x1 y.l1 times, x2 y.l2 times, x3 y.l3 times
    for _ in range(y.l1 + y.l2 + y.l3):
        i, k = p - 2 - i, i + k + 1
    k += y.l4 + p * y.ell
    return Ext2(i, k)


def suspend(b: Ext2, p: int) -> Ext2:
    """Shift of the suspension [1]; equals the twist by any xj, j <= 3."""
    if not isinstance(b, Ext2):
        raise TypeError("suspension leaves the ACM category on line bundles")
    return Ext2(p - 2 - b.i, b.i + b.k + 1)


def desuspend(b: Ext2, p: int) -> Ext2:
    if not isinstance(b, Ext2):
        raise TypeError("suspension leaves the ACM category on line bundles")
    return Ext2(p - 2 - b.i, b.i + b.k + 1 - p)


def tau(b: Ext2, p: int) -> Ext2:
    """Auslander-Reiten translation: omega-shift followed by suspension."""
    if not isinstance(b, Ext2):
        raise TypeError("tau is only defined on rank-four bundles here")
    return Ext2(b.i, b.k - 1)


def tau_inv(b: Ext2, p: int) -> Ext2:
    if not isinstance(b, Ext2):
        raise TypeError("tau is only defined on rank-four bundles here")
    return Ext2(b.i, b.k + 1)


# -- extended coordinates ------------------------------------------------------


def ext_coord(lat: Lattice, b: Bundle) -> Coord:
    if isinstance(b, Ext2):
        return Coord(b.i, b.k, "e")
    branch, tag, m = lat.line_coord(b.x)
    if branch is Branch.BOTTOM:
        return Coord(-1, m, tag)
    return Coord(lat.p - 1, m + 1, tag)


def coord_bundle(lat: Lattice, coord: Coord) -> Bundle:
    level, offset, tag = coord
    if level == -1:
        return Line(lat.line_degree(Branch.BOTTOM, tag, offset))
    if level == lat.p - 1:
        return Line(lat.line_degree(Branch.TOP, tag, offset - 1))
    if not 0 <= level <= lat.p - 2:
        raise ValueError(f"level {level} outside [-1, {lat.p - 1}]")
    return Ext2(level, offset)


def line_coords(lat: Lattice, level: int, offsets: Iterable[int]) -> list[Coord]:
    return [Coord(level, n, tag) for n in offsets for tag in TWIST_TAGS]


# -- Hom nonvanishing ----------------------------------------------------------


def hom_nonzero(lat: Lattice, a: Bundle, b: Bundle) -> bool:
    """Hom(a, b) != 0.

    With a rank-four participant <i,ki> against <j,kj> (j in [-1, p-1]) the
    criterion is ki <= kj and i+ki <= j+kj; between lines it is effectivity
    of the degree difference.
    """
    if isinstance(a, Line) and isinstance(b, Line):
        return lat.leq(a.x, b.x)
    ca, cb = ext_coord(lat, a), ext_coord(lat, b)
    return ca.offset <= cb.offset and ca.level + ca.offset <= cb.level + cb.offset


# -- rigidity ------------------------------------------------------------------


def rigid_lines(lat: Lattice, x: Degree, y: Degree) -> bool:
    """O(x) + O(y) rigid, i.e. -2c <= y - x <= 2c."""
    d = lat.sub(y, x)
    two_c = lat.smul(lat.c, 2)
    return lat.leq(d, two_c) and lat.leq(lat.neg(two_c), d)


def _serre_vanishing(lat: Lattice, x: Bundle, e: Ext2) -> bool:
    """Hom(x, e(omega)) = 0 and Hom(e(-omega), x) = 0 (no Ext^2 either way)."""
    e_w = shift(lat, e, lat.omega)
    e_mw = shift(lat, e, lat.neg(lat.omega))
    return not hom_nonzero(lat, x, e_w) and not hom_nonzero(lat, e_mw, x)


def rigid_pair(lat: Lattice, a: Bundle, b: Bundle) -> bool:
    """The direct sum of two indecomposables is rigid; symmetric."""
    if isinstance(a, Line) and isinstance(b, Line):
        return rigid_lines(lat, a.x, b.x)
    if isinstance(a, Line):
        return _serre_vanishing(lat, a, b)
    if isinstance(b, Line):
        return _serre_vanishing(lat, b, a)
    if not _serre_vanishing(lat, b, a):
        return False
    p = lat.p
    e_minus = desuspend(a, p)
    e_plus = suspend(a, p)
    return (not stable_hom_nonzero(p, e_minus, b)
            and not stable_hom_nonzero(p, b, e_plus))


# -- rigid domains -------------------------------------------------------------


def _dom_plus_closed_form(lat: Lattice, x: Bundle, e: Ext2) -> tuple[bool, bool]:
    """Membership of x in the two wedges of the closed-form plus-domain."""
    cx = ext_coord(lat, x)
    j, kx = cx.level, cx.offset
    i, k = e.i, e.k
    up = j <= i and 0 <= kx - k <= i - j
    down = j >= i and 0 <= k - kx <= j - i
    return up, down


def dom_classify(lat: Lattice, x: Bundle, e: Ext2, strict: bool = True) -> Dom:
    """Place x relative to the rigid domain of e.

    The plus part is computed from the closed form and cross-checked against
    the defining conditions Hom(x, e(-x4)) = 0 and Hom(e(x4), x) = 0; a
    disagreement raises DomainFormMismatch when strict.
    """
    if x == e:
        return Dom.DOM_PLUS_BOTH
    if not rigid_pair(lat, x, e):
        return Dom.OUTSIDE
    up, down = _dom_plus_closed_form(lat, x, e)
    direct = (not hom_nonzero(lat, x, shift(lat, e, lat.neg(lat.x4)))
              and not hom_nonzero(lat, shift(lat, e, lat.x4), x))
    if strict and (up or down) != direct:
        raise DomainFormMismatch(f"{x} vs {e}: closed form {(up, down)}, direct {direct}")
    if up and down:
        return Dom.DOM_PLUS_BOTH
    if up:
        return Dom.DOM_PLUS_UP
    if down:
        return Dom.DOM_PLUS_DOWN
    return Dom.DOM_MINUS


def dom_lines(lat: Lattice, e: Ext2) -> list[Coord]:
    """The line-bundle part of the rigid domain, as extended coordinates."""
    i, k, p = e.i, e.k, lat.p
    bottom = [Coord(-1, n, g) for n in range(i + k - p + 1, k + p + 1)
              for g in TWIST_TAGS]
    top = [Coord(p - 1, n + 1, g) for n in range(k - p - 1, i + k + 1)
           for g in TWIST_TAGS]
    return bottom + top


def dom_lines_pair(lat: Lattice, ei: Ext2, ej: Ext2) -> list[Coord]:
    """Lines rigid with both ends of a plus-domain chain; ei in Dom+(ej)."""
    i, ki = ei.i, ei.k
    j, kj = ej.i, ej.k
    p = lat.p
    bottom = [Coord(-1, n, g) for n in range(j + kj - p + 1, kj + p + 1)
              for g in TWIST_TAGS]
    top = [Coord(p - 1, n + 1, g) for n in range(ki - p - 1, i + ki + 1)
           for g in TWIST_TAGS]
    return bottom + top


# -- roofs ---------------------------------------------------------------------


def roof_interval(lat: Lattice, start: Degree) -> tuple[Degree, Degree]:
    """A roof is the interval [x, x - 2*omega] = [x, x + (p+2)*x4]."""
    return (start, lat.add(start, lat.x4_mult(lat.p + 2)))


def left_roof_start(lat: Lattice, e: Ext2, m: int, g: str) -> Degree:
    return lat.add(lat.x4_mult(e.k + m - lat.p - 2), lat.twists[g])


def right_roof_start(lat: Lattice, e: Ext2, n: int, g: str) -> Degree:
    base = lat.add(lat.omega, lat.x4_mult(e.i + e.k + n - lat.p))
    return lat.add(base, lat.twists[g])


def left_roofs(lat: Lattice, e: Ext2, g: str) -> set[Degree]:
    """Union of the m-th left roofs, m = 1..i; empty when i = 0."""
    cache = lat.__dict__.setdefault("_roof_cache", {})
    key = ("left", e, g)
    if key not in cache:
        out: set[Degree] = set()
        for m in range(1, e.i + 1):
            lo, hi = roof_interval(lat, left_roof_start(lat, e, m, g))
            out.update(lat.interval(lo, hi))
        cache[key] = frozenset(out)
    return set(cache[key])


def right_roofs(lat: Lattice, e: Ext2, h: str) -> set[Degree]:
    """Union of the n-th right roofs, n = 1..p-i-2; empty when i = p-2."""
    cache = lat.__dict__.setdefault("_roof_cache", {})
    key = ("right", e, h)
    if key not in cache:
        out: set[Degree] = set()
        for n in range(1, lat.p - e.i - 1):
            lo, hi = roof_interval(lat, right_roof_start(lat, e, n, h))
            out.update(lat.interval(lo, hi))
        cache[key] = frozenset(out)
    return set(cache[key])


def roofs(lat: Lattice, e: Ext2, g: str, h: str) -> tuple[set[Degree], set[Degree]]:
    return left_roofs(lat, e, g), right_roofs(lat, e, h)


# -- constructive thick-subcategory reach ---------------------------------------


def thick_reach(lat: Lattice, e: Ext2, lines: set[Degree]) -> set[Ext2]:
    """Rank-four bundles certified generated from e and the given lines.

    Closure of four rewrite rules: with a full m-th left roof present one
    reaches (i-1, k) from the i-th roof or (i-1, k+1) from the first, and
    dually (i+1, k) from the first right roof or (i+1, k-1) from the last.
    """
    p = lat.p

    def roof_present(start: Degree) -> bool:
        lo, hi = roof_interval(lat, start)
        return all(z in lines for z in lat.interval(lo, hi))

    reached = {e}
    frontier = [e]
    while frontier:
        b = frontier.pop()
        steps: list[Ext2] = []
        if b.i != 0:
            for g in TWIST_TAGS:
                if roof_present(left_roof_start(lat, b, b.i, g)):
                    steps.append(Ext2(b.i - 1, b.k))
                if roof_present(left_roof_start(lat, b, 1, g)):
                    steps.append(Ext2(b.i - 1, b.k + 1))
        if b.i != p - 2:
            for g in TWIST_TAGS:
                if roof_present(right_roof_start(lat, b, 1, g)):
                    steps.append(Ext2(b.i + 1, b.k))
                if roof_present(right_roof_start(lat, b, p - b.i - 2, g)):
                    steps.append(Ext2(b.i + 1, b.k - 1))
        for nxt in steps:
            if nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)
    return reached
