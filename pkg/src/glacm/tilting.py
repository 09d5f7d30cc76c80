"""Assembly and recognition of the three-part tilting-bundle shape.

A descriptor fixes a chain of rank-four bundles E_n = Ext2(n, k_n) for
i <= n <= j with k_n <= k_{n-1} <= k_n + 1, two distinct twists g and h,
and an up-closed subset I of the finite degree set H.  The assembled
collection is the chain, the lines over the left roofs of E_i at twist g
and the right roofs of E_j at twist h, and the lines over
S_I = I + ((H - w) minus (I - w)).  Its cardinality is always 5p+7.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bundles import (Bundle, Ext2, Line, bundle_from_json, bundle_key,
                      ext_coord, left_roofs, right_roofs, rigid_pair)
from .lattice import Degree, Lattice, TWIST_TAGS


class AssemblyError(ValueError):
    """An assembled or validated collection breaks a structural constraint."""

    def __init__(self, reason: str, pair: Optional[tuple] = None):
        super().__init__(reason if pair is None else f"{reason}: {pair}")
        self.reason = reason
        self.pair = pair


class UpsetCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class TiltingForm:
    i: int
    j: int
    k: tuple[int, ...]
    g: str
    h: str
    upset: frozenset[Degree]

    def validate_shape(self, p: int) -> None:
        if not (0 <= self.i <= self.j <= p - 2):
            raise AssemblyError(f"levels ({self.i},{self.j}) outside 0..{p - 2}")
        if len(self.k) != self.j - self.i + 1:
            raise AssemblyError(f"expected {self.j - self.i + 1} twist offsets, got {len(self.k)}")
        for n in range(1, len(self.k)):
            if not self.k[n] <= self.k[n - 1] <= self.k[n] + 1:
                raise AssemblyError(
                    f"offset step between levels {self.i + n - 1} and {self.i + n} "
                    f"must drop by at most one: {self.k[n - 1]} -> {self.k[n]}")
        if self.g == self.h:
            raise AssemblyError(f"twists must differ, both {self.g}")
        if self.g not in TWIST_TAGS or self.h not in TWIST_TAGS:
            raise AssemblyError(f"unknown twist in ({self.g}, {self.h})")

    def chain(self) -> list[Ext2]:
        return [Ext2(self.i + n, self.k[n]) for n in range(len(self.k))]

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "k": list(self.k),
            "g": self.g,
            "h": self.h,
            "upset": sorted(d.to_json() for d in self.upset),
        }

    @classmethod
    def from_json(cls, lat: Lattice, data: dict) -> "TiltingForm":
        upset = frozenset(lat.from_json(item) for item in data.get("upset", []))
        return cls(int(data["i"]), int(data["j"]), tuple(int(v) for v in data["k"]),
                   data["g"], data["h"], upset)


@dataclass(frozen=True)
class Collection:
    """A basic (multiplicity-free) finite set of indecomposable bundles."""

    members: frozenset[Bundle]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def lines(self) -> set[Degree]:
        return {b.x for b in self.members if isinstance(b, Line)}

    def rank4(self) -> list[Ext2]:
        return sorted((b for b in self.members if isinstance(b, Ext2)))

    def sorted_members(self, lat: Lattice) -> list[Bundle]:
        return sorted(self.members, key=lambda b: bundle_key(lat, b))

    def to_json(self, lat: Lattice) -> list:
        return [b.to_json() for b in self.sorted_members(lat)]

    @classmethod
    def from_json(cls, lat: Lattice, data: list) -> "Collection":
        return cls(frozenset(bundle_from_json(lat, item) for item in data))

    @classmethod
    def of(cls, *bundles: Bundle) -> "Collection":
        return cls(frozenset(bundles))


def check_rigid(lat: Lattice, coll: Collection) -> Optional[tuple[Bundle, Bundle]]:
    """First non-rigid pair of a collection, or None."""
    members = coll.sorted_members(lat)
    for a_idx, a in enumerate(members):
        for b in members[a_idx + 1:]:
            if not rigid_pair(lat, a, b):
                return (a, b)
    return None


# -- the H set and its upsets -----------------------------------------------------


def twist_complement(i: int, j: int, p: int, g: str, h: str) -> list[str]:
    """Twists entering H: drop g when left roofs exist, h when right ones do."""
    dropped = set()
    if i != 0:
        dropped.add(g)
    if j != p - 2:
        dropped.add(h)
    return [t for t in TWIST_TAGS if t not in dropped]


def build_H(lat: Lattice, i: int, j: int, k_i: int, k_j: int,
            g: str, h: str) -> list[Degree]:
    """The finite degree set H of a descriptor, canonically sorted."""
    if g == h:
        raise AssemblyError(f"twists must differ, both {g}")
    cache = lat.__dict__.setdefault("_h_cache", {})
    key = (i, j, k_i, k_j, g, h)
    if key in cache:
        return list(cache[key])
    p = lat.p
    di = 0 if i == 0 else 1
    dj = 1 if j == p - 2 else 0
    j1 = range(k_j - dj, k_i - di + 1)
    j2 = range(i + k_i + di - p - 1, j + k_j + dj - p)
    out = []
    for tag in twist_complement(i, j, p, g, h):
        q = lat.twists[tag]
        for a in j1:
            out.append(lat.add(lat.omega, lat.add(lat.x4_mult(a), q)))
        for b in j2:
            out.append(lat.add(lat.x4_mult(b), q))
    result = sorted(set(out), key=lat.sort_key)
    cache[key] = tuple(result)
    return result


def is_upset(lat: Lattice, pool: list[Degree], sub: frozenset[Degree]) -> bool:
    return all(y in sub for x in sub for y in pool
               if y not in sub and lat.leq(x, y))


def iter_upsets(lat: Lattice, pool: list[Degree]) -> Iterator[frozenset[Degree]]:
    """All up-closed subsets of the induced poset, empty set and pool included."""
    elems = sorted(set(pool), key=lat.sort_key)  # linear extension of <=
    n = len(elems)
    below = [frozenset(a for a in range(n) if lat.leq(elems[a], elems[b]))
             for b in range(n)]

    def gen(active: frozenset[int]) -> Iterator[frozenset[int]]:
        if not active:
            yield frozenset()
            return
        top = max(active)
        for upset in gen(active - {top}):
            yield upset | {top}
        yield from gen(active - below[top])

    for idx_set in gen(frozenset(range(n))):
        yield frozenset(elems[a] for a in idx_set)


def enumerate_upsets(lat: Lattice, pool: list[Degree],
                     max_count: Optional[int] = None) -> list[frozenset[Degree]]:
    out = []
    for upset in iter_upsets(lat, pool):
        out.append(upset)
        if max_count is not None and len(out) > max_count:
            raise UpsetCapExceeded(f"more than {max_count} upsets")
    out.sort(key=lambda s: (len(s), sorted(lat.sort_key(d) for d in s)))
    return out


def s_part(lat: Lattice, h_set: list[Degree], upset: frozenset[Degree]) -> set[Degree]:
    """S_I = I together with (H - w) minus (I - w)."""
    return set(upset) | {lat.sub(d, lat.omega) for d in h_set if d not in upset}


# -- assembly and recognition ------------------------------------------------------


def roof_line_part(lat: Lattice, form: TiltingForm) -> set[Degree]:
    chain = form.chain()
    return left_roofs(lat, chain[0], form.g) | right_roofs(lat, chain[-1], form.h)


def assemble(lat: Lattice, form: TiltingForm, check: bool = True) -> Collection:
    """Build the collection of a descriptor; structural failures raise."""
    form.validate_shape(lat.p)
    chain = form.chain()
    h_set = build_H(lat, form.i, form.j, form.k[0], form.k[-1], form.g, form.h)
    if not set(form.upset) <= set(h_set):
        raise AssemblyError("upset contains degrees outside H")
    if not is_upset(lat, h_set, form.upset):
        raise AssemblyError("subset of H is not up-closed")
    lines = roof_line_part(lat, form) | s_part(lat, h_set, form.upset)
    members: set[Bundle] = {Line(d) for d in lines}
    members.update(chain)
    coll = Collection(frozenset(members))
    if check:
        expected = 5 * lat.p + 7
        if len(coll) != expected:
            raise AssemblyError(f"cardinality {len(coll)} != {expected}")
        bad = check_rigid(lat, coll)
        if bad is not None:
            raise AssemblyError("pair not rigid", bad)
    return coll


def _detect_twist(lat: Lattice, roof_of: Ext2, side: str, lines: set[Degree],
                  exclude: Optional[str] = None) -> Optional[str]:
    maker = left_roofs if side == "left" else right_roofs
    hits = [t for t in TWIST_TAGS if maker(lat, roof_of, t) <= lines]
    if exclude is not None:
        hits = [t for t in hits if t != exclude]
    return hits[0] if len(hits) == 1 else None


def validate_form(lat: Lattice, coll: Collection) -> Optional[TiltingForm]:
    """Recover the descriptor assembling to this collection, if one exists."""
    p = lat.p
    if len(coll) != 5 * p + 7:
        return None
    chain = coll.rank4()
    if not chain:
        return None
    levels = [e.i for e in chain]
    if len(set(levels)) != len(levels):
        return None
    i, j = levels[0], levels[-1]
    if levels != list(range(i, j + 1)):
        return None
    k = tuple(e.k for e in chain)
    for n in range(1, len(k)):
        if not k[n] <= k[n - 1] <= k[n] + 1:
            return None
    lines = coll.lines()

    g = _detect_twist(lat, chain[0], "left", lines) if i != 0 else None
    if i != 0 and g is None:
        return None
    h = _detect_twist(lat, chain[-1], "right", lines, exclude=g) if j != p - 2 else None
    if j != p - 2 and h is None:
        return None
    if g is None:
        g = next(t for t in TWIST_TAGS if t != h)
    if h is None:
        h = next(t for t in TWIST_TAGS if t != g)

    candidate = TiltingForm(i, j, k, g, h, frozenset())
    roof_lines = roof_line_part(lat, candidate)
    if not roof_lines <= lines:
        return None
    rest = lines - roof_lines
    h_set = build_H(lat, i, j, k[0], k[-1], g, h)
    upset = frozenset(d for d in rest if d in set(h_set))
    if not is_upset(lat, h_set, upset):
        return None
    if rest != s_part(lat, h_set, upset):
        return None
    form = TiltingForm(i, j, k, g, h, upset)
    return form


# -- rigid-line capacity ------------------------------------------------------------


def line_rigidity_capacity(lat: Lattice, ei: Ext2, ej: Ext2) -> int:
    """Largest rigid set of lines compatible with the chain ends; 5p+i-j+6."""
    i, j = ei.i, ej.i
    if not (i <= j and 0 <= ei.k - ej.k <= j - i):
        raise AssemblyError(f"{ei} is not in the plus-domain of {ej}")
    return 5 * lat.p + i - j + 6


def segment_profile(lat: Lattice, i: int, j: int) -> tuple[int, int]:
    """(number of depth-two orbit segments, number of depth-one segments)."""
    return (lat.p + i - j - 2, j - i + 4)
