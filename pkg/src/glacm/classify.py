"""Classification of candidate tilting collections inside a cluster subcategory.

Collections drawn from the standard 2-cluster tilting subcategory (spanned
by a hereditary chain of rank-four bundles plus all lines) fall into
exactly one of three shapes when tilting: the full line-bundle window up
to shift, a slice, or the three-part descriptor shape with a proper roof
part.  The classifier decides the shape; the search enumerates maximal
rigid collections of the right size inside a degree window and classifies
every one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import cliques
from .bundles import (Bundle, Ext2, Line, bundle_key, coord_bundle,
                      dom_lines_pair, hom_nonzero, rigid_pair, shift)
from .lattice import Degree, Lattice
from .tilting import Collection, TiltingForm, check_rigid, validate_form


class MembershipError(ValueError):
    """A collection member lies outside the ambient cluster subcategory."""

    def __init__(self, member: Bundle):
        super().__init__(f"summand outside the cluster subcategory: {member}")
        self.member = member


@dataclass(frozen=True)
class ClusterSubcat:
    """add{U(l*w), O(x)} for the chain U = Ext2(0,k_0) + ... + Ext2(p-2,k_{p-2})."""

    base: tuple[Ext2, ...]

    @classmethod
    def standard(cls, p: int, k_seq: Optional[tuple[int, ...]] = None) -> "ClusterSubcat":
        if k_seq is None:
            k_seq = (0,) * (p - 1)
        sub = cls(tuple(Ext2(n, k_seq[n]) for n in range(p - 1)))
        sub.check_shape(p)
        return sub

    def check_shape(self, p: int) -> None:
        levels = [e.i for e in self.base]
        if levels != list(range(p - 1)):
            raise ValueError(f"base must cover levels 0..{p - 2} once, got {levels}")
        for n in range(1, p - 1):
            k_prev, k_n = self.base[n - 1].k, self.base[n].k
            if not k_n <= k_prev <= k_n + 1:
                raise ValueError(f"base offsets not hereditary at level {n}")

    def contains(self, lat: Lattice, b: Bundle) -> bool:
        if isinstance(b, Line):
            return True
        period = lat.p + 2
        for e in self.base:
            if b.i == e.i and (e.k - b.k) % period == 0:
                return True
            flip_i = lat.p - 2 - e.i
            flip_k = e.i + e.k - lat.p
            if b.i == flip_i and (flip_k - b.k) % period == 0:
                return True
        return False

    def rank4_orbit_keys(self, lat: Lattice) -> list[tuple[int, int]]:
        return [rank4_orbit_key(lat.p, e) for e in self.base]


def rank4_orbit_key(p: int, b: Ext2) -> tuple[int, int]:
    """Orbit of a rank-four bundle under degree shift by omega."""
    period = p + 2
    cand = [(b.i, b.k % period), (p - 2 - b.i, (b.i + b.k - p) % period)]
    return min(cand)


@dataclass(frozen=True)
class Verdict:
    kind: str  # canonical | slice | form | not_tilting
    shift: Optional[Degree] = None
    form: Optional[TiltingForm] = None
    reason: Optional[str] = None

    def to_json(self, lat: Lattice) -> dict:
        out: dict = {"kind": self.kind}
        if self.shift is not None:
            out["shift"] = self.shift.to_json()
        if self.form is not None:
            out["form"] = self.form.to_json()
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def is_canonical(lat: Lattice, coll: Collection) -> Optional[Degree]:
    """The shift L with coll = {O(L+x) : 0 <= x <= 2c}, if one exists."""
    if coll.rank4():
        return None
    lines = coll.lines()
    if len(lines) != 5 * lat.p + 7:
        return None
    minima = [x for x in lines if all(lat.leq(x, y) for y in lines)]
    if len(minima) != 1:
        return None
    base = minima[0]
    window = {lat.add(base, u) for u in
              lat.interval(lat.zero, lat.smul(lat.c, 2))}
    return base if lines == window else None


def _forward_hom_vanishes(lat: Lattice, a: Bundle, b: Bundle) -> bool:
    """Hom(a, b(l*w)) = 0 for all l > 0, by the finite check.

    Nonvanishing propagates down in l (twice per step between lines, once
    when a rank-four bundle participates), so l in {1,2} resp. {1} decides.
    """
    sweep = (1, 2) if isinstance(a, Line) and isinstance(b, Line) else (1,)
    for ell in sweep:
        if hom_nonzero(lat, a, shift(lat, b, lat.smul(lat.omega, ell))):
            return False
    return True


def is_slice(lat: Lattice, coll: Collection, sub: ClusterSubcat) -> bool:
    """Meets each omega-orbit of the subcategory once, forward Homs vanish."""
    for b in coll:
        if not sub.contains(lat, b):
            raise MembershipError(b)
    line_keys = [lat.omega_orbit_key(x) for x in coll.lines()]
    if len(line_keys) != 4 * lat.p + 8 or len(set(line_keys)) != len(line_keys):
        return False
    rank4_keys = [rank4_orbit_key(lat.p, e) for e in coll.rank4()]
    if sorted(rank4_keys) != sorted(sub.rank4_orbit_keys(lat)):
        return False
    members = list(coll)
    return all(_forward_hom_vanishes(lat, a, b) for a in members for b in members)


def classify(lat: Lattice, coll: Collection, sub: ClusterSubcat) -> Verdict:
    """Theorem-shape trichotomy; mutually exclusive by construction."""
    for b in coll:
        if not sub.contains(lat, b):
            raise MembershipError(b)
    expected = 5 * lat.p + 7
    if len(coll) != expected:
        return Verdict("not_tilting", reason=f"cardinality {len(coll)} != {expected}")
    orbit_clash = _orbit_clash(lat, coll)
    if orbit_clash is not None:
        return Verdict("not_tilting",
                       reason=f"two summands in one omega-orbit: {orbit_clash}")
    bad = check_rigid(lat, coll)
    if bad is not None:
        return Verdict("not_tilting", reason=f"pair not rigid: {bad}")

    canon = is_canonical(lat, coll)
    slice_ok = is_slice(lat, coll, sub)
    form = validate_form(lat, coll)
    proper_form = form if form is not None and (form.i != 0 or form.j != lat.p - 2) else None
    positives = [v for v in (canon is not None, slice_ok, proper_form is not None) if v]
    if len(positives) > 1:
        raise ArithmeticError(f"verdicts not exclusive on {coll.to_json(lat)}")
    if canon is not None:
        return Verdict("canonical", shift=canon)
    if slice_ok:
        return Verdict("slice")
    if proper_form is not None:
        return Verdict("form", form=proper_form)
    return Verdict("not_tilting", reason="rigid of full size but matches no shape")


def _orbit_clash(lat: Lattice, coll: Collection) -> Optional[tuple]:
    seen: dict = {}
    for e in coll.rank4():
        key = rank4_orbit_key(lat.p, e)
        if key in seen:
            return (seen[key], e)
        seen[key] = e
    return None


# -- exhaustive search -------------------------------------------------------------


def default_window(lat: Lattice, slack: int = 0) -> tuple[Degree, Degree]:
    lo = lat.sub(lat.smul(lat.c, -2), lat.x4_mult(2 + slack))
    hi = lat.add(lat.smul(lat.c, 4), lat.x4_mult(2 + slack))
    return lo, hi


def search_pool(lat: Lattice, sub: ClusterSubcat, window: int = 0,
                lines_only: bool = False) -> list[Bundle]:
    """Window of candidate summands inside the subcategory."""
    lo, hi = default_window(lat, window)
    pool: list[Bundle] = [Line(x) for x in lat.interval(lo, hi)]
    if not lines_only:
        period = lat.p + 2
        rows = {}
        for e in sub.base:
            rows[e.i] = rows.get(e.i, set()) | {e.k % period}
            flip_i = lat.p - 2 - e.i
            rows[flip_i] = rows.get(flip_i, set()) | {(e.i + e.k - lat.p) % period}
        span = range(-3 * lat.p - 6, 4 * lat.p + 7)
        for i in sorted(rows):
            for k in span:
                if k % period not in rows[i]:
                    continue
                anchor = lat.x4_mult(k)
                tip = lat.x4_mult(i + k)
                if lat.leq(lo, anchor) and lat.leq(tip, hi):
                    pool.append(Ext2(i, k))
    return pool


def search_groups(lat: Lattice, pool: list[Bundle]) -> list[tuple[int, int]]:
    """Orbit capacity groups: two lines, one rank-four summand per orbit."""
    by_key: dict = {}
    for idx, b in enumerate(pool):
        if isinstance(b, Line):
            key = ("line", lat.omega_orbit_key(b.x))
            cap = 2
        else:
            key = ("ext", rank4_orbit_key(lat.p, b))
            cap = 1
        mask, _ = by_key.get(key, (0, cap))
        by_key[key] = (mask | (1 << idx), cap)
    return sorted(by_key.values())


def exhaustive_search(lat: Lattice, sub: ClusterSubcat, window: int = 0,
                      lines_only: bool = False,
                      cap: int = 6) -> Iterator[tuple[Collection, Verdict]]:
    """Classify every maximal rigid collection of size 5p+7 in the window."""
    if lat.p > cap:
        raise ValueError(f"weight {lat.p} above the search cap {cap}")
    pool = search_pool(lat, sub, window, lines_only)
    nbr = _adjacency(lat, pool)
    target = 5 * lat.p + 7
    groups = search_groups(lat, pool)
    results = []
    for mask in cliques.max_cliques(nbr, min_size=target, groups=groups):
        members = frozenset(pool[v] for v in cliques.mask_vertices(mask))
        coll = Collection(members)
        results.append((coll, classify(lat, coll, sub)))
    results.sort(key=lambda pair: [bundle_key(lat, b)
                                   for b in pair[0].sorted_members(lat)])
    return iter(results)


def _adjacency(lat: Lattice, pool: list[Bundle]) -> list[int]:
    n = len(pool)
    nbr = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rigid_pair(lat, pool[a], pool[b]):
                nbr[a] |= 1 << b
                nbr[b] |= 1 << a
    return nbr


def line_completions(lat: Lattice, chain: list[Ext2]) -> Iterator[set[Degree]]:
    """All maximal line sets completing a plus-domain chain to full size.

    The candidate lines are the ones rigid with both chain ends; every
    completion of cardinality 5p+7 - |chain| is yielded as a set of degrees.
    """
    ei, ej = chain[0], chain[-1]
    coords = dom_lines_pair(lat, ei, ej)
    pool = [coord_bundle(lat, c) for c in coords]
    degrees = [b.x for b in pool]
    target = 5 * lat.p + 7 - len(chain)
    nbr = _adjacency(lat, pool)
    groups = search_groups(lat, pool)
    for mask in cliques.max_cliques(nbr, min_size=target, groups=groups):
        yield {degrees[v] for v in cliques.mask_vertices(mask)}


def chain_configurations(lat: Lattice, i: int, j: int) -> Iterator[list[Ext2]]:
    """Normalized pairwise plus-domain chains on levels i..j with k_i = 0."""
    def extend(prefix: list[int]) -> Iterator[list[int]]:
        if len(prefix) == j - i + 1:
            yield prefix
            return
        for step in (0, -1):
            yield from extend(prefix + [prefix[-1] + step])

    for ks in extend([0]):
        yield [Ext2(i + n, ks[n]) for n in range(j - i + 1)]
