"""Exact maximal-clique enumeration over integer bitsets.

Bron-Kerbosch with pivoting, plus an optional capacity bound: vertices are
partitioned into groups with a per-group cap on how many can enter any
clique (orbit counting supplies the caps), and branches whose bound cannot
reach the requested size are cut.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

Groups = Sequence[tuple[int, int]]  # (vertex mask, cap)


def _capacity(p_mask: int, r_size: int, groups: Optional[Groups]) -> int:
    if groups is None:
        return r_size + p_mask.bit_count()
    total = r_size
    for mask, cap in groups:
        hit = (p_mask & mask).bit_count()
        total += hit if hit < cap else cap
    return total


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_cliques(nbr: Sequence[int], min_size: int = 0,
                groups: Optional[Groups] = None) -> Iterator[int]:
    """Yield all maximal cliques of size >= min_size, as vertex masks."""

    def bk(r_mask: int, r_size: int, p_mask: int, x_mask: int) -> Iterator[int]:
        if p_mask == 0 and x_mask == 0:
            if r_size >= min_size:
                yield r_mask
            return
        if _capacity(p_mask, r_size, groups) < min_size:
            return
        pivot, best = -1, -1
        for u in _bits(p_mask | x_mask):
            deg = (p_mask & nbr[u]).bit_count()
            if deg > best:
                pivot, best = u, deg
        for v in _bits(p_mask & ~nbr[pivot]):
            bit = 1 << v
            yield from bk(r_mask | bit, r_size + 1, p_mask & nbr[v], x_mask & nbr[v])
            p_mask &= ~bit
            x_mask |= bit

    yield from bk(0, 0, (1 << len(nbr)) - 1, 0)


def _color_order(nbr: Sequence[int], p_mask: int) -> list[tuple[int, int]]:
    """Greedy coloring of P; (vertex, color) with colors nondecreasing."""
    order: list[tuple[int, int]] = []
    color = 0
    rest = p_mask
    while rest:
        color += 1
        available = rest
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append((v, color))
            rest ^= low
            available = available & ~low & ~nbr[v]
    return order


def max_clique_size(nbr: Sequence[int], groups: Optional[Groups] = None,
                    lower: int = 0) -> int:
    """Exact maximum clique size, but never less than the seeded lower bound.

    Seeding with a known clique size turns the search into a refutation of
    anything larger; the greedy-coloring and group-capacity bounds prune it.
    """
    best = lower

    def bb(r_size: int, p_mask: int) -> None:
        nonlocal best
        if p_mask == 0:
            if r_size > best:
                best = r_size
            return
        if groups is not None and _capacity(p_mask, r_size, groups) <= best:
            return
        order = _color_order(nbr, p_mask)
        for v, color in reversed(order):
            if r_size + color <= best:
                return
            bb(r_size + 1, p_mask & nbr[v])
            p_mask &= ~(1 << v)

    bb(0, (1 << len(nbr)) - 1)
    return best


def mask_vertices(mask: int) -> list[int]:
    return list(_bits(mask))
