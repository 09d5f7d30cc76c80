"""Hom nonvanishing in the stable category of ACM bundles.

After killing the line bundles, the indecomposables of rank four form a
translation quiver ZA_{p-1} with vertices (i, k) for 0 <= i <= p-2, arrows
(i,k) -> (i+1,k) and (i,k) -> (i-1,k+1), and translation (i,k) -> (i,k-1).
Hom(a, -) is computed by clamped mesh knitting: seed 1 at a, then scan
columns rightward with h(w) = max(0, sum of h over arrows into w - h(tau w)).
Hammocks in type A are rectangles, which the clamp reproduces; the
independent interval-module model in oracles.py cross-validates this.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def _knit(p: int, ia: int, ib: int, dk: int) -> bool:
    """Nonvanishing of stable Hom from (ia, 0) to (ib, dk)."""
    n_levels = p - 1
    if dk < 0 or dk > p:
        return False
    prev = [0] * n_levels
    col = [0] * n_levels
    for level in range(n_levels):
        col[level] = 1 if level == ia else (col[level - 1] if level > ia else 0)
    for _ in range(dk):
        prev, col = col, [0] * n_levels
        for level in range(n_levels):
            above = col[level - 1] if level > 0 else 0
            below = prev[level + 1] if level + 1 < n_levels else 0
            col[level] = max(0, above + below - prev[level])
        if not any(col):
            return False
    return col[ib] > 0


def stable_hom_nonzero(p: int, a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Stable Hom(<ia,ka>, <ib,kb>) != 0, for rank-four coordinates."""
    (ia, ka), (ib, kb) = a, b
    return _knit(p, ia, ib, kb - ka)
