"""Exact arithmetic in the grading group of a weight-(2,2,2,p) plane.

The group L is generated by x1, x2, x3, x4, c subject to
2*x1 = 2*x2 = 2*x3 = p*x4 = c.  Every element has a unique normal form

    l1*x1 + l2*x2 + l3*x3 + l4*x4 + ell*c

with l1, l2, l3 in {0,1}, 0 <= l4 < p and ell any integer.  The effective
cone is generated by the five generators; an element is effective exactly
when the ell of its normal form is >= 0, which makes the partial order and
all graded dimension counts loop-free.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, Iterator, NamedTuple


class Degree(NamedTuple):
    """Normal form of a group element; only Lattice constructs these."""

    l1: int
    l2: int
    l3: int
    l4: int
    ell: int

    def to_json(self) -> list[int]:
        return [self.l1, self.l2, self.l3, self.l4, self.ell]


class Cmp(Enum):
    LESS_EQ = "less_eq"
    GREATER_EQ = "greater_eq"
    BOTH = "both"
    INCOMPARABLE = "incomparable"


class Side(Enum):
    EFFECTIVE = "effective"
    BELOW_OMEGA_PLUS_2C = "below_omega_plus_2c"


class Branch(Enum):
    TOP = "top"          # x = g + m*x4
    BOTTOM = "bottom"    # x = omega + g + m*x4


#: The four twist classes: 0 and the three differences x_a - x_b (a<b<=3),
#: each 2-torsion and equal to the overlap class c - x_a - x_b.
TWIST_TAGS = ("e", "g12", "g13", "g23")

_TWIST_PARITIES = {
    (0, 0, 0): "e",
    (1, 1, 0): "g12",
    (1, 0, 1): "g13",
    (0, 1, 1): "g23",
}

_SYMBOLS = ("x1", "x2", "x3", "x4", "c", "w", "x12bar", "x13bar", "x23bar")

_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*(x12bar|x13bar|x23bar|x1|x2|x3|x4|c|w)")


class Lattice:
    """The grading group for one fixed weight p >= 2."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError(f"weight p must be >= 2, got {p}")
        self.p = p
        self.zero = Degree(0, 0, 0, 0, 0)
        self.x1 = Degree(1, 0, 0, 0, 0)
        self.x2 = Degree(0, 1, 0, 0, 0)
        self.x3 = Degree(0, 0, 1, 0, 0)
        self.x4 = Degree(0, 0, 0, 1, 0)
        self.c = Degree(0, 0, 0, 0, 1)
        # omega = c - x1 - x2 - x3 - x4
        self.omega = self.normalize(-1, -1, -1, -1, 1)
        self.twists = {
            "e": self.zero,
            "g12": self.normalize(1, -1, 0, 0, 0),
            "g13": self.normalize(1, 0, -1, 0, 0),
            "g23": self.normalize(0, 1, -1, 0, 0),
        }
        self.gens = (self.x1, self.x2, self.x3, self.x4)

    def __repr__(self) -> str:
        return f"Lattice(p={self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Lattice", self.p))

    # -- group structure --------------------------------------------------

    def normalize(self, a1: int, a2: int, a3: int, a4: int, ac: int) -> Degree:
        """Normal form of a1*x1 + a2*x2 + a3*x3 + a4*x4 + ac*c."""
        ell = ac
        l1, l2, l3 = a1 & 1, a2 & 1, a3 & 1
        ell += (a1 - l1) // 2 + (a2 - l2) // 2 + (a3 - l3) // 2
        l4 = a4 % self.p
        ell += (a4 - l4) // self.p
        return Degree(l1, l2, l3, l4, ell)

    def add(self, x: Degree, y: Degree) -> Degree:
        return self.normalize(x.l1 + y.l1, x.l2 + y.l2, x.l3 + y.l3,
                              x.l4 + y.l4, x.ell + y.ell)

    def sub(self, x: Degree, y: Degree) -> Degree:
        return self.normalize(x.l1 - y.l1, x.l2 - y.l2, x.l3 - y.l3,
                              x.l4 - y.l4, x.ell - y.ell)

    def neg(self, x: Degree) -> Degree:
        return self.normalize(-x.l1, -x.l2, -x.l3, -x.l4, -x.ell)

    def smul(self, x: Degree, n: int) -> Degree:
        return self.normalize(n * x.l1, n * x.l2, n * x.l3, n * x.l4, n * x.ell)

    def x4_mult(self, m: int) -> Degree:
        return self.normalize(0, 0, 0, m, 0)

    def shift_sum(self, parts: Iterable[Degree]) -> Degree:
        out = self.zero
        for part in parts:
            out = self.add(out, part)
        return out

    # -- order structure ---------------------------------------------------

    def effective(self, x: Degree) -> bool:
        return x.ell >= 0

    def leq(self, x: Degree, y: Degree) -> bool:
        return self.sub(y, x).ell >= 0

    def compare(self, x: Degree, y: Degree) -> Cmp:
        le = self.leq(x, y)
        ge = self.leq(y, x)
        if le and ge:
            return Cmp.BOTH
        if le:
            return Cmp.LESS_EQ
        if ge:
            return Cmp.GREATER_EQ
        return Cmp.INCOMPARABLE

    def dichotomy(self, x: Degree) -> Side:
        """Every element is effective or lies below omega + 2c, never both."""
        if self.effective(x):
            return Side.EFFECTIVE
        bound = self.add(self.omega, self.smul(self.c, 2))
        if not self.leq(x, bound):
            raise ArithmeticError(f"dichotomy violated at {x}")
        return Side.BELOW_OMEGA_PLUS_2C

    def sort_key(self, x: Degree) -> tuple[int, int, int, int, int]:
        """Canonical total order refining the partial order."""
        return (x.ell, x.l4, x.l1, x.l2, x.l3)

    # -- graded ring dimensions ---------------------------------------------

    def dim_graded(self, x: Degree) -> int:
        """dim of the degree-x piece of k[X1..X4]/(X1^2+X2^2+X3^2+X4^p).

        The ring is free of rank 2 over k[X2,X3,X4] with basis {1, X1}, so
        the dimension counts exponent tuples (e1 in {0,1}, e2, e3, e4 >= 0)
        of degree x.  Fixing the residues forced by the normal form leaves
        a + b + d = ell with a, b, d >= 0, giving C(ell+2, 2).
        """
        if x.ell < 0:
            return 0
        return (x.ell + 2) * (x.ell + 1) // 2

    # -- intervals -----------------------------------------------------------

    def interval(self, x: Degree, y: Degree) -> list[Degree]:
        """All z with x <= z <= y, in the canonical total order."""
        return [self.add(x, u) for u in self.interval_from_zero(self.sub(y, x))]

    def interval_from_zero(self, d: Degree) -> list[Degree]:
        """All 0 <= u <= d by bounded scan over normal forms."""
        if d.ell < 0:
            return []
        out = []
        for ell in range(0, d.ell + 4):
            for l4 in range(self.p):
                for l1 in (0, 1):
                    for l2 in (0, 1):
                        for l3 in (0, 1):
                            u = Degree(l1, l2, l3, l4, ell)
                            if self.sub(d, u).ell >= 0:
                                out.append(u)
        out.sort(key=self.sort_key)
        return out

    def interval_contains(self, lo: Degree, hi: Degree, z: Degree) -> bool:
        return self.leq(lo, z) and self.leq(z, hi)

    # -- line-bundle coordinates ---------------------------------------------

    def line_coord(self, x: Degree) -> tuple[Branch, str, int]:
        """Unique decomposition x = g + m*x4 or x = omega + g + m*x4.

        The eight cosets of L modulo Z*x4 split four-and-four: even parity
        of (l1,l2,l3) lands on the top branch, odd on the bottom.
        """
        parity = (x.l1, x.l2, x.l3)
        if parity in _TWIST_PARITIES:
            tag = _TWIST_PARITIES[parity]
            g = self.twists[tag]
            m = x.l4 + self.p * (x.ell - g.ell)
            return (Branch.TOP, tag, m)
        base = self.sub(x, self.omega)
        branch, tag, m = self.line_coord(base)
        if branch is not Branch.TOP:
            raise ArithmeticError(f"coset split failed at {x}")
        return (Branch.BOTTOM, tag, m)

    def line_degree(self, branch: Branch, tag: str, m: int) -> Degree:
        base = self.add(self.twists[tag], self.x4_mult(m))
        if branch is Branch.TOP:
            return base
        return self.add(self.omega, base)

    # -- omega orbits ---------------------------------------------------------

    def omega_orbit_key(self, x: Degree) -> tuple[str, int]:
        """Orbit of O(x) under degree shift by omega; 4p+8 orbits in all."""
        _, tag, m = self.line_coord(x)
        return (tag, m % (self.p + 2))

    # -- parsing and formatting ------------------------------------------------

    def parse(self, text: str) -> Degree:
        """Parse a symbolic degree such as 'x13bar-4x4' or 'w+2x4' or '0'."""
        s = text.strip()
        if s in ("0", "", "+0", "-0"):
            return self.zero
        pos = 0
        total = self.zero
        for match in _TERM_RE.finditer(s):
            if match.start() != pos:
                raise ValueError(f"cannot parse degree {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = sign * int(match.group(2) or 1)
            sym = match.group(3)
            total = self.add(total, self.smul(self._symbol(sym), coeff))
        if pos != len(s):
            raise ValueError(f"cannot parse degree {text!r}")
        return total

    def _symbol(self, name: str) -> Degree:
        if name == "c":
            return self.c
        if name == "w":
            return self.omega
        if name == "x12bar":
            return self.twists["g12"]
        if name == "x13bar":
            return self.twists["g13"]
        if name == "x23bar":
            return self.twists["g23"]
        return {"x1": self.x1, "x2": self.x2, "x3": self.x3, "x4": self.x4}[name]

    def format(self, x: Degree) -> str:
        """Symbolic rendering of the normal form."""
        parts = []
        for coeff, sym in ((x.l1, "x1"), (x.l2, "x2"), (x.l3, "x3"),
                           (x.l4, "x4"), (x.ell, "c")):
            if coeff == 0:
                continue
            piece = sym if abs(coeff) == 1 else f"{abs(coeff)}{sym}"
            parts.append(("-" if coeff < 0 else "+") + piece)
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def from_json(self, data) -> Degree:
        a1, a2, a3, a4, ac = (int(v) for v in data)
        return self.normalize(a1, a2, a3, a4, ac)

    # -- generic helpers ---------------------------------------------------------

    def span(self, lo: Degree, hi: Degree) -> Iterator[Degree]:
        yield from self.interval(lo, hi)
