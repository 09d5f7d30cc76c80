"""Frozen worked-example data used by the verification suites and tests.

Degrees are written symbolically (x1..x4, c, w, xab-bar) and parsed per
weight, so one table serves every check that consumes it.
"""

from __future__ import annotations

from .bundles import Dom, Ext2, Line
from .lattice import Lattice, TWIST_TAGS
from .tilting import TiltingForm


# Domain chart around <1,0> at p=4: plus part split by wedge, minus part,
# line offsets on the bottom (w + m*x4 + g) and top (m*x4 + g) rows.
DOMAIN_CHART_P4 = {
    "anchor": (1, 0),
    "plus_up_rank4": [(0, 0), (0, 1)],
    "plus_down_rank4": [(2, -1), (2, 0)],
    "minus_rank4": [(2, -3), (0, -2), (2, 2), (0, 3)],
    "plus_up_bottom_offsets": [0, 1, 2],
    "plus_down_top_offsets": [-3, -2, -1],
    "minus_bottom_offsets": [-2, -1, 3, 4],
    "minus_top_offsets": [-5, -4, 0, 1],
}

# Roof chart for the same anchor: interval end points, symbolically.
ROOFS_P4 = {
    "anchor": (1, 0),
    "left_lo": "-c-x4",
    "left_hi": "x4",
    "right_lo": "w-2x4",
    "right_hi": "w+c",
}

# Two-level example at p=5 with twists g12/e and its finite degree set.
TWO_LEVEL_P5 = {
    "i": 1,
    "j": 2,
    "k": (0, 0),
    "g": "g12",
    "h": "e",
    "H": ["x13bar-4x4", "x23bar-4x4"],
    "upset": ["x13bar-4x4"],
    "S": ["x13bar-4x4", "-x1+2x4"],
    "cardinality": 32,
}

# Single-level example at p=4 whose endomorphism quiver is frozen below.
ONE_LEVEL_P4 = {"i": 1, "j": 1, "k": (0,), "g": "g12", "h": "e",
                "cardinality": 27}

# Endomorphism quiver of the 27-summand p=4 example: 56 arrows, all simple.
# "E" denotes the rank-four summand <1,0>.  Every entry is certified by the
# tests via the radical characterization: a one-dimensional Hom space with
# no two-step factorization inside the collection.
ENDO_QUIVER_P4 = [
    ("x12bar-3x4", "x12bar-2x4"),
    ("x12bar-3x4", "E"),
    ("x12bar-2x4", "x12bar-x4"),
    ("x12bar-x4", "w+c"),
    ("x12bar-x4", "x12bar"),
    ("-x1-x2", "x12bar-3x4"),
    ("x13bar-3x4", "E"),
    ("x13bar-3x4", "x13bar-2x4"),
    ("x13bar-2x4", "x13bar-x4"),
    ("x13bar-x4", "w+c"),
    ("x12bar", "x12bar+x4"),
    ("-x1-x2-x4", "-x2-x4"),
    ("-x1-x2-x4", "-x1-x4"),
    ("-x1-x2-x4", "w"),
    ("-x1-x2-x4", "-x1-x2"),
    ("x23bar-3x4", "E"),
    ("x23bar-3x4", "x23bar-2x4"),
    ("x23bar-2x4", "x23bar-x4"),
    ("x23bar-x4", "w+c"),
    ("E", "x12bar-x4"),
    ("E", "x13bar-x4"),
    ("E", "x23bar-x4"),
    ("E", "w+2x4"),
    ("E", "-x1+x4"),
    ("E", "-x2+x4"),
    ("w-2x4", "x23bar-3x4"),
    ("w-2x4", "x13bar-3x4"),
    ("w-2x4", "x12bar-3x4"),
    ("w-2x4", "w-x4"),
    ("-x2-x4", "E"),
    ("-x2-x4", "-x2"),
    ("-x2", "-x2+x4"),
    ("-x2+x4", "x12bar+x4"),
    ("w-x4", "w"),
    ("-x1-x4", "E"),
    ("-x1-x4", "-x1"),
    ("-x1", "-x1+x4"),
    ("-x1+x4", "x12bar+x4"),
    ("w+3x4", "w+c"),
    ("w", "E"),
    ("w", "w+x4"),
    ("w+x4", "w+2x4"),
    ("w+2x4", "x12bar+x4"),
    ("w+2x4", "w+3x4"),
    ("-x1-x2", "-x1"),
    ("-x1-x2", "-x2"),
    ("-x1-x2", "w+x4"),
    ("-x1", "x12bar"),
    ("-x2", "x12bar"),
    ("w+x4", "x12bar"),
    ("w-x4", "x12bar-2x4"),
    ("w-x4", "x13bar-2x4"),
    ("w-x4", "x23bar-2x4"),
    ("x12bar-2x4", "w+3x4"),
    ("x13bar-2x4", "w+3x4"),
    ("x23bar-2x4", "w+3x4"),
]

# Nonstandard rigid collection at p=5: three rank-four summands, one of them
# outside every omega-orbit of the standard chain, plus 29 lines.
NONSTANDARD_P5 = {
    "rank4": [(3, -2), (1, 0), (3, 0)],
    "extra_line_blocks": ["", "x13bar", "x23bar"],  # [f-4x4, f-x4] for these f
    "left_roof_anchor": (1, 0),
    "left_twist": "g12",
    "cardinality": 32,
    "outside_member": (3, -2),
}


def one_level_form_p4() -> TiltingForm:
    d = ONE_LEVEL_P4
    return TiltingForm(d["i"], d["j"], d["k"], d["g"], d["h"], frozenset())


def two_level_form_p5(lat: Lattice) -> TiltingForm:
    d = TWO_LEVEL_P5
    upset = frozenset(lat.parse(s) for s in d["upset"])
    return TiltingForm(d["i"], d["j"], d["k"], d["g"], d["h"], upset)


def endo_quiver_arrows(lat: Lattice) -> set[tuple]:
    """Figure arrows keyed by bundle objects."""
    def member(token: str):
        if token == "E":
            return Ext2(1, 0)
        return Line(lat.parse(token))

    return {(member(a), member(b)) for a, b in ENDO_QUIVER_P4}


def nonstandard_collection_p5(lat: Lattice):
    """The 32-summand rigid collection living outside the standard chain."""
    from .bundles import left_roofs
    from .tilting import Collection

    data = NONSTANDARD_P5
    members = {Ext2(i, k) for i, k in data["rank4"]}
    for f in data["extra_line_blocks"]:
        base = lat.parse(f) if f else lat.zero
        lo = lat.add(base, lat.x4_mult(-4))
        hi = lat.add(base, lat.x4_mult(-1))
        members |= {Line(x) for x in lat.interval(lo, hi)}
    anchor = Ext2(*data["left_roof_anchor"])
    members |= {Line(x) for x in left_roofs(lat, anchor, data["left_twist"])}
    return Collection(frozenset(members))


def domain_chart_expected(lat: Lattice) -> dict:
    """Expand the p=4 chart to explicit bundle -> verdict pairs."""
    chart = DOMAIN_CHART_P4
    expected: dict = {Ext2(*chart["anchor"]): Dom.DOM_PLUS_BOTH}
    for i, k in chart["plus_up_rank4"]:
        expected[Ext2(i, k)] = Dom.DOM_PLUS_UP
    for i, k in chart["plus_down_rank4"]:
        expected[Ext2(i, k)] = Dom.DOM_PLUS_DOWN
    for i, k in chart["minus_rank4"]:
        expected[Ext2(i, k)] = Dom.DOM_MINUS
    for g in TWIST_TAGS:
        tw = lat.twists[g]
        for m in chart["plus_up_bottom_offsets"]:
            x = lat.add(lat.omega, lat.add(tw, lat.x4_mult(m)))
            expected[Line(x)] = Dom.DOM_PLUS_UP
        for m in chart["minus_bottom_offsets"]:
            x = lat.add(lat.omega, lat.add(tw, lat.x4_mult(m)))
            expected[Line(x)] = Dom.DOM_MINUS
        for m in chart["plus_down_top_offsets"]:
            expected[Line(lat.add(tw, lat.x4_mult(m)))] = Dom.DOM_PLUS_DOWN
        for m in chart["minus_top_offsets"]:
            expected[Line(lat.add(tw, lat.x4_mult(m)))] = Dom.DOM_MINUS
    return expected
