"""Exact combinatorics of ACM and tilting bundles on weight-(2,2,2,p) planes."""

from .bundles import (Bundle, Coord, Dom, Ext2, Line, dom_classify, dom_lines,
                      ext_coord, coord_bundle, hom_nonzero, left_roofs,
                      rigid_lines, rigid_pair, right_roofs, roofs, shift,
                      suspend, tau, tau_inv, thick_reach)
from .classify import (ClusterSubcat, MembershipError, Verdict, classify,
                       exhaustive_search, is_canonical, is_slice)
from .endo import (QuiverGraph, almost_2ri_check, ar_window, emit_quiver,
                   hom_matrix, two_ri_check)
from .lattice import Branch, Cmp, Degree, Lattice, Side, TWIST_TAGS
from .sheaf import ExtTriple, K0Class, euler_form, hom_dim_rigid, k0_class, line_ext_dims
from .stable import stable_hom_nonzero
from .tilting import (AssemblyError, Collection, TiltingForm, assemble,
                      build_H, enumerate_upsets, line_rigidity_capacity,
                      s_part, segment_profile, validate_form)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
