"""Knot diagrams, the Kauffman bracket and the Tait conjectures, checked by computation."""

from knotforge.bracket import bracket_fast, bracket_naive, jones, kauffman_poly, span_check, state_stats
from knotforge.codes import (
    Diagram,
    InvalidDiagramError,
    PDSyntaxError,
    canonical_form,
    emit_pd,
    mirror,
    parse_pd,
    to_gauss,
    validate,
)
from knotforge.config import Settings
from knotforge.diagram import checkerboard, faces, is_alternating, is_composite, is_reduced, reduce, writhe
from knotforge.moves import apply_flype, apply_move, find_flypes, find_move_sites, flype_orbit
from knotforge.polynomial import LaurentPoly
from knotforge.surfaces import checkerboard_surface, howie_check
from knotforge.tables import builtin_table, load_table, lookup, verify_tait

__version__ = "0.1.0"
