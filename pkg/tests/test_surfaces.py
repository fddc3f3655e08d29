import pytest

from knotforge.bracket import state_stats
from knotforge.codes import InvalidDiagramError, parse_pd
from knotforge.diagram import BLACK, WHITE, is_alternating
from knotforge.surfaces import (
    boundary_components,
    checkerboard_surface,
    howie_check,
    orientable_by_propagation,
)
from knotforge.tables import builtin_table

SMALL = [e.diagram for e in builtin_table() if e.diagram.n <= 12]


def _by_discs(d):
    return {s.disc_count: s for s in (checkerboard_surface(d, c) for c in (WHITE, BLACK))}


def test_trefoil_surfaces(trefoil_std):
    s = _by_discs(trefoil_std)
    assert (s[2].euler_char, s[2].orientable, s[2].genus_or_crosscap) == (-1, True, 1)
    assert (s[3].euler_char, s[3].orientable, s[3].genus_or_crosscap) == (0, False, 1)


def test_unknot_surfaces(unknot):
    for c in (WHITE, BLACK):
        s = checkerboard_surface(unknot, c)
        assert (s.euler_char, s.orientable, s.genus_or_crosscap) == (1, True, 0)


def test_bad_color(trefoil_std):
    with pytest.raises(ValueError):
        checkerboard_surface(trefoil_std, "red")


@pytest.mark.parametrize("d", SMALL, ids=str)
def test_surface_invariants(d):
    for c in (WHITE, BLACK):
        s = checkerboard_surface(d, c)
        assert s.euler_char == s.disc_count - s.band_count
        assert boundary_components(d, c) == 1
        assert orientable_by_propagation(d, c) == s.orientable
        if s.orientable:
            assert s.euler_char % 2 == 1 and s.genus_or_crosscap == (1 - s.euler_char) // 2
        else:
            assert s.genus_or_crosscap == 1 - s.euler_char


@pytest.mark.parametrize("d", [d for d in SMALL if is_alternating(d)], ids=str)
def test_surfaces_match_states_on_alternating(d):
    st = state_stats(d)
    chi = checkerboard_surface(d, WHITE).euler_char + checkerboard_surface(d, BLACK).euler_char
    assert chi == (st.s_plus_loops - d.n) + (st.s_minus_loops - d.n)
    h = howie_check(d)
    assert h.chi_white == checkerboard_surface(d, WHITE).euler_char
    assert h.chi_black == checkerboard_surface(d, BLACK).euler_char
    assert h.total == 2


def test_howie_trefoil(table):
    h = howie_check(table["3_1"])
    assert (h.chi_white, h.chi_black, h.half_intersection, h.total) == (0, -1, 3, 2)


@pytest.mark.parametrize("name", ["8_19", "8_20", "8_21"])
def test_howie_non_alternating(table, name):
    h = howie_check(table[name])
    assert h.total < 2
    assert h.total == h.chi_white + h.chi_black + h.half_intersection


def test_howie_needs_reduced():
    with pytest.raises(InvalidDiagramError):
        howie_check(parse_pd("PD[X(1,2,2,1)]"))
