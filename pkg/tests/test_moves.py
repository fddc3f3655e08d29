import random

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.bracket import bracket_fast, jones, kauffman_poly
from knotforge.codes import InvalidDiagramError, canonical_form, parse_pd, validate
from knotforge.diagram import is_alternating, writhe
from knotforge.moves import (
    FlypeOrbitLimitExceeded,
    FlypeSite,
    InapplicableMove,
    MoveSite,
    apply_flype,
    apply_move,
    apply_move_tracked,
    find_flypes,
    find_move_sites,
    flype_orbit,
)
from knotforge.polynomial import LaurentPoly
from knotforge.tables import builtin_table

from conftest import random_mutation

SMALL = [e.diagram for e in builtin_table() if e.diagram.n <= 8]
REDUCED_ALT = [e.diagram for e in builtin_table() if e.expected_alternating and e.diagram.n <= 12]
KINK = {"R1+": LaurentPoly({3: -1}), "R1-": LaurentPoly({-3: -1})}


def _check_site(d, site):
    out, undo = apply_move_tracked(d, site)
    assert validate(out).ok
    dn, dw = {"R1+": (1, 1), "R1-": (1, -1), "R2": (2, 0), "R3": (0, 0)}.get(site.kind, (None, None))
    if dn is not None:
        assert out.n - d.n == dn and writhe(out) - writhe(d) == dw
    if site.kind in ("R2", "R3", "R2-undo"):
        assert bracket_fast(out) == bracket_fast(d)
    if site.kind in KINK:
        assert bracket_fast(out) == bracket_fast(d) * KINK[site.kind]
    assert kauffman_poly(out) == kauffman_poly(d)
    if undo is not None:
        assert canonical_form(apply_move(out, undo)) == canonical_form(d)


def test_unknot_kink(unknot):
    d = apply_move(unknot, MoveSite("R1+", (0, "R")))
    assert d.n == 1 and writhe(d) == 1


@pytest.mark.parametrize("d", SMALL, ids=str)
def test_every_site_on_small_diagrams(d):
    for site in find_move_sites(d):
        _check_site(d, site)


def test_r3_on_trefoil_with_r2_pair(trefoil_std):
    d = apply_move(trefoil_std, MoveSite("R2", (1, "L", 3, "L", False)))
    r3 = [s for s in find_move_sites(d) if s.kind == "R3"]
    assert r3
    for s in r3:
        out = apply_move(d, s)
        assert (out.n, writhe(out)) == (d.n, writhe(d))
        assert bracket_fast(out) == bracket_fast(d)
        # the triangle is still there, and moving the strand back restores the diagram
        back = [apply_move(out, t) for t in find_move_sites(out) if t.kind == "R3"]
        assert canonical_form(d) in {canonical_form(b) for b in back}


def test_inapplicable_sites(trefoil_std):
    with pytest.raises(InapplicableMove):
        apply_move(trefoil_std, MoveSite("R1-undo", (0,)))
    with pytest.raises(InapplicableMove):
        apply_move(trefoil_std, MoveSite("R2", (1, "L", 1, "R", True)))
    with pytest.raises(InapplicableMove):
        apply_move(trefoil_std, MoveSite("R5", ()))
    with pytest.raises(InapplicableMove):
        apply_move(trefoil_std, MoveSite("R2-undo", (1, "L")))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32), st.integers(0, 4))
def test_random_sites_after_mutation(d, seed, steps):
    rng = random.Random(seed)
    m = random_mutation(d, rng, steps, max_n=10)
    _check_site(m, rng.choice(find_move_sites(m)))


# ---------------------------------------------------------------- flypes

def test_trefoil_flypes_are_trivial(trefoil_std):
    sites = find_flypes(trefoil_std)
    assert sites
    assert all(len(s.tangle) == 1 for s in sites)
    for s in sites:
        assert canonical_form(apply_flype(trefoil_std, s)) == canonical_form(trefoil_std)
    assert len(flype_orbit(trefoil_std)) == 1


def test_unknot_flypes(unknot):
    assert find_flypes(unknot) == []
    assert flype_orbit(unknot) == {unknot}


def test_find_flypes_needs_reduced():
    with pytest.raises(InvalidDiagramError):
        find_flypes(parse_pd("PD[X(1,2,2,1)]"))


def test_seven_seven_has_proper_flype(table):
    d = table["7_7"]
    proper = [s for s in find_flypes(d) if canonical_form(apply_flype(d, s)) != canonical_form(d)]
    assert proper and all(len(s.tangle) >= 2 for s in proper)


def test_flyped_presentations_share_an_orbit(table):
    a, b = flype_orbit(table["7_7"]), flype_orbit(table["7_7:flyped"])
    assert a == b
    assert canonical_form(table["7_7:flyped"]) in a


def test_orbit_limit(table):
    with pytest.raises(FlypeOrbitLimitExceeded) as exc:
        flype_orbit(table["7_7"], limit=1)
    assert len(exc.value.partial) >= 2


def test_flype_rejects_foreign_site(table):
    d = table["7_7"]
    with pytest.raises(InapplicableMove):
        apply_flype(d, FlypeSite(0, frozenset({0}), (1, 2, 3, 4)))


@pytest.mark.parametrize("d", REDUCED_ALT, ids=str)
def test_pruned_search_matches_exhaustive(d):
    assert find_flypes(d) == find_flypes(d, exhaustive=True)


@pytest.mark.parametrize("d", REDUCED_ALT, ids=str)
def test_flypes_preserve_invariants(d):
    j, w = jones(d), writhe(d)
    for s in find_flypes(d):
        assert len(s.boundary) == 4 and s.crossing not in s.tangle
        out = apply_flype(d, s)
        assert (out.n, writhe(out), is_alternating(out)) == (d.n, w, True)
        assert jones(out) == j


@pytest.mark.parametrize("d", [x for x in REDUCED_ALT if x.n <= 7], ids=str)
def test_orbit_members_agree(d):
    orbit = flype_orbit(d)
    assert canonical_form(d) in orbit
    assert len({jones(x) for x in orbit}) == 1
    assert len({writhe(x) for x in orbit}) == 1
