"""Acceptance criteria, one check per criterion.

Run under pytest (one PASSED/FAILED line each with ``-v``) or directly with
``python tests/test_acceptance.py`` for a PASS/FAIL table with timings.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import STANDARD_TREFOIL, random_mutation  # noqa: E402
from knotforge.bracket import bracket_fast, bracket_naive, jones, kauffman_poly, span_check, state_stats  # noqa: E402
from knotforge.codes import mirror, parse_pd  # noqa: E402
from knotforge.diagram import BLACK, WHITE, is_alternating, is_composite, writhe  # noqa: E402
from knotforge.moves import apply_flype, apply_move, find_flypes, find_move_sites  # noqa: E402
from knotforge.polynomial import LaurentPoly  # noqa: E402
from knotforge.surfaces import checkerboard_surface, howie_check  # noqa: E402
from knotforge.tables import builtin_table  # noqa: E402

TABLE = {e.name: e for e in builtin_table()}
CONTROLS = ["8_19", "8_20", "8_21"]
REDUCED_ALT = [e.diagram for e in TABLE.values() if e.expected_alternating]
CORPUS = [e.diagram for e in TABLE.values() if e.diagram.n <= 12]


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def c01_writhe_anchors():
    right = mirror(parse_pd(STANDARD_TREFOIL))
    fig8 = TABLE["4_1"].diagram
    assert writhe(right) == 3 and writhe(TABLE["3_1"].diagram) == 3
    assert writhe(fig8) == 0
    # per-call time, best of a few runs
    per_call = min(_timed(lambda: (writhe(right), writhe(fig8))) for _ in range(5)) / 2
    assert per_call < 1e-3, per_call


def c02_state_sum_identity():
    def run():
        for d in REDUCED_ALT:
            st = state_stats(d)
            assert st.s_plus_loops + st.s_minus_loops == d.n + 2
        for name in CONTROLS:
            st = state_stats(TABLE[name].diagram)
            assert st.s_plus_loops + st.s_minus_loops < st.n + 2
    assert len(REDUCED_ALT) >= 15
    assert _timed(run) < 1.0


def c03_span_law():
    def run():
        for d in REDUCED_ALT:
            if d.n > 20:
                continue  # beyond the naive evaluator; covered with the fast one below
            hi, lo = max(bracket_naive(d).terms), min(bracket_naive(d).terms)
            st = state_stats(d)
            assert hi - lo == 4 * d.n
            assert hi == d.n + 2 * st.s_plus_loops - 2
            assert lo == -d.n - 2 * st.s_minus_loops + 2
        for name in CONTROLS:
            d = TABLE[name].diagram
            p = bracket_naive(d)
            assert max(p.terms) - min(p.terms) < 4 * d.n
    assert _timed(run) < 5.0
    big = TABLE["twist_chain_24"].diagram
    assert span_check(big).span == 96 and span_check(big).extreme_degree_match


def c04_jones_golden():
    right = mirror(parse_pd(STANDARD_TREFOIL))
    assert jones(right, "naive") == LaurentPoly({4: -1, 3: 1, 1: 1})
    assert jones(TABLE["4_1"].diagram, "naive") == LaurentPoly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1})
    assert jones(TABLE["3_1"].diagram, "naive") == jones(right, "naive")


def c05_calibration_invariance():
    def run():
        neg_a3 = LaurentPoly({3: -1})
        for d in CORPUS:
            b, f = bracket_fast(d), kauffman_poly(d)
            for site in find_move_sites(d):
                if site.kind in ("R2", "R3"):
                    assert bracket_fast(apply_move(d, site)) == b
                elif site.kind == "R1+":
                    out = apply_move(d, site)
                    assert bracket_fast(out) == b * neg_a3
                    assert kauffman_poly(out) == f
                elif site.kind == "R1-":
                    assert kauffman_poly(apply_move(d, site)) == f
    assert _timed(run) < 10.0


def c06_alternate_presentations():
    for name in ("3_1", "4_1"):
        a, b = TABLE[name].diagram, TABLE[name + ":braid"].diagram
        assert writhe(a) == writhe(b)
        assert jones(a) == jones(b)


def c07_flype_invariants():
    count = 0

    def run():
        nonlocal count
        for d in REDUCED_ALT:
            j, w = jones(d), writhe(d)
            for site in find_flypes(d):
                out = apply_flype(d, site)
                assert out.n == d.n and writhe(out) == w
                assert is_alternating(out)
                assert jones(out) == j
                count += 1
    assert _timed(run) < 30.0
    assert count > 0


def c08_howie_identity():
    for d in REDUCED_ALT:
        assert howie_check(d).total == 2
    for name in CONTROLS:
        assert howie_check(TABLE[name].diagram).total < 2


def c09_surface_anchors():
    t = TABLE["3_1"].diagram
    by_discs = {s.disc_count: s for s in (checkerboard_surface(t, c) for c in (WHITE, BLACK))}
    s2, s3 = by_discs[2], by_discs[3]
    assert (s2.euler_char, s2.orientable, s2.genus_or_crosscap) == (-1, True, 1)
    assert (s3.euler_char, s3.orientable, s3.genus_or_crosscap) == (0, False, 1)


def c10_fast_equals_naive_and_speed():
    for d in CORPUS:
        assert bracket_fast(d) == bracket_naive(d)
    rng = random.Random(20240611)
    small = [d for d in CORPUS if d.n <= 8]
    for _ in range(200):
        m = random_mutation(rng.choice(small), rng, rng.randint(1, 4), max_n=12)
        assert bracket_fast(m) == bracket_naive(m)
    big = TABLE["twist_chain_24"].diagram
    assert _timed(lambda: bracket_fast(big)) < 1.0


def c11_composite_detection():
    comp, cut = is_composite(TABLE["3_1#3_1"].diagram)
    assert comp and cut is not None and len(cut) == 2
    for name, e in TABLE.items():
        if name != "3_1#3_1":
            assert is_composite(e.diagram) == (False, None), name


CRITERIA = [
    c01_writhe_anchors,
    c02_state_sum_identity,
    c03_span_law,
    c04_jones_golden,
    c05_calibration_invariance,
    c06_alternate_presentations,
    c07_flype_invariants,
    c08_howie_identity,
    c09_surface_anchors,
    c10_fast_equals_naive_and_speed,
    c11_composite_detection,
]


@pytest.mark.parametrize("check", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(check):
    check()


def main() -> int:
    failed = 0
    for check in CRITERIA:
        t0 = time.perf_counter()
        try:
            check()
            status = "PASS"
        except AssertionError as exc:
            status = f"FAIL {exc}"
            failed += 1
        print(f"{check.__name__:36s} {status}  ({time.perf_counter() - t0:.3f} s)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
