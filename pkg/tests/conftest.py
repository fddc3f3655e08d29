import random

import pytest

from knotforge.codes import Diagram, mirror, parse_pd
from knotforge.moves import apply_move, find_move_sites
from knotforge.tables import builtin_table

STANDARD_TREFOIL = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"


def table_by_name():
    return {e.name: e.diagram for e in builtin_table()}


def random_mutation(d: Diagram, rng: random.Random, steps: int, max_n: int = 12) -> Diagram:
    """Walk through random Reidemeister sites, staying at or below ``max_n`` crossings."""
    for _ in range(steps):
        sites = find_move_sites(d)
        allowed = []
        for s in sites:
            grow = {"R1+": 1, "R1-": 1, "R2": 2}.get(s.kind, 0)
            if d.n + grow <= max_n:
                allowed.append(s)
        d = apply_move(d, rng.choice(allowed))
    return d


@pytest.fixture(scope="session")
def table():
    return table_by_name()


@pytest.fixture(scope="session")
def trefoil_std():
    return parse_pd(STANDARD_TREFOIL)


@pytest.fixture(scope="session")
def trefoil_right(trefoil_std):
    return mirror(trefoil_std)


@pytest.fixture(scope="session")
def unknot():
    return parse_pd("PD[]")
