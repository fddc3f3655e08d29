"""Kauffman bracket state sums, the writhe-normalized Kauffman polynomial and Jones.

Smoothing rule: at ``X(a,b,c,d)`` the +1 (A) smoothing joins edge ends (a,b),(c,d) and
the -1 (B) smoothing joins (a,d),(b,c). With the sign rule of ``diagram`` this makes a
positive kink contribute a factor ``-A^3`` and gives V(right trefoil) = -t^4 + t^3 + t.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from knotforge.codes import Diagram, InvalidDiagramError, require_valid
from knotforge.config import Settings
from knotforge.diagram import is_alternating, nugatory_crossings, writhe
from knotforge.polynomial import LaurentPoly, degrees, loop_value, substitute_quarter

__all__ = [
    "SMOOTHING",
    "StateStats",
    "NaiveLimitExceeded",
    "state_loops",
    "bracket_naive",
    "bracket_fast",
    "bracket",
    "kauffman_poly",
    "jones",
    "state_stats",
    "span_check",
    "contraction_order",
]

# slot pairs joined by each smoothing
SMOOTHING = {1: ((0, 1), (2, 3)), -1: ((0, 3), (1, 2))}


class NaiveLimitExceeded(ValueError):
    pass


class DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.count = len(self.parent)

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.count -= 1


def state_loops(d: Diagram, s) -> int:
    """Number of circles after smoothing crossing ``i`` according to ``s[i]``."""
    require_valid(d)
    if len(s) != d.n:
        raise ValueError(f"state has {len(s)} entries for {d.n} crossings")
    return _loops(d.crossings, s, 2 * d.n)


def _loops(crossings, s, m) -> int:
    if m == 0:
        return 1
    ds = DisjointSet(range(1, m + 1))
    for t, v in zip(crossings, s):
        (p, q), (r, u) = SMOOTHING[v]
        ds.union(t[p], t[q])
        ds.union(t[r], t[u])
    return ds.count


def _assemble(counts: Counter) -> LaurentPoly:
    """Sum A^k d^(loops-1) over a Counter of (k, loops)."""
    dpow = {}
    total = LaurentPoly()
    for (k, loops), mult in counts.items():
        if loops not in dpow:
            dpow[loops] = loop_value() ** (loops - 1)
        total = total + dpow[loops].shift(k) * mult
    return total


def bracket_naive(d: Diagram, limit: int | None = None) -> LaurentPoly:
    """Direct sum over all 2^n states."""
    require_valid(d)
    limit = Settings.from_env().naive_limit if limit is None else limit
    if d.n > limit:
        raise NaiveLimitExceeded(f"{d.n} crossings exceeds the naive limit {limit}")
    m = 2 * d.n
    counts: Counter = Counter()
    for s in itertools.product((1, -1), repeat=d.n):
        counts[(sum(s), _loops(d.crossings, s, m))] += 1
    return _assemble(counts)


# ---------------------------------------------------------------- contraction

def contraction_order(d: Diagram) -> list[int]:
    """Greedy order keeping the set of half-processed edges small; ties by index."""
    edges_of = [set(t) for t in d.crossings]
    done: set[int] = set()
    open_edges: Counter = Counter()
    order = []
    remaining = set(range(d.n))
    while remaining:
        best, best_key = None, None
        for i in sorted(remaining):
            new = open_edges.copy()
            for e in d.crossings[i]:
                new[e] += 1
            size = sum(1 for v in new.values() if v == 1)
            key = (size, -sum(1 for e in edges_of[i] if open_edges[e]), i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        order.append(best)
        remaining.discard(best)
        done.add(best)
        for e in d.crossings[best]:
            open_edges[e] += 1
            if open_edges[e] == 2:
                del open_edges[e]
    return order


def _absorb(pairing: dict, t, arcs):
    """Glue one smoothed crossing onto a boundary pairing.

    ``pairing`` maps each open edge label to the open label at the other end of its
    arc; ``arcs`` are two slot pairs of ``t``. Returns (new pairing, loops closed).
    """
    # tokens: ("o", e) for an open end, ("n", k) for slot k of t; every token has
    # degree <= 2, so components are paths or cycles
    link: dict = {}

    def join(a, b):
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)

    for e, f in pairing.items():
        if e < f:
            join(("o", e), ("o", f))
    for p, q in arcs:
        join(("n", p), ("n", q))
    first_slot: dict[int, int] = {}
    for k, e in enumerate(t):
        if e in pairing:
            join(("o", e), ("n", k))
        elif e in first_slot:
            join(("n", first_slot[e]), ("n", k))
        else:
            first_slot[e] = k
    label = lambda tok: tok[1] if tok[0] == "o" else t[tok[1]]
    seen = set()
    new_pairing = {}
    for tok, nb in link.items():
        if len(nb) != 1 or tok in seen:
            continue
        prev, cur = tok, nb[0]
        seen.update((tok, cur))
        while len(link[cur]) == 2:
            x, y = link[cur]
            prev, cur = cur, (y if x == prev else x)
            seen.add(cur)
        new_pairing[label(tok)] = label(cur)
        new_pairing[label(cur)] = label(tok)
    loops = 0
    for tok in link:
        if tok in seen:
            continue
        loops += 1
        stack = [tok]
        seen.add(tok)
        while stack:
            for x in link[stack.pop()]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
    return new_pairing, loops


def bracket_fast(d: Diagram) -> LaurentPoly:
    """Bracket by sweeping crossings and tracking weights per boundary pairing.

    Cost is exponential only in the number of open edges along the sweep.
    """
    require_valid(d)
    if d.n == 0:
        return LaurentPoly.const(1)
    order = contraction_order(d)
    delta = loop_value()
    dpow = [LaurentPoly.const(1)]
    # key: sorted tuple of (e, f) pairs with e < f, one per arc crossing the sweep line
    states: dict = {(): LaurentPoly.const(1)}
    for step, i in enumerate(order):
        t = d.crossings[i]
        last = step == len(order) - 1
        nxt: dict = {}
        for key, weight in states.items():
            pairing = {}
            for e, f in key:
                pairing[e] = f
                pairing[f] = e
            for v in (1, -1):
                newp, closed = _absorb(pairing, t, SMOOTHING[v])
                if last:
                    closed -= 1  # the normalization <O> = 1
                while len(dpow) <= closed:
                    dpow.append(dpow[-1] * delta)
                nkey = tuple(sorted((e, f) for e, f in newp.items() if e < f))
                term = (weight * dpow[closed]).shift(v)
                nxt[nkey] = nxt[nkey] + term if nkey in nxt else term
        states = {k: w for k, w in nxt.items() if not w.is_zero()}
    if not states:
        return LaurentPoly()
    (key, weight), = states.items()
    assert key == (), "sweep ended with open arcs"
    return weight


def bracket(d: Diagram, method: str = "fast") -> LaurentPoly:
    if method == "naive":
        return bracket_naive(d)
    if method == "fast":
        return bracket_fast(d)
    raise ValueError(f"unknown bracket method {method!r}")


def kauffman_poly(d: Diagram, method: str = "fast") -> LaurentPoly:
    """F(A) = (-A)^(-3w) <D>."""
    w = writhe(d)
    sign = -1 if (3 * w) % 2 else 1
    return bracket(d, method).shift(-3 * w) * sign


def jones(d: Diagram, method: str = "fast") -> LaurentPoly:
    return substitute_quarter(kauffman_poly(d, method), var="t")


@dataclass(frozen=True)
class StateStats:
    s_plus_loops: int
    s_minus_loops: int
    n: int

    def __iter__(self):
        return iter((self.s_plus_loops, self.s_minus_loops, self.n))


def state_stats(d: Diagram) -> StateStats:
    return StateStats(state_loops(d, [1] * d.n), state_loops(d, [-1] * d.n), d.n)


@dataclass(frozen=True)
class SpanReport:
    span: int
    expected: int
    max_degree: int
    min_degree: int
    alternating: bool
    extreme_degree_match: bool | None

    @property
    def span_law_ok(self) -> bool:
        return self.span == self.expected if self.alternating else self.span < self.expected


def span_check(d: Diagram, method: str = "fast") -> SpanReport:
    require_valid(d)
    if nugatory_crossings(d):
        raise InvalidDiagramError("span law applies to reduced diagrams only")
    hi, lo, span = degrees(bracket(d, method))
    alt = is_alternating(d)
    match = None
    if alt:
        st = state_stats(d)
        match = hi == d.n + 2 * st.s_plus_loops - 2 and lo == -d.n - 2 * st.s_minus_loops + 2
    return SpanReport(span, 4 * d.n, hi, lo, alt, match)
