"""Diagram builders: braid closures and 4-plats (2-bridge presentations).

Braid letters are nonzero ints, ``+i`` for the generator crossing strands ``i`` and
``i+1`` (1-based) with the lower-left to upper-right strand on top, ``-i`` its inverse.
"""

from __future__ import annotations

from knotforge._planar import PortGraph
from knotforge.codes import Diagram, over_in_slot, relabel
from knotforge.diagram import is_alternating

__all__ = ["braid_closure", "four_plat", "rational_word", "orient", "connected_sum_braid", "connected_sum"]


def _build(word, strands, closure):
    g = PortGraph()
    wires = []  # token pairs; tokens are ports or ("bot"/"top", j)
    pending = [("bot", j) for j in range(strands)]
    for idx, letter in enumerate(word):
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {letter} outside a {strands}-strand braid")
        x = idx
        # ports ccw: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left
        g.order.append(x)
        g.under[x] = 1 if letter > 0 else 0
        g.inport[x] = {0: 0, 1: 1}
        wires.append((pending[i], (x, 0)))
        wires.append((pending[i + 1], (x, 1)))
        pending[i] = (x, 3)
        pending[i + 1] = (x, 2)
    for j in range(strands):
        wires.append((pending[j], ("top", j)))
    adj: dict = {}
    for a, b in wires + closure(strands):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = set()
    for tok in list(adj):
        if isinstance(tok[0], str) or tok in seen:
            continue
        # follow through markers to the next port
        prev, cur = tok, adj[tok][0]
        while isinstance(cur[0], str):
            nb = adj[cur]
            prev, cur = cur, (nb[0] if nb[0] != prev else nb[1])
        g.connect(tok, cur)
        seen.update((tok, cur))
    return g


def _braid_close(strands):
    return [(("top", j), ("bot", j)) for j in range(strands)]


def _plat_close(strands):
    out = []
    for j in range(0, strands, 2):
        out.append((("top", j), ("top", j + 1)))
        out.append((("bot", j), ("bot", j + 1)))
    return out


def orient(g: PortGraph, start=None) -> PortGraph:
    """Assign strand directions by walking the knot from in-port ``start`` (default:
    the first crossing's under-strand)."""
    if not g.order:
        return g
    if start is None:
        x0 = g.order[0]
        start = (x0, g.under[x0])
    p = start
    visited = set()
    while True:
        x, k = p
        if (x, k % 2) in visited:
            raise ValueError("walk revisited a strand before closing")
        visited.add((x, k % 2))
        g.inport[x][k % 2] = k
        p = g.conn[(x, (k + 2) % 4)]
        if p == start:
            break
    if len(visited) != 2 * g.n:
        raise ValueError("closure is a link, not a knot")
    g.start = start
    return g


def braid_closure(word, strands: int | None = None) -> Diagram:
    strands = strands or max(abs(w) for w in word) + 1
    if any(all(abs(w) not in (j - 1, j) for w in word) for j in range(1, strands + 1)):
        raise ValueError("a strand meets no crossing")
    g = _build(list(word), strands, _braid_close)
    return orient(g).to_diagram()


def rational_word(coeffs) -> list[int]:
    """4-plat word for the continued fraction ``[a1, ..., ak]``: alternating twist
    regions on the middle and left strand pairs, signs chosen to keep it alternating.

    An even-length expansion is first rewritten as ``[..., ak - 1, 1]`` (same fraction)
    so the plat closes to a knot rather than a two-component link."""
    coeffs = list(coeffs)
    if len(coeffs) % 2 == 0:
        coeffs = coeffs[:-1] + ([coeffs[-1] - 1, 1] if coeffs[-1] > 1 else [])
        if len(coeffs) % 2 == 0:
            coeffs[-1] += 1
    word = []
    for j, a in enumerate(coeffs):
        word += [2 if j % 2 == 0 else -1] * a
    return word


def four_plat(word) -> Diagram:
    g = _build(list(word), 4, _plat_close)
    return orient(g).to_diagram()


def connected_sum_braid(w1, w2, strands1: int) -> list[int]:
    """Braid word whose closure is the connected sum of the closures of ``w1`` (on
    ``strands1`` strands) and ``w2`` shifted to start at the last strand of ``w1``."""
    shift = strands1 - 1
    return list(w1) + [(abs(w) + shift) * (1 if w > 0 else -1) for w in w2]


def _head_slot(d: Diagram, e: int):
    """(crossing, slot) where edge ``e`` arrives."""
    for i, t in enumerate(d.crossings):
        if t[0] == e:
            return i, 0
        o = over_in_slot(d, i)
        if o is not None and t[o] == e:
            return i, o
    raise ValueError(f"edge {e} has no head")


def connected_sum(d1: Diagram, d2: Diagram, alternating: bool = True) -> Diagram:
    """Splice the last edge of ``d1`` into the last edge of ``d2``.

    With ``alternating`` set, ``d2`` is re-rooted (same knot, same handedness) so the
    over/under pattern keeps alternating across both splice points when that is possible.
    """
    if d1.n == 0:
        return d2
    if d2.n == 0:
        return d1
    m1, m2 = 2 * d1.n, 2 * d2.n
    candidates = [relabel(d2, s) for s in range(1, m2 + 1)] if alternating else [d2]
    result = None
    for cand in candidates:
        shifted = Diagram(tuple(tuple(e + m1 for e in t) for t in cand.crossings))
        total = m1 + m2
        q, qs = _head_slot(d1, m1)
        q2, q2s = _head_slot(cand, m2)
        c1 = [list(t) for t in d1.crossings]
        c2 = [list(t) for t in shifted.crossings]
        c1[q][qs] = total
        c2[q2][q2s] = m1
        out = Diagram(tuple(tuple(t) for t in c1 + c2))
        if result is None:
            result = out
        if is_alternating(out):
            return out
    return result
