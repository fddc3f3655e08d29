"""Combinatorics of the 4-valent planar graph under a knot diagram."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from knotforge._planar import PortGraph
from knotforge.codes import (
    Diagram,
    InvalidDiagramError,
    over_in_slot,
    require_valid,
    to_gauss,
)

__all__ = [
    "FaceSet",
    "Coloring",
    "faces",
    "checkerboard",
    "sector_colors",
    "crossing_sign",
    "writhe",
    "is_alternating",
    "scheme_consistent",
    "nugatory_crossings",
    "nugatory_by_faces",
    "reduce",
    "is_reduced",
    "is_composite",
]

Side = Literal["L", "R"]
BLACK, WHITE = "black", "white"


@dataclass(frozen=True)
class FaceSet:
    """Faces as cyclic sequences of (edge label, side) incidences.

    ``side`` is relative to the edge orientation: ``"R"`` means the face lies to the
    right of the edge when walking along the knot.
    """

    faces: tuple[tuple[tuple[int, str], ...], ...]

    def __len__(self):
        return len(self.faces)

    def lengths(self) -> list[int]:
        return sorted(len(f) for f in self.faces)

    def face_of(self, edge: int, side: str) -> int:
        for i, f in enumerate(self.faces):
            if (edge, side) in f:
                return i
        raise KeyError((edge, side))


@dataclass(frozen=True)
class Coloring:
    colors: tuple[str, ...]  # indexed like FaceSet.faces

    def count(self, color: str) -> int:
        return sum(c == color for c in self.colors)


def _labels(d: Diagram):
    """port -> edge label, port -> is tail (outgoing)."""
    label, tail = {}, {}
    for i, t in enumerate(d.crossings):
        o_in = over_in_slot(d, i)
        for k, lab in enumerate(t):
            label[(i, k)] = lab
            tail[(i, k)] = k == 2 or (k % 2 == 1 and k != o_in)
    return label, tail


def _walk(d: Diagram):
    require_valid(d)
    g = PortGraph.from_diagram(d)
    fl, sector = g.face_walk()
    return g, fl, sector


def faces(d: Diagram) -> FaceSet:
    if d.n == 0:
        require_valid(d)
        return FaceSet(((), ()))
    _, fl, _ = _walk(d)
    label, tail = _labels(d)
    return FaceSet(tuple(tuple((label[h], "R" if tail[h] else "L") for h in f) for f in fl))


def checkerboard(d: Diagram) -> Coloring:
    """Proper 2-coloring; the face on the left of edge 1 is white."""
    fs = faces(d)
    if d.n == 0:
        return Coloring((WHITE, BLACK))
    nbrs: dict[int, set[int]] = {i: set() for i in range(len(fs))}
    side_face = {}
    for i, f in enumerate(fs.faces):
        for inc in f:
            side_face[inc] = i
    for e in range(1, 2 * d.n + 1):
        a, b = side_face[(e, "L")], side_face[(e, "R")]
        nbrs[a].add(b)
        nbrs[b].add(a)
    root = side_face[(1, "L")]
    color = {root: WHITE}
    stack = [root]
    while stack:
        f = stack.pop()
        for h in nbrs[f]:
            want = BLACK if color[f] == WHITE else WHITE
            if h not in color:
                color[h] = want
                stack.append(h)
            elif color[h] != want:  # cannot happen for a planar 4-valent graph
                raise InvalidDiagramError("faces are not 2-colorable")
    return Coloring(tuple(color[i] for i in range(len(fs))))


def sector_colors(d: Diagram) -> list[tuple[str, str, str, str]]:
    """Per crossing, the colors of the corners (a,b), (b,c), (c,d), (d,a)."""
    if d.n == 0:
        return []
    _, _, sector = _walk(d)
    col = checkerboard(d).colors
    return [tuple(col[sector[(i, k)]] for k in range(4)) for i in range(d.n)]


def crossing_sign(d: Diagram, i: int) -> int:
    """+1 when the over-strand runs d -> b, -1 when it runs b -> d."""
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range for {d.n} crossings")
    require_valid(d)
    return 1 if over_in_slot(d, i) == 3 else -1


def writhe(d: Diagram) -> int:
    require_valid(d)
    return sum(1 if over_in_slot(d, i) == 3 else -1 for i in range(d.n))


def is_alternating(d: Diagram) -> bool:
    flags = [s.over for s in to_gauss(d)]
    return all(flags[i] != flags[i - 1] for i in range(len(flags))) if flags else True


def scheme_consistent(d: Diagram) -> bool:
    """True iff some checkerboard coloring makes every crossing look the same: stepping
    from black to white over the under-strand keeps the over-strand on the left.

    With slot a at the bottom, that puts black in corners (d,a) and (b,c) everywhere.
    """
    cols = sector_colors(d)
    return len({c[3] for c in cols}) <= 1


def _chords(d: Diagram) -> dict[int, tuple[int, int]]:
    pos: dict[int, list[int]] = {}
    for k, s in enumerate(to_gauss(d)):
        pos.setdefault(s.crossing - 1, []).append(k)
    return {i: tuple(p) for i, p in pos.items()}


def nugatory_crossings(d: Diagram) -> set[int]:
    """Crossings whose Gauss chord interleaves no other chord."""
    ch = _chords(d)
    out = set()
    for i, (p1, p2) in ch.items():
        if not any((p1 < q1 < p2) != (p1 < q2 < p2) for j, (q1, q2) in ch.items() if j != i):
            out.add(i)
    return out


def nugatory_by_faces(d: Diagram) -> set[int]:
    """Crossings where one face fills two kitty-corner corners."""
    if d.n == 0:
        return set()
    _, _, sector = _walk(d)
    return {
        i
        for i in range(d.n)
        if sector[(i, 0)] == sector[(i, 2)] or sector[(i, 1)] == sector[(i, 3)]
    }


def is_reduced(d: Diagram) -> bool:
    return not nugatory_crossings(d)


def _remove_nugatory(g: PortGraph, x) -> None:
    """Untwist nugatory crossing ``x``: flip one side by a pi-rotation and splice."""
    sides = g.components_without({x})
    if len(sides) == 2:
        g.reflect(min(sides, key=len))
    g.remove_straight(x)


def reduce(d: Diagram) -> Diagram:
    """Delete nugatory crossings one at a time until none remain."""
    require_valid(d)
    cur = d
    for _ in range(d.n + 1):
        nug = nugatory_crossings(cur)
        if not nug:
            return cur
        g = PortGraph.from_diagram(cur)
        _remove_nugatory(g, min(nug))
        cur = g.to_diagram()
        require_valid(cur)
    raise AssertionError("reduction did not terminate")


def is_composite(d: Diagram) -> tuple[bool, tuple[int, int] | None]:
    """Search for two edges whose removal splits the crossings into two nonempty sets."""
    require_valid(d)
    if nugatory_crossings(d):
        raise InvalidDiagramError("is_composite needs a reduced diagram")
    if d.n < 2:
        return False, None
    g = PortGraph.from_diagram(d)
    edge_ports: dict[int, frozenset] = {}
    for i, t in enumerate(d.crossings):
        for k, lab in enumerate(t):
            edge_ports.setdefault(lab, set()).add((i, k))
    edge_ports = {e: frozenset(p) for e, p in edge_ports.items()}
    for e1, e2 in itertools.combinations(sorted(edge_ports), 2):
        comps = g.components_without(set(), {edge_ports[e1], edge_ports[e2]})
        if len(comps) > 1:
            return True, (e1, e2)
    return False, None
