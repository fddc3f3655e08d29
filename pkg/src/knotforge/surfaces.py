"""Checkerboard spanning surfaces, summarized by their disc and band counts.

The surface of one color has a disc per face of that color and a half-twisted band per
crossing joining the two kitty-corner faces of that color.
"""

from __future__ import annotations

from dataclasses import dataclass

from knotforge.bracket import state_stats
from knotforge.codes import Diagram, InvalidDiagramError, require_valid
from knotforge.diagram import BLACK, WHITE, _walk, checkerboard, nugatory_crossings, sector_colors

__all__ = [
    "SurfaceSummary",
    "HowieReport",
    "band_graph",
    "checkerboard_surface",
    "orientable_by_propagation",
    "boundary_components",
    "howie_check",
]


@dataclass(frozen=True)
class SurfaceSummary:
    color: str
    disc_count: int
    band_count: int
    euler_char: int
    orientable: bool
    genus_or_crosscap: int

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "disc_count": self.disc_count,
            "band_count": self.band_count,
            "euler_char": self.euler_char,
            "orientable": self.orientable,
            "genus_or_crosscap": self.genus_or_crosscap,
        }


@dataclass(frozen=True)
class HowieReport:
    chi_white: int
    chi_black: int
    half_intersection: int
    total: int

    @property
    def ok(self) -> bool:
        return self.total == 2

    def to_json(self) -> dict:
        return {
            "chi_white": self.chi_white,
            "chi_black": self.chi_black,
            "half_intersection": self.half_intersection,
            "total": self.total,
        }


def _check_color(color: str) -> None:
    if color not in (BLACK, WHITE):
        raise ValueError(f"color must be {BLACK!r} or {WHITE!r}, not {color!r}")


def band_graph(d: Diagram, color: str) -> tuple[list[int], list[tuple[int, int]]]:
    """Vertices are the faces of ``color``; one edge per crossing (possibly a loop)."""
    _check_color(color)
    require_valid(d)
    cols = checkerboard(d).colors
    verts = [i for i, c in enumerate(cols) if c == color]
    if d.n == 0:
        return verts, []
    _, _, sector = _walk(d)
    edges = []
    for i in range(d.n):
        # corners k and k+2 have the same color
        k = 0 if cols[sector[(i, 0)]] == color else 1
        edges.append((sector[(i, k)], sector[(i, k + 2)]))
    return verts, edges


def _bipartite(verts, edges) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    side: dict[int, int] = {}
    for root in verts:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def orientable_by_propagation(d: Diagram, color: str) -> bool:
    """Second implementation: union-find with parity. Give each disc an up/down side;
    a half-twisted band forces its two discs to opposite sides."""
    verts, edges = band_graph(d, color)
    parent = {v: v for v in verts}
    parity = {v: 0 for v in verts}  # parity relative to parent

    def find(v):
        path = []
        while parent[v] != v:
            path.append(v)
            v = parent[v]
        # compress, accumulating parity from the top down
        acc = 0
        for u in reversed(path):
            acc ^= parity[u]
            parity[u] = acc
            parent[u] = v
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        pa, pb = parity[a] if a != ra else 0, parity[b] if b != rb else 0
        if ra == rb:
            if pa == pb:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ 1
    return True


def boundary_components(d: Diagram, color: str) -> int:
    """Trace the surface boundary: along each face edge, then across each band.

    A band joins the corners ``k`` and ``k+2`` of its crossing, so the boundary arc
    arriving on the port ``k`` side of the band leaves on the port ``k+2`` side.
    """
    _check_color(color)
    require_valid(d)
    if d.n == 0:
        return 1
    parent = {e: e for e in range(1, 2 * d.n + 1)}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    cols = sector_colors(d)
    for t, cs in zip(d.crossings, cols):
        k = 0 if cs[0] == color else 1
        for j in (k, k + 2):
            # corner (j, j+1) is a disc corner; the band continues each side straight on
            for a, b in ((j, (j + 2) % 4), ((j + 1) % 4, (j + 3) % 4)):
                ra, rb = find(t[a]), find(t[b])
                if ra != rb:
                    parent[ra] = rb
    return len({find(e) for e in parent})


def checkerboard_surface(d: Diagram, color: str) -> SurfaceSummary:
    verts, edges = band_graph(d, color)
    chi = len(verts) - d.n
    orientable = _bipartite(verts, edges)
    if orientable:
        if chi % 2 == 0:
            raise AssertionError("orientable surface with one boundary has odd Euler characteristic")
        g = (1 - chi) // 2
    else:
        g = 1 - chi
    return SurfaceSummary(color, len(verts), d.n, chi, orientable, g)


def howie_check(d: Diagram) -> HowieReport:
    """chi(white) + chi(black) + n, with the Euler characteristics read off the all-A and
    all-B states (|s+ D| - n and |s- D| - n).

    The state whose arcs pass through the white corner ``(a, b)`` of the first crossing
    is credited to white. On an alternating diagram the two states then trace the white
    and black faces, so the values are those of the two checkerboard surfaces. Face counts alone would give 2 for every
    diagram; the state counts are what make the identity detect alternation.
    """
    require_valid(d)
    if nugatory_crossings(d):
        raise InvalidDiagramError("howie_check needs a reduced diagram")
    st = state_stats(d)
    cw, cb = st.s_plus_loops - d.n, st.s_minus_loops - d.n
    if d.n and sector_colors(d)[0][0] != WHITE:
        cw, cb = cb, cw
    return HowieReport(cw, cb, d.n, cw + cb + d.n)
