"""Reidemeister moves and flypes as local rewrites of the port graph.

Half-edges are named ``(edge label, side)``: the face lying on that side of the edge,
relative to the knot's orientation. A face is traced clockwise, i.e. with the face on
the right of travel, so ``(e, "R")`` walks edge ``e`` forwards and ``(e, "L")`` backwards.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from knotforge._planar import PortGraph
from knotforge.codes import Diagram, InvalidDiagramError, canonical_form, require_valid
from knotforge.config import Settings
from knotforge.construct import orient
from knotforge.diagram import nugatory_crossings

__all__ = [
    "MoveSite",
    "FlypeSite",
    "InapplicableMove",
    "FlypeOrbitLimitExceeded",
    "find_move_sites",
    "apply_move",
    "apply_move_tracked",
    "find_flypes",
    "apply_flype",
    "flype_orbit",
]

MOVE_KINDS = ("R1+", "R1-", "R2", "R3", "R1-undo", "R2-undo")


class InapplicableMove(ValueError):
    pass


class FlypeOrbitLimitExceeded(RuntimeError):
    def __init__(self, limit: int, partial: set):
        super().__init__(f"flype orbit exceeded {limit} diagrams")
        self.partial = partial


@dataclass(frozen=True)
class MoveSite:
    """``location`` per kind:

    * R1+/R1-: ``(edge, side)``; edge 0 addresses the crossingless unknot
    * R2: ``(e1, side1, e2, side2, e1_over)`` with both half-edges on one face
    * R3: ``(edge, side)`` on a triangular face
    * R1-undo: ``(crossing,)``; R2-undo: ``(edge, side)`` on a bigon
    """

    kind: str
    location: tuple


# ---------------------------------------------------------------- port-graph plumbing

def _graph(d: Diagram):
    g = PortGraph.from_diagram(d)
    label = {}
    for i, t in enumerate(d.crossings):
        for k, lab in enumerate(t):
            label[(i, k)] = lab
    return g, label


def _half_edge(g: PortGraph, label, edge: int, side: str):
    """Port from which the half-edge starts."""
    for p, lab in label.items():
        if lab == edge and (g.is_in(p) == (side == "L")):
            return p
    raise InapplicableMove(f"no edge {edge}")


def _name(g: PortGraph, label, h):
    return (label[h], "L" if g.is_in(h) else "R")


def _face_of(g: PortGraph):
    faces, _ = g.face_walk()
    where = {}
    for fid, f in enumerate(faces):
        for h in f:
            where[h] = fid
    return faces, where


def _slot(g: PortGraph, p) -> int:
    """PD slot of port ``p`` once ``g`` is emitted."""
    x, k = p
    return (k - g.inport[x][g.under[x]]) % 4


def _finish(g: PortGraph) -> Diagram:
    d = g.to_diagram()
    require_valid(d)
    return d


# ---------------------------------------------------------------- Reidemeister I

def _r1(g: PortGraph, P, sign: int, side: str):
    """Insert a kink on the edge leaving port P (P is an out-port). Returns new id."""
    x = g.new_id()
    # strand: P -> x.0 -> x.2 -> loop -> x.(3|1) -> x.(1|3) -> Q
    loop_in = 3 if side == "L" else 1
    under = 0 if (sign > 0) == (side == "L") else 1
    g.add_crossing(x, under, {0: 0, 1: loop_in})
    if P is None:
        g.connect((x, 2), (x, loop_in))
        g.connect((x, (loop_in + 2) % 4), (x, 0))
    else:
        Q = g.conn[P]
        g.connect(P, (x, 0))
        g.connect((x, 2), (x, loop_in))
        g.connect((x, (loop_in + 2) % 4), Q)
    return x


# ---------------------------------------------------------------- Reidemeister II

def _r2(g: PortGraph, P1, P2, e1_over: bool):
    """Push the edge starting at P1 across the edge starting at P2 (same face)."""
    Q1, Q2 = g.conn[P1], g.conn[P2]
    fwd1, fwd2 = not g.is_in(P1), not g.is_in(P2)
    X, Y = g.new_id(), g.new_id()
    under = 1 if e1_over else 0
    g.add_crossing(X, under, {0: 0 if fwd1 else 2, 1: 3 if fwd2 else 1})
    g.add_crossing(Y, under, {0: 2 if fwd1 else 0, 1: 3 if fwd2 else 1})
    # ports: 0 south, 1 east, 2 north, 3 west; e1 runs south-north, e2 west-east
    g.connect(P1, (X, 0))
    g.connect((X, 2), (Y, 2))
    g.connect((Y, 0), Q1)
    g.connect(P2, (Y, 3))
    g.connect((Y, 1), (X, 3))
    g.connect((X, 1), Q2)
    return X, Y


def _bigon(g: PortGraph, h):
    """For a half-edge on a 2-gon face return (X, p, Y, q) with edge X.p -- Y.q."""
    X, p = h
    Y, q = g.conn[h]
    h2 = (Y, (q + 1) % 4)
    back = g.conn[h2]
    if X == Y or back[0] != X or (back[0], (back[1] + 1) % 4) != h:
        return None
    return X, p, Y, q


def _r2_removable(g: PortGraph, h) -> bool:
    b = _bigon(g, h)
    if b is None:
        return False
    X, p, Y, q = b
    over_x = (p % 2) != g.under[X]
    over_y = (q % 2) != g.under[Y]
    return over_x == over_y


# ---------------------------------------------------------------- Reidemeister III

def _triangle(g: PortGraph, h):
    X, a = h
    Y, qY = g.conn[h]
    Z, qZ = g.conn[(Y, (qY + 1) % 4)]
    X2, qX = g.conn[(Z, (qZ + 1) % 4)]
    if X2 != X or (qX + 1) % 4 != a or len({X, Y, Z}) != 3:
        return None
    return X, qX, Y, qY, Z, qZ


def _r3_applicable(g: PortGraph, tri) -> bool:
    X, qX, Y, qY, Z, qZ = tri
    over = lambda x, port: (port % 2) != g.under[x]
    return (
        (over(X, qX + 1) and over(Y, qY))
        or (over(Y, qY + 1) and over(Z, qZ))
        or (over(Z, qZ + 1) and over(X, qX))
    )


def _r3(g: PortGraph, tri) -> None:
    X, qX, Y, qY, Z, qZ = tri
    m4 = lambda k: k % 4
    # outer ports of the three strands (t1: X->Y, t2: Y->Z, t3: Z->X)
    OX3, OX1 = (X, m4(qX + 2)), (X, m4(qX + 3))
    OY1, OY2 = (Y, m4(qY + 2)), (Y, m4(qY + 3))
    OZ2, OZ3 = (Z, m4(qZ + 2)), (Z, m4(qZ + 3))
    t1_out_from_x = g.inport[X][m4(qX + 3) % 2] == m4(qX + 3)
    t2_out_from_y = g.inport[Y][m4(qY + 3) % 2] == m4(qY + 3)
    t3_out_from_z = g.inport[Z][m4(qZ + 3) % 2] == m4(qZ + 3)
    t1_under_x = g.under[X] == m4(qX + 1) % 2
    t1_under_y = g.under[Y] == qY % 2
    t2_under_z = g.under[Z] == qZ % 2
    # new ports: X' = (t1 axis 0, t3 axis 1); Y' = (t1 axis 0, t2 axis 1);
    # Z' = (t2 axis 0, t3 axis 1)
    remap = {OY1: (X, 0), OZ3: (X, 3), OX1: (Y, 2), OZ2: (Y, 3), OY2: (Z, 0), OX3: (Z, 1)}
    outer = {o: g.conn[o] for o in remap}
    for c in (X, Y, Z):
        for k in range(4):
            g.conn.pop((c, k), None)
    for o, partner in outer.items():
        g.connect(remap[o], remap.get(partner, partner))
    g.connect((X, 2), (Y, 0))
    g.connect((Y, 1), (Z, 2))
    g.connect((Z, 3), (X, 1))
    g.under[X] = 0 if t1_under_x else 1
    g.under[Y] = 0 if t1_under_y else 1
    g.under[Z] = 0 if t2_under_z else 1
    g.inport[X] = {0: 2 if t1_out_from_x else 0, 1: 3 if t3_out_from_z else 1}
    g.inport[Y] = {0: 2 if t1_out_from_x else 0, 1: 1 if t2_out_from_y else 3}
    g.inport[Z] = {0: 0 if t2_out_from_y else 2, 1: 3 if t3_out_from_z else 1}
    if g.start is not None and g.start[0] in (X, Y, Z):
        g.start = None


# ---------------------------------------------------------------- public API

def find_move_sites(d: Diagram) -> list[MoveSite]:
    """All sites for every move kind, in deterministic order."""
    require_valid(d)
    sites: list[MoveSite] = []
    if d.n == 0:
        return [MoveSite(k, (0, s)) for k in ("R1+", "R1-") for s in ("L", "R")]
    g, label = _graph(d)
    for e in range(1, 2 * d.n + 1):
        for kind in ("R1+", "R1-"):
            for s in ("L", "R"):
                sites.append(MoveSite(kind, (e, s)))
    faces, _ = _face_of(g)
    for f in faces:
        names = [_name(g, label, h) for h in f]
        for (a, b) in itertools.permutations(range(len(f)), 2):
            if names[a][0] == names[b][0] or a > b:
                continue
            for over in (True, False):
                sites.append(MoveSite("R2", names[a] + names[b] + (over,)))
    for f in faces:
        if len(f) == 3:
            tri = _triangle(g, f[0])
            if tri is not None and _r3_applicable(g, tri):
                sites.append(MoveSite("R3", _name(g, label, f[0])))
    for i in range(d.n):
        if any(g.conn[(i, k)] == (i, (k + 1) % 4) for k in range(4)):
            sites.append(MoveSite("R1-undo", (i,)))
    for f in faces:
        if len(f) == 2 and _r2_removable(g, f[0]):
            sites.append(MoveSite("R2-undo", _name(g, label, f[0])))
    return sites


def apply_move_tracked(d: Diagram, site: MoveSite) -> tuple[Diagram, MoveSite | None]:
    """Apply ``site``; also return a site undoing it on the result (None for R3,
    whose inverse is an R3 found by ``find_move_sites``)."""
    require_valid(d)
    kind, loc = site.kind, site.location
    if kind not in MOVE_KINDS:
        raise InapplicableMove(f"unknown move kind {kind!r}")
    g, label = _graph(d)
    if kind in ("R1+", "R1-"):
        edge, side = loc
        sign = 1 if kind == "R1+" else -1
        if d.n == 0:
            if edge != 0:
                raise InapplicableMove("the crossingless unknot only has edge 0")
            P = None
        else:
            P = _half_edge(g, label, edge, "R")  # out-port of the edge
        x = _r1(g, P, sign, side)
        out = _finish(g)
        return out, MoveSite("R1-undo", (g.order.index(x),))
    if kind == "R1-undo":
        (i,) = loc
        if not 0 <= i < d.n or not any(g.conn[(i, k)] == (i, (k + 1) % 4) for k in range(4)):
            raise InapplicableMove(f"crossing {i} is not a kink")
        g.remove_straight(i)
        return _finish(g), None
    if kind == "R2":
        e1, s1, e2, s2, over = loc
        if e1 == e2:
            raise InapplicableMove("R2 needs two distinct edges")
        P1 = _half_edge(g, label, e1, s1)
        P2 = _half_edge(g, label, e2, s2)
        _, where = _face_of(g)
        if where[P1] != where[P2]:
            raise InapplicableMove("half-edges are not on a common face")
        _, Y = _r2(g, P1, P2, bool(over))
        out = _finish(g)
        # the new bigon is traced starting with the edge Y.north -> X.north
        g2, lab2 = _graph(out)
        h = (g.order.index(Y), _slot(g, (Y, 2)))
        return out, MoveSite("R2-undo", _name(g2, lab2, h))
    if kind == "R2-undo":
        h = _half_edge(g, label, *loc)
        if not _r2_removable(g, h):
            raise InapplicableMove("not a removable bigon")
        X, _, Y, _ = _bigon(g, h)
        g.remove_straight(X)
        g.remove_straight(Y)
        return _finish(g), None
    # R3
    h = _half_edge(g, label, *loc)
    tri = _triangle(g, h)
    if tri is None or not _r3_applicable(g, tri):
        raise InapplicableMove("no R3 move on this face")
    _r3(g, tri)
    return _finish(g), None


def apply_move(d: Diagram, site: MoveSite) -> Diagram:
    return apply_move_tracked(d, site)[0]


# ---------------------------------------------------------------- flypes

@dataclass(frozen=True)
class FlypeSite:
    crossing: int
    tangle: frozenset
    boundary: tuple  # the 4 cut edge labels, sorted


def _boundary_cycle(g: PortGraph, T: set, b0):
    """Boundary ports of tangle T in counterclockwise order starting at b0."""
    out = [b0]
    cur = b0
    for _ in range(4 * len(T) + 4):
        x, k = cur
        nxt = (x, (k + 1) % 4)
        while g.conn[nxt][0] in T:
            y, q = g.conn[nxt]
            nxt = (y, (q + 1) % 4)
        if nxt == b0:
            return out
        out.append(nxt)
        cur = nxt
    raise AssertionError("boundary walk did not close")


def _flype_geometry(g: PortGraph, c, T: set):
    """Return (k, cycle) with c's ports k, k+1 on T's SW, NW ends, or None."""
    for k in range(4):
        br, tr = (c, k), (c, (k + 1) % 4)
        sw, nw = g.conn[br], g.conn[tr]
        if sw[0] not in T or nw[0] not in T:
            continue
        others = [g.conn[(c, (k + j) % 4)] for j in (2, 3)]
        if any(o[0] in T or o[0] == c for o in others):
            continue
        cyc = _boundary_cycle(g, T, nw)
        if len(cyc) == 4 and cyc[1] == sw:
            return k, cyc
    return None


def _edge_ports(d: Diagram, label) -> dict[int, frozenset]:
    edges: dict[int, set] = {}
    for p, lab in label.items():
        edges.setdefault(lab, set()).add(p)
    return {e: frozenset(ps) for e, ps in edges.items()}


def _candidate_cuts(d: Diagram, g: PortGraph, label):
    """4-edge sets that can bound a flype tangle.

    If crossing c meets the tangle on its ports k and k+1, the tangle's boundary circle
    leaves c's corner face, crosses the edge at port k into the face at corner (k-1, k),
    and crosses the edge at port k+1 into the face at corner (k+1, k+2). The other two
    cut edges lie on those two faces.
    """
    faces, sector = g.face_walk()
    face_edges = [{label[h] for h in f} for f in faces]
    cuts = set()
    for c in range(d.n):
        for k in range(4):
            e_sw, e_nw = label[(c, k)], label[(c, (k + 1) % 4)]
            bottom = face_edges[sector[(c, (k + 3) % 4)]] - {e_sw, e_nw}
            top = face_edges[sector[(c, (k + 1) % 4)]] - {e_sw, e_nw}
            for e_se in bottom:
                for e_ne in top:
                    if e_se != e_ne:
                        cuts.add(tuple(sorted((e_sw, e_nw, e_se, e_ne))))
    return sorted(cuts)


def _sites_for_cuts(d: Diagram, g: PortGraph, label, cuts) -> list[FlypeSite]:
    edges = _edge_ports(d, label)
    found = {}
    for cut in cuts:
        comps = g.components_without(set(), {edges[e] for e in cut})
        if len(comps) < 2:
            continue
        for comp in comps:
            T = set(comp)
            crossing_edges = [e for e in cut if sum(p[0] in T for p in edges[e]) == 1]
            if len(crossing_edges) != 4 or len(T) == d.n:
                continue
            for c in range(d.n):
                if c in T or _flype_geometry(g, c, T) is None:
                    continue
                site = FlypeSite(c, frozenset(T), tuple(sorted(cut)))
                found[(c, site.tangle)] = site
    return sorted(found.values(), key=lambda s: (s.crossing, sorted(s.tangle)))


def find_flypes(d: Diagram, exhaustive: bool = False) -> list[FlypeSite]:
    """All flype sites: a tangle cut off by 4 edges plus a crossing outside it that sits
    on two boundary edges adjacent around the tangle.

    By default only the 4-edge cuts passing through the two faces next to some crossing
    are examined; ``exhaustive`` tries all C(2n, 4) cuts (the two agree, see the tests).
    """
    require_valid(d)
    if nugatory_crossings(d):
        raise InvalidDiagramError("find_flypes needs a reduced diagram")
    if d.n < 2:
        return []
    g, label = _graph(d)
    if exhaustive:
        cuts = itertools.combinations(range(1, 2 * d.n + 1), 4)
    else:
        cuts = _candidate_cuts(d, g, label)
    return _sites_for_cuts(d, g, label, cuts)


def apply_flype(d: Diagram, site: FlypeSite) -> Diagram:
    """Rotate the tangle by pi about the axis through ``site.crossing`` and move that
    crossing to the tangle's far side."""
    require_valid(d)
    g, _ = _graph(d)
    c, T = site.crossing, set(site.tangle)
    geo = _flype_geometry(g, c, T) if 0 <= c < d.n and c not in T else None
    if geo is None:
        raise InapplicableMove("not a flype site of this diagram")
    k, (nw, sw, se, ne) = geo
    TR, TL, BL, BR = ((c, (k + j) % 4) for j in (1, 2, 3, 0))
    f = lambda p: (p[0], (-p[1]) % 4)
    # four slots where arcs leave the c+T block; an arc may join two slots directly
    before = {"lt": TL, "lb": BL, "rt": ne, "rb": se}
    after = {"lt": f(sw), "lb": f(nw), "rt": TR, "rb": BR}
    slot_of = {p: name for name, p in before.items()}
    partner = {name: g.conn[p] for name, p in before.items()}
    for p in (TR, TL, BL, BR, nw, sw, se, ne):
        g.conn.pop(p, None)
    g.reflect(T)
    g.connect(TL, f(se))
    g.connect(BL, f(ne))
    for name, q in partner.items():
        if q in slot_of:
            g.connect(after[name], after[slot_of[q]])
        else:
            g.connect(after[name], q)
    # c now crosses other strands, so its directions are recomputed from a fixed crossing
    x0 = next(x for x in g.order if x != c)
    orient(g, (x0, g.inport[x0][0]))
    out = _finish(g)
    return out


def flype_orbit(d: Diagram, limit: int | None = None) -> set[Diagram]:
    """Canonical forms reachable by flypes (breadth first)."""
    limit = Settings().orbit_limit if limit is None else limit
    start = canonical_form(d)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for site in find_flypes(cur):
            nxt = canonical_form(apply_flype(cur, site))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise FlypeOrbitLimitExceeded(limit, seen)
                queue.append(nxt)
    return seen
