"""Mutable port-graph view of a knot diagram used for face tracing and local rewrites.

A port is ``(crossing_id, k)`` with ``k`` in 0..3 counterclockwise. ``conn`` pairs ports
along edges, ``under[x]`` is the axis (0 or 1) whose ports ``{u, u+2}`` carry the
under-strand, and ``inport[x][axis]`` is the port where the strand on that axis enters.
Crossing ids are arbitrary hashables; ``order`` fixes the output crossing order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from knotforge.codes import Diagram, over_in_slot

Port = tuple


@dataclass
class PortGraph:
    conn: dict = field(default_factory=dict)
    under: dict = field(default_factory=dict)
    inport: dict = field(default_factory=dict)
    order: list = field(default_factory=list)
    start: Port | None = None  # in-port whose incoming edge is labeled 1

    _ids = itertools.count()

    # ------------------------------------------------------------ conversion
    @classmethod
    def from_diagram(cls, d: Diagram) -> "PortGraph":
        g = cls()
        where: dict[int, list] = {}
        for i, t in enumerate(d.crossings):
            g.order.append(i)
            g.under[i] = 0
            slot = over_in_slot(d, i)
            g.inport[i] = {0: 0, 1: slot if slot is not None else 1}
            for k, lab in enumerate(t):
                where.setdefault(lab, []).append((i, k))
        for lab, ports in where.items():
            if len(ports) == 2:
                p, q = ports
                g.conn[p] = q
                g.conn[q] = p
        for i, t in enumerate(d.crossings):
            for k in (0, g.inport[i][1]):
                if t[k] == 1:
                    g.start = (i, k)
        return g

    def copy(self) -> "PortGraph":
        return PortGraph(
            dict(self.conn),
            dict(self.under),
            {x: dict(v) for x, v in self.inport.items()},
            list(self.order),
            self.start,
        )

    @property
    def n(self) -> int:
        return len(self.order)

    def new_id(self):
        return ("new", next(self._ids))

    def is_in(self, p: Port) -> bool:
        x, k = p
        return self.inport[x][k % 2] == k

    def under_in(self, x) -> Port:
        return (x, self.inport[x][self.under[x]])

    def to_diagram(self) -> Diagram:
        """Traverse from ``start`` (or the first crossing's under in-port) and emit PD."""
        if not self.order:
            return Diagram(())
        start = self.start
        if start is None or start[0] not in self.under or not self.is_in(start):
            start = self.under_in(self.order[0])
        label: dict[Port, int] = {}
        p = start
        lab = 1
        while True:
            label[p] = lab
            label[self.conn[p]] = lab
            x, k = p
            out = (x, (k + 2) % 4)
            lab += 1
            p = self.conn[out]
            if p == start:
                break
            if lab > 2 * self.n + 1:
                raise ValueError("traversal did not close: not a single-component knot")
        if len(label) != 4 * self.n:
            raise ValueError("diagram has more than one component")
        tuples = []
        for x in self.order:
            u = self.inport[x][self.under[x]]
            tuples.append(tuple(label[(x, (u + j) % 4)] for j in range(4)))
        return Diagram(tuple(tuples))

    # ------------------------------------------------------------ faces
    def face_walk(self):
        """Trace faces; returns (faces, sector_face).

        Each face is a list of half-edges ``h`` (port left along its edge); the face lies
        to the right of travel. ``sector_face[(x, k)]`` is the face in the corner between
        ports ``k`` and ``k+1`` of crossing ``x``.
        """
        seen: set = set()
        faces = []
        sector_face = {}
        for x in self.order:
            for k in range(4):
                h0 = (x, k)
                if h0 in seen:
                    continue
                fid = len(faces)
                face = []
                h = h0
                while h not in seen:
                    seen.add(h)
                    face.append(h)
                    y, q = self.conn[h]
                    sector_face[(y, q)] = fid
                    h = (y, (q + 1) % 4)
                faces.append(face)
        return faces, sector_face

    def faces(self):
        if not self.order:
            return [[], []]
        return self.face_walk()[0]

    # ------------------------------------------------------------ structure helpers
    def sign(self, x) -> int:
        u = self.inport[x][self.under[x]]
        o = self.inport[x][1 - self.under[x]]
        return 1 if o == (u + 3) % 4 else -1

    def components_without(self, removed: set, edges_removed: set = frozenset()):
        """Connected components of crossings not in ``removed``.

        ``edges_removed`` holds frozenset({p, q}) port pairs treated as cut.
        """
        rest = [x for x in self.order if x not in removed]
        parent = {x: x for x in rest}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p, q in self.conn.items():
            if p[0] in parent and q[0] in parent and frozenset((p, q)) not in edges_removed:
                ra, rb = find(p[0]), find(q[0])
                if ra != rb:
                    parent[ra] = rb
        comps: dict = {}
        for x in rest:
            comps.setdefault(find(x), []).append(x)
        return list(comps.values())

    def remove_straight(self, x) -> None:
        """Delete crossing ``x`` joining each strand straight through it."""
        ends = [(x, k) for k in range(4)]
        outer = {p: self.conn[p] for p in ends if self.conn[p][0] != x}
        new_pairs = []
        done = set()
        for p, o in outer.items():
            if p in done:
                continue
            # walk from outer end o into x at p until we exit to another outer end
            cur = p
            while True:
                nxt = (x, (cur[1] + 2) % 4)
                far = self.conn[nxt]
                if far[0] != x:
                    break
                cur = far
            done.update((p, nxt))
            new_pairs.append((o, far))
        for p in ends:
            self.conn.pop(p, None)
        for o, f in new_pairs:
            self.conn[o] = f
            self.conn[f] = o
        self.order.remove(x)
        del self.under[x]
        del self.inport[x]
        if self.start is not None and self.start[0] == x:
            self.start = None

    def reflect(self, crossings) -> None:
        """Planar reflection plus over/under swap of the given crossings (a pi-rotation
        about an axis in the projection plane). Internal edges stay internal; the caller
        rewires edges leaving the set."""
        cs = set(crossings)
        f = lambda p: (p[0], (-p[1]) % 4) if p[0] in cs else p
        newconn = {}
        for p, q in self.conn.items():
            newconn[f(p)] = f(q)
        self.conn = newconn
        for x in cs:
            self.under[x] = 1 - self.under[x]
            self.inport[x] = {ax: (-k) % 4 for ax, k in self.inport[x].items()}
        if self.start is not None:
            self.start = f(self.start)

    def connect(self, p, q) -> None:
        self.conn[p] = q
        self.conn[q] = p

    def add_crossing(self, x, under: int, inport: dict) -> None:
        self.order.append(x)
        self.under[x] = under
        self.inport[x] = dict(inport)
