"""Planar diagram (PD) codes: parsing, emission, validation, Gauss export, canonical form.

Convention: ``X(a,b,c,d)`` lists the four edge ends counterclockwise, starting at the
incoming under-edge ``a``; the under-strand runs ``a -> c`` and edge ``e`` is followed by
``e + 1`` (wrapping ``2n -> 1``).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Diagram",
    "PDSyntaxError",
    "InvalidDiagramError",
    "ValidationReport",
    "GaussSymbol",
    "parse_pd",
    "emit_pd",
    "validate",
    "require_valid",
    "over_in_slot",
    "to_gauss",
    "format_gauss",
    "parse_gauss_text",
    "relabel",
    "canonical_form",
    "mirror",
]

Tuple4 = tuple[int, int, int, int]


class PDSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidDiagramError(ValueError):
    """Raised when an operation needs a valid knot diagram and did not get one."""


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Tuple4, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in t) for t in self.crossings))

    @property
    def n(self) -> int:
        return len(self.crossings)

    def __str__(self) -> str:
        return emit_pd(self)


# ---------------------------------------------------------------- parse / emit

_TOKEN = re.compile(r"\s*(PD\[|X\(|\d+|[-+]?\d*\.\d*|[A-Za-z_]\w*|[(),\]]|\S)")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            return
        yield m.group(1), m.start(1)
        pos = m.end()


def parse_pd(text: str) -> Diagram:
    """Parse ``PD[X(a,b,c,d),...]`` into a Diagram (no validation)."""
    toks = list(_tokens(text))
    i = 0

    def expect(value: str):
        nonlocal i
        if i >= len(toks):
            raise PDSyntaxError(f"expected {value!r}, got end of input", len(text))
        tok, pos = toks[i]
        if tok != value:
            raise PDSyntaxError(f"expected {value!r}, got {tok!r}", pos)
        i += 1

    expect("PD[")
    crossings: list[Tuple4] = []
    if i < len(toks) and toks[i][0] == "]":
        i += 1
    else:
        while True:
            start = toks[i][1] if i < len(toks) else len(text)
            expect("X(")
            labels: list[int] = []
            while True:
                if i >= len(toks):
                    raise PDSyntaxError("unterminated crossing", len(text))
                tok, pos = toks[i]
                if not tok.isdigit():
                    raise PDSyntaxError(f"non-integer label {tok!r}", pos)
                if int(tok) < 1:
                    raise PDSyntaxError("labels must be >= 1", pos)
                labels.append(int(tok))
                i += 1
                if i < len(toks) and toks[i][0] == ",":
                    i += 1
                    continue
                expect(")")
                break
            if len(labels) != 4:
                raise PDSyntaxError(f"crossing has {len(labels)} labels, expected 4", start)
            crossings.append(tuple(labels))
            if i < len(toks) and toks[i][0] == ",":
                i += 1
                continue
            expect("]")
            break
    if i != len(toks):
        raise PDSyntaxError(f"trailing input {toks[i][0]!r}", toks[i][1])
    return Diagram(tuple(crossings))


def emit_pd(d: Diagram) -> str:
    return "PD[" + ",".join("X({},{},{},{})".format(*t) for t in d.crossings) + "]"


# ---------------------------------------------------------------- validation

def _succ(e: int, m: int) -> int:
    return e % m + 1


def over_in_slot(d: Diagram, i: int) -> int | None:
    """Slot (1 for b, 3 for d) at which the over-strand enters crossing ``i``.

    Returns None when the labels do not determine a direction. For one-crossing
    diagrams both successions hold mod 2; the over-strand then enters on the slot
    carrying the under-strand's outgoing label, since that edge returns immediately.
    """
    m = 2 * d.n
    a, b, c, dd = d.crossings[i]
    if d.n == 1:
        if b == c and dd != c:
            return 1
        if dd == c and b != c:
            return 3
        return None
    fwd = b == _succ(dd, m)  # over runs d -> b
    bwd = dd == _succ(b, m)  # over runs b -> d
    if fwd == bwd:
        return None
    return 3 if fwd else 1


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self):
        return iter(self.errors)

    def __len__(self):
        return len(self.errors)


def validate(d: Diagram) -> ValidationReport:
    """List every violated invariant; an empty report means a valid connected knot diagram."""
    from knotforge._planar import PortGraph

    report = ValidationReport()
    n = d.n
    if n == 0:
        return report
    m = 2 * n
    counts = Counter(x for t in d.crossings for x in t)
    for lab in sorted(counts):
        if not 1 <= lab <= m:
            report.errors.append(f"edge label {lab} outside 1..{m}")
        elif counts[lab] != 2:
            report.errors.append(f"edge label {lab} appears {counts[lab]} times (expected 2)")
    for lab in range(1, m + 1):
        if lab not in counts:
            report.errors.append(f"edge label {lab} missing")
    if report.errors:
        return report

    heads: Counter = Counter()
    tails: Counter = Counter()
    for i, (a, b, c, dd) in enumerate(d.crossings):
        if c != _succ(a, m):
            report.errors.append(f"crossing {i}: under-strand {a} -> {c} breaks succession")
        slot = over_in_slot(d, i)
        if slot is None:
            report.errors.append(f"crossing {i}: over-strand direction ambiguous or broken ({b}, {dd})")
            continue
        o_in, o_out = (dd, b) if slot == 3 else (b, dd)
        heads.update((a, o_in))
        tails.update((c, o_out))
    if report.errors:
        return report
    for lab in range(1, m + 1):
        if heads[lab] != 1 or tails[lab] != 1:
            report.errors.append(f"edge {lab} is not traversed exactly once")
    if report.errors:
        return report

    nf = len(PortGraph.from_diagram(d).faces())
    if nf != n + 2:
        report.errors.append(f"face count {nf} != n + 2 = {n + 2} (not planar)")
    return report


def require_valid(d: Diagram) -> None:
    rep = validate(d)
    if not rep.ok:
        raise InvalidDiagramError("; ".join(rep.errors))


# ---------------------------------------------------------------- Gauss codes

@dataclass(frozen=True)
class GaussSymbol:
    crossing: int  # 1-based crossing index
    over: bool
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


def _sign(d: Diagram, i: int) -> int:
    return 1 if over_in_slot(d, i) == 3 else -1


def to_gauss(d: Diagram) -> list[GaussSymbol]:
    """Crossing visits in edge order: symbol k describes the crossing edge k runs into."""
    require_valid(d)
    head: dict[int, tuple[int, bool]] = {}
    for i, t in enumerate(d.crossings):
        head[t[0]] = (i, False)
        head[t[over_in_slot(d, i)]] = (i, True)
    return [
        GaussSymbol(i + 1, over, _sign(d, i))
        for i, over in (head[e] for e in range(1, 2 * d.n + 1))
    ]


def format_gauss(seq: Iterable[GaussSymbol]) -> str:
    return ",".join(str(s) for s in seq)


_GAUSS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def parse_gauss_text(text: str) -> list[GaussSymbol]:
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        m = _GAUSS_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad Gauss token {tok!r}")
        out.append(GaussSymbol(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
    return out


# ---------------------------------------------------------------- relabeling

def relabel(d: Diagram, start: int, reverse: bool = False) -> Diagram:
    """Renumber edges so ``start`` becomes 1; ``reverse`` also flips the orientation.

    Crossing order is kept. Reversal re-roots every tuple at the old outgoing under-edge.
    """
    m = 2 * d.n
    if m == 0:
        return d
    if reverse:
        f = lambda e: (start - e) % m + 1
        return Diagram(tuple((f(c), f(dd), f(a), f(b)) for a, b, c, dd in d.crossings))
    f = lambda e: (e - start) % m + 1
    return Diagram(tuple(tuple(f(x) for x in t) for t in d.crossings))


def _key(d: Diagram) -> tuple:
    return tuple(sorted(d.crossings))


def canonical_form(d: Diagram) -> Diagram:
    """Minimal sorted tuple list over the 4n relabelings; mirrors are not identified."""
    require_valid(d)
    if d.n == 0:
        return d
    best = None
    for start in range(1, 2 * d.n + 1):
        for rev in (False, True):
            key = _key(relabel(d, start, rev))
            if best is None or key < best:
                best = key
    return Diagram(best)


def mirror(d: Diagram) -> Diagram:
    """Planar reflection: each tuple (a,b,c,d) becomes (a,d,c,b); all signs flip."""
    return Diagram(tuple((a, dd, c, b) for a, b, c, dd in d.crossings))


def diagram_from_tuples(tuples: Sequence[Sequence[int]]) -> Diagram:
    return Diagram(tuple(tuple(t) for t in tuples))
