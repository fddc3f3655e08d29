"""Command-line front end.

Every subcommand takes one diagram source: an inline ``PD[...]`` string, the name of a
bundled table entry, or a path to a file holding PD text. ``--json`` switches to JSON
output (schema in ``knotforge/data/cli_schema.json``). Exit codes: 0 success, 1 domain
error (bad or unsuitable diagram), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from knotforge.bracket import NaiveLimitExceeded, bracket, jones, kauffman_poly, span_check, state_stats
from knotforge.codes import (
    Diagram,
    InvalidDiagramError,
    PDSyntaxError,
    canonical_form,
    emit_pd,
    format_gauss,
    parse_pd,
    to_gauss,
    validate,
)
from knotforge.diagram import BLACK, WHITE, is_alternating, is_composite, reduce, writhe
from knotforge.moves import FlypeOrbitLimitExceeded, InapplicableMove, apply_flype, find_flypes, flype_orbit
from knotforge.polynomial import LaurentPoly
from knotforge.surfaces import boundary_components, checkerboard_surface, howie_check
from knotforge.tables import TableLoadError, builtin_table, load_table, verify_tait

DOMAIN_ERRORS = (
    InvalidDiagramError,
    PDSyntaxError,
    InapplicableMove,
    NaiveLimitExceeded,
    FlypeOrbitLimitExceeded,
    TableLoadError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def read_source(source: str) -> Diagram:
    text = source.strip()
    if text.startswith("PD"):
        return parse_pd(text)
    for e in builtin_table():
        if e.name == text:
            return e.diagram
    path = Path(source)
    if path.is_file():
        return parse_pd(path.read_text(encoding="utf-8"))
    raise UsageError(f"{source!r} is not PD text, a builtin name, or a file")


def _poly(p: LaurentPoly) -> dict:
    return p.to_json()


def _text(p: LaurentPoly) -> str:
    # the command line lists terms from the lowest exponent up
    return p.format(ascending=True)


# each handler returns (text, json_payload)

def _validate(args, d):
    rep = validate(d)
    text = "valid" if rep.ok else "invalid\n" + "\n".join(rep.errors)
    return text, {"valid": rep.ok, "errors": list(rep.errors)}


def _writhe(args, d):
    w = writhe(d)
    return str(w), {"writhe": w}


def _alternating(args, d):
    a = is_alternating(d)
    return str(a).lower(), {"alternating": a}


def _reduce(args, d):
    r = reduce(d)
    return emit_pd(r), {"pd": emit_pd(r), "n": r.n, "removed": d.n - r.n}


def _gauss(args, d):
    g = format_gauss(to_gauss(d))
    return g, {"gauss": g}


def _canonical(args, d):
    c = emit_pd(canonical_form(d))
    return c, {"pd": c}


def _bracket(args, d):
    p = bracket(d, "naive" if args.naive else "fast")
    return _text(p), {"bracket": _poly(p)}


def _kauffman(args, d):
    p = kauffman_poly(d)
    return _text(p), {"kauffman": _poly(p)}


def _jones(args, d):
    p = jones(d)
    return _text(p), {"jones": _poly(p)}


def _span(args, d):
    r = span_check(d)
    payload = {
        "span": r.span,
        "expected": r.expected,
        "max_degree": r.max_degree,
        "min_degree": r.min_degree,
        "alternating": r.alternating,
        "extreme_degree_match": r.extreme_degree_match,
        "span_law_ok": r.span_law_ok,
    }
    rel = "=" if r.span == r.expected else "<" if r.span < r.expected else ">"
    text = f"span {r.span} {rel} 4n = {r.expected} (max {r.max_degree}, min {r.min_degree})"
    return text, payload


def _states(args, d):
    st = state_stats(d)
    total = st.s_plus_loops + st.s_minus_loops
    payload = {"s_plus": st.s_plus_loops, "s_minus": st.s_minus_loops, "n": st.n, "sum": total}
    text = f"|s+D| = {st.s_plus_loops}, |s-D| = {st.s_minus_loops}, sum {total}, n + 2 = {st.n + 2}"
    return text, payload


def _surface(args, d):
    colors = [args.color] if args.color else [WHITE, BLACK]
    rows, lines = [], []
    for c in colors:
        s = checkerboard_surface(d, c)
        row = s.to_json()
        row["boundary_components"] = boundary_components(d, c)
        rows.append(row)
        kind = f"orientable, genus {s.genus_or_crosscap}" if s.orientable else (
            f"non-orientable, crosscaps {s.genus_or_crosscap}")
        lines.append(f"{c}: discs {s.disc_count}, bands {s.band_count}, chi {s.euler_char}, {kind}")
    return "\n".join(lines), {"surfaces": rows}


def _howie(args, d):
    h = howie_check(d)
    text = f"{h.chi_white} + {h.chi_black} + {h.half_intersection} = {h.total}"
    return text, h.to_json()


def _composite(args, d):
    comp, witness = is_composite(d)
    text = f"composite (cut edges {witness[0]}, {witness[1]})" if comp else "prime"
    return text, {"composite": comp, "witness": list(witness) if witness else None}


def _site_json(i, s):
    return {"index": i, "crossing": s.crossing, "tangle": sorted(s.tangle), "boundary": list(s.boundary)}


def _flype(args, d):
    if args.action == "list":
        sites = find_flypes(d)
        lines = [
            f"{i}: crossing {s.crossing}, tangle {sorted(s.tangle)}, boundary {list(s.boundary)}"
            for i, s in enumerate(sites)
        ]
        return "\n".join(lines) if lines else "no flype sites", {"sites": [_site_json(i, s) for i, s in enumerate(sites)]}
    if args.action == "apply":
        sites = find_flypes(d)
        if args.site is None:
            raise UsageError("flype apply needs --site")
        if not 0 <= args.site < len(sites):
            raise InapplicableMove(f"site {args.site} out of range ({len(sites)} sites)")
        out = apply_flype(d, sites[args.site])
        return emit_pd(out), {"pd": emit_pd(out), "site": _site_json(args.site, sites[args.site])}
    orbit = sorted(flype_orbit(d, args.limit), key=lambda x: x.crossings)
    pds = [emit_pd(x) for x in orbit]
    return "\n".join([f"orbit size {len(pds)}"] + pds), {"size": len(pds), "orbit": pds}


def _table(args):
    if args.path:
        entries = load_table(args.path)
    else:
        entries = builtin_table()
    rep = verify_tait(entries)
    if rep.ok:
        text = "all Tait checks passed"
    else:
        text = "\n".join(rep.failures)
    return rep.ok, text, {"ok": rep.ok, "failures": rep.failures, "entries": rep.to_json()}


HANDLERS = {
    "validate": (_validate, "check a PD code"),
    "writhe": (_writhe, "sum of crossing signs"),
    "alternating": (_alternating, "is the diagram alternating"),
    "reduce": (_reduce, "remove nugatory crossings"),
    "gauss": (_gauss, "signed Gauss code"),
    "canonical": (_canonical, "relabeling-invariant PD code"),
    "bracket": (_bracket, "Kauffman bracket <D> in A"),
    "kauffman": (_kauffman, "writhe-normalized bracket (-A)^(-3w)<D>"),
    "jones": (_jones, "Jones polynomial in t"),
    "span": (_span, "bracket span against 4n"),
    "states": (_states, "loop counts of the all-A and all-B states"),
    "surface": (_surface, "checkerboard surface summary"),
    "howie": (_howie, "chi(white) + chi(black) + n"),
    "composite": (_composite, "search for a 2-edge cut"),
    "flype": (_flype, "flype sites, application and orbit"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    p = _Parser(prog="knotforge", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in HANDLERS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if name == "flype":
            sp.add_argument("action", choices=("list", "apply", "orbit"))
        sp.add_argument("source", help="PD text, builtin table name, or file path")
        if name == "bracket":
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--naive", action="store_true", help="sum over all 2^n states")
            g.add_argument("--fast", action="store_true", help="sweep contraction (default)")
        if name == "surface":
            sp.add_argument("--color", choices=(WHITE, BLACK), help="one color only")
        if name == "flype":
            sp.add_argument("--site", type=int, help="site index for apply")
            sp.add_argument("--limit", type=int, default=None, help="orbit size limit")
    tp = sub.add_parser("table", help="Tait checks over a knot table", parents=[common])
    tp.add_argument("action", choices=("check",))
    tp.add_argument("path", nargs="?", help="TSV table (default: the bundled one)")
    return p


def _emit(out, args, text, payload):
    if getattr(args, "json", False):
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            ok, text, payload = _table(args)
            _emit(out, args, text, payload)
            return 0 if ok else 1
        d = read_source(args.source)
        handler = HANDLERS[args.command][0]
        if args.command != "validate" and not validate(d).ok:
            raise InvalidDiagramError("; ".join(validate(d).errors))
        text, payload = handler(args, d)
        _emit(out, args, text, payload)
        if args.command == "validate" and not payload["valid"]:
            return 1
        return 0
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except DOMAIN_ERRORS as exc:
        err.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
