"""Regenerate the bundled knot table (src/knotforge/data/builtin_table.tsv).

Each diagram is built from a braid word or a 2-bridge continued fraction and only
written out after it validates, is reduced, and its alternation flag is recorded.
"""

import argparse
from pathlib import Path

from knotforge.codes import emit_pd, require_valid
from knotforge.construct import braid_closure, connected_sum, four_plat, rational_word
from knotforge.diagram import is_alternating, is_reduced
from knotforge.moves import apply_flype, find_flypes
from knotforge.codes import canonical_form

OUT = Path(__file__).resolve().parents[1] / "src" / "knotforge" / "data" / "builtin_table.tsv"

# Conway notation of the 2-bridge knots through seven crossings
PLATS = {
    "3_1": [3],
    "4_1": [2, 2],
    "5_1": [5],
    "5_2": [3, 2],
    "6_1": [4, 2],
    "6_2": [3, 1, 2],
    "6_3": [2, 1, 1, 2],
    "7_1": [7],
    "7_2": [5, 2],
    "7_3": [4, 3],
    "7_4": [3, 1, 3],
    "7_5": [3, 2, 2],
    "7_6": [2, 2, 1, 2],
    "7_7": [2, 1, 1, 1, 2],
}

BRAIDS = {
    "3_1:braid": [1, 1, 1],
    "4_1:braid": [1, -2, 1, -2],
    "8_19": [1, 1, 1, 2, 1, 1, 1, 2],
    "8_20": [1, 1, 1, -2, -1, -1, -1, -2],
    "8_21": [1, 1, 1, 2, -1, -1, 2, 2],
    "twist_chain_24": ([1] * 3 + [-2] * 3) * 4,
}


def build():
    rows = {}
    for name, cf in PLATS.items():
        rows[name] = four_plat(rational_word(cf))
    for name, word in BRAIDS.items():
        rows[name] = braid_closure(word)
    rows["3_1#3_1"] = connected_sum(rows["3_1:braid"], rows["3_1:braid"])
    # a second 7_7 diagram one proper flype away from the first
    base = rows["7_7"]
    for site in find_flypes(base):
        if len(site.tangle) >= 2:
            other = apply_flype(base, site)
            if canonical_form(other) != canonical_form(base):
                rows["7_7:flyped"] = other
                break
    for name, d in rows.items():
        require_valid(d)
        if not is_reduced(d):
            raise SystemExit(f"{name} is not reduced")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--output", type=Path, default=OUT)
    args = ap.parse_args()
    rows = build()
    lines = ["# name\tpd\talternating"]
    for name, d in rows.items():
        lines.append(f"{name}\t{emit_pd(d)}\t{int(is_alternating(d))}")
    args.output.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} entries to {args.output}")


if __name__ == "__main__":
    main()
