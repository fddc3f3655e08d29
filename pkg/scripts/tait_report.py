"""Run the Tait checks over a knot table and write the JSON report.

    python scripts/tait_report.py                 # bundled table, report to stdout
    python scripts/tait_report.py my.tsv -o r.json
"""

import argparse
import json
import sys

from knotforge.tables import builtin_table, load_table, verify_tait


def main():
    ap = argparse.ArgumentParser(description="Tait conjecture checks over a knot table")
    ap.add_argument("table", nargs="?", help="TSV table (default: bundled)")
    ap.add_argument("-o", "--output", help="write the JSON report here")
    args = ap.parse_args()
    entries = load_table(args.table) if args.table else builtin_table()
    rep = verify_tait(entries)
    payload = json.dumps({"ok": rep.ok, "failures": rep.failures, "entries": rep.to_json()}, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    width = max(len(name) for name in rep.entries)
    for name, rec in rep.entries.items():
        flags = " ".join(f"{k}={rec[k]}" for k in ("span_law_ok", "state_sum_ok", "howie_ok"))
        print(f"{name:{width}s}  n={rec['n']:2d}  w={rec['writhe']:3d}  span={rec['span']}  {flags}", file=sys.stderr)
    print("all Tait checks passed" if rep.ok else f"{len(rep.failures)} failures", file=sys.stderr)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
