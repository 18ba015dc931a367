#!/usr/bin/env python3
"""Run the built-in catalogue, validate the report and re-check every certificate."""
from __future__ import annotations

import argparse
import sys

from puretop.catalog import all_pass, catalog_entries, emit, reverify, run_catalog, validate_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", help="comma-separated entry ids")
    ap.add_argument("--format", choices=("json", "markdown"), default="markdown")
    ap.add_argument("--out", help="write the report here instead of stdout")
    args = ap.parse_args()
    only = args.only.split(",") if args.only else None
    records = run_catalog(only, timings=True)
    validate_report(records)
    sources = {e.id: e.source for e in catalog_entries()}
    bad = [r for r in records if not reverify(r, sources[r["entry"]])]
    text = emit(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    total = sum(r["wall_time"] for r in records)
    print(f"{len(records)} checks, {sum(r['pass'] for r in records)} pass, "
          f"{len(bad)} certificates failing re-verification, {total:.2f}s", file=sys.stderr)
    return 0 if all_pass(records) and not bad else 1


if __name__ == "__main__":
    sys.exit(main())
