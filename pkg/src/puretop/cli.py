"""Command line: ``puretop check FILE``, ``puretop catalog``, ``puretop selftest``.

Exit codes: 0 when every check passes, 1 on a verdict mismatch, 2 on usage
or parse errors.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from .errors import DSLError


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="puretop", description="Purity, splitting and descent checks.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run the checks of a catalogue file")
    c.add_argument("file")
    c.add_argument("--format", choices=("json", "markdown"), default="json")
    c.add_argument("--timings", action="store_true", help="add wall times to the records")
    k = sub.add_parser("catalog", help="run the built-in catalogue")
    k.add_argument("--only", help="comma-separated entry ids")
    k.add_argument("--format", choices=("json", "markdown"), default="json")
    k.add_argument("--timings", action="store_true", help="add wall times to the records")
    k.add_argument("--list", action="store_true", help="list entry ids and exit")
    s = sub.add_parser("selftest", help="run the randomized property suites")
    s.add_argument("--seed", type=int, default=None, help="overrides PURETOP_SEED")
    return p


def main(argv=None) -> int:
    from .catalog import all_pass, catalog_entries, check_file, emit, run_catalog
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.command == "check":
        try:
            records = check_file(args.file, args.timings)
        except DSLError as e:
            print(f"{args.file}:{e}", file=sys.stderr)
            return 2
        except OSError as e:
            print(f"puretop: {e}", file=sys.stderr)
            return 2
        print(emit(records, args.format))
        return 0 if all_pass(records) else 1
    if args.command == "catalog":
        if args.list:
            for e in catalog_entries():
                print(e.id)
            return 0
        only = [x.strip() for x in args.only.split(",") if x.strip()] if args.only else None
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            records = run_catalog(only, args.timings)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        print(emit(records, args.format))
        return 0 if all_pass(records) else 1
    if args.command == "selftest":
        from .suites import run_all, suite_seed
        print(f"seed {suite_seed(args.seed)}")
        results = run_all(args.seed)
        for r in results:
            print(("PASS " if r.ok else "FAIL ") + r.line())
            for f in r.failures[:10]:
                print("    " + f)
        return 0 if all(r.ok for r in results) else 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
