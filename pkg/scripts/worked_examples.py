"""Replay the worked examples and print one line per claim.

Use ``--json`` for the full evidence (witnesses, f-vectors, separation table).
"""

from __future__ import annotations

import argparse
import json

from gfpoly.worked_examples import run_all


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--deep", action="store_true", help="search normality witnesses past level 3")
    ap.add_argument("--skip-census", action="store_true")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    results = run_all(deep=args.deep, census=not args.skip_census)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<32} {r.seconds:7.1f}s")
    raise SystemExit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
