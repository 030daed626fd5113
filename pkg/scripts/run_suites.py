#!/usr/bin/env python3
"""Run every verification suite on the stock instances and print a summary.

Example:
    python3 scripts/run_suites.py --instances boolean,z2,z4 --chain 0,1/2,1
    python3 scripts/run_suites.py --json results.json
"""

import argparse
import json
import sys

from gsl import core, verify
from gsl.config import RunConfig
from gsl.fuzzy import GradeChain
from gsl.report import FAIL


def build_instance(token: str):
    if token == "boolean":
        return core.boolean_gamma()
    if token.startswith("z") and token[1:].isdigit():
        return core.zn_gamma(int(token[1:]))
    raise SystemExit(f"unknown instance {token!r} (use boolean or z<n>)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", default="boolean,z2,z3,z4")
    parser.add_argument("--chain", default="0,1/2,1")
    parser.add_argument("--n", type=int, default=2, help="matrix dimension")
    parser.add_argument("--parallelism", type=int, default=1)
    parser.add_argument("--json", default=None, help="also dump all report bodies here")
    args = parser.parse_args()

    config = RunConfig.from_env(
        chain=GradeChain.parse(args.chain), n=args.n, parallelism=args.parallelism
    )
    failed = 0
    dump = []
    for token in args.instances.split(","):
        g = build_instance(token.strip())
        reports = verify.run_all(g, config)
        print(f"== {g.name}")
        for r in reports:
            marker = {"pass": "ok", "fail": "FAIL", "precondition-unmet": "gated"}[r.status]
            print(f"  {r.suite:22s} {marker:6s} {r.elapsed_ms:9.1f} ms")
            dump.append(r.body())
            failed += r.status == FAIL
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2)
        print(f"wrote {len(dump)} report bodies to {args.json}")
    print(f"total failures: {failed}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
