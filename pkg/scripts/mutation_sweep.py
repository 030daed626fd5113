#!/usr/bin/env python3
"""Sweep every single-cell product mutation of a stock instance through the
validator and replay each reported witness independently.

Example:
    python3 scripts/mutation_sweep.py boolean
    python3 scripts/mutation_sweep.py z4 --max-report 20
"""

import argparse
import dataclasses
import sys

from gsl import core


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("instance", help="boolean or z<n>")
    parser.add_argument("--max-report", type=int, default=10, help="rows to print")
    args = parser.parse_args()

    if args.instance == "boolean":
        g = core.boolean_gamma()
    elif args.instance.startswith("z") and args.instance[1:].isdigit():
        g = core.zn_gamma(int(args.instance[1:]))
    else:
        raise SystemExit(f"unknown instance {args.instance!r}")

    s, gg = len(g.S), len(g.G)
    total = valid = replay_ok = replay_total = 0
    shown = 0
    for a in range(s):
        for c in range(gg):
            for b in range(s):
                for v in range(s):
                    if v == g.prod[a][c][b]:
                        continue
                    total += 1
                    prod = [list(map(list, plane)) for plane in g.prod]
                    prod[a][c][b] = v
                    mutant = dataclasses.replace(g, name="mutant", prod=prod)
                    outcome = core.validate_gamma_semiring(mutant)
                    if outcome.ok:
                        valid += 1
                        status = "still-valid"
                        first = "-"
                    else:
                        for viol in outcome.violations:
                            replay_total += 1
                            replay_ok += core.recheck_violation(mutant, viol)
                        first = outcome.violations[0].axiom
                        status = f"{len(outcome.violations)} violations"
                    if shown < args.max_report:
                        cell = f"{g.S[a]}@{g.G[c]}@{g.S[b]} -> {g.S[v]}"
                        print(f"{cell:24s} {status:16s} first: {first}")
                        shown += 1
    print()
    print(f"mutants: {total}, still valid: {valid}, invalid: {total - valid}")
    print(f"witness replay: {replay_ok}/{replay_total} confirmed")
    return 0 if replay_ok == replay_total else 1


if __name__ == "__main__":
    sys.exit(main())
