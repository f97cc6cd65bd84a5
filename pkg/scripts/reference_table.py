#!/usr/bin/env python3
"""Reproduce the flat-ball vs hemisphere comparison table.

Prints the closed-form and eigensolve values side by side with the published
reference numbers and their deviations.  The n=2 and n=4 reference entries
are suspected misprints (truncated j_0; wrong j_1); the deviation column
makes that visible instead of matching them.
"""

import argparse

from scx.cli import table_rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=2000)
    args = parser.parse_args()

    rows = table_rows(args.grid)
    header = (f"{'n':>2} {'ball 4j^2':>12} {'ball solve':>12} {'hemi n(n+3)':>12} "
              f"{'hemi solve':>12} {'reference':>10} {'deviation':>10}  note")
    print(header)
    print("-" * len(header))
    for r in rows:
        print(f"{r['n']:>2} {r['ball_closed_form']:>12.6f} {r['ball_eigensolve']:>12.6f} "
              f"{r['hemisphere_closed_form']:>12.1f} {r['hemisphere_eigensolve']:>12.6f} "
              f"{r['reference_ball']:>10.3f} {r['ball_deviation']:>10.4f}  {r['note']}")


if __name__ == "__main__":
    main()
