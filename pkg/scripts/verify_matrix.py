"""Run the graph-sum versus oracle comparison matrix and print one line per run."""

import argparse
import sys

from orbgw.serialize import dumps
from orbgw.suite import SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--heights", type=int, default=3)
    ap.add_argument("--dilaton", choices=("shifted", "verbatim"), default="shifted")
    ap.add_argument("--quadratic", choices=("verbatim", "alternate"), default="verbatim")
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    def show(e):
        status = "ok" if not e["mismatches"] else f"MISMATCH {e['first_mismatch']}"
        print(f"{e['group']:>20} rep={e['rep']} {e['mode']:>2} (g,n)=({e['g']},{e['n']}) "
              f"checked={e.get('checked', 0):4d} {e['seconds']:7.2f}s {status}", flush=True)

    cfg = SuiteConfig(height_cap=args.heights, dilaton=args.dilaton, quadratic=args.quadratic, timings=True)
    report = run_suite(cfg, progress=show)
    print(f"total: {report['checked']} coefficients, {report['mismatches']} mismatching runs, "
          f"{report['seconds']} s")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(report))
    return 0 if report["mismatches"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
