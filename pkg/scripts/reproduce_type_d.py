"""Print the A_t actions and R(z) for C^3 / BD(n), rho = faithful 2-dim + trivial."""

import argparse
import sys

from orbgw.serialize import dumps
from orbgw.type_d import reproduce_type_d


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--t-max", type=int, default=4)
    ap.add_argument("--order", type=int, default=3)
    args = ap.parse_args()
    ok = True
    for n in args.n:
        rep = reproduce_type_d(n, args.t_max, args.order)
        ok &= rep["all_match"]
        print(f"BD({n}): classes {rep['class_labels']}, rep {rep['rep']}", file=sys.stderr)
        for row in rep["actions"]:
            print(f"  t={row['t']} {row['class']:>7}  A1={row['A1']:>10} (closed form {row['A1_closed_form']})"
                  f"  A2={row['A2']}", file=sys.stderr)
        sys.stdout.write(dumps(rep))
    print("all actions match the closed forms" if ok else "MISMATCH", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
