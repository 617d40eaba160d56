"""Smallest a with a(1-D) (or a(1-D)lambda) inside each split submodule."""
import argparse

from pinko.split import SplitKind, div_bound, membership


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=12)
    args = ap.parse_args()
    for parity in ("odd", "even"):
        for l in range(args.levels):
            kind = SplitKind(parity, l)
            deg = max(args.max_degree, 2 * l + 2)
            a = 1
            while not membership(kind, a, deg, use_bound=False).is_member:
                a += 1
            print(f"{parity:<4} l={l}: smallest a = {a}, 2a = {2 * a}, bound = {div_bound(kind)}")


if __name__ == "__main__":
    main()
