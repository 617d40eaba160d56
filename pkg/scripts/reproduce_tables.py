"""Print the kappa-o table, the c_m bound table and closed-form thresholds."""
import argparse

from pinko import obstruction as ob
from pinko.catalog import builtin_catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=32, help="largest even p for closed thresholds")
    args = ap.parse_args()

    cat = builtin_catalog()
    print("kappa-o_i, i = 0..7")
    for e in cat:
        print(f"  {e.name:<20}" + " ".join(f"{str(k):>5}" for k in e.kappa))

    print("\nq - p >= c_m for spin fillings with p = m mod 8, p > 1")
    for name, row in ob.bound_table(cat).items():
        cells = " ".join(f"m={m}:{c}" for m, c in row.items())
        print(f"  {name:<20}{cells}")

    print("\nsmallest q not excluded for closed spin forms")
    for p in range(0, args.max_p + 1, 2):
        q = 1
        while ob.closed_check(ob.FormSpec(p, q)).excluded:
            q += 1
        print(f"  p={p:<3} q>={q}")


if __name__ == "__main__":
    main()
