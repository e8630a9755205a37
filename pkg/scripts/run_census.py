#!/usr/bin/env python3
"""Tabulate the classification census at a given order.

Counts isomorphism classes that are abundant / adequate / quasi-adequate,
and how many admit adequate (resp. admissible adequate) transversals.
"""

import argparse
import sys

sys.path.insert(0, "src")

from adequate.census import enumerate_semigroups
from adequate.greenstar import abundance_profile
from adequate.transversal import find_adequate_transversals, transversal_profile


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("order", type=int)
    ap.add_argument("--max-order", type=int, default=4)
    args = ap.parse_args()
    total = abundant = adequate = quasi = with_t = with_adm = 0
    for S in enumerate_semigroups(args.order, up_to_iso=True, max_order=args.max_order):
        total += 1
        prof = abundance_profile(S)
        abundant += prof.is_abundant
        adequate += prof.is_adequate
        quasi += prof.is_quasi_adequate
        ds = find_adequate_transversals(S)
        if ds:
            with_t += 1
            if any(transversal_profile(S, d).is_admissible for d in ds):
                with_adm += 1
    print(f"order {args.order}: {total} classes")
    print(f"  abundant: {abundant}")
    print(f"  adequate: {adequate}")
    print(f"  quasi-adequate: {quasi}")
    print(f"  with adequate transversal: {with_t}")
    print(f"  with admissible adequate transversal: {with_adm}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
