#!/usr/bin/env python3
"""Search the small-order census for candidate transversals whose
factorisation triple is ambiguous (more than one valid (e, s, f) for some x).

Prints every hit with its table and candidate subset, plus a summary line,
so the negative-control test can either pin a concrete instance or record
that the search came up empty.
"""

import argparse
import sys
from collections import Counter

sys.path.insert(0, "src")

from adequate.census import enumerate_semigroups
from adequate.core import enumerate_subsemigroups
from adequate.errors import (
    AmbiguousDecomposition,
    NoDecomposition,
    NotAbundant,
    NotAdequateSub,
    NotStarSub,
)
from adequate.greenstar import abundance_profile
from adequate.transversal import verify_adequate_transversal


def hunt(max_n: int):
    outcomes = Counter()
    hits = []
    for n in range(1, max_n + 1):
        for S in enumerate_semigroups(n, up_to_iso=True):
            if not abundance_profile(S).is_abundant:
                outcomes["not_abundant_semigroup"] += 1
                continue
            for sub in enumerate_subsemigroups(S):
                try:
                    verify_adequate_transversal(S, sub)
                    outcomes["transversal"] += 1
                except NotAdequateSub:
                    outcomes["not_adequate_sub"] += 1
                except NotStarSub:
                    outcomes["not_star_sub"] += 1
                except NoDecomposition:
                    outcomes["no_decomposition"] += 1
                except AmbiguousDecomposition as exc:
                    outcomes["ambiguous"] += 1
                    hits.append((S.table, sub, exc.element, exc.triples))
    return outcomes, hits


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=4)
    args = ap.parse_args()
    outcomes, hits = hunt(args.max_order)
    print(f"search over census orders 1..{args.max_order}")
    for k in sorted(outcomes):
        print(f"  {k}: {outcomes[k]}")
    for table, sub, x, triples in hits:
        print(f"HIT table={table} candidate={sub} element={x} triples={triples}")
    if not hits:
        print("no ambiguous factorisation at these orders (search exhaustive)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
