#!/usr/bin/env python3
"""Find and audit every adequate transversal of every standard catalog entry."""

import sys

sys.path.insert(0, "src")

from adequate.catalog import standard_catalog
from adequate.core import SUBSEMIGROUP_CAP
from adequate.transversal import (
    audit_identities,
    find_adequate_transversals,
    transversal_profile,
)


def main():
    bad = 0
    for key, S in standard_catalog():
        if S.order > SUBSEMIGROUP_CAP:
            print(f"{key}: order {S.order} above the search cap, skipped")
            continue
        ds = find_adequate_transversals(S)
        print(f"{key}: {len(ds)} adequate transversal(s)")
        for d in ds:
            prof = transversal_profile(S, d)
            flags = [name for name, v in (
                ("quasi-ideal", prof.is_quasi_ideal),
                ("multiplicative", prof.is_multiplicative),
                ("admissible", prof.is_admissible),
            ) if v]
            report = audit_identities(S, d)
            fails = report.failures()
            bad += len(fails)
            line = f"  {list(d.s0)}: {', '.join(flags) or 'plain'}"
            if fails:
                line += f"  AUDIT FAILURES: {[e.name for e in fails]}"
            print(line)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
