"""Exhaustive enumeration of small semigroups.

Tables are generated by a depth-first fill with incremental associativity
checking: placing table[a][b] = v re-checks exactly the triples whose four
lookups became determined by that cell. Isomorphism reduction canonicalises
each table to the lexicographically least relabeling and keeps first
occurrences.
"""

from __future__ import annotations

import itertools
import warnings

from .core import FiniteSemigroup, relabel_table
from .errors import OrderCapExceeded

CENSUS_CAP = 4
CENSUS_HARD_CAP = 5


def labelled_tables(n: int):
    """Yield every associative n x n table.

    Cells are filled diagonal first, then row-major; each placement re-checks
    only the triples it completes, using per-value occurrence stacks to find
    the cells whose product equals the fresh cell's coordinates.
    """
    t = [[-1] * n for _ in range(n)]
    cells = [(a, a) for a in range(n)] + [
        (a, b) for a in range(n) for b in range(n) if a != b
    ]
    occ: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    last = len(cells)

    def consistent(a: int, b: int, v: int) -> bool:
        ta, tb, tv = t[a], t[b], t[v]
        for z in range(n):
            bz = tb[z]
            if bz >= 0:
                lhs = tv[z]
                if lhs >= 0:
                    rhs = ta[bz]
                    if rhs >= 0 and lhs != rhs:
                        return False
        for x in range(n):
            tx = t[x]
            xa = tx[a]
            if xa >= 0:
                lhs = t[xa][b]
                if lhs >= 0:
                    rhs = tx[v]
                    if rhs >= 0 and lhs != rhs:
                        return False
        for (x, y) in occ[a]:
            yb = t[y][b]
            if yb >= 0:
                rhs = t[x][yb]
                if rhs >= 0 and rhs != v:
                    return False
        for (y, z) in occ[b]:
            ay = ta[y]
            if ay >= 0:
                lhs = t[ay][z]
                if lhs >= 0 and lhs != v:
                    return False
        return True

    def fill(i: int):
        if i == last:
            yield tuple(tuple(row) for row in t)
            return
        a, b = cells[i]
        row = t[a]
        for v in range(n):
            row[b] = v
            occ[v].append((a, b))
            if consistent(a, b, v):
                yield from fill(i + 1)
            occ[v].pop()
        row[b] = -1

    yield from fill(0)


def canonical_table(table) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least table over all relabelings."""
    n = len(table)
    return min(relabel_table(table, p) for p in itertools.permutations(range(n)))


def enumerate_semigroups(n: int, up_to_iso: bool = True, max_order: int = CENSUS_CAP):
    """Stream all semigroups of order n, optionally one per isomorphism class.

    ``max_order`` can be raised to 5, with a warning; beyond that the search
    space is out of desk range.
    """
    cap = min(max_order, CENSUS_HARD_CAP)
    if n > cap:
        raise OrderCapExceeded(f"census order {n} exceeds the cap {cap}")
    if n > CENSUS_CAP:
        warnings.warn(f"census at order {n} may take minutes", stacklevel=2)
    if up_to_iso:
        seen = set()
        for table in labelled_tables(n):
            canon = canonical_table(table)
            if canon not in seen:
                seen.add(canon)
                yield FiniteSemigroup(order=n, table=canon)
    else:
        for table in labelled_tables(n):
            yield FiniteSemigroup(order=n, table=table)


def census_counts(n: int, max_order: int = CENSUS_CAP) -> tuple[int, int]:
    """(labelled tables, isomorphism classes) at order n."""
    labelled = 0
    seen = set()
    cap = min(max_order, CENSUS_HARD_CAP)
    if n > cap:
        raise OrderCapExceeded(f"census order {n} exceeds the cap {cap}")
    for table in labelled_tables(n):
        labelled += 1
        seen.add(canonical_table(table))
    return labelled, len(seen)
