"""A keyed catalog of standard small semigroups used throughout the tests
and the CLI.

Keys are family names with integer parameters, written ``name(p1,p2)``:

* ``chain(n)`` — the n-element chain as a meet semilattice, x*y = min(x, y)
* ``left_zero(n)`` / ``right_zero(n)`` — x*y = x, resp. x*y = y
* ``rect_band(m,n)`` — pairs (i, j) with (i, j)(k, l) = (i, l)
* ``cyclic_group(n)`` — integers mod n under addition
* ``null(n)`` — every product equals element 0
* ``brandt2`` — the five-element combinatorial Brandt inverse semigroup
* ``sym_inv(n)`` — partial injections on n points, n at most 3
* ``lrb3`` — the left regular band {1, a, 0} with identity 1 and L-class {a, 0}

Cheap structural facts are asserted when an entry is built; the full
classification profiles are pinned down in the test suite.
"""

from __future__ import annotations

import itertools
import re

from .core import FiniteSemigroup, band_class, validate_table
from .errors import ParamOutOfRange, UnknownKey
from .greenstar import regular_and_inverses

_MAX_PARAM = 12


def chain(n: int) -> FiniteSemigroup:
    _check_param(1 <= n <= _MAX_PARAM, f"chain order {n}")
    S = validate_table([[min(a, b) for b in range(n)] for a in range(n)],
                       labels=[str(i) for i in range(n)])
    assert band_class(S).is_semilattice
    return S


def left_zero(n: int) -> FiniteSemigroup:
    _check_param(1 <= n <= _MAX_PARAM, f"left zero order {n}")
    S = validate_table([[a] * n for a in range(n)],
                       labels=[chr(ord("a") + i) for i in range(n)])
    assert n == 1 or band_class(S).is_left_zero
    return S


def right_zero(n: int) -> FiniteSemigroup:
    _check_param(1 <= n <= _MAX_PARAM, f"right zero order {n}")
    S = validate_table([list(range(n)) for _ in range(n)],
                       labels=[chr(ord("a") + i) for i in range(n)])
    assert n == 1 or band_class(S).is_right_zero
    return S


def rect_band(m: int, n: int) -> FiniteSemigroup:
    _check_param(m >= 1 and n >= 1 and m * n <= 16, f"rectangular band {m}x{n}")
    size = m * n
    table = [[(a // n) * n + (b % n) for b in range(size)] for a in range(size)]
    S = validate_table(table, labels=[f"({i + 1},{j + 1})" for i in range(m) for j in range(n)])
    assert band_class(S).is_rectangular
    return S


def cyclic_group(n: int) -> FiniteSemigroup:
    _check_param(1 <= n <= _MAX_PARAM, f"cyclic group order {n}")
    S = validate_table([[(a + b) % n for b in range(n)] for a in range(n)],
                       labels=[f"g{i}" for i in range(n)])
    assert S.identity() == 0
    return S


def null(n: int) -> FiniteSemigroup:
    _check_param(1 <= n <= _MAX_PARAM, f"null order {n}")
    return validate_table([[0] * n for _ in range(n)],
                          labels=["0"] + [f"n{i}" for i in range(1, n)])


def brandt2() -> FiniteSemigroup:
    # matrix units: a = E12, a' = E21, aa' = E11, a'a = E22, plus zero
    table = [[0] * 5 for _ in range(5)]
    prods = {(1, 2): 3, (2, 1): 4, (1, 4): 1, (2, 3): 2,
             (3, 1): 1, (4, 2): 2, (3, 3): 3, (4, 4): 4}
    for (x, y), z in prods.items():
        table[x][y] = z
    S = validate_table(table, labels=["0", "a", "a'", "aa'", "a'a"])
    reg = regular_and_inverses(S)
    assert all(len(reg.inverses[x]) == 1 for x in range(5))
    return S


def sym_inv(n: int) -> FiniteSemigroup:
    """Partial injections on {0..n-1}, composed left to right."""
    _check_param(1 <= n <= 3, f"symmetric inverse monoid degree {n}")
    maps = []
    points = range(n)
    for k in range(n + 1):
        for dom in itertools.combinations(points, k):
            for img in itertools.permutations(points, k):
                maps.append(tuple(zip(dom, img)))
    maps.sort(key=lambda m: (len(m), m))
    index = {m: i for i, m in enumerate(maps)}

    def compose(f, g):
        fd = dict(f)
        gd = dict(g)
        return tuple(sorted((p, gd[fd[p]]) for p in fd if fd[p] in gd))

    table = [[index[compose(f, g)] for g in maps] for f in maps]
    labels = ["{}" if not m else "{" + ",".join(f"{p}>{q}" for p, q in m) + "}" for m in maps]
    S = validate_table(table, labels=labels)
    reg = regular_and_inverses(S)
    assert all(len(reg.inverses[x]) == 1 for x in range(S.order))
    assert S.identity() is not None
    return S


def lrb3() -> FiniteSemigroup:
    S = validate_table([[0, 1, 2], [1, 1, 1], [2, 2, 2]], labels=["1", "a", "0"])
    bc = band_class(S)
    assert bc.is_left_regular and not bc.is_left_normal
    return S


_FAMILIES = {
    "chain": (chain, 1),
    "left_zero": (left_zero, 1),
    "right_zero": (right_zero, 1),
    "rect_band": (rect_band, 2),
    "cyclic_group": (cyclic_group, 1),
    "null": (null, 1),
    "brandt2": (brandt2, 0),
    "sym_inv": (sym_inv, 1),
    "lrb3": (lrb3, 0),
}

_KEY_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\))?\s*$")


def catalog(key: str) -> FiniteSemigroup:
    """Build a catalog entry from its key string, e.g. ``rect_band(2,2)``."""
    m = _KEY_RE.match(key)
    if not m:
        raise UnknownKey(f"cannot parse catalog key {key!r}")
    name, args = m.group(1), m.group(2)
    if name not in _FAMILIES:
        raise UnknownKey(f"no catalog family named {name!r}")
    fn, arity = _FAMILIES[name]
    params = [int(p) for p in args.split(",")] if args else []
    if len(params) != arity:
        raise ParamOutOfRange(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def _check_param(ok: bool, what: str) -> None:
    if not ok:
        raise ParamOutOfRange(what)


STANDARD_KEYS = (
    "chain(1)", "chain(2)", "chain(3)",
    "left_zero(2)", "left_zero(3)",
    "right_zero(2)", "right_zero(3)",
    "rect_band(2,2)",
    "cyclic_group(2)", "cyclic_group(3)",
    "null(2)",
    "brandt2",
    "sym_inv(1)", "sym_inv(2)",
    "lrb3",
)


def standard_catalog() -> list[tuple[str, FiniteSemigroup]]:
    """The fixed corpus of catalog instances exercised by the test suite."""
    return [(k, catalog(k)) for k in STANDARD_KEYS]
