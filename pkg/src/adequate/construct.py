"""Forward builders for semigroups with adequate transversals.

Four constructions live here:

* the general three-coordinate builder on triples (e, x, f) driven by a pair
  of connecting map families alpha and beta,
* its quasi-ideal specialisation where alpha and beta collapse to the
  canonical constants (xy)+ and (xy)*,
* the spined product of a left adequate and a right adequate part over a
  shared quasi-ideal transversal,
* the semidirect product of an adequate, left ample semigroup acting on a
  left regular band.

Every builder re-verifies its advertised postconditions from scratch with the
transversal machinery rather than trusting the construction, so a returned
value is a checked witness, not a promise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FiniteSemigroup,
    band_class,
    find_isomorphism,
    is_morphism,
    restrict,
)
from .errors import (
    ActionLawViolation,
    AxiomViolation,
    BandNotNormal,
    ConditionViolation,
    InvariantBroken,
    NotAdequate,
    NotLeftAdequate,
    NotLeftAmple,
    NotQuasiIdeal,
    NotRightAdequate,
    PostconditionFailed,
    SemigroupError,
    TransversalInvalid,
    TransversalMismatch,
)
from .greenstar import (
    abundance_profile,
    green_relations,
    regular_and_inverses,
    star_plus,
)
from .transversal import (
    TransversalDecomposition,
    transversal_profile,
    verify_adequate_transversal,
)


@dataclass
class StructureInput:
    """Input data for the general builder.

    ``e0_in_i`` and ``e0_in_lambda`` embed the idempotents of ``s0`` into the
    two bands as a shared semilattice transversal. ``alpha[(x, y)]`` maps
    pairs (f, g) with f in the R-class of x* (in the right band) and g in the
    L-class of y+ (in the left band) to an element of the L-class of (xy)+;
    ``beta`` is the same keying into the R-class of (xy)*.
    """

    s0: FiniteSemigroup
    i_band: FiniteSemigroup
    lambda_band: FiniteSemigroup
    e0_in_i: dict
    e0_in_lambda: dict
    alpha: dict
    beta: dict


@dataclass
class ActionTable:
    """A left action of an adequate, left ample semigroup on a left regular band."""

    s0: FiniteSemigroup
    i_band: FiniteSemigroup
    e0_in_i: dict
    act: dict


@dataclass(frozen=True)
class CheckEntry:
    name: str
    applicable: bool
    passed: bool | None
    witness: tuple | None = None


@dataclass(frozen=True)
class CheckReport:
    entries: tuple[CheckEntry, ...]

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def ok(self, *names: str) -> bool:
        return all(self.entry(n).passed for n in names)

    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries if e.applicable)

    def failures(self) -> tuple[CheckEntry, ...]:
        return tuple(e for e in self.entries if e.applicable and not e.passed)


@dataclass(frozen=True)
class BuiltSemigroup:
    """A constructed semigroup together with its verified transversal.

    ``element_legend[i]`` names element i in the coordinates of the builder
    that produced it: triples (e, x, f), pairs (e, x) for semidirect builds,
    or pairs (x, a) for spined builds. ``w0`` lists the embedded transversal.
    """

    w: FiniteSemigroup
    element_legend: tuple[tuple, ...]
    w0: tuple[int, ...]
    decomposition: TransversalDecomposition
    kind: str
    condition_flags: tuple[tuple[str, bool], ...] = ()
    report: CheckReport | None = None

    def legend_index(self) -> dict:
        return {t: i for i, t in enumerate(self.element_legend)}


# --- shared structural checks ---------------------------------------------


def _embedding_check(s0, band, emb, side):
    """Validate one band-with-semilattice-transversal embedding.

    Returns (ok, witness, inv_map, class_of) where inv_map sends each band
    element to the s0 idempotent naming its unique transversal inverse, and
    class_of sends each s0 idempotent to the members of its L-class (side
    'l') or R-class (side 'r') in the band.
    """
    E0 = [e for e in range(s0.order) if s0.is_idempotent(e)]
    if sorted(emb.keys()) != sorted(E0):
        return False, ("keys", tuple(sorted(emb.keys()))), None, None
    vals = list(emb.values())
    if len(set(vals)) != len(vals) or any(not 0 <= v < band.order for v in vals):
        return False, ("injective", tuple(vals)), None, None
    for u in E0:
        for v in E0:
            if band.table[emb[u]][emb[v]] != emb[s0.table[u][v]]:
                return False, ("morphism", u, v), None, None
    image = {emb[u]: u for u in E0}
    reg = regular_and_inverses(band)
    inv_map = {}
    for x in range(band.order):
        hits = [image[y] for y in reg.inverses[x] if y in image]
        if len(hits) != 1:
            return False, ("transversal_count", x, len(hits)), None, None
        inv_map[x] = hits[0]
    rel = green_relations(band).l if side == "l" else green_relations(band).r
    class_of = {}
    covered = set()
    for u in E0:
        members = tuple(sorted(rel.classes[rel.class_of[emb[u]]]))
        class_of[u] = members
        covered.update(members)
    if covered != set(range(band.order)):
        return False, ("coverage", tuple(sorted(set(range(band.order)) - covered))), None, None
    return True, None, inv_map, class_of


class _Missing(Exception):
    pass


def _lookup(fam, key, point):
    try:
        return fam[key][point]
    except KeyError:
        raise _Missing((key, point)) from None


def validate_structure_input(si: StructureInput) -> CheckReport:
    """Evaluate the structural requirements and the five numbered conditions.

    Everything is reported with a witness on failure; nothing raises. The
    numbered conditions are marked inapplicable when the structural layer is
    too broken to state them.
    """
    entries: list[CheckEntry] = []

    def add(name, applicable, passed=None, witness=None):
        entries.append(CheckEntry(name, applicable, passed, witness))

    s0_ok = abundance_profile(si.s0).is_adequate
    add("s0_adequate", True, s0_ok)
    bi = band_class(si.i_band)
    add("i_band_left_regular", True, bi.is_band and bi.is_left_regular)
    bl = band_class(si.lambda_band)
    add("lambda_band_right_regular", True, bl.is_band and bl.is_right_regular)

    emb_ok = False
    if s0_ok and bi.is_band and bl.is_band:
        oi, wi, i_inv, l_class = _embedding_check(si.s0, si.i_band, si.e0_in_i, "l")
        add("i_transversal", True, oi, wi)
        ol, wl, lam_inv, r_class = _embedding_check(si.s0, si.lambda_band, si.e0_in_lambda, "r")
        add("lambda_transversal", True, ol, wl)
        emb_ok = oi and ol
    else:
        add("i_transversal", False)
        add("lambda_transversal", False)

    if not emb_ok:
        add("alpha_beta_domains", False)
        for k in range(1, 6):
            add(f"condition_{k}", False)
        return CheckReport(tuple(entries))

    sp = star_plus(si.s0)
    n0 = si.s0.order
    L_plus = {x: l_class[sp.plus[x]] for x in range(n0)}
    R_star = {x: r_class[sp.star[x]] for x in range(n0)}
    mul0 = si.s0.table
    mi = si.i_band.table
    ml = si.lambda_band.table
    ei = si.e0_in_i
    el = si.e0_in_lambda

    dom_witness = None
    for x in range(n0):
        for y in range(n0):
            rect = {(f, g) for f in R_star[x] for g in L_plus[y]}
            for fam, target in ((si.alpha, set(L_plus[mul0[x][y]])),
                                (si.beta, set(R_star[mul0[x][y]]))):
                inner = fam.get((x, y))
                if inner is None or set(inner.keys()) != rect:
                    dom_witness = ("keys", x, y)
                    break
                bad = [p for p, v in inner.items() if v not in target]
                if bad:
                    dom_witness = ("target", x, y, bad[0])
                    break
            if dom_witness:
                break
        if dom_witness:
            break
    add("alpha_beta_domains", True, dom_witness is None, dom_witness)
    if dom_witness is not None:
        for k in range(1, 6):
            add(f"condition_{k}", False)
        return CheckReport(tuple(entries))

    alpha, beta = si.alpha, si.beta

    def cond1():
        for x in range(n0):
            for y in range(n0):
                for z in range(n0):
                    xy, yz = mul0[x][y], mul0[y][z]
                    for f in R_star[x]:
                        for g in L_plus[y]:
                            a_xy = alpha[(x, y)][(f, g)]
                            b_xy = beta[(x, y)][(f, g)]
                            for h in R_star[y]:
                                bh = ml[b_xy][h]
                                for k in L_plus[z]:
                                    a_yz = alpha[(y, z)][(h, k)]
                                    b_yz = beta[(y, z)][(h, k)]
                                    ga = mi[g][a_yz]
                                    lhs_i = mi[a_xy][_lookup(alpha, (xy, z), (bh, k))]
                                    rhs_i = _lookup(alpha, (x, yz), (f, ga))
                                    if lhs_i != rhs_i:
                                        return ("alpha", x, y, z, f, g, h, k)
                                    lhs_l = ml[_lookup(beta, (x, yz), (f, ga))][b_yz]
                                    rhs_l = _lookup(beta, (xy, z), (bh, k))
                                    if lhs_l != rhs_l:
                                        return ("beta", x, y, z, f, g, h, k)
        return None

    def cond2():
        for x in range(n0):
            for y in range(n0):
                xy = mul0[x][y]
                if alpha[(x, y)][(el[sp.star[x]], ei[sp.plus[y]])] != ei[sp.plus[xy]]:
                    return ("alpha", x, y)
                if beta[(x, y)][(el[sp.star[x]], ei[sp.plus[y]])] != el[sp.star[xy]]:
                    return ("beta", x, y)
        return None

    def cond3():
        for x in range(n0):
            xs = el[sp.star[x]]
            xp = sp.plus[x]
            for x1 in range(n0):
                for x2 in range(n0):
                    for e in L_plus[x]:
                        for f1 in R_star[x1]:
                            for f2 in R_star[x2]:
                                for e1 in L_plus[x1]:
                                    for e2 in L_plus[x2]:
                                        if (mi[e1][alpha[(x1, x)][(f1, e)]]
                                                != mi[e2][alpha[(x2, x)][(f2, e)]]):
                                            continue
                                        if mul0[x1][x] != mul0[x2][x]:
                                            continue
                                        if (ml[beta[(x1, x)][(f1, e)]][xs]
                                                != ml[beta[(x2, x)][(f2, e)]][xs]):
                                            continue
                                        if (mi[e1][_lookup(alpha, (x1, xp), (f1, e))]
                                                != mi[e2][_lookup(alpha, (x2, xp), (f2, e))]
                                                or mul0[x1][xp] != mul0[x2][xp]
                                                or _lookup(beta, (x1, xp), (f1, e))
                                                != _lookup(beta, (x2, xp), (f2, e))):
                                            return (x, x1, x2, e, e1, f1, e2, f2)
        return None

    def cond4():
        for x in range(n0):
            xp = ei[sp.plus[x]]
            xst = sp.star[x]
            for x1 in range(n0):
                for x2 in range(n0):
                    for f in R_star[x]:
                        for e1 in L_plus[x1]:
                            for e2 in L_plus[x2]:
                                for f1 in R_star[x1]:
                                    for f2 in R_star[x2]:
                                        if (mi[xp][alpha[(x, x1)][(f, e1)]]
                                                != mi[xp][alpha[(x, x2)][(f, e2)]]):
                                            continue
                                        if mul0[x][x1] != mul0[x][x2]:
                                            continue
                                        if (ml[beta[(x, x1)][(f, e1)]][f1]
                                                != ml[beta[(x, x2)][(f, e2)]][f2]):
                                            continue
                                        if (_lookup(alpha, (xst, x1), (f, e1))
                                                != _lookup(alpha, (xst, x2), (f, e2))
                                                or mul0[xst][x1] != mul0[xst][x2]
                                                or ml[_lookup(beta, (xst, x1), (f, e1))][f1]
                                                != ml[_lookup(beta, (xst, x2), (f, e2))][f2]):
                                            return (x, x1, x2, f, e1, f1, e2, f2)
        return None

    def cond5():
        for f in range(si.lambda_band.order):
            u = lam_inv[f]
            for e in range(si.i_band.order):
                v = i_inv[e]
                if _lookup(alpha, (u, v), (el[u], e)) != mi[ei[u]][e]:
                    return ("alpha", f, e, u, v)
                if _lookup(beta, (u, v), (f, ei[v])) != ml[f][el[v]]:
                    return ("beta", f, e, u, v)
        return None

    for k, fn in enumerate((cond1, cond2, cond3, cond4, cond5), start=1):
        try:
            w = fn()
        except _Missing as exc:
            w = ("missing_entry",) + exc.args
        add(f"condition_{k}", True, w is None, w)
    return CheckReport(tuple(entries))


_STRUCTURAL = (
    "s0_adequate", "i_band_left_regular", "lambda_band_right_regular",
    "i_transversal", "lambda_transversal", "alpha_beta_domains",
)


def canonical_alpha_beta(s0, i_band, lambda_band, e0_in_i, e0_in_lambda):
    """The constant families (f, g) -> (xy)+ and (f, g) -> (xy)*."""
    sp = star_plus(s0)
    _, _, _, l_class = _require_embedding(s0, i_band, e0_in_i, "l")
    _, _, _, r_class = _require_embedding(s0, lambda_band, e0_in_lambda, "r")
    alpha: dict = {}
    beta: dict = {}
    for x in range(s0.order):
        for y in range(s0.order):
            xy = s0.table[x][y]
            rect = [(f, g) for f in r_class[sp.star[x]] for g in l_class[sp.plus[y]]]
            alpha[(x, y)] = {p: e0_in_i[sp.plus[xy]] for p in rect}
            beta[(x, y)] = {p: e0_in_lambda[sp.star[xy]] for p in rect}
    return alpha, beta


def _require_embedding(s0, band, emb, side):
    ok, witness, inv_map, class_of = _embedding_check(s0, band, emb, side)
    if not ok:
        raise TransversalInvalid(f"band transversal embedding invalid: {witness}")
    return ok, witness, inv_map, class_of


# --- general builder ----------------------------------------------------------


def build_w(si: StructureInput) -> BuiltSemigroup:
    """Construct the triple semigroup W from validated structure data.

    The carrier is every (e, x, f) with e in the L-class of x+ and f in the
    R-class of x*, ordered lexicographically by (x, e, f); the product is
    (e, x, f)(g, y, h) = (e.alpha_xy(f, g), xy, beta_xy(f, g).h). The output
    is re-validated from scratch: quasi-adequate, with the diagonal triples
    forming an admissible adequate transversal isomorphic to s0.
    """
    report = validate_structure_input(si)
    if not report.ok(*_STRUCTURAL) or not report.ok(*(f"condition_{k}" for k in range(1, 5))):
        raise AxiomViolation(report)

    sp = star_plus(si.s0)
    gi = green_relations(si.i_band)
    gl = green_relations(si.lambda_band)
    ei, el = si.e0_in_i, si.e0_in_lambda
    L_plus = {x: tuple(sorted(gi.l.classes[gi.l.class_of[ei[sp.plus[x]]]]))
              for x in range(si.s0.order)}
    R_star = {x: tuple(sorted(gl.r.classes[gl.r.class_of[el[sp.star[x]]]]))
              for x in range(si.s0.order)}

    legend = tuple(
        (e, x, f)
        for x in range(si.s0.order)
        for e in L_plus[x]
        for f in R_star[x]
    )
    index = {t: i for i, t in enumerate(legend)}
    mi, ml, m0 = si.i_band.table, si.lambda_band.table, si.s0.table
    rows = []
    try:
        for (e, x, f) in legend:
            row = []
            for (g, y, h) in legend:
                a = si.alpha[(x, y)][(f, g)]
                b = si.beta[(x, y)][(f, g)]
                row.append(index[(mi[e][a], m0[x][y], ml[b][h])])
            rows.append(tuple(row))
    except KeyError as exc:
        raise PostconditionFailed(f"product escaped the carrier: {exc}") from None
    labels = tuple(
        f"({si.i_band.label(e)},{si.s0.label(x)},{si.lambda_band.label(f)})"
        for (e, x, f) in legend
    )
    try:
        w = FiniteSemigroup(order=len(legend), table=tuple(rows), labels=labels)
    except SemigroupError as exc:
        raise PostconditionFailed(f"built table invalid: {exc}") from None

    w0 = tuple(index[(ei[sp.plus[x]], x, el[sp.star[x]])] for x in range(si.s0.order))
    D = _postvalidate(w, legend, w0, si.s0, kind="general")
    c5 = bool(report.entry("condition_5").passed)
    if c5:
        iw, _ = restrict(w, D.i_set)
        if find_isomorphism(iw, si.i_band) is None:
            raise PostconditionFailed("I(W) is not isomorphic to the left band")
        lw, _ = restrict(w, D.lambda_set)
        if find_isomorphism(lw, si.lambda_band) is None:
            raise PostconditionFailed("Lambda(W) is not isomorphic to the right band")
    return BuiltSemigroup(
        w=w, element_legend=legend, w0=w0, decomposition=D,
        kind="general", condition_flags=(("condition_5", c5),), report=report,
    )


def _postvalidate(w, legend, w0, s0, kind) -> TransversalDecomposition:
    prof = abundance_profile(w)
    if not prof.is_quasi_adequate:
        raise PostconditionFailed("output is not quasi-adequate")
    e0_set = {x for x in range(s0.order) if s0.is_idempotent(x)}
    for i, t in enumerate(legend):
        x = t[1] if kind != "spined" else None
        if kind != "spined" and w.is_idempotent(i) != (x in e0_set):
            raise PostconditionFailed(f"idempotents of W are not the E0 fibre at {t}")
    D = verify_adequate_transversal(w, w0)
    if not transversal_profile(w, D).is_admissible:
        raise PostconditionFailed("embedded transversal is not admissible")
    phi = {wi: x for x, wi in enumerate(w0)}
    sub, to_parent = restrict(w, w0)
    mor = is_morphism(sub, s0, tuple(phi[p] for p in to_parent))
    if mor is not None:
        raise PostconditionFailed(f"transversal copy is not isomorphic to s0 at {mor}")
    return D


# --- quasi-ideal specialisation ------------------------------------------------


def build_quasi_ideal_w(s0, i_band, lambda_band, e0_in_i, e0_in_lambda) -> BuiltSemigroup:
    """The canonical builder over a left normal and a right normal band.

    Equivalent to the general builder with the constant families; additionally
    asserts that the embedded transversal is a quasi-ideal and multiplicative.
    """
    bi = band_class(i_band)
    if not (bi.is_band and bi.is_left_normal):
        raise BandNotNormal("the left band must be left normal")
    bl = band_class(lambda_band)
    if not (bl.is_band and bl.is_right_normal):
        raise BandNotNormal("the right band must be right normal")
    prof = abundance_profile(s0)
    if not prof.is_adequate:
        raise NotAdequate("the transversal seed must be adequate")
    _require_embedding(s0, i_band, e0_in_i, "l")
    _require_embedding(s0, lambda_band, e0_in_lambda, "r")
    alpha, beta = canonical_alpha_beta(s0, i_band, lambda_band, e0_in_i, e0_in_lambda)
    si = StructureInput(s0=s0, i_band=i_band, lambda_band=lambda_band,
                        e0_in_i=e0_in_i, e0_in_lambda=e0_in_lambda,
                        alpha=alpha, beta=beta)
    b = build_w(si)
    tprof = transversal_profile(b.w, b.decomposition)
    if not tprof.is_quasi_ideal or not tprof.is_multiplicative:
        raise PostconditionFailed("embedded transversal is not a multiplicative quasi-ideal")
    return BuiltSemigroup(
        w=b.w, element_legend=b.element_legend, w0=b.w0,
        decomposition=b.decomposition, kind="quasi_ideal",
        condition_flags=b.condition_flags, report=b.report,
    )


# --- spined product -------------------------------------------------------------


def build_spined_product(l_part, d_l, r_part, d_r, identify) -> BuiltSemigroup:
    """Spined product of a left adequate and a right adequate part.

    ``identify`` matches the two transversal copies: a dict from members of
    ``d_l.s0`` (indices of l_part) to members of ``d_r.s0``. The carrier is
    all pairs (x, a) whose bars agree under the identification, multiplied by
    (x, a)(y, b) = (x . bar(y), bar(a) . b).
    """
    if not abundance_profile(l_part).is_left_adequate:
        raise NotLeftAdequate("left part must be left adequate")
    if not abundance_profile(r_part).is_right_adequate:
        raise NotRightAdequate("right part must be right adequate")
    if not transversal_profile(l_part, d_l).is_quasi_ideal:
        raise NotQuasiIdeal("left transversal must be a quasi-ideal")
    if not transversal_profile(r_part, d_r).is_quasi_ideal:
        raise NotQuasiIdeal("right transversal must be a quasi-ideal")
    if sorted(identify.keys()) != list(d_l.s0):
        raise TransversalMismatch("identification must cover the left transversal")
    if sorted(identify.values()) != list(d_r.s0):
        raise TransversalMismatch("identification must target the right transversal")
    for a in d_l.s0:
        for b in d_l.s0:
            if identify[l_part.table[a][b]] != r_part.table[identify[a]][identify[b]]:
                raise TransversalMismatch(f"identification is not a morphism at ({a},{b})")

    legend = tuple(
        (x, a)
        for x in range(l_part.order)
        for a in range(r_part.order)
        if identify[d_l.bar_of[x]] == d_r.bar_of[a]
    )
    index = {p: i for i, p in enumerate(legend)}
    tl, tr = l_part.table, r_part.table
    rows = []
    for (x, a) in legend:
        row = []
        for (y, b) in legend:
            p = (tl[x][d_l.bar_of[y]], tr[d_r.bar_of[a]][b])
            if p not in index:
                raise InvariantBroken(f"spined product escapes the carrier at {(x, a, y, b)}")
            row.append(index[p])
        rows.append(tuple(row))
    labels = tuple(f"({l_part.label(x)},{r_part.label(a)})" for (x, a) in legend)
    w = FiniteSemigroup(order=len(legend), table=tuple(rows), labels=labels)

    w0 = tuple(index[(s, identify[s])] for s in d_l.s0)
    sub_l, _ = restrict(l_part, d_l.s0)
    D = verify_adequate_transversal(w, w0)
    tprof = transversal_profile(w, D)
    if not abundance_profile(w).is_quasi_adequate:
        raise PostconditionFailed("spined product is not quasi-adequate")
    if not tprof.is_admissible or not tprof.is_quasi_ideal:
        raise PostconditionFailed("spined transversal is not an admissible quasi-ideal")
    order = {s: i for i, s in enumerate(d_l.s0)}
    sub_w, to_parent = restrict(w, w0)
    phi = []
    for p in to_parent:
        x, a = legend[p]
        phi.append(order[x])
    if is_morphism(sub_w, sub_l, tuple(phi)) is not None:
        raise PostconditionFailed("spined transversal copy differs from the shared one")
    return BuiltSemigroup(w=w, element_legend=legend, w0=w0, decomposition=D, kind="spined")


# --- semidirect product -----------------------------------------------------------


def validate_action_table(at: ActionTable) -> CheckReport:
    """Check the action laws and the numbered semidirect conditions."""
    entries: list[CheckEntry] = []

    def add(name, applicable, passed=None, witness=None):
        entries.append(CheckEntry(name, applicable, passed, witness))

    prof = abundance_profile(at.s0)
    add("s0_adequate", True, prof.is_adequate)
    add("s0_left_ample", True, bool(prof.is_adequate and prof.is_left_ample))
    bi = band_class(at.i_band)
    add("i_band_left_regular", True, bi.is_band and bi.is_left_regular)
    if not (prof.is_adequate and bi.is_band):
        add("i_transversal", False)
        for name in ("action_total", "action_associative", "action_distributive",
                     "condition_1", "condition_2", "condition_3"):
            add(name, False)
        return CheckReport(tuple(entries))
    oi, wi, _, l_class = _embedding_check(at.s0, at.i_band, at.e0_in_i, "l")
    add("i_transversal", True, oi, wi)

    n0, ni = at.s0.order, at.i_band.order
    total = all((x, e) in at.act and 0 <= at.act[(x, e)] < ni
                for x in range(n0) for e in range(ni))
    add("action_total", True, total,
        None if total else next(((x, e) for x in range(n0) for e in range(ni)
                                 if (x, e) not in at.act), None))
    if not total or not oi:
        for name in ("action_associative", "action_distributive",
                     "condition_1", "condition_2", "condition_3"):
            add(name, False)
        return CheckReport(tuple(entries))

    act = at.act
    t0, ti = at.s0.table, at.i_band.table
    w = next(
        ((x, y, e) for x in range(n0) for y in range(n0) for e in range(ni)
         if act[(t0[x][y], e)] != act[(x, act[(y, e)])]),
        None,
    )
    add("action_associative", True, w is None, w)
    w = next(
        ((x, e, f) for x in range(n0) for e in range(ni) for f in range(ni)
         if act[(x, ti[e][f])] != ti[act[(x, e)]][act[(x, f)]]),
        None,
    )
    add("action_distributive", True, w is None, w)

    sp = star_plus(at.s0)
    ei = at.e0_in_i
    w = next(
        ((x, y) for x in range(n0) for y in range(n0)
         if act[(x, ei[sp.plus[y]])] != ei[sp.plus[t0[x][y]]]),
        None,
    )
    add("condition_1", True, w is None, w)

    L_plus = {x: l_class[sp.plus[x]] for x in range(n0)}
    w = None
    for x in range(n0):
        xp = ei[sp.plus[x]]
        xs = sp.star[x]
        for x1 in range(n0):
            for x2 in range(n0):
                for e1 in L_plus[x1]:
                    for e2 in L_plus[x2]:
                        if ti[xp][act[(x, e1)]] != ti[xp][act[(x, e2)]]:
                            continue
                        if t0[x][x1] != t0[x][x2]:
                            continue
                        if act[(xs, e1)] != act[(xs, e2)] or t0[xs][x1] != t0[xs][x2]:
                            w = (x, x1, x2, e1, e2)
                            break
                    if w:
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    add("condition_2", True, w is None, w)

    w = next(
        ((x, e) for x in range(n0) for e in range(ni)
         if act[(sp.plus[x], e)] != ti[ei[sp.plus[x]]][e]),
        None,
    )
    add("condition_3", True, w is None, w)
    return CheckReport(tuple(entries))


def build_semidirect(at: ActionTable) -> BuiltSemigroup:
    """Semidirect product construction for left adequate semigroups.

    The ambient product on all pairs (e, x) is built first; W is its
    subsemigroup of pairs with e in the L-class of x+. The output is
    re-verified: left adequate and quasi-adequate, with the pairs (x+, x)
    an admissible, left ample adequate transversal isomorphic to s0.
    """
    report = validate_action_table(at)
    if not report.ok("s0_adequate"):
        raise NotAdequate("the acting semigroup must be adequate")
    if not report.ok("s0_left_ample"):
        raise NotLeftAmple("the acting semigroup must be left ample")
    if not report.ok("i_band_left_regular", "i_transversal"):
        raise TransversalInvalid("the band must be left regular with the declared transversal")
    if not report.ok("action_total"):
        raise ActionLawViolation("totality", report.entry("action_total").witness)
    if not report.ok("action_associative"):
        raise ActionLawViolation("(xy).e = x.(y.e)", report.entry("action_associative").witness)
    if not report.ok("action_distributive"):
        raise ActionLawViolation("x.(ef) = (x.e)(x.f)",
                                 report.entry("action_distributive").witness)
    for k in (1, 2):
        if not report.ok(f"condition_{k}"):
            raise ConditionViolation(k, report.entry(f"condition_{k}").witness)

    n0, ni = at.s0.order, at.i_band.order
    pairs = [(e, x) for x in range(n0) for e in range(ni)]
    pindex = {p: i for i, p in enumerate(pairs)}
    t0, ti, act = at.s0.table, at.i_band.table, at.act
    amb_rows = tuple(
        tuple(pindex[(ti[e][act[(x, g)]], t0[x][y])] for (g, y) in pairs)
        for (e, x) in pairs
    )
    try:
        ambient = FiniteSemigroup(order=len(pairs), table=amb_rows)
    except SemigroupError as exc:
        raise PostconditionFailed(f"ambient semidirect product invalid: {exc}") from None

    sp = star_plus(at.s0)
    gi = green_relations(at.i_band)
    ei = at.e0_in_i
    L_plus = {x: tuple(sorted(gi.l.classes[gi.l.class_of[ei[sp.plus[x]]]]))
              for x in range(n0)}
    member = [pindex[(e, x)] for x in range(n0) for e in L_plus[x]]
    try:
        w_raw, to_parent = restrict(ambient, member)
    except SemigroupError as exc:
        raise PostconditionFailed(f"carrier is not closed: {exc}") from None
    legend = tuple(pairs[p] for p in to_parent)
    labels = tuple(f"({at.i_band.label(e)},{at.s0.label(x)})" for (e, x) in legend)
    w = FiniteSemigroup(order=w_raw.order, table=w_raw.table, labels=labels)
    index = {p: i for i, p in enumerate(legend)}

    prof = abundance_profile(w)
    if not prof.is_left_adequate or not prof.is_quasi_adequate:
        raise PostconditionFailed("output is not a left adequate, quasi-adequate semigroup")
    e0_set = {x for x in range(n0) if at.s0.is_idempotent(x)}
    for i, (e, x) in enumerate(legend):
        if w.is_idempotent(i) != (x in e0_set):
            raise PostconditionFailed(f"idempotents of W are not the E0 fibre at {(e, x)}")
    w0 = tuple(index[(ei[sp.plus[x]], x)] for x in range(n0))
    D = verify_adequate_transversal(w, w0)
    tprof = transversal_profile(w, D)
    if not tprof.is_admissible:
        raise PostconditionFailed("embedded transversal is not admissible")
    sub, sub_parent = restrict(w, w0)
    sprof = abundance_profile(sub)
    if not (sprof.is_adequate and sprof.is_left_ample):
        raise PostconditionFailed("embedded transversal is not left ample")
    phi = {wi: x for x, wi in enumerate(w0)}
    if is_morphism(sub, at.s0, tuple(phi[p] for p in sub_parent)) is not None:
        raise PostconditionFailed("transversal copy is not isomorphic to s0")

    c3 = bool(report.entry("condition_3").passed)
    if c3:
        iw, _ = restrict(w, D.i_set)
        if find_isomorphism(iw, at.i_band) is None:
            raise PostconditionFailed("I(W) is not isomorphic to the acting band")
    return BuiltSemigroup(
        w=w, element_legend=legend, w0=w0, decomposition=D,
        kind="semidirect", condition_flags=(("condition_3", c3),), report=report,
    )


# --- regular specialisations --------------------------------------------------


def check_section4_specialization(b: BuiltSemigroup) -> CheckReport:
    """Regular-case checks: an inverse transversal seed forces an orthodox
    (or, for semidirect builds, left inverse) output, and conversely an
    orthodox output forces an inverse seed.
    """
    entries: list[CheckEntry] = []

    def add(name, applicable, passed=None, witness=None):
        entries.append(CheckEntry(name, applicable, passed, witness))

    sub, _ = restrict(b.w, b.w0)
    s0_inverse = abundance_profile(sub).is_inverse
    wprof = abundance_profile(b.w)
    add("s0_inverse", True, s0_inverse)
    add("orthodox_iff_s0_inverse", True, wprof.is_orthodox == s0_inverse,
        (wprof.is_orthodox, s0_inverse))
    if not s0_inverse:
        add("w_orthodox", False)
        add("w_left_inverse", False)
        add("inverse_transversal", False)
        return CheckReport(tuple(entries))

    if b.kind == "semidirect":
        ew, _ = restrict(b.w, b.w.idempotents())
        li = wprof.is_regular and band_class(ew).is_left_regular
        add("w_left_inverse", True, li)
        add("w_orthodox", False)
    else:
        add("w_orthodox", True, wprof.is_orthodox)
        add("w_left_inverse", False)

    reg = regular_and_inverses(b.w)
    w0_set = set(b.w0)
    bad = next(
        (x for x in range(b.w.order)
         if len([y for y in reg.inverses[x] if y in w0_set]) != 1),
        None,
    )
    add("inverse_transversal", True, bad is None, None if bad is None else (bad,))
    return CheckReport(tuple(entries))
