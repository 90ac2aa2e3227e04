"""Pipeline: preprocessing, per-edge dispatch, assembly of the final set.

The map is translated so both coordinates carry constant terms, the
Minkowski sum of the Newton polygons is classified, semi-origin infinity
edges contribute parametric or line components directly, pertinent infinity
edges go through the toric transform and the multiplicity-set machinery,
and everything is deduplicated and translated back.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .extension import ExtContext
from .multiplicity import (
    CurveComponent,
    EdgeSystem,
    classify_defining,
    discriminant_curve,
    emptiness_test,
    fulton_condition_polynomials,
    ms_fulton,
    ms_resultant,
    norm_form,
    _split_factors,
)
from .poly import (
    PolyError,
    QQ,
    SparsePoly,
    exact_div,
    gcd_multivar,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    squarefree_part_multivar,
)
from .polytope import (
    EdgeRecord,
    LatticePolygon,
    apply_transform,
    compute_lattice_basis,
    minkowski_sum,
    mixed_volume,
    newton_polygon,
    test_number_of_roots,
    toric_transform,
)
from .realroots import RealAlgebraic, compare, isolate_real_roots

FIELD_REAL = "R"
FIELD_COMPLEX = "C"


@dataclass(frozen=True)
class Options:
    mv_optimization: bool = True
    method: str = "resultant"  # or "fulton"
    seed: int = 0
    emit_implicit: bool = False


@dataclass(frozen=True)
class Provenance:
    edge_index: int
    endpoints: tuple
    flags: dict
    source: str  # semi-origin | origin | pertinent
    method: str
    rho_index: int | None = None


@dataclass
class Component:
    kind: str  # point | vertical-line | horizontal-line | implicit-curve | parametric-curve
    defining: SparsePoly | None
    provenance: list[Provenance]
    realness: str
    minpoly: SparsePoly | None = None
    rho: RealAlgebraic | None = None
    param: tuple[SparsePoly, SparsePoly] | None = None
    implicit: SparsePoly | None = None


@dataclass
class JelonekSet:
    components: list[Component]
    translation: tuple[int, int]
    field: str
    mv_skipped: bool
    edges: list[EdgeRecord]


class NotDominantError(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def jacobian_det(f1: SparsePoly, f2: SparsePoly) -> SparsePoly:
    return f1.derivative("x1") * f2.derivative("x2") - f1.derivative("x2") * f2.derivative("x1")


def check_dominant(f1: SparsePoly, f2: SparsePoly) -> tuple[bool, str]:
    """Dominance: nonzero Jacobian determinant and independent polygons."""
    if f1.is_zero() or f2.is_zero():
        return False, "a coordinate polynomial is zero"
    jac = jacobian_det(f1, f2)
    if jac.is_zero():
        return False, "Jacobian determinant is identically zero"
    A1 = _polygon_with_origin(f1)
    A2 = _polygon_with_origin(f2)
    if mixed_volume(A1, A2) == 0:
        return False, "Newton polygons are dependent (mixed volume 0)"
    return True, "dominant"


def _polygon_with_origin(f: SparsePoly) -> LatticePolygon:
    poly = newton_polygon(f)
    return LatticePolygon.from_points(list(poly.vertices) + [(0, 0)])


def preprocess_translate(f1: SparsePoly, f2: SparsePoly, seed: int = 0) -> tuple[SparsePoly, SparsePoly, tuple[int, int]]:
    """Shift the map by a constant vector so both constant terms are nonzero."""
    rng = random.Random(seed)
    shift = []
    for f in (f1, f2):
        c = f.eval_rational({"x1": QQ(0), "x2": QQ(0)}).constant_value()
        if c != 0:
            shift.append(0)
        else:
            a = rng.randrange(1, 9)
            shift.append(a)
    a1, a2 = shift
    return f1 + SparsePoly.constant(a1, f1.vars), f2 + SparsePoly.constant(a2, f2.vars), (a1, a2)


# -- semi-origin edges ---------------------------------------------------------


def _edge_parameter_direction(edge: EdgeRecord) -> tuple[int, int]:
    """Primitive direction for the common parameter monomial t = x^e.

    Oriented away from the origin when a summand contains it, so that
    restricted polynomials expand with their nonzero constant term first.
    """
    p, q = edge.endpoints
    d = (q[0] - p[0], q[1] - p[1])
    from math import gcd

    g = gcd(abs(d[0]), abs(d[1]))
    e = (d[0] // g, d[1] // g)
    for face in (edge.summand1, edge.summand2):
        if len(face) == 2 and _face_has_origin(face):
            other = face[1] if face[0] == (0, 0) else face[0]
            if other == (0, 0):
                continue
            # orient from the origin into the quadrant
            if other[0] * e[0] + other[1] * e[1] < 0:
                e = (-e[0], -e[1])
            return e
    # no origin-bearing one-dimensional summand: orient into the nonnegative span
    if e[0] < 0 or (e[0] == 0 and e[1] < 0):
        e = (-e[0], -e[1])
    return e


def _face_has_origin(face) -> bool:
    if len(face) == 1:
        return face[0] == (0, 0)
    (x0, y0), (x1, y1) = face
    if x0 * y1 - x1 * y0 != 0:
        return False
    return min(x0, x1) <= 0 <= max(x0, x1) and min(y0, y1) <= 0 <= max(y0, y1)


def _restricted_coefficients(f: SparsePoly, face, e: tuple[int, int]) -> list[Fraction]:
    """Coefficients a_0..a_k of f restricted to the face, along direction e."""
    pts = list(face)
    if len(pts) == 1:
        base = pts[0]
        steps = 0
    else:
        k0 = pts[0][0] * e[0] + pts[0][1] * e[1]
        k1 = pts[1][0] * e[0] + pts[1][1] * e[1]
        if k0 > k1:
            pts = [pts[1], pts[0]]
        base = pts[0]
        span = (pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])
        steps = span[0] // e[0] if e[0] != 0 else span[1] // e[1]
        if steps < 1 or (span[0] != steps * e[0]) or (span[1] != steps * e[1]):
            raise PolyError("face not aligned with the parameter direction")
    coeffs = [QQ(0)] * (steps + 1)
    i1, i2 = f._idx("x1"), f._idx("x2")
    for exps, c in f.terms.items():
        p = (exps[i1], exps[i2])
        rel = (p[0] - base[0], p[1] - base[1])
        # p = base + j*e for integer j in range?
        j = None
        if e[0] != 0 and rel[0] % e[0] == 0:
            jj = rel[0] // e[0]
            if rel == (jj * e[0], jj * e[1]):
                j = jj
        elif e[0] == 0 and rel[0] == 0 and e[1] != 0 and rel[1] % e[1] == 0:
            j = rel[1] // e[1]
        if j is not None and 0 <= j <= steps:
            coeffs[j] += c
    if coeffs[0] == 0:
        raise PolyError("face base vertex carries no coefficient")
    return coeffs


def _coeffs_to_poly(coeffs, var: str, variables) -> SparsePoly:
    p = SparsePoly.zero(variables)
    t = SparsePoly.variable(var, variables)
    for k, c in enumerate(coeffs):
        if c:
            p = p + SparsePoly.constant(c, variables) * t ** k
    return p


def _linear_image(P: SparsePoly, Q: SparsePoly) -> SparsePoly | None:
    """If the parametric image (P(t), Q(t)) is a line, its defining equation."""
    y1 = SparsePoly.variable("y1", P.vars)
    y2 = SparsePoly.variable("y2", P.vars)
    dP, dQ = P.degree("t"), Q.degree("t")
    if dP <= 0 and dQ <= 0:
        return None  # a point, handled separately
    if dP <= 0:
        return (y1 - P).normalized()
    if dQ <= 0:
        return (y2 - Q).normalized()
    # line iff Q = u*P + v for rational u, v
    if dP != dQ:
        return None
    u = Q.coeff_of("t", dQ).constant_value() / P.coeff_of("t", dP).constant_value()
    rem = Q - P.scale(u)
    if rem.degree("t") > 0:
        return None
    v = rem.constant_value() if not rem.is_zero() else QQ(0)
    return (y2 - y1.scale(u) - SparsePoly.constant(v, P.vars)).normalized()


def semi_origin_components(f1: SparsePoly, f2: SparsePoly, edge: EdgeRecord, fld: str,
                           method: str = "resultant") -> list[Component]:
    """Components contributed by a semi-origin infinity edge."""
    if not edge.semi_origin or not edge.infinity:
        return []
    e = _edge_parameter_direction(edge)
    a_coeffs = _restricted_coefficients(f1, edge.summand1, e)
    b_coeffs = _restricted_coefficients(f2, edge.summand2, e)
    vars_ = f1.vars
    P1 = _coeffs_to_poly(a_coeffs, "t", vars_)
    P2 = _coeffs_to_poly(b_coeffs, "t", vars_)
    o1 = _face_has_origin(edge.summand1)
    o2 = _face_has_origin(edge.summand2)
    prov = Provenance(edge_index=edge.index, endpoints=edge.endpoints, flags=edge.flags(),
                      source="origin" if edge.origin else "semi-origin", method=method)
    out: list[Component] = []
    if o1 and o2:
        line = _linear_image(P1, P2)
        if line is not None:
            out.append(Component(kind=classify_defining(line), defining=line,
                                 provenance=[prov], realness=_semi_realness(fld)))
        else:
            out.append(Component(kind="parametric-curve", defining=None, param=(P1, P2),
                                 provenance=[prov], realness=_semi_realness(fld)))
        return out
    if not o1:
        # roots of P1 give horizontal lines y2 = P2(tau)
        out.extend(_line_family(P1, P2, "y2", fld, prov, vars_))
    if not o2:
        out.extend(_line_family(P2, P1, "y1", fld, prov, vars_))
    return out


def _semi_realness(fld: str) -> str:
    return "confirmed-nonempty" if fld == FIELD_REAL else "not-applicable"


def _line_family(P: SparsePoly, Q: SparsePoly, target_var: str, fld: str,
                 prov: Provenance, vars_) -> list[Component]:
    """Lines {target = Q(tau)} over the nonzero roots tau of P in the field."""
    out: list[Component] = []
    if P.degree("t") < 1:
        return out
    yv = SparsePoly.variable(target_var, vars_)
    if fld == FIELD_COMPLEX:
        R = resultant(yv - Q, P, "t")
        if R.is_zero():
            raise PolyError("implicit line family collapsed")
        if R.degree(target_var) < 1:
            return out
        defining = squarefree_part(R, target_var)
        out.append(Component(kind=classify_defining(defining), defining=defining,
                             provenance=[prov], realness="not-applicable"))
        return out
    # real field: one line per nonzero real root, exact coefficients
    for idx, (root, _) in enumerate(isolate_real_roots(P, "t")):
        if root.cmp_fraction(QQ(0)) == 0:
            continue
        if root.is_rational():
            val = Q.eval_rational({"t": root.as_fraction()}).constant_value()
            defining = (yv - SparsePoly.constant(val, vars_)).normalized()
            out.append(Component(kind=classify_defining(defining), defining=defining,
                                 provenance=[replace(prov, rho_index=idx)],
                                 realness="confirmed-nonempty", rho=root))
        else:
            minpoly = root.minpoly_sparse("a", vars_)
            a = SparsePoly.variable("a", vars_)
            Qa = Q.subs_poly("t", a)
            ctx = ExtContext(minpoly, "a")
            defining = ctx.reduce(yv - Qa)
            out.append(Component(kind="horizontal-line" if target_var == "y2" else "vertical-line",
                                 defining=defining, minpoly=minpoly,
                                 provenance=[replace(prov, rho_index=idx)],
                                 realness="confirmed-nonempty", rho=root))
    return out


# -- pertinent edges -----------------------------------------------------------


def edge_transform(f1: SparsePoly, f2: SparsePoly, edge: EdgeRecord, A: LatticePolygon) -> EdgeSystem:
    """Toric transform of f - y along a pertinent edge, plus boundary data."""
    if not edge.pertinent:
        raise PolyError("edge transform requires a pertinent edge")
    basis = compute_lattice_basis(edge, A)
    tr = toric_transform(basis, edge)
    y1 = SparsePoly.variable("y1", f1.vars)
    y2 = SparsePoly.variable("y2", f1.vars)
    g1 = apply_transform(f1 - y1, tr.U)
    g2 = apply_transform(f2 - y2, tr.U)
    s1 = g1.eval_rational({"z2": QQ(0)})
    s2 = g2.eval_rational({"z2": QQ(0)})
    if s1.vars_present() & {"y1", "y2"} or s2.vars_present() & {"y1", "y2"}:
        raise PolyError("pertinent edge slice depends on the target variables")
    if s1.is_zero() or s2.is_zero():
        raise PolyError("degenerate boundary slice")
    g = gcd_multivar(s1, s2)
    m = g.min_degree("z1")
    if m > 0:
        g = exact_div(g, SparsePoly.monomial({"z1": m}, 1, g.vars))
    skip = g.degree("z1") < 1
    jac = g1.derivative("z1") * g2.derivative("z2") - g1.derivative("z2") * g2.derivative("z1")
    return EdgeSystem(g1=g1, g2=g2, g=g.normalized(), transform=tr, edge=edge, skip=skip, jacobian=jac)


def _pertinent_components(sys: EdgeSystem, fld: str, method: str) -> list[CurveComponent]:
    if sys.skip:
        return []
    if method == "fulton":
        return _ms_fulton_all(sys, fld)
    return ms_resultant(sys, fld)


def _ms_fulton_all(sys: EdgeSystem, fld: str) -> list[CurveComponent]:
    """Fulton-based multiplicity sets for all boundary roots.

    Real field: per real root.  Complex field: conditions are gathered over
    every factor of the squarefree part of g and pushed down to Q by norm
    forms, to compare against the resultant route.
    """
    out: list[CurveComponent] = []
    if fld == FIELD_REAL:
        for factor, _ in squarefree_decomposition(sys.g, "z1"):
            for root, _m in isolate_real_roots(factor, "z1"):
                if root.cmp_fraction(QQ(0)) == 0:
                    continue
                out.extend(ms_fulton(sys, root))
        return out
    # complex: dynamic splitting over the full squarefree part
    from .extension import with_dynamic_splitting
    from .multiplicity import _rename_z1_to_a

    gsf = squarefree_part(sys.g, "z1")
    if gsf.degree("z1") < 1:
        return []
    mp = _rename_z1_to_a(gsf)
    z1 = SparsePoly.variable("z1", sys.g1.vars)
    a = SparsePoly.variable("a", sys.g1.vars)
    G1 = sys.g1.subs_poly("z1", z1 + a)
    G2 = sys.g2.subs_poly("z1", z1 + a)
    results = with_dynamic_splitting(mp, "a", lambda ctx: fulton_condition_polynomials(G1, G2, ctx))
    collected: list[SparsePoly] = []
    for m_factor, (_, conds) in results:
        for c in conds:
            collected.append(norm_form(c.normalized(), m_factor))
    seen = set()
    for c in collected:
        for f in _split_factors(c):
            if str(f) in seen:
                continue
            seen.add(str(f))
            out.append(CurveComponent(defining=f, kind=classify_defining(f), realness="not-applicable"))
    return out


# -- orchestration ---------------------------------------------------------------


def sparse_jelonek_2(f1: SparsePoly, f2: SparsePoly, fld: str = FIELD_COMPLEX,
                     options: Options = Options()) -> JelonekSet:
    """The set of non-properness of (f1, f2), decomposed per edge."""
    ok, reason = check_dominant(f1, f2)
    if not ok:
        raise NotDominantError(reason)
    t1, t2, shift = preprocess_translate(f1, f2, options.seed)
    A1 = newton_polygon(t1)
    A2 = newton_polygon(t2)
    A, records = minkowski_sum(A1, A2)
    if A.dim() < 2:
        raise NotDominantError("Minkowski sum is degenerate")
    components: list[Component] = []
    for edge in records:
        if edge.semi_origin and edge.infinity:
            components.extend(semi_origin_components(t1, t2, edge, fld, options.method))
    pertinent = [e for e in records if e.pertinent and e.infinity]
    mv_skipped = False
    pending: list[tuple[EdgeSystem, CurveComponent]] = []
    if pertinent:
        if options.mv_optimization and test_number_of_roots(t1, t2, options.seed) is True:
            mv_skipped = True
        else:
            for edge in pertinent:
                sys = edge_transform(t1, t2, edge, A)
                prov = Provenance(edge_index=edge.index, endpoints=edge.endpoints,
                                  flags=edge.flags(), source="pertinent", method=options.method)
                for cc in _pertinent_components(sys, fld, options.method):
                    comp = Component(kind=cc.kind, defining=cc.defining, provenance=[prov],
                                     realness=cc.realness, minpoly=cc.minpoly, rho=cc.rho)
                    components.append(comp)
                    if fld == FIELD_REAL:
                        pending.append((sys, comp))
    if fld == FIELD_REAL and pending:
        _run_emptiness_phase(t1, t2, components, pending, options.seed)
    merged = _merge_components(components)
    final = [_back_translate(c, shift) for c in merged]
    return JelonekSet(components=final, translation=shift, field=fld,
                      mv_skipped=mv_skipped, edges=records)


def _run_emptiness_phase(f1, f2, components: list[Component],
                         pending: list[tuple[EdgeSystem, Component]], seed: int) -> None:
    """Two-phase contract: all components first, then decide realness."""
    cache: dict[str, SparsePoly | None] = {}

    def disc_supplier():
        if "disc" not in cache:
            try:
                cache["disc"] = discriminant_curve(f1, f2)
            except PolyError:
                cache["disc"] = None
        return cache["disc"]

    norms = []
    for c in components:
        try:
            norms.append((c, _component_norm(c)))
        except PolyError:
            norms.append((c, None))
    for sys, comp in pending:
        mine = _component_norm(comp)
        others = [n for c, n in norms if c is not comp and n is not None and n != mine]
        cc = CurveComponent(defining=comp.defining, kind=comp.kind, realness=comp.realness,
                            minpoly=comp.minpoly, rho=comp.rho)
        comp.realness = emptiness_test(cc, sys, f1, f2, others, disc_supplier, seed)


def _component_norm(c: Component) -> SparsePoly | None:
    if c.defining is None:
        if c.param is None:
            return None
        return implicitize_param(*c.param)
    return norm_form(c.defining, c.minpoly)


def _merge_components(components: list[Component]) -> list[Component]:
    out: list[Component] = []
    for c in components:
        target = None
        for existing in out:
            if _same_component(existing, c):
                target = existing
                break
        if target is None:
            out.append(c)
        else:
            target.provenance.extend(c.provenance)
            if c.realness == "confirmed-nonempty" or target.realness in ("undetermined",):
                if c.realness != "undetermined":
                    target.realness = c.realness
    return out


def _same_component(a: Component, b: Component) -> bool:
    if (a.param is None) != (b.param is None):
        # a parametric line may coincide with an explicit line
        pa = a.defining if a.defining is not None else None
        pb = b.defining if b.defining is not None else None
        if pa is None or pb is None:
            return False
        return pa.normalized() == pb.normalized() and _same_extension(a, b)
    if a.param is not None and b.param is not None:
        return a.param[0] == b.param[0] and a.param[1] == b.param[1]
    if a.defining is None or b.defining is None:
        return False
    if a.defining.normalized() != b.defining.normalized():
        return False
    return _same_extension(a, b)


def _same_extension(a: Component, b: Component) -> bool:
    if (a.minpoly is None) != (b.minpoly is None):
        return False
    if a.minpoly is not None:
        if a.minpoly.normalized() != b.minpoly.normalized():
            return False
        if a.rho is not None and b.rho is not None and compare(a.rho, b.rho) != 0:
            return False
    return True


def _back_translate(c: Component, shift: tuple[int, int]) -> Component:
    a1, a2 = shift
    if a1 == 0 and a2 == 0:
        return c
    y1 = SparsePoly.variable("y1", DEFAULT_UNIVERSE_OF(c))
    y2 = SparsePoly.variable("y2", DEFAULT_UNIVERSE_OF(c))
    defining = c.defining
    if defining is not None:
        defining = defining.subs_poly("y1", y1 + SparsePoly.constant(a1, defining.vars))
        defining = defining.subs_poly("y2", y2 + SparsePoly.constant(a2, defining.vars))
        defining = defining.normalized() if c.minpoly is None else defining
    param = c.param
    if param is not None:
        P, Q = param
        param = (P - SparsePoly.constant(a1, P.vars), Q - SparsePoly.constant(a2, Q.vars))
    implicit = c.implicit
    if implicit is not None:
        implicit = implicit.subs_poly("y1", y1 + SparsePoly.constant(a1, implicit.vars))
        implicit = implicit.subs_poly("y2", y2 + SparsePoly.constant(a2, implicit.vars)).normalized()
    return replace_component(c, defining=defining, param=param, implicit=implicit)


def DEFAULT_UNIVERSE_OF(c: Component):
    if c.defining is not None:
        return c.defining.vars
    if c.param is not None:
        return c.param[0].vars
    from .poly import DEFAULT_VARS

    return DEFAULT_VARS


def replace_component(c: Component, **kw) -> Component:
    data = dict(kind=c.kind, defining=c.defining, provenance=c.provenance, realness=c.realness,
                minpoly=c.minpoly, rho=c.rho, param=c.param, implicit=c.implicit)
    data.update(kw)
    return Component(**data)


# -- baseline, degree bound, implicitization ------------------------------------


def jelonek_2_baseline(f1: SparsePoly, f2: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """The classical product of extreme resultant coefficients.

    Returns (raw product, normalized squarefree part); its zero locus
    contains the complex set of non-properness.
    """
    ok, reason = check_dominant(f1, f2)
    if not ok:
        raise NotDominantError(reason)
    y1 = SparsePoly.variable("y1", f1.vars)
    y2 = SparsePoly.variable("y2", f1.vars)
    G1 = f1 - y1
    G2 = f2 - y2
    r1 = resultant(G1, G2, "x2")
    r2 = resultant(G1, G2, "x1")
    if r1.is_zero() or r2.is_zero():
        raise PolyError("baseline resultant vanished")
    p1 = r1.leading_coeff_wrt("x1") if r1.degree("x1") > 0 else r1
    p2 = r2.leading_coeff_wrt("x2") if r2.degree("x2") > 0 else r2
    raw = p1 * p2
    if raw.is_constant():
        return raw, SparsePoly.constant(1, raw.vars)
    return raw, squarefree_part_multivar(raw)


def generic_fiber_size(f1: SparsePoly, f2: SparsePoly, seed: int = 0) -> int:
    """Cardinality of a generic fiber, certified at a verified-generic point."""
    from .realroots import SHEAR_CANDIDATES, _resultant_with_penultimate, _shear

    rng = random.Random(seed)
    for attempt in range(24):
        q1 = QQ(rng.randrange(-99, 100), rng.randrange(1, 9))
        q2 = QQ(rng.randrange(-99, 100), rng.randrange(1, 9))
        F1 = f1 - SparsePoly.constant(q1, f1.vars)
        F2 = f2 - SparsePoly.constant(q2, f1.vars)
        if not gcd_multivar(F1, F2).is_constant():
            continue
        for s in SHEAR_CANDIDATES:
            S1, S2 = _shear(F1, s), _shear(F2, s)
            bad = False
            for F in (S1, S2):
                d = F.degree("x2")
                if d <= 0 or not F.coeff_of("x2", d).is_constant():
                    bad = True
            if bad:
                continue
            R, penult = _resultant_with_penultimate(S1, S2, "x2")
            if R.is_zero() or R.is_constant():
                continue
            if penult.degree("x2") != 1:
                continue
            c1 = penult.coeff_of("x2", 1)
            sf = squarefree_part(R, "x1")
            if sf.degree("x1") != R.degree("x1"):
                continue  # generic fibers must be simple; resample
            if not c1.is_constant() and gcd_multivar(sf, c1).degree("x1") > 0:
                continue
            return R.degree("x1")
    raise PolyError("could not certify a generic fiber")


def degree_bound(f1: SparsePoly, f2: SparsePoly, seed: int = 0) -> Fraction:
    """Upper bound on the degree of the complex set of non-properness."""
    ok, reason = check_dominant(f1, f2)
    if not ok:
        raise NotDominantError(reason)
    mu = generic_fiber_size(f1, f2, seed)
    d1 = f1.total_degree()
    d2 = f2.total_degree()
    return QQ(d1 * d2 - mu, min(d1, d2))


def implicitize_param(P: SparsePoly, Q: SparsePoly) -> SparsePoly:
    """Implicit equation of the parametric curve (y1, y2) = (P(t), Q(t))."""
    if P.degree("t") <= 0 and Q.degree("t") <= 0:
        raise PolyError("constant parametrization")
    y1 = SparsePoly.variable("y1", P.vars)
    y2 = SparsePoly.variable("y2", P.vars)
    R = resultant(y1 - P, y2 - Q, "t")
    if R.is_zero():
        raise PolyError("implicitization collapsed")
    return squarefree_part_multivar(R)
