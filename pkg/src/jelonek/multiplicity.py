"""Per-edge multiplicity sets, intersection multiplicities, emptiness tests.

Given the toric transform of a map along a pertinent edge, the locus of
target points that raise the multiplicity of a boundary solution (rho, 0)
is carved out by two resultant eliminations and a gcd.  Over the reals a
component of that locus may still fail to attract real escapes; a
three-valued emptiness test settles each component by exact counting, never
by numerics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .extension import (
    ExtContext,
    ZeroDivisor,
    ext_exact_div,
    ext_gcd_multivar,
    with_dynamic_splitting,
)
from .poly import (
    PolyError,
    QQ,
    SparsePoly,
    content_wrt,
    exact_div,
    gcd_multivar,
    resultant,
    squarefree_decomposition,
    squarefree_part_multivar,
)
from .realroots import (
    RealAlgebraic,
    compare,
    count_real_solutions,
    count_real_solutions_param,
    isolate_real_roots,
    rational_between,
    rational_roots,
    root_bound,
    sign_at,
    to_dense,
    _root_in,
)

FULTON_INFINITY = float("inf")


@dataclass(frozen=True)
class EdgeSystem:
    """The transformed pair along a pertinent edge plus its boundary data."""

    g1: SparsePoly
    g2: SparsePoly
    g: SparsePoly  # gcd of the z2 = 0 slices, in Z[z1]
    transform: object
    edge: object
    skip: bool
    jacobian: SparsePoly


@dataclass(frozen=True)
class CurveComponent:
    defining: SparsePoly  # in (y1, y2), possibly with the extension variable
    kind: str  # vertical-line | horizontal-line | general-curve | empty
    realness: str  # confirmed-nonempty | confirmed-empty | undetermined | not-applicable
    minpoly: SparsePoly | None = None  # minimal polynomial of the extension variable
    rho: RealAlgebraic | None = None


def classify_defining(p: SparsePoly) -> str:
    has_y1 = p.degree("y1") > 0
    has_y2 = p.degree("y2") > 0
    if has_y1 and not has_y2:
        return "vertical-line" if p.degree("y1") == 1 else "general-curve"
    if has_y2 and not has_y1:
        return "horizontal-line" if p.degree("y2") == 1 else "general-curve"
    return "general-curve"


def _split_factors(J: SparsePoly) -> list[SparsePoly]:
    """Squarefree grouping of a multivariate defining polynomial over Q."""
    out: list[SparsePoly] = []
    rest = J.normalized()
    for var in ("y1", "y2"):
        if rest.is_constant():
            break
        others = [v for v in rest.vars if v != var]
        cont, prim = content_wrt(rest, [var])
        # cont is purely in var: univariate squarefree split
        if not cont.is_constant():
            for f, _ in squarefree_decomposition(cont, var):
                out.append(f.normalized())
        rest = prim
    if not rest.is_constant():
        out.append(squarefree_part_multivar(rest))
    return out


def ms_resultant(sys: EdgeSystem, fld: str) -> list[CurveComponent]:
    """The per-edge multiplicity set as curve components.

    Complex field: one batch of components over Q via the Poisson-style
    resultant against g.  Real field: one component per real root class of
    g, with coefficients in the corresponding extension when needed;
    realness verdicts are left undetermined for the later emptiness phase.
    """
    if sys.skip or sys.g.degree("z1") < 1:
        return []
    g1, g2 = sys.g1, sys.g2
    R1 = resultant(g1, g2, "z2")
    R2 = resultant(g1, g2, "z1")
    if R1.is_zero() or R2.is_zero():
        raise PolyError("transformed system not zero-dimensional for generic y")
    _, R12 = content_wrt(R1, ["z1"])
    R21, R22 = content_wrt(R2, ["z2"])
    if set(R21.vars_present()) - {"z2"}:
        raise PolyError("z2 content split failed")
    J2 = R22.eval_rational({"z2": 0})
    if J2.is_zero():
        raise PolyError("residual factor vanishes at z2 = 0")
    gsf = squarefree_from(sys.g)
    if fld == "C":
        H = resultant(R12, gsf, "z1") if R12.degree("z1") >= 0 else R12
        if H.is_zero():
            raise PolyError("Poisson resultant vanished")
        J = gcd_multivar(J2, H)
        if J.is_constant():
            return []
        return [CurveComponent(defining=f, kind=classify_defining(f), realness="not-applicable")
                for f in _split_factors(J)]
    # real branch: group real roots of g by squarefree factor
    components: list[CurveComponent] = []
    for factor, _ in squarefree_decomposition(sys.g, "z1"):
        real_roots = [r for r, _ in isolate_real_roots(factor, "z1")]
        if not real_roots:
            continue
        rational = [r for r in real_roots if r.is_rational()]
        irrational = [r for r in real_roots if not r.is_rational()]
        for r in rational:
            rho = r.as_fraction()
            J1 = R12.eval_rational({"z1": rho})
            if J1.is_zero():
                raise PolyError("content split left a vanishing specialization")
            J = gcd_multivar(J1, J2)
            if J.is_constant():
                continue
            for f in _split_factors(J):
                components.append(CurveComponent(
                    defining=f, kind=classify_defining(f), realness="undetermined",
                    rho=RealAlgebraic.from_rational(rho)))
        if irrational:
            mp = factor
            # remove rational linear factors so the modulus matches the
            # irrational roots only
            for r in rational:
                z1 = SparsePoly.variable("z1", factor.vars)
                lin = (z1 - SparsePoly.constant(r.as_fraction(), factor.vars)).normalized()
                mp = exact_div(mp, lin)
            mp = _rename_z1_to_a(mp.normalized())
            J1 = _rename_z1_to_a(R12)
            results = []
            for m_factor, J in gcd_mod_minpoly_components(J1, J2, mp):
                for r in irrational:
                    if _root_in(to_dense(_rename_a_to_z1(m_factor), "z1"), r.lo, r.hi):
                        if J.degree("y1") <= 0 and J.degree("y2") <= 0:
                            continue
                        components.append(CurveComponent(
                            defining=J, kind=classify_defining(J),
                            realness="undetermined", minpoly=m_factor, rho=r))
    return components


def gcd_mod_minpoly_components(J1: SparsePoly, J2: SparsePoly, minpoly: SparsePoly):
    out = with_dynamic_splitting(minpoly, "a", lambda ctx: ext_gcd_multivar(J1, J2, ctx))
    return [(m, g) for m, g in out]


def squarefree_from(g: SparsePoly) -> SparsePoly:
    from .poly import squarefree_part

    return squarefree_part(g, "z1")


def _rename_z1_to_a(p: SparsePoly) -> SparsePoly:
    i_from, i_to = p.vars.index("z1"), p.vars.index("a")
    out = {}
    for exps, c in p.terms.items():
        if exps[i_to] != 0:
            raise PolyError("extension variable already in use")
        e = list(exps)
        e[i_to] = e[i_from]
        e[i_from] = 0
        out[tuple(e)] = c
    return SparsePoly(out, p.vars)


def _rename_a_to_z1(p: SparsePoly) -> SparsePoly:
    i_from, i_to = p.vars.index("a"), p.vars.index("z1")
    out = {}
    for exps, c in p.terms.items():
        e = list(exps)
        e[i_to] = e[i_from]
        e[i_from] = 0
        out[tuple(e)] = c
    return SparsePoly(out, p.vars)


# -- Fulton's recursive intersection multiplicity ------------------------------


def fulton_multiplicity(F: SparsePoly, G: SparsePoly, pair=("z1", "z2"), ctx: ExtContext | None = None):
    """Intersection multiplicity of the curves F = 0, G = 0 at the origin.

    Returns a nonnegative integer, or infinity when F and G share a
    component through the origin.  Coefficients may live in Q or in a
    simple extension (supply ``ctx``).
    """
    u, v = pair

    def red(p):
        return ctx.reduce(p) if ctx is not None else p

    def origin_value(p):
        return red(p.eval_rational({u: QQ(0), v: QQ(0)}))

    F, G = red(F), red(G)
    if F.is_zero() or G.is_zero():
        return FULTON_INFINITY
    if not origin_value(F).is_zero() or not origin_value(G).is_zero():
        return 0
    h = ext_gcd_multivar(F, G, ctx) if ctx is not None else gcd_multivar(F, G)
    if not h.is_constant() and origin_value(h).is_zero():
        return FULTON_INFINITY
    mult = 0
    guard = 0
    while True:
        guard += 1
        if guard > 5000:
            raise PolyError("multiplicity recursion failed to terminate")
        f00 = origin_value(F)
        g00 = origin_value(G)
        if not f00.is_zero() or not g00.is_zero():
            return mult
        pF = red(F.eval_rational({v: QQ(0)}))
        pG = red(G.eval_rational({v: QQ(0)}))
        if pF.is_zero() and pG.is_zero():
            return FULTON_INFINITY
        if pF.is_zero():
            F = _divide_monomial(F, v)
            nu = pG.min_degree(u)
            mult += nu
            continue
        if pG.is_zero():
            F, G = G, F
            continue
        dF, dG = pF.degree(u), pG.degree(u)
        if dF > dG:
            F, G = G, F
            continue
        lcF = pF.coeff_of(u, dF)
        lcG = pG.coeff_of(u, dG)
        mono = SparsePoly.monomial({u: dG - dF}, 1, F.vars)
        if ctx is None:
            G = G * lcF - F * lcG * mono
        else:
            G = red(G * lcF - F * lcG * mono)
        if G.is_zero():
            return FULTON_INFINITY
        F, G = G, F


def _divide_monomial(p: SparsePoly, var: str) -> SparsePoly:
    i = p._idx(var)
    out = {}
    for exps, c in p.terms.items():
        if exps[i] < 1:
            raise PolyError("not divisible by the variable")
        e = list(exps)
        e[i] -= 1
        out[tuple(e)] = c
    return SparsePoly(out, p.vars)


# -- symbolic Fulton recursion: the multiplicity set ---------------------------


def _strip_parameter_content(p: SparsePoly, zvars, ctx: ExtContext | None) -> SparsePoly:
    """Primitive part of p with respect to the z-monomials: divide out the
    gcd of the coefficient polynomials in (y1, y2[, a])."""
    groups: dict[tuple[int, ...], dict] = {}
    zidx = [p.vars.index(z) for z in zvars]
    for exps, c in p.terms.items():
        key = tuple(exps[i] for i in zidx)
        inner = list(exps)
        for i in zidx:
            inner[i] = 0
        groups.setdefault(key, {})[tuple(inner)] = c
    coeffs = [SparsePoly(m, p.vars) for m in groups.values()]
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = ext_gcd_multivar(acc, c, ctx) if ctx is not None else gcd_multivar(acc, c)
        if acc.is_constant():
            return p
    if acc.is_constant():
        return p
    return ext_exact_div(p, acc, ctx) if ctx is not None else exact_div(p, acc)


def fulton_condition_polynomials(G1: SparsePoly, G2: SparsePoly, ctx: ExtContext | None = None,
                                 zvars=("z1", "z2")) -> tuple[int, list[SparsePoly]]:
    """Generic multiplicity at the z-origin plus the jump-condition loci.

    Runs the reduction symbolically over the parameter field: the generic
    branch computes the multiplicity valid off a finite set of condition
    curves, and every y-dependent coefficient whose vanishing would raise
    the multiplicity is emitted as a condition polynomial.
    """
    u, v = zvars

    def red(p):
        return ctx.reduce(p) if ctx is not None else p

    def is_param_constant(p):
        return not (p.vars_present() & {"y1", "y2"})

    def origin_value(p):
        return red(p.eval_rational({u: QQ(0), v: QQ(0)}))

    F, G = red(G1), red(G2)
    h = ext_gcd_multivar(F, G, ctx) if ctx is not None else gcd_multivar(F, G)
    if not h.is_constant() and origin_value(h).is_zero():
        raise PolyError("shared component through the boundary point")
    conditions: list[SparsePoly] = []
    mult = 0
    guard = 0
    while True:
        guard += 1
        if guard > 2000:
            raise PolyError("symbolic recursion failed to terminate")
        f00 = origin_value(F)
        g00 = origin_value(G)
        if not f00.is_zero() or not g00.is_zero():
            for val in (f00, g00):
                if not val.is_zero() and not is_param_constant(val):
                    conditions.append(val)
            return mult, conditions
        pF = red(F.eval_rational({v: QQ(0)}))
        pG = red(G.eval_rational({v: QQ(0)}))
        if pF.is_zero() and pG.is_zero():
            raise PolyError("shared component through the boundary point")
        if pF.is_zero():
            F = _divide_monomial(F, v)
            F = _strip_parameter_content(F, zvars, ctx)
            nu = pG.min_degree(u)
            tc = pG.coeff_of(u, nu)
            if not is_param_constant(tc):
                conditions.append(tc)
            mult += nu
            continue
        if pG.is_zero():
            F, G = G, F
            continue
        dF, dG = pF.degree(u), pG.degree(u)
        if dF > dG:
            F, G = G, F
            continue
        lcF = pF.coeff_of(u, dF)
        lcG = pG.coeff_of(u, dG)
        mono = SparsePoly.monomial({u: dG - dF}, 1, F.vars)
        G = red(G * lcF - F * lcG * mono)
        G = _strip_parameter_content(G, zvars, ctx)
        F, G = G, F


def ms_fulton(sys: EdgeSystem, rho: RealAlgebraic) -> list[CurveComponent]:
    """Multiplicity-set components for one boundary root via the symbolic
    Fulton recursion; must agree with :func:`ms_resultant` on zero sets."""
    if sys.skip:
        return []
    if rho.is_rational():
        r = rho.as_fraction()
        z1 = SparsePoly.variable("z1", sys.g1.vars)
        shift = z1 + SparsePoly.constant(r, sys.g1.vars)
        G1 = sys.g1.subs_poly("z1", shift)
        G2 = sys.g2.subs_poly("z1", shift)
        _, conds = fulton_condition_polynomials(G1, G2, None)
        out = []
        for c in conds:
            c = c.normalized()
            for f in _split_factors(c):
                out.append(CurveComponent(defining=f, kind=classify_defining(f),
                                          realness="undetermined", rho=rho))
        return _dedup_components(out)
    mp = rho.minpoly_sparse("a", sys.g1.vars)
    z1 = SparsePoly.variable("z1", sys.g1.vars)
    a = SparsePoly.variable("a", sys.g1.vars)
    G1 = sys.g1.subs_poly("z1", z1 + a)
    G2 = sys.g2.subs_poly("z1", z1 + a)
    results = with_dynamic_splitting(mp, "a", lambda ctx: fulton_condition_polynomials(G1, G2, ctx))
    out = []
    for m_factor, (_, conds) in results:
        if not _root_in(to_dense(m_factor, "a"), rho.lo, rho.hi):
            continue
        for c in conds:
            cc = c
            if cc.is_zero():
                continue
            out.append(CurveComponent(defining=cc.normalized(), kind=classify_defining(cc),
                                      realness="undetermined", minpoly=m_factor, rho=rho))
    return _dedup_components(out)


def _dedup_components(comps: list[CurveComponent]) -> list[CurveComponent]:
    seen = set()
    out = []
    for c in comps:
        key = (str(c.defining), str(c.minpoly) if c.minpoly is not None else "")
        if key in seen:
            continue
        seen.add(key)
        out.append(c)
    return out


# -- discriminant -------------------------------------------------------------


def discriminant_curve(f1: SparsePoly, f2: SparsePoly) -> SparsePoly:
    """A nonzero polynomial vanishing on the discriminant (critical values).

    Eliminates x1, x2 from {f1 - y1, f2 - y2, det Jac}; the result may carry
    extra components, which is harmless for its role as an avoidance set.
    """
    y1 = SparsePoly.variable("y1", f1.vars)
    y2 = SparsePoly.variable("y2", f1.vars)
    jac = f1.derivative("x1") * f2.derivative("x2") - f1.derivative("x2") * f2.derivative("x1")
    if jac.is_zero():
        raise PolyError("map is not dominant")
    if jac.is_constant():
        return SparsePoly.constant(1, f1.vars)
    polys = [f1 - y1, f2 - y2, jac]
    collected: list[SparsePoly] = []

    def reduce_poly(p: SparsePoly) -> SparsePoly | None:
        # peel off target-only content (a valid factor of the projection)
        # and drop multiplicities; the zero set is what matters here
        if p.is_constant():
            return None
        if not (p.vars_present() - {"y1", "y2"}):
            collected.append(p)
            return None
        if p.vars_present() & {"y1", "y2"}:
            cont, prim = content_wrt(p, ["y1", "y2"])
            if not cont.is_constant():
                collected.append(cont)
            p = prim
        return squarefree_part_multivar(p)

    polys = [q for q in (reduce_poly(p) for p in polys) if q is not None]
    for var in ("x2", "x1"):
        with_var = [p for p in polys if p.degree(var) > 0]
        without = [p for p in polys if p.degree(var) <= 0]
        if not with_var:
            polys = without
            continue
        pivot = with_var[-1]
        new = []
        for p in with_var[:-1]:
            r = resultant(p, pivot, var)
            if r.is_zero():
                g = gcd_multivar(p, pivot)
                r = resultant(exact_div(p, g), pivot, var)
                if r.is_zero():
                    raise PolyError("discriminant elimination collapsed")
            r = reduce_poly(r)
            if r is not None:
                new.append(r)
        polys = new + without
    D = SparsePoly.constant(1, f1.vars)
    for p in polys + collected:
        if p.vars_present() - {"y1", "y2"}:
            raise PolyError("discriminant elimination left source variables")
        D = D * p
    if D.is_constant():
        return SparsePoly.constant(1, D.vars)
    return squarefree_part_multivar(D)


# -- real emptiness test --------------------------------------------------------


def norm_form(defining: SparsePoly, minpoly: SparsePoly | None) -> SparsePoly:
    """A rational polynomial containing the (possibly algebraic) component."""
    if minpoly is None or defining.degree("a") <= 0:
        return defining.normalized()
    n = resultant(minpoly, defining, "a")
    if n.is_zero():
        raise PolyError("norm form collapsed")
    return n.normalized()


def _eval_y(p: SparsePoly, pt: tuple[Fraction, Fraction]) -> Fraction:
    v = p.eval_rational({"y1": pt[0], "y2": pt[1]})
    if not v.is_constant():
        raise PolyError("unexpected free variables in avoidance polynomial")
    return v.constant_value()


def _specialized_edge_pair(sys: EdgeSystem, pt: tuple[Fraction, Fraction]):
    g1 = sys.g1.eval_rational({"y1": pt[0], "y2": pt[1]})
    g2 = sys.g2.eval_rational({"y1": pt[0], "y2": pt[1]})
    return g1, g2


def _multiplicity_at_rho(sys: EdgeSystem, rho: RealAlgebraic, pt: tuple[Fraction, Fraction]):
    """Intersection multiplicity of the specialized edge system at (rho, 0)."""
    g1, g2 = _specialized_edge_pair(sys, pt)
    z1 = SparsePoly.variable("z1", g1.vars)
    if rho.is_rational():
        shift = z1 + SparsePoly.constant(rho.as_fraction(), g1.vars)
        return fulton_multiplicity(g1.subs_poly("z1", shift), g2.subs_poly("z1", shift))
    minpoly = rho.minpoly_sparse("a", g1.vars)
    a = SparsePoly.variable("a", g1.vars)
    G1 = g1.subs_poly("z1", z1 + a)
    G2 = g2.subs_poly("z1", z1 + a)
    while True:
        ctx = ExtContext(minpoly, "a")
        try:
            return fulton_multiplicity(G1, G2, ctx=ctx)
        except ZeroDivisor as zd:
            f = zd.factor.normalized()
            if _root_in(to_dense(f, "a"), rho.lo, rho.hi):
                minpoly = f
            else:
                minpoly = exact_div(minpoly.normalized(), f).normalized()


def _find_rational_point_on(J: SparsePoly, avoid: list[SparsePoly], disc: SparsePoly | None,
                            rng: random.Random) -> tuple[Fraction, Fraction] | None:
    """A rational point of V(J) avoiding the other curves, or None."""
    candidates = [QQ(0), QQ(1), QQ(-1), QQ(2), QQ(-2), QQ(1, 2), QQ(-1, 2), QQ(3), QQ(-3)]
    candidates += [QQ(rng.randrange(-30, 31), rng.randrange(1, 6)) for _ in range(6)]
    for fixed_var, free_var in (("y1", "y2"), ("y2", "y1")):
        for c in candidates:
            line = J.eval_rational({fixed_var: c})
            if line.is_zero() or line.degree(free_var) < 1:
                continue
            for r in rational_roots(line, free_var):
                pt = (c, r) if fixed_var == "y1" else (r, c)
                if disc is not None and _eval_y(disc, pt) == 0:
                    continue
                if any(_eval_y(o, pt) == 0 for o in avoid):
                    continue
                return pt
    return None


def _generic_reference_point(J: SparsePoly, avoid: list[SparsePoly], disc: SparsePoly,
                             rng: random.Random) -> tuple[Fraction, Fraction]:
    for _ in range(200):
        pt = (QQ(rng.randrange(-50, 51), rng.randrange(1, 8)),
              QQ(rng.randrange(-50, 51), rng.randrange(1, 8)))
        if _eval_y(J, pt) == 0 or _eval_y(disc, pt) == 0:
            continue
        if any(_eval_y(o, pt) == 0 for o in avoid):
            continue
        return pt
    raise PolyError("could not sample a generic reference point")


def _critical_box_bound(J: SparsePoly) -> Fraction:
    bound = QQ(4)
    for dv in ("y1", "y2"):
        dJ = J.derivative(dv)
        if dJ.is_zero():
            continue
        for ev, keep in (("y2", "y1"), ("y1", "y2")):
            if J.degree(ev) > 0 and dJ.degree(ev) > 0:
                try:
                    r = resultant(J, dJ, ev)
                except PolyError:
                    continue
                if r.is_zero() or r.is_constant() or r.degree(keep) < 1:
                    continue
                try:
                    bound = max(bound, root_bound(r, keep))
                except PolyError:
                    continue
            elif J.degree(ev) <= 0 and J.degree(keep) > 0:
                try:
                    bound = max(bound, root_bound(J, keep))
                except PolyError:
                    continue
    return bound + 1


@dataclass
class _ScanLine:
    fixed_var: str
    free_var: str
    level: Fraction


def _scan_lines(J: SparsePoly, bound: Fraction) -> list[_ScanLine]:
    lines = []
    for level in (bound, -bound):
        lines.append(_ScanLine("y2", "y1", level))
        lines.append(_ScanLine("y1", "y2", level))
    return lines


def _line_roots(p: SparsePoly, line: _ScanLine) -> list[RealAlgebraic] | None:
    restricted = p.eval_rational({line.fixed_var: line.level})
    if restricted.is_zero():
        return None  # the whole line lies inside the curve
    if restricted.degree(line.free_var) < 1:
        return []
    return [r for r, _ in isolate_real_roots(restricted, line.free_var)]


def _eval_possibly_ext(p: SparsePoly, pt: tuple[Fraction, Fraction], rho: RealAlgebraic) -> bool:
    """True iff p(pt) is nonzero, with extension coefficients allowed."""
    v = p.eval_rational({"y1": pt[0], "y2": pt[1]})
    if v.is_zero():
        return False
    if v.is_constant():
        return True
    if rho is None or rho.is_rational():
        raise PolyError("unexpected extension variable")
    return sign_at(v, rho, "a") != 0


def _odd_jump_shortcut(comp: CurveComponent, sys: EdgeSystem, rng: random.Random) -> str | None:
    """Odd multiplicity difference between a point on the component and a
    certified-generic reference point forces a real escape."""
    J = comp.defining.normalized()
    # the jump locus is inside V(J1) cap V(J2): a reference point where not
    # both vanish certifiably carries the generic multiplicity
    R1 = resultant(sys.g1, sys.g2, "z2")
    R2 = resultant(sys.g1, sys.g2, "z1")
    if R1.is_zero() or R2.is_zero():
        return None
    _, R12 = content_wrt(R1, ["z1"])
    _, R22 = content_wrt(R2, ["z2"])
    J2 = R22.eval_rational({"z2": 0})
    rho = comp.rho
    if rho.is_rational():
        J1 = R12.eval_rational({"z1": rho.as_fraction()})
    else:
        from .multiplicity import _rename_z1_to_a

        mp = rho.minpoly_sparse("a", R12.vars)
        ctx = ExtContext(mp, "a")
        J1 = ctx.reduce(_rename_z1_to_a(R12))
    p_rat = _find_rational_point_on(J, [], None, rng)
    if p_rat is None:
        return None
    for _ in range(40):
        q = (QQ(rng.randrange(-60, 61), rng.randrange(1, 8)),
             QQ(rng.randrange(-60, 61), rng.randrange(1, 8)))
        if _eval_y(J, q) == 0:
            continue
        try:
            ok1 = _eval_possibly_ext(J1, q, rho)
            ok2 = _eval_possibly_ext(J2, q, rho)
        except PolyError:
            return None
        if not (ok1 or ok2):
            continue
        mu_p = _multiplicity_at_rho(sys, rho, p_rat)
        mu_q = _multiplicity_at_rho(sys, rho, q)
        if mu_p == FULTON_INFINITY or mu_q == FULTON_INFINITY:
            return None
        if (int(mu_p) - int(mu_q)) % 2 == 1:
            return "confirmed-nonempty"
        return None
    return None


def emptiness_test(comp: CurveComponent, sys: EdgeSystem, f1: SparsePoly, f2: SparsePoly,
                   others: list[SparsePoly], disc_supplier, seed: int = 0) -> str:
    """Decide whether a real multiplicity-set component meets the Jelonek set.

    ``disc_supplier`` is a zero-argument callable returning the discriminant
    curve (or raising); it is only invoked when the full scan is required.
    Returns confirmed-nonempty / confirmed-empty / undetermined; failures
    always degrade to undetermined, never to a wrong verdict.
    """
    rng = random.Random(seed * 7919 + len(str(comp.defining)))
    if comp.minpoly is not None and comp.defining.degree("a") > 0:
        return "undetermined"
    J = comp.defining.normalized()
    if comp.rho is None:
        return "undetermined"
    avoid = [o for o in others if o.normalized() != J]

    try:
        verdict = _odd_jump_shortcut(comp, sys, rng)
        if verdict is not None:
            return verdict
    except (PolyError, ZeroDivisor):
        pass

    # full scan: point on an unbounded branch, clean neighbors, count and compare
    try:
        disc = disc_supplier()
        if disc is None or disc.is_zero():
            return "undetermined"
        return _scan_and_count(comp, J, f1, f2, avoid, disc, rng)
    except (PolyError, ZeroDivisor):
        return "undetermined"


def _strip_shared(p: SparsePoly, J: SparsePoly) -> SparsePoly:
    """Remove the factors of p shared with J (they are accounted separately)."""
    out = p
    while not out.is_constant():
        g = gcd_multivar(out, J)
        if g.is_constant():
            break
        out = exact_div(out, g)
    return out


def _scan_and_count(comp: CurveComponent, J: SparsePoly, f1: SparsePoly, f2: SparsePoly,
                    avoid: list[SparsePoly], disc: SparsePoly, rng: random.Random) -> str:
    # the elimination-based discriminant may contain the component itself (as
    # a spurious factor or genuinely); its shared part must not veto the scan
    # points -- fiber regularity is certified pointwise by exact counting.
    disc = _strip_shared(disc, J)
    avoid = [a for a in (_strip_shared(o, J) for o in avoid) if not a.is_constant()]
    bound = _critical_box_bound(J)
    for line in _scan_lines(J, bound):
        roots = _line_roots(J, line)
        if roots is None or not roots:
            continue
        obstacles: list[RealAlgebraic] = []
        degenerate = False
        for p in avoid + [disc]:
            rr = _line_roots(p, line)
            if rr is None:
                degenerate = True
                break
            obstacles.extend(rr)
        if degenerate:
            continue
        for p_free in roots:
            # p must avoid the other curves and the discriminant
            if any(compare(p_free, o) == 0 for o in obstacles):
                continue
            verdict = _verdict_at_point(comp, J, f1, f2, line, p_free, roots, obstacles)
            if verdict is not None:
                return verdict
    return "undetermined"


def _verdict_at_point(comp: CurveComponent, J: SparsePoly, f1: SparsePoly, f2: SparsePoly,
                      line: _ScanLine, p_free: RealAlgebraic,
                      own_roots: list[RealAlgebraic], obstacles: list[RealAlgebraic]) -> str | None:
    crossings = obstacles + [r for r in own_roots if compare(r, p_free) != 0]
    left = [r for r in crossings if compare(r, p_free) < 0]
    right = [r for r in crossings if compare(r, p_free) > 0]
    q_side = []
    for side, pool in (("-", left), ("+", right)):
        if pool:
            nearest = pool[0]
            for r in pool[1:]:
                if (side == "-" and compare(r, nearest) > 0) or (side == "+" and compare(r, nearest) < 0):
                    nearest = r
            q_free = rational_between(nearest, p_free)
        else:
            probe = p_free.refined(QQ(1, 16))
            q_free = probe.lo - 1 if side == "-" else probe.hi + 1
        q_side.append(q_free)
    q_minus, q_plus = q_side

    def full_point(free_value: Fraction) -> tuple[Fraction, Fraction]:
        if line.fixed_var == "y2":
            return (free_value, line.level)
        return (line.level, free_value)

    def count_at(free_value: Fraction):
        pt = full_point(free_value)
        F1 = f1 - SparsePoly.constant(pt[0], f1.vars)
        F2 = f2 - SparsePoly.constant(pt[1], f1.vars)
        return count_real_solutions(F1, F2)

    dq_m, wq_m = count_at(q_minus)
    dq_p, wq_p = count_at(q_plus)
    if dq_m != wq_m or dq_p != wq_p:
        return None  # neighbors are not generic; try another scan
    # count at p itself: one coordinate algebraic
    w = SparsePoly.variable("w", f1.vars)
    if line.fixed_var == "y2":
        F1 = f1 - w
        F2 = f2 - SparsePoly.constant(line.level, f1.vars)
    else:
        F1 = f1 - SparsePoly.constant(line.level, f1.vars)
        F2 = f2 - w
    dp, wp = count_real_solutions_param(F1, F2, "w", p_free)
    if dp != wp:
        return None  # p touches a multiple fiber despite the filters
    if wp < max(wq_m, wq_p):
        return "confirmed-nonempty"
    if wp == wq_m == wq_p:
        return "confirmed-empty"
    return None
