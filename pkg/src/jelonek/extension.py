"""Arithmetic over simple algebraic extensions Q[a]/(m).

The minimal polynomial ``m`` is only required to be squarefree.  When it is
reducible, arithmetic may hit a zero divisor; the offending nontrivial
factor is raised as :class:`ZeroDivisor` so callers can split the modulus
and continue per factor (dynamic evaluation).  Elements and polynomials
over the extension are plain :class:`SparsePoly` values kept reduced in the
extension variable.
"""

from __future__ import annotations

from typing import Callable

from .poly import PolyError, QQ, SparsePoly, exact_div, gcd_multivar


class ZeroDivisor(Exception):
    """A nontrivial factor of the modulus was discovered mid-computation."""

    def __init__(self, factor: SparsePoly):
        super().__init__(f"zero divisor; modulus factor {factor}")
        self.factor = factor


def divmod_univar(p: SparsePoly, q: SparsePoly, var: str) -> tuple[SparsePoly, SparsePoly]:
    """Division with remainder by a polynomial whose lc in ``var`` is a unit.

    The leading coefficient of ``q`` must be a nonzero rational constant (it
    is for minimal polynomials in canonical form).
    """
    dq = q.degree(var)
    lc = q.coeff_of(var, dq)
    if not lc.is_constant():
        raise PolyError("divisor leading coefficient is not constant")
    c = lc.constant_value()
    quo = SparsePoly.zero(p.vars)
    rem = p
    i = p._idx(var)
    while not rem.is_zero() and rem.degree(var) >= dq:
        dr = rem.degree(var)
        coeff = rem.coeff_of(var, dr).scale(1 / c)
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): QQ(1)}, p.vars)
        quo = quo + coeff * mono
        rem = rem - q * coeff * mono
    return quo, rem


class ExtContext:
    """Computation context for Q[a]/(minpoly) with ``a`` a universe variable."""

    def __init__(self, minpoly: SparsePoly, var: str = "a"):
        if minpoly.is_zero() or minpoly.degree(var) < 1:
            raise PolyError("minimal polynomial must be nonconstant")
        if minpoly.vars_present() - {var}:
            raise PolyError("minimal polynomial must be univariate")
        self.var = var
        self.minpoly = minpoly.normalized()
        self.deg = self.minpoly.degree(var)

    def reduce(self, p: SparsePoly) -> SparsePoly:
        if p.degree(self.var) < self.deg:
            return p
        return divmod_univar(p, self.minpoly, self.var)[1]

    def mul(self, p: SparsePoly, q: SparsePoly) -> SparsePoly:
        return self.reduce(p * q)

    def is_zero(self, p: SparsePoly) -> bool:
        return self.reduce(p).is_zero()

    def inverse(self, u: SparsePoly) -> SparsePoly:
        """Inverse of an element of Q[a]/(m); raises ZeroDivisor on failure."""
        u = self.reduce(u)
        if u.vars_present() - {self.var}:
            raise PolyError("not an extension element")
        if u.is_zero():
            raise PolyError("inverse of zero")
        if u.is_constant():
            return SparsePoly.constant(1 / u.constant_value(), u.vars)
        # extended Euclid in Q[a]
        r0, r1 = self.minpoly, u
        s0, s1 = SparsePoly.zero(u.vars), SparsePoly.constant(1, u.vars)
        while not r1.is_zero() and r1.degree(self.var) > 0:
            q, r = divmod_univar_field(r0, r1, self.var)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():
            g = r0.normalized()
            if g.degree(self.var) >= self.deg:
                raise PolyError("inverse of zero in quotient ring")
            raise ZeroDivisor(g)
        return self.reduce(s1.scale(1 / r1.constant_value()))


def divmod_univar_field(p: SparsePoly, q: SparsePoly, var: str) -> tuple[SparsePoly, SparsePoly]:
    """Division with remainder for univariate polynomials over Q."""
    dq = q.degree(var)
    if dq < 0:
        raise PolyError("division by zero")
    quo = SparsePoly.zero(p.vars)
    rem = p
    i = p._idx(var)
    while not rem.is_zero() and rem.degree(var) >= dq:
        dr = rem.degree(var)
        c = rem.coeff_of(var, dr).constant_value() / q.coeff_of(var, dq).constant_value()
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): c}, p.vars)
        quo = quo + mono
        rem = rem - q * mono
    return quo, rem


def ext_divmod(p: SparsePoly, q: SparsePoly, main: str, ctx: ExtContext) -> tuple[SparsePoly, SparsePoly]:
    """Division with remainder in (Q[a]/(m))[main]; may raise ZeroDivisor."""
    p = ctx.reduce(p)
    q = ctx.reduce(q)
    dq = q.degree(main)
    if dq < 0:
        raise PolyError("division by zero")
    lc_inv = ctx.inverse(q.coeff_of(main, dq))
    quo = SparsePoly.zero(p.vars)
    rem = p
    i = p._idx(main)
    while not rem.is_zero() and rem.degree(main) >= dq:
        dr = rem.degree(main)
        coeff = ctx.mul(rem.coeff_of(main, dr), lc_inv)
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): QQ(1)}, p.vars)
        quo = quo + coeff * mono
        rem = ctx.reduce(rem - q * coeff * mono)
        if rem.degree(main) == dr:  # leading coefficient was a zero divisor view
            raise PolyError("division failed to reduce degree")
    return quo, rem


def ext_monic(p: SparsePoly, main: str, ctx: ExtContext) -> SparsePoly:
    p = ctx.reduce(p)
    if p.is_zero():
        return p
    d = p.degree(main)
    lc = p.coeff_of(main, d)
    if lc.is_constant():
        return p.scale(1 / lc.constant_value())
    return ctx.reduce(p * ctx.inverse(lc))


def ext_gcd_univar(p: SparsePoly, q: SparsePoly, main: str, ctx: ExtContext) -> SparsePoly:
    """Monic gcd in (Q[a]/(m))[main]; raises ZeroDivisor to trigger splits."""
    a, b = ctx.reduce(p), ctx.reduce(q)
    if a.is_zero() and b.is_zero():
        raise PolyError("gcd(0, 0) undefined")
    while not b.is_zero():
        if b.degree(main) == 0:
            if ctx.is_zero(b):
                break
            return SparsePoly.constant(1, p.vars)
        _, r = ext_divmod(a, b, main, ctx)
        a, b = b, r
    return ext_monic(a, main, ctx)


def ext_derivative(p: SparsePoly, main: str) -> SparsePoly:
    return p.derivative(main)


def ext_squarefree_part(p: SparsePoly, main: str, ctx: ExtContext) -> SparsePoly:
    p = ctx.reduce(p)
    if p.degree(main) < 1:
        raise PolyError("constant polynomial")
    g = ext_gcd_univar(p, p.derivative(main), main, ctx)
    if g.degree(main) < 1:
        return ext_monic(p, main, ctx)
    quo, rem = ext_divmod(p, g, main, ctx)
    if not ctx.is_zero(rem):
        raise PolyError("inexact squarefree division")
    return ext_monic(quo, main, ctx)


def ext_squarefree_decomposition(p: SparsePoly, main: str, ctx: ExtContext) -> list[tuple[SparsePoly, int]]:
    """Yun decomposition over the quotient field; factors monic in ``main``."""
    p = ctx.reduce(p)
    if p.is_zero():
        raise PolyError("zero polynomial")
    if p.degree(main) < 1:
        return []
    dp = ctx.reduce(p.derivative(main))
    g = ext_gcd_univar(p, dp, main, ctx)
    c, rem = ext_divmod(p, g, main, ctx)
    if not ctx.is_zero(rem):
        raise PolyError("inexact division in Yun")
    dq, rem = ext_divmod(dp, g, main, ctx)
    if not ctx.is_zero(rem):
        raise PolyError("inexact division in Yun")
    d = ctx.reduce(dq - c.derivative(main))
    out: list[tuple[SparsePoly, int]] = []
    i = 1
    while c.degree(main) > 0:
        a = ext_gcd_univar(c, d, main, ctx) if not d.is_zero() else ext_monic(c, main, ctx)
        if a.degree(main) > 0:
            out.append((a, i))
        c, rem = ext_divmod(c, a, main, ctx)
        if not ctx.is_zero(rem):
            raise PolyError("inexact division in Yun")
        if d.is_zero():
            d = SparsePoly.zero(p.vars)
            dnew = -c.derivative(main)
        else:
            dq, rem = ext_divmod(d, a, main, ctx)
            if not ctx.is_zero(rem):
                raise PolyError("inexact division in Yun")
            dnew = ctx.reduce(dq - c.derivative(main))
        d = dnew
        i += 1
    return out


def ext_content_wrt_main(p: SparsePoly, main: str, ctx: ExtContext) -> tuple[SparsePoly, SparsePoly]:
    """Content/primitive split of p in ``main`` over (Q[a]/(m))[coeff vars].

    Coefficients of powers of ``main`` live in the remaining (non-extension)
    variables; their gcd over the extension is computed recursively.
    """
    coeffs = [c for c in p.as_univariate(main) if not c.is_zero()]
    if not coeffs:
        raise PolyError("zero polynomial")
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = ext_gcd_multivar(acc, c, ctx)
        if acc.degree(ctx.var) == 0 and acc.is_constant():
            break
    content = acc
    if content.is_constant() and content.constant_value() == 1:
        return content, p
    primitive = ext_exact_div(p, content, ctx)
    return content, primitive


def ext_exact_div(p: SparsePoly, q: SparsePoly, ctx: ExtContext) -> SparsePoly:
    """Exact division in (Q[a]/(m))[vars]; main-variable-free divisors allowed."""
    p = ctx.reduce(p)
    q = ctx.reduce(q)
    if q.is_zero():
        raise PolyError("division by zero")
    if p.is_zero():
        return p
    # choose any variable present in q (other than the extension variable)
    qv = sorted(q.vars_present() - {ctx.var})
    if not qv:
        return ctx.reduce(p * ctx.inverse(q))
    main = qv[-1]
    quo, rem = ext_divmod_general(p, q, main, ctx)
    if not ctx.is_zero(rem):
        raise PolyError("not divisible over extension")
    return quo


def ext_divmod_general(p: SparsePoly, q: SparsePoly, main: str, ctx: ExtContext) -> tuple[SparsePoly, SparsePoly]:
    """Pseudo-free division for exact quotients: leading coeff may be a polynomial.

    Performs ordinary division steps using graded-lex leading terms of ``q``
    restricted to ``main`` powers; only valid when the division is exact or
    the remainder is genuinely irreducible further.
    """
    dq = q.degree(main)
    lc_q = q.coeff_of(main, dq)
    quo = SparsePoly.zero(p.vars)
    rem = ctx.reduce(p)
    i = p._idx(main)
    while not rem.is_zero() and rem.degree(main) >= dq:
        dr = rem.degree(main)
        lead = rem.coeff_of(main, dr)
        # divide lead by lc_q over the extension (recursively exact)
        try:
            factor = ext_exact_div(lead, lc_q, ctx)
        except PolyError:
            return quo, rem
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): QQ(1)}, p.vars)
        quo = quo + factor * mono
        new_rem = ctx.reduce(rem - q * factor * mono)
        if not new_rem.is_zero() and new_rem.degree(main) >= dr and new_rem.coeff_of(main, dr) == lead:
            return quo, rem
        rem = new_rem
    return quo, rem


def ext_gcd_multivar(p: SparsePoly, q: SparsePoly, ctx: ExtContext) -> SparsePoly:
    """Gcd of multivariate polynomials over Q[a]/(m), monic-normalized.

    Primitive pseudo-remainder sequence in the last present variable with
    recursive content extraction.  May raise :class:`ZeroDivisor`.
    """
    p = ctx.reduce(p)
    q = ctx.reduce(q)
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd(0, 0) undefined")
    if p.is_zero():
        return _ext_normal(q, ctx)
    if q.is_zero():
        return _ext_normal(p, ctx)
    pv = p.vars_present() - {ctx.var}
    qv = q.vars_present() - {ctx.var}
    if not pv or not qv:
        return SparsePoly.constant(1, p.vars)
    common = pv & qv
    if not common:
        return SparsePoly.constant(1, p.vars)
    main = [v for v in p.vars if v in common][-1]
    cp, pp = ext_content_wrt_main(p, main, ctx)
    cq, qq = ext_content_wrt_main(q, main, ctx)
    if cp.is_constant() and cq.is_constant():
        cont = SparsePoly.constant(1, p.vars)
    else:
        cont = ext_gcd_multivar(cp, cq, ctx)
    a, b = pp, qq
    if a.degree(main) < b.degree(main):
        a, b = b, a
    while True:
        if b.is_zero():
            g = a
            break
        if b.degree(main) == 0:
            g = SparsePoly.constant(1, p.vars)
            break
        r = ext_pseudo_rem(a, b, main, ctx)
        if r.is_zero():
            g = b
            break
        _, r = ext_content_wrt_main(r, main, ctx)
        a, b = b, r
    if not g.is_constant():
        _, g = ext_content_wrt_main(g, main, ctx)
    return _ext_normal(ctx.reduce(cont * g), ctx)


def ext_pseudo_rem(p: SparsePoly, q: SparsePoly, main: str, ctx: ExtContext) -> SparsePoly:
    dq = q.degree(main)
    lc_q = q.coeff_of(main, dq)
    rem = p
    i = p._idx(main)
    guard = 0
    while not rem.is_zero() and rem.degree(main) >= dq:
        dr = rem.degree(main)
        lc_r = rem.coeff_of(main, dr)
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): QQ(1)}, p.vars)
        rem = ctx.reduce(rem * lc_q - q * lc_r * mono)
        guard += 1
        if guard > 10000:
            raise PolyError("pseudo-remainder failed to terminate")
    return rem


def _ext_normal(p: SparsePoly, ctx: ExtContext) -> SparsePoly:
    """Monic w.r.t. the graded-lex leading term among non-extension variables."""
    p = ctx.reduce(p)
    if p.is_zero():
        return p
    coeffs = {}
    for exps, c in p.terms.items():
        key = tuple(0 if v == ctx.var else e for v, e in zip(p.vars, exps))
        coeffs.setdefault(key, {})[exps] = c
    from .poly import grlex_key

    lead_key = max(coeffs, key=grlex_key)
    lead = SparsePoly(coeffs[lead_key], p.vars)
    # strip the extension variable exponents back in
    ai = p.vars.index(ctx.var)
    lead_elem = SparsePoly({tuple(e if i == ai else 0 for i, e in enumerate(exps)): c
                            for exps, c in lead.terms.items()}, p.vars)
    if lead_elem.is_constant():
        return p.scale(1 / lead_elem.constant_value())
    return ctx.reduce(p * ctx.inverse(lead_elem))


def split_minpoly(minpoly: SparsePoly, factor: SparsePoly, var: str) -> list[SparsePoly]:
    f = factor.normalized()
    co = exact_div(minpoly.normalized(), f).normalized()
    return [f, co]


def with_dynamic_splitting(minpoly: SparsePoly, var: str,
                           compute: Callable[[ExtContext], object]) -> list[tuple[SparsePoly, object]]:
    """Run ``compute`` over Q[a]/(minpoly), splitting on zero divisors.

    Returns one (modulus factor, result) pair per branch; a linear factor
    yields ordinary rational arithmetic on that branch automatically via the
    same code path.
    """
    pending = [minpoly.normalized()]
    out: list[tuple[SparsePoly, object]] = []
    while pending:
        m = pending.pop()
        try:
            out.append((m, compute(ExtContext(m, var))))
        except ZeroDivisor as zd:
            pending.extend(split_minpoly(m, zd.factor, var))
    out.sort(key=lambda fr: str(fr[0]))
    return out


def gcd_mod_minpoly(p: SparsePoly, q: SparsePoly, minpoly: SparsePoly, var: str = "a") -> list[tuple[SparsePoly, SparsePoly]]:
    """Gcd of p, q over Q[a]/(minpoly), split per modulus factor.

    Returns [(factor, gcd), ...]; with squarefree reducible moduli the
    result lists one gcd per factor class discovered by zero-divisor
    encounters.
    """
    if minpoly.degree(var) < 1:
        raise PolyError("minimal polynomial must be nonconstant")
    if gcd_multivar(minpoly, minpoly.derivative(var)).degree(var) > 0:
        raise PolyError("minimal polynomial must be squarefree")
    return with_dynamic_splitting(minpoly, var, lambda ctx: ext_gcd_multivar(p, q, ctx))
