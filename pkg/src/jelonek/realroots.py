"""Real algebraic numbers and exact real-root machinery.

Univariate real roots are isolated by Descartes sign-variation bisection on
the squarefree part, with multiplicities recovered from the squarefree
decomposition.  Numbers are carried in isolating-interval representation:
a squarefree integer minimal polynomial plus a rational interval containing
exactly one of its roots.

Real-solution counting for zero-dimensional bivariate systems works in a
sheared coordinate generic enough that every fiber over a resultant root
carries exactly one solution; the shear is certified through the first
subresultant, never assumed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .extension import ExtContext, ZeroDivisor, ext_divmod, ext_monic, ext_squarefree_decomposition
from .poly import (
    PolyError,
    QQ,
    SparsePoly,
    gcd_multivar,
    pseudo_rem,
    squarefree_decomposition,
)


# -- dense univariate helpers over Q ----------------------------------------


def to_dense(p: SparsePoly, var: str) -> list[Fraction]:
    """Ascending coefficient list of a polynomial univariate in ``var``."""
    extra = p.vars_present() - {var}
    if extra:
        raise PolyError(f"not univariate: extra variables {sorted(extra)}")
    if p.is_zero():
        return []
    d = p.degree(var)
    out = [QQ(0)] * (d + 1)
    i = p._idx(var)
    for exps, c in p.terms.items():
        out[exps[i]] = c
    return out


def from_dense(coeffs: Sequence[Fraction], var: str, variables=None) -> SparsePoly:
    from .poly import DEFAULT_VARS

    variables = tuple(variables) if variables is not None else DEFAULT_VARS
    i = variables.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = QQ(c)
    return SparsePoly(terms, variables)


def dense_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def dense_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = QQ(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def dense_derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return [c * k for k, c in enumerate(p)][1:]


def dense_shift(p: Sequence[Fraction], c: Fraction) -> list[Fraction]:
    """Taylor shift: coefficients of p(x + c)."""
    out = list(p)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out

def dense_scale(p: Sequence[Fraction], c: Fraction) -> list[Fraction]:
    """Coefficients of p(c*x)."""
    out = []
    f = QQ(1)
    for a in p:
        out.append(a * f)
        f *= c
    return out


def dense_primitive(p: Sequence[Fraction]) -> list[Fraction]:
    from math import gcd as _gcd

    num, den = 0, 1
    for c in p:
        num = _gcd(num, c.numerator)
        den = den * c.denominator // _gcd(den, c.denominator)
    if num == 0:
        return list(p)
    scale = QQ(den, num)
    out = [c * scale for c in p]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def _variations(coeffs: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _descartes_01(p: Sequence[Fraction]) -> int:
    """Sign variations bounding the roots of p in the open interval (0, 1)."""
    rev = list(reversed(p))  # x^n * p(1/x)
    shifted = dense_shift(rev, QQ(1))  # roots in (0,1) -> (0, inf)
    return _variations(shifted)


def cauchy_bound(p: Sequence[Fraction]) -> Fraction:
    """1 + max |a_i| / |a_n|: every complex root has magnitude below this."""
    p = dense_trim(list(p))
    if len(p) <= 1:
        raise PolyError("bound needs a nonconstant polynomial")
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


def isolate_squarefree_dense(p: list[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for all real roots of a squarefree polynomial.

    Returns (lo, hi) pairs with lo == hi for exactly-hit rational roots and
    p(lo) * p(hi) < 0 otherwise.
    """
    p = dense_trim(list(p))
    if len(p) <= 1:
        return []
    out: list[tuple[Fraction, Fraction]] = []
    bound = cauchy_bound(p)
    if dense_eval(p, QQ(0)) == 0:
        out.append((QQ(0), QQ(0)))
    stack = [(-bound, QQ(0)), (QQ(0), bound)]
    while stack:
        a, b = stack.pop()
        # map (a, b) onto (0, 1), then count variations there
        q = dense_shift(p, a)
        q = dense_scale(q, b - a)
        v = _descartes_01(q)
        if v == 0:
            continue
        fa, fb = dense_eval(p, a), dense_eval(p, b)
        if v == 1 and fa != 0 and fb != 0:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if dense_eval(p, m) == 0:
            out.append((m, m))
        stack.append((a, m))
        stack.append((m, b))
    out.sort(key=lambda ab: ab[0])
    return out


# -- real algebraic numbers --------------------------------------------------


class RealAlgebraic:
    """A real algebraic number in isolating-interval representation."""

    __slots__ = ("dense", "lo", "hi")

    def __init__(self, dense: Sequence[Fraction], lo: Fraction, hi: Fraction):
        self.dense = tuple(dense_primitive(dense_trim(list(dense))))
        self.lo = QQ(lo)
        self.hi = QQ(hi)
        if self.lo > self.hi:
            raise PolyError("empty interval")
        if self.lo != self.hi:
            flo = dense_eval(self.dense, self.lo)
            fhi = dense_eval(self.dense, self.hi)
            if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
                raise PolyError("interval does not isolate a root by sign change")

    @classmethod
    def from_rational(cls, r) -> "RealAlgebraic":
        r = QQ(r)
        return cls([-r, QQ(1)], r, r)

    @property
    def degree(self) -> int:
        return len(self.dense) - 1

    def is_rational(self) -> bool:
        return self.lo == self.hi or self.degree == 1

    def as_fraction(self) -> Fraction:
        if self.lo == self.hi:
            return self.lo
        if self.degree == 1:
            return -self.dense[0] / self.dense[1]
        raise PolyError("not a rational number")

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refined(self, eps: Fraction) -> "RealAlgebraic":
        """Same number, interval narrower than ``eps``."""
        if self.lo == self.hi:
            return self
        lo, hi = self.lo, self.hi
        flo = dense_eval(self.dense, lo)
        while hi - lo >= eps:
            m = (lo + hi) / 2
            fm = dense_eval(self.dense, m)
            if fm == 0:
                return RealAlgebraic(self.dense, m, m)
            if (flo > 0) != (fm > 0):
                hi = m
            else:
                lo, flo = m, fm
        return RealAlgebraic(self.dense, lo, hi)

    def minpoly_sparse(self, var: str, variables=None) -> SparsePoly:
        return from_dense(self.dense, var, variables)

    def to_float(self) -> float:
        a = self.refined(QQ(1, 10 ** 12))
        return float(a.mid())

    def sign(self) -> int:
        return self.cmp_fraction(QQ(0))

    def cmp_fraction(self, r: Fraction) -> int:
        """-1, 0, +1 as self <, ==, > r."""
        r = QQ(r)
        if self.lo == self.hi:
            return (self.lo > r) - (self.lo < r)
        if dense_eval(self.dense, r) == 0 and self.lo <= r <= self.hi:
            return 0
        a = self
        while a.lo <= r <= a.hi:
            a = a.refined(a.width() / 4)
        return 1 if a.lo > r else -1

    def __lt__(self, other: "RealAlgebraic") -> bool:
        return compare(self, other) < 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        return compare(self, other) == 0

    def __hash__(self):
        raise TypeError("unhashable; compare via intervals")

    def __repr__(self) -> str:
        if self.is_rational():
            return f"RealAlgebraic({self.as_fraction()})"
        return f"RealAlgebraic(~{self.to_float():.6f})"


def gcd_dense(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    a, b = dense_trim(list(p)), dense_trim(list(q))
    while b:
        if len(b) == 1:
            return [QQ(1)]
        a, b = b, _dense_rem(a, b)
    return dense_primitive(a) if a else []


def _dense_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] / b[-1]
        k = len(a) - 1 - db
        for i, c in enumerate(b):
            a[k + i] -= f * c
        a = dense_trim(a)
        if not a:
            break
    return a


def _interval_eval(p: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    mn, mx = QQ(0), QQ(0)
    for c in reversed(p):
        cands = (mn * lo, mn * hi, mx * lo, mx * hi)
        mn, mx = min(cands) + c, max(cands) + c
    return mn, mx


def sign_at(q: SparsePoly, alpha: RealAlgebraic, var: str | None = None) -> int:
    """Exact sign of q(alpha) for univariate q."""
    present = q.vars_present()
    if var is None:
        var = next(iter(present)) if present else "x1"
    dense = to_dense(q, var)
    return sign_at_dense(dense, alpha)


def sign_at_dense(dense: Sequence[Fraction], alpha: RealAlgebraic) -> int:
    dense = dense_trim(list(dense))
    if not dense:
        return 0
    if alpha.is_rational():
        v = dense_eval(dense, alpha.as_fraction())
        return (v > 0) - (v < 0)
    g = gcd_dense(list(dense), list(alpha.dense))
    if len(g) > 1:
        glo = dense_eval(g, alpha.lo)
        ghi = dense_eval(g, alpha.hi)
        if glo == 0 or ghi == 0:
            raise PolyError("isolating interval has root endpoint")
        if (glo > 0) != (ghi > 0):
            return 0
    a = alpha
    while True:
        mn, mx = _interval_eval(dense, a.lo, a.hi)
        if mn > 0:
            return 1
        if mx < 0:
            return -1
        a = a.refined(a.width() / 4 if a.width() > 0 else QQ(1))


def compare(a: RealAlgebraic, b: RealAlgebraic) -> int:
    if a.is_rational():
        return -b.cmp_fraction(a.as_fraction())
    if b.is_rational():
        return a.cmp_fraction(b.as_fraction())
    g = gcd_dense(list(a.dense), list(b.dense))
    x, y = a, b
    while not (x.hi < y.lo or y.hi < x.lo):
        if len(g) > 1:
            lo, hi = max(x.lo, y.lo), min(x.hi, y.hi)
            # equal iff the shared root sits inside the interval intersection
            if lo <= hi and _root_in(g, lo, hi):
                return 0
        x = x.refined(x.width() / 4)
        y = y.refined(y.width() / 4)
    return -1 if x.hi < y.lo else 1


def _root_in(g: Sequence[Fraction], lo: Fraction, hi: Fraction) -> bool:
    glo, ghi = dense_eval(g, lo), dense_eval(g, hi)
    if glo == 0 or ghi == 0:
        return True
    return (glo > 0) != (ghi > 0)


def rational_between(a: RealAlgebraic, b: RealAlgebraic) -> Fraction:
    """A rational strictly between two distinct real algebraic numbers."""
    if compare(a, b) > 0:
        a, b = b, a
    x, y = a, b
    while x.hi >= y.lo:
        x = x.refined(x.width() / 4 if x.width() > 0 else QQ(1))
        y = y.refined(y.width() / 4 if y.width() > 0 else QQ(1))
        if x.lo == x.hi and y.lo == y.hi and x.lo == y.lo:
            raise PolyError("numbers are equal")
    lo, hi = x.hi, y.lo
    if lo == hi:
        # endpoints touch; nudge by refining once more
        x = x.refined(x.width() / 4 if x.width() > 0 else QQ(1, 2))
        lo = x.hi
    return (lo + hi) / 2


# -- isolation with multiplicities -------------------------------------------


def isolate_real_roots(p: SparsePoly, var: str | None = None) -> list[tuple[RealAlgebraic, int]]:
    """All real roots of a univariate polynomial with multiplicities, sorted."""
    if p.is_zero():
        raise PolyError("zero polynomial")
    present = p.vars_present()
    if var is None:
        if len(present) > 1:
            raise PolyError("not univariate")
        if not present:
            return []
        var = next(iter(present))
    if p.degree(var) == 0:
        return []
    roots: list[tuple[RealAlgebraic, int]] = []
    for factor, mult in squarefree_decomposition(p, var):
        dense = to_dense(factor, var)
        for lo, hi in isolate_squarefree_dense(dense):
            root = RealAlgebraic(dense, lo, hi)
            r = _extract_rational(root)
            if r is not None:
                root = RealAlgebraic.from_rational(r)
            roots.append((root, mult))
    only = [r for r, _ in roots]
    _make_disjoint(only)
    roots = [(r, m) for r, (_, m) in zip(only, roots)]
    roots.sort(key=lambda rm: (rm[0].lo, rm[0].hi))
    return roots


def _make_disjoint(roots: list[RealAlgebraic]) -> None:
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i], roots[j]
                if a.dense == b.dense:
                    continue  # same squarefree factor isolates distinctly
                if a.hi < b.lo or b.hi < a.lo:
                    continue
                roots[i] = a.refined(a.width() / 4 if a.width() > 0 else QQ(1))
                roots[j] = b.refined(b.width() / 4 if b.width() > 0 else QQ(1))
                changed = True


def refine(alpha: RealAlgebraic, eps: Fraction) -> RealAlgebraic:
    return alpha.refined(QQ(eps))


def root_bound(p: SparsePoly, var: str | None = None) -> Fraction:
    """Cauchy bound on the magnitude of every complex root."""
    present = p.vars_present()
    if var is None:
        if len(present) != 1:
            raise PolyError("not a nonconstant univariate polynomial")
        var = next(iter(present))
    return cauchy_bound(to_dense(p, var))


def rational_roots(p: SparsePoly, var: str | None = None) -> list[Fraction]:
    """All rational roots of a univariate polynomial over Q."""
    present = p.vars_present()
    if var is None:
        if len(present) != 1:
            raise PolyError("not univariate")
        var = next(iter(present))
    out = []
    for root, _ in isolate_real_roots(p, var):
        r = _extract_rational(root)
        if r is not None:
            out.append(r)
    return sorted(set(out))


def _extract_rational(alpha: RealAlgebraic) -> Fraction | None:
    if alpha.is_rational():
        return alpha.as_fraction()
    lead = abs(alpha.dense[-1].numerator)
    if lead > 10 ** 12:
        # divisor enumeration would be too costly; keep the algebraic form
        return None
    divisors = _divisors(lead)
    a = alpha.refined(QQ(1, 2 * lead * lead + 1))
    for q in divisors:
        num = round(a.mid() * q)
        cand = QQ(num, q)
        if a.lo <= cand <= a.hi and dense_eval(alpha.dense, cand) == 0:
            return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


# -- Sturm counting over a simple extension ----------------------------------


def sturm_count_ext(p: SparsePoly, main: str, ctx: ExtContext, alpha: RealAlgebraic) -> int:
    """Number of distinct real roots of squarefree p in (Q[a]/(m))[main] at a = alpha."""
    p = ext_monic(p, main, ctx)
    if p.is_zero() or p.degree(main) == 0:
        return 0
    seq = [p, ctx.reduce(p.derivative(main))]
    while not seq[-1].is_zero() and seq[-1].degree(main) > 0:
        _, r = ext_divmod(seq[-2], seq[-1], main, ctx)
        seq.append(ctx.reduce(-r))
    if seq[-1].is_zero():
        seq.pop()

    def sig(elem: SparsePoly) -> int:
        if elem.is_zero():
            return 0
        if elem.is_constant():
            c = elem.constant_value()
            return (c > 0) - (c < 0)
        return sign_at_dense(to_dense(elem, ctx.var), alpha)

    plus, minus = [], []
    for f in seq:
        d = f.degree(main)
        lc = f.coeff_of(main, d) if d >= 0 else SparsePoly.zero(f.vars)
        s = sig(lc)
        if s == 0:
            raise ZeroDivisor(gcd_multivar(lc_to_modpoly(lc, ctx), ctx.minpoly))
        plus.append(s)
        minus.append(s if d % 2 == 0 else -s)
    return _sign_changes(minus) - _sign_changes(plus)


def lc_to_modpoly(lc: SparsePoly, ctx: ExtContext) -> SparsePoly:
    if lc.vars_present() - {ctx.var}:
        raise PolyError("leading coefficient not an extension element")
    return lc


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# -- real-solution counting for bivariate systems ----------------------------


SHEAR_CANDIDATES = (1, -1, 2, -2, 3, 5, -3, 7, -5, 11)


class ShearError(PolyError):
    pass


def _resultant_with_penultimate(p: SparsePoly, q: SparsePoly, var: str) -> tuple[SparsePoly, SparsePoly]:
    """Resultant plus the last remainder of positive degree in ``var``."""
    from .poly import exact_div, resultant

    dp, dq = p.degree(var), q.degree(var)
    if dp < dq:
        p, q = q, p
        dp, dq = dq, dp
    if dq <= 0:
        raise PolyError("penultimate undefined for trivial sequences")
    a, b = p, q
    g = SparsePoly.constant(1, p.vars)
    h = SparsePoly.constant(1, p.vars)
    penult = b
    while True:
        delta = a.degree(var) - b.degree(var)
        r = pseudo_rem(a, b, var)
        if r.is_zero():
            return SparsePoly.zero(p.vars), b
        a = b
        b = exact_div(r, g * h ** delta)
        g = a.leading_coeff_wrt(var)
        if delta == 1:
            h = g
        elif delta > 1:
            h = exact_div(g ** delta, h ** (delta - 1))
        if b.degree(var) <= 0:
            penult = a
            break
    res = resultant(p, q, var)
    return res, penult


def _shear(p: SparsePoly, s: int) -> SparsePoly:
    x1 = SparsePoly.variable("x1", p.vars)
    x2 = SparsePoly.variable("x2", p.vars)
    return p.subs_poly("x1", x1 + SparsePoly.constant(s, p.vars) * x2)


def count_real_solutions(f1: SparsePoly, f2: SparsePoly) -> tuple[int, int]:
    """(distinct, with multiplicity) real solutions of f1 = f2 = 0 in R^2.

    The system must be zero-dimensional (no shared curve); verified via the
    gcd of the two polynomials.
    """
    if f1.is_zero() or f2.is_zero():
        raise PolyError("not zero-dimensional")
    if f1.is_constant() or f2.is_constant():
        return 0, 0
    if not gcd_multivar(f1, f2).is_constant():
        raise PolyError("not zero-dimensional")
    last_error = None
    for s in SHEAR_CANDIDATES:
        try:
            return _count_sheared(_shear(f1, s), _shear(f2, s))
        except ShearError as e:
            last_error = e
    raise PolyError(f"no generic shear found: {last_error}")


def _count_sheared(F1: SparsePoly, F2: SparsePoly) -> tuple[int, int]:
    from .poly import squarefree_part

    for F in (F1, F2):
        d = F.degree("x2")
        if d <= 0:
            raise ShearError("degenerate x2 degree")
        lc = F.coeff_of("x2", d)
        if not lc.is_constant():
            raise ShearError("leading coefficient not constant after shear")
    R, penult = _resultant_with_penultimate(F1, F2, "x2")
    if R.is_zero():
        raise PolyError("not zero-dimensional")
    if R.is_constant():
        return 0, 0
    if penult.degree("x2") != 1:
        raise ShearError("defective remainder sequence")
    c1 = penult.coeff_of("x2", 1)
    Rsf = squarefree_part(R, "x1")
    if not c1.is_constant() and gcd_multivar(Rsf, c1).degree("x1") > 0:
        raise ShearError("fiber degeneracy at a resultant root")
    distinct = 0
    with_mult = 0
    for root, mult in isolate_real_roots(R, "x1"):
        distinct += 1
        with_mult += mult
    return distinct, with_mult


def count_real_solutions_param(f1: SparsePoly, f2: SparsePoly, pvar: str, alpha: RealAlgebraic) -> tuple[int, int]:
    """Real-solution counts for a system with one algebraic parameter value.

    ``f1, f2`` live in (x1, x2, pvar); the counts are taken at pvar = alpha.
    """
    if alpha.is_rational():
        r = alpha.as_fraction()
        return count_real_solutions(f1.eval_rational({pvar: r}), f2.eval_rational({pvar: r}))
    minpoly = from_dense(alpha.dense, pvar, f1.vars)
    last_error: Exception | None = None
    for s in SHEAR_CANDIDATES:
        try:
            return _count_sheared_param(_shear(f1, s), _shear(f2, s), pvar, alpha, minpoly)
        except ShearError as e:
            last_error = e
        except ZeroDivisor as zd:
            minpoly = _select_modulus_factor(zd.factor, minpoly, pvar, alpha)
    raise PolyError(f"no generic shear found: {last_error}")


def _select_modulus_factor(factor: SparsePoly, minpoly: SparsePoly, pvar: str, alpha: RealAlgebraic) -> SparsePoly:
    from .poly import exact_div

    f = factor.normalized()
    if _root_in(to_dense(f, pvar), alpha.lo, alpha.hi):
        return f
    return exact_div(minpoly.normalized(), f).normalized()


def _count_sheared_param(F1: SparsePoly, F2: SparsePoly, pvar: str, alpha: RealAlgebraic, minpoly: SparsePoly) -> tuple[int, int]:
    for F in (F1, F2):
        d = F.degree("x2")
        if d <= 0:
            raise ShearError("degenerate x2 degree")
        if not F.coeff_of("x2", d).is_constant():
            raise ShearError("leading coefficient not constant after shear")
    R, penult = _resultant_with_penultimate(F1, F2, "x2")
    ctx = ExtContext(minpoly, pvar)
    R = ctx.reduce(R)
    if R.is_zero():
        raise PolyError("system degenerate at the parameter value")
    if R.degree("x1") <= 0:
        return 0, 0
    if penult.degree("x2") != 1:
        raise ShearError("defective remainder sequence")
    c1 = ctx.reduce(penult.coeff_of("x2", 1))
    if c1.is_zero():
        raise ShearError("vanishing subresultant")
    factors = ext_squarefree_decomposition(R, "x1", ctx)
    # certify: no common root of the squarefree part and the first subresultant
    from .extension import ext_gcd_univar

    if c1.degree("x1") > 0:
        sf = SparsePoly.constant(1, R.vars)
        for f, _ in factors:
            sf = ctx.reduce(sf * f)
        g = ext_gcd_univar(sf, c1, "x1", ctx)
        if g.degree("x1") > 0:
            raise ShearError("fiber degeneracy at a resultant root")
    elif not c1.is_constant():
        # x1-free but parameter-dependent: must not vanish at alpha
        if sign_at_dense(to_dense(c1, pvar), alpha) == 0:
            raise ShearError("first subresultant vanishes at the parameter")
    distinct = 0
    with_mult = 0
    for f, mult in factors:
        n = sturm_count_ext(f, "x1", ctx, alpha)
        distinct += n
        with_mult += n * mult
    return distinct, with_mult
