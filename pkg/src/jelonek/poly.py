"""Exact sparse multivariate polynomial arithmetic over the rationals.

Polynomials are stored as a dictionary mapping exponent tuples to nonzero
``Fraction`` coefficients.  Every polynomial carries an ordered variable
universe; two polynomials interoperate only when their universes coincide.
Exponents may be negative (Laurent terms), which the toric change of
variables produces; the elimination operations (resultant, gcd, content)
require nonnegative exponents in their active variables.

The canonical term order is graded lexicographic with respect to the
universe order, so structural equality of dictionaries is equality of
polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping, Sequence


QQ = Fraction

#: Default variable universe used throughout the pipeline.  x1, x2 are the
#: source coordinates, z1, z2 the toric coordinates, y1, y2 the target
#: coordinates, t the edge parameter, w a spare parameter (shears, sample
#: points) and a an auxiliary algebraic quantity.
DEFAULT_VARS = ("x1", "x2", "z1", "z2", "y1", "y2", "t", "w", "a")


class PolyError(ValueError):
    """Structural misuse of the polynomial kernel."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PolyError(f"coefficient {c!r} is not rational")


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key realizing graded-lex order (later keys are larger terms)."""
    return (sum(exps), exps)


class SparsePoly:
    """A sparse multivariate Laurent polynomial with rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction], variables: Sequence[str] = DEFAULT_VARS):
        self.vars = tuple(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        n = len(self.vars)
        for exps, c in terms.items():
            c = _as_fraction(c)
            if c == 0:
                continue
            if len(exps) != n:
                raise PolyError(f"exponent tuple {exps} does not match universe {self.vars}")
            clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str] = DEFAULT_VARS) -> "SparsePoly":
        return cls({}, variables)

    @classmethod
    def constant(cls, c, variables: Sequence[str] = DEFAULT_VARS) -> "SparsePoly":
        c = _as_fraction(c)
        n = len(variables)
        if c == 0:
            return cls({}, variables)
        return cls({(0,) * n: c}, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = DEFAULT_VARS) -> "SparsePoly":
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls({tuple(e): QQ(1)}, variables)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], c=1, variables: Sequence[str] = DEFAULT_VARS) -> "SparsePoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        for name, k in exps.items():
            e[variables.index(name)] = k
        return cls({tuple(e): _as_fraction(c)}, variables)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return QQ(0)
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def vars_present(self) -> set[str]:
        out: set[str] = set()
        for exps in self.terms:
            for name, e in zip(self.vars, exps):
                if e != 0:
                    out.add(name)
        return out

    def _idx(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise PolyError(f"variable {var!r} not in universe {self.vars}") from None

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        i = self._idx(var)
        return max(exps[i] for exps in self.terms)

    def min_degree(self, var: str) -> int:
        if self.is_zero():
            return -1
        i = self._idx(var)
        return min(exps[i] for exps in self.terms)

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(exps) for exps in self.terms)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=grlex_key)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if self.is_zero():
            raise PolyError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.vars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "SparsePoly") -> "SparsePoly":
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(other, self.vars)
        if not isinstance(other, SparsePoly):
            raise PolyError(f"cannot combine SparsePoly with {type(other).__name__}")
        if other.vars != self.vars:
            raise PolyError(f"variable universes differ: {self.vars} vs {other.vars}")
        return other

    def __add__(self, other) -> "SparsePoly":
        other = self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, QQ(0)) + c
            if s == 0:
                out.pop(exps, None)
            else:
                out[exps] = s
        return SparsePoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other) -> "SparsePoly":
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return SparsePoly.zero(self.vars)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, QQ(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SparsePoly(out, self.vars)

    __rmul__ = __mul__

    def scale(self, c) -> "SparsePoly":
        c = _as_fraction(c)
        if c == 0:
            return SparsePoly.zero(self.vars)
        return SparsePoly({e: k * c for e, k in self.terms.items()}, self.vars)

    def __pow__(self, k: int) -> "SparsePoly":
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a nonnegative integer")
        result = SparsePoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure by one variable -----------------------------------------

    def coeff_of(self, var: str, k: int) -> "SparsePoly":
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        i = self._idx(var)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                e = list(exps)
                e[i] = 0
                out[tuple(e)] = c
        return SparsePoly(out, self.vars)

    def as_univariate(self, var: str) -> list["SparsePoly"]:
        """Dense coefficient list ``[c0, c1, ..., cd]`` with respect to ``var``."""
        if self.is_zero():
            return []
        i = self._idx(var)
        if self.min_degree(var) < 0:
            raise PolyError(f"negative exponents in {var}")
        d = self.degree(var)
        coeffs = [dict() for _ in range(d + 1)]
        for exps, c in self.terms.items():
            e = list(exps)
            k = e[i]
            e[i] = 0
            coeffs[k][tuple(e)] = c
        return [SparsePoly(m, self.vars) for m in coeffs]

    @staticmethod
    def from_univariate(coeffs: Sequence["SparsePoly"], var: str, variables: Sequence[str]) -> "SparsePoly":
        variables = tuple(variables)
        i = variables.index(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for k, coeff in enumerate(coeffs):
            for exps, c in coeff.terms.items():
                e = list(exps)
                e[i] += k
                e = tuple(e)
                s = out.get(e, QQ(0)) + c
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SparsePoly(out, variables)

    def leading_coeff_wrt(self, var: str) -> "SparsePoly":
        if self.is_zero():
            raise PolyError("zero polynomial")
        return self.coeff_of(var, self.degree(var))

    def trailing_coeff_wrt(self, var: str) -> "SparsePoly":
        if self.is_zero():
            raise PolyError("zero polynomial")
        return self.coeff_of(var, self.min_degree(var))

    # -- substitution -------------------------------------------------------

    def eval_rational(self, assignment: Mapping[str, Fraction]) -> "SparsePoly":
        """Substitute rational values for some variables (partial evaluation)."""
        idx = {self._idx(v): _as_fraction(x) for v, x in assignment.items()}
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            val = c
            e = list(exps)
            for i, x in idx.items():
                k = e[i]
                e[i] = 0
                if k != 0:
                    if x == 0 and k < 0:
                        raise PolyError("evaluating negative power at zero")
                    val *= x ** k
            if val == 0:
                continue
            e = tuple(e)
            s = out.get(e, QQ(0)) + val
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePoly(out, self.vars)

    def subs_poly(self, var: str, replacement: "SparsePoly") -> "SparsePoly":
        """Substitute a polynomial for ``var`` (exponents in ``var`` must be >= 0)."""
        replacement = self._check(replacement)
        if self.is_zero():
            return self
        if self.min_degree(var) < 0:
            raise PolyError(f"negative exponents in {var}")
        coeffs = self.as_univariate(var)
        # Horner evaluation in the replacement polynomial.
        result = SparsePoly.zero(self.vars)
        for coeff in reversed(coeffs):
            result = result * replacement + coeff
        return result

    def monomial_substitute(self, U: Sequence[Sequence[int]], from_vars: tuple[str, str], to_vars: tuple[str, str]) -> "SparsePoly":
        """Apply the monomial change of variables sending x^a to z^(U a).

        ``U`` is a 2x2 integer matrix acting on the exponent pair of
        ``from_vars``; all other variables are carried through untouched.
        The result may be Laurent.
        """
        i1, i2 = self._idx(from_vars[0]), self._idx(from_vars[1])
        j1, j2 = self._idx(to_vars[0]), self._idx(to_vars[1])
        if from_vars[0] != to_vars[0] and to_vars[0] in self.vars_present():
            raise PolyError(f"target variable {to_vars[0]} already present")
        if from_vars[1] != to_vars[1] and to_vars[1] in self.vars_present():
            raise PolyError(f"target variable {to_vars[1]} already present")
        (u11, u12), (u21, u22) = U
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            a1, a2 = exps[i1], exps[i2]
            e = list(exps)
            e[i1] = 0
            e[i2] = 0
            e[j1] += u11 * a1 + u12 * a2
            e[j2] += u21 * a1 + u22 * a2
            e = tuple(e)
            s = out.get(e, QQ(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePoly(out, self.vars)

    def clear_denominators(self, variables: Iterable[str]) -> tuple["SparsePoly", dict[str, int]]:
        """Multiply by the minimal monomial making exponents nonnegative.

        Returns the cleared polynomial together with the exponent map of the
        clearing monomial.
        """
        shift: dict[str, int] = {}
        for v in variables:
            m = self.min_degree(v)
            if m < 0:
                shift[v] = -m
        if not shift:
            return self, {}
        idx = {self._idx(v): k for v, k in shift.items()}
        out = {}
        for exps, c in self.terms.items():
            e = list(exps)
            for i, k in idx.items():
                e[i] += k
            out[tuple(e)] = c
        return SparsePoly(out, self.vars), shift

    def derivative(self, var: str) -> "SparsePoly":
        i = self._idx(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k == 0:
                continue
            e = list(exps)
            e[i] = k - 1
            out[tuple(e)] = c * k
        return SparsePoly(out, self.vars)

    # -- normalization -----------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient and primitive."""
        if self.is_zero():
            raise PolyError("zero polynomial")
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return QQ(num, den)

    def normalized(self) -> "SparsePoly":
        """Integer-primitive scalar multiple with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.rational_content()
        _, lead = self.leading_term()
        if lead < 0:
            c = -c
        return self.scale(1 / c)

    # -- printing ----------------------------------------------------------

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        return poly_to_str(self)


def poly_to_str(p: SparsePoly) -> str:
    """Render in the CLI grammar: ``3/2*x1^2*x2 - 1`` (descending graded-lex)."""
    if p.is_zero():
        return "0"
    pieces = []
    for exps in sorted(p.terms, key=grlex_key, reverse=True):
        c = p.terms[exps]
        factors = []
        for name, e in zip(p.vars, exps):
            if e == 0:
                continue
            if e < 0:
                raise PolyError("cannot render Laurent term")
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(c)
        coeff_str = str(mag)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = "*".join([coeff_str] + factors)
        else:
            body = coeff_str
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- division, gcd, resultant ---------------------------------------------


def exact_div(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Exact quotient p/q; raises :class:`PolyError` if q does not divide p."""
    q = p._check(q)
    if q.is_zero():
        raise PolyError("division by zero polynomial")
    if p.is_zero():
        return p
    lead_q, lc_q = q.leading_term()
    rem = p
    quot: dict[tuple[int, ...], Fraction] = {}
    while not rem.is_zero():
        lead_r, lc_r = rem.leading_term()
        e = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(x < 0 for x in e):
            raise PolyError("not divisible")
        c = lc_r / lc_q
        quot[e] = quot.get(e, QQ(0)) + c
        rem = rem - q * SparsePoly({e: c}, p.vars)
    return SparsePoly(quot, p.vars)


def divides(q: SparsePoly, p: SparsePoly) -> bool:
    """True iff q divides p exactly (q nonzero)."""
    try:
        exact_div(p, q)
        return True
    except PolyError:
        return False


def pseudo_division(p: SparsePoly, q: SparsePoly, var: str) -> tuple[SparsePoly, SparsePoly]:
    """Pseudo-quotient and -remainder of p by q with respect to ``var``.

    Satisfies lc(q)^(dp-dq+1) * p == quo * q + rem with deg_var(rem) < deg_var(q).
    """
    dq = q.degree(var)
    if dq < 0:
        raise PolyError("pseudo-division by zero")
    lc_q = q.coeff_of(var, dq)
    quo = SparsePoly.zero(p.vars)
    rem = p
    dp = rem.degree(var)
    if dp < dq:
        return quo, rem
    steps = dp - dq + 1
    i = p._idx(var)
    done = 0
    while not rem.is_zero() and rem.degree(var) >= dq:
        dr = rem.degree(var)
        lc_r = rem.coeff_of(var, dr)
        shift = [0] * len(p.vars)
        shift[i] = dr - dq
        mono = SparsePoly({tuple(shift): QQ(1)}, p.vars)
        quo = quo * lc_q + lc_r * mono
        rem = rem * lc_q - q * lc_r * mono
        done += 1
    if done < steps:
        f = lc_q ** (steps - done)
        quo = quo * f
        rem = rem * f
    return quo, rem


def pseudo_rem(p: SparsePoly, q: SparsePoly, var: str) -> SparsePoly:
    return pseudo_division(p, q, var)[1]


def resultant(p: SparsePoly, q: SparsePoly, var: str) -> SparsePoly:
    """Exact resultant of p and q with respect to ``var``.

    Computed by the subresultant polynomial remainder sequence with content
    extraction up front, so intermediate growth stays controlled.  Returns
    the zero polynomial when the inputs share a factor involving ``var``.
    """
    q = p._check(q)
    if p.is_zero() or q.is_zero():
        return SparsePoly.zero(p.vars)
    dp, dq = p.degree(var), q.degree(var)
    if dp == 0 and dq == 0:
        raise PolyError(f"both inputs constant in {var}")
    if p.min_degree(var) < 0 or q.min_degree(var) < 0:
        raise PolyError(f"negative exponents in {var}")
    sign = 1
    if dp < dq:
        p, q = q, p
        dp, dq = dq, dp
        if dp % 2 == 1 and dq % 2 == 1:
            sign = -sign
    if dq == 0:
        return (q ** dp).scale(sign)
    # Strip rational content only (cheap); polynomial content handled by PRS.
    a = p
    b = q
    g = SparsePoly.constant(1, p.vars)
    h = SparsePoly.constant(1, p.vars)
    while True:
        da, db = a.degree(var), b.degree(var)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = pseudo_rem(a, b, var)
        if r.is_zero():
            return SparsePoly.zero(p.vars)
        a = b
        denom = g * (h ** delta)
        b = exact_div(r, denom)
        g = a.leading_coeff_wrt(var)
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = exact_div(g ** delta, h ** (delta - 1))
        if b.degree(var) <= 0:
            if b.is_zero():
                return SparsePoly.zero(p.vars)
            da = a.degree(var)
            lb = b.coeff_of(var, 0)
            if da == 0:
                res = lb
            elif da == 1:
                res = lb
            else:
                res = exact_div(lb ** da, h ** (da - 1))
            return res.scale(sign)


def _content_of_coeffs(coeffs: list[SparsePoly]) -> SparsePoly:
    nonzero = [c for c in coeffs if not c.is_zero()]
    if not nonzero:
        raise PolyError("all coefficients zero")
    acc = nonzero[0]
    for c in nonzero[1:]:
        acc = gcd_multivar(acc, c)
        if acc.is_constant():
            break
    return acc.normalized()


def content_wrt(p: SparsePoly, inner_vars: Iterable[str]) -> tuple[SparsePoly, SparsePoly]:
    """Split p = content * primitive with content purely in ``inner_vars``.

    The polynomial is viewed in the complementary (outer) variables with
    coefficients in the inner ring; the content is the gcd of those
    coefficients, normalized integer-primitive with positive leading
    coefficient.
    """
    if p.is_zero():
        raise PolyError("zero polynomial")
    inner = set(inner_vars)
    outer_coeffs: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    inner_idx = [i for i, v in enumerate(p.vars) if v in inner]
    for exps, c in p.terms.items():
        outer = list(exps)
        within = [0] * len(p.vars)
        for i in inner_idx:
            within[i] = exps[i]
            outer[i] = 0
        outer_coeffs.setdefault(tuple(outer), {})[tuple(within)] = c
    coeffs = [SparsePoly(m, p.vars) for m in outer_coeffs.values()]
    content = _content_of_coeffs(coeffs)
    primitive = exact_div(p, content)
    return content, primitive


def _dense_int(p: SparsePoly, var: str) -> list[int]:
    """Integer-primitive ascending coefficient list of a univariate polynomial."""
    d = p.degree(var)
    i = p._idx(var)
    lcm = 1
    for c in p.terms.values():
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    out = [0] * (d + 1)
    for exps, c in p.terms.items():
        out[exps[i]] = int(c * lcm)
    g = 0
    for c in out:
        g = int_gcd(g, c)
    if g > 1:
        out = [c // g for c in out]
    return out


def _int_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = int_gcd(g, c)
    if g > 1:
        a = [c // g for c in a]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        k = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[k + i] -= la * c
        a = _int_trim(a)
    return a


def _gcd_univar_dense(p: SparsePoly, q: SparsePoly, var: str) -> SparsePoly:
    """Primitive-PRS gcd for univariate polynomials; fast on big coefficients."""
    a = _dense_int(p, var)
    b = _dense_int(q, var)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return SparsePoly.monomial({}, 1, p.vars)
        r = _int_primitive(_int_prem(a, b))
        a, b = b, r
    i = p.vars.index(var)
    terms = {}
    for k, c in enumerate(_int_primitive(a)):
        if c:
            e = [0] * len(p.vars)
            e[i] = k
            terms[tuple(e)] = QQ(c)
    return SparsePoly(terms, p.vars).normalized()


def gcd_multivar(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Gcd over Q, normalized integer-primitive with positive leading coeff.

    Primitive polynomial remainder sequence with recursive content
    extraction; gcd(p, 0) is the normalization of p.
    """
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd(0, 0) undefined")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    pv = p.vars_present()
    qv = q.vars_present()
    if not pv or not qv:
        return SparsePoly.constant(1, p.vars)
    common = pv & qv
    if not common:
        return SparsePoly.constant(1, p.vars)
    if len(pv) == 1 and pv == qv:
        return _gcd_univar_dense(p, q, next(iter(pv)))
    # main variable: the last common one in universe order keeps elimination
    # variables (x, z) as coefficients less often than not; any choice works.
    var = [v for v in p.vars if v in common][-1]
    cp, pp = content_wrt(p, [v for v in p.vars if v != var])
    cq, qq = content_wrt(q, [v for v in q.vars if v != var])
    # p = pp * cp where cp is free of var; swap roles: we need content w.r.t.
    # the coefficient ring (all vars except var).
    cont_gcd = gcd_multivar(cp, cq) if (not cp.is_constant() or not cq.is_constant()) else SparsePoly.constant(1, p.vars)
    a, b = pp, qq
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while True:
        if b.is_zero():
            g = a
            break
        if b.degree(var) == 0:
            g = SparsePoly.constant(1, p.vars)
            break
        r = pseudo_rem(a, b, var)
        if r.is_zero():
            g = b
            break
        _, r = content_wrt(r, [v for v in p.vars if v != var])
        a, b = b, r
    if not g.is_constant():
        _, g = content_wrt(g, [v for v in p.vars if v != var])
    result = (cont_gcd * g).normalized()
    return result


def squarefree_decomposition(p: SparsePoly, var: str | None = None) -> list[tuple[SparsePoly, int]]:
    """Yun decomposition [(factor, multiplicity), ...] of a univariate polynomial.

    Factors are normalized, pairwise coprime and squarefree; the product of
    factor^multiplicity equals p up to a rational unit.
    """
    if p.is_zero():
        raise PolyError("zero polynomial")
    present = p.vars_present()
    if var is None:
        if len(present) > 1:
            raise PolyError("polynomial is not univariate")
        if not present:
            return []
        var = next(iter(present))
    if p.degree(var) == 0:
        return []
    dp = p.derivative(var)
    g = gcd_multivar(p, dp)
    out: list[tuple[SparsePoly, int]] = []
    c = exact_div(p, g)
    d = exact_div(dp, g) - c.derivative(var)
    i = 1
    while True:
        if c.degree(var) == 0:
            break
        a = gcd_multivar(c, d)
        if a.degree(var) > 0:
            out.append((a.normalized(), i))
        c = exact_div(c, a)
        d = exact_div(d, a) - c.derivative(var)
        i += 1
    return out


def squarefree_part(p: SparsePoly, var: str | None = None) -> SparsePoly:
    """Product of the distinct irreducible factors of a univariate polynomial."""
    factors = squarefree_decomposition(p, var)
    if not factors:
        raise PolyError("constant polynomial has no squarefree part")
    acc = SparsePoly.constant(1, p.vars)
    for f, _ in factors:
        acc = acc * f
    return acc.normalized()


def squarefree_part_multivar(p: SparsePoly) -> SparsePoly:
    """Squarefree part: p divided by the gcd of p and all its first partials."""
    if p.is_zero():
        raise PolyError("zero polynomial")
    g = p
    for v in sorted(p.vars_present()):
        d = p.derivative(v)
        if d.is_zero():
            continue
        g = gcd_multivar(g, d)
        if g.is_constant():
            break
    if g.is_constant():
        return p.normalized()
    return exact_div(p, g).normalized()
