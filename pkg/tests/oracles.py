"""Independent numeric oracles used by the test suite.

The escape oracle decides whether a candidate component attracts real
escapes: it follows the real solutions of f - y_k = 0 as y_k approaches a
sample point on the component and watches their norms.  High-precision
arithmetic (mpmath on exactly specialized resultants) keeps it reliable at
step sizes far beyond double precision.
"""

from __future__ import annotations

from fractions import Fraction as F

import mpmath as mp

from jelonek.poly import SparsePoly, resultant
from jelonek.realroots import rational_roots

ESCAPE_NORM = 1e6


def _specialize_exact(sym: SparsePoly, y: tuple[F, F], var: str) -> list[F]:
    spec = sym.eval_rational({"y1": y[0], "y2": y[1]})
    if spec.is_zero():
        return []
    return [c.constant_value() for c in spec.as_univariate(var)]


def _exact_squarefree(coeffs: list[F]) -> list[F]:
    from jelonek.realroots import from_dense, to_dense
    from jelonek.poly import squarefree_part

    p = from_dense(coeffs, "x1")
    if p.degree("x1") < 1:
        return coeffs
    return to_dense(squarefree_part(p, "x1"), "x1")


def _mp_real_roots(coeffs: list[F], dps: int = 60):
    if len(coeffs) <= 1:
        return []
    coeffs = _exact_squarefree(coeffs)
    with mp.workdps(dps):
        cs = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in reversed(coeffs)]
        while cs and cs[0] == 0:
            cs = cs[1:]
        if len(cs) <= 1:
            return []
        try:
            roots = mp.polyroots(cs, maxsteps=400, extraprec=260)
        except (mp.libmp.NoConvergence, ZeroDivisionError):
            return None
        return [r.real for r in roots if abs(r.imag) < mp.mpf("1e-25") * (1 + abs(r))]


def real_solutions_near(f1: SparsePoly, f2: SparsePoly, y: tuple[F, F], dps: int = 60):
    """All real solutions of f = y, found through an exact resultant."""
    y1 = SparsePoly.variable("y1", f1.vars)
    y2 = SparsePoly.variable("y2", f1.vars)
    Rsym = resultant(f1 - y1, f2 - y2, "x2")
    return _real_solutions_from_resultant(Rsym, f1, f2, y, dps)


def _mp_eval_coeff(c: SparsePoly, x1r) -> "mp.mpf":
    """Evaluate a coefficient polynomial (in x1 only) at an mpf point."""
    acc = mp.mpf(0)
    i = c._idx("x1")
    for exps, cc in c.terms.items():
        acc += mp.mpf(cc.numerator) / mp.mpf(cc.denominator) * (x1r ** exps[i])
    return acc


def _real_solutions_from_resultant(Rsym, f1, f2, y, dps=60):
    coeffs = _specialize_exact(Rsym, y, "x1")
    roots1 = _mp_real_roots(coeffs, dps)
    if roots1 is None:
        return None
    F1 = f1 - SparsePoly.constant(y[0], f1.vars)
    fiber_coeffs = F1.as_univariate("x2")
    sols = []
    with mp.workdps(dps):
        for x1r in roots1:
            vals = [_mp_eval_coeff(c, x1r) for c in fiber_coeffs]
            while vals and vals[-1] == 0:
                vals.pop()
            if len(vals) <= 1:
                continue
            try:
                roots2 = mp.polyroots(list(reversed(vals)), maxsteps=200, extraprec=120)
            except mp.libmp.NoConvergence:
                continue
            for x2r in roots2:
                if abs(x2r.imag) > mp.mpf("1e-25") * (1 + abs(x2r)):
                    continue
                val = mp.mpf(0)
                for exps, cc in f2.terms.items():
                    val += mp.mpf(cc.numerator) / mp.mpf(cc.denominator) * (x1r ** exps[0]) * (x2r.real ** exps[1])
                val -= mp.mpf(y[1].numerator) / mp.mpf(y[1].denominator)
                size = 1 + abs(x1r) ** f2.total_degree() + abs(x2r.real) ** f2.total_degree()
                if abs(val) < mp.mpf("1e-20") * size:
                    sols.append((x1r, x2r.real))
    return sols


def escape_oracle(f1: SparsePoly, f2: SparsePoly, component: SparsePoly,
                  samples: list[tuple[F, F]] | None = None, dps: int = 60) -> bool | None:
    """True if the component attracts real escapes, False if provably not,
    None when the numerics are inconclusive.

    Approaches each sample point on the component from four directions with
    exactly-represented offsets down to 1e-30 and tracks the largest real
    solution norm.
    """
    if samples is None:
        samples = _sample_points(component)
        if not samples:
            return None
    y1 = SparsePoly.variable("y1", f1.vars)
    y2 = SparsePoly.variable("y2", f1.vars)
    Rsym = resultant(f1 - y1, f2 - y2, "x2")
    directions = [(F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1)),
                  (F(1), F(1)), (F(-1), F(-1))]
    saw_escape = False
    anomalies = False
    for y_star in samples:
        for d in directions:
            norms = []
            for e in (6, 12, 18, 24, 30):
                eps = F(1, 10 ** e)
                yk = (y_star[0] + eps * d[0], y_star[1] + eps * d[1])
                sols = _real_solutions_from_resultant(Rsym, f1, f2, yk, dps)
                if sols is None:
                    return None
                norms.append(max((max(abs(a), abs(b)) for a, b in sols), default=mp.mpf(0)))
            # a genuine escape grows consistently across probe scales; an
            # isolated huge norm is a conjugate-pair artifact of the numerics
            trending = (norms[-1] > ESCAPE_NORM and norms[-3] > 0
                        and norms[-2] > 5 * norms[-3] and norms[-1] > 5 * norms[-2]
                        and norms[-2] > 100)
            if trending:
                saw_escape = True
            elif norms[-1] > ESCAPE_NORM:
                anomalies = True
    if saw_escape:
        return True
    if anomalies:
        return None
    return False


def _sample_points(component: SparsePoly) -> list[tuple[F, F]]:
    out = []
    for fixed_var, free_var in (("y1", "y2"), ("y2", "y1")):
        for c in (F(1, 3), F(-7, 5), F(13, 7)):
            line = component.eval_rational({fixed_var: c})
            if line.is_zero() or line.degree(free_var) < 1:
                continue
            for r in rational_roots(line, free_var):
                pt = (c, r) if fixed_var == "y1" else (r, c)
                out.append(pt)
        if out:
            break
    return out[:3]
