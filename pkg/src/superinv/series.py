"""Truncated Poincare series T, T-bar, P', P-bar', P and closed-form checks.

Series are assembled coefficientwise from per-partition multiplicities:

    T(k,l;a,b)  = sum over typical lam of m_lam S_alpha(t_1..t_a) S_beta(u_1..u_b)
    P'(k,l;a,b) = sum over lam in H(a,b) of m'_lam HS_lam(t_1..t_a; u_1..u_b)

with the bars swapping in m-bar. Both are graded by total degree in the
t's and u's (|alpha| + |beta| for T, |lam| for the P family).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from .characters import m_oracle, mbar_oracle
from .laurent import LaurentPoly, exact_div, invert_vars, NonExactDivision
from .multiplicity import (_large_route, _region_route, m_prime, mbar_prime)
from .partitions import (HookParams, Partition, TypicalSplit, enumerate_hook,
                         is_large, join_typical)
from .symfunc import Alphabet, SeriesTruncation, hook_schur_eval, schur_eval

KINDS = ("T", "Tbar", "Pprime", "Pbarprime", "P", "Pbar")


def series_variables(a: int, b: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
    return tuple(f"t{i}" for i in range(1, a + 1)), tuple(f"u{j}" for j in range(1, b + 1))


def _pmap(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(*it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_star, [(fn, it) for it in items]))


def _star(job):
    fn, args = job
    return fn(*args)


def _typical_m(lam, h, bar: bool) -> int:
    # typical partitions of the support hook are large except in the
    # degenerate kl = 0 cases, where no Z1 factors exist and the region
    # route is the plain constant term
    if is_large(lam, h):
        return _large_route(lam, h, bar)
    return _region_route(lam, h, bar)


def _typical_splits(h: HookParams, a: int, b: int, D: int):
    K, L = h.support
    for da in range(D + 1):
        for alpha in enumerate_hook((min(a, K), 0), da):
            for db in range(D - da + 1):
                for beta in enumerate_hook((min(b, L), 0), db):
                    yield TypicalSplit(alpha, beta, K, L)


def _t_series(h, a, b, D, bar, workers) -> SeriesTruncation:
    h = HookParams(*h)
    T, U = series_variables(a, b)
    At, Au = Alphabet.of_variables(T), Alphabet.of_variables(U)
    splits = list(_typical_splits(h, a, b, D))
    coefs = _pmap(_typical_m, [(join_typical(s), h, bar) for s in splits], workers)
    acc = LaurentPoly.const(0)
    for s, m in zip(splits, coefs):
        if m:
            acc = acc + m * schur_eval(s.alpha, At) * schur_eval(s.beta, Au)
    return SeriesTruncation(acc, D, T, U)


def T_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _t_series(h, a, b, D, False, workers)


def Tbar_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _t_series(h, a, b, D, True, workers)


def _hs_series(h, a, b, D, mult: Callable, workers) -> SeriesTruncation:
    h = HookParams(*h)
    T, U = series_variables(a, b)
    At, Au = Alphabet.of_variables(T), Alphabet.of_variables(U)
    lams = [lam for n in range(D + 1) for lam in enumerate_hook((a, b), n)]
    coefs = _pmap(mult, [(lam, h) for lam in lams], workers)
    acc = LaurentPoly.const(0)
    for lam, m in zip(lams, coefs):
        if m:
            acc = acc + m * hook_schur_eval(lam, At, Au)
    return SeriesTruncation(acc, D, T, U)


def Pprime_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _hs_series(h, a, b, D, m_prime, workers)


def Pbarprime_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _hs_series(h, a, b, D, mbar_prime, workers)


def P_oracle_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _hs_series(h, a, b, D, m_oracle, workers)


def Pbar_oracle_series(h, a: int, b: int, D: int, workers: int = 1) -> SeriesTruncation:
    return _hs_series(h, a, b, D, mbar_oracle, workers)


SERIES = {
    "T": T_series,
    "Tbar": Tbar_series,
    "Pprime": Pprime_series,
    "Pbarprime": Pbarprime_series,
    "P": P_oracle_series,
    "Pbar": Pbar_oracle_series,
}


@dataclass
class RationalForm:
    """prefactor * numerator / prod (1 - m)^mult over the listed monomials."""

    numerator: LaurentPoly
    denominator: Sequence[tuple[LaurentPoly, int]] = ()
    prefactor: LaurentPoly = field(default_factory=lambda: LaurentPoly.const(1))
    t_vars: tuple[str, ...] = ()
    u_vars: tuple[str, ...] = ()

    def __post_init__(self):
        for m, mult in self.denominator:
            if not m.is_monomial() or m.terms.get(0):
                raise ValueError(f"denominator factor 1 - ({m}) needs a non-constant monomial")
            if mult < 1:
                raise ValueError("denominator multiplicities must be positive")
        if not self.prefactor.is_monomial():
            raise ValueError("prefactor must be a monomial or nonzero scalar")


def rational_expand(r: RationalForm, D: int) -> SeriesTruncation:
    """Taylor expansion of ``r`` to total degree D in its t and u variables."""
    variables = tuple(r.t_vars) + tuple(r.u_vars)
    weights = {v: 1 for v in variables}
    out = (r.numerator * r.prefactor).truncate(D, weights)
    for m, mult in r.denominator:
        lo, _ = m.degree(variables)
        if lo <= 0:
            raise ValueError(f"denominator monomial {m} needs positive degree")
        geometric = LaurentPoly.const(1)
        power = LaurentPoly.const(1)
        for _ in range(D // lo):
            power = power * m
            geometric = geometric + power
        for _ in range(mult):
            out = (out * geometric).truncate(D, weights)
    return SeriesTruncation(out, D, tuple(r.t_vars), tuple(r.u_vars))


class FunctionalEquationReport(NamedTuple):
    holds: bool
    expected_sign: int
    found_sign: int | None
    found_monomial: LaurentPoly | None

    def __bool__(self) -> bool:
        return self.holds


def _reflected_numerator(r: RationalForm) -> LaurentPoly:
    # r(1/t) = N(1/t) p(1/t) prod(-m)^e / prod(1-m)^e since 1 - 1/m = -(1-m)/m
    out = invert_vars(r.numerator) * invert_vars(r.prefactor)
    for m, mult in r.denominator:
        out = out * (-m) ** mult
    return out


def find_functional_equation(r: RationalForm) -> tuple[int, LaurentPoly] | None:
    """Return (sign, monomial w) with r(1/t, 1/u) = sign * w * r(t, u), or None."""
    lhs = _reflected_numerator(r)
    rhs = r.numerator * r.prefactor
    if not rhs:
        return None
    try:
        q = exact_div(lhs, rhs)
    except NonExactDivision:
        return None
    if not q.is_monomial():
        return None
    (key, c), = q.terms.items()
    if c not in (1, -1):
        return None
    return c, LaurentPoly._raw(q.gens, {key: 1})


def functional_equation_check(r: RationalForm, h, a: int, b: int) -> FunctionalEquationReport:
    """Check r(1/t; 1/u) = (-1)^((a-1)(k+l)+1) (t_1..t_a)^(k^2+l^2) (u_1..u_b)^(2kl) r(t; u)."""
    k, ell = h
    if len(r.t_vars) != a or len(r.u_vars) != b:
        raise ValueError("closed form does not have a t's and b u's")
    sign = -1 if ((a - 1) * (k + ell) + 1) % 2 else 1
    weight = LaurentPoly.monomial({**{t: k * k + ell * ell for t in r.t_vars},
                                   **{u: 2 * k * ell for u in r.u_vars}})
    found = find_functional_equation(r)
    holds = _reflected_numerator(r) == sign * weight * r.numerator * r.prefactor
    if found is None:
        return FunctionalEquationReport(holds, sign, None, None)
    return FunctionalEquationReport(holds, sign, found[0], found[1])
