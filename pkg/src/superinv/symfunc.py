"""Symmetric functions evaluated at alphabets of Laurent monomials.

Schur functions go through Jacobi-Trudi determinants of complete (or
elementary) symmetric functions, never through the bialternant: the
alphabets used for invariants repeat the unit monomial, so Vandermonde
denominators vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly, _pack, sort_vars
from .partitions import Partition, conjugate, contains, subpartitions

_ZERO = LaurentPoly.const(0)
_ONE = LaurentPoly.const(1)


class NotContained(ValueError):
    pass


class Alphabet:
    """An ordered multiset of Laurent monomials (coefficient 1).

    Two alphabets with the same monomials in any order share memoized h_r/e_r
    tables, since symmetric functions only see the multiset.
    """

    __slots__ = ("monomials", "gens", "_key")

    def __init__(self, monomials: Iterable[LaurentPoly | dict]):
        monos = []
        for m in monomials:
            if isinstance(m, dict):
                m = LaurentPoly.monomial(m)
            if not m.is_monomial() or next(iter(m.terms.values())) != 1:
                raise ValueError(f"alphabet entries must be unit-coefficient monomials, got {m}")
            monos.append(m.compact())
        self.monomials = tuple(monos)
        self.gens = sort_vars(v for m in monos for v in m.gens)
        keys = sorted(next(iter(m._embed(self.gens))) for m in monos)
        self._key = (self.gens, tuple(keys))

    @classmethod
    def of_variables(cls, names: Iterable[str]) -> "Alphabet":
        return cls(LaurentPoly.var(v) for v in names)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.monomials + other.monomials)

    def __repr__(self) -> str:
        return "Alphabet([" + ", ".join(str(m) for m in self.monomials) + "])"

    def _unit_keys(self) -> list[int]:
        return list(self._key[1])


# h_r / e_r / p_r tables, keyed by alphabet multiset
_H: dict[tuple, list[LaurentPoly]] = {}
_E: dict[tuple, list[LaurentPoly]] = {}
_P: dict[tuple, list[LaurentPoly]] = {}


def clear_caches() -> None:
    _H.clear()
    _E.clear()
    _P.clear()


def power_sum_eval(r: int, A: Alphabet) -> LaurentPoly:
    if r < 1:
        raise ValueError("power sums start at r = 1")
    table = _P.setdefault(A._key, [None])
    while len(table) <= r:
        s = len(table)
        terms: dict[int, int] = {}
        for k in A._unit_keys():
            terms[k * s] = terms.get(k * s, 0) + 1
        table.append(LaurentPoly._raw(A.gens, {k: c for k, c in terms.items() if c}))
    return table[r]


def _newton(r: int, A: Alphabet, cache: dict, sign: int) -> LaurentPoly:
    # r*h_r = sum_i p_i h_{r-i};  r*e_r = sum_i (-1)^(i-1) p_i e_{r-i}
    table = cache.setdefault(A._key, [_ONE])
    n = len(A)
    while len(table) <= r:
        s = len(table)
        if sign < 0 and s > n:
            table.append(_ZERO)
            continue
        acc = _ZERO
        for i in range(1, s + 1):
            term = power_sum_eval(i, A) * table[s - i]
            acc = acc - term if (sign < 0 and i % 2 == 0) else acc + term
        table.append(acc.scale_div(s))
    return table[r]


def complete_h_eval(r: int, A: Alphabet) -> LaurentPoly:
    """h_r(A) via Newton's recurrence; h_0 = 1, h_r = 0 for r < 0."""
    if r < 0:
        return _ZERO
    if r == 0:
        return _ONE
    if not len(A):
        return _ZERO
    return _newton(r, A, _H, +1)


def elementary_e_eval(r: int, A: Alphabet) -> LaurentPoly:
    if r < 0 or r > len(A):
        return _ZERO
    if r == 0:
        return _ONE
    return _newton(r, A, _E, -1)


def determinant(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along rows, memoized over the set of used columns."""
    n = len(rows)
    if n == 0:
        return _ONE
    memo: dict[int, LaurentPoly] = {}

    def minor(mask: int) -> LaurentPoly:
        i = bin(mask).count("1")
        if i == n:
            return _ONE
        if mask in memo:
            return memo[mask]
        acc = _ZERO
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                continue
            entry = rows[i][j]
            if entry:
                sub = minor(mask | (1 << j))
                if sub:
                    acc = acc + entry * sub if sign > 0 else acc - entry * sub
            sign = -sign
        memo[mask] = acc
        return acc

    return minor(0)


def _jt(lam: Sequence[int], mu: Sequence[int], entry) -> LaurentPoly:
    n = len(lam)
    mu = list(mu) + [0] * (n - len(mu))
    rows = [[entry(lam[i] - mu[j] - i + j) for j in range(n)] for i in range(n)]
    return determinant(rows)


def schur_eval(lam: Sequence[int], A: Alphabet) -> LaurentPoly:
    """S_lam(A) = det(h_{lam_i - i + j}(A))."""
    if len(lam) > len(A):
        return _ZERO
    return _jt(lam, (), lambda r: complete_h_eval(r, A))


def skew_schur_eval(lam: Sequence[int], mu: Sequence[int], A: Alphabet) -> LaurentPoly:
    """S_{lam/mu}(A) = det(h_{lam_i - mu_j - i + j}(A))."""
    if not contains(lam, mu):
        raise NotContained(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return _jt(lam, mu, lambda r: complete_h_eval(r, A))


def conjugate_skew_schur_eval(lam: Sequence[int], mu: Sequence[int], B: Alphabet) -> LaurentPoly:
    """S_{(lam/mu)'}(B), via the dual Jacobi-Trudi form det(e_{lam_i - mu_j - i + j}(B))."""
    if not contains(lam, mu):
        raise NotContained(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return _jt(lam, mu, lambda r: elementary_e_eval(r, B))


_HS: dict[tuple, LaurentPoly] = {}


def hook_schur_eval(lam: Sequence[int], A: Alphabet, B: Alphabet) -> LaurentPoly:
    """HS_lam(A; B) = sum over mu inside lam of S_mu(A) * S_{(lam/mu)'}(B).

    Terms vanish unless mu has at most |A| rows and every row of lam/mu has
    at most |B| boxes, so only those mu are visited.
    """
    lam = Partition(lam)
    key = (lam, A, B)
    if key in _HS:
        return _HS[key]
    nb = len(B)
    lows = [p - nb for p in lam]
    acc = _ZERO
    for mu in subpartitions(lam, max_len=len(A), min_parts=lows):
        s = schur_eval(mu, A)
        if not s:
            continue
        t = conjugate_skew_schur_eval(lam, mu, B)
        if t:
            acc = acc + s * t
    _HS[key] = acc
    return acc


def weyl_delta(X: Sequence[str]) -> LaurentPoly:
    """prod over ordered pairs i != j of (1 - x_i / x_j)."""
    out = _ONE
    for i, a in enumerate(X):
        for j, b in enumerate(X):
            if i != j:
                out = out * (1 - LaurentPoly.monomial({a: 1, b: -1}))
    return out


@dataclass
class SeriesTruncation:
    """A power series truncated to total degree ``degree_bound``.

    Degree is measured over ``t_vars + u_vars``; other generators (if any)
    ride along as coefficients.
    """

    poly: LaurentPoly
    degree_bound: int
    t_vars: tuple[str, ...] = ()
    u_vars: tuple[str, ...] = ()

    @property
    def series_vars(self) -> tuple[str, ...]:
        return tuple(self.t_vars) + tuple(self.u_vars)

    def _check(self, other: "SeriesTruncation") -> None:
        if (self.degree_bound, tuple(self.t_vars), tuple(self.u_vars)) != \
                (other.degree_bound, tuple(other.t_vars), tuple(other.u_vars)):
            raise ValueError("series truncations over different variables or bounds")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesTruncation):
            return NotImplemented
        self._check(other)
        return self.poly == other.poly

    def __add__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        self._check(other)
        return SeriesTruncation(self.poly + other.poly, self.degree_bound, self.t_vars, self.u_vars)

    def __sub__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        self._check(other)
        return SeriesTruncation(self.poly - other.poly, self.degree_bound, self.t_vars, self.u_vars)

    def __mul__(self, other) -> "SeriesTruncation":
        if isinstance(other, SeriesTruncation):
            self._check(other)
            other = other.poly
        return SeriesTruncation(mul_truncated(self.poly, other, self.degree_bound, self.series_vars),
                                self.degree_bound, self.t_vars, self.u_vars)

    def truncate(self, D: int) -> "SeriesTruncation":
        if D > self.degree_bound:
            raise ValueError("cannot raise a truncation bound")
        return SeriesTruncation(self.poly.truncate(D, {v: 1 for v in self.series_vars}),
                                D, self.t_vars, self.u_vars)

    def coefficient(self, exps: dict[str, int]):
        return self.poly.coefficient(exps)

    def __str__(self) -> str:
        return str(self.poly)


def mul_truncated(f: LaurentPoly, g: LaurentPoly, D: int, variables: Iterable[str]) -> LaurentPoly:
    weights = {v: 1 for v in variables}
    return (f.truncate(D, weights) * g.truncate(D, weights)).truncate(D, weights)


def truncated_kernel(factors: Iterable[tuple[LaurentPoly, int, int]], D: int,
                     series_vars: Sequence[str] | None = None) -> SeriesTruncation:
    """Expand prod (1 + sign*m)^(+-1) keeping total degree <= D in ``series_vars``.

    ``series_vars`` defaults to every variable that occurs. Each m of an
    inverted factor must have positive degree in the series variables.
    """
    factors = list(factors)
    if series_vars is None:
        series_vars = sort_vars(v for m, _, _ in factors for v in m.variables())
    weights = {v: 1 for v in series_vars}
    out = _ONE
    for m, sign, exponent in factors:
        if exponent == 1:
            piece = 1 + sign * m
        elif exponent == -1:
            lo, _ = m.degree(series_vars)
            if lo <= 0:
                raise ValueError(f"monomial {m} has no positive degree in the series variables")
            piece = _ONE
            power = _ONE
            for _ in range(D // lo):
                power = power * (-sign * m)
                piece = piece + power
        else:
            raise ValueError("kernel exponents must be +1 or -1")
        out = (out * piece).truncate(D, weights)
    return SeriesTruncation(out, D, tuple(series_vars), ())
