"""Multiplicities as torus constant terms.

For X = {x_1..x_k}, Y = {y_1..y_l}:

    Z0 = X X^-1 u Y Y^-1        (k^2 + l^2 monomials, k + l of them equal to 1)
    Z1 = X Y^-1 u Y X^-1        (2kl monomials)

and m_lam = <prod_{z in Z1} (1+z)^-1 HS_lam(Z0; Z1), 1> for large lam, where
<f, g> = CT(dX dY f(X,Y) g(1/X,1/Y)) / (k! l!). The m-bar version carries an
extra factor sum_{z in Z0 u Z1} z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .laurent import (InverseFactor, LaurentPoly, NonExactDivision, RegionOrder,
                      constant_term_of_product, ct_with_inverse_factors, exact_div,
                      invert_vars)
from .partitions import HookParams, Partition, is_in_hook, is_large
from .symfunc import Alphabet, hook_schur_eval, weyl_delta


class NotLarge(ValueError):
    pass


class NonIntegralMultiplicity(ArithmeticError):
    pass


@dataclass(frozen=True)
class SuperAlphabets:
    X: tuple[str, ...]
    Y: tuple[str, ...]
    Z0: Alphabet
    Z1: Alphabet

    @property
    def region(self) -> RegionOrder:
        """|y| < |x|: every y_j weighs 1, every x_i weighs 0."""
        return RegionOrder({y: 1 for y in self.Y})

    def z1_pairs(self):
        for x in self.X:
            for y in self.Y:
                yield x, y


_ALPHABETS: dict[tuple[int, int], SuperAlphabets] = {}


def build_super_alphabets(h: HookParams | tuple[int, int]) -> SuperAlphabets:
    k, ell = h
    if (k, ell) in _ALPHABETS:
        return _ALPHABETS[(k, ell)]
    X = tuple(f"x{i}" for i in range(1, k + 1))
    Y = tuple(f"y{j}" for j in range(1, ell + 1))
    mono = LaurentPoly.monomial
    z0 = [mono({a: 1}) * mono({b: -1}) for a in X for b in X]
    z0 += [mono({a: 1}) * mono({b: -1}) for a in Y for b in Y]
    z1 = [mono({x: 1, y: -1}) for x in X for y in Y]
    z1 += [mono({y: 1, x: -1}) for x in X for y in Y]
    sa = SuperAlphabets(X, Y, Alphabet(z0), Alphabet(z1))
    _ALPHABETS[(k, ell)] = sa
    return sa


def inner_product(f: LaurentPoly, g: LaurentPoly, X: Sequence[str], Y: Sequence[str]) -> Fraction:
    """(1/(|X|! |Y|!)) CT(dX dY f(X,Y) g(X^-1,Y^-1))."""
    weyl = weyl_delta(X) * weyl_delta(Y)
    ct = constant_term_of_product(weyl * f, invert_vars(g))
    return Fraction(ct) / (factorial(len(X)) * factorial(len(Y)))


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralMultiplicity(f"{what} = {value} is not an integer")
    return value.numerator


def _hs(lam, sa: SuperAlphabets) -> LaurentPoly:
    return hook_schur_eval(Partition(lam), sa.Z0, sa.Z1)


def _z_sum(sa: SuperAlphabets) -> LaurentPoly:
    acc = LaurentPoly.const(0)
    for z in sa.Z0.monomials + sa.Z1.monomials:
        acc = acc + z
    return acc


def _divide_out_z1(f: LaurentPoly, sa: SuperAlphabets) -> LaurentPoly:
    for z in sa.Z1.monomials:
        f = exact_div(f, 1 + z)
    return f


def _large_route(lam, h, bar: bool) -> int:
    if not is_large(lam, h):
        raise NotLarge(f"{tuple(lam)} is not large for (k, l) = {tuple(h)}")
    sa = build_super_alphabets(h)
    f = _hs(lam, sa)
    if bar:
        f = f * _z_sum(sa)
    try:
        q = _divide_out_z1(f, sa)
    except NonExactDivision as exc:
        raise NonExactDivision(
            f"prod(1+z1) does not divide the integrand for large {tuple(lam)}: {exc}") from exc
    name = "m-bar" if bar else "m"
    return _integral(inner_product(q, LaurentPoly.const(1), sa.X, sa.Y), f"{name}_{tuple(lam)}")


def m_large(lam: Sequence[int], h: HookParams | tuple[int, int]) -> int:
    """m_lam for large lam by exact division and a constant term."""
    return _large_route(lam, h, bar=False)


def mbar_large(lam: Sequence[int], h: HookParams | tuple[int, int]) -> int:
    return _large_route(lam, h, bar=True)


def _region_route(lam, h, bar: bool) -> int:
    k, ell = h
    if not is_in_hook(lam, (k * k + ell * ell, 2 * k * ell)):
        # HS_lam vanishes identically on alphabets of these sizes
        return 0
    sa = build_super_alphabets(h)
    f = _hs(lam, sa)
    if bar:
        f = f * _z_sum(sa)
    # (1 + x/y)^-1 (1 + y/x)^-1 = (y/x) (1 + y/x)^-2, expanded in powers of y/x
    factors = []
    for x, y in sa.z1_pairs():
        m = LaurentPoly.monomial({x: -1, y: 1})
        f = f * m
        factors.append(InverseFactor(m, 2))
    f = f * weyl_delta(sa.X) * weyl_delta(sa.Y)
    ct = Fraction(ct_with_inverse_factors(f, factors, sa.region))
    name = "m-bar'" if bar else "m'"
    return _integral(ct / (factorial(k) * factorial(ell)), f"{name}_{tuple(lam)}")


def m_prime(lam: Sequence[int], h: HookParams | tuple[int, int]) -> int:
    """The large-partition integrand evaluated for any lam under the fixed region |y| < |x|."""
    return _region_route(lam, h, bar=False)


def mbar_prime(lam: Sequence[int], h: HookParams | tuple[int, int]) -> int:
    return _region_route(lam, h, bar=True)


ROUTE_EXACT = "exact-division"
ROUTE_REGION = "region-expansion"
ROUTE_SUPPORT = "support-bound"


def m_ct(lam: Sequence[int], h: HookParams | tuple[int, int], bar: bool = False) -> tuple[int, str]:
    """Constant-term dispatcher returning (value, route).

    Large lam use exact division (the value is m_lam); other lam in
    H(k^2+l^2; 2kl) use the region expansion (the value is m'_lam); anything
    outside that hook is 0 by the support theorem.
    """
    k, ell = h
    if is_large(lam, h):
        return _large_route(lam, h, bar), ROUTE_EXACT
    if not is_in_hook(lam, (k * k + ell * ell, 2 * k * ell)):
        return 0, ROUTE_SUPPORT
    return _region_route(lam, h, bar), ROUTE_REGION
