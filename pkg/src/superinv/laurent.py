"""Exact sparse Laurent polynomials over Q in named variables.

Exponent vectors are packed into a single Python int: ``sum(e_i * BASE**i)``
with balanced digits. The packing is additive, so monomial multiplication is
integer addition and inversion is negation; the zero vector packs to 0. The
integer order on packed keys is a lex order compatible with multiplication,
which is what :func:`exact_div` relies on.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

Coef = Union[int, Fraction]

_BITS = 20
BASE = 1 << _BITS
_HALF = BASE >> 1


class NonExactDivision(ArithmeticError):
    pass


class BadRegion(ValueError):
    pass


def _var_key(name: str):
    m = re.fullmatch(r"(.*?)(\d*)", name)
    stem, num = m.group(1), m.group(2)
    return (stem, int(num) if num else -1, name)


def sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


def _pack(exps: Iterable[int]) -> int:
    key = 0
    scale = 1
    for e in exps:
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of range")
        key += e * scale
        scale <<= _BITS
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        d = key & (BASE - 1)
        if d >= _HALF:
            d -= BASE
        out.append(d)
        key = (key - d) >> _BITS
    return tuple(out)


def _norm(c: Coef) -> Coef:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div_coef(c: Coef, d: Coef) -> Coef:
    if d == 1:
        return c
    if d == -1:
        return -c
    if type(c) is int and type(d) is int and c % d == 0:
        return c // d
    return _norm(Fraction(c) / d)


class LaurentPoly:
    """Immutable sparse Laurent polynomial.

    ``gens`` is the sorted tuple of variable names the packed keys refer to;
    binary operations re-encode onto the union of generators when they differ.
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: tuple[str, ...] = (), terms: Mapping[int, Coef] | None = None):
        self.gens = gens
        self.terms = {} if terms is None else {k: _norm(c) for k, c in terms.items() if c}
        self._hash = None

    # construction

    @classmethod
    def _raw(cls, gens: tuple[str, ...], terms: dict[int, Coef]) -> "LaurentPoly":
        p = object.__new__(cls)
        p.gens = gens
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coef) -> "LaurentPoly":
        c = _norm(c)
        return cls._raw((), {0: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls._raw((name,), {1: 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: Coef = 1) -> "LaurentPoly":
        exps = {v: e for v, e in exps.items() if e}
        gens = sort_vars(exps)
        coef = _norm(coef)
        if not coef:
            return cls._raw(gens, {})
        return cls._raw(gens, {_pack(exps[v] for v in gens): coef})

    @classmethod
    def from_dict(cls, data: Mapping[Iterable[tuple[str, int]] | tuple, Coef]) -> "LaurentPoly":
        """Build from ``{((var, exp), ...): coef}``."""
        out = cls.const(0)
        for mono, c in data.items():
            out = out + cls.monomial(dict(mono), c)
        return out

    # encoding helpers

    def _embed(self, gens: tuple[str, ...]) -> dict[int, Coef]:
        if gens == self.gens:
            return self.terms
        pos = [gens.index(v) for v in self.gens]
        n = len(self.gens)
        out = {}
        for k, c in self.terms.items():
            e = _unpack(k, n)
            nk = 0
            for p, x in zip(pos, e):
                nk += x << (_BITS * p) if x >= 0 else -((-x) << (_BITS * p))
            out[nk] = c
        return out

    def _aligned(self, other: "LaurentPoly"):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = sort_vars(self.gens + other.gens)
        return gens, self._embed(gens), other._embed(gens)

    def exponents(self, key: int) -> tuple[int, ...]:
        return _unpack(key, len(self.gens))

    def items(self):
        """Yield ``({var: exp}, coef)`` pairs in deterministic (sorted) order."""
        n = len(self.gens)
        decoded = sorted(((_unpack(k, n), c) for k, c in self.terms.items()), reverse=True)
        for e, c in decoded:
            yield {v: x for v, x in zip(self.gens, e) if x}, c

    def variables(self) -> tuple[str, ...]:
        """Generators that actually occur with a nonzero exponent."""
        n = len(self.gens)
        used = [False] * n
        for k in self.terms:
            for i, x in enumerate(_unpack(k, n)):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.gens, used) if u)

    def compact(self) -> "LaurentPoly":
        """Same polynomial with unused generators dropped."""
        used = self.variables()
        if used == self.gens:
            return self
        n = len(self.gens)
        idx = [self.gens.index(v) for v in used]
        terms = {}
        for k, c in self.terms.items():
            e = _unpack(k, n)
            terms[_pack(e[i] for i in idx)] = c
        return LaurentPoly._raw(used, terms)

    # ring operations

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        gens, a, b = self._aligned(other)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return LaurentPoly._raw(gens, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.gens, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            c = _norm(other)
            if not c:
                return LaurentPoly._raw(self.gens, {})
            return LaurentPoly._raw(self.gens, {k: _norm(v * c) for k, v in self.terms.items()})
        gens, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Coef] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(gens, {k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            (k, c), = self.terms.items()
            return LaurentPoly._raw(self.gens, {k * n: _norm(Fraction(1) / c ** -n)})
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            return LaurentPoly._raw(self.gens, {k * n: c ** n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_div(self, d: Coef) -> "LaurentPoly":
        return LaurentPoly._raw(self.gens, {k: _div_coef(c, d) for k, c in self.terms.items()})

    # comparisons and misc

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        _, a, b = self._aligned(other)
        return a == b

    def __hash__(self) -> int:
        if self._hash is None:
            c = self.compact()
            self._hash = hash((c.gens, frozenset(c.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exps: Mapping[str, int]) -> Coef:
        if any(e and v not in self.gens for v, e in exps.items()):
            return 0
        return self.terms.get(_pack(exps.get(v, 0) for v in self.gens), 0)

    def degree(self, variables: Iterable[str] | None = None) -> tuple[int, int]:
        """(min, max) total degree over ``variables`` (all generators by default)."""
        ws = weight_vector(self.gens, {v: 1 for v in (self.gens if variables is None else variables)})
        degs = [_weight(k, ws) for k in self.terms]
        if not degs:
            return (0, 0)
        return (min(degs), max(degs))

    def truncate(self, bound: int, weights: Mapping[str, int]) -> "LaurentPoly":
        """Keep terms whose linear weight is at most ``bound``."""
        ws = weight_vector(self.gens, weights)
        return LaurentPoly._raw(self.gens, {k: c for k, c in self.terms.items() if _weight(k, ws) <= bound})

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.terms.values())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return serialize(self)


def weight_vector(gens: tuple[str, ...], weights: Mapping[str, int]) -> list[int]:
    return [weights.get(v, 0) for v in gens]


def _weight(key: int, ws: list[int]) -> int:
    total = 0
    for w in ws:
        d = key & (BASE - 1)
        if d >= _HALF:
            d -= BASE
        total += w * d
        key = (key - d) >> _BITS
    return total


def _fmt_coef(c: Coef) -> str:
    if type(c) is Fraction:
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def serialize(f: LaurentPoly) -> str:
    """``coef * v1^e1 v2^e2 + ...`` in deterministic term order; ``0`` if empty."""
    if not f.terms:
        return "0"
    parts = []
    for exps, c in f.items():
        mono = " ".join(f"{v}^{e}" for v, e in exps.items())
        parts.append(f"{_fmt_coef(c)} * {mono}" if mono else _fmt_coef(c))
    return " + ".join(parts)


def arithmetic(f: LaurentPoly, g: LaurentPoly, op: str) -> LaurentPoly:
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op in ("*", "x"):
        return f * g
    raise ValueError(f"unknown op {op!r}")


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Quotient q with q*g == f, or :class:`NonExactDivision`.

    Leading-term long division in the packed-key order. If g divides f the
    Newton polytope of q is a Minkowski summand of f's, so every quotient
    exponent lies in the box [min f - min g, max f - max g] coordinatewise;
    leaving the box proves non-divisibility and bounds the loop.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    gens, fa, ga = f._aligned(g)
    if not fa:
        return LaurentPoly._raw(gens, {})
    n = len(gens)
    g_lead = max(ga)
    g_lc = ga[g_lead]
    g_rest = [(k - g_lead, c) for k, c in ga.items() if k != g_lead]

    if len(ga) == 1:
        return LaurentPoly._raw(gens, {k - g_lead: _div_coef(c, g_lc) for k, c in fa.items()})

    fe = [_unpack(k, n) for k in fa]
    gE = [_unpack(k, n) for k in ga]
    lo = [min(e[i] for e in fe) - min(e[i] for e in gE) for i in range(n)]
    hi = [max(e[i] for e in fe) - max(e[i] for e in gE) for i in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NonExactDivision("support of the divisor does not fit")

    r = dict(fa)
    heap = [-k for k in r]
    heapq.heapify(heap)
    q: dict[int, Coef] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = r.pop(k, 0)
        if not c:
            continue
        qk = k - g_lead
        e = _unpack(qk, n)
        for i in range(n):
            if not lo[i] <= e[i] <= hi[i]:
                raise NonExactDivision("quotient left the admissible box")
        qc = _div_coef(c, g_lc)
        q[qk] = qc
        for off, gc in g_rest:
            kk = k + off
            old = r.get(kk)
            if old is None:
                r[kk] = -qc * gc
                heapq.heappush(heap, -kk)
            else:
                v = old - qc * gc
                if v:
                    r[kk] = v
                else:
                    del r[kk]
    return LaurentPoly._raw(gens, {k: _norm(c) for k, c in q.items()})


def invert_vars(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._raw(f.gens, {-k: c for k, c in f.terms.items()})


def constant_term(f: LaurentPoly) -> Coef:
    return f.terms.get(0, 0)


def constant_term_of_product(f: LaurentPoly, g: LaurentPoly) -> Coef:
    """CT(f*g) without forming the product."""
    _, a, b = f._aligned(g)
    if len(a) > len(b):
        a, b = b, a
    total: Coef = 0
    for k, c in a.items():
        d = b.get(-k)
        if d:
            total += c * d
    return _norm(total)


@dataclass(frozen=True)
class InverseFactor:
    """The factor (1 + m)^(-multiplicity) for a monomial m."""

    m: LaurentPoly
    multiplicity: int = 1

    def __post_init__(self):
        if not self.m.is_monomial() or self.m.terms.get(0):
            raise ValueError("inverse factor needs a non-constant monomial")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


@dataclass(frozen=True)
class RegionOrder:
    """Integer weights on variables; a factor (1+m)^-1 is expanded in
    nonnegative powers of m, which converges where weight(m) > 0."""

    weight: Mapping[str, int] = field(default_factory=dict)

    def of(self, f: LaurentPoly) -> list[int]:
        ws = weight_vector(f.gens, self.weight)
        return [_weight(k, ws) for k in f.terms]


def ct_with_inverse_factors(f: LaurentPoly, fs: Iterable[InverseFactor], r: RegionOrder) -> Coef:
    """CT of f * prod (1 + m_s)^(-mult_s), each factor expanded geometrically.

    Only expansion terms of total weight W = max(0, -min weight(f)) can pair
    with a term of f to give exponent 0, so the product of the series is
    truncated at weight W and the sum is finite.
    """
    fs = list(fs)
    ws_f = r.of(f)
    if not f.terms:
        return 0
    W = max(0, -min(ws_f))
    series = LaurentPoly.const(1)
    for fac in fs:
        (w,) = r.of(fac.m)
        if w <= 0:
            raise BadRegion(f"factor (1 + {fac.m})^-1 has weight {w} <= 0")
        (k, c), = fac.m.terms.items()
        mult = fac.multiplicity
        # (1 + c X)^-mult = sum_n binom(-mult, n) c^n X^n
        expansion = LaurentPoly._raw(fac.m.gens, {
            k * n: (-1) ** n * comb(mult + n - 1, n) * c ** n for n in range(W // w + 1)
        })
        series = (series * expansion).truncate(W, r.weight)
    return constant_term_of_product(f, series)
