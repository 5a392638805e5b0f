"""Integer partitions, hooks H(k, l) and the typical/large predicates."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class NotTypical(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive ints; trailing zeros are dropped.

    Subclasses ``tuple`` so partitions hash and compare like plain tuples and
    can be used directly as cache keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 0 or (i and p > parts[i - 1]):
                raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lookup, 0 past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class HookParams(NamedTuple):
    k: int
    ell: int

    @property
    def support(self) -> "HookParams":
        """The hook H(k^2 + l^2; 2kl) that carries every nonzero m_lambda."""
        return HookParams(self.k ** 2 + self.ell ** 2, 2 * self.k * self.ell)


class TypicalSplit(NamedTuple):
    alpha: Partition
    beta: Partition
    a: int
    b: int


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text encoding; ``""`` and ``"-"`` mean the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"malformed partition: {text!r}")
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_in_hook(lam: Sequence[int], h: HookParams | tuple[int, int]) -> bool:
    k, ell = h
    return (lam[k] if k < len(lam) else 0) <= ell


def _bounded(n: int, max_part: int, row: int, k: int, ell: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if row >= k:
        max_part = min(max_part, ell)
    for p in range(min(n, max_part), 0, -1):
        for rest in _bounded(n - p, p, row + 1, k, ell):
            yield (p,) + rest


@lru_cache(maxsize=None)
def _hook_cached(k: int, ell: int, n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _bounded(n, n, 0, k, ell))


def enumerate_hook(h: HookParams | tuple[int, int], n: int) -> list[Partition]:
    """All partitions of ``n`` in H(k, l), lexicographically decreasing.

    The first k rows are unrestricted; every later row is capped at l, so the
    generator never visits partitions outside the hook.
    """
    k, ell = h
    return list(_hook_cached(k, ell, n))


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    return list(_hook_cached(n, 0, n)) if n else [Partition()]


def is_typical(lam: Sequence[int], a: int, b: int) -> bool:
    if not is_in_hook(lam, (a, b)):
        return False
    return a == 0 or (lam[a - 1] if a <= len(lam) else 0) >= b


def split_typical(lam: Sequence[int], a: int, b: int) -> TypicalSplit:
    if not is_typical(lam, a, b):
        raise NotTypical(f"{tuple(lam)} is not typical for the ({a},{b}) hook")
    alpha = Partition(lam[i] - b for i in range(min(a, len(lam))))
    beta = conjugate(tuple(lam[a:]))
    return TypicalSplit(alpha, beta, a, b)


def join_typical(s: TypicalSplit) -> Partition:
    alpha, beta, a, b = s
    if len(alpha) > a or len(beta) > b:
        raise ValueError(f"malformed split {s}")
    top = [(alpha[i] if i < len(alpha) else 0) + b for i in range(a)]
    return Partition(top + list(conjugate(beta)))


def is_large(lam: Sequence[int], h: HookParams | tuple[int, int]) -> bool:
    """Large: inside H(k^2+l^2; 2kl) and outside H(a^2+b^2; 2ab) for every
    componentwise-smaller (a, b) != (k, l), including a = 0 or b = 0."""
    k, ell = h
    if not is_in_hook(lam, (k * k + ell * ell, 2 * k * ell)):
        return False
    for a in range(k + 1):
        for b in range(ell + 1):
            if (a, b) != (k, ell) and is_in_hook(lam, (a * a + b * b, 2 * a * b)):
                return False
    return True


def add_one_box(lam: Sequence[int]) -> list[Partition]:
    out = []
    parts = list(lam)
    for i in range(len(parts) + 1):
        if i == 0 or parts[i - 1] > (parts[i] if i < len(parts) else 0):
            new = parts[:] + [0] * (i == len(parts))
            new[i] += 1
            out.append(Partition(new))
    return out


def remove_one_box(lam: Sequence[int]) -> list[Partition]:
    parts = list(lam)
    out = []
    for i in range(len(parts)):
        if i == len(parts) - 1 or parts[i] > parts[i + 1]:
            new = parts[:]
            new[i] -= 1
            out.append(Partition(new))
    return out


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def subpartitions(lam: Sequence[int], max_len: int | None = None,
                  min_parts: Sequence[int] | None = None) -> Iterator[Partition]:
    """Partitions mu inside ``lam`` with at most ``max_len`` rows and
    mu_i >= min_parts[i] (rows past the end of ``min_parts`` unconstrained)."""
    n = len(lam)
    if max_len is None:
        max_len = n
    lows = [0] * n
    if min_parts is not None:
        for i in range(min(n, len(min_parts))):
            lows[i] = max(0, min_parts[i])
    if any(lows[i] > 0 for i in range(max_len, n)):
        return

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == n or i == max_len:
            yield ()
            return
        for p in range(min(cap, lam[i]), lows[i] - 1, -1):
            if p == 0:
                # rest of the rows must be zero
                if all(lo == 0 for lo in lows[i:]):
                    yield ()
                return
            for rest in rec(i + 1, p):
                yield (p,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def hook_lengths_dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    f = 1
    for i in range(2, n + 1):
        f *= i
    return f // prod
