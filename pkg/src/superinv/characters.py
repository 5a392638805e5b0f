"""Symmetric-group characters, Kronecker coefficients, and the
character-sum oracles for m_lambda and m-bar_lambda."""

from __future__ import annotations

import os
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Sequence

from .partitions import (HookParams, Partition, add_one_box, enumerate_hook,
                         format_partition, hook_lengths_dimension, partitions)

CACHE_ENV = "SUPERINV_CACHE_DIR"
DEFAULT_CACHE_DIR = ".superinv-cache"
CACHE_FILE = "characters.txt"


class SizeMismatch(ValueError):
    pass


class NegativeOrNonIntegral(ArithmeticError):
    pass


class CacheCorrupt(RuntimeError):
    pass


def class_size_factor(rho: Sequence[int]) -> Fraction:
    """1/z_rho with z_rho = prod_i i^{m_i} m_i!."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part ** mult * factorial(mult)
    return Fraction(1, z)


def class_size(rho: Sequence[int]) -> int:
    """n!/z_rho, the number of permutations with cycle type rho."""
    return factorial(sum(rho)) // class_size_factor(rho).denominator


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    # rho is weakly decreasing; strip its largest part as a border strip
    if not rho:
        return 1
    if rho[0] == 1:
        return hook_lengths_dimension(lam)
    r = rho[0]
    rest = rho[1:]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = 0
        for c in beta:
            if nb < c < b:
                height += 1
        new = sorted(beta[:idx] + [nb] + beta[idx + 1:], reverse=True)
        shape = tuple(p for p in (new[i] - (L - 1 - i) for i in range(L)) if p)
        v = _mn(shape, rest)
        total += -v if height & 1 else v
    return total


def murnaghan_nakayama(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam(rho) by border-strip removal, memoized in-process only."""
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(rho)}|")
    return _mn(tuple(lam), tuple(sorted(rho, reverse=True)))


class CharStore:
    """Map (lam, rho) -> chi^lam(rho), optionally persisted to an append-only file.

    Records are ``chi n=<n> lam=<parts> rho=<parts> val=<int>``. Reads are
    lock-free; appends go through a lock and are buffered until :meth:`flush`.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self._data: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._pending: list[str] = []
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    @classmethod
    def in_dir(cls, directory: str | os.PathLike) -> "CharStore":
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        path = d / CACHE_FILE
        path.touch(exist_ok=True)
        return cls(path)

    def _load(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    lam, rho, val = _parse_record(line)
                except ValueError as exc:
                    raise CacheCorrupt(f"{self.path}:{lineno}: {exc}") from None
                old = self._data.get((lam, rho))
                if old is not None and old != val:
                    raise CacheCorrupt(f"{self.path}:{lineno}: conflicting values for {lam} at {rho}")
                self._data[(lam, rho)] = val

    def get(self, lam, rho) -> int | None:
        return self._data.get((tuple(lam), tuple(rho)))

    def put(self, lam, rho, val: int) -> None:
        key = (tuple(lam), tuple(rho))
        with self._lock:
            old = self._data.get(key)
            if old is not None:
                if old != val:
                    raise CacheCorrupt(f"conflicting values for {key}")
                return
            self._data[key] = val
            if self.path is not None:
                self._pending.append(_format_record(key[0], key[1], val))

    def flush(self) -> None:
        with self._lock:
            if self.path is None or not self._pending:
                self._pending.clear()
                return
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write("\n".join(self._pending) + "\n")
            self._pending.clear()

    def stats(self) -> dict[int, int]:
        counts: Counter[int] = Counter(sum(lam) for lam, _ in self._data)
        return dict(sorted(counts.items()))

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self._pending.clear()
            if self.path is not None:
                self.path.write_text("", encoding="utf-8")

    def __len__(self) -> int:
        return len(self._data)


def _format_record(lam, rho, val) -> str:
    return f"chi n={sum(lam)} lam={format_partition(lam)} rho={format_partition(rho)} val={val}"


def _parse_parts(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",")) if text else ()


def _parse_record(line: str):
    fields = line.split(" ")
    if len(fields) != 5 or fields[0] != "chi":
        raise ValueError("malformed record")
    kv = {}
    for f in fields[1:]:
        name, sep, value = f.partition("=")
        if not sep:
            raise ValueError("malformed field")
        kv[name] = value
    lam, rho = _parse_parts(kv["lam"]), _parse_parts(kv["rho"])
    n = int(kv["n"])
    if sum(lam) != n or sum(rho) != n:
        raise ValueError("size mismatch in record")
    return lam, rho, int(kv["val"])


_default_store = CharStore()


def default_store() -> CharStore:
    return _default_store


def set_default_store(store: CharStore) -> None:
    global _default_store
    _default_store = store


def mn_character(lam: Sequence[int], rho: Sequence[int], store: CharStore | None = None) -> int:
    store = _default_store if store is None else store
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(rho)}|")
    lam = tuple(lam)
    rho = tuple(sorted(rho, reverse=True))
    val = store.get(lam, rho)
    if val is None:
        val = _mn(lam, rho)
        store.put(lam, rho, val)
    return val


def character_row(lam: Sequence[int], store: CharStore | None = None) -> list[int]:
    """chi^lam on every cycle type, in the order of :func:`partitions`."""
    store = _default_store if store is None else store
    row = [mn_character(lam, rho, store) for rho in partitions(sum(lam))]
    store.flush()
    return row


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
              store: CharStore | None = None) -> int:
    """gamma^lam_{mu,nu} = sum_rho chi^lam chi^mu chi^nu / z_rho."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatch("Kronecker coefficient needs partitions of one n")
    total = 0
    for rho, a, b, c in zip(partitions(n), character_row(mu, store),
                            character_row(nu, store), character_row(lam, store)):
        if a and b and c:
            total += class_size(rho) * a * b * c
    return _integral_nonneg(total, factorial(n), "kronecker coefficient")


def _integral_nonneg(total: int, denom: int, what: str) -> int:
    q, r = divmod(total, denom)
    if r or q < 0:
        raise NegativeOrNonIntegral(f"{what} = {Fraction(total, denom)}")
    return q


def _hook_square_sums(h: HookParams | tuple[int, int], n: int, store: CharStore | None) -> list[int]:
    """sum over mu in H(k, l; n) of chi^mu(rho)^2, for every rho."""
    sums = [0] * len(partitions(n))
    for mu in enumerate_hook(h, n):
        for i, v in enumerate(character_row(mu, store)):
            sums[i] += v * v
    return sums


def m_oracle(lam: Sequence[int], h: HookParams | tuple[int, int], store: CharStore | None = None) -> int:
    """m_lam = sum over mu in H(k, l) of gamma^lam_{mu,mu}, via class sums.

    Equivalent to summing :func:`kronecker` over mu, but each character row is
    touched once: m = (1/n!) sum_rho |C_rho| chi^lam(rho) sum_mu chi^mu(rho)^2.
    """
    n = sum(lam)
    lam_row = character_row(lam, store)
    sums = _hook_square_sums(h, n, store)
    total = 0
    for rho, a, s in zip(partitions(n), lam_row, sums):
        if a:
            total += class_size(rho) * a * s
    return _integral_nonneg(total, factorial(n), f"m_{tuple(lam)}")


def mbar_oracle(lam: Sequence[int], h: HookParams | tuple[int, int], store: CharStore | None = None) -> int:
    """m-bar_lam = sum of m over lam plus one box (Frobenius reciprocity)."""
    return sum(m_oracle(p, h, store) for p in add_one_box(lam))


def resolve_cache_dir(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(CACHE_ENV) or DEFAULT_CACHE_DIR)


__all__ = [
    "CharStore", "SizeMismatch", "NegativeOrNonIntegral", "CacheCorrupt",
    "class_size_factor", "class_size", "murnaghan_nakayama", "mn_character",
    "character_row", "kronecker", "m_oracle", "mbar_oracle",
    "default_store", "set_default_store", "resolve_cache_dir",
]
