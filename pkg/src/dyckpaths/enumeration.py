"""Exhaustive generation of Dyck n-paths and exact counting tables.

Counting is recurrence based (plain Python integers, guarded to stay
within 64 bits) so counts extend past the enumeration cap cheaply;
generation streams paths with O(n) working state per path.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import path_stats
from .path_core import DOWN, UP, DyckError, DyckPath, _mk
from .path_stats import PathClass

DEFAULT_ENUM_CAP = 16
ENUM_CAP_ENV = "DYCK_ENUM_CAP"

# Largest n for which C_n fits comfortably in an unsigned 64-bit count.
COUNT_CAP = 35


class CapExceeded(DyckError):
    """Requested size is above the enumeration cap."""


class OverflowGuard(DyckError):
    """Requested size would overflow 64-bit counts."""


class BadIndex(DyckError):
    """Triangle index outside 0 <= k <= n."""


def enumeration_cap() -> int:
    """Current enumeration cap (DYCK_ENUM_CAP overrides the default)."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise DyckError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


def _check_enum_cap(n: int) -> None:
    if n < 0:
        raise DyckError(f"semilength must be nonnegative, got {n}")
    cap = enumeration_cap()
    if n > cap:
        raise CapExceeded(f"semilength {n} exceeds enumeration cap {cap}")


def generate_all(n: int) -> Iterator[DyckPath]:
    """Yield every Dyck n-path exactly once, in the documented order.

    The order is lexicographic treating a down-step as smaller than an
    up-step, so (UD)^n comes first and U^n D^n last; paths that return
    to ground sooner sort earlier.
    """
    _check_enum_cap(n)
    if n == 0:
        yield _mk("")
        return
    word = list((UP + DOWN) * n)
    length = 2 * n
    while True:
        yield _mk("".join(word))
        # Successor: flip the rightmost D to U that still leaves an up-step
        # budget, then append the smallest completion (D whenever above
        # ground, else U).
        flip = -1
        ups_before = n
        for i in range(length - 1, -1, -1):
            if word[i] == UP:
                ups_before -= 1
            elif ups_before < n:
                flip = i
                break
        if flip < 0:
            return
        h = 2 * ups_before - flip + 1  # height after the flipped step
        word[flip] = UP
        for i in range(flip + 1, length):
            if h > 0:
                word[i] = DOWN
                h -= 1
            else:
                word[i] = UP
                h += 1


def generate_class(n: int, c: PathClass) -> Iterator[DyckPath]:
    """Subsequence of generate_all(n) whose members belong to class ``c``."""
    for p in generate_all(n):
        if path_stats.in_class(p, c):
            yield p


def _check_count_cap(n: int) -> None:
    if n < 0:
        raise BadIndex(f"n must be nonnegative, got {n}")
    if n > COUNT_CAP:
        raise OverflowGuard(f"n={n} exceeds the 64-bit count guard (n <= {COUNT_CAP})")


def catalan(n: int) -> int:
    """Catalan number C_n = binom(2n, n) / (n + 1)."""
    _check_count_cap(n)
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _catalan_by_recurrence(n: int) -> int:
    # Convolution over the first arch; cross-checked against the closed form.
    if n == 0:
        return 1
    return sum(_catalan_by_recurrence(a) * _catalan_by_recurrence(n - 1 - a) for a in range(n))


@lru_cache(maxsize=None)
def hill_free_count(n: int) -> int:
    """Number of hill-free Dyck n-paths (the Fine numbers)."""
    _check_count_cap(n)
    if n == 0:
        return 1
    # First arch has nonempty interior (size a >= 1), remainder hill-free.
    return sum(catalan(a) * hill_free_count(n - 1 - a) for a in range(1, n))


def early_hill_free_count(n: int) -> int:
    """Number of early-hill-free Dyck n-paths.

    Such a path is either hill-free or ends with its single hill, so for
    n >= 1 the count is hill_free_count(n) + hill_free_count(n-1).
    """
    _check_count_cap(n)
    if n == 0:
        return 1
    return hill_free_count(n) + hill_free_count(n - 1)


@lru_cache(maxsize=None)
def catalan_triangle(n: int, k: int) -> int:
    """T(n, k): number of Dyck n-paths with exactly k returns."""
    _check_count_cap(n)
    if k < 0 or k > n:
        raise BadIndex(f"require 0 <= k <= n, got k={k}, n={n}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    # First arch of size j contributes C_{j-1} interiors and one return.
    total = 0
    for j in range(1, n - k + 2):
        total += catalan(j - 1) * catalan_triangle(n - j, k - 1)
    return total


@lru_cache(maxsize=None)
def early_hill_distribution(n: int, j: int) -> int:
    """Number of Dyck n-paths with exactly j early hills.

    Recurrence over the first arch: a leading hill on a path of size >= 2
    is early and leaves j-1 early hills in the remainder; the single-hill
    path UD has none; a first arch with nonempty interior (C_a choices)
    hides its interior above ground and leaves j early hills.
    """
    _check_count_cap(n)
    if j < 0:
        raise BadIndex(f"j must be nonnegative, got {j}")
    if n == 0:
        return 1 if j == 0 else 0
    if n == 1:
        return 1 if j == 0 else 0
    total = early_hill_distribution(n - 1, j - 1) if j >= 1 else 0
    for a in range(1, n):
        total += catalan(a) * early_hill_distribution(n - 1 - a, j)
    return total


def class_count(n: int, c: PathClass) -> int:
    """Exact number of Dyck n-paths in class ``c``, by exhaustive scan."""
    _check_enum_cap(n)
    return sum(1 for p in generate_all(n) if path_stats.in_class(p, c))


@dataclass(frozen=True)
class CountTable:
    """Triangle or sequence of exact counts for the CLI ``table`` command."""

    kind: str
    triangular: bool
    entries: tuple[tuple[tuple[int, ...], int], ...]  # ((n,) or (n, k), value)

    def tsv_lines(self) -> Iterator[str]:
        yield "n\tk\tvalue" if self.triangular else "n\tvalue"
        for key, value in self.entries:
            yield "\t".join(str(x) for x in (*key, value))


_SEQUENCES = {
    "catalan": catalan,
    "hill-free": hill_free_count,
    "early-hill-free": early_hill_free_count,
}
_TRIANGLES = {
    "catalan-triangle": catalan_triangle,
    "early-hill-distribution": early_hill_distribution,
}
TABLE_KINDS = tuple(_SEQUENCES) + tuple(_TRIANGLES)


def count_table(kind: str, n_max: int, n_min: int = 0) -> CountTable:
    """Build the named table over n_min..n_max, rows sorted by (n, k)."""
    if kind in _SEQUENCES:
        fn = _SEQUENCES[kind]
        entries = tuple(((n,), fn(n)) for n in range(n_min, n_max + 1))
        return CountTable(kind, False, entries)
    if kind in _TRIANGLES:
        fn = _TRIANGLES[kind]
        entries = tuple(
            ((n, k), fn(n, k)) for n in range(n_min, n_max + 1) for k in range(n + 1)
        )
        return CountTable(kind, True, entries)
    raise DyckError(f"unknown table kind {kind!r}; expected one of {', '.join(TABLE_KINDS)}")
