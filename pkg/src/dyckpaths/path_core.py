"""Dyck path value type, word parsing, and arch decompositions.

A Dyck path of semilength n is a word of n up-steps ``U`` and n down-steps
``D`` whose running height (U = +1, D = -1) never drops below zero.  All
values here are immutable and every operation is a pure function, so they
can be shared freely between threads.
"""

from __future__ import annotations

from enum import Enum
from itertools import accumulate


class DyckError(Exception):
    """Base class for every error raised by this package."""


class UnbalancedWord(DyckError):
    """Word has unequal numbers of up-steps and down-steps."""


class NegativeExcursion(DyckError):
    """A prefix of the word dips below ground level."""


class IllegalCharacter(DyckError):
    """Word contains a character outside the step alphabet."""


class EmptyPath(DyckError):
    """Operation requires a nonempty path."""


class Step(str, Enum):
    UP = "U"
    DOWN = "D"


UP = Step.UP.value
DOWN = Step.DOWN.value

# Accepted input alphabet; canonical form is uppercase U/D.
_CANON = {"U": UP, "u": UP, "(": UP, "D": DOWN, "d": DOWN, ")": DOWN}


class DyckPath(str):
    """Immutable balanced U/D word that never dips below ground level.

    Subclasses ``str``: the canonical rendered word *is* the value, so
    paths hash, compare and sort exactly like their words.  The empty
    path is a first-class value rendered as ``""``.
    """

    __slots__ = ()

    def __new__(cls, word: str = "") -> "DyckPath":
        canonical = _canonicalize(word)
        _check_dyck(canonical)
        return str.__new__(cls, canonical)

    @property
    def semilength(self) -> int:
        return len(self) // 2

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(c) for c in self)

    def heights(self) -> tuple[int, ...]:
        """Running height after each step."""
        return tuple(accumulate(1 if c == UP else -1 for c in self))

    def __repr__(self) -> str:
        return f"DyckPath({str.__repr__(self)})"


EMPTY = str.__new__(DyckPath, "")


def _mk(word: str) -> DyckPath:
    # Internal fast path for words already known to be valid Dyck words.
    return str.__new__(DyckPath, word)


_TRANSLATE = str.maketrans(_CANON)


def _canonicalize(word: str) -> str:
    # Unknown characters pass through translate untouched; reject them here.
    out = word.translate(_TRANSLATE)
    for c in out:
        if c != UP and c != DOWN:
            raise IllegalCharacter(
                f"illegal character {c!r} in path word; expected U/u/( or D/d/)"
            )
    return out


def _check_dyck(word: str) -> None:
    ups = word.count(UP)
    downs = len(word) - ups
    if ups != downs:
        raise UnbalancedWord(
            f"unbalanced word: {ups} up-steps vs {downs} down-steps"
        )
    h = 0
    for c in word:
        h += 1 if c == UP else -1
        if h < 0:
            raise NegativeExcursion("prefix dips below ground level")


def parse(word: str) -> DyckPath:
    """Parse a path word (U/u/( for up, D/d/) for down) into a DyckPath."""
    return DyckPath(word)


def render(p: DyckPath) -> str:
    """Canonical uppercase U/D word of ``p``; inverse of :func:`parse`."""
    return str(p)


def concat(a: DyckPath, b: DyckPath) -> DyckPath:
    return _mk(str(a) + str(b))


def concat_all(parts) -> DyckPath:
    return _mk("".join(parts))


def arch(p: DyckPath) -> DyckPath:
    """Wrap ``p`` in a single arch: U . p . D."""
    return _mk(UP + str(p) + DOWN)


def split_last_arch(p: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Split ``p = prefix . U . content . D`` at its final arch.

    The final arch spans from the last ground-level touchpoint to the end
    of the path; the decomposition is unique.
    """
    if not p:
        raise EmptyPath("split_last_arch requires a nonempty path")
    h = 0
    start = 0
    for i in range(len(p) - 1):
        h += 1 if p[i] == UP else -1
        if h == 0:
            start = i + 1
    return _mk(p[:start]), _mk(p[start + 1 : -1])


def split_first_arch(p: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Split ``p = U . content . D . rest`` at the arch ending at the
    first return."""
    if not p:
        raise EmptyPath("split_first_arch requires a nonempty path")
    h = 0
    for i, c in enumerate(p):
        h += 1 if c == UP else -1
        if h == 0:
            return _mk(p[1:i]), _mk(p[i + 1 :])
    raise AssertionError("unreachable: valid nonempty path always returns")


def split_at_returns(p: DyckPath) -> list[DyckPath]:
    """Interiors [P_1, ..., P_k] of the arches between consecutive returns.

    Reassembling as U.P_1.D . U.P_2.D ... U.P_k.D reproduces ``p``; the
    list length equals the number of returns of ``p``.
    """
    parts = []
    h = 0
    start = 0
    for i, c in enumerate(p):
        h += 1 if c == UP else -1
        if h == 0:
            parts.append(_mk(p[start + 1 : i]))
            start = i + 1
    return parts
