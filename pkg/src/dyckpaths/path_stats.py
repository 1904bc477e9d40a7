"""Path statistics and class-membership predicates.

Vocabulary (all positions are step indices into the canonical word):

* return: a down-step landing at ground level (height 0).
* descent: a maximal run of contiguous down-steps.
* ground descent: a descent whose last step is a return; its recorded
  length is the full run, including the above-ground portion.
* terminal descent: the final descent of a nonempty path (always a ground
  descent); length 0 by convention for the empty path, which counts as even.
* hill: a UD pair starting at ground level; early hill: a hill immediately
  followed by an up-step (a low UDU).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .path_core import DOWN, UP, DyckError, DyckPath


@dataclass(frozen=True)
class StatProfile:
    """Per-path statistics record."""

    semilength: int
    returns: int
    ground_descent_lengths: tuple[int, ...]
    terminal_descent_length: int
    hills: int
    early_hills: int
    even_ground_descents: int

    def to_dict(self) -> dict:
        """Flat JSON-ready mapping with stable key names."""
        return {
            "semilength": self.semilength,
            "returns": self.returns,
            "ground_descent_lengths": list(self.ground_descent_lengths),
            "terminal_descent_length": self.terminal_descent_length,
            "hills": self.hills,
            "early_hills": self.early_hills,
            "even_ground_descents": self.even_ground_descents,
        }


def profile(p: DyckPath) -> StatProfile:
    """Compute all statistics of ``p`` in one scan of its word."""
    word = str(p)
    n = len(word)

    heights = []
    h = 0
    for c in word:
        h += 1 if c == UP else -1
        heights.append(h)

    ground_descents = []
    run = 0
    for i, c in enumerate(word):
        if c == DOWN:
            run += 1
            if heights[i] == 0:
                ground_descents.append(run)
        else:
            run = 0

    hills = 0
    early = 0
    for i in range(n - 1):
        h_before = heights[i - 1] if i > 0 else 0
        if word[i] == UP and word[i + 1] == DOWN and h_before == 0:
            hills += 1
            if i + 2 < n and word[i + 2] == UP:
                early += 1

    return StatProfile(
        semilength=n // 2,
        returns=len(ground_descents),
        ground_descent_lengths=tuple(ground_descents),
        terminal_descent_length=ground_descents[-1] if ground_descents else 0,
        hills=hills,
        early_hills=early,
        even_ground_descents=sum(1 for g in ground_descents if g % 2 == 0),
    )


class ClassKind(Enum):
    ALL = "all"
    EVEN_TERMINAL = "even-terminal"
    ODD_TERMINAL = "odd-terminal"
    HILL_FREE = "hill-free"
    EARLY_HILL_FREE = "early-hill-free"
    ALL_ODD_GROUND = "all-odd-ground"
    CLASS_A = "class-a"
    K_RETURNS = "k-returns"
    K_EARLY_HILLS = "k-early-hills"
    K_EVEN_GROUND = "k-even-ground"


_PARAMETRIC = {ClassKind.K_RETURNS, ClassKind.K_EARLY_HILLS, ClassKind.K_EVEN_GROUND}


@dataclass(frozen=True)
class PathClass:
    """Tag selecting a subfamily of Dyck paths; K_* kinds carry a count k."""

    kind: ClassKind
    k: int | None = None

    def __post_init__(self):
        if self.kind in _PARAMETRIC:
            if self.k is None or self.k < 0:
                raise DyckError(f"class {self.kind.value} requires k >= 0")
        elif self.k is not None:
            raise DyckError(f"class {self.kind.value} takes no parameter")

    @property
    def name(self) -> str:
        if self.kind in _PARAMETRIC:
            return f"{self.kind.value}={self.k}"
        return self.kind.value

    @classmethod
    def from_name(cls, name: str) -> "PathClass":
        """Parse a CLI class name such as ``hill-free`` or ``k-returns=3``."""
        base, _, arg = name.partition("=")
        for kind in ClassKind:
            if kind.value == base:
                if kind in _PARAMETRIC:
                    if not arg:
                        raise DyckError(f"class {base} needs a parameter, e.g. {base}=2")
                    try:
                        k = int(arg)
                    except ValueError:
                        raise DyckError(f"bad parameter {arg!r} for class {base}") from None
                    return cls(kind, k)
                if arg:
                    raise DyckError(f"class {base} takes no parameter")
                return cls(kind)
        raise DyckError(f"unknown path class {name!r}")


ALL = PathClass(ClassKind.ALL)
EVEN_TERMINAL = PathClass(ClassKind.EVEN_TERMINAL)
ODD_TERMINAL = PathClass(ClassKind.ODD_TERMINAL)
HILL_FREE = PathClass(ClassKind.HILL_FREE)
EARLY_HILL_FREE = PathClass(ClassKind.EARLY_HILL_FREE)
ALL_ODD_GROUND = PathClass(ClassKind.ALL_ODD_GROUND)
CLASS_A = PathClass(ClassKind.CLASS_A)


def k_returns(k: int) -> PathClass:
    return PathClass(ClassKind.K_RETURNS, k)


def k_early_hills(k: int) -> PathClass:
    return PathClass(ClassKind.K_EARLY_HILLS, k)


def k_even_ground(k: int) -> PathClass:
    return PathClass(ClassKind.K_EVEN_GROUND, k)


def matches(prof: StatProfile, c: PathClass) -> bool:
    """Class membership decided from an already-computed profile."""
    kind = c.kind
    if kind is ClassKind.ALL:
        return True
    if kind is ClassKind.EVEN_TERMINAL:
        return prof.terminal_descent_length % 2 == 0
    if kind is ClassKind.ODD_TERMINAL:
        return prof.terminal_descent_length % 2 == 1
    if kind is ClassKind.HILL_FREE:
        return prof.hills == 0
    if kind is ClassKind.EARLY_HILL_FREE:
        return prof.early_hills == 0
    if kind is ClassKind.ALL_ODD_GROUND:
        return prof.even_ground_descents == 0
    if kind is ClassKind.CLASS_A:
        # Nonempty, even terminal descent, all other ground descents odd:
        # equivalently the terminal descent is the unique even one.
        return (
            prof.semilength > 0
            and prof.terminal_descent_length % 2 == 0
            and prof.even_ground_descents == 1
        )
    if kind is ClassKind.K_RETURNS:
        return prof.returns == c.k
    if kind is ClassKind.K_EARLY_HILLS:
        return prof.early_hills == c.k
    if kind is ClassKind.K_EVEN_GROUND:
        return prof.even_ground_descents == c.k
    raise AssertionError(f"unhandled class kind {kind}")


def in_class(p: DyckPath, c: PathClass) -> bool:
    return matches(profile(p), c)
