"""Squarefree tests and searches over small integer windows."""

from dataclasses import dataclass

from . import kernels


@dataclass(frozen=True)
class IntegerInterval:
    """Half-open integer window [lower, upper)."""

    lower: int
    upper: int

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper})")

    def __contains__(self, n):
        return self.lower <= n < self.upper

    def __iter__(self):
        return iter(range(self.lower, self.upper))

    def __len__(self):
        return self.upper - self.lower


def is_squarefree(n):
    """True iff no prime square divides n. Trial division; n must be >= 1."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected int, got {n!r}")
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    return kernels.is_squarefree(n)


def squarefree_members(interval):
    flags = kernels.squarefree_flags(interval.lower, interval.upper)
    return [n for n, ok in zip(interval, flags) if ok]


def largest_squarefree_in(interval):
    for n in range(interval.upper - 1, interval.lower - 1, -1):
        if is_squarefree(n):
            return n
    return None
