"""Exact d-invariants of integer surgeries on L-space knots.

Spin^c structures on n-surgery are labelled by integers i with |i| <= n/2;
tables store the canonical representatives 0..n//2 and answer -i by symmetry.
All values are ``Fraction`` instances; nothing here touches floats.
"""

from dataclasses import dataclass
from fractions import Fraction

from .knot_poly import TorsionTable

QUARTER = Fraction(1, 4)


def _check_spinc(n, i):
    if n < 1:
        raise ValueError(f"surgery slope must be a positive integer, got {n}")
    if 2 * abs(i) > n:
        raise ValueError(f"|i| <= n/2 required for a Spin^c label, got i={i}, n={n}")


def d_unknot(n, i):
    """d-invariant of n-surgery on the unknot: (n - 2|i|)^2 / 4n - 1/4."""
    _check_spinc(n, i)
    return Fraction((n - 2 * abs(i)) ** 2, 4 * n) - QUARTER


def d_surgery(torsion, n, i):
    return d_unknot(n, i) - 2 * torsion[i]


def d_negative_surgery(n, i):
    """d-invariant of -n surgery. Does not depend on the knot."""
    return -d_unknot(n, i)


@dataclass(frozen=True)
class DInvariantTable:
    n: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))
        if len(self.entries) != self.n // 2 + 1:
            raise ValueError(
                f"slope {self.n} needs {self.n // 2 + 1} entries, got {len(self.entries)}"
            )

    def __getitem__(self, i):
        _check_spinc(self.n, i)
        return self.entries[abs(i)]

    def __iter__(self):
        return iter(enumerate(self.entries))

    def __len__(self):
        return len(self.entries)

    def argmax(self):
        best = max(self.entries)
        return self.entries.index(best)


def d_table(torsion, n):
    if n < 1:
        raise ValueError(f"surgery slope must be a positive integer, got {n}")
    return DInvariantTable(n, tuple(d_surgery(torsion, n, i) for i in range(n // 2 + 1)))


def max_4d(table):
    return 4 * max(table.entries)


def zero_torsion():
    return TorsionTable((0,))
