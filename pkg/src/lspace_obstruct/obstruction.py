"""Negative-definite bounding obstruction and non-fillable slope certification.

For an L-space Y with |H_1| = delta squarefree, Y can bound a negative
definite 4-manifold only if max 4d(Y, t) >= 1 - 1/delta (delta odd) or
>= 1 (delta even). Integer surgery n on a knot has delta = n. When the test
fails at a slope s, every rational slope 0 < r <= s also bounds no negative
definite manifold, and for r at or above the L-space threshold 2g - 1 this
rules out every symplectic filling.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import kernels
from .knot_poly import check_pretzel_parameter, pretzel_alexander, torsion_coefficients
from .numtheory import IntegerInterval, is_squarefree


def owens_strle_threshold(delta):
    if delta < 1:
        raise ValueError(f"|H_1| must be a positive integer, got {delta}")
    if delta % 2:
        return 1 - Fraction(1, delta)
    return Fraction(1)


def lspace_min_slope(m):
    """Smallest slope from which every surgery on P(-2,3,2m+1) is an L-space: 2g_s - 1 = 2m + 3."""
    check_pretzel_parameter(m)
    return 2 * m + 3


def pretzel_torsion(m):
    return torsion_coefficients(pretzel_alexander(m))


@dataclass(frozen=True)
class ObstructionReport:
    n: int
    delta: int
    squarefree: bool
    max4d: Fraction
    threshold: Fraction
    inequality_holds: bool
    conclusive: bool
    argmax: int
    lspace: bool
    reasoning: tuple = ()

    @property
    def verdict(self):
        if not self.conclusive:
            return "inconclusive"
        if self.lspace:
            return "no fillable contact structure"
        return "cannot bound negative definite"


def _reasoning(n, lspace_min, sqf, max4d, threshold, holds):
    steps = []
    if n >= lspace_min:
        steps.append(f"slope {n} >= {lspace_min}: the surgery is an L-space")
        steps.append("L-space: every symplectic filling is negative definite")
    else:
        steps.append(
            f"slope {n} < {lspace_min}: L-space property not available, "
            "fillability is not decided here"
        )
    rel = ">=" if holds else "<"
    steps.append(f"max 4d = {max4d} {rel} {threshold} = threshold for |H_1| = {n}")
    if not sqf:
        steps.append(f"|H_1| = {n} is not squarefree: obstruction does not apply")
    elif holds:
        steps.append("inequality holds: no obstruction")
    else:
        steps.append("inequality fails with squarefree |H_1|: cannot bound negative definite")
        if n >= lspace_min:
            steps.append("hence no fillable contact structure at this slope")
    return tuple(steps)


def check_slope(torsion, n):
    """Evaluate the obstruction for integer surgery ``n`` on a knot with the given torsion table."""
    if n < 1:
        raise ValueError(f"surgery slope must be a positive integer, got {n}")
    scaled, argmax = kernels.max_scaled_d(torsion.values, n)
    # d = scaled / 4n, so 4 * max d = scaled / n
    max4d = Fraction(scaled, n)
    threshold = owens_strle_threshold(n)
    sqf = is_squarefree(n)
    holds = max4d >= threshold
    lspace_min = 2 * torsion.genus - 1
    return ObstructionReport(
        n=n,
        delta=n,
        squarefree=sqf,
        max4d=max4d,
        threshold=threshold,
        inequality_holds=holds,
        conclusive=sqf and not holds,
        argmax=argmax,
        lspace=n >= lspace_min,
        reasoning=_reasoning(n, lspace_min, sqf, max4d, threshold, holds),
    )


@dataclass(frozen=True)
class LemmaWindow:
    """Offsets k >= 3 (slope 2m + k) covered by the closed-form bound.

    ``ks`` are the k with k^2 - 9k < 4m - 17; ``claim1_ks`` the wider set with
    k^2 - 9k < 18m - 4, on which every d with |i| < m + 2 is negative.
    """

    m: int
    k_max: int
    claim1_k_max: int

    @property
    def ks(self):
        return range(3, self.k_max + 1)

    @property
    def claim1_ks(self):
        return range(3, self.claim1_k_max + 1)

    @property
    def slopes(self):
        return IntegerInterval(2 * self.m + 3, 2 * self.m + self.k_max + 1)

    def description(self):
        return f"[{2 * self.m + 3}, 2*{self.m} + (sqrt({16 * self.m + 13}) + 9)/2)"


def _k_max(bound):
    # largest k with (2k - 9)^2 < bound
    return (isqrt(bound - 1) + 9) // 2


def lemma_interval_bound(m):
    """k^2 - 9k < 4m - 17 is (2k - 9)^2 < 16m + 13; k^2 - 9k < 18m - 4 is
    (2k - 9)^2 < 72m + 65. Both solved with integer square roots."""
    check_pretzel_parameter(m)
    return LemmaWindow(m=m, k_max=_k_max(16 * m + 13), claim1_k_max=_k_max(72 * m + 65))


def default_scan_upper(m):
    check_pretzel_parameter(m)
    return 17 if m == 3 else 4 * m + 6


@dataclass(frozen=True)
class ScanResult:
    m: int
    lspace_min: int
    scan_upper: int
    per_slope: tuple
    certified_s: int | None
    lemma_slopes: IntegerInterval

    @property
    def window(self):
        return IntegerInterval(self.lspace_min, self.scan_upper)

    @property
    def certified_interval(self):
        """Closed interval (lower, upper) of slopes with no fillable structure, or None."""
        if self.certified_s is None:
            return None
        return (self.lspace_min, self.certified_s)

    @property
    def unresolved(self):
        """Integer slopes of the scan window past the certified endpoint, or None."""
        lower = self.lspace_min if self.certified_s is None else self.certified_s + 1
        if lower >= self.scan_upper:
            return None
        return IntegerInterval(lower, self.scan_upper)

    def squarefree_slopes(self):
        return [r.n for r in self.per_slope if r.squarefree]

    def is_nonfillable(self, r):
        """True if the scan certifies that rational slope r admits no fillable contact structure."""
        r = Fraction(r)
        return self.certified_s is not None and self.lspace_min <= r <= self.certified_s


def certify_nonfillable_interval(m, scan_upper=None):
    """Scan integer slopes in [2m + 3, scan_upper) and certify [2m + 3, s] for the largest
    conclusive squarefree s. Default upper bound is 4m + 6, or 17 when m = 3."""
    check_pretzel_parameter(m)
    lower = lspace_min_slope(m)
    upper = default_scan_upper(m) if scan_upper is None else scan_upper
    window = IntegerInterval(lower, upper)
    torsion = pretzel_torsion(m)
    reports = tuple(check_slope(torsion, n) for n in window)
    conclusive = [r.n for r in reports if r.conclusive]
    return ScanResult(
        m=m,
        lspace_min=lower,
        scan_upper=upper,
        per_slope=reports,
        certified_s=max(conclusive) if conclusive else None,
        lemma_slopes=lemma_interval_bound(m).slopes,
    )
