"""Symmetrized Alexander polynomials and their torsion coefficients.

A polynomial is stored by its half-coefficients ``a_0, ..., a_g``; the
coefficient of ``T^-j`` equals that of ``T^j`` and is never stored.
"""

from dataclasses import dataclass


class InvalidPolynomial(ValueError):
    """Raised when coefficients violate a symmetrized Alexander polynomial invariant."""


@dataclass(frozen=True)
class SymmetrizedAlexanderPolynomial:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise InvalidPolynomial("empty coefficient list")
        if coeffs[-1] == 0:
            raise InvalidPolynomial(
                f"leading coefficient a_{len(coeffs) - 1} must be nonzero"
            )
        if self.value_at_one() != 1:
            raise InvalidPolynomial(
                f"normalization a_0 + 2*sum(a_j) = 1 fails (got {self.value_at_one()})"
            )

    @classmethod
    def parse(cls, text):
        """Build from a literal like ``"-1,1,-1,1,-1,1"`` (a_0 first)."""
        try:
            coeffs = [int(part) for part in text.split(",")]
        except ValueError:
            raise InvalidPolynomial(f"not a comma-separated integer list: {text!r}") from None
        return cls(tuple(coeffs))

    @property
    def genus(self):
        return len(self.coeffs) - 1

    def coefficient(self, j):
        j = abs(j)
        return self.coeffs[j] if j <= self.genus else 0

    def value_at_one(self):
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def is_lspace_form(self):
        """True if the nonzero coefficients are +-1, alternate in sign across
        the full symmetric range, and the top one is +1."""
        full = [self.coefficient(j) for j in range(self.genus, -self.genus - 1, -1)]
        nonzero = [c for c in full if c != 0]
        if any(c not in (1, -1) for c in nonzero) or nonzero[0] != 1:
            return False
        return all(a == -b for a, b in zip(nonzero, nonzero[1:]))

    def literal(self):
        return ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class TorsionTable:
    """Torsion coefficients t_0..t_g; lookups are symmetric and zero past g."""

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InvalidPolynomial("torsion table needs at least t_0")
        negative = [i for i, v in enumerate(values) if v < 0]
        if negative:
            raise InvalidPolynomial(
                f"torsion coefficients must be nonnegative (t_{negative[0]} = "
                f"{values[negative[0]]}); not an L-space knot polynomial"
            )

    @property
    def genus(self):
        return len(self.values) - 1

    def __getitem__(self, i):
        i = abs(i)
        return self.values[i] if i < len(self.values) else 0

    def __len__(self):
        return len(self.values)


def check_pretzel_parameter(m):
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"pretzel parameter must be an int, got {m!r}")
    if m < 3:
        raise ValueError(f"pretzel parameter m must be >= 3, got {m}")
    return m


def pretzel_alexander(m):
    """Alexander polynomial of the pretzel knot P(-2, 3, 2m+1): a_i = (-1)^(i+m), genus m+2."""
    check_pretzel_parameter(m)
    return SymmetrizedAlexanderPolynomial(tuple((-1) ** ((i + m) % 2) for i in range(m + 3)))


def torsion_coefficients(poly):
    """t_i = sum_{j >= 1} j * a_{i+j} for i = 0..g, straight from the definition."""
    g = poly.genus
    return TorsionTable(
        tuple(sum(j * poly.coeffs[i + j] for j in range(1, g - i + 1)) for i in range(g + 1))
    )


def pretzel_torsion_closed_form(m, i):
    check_pretzel_parameter(m)
    i = abs(i)
    if i >= m + 2:
        return 0
    # the parity of i + m decides which of the two half-ranges applies
    if (i + m) % 2 == 0:
        return (m + 2 - i) // 2
    return (m + 3 - i) // 2


def alternating_sum(k, leading_sign):
    """Evaluate s*(1 - 2 + 3 - ... +- k) term by term, s = leading_sign."""
    if k <= 1:
        raise ValueError(f"alternating_sum needs k > 1, got {k}")
    if leading_sign not in (1, -1):
        raise ValueError(f"leading_sign must be +1 or -1, got {leading_sign}")
    total = 0
    for j in range(1, k + 1):
        total += j if j % 2 else -j
    return leading_sign * total
