"""Heegaard Floer d-invariants of L-space knot surgeries and a non-fillability
certificate for surgeries on the pretzel knots P(-2, 3, 2m+1)."""

__version__ = "0.1.0"

from .floer_d import (
    DInvariantTable,
    d_negative_surgery,
    d_surgery,
    d_table,
    d_unknot,
    max_4d,
)
from .knot_poly import (
    InvalidPolynomial,
    SymmetrizedAlexanderPolynomial,
    TorsionTable,
    alternating_sum,
    pretzel_alexander,
    pretzel_torsion_closed_form,
    torsion_coefficients,
)
from .numtheory import IntegerInterval, is_squarefree, largest_squarefree_in
from .obstruction import (
    LemmaWindow,
    ObstructionReport,
    ScanResult,
    certify_nonfillable_interval,
    check_slope,
    lemma_interval_bound,
    lspace_min_slope,
    owens_strle_threshold,
)
