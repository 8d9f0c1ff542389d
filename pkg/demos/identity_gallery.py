"""Run every identity verifier once and show its report.

Each verifier rebuilds both sides of its identity through independent code
paths and compares exact rational coefficients over a named finite window,
so "holds: true" is a machine check, not a floating-point impression.
"""

from fractions import Fraction

from vpart import (
    GeometricWeights,
    LatticePathCount,
    LatticeVector,
    StepMatrix,
    TableWeight,
    certify_pointed,
    verify_basic_recurrence,
    verify_cb_1d,
    verify_cb_multidim,
    verify_cb_vector_partition,
    verify_partition_recurrence,
    verify_path_series,
    verify_summation_identity,
)

steps = StepMatrix([(1, 0), (0, 1), (1, 1)])
cert = certify_pointed(steps)


def show(title, report):
    print(f"--- {title} ---")
    print(report.to_text())
    print()


# The master identity: projected product series, substituted into target
# space, against forward-difference weighted counts.  Holds for any weight
# and any coefficient vector; here a lopsided table and rational coefficients.
table = TableWeight((2, 2, 2), [Fraction(k, 3) for k in range(27)])
show(
    "summation identity, table weight",
    verify_summation_identity(steps, cert, table, (Fraction(1, 2), Fraction(-1, 3), 2), 6),
)

# Path counts satisfy the basic recurrence, so the difference side vanishes.
show(
    "summation identity, path counts at unit coefficients",
    verify_summation_identity(steps, cert, LatticePathCount(), (1, 1, 1), 5),
)

# A weight that fails the recurrence is reported with its first violation.
show(
    "basic recurrence, geometric weight (expected failure)",
    verify_basic_recurrence(GeometricWeights((Fraction(1, 2), Fraction(1, 2))), 2, 4),
)

# The weighted counts inherit the difference equation across steps.
show(
    "inherited difference equation for path-weighted counts",
    verify_partition_recurrence(steps, cert, LatticePathCount(), 6),
)

# The walk-count generating function matches its closed product form.
show("walk-count generating function", verify_path_series(steps, cert, 4))

# Partition of unity across the sub-cones, including a signed coefficient
# vector; only the sum of the coefficients is constrained.
show(
    "cone partition of unity at (2, 1)",
    verify_cb_vector_partition(
        steps, cert, (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)), LatticeVector((2, 1))
    ),
)
show(
    "cone partition of unity, signed coefficients at (3, 2)",
    verify_cb_vector_partition(
        steps, cert, (Fraction(3, 2), Fraction(-1, 2), 0), LatticeVector((3, 2))
    ),
)

# The classical two-variable identity and its multidimensional form.
show("two-variable partition of unity", verify_cb_1d(Fraction(3, 5), Fraction(2, 5), 4, 7))
show(
    "multidimensional partition of unity",
    verify_cb_multidim((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)), LatticeVector((2, 1, 3))),
)
