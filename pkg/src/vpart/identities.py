"""Shift and difference operators on weights, and exact identity verifiers.

Every verifier recomputes its two sides through independent code paths (the
series pipeline on one side, direct enumeration or direct summation on the
other) and reports exact coefficient-level equality over an explicitly named
finite window.  Nothing here ever claims unbounded validity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cone import ConeCertificate, certificate_from_functional
from .core import (
    LatticeVector,
    RuleWeight,
    StepMatrix,
    WeightFunction,
    evaluate_weight,
    exact,
    iter_orthant,
    multinomial,
)
from .enumeration import generalized_vp, generalized_vp_table, vector_partition, _weighted_sums
from .series import TruncatedSeries, full_support_part, geometric_inverse, substitute_monomial, weight_series


@dataclass(frozen=True)
class Violation:
    """Where an identity first failed, with the two exact side values."""

    location: LatticeVector
    lhs: Fraction
    rhs: Fraction

    def __str__(self) -> str:
        return f"at {self.location}: lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check over one named finite window."""

    holds: bool
    window: str
    first_violation: Violation | None
    residual_terms: int

    def __post_init__(self):
        consistent = self.holds == (self.first_violation is None and self.residual_terms == 0)
        if not consistent:
            raise ValueError("holds flag contradicts the recorded violations")

    def to_text(self) -> str:
        lines = [f"holds: {'true' if self.holds else 'false'}", f"window: {self.window}"]
        if self.first_violation is not None:
            lines.append(f"first violation: {self.first_violation}")
        lines.append(f"residual terms: {self.residual_terms}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        violation = None
        if self.first_violation is not None:
            violation = {
                "location": list(self.first_violation.location.coords),
                "lhs": str(self.first_violation.lhs),
                "rhs": str(self.first_violation.rhs),
            }
        return {
            "holds": self.holds,
            "window": self.window,
            "first_violation": violation,
            "residual_terms": self.residual_terms,
        }


class RecurrencePreconditionError(ValueError):
    """The supplied weight fails the recurrence a verifier requires.

    Distinct from an identity violation: the check never ran.  ``report``
    carries the failed recurrence check.
    """

    def __init__(self, report: VerificationReport):
        self.report = report
        super().__init__(f"weight does not satisfy the basic recurrence ({report.window})")


def _report_from_mismatches(
    window: str, mismatches: list[tuple[LatticeVector, Fraction, Fraction]]
) -> VerificationReport:
    if not mismatches:
        return VerificationReport(True, window, None, 0)
    loc, lhs, rhs = mismatches[0]
    return VerificationReport(False, window, Violation(loc, lhs, rhs), len(mismatches))


def shift_apply(phi: WeightFunction, mu: LatticeVector) -> WeightFunction:
    """The weight x -> phi(x + mu); entries of ``mu`` may be negative.

    Arguments that land outside the nonnegative orthant weigh zero, following
    the convention applied by `evaluate_weight`.
    """
    if phi.arity is not None and phi.arity != mu.dim:
        raise ValueError(f"weight arity {phi.arity} does not match shift dimension {mu.dim}")
    return RuleWeight(lambda x: evaluate_weight(phi, x + mu), arity=mu.dim)


def forward_difference_apply(
    phi: WeightFunction, coeffs: Sequence[int | Fraction | str]
) -> WeightFunction:
    """The weight x -> phi(x + I) - sum_j coeffs[j] * phi(x + I - e_j).

    With one variable and coefficient 1 this is the discrete derivative
    x -> phi(x + 1) - phi(x); summing the result over representations of a
    target is what makes the summation identity telescope.
    """
    cs = tuple(exact(c) for c in coeffs)
    nvars = len(cs)
    if phi.arity is not None and phi.arity != nvars:
        raise ValueError(f"weight arity {phi.arity} does not match {nvars} coefficients")
    ones = LatticeVector.ones(nvars)
    units = [LatticeVector.unit(nvars, j) for j in range(1, nvars + 1)]

    def rule(x: LatticeVector) -> Fraction:
        value = evaluate_weight(phi, x + ones)
        for c, unit in zip(cs, units):
            if c:
                value -= c * evaluate_weight(phi, x + ones - unit)
        return value

    return RuleWeight(rule, arity=nvars)


def partition_series(
    A: StepMatrix, cert: ConeCertificate, phi: WeightFunction, bound: int
) -> TruncatedSeries:
    """Generating series of the phi-weighted counts over targets up to ``bound``."""
    sums = _weighted_sums(A, cert, phi, bound)
    return TruncatedSeries(A.dim, cert.functional, bound, {t: v for t, v in sums.items() if v})


def verify_summation_identity(
    A: StepMatrix,
    cert: ConeCertificate,
    phi: WeightFunction,
    coeffs: Sequence[int | Fraction | str],
    bound: int,
) -> VerificationReport:
    """Check the master summation identity for the weighted counts, exactly.

    Left side: take the generating series of phi in the step variables,
    multiply by (1 - <coeffs, variables>), keep the full-support part, and
    substitute each variable by its step monomial.  Right side: the
    generating series of the counts weighted by the forward difference of
    phi, attached at targets shifted by the sum of all steps (the image of
    the all-ones corner of the step orthant).  Both sides are compared
    coefficient by coefficient up to functional degree ``bound``.
    """
    cs = tuple(exact(c) for c in coeffs)
    if len(cs) != A.nsteps:
        raise ValueError(f"expected {A.nsteps} coefficients, got {len(cs)}")
    if bound < 1:
        raise ValueError("bound must be at least 1")

    nvars = A.nsteps
    phi_series = weight_series(phi, nvars, bound)
    one_minus = TruncatedSeries.one(nvars, LatticeVector.ones(nvars), bound)
    for j, c in enumerate(cs, start=1):
        if c:
            one_minus = one_minus - TruncatedSeries.monomial(
                nvars, LatticeVector.ones(nvars), bound, LatticeVector.unit(nvars, j), c
            )
    lhs = substitute_monomial(full_support_part(one_minus * phi_series), A, cert, bound)

    corner = A.column_sum()
    base = cert.degree(corner)
    rhs = TruncatedSeries.zero(A.dim, cert.functional, bound)
    if base <= bound:
        shifted = forward_difference_apply(phi, cs)
        sums = _weighted_sums(A, cert, shifted, bound - base)
        rhs = TruncatedSeries(
            A.dim,
            cert.functional,
            bound,
            {t + corner: v for t, v in sums.items() if v},
        )

    window = f"functional degree <= {bound}"
    mismatches = [
        (e, lhs.coefficient(e), rhs.coefficient(e))
        for e, _ in (lhs - rhs).terms()
    ]
    return _report_from_mismatches(window, mismatches)


def verify_basic_recurrence(phi: WeightFunction, nvars: int, bound: int) -> VerificationReport:
    """Check phi(x) = sum_j phi(x - e_j) for all x >= (1,...,1), |x| <= bound."""
    if phi.arity is not None and phi.arity != nvars:
        raise ValueError(f"weight arity {phi.arity} does not match nvars {nvars}")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    ones = LatticeVector.ones(nvars)
    units = [LatticeVector.unit(nvars, j) for j in range(1, nvars + 1)]
    mismatches = []
    points = [ones + x for x in iter_orthant((1,) * nvars, bound - nvars)]
    points.sort(key=lambda p: (sum(p.coords), p.coords))
    for x in points:
        lhs = evaluate_weight(phi, x)
        rhs = sum((evaluate_weight(phi, x - u) for u in units), Fraction(0))
        if lhs != rhs:
            mismatches.append((x, lhs, rhs))
    window = f"x >= {ones}, total degree <= {bound}"
    return _report_from_mismatches(window, mismatches)


def verify_partition_recurrence(
    A: StepMatrix, cert: ConeCertificate, phi: WeightFunction, bound: int
) -> VerificationReport:
    """Check that the weighted counts inherit the step-difference equation.

    Requires the weight itself to satisfy the basic recurrence on the needed
    window; raises `RecurrencePreconditionError` otherwise, so a precondition
    failure can never be mistaken for an identity violation.  The identity
    P(t) = sum_j P(t - step_j) is then checked for every target t in the
    image of the shifted orthant (the column sum plus the step semigroup)
    with functional degree at most ``bound``.
    """
    precondition = verify_basic_recurrence(phi, A.nsteps, bound)
    if not precondition.holds:
        raise RecurrencePreconditionError(precondition)

    corner = A.column_sum()
    base = cert.degree(corner)
    targets: set[LatticeVector] = set()
    if base <= bound:
        for x in iter_orthant(cert.step_degrees, bound - base):
            targets.add(corner + A.apply(x))
    mismatches = []
    for t in sorted(targets, key=lambda t: (cert.degree(t), t.coords)):
        lhs = generalized_vp(A, cert, t, phi)
        rhs = sum((generalized_vp(A, cert, t - col, phi) for col in A.columns), Fraction(0))
        if lhs != rhs:
            mismatches.append((t, lhs, rhs))
    window = f"targets in column sum + step semigroup, functional degree <= {bound}"
    return _report_from_mismatches(window, mismatches)


def _walk_counts(A: StepMatrix, cert: ConeCertificate, bound: int) -> dict[LatticeVector, int]:
    """Endpoint tally of every step walk from the origin, by brute force.

    Enumerates the walks themselves (depth-first over step choices), so it
    shares no logic with the graded recursion it is compared against.
    """
    counts: dict[LatticeVector, int] = {}

    def walk(position: LatticeVector, budget: int) -> None:
        counts[position] = counts.get(position, 0) + 1
        for col, d in zip(A.columns, cert.step_degrees):
            if d <= budget:
                walk(position + col, budget - d)

    walk(LatticeVector.zero(A.dim), bound)
    return counts


def verify_path_series(A: StepMatrix, cert: ConeCertificate, bound: int) -> VerificationReport:
    """Check the closed form of the step-walk generating function.

    Three quantities must agree at every target with functional degree up to
    ``bound``: the path-count weighted partition sums (enumeration route),
    the graded inverse of 1 minus the step monomials (series route), and a
    brute-force tally of the walks themselves.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    from .core import LatticePathCount

    table = generalized_vp_table(A, cert, LatticePathCount(), bound)
    inverse = geometric_inverse(A, cert, bound)
    walks = _walk_counts(A, cert, bound)

    keys = set(table) | set(inverse.support()) | set(walks)
    mismatches = []
    for t in sorted(keys, key=lambda t: (cert.degree(t), t.coords)):
        lhs = table.get(t, Fraction(0))
        rhs = inverse.coefficient(t)
        brute = Fraction(walks.get(t, 0))
        if lhs != rhs:
            mismatches.append((t, lhs, rhs))
        elif rhs != brute:
            mismatches.append((t, rhs, brute))
    window = f"functional degree <= {bound}"
    return _report_from_mismatches(window, mismatches)


def verify_cb_vector_partition(
    A: StepMatrix,
    cert: ConeCertificate,
    coeffs: Sequence[int | Fraction | str],
    mu: LatticeVector,
) -> VerificationReport:
    """Check the partition-of-unity splitting of the count at ``mu``.

    With coefficients summing to 1, the count of representations of ``mu``
    equals, over each dropped column j, the convolution of the plain counts
    of the sub-step-set with the counts weighted by the multinomial-monomial
    weight of axis j.  All terms are evaluated by direct enumeration.
    """
    cs = tuple(exact(c) for c in coeffs)
    if len(cs) != A.nsteps:
        raise ValueError(f"expected {A.nsteps} coefficients, got {len(cs)}")
    if sum(cs) != 1:
        raise ValueError(f"coefficients must sum to 1, got {sum(cs)}")
    if mu.dim != A.dim:
        raise ValueError(f"mu has dimension {mu.dim}, matrix has {A.dim}")

    from .core import MultinomialMonomial

    budget = cert.degree(mu)
    lhs = Fraction(0)
    for j in range(1, A.nsteps + 1):
        phi_j = MultinomialMonomial(cs, axis=j)
        if A.nsteps == 1:
            # dropping the only column leaves the empty step set, whose sole
            # representable target is the origin, once
            lhs += generalized_vp(A, cert, mu, phi_j)
            continue
        sub = A.drop_column(j)
        sub_cert = certificate_from_functional(sub, cert.functional)
        nus = {sub.apply(y) for y in iter_orthant(sub_cert.step_degrees, budget)}
        for nu in sorted(nus, key=lambda t: (cert.degree(t), t.coords)):
            count = vector_partition(sub, sub_cert, nu)
            if count:
                lhs += count * generalized_vp(A, cert, mu - nu, phi_j)
    rhs = Fraction(vector_partition(A, cert, mu))
    window = f"mu = {mu}"
    mismatches = [] if lhs == rhs else [(mu, lhs, rhs)]
    return _report_from_mismatches(window, mismatches)


def verify_cb_multidim(
    coeffs: Sequence[int | Fraction | str], mu: LatticeVector
) -> VerificationReport:
    """Check the multidimensional partition-of-unity sum at ``mu`` directly.

    sum over axes j and over 0 <= nu <= mu with nu_j = 0 of
    multinomial(mu - nu) * coeffs ** (mu - nu + e_j) must equal 1 exactly.
    Uses the convention 0 ** 0 = 1, so degenerate coefficient vectors are fine.
    """
    cs = tuple(exact(c) for c in coeffs)
    if sum(cs) != 1:
        raise ValueError(f"coefficients must sum to 1, got {sum(cs)}")
    if mu.dim != len(cs):
        raise ValueError(f"mu has dimension {mu.dim}, expected {len(cs)}")
    if not mu.is_nonnegative():
        raise ValueError(f"mu must be nonnegative, got {mu}")

    nvars = len(cs)
    total = Fraction(0)
    for j in range(1, nvars + 1):
        ranges = [range(0, m + 1) if k != j - 1 else range(0, 1) for k, m in enumerate(mu.coords)]

        def accumulate(idx: int, nu: list[int]) -> Fraction:
            if idx == nvars:
                rest = mu - LatticeVector(nu)
                term = Fraction(multinomial(rest))
                for k, c in enumerate(cs):
                    term *= c ** (rest.coords[k] + (1 if k == j - 1 else 0))
                return term
            subtotal = Fraction(0)
            for v in ranges[idx]:
                nu.append(v)
                subtotal += accumulate(idx + 1, nu)
                nu.pop()
            return subtotal

        total += accumulate(0, [])
    window = f"mu = {mu}"
    mismatches = [] if total == 1 else [(mu, total, Fraction(1))]
    return _report_from_mismatches(window, mismatches)


def verify_cb_1d(
    c1: int | Fraction | str,
    c2: int | Fraction | str,
    mu1: int,
    mu2: int,
) -> VerificationReport:
    """Check the classical two-variable partition-of-unity identity.

    c2^(mu2+1) * sum_{v=0..mu1} C(mu1+mu2-v, mu1-v) c1^(mu1-v)
    + c1^(mu1+1) * sum_{v=0..mu2} C(mu1+mu2-v, mu2-v) c2^(mu2-v) must equal 1
    whenever c1 + c2 = 1 and both exponents are nonnegative.
    """
    a, b = exact(c1), exact(c2)
    if a + b != 1:
        raise ValueError(f"coefficients must sum to 1, got {a + b}")
    if mu1 < 0 or mu2 < 0:
        raise ValueError("mu1 and mu2 must be nonnegative")

    first = sum(
        (math.comb(mu1 + mu2 - v, mu1 - v) * a ** (mu1 - v) for v in range(mu1 + 1)),
        Fraction(0),
    )
    second = sum(
        (math.comb(mu1 + mu2 - v, mu2 - v) * b ** (mu2 - v) for v in range(mu2 + 1)),
        Fraction(0),
    )
    total = b ** (mu2 + 1) * first + a ** (mu1 + 1) * second
    location = LatticeVector((mu1, mu2))
    window = f"mu = {location}"
    mismatches = [] if total == 1 else [(location, total, Fraction(1))]
    return _report_from_mismatches(window, mismatches)
