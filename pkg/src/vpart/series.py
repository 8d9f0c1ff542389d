"""Sparse exact truncated multivariate power series.

A series carries its own truncation window: a grading vector and a degree
bound.  Every stored exponent has grading degree between 0 and the bound,
which is what makes the Cauchy product exact on the window; tails that were
cut away can only influence coefficients beyond it.  Series over the step
variables use the all-ones grading (total degree); series over the target
variables use the certified cone functional, whose degree can be positive
even on exponents with negative coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .cone import ConeCertificate
from .core import (
    LatticeVector,
    StepMatrix,
    WeightFunction,
    evaluate_weight,
    exact,
    iter_orthant,
)


class TruncatedSeries:
    """Formal power series kept as a sparse exponent-to-coefficient map.

    Immutable; arithmetic requires both operands to share the number of
    variables, the grading and the bound.  Axes are numbered 1..nvars.
    """

    __slots__ = ("nvars", "grading", "bound", "_coeffs")

    def __init__(
        self,
        nvars: int,
        grading: LatticeVector,
        bound: int,
        coeffs: Mapping[LatticeVector | Sequence[int], int | Fraction | str] | None = None,
    ):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        if grading.dim != nvars:
            raise ValueError("grading dimension must equal nvars")
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.nvars = nvars
        self.grading = grading
        self.bound = bound
        table: dict[LatticeVector, Fraction] = {}
        for raw_exp, raw_val in (coeffs or {}).items():
            exp = raw_exp if isinstance(raw_exp, LatticeVector) else LatticeVector(raw_exp)
            if exp.dim != nvars:
                raise ValueError(f"exponent {exp} has dimension {exp.dim}, expected {nvars}")
            degree = grading.dot(exp)
            if not 0 <= degree <= bound:
                raise ValueError(f"exponent {exp} outside the truncation window")
            value = exact(raw_val)
            if value:
                table[exp] = value
        self._coeffs = table

    @classmethod
    def _wrap(
        cls, nvars: int, grading: LatticeVector, bound: int, table: dict[LatticeVector, Fraction]
    ) -> "TruncatedSeries":
        series = cls.__new__(cls)
        series.nvars = nvars
        series.grading = grading
        series.bound = bound
        series._coeffs = {e: v for e, v in table.items() if v}
        return series

    @classmethod
    def zero(cls, nvars: int, grading: LatticeVector, bound: int) -> "TruncatedSeries":
        return cls(nvars, grading, bound)

    @classmethod
    def one(cls, nvars: int, grading: LatticeVector, bound: int) -> "TruncatedSeries":
        return cls(nvars, grading, bound, {LatticeVector.zero(nvars): 1})

    @classmethod
    def monomial(
        cls,
        nvars: int,
        grading: LatticeVector,
        bound: int,
        exponent: LatticeVector | Sequence[int],
        coeff: int | Fraction | str = 1,
    ) -> "TruncatedSeries":
        return cls(nvars, grading, bound, {exponent: coeff})

    @classmethod
    def with_total_degree(
        cls,
        nvars: int,
        bound: int,
        coeffs: Mapping | None = None,
    ) -> "TruncatedSeries":
        """Series graded by total degree, the natural window in step space."""
        return cls(nvars, LatticeVector.ones(nvars), bound, coeffs)

    def coefficient(self, exponent: LatticeVector | Sequence[int]) -> Fraction:
        exp = exponent if isinstance(exponent, LatticeVector) else LatticeVector(exponent)
        return self._coeffs.get(exp, Fraction(0))

    def terms(self) -> Iterator[tuple[LatticeVector, Fraction]]:
        """Terms in graded-lex order: degree first, then lexicographic."""
        for exp in sorted(self._coeffs, key=lambda e: (self.grading.dot(e), e.coords)):
            yield exp, self._coeffs[exp]

    def support(self) -> list[LatticeVector]:
        return [e for e, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if (
            self.nvars != other.nvars
            or self.grading != other.grading
            or self.bound != other.bound
        ):
            raise ValueError("series windows are incompatible")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        table = dict(self._coeffs)
        for e, v in other._coeffs.items():
            table[e] = table.get(e, Fraction(0)) + v
        return TruncatedSeries._wrap(self.nvars, self.grading, self.bound, table)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._wrap(
            self.nvars, self.grading, self.bound, {e: -v for e, v in self._coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_compatible(other)
            table: dict[LatticeVector, Fraction] = {}
            for e1, v1 in self._coeffs.items():
                for e2, v2 in other._coeffs.items():
                    e = e1 + e2
                    if self.grading.dot(e) > self.bound:
                        continue
                    table[e] = table.get(e, Fraction(0)) + v1 * v2
            return TruncatedSeries._wrap(self.nvars, self.grading, self.bound, table)
        if isinstance(other, float):
            return NotImplemented
        scalar = Fraction(other)
        return TruncatedSeries._wrap(
            self.nvars, self.grading, self.bound, {e: scalar * v for e, v in self._coeffs.items()}
        )

    def __rmul__(self, other):
        if isinstance(other, float):
            return NotImplemented
        return self.__mul__(other)

    def project(self, axis: int) -> "TruncatedSeries":
        """Set variable ``axis`` to zero: keep only terms with exponent 0 there."""
        if not 1 <= axis <= self.nvars:
            raise ValueError(f"axis {axis} out of range 1..{self.nvars}")
        table = {e: v for e, v in self._coeffs.items() if e.coords[axis - 1] == 0}
        return TruncatedSeries._wrap(self.nvars, self.grading, self.bound, table)

    def project_set(self, axes: Iterable[int]) -> "TruncatedSeries":
        """Composition of projections; the empty set is the identity."""
        axes = tuple(axes)
        if any(not 1 <= a <= self.nvars for a in axes):
            raise ValueError(f"axes {axes} out of range 1..{self.nvars}")
        if tuple(sorted(set(axes))) != axes:
            raise ValueError("axes must be strictly increasing")
        if not axes:
            return self
        table = {
            e: v
            for e, v in self._coeffs.items()
            if all(e.coords[a - 1] == 0 for a in axes)
        }
        return TruncatedSeries._wrap(self.nvars, self.grading, self.bound, table)

    def render(self) -> str:
        """Canonical listing: one '(e1,...,ek) : num/den' line per term."""
        lines = []
        for exp, value in self.terms():
            key = "(" + ",".join(str(c) for c in exp.coords) + ")"
            lines.append(f"{key} : {value.numerator}/{value.denominator}")
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.nvars == other.nvars
            and self.grading == other.grading
            and self.bound == other.bound
            and self._coeffs == other._coeffs
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries(nvars={self.nvars}, bound={self.bound}, "
            f"terms={len(self._coeffs)})"
        )


def full_support_part(series: TruncatedSeries, method: str = "filter") -> TruncatedSeries:
    """Sub-series of terms in which every variable genuinely appears.

    Two interchangeable routes: ``filter`` keeps the exponents with no zero
    coordinate directly, ``signed`` forms the alternating sum of projections
    over all axis subsets.  On series supported in the nonnegative orthant the
    result is exactly the part with exponents >= (1, ..., 1).
    """
    if method == "filter":
        table = {
            e: v
            for e, v in series._coeffs.items()
            if all(c != 0 for c in e.coords)
        }
        return TruncatedSeries._wrap(series.nvars, series.grading, series.bound, table)
    if method == "signed":
        total = TruncatedSeries.zero(series.nvars, series.grading, series.bound)
        for size in range(series.nvars + 1):
            for subset in combinations(range(1, series.nvars + 1), size):
                piece = series.project_set(subset)
                total = total + (piece if size % 2 == 0 else -piece)
        return total
    raise ValueError(f"unknown method {method!r}")


def weight_series(phi: WeightFunction, nvars: int, bound: int) -> TruncatedSeries:
    """Generating series of ``phi`` truncated at total degree ``bound``."""
    if phi.arity is not None and phi.arity != nvars:
        raise ValueError(f"weight arity {phi.arity} does not match nvars {nvars}")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    table: dict[LatticeVector, Fraction] = {}
    for x in iter_orthant((1,) * nvars, bound):
        value = evaluate_weight(phi, x)
        if value:
            table[x] = value
    return TruncatedSeries._wrap(nvars, LatticeVector.ones(nvars), bound, table)


def substitute_monomial(
    series: TruncatedSeries, A: StepMatrix, cert: ConeCertificate, bound: int
) -> TruncatedSeries:
    """Replace each step variable by the monomial of its column.

    A term with exponent x lands on the target A x.  The input must be graded
    by total degree with a bound at least ``bound``: every step has functional
    degree >= 1, so any x contributing below the output bound satisfies
    |x| <= degree(A x) <= bound and is guaranteed to be present.
    """
    if series.nvars != A.nsteps:
        raise ValueError(f"series has {series.nvars} variables, matrix has {A.nsteps} steps")
    if series.grading != LatticeVector.ones(series.nvars):
        raise ValueError("input series must be graded by total degree")
    if series.bound < bound:
        raise ValueError(
            f"input bound {series.bound} is insufficient for output bound {bound}"
        )
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    table: dict[LatticeVector, Fraction] = {}
    for x, value in series._coeffs.items():
        if not x.is_nonnegative():
            raise ValueError(f"exponent {x} is not a step multiplicity vector")
        target = A.apply(x)
        if cert.degree(target) > bound:
            continue
        table[target] = table.get(target, Fraction(0)) + value
    return TruncatedSeries._wrap(A.dim, cert.functional, bound, table)


def geometric_inverse(A: StepMatrix, cert: ConeCertificate, bound: int) -> TruncatedSeries:
    """The series G with (1 - sum of step monomials) * G = 1 up to ``bound``.

    Computed by graded recursion: the coefficient at a target is the sum of
    the coefficients one step back, seeded with 1 at the origin.  Pointedness
    well-orders the grading, so the recursion is well-founded; the result's
    coefficient at a target is its number of distinct step walks from 0.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    reachable = {A.apply(x) for x in iter_orthant(cert.step_degrees, bound)}
    zero = LatticeVector.zero(A.dim)
    table: dict[LatticeVector, Fraction] = {zero: Fraction(1)}
    for target in sorted(reachable, key=lambda t: (cert.degree(t), t.coords)):
        if target == zero:
            continue
        total = Fraction(0)
        for col in A.columns:
            total += table.get(target - col, Fraction(0))
        table[target] = total
    return TruncatedSeries._wrap(A.dim, cert.functional, bound, table)
