"""Complete enumeration of nonnegative integer representations of a target.

The cone certificate turns the search finite: the residual target's degree
under the certified functional only ever shrinks, and each step costs at
least one, so plain backtracking with a degree budget is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone import ConeCertificate, cone_contains
from .core import LatticeVector, StepMatrix, WeightFunction, evaluate_weight, iter_orthant


@dataclass(frozen=True)
class SolutionSet:
    """All representations of ``target`` as nonnegative column combinations."""

    matrix: StepMatrix
    target: LatticeVector
    solutions: tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def enumerate_solutions(
    A: StepMatrix, cert: ConeCertificate, target: LatticeVector
) -> SolutionSet:
    """Every x >= 0 with column-combination x equal to ``target``, in lex order."""
    if target.dim != A.dim:
        raise ValueError(f"target has dimension {target.dim}, matrix has {A.dim}")
    found: list[LatticeVector] = []
    coords = [0] * A.nsteps

    def descend(j: int, residual: LatticeVector) -> None:
        budget = cert.degree(residual)
        if budget < 0:
            return
        if j == A.nsteps:
            if residual.is_zero():
                found.append(LatticeVector(coords))
            return
        step = A.columns[j]
        for v in range(budget // cert.step_degrees[j] + 1):
            coords[j] = v
            descend(j + 1, residual - v * step)
        coords[j] = 0

    descend(0, target)
    return SolutionSet(matrix=A, target=target, solutions=tuple(found))


def vector_partition(A: StepMatrix, cert: ConeCertificate, target: LatticeVector) -> int:
    """Number of nonnegative integer representations of ``target``."""
    return len(enumerate_solutions(A, cert, target))


def generalized_vp(
    A: StepMatrix, cert: ConeCertificate, target: LatticeVector, phi: WeightFunction
) -> Fraction:
    """Sum of ``phi`` over all representations of ``target``."""
    if phi.arity is not None and phi.arity != A.nsteps:
        raise ValueError(f"weight arity {phi.arity} does not match {A.nsteps} steps")
    total = Fraction(0)
    for x in enumerate_solutions(A, cert, target):
        total += evaluate_weight(phi, x)
    return total


def integer_span_contains(A: StepMatrix, target: LatticeVector) -> bool:
    """Whether ``target`` is an integer (possibly negative) column combination.

    Triangularizes the columns by exact gcd elimination; column operations
    preserve the generated lattice, after which membership is a greedy
    divisibility check row by row.
    """
    if target.dim != A.dim:
        raise ValueError(f"target has dimension {target.dim}, matrix has {A.dim}")
    cols = [list(c.coords) for c in A.columns]
    residual = list(target.coords)
    active = list(range(len(cols)))
    for row in range(A.dim):
        live = [j for j in active if cols[j][row] != 0]
        if not live:
            if residual[row] != 0:
                return False
            continue
        # gcd elimination in this row across the live columns
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][row]))
            small, other = live[0], live[1]
            q = cols[other][row] // cols[small][row]
            cols[other] = [a - q * b for a, b in zip(cols[other], cols[small])]
            if cols[other][row] == 0:
                live.pop(1)
        pivot = live[0]
        g = cols[pivot][row]
        if residual[row] % g != 0:
            return False
        q = residual[row] // g
        residual = [a - q * b for a, b in zip(residual, cols[pivot])]
        active.remove(pivot)
    return all(v == 0 for v in residual)


def _weighted_sums(
    A: StepMatrix, cert: ConeCertificate, phi: WeightFunction, bound: int
) -> dict[LatticeVector, Fraction]:
    """phi-weighted representation counts for every target of degree <= bound.

    Complete because any representation of a target with degree at most
    ``bound`` itself has total step cost at most ``bound``.
    """
    if phi.arity is not None and phi.arity != A.nsteps:
        raise ValueError(f"weight arity {phi.arity} does not match {A.nsteps} steps")
    sums: dict[LatticeVector, Fraction] = {}
    for x in iter_orthant(cert.step_degrees, bound):
        target = A.apply(x)
        sums[target] = sums.get(target, Fraction(0)) + evaluate_weight(phi, x)
    return sums


def generalized_vp_table(
    A: StepMatrix, cert: ConeCertificate, phi: WeightFunction, bound: int
) -> dict[LatticeVector, Fraction]:
    """Weighted counts for every lattice point of the cone up to ``bound``.

    Keys run over the targets in the real cone that lie in the integer span
    of the columns and have functional degree between 0 and ``bound``;
    targets without any nonnegative representation appear with value 0.
    Iteration order is graded lexicographic (degree first, then lex).
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    table = _weighted_sums(A, cert, phi, bound)

    # Any cone member of degree <= bound is a real nonnegative combination
    # with coefficient sum <= bound, which caps each coordinate.
    spans = [max(abs(col.coords[i]) for col in A.columns) for i in range(A.dim)]
    ranges = [range(-bound * s, bound * s + 1) for s in spans]

    def scan(i: int, partial: list[int]) -> None:
        if i == A.dim:
            candidate = LatticeVector(partial)
            if candidate in table:
                return
            if not 0 <= cert.degree(candidate) <= bound:
                return
            if integer_span_contains(A, candidate) and cone_contains(A, candidate):
                table[candidate] = Fraction(0)
            return
        for v in ranges[i]:
            partial.append(v)
            scan(i + 1, partial)
            partial.pop()

    scan(0, [])
    ordered = sorted(table, key=lambda t: (cert.degree(t), t.coords))
    return {t: table[t] for t in ordered}
