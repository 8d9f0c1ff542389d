"""Counting the ways a lattice target splits into prescribed steps.

Walks through the basic objects: a step matrix, its pointedness certificate,
the full enumeration of representations, and weighted counts.
"""

from fractions import Fraction

from vpart import (
    ConstantOne,
    LatticePathCount,
    LatticeVector,
    StepMatrix,
    certify_pointed,
    enumerate_solutions,
    generalized_vp,
    generalized_vp_table,
    vector_partition,
)

# Steps east, north and diagonal: the king-move quarter of the plane.
steps = StepMatrix([(1, 0), (0, 1), (1, 1)])
cert = certify_pointed(steps)
print("step columns:", [col.coords for col in steps.columns])
print("certified functional:", cert.functional, "with step degrees", cert.step_degrees)
print()

# Every way to assemble (2, 2) from those steps. Each solution lists how
# often each column is used; the certificate makes the search finite.
target = LatticeVector((2, 2))
solutions = enumerate_solutions(steps, cert, target)
print(f"representations of {target}:")
for x in solutions:
    print("  multiplicities", x.coords)
print("count:", vector_partition(steps, cert, target))
print()

# The same sum with a weight attached to each representation. Weighting by
# the number of orderings of the chosen steps counts lattice paths; for this
# step set those are the Delannoy numbers.
paths = generalized_vp(steps, cert, target, LatticePathCount())
print("weighted by step orderings (king paths to (2,2)):", paths)
print()

# A one-dimensional step set with gaps: degrees 2 and 3 cannot reach 1.
# The table lists every lattice point of the cone up to the bound, with an
# explicit zero where no representation exists.
gapped = StepMatrix([(2,), (3,)])
gap_cert = certify_pointed(gapped)
print("counts for steps {2, 3} up to degree 7:")
for point, value in generalized_vp_table(gapped, gap_cert, ConstantOne(), 7).items():
    print(f"  {point.coords[0]} -> {value}")
