"""Exact homological computations for graded modules over polynomial rings:
torsion, adic completion, local cohomology, weak-proregularity certificates
and Hochschild cohomology, with machine-checked isomorphism verdicts."""

__version__ = "0.1.0"
