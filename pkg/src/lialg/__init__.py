"""Exact cohomological rigidity checks for maximal solvable extensions ``N x| T``.

``N`` is a graded nilpotent Lie algebra with one-dimensional weight spaces
(``lialg.algebra``); ``lialg.extension`` builds ``R_T``; ``lialg.complex`` is
the brute-force Chevalley–Eilenberg oracle; ``lialg.invariant`` is the fast
torus-invariant path; ``lialg.criteria`` holds the weight-combinatorial tests.
"""

from .algebra import GradedNilpotentAlgebra, ValidationReport
from .lattice import WeightSystem
from .invariant import RigidityVerdict, rigidity
from .criteria import decide

__all__ = [
    "GradedNilpotentAlgebra",
    "ValidationReport",
    "WeightSystem",
    "RigidityVerdict",
    "rigidity",
    "decide",
]
