"""Exact arithmetic for generalized octonion algebras O(alpha, beta, gamma)
and audits of Fibonacci, Lucas and generalized Fibonacci-Lucas octonion
identities."""

from octofib.octonion import AlgebraParams, Octonion
from octofib.sequences import fib, gfl_number, horadam, lucas

__all__ = ["AlgebraParams", "Octonion", "fib", "lucas", "horadam", "gfl_number"]
__version__ = "0.1.0"
