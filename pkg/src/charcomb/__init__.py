"""Exact combinatorics of beta-sets, symbols, hook operators and Fourier
transforms, hyperoctahedral character evaluation, unipotent degree formulas,
flag/Kostka counting, and Dixon-Schneider character tables for small matrix
groups.

Everything is exact: integers, fractions, and cyclotomic numbers with integer
or rational coordinates. No floating point enters any verified identity.
"""

__version__ = "0.1.0"

from .combinat import (
    beta_rank, beta_shift, beta_reduce, beta_of_partition, partition_of_beta,
    partitions, dominates,
)
from .arrays import (
    Array, Symbol, parse_array, array_rank, array_defect, similarity_class,
    special_array, sharp, s_of, d_of,
)
from .formal import FormalSum
from .hooks import HookPosition, hooks, remove_hook, leg_parity, hook_operator
from .fourier import (
    fourier, fourier_e, fourier_unordered, theta, eps, op,
)

__all__ = [
    "beta_rank", "beta_shift", "beta_reduce", "beta_of_partition",
    "partition_of_beta", "partitions", "dominates",
    "Array", "Symbol", "parse_array", "array_rank", "array_defect",
    "similarity_class", "special_array", "sharp", "s_of", "d_of",
    "FormalSum",
    "HookPosition", "hooks", "remove_hook", "leg_parity", "hook_operator",
    "fourier", "fourier_e",
    "fourier_unordered", "theta", "eps", "op",
]
