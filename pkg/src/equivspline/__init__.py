"""Exact computations for cocircuit ideals, Dahmen-Micchelli spaces and multivariate splines.

All arithmetic is over the rationals; nothing here uses floating point.
"""

from .arrangement import VectorList, chambers, enumerate_bases, rational_subspaces, tutte
from .dmspace import dspace_basis, dspace_dims
from .errors import InvariantError, NonGenericPointError, NotSpanningError, PreconditionError
from .ideals import IdealSpec, hilbert
from .splines import eval_T, eval_TF, local_piece

__version__ = "0.1.0"

__all__ = [
    "IdealSpec",
    "InvariantError",
    "NonGenericPointError",
    "NotSpanningError",
    "PreconditionError",
    "VectorList",
    "chambers",
    "dspace_basis",
    "dspace_dims",
    "enumerate_bases",
    "eval_T",
    "eval_TF",
    "hilbert",
    "local_piece",
    "rational_subspaces",
    "tutte",
]
