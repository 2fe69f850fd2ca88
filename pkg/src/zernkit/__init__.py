"""Zernike polynomials, disk quadrature and spectral interpolation on the unit disk."""

__version__ = "0.1.0"

from .errors import ComputationError, ConvergenceError, DomainError, ValidationError, ZernkitError
from .jacobi import JacobiSpec, eval_jacobi, eval_jacobi_deriv, eval_shifted, eval_shifted_deriv
from .prufer import RootSet, find_roots
from .quad import DiskRule, RadialRule, disk_rule, integrate_disk, radial_rule
from .zernike import ZernikeTriple, angular_eval, radial_deriv, radial_eval, radial_eval_batch, zernike_eval
from .expansion import Expansion, InterpGrid, coeff_decay_report, evaluate, fit, make_grid, sample
from .indexing import StdIndex, ansi_index, fringe_index, std_to_triple, triple_to_std, wyant_q_eval

__all__ = [
    "ComputationError", "ConvergenceError", "DomainError", "ValidationError", "ZernkitError",
    "JacobiSpec", "eval_jacobi", "eval_jacobi_deriv", "eval_shifted", "eval_shifted_deriv",
    "RootSet", "find_roots",
    "DiskRule", "RadialRule", "disk_rule", "integrate_disk", "radial_rule",
    "ZernikeTriple", "angular_eval", "radial_deriv", "radial_eval", "radial_eval_batch", "zernike_eval",
    "Expansion", "InterpGrid", "coeff_decay_report", "evaluate", "fit", "make_grid", "sample",
    "StdIndex", "ansi_index", "fringe_index", "std_to_triple", "triple_to_std", "wyant_q_eval",
]
