"""Sinc-based numerical indefinite integration over (-1, 1).

Six formulas are provided: the Si-basis formulas SE1/DE1, the double-sum
formulas SE2/DE2, and the matrix-vector formulas SE3/DE3 (which also handle
repeated integration), each with the tanh (SE) or double-exponential (DE)
variable transformation.
"""
from .bench import Approximation, Formula, builtin_problem, max_error
from .errors import ContractError, DomainError, ParameterError, SamplingError, SincIndefError
from .kernels import backend_name
from .matrix_form import LeftBoundary, build_operator, indef_matrix, omega_weights, omega_weights_at
from .params import AnalyticityParams, GridParams, make_grid
from .pointwise import indef_basis, indef_doublesum, sample, trapezoid_total
from .special import sigma, sinc, sine_integral
from .transform import DE, SE, Family, Transform, eta

__version__ = "0.1.0"
