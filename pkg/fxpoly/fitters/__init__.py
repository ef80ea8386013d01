# Fitting configuration
from ._config import FitConfig

# Polynomial and plan types
from ._polynomial import ScaledPolynomial, PiecewisePlan

# Error metric and its theoretical bound
from ._srd import srd, srd_array, srd_bound_report, estimate_lipschitz, sample

# Interpolation and fixed point discretization
from ._interpolate import cheby_interpolate, lagrange_interpolate, chebyshev_nodes, newton_interpolate, poly_eval
from ._constrain import constrain_k
from ._scaling import scale_c, scale_poly
from ._evaluate import eval_scaled_poly_fxp, eval_scaled_array, eval_plan, eval_plan_array, piece_indices
from ._boosting import residual_boost
from ._sampling import SampleGrid, grid_size

# Fitting
from ._fit import fit_one_piece, fit_piecewise, fit_candidates, fit_candidates_with_report, FitOutcome
from ._verify import verify_plan, VerificationReport
