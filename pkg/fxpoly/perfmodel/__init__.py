# Performance profiles
from ._profile import PerfProfile, PRICED_OPS
from ._bundled import bundled_ppd, bundled_ppd_names, BUNDLED_PPDS

# Profiling suite and the synthetic cost accountant
from ._suite import SuiteEntry, generate_profiling_suite
from ._accountant import price_trace, simulate_profile, with_simulated_samples

# Cost model and plan selection
from ._costmodel import CostModel, fit_cost_model, predict_oppe_cost, features, FEATURE_NAMES
from ._select import Decision, direct_ops, predict_direct_cost, select_plan
