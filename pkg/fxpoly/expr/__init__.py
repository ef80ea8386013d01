# Expression trees and the parser
from ._nodes import Expression, Num, Const, Var, Neg, BinOp, Call, CONSTANTS, to_text
from ._parser import parse, tokenize

# Builtin function registry
from ._builtins import Builtin, BUILTINS, DEFAULT_QUAD_TOL, register, register_partial, lookup, \
    lower_inc_gamma, upper_inc_gamma

# Evaluation
from ._eval import eval_real, eval_array, ExprFunction, compile_function
from ._quadrature import integrate_simpson

# Structural analysis for the direct-evaluation estimate
from ._census import OpCensus, census, NONLINEAR_KINDS

# Benchmark functions
from ._library import LibraryFunction, LIBRARY, SPECIAL, library_function
