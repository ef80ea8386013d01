from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from fxpoly.util import UsageError


@dataclass(frozen=True)
class LibraryFunction:
    name: str
    text: str
    domain: Tuple[float, float]
    defaults: Optional[Tuple[float, float]] = None


_SQRT_2_OVER_PI = '0.7978845608028654'

# Benchmark activations and densities
LIBRARY: Dict[str, LibraryFunction] = {f.name: f for f in [
    LibraryFunction('sigmoid', '1/(1+exp(-x))', (-50.0, 50.0), (0.0, 1.0)),
    LibraryFunction('tanh', '(exp(x)-exp(-x))/(exp(x)+exp(-x))', (-50.0, 50.0), (-1.0, 1.0)),
    LibraryFunction('soft_plus', 'ln(1+exp(x))', (-20.0, 50.0)),
    LibraryFunction('elu', 'ite(x, x, exp(x)-1)', (-50.0, 20.0)),
    LibraryFunction('selu', '1.0507009873554805*ite(x, x, 1.6732632423543772*(exp(x)-1))', (-50.0, 20.0)),
    LibraryFunction('gelu', f'0.5*x*(1+tanh({_SQRT_2_OVER_PI}*(x+0.044715*x^3)))', (-20.0, 20.0)),
    LibraryFunction('soft_sign', 'x/(1+abs(x))', (-50.0, 50.0)),
    LibraryFunction('isru', 'x/sqrt(1+x^2)', (-50.0, 50.0)),
    LibraryFunction('normal_dis', 'exp(-x^2/2)/sqrt(2*pi)', (-10.0, 10.0)),
    LibraryFunction('cauchy_dis', '1/(pi*(1+x^2))', (-40.0, 40.0)),
    LibraryFunction('gamma_dis', 'x*exp(-x)/gamma(2)', (0.0, 50.0)),
    LibraryFunction('chi_square_dis', 'x*exp(-x/2)/(2^2*gamma(2))', (0.0, 50.0)),
    LibraryFunction('exp_dis', 'exp(-x)', (1e-5, 10.0)),
    LibraryFunction('log_dis', 'exp(-ln(x)^2/2)/(x*sqrt(2*pi))', (1e-4, 20.0)),
    LibraryFunction('bs_dis', '(sqrt(x)+sqrt(1/x))/(2*0.5*x)*normal_pdf((sqrt(x)-sqrt(1/x))/0.5)', (1e-6, 30.0)),
]}

# Integral-defined special functions
SPECIAL: Dict[str, LibraryFunction] = {f.name: f for f in [
    *[LibraryFunction(f'lower_inc_gamma_{z}', f'lower_inc_gamma(x, {z})', (0.0, 15.0)) for z in (1, 2, 3)],
    *[LibraryFunction(f'upper_inc_gamma_{z}', f'upper_inc_gamma(x, {z})', (0.0, 10.0)) for z in (1, 2, 3)],
    LibraryFunction('erf', 'erf(x)', (0.0, 5.0)),
    LibraryFunction('phi', 'erf(x/sqrt(2))', (-5.0, 5.0)),
]}


def library_function(name: str) -> LibraryFunction:
    for table in (LIBRARY, SPECIAL):
        if name in table:
            return table[name]
    raise UsageError(f'no library function named "{name}"')
