"""Barnes multiple zeta, bilateral zeta and q-product numerics."""
from .barnes import (BarnesRequest, EvalResult, barnes_residue, barnes_special_value,
                     barnes_zeta, barnes_zeta_asymptotic, barnes_zeta_direct,
                     barnes_zeta_fourier, log_multiple_gamma, multiple_gamma)
from .bernoulli import (bernoulli_number, multiple_bernoulli, multiple_bernoulli_poly)
from .bilateral import (BilateralRequest, capital_F, f_deriv_nonpos, f_minus, f_plus,
                        g_function, xi, xi_deriv_nonpos, xi_fourier_normal, xi_series)
from .dcx import DirectedComplex, cpow, from_principal, gamma, rgamma
from .errors import (BizetaError, BoundaryError, ConvergenceError, DomainError,
                     PoleError, RangeError, ReductionError, UnknownSuiteError,
                     ZeroFactorError)
from .params import ParameterVector, in_cone_D, normalize
from .qprod import (QData, dedekind_eta, iseki_product, lambert_sum, qpoch_multi,
                    qpoch_tilde)
from .verify import IdentityReport, run_suite

__version__ = "0.1.0"
