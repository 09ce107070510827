"""v-numbers and v-functions of monomial ideals."""

from .ass_primes import (
    AssProfile,
    ass_profile,
    associated_primes,
    associated_primes_exhaustive,
    max_primes,
)
from .asymptotics import (
    LawReport,
    LawResult,
    LinearFit,
    VFunctionTable,
    fit_eventual_linear,
    v_function,
    verify_laws,
)
from .errors import ConsistencyError, DomainError, ExponentOverflowError, InputError, VNumberError
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    RingContext,
    alpha_omega,
    colon_by_ideal,
    colon_by_monomial,
    colon_by_prime,
    contains,
    intersect,
    minimize_generators,
    power,
    product,
)
from .kernels import BACKEND
from .parsing import parse_ideal
from .twovar import (
    StaircaseIdeal,
    ass_closed_form,
    family_ideal,
    family_power_gens,
    from_ideal,
    v_closed_form,
    v_m_closed_form,
    v_power_closed_forms,
)
from .vnumber import ModuleGens, VValue, module_min_gens, v, v_p, v_p_bruteforce

__version__ = "0.1.0"
