"""Exact computer algebra for free Poisson fields and their enveloping algebras."""

from .automorphism import (
    Endomorphism,
    SubstitutionError,
    apply_endo,
    check_automorphism,
    extend_endo,
    is_rational_in_generators,
    verify_automorphism,
)
from .dependence import (
    DependenceVerdict,
    InconsistencyError,
    dep_bracket,
    dep_env,
    dep_jacobian,
    poisson_dependent,
)
from .envelope import EnvElement, act, env_mul, h, h_of
from .field import PoissonFrac, frac, frac_normalize, fvar, partial, poisson_bracket_frac, variables_of
from .lie import (
    LieElement,
    assoc_expand,
    lie_bracket,
    lyndon_basis,
    necklace_count,
    standard_factorization,
    to_lyndon,
)
from .parsing import ParseError, parse_env, parse_field, print_env, print_field
from .poly import PoissonPoly, degrees, poisson_bracket_poly, x
from .weak import (
    CertificateError,
    ReducedSet,
    interreduce,
    left_dependent,
    membership,
    omega_decompose,
)

__version__ = "0.1.0"
