"""Exact-arithmetic vertex functions of zero-dimensional A-type quiver varieties.

Computes truncated quasimap count series by independent routes (hook
product, interlacing-tuple sum, raw lattice sum, Macdonald-operator matrix
element) and cross-verifies them, together with A_n chamber-limit
factorization and the dual tangent character.
"""

from .errors import (
    CapMismatch,
    DegenerateSpecialization,
    InvalidFixedPoint,
    NonTruncatingError,
    NotInterlacing,
    OutOfDiagram,
    PoleError,
    QuivertexError,
    UnresolvedLimit,
)
from .macdonald import (
    MacdonaldContext,
    SymFunc,
    commutation_check,
    gamma_minus,
    gamma_plus,
    macdonald_basis,
    matrix_element,
    pieri_c,
    pieri_d,
    z_l,
)
from .partitions import (
    all_partitions,
    column_profile,
    dim_formula,
    enumerate_interlacing,
    l_char,
    lemma_sum,
    parse_partition,
    profile_to_obj,
    sigma_hat,
    tau,
    tuple_to_obj,
    z_box,
)
from .quiver import (
    Chamber,
    FixedPoint,
    QuiverSpec,
    chamber_limit_oracle,
    mirror_tangent_character,
    nu_shift,
    validate_fixed_point,
    vertex_limit_factorized,
)
from .scalars import (
    DEFAULT_HBAR,
    DEFAULT_Q,
    RatFunc,
    SpecializedField,
    SymbolicField,
    default_field,
    is_generic_point,
    random_field,
)
from .series import (
    TruncatedSeries,
    ZMonomial,
    pleth_exp,
    qbinomial_series,
    qpoch,
    series_mul,
)
from .vertex import (
    coeff_alpha,
    coeff_beta,
    coeff_delta,
    coeff_epsilon,
    coeff_gamma,
    zfun_product,
    zfun_raw_sum,
    zfun_sum,
)

__version__ = "0.1.0"
