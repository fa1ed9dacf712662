"""Exact computation with block characters of the symmetric groups.

Block characters depend on a permutation only through its cycle count.  The
library provides the sigma/tau/psi/Ewens families with exact basis conversion
and positivity testing, decomposition into irreducible multiplicities via
tableau descent statistics, the coinvariant-algebra realization of the tau
characters, random Young diagram samplers for the limit-shape phenomenon, and
the extreme block characters of the infinite symmetric group.
"""

from .characters import (
    BlockFunction,
    branching_check,
    ewens,
    from_sigma_basis,
    from_tau_basis,
    gram_psd_oracle,
    is_character,
    psi,
    regular_character,
    restrict,
    sigma,
    sigma_hat,
    sign_character,
    tau,
    to_sigma_basis,
    to_tau_basis,
)
from .combinatorics import (
    conjugate,
    cycle_count,
    decrement,
    descent_set,
    dim_syt,
    eulerian,
    partitions_of,
    stirling_first_unsigned,
)
from .irreducibles import (
    admissible_to_ssyt,
    count_admissible,
    decompose,
    m_count,
    s_count,
    ssyt_to_admissible,
    verify_duality,
    verify_ms_inversion,
)
from .shapes import (
    Profile,
    SampleBatch,
    ShapeMeasure,
    exact_measure,
    mean_profile,
    profile,
    profile_eval,
    sample_batch,
    sample_sigma_shape,
    sample_tau_shape,
    sup_distance,
    tv_distance_exact,
)
from .tableaux import enumerate_syt, rsk, rsk_inverse, rsk_shape, tableau_descents
from .coinvariant import (
    build_quotient_basis,
    descent_monomial,
    filtration_dims,
    normal_form,
    quotient_trace,
)
from .infinite import (
    CoefficientArray,
    array_to_character,
    extreme_array,
    mixture,
    restrict_to_finite,
    sigma_infinity,
    verify_backward_recursion,
    verify_extreme_identity,
)

__version__ = "0.1.0"
