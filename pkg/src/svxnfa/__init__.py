"""Self-verifying symmetric-difference automata over GF(2)."""

from .automata import (
    Verdict,
    Xdfa,
    Xnfa,
    canonical_form,
    classify_word,
    determinize,
    minimize,
    path_parity_oracle,
    weight,
    word_matrix,
    xdfa_isomorphic,
)
from .construct import (
    WitnessSpec,
    build_mary_witness,
    build_witness,
    change_basis,
    check_equivalence,
    equivalent_family,
    witness_spec,
    witness_xdfa_size,
)
from .errors import (
    DimensionError,
    EnumerationLimitError,
    PreconditionError,
    SingularMatrixError,
    StateLimitError,
    SvViolationError,
    SvxnfaError,
)
from .gf2 import (
    BitMatrix,
    BitVec,
    enumerate_gl,
    gl_order,
    invert,
    is_nonsingular,
    mat_mul,
    random_gl,
    vec_mat_mul,
)
from .poly import (
    Gf2Poly,
    char_poly,
    companion_matrix,
    enumerate_primitive,
    has_factor_x_plus_1,
    is_irreducible,
    is_primitive,
    poly_add,
    poly_mod,
    poly_mul,
    poly_to_state,
    state_to_poly,
)
from .sv import (
    SvAssignment,
    SvSolutionSpace,
    check_sv,
    solve_sv,
    split_assignment,
    theorem3_free_assignment,
)

__version__ = "0.1.0"
