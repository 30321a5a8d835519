"""Linking numbers of modular knots from Lorenz words, PSL(2, Z) matrices
or indefinite binary quadratic forms, computed with exact integers."""

from .errors import (
    DegenerateFormError,
    DomainError,
    EquivalentWordsError,
    InputError,
    InternalConsistencyError,
    ModknotError,
    NotHyperbolicError,
    NotReciprocalError,
)
from .kennedy import (
    KennedyResult,
    LinkReport,
    alphabetize,
    compare_methods,
    crossing_count,
    kennedy_counts,
    kennedy_link,
    shift_list,
)
from .linking import (
    RsTriple,
    check_reciprocal_identity,
    linking_number,
    oracle_link,
    rs_self,
    rs_triples,
    symmetrized_link,
)
from .psl2 import (
    Psl2Matrix,
    conjugate_in_psl,
    form_of_matrix,
    is_hyperbolic,
    mat_of_word,
    matrix_inverse,
    parse_matrix,
    word_of_matrix,
)
from .qform import (
    CfExpansion,
    QuadForm,
    apply_matrix,
    automorph,
    cf_expand,
    discriminant,
    parse_form,
    reduce_to_river_form,
    river_word,
)
from .words import (
    LorenzWord,
    canonical,
    cyclically_equivalent,
    inverse_word,
    is_reciprocal,
    letter_at,
    lorenz_words,
    parse_word,
    single_shift,
)

__version__ = "0.1.0"
