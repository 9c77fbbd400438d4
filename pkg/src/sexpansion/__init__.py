"""Semigroup expansions of the 2-dimensional isometry algebras.

Enumerate finite abelian semigroups, find resonant decompositions, expand
the 2-dimensional isometry algebras, extract resonant subalgebras and
zero-reductions, and classify the 3-dimensional results by Bianchi type.
"""

from .cayley import (
    CayleyTable,
    PartialCayleyTable,
    Perm,
    ISO,
    ISO_ANTI,
    apply_perm,
    are_isomorphic,
    canonical_form,
    canonical_key,
    find_zero,
    format_table,
    is_associative,
    is_commutative,
    parse_partial_table,
    parse_table,
)
from .census import CensusCapError, CensusRequest, count_semigroups, enumerate_semigroups
from .resonance import ResonantDecomposition, find_resonances, is_resonant
from .liealg import (
    BianchiType,
    Grading,
    LieAlgebra,
    STANDARD_2D_GRADING,
    abelian_2d,
    canonical_bianchi,
    classify3,
    derived_dim,
    find_gradings,
    is_grading,
    solvable_2d,
    validate,
)
from .expand import LabeledAlgebra, pipeline, resonant_subalgebra, s_expand, zero_reduce
from .templates import TemplateProblem, candidate_count, complete, completion_count_raw

__version__ = "0.1.0"
