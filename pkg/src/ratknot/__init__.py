"""Rational knots: continued fractions, invariants, census, generating functions,
lens space counts and matrix monoid orbits, all in exact arithmetic."""

__version__ = "0.1.0"

from .fraction_core import (
    INFINITY,
    ExtendedRational,
    KnotClass,
    KnotDataError,
    SchubertPair,
    canonical_word,
    collapse_zeros,
    equivalents,
    eval_cf,
    even_to_positive,
    knot_class,
    normalize_pair,
    positive_to_even,
    word_fraction,
)
from .invariants import (
    InvariantSet,
    classify_u1_even_form,
    crossing_number,
    genus,
    invariants_of_pair,
    invariants_of_word,
    is_bleiler_counterexample,
    is_u1,
    maxcf_alexander,
    signature,
    unknotting_switches,
)
from .census import CensusFilter, CensusReport, census, census_u1_by_determinant, sum_abs_signature
from .series import (
    RationalGF,
    TruncatedSeries,
    build_G1,
    diagonal_sigma0,
    expand,
    gf_catalog,
    hadamard,
    mean_statistics,
    select_J,
)
from .lens import LensCount, lens_count, p_seq, q_seq, sn_search, u1_lens_count
from .matrix_monoid import (
    UnimodularMatrix,
    m_kl,
    orbit,
    verify_cnj1,
    verify_k_pos,
    verify_M1_1,
    verify_pppp,
)
