from ._core import (
    DomainError,
    ParseError,
    counts,
    degree,
    ehp_sequence,
    exchange_degree,
    gw_equal,
    gw_invariants,
    gw_normal_form,
    homology,
    hopf_word,
    hp_differential,
    hp_invariants,
    increasing_index_tuples,
    kmw_equal,
    known_result,
    quotient_is_smash_power,
    reduced_homology,
    sheaf,
)

__all__ = [
    "DomainError",
    "ParseError",
    "counts",
    "degree",
    "ehp_sequence",
    "exchange_degree",
    "gw_equal",
    "gw_invariants",
    "gw_normal_form",
    "homology",
    "hopf_word",
    "hp_differential",
    "hp_invariants",
    "increasing_index_tuples",
    "kmw_equal",
    "known_result",
    "quotient_is_smash_power",
    "reduced_homology",
    "sheaf",
]
