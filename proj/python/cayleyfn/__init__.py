"""Cayley function analysis for finite transformations."""

from ._cayleyfn import (
    CayleyfnError,
    CayleyVerdict,
    SufficiencyVerdict,
    SymbolicVerdict,
    Transformation,
    all_cayley_functions,
    centralizer_criterion,
    check_descriptor,
    commutes,
    compose,
    digraph_criterion,
    digraph_to_dot,
    find_witness_table,
    format,
    is_cayley,
    is_idempotent,
    materialize,
    max_branch_length,
    parse,
    power,
    quotient_base,
    random_commuting,
    stabilizer,
    stable_image,
    zupnik_criterion,
)

__all__ = [
    "CayleyfnError",
    "CayleyVerdict",
    "SufficiencyVerdict",
    "SymbolicVerdict",
    "Transformation",
    "all_cayley_functions",
    "centralizer_criterion",
    "check_descriptor",
    "commutes",
    "compose",
    "digraph_criterion",
    "digraph_to_dot",
    "find_witness_table",
    "format",
    "is_cayley",
    "is_idempotent",
    "materialize",
    "max_branch_length",
    "parse",
    "power",
    "quotient_base",
    "random_commuting",
    "stabilizer",
    "stable_image",
    "zupnik_criterion",
]
