"""Exact category O-bar computations for gl/sl-infinity.

Weights are passed as grammar literals like "[1,0,-1] ++ lin 1,0";
permutations as one-line literals like "A:[2,1]".  Polynomials come back
as ascending lists of integer q-coefficients.
"""

from ._oinf import (  # noqa: F401
    DomainError,
    bruhat_interval,
    bruhat_leq,
    character_window,
    classify,
    decompose,
    demo_verma_chain,
    dot,
    finite_length_root,
    homological_flags,
    inversion_roots,
    kl_poly,
    kostant_partition,
    length,
    load_cache,
    mu_coefficient,
    orbit_multiplicities,
    order_leq,
    parse_weight,
    r_poly,
    reduced_word,
    rho,
    rho_layered,
    same_block,
    save_cache,
    strongly_linked,
    to_antidominant,
    trunc_reciprocity,
    verma_multiplicity,
    verma_status,
    weight_coords,
    weight_dim,
    weight_eq,
)

__all__ = [name for name in dir() if not name.startswith("_")]
