//! Invariants of the dihedral group of order `2p` acting on a polynomial ring
//! over a field of characteristic two: the Hilbert ideal, an explicit
//! universal Gröbner basis, Buchberger verification over many monomial
//! orders, coinvariant statistics and the zero-sum combinatorics behind the
//! degree bound.

pub mod action;
pub mod basis;
pub mod bounds;
pub mod decompose;
pub mod error;
pub mod field;
pub mod groebner;
pub mod orders;
pub mod poly;
pub mod report;
pub mod zerosum;

pub use action::{apply_rho, apply_sigma, is_invariant_poly, DihedralRep, PolyK, RepSpec};
pub use basis::{
    enumerate_rho_invariant_monomials, hilbert_ideal_generators, orbit_sums_in_degrees, prune_redundant,
    universal_basis, Family, Generator, GeneratorRecord, GeneratorSet,
};
pub use bounds::{group_order_bounds, hilbert_series_product, hsop_bounds, top_degree_formula, HsopBounds};
pub use decompose::{monomial_decompose, reduce_multiple_to_small};
pub use error::{Error, Result};
pub use field::{is_prime, multiplicative_order_of_two, BinaryField, ZmodP};
pub use groebner::{
    buchberger, buchberger_with_cap, coinvariant_stats, in_monomial_ideal, is_groebner_basis, lead_term_ideal,
    minimize_monomials, reduce_basis, standard_monomials, CoinvariantStats, CriterionCheck, GroebnerBasis,
    DEFAULT_ELEMENT_CAP,
};
pub use orders::{sample_orders, sigma_swapped_lex, DEFAULT_ORDER_COUNT};
pub use poly::{
    divide, monomials_of_degree, normal_form, s_polynomial, Division, Monomial, MonomialOrder, OrderKind, Poly2,
    VarNames,
};
pub use report::{basis_listing, coinvariant_listing, verify, Report, RunConfig};
pub use zerosum::{exhaustive_sweep, sampled_sweep, schmid_zero_sum, zerosum_completion, SweepSummary, ZeroSumWitness};
