//! Closed-form character data for `SL2(q)`, `Sp2(q) ≀ 2`, `Sp2(q²):2`, `Sz(q)` and `Sp4(q)` with
//! `q` even, and the α-sums behind the parabolic inner product.

mod alpha;
mod degrees;
mod poly;
mod sl2;

pub use alpha::{alpha_sum, alpha_sum_counting, alpha_sum_cyclotomic, parabolic_inner_product, AlphaParams};
pub use degrees::{
    ext_degree_spec, ext_split_rule, ext_split_set, ext_total_degree, sp4_degree_facts, sp4_max_degree_poly,
    sp4_total_degree_poly, subfield_gap_poly, subfield_inequality_holds, suzuki_degree_spec, suzuki_total_degree,
    wreath_degree_spec, DegreeEntry, DegreeSpec, EvaluatedEntry, RowKind, Sp4DegreeFacts, Validity,
};
pub use poly::PolyQ;
pub use sl2::sl2_table;
