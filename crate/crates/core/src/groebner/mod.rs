//! Exact Gröbner bases over `Q` and `F_p`.

mod buchberger;
mod experiments;
mod field;
mod order;
mod poly;

pub use buchberger::{buchberger, buchberger_with_caps, reduce, GroebnerBasis, GroebnerCaps};
pub use experiments::{
    colon_by, frobenius_containment_check, frobenius_power, intersect_ideals, jacobian_ideal, kollar_bound, kollar_family, kollar_sharpness,
    local_member, local_power_membership_index, mather_index, mather_index_with_caps, power_membership_index, radical_member, radical_member_with_caps,
    require_positive_characteristic, FrobeniusReport, KollarBound, KollarSharpness, MatherReport,
};
pub use field::{Field, PrimeField, Rationals};
pub use order::{MonomialOrder, OrderKind};
pub use poly::{PolyRing, PolyRingRef, Polynomial};
