//! The quadratic family F(t) = (t − x)(t − r)/t² over the parameter surface
//! ℙ¹×ℙ¹, its free critical value z and the degeneracy loci ℒ ∪ 𝒵.

mod certify;
mod classify;
mod locus;
mod map;

pub use certify::{
    certify_loci, verify_cycle_identities, IdentityCheck, LociCertificates, PoleCertificate,
    SquareCertificate,
};
pub use classify::{
    classify_parameter, diagonal_punctures, Classification, DiagonalPuncture, ParamPoint, PointKind,
};
pub use locus::{eval_bihomogeneous, locus, standard_loci, LocusComponent, LocusId};
pub use map::{
    r_expr, r_of, symbolic_family, z_denominator, z_expr, z_numerator_base, z_of, CriticalData,
    CycleCheck, FamilyMap,
};
