//! Stable marked trees, boundary strata of the five-point space, degree-two
//! covers between them and the strata where the two forgetful maps agree.

mod cover;
mod cross_ratio;
mod enumerate;
mod equalizer;
mod kappa;
mod tree;

pub use cover::{
    admissible_covers, lower_image, upper_images, CoverCombinatorics, CRITICAL_VALUES,
    DOMAIN_IMAGES,
};
pub use cross_ratio::{cross_ratio, CrossRatio};
pub use enumerate::{classify_type2, enumerate_boundary_strata, StratumRecord, Subtype};
pub use equalizer::{
    equalizer_strata, EqualizerReport, EqualizerStatus, EqualizerVerdict, MatchingEquation,
    DOMAIN_LABELS, RANGE_LABELS,
};
pub use kappa::{kappa_map, kappa_map_in, KappaPoint, KappaSource};
pub use tree::{label_rank, MarkedTree, Stabilization, VertexCase};
