//! Blowups of ℙ¹×ℙ¹, transforms of curves, intersection theory and the
//! behavior of z along exceptional divisors.

mod blowups;
mod crossing;
mod incidence;
mod intersect;
mod lattice;
mod limits;
mod model;

pub use blowups::{
    base_model, blowup_specs, paper_model, paper_model_steps, paper_model_steps_with, E_0, E_1,
    E_INF, E_Q, VHAT,
};
pub use crossing::{normal_crossing_check, CrossingWitness, NormalCrossingReport};
pub use incidence::{incidence_graph, IncidenceEdge, IncidenceGraph, IncidenceVertex};
pub use intersect::{affine_intersections, IntersectionPoint};
pub use lattice::DivisorClass;
pub use limits::{
    claimed_z_q, degeneracy_set, eval_uni_ratio, exceptional_limit, exceptional_limits,
    DegenerateValue, ExceptionalLimit,
};
pub use model::{
    BlowupSpec, CanonicalPoint, Center, Chart, ChartOrigin, Divisor, DivisorKind, Mobius,
    SurfaceModel,
};
