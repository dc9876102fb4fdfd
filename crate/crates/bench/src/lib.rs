//! Fixtures shared by the benchmarks.

use per4_core::family::{standard_loci, z_denominator, z_numerator_base, LocusComponent};
use per4_core::poly::BiPoly;
use per4_core::surface::{paper_model, SurfaceModel};

pub fn loci() -> Vec<LocusComponent> {
    standard_loci()
}

pub fn model() -> SurfaceModel {
    paper_model()
}

/// Numerator and denominator of z over the plane.
pub fn z_parts() -> (BiPoly, BiPoly) {
    (z_numerator_base(), z_denominator())
}

/// Squares of a few dense polynomials of growing degree.
pub fn squares() -> Vec<(u32, BiPoly)> {
    (1..=4)
        .map(|d| {
            let terms: Vec<(u32, u32, i64)> = (0..=d)
                .flat_map(|i| {
                    (0..=d - i).map(move |j| (i, j, (i as i64 * 3 - j as i64 * 2) % 7 + 1))
                })
                .collect();
            let p = BiPoly::from_int_terms(&terms);
            (d, &p * &p)
        })
        .collect()
}
