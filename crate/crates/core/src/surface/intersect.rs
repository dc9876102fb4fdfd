use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, Rational};
use crate::poly::{exact_roots, gcd, resultant_bi, BiPoly, UniPoly, Var};
use crate::surface::model::{CanonicalPoint, SurfaceModel};

/// A common point of two curves with its local intersection multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntersectionPoint {
    pub point: CanonicalPoint,
    pub location: String,
    #[serde(skip)]
    pub chart: usize,
    #[serde(skip)]
    pub coords: [FieldElem; 2],
    pub multiplicity: u32,
}

fn shears() -> impl Iterator<Item = i64> {
    (0..40).map(|n| if n % 2 == 0 { n / 2 } else { -(n + 1) / 2 })
}

/// Common zeros of two plane curves in the affine chart with intersection
/// multiplicities. After a shear `p₁ ↦ p₁ + k·p₂` the curves have constant
/// leading coefficients in `p₂` and each root of the resultant lies under a
/// single common point, so root multiplicities are intersection numbers.
pub fn affine_intersections(f: &BiPoly, g: &BiPoly) -> Result<Vec<([FieldElem; 2], u32)>> {
    if !gcd(f, g).is_constant() {
        return Err(Error::Degenerate(format!("{f} and {g} share a component")));
    }
    let (Some(df), Some(dg)) = (f.total_degree(), g.total_degree()) else {
        return Ok(Vec::new());
    };
    let (tf, tg) = (f.homogeneous_part(df), g.homogeneous_part(dg));
    'shear: for k in shears() {
        let kr = Rational::from_integer(k.into());
        if tf.eval(&kr, &Rational::one()).is_zero() || tg.eval(&kr, &Rational::one()).is_zero() {
            continue;
        }
        let sx = &BiPoly::x() + &BiPoly::y().scale(&kr);
        let (fs, gs) = (f.compose(&sx, &BiPoly::y()), g.compose(&sx, &BiPoly::y()));
        let res = resultant_bi(&fs, &gs, Var::Y, "t")?;
        if res.is_zero() {
            return Err(Error::Degenerate("resultant vanishes identically".into()));
        }
        if res.is_constant() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for root in exact_roots(&res)? {
            let a = root.value;
            let fa: UniPoly<FieldElem> = fs.specialize(Var::X, &a, "b");
            let ga: UniPoly<FieldElem> = gs.specialize(Var::X, &a, "b");
            let common = fa.gcd(&ga);
            let reduced = common
                .div_exact(&common.gcd(&common.derivative()))
                .expect("gcd divides");
            if reduced.degree() != Some(1) {
                continue 'shear;
            }
            let b = -reduced.coeff(0).div(&reduced.coeff(1)).unwrap();
            let p1 = a + FieldElem::from_rational(&kr) * b.clone();
            out.push(([p1, b], root.multiplicity));
        }
        return Ok(out);
    }
    Err(Error::Degenerate("no separating projection found".into()))
}

impl SurfaceModel {
    /// All points of the surface where the transforms of two registered
    /// divisors meet, each listed once.
    pub fn intersections(&self, a: usize, b: usize) -> Result<Vec<IntersectionPoint>> {
        if a == b {
            return Err(Error::InvalidArgument(
                "a divisor does not meet itself transversally".into(),
            ));
        }
        let mut out: Vec<IntersectionPoint> = Vec::new();
        for chart in 0..self.charts.len() {
            let (Some(f), Some(g)) = (
                &self.divisors[a].equations[chart],
                &self.divisors[b].equations[chart],
            ) else {
                continue;
            };
            for (coords, multiplicity) in affine_intersections(f, g)? {
                let point = self.canonical(chart, &coords);
                if self.is_center(&point) || out.iter().any(|q| q.point == point) {
                    continue;
                }
                out.push(IntersectionPoint {
                    location: self.describe(&point),
                    point,
                    chart,
                    coords,
                    multiplicity,
                });
            }
        }
        Ok(out)
    }

    pub fn intersections_by_name(&self, a: &str, b: &str) -> Result<Vec<IntersectionPoint>> {
        self.intersections(self.divisor_index(a)?, self.divisor_index(b)?)
    }

    /// Gradient of a divisor's local equation at a chart point.
    pub fn gradient(
        &self,
        divisor: usize,
        chart: usize,
        p: &[FieldElem; 2],
    ) -> Option<[FieldElem; 2]> {
        let f = self.divisors[divisor].equations[chart].as_ref()?;
        Some([
            f.partial(Var::X).eval_in(&p[0], &p[1]),
            f.partial(Var::Y).eval_in(&p[0], &p[1]),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn fe(n: i64) -> FieldElem {
        FieldElem::Rational(int(n))
    }

    #[test]
    fn tangent_conic_and_line() {
        // y = x² meets y = 0 at the origin with multiplicity 2
        let f = BiPoly::from_int_terms(&[(0, 1, 1), (2, 0, -1)]);
        let pts = affine_intersections(&f, &BiPoly::y()).unwrap();
        assert_eq!(pts, vec![([fe(0), fe(0)], 2)]);
    }

    #[test]
    fn points_with_equal_projection_are_separated() {
        // x² + y² = 2 and x = 1 meet at (1, ±1)
        let f = BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = BiPoly::from_int_terms(&[(1, 0, 1), (0, 0, -1)]);
        let mut pts = affine_intersections(&f, &g).unwrap();
        pts.sort_by_key(|(p, _)| p[1].as_rational().cloned());
        assert_eq!(pts, vec![([fe(1), fe(-1)], 1), ([fe(1), fe(1)], 1)]);
    }

    #[test]
    fn quadratic_points() {
        // diagonal against Z1 = x² − 2x + 1 − y: x² − 3x + 1 = 0
        let f = BiPoly::from_int_terms(&[(2, 0, 1), (1, 0, -2), (0, 0, 1), (0, 1, -1)]);
        let d = BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]);
        let pts = affine_intersections(&f, &d).unwrap();
        assert_eq!(pts.len(), 2);
        for (p, m) in pts {
            assert_eq!(m, 1);
            assert_eq!(p[0], p[1]);
            assert_eq!(p[0].minimal_polynomial("x").to_string(), "x^2-3*x+1");
        }
    }

    #[test]
    fn common_component_is_an_error() {
        let f = BiPoly::from_int_terms(&[(1, 1, 1)]);
        assert!(matches!(
            affine_intersections(&f, &BiPoly::x()),
            Err(Error::Degenerate(_))
        ));
    }
}
