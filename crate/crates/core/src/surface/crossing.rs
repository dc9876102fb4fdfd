use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::surface::intersect::IntersectionPoint;
use crate::surface::model::SurfaceModel;
use num_traits::Zero;

/// A point where the union of the two families fails to be a normal crossing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingWitness {
    pub location: String,
    pub divisors: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalCrossingReport {
    pub family_a: Vec<String>,
    pub family_b: Vec<String>,
    pub points_checked: usize,
    pub witnesses: Vec<CrossingWitness>,
    /// Pairs whose intersection needed a field beyond degree 2.
    pub unresolved: Vec<String>,
    pub holds: bool,
}

/// Checks that at every point where a member of `a` meets a member of `b`
/// exactly two branches of `a ∪ b` pass, both smooth and transverse.
pub fn normal_crossing_check(
    model: &SurfaceModel,
    a: &[&str],
    b: &[&str],
) -> Result<NormalCrossingReport> {
    let ia = a
        .iter()
        .map(|n| model.divisor_index(n))
        .collect::<Result<Vec<_>>>()?;
    let ib = b
        .iter()
        .map(|n| model.divisor_index(n))
        .collect::<Result<Vec<_>>>()?;
    let mut union = ia.clone();
    for &j in &ib {
        if !union.contains(&j) {
            union.push(j);
        }
    }
    let mut points: Vec<IntersectionPoint> = Vec::new();
    let mut unresolved = Vec::new();
    for &i in &ia {
        for &j in &ib {
            if i == j {
                continue;
            }
            match model.intersections(i, j) {
                Ok(pts) => {
                    for p in pts {
                        if !points.iter().any(|q| q.point == p.point) {
                            points.push(p);
                        }
                    }
                }
                Err(Error::ExtensionTooLarge(msg)) => unresolved.push(format!(
                    "{} x {}: {msg}",
                    model.divisors[i].name, model.divisors[j].name
                )),
                Err(e) => return Err(e),
            }
        }
    }
    let mut witnesses = Vec::new();
    for p in &points {
        let through: Vec<usize> = union
            .iter()
            .copied()
            .filter(|&d| model.passes_through(d, p.chart, &p.coords))
            .collect();
        let names: Vec<String> = through
            .iter()
            .map(|&d| model.divisors[d].name.clone())
            .collect();
        let reason = if through.len() != 2 {
            Some(format!("{} branches meet", through.len()))
        } else {
            let g = |d| {
                model
                    .gradient(d, p.chart, &p.coords)
                    .expect("divisor in chart")
            };
            let (g1, g2) = (g(through[0]), g(through[1]));
            let singular = |v: &[FieldElem; 2]| v[0].is_zero() && v[1].is_zero();
            if singular(&g1) || singular(&g2) {
                Some("singular branch".to_string())
            } else if (g1[0].clone() * g2[1].clone() - g1[1].clone() * g2[0].clone()).is_zero() {
                Some("tangent branches".to_string())
            } else {
                None
            }
        };
        if let Some(reason) = reason {
            witnesses.push(CrossingWitness {
                location: p.location.clone(),
                divisors: names,
                reason,
            });
        }
    }
    Ok(NormalCrossingReport {
        family_a: a.iter().map(|s| s.to_string()).collect(),
        family_b: b.iter().map(|s| s.to_string()).collect(),
        points_checked: points.len(),
        holds: witnesses.is_empty() && unresolved.is_empty(),
        witnesses,
        unresolved,
    })
}
