use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::family::locus::{LocusComponent, LocusId};
use crate::field::{Ext, FieldElem, Rational};
use crate::poly::{exact_roots, low_degree_factors, UniPoly};

/// A point of ℙ¹×ℙ¹ with coordinates in ℚ or a quadratic extension.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParamPoint {
    pub x: Ext<FieldElem>,
    pub y: Ext<FieldElem>,
}

impl ParamPoint {
    pub fn new(x: Ext<FieldElem>, y: Ext<FieldElem>) -> ParamPoint {
        ParamPoint { x, y }
    }

    pub fn rational(x: Rational, y: Rational) -> ParamPoint {
        ParamPoint {
            x: Ext::Finite(FieldElem::Rational(x)),
            y: Ext::Finite(FieldElem::Rational(y)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Interior,
    OnL,
    OnZ,
    OnLAndZ,
}

/// Which components of ℒ ∪ 𝒵 contain a parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub kind: PointKind,
    pub vanishing: Vec<LocusId>,
}

impl Classification {
    pub fn is_interior(&self) -> bool {
        self.kind == PointKind::Interior
    }
}

pub fn classify_parameter(p: &ParamPoint, loci: &[LocusComponent]) -> Classification {
    let vanishing: Vec<LocusId> = loci
        .iter()
        .filter(|l| l.contains(&p.x, &p.y))
        .map(|l| l.id)
        .collect();
    let on_l = vanishing.iter().any(|id| id.is_line());
    let on_z = vanishing.iter().any(|id| !id.is_line());
    let kind = match (on_l, on_z) {
        (false, false) => PointKind::Interior,
        (true, false) => PointKind::OnL,
        (false, true) => PointKind::OnZ,
        (true, true) => PointKind::OnLAndZ,
    };
    Classification { kind, vanishing }
}

/// One orbit of points where the diagonal `y = x` meets ℒ ∪ 𝒵: the roots of
/// a single irreducible polynomial over ℚ, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagonalPuncture {
    /// Primitive integer minimal polynomial in x, or `x=inf`.
    pub minimal_polynomial: String,
    pub points: Vec<Ext<FieldElem>>,
    pub real: bool,
    pub loci: Vec<LocusId>,
    /// True when some line of ℒ passes through the point(s).
    pub on_l: bool,
}

/// Intersections of the diagonal with every registered component, grouped
/// by minimal polynomial.
pub fn diagonal_punctures(loci: &[LocusComponent]) -> Result<Vec<DiagonalPuncture>> {
    let mut groups: BTreeMap<(u32, String), DiagonalPuncture> = BTreeMap::new();
    for l in loci {
        let restricted: UniPoly<Rational> = l.affine.specialize_diagonal("x");
        if !restricted.is_zero() {
            for (factor, _) in low_degree_factors(&restricted)? {
                let key = (factor.degree().unwrap() as u32, factor.to_string());
                let entry = groups.entry(key).or_insert_with(|| DiagonalPuncture {
                    minimal_polynomial: factor.to_string(),
                    points: exact_roots(&factor)
                        .expect("factor of degree at most 2")
                        .into_iter()
                        .map(|r| Ext::Finite(r.value))
                        .collect(),
                    real: true,
                    loci: Vec::new(),
                    on_l: false,
                });
                entry.real = entry
                    .points
                    .iter()
                    .all(|p| p.finite().is_some_and(|v| v.is_real()));
                entry.loci.push(l.id);
                entry.on_l |= l.id.is_line();
            }
        }
        if l.contains::<FieldElem>(&Ext::Infinity, &Ext::Infinity) {
            let entry =
                groups
                    .entry((0, "x=inf".to_string()))
                    .or_insert_with(|| DiagonalPuncture {
                        minimal_polynomial: "x=inf".to_string(),
                        points: vec![Ext::Infinity],
                        real: true,
                        loci: Vec::new(),
                        on_l: false,
                    });
            entry.loci.push(l.id);
            entry.on_l |= l.id.is_line();
        }
    }
    Ok(groups.into_values().collect())
}
