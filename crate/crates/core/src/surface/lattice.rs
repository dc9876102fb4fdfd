use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::model::{DivisorKind, SurfaceModel};

/// A class in Pic of the blown-up surface, written on the basis
/// `[H₁, H₂, e₀, e₁, …]`: `H₁` is the class of a fiber `x = const`, `H₂` of
/// `y = const` and `eₖ` the total transform of the k-th exceptional curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn zero(centers: usize) -> DivisorClass {
        DivisorClass(vec![0; centers + 2])
    }

    pub fn dot(&self, other: &DivisorClass) -> i64 {
        let (a, b) = (&self.0, &other.0);
        a[0] * b[1] + a[1] * b[0] - a[2..].iter().zip(&b[2..]).map(|(p, q)| p * q).sum::<i64>()
    }

    pub fn add_scaled(&mut self, other: &DivisorClass, k: i64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }
}

impl SurfaceModel {
    /// Class of the final proper transform of a registered divisor.
    pub fn class_of(&self, divisor: usize) -> DivisorClass {
        let d = &self.divisors[divisor];
        let mut c = DivisorClass::zero(self.centers.len());
        let first_later = match d.kind {
            DivisorKind::Base { bidegree, .. } => {
                c.0[0] = bidegree.0 as i64;
                c.0[1] = bidegree.1 as i64;
                0
            }
            DivisorKind::Exceptional { center } => {
                c.0[center + 2] = 1;
                center + 1
            }
        };
        for k in first_later..self.centers.len() {
            c.0[k + 2] -= d.multiplicities[k] as i64;
        }
        c
    }

    pub fn self_intersection(&self, name: &str) -> Result<i64> {
        let c = self.class_of(self.divisor_index(name)?);
        Ok(c.dot(&c))
    }

    pub fn intersection_number(&self, a: &str, b: &str) -> Result<i64> {
        Ok(self
            .class_of(self.divisor_index(a)?)
            .dot(&self.class_of(self.divisor_index(b)?)))
    }

    pub fn intersection_matrix(&self, names: &[&str]) -> Result<Vec<Vec<i64>>> {
        let classes = names
            .iter()
            .map(|n| Ok(self.class_of(self.divisor_index(n)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(classes
            .iter()
            .map(|a| classes.iter().map(|b| a.dot(b)).collect())
            .collect())
    }

    /// Total transform of a divisor of the surface before the blowups, as a
    /// combination of final proper transforms. Each center picks up the sum
    /// of the coefficients of the components through it, weighted by their
    /// multiplicities there.
    pub fn total_transform(&self, name: &str) -> Result<BTreeMap<String, i64>> {
        let start = self.divisor_index(name)?;
        let mut coeffs: Vec<i64> = vec![0; self.divisors.len()];
        coeffs[start] = 1;
        let born_at = |i: usize| match self.divisors[i].kind {
            DivisorKind::Base { .. } => None,
            DivisorKind::Exceptional { center } => Some(center),
        };
        if let Some(c) = born_at(start) {
            return Err(Error::InvalidArgument(format!(
                "{name} is exceptional (center {c}); pass a base curve"
            )));
        }
        for k in 0..self.centers.len() {
            let e = self.centers[k].divisor;
            coeffs[e] = (0..self.divisors.len())
                .filter(|&i| born_at(i).is_none_or(|c| c < k))
                .map(|i| coeffs[i] * self.divisors[i].multiplicities[k] as i64)
                .sum();
        }
        Ok(self
            .divisors
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| *c != 0)
            .map(|(d, c)| (d.name.clone(), c))
            .collect())
    }

    /// Class of a combination of registered divisors.
    pub fn class_of_combination(&self, combo: &BTreeMap<String, i64>) -> Result<DivisorClass> {
        let mut c = DivisorClass::zero(self.centers.len());
        for (name, k) in combo {
            c.add_scaled(&self.class_of(self.divisor_index(name)?), *k);
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;
    use crate::poly::BiPoly;
    use crate::surface::model::BlowupSpec;

    #[test]
    fn one_blowup_lattice() {
        let m = SurfaceModel::new(vec![
            (
                "V".into(),
                BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]),
                (1, 1),
            ),
            ("X".into(), BiPoly::x(), (1, 0)),
        ])
        .blow_up(BlowupSpec::new("E", 0, [int(0), int(0)]))
        .unwrap();
        assert_eq!(m.self_intersection("V").unwrap(), 1);
        assert_eq!(m.self_intersection("X").unwrap(), -1);
        assert_eq!(m.self_intersection("E").unwrap(), -1);
        assert_eq!(m.intersection_number("V", "X").unwrap(), 0);
        assert_eq!(m.intersection_number("V", "E").unwrap(), 1);
        let t = m.total_transform("V").unwrap();
        assert_eq!(t.get("E"), Some(&1));
        let c = m.class_of_combination(&t).unwrap();
        assert_eq!(c, DivisorClass(vec![1, 1, 0]));
    }
}
