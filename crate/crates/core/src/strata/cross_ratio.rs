use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Ext, Field};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "K: Field")]
pub struct CrossRatio<K> {
    pub value: Ext<K>,
    /// Two of the points coincide, so the value is 0, 1 or ∞.
    pub degenerate: bool,
}

fn det<K: Field>(p: &(K, K), q: &(K, K)) -> K {
    p.0.clone() * q.1.clone() - p.1.clone() * q.0.clone()
}

/// `[a,b;c,d] = (a−c)(b−d) / ((b−c)(a−d))`, evaluated on projective lifts so
/// that `∞` needs no special casing.
pub fn cross_ratio<K: Field>(
    a: &Ext<K>,
    b: &Ext<K>,
    c: &Ext<K>,
    d: &Ext<K>,
) -> Result<CrossRatio<K>> {
    let pts = [a.pair(), b.pair(), c.pair(), d.pair()];
    let coincide = |i: usize, j: usize| det(&pts[i], &pts[j]).is_zero();
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if coincide(i, j) && coincide(j, k) {
            return Err(Error::Degenerate(
                "three of the four points coincide".into(),
            ));
        }
    }
    let num = det(&pts[0], &pts[2]) * det(&pts[1], &pts[3]);
    let den = det(&pts[1], &pts[2]) * det(&pts[0], &pts[3]);
    let degenerate = (0..4).any(|i| (i + 1..4).any(|j| coincide(i, j)));
    let value = Ext::from_pair(num, den).expect("no three points coincide");
    Ok(CrossRatio { value, degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, Rational};

    fn f(n: i64) -> Ext<Rational> {
        Ext::Finite(int(n))
    }

    #[test]
    fn standard_values() {
        let w = Ext::Finite(rat(3, 7));
        let cr = cross_ratio(&f(0), &Ext::Infinity, &f(1), &w).unwrap();
        assert_eq!(cr.value, Ext::Finite(rat(7, 3)));
        assert!(!cr.degenerate);
        let cr = cross_ratio(&f(2), &f(5), &f(9), &f(9)).unwrap();
        assert_eq!(cr.value, Ext::Finite(int(1)));
        assert!(cr.degenerate);
    }

    #[test]
    fn three_coincident_points() {
        assert!(cross_ratio(&f(1), &f(1), &f(1), &f(4)).is_err());
    }

    #[test]
    fn swapping_last_pair_inverts() {
        let (a, b, c, d) = (f(2), f(-3), f(5), Ext::Infinity);
        let x = cross_ratio(&a, &b, &c, &d).unwrap().value;
        let y = cross_ratio(&a, &b, &d, &c).unwrap().value;
        assert_eq!(
            x.finite().cloned().unwrap() * y.finite().cloned().unwrap(),
            int(1)
        );
    }
}
