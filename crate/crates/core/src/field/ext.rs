use std::fmt;

use serde::{Serialize, Serializer};

use super::Field;

/// A point of the projective line over `K`: a finite value or ∞.
///
/// Equivalent to a normalized projective pair: `[v : 1]` for finite values
/// and `[1 : 0]` for infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext<K> {
    Finite(K),
    Infinity,
}

impl<K: Field> Ext<K> {
    /// Builds the point `[num : den]`; `None` for the invalid pair `[0 : 0]`.
    pub fn from_pair(num: K, den: K) -> Option<Ext<K>> {
        match (num.is_zero(), den.is_zero()) {
            (true, true) => None,
            (_, true) => Some(Ext::Infinity),
            _ => Some(Ext::Finite(num.div(&den).expect("nonzero denominator"))),
        }
    }

    /// Normalized projective pair (value, 1) or (1, 0).
    pub fn pair(&self) -> (K, K) {
        match self {
            Ext::Finite(v) => (v.clone(), K::one()),
            Ext::Infinity => (K::one(), K::zero()),
        }
    }

    pub fn finite(&self) -> Option<&K> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Ext::Infinity)
    }

    pub fn is_finite_value(&self, v: &K) -> bool {
        matches!(self, Ext::Finite(x) if x == v)
    }

    /// Reciprocal on ℙ¹: 0 ↔ ∞.
    pub fn recip(&self) -> Ext<K> {
        match self {
            Ext::Infinity => Ext::Finite(K::zero()),
            Ext::Finite(v) => match v.inv() {
                Some(i) => Ext::Finite(i),
                None => Ext::Infinity,
            },
        }
    }

    pub fn map<L: Field>(&self, f: impl FnOnce(&K) -> L) -> Ext<L> {
        match self {
            Ext::Finite(v) => Ext::Finite(f(v)),
            Ext::Infinity => Ext::Infinity,
        }
    }
}

impl<K: fmt::Display> fmt::Display for Ext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Finite(v) => write!(f, "{v}"),
            Ext::Infinity => write!(f, "inf"),
        }
    }
}

impl<K: fmt::Display> Serialize for Ext<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    #[test]
    fn pairs_normalize() {
        let p = Ext::from_pair(int(3), int(6)).unwrap();
        assert_eq!(p, Ext::Finite(Rational::new(1.into(), 2.into())));
        assert_eq!(
            Ext::from_pair(int(5), int(0)),
            Some(Ext::<Rational>::Infinity)
        );
        assert_eq!(Ext::<Rational>::from_pair(int(0), int(0)), None);
        assert_eq!(Ext::<Rational>::Infinity.pair(), (int(1), int(0)));
    }

    #[test]
    fn reciprocal_swaps_zero_and_infinity() {
        assert_eq!(Ext::Finite(int(0)).recip(), Ext::Infinity);
        assert_eq!(Ext::<Rational>::Infinity.recip(), Ext::Finite(int(0)));
        assert_eq!(
            Ext::Finite(int(4)).recip(),
            Ext::Finite(Rational::new(1.into(), 4.into()))
        );
    }
}
