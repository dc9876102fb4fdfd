use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{rational_sqrt, squarefree_decompose, Field, Rational};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// The field ℚ[α]/(α² + pα + q) for an irreducible monic quadratic.
///
/// α is identified with the complex number (−p + √(p² − 4q))/2, where the
/// square root of a negative number is taken on the positive imaginary axis.
/// That embedding is what makes elements of differently presented but
/// isomorphic fields comparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
    /// √(p² − 4q) = k·√d with `d` a squarefree integer.
    k: Rational,
    d: BigInt,
}

impl QuadExt {
    /// Builds the extension defined by a degree-2 polynomial over ℚ. The
    /// polynomial is made monic first; it must have no rational root.
    pub fn new(modulus: &UniPoly<Rational>) -> Result<Arc<QuadExt>> {
        if modulus.degree() != Some(2) {
            return Err(Error::InvalidArgument(format!(
                "extension modulus must have degree 2, got {modulus}"
            )));
        }
        let lead = modulus.coeff(2);
        let p = modulus.coeff(1) / &lead;
        let q = modulus.coeff(0) / &lead;
        let disc = &p * &p - Rational::from_integer(4.into()) * &q;
        if rational_sqrt(&disc).is_some() {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        let (k, d) = squarefree_decompose(&disc);
        Ok(Arc::new(QuadExt { p, q, k, d }))
    }

    /// The field ℚ(√d) presented as ℚ[α]/(α² − d).
    pub fn sqrt_of(d: &BigInt) -> Result<Arc<QuadExt>> {
        let modulus = UniPoly::from_coeffs(
            vec![
                Rational::from_integer(-d.clone()),
                Rational::zero(),
                Rational::one(),
            ],
            "t",
        );
        QuadExt::new(&modulus)
    }

    /// Monic minimal polynomial of α in the variable `var`.
    pub fn modulus(&self, var: &str) -> UniPoly<Rational> {
        UniPoly::from_coeffs(vec![self.q.clone(), self.p.clone(), Rational::one()], var)
    }

    /// Squarefree integer `d` with ℚ(α) = ℚ(√d).
    pub fn squarefree_radicand(&self) -> &BigInt {
        &self.d
    }

    /// True when the field embeds in ℝ.
    pub fn is_real(&self) -> bool {
        self.d.is_positive()
    }

    fn generator(self: &Arc<Self>) -> FieldElem {
        FieldElem::Quadratic {
            a: Rational::zero(),
            b: Rational::one(),
            ext: Arc::clone(self),
        }
    }
}

/// An exact scalar: a rational number, or `a + b·α` in a quadratic extension.
///
/// Elements with `b == 0` are always stored as `Rational`, so the variant
/// tells whether a value is irrational.
#[derive(Clone, Debug)]
pub enum FieldElem {
    Rational(Rational),
    Quadratic {
        a: Rational,
        b: Rational,
        ext: Arc<QuadExt>,
    },
}

impl FieldElem {
    pub fn quadratic(ext: &Arc<QuadExt>, a: Rational, b: Rational) -> FieldElem {
        if b.is_zero() {
            FieldElem::Rational(a)
        } else {
            FieldElem::Quadratic {
                a,
                b,
                ext: Arc::clone(ext),
            }
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElem::Rational(r) => Some(r),
            FieldElem::Quadratic { .. } => None,
        }
    }

    pub fn ext(&self) -> Option<&Arc<QuadExt>> {
        match self {
            FieldElem::Rational(_) => None,
            FieldElem::Quadratic { ext, .. } => Some(ext),
        }
    }

    /// Value as `a' + b'·√d` with `d` squarefree. Rationals report `d = 1`.
    pub fn sqrt_form(&self) -> (Rational, Rational, BigInt) {
        match self {
            FieldElem::Rational(r) => (r.clone(), Rational::zero(), BigInt::one()),
            FieldElem::Quadratic { a, b, ext } => {
                let two = Rational::from_integer(2.into());
                (a - b * &ext.p / &two, b * &ext.k / &two, ext.d.clone())
            }
        }
    }

    /// Re-expresses the element in the field ℚ[β]/(β² − d).
    pub fn to_sqrt_field(&self) -> FieldElem {
        match self {
            FieldElem::Rational(_) => self.clone(),
            FieldElem::Quadratic { ext, .. } => {
                let (a, b, d) = self.sqrt_form();
                let target = QuadExt::sqrt_of(&d).expect("squarefree radicand is never a square");
                debug_assert_eq!(target.d, ext.d);
                FieldElem::quadratic(&target, a, b)
            }
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            FieldElem::Rational(_) => true,
            FieldElem::Quadratic { ext, .. } => ext.is_real(),
        }
    }

    /// Galois conjugate; rationals are fixed.
    pub fn conjugate(&self) -> FieldElem {
        match self {
            FieldElem::Rational(_) => self.clone(),
            FieldElem::Quadratic { a, b, ext } => {
                // α ↦ −p − α
                FieldElem::quadratic(ext, a - b * &ext.p, -b.clone())
            }
        }
    }

    /// Monic minimal polynomial over ℚ.
    pub fn minimal_polynomial(&self, var: &str) -> UniPoly<Rational> {
        match self {
            FieldElem::Rational(r) => UniPoly::from_coeffs(vec![-r.clone(), Rational::one()], var),
            FieldElem::Quadratic { .. } => {
                let conj = self.conjugate();
                let sum = (self.clone() + conj.clone())
                    .as_rational()
                    .cloned()
                    .expect("trace is rational");
                let prod = (self.clone() * conj)
                    .as_rational()
                    .cloned()
                    .expect("norm is rational");
                UniPoly::from_coeffs(vec![prod, -sum, Rational::one()], var)
            }
        }
    }

    fn same_field(x: &Arc<QuadExt>, y: &Arc<QuadExt>) -> bool {
        Arc::ptr_eq(x, y) || x == y
    }

    /// Lifts both operands into a common field, or reports the mismatch.
    fn align(&self, other: &FieldElem) -> Result<Option<Arc<QuadExt>>> {
        match (self.ext(), other.ext()) {
            (None, None) => Ok(None),
            (Some(e), None) | (None, Some(e)) => Ok(Some(Arc::clone(e))),
            (Some(e1), Some(e2)) if Self::same_field(e1, e2) => Ok(Some(Arc::clone(e1))),
            (Some(e1), Some(e2)) => Err(Error::MixedFields(format!(
                "{} vs {}",
                e1.modulus("a"),
                e2.modulus("a")
            ))),
        }
    }

    fn parts(&self) -> (Rational, Rational) {
        match self {
            FieldElem::Rational(r) => (r.clone(), Rational::zero()),
            FieldElem::Quadratic { a, b, .. } => (a.clone(), b.clone()),
        }
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem> {
        let ext = self.align(other)?;
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        Ok(match ext {
            None => FieldElem::Rational(a + c),
            Some(e) => FieldElem::quadratic(&e, a + c, b + d),
        })
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        let ext = self.align(other)?;
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        Ok(match ext {
            None => FieldElem::Rational(a * c),
            Some(e) => {
                let bd = &b * &d;
                let re = &a * &c - &bd * &e.q;
                let im = &a * &d + &b * &c - &bd * &e.p;
                FieldElem::quadratic(&e, re, im)
            }
        })
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        let inv = other
            .inv()
            .ok_or(Error::DivisionByZero("in field division"))?;
        self.checked_mul(&inv)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElem::Rational(x), FieldElem::Rational(y)) => x == y,
            (FieldElem::Rational(_), FieldElem::Quadratic { .. })
            | (FieldElem::Quadratic { .. }, FieldElem::Rational(_)) => false,
            _ => self.sqrt_form() == other.sqrt_form(),
        }
    }
}

impl Eq for FieldElem {}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        FieldElem::Rational(r)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::Rational(Rational::from_integer(n.into()))
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        self.checked_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self.checked_sub(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        self.checked_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(r) => FieldElem::Rational(-r),
            FieldElem::Quadratic { a, b, ext } => FieldElem::Quadratic { a: -a, b: -b, ext },
        }
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::Rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        matches!(self, FieldElem::Rational(r) if r.is_zero())
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::Rational(Rational::one())
    }
}

impl Field for FieldElem {
    fn inv(&self) -> Option<Self> {
        match self {
            FieldElem::Rational(r) => Field::inv(r).map(FieldElem::Rational),
            FieldElem::Quadratic { a, b, ext } => {
                let norm = a * a - a * b * &ext.p + b * b * &ext.q;
                // irreducible modulus: the norm of a nonzero element is nonzero
                let re = (a - b * &ext.p) / &norm;
                let im = -b / &norm;
                Some(FieldElem::quadratic(ext, re, im))
            }
        }
    }
    fn from_rational(r: &Rational) -> Self {
        FieldElem::Rational(r.clone())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => write!(f, "{r}"),
            FieldElem::Quadratic { .. } => {
                let (a, b, d) = self.sqrt_form();
                let radical = format!("sqrt({d})");
                let tail = if b.is_one() {
                    radical
                } else if b == -Rational::one() {
                    format!("-{radical}")
                } else {
                    format!("{b}*{radical}")
                };
                if a.is_zero() {
                    write!(f, "{tail}")
                } else if tail.starts_with('-') {
                    write!(f, "{a}{tail}")
                } else {
                    write!(f, "{a}+{tail}")
                }
            }
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Both roots of a quadratic over ℚ together with its discriminant.
#[derive(Clone, Debug)]
pub struct QuadraticRoots {
    pub discriminant: Rational,
    pub roots: [FieldElem; 2],
    /// The extension the roots live in, `None` when they are rational.
    pub field: Option<Arc<QuadExt>>,
}

impl QuadraticRoots {
    pub fn real(&self) -> bool {
        !self.discriminant.is_negative()
    }
}

/// Solves a degree-2 polynomial exactly. Irrational roots are returned as
/// α and −p − α in ℚ[α]/(m) where m is the monic form of the input.
pub fn solve_quadratic(m: &UniPoly<Rational>) -> Result<QuadraticRoots> {
    if m.degree() != Some(2) {
        return Err(Error::InvalidArgument(format!(
            "expected a quadratic, got {m}"
        )));
    }
    let (c, b, a) = (m.coeff(0), m.coeff(1), m.coeff(2));
    let discriminant = &b * &b - Rational::from_integer(4.into()) * &a * &c;
    if let Some(s) = rational_sqrt(&discriminant) {
        let two_a = Rational::from_integer(2.into()) * &a;
        let r1 = (-b.clone() + &s) / &two_a;
        let r2 = (-b - s) / two_a;
        return Ok(QuadraticRoots {
            discriminant,
            roots: [FieldElem::Rational(r1), FieldElem::Rational(r2)],
            field: None,
        });
    }
    let ext = QuadExt::new(m)?;
    let alpha = ext.generator();
    let other = FieldElem::Rational(-ext.p.clone()) - alpha.clone();
    Ok(QuadraticRoots {
        discriminant,
        roots: [alpha, other],
        field: Some(ext),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn poly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), "x")
    }

    #[test]
    fn alpha_squared_reduces() {
        // α² − 3α + 1 = 0  ⇒  α² = 3α − 1
        let ext = QuadExt::new(&poly(&[1, -3, 1])).unwrap();
        let alpha = ext.generator();
        let sq = alpha.clone() * alpha;
        assert_eq!(sq, FieldElem::quadratic(&ext, int(-1), int(3)));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(
            QuadExt::new(&poly(&[-1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
    }

    #[test]
    fn solve_real_pair() {
        let roots = solve_quadratic(&poly(&[1, -3, 1])).unwrap();
        assert_eq!(roots.discriminant, int(5));
        assert!(roots.real());
        let [r1, r2] = roots.roots.clone();
        assert_ne!(r1, r2);
        assert_eq!((r1.clone() + r2.clone()).as_rational(), Some(&int(3)));
        assert_eq!((r1 * r2).as_rational(), Some(&int(1)));
    }

    #[test]
    fn solve_complex_pair() {
        let roots = solve_quadratic(&poly(&[1, -3, 3])).unwrap();
        assert_eq!(roots.discriminant, int(-3));
        assert!(!roots.real());
        assert!(!roots.roots[0].is_real());
        assert_eq!(roots.roots[0].conjugate(), roots.roots[1]);
    }

    #[test]
    fn solve_rational_pair() {
        let roots = solve_quadratic(&poly(&[2, -3, 1])).unwrap();
        assert!(roots.field.is_none());
        let mut vals: Vec<_> = roots
            .roots
            .iter()
            .map(|r| r.as_rational().unwrap().clone())
            .collect();
        vals.sort();
        assert_eq!(vals, vec![int(1), int(2)]);
    }

    #[test]
    fn isomorphic_presentations_compare_equal() {
        let ext = QuadExt::new(&poly(&[1, -3, 1])).unwrap();
        let alpha = ext.generator();
        let moved = alpha.to_sqrt_field();
        assert_eq!(moved, alpha);
        let (a, b, d) = alpha.sqrt_form();
        assert_eq!((a, b, d), (rat(3, 2), rat(1, 2), BigInt::from(5)));
        assert_eq!(alpha.to_string(), "3/2+1/2*sqrt(5)");
    }

    #[test]
    fn inverse_and_division() {
        let ext = QuadExt::new(&poly(&[1, -3, 3])).unwrap();
        let x = FieldElem::quadratic(&ext, rat(2, 3), int(-5));
        let inv = x.inv().unwrap();
        assert_eq!(x.clone() * inv, FieldElem::one());
        assert_eq!(x.checked_div(&x).unwrap(), FieldElem::one());
    }

    #[test]
    fn mixed_fields_rejected() {
        let e1 = QuadExt::new(&poly(&[1, -3, 1])).unwrap();
        let e2 = QuadExt::new(&poly(&[-2, 0, 1])).unwrap();
        let x = e1.generator();
        let y = e2.generator();
        assert!(matches!(x.checked_add(&y), Err(Error::MixedFields(_))));
    }

    #[test]
    fn minimal_polynomial_of_root() {
        let roots = solve_quadratic(&poly(&[-1, 1, 1])).unwrap();
        assert_eq!(roots.roots[1].minimal_polynomial("x"), poly(&[-1, 1, 1]));
    }
}
