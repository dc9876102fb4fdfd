use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial over a field, coefficients stored in
/// ascending degree order with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
    var: String,
}

impl<K: Field> UniPoly<K> {
    pub fn zero(var: &str) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            var: var.to_string(),
        }
    }

    pub fn constant(c: K, var: &str) -> Self {
        Self::from_coeffs(vec![c], var)
    }

    /// The polynomial `var`.
    pub fn var(var: &str) -> Self {
        Self::from_coeffs(vec![K::zero(), K::one()], var)
    }

    pub fn monomial(c: K, degree: usize, var: &str) -> Self {
        let mut coeffs = vec![K::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs, var)
    }

    /// Coefficients in ascending degree order.
    pub fn from_coeffs(coeffs: Vec<K>, var: &str) -> Self {
        let mut p = UniPoly {
            coeffs,
            var: var.to_string(),
        };
        p.trim();
        p
    }

    /// `(t − r₁)(t − r₂)…`
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a K>, var: &str) -> Self
    where
        K: 'a,
    {
        roots
            .into_iter()
            .fold(Self::constant(K::one(), var), |acc, r| {
                acc * Self::from_coeffs(vec![-r.clone(), K::one()], var)
            })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn variable(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            &self.var,
        )
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect(), &self.var)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * K::from_int(i as i64))
                .collect(),
            &self.var,
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(K::one(), &self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&inner.var), |acc, c| {
                &(&acc * inner) + &Self::constant(c.clone(), &inner.var)
            })
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor
            .degree()
            .ok_or(Error::DivisionByZero("by the zero polynomial"))?;
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let top = rem.len() - 1;
            let c = rem[top].clone() * lc_inv.clone();
            let shift = top - d_deg;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * dc.clone();
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((
            Self::from_coeffs(quot, &self.var),
            Self::from_coeffs(rem, &self.var),
        ))
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: pairs `(f_i, i)` with `self = c·∏ f_iⁱ`,
    /// each `f_i` monic, squarefree and pairwise coprime. Constants give `[]`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = df.div_exact(&a).expect("gcd divides");
        let mut i = 1;
        loop {
            let d = &c - &b.derivative();
            if b.degree() == Some(0) {
                break;
            }
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Determinant of the Sylvester matrix of `self` and `other`.
    pub fn resultant(&self, other: &Self) -> Result<K> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument(
                "resultant of two zero polynomials".into(),
            ));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(K::zero());
        }
        let rows = sylvester(&self.coeffs, &other.coeffs);
        Ok(determinant(rows))
    }

    /// Renders the polynomial with ascending powers, e.g. `1+u`.
    pub fn to_string_ascending(&self) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.to_string(), monomial_name(&self.var, i))),
        )
    }
}

fn monomial_name(var: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

/// Joins `(coefficient, monomial)` pairs into `a*m+b*n-…` form.
pub(crate) fn render_terms(terms: impl Iterator<Item = (String, String)>) -> String {
    let mut out = String::new();
    for (coeff, mono) in terms {
        let compound = coeff.chars().skip(1).any(|ch| ch == '+' || ch == '-');
        let term = if mono.is_empty() {
            if compound {
                format!("({coeff})")
            } else {
                coeff
            }
        } else if coeff == "1" {
            mono
        } else if coeff == "-1" {
            format!("-{mono}")
        } else if compound {
            format!("({coeff})*{mono}")
        } else {
            format!("{coeff}*{mono}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rows of the Sylvester matrix for ascending coefficient vectors.
pub(crate) fn sylvester<T: Clone>(p: &[T], q: &[T]) -> Vec<Vec<Option<T>>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![None; size];
        for (j, c) in p.iter().rev().enumerate() {
            row[shift + j] = Some(c.clone());
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![None; size];
        for (j, c) in q.iter().rev().enumerate() {
            row[shift + j] = Some(c.clone());
        }
        rows.push(row);
    }
    rows
}

fn determinant<K: Field>(rows: Vec<Vec<Option<K>>>) -> K {
    let mut m: Vec<Vec<K>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|c| c.unwrap_or_else(K::zero)).collect())
        .collect();
    let n = m.len();
    let mut det = K::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return K::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        let p_inv = p.inv().unwrap();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * p_inv.clone();
            for c in col..n {
                let v = m[r][c].clone() - factor.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    det
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.to_string(), monomial_name(&self.var, i))),
        );
        f.write_str(&s)
    }
}

impl<K: Field> Add for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs(
            (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
            &self.var,
        )
    }
}

impl<K: Field> Sub for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs(
            (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
            &self.var,
        )
    }
}

impl<K: Field> Mul for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out, &self.var)
    }
}

impl<K: Field> Neg for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect(), &self.var)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for UniPoly<K> {
            type Output = UniPoly<K>;
            fn $m(self, rhs: UniPoly<K>) -> UniPoly<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Field> Neg for UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    fn p(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), "x")
    }

    #[test]
    fn gcd_of_common_factor() {
        // gcd(x² − 1, x − 1) = x − 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert!(p(&[1, 1]).gcd(&p(&[2, 1])).degree() == Some(0));
    }

    #[test]
    fn divmod_identity() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 2, 3]);
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(
            p(&[1, 2]).divmod(&UniPoly::zero("x")),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn linear_resultants() {
        // res(t − 1, t + 1) = 2 ; res(t − a, t − a) = 0
        assert_eq!(p(&[-1, 1]).resultant(&p(&[1, 1])).unwrap(), int(2));
        assert_eq!(p(&[-3, 1]).resultant(&p(&[-3, 1])).unwrap(), int(0));
        assert!(UniPoly::<Rational>::zero("x")
            .resultant(&UniPoly::zero("x"))
            .is_err());
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(f, g) = lc(f)^deg g · ∏ g(αᵢ): f = (x−1)(x−2), g = x + 3
        let f = p(&[2, -3, 1]);
        let g = p(&[3, 1]);
        assert_eq!(f.resultant(&g).unwrap(), int(4 * 5));
    }

    #[test]
    fn squarefree_parts() {
        // (x−1)²(x+2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2-3*x+1");
        assert_eq!(p(&[1, 1]).with_var("u").to_string_ascending(), "1+u");
        assert_eq!(UniPoly::<Rational>::zero("x").to_string(), "0");
    }

    #[test]
    fn compose_and_eval() {
        let f = p(&[0, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.compose(&g), p(&[1, 2, 1]));
        assert_eq!(f.compose(&g).eval(&int(2)), int(9));
    }
}
