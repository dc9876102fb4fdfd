use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::field::{gcd_of_numerators, lcm_of_denominators, Field, Rational};
use crate::poly::uni::render_terms;
use crate::poly::UniPoly;

/// Which of the two variables of a [`BiPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial `Σ c_ij xⁱ yʲ` over ℚ. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

fn graded_lex_key(&(i, j): &(u32, u32)) -> (u32, u32) {
    (i + j, i)
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::x(),
            Var::Y => Self::y(),
        }
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), c)])
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Builds from integer coefficients `(i, j, c)`.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| ((i, j), Rational::from_integer(c.into()))),
        )
    }

    /// Lifts a univariate polynomial in the chosen variable.
    pub fn from_uni(p: &UniPoly<Rational>, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            match v {
                Var::X => ((k, 0), c.clone()),
                Var::Y => ((0, k), c.clone()),
            }
        }))
    }

    fn add_term(&mut self, e: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| pick(v, i, j)).max()
    }

    /// Largest power of the variable dividing the polynomial (`None` for zero).
    pub fn order_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| pick(v, i, j)).min()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.degree_in(v).unwrap_or(0) > 0
    }

    /// Leading term under graded-lex order (total degree, then x-exponent).
    pub fn leading_term(&self) -> Option<((u32, u32), &Rational)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| graded_lex_key(e))
            .map(|(e, c)| (*e, c))
    }

    /// Leading term under lex order with `x > y`.
    pub(crate) fn lex_leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `xⁱ yʲ`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates in any field containing ℚ.
    pub fn eval_in<K: Field>(&self, x: &K, y: &K) -> K {
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let xp = powers(x, dx);
        let yp = powers(y, dy);
        self.terms.iter().fold(K::zero(), |acc, (&(i, j), c)| {
            acc + K::from_rational(c) * xp[i as usize].clone() * yp[j as usize].clone()
        })
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_in(x, y)
    }

    /// Substitutes a value for one variable, leaving a univariate polynomial
    /// in the other, named `var`.
    pub fn specialize<K: Field>(&self, v: Var, value: &K, var: &str) -> UniPoly<K> {
        let d = self.degree_in(v).unwrap_or(0) as usize;
        let vp = powers(value, d);
        let other_deg = self.degree_in(other(v)).unwrap_or(0) as usize;
        let mut coeffs = vec![K::zero(); other_deg + 1];
        for (&(i, j), c) in &self.terms {
            let (fixed, free) = match v {
                Var::X => (i, j),
                Var::Y => (j, i),
            };
            let free = free as usize;
            coeffs[free] = coeffs[free].clone() + K::from_rational(c) * vp[fixed as usize].clone();
        }
        UniPoly::from_coeffs(coeffs, var)
    }

    /// Coefficients as a polynomial in `v`: entry `k` is the coefficient of
    /// `vᵏ`, a polynomial in the other variable (kept in its own slot).
    pub fn coeffs_in(&self, v: Var) -> Vec<BiPoly> {
        let d = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![BiPoly::zero(); d];
        for (&(i, j), c) in &self.terms {
            match v {
                Var::X => out[i as usize].add_term((0, j), c.clone()),
                Var::Y => out[j as usize].add_term((i, 0), c.clone()),
            }
        }
        out
    }

    /// Reinterprets a polynomial in a single variable as a [`UniPoly`].
    /// Returns `None` if the other variable occurs.
    pub fn to_uni(&self, v: Var, var: &str) -> Option<UniPoly<Rational>> {
        if self.depends_on(other(v)) {
            return None;
        }
        let d = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); d];
        for (&(i, j), c) in &self.terms {
            coeffs[pick(v, i, j) as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs, var))
    }

    /// `p(t, t)` as a univariate polynomial in `var`.
    pub fn specialize_diagonal(&self, var: &str) -> UniPoly<Rational> {
        let d = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[(i + j) as usize] += c;
        }
        UniPoly::from_coeffs(coeffs, var)
    }

    /// `self(px, py)`.
    pub fn compose(&self, px: &BiPoly, py: &BiPoly) -> BiPoly {
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let mut xp = vec![BiPoly::one()];
        for k in 0..dx {
            xp.push(&xp[k] * px);
        }
        let mut yp = vec![BiPoly::one()];
        for k in 0..dy {
            yp.push(&yp[k] * py);
        }
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out = &out + &(&xp[i as usize] * &yp[j as usize]).scale(c);
        }
        out
    }

    /// `self(x + a, y + b)`.
    pub fn translate(&self, a: &Rational, b: &Rational) -> BiPoly {
        self.compose(
            &(&BiPoly::x() + &BiPoly::constant(a.clone())),
            &(&BiPoly::y() + &BiPoly::constant(b.clone())),
        )
    }

    pub fn swap(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn partial(&self, v: Var) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| match v {
            Var::X if i > 0 => Some(((i - 1, j), c * Rational::from_integer(i.into()))),
            Var::Y if j > 0 => Some(((i, j - 1), c * Rational::from_integer(j.into()))),
            _ => None,
        }))
    }

    /// Lowest total degree of a term: the multiplicity of the curve at the origin.
    pub fn multiplicity_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Divides by `vᵏ`; panics if some term has a smaller power.
    pub fn strip_power(&self, v: Var, k: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    let e = match v {
                        Var::X => (i.checked_sub(k).expect("power divides"), j),
                        Var::Y => (i, j.checked_sub(k).expect("power divides")),
                    };
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Integer-primitive associate with positive graded-lex leading
    /// coefficient, together with the factor removed (`self = c · result`).
    pub fn primitive_normalized(&self) -> (Rational, BiPoly) {
        if self.is_zero() {
            return (Rational::one(), BiPoly::zero());
        }
        let l = lcm_of_denominators(self.terms.values());
        let scaled: Vec<Rational> = self
            .terms
            .values()
            .map(|c| c * Rational::from_integer(l.clone()))
            .collect();
        let g = gcd_of_numerators(scaled.iter());
        let mut c = Rational::new(g, l);
        if self.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    pub fn normalized(&self) -> BiPoly {
        self.primitive_normalized().1
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let ((di, dj), dc) = divisor.lex_leading()?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((ri, rj), rc)) = rem.lex_leading() {
            if ri < di || rj < dj {
                return None;
            }
            let t = BiPoly::monomial(rc / &dc, ri - di, rj - dj);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Renders with the given variable names, highest graded-lex term first.
    pub fn display_with(&self, names: [&str; 2]) -> String {
        let mut exps: Vec<_> = self.terms.iter().collect();
        exps.sort_by_key(|(e, _)| std::cmp::Reverse(graded_lex_key(e)));
        render_terms(
            exps.into_iter()
                .map(|(&(i, j), c)| (c.to_string(), monomial_string(names, i, j))),
        )
    }

    /// Renders with ascending graded-lex order, e.g. `1-2*x+x^2-y`.
    pub fn display_ascending(&self, names: [&str; 2]) -> String {
        let mut exps: Vec<_> = self.terms.iter().collect();
        exps.sort_by_key(|(e, _)| {
            let (d, i) = graded_lex_key(e);
            (d, std::cmp::Reverse(i))
        });
        render_terms(
            exps.into_iter()
                .map(|(&(i, j), c)| (c.to_string(), monomial_string(names, i, j))),
        )
    }
}

fn pick(v: Var, i: u32, j: u32) -> u32 {
    match v {
        Var::X => i,
        Var::Y => j,
    }
}

pub(crate) fn other(v: Var) -> Var {
    match v {
        Var::X => Var::Y,
        Var::Y => Var::X,
    }
}

fn powers<K: Field>(v: &K, n: usize) -> Vec<K> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(K::one());
    for k in 0..n {
        out.push(out[k].clone() * v.clone());
    }
    out
}

fn monomial_string(names: [&str; 2], i: u32, j: u32) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [part(names[0], i), part(names[1], j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["x", "y"]))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn y() -> BiPoly {
        BiPoly::y()
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, BiPoly::from_int_terms(&[(2, 0, 1), (0, 2, -1)]));
        assert_eq!(p.to_string(), "x^2-y^2");
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &(&x() + &y()) - &y();
        assert_eq!(p, x());
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn evaluation_and_composition() {
        // Z1 = x² − 2x + 1 − y vanishes at (3, 4)
        let z1 = BiPoly::from_int_terms(&[(2, 0, 1), (1, 0, -2), (0, 0, 1), (0, 1, -1)]);
        assert_eq!(z1.eval(&int(3), &int(4)), int(0));
        let shifted = z1.translate(&int(1), &int(0));
        assert_eq!(shifted, BiPoly::from_int_terms(&[(2, 0, 1), (0, 1, -1)]));
        assert_eq!(z1.display_ascending(["x", "y"]), "1-2*x-y+x^2");
    }

    #[test]
    fn normalization_is_primitive() {
        let p = BiPoly::from_terms([((1, 0), rat(-2, 3)), ((0, 0), rat(4, 3))]);
        let (c, q) = p.primitive_normalized();
        assert_eq!(q, BiPoly::from_int_terms(&[(1, 0, 1), (0, 0, -2)]));
        assert_eq!(q.scale(&c), p);
    }

    #[test]
    fn exact_division() {
        let a = &(&x() + &y()) * &(&x() - &BiPoly::one());
        assert_eq!(a.div_exact(&(&x() + &y())), Some(&x() - &BiPoly::one()));
        assert_eq!(a.div_exact(&(&x() + &BiPoly::from_int(2))), None);
    }

    #[test]
    fn partials_and_multiplicity() {
        let p = BiPoly::from_int_terms(&[(2, 1, 3), (0, 2, 1)]);
        assert_eq!(p.partial(Var::X), BiPoly::from_int_terms(&[(1, 1, 6)]));
        assert_eq!(p.multiplicity_at_origin(), Some(2));
        assert_eq!(p.order_in(Var::Y), Some(1));
    }
}
