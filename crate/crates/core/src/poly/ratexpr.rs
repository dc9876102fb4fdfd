use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Ext, Field, Rational};
use crate::poly::bi::other;
use crate::poly::roots::{primitive_integer, split_low_degree};
use crate::poly::{gcd, BiPoly, UniPoly, Var};

/// A rational function `num/den` in ℚ(x, y), kept in lowest terms.
///
/// Canonical form: numerator and denominator have integer coefficients with
/// coprime contents, and the denominator's graded-lex leading coefficient is
/// positive. Equal functions therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatExpr {
    num: BiPoly,
    den: BiPoly,
}

impl RatExpr {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<RatExpr> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("in a rational expression"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> RatExpr {
        if num.is_zero() {
            return RatExpr {
                num,
                den: BiPoly::one(),
            };
        }
        let g = gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let (cn, pn) = num.primitive_normalized();
        let (cd, pd) = den.primitive_normalized();
        let c = cn / cd;
        RatExpr {
            num: pn.scale(&Rational::from_integer(c.numer().clone())),
            den: pd.scale(&Rational::from_integer(c.denom().clone())),
        }
    }

    pub fn from_poly(p: BiPoly) -> RatExpr {
        Self::reduce(p, BiPoly::one())
    }

    pub fn x() -> RatExpr {
        Self::from_poly(BiPoly::x())
    }

    pub fn y() -> RatExpr {
        Self::from_poly(BiPoly::y())
    }

    pub fn var(v: Var) -> RatExpr {
        Self::from_poly(BiPoly::var(v))
    }

    pub fn constant(c: Rational) -> RatExpr {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| self.num.constant_term() / self.den.constant_term())
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.num.depends_on(v) || self.den.depends_on(v)
    }

    pub fn checked_div(&self, other: &RatExpr) -> Result<RatExpr> {
        let inv = other
            .inv()
            .ok_or(Error::DivisionByZero("by the zero rational function"))?;
        Ok(self.clone() * inv)
    }

    /// Value at a point: finite, ∞ where only the denominator vanishes, and an
    /// indeterminacy error where both vanish.
    pub fn eval_in<K: Field>(&self, x: &K, y: &K) -> Result<Ext<K>> {
        let n = self.num.eval_in(x, y);
        let d = self.den.eval_in(x, y);
        if !d.is_zero() {
            return Ok(Ext::Finite(n.div(&d).unwrap()));
        }
        if !n.is_zero() {
            return Ok(Ext::Infinity);
        }
        Err(Error::Indeterminate(format!(
            "{} and {} both vanish at ({x}, {y})",
            self.num, self.den
        )))
    }

    /// `self(rx, ry)`.
    pub fn compose(&self, rx: &RatExpr, ry: &RatExpr) -> Result<RatExpr> {
        let n = self.num.eval_in(rx, ry);
        let d = self.den.eval_in(rx, ry);
        n.checked_div(&d).map_err(|_| {
            Error::Pole(format!(
                "denominator {} vanishes identically after substitution",
                self.den
            ))
        })
    }

    /// Substitutes a rational value for one variable.
    pub fn restrict(&self, v: Var, value: &Rational) -> Result<RatExpr> {
        let c = RatExpr::constant(value.clone());
        match v {
            Var::X => self.compose(&c, &RatExpr::y()),
            Var::Y => self.compose(&RatExpr::x(), &c),
        }
    }

    pub fn swap(&self) -> RatExpr {
        Self::reduce(self.num.swap(), self.den.swap())
    }

    /// Integer power, negative exponents allowed for nonzero expressions.
    pub fn pow_i(&self, k: i64) -> Result<RatExpr> {
        let mut out = RatExpr::one();
        for _ in 0..k.unsigned_abs() {
            out = out * self.clone();
        }
        if k < 0 {
            out = RatExpr::one().checked_div(&out)?;
        }
        Ok(out)
    }

    /// Order of vanishing along `v = 0` (negative for a pole). `None` for zero.
    pub fn order_along(&self, v: Var) -> Option<i64> {
        Some(self.num.order_in(v)? as i64 - self.den.order_in(v).unwrap() as i64)
    }

    /// Writes `self = vᵏ · g` with `g` regular and not identically zero on
    /// `v = 0`; returns `k` and the restriction `g|_{v=0}`, a function of the
    /// other variable only.
    pub fn leading_along(&self, v: Var) -> Option<(i64, RatExpr)> {
        let k = self.order_along(v)?;
        let nl = self.num.coeffs_in(v)[self.num.order_in(v)? as usize].clone();
        let dl = self.den.coeffs_in(v)[self.den.order_in(v)? as usize].clone();
        let lead = RatExpr::reduce(nl, dl);
        debug_assert!(!lead.depends_on(v));
        Some((k, lead))
    }

    /// Numerator and denominator as univariate polynomials, when the
    /// expression involves only `v`.
    pub fn to_uni(&self, v: Var, var: &str) -> Option<(UniPoly<Rational>, UniPoly<Rational>)> {
        if self.depends_on(other(v)) {
            return None;
        }
        Some((self.num.to_uni(v, var)?, self.den.to_uni(v, var)?))
    }

    pub fn display_with(&self, names: [&str; 2]) -> String {
        let n = self.num.display_with(names);
        if self.den.is_one_poly() {
            return n;
        }
        let d = self.den.display_with(names);
        format!("{}/{}", wrap(&n, false), wrap(&d, true))
    }

    /// Factored display of a function of a single variable, with each factor
    /// written in ascending powers, e.g. `-1/(4*u*(1+u))`.
    pub fn display_factored(&self, v: Var, var: &str) -> Option<String> {
        let (n, d) = self.to_uni(v, var)?;
        let (cn, nf) = factor_for_display(&n);
        let (cd, df) = factor_for_display(&d);
        let c = cn / cd;
        let mut out = String::new();
        if c.is_negative() {
            out.push('-');
        }
        let p = c.numer().abs();
        let q = c.denom().clone();
        let mut top: Vec<String> = Vec::new();
        if !p.is_one() || nf.is_empty() {
            top.push(p.to_string());
        }
        top.extend(nf.iter().map(|(f, e)| factor_string(f, *e)));
        out.push_str(&top.join("*"));
        let mut bottom: Vec<String> = Vec::new();
        if !q.is_one() {
            bottom.push(q.to_string());
        }
        bottom.extend(df.iter().map(|(f, e)| factor_string(f, *e)));
        match bottom.len() {
            0 => {}
            1 => {
                out.push('/');
                out.push_str(&bottom[0]);
            }
            _ => {
                out.push_str("/(");
                out.push_str(&bottom.join("*"));
                out.push(')');
            }
        }
        Some(out)
    }
}

impl BiPoly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

fn wrap(s: &str, strict: bool) -> String {
    let compound = s.chars().skip(1).any(|c| c == '+' || c == '-')
        || (strict && (s.contains('*') || s.contains('/')));
    if compound {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Splits a univariate polynomial into a constant and factors normalized to
/// integer coefficients with a positive lowest-order coefficient.
fn factor_for_display(p: &UniPoly<Rational>) -> (Rational, Vec<(UniPoly<Rational>, u32)>) {
    let var = p.variable().to_string();
    let mut factors: Vec<(UniPoly<Rational>, u32)> = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let (found, rest) = split_low_degree(&part);
        for f in found
            .into_iter()
            .chain((rest.degree().unwrap_or(0) > 0).then_some(rest))
        {
            let mut f = primitive_integer(&f);
            let low = f.coeffs().iter().find(|c| !c.is_zero()).unwrap().clone();
            if low.is_negative() {
                f = -f;
            }
            factors.push((f, mult));
        }
    }
    factors.sort_by_key(|(f, _)| {
        let monomial = f.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        (!monomial, f.degree(), f.to_string_ascending())
    });
    let product = factors
        .iter()
        .fold(UniPoly::constant(Rational::one(), &var), |acc, (f, e)| {
            &acc * &f.pow(*e)
        });
    let c = p.div_exact(&product).expect("factors divide").coeff(0);
    (c, factors)
}

fn factor_string(f: &UniPoly<Rational>, e: u32) -> String {
    let s = wrap(&f.to_string_ascending(), false);
    if e == 1 {
        s
    } else {
        format!("{s}^{e}")
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["x", "y"]))
    }
}

impl Zero for RatExpr {
    fn zero() -> Self {
        RatExpr {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatExpr {
    fn one() -> Self {
        RatExpr {
            num: BiPoly::one(),
            den: BiPoly::one(),
        }
    }
}

impl Field for RatExpr {
    fn inv(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::reduce(self.den.clone(), self.num.clone()))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

impl Add for RatExpr {
    type Output = RatExpr;
    fn add(self, rhs: RatExpr) -> RatExpr {
        if self.den == rhs.den {
            return Self::reduce(&self.num + &rhs.num, self.den);
        }
        Self::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RatExpr {
    type Output = RatExpr;
    fn sub(self, rhs: RatExpr) -> RatExpr {
        self + (-rhs)
    }
}

impl Mul for RatExpr {
    type Output = RatExpr;
    fn mul(self, rhs: RatExpr) -> RatExpr {
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr {
            num: -self.num,
            den: self.den,
        }
    }
}

impl From<BiPoly> for RatExpr {
    fn from(p: BiPoly) -> Self {
        RatExpr::from_poly(p)
    }
}
