//! Exact roots of univariate polynomials over ℚ, up to degree-2 extensions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{
    gcd_of_numerators, lcm_of_denominators, positive_divisors, solve_quadratic, FieldElem, Rational,
};
use crate::poly::UniPoly;

/// Integer-primitive associate with positive leading coefficient.
pub fn primitive_integer(p: &UniPoly<Rational>) -> UniPoly<Rational> {
    if p.is_zero() {
        return p.clone();
    }
    let l = lcm_of_denominators(p.coeffs());
    let scaled: Vec<Rational> = p
        .coeffs()
        .iter()
        .map(|c| c * Rational::from_integer(l.clone()))
        .collect();
    let mut g = gcd_of_numerators(scaled.iter());
    if scaled.last().unwrap().is_negative() {
        g = -g;
    }
    let g = Rational::from_integer(g);
    UniPoly::from_coeffs(scaled.into_iter().map(|c| c / &g).collect(), p.variable())
}

/// Distinct rational roots, ascending.
pub fn rational_roots(p: &UniPoly<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    let mut f = primitive_integer(p);
    while f.coeff(0).is_zero() && f.degree().unwrap_or(0) > 0 {
        if roots.is_empty() {
            roots.push(Rational::zero());
        }
        f = UniPoly::from_coeffs(f.coeffs()[1..].to_vec(), p.variable());
    }
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let a0 = f.coeff(0).to_integer();
    let an = f.leading().unwrap().to_integer();
    for num in positive_divisors(&a0) {
        for den in positive_divisors(&an) {
            for s in [BigInt::one(), -BigInt::one()] {
                let r = Rational::new(&num * &s, den.clone());
                if !roots.contains(&r) && f.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// A root together with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub value: FieldElem,
    pub multiplicity: u32,
}

/// Monic factors over ℚ of degree 1 or 2 of a squarefree polynomial, plus the
/// unfactored remainder (monic, degree 0 when fully split).
pub(crate) fn split_low_degree(
    f: &UniPoly<Rational>,
) -> (Vec<UniPoly<Rational>>, UniPoly<Rational>) {
    let var = f.variable().to_string();
    let mut rest = f.monic();
    let mut factors = Vec::new();
    for r in rational_roots(&rest) {
        let lin = UniPoly::from_coeffs(vec![-r, Rational::one()], &var);
        rest = rest.div_exact(&lin).expect("root gives a factor");
        factors.push(lin);
    }
    while rest.degree().unwrap_or(0) > 2 {
        match quadratic_factor(&rest) {
            Some(q) => {
                rest = rest.div_exact(&q).expect("factor divides");
                factors.push(q);
            }
            None => break,
        }
    }
    if rest.degree() == Some(2) {
        factors.push(rest.clone());
        rest = UniPoly::constant(Rational::one(), &var);
    }
    (factors, rest)
}

/// Finds a monic quadratic factor over ℚ by Kronecker's method, if any.
fn quadratic_factor(f: &UniPoly<Rational>) -> Option<UniPoly<Rational>> {
    let var = f.variable();
    let g = primitive_integer(f);
    // Three nodes with the smallest nonzero values keep the divisor search short.
    let mut nodes: Vec<(i64, BigInt)> = (-6i64..=6)
        .map(|k| (k, g.eval(&Rational::from_integer(k.into())).to_integer()))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    nodes.sort_by(|a, b| a.1.abs().cmp(&b.1.abs()).then(a.0.cmp(&b.0)));
    let nodes = &nodes[..3];
    let divs: Vec<Vec<BigInt>> = nodes
        .iter()
        .map(|(_, v)| {
            positive_divisors(v)
                .into_iter()
                .flat_map(|d| [d.clone(), -d])
                .collect()
        })
        .collect();
    let xs: Vec<Rational> = nodes
        .iter()
        .map(|(k, _)| Rational::from_integer((*k).into()))
        .collect();
    for d0 in divs[0].iter().filter(|d| d.is_positive()) {
        for d1 in &divs[1] {
            for d2 in &divs[2] {
                let ys = [d0, d1, d2].map(|d| Rational::from_integer(d.clone()));
                let cand = interpolate(&xs, &ys, var);
                if cand.degree() != Some(2) {
                    continue;
                }
                if let Some(_q) = g.div_exact(&cand) {
                    return Some(cand.monic());
                }
            }
        }
    }
    None
}

fn interpolate(xs: &[Rational], ys: &[Rational], var: &str) -> UniPoly<Rational> {
    let mut out = UniPoly::zero(var);
    for i in 0..xs.len() {
        let mut basis = UniPoly::constant(ys[i].clone(), var);
        for j in 0..xs.len() {
            if i != j {
                let lin = UniPoly::from_coeffs(vec![-xs[j].clone(), Rational::one()], var);
                basis = (&basis * &lin).scale(&(&xs[i] - &xs[j]).recip());
            }
        }
        out = &out + &basis;
    }
    out
}

/// All roots with multiplicity. Roots are rational or lie in a quadratic
/// extension; anything needing a larger field is an error.
pub fn exact_roots(p: &UniPoly<Rational>) -> Result<Vec<Root>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "roots of the zero polynomial".into(),
        ));
    }
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let (factors, rest) = split_low_degree(&part);
        if rest.degree().unwrap_or(0) > 0 {
            return Err(Error::ExtensionTooLarge(format!(
                "irreducible factor {}",
                primitive_integer(&rest)
            )));
        }
        for f in factors {
            if f.degree() == Some(1) {
                out.push(Root {
                    value: FieldElem::Rational(-f.coeff(0)),
                    multiplicity: mult,
                });
            } else {
                for r in solve_quadratic(&f)?.roots {
                    out.push(Root {
                        value: r,
                        multiplicity: mult,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Irreducible factors over ℚ of degree ≤ 2 with multiplicities, each
/// integer-primitive with positive leading coefficient.
pub fn low_degree_factors(p: &UniPoly<Rational>) -> Result<Vec<(UniPoly<Rational>, u32)>> {
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let (factors, rest) = split_low_degree(&part);
        if rest.degree().unwrap_or(0) > 0 {
            return Err(Error::ExtensionTooLarge(format!(
                "irreducible factor {}",
                primitive_integer(&rest)
            )));
        }
        out.extend(factors.into_iter().map(|f| (primitive_integer(&f), mult)));
    }
    Ok(out)
}
