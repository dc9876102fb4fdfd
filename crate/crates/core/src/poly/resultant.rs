use crate::error::{Error, Result};
use crate::field::Rational;
use crate::poly::bi::other;
use crate::poly::uni::sylvester;
use crate::poly::{BiPoly, UniPoly, Var};

/// Resultant of two bivariate polynomials with respect to `eliminate`, as a
/// univariate polynomial in the remaining variable (named `var`).
///
/// The Sylvester matrix has entries in ℚ[t]; its determinant is taken by
/// fraction-free (Bareiss) elimination.
pub fn resultant_bi(
    p: &BiPoly,
    q: &BiPoly,
    eliminate: Var,
    var: &str,
) -> Result<UniPoly<Rational>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidArgument(
            "resultant of two zero polynomials".into(),
        ));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(UniPoly::zero(var));
    }
    let keep = other(eliminate);
    let as_uni = |f: &BiPoly| -> Vec<UniPoly<Rational>> {
        f.coeffs_in(eliminate)
            .iter()
            .map(|c| c.to_uni(keep, var).expect("coefficient in one variable"))
            .collect()
    };
    let pc = as_uni(p);
    let qc = as_uni(q);
    if pc.len() == 1 && qc.len() == 1 {
        return Ok(UniPoly::constant(Rational::from_integer(1.into()), var));
    }
    let rows = sylvester(&pc, &qc)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| c.unwrap_or_else(|| UniPoly::zero(var)))
                .collect()
        })
        .collect();
    Ok(bareiss_determinant(rows, var))
}

/// Determinant of a square matrix over ℚ[t] by Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<UniPoly<Rational>>>, var: &str) -> UniPoly<Rational> {
    let n = m.len();
    if n == 0 {
        return UniPoly::constant(Rational::from_integer(1.into()), var);
    }
    let mut sign_flip = false;
    let mut prev = UniPoly::constant(Rational::from_integer(1.into()), var);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return UniPoly::zero(var),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}
