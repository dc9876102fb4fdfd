use num_traits::{Signed, Zero};

use crate::field::{rational_sqrt, Rational};
use crate::poly::BiPoly;

/// Exact square root of a bivariate polynomial.
///
/// Terms of the root are peeled off in lex order (x before y) starting from
/// the square root of the leading term; each later term is the leading term
/// of the residual divided by twice the root's leading term. The candidate is
/// checked by squaring. The result is sign-normalized to a positive
/// graded-lex leading coefficient. Returns `None` when `p` is not a square
/// (including `p = 0`).
pub fn sqrt_poly(p: &BiPoly) -> Option<BiPoly> {
    let ((i, j), c) = p.lex_leading()?;
    if i % 2 == 1 || j % 2 == 1 {
        return None;
    }
    let root_lc = rational_sqrt(c)?;
    let (ri, rj) = (i / 2, j / 2);
    let max_j = p.degree_in(crate::poly::Var::Y).unwrap_or(0) / 2;
    let two_lead = BiPoly::monomial(&root_lc + &root_lc, ri, rj);
    let mut q = BiPoly::monomial(root_lc, ri, rj);
    let mut residual = p - &q.pow(2);
    while let Some(((a, b), rc)) = residual.lex_leading() {
        if a < ri || b < rj {
            return None;
        }
        let (ta, tb) = (a - ri, b - rj);
        if (ta, tb) >= (ri, rj) || tb > max_j {
            return None;
        }
        let t = BiPoly::monomial(rc / two_lead.coeff(ri, rj), ta, tb);
        q = &q + &t;
        residual = p - &q.pow(2);
    }
    debug_assert_eq!(&q.pow(2), p);
    let lc = q
        .leading_term()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::zero);
    Some(if lc.is_negative() { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_int_terms(terms)
    }

    #[test]
    fn square_of_z1() {
        let z1 = bp(&[(2, 0, 1), (1, 0, -2), (0, 0, 1), (0, 1, -1)]);
        assert_eq!(sqrt_poly(&z1.pow(2)), Some(z1.clone()));
        assert_eq!(sqrt_poly(&(-&z1).pow(2)), Some(z1));
    }

    #[test]
    fn square_of_z4() {
        let z4 = bp(&[(1, 1, 2), (2, 0, 1), (0, 1, -1), (1, 0, -2), (0, 0, 1)]);
        assert_eq!(sqrt_poly(&z4.pow(2)), Some(z4));
    }

    #[test]
    fn non_squares() {
        assert_eq!(sqrt_poly(&bp(&[(2, 0, 1), (0, 1, 1)])), None);
        assert_eq!(sqrt_poly(&bp(&[(2, 0, -1)])), None);
        assert_eq!(sqrt_poly(&bp(&[(0, 0, 2)])), None);
        assert_eq!(sqrt_poly(&BiPoly::zero()), None);
        // (x + 1)² + 1
        assert_eq!(sqrt_poly(&bp(&[(2, 0, 1), (1, 0, 2), (0, 0, 2)])), None);
    }

    #[test]
    fn pure_y_square() {
        let q = bp(&[(0, 2, 3), (0, 0, -1)]);
        assert_eq!(sqrt_poly(&q.pow(2)), Some(q));
    }
}
