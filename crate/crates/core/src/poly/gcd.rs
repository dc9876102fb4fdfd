//! Bivariate gcd over ℚ by content / primitive-part recursion, viewing
//! polynomials as elements of ℚ[y][x].

use crate::field::Rational;
use crate::poly::{BiPoly, UniPoly, Var};

/// Content with respect to x: the monic gcd of the x-coefficients in ℚ[y].
pub fn content_in_y(p: &BiPoly) -> UniPoly<Rational> {
    p.coeffs_in(Var::X)
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.to_uni(Var::Y, "y").expect("x-coefficient lies in Q[y]"))
        .fold(UniPoly::zero("y"), |acc, c| acc.gcd(&c))
}

/// `p` divided by its content in ℚ[y].
pub fn primitive_part(p: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return BiPoly::zero();
    }
    let c = BiPoly::from_uni(&content_in_y(p), Var::Y);
    p.div_exact(&c).expect("content divides")
}

fn leading_in_x(p: &BiPoly) -> (u32, BiPoly) {
    let d = p.degree_in(Var::X).unwrap_or(0);
    (d, p.coeffs_in(Var::X).swap_remove(d as usize))
}

/// Pseudo-remainder of `a` by `b` as polynomials in x.
fn pseudo_remainder(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let (n, lb) = leading_in_x(b);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(Var::X).unwrap() >= n {
        let (m, lr) = leading_in_x(&r);
        r = &(&lb * &r) - &(&lr * &b.shift(m - n, 0));
    }
    r
}

/// Greatest common divisor, integer-primitive with positive graded-lex
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let c = content_in_y(a).gcd(&content_in_y(b));
    let mut p = primitive_part(a);
    let mut q = primitive_part(b);
    if p.degree_in(Var::X) < q.degree_in(Var::X) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = pseudo_remainder(&p, &q);
        p = q;
        q = primitive_part(&r);
    }
    (&primitive_part(&p) * &BiPoly::from_uni(&c, Var::Y)).normalized()
}
