use serde::Serialize;

use crate::family::locus::{locus, LocusComponent, LocusId};
use crate::family::map::{symbolic_family, z_denominator, z_expr, z_numerator_base};
use crate::field::Ext;
use crate::poly::{gcd, sqrt_poly, BiPoly, RatExpr};
use num_traits::{One, Zero};

/// An identity in ℚ(x, y) together with the expression that had to vanish.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub residual: String,
    pub holds: bool,
}

fn identity(name: &'static str, statement: &'static str, residual: RatExpr) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        holds: residual.is_zero(),
        residual: residual.to_string(),
    }
}

/// Proves F(0) = ∞, F(∞) = 1, F(1) = y and F(x) = 0 over ℚ(x, y), and that
/// the free critical value F(t_c) equals z.
pub fn verify_cycle_identities() -> Vec<IdentityCheck> {
    let f = symbolic_family();
    let mut out = Vec::new();

    // F(0) = ∞: numerator at 0 is x·r ≠ 0 while t² vanishes.
    let n0 = f.numerator.eval(&RatExpr::zero());
    let d0 = f.denominator.eval(&RatExpr::zero());
    out.push(IdentityCheck {
        name: "F(0)=inf",
        statement: "denominator(0) = 0 and numerator(0) = x*r != 0",
        holds: d0.is_zero() && !n0.is_zero(),
        residual: d0.to_string(),
    });

    let lead = f
        .numerator
        .coeff(2)
        .checked_div(&f.denominator.coeff(2))
        .unwrap();
    out.push(identity(
        "F(inf)=1",
        "lc(numerator)/lc(denominator) - 1 = 0",
        lead - RatExpr::one(),
    ));

    let at = |t: RatExpr| match f.eval(&Ext::Finite(t)) {
        Ext::Finite(v) => v,
        Ext::Infinity => panic!("unexpected pole"),
    };
    out.push(identity(
        "F(1)=y",
        "F(1) - y = 0",
        at(RatExpr::one()) - RatExpr::y(),
    ));
    out.push(identity("F(x)=0", "F(x) = 0", at(RatExpr::x())));

    let tc = f
        .free_critical_point()
        .expect("x+r is not identically zero");
    out.push(identity(
        "F(t_c)=z",
        "F(2xr/(x+r)) - z = 0",
        at(tc) - z_expr(),
    ));
    out
}

/// Certificate that the numerator of `z − c` over the common denominator
/// `4x(x−1)(x+y−1)` is minus the square of a registered curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SquareCertificate {
    pub name: &'static str,
    pub target: &'static str,
    pub numerator: String,
    pub expected: LocusId,
    pub expected_polynomial: String,
    pub square_root: Option<String>,
    pub sign: i32,
    pub holds: bool,
}

/// Certificate that the poles of z in the affine plane are exactly the
/// zeros of `x`, `x − 1` and `x + y − 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleCertificate {
    pub name: &'static str,
    pub denominator: String,
    pub factors: Vec<LocusId>,
    pub cofactor: String,
    pub numerator_coprime: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LociCertificates {
    pub squares: Vec<SquareCertificate>,
    pub poles: PoleCertificate,
}

impl LociCertificates {
    pub fn all_hold(&self) -> bool {
        self.squares.iter().all(|c| c.holds) && self.poles.holds
    }
}

/// Certifies the level sets z = 0, 1, y and z = ∞ against the supplied
/// registry of locus equations.
pub fn certify_loci(loci: &[LocusComponent]) -> LociCertificates {
    let d = z_denominator();
    let base_num = -z_numerator_base().pow(2);
    let targets: [(&'static str, &'static str, BiPoly, LocusId); 3] = [
        ("z-minus-0-square", "z-0", BiPoly::zero(), LocusId::Z1),
        ("z-minus-1-square", "z-1", BiPoly::one(), LocusId::Z2),
        ("z-minus-y-square", "z-y", BiPoly::y(), LocusId::Z4),
    ];
    let squares = targets
        .into_iter()
        .map(|(name, target, c, expected)| {
            let numerator = &base_num - &(&c * &d);
            let root = sqrt_poly(&-&numerator);
            let expected_poly = &locus(loci, expected).affine;
            let holds =
                root.as_ref() == Some(expected_poly) && -&root.clone().unwrap().pow(2) == numerator;
            SquareCertificate {
                name,
                target,
                numerator: numerator.to_string(),
                expected,
                expected_polynomial: expected_poly.to_string(),
                square_root: root.map(|r| r.to_string()),
                sign: -1,
                holds,
            }
        })
        .collect();

    let factors = [LocusId::Lx0, LocusId::Lx1, LocusId::Z3];
    let product = factors
        .iter()
        .fold(BiPoly::one(), |acc, &id| &acc * &locus(loci, id).affine);
    let cofactor = d.div_exact(&product);
    let coprime = gcd(&base_num, &d) == BiPoly::one();
    let cofactor_constant = cofactor.as_ref().is_some_and(|c| c.is_constant());
    let poles = PoleCertificate {
        name: "z-pole-locus",
        denominator: d.to_string(),
        factors: factors.to_vec(),
        cofactor: cofactor.map_or_else(|| "none".to_string(), |c| c.to_string()),
        numerator_coprime: coprime,
        holds: coprime && cofactor_constant,
    };
    LociCertificates { squares, poles }
}
