use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::locus::eval_bihomogeneous;
use crate::field::{Ext, Field, FieldElem, Rational};
use crate::poly::{BiPoly, RatExpr, UniPoly};

/// `r = (x + y − 1)/(x − 1)`.
pub fn r_of<K: Field>(x: &K, y: &K) -> Result<K> {
    let den = x.clone() - K::one();
    let num = x.clone() + y.clone() - K::one();
    num.div(&den)
        .ok_or_else(|| Error::Pole("x-1 vanishes".into()))
}

/// `1 − 2x + x² − y`, the base of the numerator of z.
pub fn z_numerator_base() -> BiPoly {
    BiPoly::from_int_terms(&[(0, 0, 1), (1, 0, -2), (2, 0, 1), (0, 1, -1)])
}

/// `4x(x − 1)(x + y − 1)`.
pub fn z_denominator() -> BiPoly {
    let x = BiPoly::x();
    let one = BiPoly::one();
    let s = &(&x + &BiPoly::y()) - &one;
    (&(&x * &(&x - &one)) * &s).scale(&Rational::from_integer(4.into()))
}

/// z(x, y) = −(1 − 2x + x² − y)² / (4x(x − 1)(x + y − 1)) in ℚ(x, y).
pub fn z_expr() -> RatExpr {
    RatExpr::new(-z_numerator_base().pow(2), z_denominator()).expect("nonzero denominator")
}

/// `r` as an element of ℚ(x, y).
pub fn r_expr() -> RatExpr {
    r_of(&RatExpr::x(), &RatExpr::y()).expect("x-1 is not identically zero")
}

/// Value of z at a point of ℙ¹×ℙ¹. Numerator and denominator are evaluated
/// as bihomogeneous forms of the common bidegree (4, 2).
pub fn z_of(x: &Ext<FieldElem>, y: &Ext<FieldElem>) -> Result<Ext<FieldElem>> {
    let num = -eval_bihomogeneous(&z_numerator_base(), (2, 1), x, y).pow(2);
    let den = eval_bihomogeneous(&z_denominator(), (4, 2), x, y);
    if !den.is_zero() {
        return Ok(Ext::Finite(num.div(&den).unwrap()));
    }
    if !num.is_zero() {
        return Ok(Ext::Infinity);
    }
    let factors = [
        ("1-2x+x^2-y", z_numerator_base(), (2, 1)),
        ("x", BiPoly::x(), (1, 0)),
        ("x-1", &BiPoly::x() - &BiPoly::one(), (1, 0)),
        (
            "x+y-1",
            &(&BiPoly::x() + &BiPoly::y()) - &BiPoly::one(),
            (1, 1),
        ),
    ];
    let vanishing: Vec<&str> = factors
        .iter()
        .filter(|(_, p, bd)| eval_bihomogeneous(p, *bd, x, y).is_zero())
        .map(|(n, _, _)| *n)
        .collect();
    Err(Error::Indeterminate(format!(
        "z at ({x}, {y}): {} vanish",
        vanishing.join(" and ")
    )))
}

/// The quadratic map F(t) = (t − x)(t − r)/t².
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMap<K> {
    pub x: K,
    pub y: K,
    pub r: K,
    pub numerator: UniPoly<K>,
    pub denominator: UniPoly<K>,
}

/// Critical points `0` and `t_c` with their values `∞` and `F(t_c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalData<K> {
    pub points: [Ext<K>; 2],
    pub values: [Ext<K>; 2],
}

/// Orbit of 0 under F and whether it closes up into a 4-cycle.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleCheck<K> {
    /// `0, F(0), F²(0), F³(0), F⁴(0)`.
    pub orbit: Vec<Ext<K>>,
    pub f1_is_y: bool,
    pub fx_is_zero: bool,
    pub four_cycle: bool,
}

impl<K: Field> FamilyMap<K> {
    pub fn new(x: K, y: K) -> Result<FamilyMap<K>> {
        if x.is_zero() {
            return Err(Error::Degenerate("x = 0, so x*r = 0".into()));
        }
        let r = r_of(&x, &y)?;
        if r.is_zero() {
            return Err(Error::Degenerate("x+y-1 = 0, so x*r = 0".into()));
        }
        let numerator = UniPoly::from_coeffs(
            vec![x.clone() * r.clone(), -(x.clone() + r.clone()), K::one()],
            "t",
        );
        let denominator = UniPoly::monomial(K::one(), 2, "t");
        Ok(FamilyMap {
            x,
            y,
            r,
            numerator,
            denominator,
        })
    }

    pub fn eval(&self, t: &Ext<K>) -> Ext<K> {
        match t {
            Ext::Infinity => Ext::Finite(
                self.numerator
                    .coeff(2)
                    .div(&self.denominator.coeff(2))
                    .unwrap(),
            ),
            Ext::Finite(t) => Ext::from_pair(self.numerator.eval(t), self.denominator.eval(t))
                .expect("numerator and t^2 share no root"),
        }
    }

    /// `t_c = 2xr/(x + r)`.
    pub fn free_critical_point(&self) -> Result<K> {
        let s = self.x.clone() + self.r.clone();
        (K::from_int(2) * self.x.clone() * self.r.clone())
            .div(&s)
            .ok_or_else(|| Error::Degenerate("x+r = 0 puts the critical point at infinity".into()))
    }

    pub fn critical_data(&self) -> Result<CriticalData<K>> {
        let tc = Ext::Finite(self.free_critical_point()?);
        let zero = Ext::Finite(K::zero());
        Ok(CriticalData {
            values: [self.eval(&zero), self.eval(&tc)],
            points: [zero, tc],
        })
    }

    pub fn cycle_check(&self) -> CycleCheck<K> {
        let mut orbit = vec![Ext::Finite(K::zero())];
        for _ in 0..4 {
            let next = self.eval(orbit.last().unwrap());
            orbit.push(next);
        }
        let f1_is_y = self.eval(&Ext::Finite(K::one())) == Ext::Finite(self.y.clone());
        let fx_is_zero = self.eval(&Ext::Finite(self.x.clone())) == Ext::Finite(K::zero());
        let expected = [
            Ext::Finite(K::zero()),
            Ext::Infinity,
            Ext::Finite(K::one()),
            Ext::Finite(self.x.clone()),
            Ext::Finite(K::zero()),
        ];
        let distinct = self.x != K::zero() && self.x != K::one();
        CycleCheck {
            four_cycle: distinct && orbit == expected,
            orbit,
            f1_is_y,
            fx_is_zero,
        }
    }
}

/// F over ℚ(x, y) with symbolic parameters.
pub fn symbolic_family() -> FamilyMap<RatExpr> {
    FamilyMap::new(RatExpr::x(), RatExpr::y()).expect("generic parameters are nondegenerate")
}
