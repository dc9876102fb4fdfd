use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::z_expr;
use crate::field::{int, Ext, FieldElem, Rational};
use crate::poly::{exact_roots, BiPoly, RatExpr, UniPoly, Var};
use crate::surface::model::{ChartOrigin, DivisorKind, Mobius, SurfaceModel};

/// A parameter value on an exceptional divisor where the limiting datum
/// collides with one of the marked values `0`, `1`, `∞`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerateValue {
    pub value: Ext<FieldElem>,
    pub collisions: Vec<&'static str>,
}

/// Behavior of z along an exceptional divisor `E = {b = 0}`: z = bᵏ·g with
/// `g|_E` a function of the display parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExceptionalLimit {
    pub divisor: String,
    pub parameter: String,
    pub chart: String,
    pub order: i64,
    #[serde(skip)]
    pub restriction: RatExpr,
    pub formula: String,
    pub degeneracy: Vec<DegenerateValue>,
    /// `z·b⁻ᵏ − g|_E` vanishes along `b = 0`.
    pub remainder_vanishes: bool,
}

impl ExceptionalLimit {
    pub fn degeneracy_values(&self) -> Vec<Ext<FieldElem>> {
        self.degeneracy.iter().map(|d| d.value.clone()).collect()
    }

    pub fn is_degenerate(&self, v: &Ext<FieldElem>) -> bool {
        self.degeneracy.iter().any(|d| &d.value == v)
    }

    pub fn eval(&self, v: &Ext<FieldElem>) -> Result<Ext<FieldElem>> {
        eval_uni_ratio(&self.restriction, v)
    }
}

fn mobius_expr(m: &Mobius) -> RatExpr {
    let c = |r: &Rational| RatExpr::constant(r.clone());
    let t = RatExpr::x();
    let num = c(&m.a) * t.clone() + c(&m.b);
    let den = c(&m.c) * t + c(&m.d);
    num.checked_div(&den).expect("invertible transformation")
}

/// Evaluates a function of `Var::X` at a point of ℙ¹.
pub fn eval_uni_ratio(f: &RatExpr, v: &Ext<FieldElem>) -> Result<Ext<FieldElem>> {
    let (n, d) = f
        .to_uni(Var::X, "t")
        .ok_or_else(|| Error::InvalidArgument("function of one variable expected".into()))?;
    let lift = |p: &UniPoly<Rational>| p.map_coeffs(|c| FieldElem::Rational(c.clone()));
    let (n, d) = (lift(&n), lift(&d));
    match v {
        Ext::Finite(t) => Ext::from_pair(n.eval(t), d.eval(t))
            .ok_or_else(|| Error::Indeterminate(format!("at {t}"))),
        Ext::Infinity => {
            let (dn, dd) = (n.degree().unwrap_or(0), d.degree().unwrap_or(0));
            Ok(match dn.cmp(&dd) {
                std::cmp::Ordering::Less => Ext::Finite(FieldElem::zero()),
                std::cmp::Ordering::Greater => Ext::Infinity,
                std::cmp::Ordering::Equal => {
                    Ext::Finite(n.leading().unwrap().clone() * inv(d.leading().unwrap()))
                }
            })
        }
    }
}

fn inv(x: &FieldElem) -> FieldElem {
    crate::field::Field::inv(x).expect("nonzero")
}

fn sort_key(v: &Ext<FieldElem>) -> (u8, Option<Rational>, String) {
    match v {
        Ext::Finite(FieldElem::Rational(r)) => (0, Some(r.clone()), String::new()),
        Ext::Finite(q) => (1, None, q.to_string()),
        Ext::Infinity => (2, None, String::new()),
    }
}

/// Values of the single variable where `f ∈ {0, 1, ∞}`.
pub fn degeneracy_set(f: &RatExpr) -> Result<Vec<DegenerateValue>> {
    let (n, d) = f
        .to_uni(Var::X, "t")
        .ok_or_else(|| Error::InvalidArgument("function of one variable expected".into()))?;
    let mut out: Vec<DegenerateValue> = Vec::new();
    let mut add =
        |value: Ext<FieldElem>, what: &'static str| match out.iter_mut().find(|d| d.value == value)
        {
            Some(d) => {
                if !d.collisions.contains(&what) {
                    d.collisions.push(what)
                }
            }
            None => out.push(DegenerateValue {
                value,
                collisions: vec![what],
            }),
        };
    for (p, what) in [(&n, "z=0"), (&d, "z=inf"), (&(&n - &d), "z=1")] {
        if p.degree().unwrap_or(0) > 0 {
            for r in exact_roots(p)? {
                add(Ext::Finite(r.value), what);
            }
        }
    }
    if let Ok(at_inf) = eval_uni_ratio(f, &Ext::Infinity) {
        let one = Ext::Finite(FieldElem::one());
        let zero = Ext::Finite(FieldElem::zero());
        if at_inf == zero {
            add(Ext::Infinity, "z=0");
        } else if at_inf == one {
            add(Ext::Infinity, "z=1");
        } else if at_inf.is_infinite() {
            add(Ext::Infinity, "z=inf");
        }
    }
    out.sort_by_key(|a| sort_key(&a.value));
    Ok(out)
}

/// Leading behavior of z along one exceptional divisor, read in the ratio
/// chart of its center and written in the divisor's display coordinate.
pub fn exceptional_limit(model: &SurfaceModel, name: &str) -> Result<ExceptionalLimit> {
    let idx = model.divisor_index(name)?;
    let d = &model.divisors[idx];
    let DivisorKind::Exceptional { center } = d.kind else {
        return Err(Error::InvalidArgument(format!("{name} is not exceptional")));
    };
    let chart_idx = model
        .charts
        .iter()
        .position(|c| {
            c.origin
                == ChartOrigin::BlowupRatio {
                    center,
                    parent: model.centers[center].chart,
                }
        })
        .expect("ratio chart exists");
    let chart = &model.charts[chart_idx];
    let z = z_expr().compose(&chart.to_base[0], &chart.to_base[1])?;
    let (order, lead) = z
        .leading_along(Var::Y)
        .ok_or_else(|| Error::Degenerate("z vanishes identically".into()))?;
    let b_pow = RatExpr::from_poly(BiPoly::y()).pow_i(-order)?;
    let remainder = z * b_pow - lead.clone();
    let remainder_vanishes =
        remainder.is_zero() || remainder.order_along(Var::Y).is_some_and(|k| k >= 1);
    let restriction = lead.compose(&mobius_expr(&d.display.inverse()), &RatExpr::y())?;
    let var = d.display_var.as_str();
    Ok(ExceptionalLimit {
        divisor: name.to_string(),
        parameter: var.to_string(),
        chart: chart.name.clone(),
        order,
        formula: restriction
            .display_factored(Var::X, var)
            .unwrap_or_else(|| restriction.display_with([var, "_"])),
        degeneracy: degeneracy_set(&restriction)?,
        restriction,
        remainder_vanishes,
    })
}

pub fn exceptional_limits(model: &SurfaceModel) -> Result<Vec<ExceptionalLimit>> {
    model
        .centers
        .iter()
        .map(|c| exceptional_limit(model, &c.name))
        .collect()
}

/// The closed form `−v/(4(1−v)²)` that has been put forward for the
/// restriction of z to `E_q`, kept for comparison with the computed one.
pub fn claimed_z_q() -> RatExpr {
    let v = RatExpr::x();
    let one_minus = RatExpr::one() - v.clone();
    (-v).checked_div(&(RatExpr::constant(int(4)) * one_minus.clone() * one_minus))
        .expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::surface::blowups::{paper_model, E_INF, E_Q};

    fn q(n: i64, d: i64) -> Ext<FieldElem> {
        Ext::Finite(FieldElem::Rational(rat(n, d)))
    }

    #[test]
    fn limit_on_e_inf() {
        let l = exceptional_limit(&paper_model(), E_INF).unwrap();
        assert_eq!(l.order, -1);
        assert_eq!(l.formula, "-1/(4*u*(1+u))");
        assert!(l.remainder_vanishes);
        assert_eq!(
            l.degeneracy_values(),
            vec![q(-1, 1), q(-1, 2), q(0, 1), Ext::Infinity]
        );
    }

    #[test]
    fn limit_on_e_q() {
        let l = exceptional_limit(&paper_model(), E_Q).unwrap();
        assert_eq!(l.order, 0);
        assert_eq!(l.formula, "-v^2/(4*(1-v))");
        assert_eq!(
            l.degeneracy_values(),
            vec![q(0, 1), q(1, 1), q(2, 1), Ext::Infinity]
        );
        assert_ne!(l.restriction, claimed_z_q());
        assert_eq!(l.eval(&q(3, 1)).unwrap(), q(9, 8));
    }
}
