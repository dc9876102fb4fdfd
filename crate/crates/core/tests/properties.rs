use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use per4_core::family::{
    classify_parameter, r_expr, standard_loci, z_expr, z_of, FamilyMap, ParamPoint,
};
use per4_core::field::{int, rat, QuadExt};
use per4_core::poly::{sqrt_poly, BiPoly, UniPoly, Var};
use per4_core::strata::cross_ratio;
use per4_core::surface::{exceptional_limit, paper_model, ChartOrigin, ExceptionalLimit, E_INF};
use per4_core::{Ext, Field, FieldElem, RatExpr, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn point() -> impl Strategy<Value = Ext<Rational>> {
    prop_oneof![1 => Just(Ext::Infinity), 9 => rational().prop_map(Ext::Finite)]
}

fn sqrt5() -> impl Strategy<Value = FieldElem> {
    (rational(), rational())
        .prop_map(|(a, b)| FieldElem::quadratic(&QuadExt::sqrt_of(&BigInt::from(5)).unwrap(), a, b))
}

fn uni() -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(-9i64..=9, 1..6)
        .prop_map(|c| UniPoly::from_coeffs(c.into_iter().map(int).collect(), "t"))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..=3, 0u32..=3, -6i64..=6), 1..5)
        .prop_map(|t| BiPoly::from_int_terms(&t))
}

fn fe(r: Rational) -> Ext<FieldElem> {
    Ext::Finite(FieldElem::Rational(r))
}

/// `z·ȳ` restricted to `ȳ = 0` in the ratio chart of `E_∞`, next to the
/// computed limit.
fn e_inf_limits() -> &'static (RatExpr, ExceptionalLimit) {
    static CACHE: OnceLock<(RatExpr, ExceptionalLimit)> = OnceLock::new();
    CACHE.get_or_init(|| {
        let model = paper_model();
        let chart = model
            .charts
            .iter()
            .find(|c| matches!(c.origin, ChartOrigin::BlowupRatio { center, .. } if model.centers[center].name == E_INF))
            .unwrap();
        let z = z_expr().compose(&chart.to_base[0], &chart.to_base[1]).unwrap();
        let on_divisor = (z * RatExpr::y()).restrict(Var::Y, &int(0)).unwrap();
        (on_divisor, exceptional_limit(&model, E_INF).unwrap())
    })
}

fn mobius(p: &Ext<Rational>, m: &[Rational; 4]) -> Ext<Rational> {
    let (a, b) = p.pair();
    Ext::from_pair(
        m[0].clone() * a.clone() + m[1].clone() * b.clone(),
        m[2].clone() * a + m[3].clone() * b,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quadratic_field_axioms(a in sqrt5(), b in sqrt5(), c in sqrt5()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if let Some(i) = a.inv() {
            prop_assert!((a * i).is_one());
        }
    }

    #[test]
    fn cross_ratio_is_mobius_invariant(
        pts in prop::array::uniform4(point()),
        m in prop::array::uniform4(rational()),
    ) {
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j])));
        prop_assume!(!(m[0].clone() * m[3].clone() - m[1].clone() * m[2].clone()).is_zero());
        let before = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let moved: Vec<_> = pts.iter().map(|p| mobius(p, &m)).collect();
        let after = cross_ratio(&moved[0], &moved[1], &moved[2], &moved[3]).unwrap();
        prop_assert_eq!(&before, &after);
        prop_assert!(!before.degenerate);
        let swapped = cross_ratio(&pts[0], &pts[1], &pts[3], &pts[2]).unwrap().value;
        prop_assert_eq!(before.value.recip(), swapped);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn division_with_remainder(a in uni(), b in uni()) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in uni(), b in uni()) {
        prop_assume!(a.degree().unwrap_or(0) > 0 && b.degree().unwrap_or(0) > 0);
        let res = a.resultant(&b).unwrap();
        let g = a.gcd(&b);
        prop_assert_eq!(res.is_zero(), g.degree().unwrap_or(0) > 0);
    }

    #[test]
    fn random_parameters_follow_the_marked_orbit(x in rational(), y in rational()) {
        let p = ParamPoint::rational(x.clone(), y.clone());
        prop_assume!(classify_parameter(&p, &standard_loci()).is_interior());
        let f = FamilyMap::new(x.clone(), y.clone()).unwrap();
        let cycle = f.cycle_check();
        prop_assert!(cycle.f1_is_y && cycle.fx_is_zero);
        prop_assert_eq!(cycle.four_cycle, x == y);
        if classify_parameter(&ParamPoint::rational(x.clone(), x.clone()), &standard_loci()).is_interior() {
            prop_assert!(FamilyMap::new(x.clone(), x.clone()).unwrap().cycle_check().four_cycle);
        }
        let value = f.critical_data().unwrap().values[1].clone();
        let z = z_of(&fe(x), &fe(y.clone())).unwrap();
        prop_assert_eq!(value.map(|v| FieldElem::Rational(v.clone())), z.clone());
        for bad in [fe(int(0)), fe(int(1)), fe(y), Ext::Infinity] {
            prop_assert_ne!(&z, &bad);
        }
    }

    #[test]
    fn level_sets_lie_on_their_curves(x in nonzero_rational()) {
        prop_assume!(x != int(1) && x != rat(1, 2) && x != int(-1));
        let one = int(1);
        let on_z1 = (x.clone() - one.clone()) * (x.clone() - one.clone());
        let on_z2 = one.clone() - x.clone() * x.clone();
        let on_z4 = on_z1.clone() / (one.clone() - int(2) * x.clone());
        for (y, target) in [(on_z1, fe(int(0))), (on_z2, fe(int(1))), (on_z4.clone(), fe(on_z4))] {
            match z_of(&fe(x.clone()), &fe(y.clone())) {
                Ok(z) => prop_assert_eq!(z, target),
                Err(_) => prop_assert!(!classify_parameter(&ParamPoint::rational(x.clone(), y), &standard_loci()).is_interior()),
            }
        }
    }

    #[test]
    fn limit_along_e_inf(u in nonzero_rational()) {
        prop_assume!(u != int(-1) && u != rat(-1, 2));
        let (on_divisor, limit) = e_inf_limits();
        let at_u = on_divisor.eval_in(&u, &int(0)).unwrap();
        prop_assert_eq!(at_u.map(|v| FieldElem::Rational(v.clone())), limit.eval(&fe(u)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn square_roots_round_trip(p in bipoly()) {
        prop_assume!(!p.is_zero());
        let r = sqrt_poly(&(&p * &p)).unwrap();
        prop_assert!(r == p || r == -&p);
    }
}

#[test]
fn dividing_the_numerator_by_t() {
    let x = RatExpr::x();
    let r = r_expr();
    let n = UniPoly::from_coeffs(
        vec![
            x.clone() * r.clone(),
            -(x.clone() + r.clone()),
            RatExpr::one(),
        ],
        "t",
    );
    let (quo, rem) = n.divmod(&UniPoly::var("t")).unwrap();
    assert_eq!(
        quo,
        UniPoly::from_coeffs(vec![-(x.clone() + r.clone()), RatExpr::one()], "t")
    );
    assert_eq!(rem, UniPoly::constant(x * r, "t"));
}
