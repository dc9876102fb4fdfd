use per4_core::field::rat;
use per4_core::strata::{
    equalizer_strata, kappa_map, lower_image, upper_images, EqualizerStatus, KappaSource,
    MarkedTree, Subtype,
};
use per4_core::surface::{exceptional_limits, incidence_graph, paper_model, E_INF, E_Q, VHAT};
use per4_core::{Ext, FieldElem};

#[test]
fn limits_serialize_with_formulas() {
    let limits = exceptional_limits(&paper_model()).unwrap();
    let json = serde_json::to_value(&limits).unwrap();
    let names: Vec<&str> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["divisor"].as_str().unwrap())
        .collect();
    assert_eq!(names, vec!["E_0", "E_1", "E_inf", "E_q"]);
    assert_eq!(json[2]["formula"], "-1/(4*u*(1+u))");
    assert_eq!(json[3]["formula"], "-v^2/(4*(1-v))");
}

#[test]
fn special_configuration_is_a_chain() {
    let g = incidence_graph(&paper_model(), &[VHAT, E_INF, E_Q]).unwrap();
    assert!(g.is_path(&[VHAT, E_INF, E_Q]));
    assert!(!g.has_edge(VHAT, E_Q));
}

#[test]
fn equalizer_report_round_trip() {
    let r = equalizer_strata();
    assert_eq!(r.strata.len(), 25);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["admitted"].as_array().unwrap().len(), 3);
    let c = r.find("{0,1,y}|{inf,z}").unwrap();
    assert_eq!(c.subtype, Some(Subtype::C));
    let v = c.equalizer.as_ref().unwrap();
    assert_eq!(v.status, EqualizerStatus::Conditional);
    assert_eq!(v.matching.as_ref().unwrap().solutions, vec!["x=1/2"]);
}

#[test]
fn lower_and_upper_images_agree_on_a_1() {
    let t = MarkedTree::chain(&[&["0", "1"], &["inf", "y", "z"]]).unwrap();
    let low = lower_image(&t).tree.shape();
    assert!(upper_images(&t)
        .unwrap()
        .iter()
        .any(|s| s.tree.shape() == low));
}

#[test]
fn kappa_images_land_in_the_admitted_strata() {
    let admitted = equalizer_strata().admitted;
    let q = |n, d| Ext::Finite(FieldElem::Rational(rat(n, d)));
    for (which, v) in [
        (KappaSource::EInf, q(1, 1)),
        (KappaSource::EInf, q(3, 2)),
        (KappaSource::EQ, q(1, 1)),
        (KappaSource::EQ, q(3, 1)),
    ] {
        let p = kappa_map(which, &v).unwrap();
        assert!(admitted.contains(&p.partition), "{}", p.partition);
    }
}
