use crate::error::Result;
use crate::family::{standard_loci, LocusComponent};
use crate::field::int;
use crate::poly::BiPoly;
use crate::surface::model::{BlowupSpec, Mobius, SurfaceModel};

pub const VHAT: &str = "Vhat";
pub const E_0: &str = "E_0";
pub const E_1: &str = "E_1";
pub const E_INF: &str = "E_inf";
pub const E_Q: &str = "E_q";

/// ℙ¹×ℙ¹ carrying the diagonal and the ten components of ℒ ∪ 𝒵.
pub fn base_model(loci: &[LocusComponent]) -> SurfaceModel {
    let mut curves = vec![(
        VHAT.to_string(),
        BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]),
        (1, 1),
    )];
    curves.extend(
        loci.iter()
            .map(|l| (l.id.name().to_string(), l.affine.clone(), l.bidegree)),
    );
    SurfaceModel::new(curves)
}

/// The blowups in order: `(0,0)`, `(1,1)`, `(∞,∞)`, then the point
/// `q = Ê_∞ ∩ L̂_{y=∞}`, which sits at the origin of the slope chart of `E_∞`
/// with coordinates `(x̄, ū)`, `ȳ = ū·x̄`.
pub fn blowup_specs() -> Vec<BlowupSpec> {
    let slope = Mobius::new(0, 1, 1, 0);
    vec![
        BlowupSpec::new(E_0, 0, [int(0), int(0)])
            .slope_names("x", "s0")
            .ratio_names("w0", "y")
            .display(slope.clone(), "s"),
        BlowupSpec::new(E_1, 0, [int(1), int(1)])
            .slope_names("a1", "s1")
            .ratio_names("w1", "b1")
            .display(slope, "s"),
        BlowupSpec::new(E_INF, 3, [int(0), int(0)])
            .slope_names("xbar", "ubar")
            .ratio_names("u", "ybar")
            .display(Mobius::identity(), "u"),
        BlowupSpec::new(E_Q, 8, [int(0), int(0)])
            .slope_names("xbar", "s_q")
            .ratio_names("w_q", "ubar")
            .display(Mobius::new(-1, 1, 0, 1), "v"),
    ]
}

/// The model after each prefix of the blowup sequence, starting with
/// ℙ¹×ℙ¹ itself.
pub fn paper_model_steps_with(loci: &[LocusComponent]) -> Result<Vec<SurfaceModel>> {
    let mut steps = vec![base_model(loci)];
    for spec in blowup_specs() {
        let next = steps.last().unwrap().blow_up(spec)?;
        steps.push(next);
    }
    Ok(steps)
}

pub fn paper_model_steps() -> Vec<SurfaceModel> {
    paper_model_steps_with(&standard_loci()).expect("fixed blowup sequence")
}

/// The surface X̂ obtained by the four blowups.
pub fn paper_model() -> SurfaceModel {
    paper_model_steps().pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charts_of_the_model() {
        let m = paper_model();
        assert_eq!(m.charts.len(), 12);
        assert_eq!(m.charts[8].coords, ["xbar".to_string(), "ubar".to_string()]);
        assert_eq!(m.charts[11].name, "E_q_ratio");
        assert_eq!(m.centers.len(), 4);
    }

    #[test]
    fn self_intersections() {
        let m = paper_model();
        assert_eq!(m.self_intersection(VHAT).unwrap(), -1);
        assert_eq!(m.self_intersection(E_INF).unwrap(), -2);
        assert_eq!(m.self_intersection(E_Q).unwrap(), -1);
        assert_eq!(m.self_intersection("L_yinf").unwrap(), -2);
        assert_eq!(m.self_intersection(E_0).unwrap(), -1);
        assert_eq!(m.intersection_number(VHAT, E_Q).unwrap(), 0);
        assert_eq!(m.intersection_number(E_INF, E_Q).unwrap(), 1);
    }

    #[test]
    fn diagonal_total_transform() {
        let m = paper_model();
        let t = m.total_transform(VHAT).unwrap();
        let names: Vec<(&str, i64)> = t.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        assert_eq!(
            names,
            vec![
                ("E_0", 1),
                ("E_1", 1),
                ("E_inf", 1),
                ("E_q", 1),
                ("Vhat", 1)
            ]
        );
    }
}
