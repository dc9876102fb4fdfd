use std::collections::BTreeMap;

use serde_json::{json, Value};

use per4_core::family::{classify_parameter, FamilyMap, LocusComponent, ParamPoint};
use per4_core::field::parse_rational;
use per4_core::strata::{enumerate_boundary_strata, equalizer_strata, EqualizerStatus};
use per4_core::surface::{
    exceptional_limits, incidence_graph, paper_model_steps_with, DivisorKind, E_INF, E_Q, VHAT,
};
use per4_core::{Ext, FieldElem, Rational};

/// A coordinate given on the command line: a rational or `inf`.
pub fn parse_coordinate(s: &str) -> Result<Ext<Rational>, String> {
    if s.trim().eq_ignore_ascii_case("inf") {
        return Ok(Ext::Infinity);
    }
    parse_rational(s)
        .map(Ext::Finite)
        .ok_or_else(|| format!("{s:?} is neither a rational number nor inf"))
}

fn lift(e: &Ext<Rational>) -> Ext<FieldElem> {
    e.map(|r| FieldElem::Rational(r.clone()))
}

pub fn blowup(loci: &[LocusComponent]) -> Result<Value, String> {
    let steps = paper_model_steps_with(loci).map_err(|e| e.to_string())?;
    let m = steps.last().expect("base surface");
    let charts: Vec<Value> = m
        .charts
        .iter()
        .map(|c| {
            let names = [c.coords[0].as_str(), c.coords[1].as_str()];
            json!({
                "name": c.name,
                "coords": c.coords,
                "to_base": [c.to_base[0].display_with(names), c.to_base[1].display_with(names)],
            })
        })
        .collect();
    let centers: Vec<Value> = m
        .centers
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "chart": m.charts[c.chart].name,
                "coords": [c.coords[0].to_string(), c.coords[1].to_string()],
                "point": m.describe(&c.canonical),
            })
        })
        .collect();
    let mut divisors = BTreeMap::new();
    for d in &m.divisors {
        let kind = match &d.kind {
            DivisorKind::Base { bidegree, .. } => {
                json!({ "kind": "proper_transform", "bidegree": bidegree })
            }
            DivisorKind::Exceptional { .. } => {
                json!({ "kind": "exceptional", "parameter": d.display_var })
            }
        };
        let mut entry = kind;
        entry["self_intersection"] =
            json!(m.self_intersection(&d.name).map_err(|e| e.to_string())?);
        divisors.insert(d.name.clone(), entry);
    }
    let names: Vec<&str> = m.divisors.iter().map(|d| d.name.as_str()).collect();
    let matrix = m.intersection_matrix(&names).map_err(|e| e.to_string())?;
    let graph = incidence_graph(m, &[VHAT, E_INF, E_Q]).map_err(|e| e.to_string())?;
    let edges: Vec<[&str; 2]> = graph
        .edges
        .iter()
        .map(|e| [e.a.as_str(), e.b.as_str()])
        .collect();
    let limits = exceptional_limits(m).map_err(|e| e.to_string())?;
    let formula = |name: &str| {
        limits
            .iter()
            .find(|l| l.divisor == name)
            .map(|l| l.formula.clone())
    };
    let total = m.total_transform(VHAT).map_err(|e| e.to_string())?;
    Ok(json!({
        "charts": charts,
        "centers": centers,
        "divisors": divisors,
        "intersection_matrix": { "names": names, "matrix": matrix },
        "incidence": { "vertices": graph.vertices, "edges": edges, "consistent": graph.consistent },
        "total_transform_of_Vhat": total,
        "z_inf": formula(E_INF),
        "z_q": formula(E_Q),
        "limits": limits,
    }))
}

pub fn strata() -> Result<Value, String> {
    let report = equalizer_strata();
    let domain = enumerate_boundary_strata(&["0", "1", "inf", "x"]).map_err(|e| e.to_string())?;
    let counts = |s: EqualizerStatus| report.with_status(s).len();
    Ok(json!({
        "boundary_strata": report.strata,
        "admitted": report.admitted,
        "status_counts": {
            "in_av": counts(EqualizerStatus::InAv),
            "in_closure": counts(EqualizerStatus::InClosure),
            "isolated": counts(EqualizerStatus::Isolated),
            "conditional": counts(EqualizerStatus::Conditional),
            "excluded": counts(EqualizerStatus::Excluded),
        },
        "domain_strata": domain,
    }))
}

pub fn classify(
    x: &Ext<Rational>,
    y: &Ext<Rational>,
    loci: &[LocusComponent],
) -> Result<Value, String> {
    let c = classify_parameter(&ParamPoint::new(lift(x), lift(y)), loci);
    let mut out = json!({
        "point": [x.to_string(), y.to_string()],
        "kind": c.kind,
        "vanishing": c.vanishing,
    });
    if let (true, Ext::Finite(xv), Ext::Finite(yv)) = (c.is_interior(), x, y) {
        let f = FamilyMap::new(xv.clone(), yv.clone()).map_err(|e| e.to_string())?;
        let crit = f.critical_data().map_err(|e| e.to_string())?;
        let cycle = f.cycle_check();
        out["r"] = json!(f.r.to_string());
        out["t_c"] = json!(crit.points[1].to_string());
        out["z"] = json!(crit.values[1].to_string());
        out["cycle"] = json!({
            "orbit_of_0": cycle.orbit.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "f1_is_y": cycle.f1_is_y,
            "fx_is_zero": cycle.fx_is_zero,
            "four_cycle": cycle.four_cycle,
        });
        out["cycle_verified"] = json!(
            cycle.f1_is_y
                && cycle.fx_is_zero
                && cycle.orbit[..3]
                    == [
                        Ext::Finite(Rational::from_integer(0.into())),
                        Ext::Infinity,
                        Ext::Finite(Rational::from_integer(1.into())),
                    ]
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use per4_core::family::standard_loci;

    #[test]
    fn classify_interior_point() {
        let v = classify(
            &parse_coordinate("2").unwrap(),
            &parse_coordinate("3").unwrap(),
            &standard_loci(),
        )
        .unwrap();
        assert_eq!(v["kind"], "interior");
        assert_eq!(v["z"], "-1/8");
        assert_eq!(v["cycle_verified"], true);
    }

    #[test]
    fn classify_on_z3() {
        let h = parse_coordinate("1/2").unwrap();
        let v = classify(&h, &h, &standard_loci()).unwrap();
        assert_eq!(v["vanishing"], json!(["Z3"]));
        assert!(v.get("z").is_none());
    }

    #[test]
    fn coordinates() {
        assert_eq!(parse_coordinate("inf").unwrap(), Ext::Infinity);
        assert!(parse_coordinate("two").is_err());
    }
}
