use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use per4_core::family::{
    certify_loci, diagonal_punctures, verify_cycle_identities, LocusComponent, LocusId,
};
use per4_core::field::int;
use per4_core::strata::{
    enumerate_boundary_strata, equalizer_strata, kappa_map, EqualizerStatus, KappaSource,
    StratumRecord,
};
use per4_core::surface::{
    claimed_z_q, exceptional_limit, incidence_graph, normal_crossing_check, paper_model_steps_with,
    SurfaceModel, E_0, E_1, E_INF, E_Q, VHAT,
};
use per4_core::{Ext, FieldElem, RatExpr, Result};

use crate::report::CheckRecord;

type Group<'a> = Box<dyn FnOnce() -> Vec<CheckRecord> + Send + 'a>;

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_matches('-').to_string()
}

fn attempt(name: &str, f: impl FnOnce() -> Result<CheckRecord>) -> CheckRecord {
    f().unwrap_or_else(|e| CheckRecord::new(name, false, format!("error: {e}"), Value::Null))
}

fn q(n: i64, d: i64) -> Ext<FieldElem> {
    Ext::Finite(FieldElem::Rational(per4_core::field::rat(n, d)))
}

fn certificates(loci: &[LocusComponent]) -> Vec<CheckRecord> {
    let c = certify_loci(loci);
    let mut out: Vec<CheckRecord> = c
        .squares
        .iter()
        .map(|s| {
            let detail = format!(
                "numerator of {} is minus the square of {}",
                s.target,
                s.expected.name()
            );
            CheckRecord::new(s.name, s.holds, detail, json!(s))
        })
        .collect();
    out.push(CheckRecord::new(
        c.poles.name,
        c.poles.holds,
        "z has poles exactly along x=0, x=1 and x+y-1=0",
        json!(c.poles),
    ));
    out
}

fn identities() -> Vec<CheckRecord> {
    verify_cycle_identities()
        .into_iter()
        .map(|c| {
            let name = format!("cycle-{}", slug(c.name));
            CheckRecord::new(&name, c.holds, c.statement, json!(c))
        })
        .collect()
}

fn rational_formula_matches(f: &RatExpr, g: &RatExpr) -> bool {
    (f.clone() - g.clone()).is_zero()
}

fn limits(model: &SurfaceModel) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    out.push(attempt("z-inf-limit", || {
        let l = exceptional_limit(model, E_INF)?;
        let u = RatExpr::x();
        let want = (-RatExpr::one())
            .checked_div(&(RatExpr::constant(int(4)) * u.clone() * (RatExpr::one() + u)))?;
        Ok(CheckRecord::new(
            "z-inf-limit",
            rational_formula_matches(&l.restriction, &want) && l.order == -1,
            format!("z = {} / ybar along E_inf", l.formula),
            json!(l),
        ))
    }));
    out.push(attempt("e-inf-degeneracy-set", || {
        let l = exceptional_limit(model, E_INF)?;
        let want = vec![q(-1, 1), q(-1, 2), q(0, 1), Ext::Infinity];
        Ok(CheckRecord::new(
            "e-inf-degeneracy-set",
            l.degeneracy_values() == want,
            "datum degenerates exactly at u = -1, -1/2, 0, inf",
            json!(l.degeneracy),
        ))
    }));
    out.push(attempt("e-q-degeneracy-set", || {
        let l = exceptional_limit(model, E_Q)?;
        let one = q(1, 1);
        let others: Vec<_> = l
            .degeneracy
            .iter()
            .filter(|d| d.value != one && d.value != Ext::Infinity)
            .collect();
        let pass = l.is_degenerate(&one)
            && l.is_degenerate(&Ext::Infinity)
            && others.len() == 2
            && others
                .iter()
                .all(|d| d.collisions.iter().any(|c| *c == "z=0" || *c == "z=1"));
        let values: Vec<String> = l
            .degeneracy_values()
            .iter()
            .map(|v| v.to_string())
            .collect();
        Ok(CheckRecord::new(
            "e-q-degeneracy-set",
            pass,
            format!("datum degenerates at v in {{{}}}", values.join(", ")),
            json!(l.degeneracy),
        ))
    }));
    out.push(attempt("z-q-published-formula", || {
        let l = exceptional_limit(model, E_Q)?;
        let claimed = claimed_z_q();
        let agree = rational_formula_matches(&l.restriction, &claimed);
        let cert = json!({
            "computed": l.formula,
            "published": "-v/(4*(1-v)^2)",
            "order": l.order,
            "remainder_vanishes": l.remainder_vanishes,
        });
        Ok(if agree {
            CheckRecord::new(
                "z-q-published-formula",
                true,
                "computed limit matches",
                cert,
            )
        } else {
            CheckRecord::flagged(
                "z-q-published-formula",
                format!(
                    "computed limit along E_q is {}, not -v/(4*(1-v)^2)",
                    l.formula
                ),
                cert,
            )
        })
    }));
    out
}

fn surface(steps: &[SurfaceModel]) -> Vec<CheckRecord> {
    let m = steps.last().expect("at least the base surface");
    let mut out = Vec::new();
    out.push(attempt("blowup-self-intersections", || {
        let got = [
            m.self_intersection(VHAT)?,
            m.self_intersection(E_INF)?,
            m.self_intersection(E_Q)?,
        ];
        Ok(CheckRecord::new(
            "blowup-self-intersections",
            got == [-1, -2, -1],
            format!(
                "Vhat^2 = {}, E_inf^2 = {}, E_q^2 = {}",
                got[0], got[1], got[2]
            ),
            json!({ VHAT: got[0], E_INF: got[1], E_Q: got[2] }),
        ))
    }));
    out.push(attempt("blowup-pullback-conservation", || {
        let names: Vec<&str> = LocusId::ALL
            .iter()
            .map(|l| l.name())
            .chain([VHAT])
            .collect();
        let base = &steps[0];
        let mut broken = Vec::new();
        let mut pairs = 0;
        for (k, step) in steps.iter().enumerate() {
            for (i, a) in names.iter().enumerate() {
                let ca = step.class_of_combination(&step.total_transform(a)?)?;
                for b in &names[i..] {
                    let cb = step.class_of_combination(&step.total_transform(b)?)?;
                    if ca.dot(&cb) != base.intersection_number(a, b)? {
                        broken.push(format!("{a}.{b} after blowup {k}"));
                    }
                    pairs += 1;
                }
            }
        }
        Ok(CheckRecord::new(
            "blowup-pullback-conservation",
            broken.is_empty(),
            format!("{pairs} pairs of total transforms keep their intersection numbers"),
            json!({ "pairs": pairs, "broken": broken }),
        ))
    }));
    out.push(attempt("blowup-e-inf-meets-e-q", || {
        let pts = m.intersections_by_name(E_INF, E_Q)?;
        let at: Vec<&str> = pts.iter().map(|p| p.location.as_str()).collect();
        Ok(CheckRecord::new(
            "blowup-e-inf-meets-e-q",
            at == ["E_q: v=1"],
            format!("E_inf meets E_q at {at:?}"),
            json!(at),
        ))
    }));
    out.push(attempt("blowup-vhat-misses-e-q", || {
        let pts = m.intersections_by_name(VHAT, E_Q)?;
        Ok(CheckRecord::new(
            "blowup-vhat-misses-e-q",
            pts.is_empty(),
            "Vhat and E_q are disjoint",
            json!(pts.iter().map(|p| &p.location).collect::<Vec<_>>()),
        ))
    }));
    out.push(attempt("incidence-path", || {
        let g = incidence_graph(m, &[VHAT, E_INF, E_Q])?;
        let edges: Vec<[&str; 2]> = g
            .edges
            .iter()
            .map(|e| [e.a.as_str(), e.b.as_str()])
            .collect();
        Ok(CheckRecord::new(
            "incidence-path",
            g.consistent && g.is_path(&[VHAT, E_INF, E_Q]),
            "Vhat - E_inf - E_q is a chain",
            json!(edges),
        ))
    }));
    let lines_and_curves: Vec<&str> = LocusId::ALL.iter().map(|l| l.name()).collect();
    out.push(attempt("normal-crossing-before-blowups", || {
        let r = normal_crossing_check(&steps[0], &[VHAT], &lines_and_curves)?;
        let w = r
            .witnesses
            .iter()
            .find(|w| w.location == "(inf, inf)" && w.divisors.len() >= 3);
        Ok(CheckRecord::new(
            "normal-crossing-before-blowups",
            !r.holds && w.is_some(),
            "crossings fail at (inf, inf) on the plane",
            json!(r.witnesses),
        ))
    }));
    out.push(attempt("normal-crossing-after-blowups", || {
        let r = normal_crossing_check(m, &[VHAT, E_0, E_1, E_INF, E_Q], &lines_and_curves)?;
        Ok(CheckRecord::new(
            "normal-crossing-after-blowups",
            r.holds && r.unresolved.is_empty(),
            format!("{} intersection points checked", r.points_checked),
            json!(r),
        ))
    }));
    out.extend(limits(m));
    out
}

fn subtype_sizes(strata: &[StratumRecord]) -> Value {
    let mut sizes = serde_json::Map::new();
    for s in strata.iter().filter_map(|s| s.subtype) {
        let e = sizes.entry(s.name()).or_insert(json!(0));
        *e = json!(e.as_u64().unwrap() + 1);
    }
    Value::Object(sizes)
}

fn strata() -> Vec<CheckRecord> {
    let mut out = Vec::new();
    out.push(attempt("strata-count", || {
        let five = enumerate_boundary_strata(&["0", "1", "inf", "y", "z"])?;
        let four = enumerate_boundary_strata(&["0", "1", "inf", "x"])?;
        Ok(CheckRecord::new(
            "strata-count",
            five.len() == 25 && four.len() == 3,
            format!(
                "{} boundary strata on five marks, {} on four",
                five.len(),
                four.len()
            ),
            json!({ "five": five.len(), "four": four.len(), "subtypes": subtype_sizes(&five) }),
        ))
    }));
    let report = equalizer_strata();
    let admitted: BTreeSet<&str> = report.admitted.iter().map(String::as_str).collect();
    let want = BTreeSet::from(["{0,1}|{inf,y,z}", "{0,1,z}|{inf,y}", "{0,1}|{z}|{inf,y}"]);
    out.push(CheckRecord::new(
        "equalizer-admitted",
        admitted == want,
        "A_1, A_2 and their corner",
        json!(report.admitted),
    ));
    let verdict = |partition: &str| {
        report
            .find(partition)
            .and_then(|s| s.equalizer.clone())
            .map_or(Value::Null, |v| json!(v))
    };
    let c2 = verdict("{0,1,y}|{inf,z}");
    out.push(CheckRecord::flagged(
        "2c-cross-ratio",
        "type 2c meets the equalizer where the matching equation has a solution",
        c2,
    ));
    let d: Vec<Value> = report
        .with_status(EqualizerStatus::Conditional)
        .iter()
        .filter(|s| s.subtype == Some(per4_core::strata::Subtype::D))
        .map(|s| json!({ "partition": s.partition, "verdict": s.equalizer }))
        .collect();
    out.push(CheckRecord::flagged(
        "2d-cross-ratio",
        "type 2d strata admit solutions of their matching equations",
        json!(d),
    ));
    let isolated: Vec<&str> = report
        .with_status(EqualizerStatus::Isolated)
        .iter()
        .map(|s| s.partition.as_str())
        .collect();
    out.push(CheckRecord::flagged(
        "equalizer-isolated-points",
        format!("{} point strata off the listed closures", isolated.len()),
        json!(isolated),
    ));
    out.push(attempt("kappa-maps", || {
        let a = kappa_map(KappaSource::EInf, &q(1, 1))?;
        let corner = kappa_map(KappaSource::EQ, &q(1, 1))?;
        let b = kappa_map(KappaSource::EQ, &q(3, 1))?;
        let pass = a.z == q(-1, 8)
            && admitted.contains(a.partition.as_str())
            && corner.partition == "{0,1}|{z}|{inf,y}"
            && admitted.contains(b.partition.as_str());
        Ok(CheckRecord::new(
            "kappa-maps",
            pass,
            "kappa_inf(1), kappa_q(1) and kappa_q(3) land in the admitted strata",
            json!([a, corner, b]),
        ))
    }));
    out
}

fn diagonal(loci: &[LocusComponent]) -> Vec<CheckRecord> {
    vec![attempt("diagonal-punctures", || {
        let groups = diagonal_punctures(loci)?;
        let names: BTreeSet<&str> = groups
            .iter()
            .map(|g| g.minimal_polynomial.as_str())
            .collect();
        let want = BTreeSet::from([
            "x",
            "x-1",
            "x=inf",
            "x^2-3*x+1",
            "x^2+x-1",
            "2*x-1",
            "3*x^2-3*x+1",
        ]);
        let points = |on_l: bool| -> usize {
            groups
                .iter()
                .filter(|g| g.on_l == on_l && g.real)
                .map(|g| g.points.len())
                .sum()
        };
        let complex = groups.iter().filter(|g| !g.real).count();
        Ok(CheckRecord::new(
            "diagonal-punctures",
            names == want && points(true) == 3 && points(false) == 5 && complex == 1,
            "the diagonal meets the loci in 3 real L-points, 5 real Z-points and one complex pair",
            json!(groups),
        ))
    })]
}

/// Runs every check against the given registry of locus equations, each
/// group on its own thread, and returns the records sorted by name.
pub fn verify_with(loci: &[LocusComponent]) -> std::result::Result<Vec<CheckRecord>, String> {
    let steps = paper_model_steps_with(loci);
    let groups: Vec<Group> = vec![
        Box::new(|| certificates(loci)),
        Box::new(identities),
        Box::new(|| match &steps {
            Ok(s) => surface(s),
            Err(e) => vec![CheckRecord::new(
                "blowup-model",
                false,
                format!("error: {e}"),
                Value::Null,
            )],
        }),
        Box::new(strata),
        Box::new(|| diagonal(loci)),
    ];
    let mut out = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = groups.into_iter().map(|g| scope.spawn(g)).collect();
        for h in handles {
            match h.join() {
                Ok(records) => out.extend(records),
                Err(_) => return Err("a check panicked".to_string()),
            }
        }
        Ok(())
    })?;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
