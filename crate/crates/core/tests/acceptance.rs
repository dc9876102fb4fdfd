use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use per4_core::family::{
    certify_loci, diagonal_punctures, standard_loci, verify_cycle_identities, LocusId,
};
use per4_core::field::{int, rat};
use per4_core::poly::sqrt_poly;
use per4_core::strata::{cross_ratio, enumerate_boundary_strata, equalizer_strata, MarkedTree};
use per4_core::surface::{
    claimed_z_q, exceptional_limit, normal_crossing_check, paper_model, paper_model_steps, E_0,
    E_1, E_INF, E_Q, VHAT,
};
use per4_core::{BiPoly, Ext, FieldElem, RatExpr, Rational};

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(n: i64, d: i64) -> Ext<FieldElem> {
    Ext::Finite(FieldElem::Rational(rat(n, d)))
}

fn level_set_certificates() -> Outcome {
    let c = certify_loci(&standard_loci());
    for s in &c.squares {
        ensure(
            s.holds,
            format!("{} does not match {:?}", s.name, s.expected),
        )?;
    }
    ensure(c.poles.holds, "z=inf locus is not x=0, x=1, x+y-1=0")?;
    Ok(format!(
        "{} square certificates, poles {:?}",
        c.squares.len(),
        c.poles.factors.iter().map(|f| f.name()).collect::<Vec<_>>()
    ))
}

fn cycle_identities() -> Outcome {
    let checks = verify_cycle_identities();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name).collect();
    ensure(failed.is_empty(), format!("failed: {failed:?}"))?;
    Ok(checks.iter().map(|c| c.name).collect::<Vec<_>>().join(", "))
}

fn exceptional_limits() -> Outcome {
    let model = paper_model();
    let u = RatExpr::x();
    let four = RatExpr::constant(int(4));
    let expected_inf = (-RatExpr::one())
        .checked_div(&(four * u.clone() * (RatExpr::one() + u)))
        .unwrap();
    let inf = exceptional_limit(&model, E_INF).map_err(|e| e.to_string())?;
    ensure(
        (inf.restriction.clone() - expected_inf).is_zero(),
        format!("z_inf(u) = {}", inf.formula),
    )?;
    let want = vec![q(-1, 1), q(-1, 2), q(0, 1), Ext::Infinity];
    ensure(
        inf.degeneracy_values() == want,
        format!("degeneracy set on E_inf {:?}", inf.degeneracy_values()),
    )?;
    let eq = exceptional_limit(&model, E_Q).map_err(|e| e.to_string())?;
    ensure(
        (eq.restriction.clone() - claimed_z_q()).is_zero(),
        format!(
            "z_inf(u) = {} and degeneracy set on E_inf hold, but z_q(v) computes to {} instead of -v/(4*(1-v)^2)",
            inf.formula, eq.formula
        ),
    )?;
    Ok(format!(
        "z_inf(u) = {}, z_q(v) = {}",
        inf.formula, eq.formula
    ))
}

/// Decodes a Prüfer sequence into the edge list of a labeled tree.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if n >= 2 {
        edges.push((rest[0], rest[1]));
    }
    edges
}

fn all_sequences(len: usize, base: usize) -> Vec<Vec<usize>> {
    (0..base.pow(len as u32))
        .map(|mut k| {
            (0..len)
                .map(|_| {
                    let d = k % base;
                    k /= base;
                    d
                })
                .collect()
        })
        .collect()
}

/// Stable trees with at least one node, counted by brute force over labeled
/// trees and mark placements and identified by their splits.
fn brute_force_boundary_count(labels: &[&str]) -> usize {
    let n = labels.len();
    let mut seen: BTreeSet<BTreeSet<Vec<&str>>> = BTreeSet::new();
    for k in 2..=n - 2 {
        for seq in all_sequences(k - 2, k) {
            let edges = prufer_edges(&seq, k);
            for place in all_sequences(n, k) {
                let stable = (0..k).all(|v| {
                    let deg = edges.iter().filter(|&&(a, b)| a == v || b == v).count();
                    deg + place.iter().filter(|&&p| p == v).count() >= 3
                });
                if !stable {
                    continue;
                }
                let mut splits = BTreeSet::new();
                for cut in 0..edges.len() {
                    let mut side = BTreeSet::from([place[0]]);
                    loop {
                        let grow: Vec<usize> = edges
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != cut)
                            .flat_map(|(_, &(a, b))| [(a, b), (b, a)])
                            .filter(|(a, b)| side.contains(a) && !side.contains(b))
                            .map(|(_, b)| b)
                            .collect();
                        if grow.is_empty() {
                            break;
                        }
                        side.extend(grow);
                    }
                    let other: Vec<&str> = (0..n)
                        .filter(|&i| !side.contains(&place[i]))
                        .map(|i| labels[i])
                        .collect();
                    splits.insert(other);
                }
                seen.insert(splits);
            }
        }
    }
    seen.len()
}

fn strata_enumeration() -> Outcome {
    let five = ["0", "1", "inf", "y", "z"];
    let four = ["0", "1", "inf", "x"];
    let got5 = enumerate_boundary_strata(&five)
        .map_err(|e| e.to_string())?
        .len();
    let got4 = enumerate_boundary_strata(&four)
        .map_err(|e| e.to_string())?
        .len();
    let (bf5, bf4) = (
        brute_force_boundary_count(&five),
        brute_force_boundary_count(&four),
    );
    ensure(
        (got5, got4) == (25, 3) && (bf5, bf4) == (25, 3),
        format!("enumerated {got5}/{got4}, brute force {bf5}/{bf4}"),
    )?;
    let report = equalizer_strata();
    let admitted: BTreeSet<&str> = report.admitted.iter().map(String::as_str).collect();
    let want = BTreeSet::from(["{0,1}|{inf,y,z}", "{0,1,z}|{inf,y}", "{0,1}|{z}|{inf,y}"]);
    ensure(admitted == want, format!("equalizer admitted {admitted:?}"))?;
    Ok(format!("25 and 3 strata, equalizer {:?}", report.admitted))
}

fn blowup_intersections() -> Outcome {
    let steps = paper_model_steps();
    let m = steps.last().unwrap();
    let sq = |n: &str| m.self_intersection(n).map_err(|e| e.to_string());
    let got = (sq(VHAT)?, sq(E_INF)?, sq(E_Q)?);
    ensure(got == (-1, -2, -1), format!("self-intersections {got:?}"))?;
    let base = &steps[0];
    let names: Vec<&str> = LocusId::ALL
        .iter()
        .map(|l| l.name())
        .chain([VHAT])
        .collect();
    let mut pairs = 0;
    for (k, step) in steps.iter().enumerate() {
        for a in &names {
            for b in &names {
                let ca = step
                    .class_of_combination(&step.total_transform(a).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let cb = step
                    .class_of_combination(&step.total_transform(b).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let before = base.intersection_number(a, b).map_err(|e| e.to_string())?;
                ensure(
                    ca.dot(&cb) == before,
                    format!("{a}.{b} changes after blowup {k}"),
                )?;
                pairs += 1;
            }
        }
    }
    let meet = m
        .intersections_by_name(E_INF, E_Q)
        .map_err(|e| e.to_string())?;
    ensure(
        meet.len() == 1 && meet[0].location == "E_q: v=1",
        format!(
            "E_inf meets E_q at {:?}",
            meet.iter().map(|p| &p.location).collect::<Vec<_>>()
        ),
    )?;
    let apart = m
        .intersections_by_name(VHAT, E_Q)
        .map_err(|e| e.to_string())?;
    ensure(apart.is_empty(), "Vhat meets E_q")?;
    Ok(format!(
        "squares -1/-2/-1, {pairs} pullback pairs conserved, E_inf.E_q at v=1"
    ))
}

fn normal_crossings() -> Outcome {
    let steps = paper_model_steps();
    let b: Vec<&str> = LocusId::ALL.iter().map(|l| l.name()).collect();
    let pre = normal_crossing_check(&steps[0], &[VHAT], &b).map_err(|e| e.to_string())?;
    let witness = pre
        .witnesses
        .iter()
        .find(|w| w.location == "(inf, inf)" && w.divisors.len() >= 3);
    ensure(
        !pre.holds && witness.is_some(),
        "no failure witnessed at (inf, inf)",
    )?;
    let a = [VHAT, E_0, E_1, E_INF, E_Q];
    let post = normal_crossing_check(steps.last().unwrap(), &a, &b).map_err(|e| e.to_string())?;
    ensure(
        post.holds && post.unresolved.is_empty(),
        format!(
            "{} witnesses, {} unresolved",
            post.witnesses.len(),
            post.unresolved.len()
        ),
    )?;
    Ok(format!(
        "{} branches at (inf, inf) before, {} points normal after",
        witness.unwrap().divisors.len(),
        post.points_checked
    ))
}

fn diagonal() -> Outcome {
    let groups = diagonal_punctures(&standard_loci()).map_err(|e| e.to_string())?;
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
    ensure(names == want, format!("minimal polynomials {names:?}"))?;
    let count = |f: &dyn Fn(&per4_core::family::DiagonalPuncture) -> bool| -> usize {
        groups.iter().filter(|g| f(g)).map(|g| g.points.len()).sum()
    };
    let l_points = count(&|g| g.on_l && g.real);
    let z_real = count(&|g| !g.on_l && g.real);
    let complex = groups.iter().filter(|g| !g.real).count();
    ensure(
        (l_points, z_real, complex) == (3, 5, 1),
        format!("{l_points} L-points, {z_real} real Z-punctures, {complex} complex groups"),
    )?;
    Ok("3 real L-points, 5 real Z-punctures, one complex pair".into())
}

fn mobius(p: &Ext<Rational>, m: &[Rational; 4]) -> Ext<Rational> {
    let (a, b) = p.pair();
    Ext::from_pair(
        m[0].clone() * a.clone() + m[1].clone() * b.clone(),
        m[2].clone() * a + m[3].clone() * b,
    )
    .unwrap()
}

fn random_point(rng: &mut ChaCha8Rng) -> Ext<Rational> {
    if rng.gen_ratio(1, 10) {
        Ext::Infinity
    } else {
        Ext::Finite(rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
    }
}

fn mobius_suite(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let mut done = 0;
    while done < 1000 {
        let pts: Vec<Ext<Rational>> = (0..4).map(|_| random_point(rng)).collect();
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
        let m: [Rational; 4] =
            std::array::from_fn(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
        if !distinct || (m[0].clone() * m[3].clone() - m[1].clone() * m[2].clone()).is_zero() {
            continue;
        }
        let before = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])
            .unwrap()
            .value;
        let moved: Vec<Ext<Rational>> = pts.iter().map(|p| mobius(p, &m)).collect();
        let after = cross_ratio(&moved[0], &moved[1], &moved[2], &moved[3])
            .unwrap()
            .value;
        ensure(before == after, format!("cross ratio moved for {pts:?}"))?;
        let swapped = cross_ratio(&pts[0], &pts[1], &pts[3], &pts[2])
            .unwrap()
            .value;
        if let (Ext::Finite(a), Ext::Finite(b)) = (&before, &swapped) {
            ensure(
                (a.clone() * b.clone()).is_one(),
                "reciprocal property fails",
            )?;
        }
        done += 1;
    }
    Ok(())
}

/// Trees on up to six vertices, one per isomorphism class.
fn small_trees() -> Vec<Vec<(usize, usize)>> {
    vec![
        vec![],
        vec![(0, 1)],
        vec![(0, 1), (1, 2)],
        vec![(0, 1), (1, 2), (2, 3)],
        vec![(0, 1), (0, 2), (0, 3)],
        vec![(0, 1), (1, 2), (2, 3), (3, 4)],
        vec![(0, 1), (0, 2), (0, 3), (0, 4)],
        vec![(0, 1), (1, 2), (2, 3), (1, 4)],
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
        vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
        vec![(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)],
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)],
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
        vec![(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)],
    ]
}

fn stabilization_suite() -> std::result::Result<usize, String> {
    let labels = ["0", "1", "inf", "y", "z"];
    let mut checked = 0;
    for edges in small_trees() {
        let n = edges.len() + 1;
        for place in all_sequences(labels.len(), n) {
            let mut marks: Vec<Vec<&str>> = vec![Vec::new(); n];
            for (l, &v) in labels.iter().zip(&place) {
                marks[v].push(l);
            }
            let t = MarkedTree::new(marks, edges.clone()).map_err(|e| e.to_string())?;
            if !t.is_prestable() {
                continue;
            }
            let s = t.stabilize();
            let again = s.tree.stabilize();
            ensure(
                again.tree == s.tree,
                format!("not idempotent on {}", t.partition_string()),
            )?;
            ensure(
                s.tree.labels() == t.labels(),
                format!("labels lost on {}", t.partition_string()),
            )?;
            ensure(
                s.tree.is_stable(),
                format!("unstable result for {}", t.partition_string()),
            )?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn random_bipoly(rng: &mut ChaCha8Rng) -> BiPoly {
    let terms: Vec<(u32, u32, i64)> = (0..rng.gen_range(1..=5))
        .map(|_| {
            (
                rng.gen_range(0..=3),
                rng.gen_range(0..=3),
                rng.gen_range(-6..=6),
            )
        })
        .collect();
    BiPoly::from_int_terms(&terms)
}

fn sqrt_suite(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let mut done = 0;
    while done < 200 {
        let p = random_bipoly(rng);
        if p.is_zero() {
            continue;
        }
        let sq = &p * &p;
        let r = sqrt_poly(&sq).ok_or_else(|| format!("no square root of ({p})^2"))?;
        ensure(r == p || r == -&p, format!("sqrt of ({p})^2 gave {r}"))?;
        done += 1;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    mobius_suite(&mut rng)?;
    let trees = stabilization_suite()?;
    sqrt_suite(&mut rng)?;
    Ok(format!(
        "1000 Mobius cases, {trees} small trees, 200 square roots"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("level-set certificates", level_set_certificates),
        ("cycle identities", cycle_identities),
        ("exceptional limits", exceptional_limits),
        ("strata enumeration", strata_enumeration),
        ("blowups and intersections", blowup_intersections),
        ("normal crossings", normal_crossings),
        ("diagonal punctures", diagonal),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
