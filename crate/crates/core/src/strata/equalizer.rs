use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::field::{Ext, FieldElem};
use crate::poly::{exact_roots, primitive_integer, RatExpr, Var};
use crate::strata::cover::{lower_image, upper_images};
use crate::strata::cross_ratio::cross_ratio;
use crate::strata::enumerate::{enumerate_boundary_strata, StratumRecord, Subtype};
use crate::strata::tree::MarkedTree;

pub const RANGE_LABELS: [&str; 5] = ["0", "1", "inf", "y", "z"];
pub const DOMAIN_LABELS: [&str; 4] = ["0", "1", "inf", "x"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualizerStatus {
    /// The whole stratum equalizes the two maps and is listed.
    InAv,
    /// A boundary point of exactly one listed stratum.
    InClosure,
    /// A point stratum where the maps agree, outside the closure of every
    /// listed stratum.
    Isolated,
    /// Both images lie in the open stratum; equality cuts out finitely many
    /// points given by a cross-ratio equation.
    Conditional,
    Excluded,
}

/// Equality of the two 4-pointed curves, written as equality of the cross
/// ratios `[0,∞;1,x]` of the marks on each side.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatchingEquation {
    pub equation: String,
    pub variable: String,
    pub polynomial: String,
    pub solutions: Vec<String>,
    /// Cross ratio `[0,∞;1,x]` of the lower image at each solution.
    pub moduli: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualizerVerdict {
    pub status: EqualizerStatus,
    pub name: Option<String>,
    pub reason: String,
    pub lower_image: String,
    pub upper_images: Vec<String>,
    pub matching: Option<MatchingEquation>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualizerReport {
    pub strata: Vec<StratumRecord>,
    /// Partitions of the strata marked `in_av`.
    pub admitted: Vec<String>,
}

impl EqualizerReport {
    pub fn with_status(&self, s: EqualizerStatus) -> Vec<&StratumRecord> {
        self.strata
            .iter()
            .filter(|r| r.equalizer.as_ref().is_some_and(|v| v.status == s))
            .collect()
    }

    pub fn find(&self, partition: &str) -> Option<&StratumRecord> {
        self.strata.iter().find(|r| r.partition == partition)
    }
}

fn stratum_name(partition: &str) -> Option<&'static str> {
    match partition {
        "{0,1}|{inf,y,z}" => Some("A_1"),
        "{0,1,z}|{inf,y}" => Some("A_2"),
        _ => None,
    }
}

type Placement = [(&'static str, Ext<RatExpr>); 4];

fn position<'a>(p: &'a Placement, label: &str) -> &'a Ext<RatExpr> {
    &p.iter().find(|(l, _)| *l == label).expect("label placed").1
}

fn show(e: &Ext<RatExpr>, var: &str) -> String {
    match e {
        Ext::Infinity => "inf".to_string(),
        Ext::Finite(r) => r.display_with([var, "_"]),
    }
}

fn at(e: &Ext<RatExpr>, t: &FieldElem) -> Option<Ext<FieldElem>> {
    match e {
        Ext::Infinity => Some(Ext::Infinity),
        Ext::Finite(r) => r.eval_in(t, &FieldElem::zero()).ok(),
    }
}

/// Solves `[0,∞;1,x]` (lower) = `[0,∞;1,x]` (upper) for the parameter `t`,
/// discarding values where two marks on either side collide.
fn solve_matching(lower: Placement, upper: Placement, var: &str) -> Result<MatchingEquation> {
    let order = ["0", "inf", "1", "x"];
    let pick = |p: &Placement| order.map(|l| position(p, l).clone());
    let (l, u) = (pick(&lower), pick(&upper));
    let cl = cross_ratio(&l[0], &l[1], &l[2], &l[3])?.value;
    let cu = cross_ratio(&u[0], &u[1], &u[2], &u[3])?.value;
    let render = |p: &[Ext<RatExpr>; 4]| {
        format!(
            "[{},{};{},{}]",
            show(&p[0], var),
            show(&p[1], var),
            show(&p[2], var),
            show(&p[3], var)
        )
    };
    let equation = format!("{} = {}", render(&l), render(&u));
    let (Ext::Finite(a), Ext::Finite(b)) = (&cl, &cu) else {
        return Ok(MatchingEquation {
            equation,
            variable: var.to_string(),
            polynomial: "none".into(),
            solutions: Vec::new(),
            moduli: Vec::new(),
        });
    };
    let diff = a.clone() - b.clone();
    let (num, _) = diff.to_uni(Var::X, var).expect("one parameter");
    let mut solutions = Vec::new();
    let mut moduli = Vec::new();
    if !num.is_zero() && !num.is_constant() {
        for root in exact_roots(&num)? {
            let t = root.value;
            let ok = [&l, &u].iter().all(|side| {
                let vals: Vec<Option<Ext<FieldElem>>> = side.iter().map(|p| at(p, &t)).collect();
                vals.iter().all(|v| v.is_some())
                    && (0..4).all(|i| (i + 1..4).all(|j| vals[i] != vals[j]))
            });
            if ok && !solutions.contains(&format!("{var}={t}")) {
                solutions.push(format!("{var}={t}"));
                let pts: Vec<Ext<FieldElem>> = l.iter().map(|p| at(p, &t).unwrap()).collect();
                moduli.push(
                    cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?
                        .value
                        .to_string(),
                );
            }
        }
    }
    Ok(MatchingEquation {
        equation,
        variable: var.to_string(),
        polynomial: if num.is_zero() {
            "0".into()
        } else {
            primitive_integer(&num).to_string()
        },
        solutions,
        moduli,
    })
}

fn pt(r: RatExpr) -> Ext<RatExpr> {
    Ext::Finite(r)
}

fn c(n: i64) -> Ext<RatExpr> {
    pt(RatExpr::constant(crate::field::int(n)))
}

/// Domain mark sitting over a range mark.
fn preimage(b: &str) -> &'static str {
    match b {
        "inf" => "0",
        "1" => "inf",
        "y" => "1",
        "0" => "x",
        _ => unreachable!("no domain mark over {b}"),
    }
}

fn lowered(b: &str) -> &'static str {
    match b {
        "0" => "0",
        "1" => "1",
        "inf" => "inf",
        "y" => "x",
        _ => unreachable!("{b} is forgotten"),
    }
}

/// `{0,1,y} | {∞,z}`: the sheet over `{0,1,y}` maps isomorphically, the
/// component over `{∞,z}` is contracted and leaves the mark `0` at the node.
/// Coordinates: range marks `0, 1, y` at `0, 1, x`, node at `∞`.
fn matching_2c() -> Result<MatchingEquation> {
    let t = pt(RatExpr::x());
    let range = [("0", c(0)), ("1", c(1)), ("y", t)];
    let mut lower: Vec<(&'static str, Ext<RatExpr>)> =
        range.iter().map(|(b, p)| (lowered(b), p.clone())).collect();
    lower.push(("inf", Ext::Infinity));
    let mut upper: Vec<(&'static str, Ext<RatExpr>)> = range
        .iter()
        .map(|(b, p)| (preimage(b), p.clone()))
        .collect();
    upper.push(("0", Ext::Infinity));
    solve_matching(lower.try_into().unwrap(), upper.try_into().unwrap(), "x")
}

/// `{a,b,∞} | {c,z}`: the component over `{a,b,∞}` is a double cover
/// `s ↦ s²` branched at `∞` and at the node `0`; the component over `{c,z}`
/// is contracted on both sides. Coordinates: `a` at 1, `b` at `t²`, with
/// preimages at 1 and `t`.
fn matching_2d(cz: &str) -> Result<MatchingEquation> {
    let mut ab: Vec<&str> = ["0", "1", "y"].into_iter().filter(|l| *l != cz).collect();
    ab.sort();
    let t = RatExpr::x();
    let lower = [
        (lowered(ab[0]), c(1)),
        (lowered(ab[1]), pt(t.clone() * t.clone())),
        ("inf", Ext::Infinity),
        (lowered(cz), c(0)),
    ];
    let upper = [
        (preimage(ab[0]), c(1)),
        (preimage(ab[1]), pt(t)),
        ("0", Ext::Infinity),
        (preimage(cz), c(0)),
    ];
    solve_matching(lower, upper, "t")
}

fn verdict_for(s: &StratumRecord, admitted: &[MarkedTree]) -> Result<EqualizerVerdict> {
    let lower = lower_image(&s.tree);
    let uppers = upper_images(&s.tree)?;
    let lower_str = lower.tree.partition_string();
    let upper_strs: Vec<String> = uppers.iter().map(|u| u.tree.partition_string()).collect();
    let boundary = !lower.tree.edges.is_empty();
    let auto = boundary && uppers.iter().any(|u| u.tree.shape() == lower.tree.shape());
    let open = !boundary && uppers.iter().any(|u| u.tree.edges.is_empty());
    let mk = |status, name: Option<&str>, reason: String, matching| EqualizerVerdict {
        status,
        name: name.map(String::from),
        reason,
        lower_image: lower_str.clone(),
        upper_images: upper_strs.clone(),
        matching,
    };
    if auto {
        if s.dimension >= 1 {
            return Ok(mk(
                EqualizerStatus::InAv,
                Some(stratum_name(&s.partition).unwrap_or(&s.partition)),
                format!("both maps send the stratum to the boundary point {lower_str}"),
                None,
            ));
        }
        let owners: Vec<&MarkedTree> = admitted
            .iter()
            .filter(|a| a.specializes_to(&s.tree))
            .collect();
        let owner_names: Vec<String> = owners
            .iter()
            .map(|t| {
                let p = t.partition_string();
                stratum_name(&p).map_or(p, String::from)
            })
            .collect();
        return Ok(match owners.len() {
            0 => mk(
                EqualizerStatus::Isolated,
                None,
                format!("both maps give {lower_str}"),
                None,
            ),
            1 => mk(
                EqualizerStatus::InClosure,
                None,
                format!("boundary point of {}", owner_names[0]),
                None,
            ),
            _ => mk(
                EqualizerStatus::InAv,
                Some("corner"),
                format!("common boundary point of {}", owner_names.join(" and ")),
                None,
            ),
        });
    }
    if open {
        let matching = match s.subtype {
            Some(Subtype::C) => Some(matching_2c()?),
            Some(Subtype::D) => {
                let zv = s.tree.vertex_of("z").unwrap();
                let cz = s.tree.marks[zv].iter().find(|l| *l != "z").unwrap().clone();
                Some(matching_2d(&cz)?)
            }
            _ => None,
        };
        let reason = match &matching {
            Some(m) if m.solutions.is_empty() => {
                format!("{} has no admissible solution", m.equation)
            }
            Some(m) => format!("{} holds only at {}", m.equation, m.solutions.join(", ")),
            None => "both images in the open stratum".to_string(),
        };
        return Ok(mk(EqualizerStatus::Conditional, None, reason, matching));
    }
    Ok(mk(
        EqualizerStatus::Excluded,
        None,
        format!(
            "lower image {lower_str} differs from every upper image ({})",
            upper_strs.join(", ")
        ),
        None,
    ))
}

/// Runs the case analysis over every boundary stratum of the five-point
/// space and records which strata equalize the two maps.
pub fn equalizer_strata() -> EqualizerReport {
    let mut strata = enumerate_boundary_strata(&RANGE_LABELS).expect("five labels");
    let mut admitted_trees = Vec::new();
    for s in strata.iter_mut().filter(|s| s.dimension >= 1) {
        let v = verdict_for(s, &[]).expect("fixed strata");
        if v.status == EqualizerStatus::InAv {
            admitted_trees.push(s.tree.clone());
        }
        s.equalizer = Some(v);
    }
    for s in strata.iter_mut().filter(|s| s.dimension == 0) {
        s.equalizer = Some(verdict_for(s, &admitted_trees).expect("fixed strata"));
    }
    let admitted = strata
        .iter()
        .filter(|s| s.equalizer.as_ref().unwrap().status == EqualizerStatus::InAv)
        .map(|s| s.partition.clone())
        .collect();
    EqualizerReport { strata, admitted }
}
