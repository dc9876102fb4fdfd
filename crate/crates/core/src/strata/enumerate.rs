use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::strata::equalizer::EqualizerVerdict;
use crate::strata::tree::{label_rank, MarkedTree};

/// The four patterns of a two-component curve for `{0, 1, ∞, y, z}`, read
/// off from where `z` and `∞` sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Subtype {
    /// `{a,b,z} | {c,∞}`
    #[serde(rename = "2a")]
    A,
    /// `{a,∞,z} | {b,c}`
    #[serde(rename = "2b")]
    B,
    /// `{a,b,c} | {∞,z}`
    #[serde(rename = "2c")]
    C,
    /// `{a,b,∞} | {c,z}`
    #[serde(rename = "2d")]
    D,
}

impl Subtype {
    pub fn name(self) -> &'static str {
        match self {
            Subtype::A => "2a",
            Subtype::B => "2b",
            Subtype::C => "2c",
            Subtype::D => "2d",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StratumRecord {
    pub partition: String,
    pub blocks: Vec<Vec<String>>,
    pub tree: MarkedTree,
    pub dimension: usize,
    pub stable: bool,
    pub subtype: Option<Subtype>,
    pub equalizer: Option<EqualizerVerdict>,
}

impl StratumRecord {
    pub fn from_tree(tree: MarkedTree) -> StratumRecord {
        let n = tree.labels().len();
        let subtype = classify_tree(&tree).ok();
        StratumRecord {
            partition: tree.partition_string(),
            blocks: tree.blocks(),
            dimension: n - 3 - tree.edges.len(),
            stable: tree.is_stable(),
            subtype,
            tree,
            equalizer: None,
        }
    }
}

/// Builds a tree from pairwise compatible clusters, each a set of labels
/// not containing `root`.
fn tree_from_clusters(labels: &[&str], clusters: &[Vec<&str>]) -> MarkedTree {
    let contains = |big: &Vec<&str>, small: &Vec<&str>| small.iter().all(|l| big.contains(l));
    let parent = |i: usize| {
        (0..clusters.len())
            .filter(|&j| {
                j != i
                    && clusters[j].len() > clusters[i].len()
                    && contains(&clusters[j], &clusters[i])
            })
            .min_by_key(|&j| clusters[j].len())
    };
    let vertex = |c: Option<usize>| c.map_or(0, |i| i + 1);
    let mut marks: Vec<Vec<&str>> = vec![Vec::new(); clusters.len() + 1];
    for &l in labels {
        let home = (0..clusters.len())
            .filter(|&i| clusters[i].contains(&l))
            .min_by_key(|&i| clusters[i].len());
        marks[vertex(home)].push(l);
    }
    let edges = (0..clusters.len())
        .map(|i| (vertex(parent(i)), i + 1))
        .collect();
    MarkedTree::new(marks, edges).expect("laminar clusters give a tree")
}

/// All stable trees with at least one node carrying exactly the given
/// labels, obtained from the sets of pairwise compatible splits.
pub fn enumerate_boundary_strata(labels: &[&str]) -> Result<Vec<StratumRecord>> {
    let n = labels.len();
    if !(4..=5).contains(&n) {
        return Err(Error::Unsupported(format!(
            "{n} labels; only 4 or 5 are supported"
        )));
    }
    if labels.iter().collect::<BTreeSet<_>>().len() != n {
        return Err(Error::InvalidArgument("labels must be distinct".into()));
    }
    let mut sorted = labels.to_vec();
    sorted.sort_by_key(|l| label_rank(l));
    let rest = &sorted[1..];
    let clusters: Vec<Vec<&str>> = (1u32..(1 << rest.len()))
        .map(|mask| {
            rest.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &l)| l)
                .collect::<Vec<_>>()
        })
        .filter(|c| c.len() >= 2 && c.len() <= n - 2)
        .collect();
    let compatible = |a: &Vec<&str>, b: &Vec<&str>| {
        let inter = a.iter().filter(|l| b.contains(l)).count();
        inter == 0 || inter == a.len() || inter == b.len()
    };
    let mut out = Vec::new();
    for mask in 1u64..(1 << clusters.len()) {
        let chosen: Vec<Vec<&str>> = (0..clusters.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| clusters[i].clone())
            .collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, a)| chosen[i + 1..].iter().all(|b| compatible(a, b)));
        if ok {
            out.push(StratumRecord::from_tree(tree_from_clusters(
                &sorted, &chosen,
            )));
        }
    }
    out.sort_by(|a, b| (a.tree.edges.len(), &a.partition).cmp(&(b.tree.edges.len(), &b.partition)));
    Ok(out)
}

fn classify_tree(t: &MarkedTree) -> Result<Subtype> {
    let expected = ["0", "1", "inf", "y", "z"];
    if t.num_vertices() != 2 || t.labels() != expected {
        return Err(Error::InvalidArgument(format!(
            "{} is not a two-component curve on 0,1,inf,y,z",
            t.partition_string()
        )));
    }
    let zv = t.vertex_of("z").unwrap();
    let block = &t.marks[zv];
    let with_inf = block.iter().any(|l| l == "inf");
    Ok(match (with_inf, block.len()) {
        (false, 3) => Subtype::A,
        (true, 3) => Subtype::B,
        (true, _) => Subtype::C,
        (false, _) => Subtype::D,
    })
}

pub fn classify_type2(s: &StratumRecord) -> Result<Subtype> {
    classify_tree(&s.tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: [&str; 5] = ["0", "1", "inf", "y", "z"];

    #[test]
    fn counts() {
        let five = enumerate_boundary_strata(&B).unwrap();
        assert_eq!(five.len(), 25);
        assert_eq!(five.iter().filter(|s| s.dimension == 1).count(), 10);
        assert!(five.iter().all(|s| s.stable));
        let four = enumerate_boundary_strata(&["0", "1", "inf", "x"]).unwrap();
        assert_eq!(four.len(), 3);
        assert!(enumerate_boundary_strata(&["a", "b", "c"]).is_err());
    }

    #[test]
    fn corner_is_enumerated() {
        let five = enumerate_boundary_strata(&B).unwrap();
        assert!(five.iter().any(|s| s.partition == "{0,1}|{z}|{inf,y}"));
    }

    #[test]
    fn subtypes() {
        let t =
            |a: &[&str], b: &[&str]| StratumRecord::from_tree(MarkedTree::chain(&[a, b]).unwrap());
        assert_eq!(
            classify_type2(&t(&["0", "1", "z"], &["y", "inf"])).unwrap(),
            Subtype::A
        );
        assert_eq!(
            classify_type2(&t(&["inf", "y", "z"], &["0", "1"])).unwrap(),
            Subtype::B
        );
        assert_eq!(
            classify_type2(&t(&["0", "1", "y"], &["inf", "z"])).unwrap(),
            Subtype::C
        );
        assert_eq!(
            classify_type2(&t(&["0", "1", "inf"], &["y", "z"])).unwrap(),
            Subtype::D
        );
        let sizes = enumerate_boundary_strata(&B)
            .unwrap()
            .iter()
            .filter_map(|s| s.subtype)
            .fold([0; 4], |mut acc, s| {
                acc[s as usize] += 1;
                acc
            });
        assert_eq!(sizes, [3, 3, 1, 3]);
    }
}
