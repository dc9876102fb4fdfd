use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Sort key putting the usual marks in the order `0, 1, inf, x, y, z`.
pub fn label_rank(l: &str) -> (u8, &str) {
    let r = match l {
        "0" => 0,
        "1" => 1,
        "inf" => 2,
        "x" => 3,
        "y" => 4,
        "z" => 5,
        _ => 6,
    };
    (r, l)
}

fn sort_labels(v: &mut [String]) {
    v.sort_by(|a, b| label_rank(a).cmp(&label_rank(b)));
}

/// A tree of projective lines with marked points on the components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedTree {
    pub marks: Vec<Vec<String>>,
    pub edges: Vec<(usize, usize)>,
}

/// The three possibilities for a component of a pre-stable curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexCase {
    /// At least three distinguished points.
    Stable,
    /// Unstable with two nodes and no marks.
    TwoNodes,
    /// Unstable with one node and at most one mark.
    OneNode,
    /// A lone component with fewer than three marks.
    Isolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub tree: MarkedTree,
    /// The result is a single component with fewer than three marks.
    pub point_degenerate: bool,
}

impl MarkedTree {
    pub fn new(marks: Vec<Vec<&str>>, edges: Vec<(usize, usize)>) -> Result<MarkedTree> {
        let t = MarkedTree {
            marks: marks
                .into_iter()
                .map(|v| {
                    let mut v: Vec<String> = v.into_iter().map(String::from).collect();
                    sort_labels(&mut v);
                    v
                })
                .collect(),
            edges,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn single(labels: &[&str]) -> MarkedTree {
        MarkedTree::new(vec![labels.to_vec()], Vec::new()).expect("one vertex")
    }

    /// Components in a row, joined consecutively.
    pub fn chain(blocks: &[&[&str]]) -> Result<MarkedTree> {
        let edges = (1..blocks.len()).map(|i| (i - 1, i)).collect();
        MarkedTree::new(blocks.iter().map(|b| b.to_vec()).collect(), edges)
    }

    fn validate(&self) -> Result<()> {
        let n = self.marks.len();
        if n == 0 {
            return Err(Error::InvalidArgument("a tree needs a component".into()));
        }
        if self.edges.len() + 1 != n {
            return Err(Error::InvalidArgument(format!(
                "{n} components need {} nodes, got {}",
                n - 1,
                self.edges.len()
            )));
        }
        if self.edges.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
            return Err(Error::InvalidArgument(
                "node joins invalid components".into(),
            ));
        }
        if self.component_of(0).len() != n {
            return Err(Error::InvalidArgument(
                "components are not connected".into(),
            ));
        }
        let all: Vec<&String> = self.marks.iter().flatten().collect();
        let distinct: BTreeSet<&String> = all.iter().copied().collect();
        if distinct.len() != all.len() {
            return Err(Error::InvalidArgument("a label is used twice".into()));
        }
        Ok(())
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        self.reachable(start, None)
    }

    /// Vertices reachable from `start` without crossing edge `cut`.
    fn reachable(&self, start: usize, cut: Option<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.marks.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if Some(i) == cut {
                    continue;
                }
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.marks.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Marks plus nodes on a component.
    pub fn distinguished(&self, v: usize) -> usize {
        self.marks[v].len() + self.degree(v)
    }

    pub fn vertex_case(&self, v: usize) -> VertexCase {
        if self.distinguished(v) >= 3 {
            return VertexCase::Stable;
        }
        match self.degree(v) {
            0 => VertexCase::Isolated,
            1 => VertexCase::OneNode,
            _ => VertexCase::TwoNodes,
        }
    }

    pub fn is_stable(&self) -> bool {
        (0..self.marks.len()).all(|v| self.vertex_case(v) == VertexCase::Stable)
    }

    /// Marks sit on components, never on nodes, so every valid tree is
    /// pre-stable.
    pub fn is_prestable(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.marks.iter().flatten().cloned().collect();
        sort_labels(&mut v);
        v
    }

    pub fn vertex_of(&self, label: &str) -> Option<usize> {
        self.marks.iter().position(|m| m.iter().any(|l| l == label))
    }

    fn remove_vertex(&mut self, v: usize) {
        self.marks.remove(v);
        self.edges.retain(|&(a, b)| a != v && b != v);
        for e in &mut self.edges {
            if e.0 > v {
                e.0 -= 1;
            }
            if e.1 > v {
                e.1 -= 1;
            }
        }
    }

    /// Contracts unstable components one at a time until none is left.
    pub fn stabilize(&self) -> Stabilization {
        let mut t = self.clone();
        while let Some(v) = (0..t.marks.len())
            .find(|&v| matches!(t.vertex_case(v), VertexCase::TwoNodes | VertexCase::OneNode))
        {
            let nb = t.neighbors(v);
            match t.vertex_case(v) {
                VertexCase::TwoNodes => {
                    t.remove_vertex(v);
                    let fix = |w: usize| if w > v { w - 1 } else { w };
                    t.edges.push((fix(nb[0]), fix(nb[1])));
                }
                _ => {
                    let moved = std::mem::take(&mut t.marks[v]);
                    t.marks[nb[0]].extend(moved);
                    sort_labels(&mut t.marks[nb[0]]);
                    t.remove_vertex(v);
                }
            }
        }
        t.normalize_edges();
        let point_degenerate = t.marks.len() == 1 && t.marks[0].len() < 3;
        Stabilization {
            tree: t,
            point_degenerate,
        }
    }

    fn normalize_edges(&mut self) {
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort();
    }

    /// Removes a mark without stabilizing.
    pub fn forget(&self, label: &str) -> MarkedTree {
        let mut t = self.clone();
        for m in &mut t.marks {
            m.retain(|l| l != label);
        }
        t
    }

    pub fn rename(&self, from: &str, to: &str) -> MarkedTree {
        let mut t = self.clone();
        for m in &mut t.marks {
            for l in m.iter_mut() {
                if l == from {
                    *l = to.to_string();
                }
            }
            sort_labels(m);
        }
        t
    }

    /// For each node, the marks on the side away from the smallest label.
    pub fn splits(&self) -> BTreeSet<Vec<String>> {
        let root = self.labels().first().and_then(|l| self.vertex_of(l));
        let mut out = BTreeSet::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let side_a = self.reachable(a, Some(i));
            let far = if root.is_some_and(|r| side_a.contains(&r)) {
                self.reachable(b, Some(i))
            } else {
                side_a
            };
            let mut labels: Vec<String> = far.iter().flat_map(|&v| self.marks[v].clone()).collect();
            sort_labels(&mut labels);
            out.insert(labels);
        }
        out
    }

    /// Isomorphism invariant of a stable tree: its labels and splits.
    pub fn shape(&self) -> (Vec<String>, BTreeSet<Vec<String>>) {
        (self.labels(), self.splits())
    }

    /// Whether `other` is a degeneration of `self`, i.e. its splits contain
    /// those of `self`.
    pub fn specializes_to(&self, other: &MarkedTree) -> bool {
        self.labels() == other.labels() && self.splits().is_subset(&other.splits())
    }

    /// Components along the path for chains, in index order otherwise.
    pub fn blocks(&self) -> Vec<Vec<String>> {
        let n = self.marks.len();
        let is_path = (0..n).all(|v| self.degree(v) <= 2);
        if n == 1 || !is_path {
            return self.marks.clone();
        }
        let ends: Vec<usize> = (0..n).filter(|&v| self.degree(v) == 1).collect();
        let key = |v: usize| {
            self.marks[v]
                .first()
                .map(|l| label_rank(l))
                .unwrap_or((9, ""))
        };
        let start = if key(ends[0]) <= key(ends[1]) {
            ends[0]
        } else {
            ends[1]
        };
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        while let Some(&next) = self.neighbors(cur).iter().find(|&&w| Some(w) != prev) {
            prev = Some(cur);
            order.push(next);
            cur = next;
        }
        order.into_iter().map(|v| self.marks[v].clone()).collect()
    }

    /// e.g. `{0,1}|{z}|{inf,y}`.
    pub fn partition_string(&self) -> String {
        self.blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.join(",")))
            .collect::<Vec<_>>()
            .join("|")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stability_examples() {
        assert!(MarkedTree::single(&["0", "1", "inf", "y", "z"]).is_stable());
        let t = MarkedTree::chain(&[&["0", "1"], &["inf", "y", "z"]]).unwrap();
        assert!(t.is_stable());
        assert_eq!((t.distinguished(0), t.distinguished(1)), (3, 4));
        let u = MarkedTree::chain(&[&["0"], &["1", "inf", "y"]]).unwrap();
        assert_eq!(u.vertex_case(0), VertexCase::OneNode);
        assert!(!u.is_stable());
    }

    #[test]
    fn invalid_trees() {
        assert!(MarkedTree::new(vec![vec!["0"], vec!["1"]], vec![]).is_err());
        assert!(MarkedTree::new(vec![vec!["0"], vec!["0"]], vec![(0, 1)]).is_err());
        assert!(MarkedTree::new(vec![vec!["0"], vec!["1"], vec![]], vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn contract_two_node_component() {
        let t = MarkedTree::chain(&[&["0", "1"], &[], &["inf", "y"]]).unwrap();
        assert_eq!(t.vertex_case(1), VertexCase::TwoNodes);
        let s = t.stabilize();
        assert_eq!(s.tree.partition_string(), "{0,1}|{inf,y}");
        assert!(s.tree.is_stable() && !s.point_degenerate);
    }

    #[test]
    fn leaf_mark_moves_to_neighbor() {
        let t = MarkedTree::chain(&[&["0"], &["1", "inf", "y"]]).unwrap();
        let s = t.stabilize();
        assert_eq!(s.tree, MarkedTree::single(&["0", "1", "inf", "y"]));
    }

    #[test]
    fn stable_input_unchanged() {
        let t = MarkedTree::chain(&[&["0", "1"], &["z"], &["inf", "y"]]).unwrap();
        assert_eq!(t.stabilize().tree, t);
    }

    #[test]
    fn point_degenerate_result() {
        let t = MarkedTree::chain(&[&["0"], &["1"]]).unwrap();
        assert!(t.stabilize().point_degenerate);
    }

    #[test]
    fn splits_and_blocks() {
        let t = MarkedTree::chain(&[&["inf", "y"], &["z"], &["0", "1"]]).unwrap();
        assert_eq!(t.partition_string(), "{0,1}|{z}|{inf,y}");
        let s: Vec<Vec<String>> = t.splits().into_iter().collect();
        assert_eq!(
            s,
            vec![
                vec!["inf".to_string(), "y".into()],
                vec!["inf".into(), "y".into(), "z".into()]
            ]
        );
        let coarse = MarkedTree::chain(&[&["0", "1"], &["inf", "y", "z"]]).unwrap();
        assert!(coarse.specializes_to(&t));
    }
}
