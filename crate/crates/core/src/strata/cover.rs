use serde::Serialize;

use crate::error::{Error, Result};
use crate::strata::tree::{MarkedTree, Stabilization};

/// Images of the domain marks `{0, 1, ∞, x}` under the map.
pub const DOMAIN_IMAGES: [(&str, &str); 4] = [("0", "inf"), ("inf", "1"), ("1", "y"), ("x", "0")];

/// Critical values of the degree-two map.
pub const CRITICAL_VALUES: [&str; 2] = ["inf", "z"];

/// A degree-two admissible cover of a marked range tree, with the domain
/// carrying only the marks `{0, 1, ∞, x}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverCombinatorics {
    pub range: MarkedTree,
    pub domain: MarkedTree,
    /// Range component under each domain component.
    pub component_map: Vec<usize>,
    pub component_degree: Vec<u32>,
    /// Range node under each domain node.
    pub node_map: Vec<usize>,
    pub node_local_degree: Vec<u32>,
}

impl CoverCombinatorics {
    /// Degrees over each range component and each range node add up to 2,
    /// and every domain node lies over a node joining the images of its ends.
    pub fn degrees_consistent(&self) -> bool {
        let per_vertex = (0..self.range.num_vertices()).all(|v| {
            self.component_map
                .iter()
                .zip(&self.component_degree)
                .filter(|(&m, _)| m == v)
                .map(|(_, d)| d)
                .sum::<u32>()
                == 2
        });
        let per_node = (0..self.range.edges.len()).all(|e| {
            self.node_map
                .iter()
                .zip(&self.node_local_degree)
                .filter(|(&m, _)| m == e)
                .map(|(_, d)| d)
                .sum::<u32>()
                == 2
        });
        let nodes_to_nodes = self
            .domain
            .edges
            .iter()
            .zip(&self.node_map)
            .all(|(&(a, b), &e)| {
                let (ra, rb) = (self.component_map[a], self.component_map[b]);
                let (u, w) = self.range.edges[e];
                (ra, rb) == (u, w) || (ra, rb) == (w, u)
            });
        per_vertex && per_node && nodes_to_nodes
    }

    pub fn upper_image(&self) -> Stabilization {
        self.domain.stabilize()
    }
}

fn path_between(t: &MarkedTree, from: usize, to: usize) -> Vec<usize> {
    let n = t.num_vertices();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        for &(a, b) in &t.edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Every degree-two admissible cover of the range tree branched over `∞`
/// and `z`, one for each way of placing the preimage marks on the two
/// sheets over components that do not separate the critical values.
pub fn admissible_covers(range: &MarkedTree) -> Result<Vec<CoverCombinatorics>> {
    let locate = |l: &str| {
        range
            .vertex_of(l)
            .ok_or_else(|| Error::InvalidArgument(format!("range tree lacks mark {l}")))
    };
    let vi = locate(CRITICAL_VALUES[0])?;
    let vz = locate(CRITICAL_VALUES[1])?;
    let path = path_between(range, vi, vz);
    let n = range.num_vertices();
    let ramified: Vec<bool> = (0..n).map(|v| path.contains(&v)).collect();

    let mut component_map = Vec::new();
    let mut component_degree = Vec::new();
    // domain vertices over range vertex v: one for ramified, two sheets otherwise
    let mut sheets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let copies = if ramified[v] { 1 } else { 2 };
        for _ in 0..copies {
            sheets[v].push(component_map.len());
            component_map.push(v);
            component_degree.push(if ramified[v] { 2 } else { 1 });
        }
    }
    let mut edges = Vec::new();
    let mut node_map = Vec::new();
    let mut node_local_degree = Vec::new();
    for (e, &(a, b)) in range.edges.iter().enumerate() {
        match (ramified[a], ramified[b]) {
            (true, true) => {
                edges.push((sheets[a][0], sheets[b][0]));
                node_map.push(e);
                node_local_degree.push(2);
            }
            _ => {
                for k in 0..2 {
                    let pick = |v: usize| sheets[v][if ramified[v] { 0 } else { k }];
                    edges.push((pick(a), pick(b)));
                    node_map.push(e);
                    node_local_degree.push(1);
                }
            }
        }
    }

    let mut placements: Vec<(&str, usize, bool)> = Vec::new();
    for (mark, image) in DOMAIN_IMAGES {
        let v = locate(image)?;
        placements.push((mark, v, !ramified[v]));
    }
    let free: Vec<usize> = (0..placements.len()).filter(|&i| placements[i].2).collect();
    let mut out = Vec::new();
    for choice in 0u32..(1 << free.len()) {
        let mut marks: Vec<Vec<&str>> = vec![Vec::new(); component_map.len()];
        for (i, &(mark, v, split)) in placements.iter().enumerate() {
            let sheet = if split {
                let bit = free.iter().position(|&f| f == i).unwrap();
                ((choice >> bit) & 1) as usize
            } else {
                0
            };
            marks[sheets[v][sheet]].push(mark);
        }
        let domain = MarkedTree::new(marks, edges.clone())?;
        out.push(CoverCombinatorics {
            range: range.clone(),
            domain,
            component_map: component_map.clone(),
            component_degree: component_degree.clone(),
            node_map: node_map.clone(),
            node_local_degree: node_local_degree.clone(),
        });
    }
    Ok(out)
}

/// Image under the map forgetting `z` and reading `y` as `x`.
pub fn lower_image(range: &MarkedTree) -> Stabilization {
    range.forget("z").rename("y", "x").stabilize()
}

/// Distinct images of the pulled-back marked domain over all covers.
pub fn upper_images(range: &MarkedTree) -> Result<Vec<Stabilization>> {
    let mut out: Vec<Stabilization> = Vec::new();
    for c in admissible_covers(range)? {
        let s = c.upper_image();
        if !out.iter().any(|o| o.tree.shape() == s.tree.shape()) {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_are_consistent() {
        let range = MarkedTree::chain(&[&["0", "1"], &["inf", "y", "z"]]).unwrap();
        let covers = admissible_covers(&range).unwrap();
        // marks 1 → y and 0 → inf sit on the ramified component; x and inf
        // choose a sheet over {0, 1}
        assert_eq!(covers.len(), 4);
        assert!(covers.iter().all(|c| c.degrees_consistent()));
        assert_eq!(covers[0].domain.num_vertices(), 3);
    }

    #[test]
    fn same_sheet_gives_boundary_point() {
        let range = MarkedTree::chain(&[&["0", "1"], &["inf", "y", "z"]]).unwrap();
        let ups = upper_images(&range).unwrap();
        let parts: Vec<String> = ups.iter().map(|s| s.tree.partition_string()).collect();
        assert!(parts.contains(&"{0,1}|{inf,x}".to_string()));
        assert!(parts.contains(&"{0,1,inf,x}".to_string()));
        assert_eq!(lower_image(&range).tree.partition_string(), "{0,1}|{inf,x}");
    }

    #[test]
    fn separated_critical_values_ramify_the_node() {
        let range = MarkedTree::chain(&[&["0", "1", "z"], &["inf", "y"]]).unwrap();
        let covers = admissible_covers(&range).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].node_local_degree, vec![2]);
        assert_eq!(
            covers[0].upper_image().tree.partition_string(),
            "{0,1}|{inf,x}"
        );
    }
}
