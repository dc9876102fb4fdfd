use serde::Serialize;

use crate::error::Result;
use crate::surface::intersect::IntersectionPoint;
use crate::surface::model::SurfaceModel;

/// A rational curve of the configuration, seen as a disk bundle over S².
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidenceVertex {
    pub name: String,
    pub genus: u32,
    /// Euler number of the normal bundle, i.e. the self-intersection.
    pub euler_number: i64,
    /// Number of intersection points with the other curves of the
    /// configuration, counted with multiplicity; each carves a torus out of
    /// the boundary of the plumbing.
    pub boundary_tori: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidenceEdge {
    pub a: String,
    pub b: String,
    pub points: Vec<IntersectionPoint>,
    pub multiplicity: u32,
    /// Intersection number from the lattice; equals `multiplicity`.
    pub lattice: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidenceGraph {
    pub vertices: Vec<IncidenceVertex>,
    pub edges: Vec<IncidenceEdge>,
    /// Every pair's geometric count agrees with the lattice pairing.
    pub consistent: bool,
}

impl IncidenceGraph {
    pub fn vertex(&self, name: &str) -> Option<&IncidenceVertex> {
        self.vertices.iter().find(|v| v.name == name)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edges
            .iter()
            .any(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
    }

    /// True for a chain `v₀ — v₁ — … — vₙ` in the listed order.
    pub fn is_path(&self, order: &[&str]) -> bool {
        self.edges.len() + 1 == order.len() && order.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }
}

/// Dual graph of a set of transforms with exact intersection data.
pub fn incidence_graph(model: &SurfaceModel, names: &[&str]) -> Result<IncidenceGraph> {
    let idx = names
        .iter()
        .map(|n| model.divisor_index(n))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    let mut consistent = true;
    let mut tori = vec![0u32; names.len()];
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            let points = model.intersections(idx[i], idx[j])?;
            let multiplicity: u32 = points.iter().map(|p| p.multiplicity).sum();
            let lattice = model.class_of(idx[i]).dot(&model.class_of(idx[j]));
            consistent &= multiplicity as i64 == lattice;
            if multiplicity > 0 {
                tori[i] += multiplicity;
                tori[j] += multiplicity;
                edges.push(IncidenceEdge {
                    a: names[i].to_string(),
                    b: names[j].to_string(),
                    points,
                    multiplicity,
                    lattice,
                });
            }
        }
    }
    let vertices = names
        .iter()
        .zip(&idx)
        .zip(tori)
        .map(|((n, &d), t)| {
            let c = model.class_of(d);
            IncidenceVertex {
                name: n.to_string(),
                genus: 0,
                euler_number: c.dot(&c),
                boundary_tori: t,
            }
        })
        .collect();
    Ok(IncidenceGraph {
        vertices,
        edges,
        consistent,
    })
}
