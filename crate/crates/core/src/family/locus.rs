use std::fmt;

use serde::Serialize;

use crate::field::{Ext, Field};
use crate::poly::{BiPoly, Var};

/// The ten components of ℒ ∪ 𝒵.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LocusId {
    #[serde(rename = "L_x0")]
    Lx0,
    #[serde(rename = "L_y0")]
    Ly0,
    #[serde(rename = "L_x1")]
    Lx1,
    #[serde(rename = "L_y1")]
    Ly1,
    #[serde(rename = "L_xinf")]
    LxInf,
    #[serde(rename = "L_yinf")]
    LyInf,
    Z1,
    Z2,
    Z3,
    Z4,
}

impl LocusId {
    pub const ALL: [LocusId; 10] = [
        LocusId::Lx0,
        LocusId::Ly0,
        LocusId::Lx1,
        LocusId::Ly1,
        LocusId::LxInf,
        LocusId::LyInf,
        LocusId::Z1,
        LocusId::Z2,
        LocusId::Z3,
        LocusId::Z4,
    ];

    pub const LINES: [LocusId; 6] = [
        LocusId::Lx0,
        LocusId::Ly0,
        LocusId::Lx1,
        LocusId::Ly1,
        LocusId::LxInf,
        LocusId::LyInf,
    ];

    pub const CURVES: [LocusId; 4] = [LocusId::Z1, LocusId::Z2, LocusId::Z3, LocusId::Z4];

    /// Registry name, e.g. `L_x0` or `Z3`.
    pub fn name(self) -> &'static str {
        match self {
            LocusId::Lx0 => "L_x0",
            LocusId::Ly0 => "L_y0",
            LocusId::Lx1 => "L_x1",
            LocusId::Ly1 => "L_y1",
            LocusId::LxInf => "L_xinf",
            LocusId::LyInf => "L_yinf",
            LocusId::Z1 => "Z1",
            LocusId::Z2 => "Z2",
            LocusId::Z3 => "Z3",
            LocusId::Z4 => "Z4",
        }
    }

    /// Human-readable equation.
    pub fn equation(self) -> &'static str {
        match self {
            LocusId::Lx0 => "x=0",
            LocusId::Ly0 => "y=0",
            LocusId::Lx1 => "x=1",
            LocusId::Ly1 => "y=1",
            LocusId::LxInf => "x=inf",
            LocusId::LyInf => "y=inf",
            LocusId::Z1 => "1-2x+x^2-y=0",
            LocusId::Z2 => "x^2+y-1=0",
            LocusId::Z3 => "x+y-1=0",
            LocusId::Z4 => "2xy+x^2-y-2x+1=0",
        }
    }

    pub fn is_line(self) -> bool {
        LocusId::LINES.contains(&self)
    }

    pub fn from_name(s: &str) -> Option<LocusId> {
        LocusId::ALL.into_iter().find(|l| l.name() == s)
    }
}

impl fmt::Display for LocusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A curve in ℙ¹×ℙ¹ given by its affine equation together with a bidegree.
///
/// The bihomogeneous form is `x₁ᵃ y₁ᵇ p(x₀/x₁, y₀/y₁)`; a line at infinity has
/// affine equation `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusComponent {
    pub id: LocusId,
    pub affine: BiPoly,
    pub bidegree: (u32, u32),
}

impl LocusComponent {
    /// Builds a component with bidegree read off the affine equation.
    pub fn affine(id: LocusId, p: BiPoly) -> LocusComponent {
        let bidegree = (
            p.degree_in(Var::X).unwrap_or(0),
            p.degree_in(Var::Y).unwrap_or(0),
        );
        LocusComponent {
            id,
            affine: p,
            bidegree,
        }
    }

    pub fn at_infinity(id: LocusId, v: Var) -> LocusComponent {
        LocusComponent {
            id,
            affine: BiPoly::one(),
            bidegree: match v {
                Var::X => (1, 0),
                Var::Y => (0, 1),
            },
        }
    }

    /// Value of the bihomogeneous form at normalized projective pairs.
    pub fn eval_bihomogeneous<K: Field>(&self, x: &Ext<K>, y: &Ext<K>) -> K {
        eval_bihomogeneous(&self.affine, self.bidegree, x, y)
    }

    pub fn contains<K: Field>(&self, x: &Ext<K>, y: &Ext<K>) -> bool {
        self.eval_bihomogeneous(x, y).is_zero()
    }

    /// The bihomogeneous form written in `x0, x1, y0, y1`.
    pub fn bihomogeneous_string(&self) -> String {
        let (a, b) = self.bidegree;
        let mut terms: Vec<_> = self.affine.terms().collect();
        terms.sort_by_key(|(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        let mut out = String::new();
        for (&(i, j), c) in terms {
            let mut factors: Vec<String> = Vec::new();
            for (name, e) in [("x0", i), ("x1", a - i), ("y0", j), ("y1", b - j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let mono = factors.join("*");
            let cs = c.to_string();
            let term = match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs.clone(),
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                _ => format!("{cs}*{mono}"),
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

/// Evaluates `x₁ᵃ y₁ᵇ p(x₀/x₁, y₀/y₁)` at normalized projective pairs.
pub fn eval_bihomogeneous<K: Field>(p: &BiPoly, bidegree: (u32, u32), x: &Ext<K>, y: &Ext<K>) -> K {
    let (a, b) = bidegree;
    let (x0, x1) = x.pair();
    let (y0, y1) = y.pair();
    p.terms().fold(K::zero(), |acc, (&(i, j), c)| {
        acc + K::from_rational(c) * x0.pow(i) * x1.pow(a - i) * y0.pow(j) * y1.pow(b - j)
    })
}

/// The six lines of ℒ followed by the four curves of 𝒵, with primitive
/// equations of positive graded-lex leading coefficient.
pub fn standard_loci() -> Vec<LocusComponent> {
    let bp = BiPoly::from_int_terms;
    vec![
        LocusComponent::affine(LocusId::Lx0, bp(&[(1, 0, 1)])),
        LocusComponent::affine(LocusId::Ly0, bp(&[(0, 1, 1)])),
        LocusComponent::affine(LocusId::Lx1, bp(&[(1, 0, 1), (0, 0, -1)])),
        LocusComponent::affine(LocusId::Ly1, bp(&[(0, 1, 1), (0, 0, -1)])),
        LocusComponent::at_infinity(LocusId::LxInf, Var::X),
        LocusComponent::at_infinity(LocusId::LyInf, Var::Y),
        LocusComponent::affine(
            LocusId::Z1,
            bp(&[(2, 0, 1), (1, 0, -2), (0, 0, 1), (0, 1, -1)]),
        ),
        LocusComponent::affine(LocusId::Z2, bp(&[(2, 0, 1), (0, 1, 1), (0, 0, -1)])),
        LocusComponent::affine(LocusId::Z3, bp(&[(1, 0, 1), (0, 1, 1), (0, 0, -1)])),
        LocusComponent::affine(
            LocusId::Z4,
            bp(&[(1, 1, 2), (2, 0, 1), (0, 1, -1), (1, 0, -2), (0, 0, 1)]),
        ),
    ]
}

pub fn locus(loci: &[LocusComponent], id: LocusId) -> &LocusComponent {
    loci.iter()
        .find(|l| l.id == id)
        .unwrap_or_else(|| panic!("locus {id} missing from registry"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Rational};

    #[test]
    fn bidegrees_are_computed() {
        let loci = standard_loci();
        let bd: Vec<(u32, u32)> = LocusId::CURVES
            .iter()
            .map(|&id| locus(&loci, id).bidegree)
            .collect();
        assert_eq!(bd, vec![(2, 1), (2, 1), (1, 1), (2, 1)]);
        assert_eq!(locus(&loci, LocusId::LxInf).bidegree, (1, 0));
    }

    #[test]
    fn equations_are_normalized() {
        for l in standard_loci() {
            assert_eq!(l.affine.normalized(), l.affine, "{}", l.id);
        }
    }

    #[test]
    fn points_at_infinity() {
        let loci = standard_loci();
        let inf = Ext::<Rational>::Infinity;
        let on = |id| locus(&loci, id).contains(&inf, &inf);
        // every 𝒵 closure passes through (∞, ∞)
        assert!(on(LocusId::LxInf) && on(LocusId::LyInf));
        assert!(on(LocusId::Z1) && on(LocusId::Z3) && on(LocusId::Z2) && on(LocusId::Z4));
        assert!(!on(LocusId::Lx0));
        assert!(!locus(&loci, LocusId::Z4).contains(&inf, &Ext::Finite(int(0))));
    }

    #[test]
    fn bihomogeneous_rendering() {
        let loci = standard_loci();
        assert_eq!(
            locus(&loci, LocusId::Z3).bihomogeneous_string(),
            "x0*y1+x1*y0-x1*y1"
        );
        assert_eq!(locus(&loci, LocusId::LxInf).bihomogeneous_string(), "x1");
    }
}
