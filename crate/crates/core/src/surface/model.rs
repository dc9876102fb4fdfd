use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Ext, Field, FieldElem, Rational};
use crate::poly::{BiPoly, RatExpr, Var};

/// A Möbius transformation `t ↦ (a·t + b)/(c·t + d)` with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mobius {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Mobius {
        let r = |n: i64| Rational::from_integer(n.into());
        Mobius {
            a: r(a),
            b: r(b),
            c: r(c),
            d: r(d),
        }
    }

    pub fn identity() -> Mobius {
        Mobius::new(1, 0, 0, 1)
    }

    pub fn apply(&self, t: &Ext<FieldElem>) -> Ext<FieldElem> {
        let (t0, t1) = t.pair();
        let f = |r: &Rational| FieldElem::Rational(r.clone());
        let num = f(&self.a) * t0.clone() + f(&self.b) * t1.clone();
        let den = f(&self.c) * t0 + f(&self.d) * t1;
        Ext::from_pair(num, den).expect("invertible transformation")
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }
}

/// How a chart was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartOrigin {
    /// An affine chart of ℙ¹×ℙ¹; inverted coordinates are `1/x`, `1/y`.
    Base { x_inverted: bool, y_inverted: bool },
    /// `p₁ = c₁ + a`, `p₂ = c₂ + s·a`; the exceptional divisor is `a = 0`.
    BlowupSlope { center: usize, parent: usize },
    /// `p₁ = c₁ + w·b`, `p₂ = c₂ + b`; the exceptional divisor is `b = 0`.
    BlowupRatio { center: usize, parent: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    pub name: String,
    pub coords: [String; 2],
    /// `x` and `y` as rational functions of the chart coordinates.
    pub to_base: [RatExpr; 2],
    pub origin: ChartOrigin,
}

impl Chart {
    /// Coordinate cutting out the exceptional divisor born in this chart.
    pub fn exceptional_var(&self) -> Option<Var> {
        match self.origin {
            ChartOrigin::Base { .. } => None,
            ChartOrigin::BlowupSlope { .. } => Some(Var::X),
            ChartOrigin::BlowupRatio { .. } => Some(Var::Y),
        }
    }
}

/// A point of the blown-up surface in chart-independent form: a point of
/// ℙ¹×ℙ¹ off all centers, or a point of an exceptional divisor (by its
/// ratio parameter `w = (p₁ − c₁)/(p₂ − c₂)`) off all later centers.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CanonicalPoint {
    Base {
        x: Ext<FieldElem>,
        y: Ext<FieldElem>,
    },
    Exceptional {
        center: usize,
        w: Ext<FieldElem>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Center {
    pub name: String,
    pub chart: usize,
    pub coords: [Rational; 2],
    pub canonical: CanonicalPoint,
    /// Registry index of the exceptional divisor.
    pub divisor: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DivisorKind {
    Base {
        bidegree: (u32, u32),
        affine: BiPoly,
    },
    Exceptional {
        center: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Divisor {
    pub name: String,
    pub kind: DivisorKind,
    /// Local equation in each chart, `None` where the divisor misses the chart.
    pub equations: Vec<Option<BiPoly>>,
    /// Multiplicity of the divisor's current transform at each center.
    pub multiplicities: Vec<u32>,
    /// Display coordinate on an exceptional divisor as a function of `w`.
    pub display: Mobius,
    pub display_var: String,
}

/// Names for the two charts created by a blowup.
#[derive(Clone, Debug)]
pub struct BlowupSpec {
    pub name: String,
    pub chart: usize,
    pub coords: [Rational; 2],
    pub slope_chart: [String; 2],
    pub ratio_chart: [String; 2],
    pub display: Mobius,
    pub display_var: String,
}

impl BlowupSpec {
    pub fn new(name: &str, chart: usize, coords: [Rational; 2]) -> BlowupSpec {
        let tag = name.trim_start_matches("E_");
        BlowupSpec {
            name: name.to_string(),
            chart,
            coords,
            slope_chart: [format!("a_{tag}"), format!("s_{tag}")],
            ratio_chart: [format!("w_{tag}"), format!("b_{tag}")],
            display: Mobius::identity(),
            display_var: format!("w_{tag}"),
        }
    }

    pub fn slope_names(mut self, a: &str, s: &str) -> Self {
        self.slope_chart = [a.to_string(), s.to_string()];
        self
    }

    pub fn ratio_names(mut self, w: &str, b: &str) -> Self {
        self.ratio_chart = [w.to_string(), b.to_string()];
        self
    }

    pub fn display(mut self, m: Mobius, var: &str) -> Self {
        self.display = m;
        self.display_var = var.to_string();
        self
    }
}

/// ℙ¹×ℙ¹ with an ordered sequence of point blowups, its chart atlas and the
/// transforms of a registry of curves.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceModel {
    pub charts: Vec<Chart>,
    pub centers: Vec<Center>,
    pub divisors: Vec<Divisor>,
}

fn base_chart(x_inverted: bool, y_inverted: bool) -> Chart {
    let name = |inv: bool, v: &str| {
        if inv {
            format!("{v}bar")
        } else {
            v.to_string()
        }
    };
    let coord = |inv: bool, v: Var| {
        let e = RatExpr::var(v);
        if inv {
            e.inv().unwrap()
        } else {
            e
        }
    };
    let (nx, ny) = (name(x_inverted, "x"), name(y_inverted, "y"));
    Chart {
        name: format!("{nx}_{ny}"),
        coords: [nx, ny],
        to_base: [coord(x_inverted, Var::X), coord(y_inverted, Var::Y)],
        origin: ChartOrigin::Base {
            x_inverted,
            y_inverted,
        },
    }
}

/// Local equation of a bidegree-(a, b) curve in a base chart.
fn base_equation(affine: &BiPoly, (a, b): (u32, u32), x_inv: bool, y_inv: bool) -> Option<BiPoly> {
    let p = BiPoly::from_terms(affine.terms().map(|(&(i, j), c)| {
        let i2 = if x_inv { a - i } else { i };
        let j2 = if y_inv { b - j } else { j };
        ((i2, j2), c.clone())
    }));
    nonconstant(p)
}

fn nonconstant(p: BiPoly) -> Option<BiPoly> {
    if p.is_constant() {
        None
    } else {
        Some(p.normalized())
    }
}

impl SurfaceModel {
    /// ℙ¹×ℙ¹ with the four affine charts and the given curves, each named with
    /// its affine equation and bidegree (lines at infinity have equation `1`).
    pub fn new(curves: Vec<(String, BiPoly, (u32, u32))>) -> SurfaceModel {
        let flags = [(false, false), (true, false), (false, true), (true, true)];
        let charts: Vec<Chart> = flags.iter().map(|&(a, b)| base_chart(a, b)).collect();
        let divisors = curves
            .into_iter()
            .map(|(name, affine, bidegree)| Divisor {
                equations: flags
                    .iter()
                    .map(|&(xi, yi)| base_equation(&affine, bidegree, xi, yi))
                    .collect(),
                name,
                kind: DivisorKind::Base { bidegree, affine },
                multiplicities: Vec::new(),
                display: Mobius::identity(),
                display_var: String::new(),
            })
            .collect();
        SurfaceModel {
            charts,
            centers: Vec::new(),
            divisors,
        }
    }

    pub fn chart_index(&self, name: &str) -> Result<usize> {
        self.charts
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownName(format!("chart {name}")))
    }

    pub fn divisor_index(&self, name: &str) -> Result<usize> {
        self.divisors
            .iter()
            .position(|d| d.name == name)
            .ok_or_else(|| Error::UnknownName(format!("divisor {name}")))
    }

    pub fn divisor(&self, name: &str) -> Result<&Divisor> {
        Ok(&self.divisors[self.divisor_index(name)?])
    }

    /// Maps a chart point to its chart-independent form.
    pub fn canonical(&self, chart: usize, p: &[FieldElem; 2]) -> CanonicalPoint {
        let c = &self.charts[chart];
        match c.origin {
            ChartOrigin::Base {
                x_inverted,
                y_inverted,
            } => {
                let coord = |inv: bool, v: &FieldElem| {
                    let e = Ext::Finite(v.clone());
                    if inv {
                        e.recip()
                    } else {
                        e
                    }
                };
                CanonicalPoint::Base {
                    x: coord(x_inverted, &p[0]),
                    y: coord(y_inverted, &p[1]),
                }
            }
            ChartOrigin::BlowupSlope { center, parent } => {
                if p[0].is_zero() {
                    return CanonicalPoint::Exceptional {
                        center,
                        w: Ext::Finite(p[1].clone()).recip(),
                    };
                }
                let [c1, c2] = self.center_coords(center);
                let q = [c1 + p[0].clone(), c2 + p[1].clone() * p[0].clone()];
                self.canonical(parent, &q)
            }
            ChartOrigin::BlowupRatio { center, parent } => {
                if p[1].is_zero() {
                    return CanonicalPoint::Exceptional {
                        center,
                        w: Ext::Finite(p[0].clone()),
                    };
                }
                let [c1, c2] = self.center_coords(center);
                let q = [c1 + p[0].clone() * p[1].clone(), c2 + p[1].clone()];
                self.canonical(parent, &q)
            }
        }
    }

    fn center_coords(&self, center: usize) -> [FieldElem; 2] {
        let c = &self.centers[center].coords;
        [
            FieldElem::Rational(c[0].clone()),
            FieldElem::Rational(c[1].clone()),
        ]
    }

    /// True when the chart point was blown up, so the chart does not
    /// represent the surface there.
    pub fn is_center(&self, p: &CanonicalPoint) -> bool {
        self.centers.iter().any(|c| &c.canonical == p)
    }

    /// Blows up a rational point of a chart.
    pub fn blow_up(&self, spec: BlowupSpec) -> Result<SurfaceModel> {
        if spec.chart >= self.charts.len() {
            return Err(Error::UnknownName(format!("chart #{}", spec.chart)));
        }
        if self.divisors.iter().any(|d| d.name == spec.name) {
            return Err(Error::InvalidArgument(format!(
                "name {} already in use",
                spec.name
            )));
        }
        let point = [
            FieldElem::Rational(spec.coords[0].clone()),
            FieldElem::Rational(spec.coords[1].clone()),
        ];
        let canonical = self.canonical(spec.chart, &point);
        if self.is_center(&canonical) {
            return Err(Error::RepeatedCenter(format!("{canonical:?}")));
        }
        let mut m = self.clone();
        let k = m.centers.len();
        let parent = spec.chart;
        let [c1, c2] = spec.coords.clone();
        let parent_map = m.charts[parent].to_base.clone();
        let cr = |r: &Rational| RatExpr::constant(r.clone());
        let (a, s) = (RatExpr::x(), RatExpr::y());
        let slope_sub = [cr(&c1) + a.clone(), cr(&c2) + s.clone() * a.clone()];
        let ratio_sub = [cr(&c1) + a.clone() * s.clone(), cr(&c2) + s];
        let compose = |sub: &[RatExpr; 2]| -> Result<[RatExpr; 2]> {
            Ok([
                parent_map[0].compose(&sub[0], &sub[1])?,
                parent_map[1].compose(&sub[0], &sub[1])?,
            ])
        };
        let slope_chart = Chart {
            name: format!("{}_slope", spec.name),
            coords: spec.slope_chart.clone(),
            to_base: compose(&slope_sub)?,
            origin: ChartOrigin::BlowupSlope { center: k, parent },
        };
        let ratio_chart = Chart {
            name: format!("{}_ratio", spec.name),
            coords: spec.ratio_chart.clone(),
            to_base: compose(&ratio_sub)?,
            origin: ChartOrigin::BlowupRatio { center: k, parent },
        };
        m.charts.push(slope_chart);
        m.charts.push(ratio_chart);

        let bp = |r: &Rational| BiPoly::constant(r.clone());
        let (pa, ps) = (BiPoly::x(), BiPoly::y());
        let slope_poly = [&bp(&c1) + &pa, &bp(&c2) + &(&ps * &pa)];
        let ratio_poly = [&bp(&c1) + &(&pa * &ps), &bp(&c2) + &ps];
        for d in &mut m.divisors {
            let local = d.equations[parent].clone();
            let mult = local
                .as_ref()
                .and_then(|f| f.translate(&c1, &c2).multiplicity_at_origin())
                .unwrap_or(0);
            d.multiplicities.push(mult);
            let transform = |sub: &[BiPoly; 2], v: Var| {
                local
                    .as_ref()
                    .and_then(|f| nonconstant(f.compose(&sub[0], &sub[1]).strip_power(v, mult)))
            };
            d.equations.push(transform(&slope_poly, Var::X));
            d.equations.push(transform(&ratio_poly, Var::Y));
        }
        let mut equations = vec![None; m.charts.len()];
        equations[m.charts.len() - 2] = Some(BiPoly::x());
        equations[m.charts.len() - 1] = Some(BiPoly::y());
        m.divisors.push(Divisor {
            name: spec.name.clone(),
            kind: DivisorKind::Exceptional { center: k },
            equations,
            multiplicities: vec![0; k + 1],
            display: spec.display,
            display_var: spec.display_var,
        });
        m.centers.push(Center {
            name: spec.name,
            chart: parent,
            coords: spec.coords,
            canonical,
            divisor: m.divisors.len() - 1,
        });
        Ok(m)
    }

    /// Display coordinate of a canonical point on its exceptional divisor.
    pub fn display_param(&self, center: usize, w: &Ext<FieldElem>) -> Ext<FieldElem> {
        self.divisors[self.centers[center].divisor].display.apply(w)
    }

    /// Human-readable location, e.g. `(inf, inf)` or `E_q: v=1`.
    pub fn describe(&self, p: &CanonicalPoint) -> String {
        match p {
            CanonicalPoint::Base { x, y } => format!("({x}, {y})"),
            CanonicalPoint::Exceptional { center, w } => {
                let d = &self.divisors[self.centers[*center].divisor];
                format!("{}: {}={}", d.name, d.display_var, d.display.apply(w))
            }
        }
    }

    /// Whether a divisor passes through a chart point.
    pub fn passes_through(&self, divisor: usize, chart: usize, p: &[FieldElem; 2]) -> bool {
        self.divisors[divisor].equations[chart]
            .as_ref()
            .is_some_and(|f| f.eval_in(&p[0], &p[1]).is_zero())
    }

    pub fn is_exceptional(&self, divisor: usize) -> bool {
        matches!(self.divisors[divisor].kind, DivisorKind::Exceptional { .. })
    }
}

impl fmt::Display for CanonicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalPoint::Base { x, y } => write!(f, "({x}, {y})"),
            CanonicalPoint::Exceptional { center, w } => write!(f, "E#{center}: w={w}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(r: Rational) -> FieldElem {
        FieldElem::Rational(r)
    }
    use crate::field::int;

    fn diag_model() -> SurfaceModel {
        SurfaceModel::new(vec![(
            "V".into(),
            BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]),
            (1, 1),
        )])
    }

    #[test]
    fn base_charts() {
        let m = diag_model();
        assert_eq!(m.charts.len(), 4);
        let names: Vec<&str> = m.charts.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["x_y", "xbar_y", "x_ybar", "xbar_ybar"]);
        // x − y in (x̄, ȳ): ȳ − x̄ up to sign
        let eq = m.divisors[0].equations[3].clone().unwrap();
        assert_eq!(eq, BiPoly::from_int_terms(&[(1, 0, 1), (0, 1, -1)]));
    }

    #[test]
    fn diagonal_meets_e0_at_slope_one() {
        let m = diag_model()
            .blow_up(BlowupSpec::new("E_0", 0, [int(0), int(0)]))
            .unwrap();
        let v = &m.divisors[0];
        assert_eq!(v.multiplicities, vec![1]);
        // in the slope chart y = s·x the proper transform is s − 1
        assert_eq!(
            v.equations[4],
            Some(BiPoly::from_int_terms(&[(0, 1, 1), (0, 0, -1)]))
        );
        let p = m.canonical(4, &[fe(int(0)), fe(int(1))]);
        assert_eq!(
            p,
            CanonicalPoint::Exceptional {
                center: 0,
                w: Ext::Finite(fe(int(1)))
            }
        );
    }

    #[test]
    fn repeated_center_rejected() {
        let m = diag_model()
            .blow_up(BlowupSpec::new("E_0", 0, [int(0), int(0)]))
            .unwrap();
        let err = m.blow_up(BlowupSpec::new("E_again", 0, [int(0), int(0)]));
        assert!(matches!(err, Err(Error::RepeatedCenter(_))));
    }

    #[test]
    fn chart_maps_compose() {
        let m = diag_model()
            .blow_up(BlowupSpec::new("E_inf", 3, [int(0), int(0)]))
            .unwrap();
        // ratio chart: x̄ = w·b, ȳ = b, so x = 1/(w b), y = 1/b
        let c = &m.charts[5];
        let w = RatExpr::x();
        let b = RatExpr::y();
        assert_eq!(c.to_base[0], (w * b.clone()).inv().unwrap());
        assert_eq!(c.to_base[1], b.inv().unwrap());
        let p = m.canonical(5, &[fe(int(2)), fe(int(3))]);
        assert_eq!(
            p,
            CanonicalPoint::Base {
                x: Ext::Finite(fe(Rational::new(1.into(), 6.into()))),
                y: Ext::Finite(fe(Rational::new(1.into(), 3.into())))
            }
        );
    }

    #[test]
    fn mobius_maps() {
        let m = Mobius::new(-1, 1, 0, 1);
        assert_eq!(m.apply(&Ext::Finite(fe(int(0)))), Ext::Finite(fe(int(1))));
        assert_eq!(m.apply(&Ext::Infinity), Ext::Infinity);
        let inv = m.inverse();
        assert_eq!(
            inv.apply(&m.apply(&Ext::Finite(fe(int(5))))),
            Ext::Finite(fe(int(5)))
        );
    }
}
