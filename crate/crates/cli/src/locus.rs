use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use per4_core::family::{diagonal_punctures, LocusComponent};
use per4_core::field::{int, parse_rational};
use per4_core::poly::rational_roots;
use per4_core::{Rational, UniPoly};

pub const SIZE: i64 = 600;

#[derive(Clone, Debug, PartialEq)]
pub struct Window {
    pub xmin: Rational,
    pub xmax: Rational,
    pub ymin: Rational,
    pub ymax: Rational,
}

impl Default for Window {
    fn default() -> Window {
        Window {
            xmin: int(-2),
            xmax: int(3),
            ymin: int(-2),
            ymax: int(3),
        }
    }
}

impl std::str::FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Window, String> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err("expected xmin,xmax,ymin,ymax".into());
        }
        let v: Vec<Rational> = parts
            .iter()
            .map(|p| parse_rational(p).ok_or_else(|| format!("{p:?} is not a rational number")))
            .collect::<Result<_, _>>()?;
        let w = Window {
            xmin: v[0].clone(),
            xmax: v[1].clone(),
            ymin: v[2].clone(),
            ymax: v[3].clone(),
        };
        if w.xmin >= w.xmax || w.ymin >= w.ymax {
            return Err("window must have xmin < xmax and ymin < ymax".into());
        }
        Ok(w)
    }
}

impl Window {
    fn to_json(&self) -> Value {
        json!([
            self.xmin.to_string(),
            self.xmax.to_string(),
            self.ymin.to_string(),
            self.ymax.to_string()
        ])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    Line,
    LineAtInfinity,
    Curve,
    Diagonal,
}

impl PathKind {
    fn class(self) -> &'static str {
        match self {
            PathKind::Line => "line",
            PathKind::LineAtInfinity => "line at-infinity",
            PathKind::Curve => "curve",
            PathKind::Diagonal => "diagonal",
        }
    }
}

/// One drawn component as polylines in plane coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct DrawnPath {
    pub name: String,
    pub kind: PathKind,
    pub equation: String,
    pub pieces: Vec<Vec<(Rational, Rational)>>,
}

/// Prints a coordinate rounded to 15 significant digits.
pub fn decimal(r: &Rational) -> String {
    let v = r.to_f64().unwrap_or(f64::NAN);
    let rounded: f64 = format!("{v:.14e}").parse().unwrap_or(v);
    if rounded == 0.0 {
        "0".into()
    } else {
        format!("{rounded}")
    }
}

fn poly(coeffs: &[i64]) -> UniPoly<Rational> {
    UniPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), "x")
}

/// `y = num(x)/den(x)` sampled at `samples` equally spaced abscissae. A
/// piece ends where the denominator vanishes or changes sign and where the
/// curve leaves the window by more than its height.
fn sample_graph(
    w: &Window,
    samples: usize,
    num: &UniPoly<Rational>,
    den: &UniPoly<Rational>,
) -> (Vec<Vec<(Rational, Rational)>>, Vec<Rational>) {
    let span = w.ymax.clone() - w.ymin.clone();
    let (lo, hi) = (w.ymin.clone() - span.clone(), w.ymax.clone() + span);
    let step = (w.xmax.clone() - w.xmin.clone()) / int(samples as i64 - 1);
    let mut pieces: Vec<Vec<(Rational, Rational)>> = Vec::new();
    let mut current: Vec<(Rational, Rational)> = Vec::new();
    let mut skipped = Vec::new();
    let mut last_sign: Option<bool> = None;
    for i in 0..samples {
        let x = w.xmin.clone() + step.clone() * int(i as i64);
        let d = den.eval(&x);
        let sign = (!d.is_zero()).then(|| d.is_positive());
        let crossed = matches!((last_sign, sign), (Some(a), Some(b)) if a != b);
        if d.is_zero() {
            skipped.push(x.clone());
        }
        let y = sign.map(|_| num.eval(&x) / d);
        let inside = y.as_ref().is_some_and(|y| *y >= lo && *y <= hi);
        if crossed || !inside {
            if current.len() > 1 {
                pieces.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
        }
        if let (true, Some(y)) = (inside, y) {
            current.push((x, y));
        }
        last_sign = sign;
    }
    if current.len() > 1 {
        pieces.push(current);
    }
    (pieces, skipped)
}

fn vertical(w: &Window, x: Rational) -> Vec<Vec<(Rational, Rational)>> {
    vec![vec![(x.clone(), w.ymin.clone()), (x, w.ymax.clone())]]
}

fn horizontal(w: &Window, y: Rational) -> Vec<Vec<(Rational, Rational)>> {
    vec![vec![(w.xmin.clone(), y.clone()), (w.xmax.clone(), y)]]
}

pub struct Rendering {
    pub paths: Vec<DrawnPath>,
    /// Abscissae dropped from a curve because its solved form has a pole.
    pub omitted: Vec<(String, Rational)>,
    /// Vertical asymptotes where a piece of a curve is broken.
    pub asymptotes: Vec<(String, Rational)>,
}

/// The six lines of ℒ, the four curves of 𝒵 solved for y, and the diagonal.
/// The two lines at infinity are drawn along the right and top edges.
pub fn render_paths(w: &Window, samples: usize) -> Rendering {
    let mut paths = Vec::new();
    let mut omitted = Vec::new();
    let mut asymptotes = Vec::new();
    let mut line = |name: &str, kind, equation: &str, pieces| {
        paths.push(DrawnPath {
            name: name.into(),
            kind,
            equation: equation.into(),
            pieces,
        })
    };
    line("L_x0", PathKind::Line, "x=0", vertical(w, int(0)));
    line("L_x1", PathKind::Line, "x=1", vertical(w, int(1)));
    line(
        "L_xinf",
        PathKind::LineAtInfinity,
        "x=inf",
        vertical(w, w.xmax.clone()),
    );
    line("L_y0", PathKind::Line, "y=0", horizontal(w, int(0)));
    line("L_y1", PathKind::Line, "y=1", horizontal(w, int(1)));
    line(
        "L_yinf",
        PathKind::LineAtInfinity,
        "y=inf",
        horizontal(w, w.ymax.clone()),
    );
    let one = poly(&[1]);
    let graphs: [(&str, &str, UniPoly<Rational>, UniPoly<Rational>); 5] = [
        ("Z1", "y=(x-1)^2", poly(&[1, -2, 1]), one.clone()),
        ("Z2", "y=1-x^2", poly(&[1, 0, -1]), one.clone()),
        ("Z3", "y=1-x", poly(&[1, -1]), one.clone()),
        ("Z4", "y=(x-1)^2/(1-2x)", poly(&[1, -2, 1]), poly(&[1, -2])),
        ("diagonal", "y=x", poly(&[0, 1]), one),
    ];
    for (name, equation, num, den) in graphs {
        let (pieces, skipped) = sample_graph(w, samples, &num, &den);
        asymptotes.extend(
            rational_roots(&den)
                .into_iter()
                .map(|x| (name.to_string(), x)),
        );
        omitted.extend(skipped.into_iter().map(|x| (name.to_string(), x)));
        let kind = if name == "diagonal" {
            PathKind::Diagonal
        } else {
            PathKind::Curve
        };
        paths.push(DrawnPath {
            name: name.into(),
            kind,
            equation: equation.into(),
            pieces,
        });
    }
    Rendering {
        paths,
        omitted,
        asymptotes,
    }
}

fn to_screen(w: &Window, p: &(Rational, Rational)) -> (Rational, Rational) {
    let size = int(SIZE);
    let sx = (p.0.clone() - w.xmin.clone()) / (w.xmax.clone() - w.xmin.clone()) * size.clone();
    let sy = (w.ymax.clone() - p.1.clone()) / (w.ymax.clone() - w.ymin.clone()) * size;
    (sx, sy)
}

pub fn svg(w: &Window, r: &Rendering) -> String {
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, "  <style>");
    let _ = writeln!(
        s,
        "    .line {{ stroke: #c0392b; stroke-width: 2; fill: none; }}"
    );
    let _ = writeln!(s, "    .at-infinity {{ stroke-dasharray: 8 4; }}");
    let _ = writeln!(
        s,
        "    .curve {{ stroke: #1f4e9a; stroke-width: 2; fill: none; }}"
    );
    let _ = writeln!(s, "    .diagonal {{ stroke: #2e8b57; stroke-width: 1.5; stroke-dasharray: 3 3; fill: none; }}");
    let _ = writeln!(s, "  </style>");
    let _ = writeln!(
        s,
        r#"  <clipPath id="window"><rect x="0" y="0" width="{SIZE}" height="{SIZE}"/></clipPath>"#
    );
    let _ = writeln!(
        s,
        r#"  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="black"/>"#
    );
    let _ = writeln!(s, r#"  <g clip-path="url(#window)">"#);
    for p in &r.paths {
        let mut d = String::new();
        for piece in &p.pieces {
            for (i, pt) in piece.iter().enumerate() {
                let (x, y) = to_screen(w, pt);
                if !d.is_empty() {
                    d.push(' ');
                }
                let _ = write!(
                    d,
                    "{}{},{}",
                    if i == 0 { "M" } else { "L" },
                    decimal(&x),
                    decimal(&y)
                );
            }
        }
        let _ = writeln!(
            s,
            r#"    <path id="{}" class="{}" d="{}"><title>{}</title></path>"#,
            p.name,
            p.kind.class(),
            d,
            p.equation
        );
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, "</svg>");
    s
}

pub fn locus_json(
    w: &Window,
    samples: usize,
    r: &Rendering,
    loci: &[LocusComponent],
) -> Result<Value, String> {
    let groups = diagonal_punctures(loci).map_err(|e| e.to_string())?;
    let intersections: Vec<Value> = groups
        .iter()
        .map(|g| {
            json!({
                "minimal_polynomial": g.minimal_polynomial,
                "points": g.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "real": g.real,
                "loci": g.loci,
            })
        })
        .collect();
    let paths: Vec<Value> = r
        .paths
        .iter()
        .map(|p| {
            json!({
                "name": p.name,
                "kind": p.kind,
                "equation": p.equation,
                "pieces": p.pieces.len(),
                "points": p.pieces.iter().map(Vec::len).sum::<usize>(),
            })
        })
        .collect();
    let omitted: Vec<Value> = r
        .omitted
        .iter()
        .map(
            |(c, x)| json!({ "curve": c, "x": x.to_string(), "reason": "pole of the solved form" }),
        )
        .collect();
    let asymptotes: Vec<Value> = r
        .asymptotes
        .iter()
        .map(|(c, x)| json!({ "curve": c, "x": x.to_string() }))
        .collect();
    Ok(json!({
        "asymptotes": asymptotes,
        "window": w.to_json(),
        "samples": samples,
        "paths": paths,
        "diagonal_intersections": intersections,
        "omitted_samples": omitted,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use per4_core::field::rat;

    #[test]
    fn decimals() {
        assert_eq!(decimal(&rat(1, 3)), "0.333333333333333");
        assert_eq!(decimal(&int(120)), "120");
        assert_eq!(decimal(&int(0)), "0");
    }

    #[test]
    fn z4_breaks_at_its_pole() {
        let w = Window::default();
        let r = render_paths(&w, 11);
        let z4 = r.paths.iter().find(|p| p.name == "Z4").unwrap();
        assert!(z4.pieces.len() >= 2);
        assert_eq!(r.omitted, vec![("Z4".to_string(), rat(1, 2))]);
        assert_eq!(r.asymptotes, r.omitted);
        for piece in &z4.pieces {
            let left = piece.iter().all(|(x, _)| *x < rat(1, 2));
            let right = piece.iter().all(|(x, _)| *x > rat(1, 2));
            assert!(left || right);
        }
    }

    #[test]
    fn window_parsing() {
        let w: Window = "-1,2,0,1/2".parse().unwrap();
        assert_eq!(w.ymax, rat(1, 2));
        assert!("1,0,0,1".parse::<Window>().is_err());
        assert!("a,1,0,1".parse::<Window>().is_err());
    }
}
