use std::fmt::Write as _;

use clap::ValueEnum;

use shknot_core::knot_id::{project_along, Axis, ProjectError};
use shknot_core::lattice::{Lattice, LatticePoint, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Plane {
    /// Straight down the vertical axis.
    Xy,
    /// The sheared view the classifier projects along.
    Tilt,
}

const UNIT: f64 = 60.0;
const MARGIN: f64 = 30.0;
const GAP: f64 = 0.18;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

fn euclid(l: Lattice, uv: [f64; 2]) -> [f64; 2] {
    match l {
        Lattice::Cubic => uv,
        Lattice::Sh => [uv[0] / 2.0, uv[1] * 3f64.sqrt() / 2.0],
    }
}

/// SVG drawing with under-strand gaps at every crossing of the projection
/// used for classification. Planar sticks share a colour per level.
pub fn render_svg(p: &Polygon, plane: Plane) -> Result<String, ProjectError> {
    let l = p.lattice();
    let n = p.len();
    let (diagram, frame) = project_along(p, Axis::Vertical)?;
    let verts = p.vertices();
    let pos = |v: LatticePoint| -> [f64; 2] {
        let [u, w, c] = v.uvc(l);
        match plane {
            Plane::Xy => euclid(l, [u as f64, w as f64]),
            Plane::Tilt => {
                let (img, _) = frame.map([u, w, c]);
                let s = frame.scale as f64;
                euclid(l, [img[0] as f64 / s, img[1] as f64 / s])
            }
        }
    };
    let pts: Vec<[f64; 2]> = verts.iter().map(|&v| pos(v)).collect();
    let mut unders: Vec<Vec<f64>> = vec![Vec::new(); n];
    for c in diagram.crossings() {
        if let Some(g) = c.geometry {
            let t = *g.under.param.numer() as f64 / *g.under.param.denom() as f64;
            unders[g.under.stick].push(t);
        }
    }
    let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
    for q in &pts {
        for k in 0..2 {
            lo[k] = lo[k].min(q[k]);
            hi[k] = hi[k].max(q[k]);
        }
    }
    let width = (hi[0] - lo[0]) * UNIT + 2.0 * MARGIN;
    let height = (hi[1] - lo[1]) * UNIT + 2.0 * MARGIN;
    let screen = |q: [f64; 2]| [(q[0] - lo[0]) * UNIT + MARGIN, (hi[1] - q[1]) * UNIT + MARGIN];
    let levels = shknot_core::lattice::w_levels(p);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}" data-crossings="{}">"#,
        diagram.crossing_count()
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for i in 0..n {
        let s = p.sticks()[i];
        let (colour, class) = if s.dir == l.vertical() {
            ("#7f7f7f", "vertical".to_string())
        } else {
            let k = levels.iter().position(|&h| h == verts[i].c).unwrap_or(0);
            (PALETTE[k % PALETTE.len()], format!("level-{k}"))
        };
        let (a, b) = (pts[i], pts[i + 1]);
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
        let mut cuts = unders[i].clone();
        cuts.sort_by(f64::total_cmp);
        let mut pieces = Vec::new();
        let mut start = 0.0;
        for t in cuts {
            let d = if len > 0.0 { GAP / len } else { 0.0 };
            pieces.push((start, (t - d).max(start)));
            start = (t + d).min(1.0);
        }
        pieces.push((start, 1.0));
        for (t0, t1) in pieces {
            if t1 < t0 {
                continue;
            }
            let at = |t: f64| screen([a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t]);
            let (x0, x1) = (at(t0), at(t1));
            let _ = writeln!(
                svg,
                r#"<line class="stick {class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{colour}" stroke-width="4" stroke-linecap="round"/>"#,
                x0[0], x0[1], x1[0], x1[1]
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
