//! Generic projection of a lattice polygon to a knot diagram.
//!
//! A frame is an integer linear map `(u, v, c) -> (f1, f2)` together with a
//! depth functional. The vertical frame looks down the height axis with a
//! small rational shear `(e1/D, e2/D)`; two side frames look along `u` and
//! along `v`. Shears come from a fixed schedule of prime pairs, so the result
//! is reproducible. Every frame is an orientation-preserving view (image
//! axes and depth form a positive basis).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::diagram::{Crossing, CrossingGeometry, Diagram, Passage, StrandPos, Q128};
use crate::lattice::Polygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Vertical,
    AlongU,
    AlongV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub axis: Axis,
    pub scale: i64,
    pub e1: i64,
    pub e2: i64,
}

const PRIMES: [i64; 17] = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Number of shears tried before giving up.
pub const SCHEDULE_LEN: usize = 16;

impl Frame {
    /// The `k`-th frame of the schedule: shear `(1/p_k, 1/p_{k+1})`.
    pub fn scheduled(axis: Axis, k: usize) -> Frame {
        let (p, q) = (PRIMES[k], PRIMES[k + 1]);
        Frame { axis, scale: p * q, e1: q, e2: p }
    }

    /// Image point and depth; larger depth is nearer the viewer.
    pub fn map(&self, x: [i64; 3]) -> ([i64; 2], i64) {
        let [u, v, c] = x;
        let (d, e1, e2) = (self.scale, self.e1, self.e2);
        match self.axis {
            Axis::Vertical => ([d * u - e1 * c, d * v - e2 * c], c),
            Axis::AlongU => ([d * v - e1 * u, d * c - e2 * u], u),
            Axis::AlongV => ([d * c - e1 * v, d * u - e2 * v], v),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectError {
    /// Two sticks meet in space: the polygon is not embedded.
    NotEmbedded {
        first: usize,
        second: usize,
    },
    DegeneracyUnresolved,
}

impl fmt::Display for ProjectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectError::NotEmbedded { first, second } => {
                write!(f, "sticks {first} and {second} intersect")
            }
            ProjectError::DegeneracyUnresolved => f.write_str("no generic projection found in the shear schedule"),
        }
    }
}

impl core::error::Error for ProjectError {}

#[inline]
fn orient(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i128 {
    (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128 - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128
}

#[inline]
fn within(a: [i64; 2], b: [i64; 2], x: [i64; 2]) -> bool {
    // x is known to be collinear with ab
    a[0].min(b[0]) <= x[0] && x[0] <= a[0].max(b[0]) && a[1].min(b[1]) <= x[1] && x[1] <= a[1].max(b[1])
}

enum Meet {
    Apart,
    /// Proper crossing at parameters `tn/td` and `sn/sd`, denominators positive.
    Cross {
        tn: i128,
        td: i128,
        sn: i128,
        sd: i128,
    },
    Degenerate,
}

fn meet(p0: [i64; 2], p1: [i64; 2], q0: [i64; 2], q1: [i64; 2]) -> Meet {
    let o1 = orient(p0, p1, q0);
    let o2 = orient(p0, p1, q1);
    let o3 = orient(q0, q1, p0);
    let o4 = orient(q0, q1, p1);
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        if (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0) {
            let (mut tn, mut td) = (o3, o3 - o4);
            let (mut sn, mut sd) = (o1, o1 - o2);
            if td < 0 {
                tn = -tn;
                td = -td;
            }
            if sd < 0 {
                sn = -sn;
                sd = -sd;
            }
            return Meet::Cross { tn, td, sn, sd };
        }
        return Meet::Apart;
    }
    let touches = (o1 == 0 && within(p0, p1, q0))
        || (o2 == 0 && within(p0, p1, q1))
        || (o3 == 0 && within(q0, q1, p0))
        || (o4 == 0 && within(q0, q1, p1));
    if touches {
        Meet::Degenerate
    } else {
        Meet::Apart
    }
}

struct Found {
    over: StrandPos,
    under: StrandPos,
    point: [Q128; 2],
    sign: i8,
}

/// Projects through one frame. `Ok(None)` means the view is not generic.
pub fn project_with(p: &Polygon, frame: Frame) -> Result<Option<Diagram>, ProjectError> {
    let l = p.lattice();
    let verts = p.vertices();
    let n = p.len();
    let img: Vec<([i64; 2], i64)> = verts[..n].iter().map(|v| frame.map(v.uvc(l))).collect();
    let seg = |i: usize| (img[i], img[(i + 1) % n]);
    for i in 0..n {
        let ((a, _), (b, _)) = seg(i);
        if a == b {
            return Ok(None);
        }
    }
    let mut found: Vec<Found> = Vec::new();
    for i in 0..n {
        let ((p0, h0), (p1, h1)) = seg(i);
        for j in i + 1..n {
            let ((q0, k0), (q1, k1)) = seg(j);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // shared vertex, and the other ends must not fold back onto it
                let (shared, a, b) = if j == i + 1 { (p1, p0, q1) } else { (p0, p1, q0) };
                if n > 2 && orient(shared, a, b) == 0 {
                    let da = [a[0] - shared[0], a[1] - shared[1]];
                    let db = [b[0] - shared[0], b[1] - shared[1]];
                    if da[0] as i128 * db[0] as i128 + da[1] as i128 * db[1] as i128 > 0 {
                        return Ok(None);
                    }
                }
                continue;
            }
            match meet(p0, p1, q0, q1) {
                Meet::Apart => {}
                Meet::Degenerate => return Ok(None),
                Meet::Cross { tn, td, sn, sd } => {
                    // depth comparison scaled by td * sd
                    let dp = (h0 as i128 * td + tn * (h1 - h0) as i128) * sd;
                    let dq = (k0 as i128 * sd + sn * (k1 - k0) as i128) * td;
                    let t = Q128::new(tn, td);
                    let s = Q128::new(sn, sd);
                    let a = StrandPos { stick: i, param: t };
                    let b = StrandPos { stick: j, param: s };
                    let (over, under, od, ud) = match dp.cmp(&dq) {
                        Ordering::Greater => (a, b, (p0, p1), (q0, q1)),
                        Ordering::Less => (b, a, (q0, q1), (p0, p1)),
                        Ordering::Equal => return Err(ProjectError::NotEmbedded { first: i, second: j }),
                    };
                    let ov = [od.1[0] - od.0[0], od.1[1] - od.0[1]];
                    let uv = [ud.1[0] - ud.0[0], ud.1[1] - ud.0[1]];
                    let cr = ov[0] as i128 * uv[1] as i128 - ov[1] as i128 * uv[0] as i128;
                    let point = [
                        Q128::from_integer(p0[0] as i128) + t * (p1[0] - p0[0]) as i128,
                        Q128::from_integer(p0[1] as i128) + t * (p1[1] - p0[1]) as i128,
                    ];
                    found.push(Found { over, under, point, sign: if cr > 0 { 1 } else { -1 } });
                }
            }
        }
    }
    for a in 0..found.len() {
        for b in a + 1..found.len() {
            if found[a].point == found[b].point {
                return Ok(None);
            }
        }
    }
    // walk the polygon, ordering passages along each stick
    let mut on_stick: Vec<Vec<(Q128, Passage)>> = vec![Vec::new(); n];
    for (k, f) in found.iter().enumerate() {
        on_stick[f.over.stick].push((f.over.param, Passage { crossing: k, over: true }));
        on_stick[f.under.stick].push((f.under.param, Passage { crossing: k, over: false }));
    }
    let mut gauss = Vec::with_capacity(2 * found.len());
    for list in &mut on_stick {
        list.sort_by(|x, y| x.0.cmp(&y.0));
        gauss.extend(list.iter().map(|x| x.1));
    }
    let crossings = found
        .iter()
        .map(|f| Crossing {
            sign: f.sign,
            geometry: Some(CrossingGeometry { over: f.over, under: f.under, point: f.point }),
        })
        .collect();
    Ok(Some(Diagram::from_gauss(crossings, gauss).expect("projection yields a consistent code")))
}

/// First generic frame of the schedule along `axis`.
pub fn project_along(p: &Polygon, axis: Axis) -> Result<(Diagram, Frame), ProjectError> {
    for k in 0..SCHEDULE_LEN {
        let frame = Frame::scheduled(axis, k);
        if let Some(d) = project_with(p, frame)? {
            return Ok((d, frame));
        }
    }
    Err(ProjectError::DegeneracyUnresolved)
}

/// Projection down the height axis with the first generic shear.
pub fn project(p: &Polygon) -> Result<Diagram, ProjectError> {
    project_along(p, Axis::Vertical).map(|(d, _)| d)
}
