//! Contacts between a polygon and a flat convex region spanned by two
//! lattice vectors.

use alloc::vec::Vec;

use crate::geom::{clip_to_convex, P2, Q};
use crate::lattice::{LatticePoint, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Touch {
    Point([Q; 2]),
    Span([Q; 2], [Q; 2]),
}

impl Touch {
    pub fn first(&self) -> [Q; 2] {
        match *self {
            Touch::Point(x) | Touch::Span(x, _) => x,
        }
    }

    pub fn midpoint(&self) -> [Q; 2] {
        match *self {
            Touch::Point(x) => x,
            Touch::Span(a, b) => {
                let h = Q::new(1, 2);
                [(a[0] + b[0]) * h, (a[1] + b[1]) * h]
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contact {
    pub stick: usize,
    pub touch: Touch,
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn arr(p: LatticePoint) -> [i64; 3] {
    [p.a, p.b, p.c]
}

/// Affine frame `origin + alpha e1 + beta e2 + gamma n`, with coordinates
/// returned multiplied by the positive determinant.
pub(crate) struct Frame3 {
    origin: [i64; 3],
    cols: [[i64; 3]; 3],
    det: i64,
}

impl Frame3 {
    pub fn new(origin: LatticePoint, e1: LatticePoint, e2: LatticePoint) -> Frame3 {
        let (e1, e2) = (arr(e1), arr(e2));
        for n in [[0, 0, 1], [1, 0, 0], [0, 1, 0]] {
            let det = det3([e1, e2, n]);
            if det != 0 {
                let (cols, det) = if det > 0 { ([e1, e2, n], det) } else { ([e1, e2, [-n[0], -n[1], -n[2]]], -det) };
                return Frame3 { origin: arr(origin), cols, det };
            }
        }
        panic!("region vectors are parallel");
    }

    /// Scaled `(alpha, beta, gamma)`.
    fn coords(&self, x: LatticePoint) -> [i64; 3] {
        let x = arr(x);
        let d = [x[0] - self.origin[0], x[1] - self.origin[1], x[2] - self.origin[2]];
        let [c0, c1, c2] = self.cols;
        [det3([d, c1, c2]), det3([c0, d, c2]), det3([c0, c1, d])]
    }
}

fn scaled(region: &[P2], k: i64) -> Vec<P2> {
    region.iter().map(|p| [p[0] * k, p[1] * k]).collect()
}

/// Every stick not in `skip` that meets the closed region, which lies in the
/// plane through `origin` spanned by `e1` and `e2` and is given in those
/// coordinates.
pub(crate) fn contacts(
    p: &Polygon,
    origin: LatticePoint,
    e1: LatticePoint,
    e2: LatticePoint,
    region: &[P2],
    skip: &[usize],
) -> Vec<Contact> {
    let frame = Frame3::new(origin, e1, e2);
    let d = frame.det;
    let big = scaled(region, d);
    let verts = p.vertices();
    let mut out = Vec::new();
    for i in 0..p.len() {
        if skip.contains(&i) {
            continue;
        }
        let [a0, b0, g0] = frame.coords(verts[i]);
        let [a1, b1, g1] = frame.coords(verts[i + 1]);
        if (g0 > 0 && g1 > 0) || (g0 < 0 && g1 < 0) {
            continue;
        }
        if g0 == 0 && g1 == 0 {
            if let Some((t0, t1)) = clip_to_convex([a0, b0], [a1, b1], &big) {
                let at = |t: Q| [(Q::from_integer(a0) + t * (a1 - a0)) / d, (Q::from_integer(b0) + t * (b1 - b0)) / d];
                let touch = if t0 == t1 { Touch::Point(at(t0)) } else { Touch::Span(at(t0), at(t1)) };
                out.push(Contact { stick: i, touch });
            }
            continue;
        }
        let (mut num, mut den) = (g0, g0 - g1);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let an = a0 * den + num * (a1 - a0);
        let bn = b0 * den + num * (b1 - b0);
        if clip_to_convex([an, bn], [an, bn], &scaled(region, d * den)).is_some() {
            out.push(Contact { stick: i, touch: Touch::Point([Q::new(an, d * den), Q::new(bn, d * den)]) });
        }
    }
    out
}

/// True when every contact is a single point from `allowed`.
pub(crate) fn only_at(contacts: &[Contact], allowed: &[P2]) -> bool {
    contacts.iter().all(|c| match c.touch {
        Touch::Point(x) => allowed.iter().any(|a| x == [Q::from_integer(a[0]), Q::from_integer(a[1])]),
        Touch::Span(..) => false,
    })
}
