//! Cubic polygon to an sh polygon with one stick fewer: place an x-y corner
//! at the origin with legs along `+x` and `+y`, stretch the shorter leg,
//! squeeze whatever lies in the corner triangle out past its hypotenuse,
//! map to sh and cut the corner with a z-stick.

use alloc::vec::Vec;

use super::region::{contacts, only_at, Contact, Touch};
use super::{corner_to_z, require, unit_of, CornerSite, MoveError, MoveOutcome, MoveTag};
use crate::lattice::{symmetry_group, Lattice, LatticePoint, Polygon, Symmetry};
use crate::transform::apply_t;

fn remap(p: &Polygon, f: impl Fn(LatticePoint) -> LatticePoint) -> Polygon {
    let verts: Vec<LatticePoint> = p.vertices()[..p.len()].iter().map(|&v| f(v)).collect();
    Polygon::from_vertices(p.lattice(), &verts).expect("monotone maps keep lattice steps")
}

/// Lengthens the shorter leg of the corner at the origin (legs `a` along
/// `+x`, `b` along `+y`) by moving everything beyond the origin outwards.
pub fn equalize_legs(p: &Polygon, a: i64, b: i64) -> Polygon {
    if a < b {
        remap(p, |v| if v.a > 0 { LatticePoint::new(v.a + b - a, v.b, v.c) } else { v })
    } else if a > b {
        remap(p, |v| if v.b > 0 { LatticePoint::new(v.a, v.b + a - b, v.c) } else { v })
    } else {
        p.clone()
    }
}

/// Squeezes the band `0 < y < b` into `b - px < y < b`, then multiplies
/// both planar coordinates by `b` so the result is integral.
pub fn squeeze_band(p: &Polygon, b: i64, px: i64) -> Polygon {
    remap(p, |v| {
        let y = if v.b > 0 && v.b < b { b * (b - px) + px * v.b } else { b * v.b };
        LatticePoint::new(b * v.a, y, v.c)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqueezeReport {
    pub outcome: MoveOutcome,
    /// First stick of the corner used, in the input word.
    pub corner: usize,
    /// Leg lengths before equalizing.
    pub legs: (i64, i64),
    /// Smallest x among obstructions, when the triangle was not empty.
    pub px: Option<i64>,
    pub obstructions: usize,
}

struct Candidate {
    index: usize,
    placed: Polygon,
    legs: (i64, i64),
    hits: Vec<Contact>,
}

fn triangle_hits(p: &Polygon, i: usize, c: i64) -> Vec<Contact> {
    let n = p.len();
    let tri = [[0, 0], [c, 0], [0, c]];
    let all = contacts(
        p,
        LatticePoint::ORIGIN,
        LatticePoint::new(1, 0, 0),
        LatticePoint::new(0, 1, 0),
        &tri,
        &[i, (i + 1) % n],
    );
    all.into_iter().filter(|h| !only_at(&[*h], &[[c, 0], [0, c]])).collect()
}

/// The corner at stick pair `i` moved to the origin by a proper symmetry so
/// its legs run along `+x` and `+y`.
fn place(p: &Polygon, i: usize, group: &[Symmetry]) -> Option<Candidate> {
    let n = p.len();
    let l = p.lattice();
    let (s, t) = (p.sticks()[i], p.sticks()[(i + 1) % n]);
    let (d1, d2) = (unit_of(l, s) * -1, unit_of(l, t));
    let g = group.iter().find(|g| {
        g.is_proper()
            && g.apply_point(l, d1) == LatticePoint::new(1, 0, 0)
            && g.apply_point(l, d2) == LatticePoint::new(0, 1, 0)
    })?;
    let corner = g.apply_point(l, p.vertices()[(i + 1) % n]);
    let moved = g.apply(p).translated(corner * -1);
    let (a, b) = (s.len.abs(), t.len.abs());
    let placed = equalize_legs(&moved, a, b);
    let hits = triangle_hits(&placed, i, a.max(b));
    Some(Candidate { index: i, placed, legs: (a, b), hits })
}

fn min_x(hits: &[Contact]) -> i64 {
    hits.iter()
        .flat_map(|h| match h.touch {
            Touch::Point(x) => [x[0], x[0]],
            Touch::Span(x, y) => [x[0], y[0]],
        })
        .map(|x| x.floor().to_integer())
        .min()
        .unwrap_or(0)
}

fn attempt(p: &Polygon, cand: &Candidate) -> Option<SqueezeReport> {
    let c = cand.legs.0.max(cand.legs.1);
    let (ready, leg, px) = if cand.hits.is_empty() {
        (cand.placed.clone(), c, None)
    } else {
        let px = min_x(&cand.hits);
        if px < 1 || px > c {
            return None;
        }
        let q = squeeze_band(&cand.placed, c, px);
        if !triangle_hits(&q, cand.index, c * c).is_empty() {
            return None;
        }
        (q, c * c, Some(px))
    };
    let sh = apply_t(&ready).ok()?;
    let site = CornerSite { stick_index: cand.index, x_first: true, leg_length: leg };
    let out = corner_to_z(&sh, site).ok()?;
    if out.polygon.len() + 1 != p.len() {
        return None;
    }
    let outcome = MoveOutcome::new(p, out.polygon, MoveTag::Squeeze, cand.index);
    Some(SqueezeReport { outcome, corner: cand.index, legs: cand.legs, px, obstructions: cand.hits.len() })
}

/// Tries corners by number of obstructions, then leg length, then position.
pub fn squeeze_and_reduce(p: &Polygon) -> Result<SqueezeReport, MoveError> {
    require(p, Lattice::Cubic)?;
    let group = symmetry_group(Lattice::Cubic);
    let mut cands: Vec<Candidate> = (0..p.len()).filter_map(|i| place(p, i, &group)).collect();
    cands.sort_by_key(|c| (c.hits.len(), c.legs.0.max(c.legs.1), c.index));
    cands.iter().find_map(|c| attempt(p, c)).ok_or(MoveError::CornerSelectionFailed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{parse_word, validate};

    #[test]
    fn unit_square_becomes_triangle() {
        let p = parse_word("x^1 y^1 x^-1 y^-1", Lattice::Cubic).unwrap();
        let r = squeeze_and_reduce(&p).unwrap();
        assert_eq!(r.outcome.polygon.len(), 3);
        assert_eq!(r.outcome.polygon.lattice(), Lattice::Sh);
        assert!(validate(&r.outcome.polygon).is_valid());
        assert_eq!(r.px, None);
    }

    #[test]
    fn squeeze_moves_points_above_the_hypotenuse() {
        // corner at the origin, a vertical stick through (1, 1) in its triangle
        let p = parse_word("x^-3 y^3 z^1 x^1 y^-2 z^-2 x^2 y^-1 z^1", Lattice::Cubic)
            .unwrap()
            .with_base(LatticePoint::new(3, 0, 0));
        assert!(validate(&p).is_valid());
        assert_eq!(triangle_hits(&p, 0, 3).len(), 1);
        let q = squeeze_band(&p, 3, 1);
        assert!(validate(&q).is_valid());
        assert!(q.vertices().contains(&LatticePoint::new(3, 7, -1)));
        assert!(triangle_hits(&q, 0, 9).is_empty());
        let r = squeeze_and_reduce(&p).unwrap();
        assert_eq!(r.outcome.polygon.len(), 8);
    }
}
