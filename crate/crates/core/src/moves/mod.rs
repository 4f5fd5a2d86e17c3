//! Moves that change a lattice polygon without changing its knot type.
//!
//! Each move checks that the flat region it sweeps across is free of the
//! rest of the polygon, rebuilds the word from the new vertex list and
//! reports the change in sticks and edges.

mod region;
mod squeeze;
mod zreplace;

use alloc::vec::Vec;
use core::fmt;

use crate::geom::P2;
use crate::lattice::{validate, Direction, Lattice, LatticePoint, Polygon, Stick};

pub use squeeze::{equalize_legs, squeeze_and_reduce, squeeze_band, SqueezeReport};
pub use zreplace::{
    find_replacement_square, replace_all_z, z_replace, z_replace_report, Obstruction, ObstructionKind,
    ReplacementSquare, Side, SquareCase, ZReplaceReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveTag {
    CornerToZ,
    UnitCornerBevel,
    Squeeze,
    RMove,
    ZReplace,
}

impl MoveTag {
    pub const ALL: [MoveTag; 5] =
        [MoveTag::CornerToZ, MoveTag::UnitCornerBevel, MoveTag::Squeeze, MoveTag::RMove, MoveTag::ZReplace];

    pub fn name(self) -> &'static str {
        match self {
            MoveTag::CornerToZ => "corner_to_z",
            MoveTag::UnitCornerBevel => "bevel",
            MoveTag::Squeeze => "squeeze",
            MoveTag::RMove => "r_move",
            MoveTag::ZReplace => "z_replace",
        }
    }
}

impl fmt::Display for MoveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOutcome {
    pub polygon: Polygon,
    pub tag: MoveTag,
    /// Index of the first stick the move acted on, in the input word.
    pub site: usize,
    pub sticks_delta: i64,
    pub edges_delta: i64,
}

impl MoveOutcome {
    fn new(before: &Polygon, polygon: Polygon, tag: MoveTag, site: usize) -> MoveOutcome {
        MoveOutcome {
            sticks_delta: polygon.len() as i64 - before.len() as i64,
            edges_delta: polygon.edge_length() - before.edge_length(),
            polygon,
            tag,
            site,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveError {
    WrongLattice { expected: Lattice },
    InvalidPolygon,
    IndexOutOfRange,
    NotACorner,
    ObstructedTriangle,
    NoXYCorner,
    NotAdjacent,
    NotPerpendicular,
    RectangleObstructed,
    NotAZStick,
    OtherZInSquare,
    PCaseUnresolvable,
    CornerSelectionFailed,
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::WrongLattice { expected } => write!(f, "expected a {expected} polygon"),
            MoveError::InvalidPolygon => f.write_str("polygon is not closed, maximal and embedded"),
            MoveError::IndexOutOfRange => f.write_str("stick index out of range"),
            MoveError::NotACorner => f.write_str("sticks do not form an x-y corner with a z-stick chord"),
            MoveError::ObstructedTriangle => f.write_str("corner triangle meets another stick"),
            MoveError::NoXYCorner => f.write_str("no x-y corner with a z-stick chord; rotate the polygon first"),
            MoveError::NotAdjacent => f.write_str("sticks are not adjacent"),
            MoveError::NotPerpendicular => f.write_str("sticks are not perpendicular"),
            MoveError::RectangleObstructed => f.write_str("rectangle meets another stick"),
            MoveError::NotAZStick => f.write_str("stick is not a z-stick"),
            MoveError::OtherZInSquare => f.write_str("another z-stick meets the square of replacement"),
            MoveError::PCaseUnresolvable => f.write_str("no admissible route through the square of replacement"),
            MoveError::CornerSelectionFailed => f.write_str("no corner admits the squeeze construction"),
        }
    }
}

impl core::error::Error for MoveError {}

fn require(p: &Polygon, lattice: Lattice) -> Result<(), MoveError> {
    if p.lattice() != lattice {
        return Err(MoveError::WrongLattice { expected: lattice });
    }
    if !validate(p).is_valid() {
        return Err(MoveError::InvalidPolygon);
    }
    Ok(())
}

/// Unit vector of a stick's direction, signed like the stick.
fn unit_of(lattice: Lattice, s: Stick) -> LatticePoint {
    s.dir.unit(lattice).expect("stick direction is in the lattice") * s.len.signum()
}

/// Replaces vertex `k` (the end of stick `k - 1`) by `with`, then rebuilds.
fn replace_vertex(p: &Polygon, k: usize, with: &[LatticePoint]) -> Polygon {
    let verts = p.vertices();
    let n = p.len();
    let mut out: Vec<LatticePoint> = Vec::with_capacity(n + with.len());
    for (i, v) in verts[..n].iter().enumerate() {
        if i == k % n {
            out.extend_from_slice(with);
        } else {
            out.push(*v);
        }
    }
    Polygon::from_vertices(p.lattice(), &out).expect("moves keep lattice steps")
}

/// An x-stick and a y-stick meeting at a vertex, with `leg_length` units of
/// each next to the vertex to be cut off by a z-stick.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CornerSite {
    /// First stick of the pair; the second is the next one cyclically.
    pub stick_index: usize,
    pub x_first: bool,
    pub leg_length: i64,
}

/// Corner pair at `i` whose chord is a z-stick: an x-stick and a y-stick of
/// opposite signs.
fn corner_at(p: &Polygon, i: usize) -> Option<(bool, i64)> {
    let n = p.len();
    let s = p.sticks()[i];
    let t = p.sticks()[(i + 1) % n];
    let (x, y, x_first) = match (s.dir, t.dir) {
        (Direction::X, Direction::Y) => (s, t, true),
        (Direction::Y, Direction::X) => (t, s, false),
        _ => return None,
    };
    (x.len.signum() != y.len.signum()).then_some((x_first, s.len.abs().min(t.len.abs())))
}

struct Triangle {
    a: LatticePoint,
    b: LatticePoint,
    clear: bool,
}

fn corner_triangle(p: &Polygon, i: usize, c: i64) -> Triangle {
    let n = p.len();
    let l = p.lattice();
    let (s, t) = (p.sticks()[i], p.sticks()[(i + 1) % n]);
    let corner = p.vertices()[(i + 1) % n];
    let back = unit_of(l, s) * -1;
    let fwd = unit_of(l, t);
    let a = corner + back * c;
    let b = corner + fwd * c;
    let tri: [P2; 3] = [[0, 0], [c, 0], [0, c]];
    let hits = region::contacts(p, corner, back, fwd, &tri, &[i, (i + 1) % n]);
    Triangle { a, b, clear: region::only_at(&hits, &[[c, 0], [0, c]]) }
}

/// First x-y corner whose triangle, with legs as long as the shorter stick,
/// meets nothing but the two legs and their far ends.
pub fn find_reducible_corner(p: &Polygon) -> Option<CornerSite> {
    if p.lattice() != Lattice::Sh {
        return None;
    }
    (0..p.len()).find_map(|i| {
        let (x_first, c) = corner_at(p, i)?;
        corner_triangle(p, i, c).clear.then_some(CornerSite { stick_index: i, x_first, leg_length: c })
    })
}

/// Cuts the corner off with a z-stick of length `leg_length`. Longer legs
/// keep their remainder.
pub fn corner_to_z(p: &Polygon, site: CornerSite) -> Result<MoveOutcome, MoveError> {
    require(p, Lattice::Sh)?;
    let n = p.len();
    if site.stick_index >= n {
        return Err(MoveError::IndexOutOfRange);
    }
    let Some((x_first, longest)) = corner_at(p, site.stick_index) else {
        return Err(MoveError::NotACorner);
    };
    if x_first != site.x_first || site.leg_length < 1 || site.leg_length > longest {
        return Err(MoveError::NotACorner);
    }
    let tri = corner_triangle(p, site.stick_index, site.leg_length);
    if !tri.clear {
        return Err(MoveError::ObstructedTriangle);
    }
    let q = replace_vertex(p, site.stick_index + 1, &[tri.a, tri.b]);
    Ok(MoveOutcome::new(p, q, MoveTag::CornerToZ, site.stick_index))
}

/// Cuts a unit triangle off the first x-y corner whose chord is a z-stick,
/// shortening the edge length by one.
pub fn unit_corner_bevel(p: &Polygon) -> Result<MoveOutcome, MoveError> {
    require(p, Lattice::Sh)?;
    let i = (0..p.len()).find(|&i| corner_at(p, i).is_some()).ok_or(MoveError::NoXYCorner)?;
    let (x_first, _) = corner_at(p, i).unwrap();
    let out = corner_to_z(p, CornerSite { stick_index: i, x_first, leg_length: 1 })?;
    Ok(MoveOutcome { tag: MoveTag::UnitCornerBevel, ..out })
}

/// Perpendicular in the cubic view of sh: x, y and the vertical pairwise,
/// and z with the vertical.
fn perpendicular(lattice: Lattice, a: Direction, b: Direction) -> bool {
    if a == b {
        return false;
    }
    match lattice {
        Lattice::Cubic => true,
        Lattice::Sh => {
            let pair = |u, v| (a == u && b == v) || (a == v && b == u);
            !(pair(Direction::X, Direction::Z) || pair(Direction::Y, Direction::Z))
        }
    }
}

/// Exchanges two adjacent perpendicular sticks for the opposite sides of the
/// rectangle they span.
pub fn r_move(p: &Polygon, s_index: usize, t_index: usize) -> Result<MoveOutcome, MoveError> {
    require(p, p.lattice())?;
    let n = p.len();
    if s_index >= n || t_index >= n {
        return Err(MoveError::IndexOutOfRange);
    }
    let first = if t_index == (s_index + 1) % n {
        s_index
    } else if s_index == (t_index + 1) % n {
        t_index
    } else {
        return Err(MoveError::NotAdjacent);
    };
    let second = (first + 1) % n;
    let l = p.lattice();
    let (s, t) = (p.sticks()[first], p.sticks()[second]);
    if !perpendicular(l, s.dir, t.dir) {
        return Err(MoveError::NotPerpendicular);
    }
    let verts = p.vertices();
    let a = verts[first];
    let (ls, lt) = (s.len.abs(), t.len.abs());
    let rect: [P2; 4] = [[0, 0], [ls, 0], [ls, lt], [0, lt]];
    let hits = region::contacts(p, a, unit_of(l, s), unit_of(l, t), &rect, &[first, second]);
    if !region::only_at(&hits, &[[0, 0], [ls, lt]]) {
        return Err(MoveError::RectangleObstructed);
    }
    let d = a + t.vector(l);
    let q = replace_vertex(p, first + 1, &[d]);
    Ok(MoveOutcome::new(p, q, MoveTag::RMove, first))
}

/// Every admissible R-move, in stick order.
pub fn all_r_moves(p: &Polygon) -> Vec<MoveOutcome> {
    (0..p.len()).filter_map(|i| r_move(p, i, (i + 1) % p.len()).ok()).collect()
}
