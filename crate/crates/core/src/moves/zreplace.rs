//! Replacing a z-stick by x- and y-sticks through its square of replacement.
//!
//! In the cubic view the z-stick is the diagonal of a square whose sides are
//! x- and y-sticks. The replacement is a monotone staircase from one end of
//! the diagonal to the other with at most four steps. A staircase is
//! accepted when the regions between it and the diagonal hold no vertical
//! stick crossing the level and no other stick of the level, and the new
//! polygon is embedded.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::region::{contacts, Touch};
use super::{require, MoveError, MoveOutcome, MoveTag};
use crate::geom::{winding, P2, Q};
use crate::lattice::{validate, Direction, Lattice, LatticePoint, Polygon, Stick};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// A w-stick crossing or ending on the level inside the square.
    Vertical,
    /// An x- or y-stick of the same level.
    Planar,
    /// Another z-stick of the same level.
    OtherZ,
}

/// Position relative to the diagonal. `Upper` is the half reached by the
/// route that starts with the y-step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
    Diagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub stick: usize,
    pub kind: ObstructionKind,
    /// Square coordinates: steps along the x-side and the y-side from the
    /// start of the z-stick.
    pub point: [Q; 2],
    pub side: Side,
    touch: Touch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareCase {
    Empty,
    OneSide,
    TwoOpposite,
    Three,
    Four,
    More,
}

impl SquareCase {
    pub fn name(self) -> &'static str {
        match self {
            SquareCase::Empty => "empty",
            SquareCase::OneSide => "one_side",
            SquareCase::TwoOpposite => "two_opposite",
            SquareCase::Three => "three",
            SquareCase::Four => "four",
            SquareCase::More => "more",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplacementSquare {
    pub z_index: usize,
    pub level: i64,
    pub side_length: i64,
    /// Corner reached by the x-step first.
    pub corner_lo: LatticePoint,
    /// Corner reached by the y-step first.
    pub corner_hi: LatticePoint,
    pub obstructions: Vec<Obstruction>,
    pub other_z: Vec<Obstruction>,
}

impl ReplacementSquare {
    pub fn case(&self) -> SquareCase {
        let n = self.obstructions.len();
        let upper = self.obstructions.iter().filter(|o| o.side == Side::Upper).count();
        let lower = self.obstructions.iter().filter(|o| o.side == Side::Lower).count();
        if n == 0 {
            SquareCase::Empty
        } else if upper == n || lower == n {
            SquareCase::OneSide
        } else {
            match n {
                2 => SquareCase::TwoOpposite,
                3 => SquareCase::Three,
                4 => SquareCase::Four,
                _ => SquareCase::More,
            }
        }
    }
}

struct Geometry {
    start: LatticePoint,
    ex: LatticePoint,
    ey: LatticePoint,
    side: i64,
}

fn geometry(p: &Polygon, z_index: usize) -> Result<Geometry, MoveError> {
    let z = *p.sticks().get(z_index).ok_or(MoveError::IndexOutOfRange)?;
    if z.dir != Direction::Z {
        return Err(MoveError::NotAZStick);
    }
    let sg = z.len.signum();
    Ok(Geometry {
        start: p.vertices()[z_index],
        ex: LatticePoint::new(-sg, 0, 0),
        ey: LatticePoint::new(0, sg, 0),
        side: z.len.abs(),
    })
}

fn side_of(x: [Q; 2]) -> Side {
    match x[1].cmp(&x[0]) {
        core::cmp::Ordering::Greater => Side::Upper,
        core::cmp::Ordering::Less => Side::Lower,
        core::cmp::Ordering::Equal => Side::Diagonal,
    }
}

/// The square with the z-stick as diagonal and everything else meeting it.
/// The sticks next to the z-stick are attachments, not obstructions.
pub fn find_replacement_square(p: &Polygon, z_index: usize) -> Result<ReplacementSquare, MoveError> {
    if p.lattice() != Lattice::Sh {
        return Err(MoveError::WrongLattice { expected: Lattice::Sh });
    }
    let g = geometry(p, z_index)?;
    let n = p.len();
    let c = g.side;
    let square: [P2; 4] = [[0, 0], [c, 0], [c, c], [0, c]];
    let skip = [(z_index + n - 1) % n, z_index, (z_index + 1) % n];
    let mut obstructions = Vec::new();
    let mut other_z = Vec::new();
    for hit in contacts(p, g.start, g.ex, g.ey, &square, &skip) {
        let kind = match p.sticks()[hit.stick].dir {
            Direction::W => ObstructionKind::Vertical,
            Direction::Z => ObstructionKind::OtherZ,
            _ => ObstructionKind::Planar,
        };
        let point = hit.touch.first();
        let ob = Obstruction { stick: hit.stick, kind, point, side: side_of(hit.touch.midpoint()), touch: hit.touch };
        if kind == ObstructionKind::OtherZ {
            other_z.push(ob);
        } else {
            obstructions.push(ob);
        }
    }
    Ok(ReplacementSquare {
        z_index,
        level: g.start.c,
        side_length: c,
        corner_lo: g.start + g.ex * c,
        corner_hi: g.start + g.ey * c,
        obstructions,
        other_z,
    })
}

/// Monotone staircases from `(0, 0)` to `(c, c)` with two to four steps, as
/// corner lists.
fn staircases(c: i64) -> Vec<Vec<P2>> {
    let mut out = Vec::new();
    for y_first in [true, false] {
        let pt = |a: i64, b: i64| if y_first { [b, a] } else { [a, b] };
        out.push(vec![[0, 0], pt(c, 0), [c, c]]);
        for k in 1..c {
            out.push(vec![[0, 0], pt(k, 0), pt(k, c), [c, c]]);
        }
        for k in 1..c {
            for j in 1..c {
                out.push(vec![[0, 0], pt(k, 0), pt(k, j), pt(c, j), [c, c]]);
            }
        }
    }
    out
}

fn q_den(x: [Q; 2]) -> i64 {
    x[0].denom().lcm(x[1].denom())
}

/// True when no obstacle lies in a region between the staircase and the
/// diagonal, boundary included.
fn lobes_empty(route: &[P2], obstacles: &[[Q; 2]]) -> bool {
    obstacles.iter().all(|x| {
        let d = q_den(*x);
        let poly: Vec<P2> = route.iter().map(|p| [p[0] * d, p[1] * d]).collect();
        let pt = [(x[0] * d).to_integer(), (x[1] * d).to_integer()];
        winding(&poly, pt) == Some(0)
    })
}

fn route_sticks(route: &[P2], sg: i64) -> Vec<Stick> {
    route
        .windows(2)
        .map(|w| {
            if w[1][0] != w[0][0] {
                Stick::new(Direction::X, -sg * (w[1][0] - w[0][0]))
            } else {
                Stick::new(Direction::Y, sg * (w[1][1] - w[0][1]))
            }
        })
        .collect()
}

fn z_count(p: &Polygon) -> usize {
    p.sticks().iter().filter(|s| s.dir == Direction::Z).count()
}

/// Best staircase for one scale, fewest sticks first.
fn best_route(p: &Polygon, z_index: usize) -> Result<Option<Polygon>, MoveError> {
    let sq = find_replacement_square(p, z_index)?;
    if !sq.other_z.is_empty() {
        return Err(MoveError::OtherZInSquare);
    }
    let obstacles: Vec<[Q; 2]> = sq.obstructions.iter().flat_map(|o| [o.point, o.touch.midpoint()]).collect();
    let sg = p.sticks()[z_index].len.signum();
    let zs = z_count(p);
    let mut best: Option<Polygon> = None;
    for route in staircases(sq.side_length) {
        if !lobes_empty(&route, &obstacles) {
            continue;
        }
        let mut word = Vec::with_capacity(p.len() + 4);
        word.extend_from_slice(&p.sticks()[..z_index]);
        word.extend(route_sticks(&route, sg));
        word.extend_from_slice(&p.sticks()[z_index + 1..]);
        let q = Polygon::new(Lattice::Sh, word).expect("route sticks are nonzero").with_base(p.base()).normalized();
        if z_count(&q) + 1 != zs || !validate(&q).is_valid() {
            continue;
        }
        if best.as_ref().map_or(true, |b| q.len() < b.len()) {
            best = Some(q);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZReplaceReport {
    pub outcome: MoveOutcome,
    pub case: SquareCase,
    /// Planar scale applied before routing (1 or 2).
    pub scale: i64,
}

/// Replaces one z-stick. The polygon is scaled by two in the plane when no
/// staircase fits at the original scale or a scaled one is shorter.
pub fn z_replace(p: &Polygon, z_index: usize) -> Result<MoveOutcome, MoveError> {
    z_replace_report(p, z_index).map(|r| r.outcome)
}

pub fn z_replace_report(p: &Polygon, z_index: usize) -> Result<ZReplaceReport, MoveError> {
    require(p, Lattice::Sh)?;
    let case = find_replacement_square(p, z_index)?.case();
    let plain = best_route(p, z_index)?;
    let doubled = best_route(&p.scaled_planar(2), z_index)?;
    let (q, scale) = match (plain, doubled) {
        (Some(a), Some(b)) if b.len() < a.len() => (b, 2),
        (Some(a), _) => (a, 1),
        (None, Some(b)) => (b, 2),
        (None, None) => return Err(MoveError::PCaseUnresolvable),
    };
    Ok(ZReplaceReport { outcome: MoveOutcome::new(p, q, MoveTag::ZReplace, z_index), case, scale })
}

/// Replaces z-sticks one at a time, first replaceable one each round.
pub fn replace_all_z(p: &Polygon) -> Result<(Polygon, Vec<ZReplaceReport>), MoveError> {
    let mut cur = p.clone();
    let mut steps = Vec::new();
    loop {
        let zs: Vec<usize> = (0..cur.len()).filter(|&i| cur.sticks()[i].dir == Direction::Z).collect();
        if zs.is_empty() {
            return Ok((cur, steps));
        }
        let mut last_err = MoveError::PCaseUnresolvable;
        let mut done = None;
        for i in zs {
            match z_replace_report(&cur, i) {
                Ok(r) => {
                    done = Some(r);
                    break;
                }
                Err(e) => last_err = e,
            }
        }
        let r = done.ok_or(last_err)?;
        cur = r.outcome.polygon.clone();
        steps.push(r);
    }
}
