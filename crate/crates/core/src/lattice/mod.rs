//! Stick words on the cubic and sh lattices.
//!
//! A point is stored by its integer coefficients `(a, b, c)` in the lattice
//! basis. For the cubic lattice the basis is the standard one; for sh it is
//! `x = (1, 0, 0)`, `y = (1/2, sqrt(3)/2, 0)`, `w = (0, 0, 1)` and the third
//! planar direction is `z = y - x`. Both lattices share the vertical axis in
//! coefficient space, which is what makes the relabeling transform trivial.
//!
//! Exact planar geometry on sh uses the integer coordinates `(u, v) = (2a + b, b)`,
//! an affine image of the real plane, so incidence and orientation questions
//! are decided without square roots.

mod level;
mod symmetry;
mod validate;
mod word;

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

pub use level::{compact_levels, is_properly_leveled, w_levels};
pub use symmetry::{canonical_key, canonicalize, canonicalize_proper, polygon_from_key, symmetry_group, Symmetry};
pub use validate::{validate, ValidationReport, Violation};
pub use word::{emit_knotw, parse_knotw, parse_word, ParseError, ParseErrorKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lattice {
    Cubic,
    Sh,
}

impl Lattice {
    /// The three legal stick directions.
    pub fn directions(self) -> [Direction; 3] {
        match self {
            Lattice::Cubic => [Direction::X, Direction::Y, Direction::Z],
            Lattice::Sh => [Direction::X, Direction::Y, Direction::W],
        }
    }

    /// The planar directions; sh has three, cubic two.
    pub fn planar_directions(self) -> &'static [Direction] {
        match self {
            Lattice::Cubic => &[Direction::X, Direction::Y],
            Lattice::Sh => &[Direction::X, Direction::Y, Direction::Z],
        }
    }

    pub fn vertical(self) -> Direction {
        match self {
            Lattice::Cubic => Direction::Z,
            Lattice::Sh => Direction::W,
        }
    }

    pub fn admits(self, d: Direction) -> bool {
        match self {
            Lattice::Cubic => d != Direction::W,
            Lattice::Sh => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Lattice::Cubic => "cubic",
            Lattice::Sh => "sh",
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lattice {
    type Err = UnknownLattice;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic" => Ok(Lattice::Cubic),
            "sh" => Ok(Lattice::Sh),
            _ => Err(UnknownLattice),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownLattice;

impl fmt::Display for UnknownLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown lattice (expected `cubic` or `sh`)")
    }
}

impl core::error::Error for UnknownLattice {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    X,
    Y,
    Z,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::X, Direction::Y, Direction::Z, Direction::W];

    pub fn letter(self) -> char {
        match self {
            Direction::X => 'x',
            Direction::Y => 'y',
            Direction::Z => 'z',
            Direction::W => 'w',
        }
    }

    pub fn from_letter(c: char) -> Option<Direction> {
        match c {
            'x' => Some(Direction::X),
            'y' => Some(Direction::Y),
            'z' => Some(Direction::Z),
            'w' => Some(Direction::W),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Unit step of this direction, or `None` if the lattice has no such
    /// direction.
    pub fn unit(self, lattice: Lattice) -> Option<LatticePoint> {
        let p = match (lattice, self) {
            (_, Direction::X) => LatticePoint::new(1, 0, 0),
            (_, Direction::Y) => LatticePoint::new(0, 1, 0),
            (Lattice::Cubic, Direction::Z) => LatticePoint::new(0, 0, 1),
            (Lattice::Sh, Direction::Z) => LatticePoint::new(-1, 1, 0),
            (Lattice::Sh, Direction::W) => LatticePoint::new(0, 0, 1),
            (Lattice::Cubic, Direction::W) => return None,
        };
        Some(p)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Integer coefficients of a lattice point in the lattice basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { a: 0, b: 0, c: 0 };

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        LatticePoint { a, b, c }
    }

    /// Integer planar coordinates: `(a, b)` on cubic, `(2a + b, b)` on sh.
    pub fn planar(self, lattice: Lattice) -> [i64; 2] {
        match lattice {
            Lattice::Cubic => [self.a, self.b],
            Lattice::Sh => [2 * self.a + self.b, self.b],
        }
    }

    /// Planar coordinates with height appended.
    pub fn uvc(self, lattice: Lattice) -> [i64; 3] {
        let [u, v] = self.planar(lattice);
        [u, v, self.c]
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl AddAssign for LatticePoint {
    fn add_assign(&mut self, o: LatticePoint) {
        *self = *self + o;
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<i64> for LatticePoint {
    type Output = LatticePoint;
    fn mul(self, k: i64) -> LatticePoint {
        LatticePoint::new(self.a * k, self.b * k, self.c * k)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A maximal straight run: `len` unit edges along `dir`, negative for the
/// opposite orientation. Never zero inside a [`Polygon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stick {
    pub dir: Direction,
    pub len: i64,
}

impl Stick {
    pub const fn new(dir: Direction, len: i64) -> Self {
        Stick { dir, len }
    }

    pub fn vector(self, lattice: Lattice) -> LatticePoint {
        self.dir.unit(lattice).expect("direction checked at construction") * self.len
    }

    pub fn reversed(self) -> Stick {
        Stick::new(self.dir, -self.len)
    }
}

impl fmt::Display for Stick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.dir, self.len)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonError {
    ZeroLength {
        index: usize,
    },
    IllegalDirection {
        index: usize,
        dir: Direction,
    },
    /// Two consecutive vertices are not joined by a lattice direction.
    NotALatticeStep {
        index: usize,
    },
}

impl fmt::Display for PolygonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolygonError::ZeroLength { index } => write!(f, "stick {index} has zero length"),
            PolygonError::IllegalDirection { index, dir } => {
                write!(f, "stick {index} uses direction {dir}, illegal on this lattice")
            }
            PolygonError::NotALatticeStep { index } => {
                write!(f, "vertices {index} and {} are not joined by a lattice direction", index + 1)
            }
        }
    }
}

impl core::error::Error for PolygonError {}

/// Per-direction totals, used both for stick counts and edge counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct StickCounts {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub w: i64,
}

impl StickCounts {
    pub fn get(&self, d: Direction) -> i64 {
        match d {
            Direction::X => self.x,
            Direction::Y => self.y,
            Direction::Z => self.z,
            Direction::W => self.w,
        }
    }

    fn bump(&mut self, d: Direction, by: i64) {
        match d {
            Direction::X => self.x += by,
            Direction::Y => self.y += by,
            Direction::Z => self.z += by,
            Direction::W => self.w += by,
        }
    }

    pub fn total(&self) -> i64 {
        self.x + self.y + self.z + self.w
    }
}

impl fmt::Display for StickCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y={} z={} w={}", self.x, self.y, self.z, self.w)
    }
}

/// A lattice polygon (or open path) given by its starting vertex and stick
/// word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    lattice: Lattice,
    base: LatticePoint,
    sticks: Vec<Stick>,
}

impl Polygon {
    pub fn new(lattice: Lattice, sticks: Vec<Stick>) -> Result<Self, PolygonError> {
        for (index, s) in sticks.iter().enumerate() {
            if !lattice.admits(s.dir) {
                return Err(PolygonError::IllegalDirection { index, dir: s.dir });
            }
            if s.len == 0 {
                return Err(PolygonError::ZeroLength { index });
            }
        }
        Ok(Polygon { lattice, base: LatticePoint::ORIGIN, sticks })
    }

    pub fn with_base(mut self, base: LatticePoint) -> Self {
        self.base = base;
        self
    }

    /// Builds the closed polygon through `verts` (first vertex not repeated),
    /// merging collinear runs and cancelling backtracks.
    pub fn from_vertices(lattice: Lattice, verts: &[LatticePoint]) -> Result<Self, PolygonError> {
        let n = verts.len();
        let mut sticks = Vec::with_capacity(n);
        for i in 0..n {
            let d = verts[(i + 1) % n] - verts[i];
            if d == LatticePoint::ORIGIN {
                continue;
            }
            sticks.push(step_as_stick(lattice, d).ok_or(PolygonError::NotALatticeStep { index: i })?);
        }
        let p = Polygon { lattice, base: verts.first().copied().unwrap_or_default(), sticks };
        Ok(p.normalized())
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn base(&self) -> LatticePoint {
        self.base
    }

    pub fn sticks(&self) -> &[Stick] {
        &self.sticks
    }

    pub fn into_sticks(self) -> Vec<Stick> {
        self.sticks
    }

    /// Number of sticks in the word.
    pub fn len(&self) -> usize {
        self.sticks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sticks.is_empty()
    }

    /// All `n + 1` vertices; the last equals the first when closed.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.sticks.len() + 1);
        let mut p = self.base;
        out.push(p);
        for s in &self.sticks {
            p += s.vector(self.lattice);
            out.push(p);
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        let mut d = LatticePoint::ORIGIN;
        for s in &self.sticks {
            d += s.vector(self.lattice);
        }
        d == LatticePoint::ORIGIN
    }

    /// No two adjacent sticks (cyclically, when closed) share a direction.
    pub fn is_maximal(&self) -> bool {
        let n = self.sticks.len();
        if n == 0 {
            return true;
        }
        let linear = self.sticks.windows(2).all(|w| w[0].dir != w[1].dir);
        linear && !(n > 1 && self.is_closed() && self.sticks[0].dir == self.sticks[n - 1].dir)
    }

    /// Number of sticks per direction; fails unless the word is maximal.
    pub fn stick_census(&self) -> Result<StickCounts, NotMaximal> {
        if !self.is_maximal() {
            return Err(NotMaximal);
        }
        let mut c = StickCounts::default();
        for s in &self.sticks {
            c.bump(s.dir, 1);
        }
        Ok(c)
    }

    pub fn edge_length(&self) -> i64 {
        self.sticks.iter().map(|s| s.len.abs()).sum()
    }

    pub fn edge_counts(&self) -> StickCounts {
        let mut c = StickCounts::default();
        for s in &self.sticks {
            c.bump(s.dir, s.len.abs());
        }
        c
    }

    pub fn translated(&self, by: LatticePoint) -> Polygon {
        Polygon { lattice: self.lattice, base: self.base + by, sticks: self.sticks.clone() }
    }

    /// Same vertex sequence read from vertex `k`.
    pub fn rotated(&self, k: usize) -> Polygon {
        let n = self.sticks.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let base = self.vertices()[k];
        let mut sticks = Vec::with_capacity(n);
        sticks.extend_from_slice(&self.sticks[k..]);
        sticks.extend_from_slice(&self.sticks[..k]);
        Polygon { lattice: self.lattice, base, sticks }
    }

    /// Opposite orientation, starting from the same base vertex.
    pub fn reversed(&self) -> Polygon {
        let sticks = self.sticks.iter().rev().map(|s| s.reversed()).collect();
        Polygon { lattice: self.lattice, base: self.base, sticks }
    }

    /// Merges runs of same-direction sticks and drops cancelled ones. For
    /// closed words the wrap-around pair is merged too, moving the base.
    pub fn normalized(&self) -> Polygon {
        let mut out: Vec<Stick> = Vec::with_capacity(self.sticks.len());
        for &s in &self.sticks {
            push_merged(&mut out, s);
        }
        let mut base = self.base;
        if self.is_closed() {
            while out.len() >= 2 && out[0].dir == out[out.len() - 1].dir {
                let last = out.pop().unwrap();
                base = base - last.vector(self.lattice);
                out[0].len += last.len;
                if out[0].len == 0 {
                    out.remove(0);
                }
            }
            if out.len() == 1 {
                out.clear();
            }
        }
        Polygon { lattice: self.lattice, base, sticks: out }
    }

    /// Multiplies every planar coordinate by `k`, leaving heights alone.
    pub fn scaled_planar(&self, k: i64) -> Polygon {
        let v = self.lattice.vertical();
        let sticks = self.sticks.iter().map(|s| if s.dir == v { *s } else { Stick::new(s.dir, s.len * k) }).collect();
        let base = LatticePoint::new(self.base.a * k, self.base.b * k, self.base.c);
        Polygon { lattice: self.lattice, base, sticks }
    }

    /// Same word read on the other lattice, coefficients unchanged. Callers
    /// are responsible for the direction relabeling.
    pub(crate) fn relabeled(&self, lattice: Lattice, f: impl Fn(Direction) -> Direction) -> Polygon {
        let sticks = self.sticks.iter().map(|s| Stick::new(f(s.dir), s.len)).collect();
        Polygon { lattice, base: self.base, sticks }
    }

    pub(crate) fn from_parts(lattice: Lattice, base: LatticePoint, sticks: Vec<Stick>) -> Polygon {
        debug_assert!(sticks.iter().all(|s| s.len != 0 && lattice.admits(s.dir)));
        Polygon { lattice, base, sticks }
    }
}

fn push_merged(out: &mut Vec<Stick>, s: Stick) {
    if s.len == 0 {
        return;
    }
    match out.last_mut() {
        Some(last) if last.dir == s.dir => {
            last.len += s.len;
            if last.len == 0 {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

/// Expresses a nonzero displacement as a single stick, if it is one.
pub fn step_as_stick(lattice: Lattice, d: LatticePoint) -> Option<Stick> {
    for dir in Direction::ALL {
        let Some(u) = dir.unit(lattice) else { continue };
        let k = if u.a != 0 {
            d.a / u.a
        } else if u.b != 0 {
            d.b / u.b
        } else {
            d.c / u.c
        };
        if k != 0 && u * k == d {
            return Some(Stick::new(dir, k));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotMaximal;

impl fmt::Display for NotMaximal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("word has adjacent sticks in the same direction")
    }
}

impl core::error::Error for NotMaximal {}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sticks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
