//! Lattice point groups and canonical forms of closed words.
//!
//! The sh group has order 24: six planar rotations, a planar reflection, and
//! the vertical flip. The cubic group is the 48 signed permutations.

use alloc::vec::Vec;

use super::{Direction, Lattice, LatticePoint, Polygon, Stick};

/// A linear lattice symmetry, recorded by where it sends each direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    map: [(Direction, i8); 4],
    proper: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry =
        Symmetry { map: [(Direction::X, 1), (Direction::Y, 1), (Direction::Z, 1), (Direction::W, 1)], proper: true };

    pub fn image(&self, d: Direction) -> (Direction, i8) {
        self.map[d.index()]
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn apply_stick(&self, s: Stick) -> Stick {
        let (d, sg) = self.image(s.dir);
        Stick::new(d, s.len * sg as i64)
    }

    pub fn apply_point(&self, lattice: Lattice, p: LatticePoint) -> LatticePoint {
        let [d0, d1, d2] = match lattice {
            Lattice::Cubic => [Direction::X, Direction::Y, Direction::Z],
            Lattice::Sh => [Direction::X, Direction::Y, Direction::W],
        };
        let img = |d: Direction| {
            let (e, sg) = self.image(d);
            e.unit(lattice).expect("symmetry stays on lattice") * sg as i64
        };
        img(d0) * p.a + img(d1) * p.b + img(d2) * p.c
    }

    /// Applies the symmetry to every stick and the base vertex.
    pub fn apply(&self, p: &Polygon) -> Polygon {
        let sticks = p.sticks().iter().map(|s| self.apply_stick(*s)).collect();
        Polygon::from_parts(p.lattice(), self.apply_point(p.lattice(), p.base()), sticks)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Symmetry) -> Symmetry {
        let mut map = [(Direction::X, 1); 4];
        for d in Direction::ALL {
            let (e, s1) = first.image(d);
            let (f, s2) = self.image(e);
            map[d.index()] = (f, s1 * s2);
        }
        Symmetry { map, proper: self.proper == first.proper }
    }

    pub fn inverse(&self) -> Symmetry {
        let mut map = [(Direction::X, 1); 4];
        for d in Direction::ALL {
            let (e, s) = self.image(d);
            map[e.index()] = (d, s);
        }
        Symmetry { map, proper: self.proper }
    }
}

fn sh_group() -> Vec<Symmetry> {
    use Direction::*;
    let rot = Symmetry { map: [(Y, 1), (Z, 1), (X, -1), (W, 1)], proper: true };
    let refl = Symmetry { map: [(X, 1), (Z, -1), (Y, -1), (W, 1)], proper: false };
    let flip = Symmetry { map: [(X, 1), (Y, 1), (Z, 1), (W, -1)], proper: false };
    let mut out = Vec::with_capacity(24);
    let mut r = Symmetry::IDENTITY;
    for _ in 0..6 {
        for f in [Symmetry::IDENTITY, refl] {
            for v in [Symmetry::IDENTITY, flip] {
                out.push(r.compose(&f).compose(&v));
            }
        }
        r = rot.compose(&r);
    }
    out
}

fn cubic_group() -> Vec<Symmetry> {
    use Direction::*;
    const PERMS: [([usize; 3], i8); 6] =
        [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
    let axes = [X, Y, Z];
    let mut out = Vec::with_capacity(48);
    for (perm, psign) in PERMS {
        for signs in 0..8u8 {
            let sg = |k: usize| if signs >> k & 1 == 1 { -1i8 } else { 1 };
            let map = [(axes[perm[0]], sg(0)), (axes[perm[1]], sg(1)), (axes[perm[2]], sg(2)), (W, 1)];
            let det = psign * sg(0) * sg(1) * sg(2);
            out.push(Symmetry { map, proper: det == 1 });
        }
    }
    out
}

/// All point-group elements of the lattice, identity first.
pub fn symmetry_group(lattice: Lattice) -> Vec<Symmetry> {
    match lattice {
        Lattice::Cubic => cubic_group(),
        Lattice::Sh => sh_group(),
    }
}

#[inline]
fn code(s: Stick) -> (u8, i64) {
    (s.dir as u8, s.len)
}

fn canonical_word(p: &Polygon, proper_only: bool) -> Vec<Stick> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Vec<Stick> = Vec::new();
    let mut mapped = Vec::with_capacity(n);
    for g in symmetry_group(p.lattice()) {
        if proper_only && !g.is_proper() {
            continue;
        }
        mapped.clear();
        mapped.extend(p.sticks().iter().map(|s| g.apply_stick(*s)));
        for start in 0..n {
            for forward in [true, false] {
                let at = |k: usize| {
                    if forward {
                        mapped[(start + k) % n]
                    } else {
                        mapped[(start + n - k) % n].reversed()
                    }
                };
                if best.is_empty() {
                    best.extend((0..n).map(at));
                    continue;
                }
                for k in 0..n {
                    let c = code(at(k)).cmp(&code(best[k]));
                    if c.is_lt() {
                        best.clear();
                        best.extend((0..n).map(at));
                        break;
                    }
                    if c.is_gt() {
                        break;
                    }
                }
            }
        }
    }
    best
}

/// Lexicographically least word over symmetries, cyclic rotations and
/// reversal, based at the origin. Mirror images share a canonical form.
///
/// The input must be a closed word; reading an open path from another vertex
/// is meaningless.
pub fn canonicalize(p: &Polygon) -> Polygon {
    Polygon::from_parts(p.lattice(), LatticePoint::ORIGIN, canonical_word(p, false))
}

/// Like [`canonicalize`] but over orientation-preserving symmetries only, so a
/// chiral knot and its mirror image stay distinct.
pub fn canonicalize_proper(p: &Polygon) -> Polygon {
    Polygon::from_parts(p.lattice(), LatticePoint::ORIGIN, canonical_word(p, true))
}

/// Packs a canonical word into one integer, one byte per stick in word order,
/// so that integer order agrees with word order for words of equal length.
/// Returns `None` for words longer than 16 sticks or with a stick longer
/// than 31.
pub fn canonical_key(p: &Polygon) -> Option<u128> {
    pack(&canonical_word(p, false))
}

pub(crate) fn pack(word: &[Stick]) -> Option<u128> {
    if word.len() > 16 {
        return None;
    }
    let mut key = 0u128;
    for s in word {
        if s.len.abs() > 31 {
            return None;
        }
        key = key << 8 | (s.dir as u128) << 6 | (s.len + 32) as u128;
    }
    Some(key)
}

/// Inverse of [`canonical_key`].
pub fn polygon_from_key(lattice: Lattice, key: u128) -> Polygon {
    let mut sticks = Vec::new();
    let mut k = key;
    while k != 0 {
        let byte = (k & 0xff) as u8;
        let dir = Direction::ALL[(byte >> 6) as usize];
        sticks.push(Stick::new(dir, (byte & 0x3f) as i64 - 32));
        k >>= 8;
    }
    sticks.reverse();
    Polygon::from_parts(lattice, LatticePoint::ORIGIN, sticks)
}
