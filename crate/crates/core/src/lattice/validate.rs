use alloc::vec::Vec;
use core::fmt;

use super::{Lattice, LatticePoint, Polygon};
use crate::geom::{segment_contact, SegContact, Q};

/// Where two sticks meet illegally. `point` is the first shared point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub first: usize,
    pub second: usize,
    pub point: LatticePoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub closed: bool,
    pub maximal: bool,
    pub embedded: bool,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.closed && self.maximal && self.embedded
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.closed {
            return f.write_str("polygon is not closed");
        }
        if !self.maximal {
            return f.write_str("two consecutive sticks share a direction");
        }
        match self.violation {
            Some(v) if !self.embedded => write!(f, "sticks {} and {} meet at {}", v.first, v.second, v.point),
            _ if !self.embedded => f.write_str("polygon is not embedded"),
            _ => f.write_str("valid"),
        }
    }
}

pub(crate) type Seg3 = ([i64; 3], [i64; 3]);

/// Meeting set of two sticks given in `(u, v, c)` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Contact3 {
    None,
    Point([Q; 3]),
    /// Collinear overlap, starting point given.
    Overlap([Q; 3]),
}

fn qp(p: [i64; 3]) -> [Q; 3] {
    [Q::from_integer(p[0]), Q::from_integer(p[1]), Q::from_integer(p[2])]
}

fn is_vertical(s: &Seg3) -> bool {
    s.0[0] == s.1[0] && s.0[1] == s.1[1]
}

fn c_range(s: &Seg3) -> (i64, i64) {
    (s.0[2].min(s.1[2]), s.0[2].max(s.1[2]))
}

pub(crate) fn contact3(s: &Seg3, t: &Seg3) -> Contact3 {
    match (is_vertical(s), is_vertical(t)) {
        (false, false) => {
            if s.0[2] != t.0[2] {
                return Contact3::None;
            }
            let c = Q::from_integer(s.0[2]);
            let at = |tp: Q| {
                let x = Q::from_integer(s.0[0]) + tp * (s.1[0] - s.0[0]);
                let y = Q::from_integer(s.0[1]) + tp * (s.1[1] - s.0[1]);
                [x, y, c]
            };
            match segment_contact([s.0[0], s.0[1]], [s.1[0], s.1[1]], [t.0[0], t.0[1]], [t.1[0], t.1[1]]) {
                SegContact::Disjoint => Contact3::None,
                SegContact::Point { t: tp, .. } => Contact3::Point(at(tp)),
                SegContact::Overlap { t0, .. } => Contact3::Overlap(at(t0)),
            }
        }
        (true, false) => vertical_planar(s, t),
        (false, true) => vertical_planar(t, s),
        (true, true) => {
            if s.0[0] != t.0[0] || s.0[1] != t.0[1] {
                return Contact3::None;
            }
            let (a0, a1) = c_range(s);
            let (b0, b1) = c_range(t);
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo > hi {
                Contact3::None
            } else if lo == hi {
                Contact3::Point(qp([s.0[0], s.0[1], lo]))
            } else {
                Contact3::Overlap(qp([s.0[0], s.0[1], lo]))
            }
        }
    }
}

fn vertical_planar(v: &Seg3, p: &Seg3) -> Contact3 {
    let (c0, c1) = c_range(v);
    let h = p.0[2];
    if h < c0 || h > c1 {
        return Contact3::None;
    }
    let x = [v.0[0], v.0[1]];
    match segment_contact(x, x, [p.0[0], p.0[1]], [p.1[0], p.1[1]]) {
        SegContact::Disjoint => Contact3::None,
        _ => Contact3::Point(qp([x[0], x[1], h])),
    }
}

pub(crate) fn segments(p: &Polygon) -> Vec<Seg3> {
    let l = p.lattice();
    let v = p.vertices();
    v.windows(2).map(|w| (w[0].uvc(l), w[1].uvc(l))).collect()
}

/// Back from `(u, v, c)` to lattice coefficients (rounding down if the point
/// is not a lattice point, which never happens for sticks of one lattice).
pub(crate) fn from_uvc(lattice: Lattice, p: [Q; 3]) -> LatticePoint {
    let [u, v, c] = p.map(|x| x.floor().to_integer());
    match lattice {
        Lattice::Cubic => LatticePoint::new(u, v, c),
        Lattice::Sh => LatticePoint::new((u - v).div_euclid(2), v, c),
    }
}

fn allowed(contact: Contact3, shared: &[[i64; 3]]) -> bool {
    match contact {
        Contact3::None => true,
        Contact3::Point(x) => shared.iter().any(|s| qp(*s) == x),
        Contact3::Overlap(_) => false,
    }
}

/// Closure, maximality and self-avoidance. Adjacent sticks may share only
/// their common vertex; every other pair must be disjoint.
pub fn validate(p: &Polygon) -> ValidationReport {
    let closed = p.is_closed();
    let maximal = p.is_maximal();
    let segs = segments(p);
    let n = segs.len();
    let mut violation = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let c = contact3(&segs[i], &segs[j]);
            let mut shared: [[i64; 3]; 2] = [[i64::MIN; 3]; 2];
            if j == i + 1 {
                shared[0] = segs[i].1;
            }
            if closed && i == 0 && j == n - 1 {
                shared[1] = segs[i].0;
            }
            if !allowed(c, &shared) {
                let point = match c {
                    Contact3::Point(x) | Contact3::Overlap(x) => from_uvc(p.lattice(), x),
                    Contact3::None => unreachable!(),
                };
                violation = Some(Violation { first: i, second: j, point });
                break 'outer;
            }
        }
    }
    ValidationReport { closed, maximal, embedded: violation.is_none(), violation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_word;

    #[test]
    fn square_and_hexagon_are_valid() {
        let p = parse_word("x^1 y^1 x^-1 y^-1", Lattice::Cubic).unwrap();
        assert!(validate(&p).is_valid());
        let h = parse_word("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh).unwrap();
        assert!(validate(&h).is_valid());
    }

    #[test]
    fn detects_self_touch() {
        // figure eight in the plane touching itself at the origin
        let p = parse_word("x^1 y^1 x^-1 y^-2 x^-1 y^1 x^1", Lattice::Cubic).unwrap();
        let r = validate(&p);
        assert!(r.closed);
        assert!(!r.embedded);
        assert_eq!(r.violation.unwrap().point, LatticePoint::new(0, 0, 0));
    }

    #[test]
    fn detects_overlap_and_non_closure() {
        let p = parse_word("x^2 y^1 x^-1 y^-1 x^-1", Lattice::Cubic).unwrap();
        assert!(!validate(&p).maximal);
        let back = parse_word("x^2 x^-2", Lattice::Cubic).unwrap();
        assert!(!validate(&back).embedded);
        let open = parse_word("x^1 y^1", Lattice::Sh).unwrap();
        let r = validate(&open);
        assert!(!r.closed && r.embedded);
    }

    #[test]
    fn sh_sticks_cross_only_at_lattice_points() {
        // y and z sticks crossing at the lattice point (0, 1)
        let p = parse_word("y^2 w^1 x^1 y^-2 w^-1 z^2 w^2 y^-2 x^1 w^-2", Lattice::Sh).unwrap();
        let r = validate(&p);
        assert!(r.closed && !r.embedded);
        let v = r.violation.unwrap();
        assert_eq!((v.first, v.second, v.point), (0, 5, LatticePoint::new(0, 1, 0)));
    }
}
