//! Exact planar primitives on integer points.
//!
//! Parameters along segments come back as reduced rationals so callers can
//! compare crossing positions without rounding.

use num_rational::Ratio;

pub type Q = Ratio<i64>;
pub type P2 = [i64; 2];

#[inline]
pub fn sub(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn cross(a: P2, b: P2) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
pub fn dot(a: P2, b: P2) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Orientation of `c` relative to the directed line `a -> b`.
#[inline]
pub fn orient(a: P2, b: P2, c: P2) -> i64 {
    cross(sub(b, a), sub(c, a))
}

/// How two closed segments `p0p1` and `q0q1` meet.
///
/// `t` parameters run along the first segment, `s` along the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegContact {
    Disjoint,
    Point { t: Q, s: Q },
    Overlap { t0: Q, t1: Q },
}

fn on_segment_param(p0: P2, p1: P2, x: P2) -> Option<Q> {
    let d = sub(p1, p0);
    let w = sub(x, p0);
    if cross(d, w) != 0 {
        return None;
    }
    let dd = dot(d, d);
    if dd == 0 {
        return (w == [0, 0]).then(|| Q::from_integer(0));
    }
    let t = Q::new(dot(w, d), dd);
    (t >= Q::from_integer(0) && t <= Q::from_integer(1)).then_some(t)
}

pub fn segment_contact(p0: P2, p1: P2, q0: P2, q1: P2) -> SegContact {
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);
    let r = sub(p1, p0);
    let s = sub(q1, q0);
    if r == [0, 0] {
        return match on_segment_param(q0, q1, p0) {
            Some(sp) => SegContact::Point { t: zero, s: sp },
            None => SegContact::Disjoint,
        };
    }
    if s == [0, 0] {
        return match on_segment_param(p0, p1, q0) {
            Some(tp) => SegContact::Point { t: tp, s: zero },
            None => SegContact::Disjoint,
        };
    }
    let qp = sub(q0, p0);
    let den = cross(r, s);
    if den != 0 {
        let t = Q::new(cross(qp, s), den);
        let u = Q::new(cross(qp, r), den);
        if t < zero || t > one || u < zero || u > one {
            return SegContact::Disjoint;
        }
        return SegContact::Point { t, s: u };
    }
    if cross(qp, r) != 0 {
        return SegContact::Disjoint;
    }
    let rr = dot(r, r);
    let a = Q::new(dot(qp, r), rr);
    let b = Q::new(dot(sub(q1, p0), r), rr);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let lo = if lo < zero { zero } else { lo };
    let hi = if hi > one { one } else { hi };
    if lo > hi {
        SegContact::Disjoint
    } else if lo == hi {
        let px = [Q::from_integer(p0[0]) + lo * r[0], Q::from_integer(p0[1]) + lo * r[1]];
        let w = [px[0] - q0[0], px[1] - q0[1]];
        let sv = (w[0] * s[0] + w[1] * s[1]) / dot(s, s);
        SegContact::Point { t: lo, s: sv }
    } else {
        SegContact::Overlap { t0: lo, t1: hi }
    }
}

/// Portion of the segment `p -> q` inside a closed convex polygon, as a
/// parameter interval. Vertex order may be clockwise or counterclockwise.
pub fn clip_to_convex(p: P2, q: P2, poly: &[P2]) -> Option<(Q, Q)> {
    let n = poly.len();
    let mut area2 = 0i64;
    for i in 0..n {
        area2 += cross(poly[i], poly[(i + 1) % n]);
    }
    let sgn = area2.signum();
    let mut lo = Q::from_integer(0);
    let mut hi = Q::from_integer(1);
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let f0 = sgn * orient(a, b, p);
        let f1 = sgn * orient(a, b, q);
        let df = f1 - f0;
        if df == 0 {
            if f0 < 0 {
                return None;
            }
            continue;
        }
        let t = Q::new(-f0, df);
        if df > 0 {
            if t > lo {
                lo = t;
            }
        } else if t < hi {
            hi = t;
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// Winding number of a closed polyline around `x`, or `None` when `x` lies on
/// the polyline itself.
pub fn winding(poly: &[P2], x: P2) -> Option<i32> {
    let n = poly.len();
    let mut w = 0;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if on_segment_param(a, b, x).is_some() {
            return None;
        }
        if a[1] <= x[1] {
            if b[1] > x[1] && orient(a, b, x) > 0 {
                w += 1;
            }
        } else if b[1] <= x[1] && orient(a, b, x) < 0 {
            w -= 1;
        }
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn crossing_and_touching() {
        let c = segment_contact([0, 0], [2, 2], [0, 2], [2, 0]);
        assert_eq!(c, SegContact::Point { t: q(1, 2), s: q(1, 2) });
        let c = segment_contact([0, 0], [2, 0], [2, 0], [3, 5]);
        assert_eq!(c, SegContact::Point { t: q(1, 1), s: q(0, 1) });
        assert_eq!(segment_contact([0, 0], [1, 0], [0, 1], [1, 1]), SegContact::Disjoint);
    }

    #[test]
    fn collinear_cases() {
        let c = segment_contact([0, 0], [4, 0], [2, 0], [6, 0]);
        assert_eq!(c, SegContact::Overlap { t0: q(1, 2), t1: q(1, 1) });
        let c = segment_contact([0, 0], [4, 0], [4, 0], [6, 0]);
        assert_eq!(c, SegContact::Point { t: q(1, 1), s: q(0, 1) });
        assert_eq!(segment_contact([0, 0], [1, 0], [2, 0], [3, 0]), SegContact::Disjoint);
    }

    #[test]
    fn clip_triangle() {
        let tri = [[0, 0], [4, 0], [0, 4]];
        assert_eq!(clip_to_convex([-1, 1], [5, 1], &tri), Some((q(1, 6), q(2, 3))));
        assert_eq!(clip_to_convex([3, 3], [5, 5], &tri), None);
        assert_eq!(clip_to_convex([2, 2], [5, 5], &tri), Some((q(0, 1), q(0, 1))));
    }

    #[test]
    fn winding_square() {
        let sq = [[0, 0], [2, 0], [2, 2], [0, 2]];
        assert_eq!(winding(&sq, [1, 1]), Some(1));
        assert_eq!(winding(&sq, [3, 1]), Some(0));
        assert_eq!(winding(&sq, [2, 1]), None);
    }
}
