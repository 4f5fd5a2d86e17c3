//! The linear map `T` from the cubic lattice to sh, its inverse on z-free sh
//! words, an edge-by-edge rewrite from sh back to cubic, and the two lower
//! bounds on sh edge length and stick number obtained from cubic minima.
//!
//! In lattice coordinates `T` is the identity: it sends cubic `x, y, z` to sh
//! `x, y, w`. A cubic word is therefore transformed by renaming `z` to `w`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::lattice::{symmetry_group, validate, Direction, Lattice, LatticePoint, Polygon, Symmetry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformError {
    WrongLattice { expected: Lattice },
    InvalidPolygon,
    ZSticksPresent { count: usize },
    EmbeddingCollision,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::WrongLattice { expected } => write!(f, "expected a {expected} polygon"),
            TransformError::InvalidPolygon => f.write_str("polygon is not closed, maximal and embedded"),
            TransformError::ZSticksPresent { count } => {
                write!(f, "{count} z-stick(s) present; replace them before inverting")
            }
            TransformError::EmbeddingCollision => f.write_str("rewritten polygon self-intersects even after rescaling"),
        }
    }
}

impl core::error::Error for TransformError {}

fn expect(p: &Polygon, lattice: Lattice) -> Result<(), TransformError> {
    if p.lattice() != lattice {
        return Err(TransformError::WrongLattice { expected: lattice });
    }
    if !validate(p).is_valid() {
        return Err(TransformError::InvalidPolygon);
    }
    Ok(())
}

/// Cubic to sh: `z` becomes `w`, everything else is kept.
pub fn apply_t(p: &Polygon) -> Result<Polygon, TransformError> {
    expect(p, Lattice::Cubic)?;
    Ok(p.relabeled(Lattice::Sh, |d| if d == Direction::Z { Direction::W } else { d }))
}

/// sh to cubic for words without `z`-sticks.
pub fn apply_t_inv(p: &Polygon) -> Result<Polygon, TransformError> {
    expect(p, Lattice::Sh)?;
    let count = p.sticks().iter().filter(|s| s.dir == Direction::Z).count();
    if count > 0 {
        return Err(TransformError::ZSticksPresent { count });
    }
    Ok(p.relabeled(Lattice::Cubic, |d| if d == Direction::W { Direction::Z } else { d }))
}

/// Cubic unit steps replacing one sh unit edge of the given direction.
///
/// Vertices are mapped by `(a, b, c) -> (2a + b, 2b, c)`, so an sh `x` edge
/// becomes `x x`, `y` becomes `x y y`, `z` becomes `y y x^-1` and `w` becomes
/// cubic `z`. Negative edges walk the same path backwards.
fn edge_path(d: Direction, forward: bool) -> &'static [(i64, i64, i64)] {
    const X: [(i64, i64, i64); 2] = [(1, 0, 0), (1, 0, 0)];
    const XB: [(i64, i64, i64); 2] = [(-1, 0, 0), (-1, 0, 0)];
    const Y: [(i64, i64, i64); 3] = [(1, 0, 0), (0, 1, 0), (0, 1, 0)];
    const YB: [(i64, i64, i64); 3] = [(0, -1, 0), (0, -1, 0), (-1, 0, 0)];
    const Z: [(i64, i64, i64); 3] = [(0, 1, 0), (0, 1, 0), (-1, 0, 0)];
    const ZB: [(i64, i64, i64); 3] = [(1, 0, 0), (0, -1, 0), (0, -1, 0)];
    const W: [(i64, i64, i64); 1] = [(0, 0, 1)];
    const WB: [(i64, i64, i64); 1] = [(0, 0, -1)];
    match (d, forward) {
        (Direction::X, true) => &X,
        (Direction::X, false) => &XB,
        (Direction::Y, true) => &Y,
        (Direction::Y, false) => &YB,
        (Direction::Z, true) => &Z,
        (Direction::Z, false) => &ZB,
        (Direction::W, true) => &W,
        (Direction::W, false) => &WB,
    }
}

fn rewrite_once(p: &Polygon) -> Polygon {
    let b = p.base();
    let mut at = LatticePoint::new(2 * b.a + b.b, 2 * b.b, b.c);
    let mut verts = Vec::new();
    for s in p.sticks() {
        for _ in 0..s.len.abs() {
            for &(da, db, dc) in edge_path(s.dir, s.len > 0) {
                verts.push(at);
                at += LatticePoint::new(da, db, dc);
            }
        }
    }
    Polygon::from_vertices(Lattice::Cubic, &verts).expect("unit steps are cubic directions")
}

/// Rewrites an sh polygon as a cubic one edge by edge, cancelling
/// backtracks and merging straight runs. On a self-intersection the sh
/// polygon is scaled by two in the plane and rewritten again, at most twice.
pub fn sh_to_cubic_rewrite(p: &Polygon) -> Result<Polygon, TransformError> {
    expect(p, Lattice::Sh)?;
    let mut src = p.clone();
    for _ in 0..3 {
        let q = rewrite_once(&src);
        if validate(&q).is_valid() {
            return Ok(q);
        }
        src = src.scaled_planar(2);
    }
    Err(TransformError::EmbeddingCollision)
}

/// The six rotations about the vertical axis, `R^0..R^5` with `R: x -> y`.
pub fn planar_rotations() -> Vec<Symmetry> {
    let group = symmetry_group(Lattice::Sh);
    let rot = group
        .iter()
        .copied()
        .find(|g| g.image(Direction::X) == (Direction::Y, 1) && g.image(Direction::W) == (Direction::W, 1))
        .expect("sh group contains the sixfold rotation");
    let mut out = Vec::with_capacity(6);
    let mut r = Symmetry::IDENTITY;
    for _ in 0..6 {
        out.push(r);
        r = rot.compose(&r);
    }
    out
}

/// Rotates so that `x` carries the most edges; returns the image and the
/// power of the rotation used (the first one reaching the maximum).
pub fn rotate_for_x_majority(p: &Polygon) -> (Polygon, usize) {
    let mut best: Option<(i64, usize, Polygon)> = None;
    for (k, r) in planar_rotations().iter().enumerate() {
        let q = r.apply(p);
        let ex = q.edge_counts().x;
        if best.as_ref().map_or(true, |(b, _, _)| ex > *b) {
            best = Some((ex, k, q));
        }
    }
    let (_, k, q) = best.expect("six rotations");
    (q, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFormula {
    EdgeLower,
    StickLower,
}

/// Exact value of a bound: `coeff * sqrt(radicand) + offset`, with
/// `radicand` squarefree (1 when the value is rational).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactBound {
    pub coeff: Ratio<i64>,
    pub radicand: i64,
    pub offset: Ratio<i64>,
}

impl ExactBound {
    pub fn is_rational(&self) -> bool {
        self.radicand == 1 || self.coeff == Ratio::from_integer(0)
    }

    pub fn as_rational(&self) -> Option<Ratio<i64>> {
        self.is_rational().then(|| self.coeff + self.offset)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub input_value: i64,
    pub bound_value: ExactBound,
    pub ceil_bound: i64,
    pub formula: BoundFormula,
}

/// Decimal text for a rational with a terminating expansion, fraction
/// otherwise.
fn rational_text(r: Ratio<i64>) -> String {
    let mut den = *r.denom();
    while den % 2 == 0 {
        den /= 2;
    }
    while den % 5 == 0 {
        den /= 5;
    }
    if den != 1 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    if r.is_integer() {
        return format!("{}", r.to_integer());
    }
    let neg = r < Ratio::from_integer(0);
    let a = if neg { -r } else { r };
    let whole = a.to_integer();
    let mut frac = a - Ratio::from_integer(whole);
    let mut digits = String::new();
    while frac != Ratio::from_integer(0) {
        frac *= 10;
        let d = frac.to_integer();
        digits.push(char::from(b'0' + d as u8));
        frac -= Ratio::from_integer(d);
    }
    format!("{}{}.{}", if neg { "-" } else { "" }, whole, digits)
}

impl fmt::Display for ExactBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&rational_text(r));
        }
        if self.coeff != Ratio::from_integer(1) {
            f.write_str(&rational_text(self.coeff))?;
        }
        write!(f, "√{}", self.radicand)?;
        let zero = Ratio::from_integer(0);
        if self.offset < zero {
            write!(f, "−{}", rational_text(-self.offset))
        } else if self.offset > zero {
            write!(f, "+{}", rational_text(self.offset))
        } else {
            Ok(())
        }
    }
}

/// `e_sh >= (3 e_L + 30) / 8`.
pub fn edge_lower_bound(e_cubic: i64) -> BoundReport {
    let v = Ratio::new(3 * e_cubic + 30, 8);
    BoundReport {
        input_value: e_cubic,
        bound_value: ExactBound { coeff: Ratio::from_integer(0), radicand: 1, offset: v },
        ceil_bound: v.ceil().to_integer(),
        formula: BoundFormula::EdgeLower,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonPositiveInput;

impl fmt::Display for NonPositiveInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("stick number must be positive")
    }
}

impl core::error::Error for NonPositiveInput {}

/// `s_sh >= 2 sqrt(s_L + 9/4) - 3 = sqrt(4 s_L + 9) - 3`.
///
/// The ceiling is the least `k` with `(k + 3)^2 >= 4 s_L + 9`, found in
/// integers.
pub fn stick_lower_bound(s_cubic: i64) -> Result<BoundReport, NonPositiveInput> {
    if s_cubic <= 0 {
        return Err(NonPositiveInput);
    }
    let n = 4 * s_cubic + 9;
    let (mut outside, mut inside) = (1i64, n);
    let mut f = 2i64;
    while f * f <= inside {
        while inside % (f * f) == 0 {
            inside /= f * f;
            outside *= f;
        }
        f += 1;
    }
    let bound_value = if inside == 1 {
        ExactBound { coeff: Ratio::from_integer(0), radicand: 1, offset: Ratio::from_integer(outside - 3) }
    } else {
        ExactBound { coeff: Ratio::from_integer(outside), radicand: inside, offset: Ratio::from_integer(-3) }
    };
    let mut k = -3i64;
    while (k + 3) * (k + 3) < n {
        k += 1;
    }
    Ok(BoundReport { input_value: s_cubic, bound_value, ceil_bound: k, formula: BoundFormula::StickLower })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_word;
    use alloc::string::ToString;

    #[test]
    fn relabeling_examples() {
        let c = parse_word("x^2 z^3 y^-1 z^-3 x^-2 y^1", Lattice::Cubic).unwrap();
        let s = apply_t(&c).unwrap();
        assert_eq!(s.to_string(), "x^2 w^3 y^-1 w^-3 x^-2 y^1");
        assert_eq!(apply_t_inv(&s).unwrap(), c);
        let z = parse_word("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh).unwrap();
        assert_eq!(apply_t_inv(&z), Err(TransformError::ZSticksPresent { count: 2 }));
        assert_eq!(apply_t(&z), Err(TransformError::WrongLattice { expected: Lattice::Cubic }));
    }

    #[test]
    fn hexagon_rewrite() {
        let h = parse_word("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh).unwrap();
        let c = sh_to_cubic_rewrite(&h).unwrap();
        assert_eq!(c.to_string(), "x^3 y^4 x^-3 y^-4");
        // 3e - 2E_w - E_x before cancellation
        assert!(c.edge_length() <= 3 * 6 - 2);
    }

    #[test]
    fn x_and_w_only_is_a_relabel_up_to_scale() {
        let p = parse_word("x^2 w^1 x^-2 w^-1", Lattice::Sh).unwrap();
        let c = sh_to_cubic_rewrite(&p).unwrap();
        assert_eq!(c.to_string(), "x^4 z^1 x^-4 z^-1");
    }

    #[test]
    fn majority_rotation() {
        let p = parse_word("x^1 y^5 w^1 x^-1 y^-5 w^-1", Lattice::Sh).unwrap();
        let (q, k) = rotate_for_x_majority(&p);
        assert_eq!(q.edge_counts().x, 10);
        // R^2 sends y to -x, the first rotation putting y-edges on the x axis
        assert_eq!(k, 2);
        let flat = parse_word("x^3 w^1 x^-3 w^-1", Lattice::Sh).unwrap();
        assert_eq!(rotate_for_x_majority(&flat).1, 0);
    }

    #[test]
    fn bound_examples() {
        let e = edge_lower_bound(24);
        assert_eq!(e.bound_value.as_rational(), Some(Ratio::new(51, 4)));
        assert_eq!(e.ceil_bound, 13);
        assert_eq!(e.bound_value.to_string(), "12.75");
        assert_eq!(edge_lower_bound(2).ceil_bound, 5);
        assert_eq!(edge_lower_bound(10).bound_value.to_string(), "7.5");
        assert_eq!(edge_lower_bound(10).ceil_bound, 8);
        let s = stick_lower_bound(12).unwrap();
        assert_eq!(s.bound_value.to_string(), "√57−3");
        assert_eq!(s.ceil_bound, 5);
        assert_eq!(stick_lower_bound(1).unwrap().ceil_bound, 1);
        let sq = stick_lower_bound(4).unwrap();
        assert_eq!(sq.bound_value.to_string(), "2");
        assert_eq!(sq.ceil_bound, 2);
        assert_eq!(stick_lower_bound(0), Err(NonPositiveInput));
        assert_eq!(stick_lower_bound(18).unwrap().bound_value.to_string(), "6");
        assert_eq!(stick_lower_bound(27).unwrap().bound_value.to_string(), "3√13−3");
    }
}
