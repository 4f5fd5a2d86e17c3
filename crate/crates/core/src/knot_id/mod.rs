//! Knot identification: projection, Alexander polynomial, Kauffman bracket
//! and classification among the unknot, `3_1`, `4_1`, `5_1` and `5_2`.
//!
//! The Alexander polynomial decides. Trivial Alexander polynomial is accepted
//! as the unknot only on diagrams of at most ten crossings. The bracket is a
//! secondary check run on doubtful results and on a deterministic sample.

mod alexander;
mod bracket;
mod diagram;
mod laurent;
mod project;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use alexander::{alexander, determinant};
pub use bracket::{bracket, jones, same_up_to_mirror, BRACKET_CROSSING_CAP};
pub use diagram::{parse_pd, Crossing, CrossingGeometry, Diagram, DiagramError, Passage, StrandPos, Q128};
pub use laurent::LaurentPoly;
pub use project::{project, project_along, project_with, Axis, Frame, ProjectError, SCHEDULE_LEN};

use crate::lattice::{validate, Polygon};

/// Largest crossing count at which a trivial Alexander polynomial is taken to
/// mean the unknot.
pub const UNKNOT_CROSSING_THRESHOLD: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnotTag {
    Unknot,
    K3_1,
    K4_1,
    K5_1,
    K5_2,
    Unknown,
}

impl KnotTag {
    pub const ALL: [KnotTag; 6] =
        [KnotTag::Unknot, KnotTag::K3_1, KnotTag::K4_1, KnotTag::K5_1, KnotTag::K5_2, KnotTag::Unknown];

    /// The recognized types, without `Unknown`.
    pub const REFERENCE: [KnotTag; 5] = [KnotTag::Unknot, KnotTag::K3_1, KnotTag::K4_1, KnotTag::K5_1, KnotTag::K5_2];

    pub fn name(self) -> &'static str {
        match self {
            KnotTag::Unknot => "unknot",
            KnotTag::K3_1 => "3_1",
            KnotTag::K4_1 => "4_1",
            KnotTag::K5_1 => "5_1",
            KnotTag::K5_2 => "5_2",
            KnotTag::Unknown => "unknown",
        }
    }

    pub fn is_nontrivial(self) -> bool {
        !matches!(self, KnotTag::Unknot)
    }

    /// Normalized Alexander polynomial, ascending coefficients.
    pub fn reference_alexander(self) -> Option<LaurentPoly> {
        let c: &[i64] = match self {
            KnotTag::Unknot => &[1],
            KnotTag::K3_1 => &[1, -1, 1],
            KnotTag::K4_1 => &[1, -3, 1],
            KnotTag::K5_1 => &[1, -1, 1, -1, 1],
            KnotTag::K5_2 => &[2, -3, 2],
            KnotTag::Unknown => return None,
        };
        Some(LaurentPoly::from_coeffs(0, c))
    }

    /// A standard minimal diagram.
    pub fn reference_pd(self) -> Option<&'static [[usize; 4]]> {
        const K3_1: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];
        const K4_1: [[usize; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
        const K5_1: [[usize; 4]; 5] = [[2, 8, 3, 7], [4, 10, 5, 9], [6, 2, 7, 1], [8, 4, 9, 3], [10, 6, 1, 5]];
        const K5_2: [[usize; 4]; 5] = [[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]];
        match self {
            KnotTag::Unknot => Some(&[]),
            KnotTag::K3_1 => Some(&K3_1),
            KnotTag::K4_1 => Some(&K4_1),
            KnotTag::K5_1 => Some(&K5_1),
            KnotTag::K5_2 => Some(&K5_2),
            KnotTag::Unknown => None,
        }
    }

    /// Jones polynomial of the reference diagram (chirality unspecified).
    pub fn reference_jones(self) -> Option<LaurentPoly> {
        let d = Diagram::from_pd(self.reference_pd()?).expect("reference codes are consistent");
        jones(&d)
    }

    fn from_alexander(p: &LaurentPoly) -> Option<KnotTag> {
        KnotTag::REFERENCE.into_iter().find(|t| t.reference_alexander().as_ref() == Some(p))
    }
}

impl fmt::Display for KnotTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnotTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KnotTag::ALL.into_iter().find(|t| t.name() == s).ok_or(UnknownTag)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownTag;

impl fmt::Display for UnknownTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown knot name (expected unknot, 3_1, 4_1, 5_1, 5_2 or unknown)")
    }
}

impl core::error::Error for UnknownTag {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Caveat {
    /// Alexander polynomial is 1 but every diagram tried had more than ten
    /// crossings.
    AlexanderTrivialHighCrossing,
    /// The bracket audit disagreed with the Alexander match.
    BracketMismatch,
}

impl Caveat {
    pub fn name(self) -> &'static str {
        match self {
            Caveat::AlexanderTrivialHighCrossing => "alexander_trivial_high_crossing",
            Caveat::BracketMismatch => "bracket_mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotType {
    pub tag: KnotTag,
    pub determinant: u64,
    pub alexander: LaurentPoly,
    /// Crossings of the diagram the decision was made on.
    pub crossings: usize,
    pub caveat: Option<Caveat>,
    /// Jones polynomial, when the bracket audit ran.
    pub jones: Option<LaurentPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    InvalidPolygon,
    Projection(ProjectError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::InvalidPolygon => f.write_str("polygon is not closed, maximal and embedded"),
            ClassifyError::Projection(e) => write!(f, "projection failed: {e}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<ProjectError> for ClassifyError {
    fn from(e: ProjectError) -> Self {
        ClassifyError::Projection(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Audit {
    /// Doubtful results plus roughly one polygon in a hundred, chosen by a
    /// hash of the word.
    #[default]
    Sampled,
    Always,
    /// Doubtful results only.
    DoubtfulOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub audit: Audit,
    /// Skip the embedding check when the caller already guarantees it.
    pub trusted: bool,
}

/// FNV-1a over the stick word.
fn word_hash(p: &Polygon) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for s in p.sticks() {
        for b in [s.dir as u8, s.len as u8, (s.len >> 8) as u8] {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

pub fn classify(p: &Polygon) -> Result<KnotType, ClassifyError> {
    classify_with(p, ClassifyOptions::default())
}

pub fn classify_with(p: &Polygon, opts: ClassifyOptions) -> Result<KnotType, ClassifyError> {
    if !opts.trusted && !validate(p).is_valid() {
        return Err(ClassifyError::InvalidPolygon);
    }
    let (mut d, _) = project_along(p, Axis::Vertical)?;
    let mut poly = alexander(&d);
    let mut caveat = None;
    let mut tag = KnotTag::from_alexander(&poly).unwrap_or(KnotTag::Unknown);
    if tag == KnotTag::Unknot && d.crossing_count() > UNKNOT_CROSSING_THRESHOLD {
        for axis in [Axis::AlongU, Axis::AlongV] {
            if let Ok((e, _)) = project_along(p, axis) {
                if e.crossing_count() < d.crossing_count() {
                    d = e;
                }
            }
        }
        poly = alexander(&d);
        if d.crossing_count() > UNKNOT_CROSSING_THRESHOLD {
            tag = KnotTag::Unknown;
            caveat = Some(Caveat::AlexanderTrivialHighCrossing);
        }
    }
    let doubtful = tag == KnotTag::Unknown || caveat.is_some();
    let audit = match opts.audit {
        Audit::Always => true,
        Audit::Sampled => doubtful || word_hash(p) % 100 == 0,
        Audit::DoubtfulOnly => doubtful,
    };
    let mut jones_poly = None;
    if audit {
        jones_poly = jones(&d);
        if let (Some(v), Some(r)) = (&jones_poly, tag.reference_jones()) {
            if !same_up_to_mirror(v, &r) {
                tag = KnotTag::Unknown;
                caveat = Some(Caveat::BracketMismatch);
            }
        }
    }
    Ok(KnotType {
        tag,
        determinant: poly.eval(-1).unsigned_abs() as u64,
        alexander: poly,
        crossings: d.crossing_count(),
        caveat,
        jones: jones_poly,
    })
}

/// Every tag with its reference Alexander polynomial, for reports.
pub fn reference_table() -> Vec<(KnotTag, LaurentPoly)> {
    KnotTag::REFERENCE.into_iter().map(|t| (t, t.reference_alexander().unwrap())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{parse_word, Lattice};

    #[test]
    fn reference_pds_give_reference_polynomials() {
        for t in KnotTag::REFERENCE {
            let d = Diagram::from_pd(t.reference_pd().unwrap()).unwrap();
            assert_eq!(Some(alexander(&d)), t.reference_alexander(), "{t}");
        }
    }

    #[test]
    fn hexagon_is_unknot() {
        let h = parse_word("x^1 y^1 z^1 x^-1 y^-1 z^-1", Lattice::Sh).unwrap();
        let k = classify(&h).unwrap();
        assert_eq!(k.tag, KnotTag::Unknot);
        assert_eq!(k.determinant, 1);
    }

    #[test]
    fn rejects_invalid_input() {
        let p = parse_word("x^1 y^1", Lattice::Sh).unwrap();
        assert_eq!(classify(&p), Err(ClassifyError::InvalidPolygon));
    }

    #[test]
    fn names_round_trip() {
        for t in KnotTag::ALL {
            assert_eq!(t.name().parse::<KnotTag>(), Ok(t));
        }
    }
}
