//! Knot diagrams as signed Gauss codes and planar-diagram (PD) codes.
//!
//! PD convention: `X[a, b, c, d]` lists the four edge labels at a crossing
//! counterclockwise, starting with the incoming under-edge `a`; so `c` is
//! the outgoing under-edge. Edge labels run `1..=2n` along the orientation.
//! The crossing is positive when the over strand runs from `d` to `b`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

pub type Q128 = Ratio<i128>;

/// A point on the polygon: stick index and exact parameter in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandPos {
    pub stick: usize,
    pub param: Q128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingGeometry {
    pub over: StrandPos,
    pub under: StrandPos,
    /// Position in the projection frame's integer coordinates.
    pub point: [Q128; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub sign: i8,
    /// Present when the diagram came from projecting a polygon.
    pub geometry: Option<CrossingGeometry>,
}

/// One visit to a crossing while walking the knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// A crossing label is not visited exactly once over and once under.
    BadGauss {
        crossing: usize,
    },
    /// A PD entry or edge label is inconsistent.
    BadPd {
        entry: usize,
    },
    Syntax {
        offset: usize,
        text: String,
    },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::BadGauss { crossing } => {
                write!(f, "crossing {} is not passed once over and once under", crossing + 1)
            }
            DiagramError::BadPd { entry } => write!(f, "inconsistent PD entry {}", entry + 1),
            DiagramError::Syntax { offset, text } => {
                write!(f, "cannot parse `{text}` at byte {offset}")
            }
        }
    }
}

impl core::error::Error for DiagramError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    gauss: Vec<Passage>,
    pd: Vec<[usize; 4]>,
}

fn succ(e: usize, m: usize) -> usize {
    e % m + 1
}

impl Diagram {
    /// The crossingless diagram.
    pub fn empty() -> Diagram {
        Diagram { crossings: Vec::new(), gauss: Vec::new(), pd: Vec::new() }
    }

    /// Builds a diagram from crossing data and the passage sequence.
    pub fn from_gauss(crossings: Vec<Crossing>, gauss: Vec<Passage>) -> Result<Diagram, DiagramError> {
        let n = crossings.len();
        let mut seen = vec![[false; 2]; n];
        if gauss.len() != 2 * n {
            return Err(DiagramError::BadGauss { crossing: 0 });
        }
        for p in &gauss {
            if p.crossing >= n || seen[p.crossing][p.over as usize] {
                return Err(DiagramError::BadGauss { crossing: p.crossing.min(n.saturating_sub(1)) });
            }
            seen[p.crossing][p.over as usize] = true;
        }
        let m = 2 * n;
        let mut pd = vec![[0usize; 4]; n];
        for (i, p) in gauss.iter().enumerate() {
            let inc = i + 1;
            let out = succ(inc, m);
            let e = &mut pd[p.crossing];
            if !p.over {
                e[0] = inc;
                e[2] = out;
            } else if crossings[p.crossing].sign > 0 {
                e[3] = inc;
                e[1] = out;
            } else {
                e[1] = inc;
                e[3] = out;
            }
        }
        Ok(Diagram { crossings, gauss, pd })
    }

    /// Builds a diagram from a PD code.
    pub fn from_pd(pd: &[[usize; 4]]) -> Result<Diagram, DiagramError> {
        let n = pd.len();
        let m = 2 * n;
        let mut count = vec![0u8; m + 1];
        for (k, x) in pd.iter().enumerate() {
            for &e in x {
                if e == 0 || e > m {
                    return Err(DiagramError::BadPd { entry: k });
                }
                count[e] += 1;
            }
            if x[2] != succ(x[0], m) {
                return Err(DiagramError::BadPd { entry: k });
            }
        }
        if count[1..].iter().any(|&c| c != 2) {
            return Err(DiagramError::BadPd { entry: 0 });
        }
        // the passage at the end of edge e
        let mut ends: Vec<Option<Passage>> = vec![None; m + 1];
        let mut crossings = Vec::with_capacity(n);
        for (k, x) in pd.iter().enumerate() {
            let [a, b, c, d] = *x;
            let over_in = if m == 2 {
                if d == c {
                    d
                } else {
                    b
                }
            } else if b == succ(d, m) {
                d
            } else if d == succ(b, m) {
                b
            } else {
                return Err(DiagramError::BadPd { entry: k });
            };
            let sign = if over_in == d { 1 } else { -1 };
            crossings.push(Crossing { sign, geometry: None });
            for (e, over) in [(a, false), (over_in, true)] {
                if ends[e].is_some() {
                    return Err(DiagramError::BadPd { entry: k });
                }
                ends[e] = Some(Passage { crossing: k, over });
            }
        }
        let gauss =
            ends[1..].iter().map(|p| p.ok_or(DiagramError::BadPd { entry: 0 })).collect::<Result<Vec<_>, _>>()?;
        Ok(Diagram { crossings, gauss, pd: pd.to_vec() })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn gauss(&self) -> &[Passage] {
        &self.gauss
    }

    pub fn pd(&self) -> &[[usize; 4]] {
        &self.pd
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// `X(a,b,c,d)` entries separated by spaces.
    pub fn pd_text(&self) -> String {
        let parts: Vec<String> = self.pd.iter().map(|x| format!("X({},{},{},{})", x[0], x[1], x[2], x[3])).collect();
        parts.join(" ")
    }

    /// Signed Gauss code: crossing numbers from 1, positive when passing
    /// over, negative when passing under.
    pub fn gauss_text(&self) -> String {
        let parts: Vec<String> = self
            .gauss
            .iter()
            .map(|p| {
                let k = p.crossing as i64 + 1;
                format!("{}", if p.over { k } else { -k })
            })
            .collect();
        parts.join(" ")
    }

    /// Crossing signs in crossing order, as `+` and `-`.
    pub fn signs_text(&self) -> String {
        self.crossings.iter().map(|c| if c.sign > 0 { '+' } else { '-' }).collect()
    }
}

/// Parses PD text such as `X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]`. Round or
/// square brackets are accepted; separators are commas or whitespace.
pub fn parse_pd(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let syntax =
        |at: usize| DiagramError::Syntax { offset: at, text: String::from(&text[at..(at + 12).min(text.len())]) };
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' | b',' => i += 1,
            b'X' => {
                let start = i;
                i += 1;
                if i >= bytes.len() || !matches!(bytes[i], b'[' | b'(') {
                    return Err(syntax(start));
                }
                let close = if bytes[i] == b'[' { b']' } else { b')' };
                let end = text[i..].find(close as char).ok_or_else(|| syntax(start))? + i;
                let nums: Result<Vec<usize>, _> =
                    text[i + 1..end].split(',').map(|s| s.trim().parse::<usize>()).collect();
                let nums = nums.map_err(|_| syntax(start))?;
                let [a, b, c, d] = nums[..] else { return Err(syntax(start)) };
                out.push([a, b, c, d]);
                i = end + 1;
            }
            _ => return Err(syntax(i)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];

    #[test]
    fn pd_round_trip_through_gauss() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe().abs(), 3);
        let again = Diagram::from_gauss(d.crossings().to_vec(), d.gauss().to_vec()).unwrap();
        assert_eq!(again.pd(), &TREFOIL);
        assert_eq!(d.gauss_text(), "-1 3 -2 1 -3 2");
    }

    #[test]
    fn pd_text_round_trip() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        assert_eq!(d.pd_text(), "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
        assert_eq!(parse_pd(&d.pd_text()).unwrap(), TREFOIL);
        assert_eq!(parse_pd("X[1,5,2,4], X[3,1,4,6],X[5,3,6,2]").unwrap(), TREFOIL);
        assert!(matches!(parse_pd("X[1,2,3]"), Err(DiagramError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn one_crossing_kinks() {
        let pos = Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
        let neg = Diagram::from_pd(&[[1, 2, 2, 1]]).unwrap();
        assert_eq!(pos.writhe(), 1);
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn rejects_inconsistent_codes() {
        assert!(Diagram::from_pd(&[[1, 5, 3, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).is_err());
        let c = Crossing { sign: 1, geometry: None };
        let p = Passage { crossing: 0, over: true };
        assert!(Diagram::from_gauss(vec![c], vec![p, p]).is_err());
    }
}
