//! Alexander polynomial from the Wirtinger arc presentation.
//!
//! Arcs run from one under-passage to the next. Each crossing contributes a
//! row: `1 - t` on the over arc, and `t`, `-1` on the incoming and outgoing
//! under arcs (swapped for negative crossings). Deleting one row and one
//! column leaves a square matrix whose determinant is the polynomial up to
//! `+-t^k`.

use alloc::vec;
use alloc::vec::Vec;

use super::diagram::Diagram;
use super::laurent::LaurentPoly;

/// Dense polynomial in `t`, ascending coefficients, no trailing zeros.
type Poly = Vec<i128>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Exact quotient; the division is known to be exact in Bareiss elimination.
fn div_exact(a: &Poly, b: &Poly) -> Poly {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lead = *b.last().unwrap();
    if rem.len() < b.len() {
        assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![0i128; rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        if c == 0 {
            continue;
        }
        assert!(c % lead == 0, "inexact polynomial division");
        let f = c / lead;
        q[k] = f;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= f * y;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    trim(q)
}

/// Fraction-free determinant over `Z[t]`.
fn det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut sign = 1i128;
    let mut prev: Poly = vec![1];
    for k in 0..n {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                return Vec::new();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = sub(&mul(&m[i][j], &m[k][k]), &mul(&m[i][k], &m[k][j]));
                m[i][j] = div_exact(&t, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].iter().map(|c| c * sign).collect()
}

/// Arc labels around each crossing: `(over, incoming under, outgoing under)`.
pub(crate) fn arcs(d: &Diagram) -> Vec<(usize, usize, usize)> {
    let n = d.crossing_count();
    let g = d.gauss();
    let mut out = vec![(0, 0, 0); n];
    if n == 0 {
        return out;
    }
    let start = g.iter().position(|p| !p.over).expect("every crossing has an under passage");
    let mut arc = 0;
    for k in 1..=g.len() {
        let p = g[(start + k) % g.len()];
        if p.over {
            out[p.crossing].0 = arc;
        } else {
            out[p.crossing].1 = arc;
            arc = (arc + 1) % n;
            out[p.crossing].2 = arc;
        }
    }
    out
}

/// Normalized Alexander polynomial: lowest power `t^0`, positive leading
/// coefficient.
pub fn alexander(d: &Diagram) -> LaurentPoly {
    let n = d.crossing_count();
    if n <= 1 {
        return LaurentPoly::one();
    }
    let mut m: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
    for (c, &(over, inc, out)) in arcs(d).iter().enumerate() {
        let row = &mut m[c];
        let add = |cell: &mut Poly, p: &[i128]| {
            let mut s = vec![0i128; cell.len().max(p.len())];
            for (i, x) in cell.iter().enumerate() {
                s[i] += x;
            }
            for (i, x) in p.iter().enumerate() {
                s[i] += x;
            }
            *cell = trim(s);
        };
        add(&mut row[over], &[1, -1]);
        if d.crossings()[c].sign > 0 {
            add(&mut row[inc], &[0, 1]);
            add(&mut row[out], &[-1]);
        } else {
            add(&mut row[inc], &[-1]);
            add(&mut row[out], &[0, 1]);
        }
    }
    m.pop();
    for row in &mut m {
        row.pop();
    }
    let p = det(m);
    let coeffs: Vec<i64> = p.iter().map(|&c| i64::try_from(c).expect("coefficient fits")).collect();
    LaurentPoly::from_coeffs(0, &coeffs).normalized()
}

/// `|Delta(-1)|`.
pub fn determinant(d: &Diagram) -> u64 {
    alexander(d).eval(-1).unsigned_abs() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        // [[1-t, t], [-1, 1-t]] has determinant (1-t)^2 + t = t^2 - t + 1
        let m = vec![vec![vec![1, -1], vec![0, 1]], vec![vec![-1], vec![1, -1]]];
        assert_eq!(det(m), vec![1, -1, 1]);
        let z = vec![vec![Vec::new(), vec![1]], vec![Vec::new(), vec![2]]];
        assert!(det(z).is_empty());
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&vec![-1, 0, 1], &vec![-1, 1]), vec![1, 1]);
    }

    #[test]
    fn trefoil_from_pd() {
        let d = Diagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        assert_eq!(alexander(&d).coeffs(), [1, -1, 1]);
        assert_eq!(determinant(&d), 3);
        assert_eq!(alexander(&Diagram::empty()), LaurentPoly::one());
    }
}
