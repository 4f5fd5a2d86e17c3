//! Kauffman bracket by state sum, and the Jones polynomial derived from it.
//!
//! At `X[a, b, c, d]` the A-smoothing joins `a` with `b` and `c` with `d`; the
//! B-smoothing joins `a` with `d` and `b` with `c`. The state sum is
//! exponential, so it is capped.

use alloc::vec;

use super::diagram::Diagram;
use super::laurent::LaurentPoly;

/// Largest crossing count the state sum is run on.
pub const BRACKET_CROSSING_CAP: usize = 12;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Bracket polynomial in `A`, normalized so the crossingless circle is 1.
/// `None` above [`BRACKET_CROSSING_CAP`].
pub fn bracket(d: &Diagram) -> Option<LaurentPoly> {
    let n = d.crossing_count();
    if n > BRACKET_CROSSING_CAP {
        return None;
    }
    if n == 0 {
        return Some(LaurentPoly::one());
    }
    let m = 2 * n;
    // tally[a_minus_b + n][loops]
    let mut tally = vec![vec![0i64; m + 1]; 2 * n + 1];
    let mut parent = vec![0usize; m + 1];
    for state in 0u32..(1 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut comps = m;
        for (k, x) in d.pd().iter().enumerate() {
            let [a, b, c, dd] = *x;
            let pairs = if state >> k & 1 == 0 { [(a, b), (c, dd)] } else { [(a, dd), (b, c)] };
            for (p, q) in pairs {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                if rp != rq {
                    parent[rp] = rq;
                    comps -= 1;
                }
            }
        }
        let b_count = state.count_ones() as usize;
        tally[n + n - 2 * b_count][comps] += 1;
    }
    let delta = LaurentPoly::from_coeffs(-2, &[-1, 0, 0, 0, -1]);
    let mut powers = vec![LaurentPoly::one()];
    for k in 1..=m {
        let next = &powers[k - 1] * &delta;
        powers.push(next);
    }
    let mut out = LaurentPoly::zero();
    for (i, row) in tally.iter().enumerate() {
        let exp = i as i64 - n as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = &powers[loops - 1] * &LaurentPoly::monomial(count, exp);
            out = &out + &term;
        }
    }
    Some(out)
}

/// Jones polynomial in `t`, from `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones(d: &Diagram) -> Option<LaurentPoly> {
    let b = bracket(d)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = &b * &LaurentPoly::monomial(sign, -3 * w);
    let mut v = LaurentPoly::zero();
    for (e, c) in f.terms() {
        assert!(e % 4 == 0, "knot diagrams give integral powers of t");
        v.add_term(-e / 4, c);
    }
    Some(v)
}

/// Equality up to `t -> 1/t`.
pub fn same_up_to_mirror(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    a == b || *a == b.mirror()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinks_are_trivial() {
        for pd in [[[1, 1, 2, 2]], [[1, 2, 2, 1]]] {
            let d = Diagram::from_pd(&pd).unwrap();
            assert_eq!(jones(&d).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn trefoil_jones() {
        let d = Diagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let v = jones(&d).unwrap();
        let right = LaurentPoly::from_coeffs(1, &[1, 0, 1, -1]);
        assert!(same_up_to_mirror(&v, &right), "{v}");
    }
}
