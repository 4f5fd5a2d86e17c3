//! Knot invariants computed directly from planar diagram codes.

use std::collections::BTreeMap;

use shknot_core::knot_id::LaurentPoly;

/// Laurent polynomial as exponent -> coefficient, zero terms removed.
pub type Poly = BTreeMap<i64, i64>;

pub fn clean(mut p: Poly) -> Poly {
    p.retain(|_, c| *c != 0);
    p
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    clean(out)
}

pub fn add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += sign * c;
    }
    clean(out)
}

pub fn mono(c: i64, e: i64) -> Poly {
    clean(Poly::from([(e, c)]))
}

/// Leibniz expansion; matrices here are at most 8 by 8.
pub fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return mono(1, 0);
    }
    let mut total = Poly::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut term = mono(1, 0);
        for (i, &j) in perm.iter().enumerate() {
            term = mul(&term, &m[i][j]);
            if term.is_empty() {
                break;
            }
        }
        total = add(&total, &term, if inv % 2 == 0 { 1 } else { -1 });
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let pm: Vec<Vec<Poly>> = m.iter().map(|r| r.iter().map(|&c| mono(c, 0)).collect()).collect();
    det(&pm).get(&0).copied().unwrap_or(0)
}

/// Coefficients from the lowest exponent, sign fixed so the first is positive.
pub fn normal(p: &Poly) -> Vec<i64> {
    let (lo, hi) = (*p.keys().next().unwrap(), *p.keys().last().unwrap());
    let mut v: Vec<i64> = (lo..=hi).map(|e| p.get(&e).copied().unwrap_or(0)).collect();
    if v[0] < 0 {
        v.iter_mut().for_each(|c| *c = -*c);
    }
    v
}

pub fn normal_laurent(p: &LaurentPoly) -> Vec<i64> {
    let poly: Poly = clean(p.terms().collect());
    normal(&poly)
}

/// Faces of a PD code as lists of corners `(crossing, k)`, where corner `k`
/// lies between positions `k` and `k + 1`.
pub fn faces(pd: &[[usize; 4]]) -> (Vec<Vec<(usize, usize)>>, BTreeMap<(usize, usize), usize>) {
    let mut face_of = BTreeMap::new();
    let mut out = Vec::new();
    for x in 0..pd.len() {
        for k in 0..4 {
            if face_of.contains_key(&(x, k)) {
                continue;
            }
            let id = out.len();
            let mut face = Vec::new();
            let mut at = (x, k);
            while !face_of.contains_key(&at) {
                face_of.insert(at, id);
                face.push(at);
                let (cx, ck) = at;
                let slot = (cx, (ck + 1) % 4);
                let edge = pd[cx][slot.1];
                let other = (0..pd.len())
                    .flat_map(|y| (0..4).map(move |q| (y, q)))
                    .find(|&(y, q)| pd[y][q] == edge && (y, q) != slot)
                    .expect("every edge has two ends");
                at = other;
            }
            out.push(face);
        }
    }
    (out, face_of)
}

pub fn checkerboard(pd: &[[usize; 4]], n_faces: usize, face_of: &BTreeMap<(usize, usize), usize>) -> Vec<u8> {
    let mut colour = vec![u8::MAX; n_faces];
    colour[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..pd.len() {
            for k in 0..4 {
                let (f, g) = (face_of[&(x, k)], face_of[&(x, (k + 1) % 4)]);
                for (a, b) in [(f, g), (g, f)] {
                    if colour[a] != u8::MAX && colour[b] == u8::MAX {
                        colour[b] = 1 - colour[a];
                        changed = true;
                    }
                }
                assert!(colour[f] == u8::MAX || colour[g] == u8::MAX || colour[f] != colour[g]);
            }
        }
    }
    colour
}

/// Determinant from the Goeritz matrix of the shaded faces.
pub fn goeritz_determinant(pd: &[[usize; 4]]) -> u64 {
    if pd.is_empty() {
        return 1;
    }
    let (fs, face_of) = faces(pd);
    assert_eq!(fs.len(), pd.len() + 2, "Euler characteristic of the diagram");
    let colour = checkerboard(pd, fs.len(), &face_of);
    let shaded: Vec<usize> = (0..fs.len()).filter(|&f| colour[f] == 0).collect();
    let index: BTreeMap<usize, usize> = shaded.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let m = shaded.len();
    let mut g = vec![vec![0i64; m]; m];
    for x in 0..pd.len() {
        let k = if colour[face_of[&(x, 0)]] == 0 { 0 } else { 1 };
        let eta = if k == 0 { 1 } else { -1 };
        let (i, j) = (index[&face_of[&(x, k)]], index[&face_of[&(x, k + 2)]]);
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let minor: Vec<Vec<i64>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    int_det(&minor).unsigned_abs()
}

/// Alexander polynomial from the crossing-by-region matrix with the columns
/// of two adjacent regions removed.
pub fn region_alexander(pd: &[[usize; 4]]) -> Vec<i64> {
    if pd.is_empty() {
        return vec![1];
    }
    let (fs, face_of) = faces(pd);
    let n = pd.len();
    let mut m = vec![vec![Poly::new(); fs.len()]; n];
    // corner k sits between positions k and k+1; position 0 is the incoming under edge
    let weights = [mono(1, 1), mono(-1, 1), mono(1, 0), mono(-1, 0)];
    for (x, row) in m.iter_mut().enumerate() {
        for (k, wgt) in weights.iter().enumerate() {
            let f = face_of[&(x, k)];
            row[f] = add(&row[f], wgt, 1);
        }
    }
    let (a, b) = (face_of[&(0, 0)], face_of[&(0, 1)]);
    let minor: Vec<Vec<Poly>> = m
        .iter()
        .map(|r| r.iter().enumerate().filter(|(f, _)| *f != a && *f != b).map(|(_, p)| p.clone()).collect())
        .collect();
    normal(&det(&minor))
}
