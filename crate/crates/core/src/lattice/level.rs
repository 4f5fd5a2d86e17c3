//! Heights of planar sticks ("levels") and the properly leveled condition:
//! at each level, the planar sticks form one consecutive run of the word.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{LatticePoint, Polygon};

/// Sorted distinct heights carrying at least one planar stick.
pub fn w_levels(p: &Polygon) -> Vec<i64> {
    let v = p.lattice().vertical();
    let verts = p.vertices();
    let set: BTreeSet<i64> = p.sticks().iter().zip(&verts).filter(|(s, _)| s.dir != v).map(|(_, q)| q.c).collect();
    set.into_iter().collect()
}

/// True when every level's planar sticks are cyclically consecutive.
pub fn is_properly_leveled(p: &Polygon) -> bool {
    let v = p.lattice().vertical();
    let sticks = p.sticks();
    let n = sticks.len();
    let Some(first_vertical) = sticks.iter().position(|s| s.dir == v) else {
        return true;
    };
    let verts = p.vertices();
    let mut seen = BTreeSet::new();
    let mut current: Option<i64> = None;
    for k in 1..=n {
        let i = (first_vertical + k) % n;
        if sticks[i].dir == v {
            current = None;
            continue;
        }
        let h = verts[i].c;
        if current != Some(h) {
            if !seen.insert(h) {
                return false;
            }
            current = Some(h);
        }
    }
    true
}

/// Renumbers the occupied levels to consecutive heights starting at the
/// lowest one. Heights are changed monotonically, so the knot type is kept.
pub fn compact_levels(p: &Polygon) -> Polygon {
    let levels = w_levels(p);
    let Some(&low) = levels.first() else {
        return p.clone();
    };
    let verts = p.vertices();
    let n = p.len();
    let moved: Vec<LatticePoint> = verts[..n]
        .iter()
        .map(|q| {
            let rank = levels.partition_point(|&h| h < q.c) as i64;
            LatticePoint::new(q.a, q.b, low + rank)
        })
        .collect();
    Polygon::from_vertices(p.lattice(), &moved).expect("monotone height change keeps steps")
}
