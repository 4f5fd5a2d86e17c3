mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shknot_core::lattice::{
    canonical_key, canonicalize, canonicalize_proper, is_properly_leveled, symmetry_group, validate, Direction,
    Lattice, LatticePoint, Polygon,
};
use shknot_core::transform::{apply_t, apply_t_inv};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Embedded exactly when no half-unit point along the polygon repeats.
/// Works in doubled `(u, v, c)` coordinates so half steps are integral.
fn embedded_oracle(p: &Polygon) -> bool {
    let l = p.lattice();
    let mut seen = BTreeSet::new();
    let b = p.base().uvc(l);
    let mut at = [2 * b[0], 2 * b[1], 2 * b[2]];
    for s in p.sticks() {
        let unit = s.dir.unit(l).unwrap().uvc(l);
        let sign = s.len.signum();
        for _ in 0..2 * s.len.abs() {
            if !seen.insert(at) {
                return false;
            }
            for k in 0..3 {
                at[k] += sign * unit[k];
            }
        }
    }
    true
}

/// Proper leveling by union-find: planar sticks adjacent in the word are
/// joined, then every level must hold one class.
fn leveled_oracle(p: &Polygon) -> bool {
    let l = p.lattice();
    let v = l.vertical();
    let n = p.len();
    let verts = p.vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for i in 0..n {
        let j = (i + 1) % n;
        if p.sticks()[i].dir != v && p.sticks()[j].dir != v {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut classes: BTreeMap<i64, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        if p.sticks()[i].dir != v {
            let r = find(&mut parent, i);
            classes.entry(verts[i].c).or_default().insert(r);
        }
    }
    classes.values().all(|s| s.len() == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn validate_matches_half_step_oracle(seed in any::<u64>(), sh in any::<bool>(), walk in 3usize..12) {
        let l = if sh { Lattice::Sh } else { Lattice::Cubic };
        let p = common::random_closed(&mut rng(seed), l, walk, 3);
        prop_assume!(p.len() >= 2 && p.is_maximal());
        let r = validate(&p);
        prop_assert!(r.closed);
        prop_assert_eq!(r.embedded, embedded_oracle(&p), "{}", p);
    }

    #[test]
    fn leveling_matches_union_find(seed in any::<u64>(), walk in 4usize..14) {
        let p = common::random_closed(&mut rng(seed), Lattice::Sh, walk, 2);
        prop_assume!(p.len() >= 4);
        prop_assert_eq!(is_properly_leveled(&p), leveled_oracle(&p), "{}", p);
    }

    #[test]
    fn transform_round_trip(seed in any::<u64>()) {
        let p = common::random_valid(&mut rng(seed), Lattice::Cubic, 20);
        let q = apply_t(&p).unwrap();
        prop_assert_eq!(q.lattice(), Lattice::Sh);
        prop_assert_eq!(q.len(), p.len());
        prop_assert_eq!(q.edge_length(), p.edge_length());
        for (s, t) in p.sticks().iter().zip(q.sticks()) {
            prop_assert_eq!(s.len, t.len);
        }
        prop_assert!(q.sticks().iter().all(|s| s.dir != Direction::Z));
        prop_assert!(validate(&q).is_valid());
        prop_assert_eq!(apply_t_inv(&q).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_a_class_invariant(seed in any::<u64>(), shift in 0usize..20, g in 0usize..24, rev in any::<bool>()) {
        let p = common::random_valid(&mut rng(seed), Lattice::Sh, 14);
        let sym = &symmetry_group(Lattice::Sh)[g];
        let mut q = sym.apply(&p).rotated(shift % p.len()).translated(LatticePoint::new(3, -2, 7));
        if rev {
            q = q.reversed();
        }
        prop_assert_eq!(canonicalize(&q), canonicalize(&p));
        prop_assert_eq!(canonical_key(&q), canonical_key(&p));
        if sym.is_proper() {
            prop_assert_eq!(canonicalize_proper(&q), canonicalize_proper(&p));
        }
        prop_assert!(validate(&canonicalize(&p)).is_valid());
    }
}

#[test]
fn oracles_see_both_outcomes() {
    let mut r = rng(11);
    let (mut emb, mut lev) = (BTreeSet::new(), BTreeSet::new());
    for _ in 0..500 {
        let p = common::random_closed(&mut r, Lattice::Sh, 8, 2);
        if p.len() >= 4 && p.is_maximal() {
            emb.insert(embedded_oracle(&p));
            lev.insert(leveled_oracle(&p));
        }
    }
    assert_eq!(emb.len(), 2);
    assert_eq!(lev.len(), 2);
}
