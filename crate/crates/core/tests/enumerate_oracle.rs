//! Exhaustive reconstruction of small censuses, compared class by class with
//! the search engine.

use std::collections::BTreeSet;

use shknot_core::enumerate::{search, SearchConfig};
use shknot_core::lattice::{canonical_key, validate, Direction, Lattice, Polygon, Stick};

fn planar(s: &Stick) -> (i64, i64) {
    match s.dir {
        Direction::X => (s.len, 0),
        Direction::Y => (0, s.len),
        Direction::Z => (-s.len, s.len),
        Direction::W => unreachable!(),
    }
}

/// The stick closing a planar displacement `(a, b)`, if one exists.
fn closer(a: i64, b: i64, max_len: i64) -> Option<Stick> {
    let s = match (a, b) {
        (0, 0) => return None,
        (a, 0) => Stick::new(Direction::X, -a),
        (0, b) => Stick::new(Direction::Y, -b),
        (a, b) if a == -b => Stick::new(Direction::Z, a),
        _ => return None,
    };
    (s.len.abs() <= max_len).then_some(s)
}

/// Every 11-stick sh polygon with seven planar sticks split into four arcs,
/// one per level, visited in each of `orders`.
fn brute(max_len: i64, orders: &[[usize; 4]]) -> BTreeSet<u128> {
    let heights = [0i64, 1, 2, 3];
    let mut opts = Vec::new();
    for d in [Direction::X, Direction::Y, Direction::Z] {
        for len in 1..=max_len {
            opts.push(Stick::new(d, len));
            opts.push(Stick::new(d, -len));
        }
    }
    let k = opts.len();
    let mut out = BTreeSet::new();
    let mut w = [Stick::new(Direction::X, 1); 7];
    for code in 0..k.pow(6) {
        let mut c = code;
        let (mut a, mut b) = (0, 0);
        for s in w.iter_mut().take(6) {
            *s = opts[c % k];
            c /= k;
            let (da, db) = planar(s);
            a += da;
            b += db;
        }
        let Some(last) = closer(a, b, max_len) else { continue };
        w[6] = last;
        for c1 in 1..7 {
            for c2 in c1 + 1..7 {
                for c3 in c2 + 1..7 {
                    let cuts = [0, c1, c2, c3, 7];
                    let arcs: Vec<&[Stick]> = (0..4).map(|i| &w[cuts[i]..cuts[i + 1]]).collect();
                    if arcs.iter().any(|arc| arc.windows(2).any(|p| p[0].dir == p[1].dir)) {
                        continue;
                    }
                    for order in orders {
                        let mut word = Vec::new();
                        for (i, arc) in arcs.iter().enumerate() {
                            word.extend_from_slice(arc);
                            word.push(Stick::new(Direction::W, heights[order[(i + 1) % 4]] - heights[order[i]]));
                        }
                        let p = Polygon::new(Lattice::Sh, word).unwrap();
                        if !validate(&p).is_valid() {
                            continue;
                        }
                        let ct = p.stick_census().unwrap();
                        let mut t = [ct.x, ct.y, ct.z];
                        t.sort_unstable_by(|a, b| b.cmp(a));
                        if ![[4, 2, 1], [3, 3, 1], [3, 2, 2]].contains(&t) {
                            continue;
                        }
                        out.insert(canonical_key(&p).unwrap());
                    }
                }
            }
        }
    }
    out
}

fn engine(cfg: &SearchConfig) -> BTreeSet<u128> {
    search(cfg).unwrap().classes().map(|(p, _)| canonical_key(&p).unwrap()).collect()
}

#[test]
fn default_census_matches_brute_force() {
    for max_len in 1..=2 {
        let cfg = SearchConfig { max_stick_len: max_len, ..SearchConfig::default() };
        let want = brute(max_len, &[[0, 2, 1, 3]]);
        assert!(!want.is_empty());
        assert_eq!(engine(&cfg), want, "L = {max_len}");
    }
}

#[test]
fn relaxed_census_matches_brute_force() {
    let cfg = SearchConfig { max_stick_len: 1, ..SearchConfig::relaxed() };
    let want = brute(1, &[[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]]);
    assert_eq!(engine(&cfg), want);
}

#[test]
fn census_goldens() {
    use shknot_core::knot_id::KnotTag;
    for (max_len, unknots, trefoils) in [(2, 52908, 0), (3, 583690, 1)] {
        let cfg = SearchConfig { max_stick_len: max_len, ..SearchConfig::default() };
        let c = search(&cfg).unwrap();
        let counts = c.counts();
        assert_eq!(counts[&KnotTag::Unknot], unknots, "L = {max_len}");
        assert_eq!(counts[&KnotTag::K3_1], trefoils, "L = {max_len}");
        assert_eq!(c.total() as u64, unknots + trefoils);
    }
}
