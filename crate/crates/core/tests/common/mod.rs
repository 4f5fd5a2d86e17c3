//! Seeded random polygons shared by the integration tests.
#![allow(dead_code)]

pub mod pd;

use rand::Rng;

use shknot_core::lattice::{validate, Direction, Lattice, LatticePoint, Polygon, Stick};

/// A closed word on `lattice`: a random stick walk followed by up to three
/// closing sticks. Not necessarily embedded or maximal before normalizing.
pub fn random_closed(rng: &mut impl Rng, lattice: Lattice, walk: usize, max_len: i64) -> Polygon {
    let dirs = lattice.directions();
    let all: Vec<Direction> = match lattice {
        Lattice::Cubic => dirs.to_vec(),
        Lattice::Sh => vec![Direction::X, Direction::Y, Direction::Z, Direction::W],
    };
    let mut sticks = Vec::new();
    let mut prev = None;
    for _ in 0..walk {
        let d = loop {
            let d = all[rng.gen_range(0..all.len())];
            if Some(d) != prev {
                break d;
            }
        };
        let len = rng.gen_range(1..=max_len) * if rng.gen_bool(0.5) { 1 } else { -1 };
        sticks.push(Stick::new(d, len));
        prev = Some(d);
    }
    let open = Polygon::new(lattice, sticks.clone()).unwrap();
    let end = *open.vertices().last().unwrap();
    let mut closing: Vec<Stick> = Vec::new();
    match lattice {
        Lattice::Cubic => {
            for (d, k) in [(Direction::X, end.a), (Direction::Y, end.b), (Direction::Z, end.c)] {
                if k != 0 {
                    closing.push(Stick::new(d, -k));
                }
            }
        }
        Lattice::Sh => {
            for (d, k) in [(Direction::X, end.a), (Direction::Y, end.b), (Direction::W, end.c)] {
                if k != 0 {
                    closing.push(Stick::new(d, -k));
                }
            }
        }
    }
    for i in (1..closing.len()).rev() {
        let j = rng.gen_range(0..=i);
        closing.swap(i, j);
    }
    sticks.extend(closing);
    Polygon::new(lattice, sticks).unwrap().normalized()
}

/// A valid polygon with between 4 and `max_sticks` sticks.
pub fn random_valid(rng: &mut impl Rng, lattice: Lattice, max_sticks: usize) -> Polygon {
    loop {
        let walk = rng.gen_range(3..=max_sticks.saturating_sub(3).max(3));
        let p = random_closed(rng, lattice, walk, 3);
        if p.len() >= 4 && p.len() <= max_sticks && validate(&p).is_valid() {
            let shift = LatticePoint::new(rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5));
            return p.translated(shift);
        }
    }
}
