//! Depth-first growth of leveled polygons with one occupancy grid per level.

use alloc::vec;
use alloc::vec::Vec;

use super::{leaf_polygon, leaf_word};
use crate::lattice::{Direction, Polygon, Stick};

#[derive(Debug)]
pub(crate) struct Plan {
    /// Level indices in visiting order, starting with level 0.
    pub order: Vec<usize>,
    pub heights: Vec<i64>,
    pub planar: usize,
    pub lmax: i64,
    pub census: Option<Vec<[u8; 3]>>,
}

pub(crate) struct Leaf<'a> {
    plan: &'a Plan,
    arcs: &'a [Vec<Stick>],
}

impl Leaf<'_> {
    pub fn polygon(&self) -> Polygon {
        let arcs: Vec<&[Stick]> = self.arcs.iter().map(|a| a.as_slice()).collect();
        leaf_polygon(&self.plan.order, &self.plan.heights, leaf_word(&self.plan.order, &self.plan.heights, &arcs))
    }
}

const EMPTY: u8 = 0;
const TAKEN: u8 = 1;
const PIERCED: u8 = 2;
const TARGET: u8 = 3;

const CLASSES: [Direction; 3] = [Direction::X, Direction::Y, Direction::Z];
const STEP: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, 1]];

fn hex_dist(p: [i64; 2]) -> i64 {
    (p[0].abs() + p[1].abs() + (p[0] + p[1]).abs()) / 2
}

struct Vertical {
    at: [i64; 2],
    lo: usize,
    hi: usize,
}

pub(crate) struct Engine<'a> {
    plan: &'a Plan,
    shard: (usize, usize),
    budget: u64,
    pub explored: u64,
    pub pruned: u64,
    stopped: bool,
    r: i64,
    width: i64,
    grids: Vec<Vec<u8>>,
    arcs: Vec<Vec<Stick>>,
    verticals: Vec<Vertical>,
    counts: [u8; 3],
    first_arcs: usize,
}

impl<'a> Engine<'a> {
    pub fn new(plan: &'a Plan, shard: (usize, usize), budget: u64) -> Self {
        let r = plan.planar as i64 * plan.lmax + 1;
        let width = 2 * r + 1;
        let m = plan.order.len();
        Engine {
            plan,
            shard,
            budget,
            explored: 0,
            pruned: 0,
            stopped: false,
            r,
            width,
            grids: vec![vec![EMPTY; (width * width) as usize]; m],
            arcs: vec![Vec::new(); m],
            verticals: Vec::new(),
            counts: [0; 3],
            first_arcs: 0,
        }
    }

    #[inline]
    fn cell(&self, p: [i64; 2]) -> usize {
        ((p[0] + self.r) * self.width + (p[1] + self.r)) as usize
    }

    fn span(&self, a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    /// Records a vertical stick between two levels at `at`, marking the
    /// levels it passes through. Fails if it meets anything already placed.
    fn place_vertical(&mut self, at: [i64; 2], from: usize, to: usize) -> bool {
        let (lo, hi) = self.span(from, to);
        if self.verticals.iter().any(|v| v.at == at && v.lo <= hi && lo <= v.hi) {
            return false;
        }
        let c = self.cell(at);
        if (lo + 1..hi).any(|l| self.grids[l][c] != EMPTY) || self.grids[to][c] == PIERCED {
            return false;
        }
        for l in lo + 1..hi {
            self.grids[l][c] = PIERCED;
        }
        self.verticals.push(Vertical { at, lo, hi });
        true
    }

    fn remove_vertical(&mut self) {
        let v = self.verticals.pop().expect("vertical to remove");
        let c = self.cell(v.at);
        for l in v.lo + 1..v.hi {
            self.grids[l][c] = EMPTY;
        }
    }

    fn census_allows(&self) -> bool {
        match &self.plan.census {
            None => true,
            Some(list) => list.iter().any(|t| (0..3).all(|k| self.counts[k] <= t[k])),
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.explored >= self.budget {
            self.stopped = true;
        }
        self.stopped
    }

    pub fn run(&mut self, on_leaf: &mut dyn FnMut(&Leaf) -> bool) {
        let order = &self.plan.order;
        let m = order.len();
        let origin = [0, 0];
        // the closing vertical stands at the origin
        let ok = self.place_vertical(origin, order[m - 1], order[0]);
        debug_assert!(ok);
        let c = self.cell(origin);
        self.grids[order[0]][c] = TAKEN;
        self.grids[order[m - 1]][c] = TARGET;
        self.arc(0, origin, None, self.plan.planar, on_leaf);
    }

    /// Counts a node of the first arc, which every shard walks.
    fn count_node(&mut self, i: usize) {
        if i > 0 || self.shard.0 == 0 {
            self.explored += 1;
        }
    }

    fn count_prune(&mut self, i: usize) {
        if i > 0 || self.shard.0 == 0 {
            self.pruned += 1;
        }
    }

    fn arc(
        &mut self,
        i: usize,
        pos: [i64; 2],
        prev: Option<usize>,
        rem: usize,
        on_leaf: &mut dyn FnMut(&Leaf) -> bool,
    ) {
        if self.out_of_budget() {
            return;
        }
        let m = self.plan.order.len();
        let later = m - 1 - i;
        let in_arc = self.arcs[i].len();
        if i == m - 1 {
            if rem == 1 {
                self.close(pos, prev, on_leaf);
                return;
            }
        } else if in_arc > 0 && rem >= later {
            self.end_arc(i, pos, rem, on_leaf);
            if self.stopped {
                return;
            }
        }
        if rem <= later || (i == m - 1 && rem <= 1) {
            return;
        }
        let level = self.plan.order[i];
        for class in 0..3 {
            if prev == Some(class) {
                continue;
            }
            if i == 0 && in_arc == 0 && class != 0 {
                continue;
            }
            if i == 0 && in_arc == 1 && class != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                if i == 0 && in_arc == 0 && sign < 0 {
                    continue;
                }
                let step = [STEP[class][0] * sign, STEP[class][1] * sign];
                let mut cur = pos;
                let mut marked = Vec::new();
                for len in 1..=self.plan.lmax {
                    cur = [cur[0] + step[0], cur[1] + step[1]];
                    let c = self.cell(cur);
                    if self.grids[level][c] != EMPTY {
                        break;
                    }
                    self.grids[level][c] = TAKEN;
                    marked.push(c);
                    self.count_node(i);
                    if hex_dist(cur) > (rem as i64 - 1) * self.plan.lmax {
                        self.count_prune(i);
                        continue;
                    }
                    self.counts[class] += 1;
                    if self.census_allows() {
                        self.arcs[i].push(Stick::new(CLASSES[class], len * sign));
                        self.arc(i, cur, Some(class), rem - 1, on_leaf);
                        self.arcs[i].pop();
                    } else {
                        self.count_prune(i);
                    }
                    self.counts[class] -= 1;
                    if self.stopped {
                        break;
                    }
                }
                for c in marked {
                    self.grids[level][c] = EMPTY;
                }
                if self.stopped {
                    return;
                }
            }
        }
    }

    fn end_arc(&mut self, i: usize, pos: [i64; 2], rem: usize, on_leaf: &mut dyn FnMut(&Leaf) -> bool) {
        if i == 0 {
            let k = self.first_arcs;
            self.first_arcs += 1;
            if k % self.shard.1 != self.shard.0 {
                return;
            }
        }
        let (from, to) = (self.plan.order[i], self.plan.order[i + 1]);
        if !self.place_vertical(pos, from, to) {
            self.count_prune(i);
            return;
        }
        let c = self.cell(pos);
        let before = self.grids[to][c];
        self.grids[to][c] = TAKEN;
        self.arc(i + 1, pos, None, rem, on_leaf);
        self.grids[to][c] = before;
        self.remove_vertical();
    }

    /// The last stick of the last arc, which must end at the origin.
    fn close(&mut self, pos: [i64; 2], prev: Option<usize>, on_leaf: &mut dyn FnMut(&Leaf) -> bool) {
        let d = [-pos[0], -pos[1]];
        let (class, len) = match d {
            [0, 0] => return,
            [a, 0] => (0, a),
            [0, b] => (1, b),
            [a, b] if a == -b => (2, b),
            _ => return,
        };
        if prev == Some(class) || len.abs() > self.plan.lmax {
            return;
        }
        let level = self.plan.order[self.plan.order.len() - 1];
        let sign = len.signum();
        let step = [STEP[class][0] * sign, STEP[class][1] * sign];
        let mut cur = pos;
        for _ in 1..len.abs() {
            cur = [cur[0] + step[0], cur[1] + step[1]];
            if self.grids[level][self.cell(cur)] != EMPTY {
                return;
            }
        }
        self.explored += 1;
        self.counts[class] += 1;
        if self.census_allows() {
            let m = self.plan.order.len();
            self.arcs[m - 1].push(Stick::new(CLASSES[class], len));
            let keep = on_leaf(&Leaf { plan: self.plan, arcs: &self.arcs });
            self.arcs[m - 1].pop();
            if !keep {
                self.stopped = true;
            }
        }
        self.counts[class] -= 1;
    }
}
