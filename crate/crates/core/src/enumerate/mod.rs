//! Exhaustive search over properly leveled sh polygons.
//!
//! A polygon with `m` vertical sticks and one planar arc per level is
//! described by the cyclic order in which it visits the levels (the
//! w-pattern) and by the planar arcs. The search fixes the pattern, starts
//! the arc on the first visited level at the origin, and grows arcs stick by
//! stick with an occupancy grid per level. Points where a vertical stick
//! passes through a level are blocked on that level.
//!
//! Symmetry is reduced only at the root: the first stick is `+x` and the
//! second is `+-y`. Every leaf is canonicalized, so counts are exact.

mod engine;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::knot_id::{classify_with, Audit, ClassifyOptions, KnotTag};
use crate::lattice::{canonical_key, polygon_from_key, Direction, Lattice, LatticePoint, Polygon, Stick};

use engine::{Engine, Leaf, Plan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub total_sticks: usize,
    pub max_stick_len: i64,
    /// Vertical sticks as pairs of 1-based levels; `None` searches every
    /// cyclic visiting order of the levels.
    pub w_pattern: Option<Vec<(usize, usize)>>,
    /// Allowed `(nx, ny, nz)` planar stick counts; `None` leaves them free.
    pub planar_census: Option<Vec<[u8; 3]>>,
    pub level_heights: Vec<i64>,
    pub require_properly_leveled: bool,
    /// Exemplar words kept per knot type.
    pub exemplars: usize,
}

/// All orderings of the three counts.
pub fn permutations_of(triples: &[[u8; 3]]) -> Vec<[u8; 3]> {
    let mut set = BTreeSet::new();
    for t in triples {
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            set.insert([t[p[0]], t[p[1]], t[p[2]]]);
        }
    }
    set.into_iter().collect()
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            total_sticks: 11,
            max_stick_len: 3,
            w_pattern: Some(vec![(1, 3), (2, 3), (2, 4), (1, 4)]),
            planar_census: Some(permutations_of(&[[4, 2, 1], [3, 3, 1], [3, 2, 2]])),
            level_heights: vec![0, 1, 2, 3],
            require_properly_leveled: true,
            exemplars: 3,
        }
    }
}

impl SearchConfig {
    /// Same budget with every visiting order of the four levels.
    pub fn relaxed() -> Self {
        SearchConfig { w_pattern: None, ..SearchConfig::default() }
    }

    pub fn levels(&self) -> usize {
        self.level_heights.len()
    }

    /// Checks the configuration and expands it into visiting orders.
    fn plans(&self) -> Result<Vec<Plan>, ConfigError> {
        let m = self.levels();
        if !self.require_properly_leveled {
            return Err(ConfigError::UnleveledUnsupported);
        }
        if m < 2 {
            return Err(ConfigError::TooFewLevels);
        }
        if self.level_heights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConfigError::HeightsNotIncreasing);
        }
        if !(1..=31).contains(&self.max_stick_len) {
            return Err(ConfigError::StickLength);
        }
        if self.total_sticks > 16 || self.total_sticks < 2 * m {
            return Err(ConfigError::StickTotal);
        }
        let planar = self.total_sticks - m;
        if let Some(census) = &self.planar_census {
            if census.iter().any(|t| t.iter().map(|&c| c as usize).sum::<usize>() != planar) {
                return Err(ConfigError::CensusSum);
            }
        }
        let orders = match &self.w_pattern {
            Some(pairs) => {
                if pairs.len() != m {
                    return Err(ConfigError::StickTotal);
                }
                vec![cycle_order(pairs, m).ok_or(ConfigError::PatternNotACycle)?]
            }
            None => all_cycles(m),
        };
        Ok(orders
            .into_iter()
            .map(|order| Plan {
                order,
                heights: self.level_heights.clone(),
                planar,
                lmax: self.max_stick_len,
                census: self.planar_census.clone(),
            })
            .collect())
    }
}

/// Level visiting order (0-based) of a pattern, starting at level 1 and
/// following the pairs in list order. `None` unless the pairs form one cycle
/// through every level.
fn cycle_order(pairs: &[(usize, usize)], m: usize) -> Option<Vec<usize>> {
    if pairs.iter().any(|&(a, b)| a == b || a == 0 || b == 0 || a > m || b > m) {
        return None;
    }
    let mut used = vec![false; pairs.len()];
    let mut order = vec![0usize];
    let mut at = 1usize;
    for _ in 0..m {
        let k = (0..pairs.len()).find(|&k| !used[k] && (pairs[k].0 == at || pairs[k].1 == at))?;
        used[k] = true;
        at = if pairs[k].0 == at { pairs[k].1 } else { pairs[k].0 };
        order.push(at - 1);
    }
    if order.pop() != Some(0) {
        return None;
    }
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    (distinct.len() == m).then_some(order)
}

/// Every cyclic visiting order of `m` levels, up to reversal, starting at
/// level 0.
fn all_cycles(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            // keep one of each reversed pair
            if m <= 2 || cur[1] < cur[m - 1] {
                out.push(cur.clone());
            }
            return;
        }
        for l in 1..m {
            if !used[l] {
                used[l] = true;
                cur.push(l);
                rec(m, cur, used, out);
                cur.pop();
                used[l] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; m];
    used[0] = true;
    rec(m, &mut vec![0], &mut used, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigError {
    UnleveledUnsupported,
    TooFewLevels,
    HeightsNotIncreasing,
    StickLength,
    StickTotal,
    CensusSum,
    PatternNotACycle,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConfigError::UnleveledUnsupported => "only properly leveled searches are supported",
            ConfigError::TooFewLevels => "at least two levels are needed",
            ConfigError::HeightsNotIncreasing => "level heights must be strictly increasing",
            ConfigError::StickLength => "maximum stick length must be between 1 and 31",
            ConfigError::StickTotal => "stick total must be at most 16 and leave one planar stick per level",
            ConfigError::CensusSum => "planar census triples must sum to the planar stick count",
            ConfigError::PatternNotACycle => "w-pattern must visit every level once in one cycle",
        };
        f.write_str(s)
    }
}

impl core::error::Error for ConfigError {}

/// Result of a search: canonical classes by knot type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub config: SearchConfig,
    classes: BTreeMap<u128, KnotTag>,
    pub explored: u64,
    pub pruned: u64,
}

impl Census {
    fn empty(config: SearchConfig) -> Census {
        Census { config, classes: BTreeMap::new(), explored: 0, pruned: 0 }
    }

    /// Number of canonical classes per type, every type listed.
    pub fn counts(&self) -> BTreeMap<KnotTag, u64> {
        let mut out: BTreeMap<KnotTag, u64> = KnotTag::ALL.iter().map(|&t| (t, 0)).collect();
        for t in self.classes.values() {
            *out.get_mut(t).unwrap() += 1;
        }
        out
    }

    /// Up to `config.exemplars` canonical words per type, smallest first.
    pub fn exemplars(&self) -> BTreeMap<KnotTag, Vec<Polygon>> {
        let mut out: BTreeMap<KnotTag, Vec<Polygon>> = BTreeMap::new();
        for (&k, &t) in &self.classes {
            let v = out.entry(t).or_default();
            if v.len() < self.config.exemplars {
                v.push(polygon_from_key(Lattice::Sh, k));
            }
        }
        out
    }

    /// Classes per type and planar stick census `(nx, ny, nz)`.
    pub fn counts_by_census(&self) -> BTreeMap<(KnotTag, [i64; 3]), u64> {
        let mut out = BTreeMap::new();
        for (p, t) in self.classes() {
            let c = p.stick_census().expect("search words are maximal");
            *out.entry((t, [c.x, c.y, c.z])).or_insert(0) += 1;
        }
        out
    }

    /// Knot types met, excluding the unknot.
    pub fn nontrivial_types(&self) -> BTreeSet<KnotTag> {
        self.classes.values().copied().filter(|t| t.is_nontrivial()).collect()
    }

    /// Longest stick over all nontrivial classes.
    pub fn max_stick_len_nontrivial(&self) -> Option<i64> {
        self.classes
            .iter()
            .filter(|(_, t)| t.is_nontrivial())
            .flat_map(|(&k, _)| polygon_from_key(Lattice::Sh, k).into_sticks())
            .map(|s| s.len.abs())
            .max()
    }

    /// Every class with its type, in canonical order.
    pub fn classes(&self) -> impl Iterator<Item = (Polygon, KnotTag)> + '_ {
        self.classes.iter().map(|(&k, &t)| (polygon_from_key(Lattice::Sh, k), t))
    }

    pub fn total(&self) -> usize {
        self.classes.len()
    }

    /// Union of two shard results of the same configuration.
    pub fn merge(mut self, other: Census) -> Census {
        for (k, t) in other.classes {
            self.classes.insert(k, t);
        }
        self.explored += other.explored;
        self.pruned += other.pruned;
        self
    }
}

/// One part of a sharded search: first arcs whose index in DFS order is
/// `index` modulo `count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shard {
    pub config: SearchConfig,
    pub index: usize,
    pub count: usize,
}

pub fn shard(cfg: &SearchConfig, n_shards: usize) -> Vec<Shard> {
    let count = n_shards.max(1);
    (0..count).map(|index| Shard { config: cfg.clone(), index, count }).collect()
}

fn classify_leaf(p: &Polygon, audit: Audit) -> KnotTag {
    classify_with(p, ClassifyOptions { audit, trusted: true }).map(|k| k.tag).unwrap_or(KnotTag::Unknown)
}

pub fn run_shard(s: &Shard) -> Result<Census, ConfigError> {
    let plans = s.config.plans()?;
    let mut census = Census::empty(s.config.clone());
    for plan in &plans {
        let mut classes = core::mem::take(&mut census.classes);
        let mut on_leaf = |leaf: &Leaf| {
            let p = leaf.polygon();
            let key = canonical_key(&p).expect("search words fit the key");
            classes.entry(key).or_insert_with(|| classify_leaf(&p, Audit::Sampled));
            true
        };
        let mut engine = Engine::new(plan, (s.index, s.count), u64::MAX);
        engine.run(&mut on_leaf);
        census.classes = classes;
        census.explored += engine.explored;
        census.pruned += engine.pruned;
    }
    Ok(census)
}

/// Full search in one pass.
pub fn search(cfg: &SearchConfig) -> Result<Census, ConfigError> {
    run_shard(&Shard { config: cfg.clone(), index: 0, count: 1 })
}

/// Targeted search for one knot type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSearch {
    pub target: KnotTag,
    pub total_sticks: usize,
    pub max_stick_len: i64,
    /// Node budget shared by every pattern tried.
    pub budget: u64,
    /// Numbers of vertical sticks to try, in order.
    pub w_sticks: Vec<usize>,
    /// Fixes the level order (and the number of vertical sticks).
    pub w_pattern: Option<Vec<(usize, usize)>>,
    pub planar_census: Option<Vec<[u8; 3]>>,
}

impl TypeSearch {
    pub fn new(target: KnotTag, total_sticks: usize, max_stick_len: i64, budget: u64) -> Self {
        TypeSearch {
            target,
            total_sticks,
            max_stick_len,
            budget,
            w_sticks: (2..=total_sticks / 2).collect(),
            w_pattern: None,
            planar_census: None,
        }
    }

    /// Restricted to the level order and planar censuses of `cfg`.
    pub fn within(target: KnotTag, cfg: &SearchConfig, budget: u64) -> Self {
        TypeSearch {
            target,
            total_sticks: cfg.total_sticks,
            max_stick_len: cfg.max_stick_len,
            budget,
            w_sticks: vec![cfg.levels()],
            w_pattern: cfg.w_pattern.clone(),
            planar_census: cfg.planar_census.clone(),
        }
    }

    fn plans(&self) -> Vec<Plan> {
        let mut out = Vec::new();
        for &m in &self.w_sticks {
            if self.total_sticks < 2 * m || m < 2 || self.total_sticks > 16 {
                continue;
            }
            let orders = match &self.w_pattern {
                Some(pairs) if pairs.len() == m => cycle_order(pairs, m).into_iter().collect(),
                Some(_) => Vec::new(),
                None => all_cycles(m),
            };
            for order in orders {
                out.push(Plan {
                    order,
                    heights: (0..m as i64).collect(),
                    planar: self.total_sticks - m,
                    lmax: self.max_stick_len,
                    census: self.planar_census.clone(),
                });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSearchResult {
    pub found: Option<Polygon>,
    pub explored: u64,
    pub exhausted: bool,
}

/// First polygon of the target type in search order, within the budget.
/// Planar stick counts are unconstrained and every level order is tried.
pub fn search_for_type(target: KnotTag, total_sticks: usize, max_stick_len: i64, budget: u64) -> Option<Polygon> {
    run_type_search(&TypeSearch::new(target, total_sticks, max_stick_len, budget)).found
}

pub fn run_type_search(ts: &TypeSearch) -> TypeSearchResult {
    let mut explored = 0u64;
    let mut seen: BTreeSet<u128> = BTreeSet::new();
    for plan in ts.plans() {
        let mut found = None;
        let mut on_leaf = |leaf: &Leaf| {
            let p = leaf.polygon();
            let key = canonical_key(&p).expect("search words fit the key");
            if !seen.insert(key) {
                return true;
            }
            if classify_leaf(&p, Audit::DoubtfulOnly) == ts.target {
                found = Some(polygon_from_key(Lattice::Sh, key));
                return false;
            }
            true
        };
        let mut engine = Engine::new(&plan, (0, 1), ts.budget - explored);
        engine.run(&mut on_leaf);
        explored += engine.explored;
        if found.is_some() {
            return TypeSearchResult { found, explored, exhausted: false };
        }
        if explored >= ts.budget {
            return TypeSearchResult { found: None, explored, exhausted: false };
        }
    }
    TypeSearchResult { found: None, explored, exhausted: true }
}

/// Word of a leaf, for callers that only need the sticks.
pub(crate) fn leaf_word(order: &[usize], heights: &[i64], arcs: &[&[Stick]]) -> Vec<Stick> {
    let m = order.len();
    let mut out = Vec::new();
    for i in 0..m {
        out.extend_from_slice(arcs[i]);
        let dh = heights[order[(i + 1) % m]] - heights[order[i]];
        out.push(Stick::new(Direction::W, dh));
    }
    out
}

pub(crate) fn leaf_polygon(order: &[usize], heights: &[i64], word: Vec<Stick>) -> Polygon {
    let base = LatticePoint::new(0, 0, heights[order[0]]);
    Polygon::new(Lattice::Sh, word).expect("search emits nonzero sticks").with_base(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_pattern_order() {
        let cfg = SearchConfig::default();
        let plans = cfg.plans().unwrap();
        assert_eq!(plans.len(), 1);
        assert_eq!(plans[0].order, [0, 2, 1, 3]);
        assert_eq!(cfg.planar_census.as_ref().unwrap().len(), 12);
    }

    #[test]
    fn cycles_on_four_levels() {
        let c = all_cycles(4);
        assert_eq!(c.len(), 3);
        assert_eq!(all_cycles(5).len(), 12);
        assert_eq!(all_cycles(2), [vec![0, 1]]);
        assert!(cycle_order(&[(1, 2), (3, 4), (1, 3), (2, 4)], 4).is_some());
        assert!(cycle_order(&[(1, 2), (1, 2), (3, 4), (3, 4)], 4).is_none());
    }

    #[test]
    fn config_errors() {
        let mut cfg = SearchConfig::default();
        cfg.total_sticks = 12;
        assert_eq!(cfg.plans().unwrap_err(), ConfigError::CensusSum);
        let mut cfg = SearchConfig::default();
        cfg.level_heights = vec![0, 2, 1, 3];
        assert_eq!(cfg.plans().unwrap_err(), ConfigError::HeightsNotIncreasing);
        let mut cfg = SearchConfig::default();
        cfg.w_pattern = Some(vec![(1, 2), (2, 1), (3, 4), (4, 3)]);
        assert_eq!(cfg.plans().unwrap_err(), ConfigError::PatternNotACycle);
    }
}
