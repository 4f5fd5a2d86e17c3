use std::fs;
use std::path::PathBuf;
use std::thread;
use std::time::Instant;

use clap::Args;
use serde_json::{json, Value};

use shknot_core::enumerate::{permutations_of, run_shard, shard, Census, SearchConfig};
use shknot_core::knot_id::KnotTag;
use shknot_core::lattice::emit_knotw;

use crate::{CmdResult, Io, EXIT_ERROR, EXIT_OK};

#[derive(Args, Debug, Clone)]
pub struct CensusArgs {
    #[arg(long, default_value_t = 11)]
    pub sticks: usize,
    #[arg(long = "max-len", default_value_t = 3)]
    pub max_len: i64,
    /// Vertical sticks as level pairs, e.g. `1-3,2-3,2-4,1-4`.
    #[arg(long, conflicts_with = "any_pattern")]
    pub pattern: Option<String>,
    /// Search every cyclic visiting order of the levels.
    #[arg(long = "any-pattern")]
    pub any_pattern: bool,
    /// Planar stick counts `nx:ny:nz`, each expanded to all orderings.
    #[arg(long, value_delimiter = ',', conflicts_with = "any_census")]
    pub census: Vec<String>,
    #[arg(long = "any-census")]
    pub any_census: bool,
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
    #[arg(long, default_value_t = 3)]
    pub exemplars: usize,
    #[arg(long, default_value_t = 1)]
    pub shards: usize,
    /// Directory for census.json and exemplar files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exit 1 unless every nontrivial type found is 3_1 or 4_1.
    #[arg(long = "expect-theorem")]
    pub expect_theorem: bool,
}

fn parse_pattern(s: &str) -> Result<Vec<(usize, usize)>, String> {
    s.split(',')
        .map(|pair| {
            let (a, b) = pair.split_once('-').ok_or_else(|| format!("bad level pair {pair:?}"))?;
            let a = a.trim().parse().map_err(|_| format!("bad level {a:?}"))?;
            let b = b.trim().parse().map_err(|_| format!("bad level {b:?}"))?;
            Ok((a, b))
        })
        .collect()
}

fn parse_triple(s: &str) -> Result<[u8; 3], String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("bad census {s:?}, expected nx:ny:nz"));
    }
    let mut t = [0u8; 3];
    for (slot, p) in t.iter_mut().zip(parts) {
        *slot = p.trim().parse().map_err(|_| format!("bad count {p:?}"))?;
    }
    Ok(t)
}

impl CensusArgs {
    pub fn config(&self) -> Result<SearchConfig, String> {
        let mut cfg = SearchConfig::default();
        cfg.total_sticks = self.sticks;
        cfg.max_stick_len = self.max_len;
        cfg.exemplars = self.exemplars;
        cfg.level_heights = (0..self.levels as i64).collect();
        cfg.w_pattern = if self.any_pattern {
            None
        } else if let Some(p) = &self.pattern {
            Some(parse_pattern(p)?)
        } else if self.levels == 4 {
            cfg.w_pattern
        } else {
            None
        };
        cfg.planar_census = if self.any_census {
            None
        } else if !self.census.is_empty() {
            let ts = self.census.iter().map(|s| parse_triple(s)).collect::<Result<Vec<_>, _>>()?;
            Some(permutations_of(&ts))
        } else if self.sticks == 11 && self.levels == 4 {
            cfg.planar_census
        } else {
            None
        };
        Ok(cfg)
    }
}

fn config_json(cfg: &SearchConfig) -> Value {
    json!({
        "total_sticks": cfg.total_sticks,
        "max_stick_len": cfg.max_stick_len,
        "w_pattern": cfg.w_pattern,
        "planar_census": cfg.planar_census,
        "level_heights": cfg.level_heights,
        "require_properly_leveled": cfg.require_properly_leveled,
        "exemplars": cfg.exemplars,
    })
}

/// The census document. Only the `timing` member depends on the run.
pub fn census_json(c: &Census, seconds: Option<f64>) -> Value {
    let counts: serde_json::Map<String, Value> =
        c.counts().into_iter().map(|(t, n)| (t.name().to_string(), json!(n))).collect();
    let by_census: Vec<Value> = c
        .counts_by_census()
        .into_iter()
        .map(|((t, s), n)| json!({ "type": t.name(), "census": s, "count": n }))
        .collect();
    let exemplars: serde_json::Map<String, Value> = c
        .exemplars()
        .into_iter()
        .map(|(t, ps)| (t.name().to_string(), json!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>())))
        .collect();
    let nontrivial: Vec<&str> = c.nontrivial_types().into_iter().map(|t| t.name()).collect();
    let mut v = json!({
        "config": config_json(&c.config),
        "classes": c.total(),
        "counts": counts,
        "by_census": by_census,
        "nontrivial_types": nontrivial,
        "max_stick_len_nontrivial": c.max_stick_len_nontrivial(),
        "explored": c.explored,
        "pruned": c.pruned,
        "exemplars": exemplars,
    });
    if let Some(s) = seconds {
        v["timing"] = json!({ "seconds": s });
    }
    v
}

/// Runs the shards on one thread each and merges in shard order.
pub fn run_sharded(cfg: &SearchConfig, n: usize) -> Result<Census, String> {
    let shards = shard(cfg, n);
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = shards.iter().map(|sh| s.spawn(move || run_shard(sh))).collect();
        handles.into_iter().map(|h| h.join().expect("shard worker panicked")).collect()
    });
    let mut merged: Option<Census> = None;
    for r in results {
        let c = r.map_err(|e| e.to_string())?;
        merged = Some(match merged {
            None => c,
            Some(m) => m.merge(c),
        });
    }
    Ok(merged.expect("at least one shard"))
}

pub(crate) fn cmd_enumerate(args: &CensusArgs, io: &mut Io) -> CmdResult {
    let cfg = args.config()?;
    let start = Instant::now();
    let census = run_sharded(&cfg, args.shards)?;
    let seconds = start.elapsed().as_secs_f64();
    let doc = census_json(&census, Some(seconds));
    let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n";
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            fs::write(dir.join("census.json"), &text).map_err(|e| e.to_string())?;
            for (t, ps) in census.exemplars() {
                for (i, p) in ps.iter().enumerate() {
                    let name = format!("{}_{}.knotw", t.name(), i + 1);
                    fs::write(dir.join(name), emit_knotw(p)).map_err(|e| e.to_string())?;
                }
            }
        }
        None => io.out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    let counts = census.counts();
    let summary: Vec<String> = counts.iter().filter(|(_, &n)| n > 0).map(|(t, n)| format!("{t} {n}")).collect();
    writeln!(io.err, "{} classes ({}) in {:.1}s", census.total(), summary.join(", "), seconds)
        .map_err(|e| e.to_string())?;
    if args.expect_theorem {
        let allowed = [KnotTag::K3_1, KnotTag::K4_1];
        if census.nontrivial_types().iter().any(|t| !allowed.contains(t)) {
            writeln!(io.err, "nontrivial types outside 3_1 and 4_1").map_err(|e| e.to_string())?;
            return Ok(EXIT_ERROR);
        }
    }
    Ok(EXIT_OK)
}
