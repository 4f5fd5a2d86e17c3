use std::fs::File;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use shknot_core::lattice::{Direction, Polygon};
use shknot_core::moves::{
    all_r_moves, corner_to_z, find_reducible_corner, squeeze_and_reduce, unit_corner_bevel, z_replace, MoveError,
    MoveOutcome,
};

use crate::{load_valid, write_polygon, CmdResult, Io, EXIT_NO_MOVE, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MoveKind {
    Corner,
    Bevel,
    Rmove,
    Zreplace,
    Squeeze,
}

/// One line of the move trace.
#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct TraceLine {
    pub step: usize,
    #[serde(rename = "move")]
    pub tag: &'static str,
    pub site: usize,
    pub sticks_delta: i64,
    pub edges_delta: i64,
    pub sticks: usize,
    pub edges: i64,
    pub lattice: &'static str,
    pub word: String,
}

/// One application, or `None` when the move does not apply anywhere.
fn step(p: &Polygon, kind: MoveKind, all: bool) -> Result<Option<MoveOutcome>, String> {
    let r = match kind {
        MoveKind::Corner => match find_reducible_corner(p) {
            Some(site) => corner_to_z(p, site).map(Some),
            None => Ok(None),
        },
        MoveKind::Bevel => unit_corner_bevel(p).map(Some),
        MoveKind::Rmove => {
            let mut moves = all_r_moves(p);
            if all {
                // shrinking moves only
                moves.retain(|m| m.sticks_delta < 0);
            }
            moves.sort_by_key(|m| (m.sticks_delta, m.site));
            Ok(moves.into_iter().next())
        }
        MoveKind::Zreplace => match p.sticks().iter().position(|s| s.dir == Direction::Z) {
            Some(i) => z_replace(p, i).map(Some),
            None => Ok(None),
        },
        MoveKind::Squeeze => squeeze_and_reduce(p).map(|r| Some(r.outcome)),
    };
    match r {
        Ok(o) => Ok(o),
        Err(
            MoveError::NoXYCorner
            | MoveError::ObstructedTriangle
            | MoveError::CornerSelectionFailed
            | MoveError::PCaseUnresolvable
            | MoveError::OtherZInSquare,
        ) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

pub(crate) fn cmd_reduce(
    path: &Path,
    kind: MoveKind,
    all: bool,
    out: Option<&Path>,
    trace: Option<&Path>,
    io: &mut Io,
) -> CmdResult {
    let mut p = load_valid(path)?;
    let mut lines = Vec::new();
    loop {
        let Some(o) = step(&p, kind, all)? else { break };
        p = o.polygon;
        lines.push(TraceLine {
            step: lines.len() + 1,
            tag: o.tag.name(),
            site: o.site,
            sticks_delta: o.sticks_delta,
            edges_delta: o.edges_delta,
            sticks: p.len(),
            edges: p.edge_length(),
            lattice: p.lattice().name(),
            word: p.to_string(),
        });
        if !all || kind == MoveKind::Squeeze {
            break;
        }
    }
    let mut text = String::new();
    for l in &lines {
        text.push_str(&serde_json::to_string(l).map_err(|e| e.to_string())?);
        text.push('\n');
    }
    match trace {
        Some(t) => File::create(t).and_then(|mut f| f.write_all(text.as_bytes())).map_err(|e| e.to_string())?,
        None => io.err.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    if lines.is_empty() {
        writeln!(io.err, "no applicable move").map_err(|e| e.to_string())?;
        return Ok(EXIT_NO_MOVE);
    }
    write_polygon(&p, out, io)?;
    Ok(EXIT_OK)
}
