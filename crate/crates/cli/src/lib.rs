//! Command-line front end for `shknot-core`.
//!
//! Every subcommand writes to the given streams and returns its exit code:
//! 0 on success, 1 on error, 2 when a reduction found no applicable move.

mod census;
mod reduce;
mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shknot_core::catalog;
use shknot_core::knot_id::classify;
use shknot_core::lattice::{emit_knotw, is_properly_leveled, parse_knotw, validate, w_levels, Lattice, Polygon};
use shknot_core::transform::{apply_t, apply_t_inv, edge_lower_bound, sh_to_cubic_rewrite, stick_lower_bound};

pub use census::{census_json, CensusArgs};
pub use reduce::{MoveKind, TraceLine};
pub use render::{render_svg, Plane};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO_MOVE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "shknot", version, about = "Lattice knot conformations on the cubic and simple hexagonal lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report sticks, edges, levels and knot type of a .knotw file.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Map between the cubic and sh lattices.
    Transform {
        path: PathBuf,
        #[arg(long)]
        to: Target,
        /// Allow z-sticks by rewriting edges (sh to cubic only).
        #[arg(long)]
        rewrite: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Apply a knot-type preserving move.
    Reduce {
        path: PathBuf,
        #[arg(long = "move", value_enum)]
        kind: MoveKind,
        /// Repeat until no move applies.
        #[arg(long)]
        all: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Move trace as JSON lines; defaults to stderr.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustive census of leveled sh polygons.
    Enumerate(CensusArgs),
    /// Lower bounds for sh stick and edge numbers from cubic ones.
    Bounds {
        #[arg(long = "s-cubic", conflicts_with = "e_cubic", required_unless_present = "e_cubic")]
        s_cubic: Option<i64>,
        #[arg(long = "e-cubic")]
        e_cubic: Option<i64>,
    },
    /// Draw a polygon as SVG.
    Render {
        path: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "xy")]
        plane: Plane,
    },
    /// List, check or print the built-in reference conformations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    /// Reclassify every entry; exit 1 on any mismatch.
    Check,
    Show {
        name: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Sh,
    Cubic,
}

pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, io: &mut Io) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, io),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = write!(if e.use_stderr() { &mut *io.err } else { &mut *io.out }, "{}", e.render());
            code
        }
    }
}

pub fn run(cli: Cli, io: &mut Io) -> i32 {
    let result = match cli.command {
        Command::Classify { path, json } => cmd_classify(&path, json, io),
        Command::Transform { path, to, rewrite, out } => cmd_transform(&path, to, rewrite, out.as_deref(), io),
        Command::Reduce { path, kind, all, out, trace } => {
            reduce::cmd_reduce(&path, kind, all, out.as_deref(), trace.as_deref(), io)
        }
        Command::Enumerate(args) => census::cmd_enumerate(&args, io),
        Command::Bounds { s_cubic, e_cubic } => cmd_bounds(s_cubic, e_cubic, io),
        Command::Render { path, out, plane } => cmd_render(&path, &out, plane, io),
        Command::Catalog { action } => cmd_catalog(action, io),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

pub(crate) type CmdResult = Result<i32, String>;

pub(crate) fn load(path: &Path) -> Result<Polygon, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_knotw(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub(crate) fn load_valid(path: &Path) -> Result<Polygon, String> {
    let p = load(path)?;
    let report = validate(&p);
    if !report.is_valid() {
        return Err(format!("{}: {}", path.display(), report));
    }
    Ok(p)
}

pub(crate) fn write_polygon(p: &Polygon, out: Option<&Path>, io: &mut Io) -> Result<(), String> {
    let text = emit_knotw(p);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io.out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn w(io: &mut Io, line: impl AsRef<str>) -> Result<(), String> {
    writeln!(io.out, "{}", line.as_ref()).map_err(|e| e.to_string())
}

fn cmd_classify(path: &Path, as_json: bool, io: &mut Io) -> CmdResult {
    let p = load_valid(path)?;
    let k = classify(&p).map_err(|e| e.to_string())?;
    let c = p.stick_census().map_err(|_| "polygon is not maximal".to_string())?;
    let levels = w_levels(&p);
    let proper = is_properly_leveled(&p);
    if as_json {
        let v = json!({
            "lattice": p.lattice().name(),
            "word": p.to_string(),
            "sticks": p.len(),
            "census": { "x": c.x, "y": c.y, "z": c.z, "w": c.w },
            "edges": p.edge_length(),
            "w_levels": levels,
            "properly_leveled": proper,
            "determinant": k.determinant,
            "alexander": k.alexander.coeffs(),
            "alexander_low": k.alexander.min_exp(),
            "type": k.tag.name(),
            "crossings": k.crossings,
            "caveat": k.caveat.map(|c| c.name()),
        });
        w(io, serde_json::to_string_pretty(&v).map_err(|e| e.to_string())?)?;
        return Ok(EXIT_OK);
    }
    w(io, format!("{}, {} sticks, {} edges, det {}", k.tag, p.len(), p.edge_length(), k.determinant))?;
    w(io, format!("lattice: {}", p.lattice()))?;
    w(io, format!("sticks: {c}"))?;
    let levels: Vec<String> = levels.iter().map(|l| l.to_string()).collect();
    w(io, format!("w-levels: {}", levels.join(" ")))?;
    w(io, format!("properly leveled: {}", if proper { "yes" } else { "no" }))?;
    w(io, format!("alexander: {}", k.alexander.display_in("t")))?;
    if let Some(c) = k.caveat {
        w(io, format!("caveat: {}", c.name()))?;
    }
    Ok(EXIT_OK)
}

fn cmd_transform(path: &Path, to: Target, rewrite: bool, out: Option<&Path>, io: &mut Io) -> CmdResult {
    let p = load_valid(path)?;
    let q = match (p.lattice(), to) {
        (Lattice::Cubic, Target::Sh) => apply_t(&p).map_err(|e| e.to_string())?,
        (Lattice::Sh, Target::Cubic) if rewrite => sh_to_cubic_rewrite(&p).map_err(|e| e.to_string())?,
        (Lattice::Sh, Target::Cubic) => apply_t_inv(&p).map_err(|e| e.to_string())?,
        (l, _) => return Err(format!("polygon is already on the {l} lattice")),
    };
    write_polygon(&q, out, io)?;
    writeln!(
        io.err,
        "{} -> {}: sticks {} -> {}, edges {} -> {}",
        p.lattice(),
        q.lattice(),
        p.len(),
        q.len(),
        p.edge_length(),
        q.edge_length()
    )
    .map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn cmd_bounds(s_cubic: Option<i64>, e_cubic: Option<i64>, io: &mut Io) -> CmdResult {
    if let Some(e) = e_cubic {
        if e < 1 {
            return Err("edge number must be positive".into());
        }
        let r = edge_lower_bound(e);
        w(io, format!("e_sh ≥ {} → {}", r.bound_value, r.ceil_bound))?;
    }
    if let Some(s) = s_cubic {
        let r = stick_lower_bound(s).map_err(|e| e.to_string())?;
        w(io, format!("s_sh ≥ {} → {}", r.bound_value, r.ceil_bound))?;
    }
    Ok(EXIT_OK)
}

fn cmd_render(path: &Path, out: &Path, plane: Plane, io: &mut Io) -> CmdResult {
    let p = load_valid(path)?;
    let svg = render_svg(&p, plane).map_err(|e| e.to_string())?;
    fs::write(out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
    w(io, format!("wrote {}", out.display()))?;
    Ok(EXIT_OK)
}

fn cmd_catalog(action: CatalogAction, io: &mut Io) -> CmdResult {
    match action {
        CatalogAction::List => {
            for e in catalog::entries() {
                let p = e.polygon();
                w(
                    io,
                    format!(
                        "{:<20} {:<6} {:<8} {:>2} sticks  {}",
                        e.name,
                        e.lattice,
                        e.expected,
                        p.len(),
                        e.provenance
                    ),
                )?;
            }
            Ok(EXIT_OK)
        }
        CatalogAction::Check => {
            let mut bad = 0;
            for e in catalog::entries() {
                let got = classify(&e.polygon()).map(|k| k.tag);
                let ok = got == Ok(e.expected);
                if !ok {
                    bad += 1;
                }
                let got = got.map(|t| t.to_string()).unwrap_or_else(|e| e.to_string());
                w(
                    io,
                    format!("{} {}: expected {}, got {}", if ok { "ok  " } else { "FAIL" }, e.name, e.expected, got),
                )?;
            }
            Ok(if bad == 0 { EXIT_OK } else { EXIT_ERROR })
        }
        CatalogAction::Show { name } => {
            let e = catalog::get(&name).ok_or_else(|| format!("no catalog entry named {name}"))?;
            io.out.write_all(e.text.as_bytes()).map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
    }
}
