//! Command-line driver: parse an expression, compile it to a tile system,
//! then emit, grow, decode and render as requested.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, ValueEnum};
use tileasm::render::{self, RenderStyle};
use tileasm::{compile, decode, frontend, grow, manifest, sim, xgrow, AddVariant};

pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COMPILE: i32 = 3;
pub const EXIT_SIMULATE: i32 = 4;
pub const EXIT_DECODE: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Eight,
    Six,
    L,
}

impl From<Variant> for AddVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Eight => AddVariant::EightTile,
            Variant::Six => AddVariant::SixTile,
            Variant::L => AddVariant::LType,
        }
    }
}

/// Compile arithmetic into tile assembly systems.
///
/// EXPR is one of `12+6+2+4`, `6-12+4-2 mod 3`, `5*4*3` or `prime 5`.
/// Words are joined with spaces, so quoting is optional. Put `--` before
/// an expression that starts with `-`.
#[derive(Debug, Parser)]
#[command(name = "tileasm", version)]
#[command(group(ArgGroup::new("action").required(true).multiple(true).args(["emit", "simulate"])))]
pub struct Cli {
    #[arg(required = true, value_name = "EXPR")]
    pub expr: Vec<String>,

    /// Addition construction.
    #[arg(long, value_enum, default_value = "eight")]
    pub variant: Variant,

    /// Write `<name>.tiles` into the output directory.
    #[arg(long)]
    pub emit: bool,

    /// Also write the internal `<name>.manifest`.
    #[arg(long, requires = "emit")]
    pub manifest: bool,

    /// Grow the system and print the decoded answer.
    #[arg(long)]
    pub simulate: bool,

    /// Draw the terminal assembly; `.ppm` gets an image, anything else text.
    #[arg(long, value_name = "PATH", requires = "simulate")]
    pub render: Option<PathBuf>,

    /// Only draw the bit columns.
    #[arg(long, requires = "render")]
    pub interior: bool,

    /// Write the attachment trace.
    #[arg(long, value_name = "PATH", requires = "simulate")]
    pub trace: Option<PathBuf>,

    /// Attachment budget; defaults to a bound derived from the system.
    #[arg(long, value_name = "N")]
    pub max_steps: Option<usize>,

    #[arg(long, value_name = "T", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub temperature: u32,

    #[arg(long, value_name = "DIR", env = "TILEASM_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,
}

fn write_file(path: &Path, bytes: &[u8], err: &mut dyn Write) -> Result<(), i32> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        if let Err(e) = fs::create_dir_all(parent) {
            let _ = writeln!(err, "error: {}: {e}", parent.display());
            return Err(EXIT_IO);
        }
    }
    fs::write(path, bytes).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", path.display());
        EXIT_IO
    })
}

/// Runs one request, writing reports to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out, err) {
        Ok(()) => 0,
        Err(code) => code,
    }
}

fn run_inner(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), i32> {
    let text = cli.expr.join(" ");
    let expr = frontend::parse(&text).map_err(|e| {
        let _ = writeln!(err, "parse error: {e}");
        EXIT_PARSE
    })?;
    let mut compiled = compile(&expr.to_compile_spec(cli.variant.into())).map_err(|e| {
        let _ = writeln!(err, "compile error: {e}");
        EXIT_COMPILE
    })?;
    compiled.system.temperature = cli.temperature;

    if cli.emit {
        let path = cli.out_dir.join(xgrow::tiles_file_name(&compiled.system));
        let (_, tiles) = xgrow::emit_tiles(&compiled.system);
        write_file(&path, tiles.as_bytes(), err)?;
        let _ = writeln!(out, "{}", path.display());
        if cli.manifest {
            let path = cli.out_dir.join(format!("{}.manifest", compiled.system.name));
            write_file(&path, manifest::write_manifest(&compiled.system).as_bytes(), err)?;
            let _ = writeln!(out, "{}", path.display());
        }
    }

    if cli.simulate {
        let budget = cli.max_steps.unwrap_or_else(|| compiled.default_max_steps());
        let report = grow(&compiled.system, budget).map_err(|e| {
            let _ = writeln!(err, "simulation error: {e}");
            EXIT_SIMULATE
        })?;
        if let Some(path) = &cli.trace {
            write_file(path, sim::write_trace(&report.trace).as_bytes(), err)?;
        }
        if let Some(path) = &cli.render {
            let style = match path.extension().and_then(|e| e.to_str()) {
                Some("ppm") => RenderStyle::Ppm { scale: 8 },
                _ => RenderStyle::Text,
            };
            let crop = cli.interior.then_some(1..=compiled.layout.width as i32);
            write_file(path, &render::render(&compiled.system, &report.terminal, style, &crop), err)?;
        }
        if !report.halted {
            let _ = writeln!(err, "simulation error: step budget of {budget} exhausted before a terminal assembly");
            return Err(EXIT_SIMULATE);
        }
        if !report.deterministic {
            let (pos, tiles) = &report.conflicts[0];
            let _ = writeln!(err, "simulation error: nondeterministic, tile types {tiles:?} compete at {pos}");
            return Err(EXIT_SIMULATE);
        }
        let decoded = decode(&compiled, &report.terminal).map_err(|e| {
            let _ = writeln!(err, "decode error: {e}");
            EXIT_DECODE
        })?;
        for line in decoded.lines() {
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(())
}
