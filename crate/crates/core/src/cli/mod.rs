//! The `fibcfg` command line: characters, identity checks, Durfee
//! classification and SVG figures.

mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::identities::{self, IdentityReport, Params, SuiteConfig};
use crate::partitions::{durfee_classify, DurfeeKind, Partition};
use crate::qseries::{LaurentPoly, QSeries, ZWindow};
use crate::{fibfinite, fibinfinite, voachar};

pub use render::{family_caption, render_durfee, render_family};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fibcfg", version, about = "Fibonacci configuration characters and Durfee rectangle identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a character.
    #[command(subcommand)]
    Char(CharCmd),
    /// Check identities by coefficient comparison; one report per line.
    Verify(VerifyArgs),
    /// Classify partitions by shifted Durfee rectangles.
    #[command(subcommand)]
    Durfee(DurfeeCmd),
    /// Draw Durfee dissections as SVG.
    #[command(subcommand)]
    Render(RenderCmd),
    /// List catalog identities, their parameters and exponent sites.
    Catalog,
}

#[derive(Args, Debug, Clone, Copy)]
struct OrderArg {
    /// Truncation order D: coefficients up to q^D.
    #[arg(long, env = "FIBCFG_ORDER", default_value_t = 20, allow_hyphen_values = true)]
    order: u32,
}

#[derive(Args, Debug, Clone, Copy)]
struct WindowArgs {
    #[arg(long, allow_hyphen_values = true)]
    zmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    zmax: Option<i64>,
}

impl WindowArgs {
    fn window(&self, default: ZWindow) -> Result<ZWindow, Error> {
        ZWindow::new(self.zmin.unwrap_or(default.min), self.zmax.unwrap_or(default.max))
    }
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    /// Finite character chi_n^l.
    Fib {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
    /// Character of the infinite configurations of type (theta, l).
    Inf {
        #[arg(long)]
        theta: i64,
        #[arg(long)]
        l: i64,
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        json: bool,
    },
    /// Character of the lattice module (i, N).
    Voa {
        #[arg(long)]
        i: i64,
        #[arg(long = "N", alias = "n")]
        n: i64,
        #[command(flatten)]
        order: OrderArg,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Catalog identity id, or `all`.
    id: String,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[command(flatten)]
    order: OrderArg,
    #[command(flatten)]
    window: WindowArgs,
    /// Largest l (and theta) in the default grids.
    #[arg(long, default_value_t = 3)]
    l_max: i64,
    /// Largest |s| in the default grids.
    #[arg(long, default_value_t = 3)]
    s_max: i64,
    /// Largest n and m in the default grids.
    #[arg(long, default_value_t = 3)]
    nm_max: i64,
    /// Partition census bound for the Durfee checks.
    #[arg(long, default_value_t = 28)]
    census_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report zero elapsed time, for reproducible output.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum DurfeeCmd {
    Classify(ShapeArgs),
}

#[derive(Args, Debug)]
struct ShapeArgs {
    /// Parts such as `4,3,1`; empty for the empty partition.
    #[arg(long, default_value = "")]
    parts: String,
    #[arg(long)]
    l: i64,
    #[arg(long, default_value_t = 0)]
    n: i64,
    #[arg(long, default_value_t = 0)]
    m: i64,
}

#[derive(Subcommand, Debug)]
enum RenderCmd {
    /// A partition with its Durfee and enveloping rectangles.
    Durfee {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// The nested rectangles of classes k = 0..=kmax.
    Family {
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 0)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        m: i64,
        #[arg(long, default_value_t = 2)]
        kmax: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Series as `[zExp, qExp, coeff]` triples.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SeriesJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    q_offset: Option<String>,
    order: Option<u32>,
    z_window: Option<[i64; 2]>,
    terms: Vec<(i64, i64, String)>,
}

impl SeriesJson {
    fn series(s: &QSeries) -> Self {
        let w = s.window();
        SeriesJson {
            q_offset: None,
            order: Some(s.order()),
            z_window: Some([w.min, w.max]),
            terms: s.terms().map(|(z, q, c)| (z, q as i64, c.to_string())).collect(),
        }
    }

    fn poly(p: &LaurentPoly) -> Self {
        SeriesJson { q_offset: None, order: None, z_window: None, terms: p.terms().map(|(z, q, c)| (z, q, c.to_string())).collect() }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_char(cmd: CharCmd, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match cmd {
        CharCmd::Fib { n, l, json: as_json } => {
            let p = fibfinite::char_closed(n, l);
            if as_json {
                json(&SeriesJson::poly(&p))
            } else {
                p.to_string()
            }
        }
        CharCmd::Inf { theta, l, order, window, json: as_json } => {
            fibinfinite::check_type(theta, l)?;
            let w = window.window(fibinfinite::natural_window(theta, l, order.order))?;
            let s = fibinfinite::char_closed(theta, l, order.order, w)?;
            if as_json {
                json(&SeriesJson::series(&s))
            } else {
                s.to_string()
            }
        }
        CharCmd::Voa { i, n, order, window, json: as_json } => {
            voachar::q_offset(i, n)?;
            let w = window.window(fibinfinite::natural_window(i, n - 1, order.order))?;
            let v = voachar::voa_char(i, n, order.order, w)?;
            if as_json {
                let mut j = SeriesJson::series(&v.body);
                j.q_offset = Some(v.q_offset.to_string());
                json(&j)
            } else {
                format!("q^({})\n{}", v.q_offset, v.body)
            }
        }
    };
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn report_text(r: &IdentityReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let head = format!(
        "{} {}{}{} order={}",
        if r.matched { "PASS" } else { "FAIL" },
        r.identity_id,
        if params.is_empty() { "" } else { " " },
        params.join(" "),
        r.order
    );
    match &r.first_mismatch {
        None => head,
        Some(m) => format!(
            "{head}: first mismatch at z^{} q^{}: lhs {} rhs {}{}",
            m.z_exp,
            m.q_exp,
            m.lhs_coeff,
            m.rhs_coeff,
            r.detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default()
        ),
    }
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let given: Params = [("theta", a.theta), ("l", a.l), ("s", a.s), ("n", a.n), ("m", a.m), ("k", a.k)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect();
    let config = SuiteConfig {
        identities: vec![a.id.clone()],
        order: a.order.order,
        window: a.window.window(ZWindow::symmetric(8))?,
        l_max: a.l_max,
        s_max: a.s_max,
        nm_max: a.nm_max,
        census_max: a.census_max,
        ..Default::default()
    };
    let mut reports = if a.id == "all" {
        if !given.is_empty() {
            return Err(usage("`verify all` takes no identity parameters"));
        }
        identities::run_suite(&config)?
    } else {
        let def = identities::lookup(&a.id).ok_or_else(|| {
            let ids: Vec<&str> = identities::CATALOG.iter().map(|d| d.id).collect();
            usage(format!("unknown identity {:?}; known: {}, all", a.id, ids.join(", ")))
        })?;
        if let Some(extra) = given.keys().find(|k| !def.params.contains(&k.as_str())) {
            return Err(usage(format!("{} does not take --{extra}", def.id)));
        }
        if given.len() == def.params.len() {
            vec![identities::run_one(def.id, &given, &config)?]
        } else {
            // partial parameters select a slice of the default grid
            let mut c = config.clone();
            c.identities = vec![def.id.to_string()];
            let keep = |p: &Params| given.iter().all(|(k, v)| p.get(k) == Some(v));
            identities::run_suite(&c)?.into_iter().filter(|r| keep(&r.params)).collect()
        }
    };
    if a.no_timings {
        for r in &mut reports {
            r.elapsed_millis = 0;
        }
    }
    let mut text = String::new();
    for r in &reports {
        text.push_str(&match a.format {
            Format::Json => json(r),
            Format::Text => report_text(r),
        });
        text.push('\n');
    }
    match &a.out {
        Some(path) => fs::write(path, &text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))?,
    }
    Ok(if reports.iter().all(|r| r.matched) { EXIT_OK } else { EXIT_MISMATCH })
}

fn classify_text(p: &Partition, s: &ShapeArgs) -> Result<String, Failure> {
    let c = durfee_classify(p, s.l, s.n, s.m)?;
    let mut lines = vec![c.kind.to_string()];
    match c.kind {
        DurfeeKind::NoRect => {
            lines.push(format!("rectangle {}x{}: not contained", s.n, s.m));
        }
        DurfeeKind::Rect { i, .. } => {
            let (r, cols) = c.durfee_rect().expect("rect");
            let (nr, nc) = c.next_rect().expect("rect");
            lines.push(format!("durfee rectangle {r}x{cols}: contained"));
            lines.push(format!("next rectangle {nr}x{nc}: not contained"));
            lines.push(format!("row {} has length {}, reaching {i} past column {cols}", r + 1, p.part((r + 1) as usize)));
        }
    }
    Ok(lines.join("\n"))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn run_command(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Char(c) => cmd_char(c, out),
        Command::Verify(v) => cmd_verify(v, out),
        Command::Durfee(DurfeeCmd::Classify(s)) => {
            let p = Partition::parse(&s.parts)?;
            let text = classify_text(&p, &s)?;
            writeln!(out, "{text}").map_err(|e| usage(e.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::Render(RenderCmd::Durfee { shape, out: path }) => {
            let p = Partition::parse(&shape.parts)?;
            write_file(&path, &render_durfee(&p, shape.l, shape.n, shape.m)?)?;
            Ok(EXIT_OK)
        }
        Command::Render(RenderCmd::Family { l, n, m, kmax, out: path }) => {
            write_file(&path, &render_family(l, n, m, kmax)?)?;
            Ok(EXIT_OK)
        }
        Command::Catalog => {
            for d in identities::CATALOG {
                let line = format!("{:<18} [{}] {}\n    sites: {}", d.id, d.params.join(", "), d.summary, d.sites.join(", "));
                writeln!(out, "{line}").map_err(|e| usage(e.to_string()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line with output to `out` and diagnostics to `err`;
/// returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
