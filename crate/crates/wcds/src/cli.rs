//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wcds_core::{extension, formulas, oracle, CountTable, Family, Graph, OracleCap, RootedGraph};

use crate::edgelist;
use crate::report::{render_reports, render_table, Format};
use crate::verify::{family_table, run_suite, Limits, Method, Suite, TableRow};
use crate::{parallel, Error, Result};

pub const CAP_ENV: &str = "WCDS_ORACLE_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "wcds",
    version,
    about = "Count, enumerate and verify weakly connected dominating sets"
)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,
    /// Largest graph order the exhaustive oracle will sweep.
    #[arg(long, global = true, env = CAP_ENV)]
    cap: Option<usize>,
    /// Allow a cap above the default, up to the hard maximum.
    #[arg(long, global = true)]
    force_cap: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print γ_w (and optionally γ).
    Gamma {
        #[command(flatten)]
        source: Source,
        /// Also print the ordinary domination number.
        #[arg(long)]
        with_gamma: bool,
        #[arg(long, value_enum, default_value = "oracle")]
        method: GammaMethod,
    },
    /// Print d_w(G, i), or the whole count table when --i is omitted.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value = "oracle")]
        method: CountMethod,
    },
    /// List every w.c.d.s. of cardinality i, one sorted set per line.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "oracle")]
        method: EnumMethod,
    },
    /// Count tables of a family over a range of n.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long, value_enum, default_value = "oracle")]
        method: CountMethod,
    },
    /// Run a verification suite (or `all`) and print its report.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        /// Number of seeded random instances.
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the graph in edge-list format.
    Emit {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
struct Source {
    #[arg(long, value_parser = parse_family, conflicts_with = "input", requires = "n")]
    family: Option<Family>,
    /// Family parameter.
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Root vertex for a pendant-path extension G(m).
    #[arg(long, requires = "m")]
    root: Option<usize>,
    /// Pendant-path length.
    #[arg(long, requires = "root")]
    m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GammaMethod {
    Oracle,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Oracle,
    Formula,
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumMethod {
    Oracle,
    Constructive,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    Family::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!(
            "unknown family `{s}` (expected one of {})",
            names.join(", ")
        )
    })
}

enum Loaded {
    Plain(Graph),
    Rooted(RootedGraph),
}

impl Loaded {
    fn graph(&self) -> Graph {
        match self {
            Loaded::Plain(g) => g.clone(),
            Loaded::Rooted(rg) => rg.realize(),
        }
    }

    fn family_n(&self) -> Option<(Family, usize)> {
        match self {
            Loaded::Plain(g) => g.family_tag().map(|t| (t.family, t.n)),
            Loaded::Rooted(_) => None,
        }
    }
}

struct Ctx<'a> {
    format: Format,
    cap: OracleCap,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn print(&mut self, s: &str) -> Result<()> {
        self.out.write_all(s.as_bytes()).map_err(stdout_error)
    }

    fn warn(&mut self, s: &str) {
        let _ = writeln!(self.err, "warning: {s}");
    }

    fn load(&mut self, source: &Source) -> Result<Loaded> {
        let base = match (&source.family, &source.input) {
            (Some(f), None) => Graph::family(*f, source.n.expect("clap enforces --n"))?,
            (None, Some(path)) => {
                let parsed = edgelist::read(path)?;
                if let Some(mapping) = &parsed.mapping {
                    let pairs: Vec<_> = mapping.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                    let _ = writeln!(self.err, "label mapping: {}", pairs.join(" "));
                }
                parsed.graph
            }
            _ => {
                return Err(Error::Usage(
                    "give exactly one of --family/--n or --input".into(),
                ))
            }
        };
        Ok(match (source.root, source.m) {
            (Some(root), Some(m)) => Loaded::Rooted(RootedGraph::new(base, root, m)?),
            _ => Loaded::Plain(base),
        })
    }

    fn oracle_table(&mut self, g: &Graph) -> Result<CountTable> {
        let t = parallel::count_table(g, self.cap)?;
        if t.disconnected() {
            self.warn("graph is disconnected; it has no w.c.d.s.");
        }
        Ok(t)
    }

    fn table_by(&mut self, loaded: &Loaded, method: CountMethod) -> Result<CountTable> {
        match (method, loaded) {
            (CountMethod::Oracle, l) => self.oracle_table(&l.graph()),
            (CountMethod::Recurrence, Loaded::Rooted(rg)) => {
                let tables = extension::count_extension_table(rg, self.cap)?;
                Ok(tables
                    .row(rg.extension_length())
                    .expect("row for the requested length")
                    .clone())
            }
            (CountMethod::Recurrence, Loaded::Plain(g)) => {
                Ok(family_table(g, Method::Recurrence, self.cap)?)
            }
            (CountMethod::Formula, Loaded::Plain(g)) => {
                Ok(family_table(g, Method::ClosedForm, self.cap)?)
            }
            (CountMethod::Formula, Loaded::Rooted(_)) => Err(Error::Unsupported(
                "formula counts for extensions; use --method recurrence".into(),
            )),
        }
    }

    fn count_one(&mut self, loaded: &Loaded, i: usize, method: CountMethod) -> Result<u64> {
        let order = loaded.graph().order();
        if i == 0 || i > order {
            return Err(wcds_core::Error::CardinalityOutOfRange { i, order }.into());
        }
        match (method, loaded.family_n()) {
            (CountMethod::Formula, Some((Family::Cycle, n))) => {
                Ok(formulas::count_cycle_top(n, i)?)
            }
            _ => Ok(self.table_by(loaded, method)?.get(i)),
        }
    }

    fn gamma_formula(&mut self, loaded: &Loaded) -> Result<usize> {
        match loaded {
            Loaded::Rooted(rg) => {
                let gw = oracle::gamma_w(rg.base(), self.cap)?;
                let base = rg.with_length(0);
                let flag = extension::root_in_minimum_wcds(&base, self.cap)?;
                Ok(formulas::gamma_w_extension(gw, flag, rg.extension_length()).value)
            }
            Loaded::Plain(_) => match loaded.family_n() {
                Some((Family::Path, n)) => Ok(formulas::gamma_w_path(n).value),
                Some((Family::Cycle, n)) => Ok(formulas::gamma_w_cycle(n).value),
                _ => Err(Error::Unsupported(
                    "γ_w formula for this graph; paths, cycles and extensions only".into(),
                )),
            },
        }
    }

    fn scalar(&mut self, value: u64) -> Result<()> {
        self.print(&format!("{value}\n"))
    }

    fn rows(&mut self, rows: &[TableRow]) -> Result<()> {
        let s = render_table(rows, self.format);
        self.print(&s)
    }
}

fn stdout_error(source: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn row_label(loaded: &Loaded, g: &Graph) -> String {
    match loaded {
        Loaded::Rooted(rg) => format!("d_w(G({}), j)", rg.extension_length()),
        Loaded::Plain(_) => match loaded.family_n() {
            Some((f, n)) => family_row_label(f, n),
            None => format!("d_w(G, j), order {}", g.order()),
        },
    }
}

fn family_row_label(f: Family, n: usize) -> String {
    match f {
        Family::Star => format!("d_w(K_{{1,{n}}}, j)"),
        _ => format!("d_w({}_{n}, j)", f.symbol()),
    }
}

fn resolve_cap(requested: Option<usize>, force: bool) -> Result<OracleCap> {
    let cap = requested.unwrap_or(OracleCap::DEFAULT);
    Ok(if force {
        OracleCap::with_override(cap)?
    } else {
        OracleCap::new(cap)?
    })
}

fn dispatch(cli: Cli, ctx: &mut Ctx<'_>) -> Result<i32> {
    match cli.command {
        Command::Gamma {
            source,
            with_gamma,
            method,
        } => {
            let loaded = ctx.load(&source)?;
            let g = loaded.graph();
            let gw = match method {
                GammaMethod::Oracle => oracle::gamma_w(&g, ctx.cap)?,
                GammaMethod::Formula => ctx.gamma_formula(&loaded)?,
            };
            if !with_gamma {
                ctx.scalar(gw as u64)?;
                return Ok(0);
            }
            let gm = oracle::gamma(&g, ctx.cap)?;
            let text = match ctx.format {
                Format::Json => format!("{{\"gamma_w\": {gw}, \"gamma\": {gm}}}\n"),
                Format::Csv => format!("gamma_w,gamma\n{gw},{gm}\n"),
                Format::Md => format!("| γ_w | γ |\n|---|---|\n| {gw} | {gm} |\n"),
            };
            ctx.print(&text)?;
        }
        Command::Count { source, i, method } => {
            let loaded = ctx.load(&source)?;
            match i {
                Some(i) => {
                    let v = ctx.count_one(&loaded, i, method)?;
                    ctx.scalar(v)?;
                }
                None => {
                    let g = loaded.graph();
                    let t = ctx.table_by(&loaded, method)?;
                    let row = TableRow {
                        label: row_label(&loaded, &g),
                        counts: t.counts().to_vec(),
                    };
                    ctx.rows(&[row])?;
                }
            }
        }
        Command::Enumerate { source, i, method } => {
            let loaded = ctx.load(&source)?;
            let sets = match (method, &loaded) {
                (EnumMethod::Oracle, l) => oracle::enumerate_wcds(&l.graph(), i, ctx.cap)?,
                (EnumMethod::Constructive, Loaded::Rooted(rg)) => {
                    let fam = extension::build_extension_wcds(rg, i, ctx.cap)?;
                    if !fam.first_only_levels.is_empty() {
                        ctx.warn(&format!(
                            "levels {:?} had only the G(m-1) family non-empty",
                            fam.first_only_levels
                        ));
                    }
                    fam.sets
                }
                (EnumMethod::Constructive, Loaded::Plain(_)) => {
                    return Err(Error::Usage(
                        "--method constructive needs --root and --m".into(),
                    ))
                }
            };
            let text: String = match ctx.format {
                Format::Json => {
                    let lists: Vec<&[usize]> = sets.iter().map(|s| s.members()).collect();
                    format!(
                        "{}\n",
                        serde_json::to_string(&lists).expect("sets serialize")
                    )
                }
                _ => sets.iter().map(|s| format!("{s}\n")).collect(),
            };
            ctx.print(&text)?;
        }
        Command::Table {
            family,
            max_n,
            min_n,
            method,
        } => {
            let min_n = min_n.unwrap_or(family.min_n()).max(family.min_n());
            let mut rows = Vec::new();
            for n in min_n..=max_n {
                let loaded = Loaded::Plain(Graph::family(family, n)?);
                let t = ctx.table_by(&loaded, method)?;
                rows.push(TableRow {
                    label: family_row_label(family, n),
                    counts: t.counts().to_vec(),
                });
            }
            ctx.rows(&rows)?;
        }
        Command::Verify {
            suite,
            max_n,
            max_order,
            max_m,
            instances,
            seed,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(Error::Usage)?]
            };
            let defaults = Limits::default();
            let limits = Limits {
                max_n,
                max_order,
                max_m: max_m.unwrap_or(defaults.max_m),
                instances,
                seed: seed.unwrap_or(defaults.seed),
                cap: ctx.cap,
            };
            let mut reports = Vec::new();
            for s in suites {
                reports.push(run_suite(s, &limits)?);
            }
            let text = render_reports(&reports, ctx.format);
            ctx.print(&text)?;
            for r in &reports {
                let _ = writeln!(
                    ctx.err,
                    "{}: {}/{} passed{}",
                    r.suite,
                    r.summary.passed,
                    r.summary.total,
                    if r.summary.skipped > 0 {
                        format!(", {} skipped", r.summary.skipped)
                    } else {
                        String::new()
                    }
                );
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
        Command::Emit { source } => {
            let loaded = ctx.load(&source)?;
            let text = edgelist::emit(&loaded.graph());
            ctx.print(&text)?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command, writing
/// data to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = resolve_cap(cli.cap, cli.force_cap).and_then(|cap| {
        let mut ctx = Ctx {
            format: cli.format,
            cap,
            out,
            err,
        };
        dispatch(cli, &mut ctx)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
