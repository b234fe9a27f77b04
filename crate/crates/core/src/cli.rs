//! Command-line front end.
//!
//! Exit codes: 0 success, 1 bad parameters or usage, 2 isomorphism search
//! undecided within budget, 3 I/O failure. With `--json` the payload on
//! stdout is a single JSON document; timings and diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::digraph::{
    count_cycles_by_length, ExportFormat, GraphError, MonomialDigraph, MonomialParams,
    DEFAULT_CYCLE_BUDGET,
};
use crate::field::{prime_power_parts, FieldSpec};
use crate::invariants::{motif_census, profile, trinomial_root_count, MotifSpec, ProfileOptions};
use crate::iso::{iso_search, IsoError, SearchOptions, DEFAULT_NODE_BUDGET};
use crate::sweep::{sweep, sweep_m1, ProfileCache, SweepError, SweepOptions};

/// Environment variable naming the default sweep cache file.
pub const CACHE_ENV: &str = "MONODIGRAPH_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "monodigraph",
    about = "Monomial digraphs D(q; m, n) over finite fields"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print q, the defining polynomial and the primitive element of GF(p^e).
    FieldInfo { p: u32, e: u32 },
    /// Emit the arc set of D(q; m, n).
    Build {
        q: u32,
        m: u32,
        n: u32,
        #[arg(long, default_value = "arcs-text")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant profile of D(q; m, n).
    Invariants {
        q: u32,
        m: u32,
        n: u32,
        /// Also count directed cycles of lengths 1..=L.
        #[arg(long, value_name = "L")]
        cycles: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide D(q; m1, n1) ~= D(q; m2, n2).
    Iso {
        q: u32,
        m1: u32,
        n1: u32,
        m2: u32,
        n2: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare all parameter classes for every prime power in a range.
    Sweep {
        #[arg(long)]
        qmin: u32,
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        m1_only: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Write one JSON report per q to this file.
        #[arg(long, value_name = "REPORT")]
        json: Option<PathBuf>,
        /// Raise the desk-scale guard on qmax.
        #[arg(long)]
        max_q: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Count copies of a small motif.
    Census {
        q: u32,
        m: u32,
        n: u32,
        /// `K` or `directed-K22`.
        #[arg(long, default_value = "K")]
        motif: String,
        #[arg(long)]
        json: bool,
    },
    /// Count directed cycles of each length up to L.
    Cycles {
        q: u32,
        m: u32,
        n: u32,
        length: usize,
        #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Number of roots of X^d - 2X + 1 in GF(q).
    Trinomial {
        q: u32,
        d: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Result of one invocation with its captured output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(String),
    Undecided(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Undecided(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Undecided(m) | Failure::Io(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Io(e) => Failure::Io(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<IsoError> for Failure {
    fn from(e: IsoError) -> Self {
        match e {
            IsoError::Undecided { .. } => Failure::Undecided(e.to_string()),
            IsoError::Graph(g) => g.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Cache { .. } | SweepError::CorruptCache { .. } => {
                Failure::Io(e.to_string())
            }
            SweepError::Iso(i) => i.into(),
            SweepError::Graph(g) => g.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

struct Output {
    stdout: String,
    stderr: String,
}

fn field_for(q: u32) -> Result<Arc<FieldSpec>, Failure> {
    if prime_power_parts(q).is_none() {
        return Err(Failure::Domain(format!("q = {q} is not a prime power")));
    }
    FieldSpec::with_order(q)
        .map(Arc::new)
        .map_err(|e| Failure::Domain(e.to_string()))
}

fn monomial(q: u32, m: u32, n: u32) -> Result<MonomialDigraph, Failure> {
    MonomialParams::new(q, m, n)?;
    let field = field_for(q)?;
    Ok(MonomialDigraph::build(field, m, n)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn execute(cmd: Command, out: &mut Output) -> Result<(), Failure> {
    let so = &mut out.stdout;
    match cmd {
        Command::FieldInfo { p, e } => {
            let f = FieldSpec::new(p, e).map_err(|e| Failure::Domain(e.to_string()))?;
            let modulus: Vec<String> = f.modulus_high_first().iter().map(u32::to_string).collect();
            let _ = writeln!(so, "q: {}", f.q());
            let _ = writeln!(so, "modulus: {}", modulus.join(","));
            let _ = writeln!(so, "primitive: {}", f.primitive());
        }
        Command::Build {
            q,
            m,
            n,
            format,
            out: path,
        } => {
            let d = monomial(q, m, n)?;
            match path {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    d.export(format, BufWriter::new(file))?;
                }
                None => so.push_str(&d.export_string(format)),
            }
        }
        Command::Invariants {
            q,
            m,
            n,
            cycles,
            json,
        } => {
            let d = monomial(q, m, n)?;
            let opts = ProfileOptions {
                cycle_length: cycles,
                cycle_budget: None,
            };
            let prof = profile(&d, opts).map_err(|e| Failure::Domain(e.to_string()))?;
            if json {
                so.push_str(&to_json(&prof));
            } else {
                let v = serde_json::to_value(&prof).expect("profile serializes");
                for (k, val) in v.as_object().expect("profile is an object") {
                    if !val.is_null() {
                        let _ = writeln!(so, "{k:<24} {val}");
                    }
                }
            }
        }
        Command::Iso {
            q,
            m1,
            n1,
            m2,
            n2,
            budget,
            json,
        } => {
            let d1 = monomial(q, m1, n1)?;
            let d2 = monomial(q, m2, n2)?;
            let cert = iso_search(
                &d1,
                &d2,
                SearchOptions {
                    budget,
                    search_only: false,
                },
            )?;
            let _ = writeln!(out.stderr, "elapsed: {:?}", cert.elapsed);
            if json {
                out.stdout.push_str(&to_json(&cert));
            } else {
                let _ = writeln!(out.stdout, "verdict: {:?}", cert.verdict);
                if let Some(w) = &cert.witness {
                    let _ = writeln!(out.stdout, "witness: {w}");
                }
                let _ = writeln!(out.stdout, "nodes: {}", cert.nodes);
            }
        }
        Command::Sweep {
            qmin,
            qmax,
            m1_only,
            cache,
            json,
            max_q,
            budget,
        } => {
            let cache_path = cache.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
            let cache = cache_path
                .map(|p| ProfileCache::open(p).map(Arc::new))
                .transpose()?;
            let opts = SweepOptions {
                max_q,
                search: SearchOptions {
                    budget,
                    search_only: false,
                },
                cache,
                ..Default::default()
            };
            let reports = if m1_only {
                sweep_m1(qmin, qmax, &opts)?
            } else {
                sweep(qmin, qmax, &opts)?
            };
            if let Some(path) = json {
                let io = |e: std::io::Error| Failure::Io(format!("{}: {e}", path.display()));
                let mut w = BufWriter::new(File::create(&path).map_err(io)?);
                for r in &reports {
                    serde_json::to_writer(&mut w, r).map_err(|e| io(e.into()))?;
                    w.write_all(b"\n").map_err(io)?;
                }
                w.flush().map_err(io)?;
            }
            let _ = writeln!(
                out.stdout,
                "{:>4} {:>7} {:>7} {:>7} {:>9} {:>7} {:>9} {:>8}",
                "q", "classes", "within", "cross", "invariant", "search", "undecided", "counter"
            );
            let mut undecided = 0;
            for r in &reports {
                undecided += r.undecided;
                let _ = writeln!(
                    out.stdout,
                    "{:>4} {:>7} {:>7} {:>7} {:>9} {:>7} {:>9} {:>8}",
                    r.q,
                    r.class_count,
                    r.within_class_checks,
                    r.cross_class_pairs,
                    r.resolved_by_invariant,
                    r.resolved_by_search,
                    r.undecided,
                    r.counterexamples.len()
                );
                let _ = writeln!(out.stderr, "q = {}: {} ms", r.q, r.wall_time_ms);
            }
            if undecided > 0 {
                return Err(Failure::Undecided(format!(
                    "{undecided} pairs undecided within budget"
                )));
            }
        }
        Command::Census {
            q,
            m,
            n,
            motif,
            json,
        } => {
            let spec: MotifSpec = motif
                .parse()
                .map_err(|e: crate::invariants::InvariantError| Failure::Domain(e.to_string()))?;
            let d = monomial(q, m, n)?;
            let count = motif_census(d.graph(), spec);
            if json {
                so.push_str(&to_json(
                    &serde_json::json!({ "motif": spec.name(), "count": count }),
                ));
            } else {
                let _ = writeln!(so, "{}: {count}", spec.name());
            }
        }
        Command::Cycles {
            q,
            m,
            n,
            length,
            budget,
            json,
        } => {
            let d = monomial(q, m, n)?;
            let counts = count_cycles_by_length(d.graph(), length, budget)?;
            if json {
                so.push_str(&to_json(&counts));
            } else {
                for (i, c) in counts.iter().enumerate() {
                    let _ = writeln!(so, "{:>3} {c}", i + 1);
                }
            }
        }
        Command::Trinomial { q, d, json } => {
            if d == 0 {
                return Err(Failure::Domain("exponent must be at least 1".into()));
            }
            let f = field_for(q)?;
            let count = trinomial_root_count(&f, d);
            if json {
                so.push_str(&to_json(
                    &serde_json::json!({ "q": q, "d": d, "roots": count }),
                ));
            } else {
                let _ = writeln!(so, "roots of X^{d} - 2X + 1 in GF({q}): {count}");
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let text = e.render().to_string();
            return if informational {
                CommandOutcome {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CommandOutcome {
                    exit_code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            log::debug!("thread pool already initialised: {e}");
        }
    }
    let mut out = Output {
        stdout: String::new(),
        stderr: String::new(),
    };
    let exit_code = match execute(cli.command, &mut out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(out.stderr, "error: {}", f.message());
            f.code()
        }
    };
    CommandOutcome {
        exit_code,
        stdout: out.stdout,
        stderr: out.stderr,
    }
}
