//! The `reeb` command-line tool. [`run`] takes the argument list and the
//! three standard streams so it can be driven in-process by tests.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use reeb_core::io::{parse_diagram, parse_graph, parse_vineyard, serialize_diagram, serialize_graph};
use reeb_core::plot::{plot_diagram, plot_graph};
use reeb_core::{
    bottleneck, extended_diagram, interpolate, realize, recover_params, sample_path, smooth,
    transport, truncate, truncated_smooth, RealizeOptions,
    TransportParams, DEFAULT_TOL,
};

#[derive(Debug, Parser)]
#[command(name = "reeb", version, about = "Reeb graph smoothing, persistence and vineyards")]
struct Cli {
    /// Absolute tolerance for comparing values.
    #[arg(long, global = true, env = "REEB_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("`{s}` is not a non-negative number")),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a graph file and report every violation.
    Validate { graph: PathBuf },
    /// Extended persistence diagram of a graph.
    Diagram { graph: PathBuf },
    /// ε-smoothing, followed by τ-truncation when `--tau` is given.
    #[command(allow_negative_numbers = true)]
    Smooth {
        graph: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        tau: Option<f64>,
    },
    #[command(allow_negative_numbers = true)]
    Truncate {
        graph: PathBuf,
        #[arg(long)]
        tau: f64,
    },
    /// Image of a diagram under truncated smoothing.
    #[command(allow_negative_numbers = true)]
    Transport {
        diagram: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        tau: f64,
    },
    Bottleneck { left: PathBuf, right: PathBuf },
    /// Every `(ε, τ)` carrying the first diagram onto the second, one
    /// `eps tau` line each.
    Recover { from: PathBuf, to: PathBuf },
    /// Graphs realizing a vineyard from an initial graph. With `--steps`,
    /// prints the diagrams of the interpolated path instead.
    Realize {
        graph: PathBuf,
        vineyard: PathBuf,
        #[arg(long)]
        steps: Option<usize>,
        /// Accept identity steps `(0, 0)`.
        #[arg(long)]
        allow_identity: bool,
    },
    /// Truncated smoothing at `(tε, tτ)`.
    #[command(allow_negative_numbers = true)]
    Interpolate {
        graph: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        tau: f64,
        #[arg(long)]
        t: f64,
    },
    /// SVG of a diagram or a graph file.
    Plot {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },

    #[error("{path}: {source}")]
    Input { path: String, source: reeb_core::Error },

    #[error(transparent)]
    Core(#[from] reeb_core::Error),

    #[error("no parameters carry the first diagram onto the second")]
    NoCandidates,

    #[error("invalid graph")]
    Invalid,
}

type Result<T> = std::result::Result<T, CliError>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    tol: f64,
}

impl Ctx<'_> {
    fn read(&mut self, path: &Path) -> Result<String> {
        let name = path.display().to_string();
        let io_err = |source| CliError::Io { path: name.clone(), source };
        if name == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(io_err)
        }
    }

    fn parsed<T>(&mut self, path: &Path, parse: fn(&str) -> reeb_core::Result<T>) -> Result<T> {
        let text = self.read(path)?;
        parse(&text).map_err(|source| CliError::Input {
            path: path.display().to_string(),
            source,
        })
    }

    fn emit(&mut self, text: &str) -> Result<()> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "stdout".into(), source })
    }
}

/// Runs the tool and returns its exit code: 0 on success, 1 on a domain
/// failure, 2 on a usage error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let mut ctx = Ctx { stdin, stdout, stderr, tol: cli.tol };
    match execute(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, ctx: &mut Ctx<'_>) -> Result<()> {
    let tol = ctx.tol;
    match command {
        Command::Validate { graph } => {
            let text = ctx.read(&graph)?;
            match parse_graph(&text) {
                Ok(_) => {}
                Err(reeb_core::Error::InvalidGraph(report)) => {
                    for v in &report.violations {
                        let _ = writeln!(ctx.stderr, "{v}");
                    }
                    return Err(CliError::Invalid);
                }
                Err(source) => {
                    return Err(CliError::Input { path: graph.display().to_string(), source })
                }
            }
            ctx.emit("valid\n")
        }
        Command::Diagram { graph } => {
            let g = ctx.parsed(&graph, parse_graph)?;
            ctx.emit(&serialize_diagram(&extended_diagram(&g)?))
        }
        Command::Smooth { graph, epsilon, tau } => {
            let g = ctx.parsed(&graph, parse_graph)?;
            let out = match tau {
                Some(tau) => truncated_smooth(&g, TransportParams::new(epsilon, tau), tol)?,
                None => smooth(&g, epsilon, tol)?,
            };
            ctx.emit(&serialize_graph(&out))
        }
        Command::Truncate { graph, tau } => {
            let g = ctx.parsed(&graph, parse_graph)?;
            ctx.emit(&serialize_graph(&truncate(&g, tau, tol)?))
        }
        Command::Transport { diagram, epsilon, tau } => {
            let d = ctx.parsed(&diagram, parse_diagram)?;
            let out = transport(&d, TransportParams::new(epsilon, tau), tol)?;
            ctx.emit(&serialize_diagram(&out))
        }
        Command::Bottleneck { left, right } => {
            let a = ctx.parsed(&left, parse_diagram)?;
            let b = ctx.parsed(&right, parse_diagram)?;
            ctx.emit(&format!("{}\n", bottleneck(&a, &b).distance))
        }
        Command::Recover { from, to } => {
            let a = ctx.parsed(&from, parse_diagram)?;
            let b = ctx.parsed(&to, parse_diagram)?;
            let found = recover_params(&a, &b, tol);
            if found.is_empty() {
                return Err(CliError::NoCandidates);
            }
            let mut out = String::new();
            for p in found {
                let _ = writeln!(out, "{p}");
            }
            ctx.emit(&out)
        }
        Command::Realize { graph, vineyard, steps, allow_identity } => {
            let g = ctx.parsed(&graph, parse_graph)?;
            let v = ctx.parsed(&vineyard, parse_vineyard)?;
            let options = RealizeOptions { tol, allow_identity };
            let r = realize(&g, &v, options)?;
            let mut out = String::new();
            match steps {
                None => {
                    for (i, graph) in r.graphs.iter().enumerate() {
                        if i > 0 {
                            let _ = writeln!(out, "---\n# step {} {}", i - 1, r.params[i - 1]);
                        }
                        out.push_str(&serialize_graph(graph));
                    }
                }
                Some(k) => {
                    for (i, s) in sample_path(&r, k, tol)?.iter().enumerate() {
                        if i > 0 {
                            out.push_str("---\n");
                        }
                        let _ = writeln!(out, "# t={}", s.time);
                        out.push_str(&serialize_diagram(&s.diagram));
                    }
                }
            }
            ctx.emit(&out)
        }
        Command::Interpolate { graph, epsilon, tau, t } => {
            let g = ctx.parsed(&graph, parse_graph)?;
            let out = interpolate(&g, TransportParams::new(epsilon, tau), t, tol)?;
            ctx.emit(&serialize_graph(&out))
        }
        Command::Plot { input, out } => {
            let text = ctx.read(&input)?;
            let svg = match parse_diagram(&text) {
                Ok(d) => plot_diagram(&d),
                Err(_) if looks_like_graph(&text) => {
                    let g = parse_graph(&text).map_err(|source| CliError::Input {
                        path: input.display().to_string(),
                        source,
                    })?;
                    plot_graph(&g)
                }
                Err(source) => {
                    return Err(CliError::Input { path: input.display().to_string(), source })
                }
            };
            match out {
                Some(path) => std::fs::write(&path, svg).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                }),
                None => ctx.emit(&svg),
            }
        }
    }
}

fn looks_like_graph(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("v ") || l.starts_with("e "))
}
