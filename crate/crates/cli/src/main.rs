mod literal;
mod render;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rigidplane::engine::EmbeddedRoot;
use rigidplane::verify::{
    bezout_audit, emit_certificate, normal_crossings_report, parse_certificate, replay_certificate,
    singular_locus_oracle, verify_certificate, Replay,
};
use rigidplane::{Certificate, Config, Rat, Strategy};
use serde_json::json;

use crate::render::{parse_viewport, render_svg, RenderOptions};
use crate::report::*;

#[derive(Parser, Debug)]
#[command(
    name = "rigidplane",
    version,
    about = "Exact constructions and certificates for rigid plane divisors"
)]
struct Cli {
    /// How integers on the axis are reached.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Chain)]
    strategy: StrategyArg,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable reports.
    #[arg(long, global = true)]
    json: bool,
    /// Width of the isolating interval for algebraic claims.
    #[arg(long, global = true, default_value = "1/1024", value_parser = parse_width)]
    refine_width: Rat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Naive,
    Chain,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Chain => Strategy::AdditionChain,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Make each point a singular point of one cumulative construction.
    Construct {
        /// Points such as "(3/5 : -2 : 1)".
        #[arg(required = true)]
        targets: Vec<String>,
    },
    /// Realize the root of a monic polynomial inside an interval.
    EmbedAlgebraic {
        /// Monic squarefree polynomial in t, e.g. "t^2-2".
        poly: String,
        /// Rational bounds "lo,hi" around exactly one root.
        #[arg(long, allow_hyphen_values = true)]
        root: String,
    },
    /// Add a curve through n²+1 of its rational points.
    EmbedCurve {
        /// Form in X, Y, Z, e.g. "X^2+Y^2-Z^2".
        form: String,
        /// Points on the curve.
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Replay a certificate.
    Verify { path: PathBuf },
    /// Draw a verified certificate as SVG.
    Render {
        path: PathBuf,
        /// Chart window "x0,x1,y0,y1".
        #[arg(long, default_value = "-4,4,-4,4", allow_hyphen_values = true)]
        viewport: String,
        #[arg(long, default_value_t = 600)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        /// Sample columns per curve.
        #[arg(long, default_value_t = 300)]
        samples: u32,
        /// Label recorded points.
        #[arg(long)]
        labels: bool,
        /// Mark points at infinity on the viewport boundary.
        #[arg(long)]
        mark_infinity: bool,
    },
    /// Per-claim height and size of a certificate.
    Stats { path: PathBuf },
    /// Cross-check a certificate against the pairwise-meet oracle, Bézout
    /// totals and the normal-crossings report.
    OracleCheck { path: PathBuf },
}

fn parse_width(s: &str) -> Result<Rat, String> {
    let w = literal::parse_rational(s).map_err(|e| e.to_string())?;
    if w <= Rat::from_integer(0.into()) {
        return Err("refinement width must be positive".into());
    }
    Ok(w)
}

/// Failure classes, one exit code each.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Rejected(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Rejected(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Rejected(m) | Failure::Io(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Certificate, Failure> {
    let bytes = read(path)?;
    parse_certificate(&bytes)
        .map_err(|e| Failure::Rejected(format!("ParseError: {}: {e}", path.display())))
}

fn load_verified(path: &Path) -> Result<(Certificate, Replay), Failure> {
    let cert = load(path)?;
    let report = verify_certificate(&cert);
    if let Some(e) = &report.failure {
        return Err(Failure::Rejected(failure_line(e)));
    }
    let replay = replay_certificate(&cert).map_err(|e| Failure::Rejected(failure_line(&e)))?;
    Ok((cert, replay))
}

/// Primary output goes to `--out` or stdout; the summary then goes to
/// stdout or stderr respectively.
struct Output {
    out: Option<PathBuf>,
}

impl Output {
    fn primary(&self, bytes: &[u8]) -> Outcome {
        match &self.out {
            Some(p) => {
                fs::write(p, bytes).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
            }
            None => io::stdout()
                .write_all(bytes)
                .map_err(|e| Failure::Io(format!("stdout: {e}"))),
        }
    }

    fn summary(&self, text: &str) {
        if self.out.is_some() {
            print!("{text}");
        } else {
            eprint!("{text}");
        }
    }
}

/// Verifies in-process, then writes the certificate and its summary.
fn publish(cfg: &Config, cli: &Cli, out: &Output, extra: &str) -> Outcome {
    let cert = Certificate::from_config(cfg, Some(cli.strategy.into()));
    let report = verify_certificate(&cert);
    if let Some(e) = &report.failure {
        return Err(Failure::Rejected(format!(
            "internal error, certificate does not verify: {}",
            failure_line(e)
        )));
    }
    out.primary(&emit_certificate(&cert))?;
    let stats = cfg.stats();
    if cli.json {
        out.summary(&to_json_line(
            &json!({"result": extra, "stats": stats_json(&stats)}),
        ));
    } else {
        out.summary(&format!("{extra}{}", stats_text(&stats)));
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let strategy: Strategy = cli.strategy.into();
    let out = Output {
        out: cli.out.clone(),
    };
    let usage = |what: &str, e: &dyn std::fmt::Display| Failure::Usage(format!("{what}: {e}"));
    match &cli.command {
        Command::Construct { targets } => {
            let points = targets
                .iter()
                .map(|t| literal::parse_point(t).map_err(|e| usage(&format!("point {t:?}"), &e)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut cfg = Config::init_quadrilateral();
            for p in &points {
                cfg.construct_point(p, strategy).map_err(|e| {
                    Failure::Usage(format!("target {p} after step {}: {e}", cfg.trace().len()))
                })?;
            }
            publish(&cfg, cli, &out, "")
        }
        Command::EmbedAlgebraic { poly, root } => {
            let f = literal::parse_unipoly(poly)
                .map_err(|e| usage(&format!("polynomial {poly:?}"), &e))?;
            let iv = literal::parse_interval(root)
                .map_err(|e| usage(&format!("interval {root:?}"), &e))?;
            let mut cfg = Config::init_quadrilateral();
            let found = cfg
                .embed_algebraic(&f, &iv, &cli.refine_width, strategy)
                .map_err(|e| Failure::Usage(format!("{poly} on {iv}: {e}")))?;
            let line = match found {
                EmbeddedRoot::Rational(p) => format!("root is rational: {p}\n"),
                EmbeddedRoot::Algebraic(w) => format!(
                    "root of {} isolated in {} on curve {}\n",
                    w.minpoly, w.interval, w.curve
                ),
            };
            publish(&cfg, cli, &out, &line)
        }
        Command::EmbedCurve { form, points } => {
            let f = literal::parse_form(form).map_err(|e| usage(&format!("form {form:?}"), &e))?;
            let pts = points
                .iter()
                .map(|t| literal::parse_point(t).map_err(|e| usage(&format!("point {t:?}"), &e)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut cfg = Config::init_quadrilateral();
            let id = cfg
                .embed_curve(&f, &pts, strategy)
                .map_err(|e| Failure::Usage(format!("{f}: {e}")))?;
            publish(&cfg, cli, &out, &format!("{f} is {id}\n"))
        }
        Command::Verify { path } => {
            let cert = load(path)?;
            let report = verify_certificate(&cert);
            let text = if cli.json {
                to_json_line(&verification_json(&report))
            } else {
                verification_text(&report)
            };
            out.primary(text.as_bytes())?;
            match &report.failure {
                None => Ok(()),
                Some(e) => Err(Failure::Rejected(failure_line(e))),
            }
        }
        Command::Render {
            path,
            viewport,
            width,
            height,
            samples,
            labels,
            mark_infinity,
        } => {
            let vp = parse_viewport(viewport).map_err(Failure::Usage)?;
            let opts = RenderOptions::new(vp, *width, *height, *samples, *labels, *mark_infinity)
                .map_err(Failure::Usage)?;
            let (_, replay) = load_verified(path)?;
            let (svg, drawn) = render_svg(&replay, &opts);
            out.primary(svg.as_bytes())?;
            out.summary(&format!(
                "{} line segments, {} curve paths, {} points\n",
                drawn.segments, drawn.curve_paths, drawn.points
            ));
            Ok(())
        }
        Command::Stats { path } => {
            let stats = stats_from_certificate(&load(path)?);
            let text = if cli.json {
                to_json_line(&stats_json(&stats))
            } else {
                stats_text(&stats)
            };
            out.primary(text.as_bytes())
        }
        Command::OracleCheck { path } => {
            let (_, replay) = load_verified(path)?;
            let oracle = singular_locus_oracle(&replay);
            let bezout = bezout_audit(&replay).map_err(|e| Failure::Rejected(e.to_string()))?;
            let nc = normal_crossings_report(&replay);
            let text = if cli.json {
                to_json_line(&oracle_json(&oracle, &bezout, &nc))
            } else {
                oracle_text(&oracle, &bezout, &nc)
            };
            out.primary(text.as_bytes())?;
            if oracle.agrees() && bezout.iter().all(|e| e.passes()) {
                Ok(())
            } else {
                Err(Failure::Rejected("oracle cross-check failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
