//! `vps`: command-line front end and reproduction harness.
//!
//! Exit codes: 0 success, 1 mismatch or domain error, 2 unstable rank
//! computation (needs more samples or primes), 64 usage or parse error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vps_core::algebra::modular::{parse_primes, DEFAULT_PRIMES};
use vps_core::apolarity::{apolar_ideal, Quadric};
use vps_core::grassmann::span::{exact_span, vps_sample};
use vps_core::grassmann::stretch::restricted_hilbert;
use vps_core::grassmann::{plucker_quadric_space, vps_span};
use vps_core::grobner::{saturate, GradedIdeal};
use vps_core::io::{read_ideal, read_quadric, write_ideal, write_matrix};
use vps_core::limits::{weight_limit, WeightVec};
use vps_core::reproduce::{reproduce, ReproConfig, TARGETS};
use vps_core::tangent::{hilb_tangent, sl2_n4_torus, syz_tangent, SyzTarget};
use vps_core::vps::{check_vps, polar_simplex_sample};
use vps_core::Error;

#[derive(Parser)]
#[command(name = "vps", version, about = "Exact computations on varieties of polar simplices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Seed for every sampler.
    #[arg(long, global = true, env = "VPS_SEED", default_value_t = 0)]
    seed: u64,
    /// Comma separated primes for modular ranks.
    #[arg(long, global = true, env = "VPS_PRIMES")]
    primes: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Syz,
    Hilb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    #[value(name = "sl2-n4")]
    Sl2N4,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generators of the apolar ideal q^⊥.
    Apolar {
        #[arg(long)]
        quadric: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
    },
    /// Saturation with respect to the irrelevant ideal.
    Saturate {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Hilbert function of S/I.
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Flat limit under a one-parameter torus, and its saturation.
    Limit {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Membership and boundary criteria for VPS(Q, H).
    Check {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        quadric: PathBuf,
    },
    /// Tangent space to the syzygetic locus or the Hilbert scheme.
    Tangent {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        ideal: PathBuf,
        /// Restrict degree-2 images to q^⊥ (syz model only).
        #[arg(long)]
        quadric: Option<PathBuf>,
        #[arg(long, conflicts_with = "preset")]
        torus: Option<String>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
    },
    /// Linear span of VPS(Q, H) in its Plücker embedding.
    PluckerSpan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        quadric: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Also compute the span rank over the rationals.
        #[arg(long)]
        exact: bool,
        /// Write the spanning Plücker vectors as a matrix dump.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Hilbert function of the restricted quadrics (slow).
        #[arg(long)]
        stretch: bool,
    },
    /// A seeded polar simplex of q and its ideal.
    Sample {
        #[arg(long)]
        quadric: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run a named reproduction pipeline against pinned values.
    Reproduce {
        /// One of the known targets, or `all`.
        target: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Core(e),
        }
    }
}

type Run = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<GradedIdeal, Failure> {
    read_ideal(&read(path)?).map_err(|e| with_path(path, e))
}

fn load_quadric(path: &Path, n: Option<usize>) -> Result<Quadric, Failure> {
    read_quadric(&read(path)?, n).map_err(|e| with_path(path, e))
}

fn with_path(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Usage(format!("{}: {e}", path.display())),
        e => Failure::Core(e),
    }
}

// a closed pipe (`vps ... | head`) is not an error
fn put(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit(out: Output, text: String, value: Value) {
    match out {
        Output::Text => put(&text),
        Output::Json => put(&(serde_json::to_string_pretty(&value).expect("serializable") + "\n")),
    }
}

fn primes(g: &Global) -> Result<Vec<u64>, Failure> {
    match &g.primes {
        Some(s) => parse_primes(s).map_err(|e| Failure::Usage(e.to_string())),
        None => Ok(DEFAULT_PRIMES.to_vec()),
    }
}

fn json_only(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn run(cli: Cli) -> Run {
    let g = &cli.global;
    // reject a malformed prime list even where it goes unused
    primes(g)?;
    match cli.cmd {
        Cmd::Apolar { quadric, n, dmax } => {
            let q = load_quadric(&quadric, n)?;
            let i = apolar_ideal(q.form(), dmax)?;
            let text = write_ideal(&i);
            emit(g.output, text.clone(), json!({ "ideal": text }));
        }
        Cmd::Saturate { ideal } => {
            let s = saturate(&load_ideal(&ideal)?).minimalized();
            let text = write_ideal(&s);
            emit(g.output, text.clone(), json!({ "ideal": text }));
        }
        Cmd::Hilbert { ideal, dmax } => {
            let i = load_ideal(&ideal)?;
            let h = i.hilbert_function(dmax.unwrap_or_else(|| i.determinacy_bound()));
            emit(g.output, format!("{h}\n"), json!({ "hilbert": h.values() }));
        }
        Cmd::Limit { ideal, weights, dmax } => {
            let w = WeightVec::parse(&weights).map_err(|e| Failure::Usage(e.to_string()))?;
            let lim = weight_limit(&load_ideal(&ideal)?, &w, dmax)?.minimalized();
            let sat = saturate(&lim).minimalized();
            let (a, b) = (write_ideal(&lim), write_ideal(&sat));
            emit(g.output, format!("# limit\n{a}# saturation\n{b}"), json!({ "limit": a, "saturation": b }));
        }
        Cmd::Check { ideal, quadric } => {
            let i = load_ideal(&ideal)?;
            let q = load_quadric(&quadric, Some(i.nvars()))?;
            let v = check_vps(&i, &q)?;
            let value = json!({
                "in_vps": v.in_vps,
                "saturated": v.saturated,
                "sbl_necessary": v.sbl_necessary,
                "kri": v.kri,
                "line": v.line,
                "hilbert": v.hilbert,
            });
            emit(g.output, json_only(&value), value);
        }
        Cmd::Tangent { model, ideal, quadric, torus, preset } => {
            let i = load_ideal(&ideal)?;
            let w = match (torus, preset) {
                (Some(t), _) => Some(WeightVec::parse(&t).map_err(|e| Failure::Usage(e.to_string()))?),
                (None, Some(Preset::Sl2N4)) => Some(sl2_n4_torus()),
                (None, None) => None,
            };
            let report = match model {
                Model::Syz => {
                    let target = match quadric {
                        Some(p) => SyzTarget::Apolar(load_quadric(&p, Some(i.nvars()))?),
                        None => SyzTarget::Full,
                    };
                    syz_tangent(&i.piece(2), i.nvars(), &target, w.as_ref())?
                }
                Model::Hilb => hilb_tangent(&i, w.as_ref())?,
            };
            let value = json!({
                "dimension": report.dimension,
                "truncation_degree": report.truncation_degree,
                "weights": report.weights,
            });
            emit(g.output, json_only(&value), value);
        }
        Cmd::PluckerSpan { n, quadric, samples, exact, dump, stretch } => {
            let q = load_quadric(&quadric, Some(n))?;
            let ps = primes(g)?;
            let span = vps_span(&q, samples, g.seed, &ps)?;
            let mut value = serde_json::to_value(&span.report).expect("serializable");
            if exact {
                let rows = (0..samples as u64)
                    .map(|i| vps_sample(&q, g.seed.wrapping_add(i)).map(|p| p.coords))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut all = rows;
                all.extend(span.basis.iter().cloned());
                value["exact_projective_dimension"] = json!(exact_span(&all).dim() - 1);
            }
            if stretch {
                // VPS lives in Gr(C(n+1,2) − n, q^⊥_2)
                let m = n * (n + 1) / 2 - 1;
                let qs = plucker_quadric_space(m + 1 - n, m, g.seed, &ps)?;
                value["stretch_hilbert"] = json!(restricted_hilbert(&qs, &span.basis, 3)?);
            }
            if let Some(path) = dump {
                fs::write(&path, write_matrix(&span.basis))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            emit(g.output, json_only(&value), value);
        }
        Cmd::Sample { quadric, n } => {
            let q = load_quadric(&quadric, n)?;
            let s = polar_simplex_sample(&q, g.seed)?;
            let pts: Vec<Vec<String>> = s.points.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect();
            let w: Vec<String> = s.weights.iter().map(|x| x.to_string()).collect();
            let value = json!({ "points": pts, "weights": w, "certificate": s.certificate });
            emit(g.output, json_only(&value), value);
        }
        Cmd::Reproduce { target, samples } => {
            let cfg = ReproConfig { seed: g.seed, primes: primes(g)?, samples };
            let targets: Vec<&str> = if target == "all" {
                TARGETS.to_vec()
            } else if TARGETS.contains(&target.as_str()) {
                vec![target.as_str()]
            } else {
                return Err(Failure::Usage(format!("unknown target {target:?}; known: {}, all", TARGETS.join(", "))));
            };
            let mut ok = true;
            let mut reports = Vec::new();
            for t in targets {
                let r = reproduce(t, &cfg)?;
                ok &= r.pass;
                if g.output == Output::Text {
                    put(&r.render());
                }
                reports.push(r);
            }
            if g.output == Output::Json {
                put(&(serde_json::to_string_pretty(&reports).expect("serializable") + "\n"));
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(64)
        }
        Err(Failure::Core(e)) => {
            eprintln!("{e}");
            ExitCode::from(if matches!(e, Error::Unstable(_)) { 2 } else { 1 })
        }
    }
}
