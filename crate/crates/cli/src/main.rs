use clap::{Args, Parser, Subcommand};
use reye_core::error::Error;
use reye_core::report::{emit, read_web, Record};
use reye_core::suite::{self, SuiteConfig};
use reye_core::web::Web;
use reye_core::Exec;
use std::path::PathBuf;
use std::process::ExitCode;

/// Explicit geometry of a general web of quadrics in P^3.
#[derive(Parser)]
#[command(name = "reye", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// Seed for the generated web and every random draw.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Read the web from a JSON file instead of generating it.
    #[arg(long, global = true)]
    web: Option<PathBuf>,
    /// Certification tolerance for membership and rank checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Number of sampled Reye lines.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Run every batch on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Add wall-clock timings to the report (makes it non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a general web and write it as JSON.
    Generate,
    /// Find the ten nodes of the symmetroid.
    Nodes,
    /// Count rays through a point, rays in a plane and base points.
    ReyeCount,
    /// Sample Reye lines and write their Plücker coordinates as CSV.
    Sample,
    /// Certify bitangency of the pencils of sampled Reye lines.
    Bitangent,
    /// Ruling monodromy certificates.
    Monodromy,
    /// Degree of the fundamental map along one ruling.
    FanoDegree,
    /// Chow-ring computation of the Reye class.
    Chow,
    /// Run every experiment and write the report.
    FullSuite,
}

fn config(o: &Opts) -> SuiteConfig {
    SuiteConfig {
        seed: o.seed,
        samples: o.samples,
        tol: o.tol,
        exec: if o.sequential { Exec::Sequential } else { Exec::Parallel },
        timings: o.timings,
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::CountMismatch { .. } => 2,
        Error::Io(_) | Error::Parse(_) => 3,
        _ => 1,
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn load(o: &Opts, cfg: &SuiteConfig) -> Result<Web, Error> {
    let given = o.web.as_deref().map(read_web).transpose()?;
    Ok(suite::obtain_web(given, cfg)?.0)
}

fn report_failures(records: &[Record]) -> u8 {
    let mut code = 0;
    for r in records.iter().filter(|r| !r.pass) {
        eprintln!("FAIL {}: {}", r.name, r.claim);
        if let Some(e) = &r.error {
            eprintln!("  {e}");
        }
        code = 2;
    }
    code
}

fn records_out(o: &Opts, records: Vec<Record>) -> Result<u8, Error> {
    emit(&json(&records)?, o.out.as_deref())?;
    Ok(report_failures(&records))
}

fn run(cli: Cli) -> Result<u8, Error> {
    let o = &cli.opts;
    let cfg = config(o);
    match cli.command {
        Command::Generate => {
            let (w, _) = suite::obtain_web(None, &cfg)?;
            emit(&json(&w.to_file())?, o.out.as_deref())?;
            Ok(0)
        }
        Command::Nodes => {
            let w = load(o, &cfg)?;
            let seed = w.seed().unwrap_or(cfg.seed);
            let set = reye_core::nodes::find_nodes(&w, seed, cfg.exec)?;
            emit(&json(&set)?, o.out.as_deref())?;
            Ok(0)
        }
        Command::ReyeCount => {
            let w = load(o, &cfg)?;
            let (rays, data) = suite::rays_record(&w, &cfg);
            let base = suite::base_points_record(data.as_ref(), &cfg);
            let (plane, _) = suite::plane_record(&w, &cfg);
            records_out(o, vec![rays, base, plane])
        }
        Command::Sample => {
            let w = load(o, &cfg)?;
            let samples = reye_core::reye::sample_reye_lines(&w, cfg.seed, cfg.samples, cfg.exec)?;
            let lines: Vec<_> = samples.into_iter().map(|s| s.reye).collect();
            match &o.out {
                Some(p) => {
                    let f = std::fs::File::create(p)?;
                    reye_core::reye::write_reye_csv(&lines, f)?;
                }
                None => reye_core::reye::write_reye_csv(&lines, std::io::stdout().lock())?,
            }
            Ok(0)
        }
        Command::Bitangent => {
            let w = load(o, &cfg)?;
            let (rec, _) = suite::bitangency_record(&w, &cfg);
            records_out(o, vec![rec])
        }
        Command::Monodromy => {
            let w = load(o, &cfg)?;
            let samples = reye_core::reye::sample_reye_lines(&w, cfg.seed, 1, cfg.exec)?;
            let certs = suite::monodromy_certificates(&w, &samples, &cfg);
            let mut out = Vec::new();
            let mut code = 0;
            for (kind, c) in certs {
                match c {
                    Ok(c) => {
                        if c.swap != suite::expected_swap(kind) {
                            eprintln!("FAIL monodromy: unexpected verdict for {kind:?}");
                            code = 2;
                        }
                        out.push(serde_json::to_value(&c)?);
                    }
                    Err(e) => {
                        eprintln!("FAIL monodromy: {kind:?}: {e}");
                        code = code.max(error_code(&e));
                        out.push(serde_json::json!({"kind": kind, "error": e.to_string()}));
                    }
                }
            }
            emit(&json(&out)?, o.out.as_deref())?;
            Ok(code)
        }
        Command::FanoDegree => {
            let w = load(o, &cfg)?;
            records_out(o, vec![suite::fano_record(&w, &cfg)])
        }
        Command::Chow => {
            emit(&json(&reye_core::schubert::record_known_classes())?, o.out.as_deref())?;
            Ok(0)
        }
        Command::FullSuite => {
            let given = o.web.as_deref().map(read_web).transpose()?;
            let report = suite::full_suite(given, &cfg)?;
            emit(&report.to_json()?, o.out.as_deref())?;
            report_failures(&report.records);
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.opts.threads > 0 {
        reye_core::exec::set_threads(cli.opts.threads);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        let mismatch = Error::CountMismatch { what: "nodes".into(), expected: 10, found: 9 };
        assert_eq!(error_code(&mismatch), 2);
        assert_eq!(error_code(&Error::Io("gone".into())), 3);
        assert_eq!(error_code(&Error::Parse("bad".into())), 3);
        assert_eq!(error_code(&Error::NoConvergence { iterations: 5 }), 1);
    }

    #[test]
    fn global_flags_parse_after_subcommand() {
        let cli = Cli::try_parse_from(["reye", "nodes", "--seed", "9", "--threads", "2", "--tol", "1e-6"]).unwrap();
        assert_eq!(cli.opts.seed, 9);
        assert_eq!(cli.opts.threads, 2);
        assert_eq!(cli.opts.tol, 1e-6);
        assert!(matches!(cli.command, Command::Nodes));
    }
}
