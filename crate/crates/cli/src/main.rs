use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use coinv_core::rings::{RingSpec, Variant};
use coinv_core::verify::{artifact_bytes, hilbert_pair, run_suite, Suite};

mod emit;

use emit::{Format, Object};

#[derive(Parser)]
#[command(name = "coinv", version, about = "Generalized coinvariant algebras R_{n,k,r}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series from the closed form, optionally checked against Buchberger.
    Hilbert {
        #[command(flatten)]
        params: Params,
        /// h, p or classical.
        #[arg(long, default_value = "h")]
        variant: Variant,
        #[arg(long)]
        from_groebner: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite over a parameter grid.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory for the report and per-point artifacts.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Print an object attached to (n,k,r).
    Emit {
        #[arg(value_enum)]
        object: Object,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<coinv_core::Error> for Failure {
    fn from(e: coinv_core::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e)
    }
}

fn hilbert(params: Params, variant: Variant, from_groebner: bool, format: Format) -> Result<bool, Failure> {
    let spec = RingSpec::new(params.n, params.k, params.r, variant)?;
    let (closed, computed) = hilbert_pair(&spec, from_groebner)?;
    let equal = computed.as_ref().is_none_or(|c| c == &closed);
    match format {
        Format::Text => {
            println!("{closed}");
            if let Some(c) = &computed {
                println!("groebner: {c}");
                println!("equal: {equal}");
            }
        }
        Format::Csv => {
            println!("source,q_degree,coefficient");
            let mut sources = vec![("closed_form", &closed)];
            if let Some(c) = &computed {
                sources.push(("groebner", c));
            }
            for (name, p) in sources {
                for (d, c) in p.q_coefficients().iter().enumerate() {
                    println!("{name},{d},{c}");
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "n": spec.n,
                "k": spec.k,
                "r": spec.r,
                "variant": spec.variant.to_string(),
                "closed_form": closed.to_json(),
            });
            if let Some(c) = &computed {
                v["groebner"] = c.to_json();
                v["equal"] = json!(equal);
            }
            print!("{}", String::from_utf8_lossy(&artifact_bytes(&v)));
        }
    }
    Ok(equal)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: Suite,
    nmax: Option<usize>,
    kmax: Option<usize>,
    jobs: usize,
    format: Format,
    out: Option<PathBuf>,
    timing: bool,
) -> Result<bool, Failure> {
    let (dn, dk) = suite.default_bounds();
    let grid = suite.grid(nmax.unwrap_or(dn), kmax.unwrap_or(dk));
    let report = run_suite(suite, &grid, jobs)?;
    let (rendered, ext) = match format {
        Format::Text => {
            let mut s = report.to_text();
            if timing {
                s.push_str(&format!("elapsed: {} ms\n", report.elapsed_ms()));
            }
            (s, "txt")
        }
        Format::Csv => (report.to_csv(), "csv"),
        Format::Json => (
            String::from_utf8(artifact_bytes(&report.to_json(timing))).expect("JSON is UTF-8"),
            "json",
        ),
    };
    print!("{rendered}");
    if let Some(dir) = out {
        fs::create_dir_all(&dir)?;
        for p in &report.points {
            if let Some(a) = &p.artifact {
                fs::write(dir.join(p.artifact_name(suite)), artifact_bytes(a))?;
            }
        }
        fs::write(dir.join(format!("{suite}.report.{ext}")), rendered)?;
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Hilbert {
            params,
            variant,
            from_groebner,
            format,
        } => hilbert(params, variant, from_groebner, format),
        Command::Verify {
            suite,
            nmax,
            kmax,
            jobs,
            format,
            out,
            timing,
        } => verify(suite, nmax, kmax, jobs, format, out, timing),
        Command::Emit { object, params, format } => {
            let spec = RingSpec::mixed_h(params.n, params.k, params.r)?;
            print!("{}", emit::render(object, &spec, format)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
