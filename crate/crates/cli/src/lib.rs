//! Command-line driver. `run` parses arguments, executes one subcommand and
//! returns the process exit code: 0 pass, 1 mathematical failure, 2 usage or
//! parse error, 3 resource cap.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use skewpbw::report::{self, ReportDocument};
use skewpbw::scalar::parse_scalar;
use skewpbw::{catalogue, dsl, oracle, Error, Scalar};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "skewpbw", version, about = "Double Ore extensions and skew PBW extensions in two variables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Presentation file
    file: PathBuf,
    /// Override a declared parameter, e.g. `--param b=1/2`
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Consistency triple: sigma homomorphism, sigma-derivation, overlap
    Check(Input),
    /// Full classification report
    Classify(Input),
    /// Normal form of an element expression
    Mul {
        #[command(flatten)]
        input: Input,
        /// Expression such as `x2*x1 + t*x1`
        expr: String,
    },
    /// Hilbert series coefficients, optionally certified by the oracle
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long = "max-deg", value_name = "N")]
        max_deg: usize,
        /// Compare with brute-force dimensions
        #[arg(long)]
        oracle: bool,
        /// Oracle word cap per degree
        #[arg(long, default_value_t = oracle::DEFAULT_WORD_CAP)]
        cap: usize,
    },
    /// Built-in presentations
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Generator images of det sigma and its multiplicativity
    Detsigma(Input),
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List entries and their parameters
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an entry as a presentation file
    Show {
        name: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } => EXIT_RESOURCE,
        Error::Parse { .. } | Error::Constraint(_) | Error::UnknownExample(_) | Error::DescriptorMismatch { .. } => {
            EXIT_USAGE
        }
        Error::Refused(_) | Error::InconsistentPresentation(_) | Error::InconsistentMaps(_) => EXIT_FAIL,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

fn bindings(raw: &[String]) -> Result<BTreeMap<String, Scalar>, Failure> {
    let mut out = BTreeMap::new();
    for p in raw {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure(EXIT_USAGE, format!("--param expects K=V, got `{p}`")))?;
        let v = parse_scalar(v).ok_or_else(|| Failure(EXIT_USAGE, format!("`{v}` is not a rational number")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn load(input: &Input) -> Result<dsl::PresentationSource, Failure> {
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", input.file.display())))?;
    let b = bindings(&input.params)?;
    dsl::parse_presentation_with(&text, &b).map_err(|e| {
        let f = Failure::from(e);
        Failure(f.0, format!("{}: {}", input.file.display(), f.1))
    })
}

fn emit(out: &mut dyn Write, doc: &ReportDocument, json: bool) {
    let s = if json { doc.json_string() } else { doc.text.clone() };
    // Broken pipes are not worth a different exit code.
    let _ = out.write_all(s.as_bytes());
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Check(input) => {
            let src = load(&input)?;
            let (ok, doc) = report::check_report(&src.presentation);
            emit(out, &doc, input.json);
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Classify(input) => {
            let src = load(&input)?;
            let r = skewpbw::classify(&src.presentation);
            emit(out, &report::classification_report(&src.presentation, &r), input.json);
            Ok(EXIT_PASS)
        }
        Command::Mul { input, expr } => {
            let src = load(&input)?;
            let e = dsl::parse_element(&src.presentation, &expr).map_err(|e| match e {
                Error::Parse { line, col, msg } => Failure(EXIT_USAGE, format!("expression {line}:{col}: {msg}")),
                other => other.into(),
            })?;
            emit(out, &report::element_report(&src.presentation, &e), input.json);
            Ok(EXIT_PASS)
        }
        Command::Hilbert { input, max_deg, oracle: with_oracle, cap } => {
            let src = load(&input)?;
            let pres = &src.presentation;
            let closed = match oracle::hilbert_closed_form(pres, max_deg) {
                Ok(c) => Some(c),
                Err(Error::Refused(_)) if with_oracle => None,
                Err(Error::Refused(msg)) => {
                    return Err(Failure(EXIT_USAGE, format!("{msg} (pass --oracle)")));
                }
                Err(e) => return Err(e.into()),
            };
            let cert = if with_oracle {
                Some(oracle::pbw_freeness_check(pres, max_deg, cap)?)
            } else {
                None
            };
            emit(out, &report::hilbert_report(closed.as_deref(), cert.as_ref()), input.json);
            Ok(match &cert {
                Some(c) if !c.passed() => EXIT_FAIL,
                _ => EXIT_PASS,
            })
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { json } => {
                emit(out, &report::catalogue_list_report(&catalogue::list()), json);
                Ok(EXIT_PASS)
            }
            CatalogAction::Show { name, params } => {
                let ex = catalogue::get_example(&name, &bindings(&params)?)?;
                let _ = out.write_all(catalogue_file(&ex).as_bytes());
                Ok(EXIT_PASS)
            }
        },
        Command::Detsigma(input) => {
            let src = load(&input)?;
            let r = skewpbw::det_sigma_endo(&src.presentation)?;
            emit(out, &report::det_sigma_report(&src.presentation, &r), input.json);
            Ok(if r.multiplicative() { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// A catalogue entry as a presentation file, with its description, bindings
/// and notes as comments.
pub fn catalogue_file(ex: &catalogue::Example) -> String {
    let mut s = format!("# {}: {}\n", ex.name, ex.description);
    if !ex.bindings.is_empty() {
        let b: Vec<String> = ex
            .bindings
            .iter()
            .map(|(k, v)| format!("{k}={}", skewpbw::scalar::fmt_scalar(v)))
            .collect();
        s.push_str(&format!("# bindings: {}\n", b.join(" ")));
    }
    for n in &ex.notes {
        s.push_str(&format!("# {n}\n"));
    }
    s.push_str(&dsl::print_presentation(&ex.presentation));
    s
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
