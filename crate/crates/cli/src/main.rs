use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use lkrep_core::density::{run_experiment, write_samples_csv, ExperimentConfig};
use lkrep_core::forms::{definiteness_scan, invariant_form, is_definite, write_scan_csv};
use lkrep_core::lie::{enumerate_irreps_below, is_asymmetric, weyl_dimension, Diagram, DynkinLabeling};
use lkrep_core::numeric::CMatrix;
use lkrep_core::reps::{check_braid_relations, rep_of_word, NumericGenerators};
use lkrep_core::spectra::{eigen_multiset, lk_generator_spectrum, EigMultiset};
use lkrep_core::verify::{run_all, VerifyOptions};
use lkrep_core::{parse_braid, Error, LaurentPoly2, PolyMatrix, RepKind};

/// Lawrence-Krammer and Burau representations of braid groups.
#[derive(Parser)]
#[command(name = "lkrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Representation matrices.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Eigenvalue multisets.
    #[command(subcommand)]
    Spectra(SpectraCmd),
    /// Invariant Hermitian forms.
    #[command(subcommand)]
    Form(FormCmd),
    /// Dimensions of irreducible representations of simple Lie algebras.
    #[command(subcommand)]
    Dims(DimsCmd),
    /// Stabilized-trace sampling over conjugacy classes.
    #[command(subcommand)]
    Density(DensityCmd),
    /// The acceptance checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

/// Complex parameter: `RE,IM`, `exp:THETA` for e^{i THETA}, or
/// `-exp:THETA` for -e^{i THETA}.
#[derive(Args, Clone)]
struct Params {
    /// e.g. `exp:0.005` or `0.99,0.01`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    q: Option<Complex64>,
    /// e.g. `-exp:0.1`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    t: Option<Complex64>,
}

impl Params {
    fn both(&self) -> Option<(Complex64, Complex64)> {
        Some((self.q?, self.t?))
    }

    fn require(&self) -> Result<(Complex64, Complex64), Error> {
        self.both()
            .ok_or_else(|| Error::Invalid("both --q and --t are required".into()))
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) if r.starts_with("exp:") => (-1.0, r),
        _ => (1.0, s),
    };
    if let Some(th) = rest.strip_prefix("exp:") {
        let th: f64 = th.parse().map_err(|_| format!("bad angle in `{s}`"))?;
        return Ok(Complex64::from_polar(sign, th));
    }
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM or exp:THETA, got `{s}`"))?;
    let re: f64 = re.trim().parse().map_err(|_| format!("bad real part in `{s}`"))?;
    let im: f64 = im.trim().parse().map_err(|_| format!("bad imaginary part in `{s}`"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Subcommand)]
enum RepCmd {
    /// Print the matrix of a braid word as JSON.
    ///
    /// Example: lkrep rep dump --kind lk --n 3 --word "1 -2"
    Dump {
        /// lk, burau or perm
        #[arg(long)]
        kind: RepKind,
        #[arg(long)]
        n: usize,
        /// Signed generator indices, e.g. "1 -2 1".
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        #[command(flatten)]
        params: Params,
    },
    /// Verify every braid relation exactly.
    ///
    /// Example: lkrep rep check-relations --n 4
    CheckRelations {
        #[arg(long)]
        n: usize,
        /// Restrict to one kind (default: burau and lk).
        #[arg(long)]
        kind: Option<RepKind>,
    },
}

#[derive(Subcommand)]
enum SpectraCmd {
    /// Spectrum of ρ_n(σ_1): closed form against the computed eigenvalues.
    ///
    /// Example: lkrep spectra gen --n 4 --q exp:0.7 --t exp:-2.2
    Gen {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
    /// Spectrum of a braid word.
    ///
    /// Example: lkrep spectra word --n 3 --word "1 2" --q exp:0.005 --t -exp:0.1
    Word {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value = "lk")]
        kind: RepKind,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FormCmd {
    /// Solve for the invariant Hermitian form.
    ///
    /// Example: lkrep form solve --n 3 --q exp:0.005 --t -exp:0.1
    Solve {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
        /// Also print the Gram matrix.
        #[arg(long)]
        gram: bool,
    },
    /// Scan definiteness over t = -e^{iθ_t}, q = e^{i r θ_t}; CSV output.
    ///
    /// Example: lkrep form scan --n 3 --theta-t 0.1,1 --ratio 0.05,0.5
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        theta_t: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        ratio: Vec<f64>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DimsCmd {
    /// Dimension of one irreducible representation.
    ///
    /// Example: lkrep dims eval --diagram E6 --labels 1,0,0,0,0,0
    Eval {
        /// A<r>, D<r> or E6
        #[arg(long)]
        diagram: Diagram,
        /// Comma-separated Dynkin labels.
        #[arg(long)]
        labels: String,
        /// Print labeling and symmetry along with the dimension.
        #[arg(long)]
        verbose: bool,
    },
    /// All irreducible representations up to a dimension bound, as CSV.
    ///
    /// Example: lkrep dims enumerate --diagram D5 --bound 21 --asymmetric
    Enumerate {
        #[arg(long)]
        diagram: Diagram,
        #[arg(long)]
        bound: u128,
        /// Keep only labelings not fixed by the diagram symmetry.
        #[arg(long)]
        asymmetric: bool,
    },
}

#[derive(Subcommand)]
enum DensityCmd {
    /// Run a sampling experiment from a JSON config.
    ///
    /// Example: lkrep density run --config cfg.json
    Run {
        #[arg(long)]
        config: PathBuf,
        /// CSV destination, overriding the config's output_path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every acceptance check.
    ///
    /// Example: lkrep verify all --n-max 5
    All {
        /// Largest strand count used by the checks.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*).map_err(Error::from)?
    };
}

/// A command outcome: `Ok(false)` is a mathematical failure.
type Outcome = Result<bool, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rep(c) => rep(c),
        Command::Spectra(c) => spectra(c),
        Command::Form(c) => form(c),
        Command::Dims(c) => dims(c),
        Command::Density(c) => density(c),
        Command::Verify(c) => verify(c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::StrandMismatch { .. }
            | Error::OutOfRange { .. }
            | Error::UnsupportedDiagram(_)
            | Error::InvalidLabeling(_)
            | Error::InvalidFamily(_)
            | Error::Invalid(_)
            | Error::NotUnitModulus { .. }
    )
}

fn int_json(c: String) -> Value {
    match c.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(c),
    }
}

fn poly_json(p: &LaurentPoly2) -> Value {
    Value::Array(
        p.to_triples()
            .into_iter()
            .map(|(dq, dt, c)| json!([dq, dt, int_json(c.to_string())]))
            .collect(),
    )
}

fn exact_json(m: &PolyMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| poly_json(&m[(r, c)])).collect()))
            .collect(),
    )
}

fn numeric_json(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| json!([m[(r, c)].re, m[(r, c)].im])).collect()))
            .collect(),
    )
}

fn rep(c: RepCmd) -> Outcome {
    match c {
        RepCmd::Dump {
            kind,
            n,
            word,
            params,
        } => {
            let w = parse_braid(&word, n)?;
            let exact = rep_of_word(kind, &w)?;
            let mut out = json!({
                "kind": kind.to_string(),
                "n": n,
                "word": w.to_signed(),
                "basis": exact.basis,
                "labels": exact.basis.labels(),
            });
            match params.both() {
                Some((q, t)) => {
                    out["exact"] = json!(false);
                    out["q"] = json!([q.re, q.im]);
                    out["t"] = json!([t.re, t.im]);
                    out["entries"] = numeric_json(&exact.matrix.eval(q, t)?);
                }
                None => {
                    out["exact"] = json!(true);
                    out["entries"] = exact_json(&exact.matrix);
                }
            }
            out!("{}", serde_json::to_string_pretty(&out).map_err(Error::from)?);
            Ok(true)
        }
        RepCmd::CheckRelations { n, kind } => {
            let kinds = match kind {
                Some(k) => vec![k],
                None => vec![RepKind::Burau, RepKind::Lk],
            };
            let mut all = true;
            for k in kinds {
                for r in check_braid_relations(k, n)? {
                    out!("{k} n={n}: {} ... {}", r.relation, if r.holds { "ok" } else { "FAILED" });
                    all &= r.holds;
                }
            }
            out!("{}", if all { "all relations hold" } else { "some relations fail" });
            Ok(all)
        }
    }
}

fn print_multiset(label: &str, e: &EigMultiset, json: bool) -> Result<(), Error> {
    if json {
        out!("{}", json!({ "label": label, "values": e.to_json() }));
    } else {
        out!("{label}: {e}");
    }
    Ok(())
}

fn spectra(c: SpectraCmd) -> Outcome {
    match c {
        SpectraCmd::Gen { n, params, json } => {
            let (q, t) = params.require()?;
            let closed = lk_generator_spectrum(n, q, t);
            let m = NumericGenerators::new(RepKind::Lk, n, q, t)?.word(&parse_braid("1", n)?)?;
            let computed = eigen_multiset(&m, 1e-7);
            let agree = computed.approx_eq(&closed, 1e-9);
            print_multiset("closed form", &closed, json)?;
            print_multiset("computed", &computed, json)?;
            if json {
                out!("{}", json!({ "agree": agree }));
            } else {
                out!("agree: {agree}");
            }
            Ok(agree)
        }
        SpectraCmd::Word {
            n,
            word,
            kind,
            params,
            json,
        } => {
            let (q, t) = params.require()?;
            let w = parse_braid(&word, n)?;
            let m = NumericGenerators::new(kind, n, q, t)?.word(&w)?;
            print_multiset(&format!("{kind}({w})"), &eigen_multiset(&m, 1e-7), json)?;
            Ok(true)
        }
    }
}

fn output_writer(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn form(c: FormCmd) -> Outcome {
    match c {
        FormCmd::Solve { n, params, gram } => {
            let (q, t) = params.require()?;
            let f = invariant_form(n, q, t)?;
            let (definite, min_eig) = is_definite(&f);
            let mut out = json!({
                "n": n,
                "q": [q.re, q.im],
                "t": [t.re, t.im],
                "residual": f.residual,
                "nullspace_dim": f.nullspace_dim,
                "definite": definite,
                "min_eig": min_eig,
            });
            if gram {
                out["gram"] = numeric_json(&f.gram);
            }
            out!("{}", serde_json::to_string_pretty(&out).map_err(Error::from)?);
            Ok(true)
        }
        FormCmd::Scan {
            n,
            theta_t,
            ratio,
            output,
        } => {
            let rows = definiteness_scan(n, &theta_t, &ratio)?;
            write_scan_csv(&rows, output_writer(&output)?)?;
            Ok(true)
        }
    }
}

fn dims(c: DimsCmd) -> Outcome {
    match c {
        DimsCmd::Eval {
            diagram,
            labels,
            verbose,
        } => {
            let l = DynkinLabeling::parse(diagram, &labels)?;
            let d = weyl_dimension(&l)?;
            if verbose {
                out!("labeling,dimension,asymmetric");
                out!("{l},{d},{}", is_asymmetric(&l));
            } else {
                out!("{d}");
            }
            Ok(true)
        }
        DimsCmd::Enumerate {
            diagram,
            bound,
            asymmetric,
        } => {
            let found = enumerate_irreps_below(diagram, bound, asymmetric)?;
            let mut out = io::stdout().lock();
            writeln!(out, "diagram,labels,dimension,asymmetric").map_err(Error::from)?;
            for (l, d) in found {
                writeln!(out, "{diagram},\"{}\",{d},{}", l.labels_string(), is_asymmetric(&l))
                    .map_err(Error::from)?;
            }
            Ok(true)
        }
    }
}

fn density(c: DensityCmd) -> Outcome {
    match c {
        DensityCmd::Run { config, output } => {
            let cfg = ExperimentConfig::load(&config)?;
            let run = run_experiment(&cfg)?;
            let path = output.or_else(|| cfg.output_path.as_ref().map(PathBuf::from));
            let report = serde_json::to_string_pretty(&run.report).map_err(Error::from)?;
            match path {
                Some(p) => {
                    write_samples_csv(&run.samples, BufWriter::new(File::create(&p)?))?;
                    out!("{report}");
                }
                None => {
                    write_samples_csv(&run.samples, io::stdout().lock())?;
                    eprintln!("{report}");
                }
            }
            Ok(true)
        }
    }
}

fn verify(c: VerifyCmd) -> Outcome {
    match c {
        VerifyCmd::All { n_max } => {
            if n_max < 3 {
                return Err(Error::Invalid("--n-max must be at least 3".into()));
            }
            let results = run_all(VerifyOptions { n_max });
            for r in &results {
                out!("{}", r.line());
                for n in &r.notes {
                    out!("       note: {n}");
                }
            }
            let passed = results.iter().filter(|r| r.passed).count();
            out!("{passed} of {} criteria passed", results.len());
            Ok(passed == results.len())
        }
    }
}
