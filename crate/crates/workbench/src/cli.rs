//! The `koszul` command line.

use std::ffi::OsString;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use koszul_core::apolarity::{
    balla_search_verdict, hessian, inverse_system, theorem34_check, ApolarForm, DEFAULT_PAIR_ATTEMPTS,
};
use koszul_core::certificates::{
    caviglia_lift, monomial_filtration, search_flag, verify_filtration, verify_flag, verify_lg_lift_to,
    FiltrationRecord, FlagRecord, GroebnerFlag, KoszulFiltration, DEFAULT_FLAG_ATTEMPTS,
};
use koszul_core::groebner::{buchberger, quadratic_verdict, toric_ideal, QuotientRing};
use koszul_core::invariants::{
    codim, hilbert_series, koszul_probe, minimal_resolution, series_koszul_test, Subject, DEFAULT_D_MAX,
    DEFAULT_I_MAX,
};
use koszul_core::polyring::{
    generic_points, parse_polynomial, pinched_veronese, points_ideal, Ideal, LinearSpace, Monomial, Polynomial,
    Ring, TermOrder,
};
use koszul_core::scalars::{DenseMatrix, Field, FieldElem};
use koszul_core::{Bounds, Property, Witness};
use serde::Serialize;

use crate::corpus::{self, caviglia_order};
use crate::format::{parse_form_file, parse_ideal_file_with, parse_points, parse_polynomial_file, ParseError};
use crate::report::{emit_report, summary, Config, Report, Section, Timing};

#[derive(Debug, Parser)]
#[command(name = "koszul", version, about = "Decide, certify or probe Koszul-type properties of graded algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Coefficient field `q` or `fp:<p>`, overriding input files.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Term order: `lex`, `degrevlex`, `revlex-perm:<perm>` or `block:<sizes>`.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Truncation degree for series.
    #[arg(long, global = true, default_value_t = 12)]
    pub trunc: usize,
    /// Largest homological degree of resolutions.
    #[arg(long, global = true, default_value_t = DEFAULT_I_MAX)]
    pub imax: usize,
    /// Largest internal degree of resolutions.
    #[arg(long, global = true, default_value_t = DEFAULT_D_MAX)]
    pub dmax: u32,
    #[arg(long, global = true, env = "KOSZUL_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Budget for randomized searches.
    #[arg(long, global = true)]
    pub attempts: Option<usize>,
    /// Write the JSON report here and print a summary instead.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal file.
    #[arg(long)]
    pub ideal: PathBuf,
}

#[derive(Debug, Args)]
pub struct FormArg {
    /// File holding one homogeneous form.
    #[arg(long)]
    pub form: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb(IdealArg),
    /// Hilbert series through `--trunc`.
    Hilbert(IdealArg),
    /// Betti table of `K`, or of `R/(forms)` with `--modulo`.
    Betti {
        #[command(flatten)]
        input: IdealArg,
        /// Comma-separated linear forms.
        #[arg(long, value_delimiter = ',')]
        modulo: Vec<String>,
    },
    /// Linear-resolution probe, plus the series screen with `--series`.
    KoszulProbe {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long)]
        series: bool,
    },
    /// Verifies a Koszul filtration certificate.
    FiltrationVerify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Builds and verifies the variable filtration of a quadratic monomial ideal.
    FiltrationMonomial {
        #[command(flatten)]
        input: IdealArg,
        /// Also write the certificate here.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Verifies a Gröbner flag certificate.
    FlagVerify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Seeded search for a Gröbner flag.
    FlagSearch {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Searches coordinate changes and orders for a quadratic Gröbner basis.
    GquadSearch {
        #[command(flatten)]
        input: IdealArg,
        /// Seeded coordinate changes tried after the identity.
        #[arg(long, default_value_t = 5)]
        changes: usize,
    },
    /// Verifies a lift to a G-quadratic algebra by a regular sequence.
    LgVerify {
        #[command(flatten)]
        input: IdealArg,
        /// Ideal file of the lift.
        #[arg(long, required_unless_present = "caviglia", conflicts_with = "caviglia")]
        lift: Option<PathBuf>,
        /// Comma-separated linear forms of the regular sequence.
        #[arg(long, value_delimiter = ',', requires = "lift")]
        forms: Vec<String>,
        /// Use the lift `y_i^2 + q_i` of a complete intersection of quadrics.
        #[arg(long)]
        caviglia: bool,
    },
    /// Inverse system of a form.
    Apolar(FormArg),
    /// Hessian, its determinant and optionally its minor ideal.
    Hessian {
        #[command(flatten)]
        input: FormArg,
        #[arg(long)]
        minors: Option<usize>,
    },
    /// Hessian criterion for cubics in 3 or 4 variables.
    Theorem34 {
        #[command(flatten)]
        input: FormArg,
        /// Also search for a pair of linear forms giving a Koszul filtration.
        #[arg(long)]
        pair_search: bool,
    },
    /// Toric ideal of the monomials in a file.
    Toric {
        /// File in the ideal format whose lines are monomials.
        #[arg(long)]
        monomials: PathBuf,
    },
    /// Toric ideal of PV(n,d,s).
    PinchedVeronese {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: usize,
    },
    /// Ideal of points in projective space, with the Koszul screens.
    Points {
        /// One point per line.
        #[arg(long, required_unless_present = "generic", conflicts_with = "generic")]
        points: Option<PathBuf>,
        /// Number of seeded generic points.
        #[arg(long, requires = "dim")]
        generic: Option<usize>,
        /// Projective dimension of the generic points.
        #[arg(long)]
        dim: Option<usize>,
        /// Coordinate bound of the generic points.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        /// Also run the linear-resolution probe.
        #[arg(long)]
        probe: bool,
    },
    /// Runs corpus entries against their expectations.
    CorpusRun {
        #[arg(long)]
        entry: Option<String>,
        /// Include long-running entries.
        #[arg(long)]
        long: bool,
        /// Print entry names only.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {msg}", path.display())]
    Io { path: PathBuf, msg: String },
    #[error(transparent)]
    Core(#[from] koszul_core::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}

fn load_ideal(path: &Path, field: Option<Field>) -> CliResult<Ideal> {
    parse_ideal_file_with(&read(path)?, field)
        .map(|(_, i)| i)
        .map_err(|source| CliError::Parse {
            path: path.to_path_buf(),
            source,
        })
}

fn load_form(path: &Path, field: Option<Field>) -> CliResult<Polynomial> {
    parse_form_file(&read(path)?, field).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?).map_err(|e| {
        let text = e.to_string();
        let msg = text.rfind(" at line ").map_or(text.as_str(), |i| &text[..i]).to_string();
        CliError::Parse {
            path: path.to_path_buf(),
            source: ParseError {
                line: e.line(),
                col: e.column(),
                msg,
            },
        }
    })
}

fn save_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("records serialize");
    fs::write(path, text + "\n").map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        msg: e.to_string(),
    })
}

fn forms(ring: &Arc<Ring>, texts: &[String]) -> CliResult<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| parse_polynomial(ring, t).map_err(|e| CliError::Usage(format!("form `{t}`: {e}"))))
        .collect()
}

fn order_for(global: &Global, ring: &Arc<Ring>) -> CliResult<TermOrder> {
    match &global.order {
        Some(spec) => Ok(TermOrder::parse(spec, ring.names())?),
        None => Ok(ring.degrevlex()),
    }
}

fn ideal_section(label: &str, ideal: &Ideal) -> Section {
    let ring = ideal.ring();
    Section::Ideal {
        label: label.into(),
        field: ring.field().to_string(),
        vars: ring.names().to_vec(),
        generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
    }
}

fn matrix_section(label: impl Into<String>, m: &DenseMatrix) -> Section {
    Section::Matrix {
        label: label.into(),
        rows: (0..m.rows()).map(|r| m.row(r).iter().map(|c| c.to_string()).collect()).collect(),
    }
}

fn certificate_section<T: Serialize>(format: &str, record: &T) -> Section {
    Section::Certificate {
        format: format.into(),
        record: serde_json::to_value(record).expect("records serialize"),
    }
}

fn points_section(points: &[Vec<FieldElem>]) -> Section {
    Section::Points {
        coordinates: points.iter().map(|p| p.iter().map(|c| c.to_string()).collect()).collect(),
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(cli: &Cli, echo: &str) -> CliResult<Report> {
    let g = &cli.global;
    let mut config = Config {
        field: g.field.map(|f| f.to_string()),
        ..Config::default()
    };
    let start = Instant::now();
    let mut sections = Vec::new();
    let mut verdicts = Vec::new();
    match &cli.command {
        Command::Gb(input) => {
            config.input = Some(input.ideal.display().to_string());
            let ideal = load_ideal(&input.ideal, g.field)?;
            let order = order_for(g, ideal.ring())?;
            config.order = Some(order.to_string());
            let gb = buchberger(&ideal, &order, None)?;
            sections.push(ideal_section("input", &ideal));
            sections.push(Section::Basis {
                order: order.to_string(),
                elements: gb.elements().iter().map(|e| e.to_string()).collect(),
            });
        }
        Command::Hilbert(input) => {
            config.input = Some(input.ideal.display().to_string());
            config.trunc = Some(g.trunc);
            let ideal = load_ideal(&input.ideal, g.field)?;
            let h = hilbert_series(&QuotientRing::new(&ideal)?, g.trunc);
            sections.push(ideal_section("input", &ideal));
            sections.push(Section::Hilbert {
                coefficients: h.prefix().iter().map(|c| c.to_string()).collect(),
                numerator: h.numerator().iter().map(|c| c.to_string()).collect(),
                dim: h.dim(),
            });
        }
        Command::Betti { input, modulo } => {
            config.input = Some(input.ideal.display().to_string());
            config.imax = Some(g.imax);
            config.dmax = Some(g.dmax);
            let ideal = load_ideal(&input.ideal, g.field)?;
            let q = QuotientRing::new(&ideal)?;
            let subject = if modulo.is_empty() {
                Subject::ResidueField
            } else {
                Subject::Cyclic(LinearSpace::span(ideal.ring(), &forms(ideal.ring(), modulo)?)?)
            };
            let table = minimal_resolution(&q, &subject, g.imax, g.dmax)?;
            sections.push(ideal_section("input", &ideal));
            sections.push(Section::betti(&table));
        }
        Command::KoszulProbe { input, series } => {
            config.input = Some(input.ideal.display().to_string());
            config.imax = Some(g.imax);
            config.dmax = Some(g.dmax);
            let ideal = load_ideal(&input.ideal, g.field)?;
            let q = QuotientRing::new(&ideal)?;
            sections.push(ideal_section("input", &ideal));
            verdicts.push(koszul_probe(&q, g.imax, g.dmax)?);
            if *series {
                config.trunc = Some(g.trunc);
                verdicts.push(series_koszul_test(&q, g.trunc)?);
            }
        }
        Command::FiltrationVerify { certificate } => {
            config.input = Some(certificate.display().to_string());
            let record: FiltrationRecord = load_json(certificate)?;
            let filtration = KoszulFiltration::from_record(&record)?;
            sections.push(ideal_section("quotient", filtration.quotient().ideal()));
            verdicts.push(verify_filtration(&filtration)?);
        }
        Command::FiltrationMonomial { input, save } => {
            config.input = Some(input.ideal.display().to_string());
            let ideal = load_ideal(&input.ideal, g.field)?;
            let filtration = monomial_filtration(&QuotientRing::new(&ideal)?)?;
            let record = filtration.record();
            if let Some(path) = save {
                save_json(path, &record)?;
            }
            sections.push(ideal_section("input", &ideal));
            sections.push(certificate_section("filtration", &record));
            verdicts.push(verify_filtration(&filtration)?);
        }
        Command::FlagVerify { certificate } => {
            config.input = Some(certificate.display().to_string());
            let record: FlagRecord = load_json(certificate)?;
            let flag = GroebnerFlag::from_record(&record)?;
            sections.push(ideal_section("quotient", flag.quotient().ideal()));
            verdicts.push(verify_flag(&flag)?);
        }
        Command::FlagSearch { input, save } => {
            let attempts = g.attempts.unwrap_or(DEFAULT_FLAG_ATTEMPTS);
            config.input = Some(input.ideal.display().to_string());
            config.seed = Some(g.seed);
            config.attempts = Some(attempts);
            let ideal = load_ideal(&input.ideal, g.field)?;
            sections.push(ideal_section("input", &ideal));
            let search = search_flag(&QuotientRing::new(&ideal)?, g.seed, attempts)?;
            let bounds = Bounds {
                attempts: Some(attempts),
                seed: Some(g.seed),
                ..Bounds::default()
            };
            match &search.flag {
                Some(flag) => {
                    let record = flag.record();
                    if let Some(path) = save {
                        save_json(path, &record)?;
                    }
                    sections.push(certificate_section("flag", &record));
                    verdicts.push(
                        verify_flag(flag)?
                            .with_bounds(bounds)
                            .with_note(format!("found in attempt {}", search.attempts)),
                    );
                }
                None => verdicts.push(
                    koszul_core::Verdict::undetermined(
                        Property::GQuadratic,
                        Witness::SearchExhausted {
                            attempts: search.attempts,
                        },
                    )
                    .with_bounds(bounds),
                ),
            }
        }
        Command::GquadSearch { input, changes } => {
            config.input = Some(input.ideal.display().to_string());
            config.seed = Some(g.seed);
            let ideal = load_ideal(&input.ideal, g.field)?;
            let orders = match &g.order {
                Some(_) => vec![order_for(g, ideal.ring())?],
                None => vec![ideal.ring().degrevlex(), TermOrder::parse("lex", ideal.ring().names())?],
            };
            config.order = g.order.clone();
            sections.push(ideal_section("input", &ideal));
            verdicts.push(koszul_core::certificates::gquadratic_search(&ideal, &orders, *changes, g.seed)?);
        }
        Command::LgVerify {
            input,
            lift,
            forms: form_texts,
            caviglia,
        } => {
            config.input = Some(input.ideal.display().to_string());
            config.trunc = Some(g.trunc);
            let ideal = load_ideal(&input.ideal, g.field)?;
            let (lifted, lift_forms, order) = if *caviglia {
                let (lifted, lift_forms) = caviglia_lift(&ideal)?;
                let order = match &g.order {
                    Some(_) => order_for(g, lifted.ring())?,
                    None => caviglia_order(&lifted, ideal.ring().n())?,
                };
                (lifted, lift_forms, order)
            } else {
                let path = lift.as_ref().expect("clap requires --lift");
                let lifted = load_ideal(path, g.field)?;
                if form_texts.is_empty() {
                    return Err(CliError::Usage("--forms is required with --lift".into()));
                }
                let lift_forms = forms(lifted.ring(), form_texts)?;
                let order = order_for(g, lifted.ring())?;
                (lifted, lift_forms, order)
            };
            config.order = Some(order.to_string());
            sections.push(ideal_section("input", &ideal));
            sections.push(ideal_section("lift", &lifted));
            sections.push(Section::text(
                "forms",
                lift_forms.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", "),
            ));
            verdicts.push(verify_lg_lift_to(&ideal, &lifted, &lift_forms, &order, g.trunc)?);
        }
        Command::Apolar(input) => {
            config.input = Some(input.form.display().to_string());
            let f = load_form(&input.form, g.field)?;
            let apolar = ApolarForm::new(&f)?;
            let res = inverse_system(&f)?;
            sections.push(ideal_section("I_f", &res.ideal));
            sections.push(Section::Apolar {
                h_vector: res.h_vector.clone(),
                cone: koszul_core::apolarity::is_cone(&f)?,
            });
            for a in 1..apolar.degree() {
                sections.push(matrix_section(format!("catalecticant({a})"), apolar.catalecticant(a)));
            }
            verdicts.push(quadratic_verdict(&res.ideal)?);
        }
        Command::Hessian { input, minors } => {
            config.input = Some(input.form.display().to_string());
            let f = load_form(&input.form, g.field)?;
            let h = hessian(&f)?;
            sections.push(Section::Matrix {
                label: "hessian".into(),
                rows: h.entries().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
            });
            sections.push(Section::text("determinant", h.determinant().to_string()));
            if let Some(t) = minors {
                let m = h.minors_ideal(*t)?;
                sections.push(ideal_section(&format!("minors({t})"), &m));
                if !m.is_zero() {
                    sections.push(Section::text("codim", codim(&m)?.to_string()));
                }
            }
        }
        Command::Theorem34 { input, pair_search } => {
            config.input = Some(input.form.display().to_string());
            let f = load_form(&input.form, g.field)?;
            verdicts.push(theorem34_check(&f)?);
            if *pair_search {
                let attempts = g.attempts.unwrap_or(DEFAULT_PAIR_ATTEMPTS);
                config.seed = Some(g.seed);
                config.attempts = Some(attempts);
                verdicts.push(balla_search_verdict(&f, g.seed, attempts)?);
            }
        }
        Command::Toric { monomials } => {
            config.input = Some(monomials.display().to_string());
            let (desc, polys) = parse_polynomial_file(&read(monomials)?, g.field).map_err(|source| CliError::Parse {
                path: monomials.clone(),
                source,
            })?;
            let mut gens: Vec<Monomial> = Vec::new();
            for p in &polys {
                let mut terms = p.terms();
                match (terms.next(), terms.next()) {
                    (Some((m, c)), None) if c.is_one() => gens.push(m.clone()),
                    _ => return Err(CliError::Usage(format!("`{p}` is not a monic monomial"))),
                }
            }
            let ideal = toric_ideal(desc.field, &gens)?;
            sections.push(ideal_section("toric", &ideal));
            verdicts.push(quadratic_verdict(&ideal)?);
        }
        Command::PinchedVeronese { n, d, s } => {
            let field = g.field.unwrap_or(Field::Rational);
            config.field = Some(field.to_string());
            let ideal = toric_ideal(field, &pinched_veronese(*n, *d, *s)?)?;
            sections.push(ideal_section(&format!("PV({n},{d},{s})"), &ideal));
            verdicts.push(quadratic_verdict(&ideal)?);
        }
        Command::Points {
            points,
            generic,
            dim,
            bound,
            probe,
        } => {
            let field = g.field.unwrap_or(Field::Rational);
            config.field = Some(field.to_string());
            config.trunc = Some(g.trunc);
            let coords = match (points, generic) {
                (Some(path), _) => {
                    config.input = Some(path.display().to_string());
                    parse_points(&read(path)?, field).map_err(|source| CliError::Parse {
                        path: path.clone(),
                        source,
                    })?
                }
                (None, Some(count)) => {
                    let n = dim.expect("clap requires --dim") + 1;
                    config.seed = Some(g.seed);
                    generic_points(field, n, *count, g.seed, *bound)
                }
                (None, None) => unreachable!("clap requires --points or --generic"),
            };
            let ring = Ring::new(coords[0].len(), field)?;
            let ideal = points_ideal(&ring, &coords)?;
            let q = QuotientRing::new(&ideal)?;
            sections.push(points_section(&coords));
            sections.push(ideal_section("points", &ideal));
            verdicts.push(quadratic_verdict(&ideal)?);
            verdicts.push(series_koszul_test(&q, g.trunc)?);
            if *probe {
                config.imax = Some(g.imax);
                config.dmax = Some(g.dmax);
                verdicts.push(koszul_probe(&q, g.imax, g.dmax)?);
            }
        }
        Command::CorpusRun { entry, long, list } => {
            let field = g.field.unwrap_or(Field::Rational);
            config.field = Some(field.to_string());
            if *list {
                for e in corpus::corpus() {
                    let mark = if e.long_running { " (long-running)" } else { "" };
                    sections.push(Section::text(e.name, format!("{}{mark}", e.source)));
                }
            } else {
                let mut report = corpus::corpus_run(entry.as_deref(), field, *long, config)?;
                report.command = echo.to_string();
                report.timings.push(Timing {
                    label: "total".into(),
                    millis: start.elapsed().as_millis() as u64,
                });
                return Ok(report);
            }
        }
    }
    let mut report = Report::new(echo, config);
    report.verdicts = verdicts;
    report.sections = sections;
    report.timings.push(Timing {
        label: "total".into(),
        millis: start.elapsed().as_millis() as u64,
    });
    Ok(report)
}

/// What a run printed and its exit code.
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first), runs it and renders the outcome:
/// exit 0 when the command ran, 1 on input errors, 2 on internal failures or
/// failed corpus checks.
pub fn run(argv: impl IntoIterator<Item = OsString>) -> Run {
    let argv: Vec<OsString> = argv.into_iter().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Run { code, stdout: text, stderr: String::new() }
            } else {
                Run { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| execute(&cli, &echo)));
    let report = match outcome {
        Ok(Ok(report)) => report,
        Ok(Err(e)) => {
            return Run {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            return Run {
                code: 2,
                stdout: String::new(),
                stderr: format!("internal error: {msg}\n"),
            };
        }
    };
    let code = if report.checks_passed() { 0 } else { 2 };
    let json = emit_report(&report) + "\n";
    match &cli.global.json {
        Some(path) => match fs::write(path, json) {
            Ok(()) => Run {
                code,
                stdout: summary(&report),
                stderr: String::new(),
            },
            Err(e) => Run {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            },
        },
        None => Run {
            code,
            stdout: json,
            stderr: String::new(),
        },
    }
}
