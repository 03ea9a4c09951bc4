use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use solenoid_nf::exactnum::Rational;
use solenoid_nf::frontend::{
    chua_pipeline, classical_nf_cubic, extract_coefficients, membership_relations, ChuaOutput,
    ChuaParams, CubicSystem, Envelope, Mode,
};
use solenoid_nf::liealg::{
    bracket, expand_cartesian, expand_cylindrical, expand_cylindrical_element, BasisIndex, Family,
    LieElement,
};
use solenoid_nf::normalform::{second_level_nf, unique_nf, NFInput, NFReport};
use solenoid_nf::polycalc::RatFunc3;
use solenoid_nf::representations::{
    hamiltonian_form, nonpotential_certificate, represent, Form, Part, PotentialSet,
    PotentialVerdict, VectorPotentialVariant,
};

#[derive(Parser)]
#[command(
    name = "solenoid-nf",
    version,
    about = "Exact normal forms for solenoidal Hopf-zero vector fields"
)]
struct Cli {
    /// Print cylindrical displays instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// JSON arguments accept inline text, `@path`, or `-` / nothing for stdin.
#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Cmd {
    /// Bracket of two elements.
    Bracket { left: String, right: String },
    /// Cartesian and cylindrical expansion of a basis element.
    Expand {
        #[arg(long, value_enum, ignore_case = true)]
        fam: Fam,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        k: i64,
    },
    /// Checks a property of an element.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        element: Option<String>,
    },
    /// Second-level (`2`) or unique (`inf`) normal form of an NFInput.
    Normalform {
        #[arg(long, value_enum, default_value = "inf")]
        level: Level,
        #[arg(long)]
        degree: Option<i64>,
        input: Option<String>,
    },
    /// Builds a representation of an element.
    Represent {
        #[arg(long, value_enum)]
        form: FormArg,
        #[arg(long, value_enum, default_value = "closed-form")]
        variant: Variant,
        element: Option<String>,
    },
    /// Membership relations and coefficients of a cubic Hopf-pitchfork system.
    ClassifyCubic { input: Option<String> },
    /// Modified Chua oscillator pipeline.
    Chua {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Rational,
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        mu1: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        mu2: Option<Rational>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fam {
    F,
    T,
    H,
    Tz2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Solenoidal,
    FirstIntegral,
    Nonpotential,
    Euler,
    Potential,
    Clebsch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    #[value(name = "2")]
    Second,
    Inf,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Hamiltonian,
    Euler,
    Potential,
    Clebsch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    ClosedForm,
    Constructive,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

enum CliError {
    /// Bad invocation or malformed input.
    Usage(String),
    /// Well-formed input outside the mathematical domain.
    Domain(String),
}

impl CliError {
    fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

type Res<T> = Result<T, CliError>;

fn read_source(arg: Option<&str>) -> Res<String> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(a) => match a.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("reading {path}: {e}"))),
            None => Ok(a.to_string()),
        },
    }
}

/// Parses JSON and names the offending field on failure.
fn parse<T: DeserializeOwned>(what: &str, text: &str) -> Res<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = match path.as_str() {
            "." => what.to_string(),
            p if p.starts_with('[') => format!("{what}{p}"),
            p => format!("{what}.{p}"),
        };
        CliError::Usage(format!("malformed JSON at `{field}`: {}", e.inner()))
    })
}

fn emit<T: Serialize>(body: T) -> Res<String> {
    serde_json::to_string_pretty(&Envelope::new(body))
        .map_err(|e| CliError::Domain(format!("serialization: {e}")))
}

fn family(f: Fam) -> Family {
    match f {
        Fam::F => Family::F,
        Fam::T => Family::T,
        Fam::H => Family::H,
        Fam::Tz2 => Family::TZ2,
    }
}

fn run(cli: Cli) -> Res<String> {
    let pretty = cli.pretty;
    match cli.cmd {
        Cmd::Bracket { left, right } => {
            let a: LieElement = parse("left", &read_source(Some(&left))?)?;
            let b: LieElement = parse("right", &read_source(Some(&right))?)?;
            let out = bracket(&a, &b).map_err(CliError::domain)?;
            if pretty {
                return Ok(format!(
                    "{out}\n{}",
                    expand_cylindrical_element(&out).pretty()
                ));
            }
            emit(json!({ "result": out }))
        }
        Cmd::Expand { fam, l, k } => {
            let idx = BasisIndex::new(family(fam), l, k).map_err(CliError::domain)?;
            let cyl = expand_cylindrical(&idx);
            if pretty {
                return Ok(cyl.pretty());
            }
            emit(
                json!({ "index": idx, "cartesian": expand_cartesian(&idx), "cylindrical": cyl, "display": cyl.pretty() }),
            )
        }
        Cmd::Verify { property, element } => verify(
            property,
            &parse("element", &read_source(element.as_deref())?)?,
            pretty,
        ),
        Cmd::Normalform {
            level,
            degree,
            input,
        } => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Input {
                series: LieElement,
                degree: Option<i64>,
            }
            let inp: Input = parse("input", &read_source(input.as_deref())?)?;
            let degree = degree.or(inp.degree).ok_or_else(|| {
                CliError::Usage("degree missing: pass --degree or an input `degree` field".into())
            })?;
            let nf_input = NFInput {
                series: inp.series,
                degree,
            };
            let report = match level {
                Level::Second => second_level_nf(&nf_input),
                Level::Inf => unique_nf(&nf_input),
            }
            .map_err(CliError::domain)?;
            if pretty {
                return Ok(pretty_report(&report));
            }
            emit(json!({ "report": report }))
        }
        Cmd::Represent {
            form,
            variant,
            element,
        } => {
            let e: LieElement = parse("element", &read_source(element.as_deref())?)?;
            let set = represent(&e, to_form(form, variant)).map_err(CliError::domain)?;
            if pretty {
                return Ok(pretty_set(&set));
            }
            emit(json!({ "representation": set }))
        }
        Cmd::ClassifyCubic { input } => {
            let sys: CubicSystem = parse("input", &read_source(input.as_deref())?)?;
            let membership = membership_relations(&sys);
            let coefficients = extract_coefficients(&sys);
            let nf = classical_nf_cubic(&sys);
            if pretty {
                return Ok(format!(
                    "in algebra: {}\nresiduals: {}, {}\na0 = {}, b0 = {}, a1 = {}, b1 = {}\nresonant: {}",
                    membership.holds,
                    membership.residuals[0],
                    membership.residuals[1],
                    coefficients.a0,
                    coefficients.b0,
                    coefficients.a1,
                    coefficients.b1,
                    expand_cylindrical_element(&nf.algebra_part).pretty()
                ));
            }
            emit(
                json!({ "membership": membership, "coefficients": coefficients, "classical_nf": nf }),
            )
        }
        Cmd::Chua {
            alpha,
            gamma,
            a,
            mu1,
            mu2,
            mode,
        } => {
            let mut p = ChuaParams::new(alpha, gamma, a);
            p.mu1 = mu1;
            p.mu2 = mu2;
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Float => Mode::Float,
            };
            let out = chua_pipeline(&p, mode).map_err(CliError::domain)?;
            if pretty {
                return Ok(pretty_chua(&out));
            }
            emit(json!({ "chua": out }))
        }
    }
}

fn to_form(f: FormArg, v: Variant) -> Form {
    match f {
        FormArg::Hamiltonian => Form::Hamiltonian,
        FormArg::Euler => Form::Euler,
        FormArg::Clebsch => Form::Clebsch,
        FormArg::Potential => Form::VectorPotential(match v {
            Variant::ClosedForm => VectorPotentialVariant::ClosedForm,
            Variant::Constructive => VectorPotentialVariant::Constructive,
        }),
    }
}

fn verify(property: Property, e: &LieElement, pretty: bool) -> Res<String> {
    if e.is_zero() {
        return Err(CliError::Domain("element is zero".into()));
    }
    let field = solenoid_nf::liealg::expand_element(e);
    let (name, message) = match property {
        Property::Solenoidal => {
            let div = field.divergence();
            if !div.is_zero() {
                return Err(CliError::Domain(format!("fail: divergence = {div}")));
            }
            ("solenoidal", "ok: divergence = 0".to_string())
        }
        Property::FirstIntegral => {
            let set = hamiltonian_form(e).map_err(CliError::domain)?;
            let h = match set.terms[0].part("H") {
                Some(Part::Bivar(h)) if !h.is_zero() => h.to_cartesian(),
                _ => solenoid_nf::polycalc::Poly3::x(),
            };
            let d = field.apply(&RatFunc3::from_poly(h.clone()));
            if !d.is_zero() {
                return Err(CliError::Domain(format!(
                    "fail: derivative of {h} along the field = {d}"
                )));
            }
            ("first-integral", format!("ok: {h} is conserved"))
        }
        Property::Nonpotential => {
            let cert = nonpotential_certificate(e).map_err(CliError::domain)?;
            match cert.verdict {
                PotentialVerdict::NonPotential => {
                    ("nonpotential", format!("ok: curl = {}", cert.curl))
                }
                PotentialVerdict::ExcludedNotHopfZero => {
                    return Err(CliError::Domain(
                        "excluded: not Hopf-zero (curl = 0)".into(),
                    ))
                }
                PotentialVerdict::Potential => {
                    return Err(CliError::Domain("fail: curl = 0".into()))
                }
            }
        }
        Property::Euler | Property::Potential | Property::Clebsch => {
            let (form, name) = match property {
                Property::Euler => (Form::Euler, "euler"),
                Property::Potential => (
                    Form::VectorPotential(VectorPotentialVariant::ClosedForm),
                    "potential",
                ),
                _ => (Form::Clebsch, "clebsch"),
            };
            represent(e, form).map_err(|err| CliError::Domain(format!("fail: {err}")))?;
            (
                name,
                "ok: representation recombines to the field".to_string(),
            )
        }
    };
    if pretty {
        return Ok(message);
    }
    emit(json!({ "property": name, "ok": true, "message": message }))
}

fn pretty_report(r: &NFReport) -> String {
    let mut s = format!(
        "{}\n{}",
        r.output,
        expand_cylindrical_element(&r.output).pretty()
    );
    if let Some(rr) = r.r {
        s += &format!("\nr = {rr}");
    }
    if let Some(ss) = r.s {
        s += &format!("\ns = {ss}");
    }
    for o in &r.obstructions {
        s += &format!(
            "\nobstruction: ({}){} at grade {}",
            o.coeff, o.index, o.grade
        );
    }
    s
}

fn pretty_set(set: &PotentialSet) -> String {
    let mut lines = Vec::new();
    for t in &set.terms {
        let parts: Vec<String> = t.parts.iter().map(|(n, p)| format!("{n} = {p}")).collect();
        lines.push(format!("({}) {}", t.coeff, parts.join(", ")));
    }
    for c in &set.conventions {
        lines.push(format!("note: {c}"));
    }
    lines.join("\n")
}

fn pretty_chua(out: &ChuaOutput) -> String {
    let v = serde_json::to_value(out).unwrap_or(Value::Null);
    let g = |p: &str| v.pointer(p).map(|x| x.to_string()).unwrap_or_default();
    format!(
        "omega0 = {}\nmu1 = {}, mu2 = {}\nin algebra: {} (residuals {})\na0 = {}, b0 = {}, a1 = {}, b1 = {}\nratios b0/a0, b1/a1 = {} (closed form {})",
        g("/constants/omega0/value"),
        g("/constants/mu1/value"),
        g("/constants/mu2/value"),
        g("/membership/holds"),
        g("/membership/residuals"),
        g("/coefficients/a0"),
        g("/coefficients/b0"),
        g("/coefficients/a1"),
        g("/coefficients/b1"),
        g("/closed_form/pipeline_ratios"),
        g("/closed_form/display_ratios"),
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
