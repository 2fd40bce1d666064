//! Subcommand implementations. Each returns the text to print and an exit
//! status; `main` only parses arguments and dispatches.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use gradalg::catalog;
use gradalg::galg::GradedAlgebra;
use gradalg::groups::{identify_with, Group, GroupElement, IdentifyOptions, Verdict};
use gradalg::grpalg::tilde_product;
use gradalg::linalg::{Field, Scalar};
use gradalg::morph::{check_weak_equivalence, equalizer, search_weak_equivalence, GradedMorphism, MonoMode, MonoVerdict, SearchOutcome};
use gradalg::universal::{pullback, regrade_along, universal_group};
use gradalg::witnesses::{self, Report};

use crate::format::{
    algebra_value, hom_value, parse_algebra, parse_algebra_unverified, parse_group_hom, parse_hom, read_file,
    render_algebra, render_value, FormatError,
};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    False = 1,
    InputError = 2,
    BudgetExceeded = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn new(text: String, status: Status) -> Output {
        Output { text, status }
    }

    fn verdict(text: String, holds: bool) -> Output {
        Output::new(text, if holds { Status::Success } else { Status::False })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Input(String),
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

pub fn load_algebra(path: &Path) -> Result<GradedAlgebra, CliError> {
    Ok(parse_algebra(&read_file(path)?)?)
}

pub fn load_hom(path: &Path) -> Result<GradedMorphism, CliError> {
    Ok(parse_hom(&read_file(path)?, path.parent())?)
}

fn label(group: &Group, g: &GroupElement) -> String {
    group.label(g)
}

fn vector(a: &GradedAlgebra, v: &[Scalar]) -> String {
    a.format_vector(v)
}

pub fn check(path: &Path) -> Result<Output, CliError> {
    let a = parse_algebra_unverified(&read_file(path)?)?;
    Ok(match a.verify_grading() {
        Ok(()) => Output::verdict(format!("grading verified: dimension {}, {} support elements\n", a.dim(), a.support().len()), true),
        Err(v) => Output::verdict(format!("grading violation: {v}\n"), false),
    })
}

pub fn support(path: &Path) -> Result<Output, CliError> {
    let a = load_algebra(path)?;
    let mut text = String::new();
    for g in a.support() {
        let labels: Vec<&str> = a.component_indices(&g).into_iter().map(|i| a.label(i)).collect();
        writeln!(text, "{}: {}", label(a.group(), &g), labels.join(", ")).unwrap();
    }
    Ok(Output::new(text, Status::Success))
}

pub fn pairs(path: &Path) -> Result<Output, CliError> {
    let a = load_algebra(path)?;
    let mut text = String::new();
    for (g, h) in a.pair_set() {
        writeln!(text, "({}, {})", label(a.group(), &g), label(a.group(), &h)).unwrap();
    }
    Ok(Output::new(text, Status::Success))
}

pub struct UniversalGroupArgs {
    pub simplify: bool,
    pub identify: bool,
    pub max_cosets: usize,
}

pub fn universal(path: &Path, args: &UniversalGroupArgs) -> Result<Output, CliError> {
    let a = load_algebra(path)?;
    let u = universal_group(&a);
    let p = &u.presentation;
    let mut text = String::new();
    writeln!(text, "generators: {}", p.generator_count()).unwrap();
    writeln!(text, "relators: {}", p.relators().len()).unwrap();
    writeln!(text, "presentation: {p}").unwrap();
    let mut status = Status::Success;
    if args.simplify || args.identify {
        let id = identify_with(
            p,
            IdentifyOptions {
                max_cosets: args.max_cosets,
                ..IdentifyOptions::default()
            },
        );
        if args.simplify {
            writeln!(text, "simplified: {}", id.simplified).unwrap();
        }
        if args.identify {
            writeln!(text, "verdict: {}", id.verdict).unwrap();
            if id.verdict == Verdict::Unknown {
                status = Status::BudgetExceeded;
            }
        }
    }
    Ok(Output::new(text, status))
}

fn psi_lines(phi: &GradedMorphism, text: &mut String) {
    let (g, h) = (phi.domain().group(), phi.codomain().group());
    for (x, y) in phi.psi() {
        writeln!(text, "  {} ↦ {}", label(g, x), label(h, y)).unwrap();
    }
}

pub fn weak_equiv(first: &Path, second: &Path, certificate: Option<&Path>) -> Result<Output, CliError> {
    let (a, b) = (load_algebra(first)?, load_algebra(second)?);
    let mut text = String::new();
    if let Some(cert) = certificate {
        let phi = load_hom(cert)?;
        if phi.domain() != &a || phi.codomain() != &b {
            return Err(input("certificate does not map the first algebra to the second"));
        }
        let verified = check_weak_equivalence(&phi).map_err(input)?.is_some();
        if verified {
            text.push_str("certificate verified\npsi:\n");
            psi_lines(&phi, &mut text);
        } else {
            text.push_str("certificate rejected: not a weak equivalence\n");
        }
        return Ok(Output::verdict(text, verified));
    }
    Ok(match search_weak_equivalence(&a, &b).map_err(input)? {
        SearchOutcome::Certificate(phi) => {
            text.push_str("certificate\n");
            for line in phi.describe() {
                writeln!(text, "  {line}").unwrap();
            }
            text.push_str("psi:\n");
            psi_lines(&phi, &mut text);
            Output::new(text, Status::Success)
        }
        SearchOutcome::None => Output::new("none\n".into(), Status::False),
        SearchOutcome::Unknown => Output::new("unknown\n".into(), Status::BudgetExceeded),
    })
}

pub fn equalizer_cmd(path: &Path, alpha: &Path, beta: &Path) -> Result<Output, CliError> {
    let a = load_algebra(path)?;
    let (alpha, beta) = (load_hom(alpha)?, load_hom(beta)?);
    if alpha.domain() != &a {
        return Err(input("the morphisms do not start at the given algebra"));
    }
    let eq = equalizer(&alpha, &beta).map_err(input)?;
    let doc = json!({
        "algebra": algebra_value(&eq.algebra),
        "inclusion": hom_value(&eq.inclusion),
    });
    Ok(Output::new(render_value(&doc), Status::Success))
}

pub fn mono(path: &Path) -> Result<Output, CliError> {
    let phi = load_hom(path)?;
    let verdict = phi.mono_check().map_err(input)?;
    let (a, b) = (phi.domain(), phi.codomain());
    let mut text = String::new();
    writeln!(text, "dim ker = {}", phi.kernel().dim()).unwrap();
    match verdict {
        MonoVerdict::Mono => {
            text.push_str("monomorphism\n");
            Ok(Output::verdict(text, true))
        }
        MonoVerdict::Collision { a: x, b: y } => {
            text.push_str("not a monomorphism\n");
            writeln!(text, "a = {}", vector(a, &x)).unwrap();
            writeln!(text, "b = {}", vector(a, &y)).unwrap();
            writeln!(text, "φ(a) = φ(b) = {}", vector(b, &phi.apply(&x))).unwrap();
            let r = phi.mono_refute(&x, &y, MonoMode::Plain).map_err(input)?;
            let kind = if r.lambda.source().is_unital() { "unital" } else { "non-unital" };
            writeln!(text, "λ: x ↦ {} on the {kind} polynomial algebra F[x]", vector(a, &r.lambda.images()[0])).unwrap();
            writeln!(text, "μ: x ↦ {} on the {kind} polynomial algebra F[x]", vector(a, &r.mu.images()[0])).unwrap();
            Ok(Output::verdict(text, false))
        }
    }
}

pub fn graded_injective(path: &Path) -> Result<Output, CliError> {
    let phi = load_hom(path)?;
    if !phi.is_graded() {
        return Ok(Output::verdict("not graded\n".into(), false));
    }
    Ok(match phi.graded_kernel_witness() {
        None => Output::verdict("graded injective\n".into(), true),
        Some(k) => Output::verdict(
            format!("not graded injective\nkernel witness: {}\n", vector(phi.domain(), &k)),
            false,
        ),
    })
}

pub fn regrade(path: &Path, hom: &Path) -> Result<Output, CliError> {
    let a = load_algebra(path)?;
    let phi = parse_group_hom(&read_file(hom)?)?;
    let u = regrade_along(&a, &phi).map_err(input)?;
    Ok(Output::new(render_algebra(&u), Status::Success))
}

pub fn pullback_cmd(path: &Path, hom: &Path) -> Result<Output, CliError> {
    let b = load_algebra(path)?;
    let phi = parse_group_hom(&read_file(hom)?)?;
    let k = pullback(&b, &phi).map_err(input)?;
    Ok(Output::new(render_algebra(&k.algebra), Status::Success))
}

pub fn tilde(field: Field, g: &Group, h: &Group) -> Result<Output, CliError> {
    let (Some(g), Some(h)) = (g.as_finite(), h.as_finite()) else {
        return Err(input("tilde-product needs finite groups"));
    };
    let t = tilde_product(field, g, h).map_err(input)?;
    let doc = json!({
        "algebra": algebra_value(&t.algebra),
        "pi1": hom_value(&t.pi1),
        "pi2": hom_value(&t.pi2),
    });
    Ok(Output::new(render_value(&doc), Status::Success))
}

fn report_value(r: &Report) -> Value {
    json!({
        "scenario": r.scenario,
        "field": r.field.to_string(),
        "passed": r.passed(),
        "assertions": r.assertions.iter().map(|a| json!({
            "description": a.description,
            "claim": a.claim,
            "passed": a.passed,
        })).collect::<Vec<_>>(),
    })
}

/// `names` empty means every scenario; `fields` empty means every field.
pub fn replay(names: &[String], fields: &[Field], as_json: bool) -> Result<Output, CliError> {
    let names: Vec<String> = if names.is_empty() {
        witnesses::SCENARIOS.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    let fields: &[Field] = if fields.is_empty() { &witnesses::FIELDS } else { fields };
    let mut reports = Vec::new();
    for name in &names {
        for &f in fields {
            reports.push(witnesses::run(name, f).map_err(input)?);
        }
    }
    let passed = reports.iter().all(Report::passed);
    let text = if as_json {
        render_value(&Value::Array(reports.iter().map(report_value).collect()))
    } else {
        let mut text: String = reports.iter().map(ToString::to_string).collect();
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(text, "{} reports, {failed} failed", reports.len()).unwrap();
        text
    };
    Ok(Output::verdict(text, passed))
}

pub fn catalog_cmd(name: Option<&str>, field: Field) -> Result<Output, CliError> {
    match name {
        None => Ok(Output::new(
            catalog::ALGEBRA_NAMES.iter().map(|n| format!("{n}\n")).collect(),
            Status::Success,
        )),
        Some(n) => {
            let a = catalog::algebra(n, field).ok_or_else(|| input(format!("unknown catalog entry {n}")))?;
            Ok(Output::new(render_algebra(&a), Status::Success))
        }
    }
}
