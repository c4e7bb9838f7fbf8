//! Implementations of the CLI subcommands. Each returns the text destined
//! for stdout, or a typed failure carrying the process exit code.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cohom1_core::sample::{rng_for, uniform_params};
use cohom1_core::{
    catalog_list, check_isometry, cohomogeneity_with_witness, commuting_identity_check,
    dense_open_experiment, group_element, nonequivalence_witness, orbit_count_experiment,
    orbit_label, orbit_sample, p_lambda_congruence_check, ActionClass, ActionSpec, IsoElement,
    KPrime, Subalgebra, VerificationReport, VerificationStatus, Verdict,
};

use crate::formats::{parse_subalgebra, write_csv, write_ply};

/// Typed command failure; the variant fixes the process exit code.
#[derive(Debug)]
pub enum CliFailure {
    /// Bad arguments or unparseable input file (exit 2).
    Usage(String),
    /// Input is a subalgebra but its action is not cohomogeneity one
    /// (exit 3). Carries the full report text.
    NotCohomogeneityOne(String),
    /// Input basis is not closed under the bracket (exit 4). Carries the
    /// full report text.
    NotASubalgebra(String),
    /// Output path cannot be created or written (exit 5).
    Unwritable(String),
    /// One or more verification checks failed (exit 1). Carries the full
    /// report text.
    ChecksFailed(String),
}

impl CliFailure {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliFailure::ChecksFailed(_) => 1,
            CliFailure::Usage(_) => 2,
            CliFailure::NotCohomogeneityOne(_) => 3,
            CliFailure::NotASubalgebra(_) => 4,
            CliFailure::Unwritable(_) => 5,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliFailure::Usage(m)
            | CliFailure::NotCohomogeneityOne(m)
            | CliFailure::NotASubalgebra(m)
            | CliFailure::Unwritable(m)
            | CliFailure::ChecksFailed(m) => m,
        }
    }
}

/// Output format for point clouds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CloudFormat {
    Csv,
    Ply,
}

fn usage(msg: impl Into<String>) -> CliFailure {
    CliFailure::Usage(msg.into())
}

/// Maps an action name (as printed by `catalog`) to its class. Matching is
/// case-insensitive.
fn parse_action_class(name: &str) -> Result<ActionClass, CliFailure> {
    let lower = name.to_ascii_lowercase();
    let fixed = [
        (ActionClass::R1, "r1"),
        (ActionClass::M1, "m1"),
        (ActionClass::W1, "w1"),
        (ActionClass::SO11, "so11"),
        (ActionClass::R2, "r2"),
        (ActionClass::M2, "m2"),
        (ActionClass::W2, "w2"),
        (ActionClass::KxRe3, "kxre3"),
        (ActionClass::AxRe1, "axre1"),
        (ActionClass::NxEll, "nxell"),
        (ActionClass::N1xEll, "n1xell"),
        (ActionClass::ALambdaEll, "alambdaell"),
        (ActionClass::SO21, "so21"),
        (ActionClass::AN, "an"),
        (ActionClass::SOn1, "son1"),
        (ActionClass::KprimeAN(KPrime::Trivial), "kprimean-trivial"),
        (ActionClass::KprimeAN(KPrime::Full), "kprimean-full"),
    ];
    for (class, token) in fixed {
        if lower == token {
            return Ok(class);
        }
    }
    if let Some(m) = lower.strip_prefix("kprimean-block") {
        let m: usize = m
            .parse()
            .map_err(|_| usage(format!("bad block size in action name {name:?}")))?;
        return Ok(ActionClass::KprimeAN(KPrime::Block(m)));
    }
    Err(usage(format!(
        "unknown action {name:?}; run `cohom1 catalog --dim <d>` for the available names"
    )))
}

fn default_dim(class: ActionClass) -> usize {
    match class {
        ActionClass::R1 | ActionClass::M1 | ActionClass::W1 | ActionClass::SO11 => 2,
        ActionClass::SOn1 | ActionClass::KprimeAN(_) => 4,
        _ => 3,
    }
}

/// Resolves an action name, optional family parameter, and optional
/// ambient dimension into a concrete catalog spec.
pub fn resolve_spec(
    action: &str,
    lambda: Option<f64>,
    dim: Option<usize>,
) -> Result<ActionSpec, CliFailure> {
    let class = parse_action_class(action)?;
    let dim = dim.unwrap_or_else(|| default_dim(class));
    if class.needs_lambda() {
        let l = lambda.ok_or_else(|| {
            usage("action ALambdaEll requires --lambda (use 0 for the undrifted boost family)")
        })?;
        ActionSpec::new(class, dim, Some(l)).map_err(|e| usage(format!("{e}")))
    } else {
        if lambda.is_some() {
            return Err(usage(format!(
                "--lambda only applies to ALambdaEll, not {}",
                class.name()
            )));
        }
        ActionSpec::new(class, dim, None).map_err(|e| usage(format!("{e}")))
    }
}

fn orbit_structure_note(class: ActionClass) -> &'static str {
    match class {
        ActionClass::R1 => "parallel spacelike lines",
        ActionClass::M1 => "parallel timelike lines",
        ActionClass::W1 => "parallel null lines",
        ActionClass::SO11 => "origin, four null rays, and hyperbola branches",
        ActionClass::R2 => "parallel spacelike planes",
        ActionClass::M2 => "parallel Lorentzian planes",
        ActionClass::W2 => "parallel degenerate planes",
        ActionClass::KxRe3 => "timelike axis and round cylinders",
        ActionClass::AxRe1 => "spacelike line, four half-planes, hyperbolic cylinders",
        ActionClass::NxEll => "null lines inside the degenerate plane, parallel planes off it",
        ActionClass::N1xEll => "parabolic ruled surfaces foliating space",
        ActionClass::ALambdaEll => {
            "exponential-graph leaves over the degenerate plane (lines and half-planes at 0)"
        }
        ActionClass::SO21 => "origin, cone halves, hyperbolic sheets, de Sitter quadrics",
        ActionClass::AN => "cone strata plus de Sitter halves split by the degenerate plane",
        ActionClass::SOn1 => "origin, cone halves, hyperbolic sheets, de Sitter quadrics",
        ActionClass::KprimeAN(_) => {
            "quadric strata split by the degenerate hyperplane; cylinder orbits on it"
        }
    }
}

/// `catalog --dim <d>`: table of the available actions.
pub fn cmd_catalog(dim: usize) -> Result<String, CliFailure> {
    let specs = catalog_list(dim).map_err(|e| usage(format!("{e}")))?;
    let mut rows: Vec<[String; 4]> = Vec::new();
    for s in &specs {
        let name = if s.class().needs_lambda() {
            String::from("ALambdaEll(lambda>=0)")
        } else {
            s.class().name()
        };
        let params = if s.class().needs_lambda() {
            String::from("lambda")
        } else {
            String::from("-")
        };
        rows.push([
            name,
            params,
            format!("{}", s.param_count()),
            String::from(orbit_structure_note(s.class())),
        ]);
    }
    let headers = ["NAME", "PARAM", "GENERATORS", "ORBIT STRUCTURE"];
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "actions on M^{dim} ({} classes)", rows.len());
    let _ = writeln!(out);
    let fmt_row = |cells: &[&str], widths: &[usize]| -> String {
        let mut line = String::new();
        for (i, (c, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                line.push_str(c);
            } else {
                let _ = write!(line, "{c:<w$}  ");
            }
        }
        line
    };
    let _ = writeln!(
        out,
        "{}",
        fmt_row(&headers, &widths)
    );
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(|c| c.as_str()).collect();
        let _ = writeln!(out, "{}", fmt_row(&cells, &widths));
    }
    Ok(out)
}

fn format_isometry(g: &IsoElement, indent: &str) -> String {
    // Negative zero prints as "-0"; normalize for the report.
    let show = |x: f64| format!("{}", if x == 0.0 { 0.0 } else { x });
    let d = g.ambient_dim();
    let mut out = String::new();
    let _ = writeln!(out, "{indent}linear:");
    for i in 0..d {
        let row: Vec<String> = (0..d).map(|j| show(g.linear().entry(i, j))).collect();
        let _ = writeln!(out, "{indent}  [{}]", row.join(", "));
    }
    let trans: Vec<String> = g.trans().coords().iter().map(|x| show(*x)).collect();
    let _ = writeln!(out, "{indent}translation: [{}]", trans.join(", "));
    out
}

/// `classify <file> [--tol t]`: reads a subalgebra file, classifies it, and
/// reports the conjugator chain. `tol` is the residual gate above which a
/// successful classification is still flagged as numerically suspect.
pub fn cmd_classify(path: &Path, tol: f64) -> Result<String, CliFailure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let h: Subalgebra = parse_subalgebra(&text).map_err(usage)?;

    let result = match h.ambient_dim() {
        2 => cohom1_core::classify_m2(&h),
        3 => cohom1_core::classify_m3(&h),
        d => {
            return Err(usage(format!(
                "classification is only available for ambient dimensions 2 and 3, got {d}"
            )))
        }
    }
    .map_err(|e| usage(format!("{e}")))?;

    let mut out = String::new();
    let _ = writeln!(out, "file: {}", path.display());
    match result.verdict {
        Verdict::Classified => {
            let _ = writeln!(out, "verdict: classified");
            let class = result.class.expect("classified result names a class");
            let _ = writeln!(out, "class: {}", class.name());
            if let Some(l) = result.lambda {
                let _ = writeln!(out, "lambda: {l}");
            }
            let _ = writeln!(out, "residual: {:e}", result.residual);
            let _ = writeln!(
                out,
                "outside identity component: {}",
                result.outside_identity_component
            );
            let _ = writeln!(out, "conjugators: {}", result.conjugators.len());
            for (i, g) in result.conjugators.iter().enumerate() {
                let _ = writeln!(out, "conjugator {} (applied {}):", i + 1, ordinal(i + 1));
                out.push_str(&format_isometry(g, "  "));
            }
            if result.conjugators.len() > 1 {
                let _ = writeln!(out, "composite:");
                out.push_str(&format_isometry(&result.composite(), "  "));
            }
            for note in &result.notes {
                let _ = writeln!(out, "note: {note}");
            }
            if result.residual > tol {
                let _ = writeln!(
                    out,
                    "warning: residual exceeds the requested tolerance {tol:e}"
                );
            }
            Ok(out)
        }
        Verdict::NotCohomogeneityOne => {
            let _ = writeln!(out, "verdict: not cohomogeneity one");
            for note in &result.notes {
                let _ = writeln!(out, "note: {note}");
            }
            Err(CliFailure::NotCohomogeneityOne(out))
        }
        Verdict::NotASubalgebra => {
            let _ = writeln!(out, "verdict: not a subalgebra");
            let _ = writeln!(out, "closure residual: {:e}", result.residual);
            for note in &result.notes {
                let _ = writeln!(out, "note: {note}");
            }
            Err(CliFailure::NotASubalgebra(out))
        }
    }
}

fn ordinal(i: usize) -> &'static str {
    match i {
        1 => "first",
        2 => "second",
        3 => "third",
        4 => "fourth",
        _ => "later",
    }
}

fn parse_point(text: &str) -> Result<Vec<f64>, CliFailure> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|e| usage(format!("bad coordinate {c:?} in --point: {e}")))
        })
        .collect()
}

/// `orbit`: samples the orbit through a base point and writes the cloud.
#[allow(clippy::too_many_arguments)]
pub fn cmd_orbit(
    action: &str,
    lambda: Option<f64>,
    point: &str,
    samples: usize,
    seed: u64,
    out_path: &Path,
    format: CloudFormat,
) -> Result<String, CliFailure> {
    let coords = parse_point(point)?;
    let dim = coords.len();
    let spec = resolve_spec(action, lambda, Some(dim))?;
    let base = cohom1_core::MinkVector::new(coords).map_err(|e| usage(format!("{e}")))?;

    let mut rng = rng_for(seed, 0x0b17);
    let mut rows = Vec::with_capacity(samples);
    for _ in 0..samples {
        let q = orbit_sample(&spec, &base, &mut rng, 3.0).map_err(|e| usage(format!("{e}")))?;
        let label = orbit_label(&spec, &q, 1e-9).map_err(|e| usage(format!("{e}")))?;
        rows.push((q, format!("{label}")));
    }

    let mut buffer: Vec<u8> = Vec::new();
    match format {
        CloudFormat::Csv => write_csv(&mut buffer, dim, &rows),
        CloudFormat::Ply => write_ply(&mut buffer, dim, &rows),
    }
    .expect("writing to memory cannot fail");
    fs::write(out_path, &buffer).map_err(|e| {
        CliFailure::Unwritable(format!("cannot write {}: {e}", out_path.display()))
    })?;

    Ok(format!(
        "wrote {} sample(s) of the {} orbit through {point} to {}\n",
        rows.len(),
        spec.name(),
        out_path.display()
    ))
}

/// `cohomogeneity`: estimates the orbit codimension by randomized rank.
pub fn cmd_cohomogeneity(
    action: &str,
    lambda: Option<f64>,
    dim: Option<usize>,
    trials: usize,
    seed: u64,
) -> Result<String, CliFailure> {
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let spec = resolve_spec(action, lambda, dim)?;
    let (c, witness) = cohomogeneity_with_witness(&spec, trials, seed, 1e-9)
        .map_err(|e| usage(format!("{e}")))?;
    let coords: Vec<String> = witness.coords().iter().map(|x| format!("{x}")).collect();
    let mut out = String::new();
    let _ = writeln!(out, "action: {} on M^{}", spec.name(), spec.ambient_dim());
    let _ = writeln!(out, "trials: {trials}");
    let _ = writeln!(out, "seed: {seed}");
    let _ = writeln!(out, "cohomogeneity: {c}");
    let _ = writeln!(out, "max-rank point: ({})", coords.join(", "));
    Ok(out)
}

/// Verification suite selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Equivalence,
    Denseopen,
    Counts,
}

fn push_reports(out: &mut String, reports: &[VerificationReport], all_pass: &mut bool) {
    for r in reports {
        let _ = writeln!(out, "{r}");
        if r.status != VerificationStatus::Pass {
            *all_pass = false;
        }
    }
}

fn identities_reports(trials: usize, seed: u64) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for lambda in [0.1, 0.5, 1.0, 2.0, 10.0] {
        reports.push(commuting_identity_check(lambda, trials, seed).expect("lambda > 0"));
    }
    for lambda in [0.5, 1.0, 2.0, 4.0] {
        for mu in [0.5, 1.0, 2.0, 4.0] {
            reports.push(
                p_lambda_congruence_check(lambda, mu, trials.clamp(1, 2000), seed)
                    .expect("positive parameters"),
            );
        }
    }
    reports.extend(isometry_reports(seed));
    reports
}

/// One aggregated interval-preservation report per catalog action: checks
/// random group elements of each, worst residual wins.
fn isometry_reports(seed: u64) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    let mut specs: Vec<ActionSpec> = Vec::new();
    for dim in [2usize, 3, 4] {
        specs.extend(catalog_list(dim).expect("supported dimensions"));
    }
    for (si, spec) in specs.iter().enumerate() {
        let mut rng = rng_for(seed, 0xa5 + si as u64);
        let mut worst = 0.0f64;
        let elements = 100;
        for _ in 0..elements {
            let params = uniform_params(&mut rng, spec.param_count(), 2.0);
            let g = group_element(spec, &params).expect("parameter count matches");
            let r = check_isometry(&g, 20, seed).expect("trials > 0");
            worst = worst.max(r.max_residual);
        }
        let tolerance = 1e-10;
        let status = if worst <= tolerance {
            VerificationStatus::Pass
        } else {
            VerificationStatus::Fail
        };
        reports.push(VerificationReport {
            name: format!("interval-preservation({})", spec.name()),
            status,
            max_residual: worst,
            tolerance,
            witness: None,
            trials: elements * 20,
            seed,
            notes: vec![format!("{elements} random group elements")],
        });
    }
    reports
}

fn equivalence_reports(lambdas: &[f64], seed: u64) -> (Vec<VerificationReport>, usize) {
    let mut reports = Vec::new();
    let mut pairs = 0;
    for &l in lambdas {
        for &m in lambdas {
            if (l - m).abs() > 0.0 {
                pairs += 1;
                reports.push(nonequivalence_witness(l, m, 201).expect("distinct parameters"));
            }
        }
    }
    let _ = seed;
    (reports, pairs)
}

fn denseopen_reports(trials: usize, seed: u64) -> Vec<VerificationReport> {
    [0.5, 1.0, 2.0]
        .iter()
        .map(|&r| dense_open_experiment(r, trials, seed).expect("positive radius"))
        .collect()
}

fn counts_reports(trials: usize, seed: u64) -> Vec<VerificationReport> {
    let mut specs: Vec<ActionSpec> = Vec::new();
    specs.extend(catalog_list(2).expect("dimension 2"));
    specs.extend(catalog_list(3).expect("dimension 3"));
    specs.push(ActionSpec::new(ActionClass::ALambdaEll, 3, Some(0.0)).expect("lambda 0"));
    specs
        .iter()
        .map(|s| orbit_count_experiment(s, trials, seed).expect("supported spec"))
        .collect()
}

/// `verify --suite <s>`: runs the selected verification checks.
pub fn cmd_verify(
    suite: Suite,
    seed: u64,
    trials: usize,
    lambdas: Option<&str>,
) -> Result<String, CliFailure> {
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let lambda_list: Vec<f64> = match lambdas {
        None => vec![0.5, 1.0, 2.0, 4.0],
        Some(text) => {
            let mut vals = Vec::new();
            for part in text.split(',') {
                let v: f64 = part
                    .trim()
                    .parse()
                    .map_err(|e| usage(format!("bad value {part:?} in --lambda: {e}")))?;
                if v <= 0.0 {
                    return Err(usage("equivalence comparisons need positive lambda values"));
                }
                vals.push(v);
            }
            vals
        }
    };

    let mut out = String::new();
    let mut all_pass = true;

    if matches!(suite, Suite::All | Suite::Identities) {
        let _ = writeln!(out, "== identities ==");
        push_reports(&mut out, &identities_reports(trials, seed), &mut all_pass);
    }
    if matches!(suite, Suite::All | Suite::Equivalence) {
        let _ = writeln!(out, "== equivalence ==");
        let (reports, pairs) = equivalence_reports(&lambda_list, seed);
        if pairs == 0 {
            let _ = writeln!(
                out,
                "skipped: no distinct parameter pairs among {lambda_list:?} (nothing to witness)"
            );
        } else {
            push_reports(&mut out, &reports, &mut all_pass);
        }
    }
    if matches!(suite, Suite::All | Suite::Denseopen) {
        let _ = writeln!(out, "== denseopen ==");
        push_reports(&mut out, &denseopen_reports(trials, seed), &mut all_pass);
    }
    if matches!(suite, Suite::All | Suite::Counts) {
        let _ = writeln!(out, "== counts ==");
        push_reports(&mut out, &counts_reports(trials, seed), &mut all_pass);
    }

    let _ = writeln!(out, "overall: {}", if all_pass { "PASS" } else { "FAIL" });
    if all_pass {
        Ok(out)
    } else {
        Err(CliFailure::ChecksFailed(out))
    }
}
