//! Command implementations. Each returns a finished output plus the process
//! exit code: 0 success / pass, 1 usage, 2 computation error, 3 verification
//! failed. Errors bubble as `CmdError` so `main` can map them uniformly.

use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use algdyn::algebra::{analyze, Algebra};
use algdyn::degrees::{
    asymptotic_check, brute_force_degrees, dynamical_degree, theorem_a_predict, theorem_b_predict,
    AsymptoticConfig, DegreeSequence,
};
use algdyn::induced::{induce_monomial, induce_univariate, MonomialSpec, UniRationalFunction};
use algdyn::multipoly::AffineRationalMap;

use crate::parse::{parse_algebra, parse_matrix, parse_rat_literal, parse_ratfunc};
use crate::report::{fmt6, LambdaDoc, ProfileDoc, ReportDocument, SequenceDoc, VerdictDoc};

/// Command failure with its exit code.
#[derive(Debug)]
pub enum CmdError {
    /// Bad flags or unparsable inputs → exit 1.
    Usage(String),
    /// The mathematics failed (domain errors, non-convergence, …) → exit 2.
    Computation(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 1,
            CmdError::Computation(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Computation(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

fn computation(e: algdyn::Error) -> CmdError {
    CmdError::Computation(e.to_string())
}

/// Resolve `--algebra`: "-" reads the specification from stdin.
fn resolve_algebra(spec: &str) -> Result<(Algebra, String), CmdError> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read algebra from stdin: {e}")))?;
        buf.trim().to_string()
    } else {
        spec.to_string()
    };
    let algebra = parse_algebra(&text).map_err(|e| usage(format!("--algebra: {e}")))?;
    Ok((algebra, text))
}

/// Which induced map a command works on.
pub enum MapChoice {
    Univariate(UniRationalFunction, char, String),
    Monomial(algdyn::exactnum::IntMatrix, String),
}

fn resolve_map(phi: &Option<String>, monomial: &Option<String>) -> Result<MapChoice, CmdError> {
    match (phi, monomial) {
        (Some(p), None) => {
            let (f, var) = parse_ratfunc(p).map_err(|e| usage(format!("--phi: {e}")))?;
            Ok(MapChoice::Univariate(f, var, p.clone()))
        }
        (None, Some(m)) => {
            let a = parse_matrix(m).map_err(|e| usage(format!("--monomial: {e}")))?;
            Ok(MapChoice::Monomial(a, m.clone()))
        }
        _ => Err(usage("exactly one of --phi or --monomial is required")),
    }
}

fn induce_map(algebra: &Algebra, choice: &MapChoice) -> Result<AffineRationalMap, CmdError> {
    match choice {
        MapChoice::Univariate(f, _, _) => induce_univariate(algebra, f).map_err(computation),
        MapChoice::Monomial(a, _) => {
            let spec = MonomialSpec::new(a.clone(), algebra.clone()).map_err(computation)?;
            induce_monomial(&spec).map_err(computation)
        }
    }
}

fn record_map_input(report: &mut ReportDocument, choice: &MapChoice) {
    match choice {
        MapChoice::Univariate(_, _, raw) => report.input("phi", raw.clone()),
        MapChoice::Monomial(_, raw) => report.input("monomial", raw.clone()),
    }
}

pub struct Timings {
    enabled: bool,
    start: Instant,
    entries: BTreeMap<String, u128>,
}

impl Timings {
    pub fn new(enabled: bool) -> Self {
        Timings {
            enabled,
            start: Instant::now(),
            entries: BTreeMap::new(),
        }
    }

    pub fn mark(&mut self, label: &str) {
        if self.enabled {
            self.entries
                .insert(label.to_string(), self.start.elapsed().as_millis());
            self.start = Instant::now();
        }
    }

    pub fn finish(self, report: &mut ReportDocument) {
        if self.enabled {
            report.timings_ms = Some(self.entries);
        }
    }
}

// --- commands ---

pub fn run_analyze(
    algebra_spec: &str,
    seed: u64,
    samples: usize,
    timings: bool,
) -> Result<(String, i32), CmdError> {
    let mut t = Timings::new(timings);
    let (algebra, verbatim) = resolve_algebra(algebra_spec)?;
    let profile = analyze(&algebra, seed, samples).map_err(computation)?;
    t.mark("analyze");
    let mut report = ReportDocument::new("analyze");
    report.input("algebra", verbatim);
    report.input("seed", seed.to_string());
    report.input("samples", samples.to_string());
    report.profile = Some(ProfileDoc::from_profile(&profile));
    t.finish(&mut report);
    Ok((report.to_json(), 0))
}

pub fn run_induce(
    algebra_spec: &str,
    phi: &Option<String>,
    monomial: &Option<String>,
) -> Result<(String, i32), CmdError> {
    let (algebra, _) = resolve_algebra(algebra_spec)?;
    let choice = resolve_map(phi, monomial)?;
    let map = induce_map(&algebra, &choice)?;
    Ok((map.render(), 0))
}

fn sequence_params(iters: usize, budget: Option<usize>) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    params.insert("iters".to_string(), iters.to_string());
    if let Some(b) = budget {
        params.insert("term_budget".to_string(), b.to_string());
    }
    params.insert(
        "convention".to_string(),
        "deg_1 of the reduced projective form; homogenizer W is coordinate 0, so affine \
         polynomial maps gain one homogenization degree over their monomial norms"
            .to_string(),
    );
    params
}

fn measure(
    algebra: &Algebra,
    choice: &MapChoice,
    iters: usize,
    budget: usize,
) -> Result<DegreeSequence, CmdError> {
    let map = induce_map(algebra, choice)?;
    brute_force_degrees(&map, iters, budget).map_err(computation)
}

fn predict(
    algebra: &Algebra,
    choice: &MapChoice,
    p: usize,
    iters: usize,
    seed: u64,
    samples: usize,
    report: &mut ReportDocument,
) -> Result<DegreeSequence, CmdError> {
    match choice {
        MapChoice::Univariate(f, _, _) => {
            let gi = algebra
                .generic_invariants(seed, samples)
                .map_err(computation)?;
            report.input("seed", seed.to_string());
            report.input("samples", samples.to_string());
            report.input("generic_k", gi.k.to_string());
            report.input("generic_delta", gi.delta.to_string());
            theorem_a_predict(gi.k, f.deg(), p, iters).map_err(computation)
        }
        MapChoice::Monomial(a, _) => {
            let (_, m) = algebra.nilradical_and_m().map_err(computation)?;
            report.input("reduced_dim", m.to_string());
            theorem_b_predict(a, algebra.dim(), m, p, iters).map_err(computation)
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn run_degseq(
    algebra_spec: &str,
    phi: &Option<String>,
    monomial: &Option<String>,
    iters: usize,
    budget: usize,
    timings: bool,
) -> Result<(String, i32), CmdError> {
    let mut t = Timings::new(timings);
    let (algebra, verbatim) = resolve_algebra(algebra_spec)?;
    let choice = resolve_map(phi, monomial)?;
    let seq = measure(&algebra, &choice, iters, budget)?;
    t.mark("degseq");
    let mut report = ReportDocument::new("degseq");
    report.input("algebra", verbatim);
    report.input("iters", iters.to_string());
    report.input("seed", "0");
    record_map_input(&mut report, &choice);
    report.measurements.push(SequenceDoc::from_sequence(
        &seq,
        sequence_params(iters, Some(budget)),
    ));
    t.finish(&mut report);
    Ok((report.to_json(), 0))
}

#[allow(clippy::too_many_arguments)]
pub fn run_predict(
    algebra_spec: &str,
    phi: &Option<String>,
    monomial: &Option<String>,
    p: usize,
    iters: usize,
    seed: u64,
    samples: usize,
    timings: bool,
) -> Result<(String, i32), CmdError> {
    let mut t = Timings::new(timings);
    let (algebra, verbatim) = resolve_algebra(algebra_spec)?;
    let choice = resolve_map(phi, monomial)?;
    let mut report = ReportDocument::new("predict");
    report.input("algebra", verbatim);
    report.input("p", p.to_string());
    report.input("iters", iters.to_string());
    report.input("seed", seed.to_string());
    record_map_input(&mut report, &choice);
    let seq = predict(&algebra, &choice, p, iters, seed, samples, &mut report)?;
    t.mark("predict");
    report.predictions.push(SequenceDoc::from_sequence(
        &seq,
        sequence_params(iters, None),
    ));
    t.finish(&mut report);
    Ok((report.to_json(), 0))
}

#[allow(clippy::too_many_arguments)]
pub fn run_verify(
    algebra_spec: &str,
    phi: &Option<String>,
    monomial: &Option<String>,
    iters: usize,
    budget: usize,
    c_max: &Option<String>,
    slope_eps: Option<f64>,
    seed: u64,
    samples: usize,
    timings: bool,
) -> Result<(String, i32), CmdError> {
    let mut t = Timings::new(timings);
    let (algebra, verbatim) = resolve_algebra(algebra_spec)?;
    let choice = resolve_map(phi, monomial)?;
    let mut config = AsymptoticConfig::default();
    if let Some(raw) = c_max {
        config.c_max = parse_rat_literal(raw).map_err(|e| usage(format!("--c-max: {e}")))?;
    }
    if let Some(eps) = slope_eps {
        if !(eps > 0.0) {
            return Err(usage("--slope-eps must be positive"));
        }
        config.slope_eps = eps;
    }
    let mut report = ReportDocument::new("verify");
    report.input("algebra", verbatim);
    report.input("iters", iters.to_string());
    record_map_input(&mut report, &choice);

    let measured = measure(&algebra, &choice, iters, budget)?;
    t.mark("measure");
    let predicted = predict(
        &algebra,
        &choice,
        1,
        measured.len(),
        seed,
        samples,
        &mut report,
    )?;
    t.mark("predict");
    let outcome = asymptotic_check(&measured, &predicted, &config).map_err(computation)?;
    t.mark("check");

    report.measurements.push(SequenceDoc::from_sequence(
        &measured,
        sequence_params(iters, Some(budget)),
    ));
    report.predictions.push(SequenceDoc::from_sequence(
        &predicted,
        sequence_params(iters, None),
    ));
    report.verdicts.push(VerdictDoc::from_outcome(&outcome));
    t.finish(&mut report);
    let code = if outcome.pass { 0 } else { 3 };
    Ok((report.to_json(), code))
}

pub fn run_dyndeg(
    algebra_spec: &str,
    monomial: &str,
    p: usize,
    timings: bool,
) -> Result<(String, i32), CmdError> {
    let mut t = Timings::new(timings);
    let (algebra, verbatim) = resolve_algebra(algebra_spec)?;
    let a = parse_matrix(monomial).map_err(|e| usage(format!("--monomial: {e}")))?;
    let (_, m) = algebra.nilradical_and_m().map_err(computation)?;
    let lambda = dynamical_degree(&a, m, algebra.dim(), p).map_err(computation)?;
    t.mark("dyndeg");
    let mut report = ReportDocument::new("dyndeg");
    report.input("algebra", verbatim);
    report.input("monomial", monomial.to_string());
    report.input("p", p.to_string());
    report.input("reduced_dim", m.to_string());
    report.input("seed", "0");
    report.dynamical_degree = Some(LambdaDoc {
        p: p.to_string(),
        lambda: fmt6(lambda),
    });
    t.finish(&mut report);
    Ok((report.to_json(), 0))
}
