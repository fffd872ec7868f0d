//! Subcommand dispatch and report assembly.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;
use serde_json::{json, Value};
use symqsl::bounds::{
    hamiltonian_speed_limit, optimize_symmetry, sigma_max_estimate, unitary_speed_limit, BoundReport, ChebyshevFilter,
    DeltaSource, Projection,
};
use symqsl::lie::{
    commutant_basis, default_rank_tolerance, lie_closure, quadratic_symmetry_basis, ClosureError, Symmetry,
    SymmetryKind, SymmetrySearch,
};
use symqsl::matcore::{ComplexMatrix, HermitianMatrix};
use symqsl::models::{
    coupled_qubit_model, duhamel_check, hopping_chain_model, rydberg_chain_model, syk_control_system, syk_model,
    ModelBundle, PulseSchedule, RydbergParams, Target,
};
use symqsl::perturb::Perturbation;

use crate::problem::{load_problem, Kind, Method, Options, Problem};
use crate::{CliError, InputError};

const DEFAULT_DEGREE: usize = 64;
const EXACT_MAX_DIM: usize = 64;
const RYDBERG_CHEBYSHEV_DEGREE: usize = 40_000;
const RYDBERG_EXACT_MAX_ATOMS: usize = 6;
const DUHAMEL_SLACK: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "symqsl", version, about = "Symmetry-based lower bounds on quantum control time")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: GlobalFlags,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalFlags {
    #[arg(long, global = true, value_enum)]
    pub method: Option<Method>,
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    #[arg(long = "sigma-min", global = true)]
    pub sigma_min: Option<f64>,
    #[arg(long = "sigma-max", global = true)]
    pub sigma_max: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub kind: Option<Kind>,
    /// Random starts for the symmetry optimizer.
    #[arg(long = "optimize-symmetry", global = true, value_name = "ITERS")]
    pub optimize_symmetry: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Rank tolerance for symmetry discovery.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Suppress the human summary on standard error.
    #[arg(long = "json-only", global = true)]
    pub json_only: bool,
}

impl GlobalFlags {
    fn options(&self) -> Options {
        Options {
            kind: self.kind,
            method: self.method,
            degree: self.degree,
            sigma_min: self.sigma_min,
            sigma_max: self.sigma_max,
            optimize_symmetry: self.optimize_symmetry,
            seed: self.seed,
            tol: self.tol,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List linear and quadratic symmetry bases of the controls.
    Symmetries { file: PathBuf },
    /// Lower bound for the target in a problem file.
    Bound {
        #[arg(value_enum)]
        target: BoundTarget,
        file: PathBuf,
    },
    /// Built-in physical examples.
    Reproduce(ReproduceArgs),
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundTarget {
    Unitary,
    Hamiltonian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Example {
    Cnot,
    Swap,
    Rydberg,
    Syk,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub example: Example,
    /// Sites (swap), atoms (rydberg) or Majoranas (syk).
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Coupling of the cnot example.
    #[arg(long)]
    pub g: Option<f64>,
    /// Hopping (swap) or Ising coupling (rydberg).
    #[arg(long = "J")]
    pub j: Option<f64>,
    /// Strength of the quadratic SYK term.
    #[arg(long)]
    pub mu: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Random-schedule check of `‖U₁(T) − U₂(T)‖ ≤ T‖ΔH‖`.
    Duhamel {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

/// JSON report written to standard output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetries: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chosen_symmetry: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport<f64>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub references: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Value>,
    pub warnings: Vec<String>,
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            symmetries: None,
            chosen_symmetry: None,
            bound: None,
            references: BTreeMap::new(),
            results: None,
            warnings: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    fn summary(&self) -> String {
        let mut lines = vec![format!("symqsl {}", self.command)];
        if let Some(b) = &self.bound {
            lines.push(format!(
                "  bound_time = {:.10} ({}, projection {})",
                b.bound_time, b.theorem, b.projection_method
            ));
        }
        if let Some(s) = &self.chosen_symmetry {
            lines.push(format!("  symmetry: {}", s["note"].as_str().unwrap_or("")));
        }
        for (k, v) in &self.references {
            lines.push(format!("  {k} = {v:.10}"));
        }
        if let Some(r) = &self.results {
            if let Some(v) = r.get("violations") {
                lines.push(format!("  violations: {v}"));
            }
            if let Some(v) = r.get("linear_dimension") {
                lines.push(format!("  linear commutant dimension: {v}"));
            }
            if let Some(v) = r.get("quadratic_dimension") {
                lines.push(format!("  quadratic symmetry dimension: {v}"));
            }
            if let Some(v) = r.get("dla_dimension") {
                lines.push(format!("  dynamical Lie algebra dimension: {v}"));
            }
        }
        for w in &self.warnings {
            lines.push(format!("  warning: {w}"));
        }
        lines.join("\n")
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run_command<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let json_only = cli.flags.json_only;
    let start = Instant::now();
    match execute(&cli) {
        Ok((mut report, code)) => {
            report
                .timings
                .insert("total_seconds".into(), start.elapsed().as_secs_f64());
            let text = serde_json::to_string_pretty(&report).expect("reports serialize");
            let _ = writeln!(out, "{text}");
            if !json_only {
                let _ = writeln!(err, "{}", report.summary());
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(Report, i32), CliError> {
    match &cli.command {
        Command::Symmetries { file } => symmetries(&load_problem(file)?, &cli.flags).map(|r| (r, 0)),
        Command::Bound { target, file } => bound(*target, &load_problem(file)?, &cli.flags).map(|r| (r, 0)),
        Command::Reproduce(args) => reproduce(args, &cli.flags).map(|r| (r, 0)),
        Command::Verify {
            check: VerifyCommand::Duhamel { file, trials },
        } => verify_duhamel(&load_problem(file)?, *trials, &cli.flags),
    }
}

fn dense_json(m: &ComplexMatrix<f64>) -> Value {
    Value::Array(
        m.row_iter()
            .map(|row| Value::Array(row.iter().map(|z| json!([z.re, z.im])).collect()))
            .collect(),
    )
}

fn search(tol: Option<f64>, traceless: bool) -> Result<SymmetrySearch<f64>, InputError> {
    let tol = tol.unwrap_or_else(default_rank_tolerance);
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(InputError::Usage(format!("`tol` must be positive, got {tol}")));
    }
    Ok(SymmetrySearch {
        tol,
        traceless,
        ..SymmetrySearch::default()
    })
}

fn inputs(problem: &Problem, options: &Options) -> Value {
    let mut v = serde_json::to_value(&problem.spec).expect("problem specs serialize");
    v["options"] = serde_json::to_value(options).expect("options serialize");
    v["resolved_dimension"] = json!(problem.dim);
    v
}

const MAX_LISTED_ENTRIES: usize = 4096;

fn describe(s: &Symmetry<f64>, index: usize) -> Value {
    let mut v = json!({
        "index": index,
        "kind": s.kind,
        "note": s.note,
        "trace": s.matrix.trace(),
        "frobenius_norm": s.frobenius_norm(),
        "sigma_min": s.sigma_min,
    });
    let d = s.matrix.dim();
    if d * d <= MAX_LISTED_ENTRIES {
        v["matrix"] = dense_json(s.matrix.matrix());
    }
    v
}

fn symmetries(problem: &Problem, flags: &GlobalFlags) -> Result<Report, CliError> {
    let options = problem.spec.options.overridden_by(&flags.options());
    let mut report = Report::new("symmetries", inputs(problem, &options));
    let opts = search(options.tol, false)?;
    let controls = &problem.system.controls;

    let linear = commutant_basis(controls, &opts)?;
    let mut listing = json!({
        "linear": linear.iter().enumerate().map(|(k, s)| describe(s, k)).collect::<Vec<_>>(),
    });
    let mut results = json!({ "linear_dimension": linear.len() });

    match quadratic_symmetry_basis(controls, &opts) {
        Ok(q) => {
            results["quadratic_dimension"] = json!(q.len());
            listing["quadratic"] = json!(q.iter().enumerate().map(|(k, s)| describe(s, k)).collect::<Vec<_>>());
        }
        Err(e @ symqsl::Error::DimensionCap { .. }) => {
            report.warnings.push(format!("quadratic symmetries skipped: {e}"));
        }
        Err(e) => return Err(e.into()),
    }

    let d = problem.dim;
    match lie_closure(&problem.system.generators(), d * d, opts.tol) {
        Ok(algebra) => {
            results["dla_dimension"] = json!(algebra.len());
            results["center_dimension"] = json!(algebra.center_dimension()?);
        }
        Err(ClosureError::Truncated(partial)) => {
            results["dla_dimension"] = json!(partial.len());
            report.warnings.push("Lie closure truncated before reaching a fixed point".into());
        }
        Err(ClosureError::Invalid(e)) => return Err(e.into()),
    }
    report.symmetries = Some(listing);
    report.results = Some(results);
    Ok(report)
}

fn projection_for(
    h_s: &HermitianMatrix<f64>,
    kind: SymmetryKind,
    dim: usize,
    options: &Options,
) -> Result<Projection<f64>, InputError> {
    let method = options
        .method
        .unwrap_or(if dim <= EXACT_MAX_DIM { Method::Exact } else { Method::Chebyshev });
    Ok(match method {
        Method::Exact => Projection::Exact { tau: None },
        Method::Commutator => Projection::Commutator,
        Method::Chebyshev => {
            let sigma_min = options.sigma_min.ok_or_else(|| {
                InputError::Usage("the Chebyshev method needs a spectral lower estimate (--sigma-min)".into())
            })?;
            let sigma_max = options
                .sigma_max
                .unwrap_or_else(|| sigma_max_estimate(h_s.frobenius_norm(), kind));
            let degree = options.degree.unwrap_or(DEFAULT_DEGREE);
            Projection::Chebyshev(
                ChebyshevFilter::new(degree, sigma_min, sigma_max).map_err(|e| InputError::Usage(e.to_string()))?,
            )
        }
    })
}

/// Evaluates the theorem matching `target` for one candidate symmetry.
fn evaluate(
    problem: &Problem,
    target: &Target<f64>,
    s: &Symmetry<f64>,
    projection: &Projection<f64>,
) -> symqsl::Result<BoundReport<f64>> {
    let restored;
    let delta = match &problem.perturbation {
        Some(m) => {
            restored = Perturbation::from_matrix(s, &problem.system.drift, m.clone())?;
            DeltaSource::Perturbation(&restored)
        }
        None => DeltaSource::Drift(&problem.system.drift),
    };
    match target {
        Target::Unitary(u) => unitary_speed_limit(u, s, delta),
        Target::Hamiltonian(h) => hamiltonian_speed_limit(h, s, delta, projection),
    }
}

fn bound(which: BoundTarget, problem: &Problem, flags: &GlobalFlags) -> Result<Report, CliError> {
    let options = problem.spec.options.overridden_by(&flags.options());
    let mut report = Report::new(
        match which {
            BoundTarget::Unitary => "bound unitary",
            BoundTarget::Hamiltonian => "bound hamiltonian",
        },
        inputs(problem, &options),
    );
    let matches = matches!(
        (which, &problem.target),
        (BoundTarget::Unitary, Target::Unitary(_)) | (BoundTarget::Hamiltonian, Target::Hamiltonian(_))
    );
    if !matches {
        return Err(InputError::Usage("the problem file's target does not match the requested bound".into()).into());
    }

    let opts = search(options.tol, true)?;
    let controls = &problem.system.controls;
    let linear = match options.kind {
        Some(Kind::Quadratic) => Vec::new(),
        _ => commutant_basis(controls, &opts)?,
    };
    let (kind, basis) = match options.kind {
        Some(Kind::Linear) => (SymmetryKind::Linear, linear),
        None if !linear.is_empty() => (SymmetryKind::Linear, linear),
        _ => (SymmetryKind::Quadratic, quadratic_symmetry_basis(controls, &opts)?),
    };
    if basis.is_empty() {
        return Err(symqsl::Error::Degenerate(format!("the controls have no nontrivial {kind} symmetry")).into());
    }
    report.symmetries = Some(json!({ "kind": kind, "count": basis.len() + 1 }));

    let projection = match &problem.target {
        Target::Hamiltonian(h) => projection_for(h, kind, problem.dim, &options)?,
        Target::Unitary(_) => Projection::Exact { tau: None },
    };

    let (symmetry, selection) = match options.optimize_symmetry {
        Some(iterations) => {
            let best = optimize_symmetry(
                &basis,
                |s| evaluate(problem, &problem.target, s, &projection).map(|r| r.bound_time),
                iterations,
                options.seed.unwrap_or(0),
            )?;
            let symmetry = best.symmetry.clone().traceless();
            (symmetry, json!({ "method": "optimized", "evaluations": best.evaluations, "coefficients": best.coefficients }))
        }
        None => {
            let mut best: Option<(usize, f64)> = None;
            let mut last_error = None;
            for (k, s) in basis.iter().enumerate() {
                match evaluate(problem, &problem.target, s, &projection) {
                    Ok(r) if best.is_none_or(|(_, v)| r.bound_time > v) => best = Some((k, r.bound_time)),
                    Ok(_) => {}
                    Err(e) => last_error = Some(e),
                }
            }
            let (k, _) = match (best, last_error) {
                (Some(b), _) => b,
                (None, Some(e)) => return Err(e.into()),
                (None, None) => unreachable!("basis is nonempty"),
            };
            (basis[k].clone(), json!({ "method": "best_basis_element", "index": k }))
        }
    };
    let result = evaluate(problem, &problem.target, &symmetry, &projection)?;
    let mut chosen = describe(&symmetry, 0);
    chosen["selection"] = selection;
    chosen["perturbation"] = json!(if problem.perturbation.is_some() { "supplied" } else { "pseudoinverse" });
    if let Some(obj) = chosen.as_object_mut() {
        obj.remove("index");
    }
    report.warnings.extend(result.warnings.iter().cloned());
    report.chosen_symmetry = Some(chosen);
    report.bound = Some(result);
    Ok(report)
}

fn model_symmetry(m: &ModelBundle<f64>) -> Value {
    let mut v = describe(&m.symmetry, 0);
    if let Some(obj) = v.as_object_mut() {
        obj.remove("index");
        obj.remove("matrix");
    }
    v
}

fn positive(value: Option<f64>, default: f64, what: &str) -> Result<f64, InputError> {
    let v = value.unwrap_or(default);
    if !(v > 0.0) || !v.is_finite() {
        return Err(InputError::Usage(format!("{what} must be positive, got {v}")));
    }
    Ok(v)
}

fn reproduce(args: &ReproduceArgs, flags: &GlobalFlags) -> Result<Report, CliError> {
    let options = flags.options();
    let mut echo = json!({
        "example": args.example,
        "options": serde_json::to_value(&options).expect("options serialize"),
    });
    let mut report;
    match args.example {
        Example::Cnot => {
            let g = positive(args.g, 1.0, "--g")?;
            echo["g"] = json!(g);
            report = Report::new("reproduce cnot", echo);
            let m = coupled_qubit_model(g)?;
            report.bound = Some(m.evaluate(&Projection::Exact { tau: None })?);
            report.chosen_symmetry = Some(model_symmetry(&m));
            report.references = m.references.clone();
        }
        Example::Swap => {
            let n = args.n.unwrap_or(3);
            let j = positive(args.j, 1.0, "--J")?;
            echo["N"] = json!(n);
            echo["J"] = json!(j);
            report = Report::new("reproduce swap", echo);
            let m = hopping_chain_model(n, j).map_err(|e| InputError::Usage(e.to_string()))?;
            let Target::Unitary(u) = &m.target else { unreachable!("the chain targets a unitary") };
            let gap_bound = m.reference("gap_bound").expect("chain models carry a gap bound");
            let b = unitary_speed_limit(u, &m.symmetry, DeltaSource::OperatorNorm(gap_bound))?;
            let exact_gap = m.evaluate(&Projection::Exact { tau: None })?;
            report.references = m.references.clone();
            report.references.insert("bound_with_exact_gap".into(), exact_gap.bound_time);
            report.bound = Some(b);
            report.chosen_symmetry = Some(model_symmetry(&m));
        }
        Example::Rydberg => {
            let n = args.n.unwrap_or(3);
            let mut p = RydbergParams::<f64>::default();
            if let Some(j) = args.j {
                p.j = j;
            }
            p.sigma_min_estimate = flags.sigma_min;
            echo["N"] = json!(n);
            echo["params"] = json!({ "c": p.c, "a": p.a, "j": p.j, "g": p.g, "h": p.h });
            report = Report::new("reproduce rydberg", echo);
            let m = rydberg_chain_model(n, &p).map_err(|e| InputError::Usage(e.to_string()))?;
            let (lo, hi) = m.spectral_estimates.expect("rydberg models carry spectral estimates");
            let method = flags
                .method
                .unwrap_or(if n <= RYDBERG_EXACT_MAX_ATOMS { Method::Exact } else { Method::Chebyshev });
            let projection = match method {
                Method::Exact => Projection::Exact { tau: None },
                Method::Commutator => Projection::Commutator,
                Method::Chebyshev => Projection::Chebyshev(
                    ChebyshevFilter::new(
                        flags.degree.unwrap_or(RYDBERG_CHEBYSHEV_DEGREE),
                        lo,
                        flags.sigma_max.unwrap_or(hi),
                    )
                    .map_err(|e| InputError::Usage(e.to_string()))?,
                ),
            };
            let b = m.evaluate(&projection)?;
            report.warnings.extend(b.warnings.iter().cloned());
            report.bound = Some(b);
            report.references = m.references.clone();
            report.chosen_symmetry = Some(model_symmetry(&m));
        }
        Example::Syk => {
            let n = args.n.unwrap_or(6);
            let seed = flags.seed.unwrap_or(0);
            let mu = args.mu.unwrap_or(0.5);
            let iterations = flags.optimize_symmetry.unwrap_or(4);
            echo["N"] = json!(n);
            echo["seed"] = json!(seed);
            echo["mu"] = json!(mu);
            report = Report::new("reproduce syk", echo);
            let h = syk_model(n, seed, mu).map_err(|e| InputError::Usage(e.to_string()))?;
            let system = syk_control_system::<f64>(n / 2)?;
            let basis = commutant_basis(&system.controls, &search(flags.tol, true)?)?;
            if basis.is_empty() {
                return Err(symqsl::Error::Degenerate("global controls have a trivial commutant".into()).into());
            }
            let projection = projection_for(&h, SymmetryKind::Linear, h.dim(), &options)?;
            let delta = DeltaSource::Drift(&system.drift);
            let best = optimize_symmetry(
                &basis,
                |s| hamiltonian_speed_limit(&h, s, delta, &projection).map(|r| r.bound_time),
                iterations,
                seed,
            )?;
            let b = hamiltonian_speed_limit(&h, &best.symmetry, delta, &projection)?;
            report.symmetries = Some(json!({ "kind": SymmetryKind::Linear, "count": basis.len() + 1 }));
            let mut chosen = describe(&best.symmetry, 0);
            if let Some(obj) = chosen.as_object_mut() {
                obj.remove("index");
            }
            chosen["selection"] = json!({ "method": "optimized", "evaluations": best.evaluations });
            report.chosen_symmetry = Some(chosen);
            report.references.insert("hamiltonian_operator_norm".into(), h.operator_norm());
            report.warnings.extend(b.warnings.iter().cloned());
            report.bound = Some(b);
        }
    }
    Ok(report)
}

fn random_perturbation(d: usize, norm: f64, rng: &mut ChaCha8Rng) -> HermitianMatrix<f64> {
    let mut a = ComplexMatrix::<f64>::zeros(d, d);
    for z in a.iter_mut() {
        *z = Complex::new(StandardNormal.sample(rng), StandardNormal.sample(rng));
    }
    let h = HermitianMatrix::new((&a + a.adjoint()).map(|z| z * 0.5)).expect("symmetrized matrices are Hermitian");
    let n = h.operator_norm();
    h.scaled(norm / n)
}

const DUHAMEL_SEGMENTS: usize = 8;
const DUHAMEL_DT: f64 = 0.1;
const DUHAMEL_AMPLITUDE: f64 = 1.0;
const DUHAMEL_RANDOM_NORM: f64 = 0.1;

fn verify_duhamel(problem: &Problem, trials: usize, flags: &GlobalFlags) -> Result<(Report, i32), CliError> {
    let options = problem.spec.options.overridden_by(&flags.options());
    let mut echo = inputs(problem, &options);
    echo["trials"] = json!(trials);
    let mut report = Report::new("verify duhamel", echo);
    if trials == 0 {
        return Err(InputError::Usage("--trials must be at least 1".into()).into());
    }
    let seed = options.seed.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(trials);
    let mut violations = 0usize;
    for t in 0..trials {
        let delta = match &problem.perturbation {
            Some(m) => m.clone(),
            None => random_perturbation(problem.dim, DUHAMEL_RANDOM_NORM, &mut rng),
        };
        let pulses = PulseSchedule::random(
            DUHAMEL_DT,
            problem.system.controls.len(),
            DUHAMEL_SEGMENTS,
            DUHAMEL_AMPLITUDE,
            seed.wrapping_add(t as u64),
        )?;
        let check = duhamel_check(&problem.system, &delta, &pulses)?;
        let holds = check.holds(DUHAMEL_SLACK);
        violations += usize::from(!holds);
        rows.push(json!({
            "deviation": check.deviation,
            "bound": check.bound,
            "total_time": check.total_time,
            "perturbation_norm": check.perturbation_norm,
            "holds": holds,
        }));
    }
    report.results = Some(json!({
        "slack": DUHAMEL_SLACK,
        "perturbation": if problem.perturbation.is_some() { "supplied" } else { "random" },
        "violations": violations,
        "trials": rows,
    }));
    Ok((report, if violations == 0 { 0 } else { 1 }))
}
