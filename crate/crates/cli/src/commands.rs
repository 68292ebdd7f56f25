use rayon::prelude::*;
use spiked::gseries::{run_identity_suite, IdentityReport};
use spiked::matelem::{unperturbed_energy, PotentialParams, SingularElements};
use spiked::perturb::{
    c2_alpha2_exact, c2_closed_form, c2_direct_sum, c2_fg_split, expand_energy, first_order, Method, ALPHA2_SWITCH,
};
use spiked::specfun::{SeriesValue, DEFAULT_MAX_TERMS};
use spiked::varoracle::{
    build_hamiltonian, perturbation_residual_scan, residual_guard_bound, spectrum, variational_ground_energy,
    GUARD_BASIS_SIZE, RESIDUAL_GUARD,
};

use crate::config::{Command, RunConfig};
use crate::output::{Report, Value};
use crate::CliError;

/// A report plus the process status it implies.
pub struct Outcome {
    pub report: Report,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Output is still emitted; exit 3.
    ValidationFailed(String),
    /// Every sweep row failed; output is still emitted, exit 2.
    AllRowsFailed,
}

pub fn dispatch(config: &RunConfig) -> Result<Outcome, CliError> {
    let ok = |report| Ok(Outcome { report, status: Status::Ok });
    match config.command {
        Command::Energy => ok(energy(config)?),
        Command::Coeffs => ok(coeffs(config)?),
        Command::Matrix => ok(matrix(config)?),
        Command::Spectrum => ok(spectrum_cmd(config)?),
        Command::Validate => validate(config),
        Command::Sweep => sweep(config),
    }
}

fn energy(config: &RunConfig) -> Result<Report, CliError> {
    let p = config.effective_params(config.alpha, config.lambda)?;
    let e = expand_energy(&p, None, config.tolerance)?;
    let mut report = Report::new(vec![
        "A", "B", "alpha", "lambda", "gamma", "E0", "c1", "c2", "E", "method", "c2_terms", "c2_tail_bound",
        "c2_converged", "alpha_max_element", "alpha_max_series",
    ]);
    let series = e.c2_series.as_ref();
    report.push(vec![
        p.a().into(),
        p.b().into(),
        p.alpha().into(),
        p.lambda().into(),
        p.gamma().into(),
        e.e0.into(),
        e.c1.into(),
        e.c2.into(),
        e.energy(p.lambda()).into(),
        e.method.as_str().into(),
        series.map(|s| s.terms_used).into(),
        series.map(|s| s.tail_bound).into(),
        series.is_none_or(|s| s.converged).into(),
        (2.0 * p.gamma()).into(),
        (p.gamma() + 1.0).into(),
    ]);
    report.summary.push(("bounds", "alpha < 2*gamma (matrix elements), alpha < gamma + 1 (second order)".into()));
    Ok(report)
}

fn coeffs(config: &RunConfig) -> Result<Report, CliError> {
    let p = config.effective_params(config.alpha, config.lambda)?;
    p.check_raabe_bound()?;
    let e0 = 2.0 * p.b().sqrt() * p.gamma();
    let c1 = first_order(&p)?;
    let mut report = Report::new(vec![
        "method", "gamma", "E0", "c1", "c2", "tail_bound", "terms_used", "converged", "error",
    ]);
    let tol = config.tolerance;
    let mut rows: Vec<(Method, spiked::Result<SeriesValue>)> = vec![
        (Method::ClosedForm, c2_closed_form(&p, tol)),
        (Method::DirectSum, c2_direct_sum(&p, tol, DEFAULT_MAX_TERMS)),
        (Method::FgSplit, c2_fg_split(&p, tol)),
    ];
    if (p.alpha() - 2.0).abs() < ALPHA2_SWITCH {
        rows.push((Method::Alpha2Exact, c2_alpha2_exact(&p).map(|v| SeriesValue::exact(v, 0))));
    }
    for (method, r) in rows {
        let (c2, bound, terms, conv, err) = match r {
            Ok(s) => (Value::Num(s.value), Value::Num(s.tail_bound), Value::from(s.terms_used), Value::Bool(s.converged), Value::Null),
            Err(e) => (Value::Null, Value::Null, Value::Null, Value::Null, Value::Text(e.to_string())),
        };
        report.push(vec![method.as_str().into(), p.gamma().into(), e0.into(), c1.into(), c2, bound, terms, conv, err]);
    }
    Ok(report)
}

fn matrix(config: &RunConfig) -> Result<Report, CliError> {
    let p = config.effective_params(config.alpha, config.lambda)?;
    let n = config.basis_size;
    let table = SingularElements::new(p.alpha(), &p, n)?;
    let h = build_hamiltonian(&p, n)?;
    let mut report = Report::new(vec!["m", "n", "element", "hamiltonian"]);
    for i in 0..n {
        for j in 0..n {
            report.push(vec![i.into(), j.into(), table.get(i, j).into(), h.get(i, j).into()]);
        }
    }
    report.summary.push(("gamma", p.gamma().into()));
    Ok(report)
}

fn spectrum_cmd(config: &RunConfig) -> Result<Report, CliError> {
    let p = config.effective_params(config.alpha, config.lambda)?;
    let s = spectrum(&p, config.basis_size)?;
    let mut report = Report::new(vec!["n", "eigenvalue", "unperturbed"]);
    for (i, e) in s.eigenvalues.iter().enumerate() {
        report.push(vec![i.into(), (*e).into(), unperturbed_energy(i, &p).into()]);
    }
    report.summary.extend([
        ("gamma", p.gamma().into()),
        ("basis_size", s.basis_size.into()),
        ("sweeps", s.sweeps.into()),
        ("offdiag_residual", s.offdiag_residual.into()),
        ("converged", s.converged.into()),
    ]);
    Ok(report)
}

fn describe(params: &[(&'static str, f64)]) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={}", crate::output::sig(*v, 15)))
        .collect::<Vec<_>>()
        .join(";")
}

fn identity_row(r: &IdentityReport) -> Vec<Value> {
    vec![
        r.id.as_str().into(),
        describe(&r.parameters).into(),
        r.lhs.into(),
        r.rhs.into(),
        r.residual().into(),
        r.tolerance.into(),
        r.passed().into(),
        r.error.as_ref().map(|e| e.to_string()).into(),
    ]
}

/// Oracle checks at `A = 0, B = 1` over the exponents with frozen guards.
fn oracle_rows() -> Vec<Vec<Value>> {
    const SIZES: [usize; 4] = [5, 10, 20, 40];
    const LAMBDAS: [f64; 2] = [1e-3, 1e-2];
    let per_alpha: Vec<Vec<Vec<Value>>> = RESIDUAL_GUARD
        .par_iter()
        .map(|&(alpha, _)| {
            let mut rows = Vec::new();
            let fail = |id: &str, params: String, e: spiked::Error| {
                vec![id.into(), params.into(), Value::Null, Value::Null, Value::Null, Value::Null, false.into(), e.to_string().into()]
            };
            let base = match PotentialParams::new(0.0, 1.0, 0.0, alpha) {
                Ok(p) => p,
                Err(e) => return vec![fail("oracle", format!("alpha={alpha}"), e)],
            };
            let c2 = match expand_energy(&base, None, 1e-12) {
                Ok(e) => e.c2,
                Err(e) => return vec![fail("oracle", format!("alpha={alpha}"), e)],
            };
            let mut lambdas = vec![0.0];
            lambdas.extend(LAMBDAS);
            match perturbation_residual_scan(&base, &lambdas, GUARD_BASIS_SIZE) {
                Ok(points) => {
                    for pt in points {
                        let params = format!("alpha={alpha};lambda={};basis_size={GUARD_BASIS_SIZE}", crate::output::sig(pt.lambda, 15));
                        let (id, tol) = if pt.lambda == 0.0 {
                            ("oracle_zero_coupling", 1e-12)
                        } else {
                            ("oracle_residual_guard", residual_guard_bound(alpha, c2, pt.lambda).unwrap_or(0.0))
                        };
                        let residual = pt.residual.abs();
                        rows.push(vec![
                            id.into(), params.into(), pt.e_pert.into(), pt.e_var.into(), residual.into(), tol.into(),
                            (residual <= tol && pt.converged).into(), Value::Null,
                        ]);
                    }
                }
                Err(e) => rows.push(fail("oracle_residual_guard", format!("alpha={alpha}"), e)),
            }
            for &lambda in &LAMBDAS {
                let params = format!("alpha={alpha};lambda={};sizes=5,10,20,40", crate::output::sig(lambda, 15));
                let energies: spiked::Result<Vec<f64>> = base
                    .with_lambda(lambda)
                    .and_then(|p| SIZES.iter().map(|&k| variational_ground_energy(&p, k)).collect());
                match energies {
                    Ok(e) => {
                        let rise = e.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max).max(0.0);
                        rows.push(vec![
                            "oracle_monotone_basis".into(), params.into(), e[0].into(), e[SIZES.len() - 1].into(),
                            rise.into(), 1e-13.into(), (rise <= 1e-13).into(), Value::Null,
                        ]);
                    }
                    Err(e) => rows.push(fail("oracle_monotone_basis", params, e)),
                }
            }
            rows
        })
        .collect();
    per_alpha.into_iter().flatten().collect()
}

fn validate(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut report = Report::new(vec!["check", "parameters", "lhs", "rhs", "residual", "tolerance", "passed", "error"]);
    for r in run_identity_suite(&config.gamma_grid, config.tolerance) {
        report.push(identity_row(&r));
    }
    for row in oracle_rows() {
        report.push(row);
    }
    let total = report.rows.len();
    let failed = report.rows.iter().filter(|r| r[6] != Value::Bool(true)).count();
    report.summary.push(("checks", total.into()));
    report.summary.push(("failed", failed.into()));
    let status = if failed == 0 {
        Status::Ok
    } else {
        Status::ValidationFailed(format!("{failed} of {total} checks failed"))
    };
    Ok(Outcome { report, status })
}

pub const SWEEP_COLUMNS: [&str; 12] =
    ["A", "B", "alpha", "lambda", "gamma", "E0", "c1", "c2", "E_pert", "E_var", "residual", "error"];

fn sweep_row(config: &RunConfig, alpha: f64, lambda: f64) -> Vec<Value> {
    let row = || -> spiked::Result<Vec<Value>> {
        let p = config.effective_params(alpha, lambda)?;
        let e = expand_energy(&p, None, config.tolerance)?;
        let e_pert = e.energy(lambda);
        let (e_var, residual) = if config.with_oracle {
            let v = variational_ground_energy(&p, config.basis_size)?;
            (Value::Num(v), Value::Num(e_pert - v))
        } else {
            (Value::Null, Value::Null)
        };
        Ok(vec![
            p.a().into(), p.b().into(), alpha.into(), lambda.into(), p.gamma().into(), e.e0.into(), e.c1.into(),
            e.c2.into(), e_pert.into(), e_var, residual, Value::Null,
        ])
    };
    row().unwrap_or_else(|err| {
        let mut r = vec![config.a.into(), config.b.into(), alpha.into(), lambda.into()];
        r.extend(std::iter::repeat_n(Value::Null, 7));
        r.push(err.to_string().into());
        r
    })
}

fn sweep(config: &RunConfig) -> Result<Outcome, CliError> {
    if config.lambda_grid.is_none() && config.alpha_grid.is_none() {
        return Err(CliError::Usage("sweep needs --lambda-grid or --alpha-grid".into()));
    }
    let alphas = config.alpha_grid.clone().unwrap_or_else(|| vec![config.alpha]);
    let lambdas = config.lambda_grid.clone().unwrap_or_else(|| vec![config.lambda]);
    let points: Vec<(f64, f64)> = alphas.iter().flat_map(|&a| lambdas.iter().map(move |&l| (a, l))).collect();
    let compute = || points.par_iter().map(|&(a, l)| sweep_row(config, a, l)).collect::<Vec<_>>();
    let rows = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {j} workers: {e}")))?
            .install(compute),
        None => compute(),
    };
    let mut report = Report::new(SWEEP_COLUMNS.to_vec());
    let failed = rows.iter().filter(|r| r[11] != Value::Null).count();
    for r in rows {
        report.push(r);
    }
    let status = if failed > 0 && failed == report.rows.len() { Status::AllRowsFailed } else { Status::Ok };
    Ok(Outcome { report, status })
}
