//! Subcommand implementations.

use std::f64::consts::PI;
use std::io::Write;

use qsearch_core::baselines::{farhi_gutmann_probability, grover_optimal_k, grover_probability, GroverQuery};
use qsearch_core::cases::{case_p_max, case_t_star, classify, p_max_x_zero_limit_raw};
use qsearch_core::dynamics::{sample_curve, search_outcome, transition_probability};
use qsearch_core::hamiltonian::matrix_rep;
use qsearch_core::overlap_prior::{prob_overlap_at_least, uniform_prob_overlap};
use qsearch_core::threshold::time_to_threshold;
use qsearch_core::{CaseLabel, Complex64, HamiltonianParams, Overlap, OverlapBound, PeakTime, PriorSpec};
use rayon::prelude::*;

use crate::config::{Cli, Command, Options, RunConfig};
use crate::table::{sci, Cell, TableArtifact};
use crate::{CliError, THREADS_ENV};

/// Samples per figure curve.
pub const FIG_SAMPLES: usize = 400;

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    let o = cli.options.resolve()?;
    match cli.command {
        Command::Eval => {
            let rc = RunConfig::from_options(&o)?;
            let t = finite(Options::require(o.t, "t")?, "t")?;
            let m = matrix_rep(&rc.params, rc.x);
            scalar(&o, &sci(transition_probability(&m, rc.x, t, rc.params.hbar())))
        }
        Command::Pmax => {
            let rc = RunConfig::from_options(&o)?;
            scalar(&o, &sci(search_outcome(&rc.params, rc.x).p_max))
        }
        Command::Tstar => {
            let rc = RunConfig::from_options(&o)?;
            scalar(&o, &peak_time(search_outcome(&rc.params, rc.x).t_star))
        }
        Command::Threshold => threshold(&o),
        Command::Classify => scalar(&o, classify(&o.params()?).name()),
        Command::Curve => artifact(&o, curve(&o)?),
        Command::Table1 => artifact(&o, table1(&o)?),
        Command::Table2 => artifact(&o, table2(&o)?),
        Command::Table3 => artifact(&o, table3()?),
        Command::Fig4 => artifact(&o, fig4()?),
        Command::Fig5 => artifact(&o, fig5()?),
        Command::Fig6 => artifact(&o, fig6()?),
        Command::Grover => grover(&o),
        Command::Fg => {
            let rc = RunConfig::from_options(&o)?;
            let t = finite(Options::require(o.t, "t")?, "t")?;
            let p = &rc.params;
            scalar(&o, &sci(farhi_gutmann_probability(t, rc.x, p.energy(), p.planck())))
        }
        Command::Prior => prior(&o),
    }
}

fn finite(v: f64, flag: &str) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Validation(format!("--{flag} must be finite, got {v}")))
    }
}

fn peak_time(t: PeakTime) -> String {
    match t {
        PeakTime::At(t) => sci(t),
        PeakTime::NoOscillation => "none".into(),
    }
}

fn peak_cell(t: PeakTime) -> Cell {
    match t {
        PeakTime::At(t) => Cell::Num(t),
        PeakTime::NoOscillation => Cell::Text("none".into()),
    }
}

fn write_out(o: &Options, text: &str) -> Result<(), CliError> {
    match &o.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn scalar(o: &Options, value: &str) -> Result<(), CliError> {
    write_out(o, &format!("{value}\n"))
}

fn artifact(o: &Options, table: TableArtifact) -> Result<(), CliError> {
    write_out(o, &table.render(o.format.unwrap_or_default())?)
}

/// Worker count from the environment; one when unset.
pub fn thread_count() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(1),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Validation(format!(
                "{THREADS_ENV} must be a positive integer, got `{s}`"
            ))),
        },
    }
}

/// Maps `f` over `items` on the configured pool, keeping input order.
fn par_map<T, R, F>(items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

fn describe(p: &HamiltonianParams) -> String {
    format!(
        "alpha={} delta={} beta={}{:+}i energy={} planck={}",
        p.alpha(),
        p.delta(),
        p.beta().re,
        p.beta().im,
        p.energy(),
        p.planck()
    )
}

fn unit(alpha: f64, delta: f64, beta: Complex64) -> HamiltonianParams {
    HamiltonianParams::unit(alpha, delta, beta).expect("fixture parameters are valid")
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn fixed_overlap(v: f64) -> Overlap {
    Overlap::new(v).expect("fixture overlap is valid")
}

fn threshold(o: &Options) -> Result<(), CliError> {
    let rc = RunConfig::from_options(o)?;
    let thr = Options::require(rc.threshold, "p")?;
    let res = time_to_threshold(&rc.params, rc.x, thr)?;
    match res.t_hit {
        Some(t) => scalar(o, &sci(t)),
        None => Err(CliError::Unreachable(format!(
            "threshold {thr} is never reached; highest probability is {}",
            sci(res.p_max)
        ))),
    }
}

fn curve(o: &Options) -> Result<TableArtifact, CliError> {
    let rc = RunConfig::from_options(o)?;
    let t_end = Options::require(o.t_end, "t-end")?;
    let n = o.n.unwrap_or(FIG_SAMPLES as u64) as usize;
    let c = sample_curve(&rc.params, rc.x, t_end, n)?;
    let mut t = TableArtifact::new(&["t", "probability"]);
    t.comment("qsearch curve");
    t.comment(format!("{} x={}", describe(&rc.params), rc.x.get()));
    for (time, p) in c.iter() {
        t.push(vec![time.into(), p.into()]);
    }
    Ok(t)
}

/// One representative per case.
pub fn table1_fixtures() -> [(CaseLabel, HamiltonianParams); 8] {
    [
        (CaseLabel::General, unit(1.0, 2.0, Complex64::new(1.0, 1.0))),
        (CaseLabel::Case1, unit(1.0, 1.0, real(0.0))),
        (CaseLabel::Case2, unit(1.0, 0.5, real(0.0))),
        (CaseLabel::Case3, unit(0.0, 0.0, real(1.0))),
        (CaseLabel::Case4, unit(0.0, 0.0, Complex64::new(0.5, 1.0))),
        (CaseLabel::Case5, unit(1.0, 1.0, real(1.0))),
        (CaseLabel::Case6, unit(1.0, 1.0, Complex64::new(0.5, 1.0))),
        (CaseLabel::Case7, unit(1.0, 0.5, real(1.0))),
    ]
}

fn table1(o: &Options) -> Result<TableArtifact, CliError> {
    let x = Overlap::new(o.x.unwrap_or(0.5))?;
    let mut t = TableArtifact::new(&[
        "case",
        "alpha",
        "delta",
        "beta_re",
        "beta_im",
        "p_max_formula",
        "t_star_formula",
        "p_max",
        "t_star",
    ]);
    t.comment("qsearch table1");
    t.comment(format!("x={} energy=1 planck=1", x.get()));
    t.comment("p_max_formula and t_star_formula: the case's closed forms (sin^2 coefficient and its time)");
    t.comment("p_max and t_star: supremum of P(t) and the first time it is reached");
    for (label, p) in table1_fixtures() {
        let out = search_outcome(&p, x);
        t.push(vec![
            label.name().into(),
            p.alpha().into(),
            p.delta().into(),
            p.beta().re.into(),
            p.beta().im.into(),
            case_p_max(label, &p, x)?.into(),
            peak_cell(case_t_star(label, &p, x)?),
            out.p_max.into(),
            peak_cell(out.t_star),
        ]);
    }
    Ok(t)
}

fn table2(o: &Options) -> Result<TableArtifact, CliError> {
    let alpha = o.alpha.unwrap_or(1.0);
    let beta = o.beta_re.unwrap_or(1.0);
    let x = Overlap::new(o.x.unwrap_or(0.5))?;
    let energy = o.energy.unwrap_or(1.0);
    let planck = o.planck.unwrap_or(1.0);
    let rows = [
        (CaseLabel::Case1, alpha, alpha, 0.0),
        (CaseLabel::Case3, 0.0, 0.0, beta),
        (CaseLabel::Case5, alpha, alpha, beta),
    ];
    let mut t = TableArtifact::new(&["case", "alpha", "delta", "beta_re", "p_max", "t_star"]);
    t.comment("qsearch table2");
    t.comment(format!("x={} energy={energy} planck={planck}", x.get()));
    for (label, a, d, b) in rows {
        let p = HamiltonianParams::new(a, d, real(b), energy, planck)?;
        t.push(vec![
            label.name().into(),
            a.into(),
            d.into(),
            b.into(),
            case_p_max(label, &p, x)?.into(),
            peak_cell(case_t_star(label, &p, x)?),
        ]);
    }
    Ok(t)
}

pub const TABLE3_DIMS: [u32; 3] = [4, 8, 16];
pub const TABLE3_SIGMA_SQ: [f64; 3] = [0.1, 1.0, 10.0];

/// `(N, σ², uniform, non-uniform)` at `μ = 3π/8`, `x̄ = cos(π/8)`.
pub fn table3_rows() -> Result<Vec<(u32, f64, f64, f64)>, CliError> {
    let bound = OverlapBound::new((PI / 8.0).cos())?;
    let grid: Vec<(u32, f64)> = TABLE3_DIMS
        .iter()
        .flat_map(|&n| TABLE3_SIGMA_SQ.iter().map(move |&s| (n, s)))
        .collect();
    par_map(&grid, |&(n, s2)| -> Result<_, CliError> {
        let spec = PriorSpec::new(n, 3.0 * PI / 8.0, s2)?;
        Ok((
            n,
            s2,
            uniform_prob_overlap(bound, n)?,
            prob_overlap_at_least(bound, &spec)?,
        ))
    })?
    .into_iter()
    .collect()
}

fn table3() -> Result<TableArtifact, CliError> {
    let mut t = TableArtifact::new(&["N", "sigma_sq", "prob_uniform", "prob_nonuniform"]);
    t.comment("qsearch table3");
    t.comment("Prob(x >= x_bar) with x_bar=cos(pi/8), mu_theta=3pi/8");
    for (n, s2, u, nu) in table3_rows()? {
        t.push(vec![(n as u64).into(), s2.into(), u.into(), nu.into()]);
    }
    Ok(t)
}

fn long_table(name: &str) -> TableArtifact {
    let mut t = TableArtifact::new(&["block", "series", "x", "y"]);
    t.comment(format!("qsearch {name}"));
    t
}

fn push_series(t: &mut TableArtifact, block: &str, series: &str, points: impl IntoIterator<Item = (f64, f64)>) {
    for (x, y) in points {
        t.push(vec![block.into(), series.into(), x.into(), y.into()]);
    }
}

fn fig4() -> Result<TableArtifact, CliError> {
    let mut t = long_table("fig4");
    t.comment("peak probability in the x -> 0 limit");
    t.comment("block asymmetry: x = alpha - delta = (i - 200)/100, series |beta|");
    t.comment("block beta_abs: x = |beta| = i/200, series alpha - delta");
    let asym: Vec<f64> = (0..FIG_SAMPLES).map(|i| (i as f64 - 200.0) / 100.0).collect();
    for b in [0.25, 0.5, 1.0] {
        let ys = par_map(&asym, |&a| p_max_x_zero_limit_raw(a, b))?;
        push_series(
            &mut t,
            "asymmetry",
            &format!("beta_abs={b}"),
            asym.iter().copied().zip(ys),
        );
    }
    let babs: Vec<f64> = (0..FIG_SAMPLES).map(|i| i as f64 / 200.0).collect();
    for a in [0.0, 0.25, 0.5] {
        let ys = par_map(&babs, |&b| p_max_x_zero_limit_raw(a, b))?;
        push_series(
            &mut t,
            "beta_abs",
            &format!("asymmetry={a}"),
            babs.iter().copied().zip(ys),
        );
    }
    Ok(t)
}

fn fig5_hamiltonians() -> [(CaseLabel, &'static str, HamiltonianParams); 3] {
    [
        (CaseLabel::Case1, "H1", unit(1.0, 1.0, real(0.0))),
        (CaseLabel::Case3, "H3", unit(0.0, 0.0, real(1.0))),
        (CaseLabel::Case5, "H5", unit(1.0, 1.0, real(1.0))),
    ]
}

pub const FIG5_T_END: f64 = 0.798;
pub const FIG6_T_END: f64 = 0.399;

fn curve_series(
    t: &mut TableArtifact,
    block: &str,
    series: &str,
    p: &HamiltonianParams,
    x: Overlap,
    t_end: f64,
) -> Result<(), CliError> {
    let c = sample_curve(p, x, t_end, FIG_SAMPLES)?;
    push_series(t, block, series, c.iter());
    Ok(())
}

fn fig5() -> Result<TableArtifact, CliError> {
    let mut t = long_table("fig5");
    t.comment("alpha=1 beta=1 energy=1 planck=1; H1: delta=alpha beta=0; H3: alpha=delta=0; H5: delta=alpha");
    t.comment("block t_star: x = overlap i/401, y = t*");
    t.comment(format!(
        "block probability: x = t on [0, {FIG5_T_END}], y = P(t) at overlap 0.5"
    ));
    let xs: Vec<Overlap> = (1..=FIG_SAMPLES).map(|i| fixed_overlap(i as f64 / 401.0)).collect();
    for (label, name, p) in fig5_hamiltonians() {
        let ys = par_map(&xs, |&x| case_t_star(label, &p, x))?;
        let mut points = Vec::with_capacity(xs.len());
        for (x, y) in xs.iter().zip(ys) {
            let y = y?
                .time()
                .ok_or_else(|| CliError::Validation(format!("{name} does not oscillate")))?;
            points.push((x.get(), y));
        }
        push_series(&mut t, "t_star", name, points);
    }
    for (_, name, p) in fig5_hamiltonians() {
        curve_series(&mut t, "probability", name, &p, fixed_overlap(0.5), FIG5_T_END)?;
    }
    Ok(t)
}

pub fn fig6_hamiltonians() -> [(&'static str, HamiltonianParams); 2] {
    [("H5", unit(0.5, 0.5, real(1.0))), ("H", unit(0.5, 1.0, real(1.0)))]
}

pub const FIG6_THRESHOLD: f64 = 0.95;

fn fig6() -> Result<TableArtifact, CliError> {
    let mut t = long_table("fig6");
    t.comment("overlap 0.5 energy=1 planck=1; H5: alpha=delta=0.5 beta=1; H: alpha=0.5 delta=1 beta=1");
    t.comment(format!(
        "x = t on [0, {FIG6_T_END}], y = P(t); threshold series at {FIG6_THRESHOLD}"
    ));
    let x = fixed_overlap(0.5);
    for (name, p) in fig6_hamiltonians() {
        curve_series(&mut t, "probability", name, &p, x, FIG6_T_END)?;
    }
    let last = (FIG_SAMPLES - 1) as f64;
    push_series(
        &mut t,
        "probability",
        "threshold",
        (0..FIG_SAMPLES).map(|i| (FIG6_T_END * i as f64 / last, FIG6_THRESHOLD)),
    );
    Ok(t)
}

fn grover(o: &Options) -> Result<(), CliError> {
    let n = Options::require(o.n, "n")?;
    match o.k {
        Some(k) => scalar(o, &sci(grover_probability(GroverQuery::new(k, n)?))),
        None => scalar(o, &grover_optimal_k(n)?.to_string()),
    }
}

fn prior(o: &Options) -> Result<(), CliError> {
    let xbar = Options::require(o.xbar, "xbar")?;
    let n = Options::require(o.n, "n")?;
    let n = u32::try_from(n).map_err(|_| CliError::Validation(format!("--n too large: {n}")))?;
    let bound = OverlapBound::new(xbar)?;
    let value = match o.sigma_sq {
        None => uniform_prob_overlap(bound, n)?,
        Some(s2) => {
            let mu = Options::require(o.mu, "mu")?;
            prob_overlap_at_least(bound, &PriorSpec::new(n, mu, s2)?)?
        }
    };
    scalar(o, &sci(value))
}
