//! Subcommand implementations. Each returns an [`Outcome`]: the document to
//! emit, extra stderr lines and the exit code.

use clap::Args;
use serde_json::{json, Map, Value};

use giso_core::aim::{find_eigenvalues, AimConfig};
use giso_core::exactmath::{
    parse_rational, poly_real_roots, rational_to_string, BigReal, Precision, RatPoly, Rational, RealPoly,
    RootInterval,
};
use giso_core::model::{
    normalize, oracle_eigenvalues, plot_series, EnergyUnit, OracleConfig, PotentialSpec, WaveFunction,
};
use giso_core::quasipoly::case2::{
    case2_common_factor, case2_q, case2_solution_at_root, exact_family, exact_family_closed_forms,
};
use giso_core::quasipoly::general::{general_quasi_solve, quasi_condition};
use giso_core::repro::{figure1_state, reproduce as run_repro, ReproConfig, Target};
use giso_core::{Error, Result};

use crate::emit::{Emission, Table};
use crate::Global;

pub struct Outcome {
    pub emission: Emission,
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(json: Value, table: Table) -> Self {
        Outcome { emission: Emission { json, table }, stderr: Vec::new(), code: 0 }
    }
}

fn rational_arg(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidInput(format!("--{name}: cannot parse {s:?}")))
}

fn real_arg(name: &str, s: &str, prec: Precision) -> Result<BigReal> {
    Ok(BigReal::from_rational(&rational_arg(name, s)?, prec))
}

fn range_arg(name: &str, s: &str) -> Result<(String, String)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("--{name}: expected lo:hi, got {s:?}")))?;
    Ok((a.trim().to_string(), b.trim().to_string()))
}

fn f64_range(name: &str, s: &str) -> Result<(f64, f64)> {
    let (a, b) = range_arg(name, s)?;
    let bad = || Error::InvalidInput(format!("--{name}: cannot parse {s:?}"));
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn sci(x: &BigReal, d: usize) -> String {
    x.to_sci(d)
}

fn sci64(x: f64, d: usize) -> String {
    format!("{x:.d$e}")
}

fn units_json(ea2: &BigReal, wa2: &BigReal, d: usize) -> Value {
    let mut m = Map::new();
    for u in [EnergyUnit::Ea2, EnergyUnit::TwoEa2, EnergyUnit::EOverW, EnergyUnit::Reduced] {
        m.insert(u.label().to_string(), json!(sci(&u.from_ea2(ea2, wa2), d)));
    }
    Value::Object(m)
}

fn coeffs_json(p: &RealPoly, d: usize) -> Value {
    json!({
        "variable": p.var.name(),
        "coefficients": p.coeffs.iter().map(|c| sci(c, d)).collect::<Vec<_>>(),
    })
}

fn rat_poly_json(p: &RatPoly) -> Value {
    json!({
        "variable": p.var().name(),
        "polynomial": p.to_string(),
        "coefficients": p.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

#[derive(Args, Debug)]
pub struct AimArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long)]
    pub wa2: String,
    #[arg(long)]
    pub g: String,
    /// Number of lowest states.
    #[arg(long, default_value_t = 4)]
    pub states: usize,
    /// Search window in Ea2, as lo:hi.
    #[arg(long, allow_hyphen_values = true)]
    pub bracket: Option<String>,
    /// First expansion center in (0, 1).
    #[arg(long)]
    pub t0: Option<String>,
    /// Iteration count.
    #[arg(long, default_value_t = 120)]
    pub max_iter: usize,
}

pub fn aim(a: &AimArgs, g: &Global) -> Result<Outcome> {
    let prec = Precision::digits(g.digits);
    let wa2 = real_arg("wa2", &a.wa2, prec)?;
    let gc = real_arg("g", &a.g, prec)?;
    let bracket = match &a.bracket {
        Some(s) => {
            let (lo, hi) = range_arg("bracket", s)?;
            Some((real_arg("bracket", &lo, prec)?, real_arg("bracket", &hi, prec)?))
        }
        None => None,
    };
    let t0 = match &a.t0 {
        Some(s) => {
            let t = real_arg("t0", s, prec)?;
            if !(t.is_positive() && t < BigReal::one(prec)) {
                return Err(Error::InvalidInput("--t0 must lie in (0, 1)".into()));
            }
            Some(t)
        }
        None => None,
    };
    if a.max_iter < 8 {
        return Err(Error::InvalidInput("--max-iter must be at least 8".into()));
    }
    let cfg = AimConfig { t0, digits: g.digits, n_max: a.max_iter, ..AimConfig::default() };
    let search = find_eigenvalues(a.l, &wa2, &gc, bracket, a.states, &cfg)?;
    let d = g.decimals;
    let mut table = Table::new(&["n", "Ea2", "2Ea2", "E_over_w", "iterations", "t0"]);
    table.comments.push(format!("aim l={} wa2={} g={}", a.l, a.wa2, a.g));
    let mut states = Vec::new();
    for (n, r) in search.results.iter().enumerate() {
        table.push(vec![
            n.to_string(),
            sci(&r.energy_scaled, d),
            sci(&EnergyUnit::TwoEa2.from_ea2(&r.energy_scaled, &wa2), d),
            sci(&EnergyUnit::EOverW.from_ea2(&r.energy_scaled, &wa2), d),
            r.iterations.to_string(),
            r.t0.to_fixed(2),
        ]);
        states.push(json!({
            "n": n,
            "energy": units_json(&r.energy_scaled, &wa2, d),
            "iterations": r.iterations,
            "t0": r.t0.to_fixed(2),
            "residual": sci(&r.residual, 3),
            "stabilized": r.stabilized,
        }));
    }
    let doc = json!({
        "command": "aim",
        "l": a.l,
        "wa2": a.wa2,
        "g": a.g,
        "digits": g.digits,
        "max_iter": a.max_iter,
        "requested": search.requested,
        "shortfall": search.shortfall,
        "t0_tried": search.t0_tried.iter().map(|t| t.to_fixed(2)).collect::<Vec<_>>(),
        "states": states,
    });
    let mut out = Outcome::ok(doc, table);
    if !search.is_complete() {
        out.stderr.push(format!("warning: only {} of {} states stabilized", search.results.len(), search.requested));
        out.code = 3;
    }
    Ok(out)
}

#[derive(Args, Debug)]
pub struct QuasiArgs {
    /// Degree of the polynomial factor.
    #[arg(long)]
    pub k: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub l: String,
    #[arg(long)]
    pub wa2: String,
}

pub fn quasi(a: &QuasiArgs, g: &Global) -> Result<Outcome> {
    let l = rational_arg("l", &a.l)?;
    let wa2 = rational_arg("wa2", &a.wa2)?;
    if wa2 <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidInput("--wa2 must be positive".into()));
    }
    let condition = quasi_condition(a.k, &l, &wa2);
    let sols = general_quasi_solve(a.k, &l, &wa2, g.digits)?;
    let d = g.decimals;
    let prec = Precision::digits(g.digits);
    let wa2r = BigReal::from_rational(&wa2, prec);
    let mut table = Table::new(&["mu", "g", "Ea2", "E_over_w", "E_reduced", "physical"]);
    table.comments.push(format!("quasi k={} l={} wa2={}", a.k, a.l, a.wa2));
    let mut rows = Vec::new();
    for s in &sols {
        table.push(vec![
            sci(&s.mu, d),
            sci(&s.g, d),
            sci(&s.energy_scaled, d),
            sci(&s.e_over_w, d),
            sci(&s.reduced_energy(), d),
            s.physical.to_string(),
        ]);
        rows.push(json!({
            "mu": sci(&s.mu, d),
            "mu_exact": s.mu_exact.as_ref().map(rational_to_string),
            "g": sci(&s.g, d),
            "g_exact": s.g_exact.as_ref().map(rational_to_string),
            "energy": units_json(&s.energy_scaled, &wa2r, d),
            "energy_exact_Ea2": s.energy_exact().as_ref().map(rational_to_string),
            "physical": s.physical,
            "multiplicity": s.multiplicity,
            "residual_det": sci(&s.residual_det, 3),
            "residual_g": sci(&s.residual_g, 3),
            "factor": coeffs_json(&s.factor_t, d),
        }));
    }
    let doc = json!({
        "command": "quasi",
        "k": a.k,
        "l": rational_to_string(&l),
        "wa2": rational_to_string(&wa2),
        "condition": rat_poly_json(&condition),
        "solutions": rows,
    });
    Ok(Outcome::ok(doc, table))
}

#[derive(Args, Debug)]
pub struct Case2Args {
    /// Degree of the factor in z = 1 + x^2.
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
}

pub fn case2(a: &Case2Args, g: &Global) -> Result<Outcome> {
    let q = case2_q(a.l, a.n)?;
    let roots = poly_real_roots(&q, &RootInterval::positive(), g.digits)?;
    let d = g.decimals;
    let mut table = Table::new(&["wa2", "g", "mu", "2Ea2", "Ea2"]);
    table.comments.push(format!("case2 n={} l={}", a.n, a.l));
    let mut rows = Vec::new();
    for root in roots.iter().filter(|r| r.value.is_positive()) {
        let s = case2_solution_at_root(a.l, a.n, root, g.digits)?;
        table.push(vec![sci(&s.wa2, d), sci(&s.g, d), sci(&s.mu, d), sci(&s.two_ea2, d), sci(&s.ea2(), d)]);
        let exact = s.exact.as_ref().map(|e| {
            json!({
                "wa2": rational_to_string(&e.wa2),
                "g": rational_to_string(&e.g),
                "mu": rational_to_string(&e.mu),
                "2Ea2": rational_to_string(&e.two_ea2),
                "potential_x2": rational_to_string(&e.potential_x2),
                "potential_coupling": rational_to_string(&e.potential_coupling),
                "factor_z": rat_poly_json(&e.factor_z.polynomial),
                "factor_x": rat_poly_json(&e.factor_x),
            })
        });
        rows.push(json!({
            "wa2": sci(&s.wa2, d),
            "g": sci(&s.g, d),
            "mu": sci(&s.mu, d),
            "energy": units_json(&s.ea2(), &s.wa2, d),
            "factor_z": coeffs_json(&s.factor_z, d),
            "factor_x": coeffs_json(&s.factor_x, d),
            "factor_residual": sci(&s.factor_residual, 3),
            "exact": exact,
        }));
    }
    let doc = json!({
        "command": "case2",
        "n": a.n,
        "l": a.l,
        "common_factor": rat_poly_json(&case2_common_factor(a.l)),
        "q": rat_poly_json(&q),
        "roots": rows,
    });
    Ok(Outcome::ok(doc, table))
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    /// Highest family index.
    #[arg(long, default_value_t = 4)]
    pub max_index: usize,
}

pub fn exact(a: &ExactArgs, _g: &Global) -> Result<Outcome> {
    let mut table = Table::new(&["index", "2Ea2", "Ea2", "factor_z"]);
    table.comments.push("exact family l=-1 wa2=1/2 g=2 mu=-1".into());
    let mut rows = Vec::new();
    for e in exact_family(a.max_index) {
        let ea2 = &e.two_ea2 / Rational::from_integer(2.into());
        let poly = e.solution.as_ref().map(|s| s.polynomial.to_string()).unwrap_or_else(|| "-".into());
        table.push(vec![e.index.to_string(), rational_to_string(&e.two_ea2), rational_to_string(&ea2), poly]);
        let closed = if e.index >= 2 {
            let c = exact_family_closed_forms(e.index - 1)?;
            Some(json!({
                "hypergeometric": rat_poly_json(&c.hypergeometric),
                "laguerre": rat_poly_json(&c.laguerre),
                "laguerre_prefactor": rational_to_string(&c.laguerre_prefactor),
            }))
        } else {
            None
        };
        rows.push(json!({
            "index": e.index,
            "energy": {"2Ea2": rational_to_string(&e.two_ea2), "Ea2": rational_to_string(&ea2)},
            "factor_z": e.solution.as_ref().map(|s| rat_poly_json(&s.polynomial)),
            "verified": e.solution.as_ref().map(|s| s.is_exact()),
            "closed_forms": closed,
        }));
    }
    let doc = json!({
        "command": "exact",
        "l": -1,
        "wa2": "1/2",
        "g": "2",
        "mu": "-1",
        "members": rows,
    });
    Ok(Outcome::ok(doc, table))
}

#[derive(Args, Debug)]
pub struct WaveArgs {
    /// `figure1` or `family-N`.
    #[arg(long, default_value = "figure1")]
    pub preset: String,
    /// Sampling interval in x, as lo:hi.
    #[arg(long, default_value = "0:5")]
    pub range: String,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    /// Scale to unit norm on the half-line.
    #[arg(long)]
    pub normalized: bool,
}

fn preset_state(name: &str, digits: u32) -> Result<(PotentialSpec, WaveFunction, Rational)> {
    if name == "figure1" {
        let (p, w, sol) = figure1_state(digits)?;
        let e = sol.exact.ok_or_else(|| Error::Domain("figure state is not rational".into()))?;
        return Ok((p, w, e.two_ea2));
    }
    let index: usize = name
        .strip_prefix("family-")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidInput(format!("unknown preset {name:?} (figure1 or family-N)")))?;
    let entry = exact_family(index).pop().expect("non-empty family");
    let sol = entry.solution.ok_or_else(|| Error::Domain(format!("no family member at index {index}")))?;
    let prec = Precision::digits(digits);
    let p = PotentialSpec::new(-1, BigReal::parse("0.5", prec).expect("literal"), BigReal::from_i64(2, prec))?;
    let w = WaveFunction::from_rat(&p, BigReal::from_i64(-1, prec), &sol.polynomial)?;
    Ok((p, w, entry.two_ea2))
}

pub fn wavefunction(a: &WaveArgs, g: &Global) -> Result<Outcome> {
    let range = f64_range("range", &a.range)?;
    let (p, w, two_ea2) = preset_state(&a.preset, g.digits)?;
    let scale = if a.normalized { Some(normalize(&w, g.digits.min(30))?.scale) } else { None };
    let series = plot_series(&p, &[("psi".to_string(), w)], range, a.samples)?;
    let d = g.decimals;
    let v = series.channel("V").expect("potential channel");
    let psi: Vec<BigReal> = series
        .channel("psi")
        .expect("state channel")
        .iter()
        .map(|y| match &scale {
            Some(s) => y * s,
            None => y.clone(),
        })
        .collect();
    let mut table = Table::new(&["x", "V", "psi"]);
    table.comments.push(format!(
        "preset={} l={} wa2={} g={} 2Ea2={}{}",
        a.preset,
        p.l,
        sci(&p.wa2, 6),
        sci(&p.g, 6),
        rational_to_string(&two_ea2),
        if a.normalized { " normalized" } else { "" }
    ));
    for i in 0..series.grid.len() {
        table.push(vec![sci(&series.grid[i], d), sci(&v[i], d), sci(&psi[i], d)]);
    }
    let doc = json!({
        "command": "wavefunction",
        "preset": a.preset,
        "l": p.l,
        "wa2": sci(&p.wa2, d),
        "g": sci(&p.g, d),
        "2Ea2": rational_to_string(&two_ea2),
        "normalized": a.normalized,
        "x": series.grid.iter().map(|x| sci(x, d)).collect::<Vec<_>>(),
        "V": v.iter().map(|x| sci(x, d)).collect::<Vec<_>>(),
        "psi": psi.iter().map(|x| sci(x, d)).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(doc, table))
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long)]
    pub wa2: String,
    #[arg(long)]
    pub g: String,
    #[arg(long, default_value_t = 4)]
    pub count: usize,
    /// Domain cutoff in x; defaults to a turning-point estimate.
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long, default_value_t = 4000)]
    pub points: usize,
}

pub fn oracle(a: &OracleArgs, g: &Global) -> Result<Outcome> {
    let prec = Precision::digits(g.digits);
    let p = PotentialSpec::new(a.l, real_arg("wa2", &a.wa2, prec)?, real_arg("g", &a.g, prec)?)?;
    let cfg = OracleConfig { cutoff: a.cutoff, points: a.points, check_cutoff: true };
    let values = oracle_eigenvalues(&p, a.count, &cfg)?;
    let wa2 = p.wa2.to_f64();
    let d = g.decimals.min(16);
    let mut table = Table::new(&["n", "Ea2", "2Ea2", "E_over_w"]);
    table.comments.push(format!("oracle l={} wa2={} g={}", a.l, a.wa2, a.g));
    let mut states = Vec::new();
    for (n, &e) in values.iter().enumerate() {
        table.push(vec![
            n.to_string(),
            sci64(e, d),
            sci64(EnergyUnit::TwoEa2.from_ea2_f64(e, wa2), d),
            sci64(EnergyUnit::EOverW.from_ea2_f64(e, wa2), d),
        ]);
        let mut m = Map::new();
        for u in [EnergyUnit::Ea2, EnergyUnit::TwoEa2, EnergyUnit::EOverW, EnergyUnit::Reduced] {
            m.insert(u.label().to_string(), json!(sci64(u.from_ea2_f64(e, wa2), d)));
        }
        states.push(json!({"n": n, "energy": Value::Object(m)}));
    }
    let doc = json!({
        "command": "oracle",
        "l": a.l,
        "wa2": a.wa2,
        "g": a.g,
        "cutoff": sci64(cfg.cutoff_for(a.l, wa2, a.count), 6),
        "points": a.points,
        "states": states,
    });
    Ok(Outcome::ok(doc, table))
}

#[derive(Args, Debug)]
pub struct ReproArgs {
    /// table1, table2, table3, table4 or figure1.
    pub target: String,
    /// Absolute tolerance; each target has its own default.
    #[arg(long)]
    pub tol: Option<f64>,
}

pub fn reproduce(a: &ReproArgs, g: &Global) -> Result<Outcome> {
    let target: Target = a.target.parse()?;
    let cfg = ReproConfig { digits: g.digits, tol: a.tol, ..ReproConfig::default() };
    let report = run_repro(target, &cfg)?;
    let mut table = Table::new(&["row", "quantity", "computed", "expected", "abs_diff", "tol", "pass"]);
    table.comments.push(format!("reproduce {} tol={:e}", target, report.tol));
    for r in &report.rows {
        table.push(vec![
            r.row.clone(),
            r.quantity.clone(),
            r.computed.clone(),
            r.expected.clone(),
            sci64(r.abs_diff, 3),
            sci64(r.tol, 1),
            r.pass.to_string(),
        ]);
    }
    let mut doc = serde_json::to_value(&report).map_err(|e| Error::Domain(e.to_string()))?;
    // Infinite differences are not valid JSON numbers.
    if let Some(rows) = doc.get_mut("rows").and_then(Value::as_array_mut) {
        for (row, r) in rows.iter_mut().zip(&report.rows) {
            row["abs_diff"] = json!(sci64(r.abs_diff, 3));
            row["tol"] = json!(sci64(r.tol, 1));
        }
    }
    doc["command"] = json!("reproduce");
    doc["passed"] = json!(report.passed());
    let mut out = Outcome::ok(doc, table);
    let failures: Vec<String> = report
        .failures()
        .map(|r| {
            format!(
                "FAIL {} {}: computed {} expected {} diff {:.3e} > tol {:.1e}{}",
                r.row,
                r.quantity,
                r.computed,
                r.expected,
                r.abs_diff,
                r.tol,
                r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
            )
        })
        .collect();
    if !failures.is_empty() {
        out.stderr = failures;
        out.code = 5;
    }
    Ok(out)
}
