//! Regression harness over the printed tables and the figure data.

pub mod closed;
pub mod fixtures;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::aim::{find_eigenvalues, AimConfig};
use crate::error::{Error, Result};
use crate::exactmath::{
    int, parse_rational, poly_real_roots, rational_to_string, BigReal, Precision, Rational, RootInterval,
};
use crate::model::{plot_series, potential_scaled, PlotSeries, PotentialSpec, WaveFunction};
use crate::quasipoly::case2::{case2_q, case2_solution_at_root, Case2Solution};
use crate::quasipoly::general::{general_quasi_solve, QuasiSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Table1,
    Table2,
    Table3,
    Table4,
    Figure1,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Table1 => "table1",
            Target::Table2 => "table2",
            Target::Table3 => "table3",
            Target::Table4 => "table4",
            Target::Figure1 => "figure1",
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            Target::Table1 | Target::Table2 => 1e-30,
            Target::Table3 => 1e-12,
            Target::Table4 => 1e-9,
            Target::Figure1 => 1e-3,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "table1" => Target::Table1,
            "table2" => Target::Table2,
            "table3" => Target::Table3,
            "table4" => Target::Table4,
            "figure1" => Target::Figure1,
            _ => return Err(Error::InvalidInput(format!("unknown target {s:?}"))),
        })
    }
}

/// One compared quantity.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub row: String,
    pub quantity: String,
    pub computed: String,
    pub expected: String,
    pub abs_diff: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RowCheck {
    fn numeric(row: &str, quantity: &str, computed: &BigReal, expected: &BigReal, tol: f64, decimals: usize) -> Self {
        let diff = (computed - expected).abs().to_f64();
        RowCheck {
            row: row.into(),
            quantity: quantity.into(),
            computed: computed.to_sci(decimals),
            expected: expected.to_sci(decimals),
            abs_diff: diff,
            tol,
            pass: diff <= tol,
            note: None,
        }
    }

    fn exact(row: &str, quantity: &str, computed: &Rational, expected: &Rational, tol: f64) -> Self {
        let pass = computed == expected;
        RowCheck {
            row: row.into(),
            quantity: quantity.into(),
            computed: rational_to_string(computed),
            expected: rational_to_string(expected),
            abs_diff: if pass { 0.0 } else { f64::INFINITY },
            tol,
            pass,
            note: Some("exact".into()),
        }
    }

    fn missing(row: &str, quantity: &str, expected: String, tol: f64, why: String) -> Self {
        RowCheck {
            row: row.into(),
            quantity: quantity.into(),
            computed: "-".into(),
            expected,
            abs_diff: f64::INFINITY,
            tol,
            pass: false,
            note: Some(why),
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub target: Target,
    pub tol: f64,
    pub digits: u32,
    pub rows: Vec<RowCheck>,
}

impl ReproReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

#[derive(Clone, Debug)]
pub struct ReproConfig {
    pub digits: u32,
    /// Overrides [`Target::default_tol`].
    pub tol: Option<f64>,
    pub aim: AimConfig,
}

impl Default for ReproConfig {
    fn default() -> Self {
        ReproConfig { digits: 40, tol: None, aim: AimConfig::default() }
    }
}

pub fn reproduce(target: Target, cfg: &ReproConfig) -> Result<ReproReport> {
    let tol = cfg.tol.unwrap_or_else(|| target.default_tol());
    let rows = match target {
        Target::Table1 => closed_form_checks(1, cfg.digits, tol)?,
        Target::Table2 => closed_form_checks(2, cfg.digits, tol)?,
        Target::Table3 => table3_checks(cfg.digits, tol)?,
        Target::Table4 => table4_checks(&cfg.aim, tol)?,
        Target::Figure1 => figure1_checks(cfg.digits.max(30), tol)?,
    };
    let digits = if target == Target::Table4 { cfg.aim.digits } else { cfg.digits };
    Ok(ReproReport { target, tol, digits, rows })
}

fn nearest<'a>(sols: &'a [QuasiSolution], mu: &BigReal) -> Option<&'a QuasiSolution> {
    sols.iter().min_by(|a, b| {
        let da = (&a.mu - mu).abs();
        let db = (&b.mu - mu).abs();
        da.partial_cmp(&db).unwrap_or(std::cmp::Ordering::Equal)
    })
}

fn wa2_label(w: &Rational) -> String {
    rational_to_string(w)
}

/// Degree-one closed forms against the roots of the degree-one condition.
pub fn closed_form_checks(table: u8, digits: u32, tol: f64) -> Result<Vec<RowCheck>> {
    let prec = Precision::digits(digits);
    let rows: Vec<_> = fixtures::closed_form_rows()?.into_iter().filter(|r| r.table == table).collect();
    let mut cache: BTreeMap<(i64, String), Vec<QuasiSolution>> = BTreeMap::new();
    for r in &rows {
        let key = (r.l, wa2_label(&r.wa2));
        if !cache.contains_key(&key) {
            cache.insert(key, general_quasi_solve(1, &int(r.l), &r.wa2, digits)?);
        }
    }
    let mut out = Vec::new();
    for r in &rows {
        let label = format!("{}.{} (l={}, wa2={})", r.table, r.row, r.l, wa2_label(&r.wa2));
        let cf = closed::evaluate(r, prec)?;
        let sols = &cache[&(r.l, wa2_label(&r.wa2))];
        let Some(s) = nearest(sols, &cf.mu) else {
            out.push(RowCheck::missing(&label, "mu", cf.mu.to_sci(35), tol, "no real root".into()));
            continue;
        };
        if let (Some((mu, g, e)), Some(smu)) = (&cf.exact, &s.mu_exact) {
            let se = int(r.l) + Rational::new(3.into(), 2.into()) + smu * int(2);
            out.push(RowCheck::exact(&label, "mu", smu, mu, tol));
            out.push(RowCheck::exact(&label, "g", s.g_exact.as_ref().unwrap_or(&int(0)), g, tol));
            out.push(RowCheck::exact(&label, "E_over_w", &se, e, tol));
            continue;
        }
        out.push(RowCheck::numeric(&label, "mu", &s.mu, &cf.mu, tol, 35));
        out.push(RowCheck::numeric(&label, "g", &s.g, &cf.g, tol, 35));
        out.push(RowCheck::numeric(&label, "E_over_w", &s.e_over_w, &cf.e_over_w, tol, 35));
    }
    Ok(out)
}

fn parse_big(s: &str, prec: Precision) -> Result<BigReal> {
    BigReal::parse(s, prec).ok_or_else(|| Error::InvalidInput(format!("fixture: bad number {s:?}")))
}

pub fn table3_checks(digits: u32, tol: f64) -> Result<Vec<RowCheck>> {
    let prec = Precision::digits(digits);
    let rows = fixtures::table3_rows()?;
    let mut cache: BTreeMap<(i64, String), Vec<QuasiSolution>> = BTreeMap::new();
    let mut out = Vec::new();
    for r in &rows {
        let key = (r.l, wa2_label(&r.wa2));
        if !cache.contains_key(&key) {
            cache.insert(key.clone(), general_quasi_solve(2, &int(r.l), &r.wa2, digits)?);
        }
        let label = format!("l={}, wa2={}, #{}", r.l, wa2_label(&r.wa2), r.index);
        let mu = parse_big(&r.mu, prec)?;
        let Some(s) = nearest(&cache[&key], &mu) else {
            out.push(RowCheck::missing(&label, "mu", r.mu.clone(), tol, "no real root".into()));
            continue;
        };
        out.push(RowCheck::numeric(&label, "mu", &s.mu, &mu, tol, 16));
        out.push(RowCheck::numeric(&label, "g", &s.g, &parse_big(&r.g, prec)?, tol, 16));
        out.push(
            RowCheck::numeric(&label, "E_reduced", &s.reduced_energy(), &parse_big(&r.e_reduced, prec)?, tol, 16)
                .with_note(format!("Ea2 = {}", s.energy_scaled.to_sci(16))),
        );
    }
    Ok(out)
}

/// One row's four energies: `l = -1` gives `E0, E2`, `l = 0` gives `E1, E3`.
pub fn table4_energies(g: &BigReal, cfg: &AimConfig) -> Result<[(BigReal, usize); 4]> {
    let prec = Precision::digits(cfg.digits);
    let wa2 = parse_big(fixtures::TABLE4_WA2, prec)?;
    let run = |l: i64| -> Result<Vec<(BigReal, usize)>> {
        let s = find_eigenvalues(l, &wa2, g, None, 2, cfg)?;
        if !s.is_complete() {
            return Err(Error::NotStabilized {
                tried: s.t0_tried.iter().map(|t| t.to_fixed(2)).collect(),
                detail: format!("l={l}: only {} of 2 roots", s.results.len()),
            });
        }
        Ok(s.results.into_iter().map(|r| (r.energy_scaled, r.iterations)).collect())
    };
    let (even, odd) = rayon::join(|| run(-1), || run(0));
    let (even, odd) = (even?, odd?);
    Ok([even[0].clone(), odd[0].clone(), even[1].clone(), odd[1].clone()])
}

pub fn table4_checks(cfg: &AimConfig, tol: f64) -> Result<Vec<RowCheck>> {
    let prec = Precision::digits(cfg.digits);
    let rows = fixtures::table4_rows()?;
    let per_row: Vec<Vec<RowCheck>> = rows
        .par_iter()
        .map(|r| {
            let label = format!("g={}", r.g);
            let g = match parse_big(&r.g, prec) {
                Ok(g) => g,
                Err(e) => return vec![RowCheck::missing(&label, "g", r.g.clone(), tol, e.to_string())],
            };
            match table4_energies(&g, cfg) {
                Ok(found) => found
                    .iter()
                    .zip(&r.energies)
                    .zip(&r.iterations)
                    .enumerate()
                    .map(|(i, (((e, it), want), pit))| {
                        let w = parse_big(want, prec).unwrap_or_else(|_| BigReal::zero(prec));
                        RowCheck::numeric(&label, &format!("E{i}a2"), e, &w, tol, 12)
                            .with_note(format!("iterations {it} (printed {pit})"))
                    })
                    .collect(),
                Err(e) => (0..4)
                    .map(|i| RowCheck::missing(&label, &format!("E{i}a2"), r.energies[i].clone(), tol, e.to_string()))
                    .collect(),
            }
        })
        .collect();
    Ok(per_row.into_iter().flatten().collect())
}

/// The `n = 3`, `l = -1` state at `wa2 = 15/14`.
pub fn figure1_state(digits: u32) -> Result<(PotentialSpec, WaveFunction, Case2Solution)> {
    let q = case2_q(-1, 3)?;
    let roots = poly_real_roots(&q, &RootInterval::positive(), digits)?;
    let root = roots.first().ok_or_else(|| Error::Domain("no positive root of Q_2".into()))?;
    let sol = case2_solution_at_root(-1, 3, root, digits)?;
    let exact = sol.exact.as_ref().ok_or_else(|| Error::Domain("figure state root is not rational".into()))?;
    let prec = Precision::digits(digits);
    let p = PotentialSpec::new(
        -1,
        BigReal::from_rational(&exact.wa2, prec),
        BigReal::from_rational(&exact.g, prec),
    )?;
    let w = WaveFunction::from_rat(&p, BigReal::from_rational(&exact.mu, prec), &exact.factor_z.polynomial)?;
    Ok((p, w, sol))
}

pub fn figure1_series(digits: u32, range: (f64, f64), samples: usize) -> Result<PlotSeries> {
    let (p, w, _) = figure1_state(digits)?;
    plot_series(&p, &[("psi3".to_string(), w)], range, samples)
}

pub fn figure1_checks(digits: u32, tol: f64) -> Result<Vec<RowCheck>> {
    let want = fixtures::figure1_values()?;
    let get = |k: &str| want.get(k).cloned().ok_or_else(|| Error::InvalidInput(format!("fixture: missing {k}")));
    let prec = Precision::digits(digits);
    let (p, w, _) = figure1_state(digits)?;
    let zero = BigReal::zero(prec);
    let mut out = Vec::new();
    let v0 = potential_scaled(&p, &zero)?;
    out.push(RowCheck::numeric("x=0", "V3", &v0, &BigReal::from_rational(&get("V0")?, prec), prec.epsilon(5).to_f64(), 20));
    let f = w.exact_factor.clone().unwrap_or_else(|| crate::exactmath::RatPoly::zero(crate::exactmath::Var::Z));
    out.push(RowCheck::exact("x=0", "psi3", &f.eval(&int(1)), &get("psi0")?, 0.0));
    let changes = w.sign_changes()? as i64;
    out.push(RowCheck::exact("(0,inf)", "sign_changes", &int(changes), &get("sign_changes")?, 0.0));
    let x = BigReal::from_i64(50, prec);
    let ratio = potential_scaled(&p, &x)? / (&x * &x);
    out.push(RowCheck::numeric("x=50", "V3/x^2", &ratio, &BigReal::from_rational(&get("x2_coefficient")?, prec), tol, 12));
    Ok(out)
}

/// Parses `a/b` or a decimal into an exact rational parameter.
pub fn parse_param(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidInput(format!("not a number: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table3_reproduces() {
        let rep = reproduce(Target::Table3, &ReproConfig::default()).unwrap();
        assert_eq!(rep.rows.len(), 48);
        for r in &rep.rows {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn figure1_reproduces() {
        let rep = reproduce(Target::Figure1, &ReproConfig::default()).unwrap();
        assert!(rep.passed(), "{:?}", rep.rows);
        let s = figure1_series(30, (0.0, 5.0), 11).unwrap();
        assert_eq!(s.channels.len(), 2);
    }

    #[test]
    fn table2_reproduces() {
        let rep = reproduce(Target::Table2, &ReproConfig::default()).unwrap();
        for r in &rep.rows {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn targets_parse() {
        for t in ["table1", "table2", "table3", "table4", "figure1"] {
            assert_eq!(t.parse::<Target>().unwrap().name(), t);
        }
        assert!("table5".parse::<Target>().is_err());
    }
}
