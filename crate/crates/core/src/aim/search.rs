//! Root search on the termination function.

use rayon::prelude::*;

use super::{AimProblem, Kernel};
use crate::error::{Error, Result};
use crate::exactmath::{BigReal, Precision, DEFAULT_DIGITS};

/// Expansion centers tried in order when a root fails to stabilize.
pub const T0_SCHEDULE: [&str; 4] = ["0.5", "0.35", "0.2", "0.1"];

#[derive(Clone, Debug)]
pub struct AimConfig {
    /// First expansion center; later schedule entries below it are tried on
    /// failure. `None` starts from the head of [`T0_SCHEDULE`].
    pub t0: Option<BigReal>,
    pub digits: u32,
    /// Iteration count at which roots are located.
    pub n_max: usize,
    /// Series depth beyond `n_max`.
    pub extra_depth: usize,
    /// Absolute tolerance on `Ea2`.
    pub tol: f64,
    pub scan_points: usize,
    /// A root counts as stabilized when the last `stable_window` iterates all
    /// change sign across `[r - tol, r + tol]`.
    pub stable_window: usize,
}

impl Default for AimConfig {
    fn default() -> Self {
        AimConfig {
            t0: None,
            digits: DEFAULT_DIGITS,
            n_max: 120,
            extra_depth: 8,
            tol: 1e-13,
            scan_points: 64,
            stable_window: 12,
        }
    }
}

impl AimConfig {
    fn precision(&self) -> Precision {
        Precision::digits(self.digits)
    }

    fn schedule(&self) -> Vec<BigReal> {
        let prec = self.precision();
        let all: Vec<BigReal> = T0_SCHEDULE.iter().map(|s| BigReal::parse(s, prec).unwrap()).collect();
        match &self.t0 {
            None => all,
            Some(t0) => {
                let t0 = t0.with_precision(prec);
                let mut out = vec![t0.clone()];
                out.extend(all.into_iter().filter(|t| t < &t0));
                out
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct EigenResult {
    pub energy_scaled: BigReal,
    /// First iterate from which every later one keeps the root within `tol`.
    pub iterations: usize,
    pub t0: BigReal,
    /// `|delta_N| / (|lambda_N s_{N-1}| + |lambda_{N-1} s_N|)` at the root.
    pub residual: BigReal,
    pub stabilized: bool,
}

#[derive(Clone, Debug)]
pub struct EigenSearch {
    pub results: Vec<EigenResult>,
    pub requested: usize,
    /// How many of the requested roots are missing.
    pub shortfall: usize,
    pub t0_tried: Vec<BigReal>,
}

impl EigenSearch {
    pub fn is_complete(&self) -> bool {
        self.shortfall == 0
    }
}

struct Evaluator<'a> {
    l: i64,
    wa2: &'a BigReal,
    g: &'a BigReal,
    t0: &'a BigReal,
    cfg: &'a AimConfig,
}

impl Evaluator<'_> {
    fn deltas(&self, ea2: &BigReal) -> Result<(Vec<BigReal>, BigReal)> {
        let p = AimProblem::from_energy(self.l, self.wa2, self.g, ea2);
        let k = Kernel::new(&p, self.t0)?;
        Ok(k.deltas(self.cfg.n_max, self.cfg.extra_depth, self.cfg.precision()))
    }

    fn last_sign(&self, ea2: &BigReal) -> Result<i32> {
        Ok(self.deltas(ea2)?.0.last().map_or(0, BigReal::signum))
    }

    /// Bisects a sign change of `delta_N` inside `[a, b]`.
    fn bisect(&self, mut a: BigReal, mut b: BigReal, sa: i32, tol: &BigReal) -> Result<BigReal> {
        while &(&b - &a) > tol {
            let m = (&a + &b).div_i64(2);
            let sm = self.last_sign(&m)?;
            if sm == 0 {
                return Ok(m);
            }
            if sm == sa {
                a = m;
            } else {
                b = m;
            }
        }
        Ok((a + b).div_i64(2))
    }

    /// Classifies a located root by which iterates change sign around it.
    fn assess(&self, r: BigReal, tol: &BigReal) -> Result<EigenResult> {
        let (lo, _) = self.deltas(&(&r - tol))?;
        let (hi, _) = self.deltas(&(&r + tol))?;
        let (mid, scale) = self.deltas(&r)?;
        let n = lo.len();
        let mut first = n;
        for i in (0..n).rev() {
            if lo[i].signum() * hi[i].signum() < 0 || mid[i].is_zero() {
                first = i;
            } else {
                break;
            }
        }
        let stable_len = n - first;
        let residual = if scale.is_zero() { scale.clone() } else { mid[n - 1].abs() / scale };
        Ok(EigenResult {
            energy_scaled: r,
            iterations: first + 1,
            t0: self.t0.clone(),
            residual,
            stabilized: stable_len >= self.cfg.stable_window,
        })
    }

    /// All stabilized roots in `[lo, hi]` found on a grid of `points` cells,
    /// together with the sign changes that failed to stabilize.
    fn scan(&self, lo: &BigReal, hi: &BigReal, points: usize) -> Result<(Vec<EigenResult>, Vec<EigenResult>)> {
        let prec = self.cfg.precision();
        let tol = BigReal::from_f64(self.cfg.tol, prec);
        let width = hi - lo;
        let grid: Vec<BigReal> = (0..=points)
            .map(|j| lo + &(&width * &BigReal::from_i64(j as i64, prec).div_i64(points as i64)))
            .collect();
        let signs: Vec<i32> = grid.par_iter().map(|e| self.last_sign(e)).collect::<Result<_>>()?;
        let cells: Vec<usize> = (0..points).filter(|&j| signs[j] * signs[j + 1] < 0 || signs[j + 1] == 0).collect();
        let half = tol.div_i64(4);
        let found: Vec<EigenResult> = cells
            .par_iter()
            .map(|&j| {
                let r = if signs[j + 1] == 0 {
                    grid[j + 1].clone()
                } else {
                    self.bisect(grid[j].clone(), grid[j + 1].clone(), signs[j], &half)?
                };
                self.assess(r, &tol)
            })
            .collect::<Result<_>>()?;
        let (stable, unstable) = found.into_iter().partition(|r| r.stabilized);
        Ok((stable, unstable))
    }
}

/// Default search window in `Ea2`: the coupling term lies in `[-2g, g/4]`,
/// so eigenvalues sit between `-g` and the isotonic level plus `g/8`.
pub fn default_bracket(l: i64, wa2: &BigReal, g: &BigReal, count: usize) -> (BigReal, BigReal) {
    let prec = wa2.precision();
    let one = BigReal::one(prec);
    let lo = -(g + &one);
    let top = BigReal::from_i64(4 * (count as i64 - 1) + 2 * l + 3, prec) * wa2 / BigReal::from_i64(2, prec);
    let hi = top + g.div_i64(8) + one;
    (lo, hi)
}

/// The lowest `count` stabilized roots of the termination function in the
/// bracket, in ascending order.
pub fn find_eigenvalues(
    l: i64,
    wa2: &BigReal,
    g: &BigReal,
    bracket: Option<(BigReal, BigReal)>,
    count: usize,
    cfg: &AimConfig,
) -> Result<EigenSearch> {
    if count == 0 {
        return Err(Error::InvalidInput("count must be at least 1".into()));
    }
    if !wa2.is_positive() || g.is_negative() {
        return Err(Error::InvalidInput("need wa2 > 0 and g >= 0".into()));
    }
    let prec = cfg.precision();
    let wa2 = wa2.with_precision(prec);
    let g = g.with_precision(prec);
    let (lo, hi) = match bracket {
        Some((a, b)) => (a.with_precision(prec), b.with_precision(prec)),
        None => default_bracket(l, &wa2, &g, count),
    };
    if !(lo < hi) {
        return Err(Error::InvalidInput("empty bracket".into()));
    }
    let mut tried = Vec::new();
    let mut best: Option<Vec<EigenResult>> = None;
    let mut notes = Vec::new();
    for t0 in cfg.schedule() {
        tried.push(t0.clone());
        let ev = Evaluator { l, wa2: &wa2, g: &g, t0: &t0, cfg };
        let mut points = cfg.scan_points.max(2);
        let mut outcome = ev.scan(&lo, &hi, points)?;
        while outcome.0.len() < count && points < cfg.scan_points.max(2) * 4 {
            points *= 2;
            outcome = ev.scan(&lo, &hi, points)?;
        }
        let (stable, unstable) = outcome;
        // An unstable sign change below the requested roots means the low
        // end of the spectrum may be hidden at this center.
        let suspect = stable.len() >= count
            && unstable.iter().any(|u| u.energy_scaled < stable[count - 1].energy_scaled);
        notes.push(format!("t0={}: {} stable, {} unstable", t0.to_fixed(2), stable.len(), unstable.len()));
        if stable.len() >= count && !suspect {
            let results = stable.into_iter().take(count).collect();
            return Ok(EigenSearch { results, requested: count, shortfall: 0, t0_tried: tried });
        }
        if best.as_ref().map_or(true, |b| stable.len() > b.len()) {
            best = Some(stable);
        }
    }
    match best {
        Some(b) if !b.is_empty() => {
            let results: Vec<EigenResult> = b.into_iter().take(count).collect();
            let shortfall = count - results.len();
            Ok(EigenSearch { results, requested: count, shortfall, t0_tried: tried })
        }
        _ => Err(Error::NotStabilized {
            tried: tried.iter().map(|t| t.to_fixed(2)).collect(),
            detail: notes.join("; "),
        }),
    }
}

/// Runs the numerical engine next to a closed-form eigenvalue and checks
/// they agree within `agree`.
pub fn quasi_exact_crosscheck(
    l: i64,
    wa2: &BigReal,
    g: &BigReal,
    expected_ea2: &BigReal,
    agree: f64,
    cfg: &AimConfig,
) -> Result<EigenResult> {
    let prec = cfg.precision();
    let expected = expected_ea2.with_precision(prec);
    let w = BigReal::parse("0.25", prec).unwrap();
    let bracket = (&expected - &w, &expected + &w);
    let search = find_eigenvalues(l, wa2, g, Some(bracket), 1, cfg)?;
    let found = search.results.into_iter().next().ok_or_else(|| Error::NotStabilized {
        tried: search.t0_tried.iter().map(|t| t.to_fixed(2)).collect(),
        detail: "no root near the expected value".into(),
    })?;
    let diff = (&found.energy_scaled - &expected).abs();
    if diff > BigReal::from_f64(agree, prec) {
        return Err(Error::Disagreement { expected: expected.to_sci(15), found: found.energy_scaled.to_sci(15) });
    }
    Ok(found)
}
