//! Finite-difference eigenvalues of the scaled operator on `(0, L]`.
//!
//! Second-order central differences give a symmetric tridiagonal matrix
//! whose lowest eigenvalues are bracketed by Sturm counts and bisected. For
//! `l >= 0` the grid is vertex centred with `psi(0) = 0`; for `l = -1` the
//! states are regular and nonzero at the origin, so the grid is cell
//! centred with `psi'(0) = 0`. Two grids `M`, `2M` are combined by
//! Richardson extrapolation.

use super::potential::PotentialSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Domain cutoff; `None` picks `max(8, (6 + sqrt(4 count + 2l + 3))/sqrt(wa2))`,
    /// six Gaussian lengths past the outermost isotonic turning point.
    pub cutoff: Option<f64>,
    /// Interior grid points of the coarse grid.
    pub points: usize,
    /// Also solve on `1.25 L` and fail if the eigenvalues move.
    pub check_cutoff: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cutoff: None, points: 4000, check_cutoff: true }
    }
}

impl OracleConfig {
    pub fn cutoff_for(&self, l: i64, wa2: f64, count: usize) -> f64 {
        self.cutoff.unwrap_or_else(|| {
            let turning = ((4 * count) as f64 + (2 * l + 3) as f64).max(0.0).sqrt();
            8f64.max((6.0 + turning) / wa2.sqrt())
        })
    }

    fn validate(&self, cutoff: f64) -> Result<()> {
        let l = cutoff;
        if !(l > 0.0) || self.points < 64 {
            return Err(Error::InvalidInput(format!("oracle needs L > 0 and M >= 64 (got L = {l}, M = {})", self.points)));
        }
        Ok(())
    }
}

struct Tridiagonal {
    diag: Vec<f64>,
    off2: f64,
    h: f64,
}

impl Tridiagonal {
    fn build(p: &PotentialSpec, cutoff: f64, m: usize) -> Self {
        let h = cutoff / m as f64;
        let inv = 1.0 / (h * h);
        let v = p.to_f64();
        let diag = if p.l == -1 {
            (1..=m)
                .map(|i| {
                    let x = (i as f64 - 0.5) * h;
                    let kin = if i == 1 { inv } else { 2.0 * inv };
                    kin + v(x)
                })
                .collect()
        } else {
            (1..m).map(|i| 2.0 * inv + v(i as f64 * h)).collect()
        };
        Tridiagonal { diag, off2: inv * inv, h }
    }

    /// Number of eigenvalues below `x`.
    fn count_below(&self, x: f64) -> usize {
        let mut n = 0;
        let mut q = 1.0;
        for (i, d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - x } else { d - x - self.off2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + x.abs() + 1.0);
            }
            if q < 0.0 {
                n += 1;
            }
        }
        n
    }

    fn lowest(&self, count: usize) -> Vec<f64> {
        let lo0 = self.diag.iter().cloned().fold(f64::INFINITY, f64::min) - 4.0 / (self.h * self.h);
        let mut hi0 = self.diag.iter().cloned().fold(f64::INFINITY, f64::min).abs() + 1.0;
        while self.count_below(hi0) < count {
            hi0 *= 2.0;
        }
        (0..count)
            .map(|k| {
                let (mut lo, mut hi) = (lo0, hi0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi || hi - lo < 1e-14 * (1.0 + mid.abs()) {
                        break;
                    }
                    if self.count_below(mid) > k {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    }
}

fn solve(p: &PotentialSpec, cutoff: f64, m: usize, count: usize) -> Vec<f64> {
    Tridiagonal::build(p, cutoff, m).lowest(count)
}

/// The lowest `count` eigenvalues in `Ea2` units.
pub fn oracle_eigenvalues(p: &PotentialSpec, count: usize, cfg: &OracleConfig) -> Result<Vec<f64>> {
    let cutoff = cfg.cutoff_for(p.l, p.wa2.to_f64(), count);
    cfg.validate(cutoff)?;
    let m = cfg.points;
    let coarse = solve(p, cutoff, m, count);
    let fine = solve(p, cutoff, 2 * m, count);
    let h = cutoff / m as f64;
    let v = p.to_f64();
    let vmin = (1..=m).map(|i| v(i as f64 * h)).fold(f64::INFINITY, f64::min);
    let mut out = Vec::with_capacity(count);
    for (i, (c, f)) in coarse.iter().zip(&fine).enumerate() {
        let drift = (f - c).abs();
        let scale = 1.0 + c.abs() + vmin.abs();
        let expected = h * h * scale * scale / 12.0;
        if drift > 10.0 * expected {
            return Err(Error::CutoffTooSmall { index: i, shift: drift });
        }
        out.push((4.0 * f - c) / 3.0);
    }
    if cfg.check_cutoff {
        let short = 1.25 * cutoff;
        let ms = (1.25 * m as f64).round() as usize;
        let sc = solve(p, short, ms, count);
        let sf = solve(p, short, 2 * ms, count);
        for (i, ((c, f), full)) in sc.iter().zip(&sf).zip(&out).enumerate() {
            let e = (4.0 * f - c) / 3.0;
            if (e - full).abs() > 1e-7 * (1.0 + full.abs()) {
                return Err(Error::CutoffTooSmall { index: i, shift: (e - full).abs() });
            }
        }
    }
    Ok(out.into_iter().map(|v| v / 2.0).collect())
}
