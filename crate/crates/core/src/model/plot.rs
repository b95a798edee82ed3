use super::potential::{potential_scaled, PotentialSpec};
use super::wavefunction::WaveFunction;
use crate::error::{Error, Result};
use crate::exactmath::BigReal;

/// Sampled channels on a shared, strictly increasing grid.
#[derive(Clone, Debug)]
pub struct PlotSeries {
    pub grid: Vec<BigReal>,
    pub channels: Vec<(String, Vec<BigReal>)>,
}

impl PlotSeries {
    pub fn channel(&self, name: &str) -> Option<&[BigReal]> {
        self.channels.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }
}

/// Potential channel `V` plus one channel per named state on `samples`
/// equispaced points of `[lo, hi]`.
pub fn plot_series(
    p: &PotentialSpec,
    states: &[(String, WaveFunction)],
    range: (f64, f64),
    samples: usize,
) -> Result<PlotSeries> {
    let (lo, hi) = range;
    if samples < 2 || !(hi > lo) || lo < 0.0 {
        return Err(Error::InvalidInput(format!("bad plot range [{lo}, {hi}] with {samples} samples")));
    }
    let prec = p.precision();
    let grid: Vec<BigReal> = (0..samples)
        .map(|i| {
            let x = BigReal::from_f64(lo, prec)
                + BigReal::from_f64(hi - lo, prec).mul_i64(i as i64).div_i64(samples as i64 - 1);
            x
        })
        .collect();
    let mut channels = Vec::with_capacity(states.len() + 1);
    channels.push(("V".to_string(), grid.iter().map(|x| potential_scaled(p, x)).collect::<Result<Vec<_>>>()?));
    for (name, w) in states {
        channels.push((name.clone(), grid.iter().map(|x| w.eval(x)).collect::<Result<Vec<_>>>()?));
    }
    Ok(PlotSeries { grid, channels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Precision, RatPoly, Var};

    #[test]
    fn grid_and_channels() {
        let prec = Precision::digits(30);
        let p = PotentialSpec::new(-1, BigReal::one(prec), BigReal::from_i64(2, prec)).unwrap();
        let w = WaveFunction::from_rat(&p, BigReal::from_i64(-1, prec), &RatPoly::one(Var::X)).unwrap();
        let s = plot_series(&p, &[("psi".into(), w)], (0.0, 5.0), 11).unwrap();
        assert_eq!(s.grid.len(), 11);
        assert!(s.grid.windows(2).all(|w| w[0] < w[1]));
        for (_, c) in &s.channels {
            assert_eq!(c.len(), 11);
        }
        assert!((s.channel("V").unwrap()[0].to_f64() + 4.0).abs() < 1e-12);
        assert!(plot_series(&p, &[], (0.0, 5.0), 1).is_err());
    }
}
