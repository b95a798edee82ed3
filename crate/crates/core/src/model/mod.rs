//! Potential, wavefunctions, quadrature, a finite-difference oracle and plot
//! data for the scaled problem
//!
//! ```text
//! -psi'' + [l(l+1)/x^2 + (wa2)^2 x^2 + 2g(x^2-1)/(x^2+1)^2] psi = 2Ea2 psi
//! ```
//!
//! Every engine exchanges energies as `Ea2`; [`units`] converts.

pub mod oracle;
pub mod plot;
pub mod potential;
pub mod quadrature;
pub mod units;
pub mod wavefunction;

pub use oracle::{oracle_eigenvalues, OracleConfig};
pub use plot::{plot_series, PlotSeries};
pub use potential::{potential_original, potential_scaled, scale_roundtrip, PotentialSpec};
pub use quadrature::{normalize, Normalization};
pub use units::EnergyUnit;
pub use wavefunction::{assemble_wavefunction, WaveFunction};
