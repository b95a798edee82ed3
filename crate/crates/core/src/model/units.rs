//! Energy conventions. `Ea2` is canonical; `2Ea2` is the eigenvalue of the
//! scaled operator; `E_over_w = Ea2 / wa2`; `E_reduced = Ea2 / (2 wa2)` is
//! the `(2l + 3 + 4mu)/4` column used for the degree-two tables.

use serde::{Deserialize, Serialize};

use crate::exactmath::BigReal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergyUnit {
    #[serde(rename = "Ea2")]
    Ea2,
    #[serde(rename = "2Ea2")]
    TwoEa2,
    #[serde(rename = "E_over_w")]
    EOverW,
    #[serde(rename = "E_reduced")]
    Reduced,
}

impl EnergyUnit {
    pub fn label(self) -> &'static str {
        match self {
            EnergyUnit::Ea2 => "Ea2",
            EnergyUnit::TwoEa2 => "2Ea2",
            EnergyUnit::EOverW => "E_over_w",
            EnergyUnit::Reduced => "E_reduced",
        }
    }

    /// Converts a canonical `Ea2` value into this unit.
    pub fn from_ea2(self, ea2: &BigReal, wa2: &BigReal) -> BigReal {
        match self {
            EnergyUnit::Ea2 => ea2.clone(),
            EnergyUnit::TwoEa2 => ea2.mul_i64(2),
            EnergyUnit::EOverW => ea2 / wa2,
            EnergyUnit::Reduced => ea2 / &wa2.mul_i64(2),
        }
    }

    /// Converts a value in this unit back to `Ea2`.
    pub fn to_ea2(self, v: &BigReal, wa2: &BigReal) -> BigReal {
        match self {
            EnergyUnit::Ea2 => v.clone(),
            EnergyUnit::TwoEa2 => v.div_i64(2),
            EnergyUnit::EOverW => v * wa2,
            EnergyUnit::Reduced => v * &wa2.mul_i64(2),
        }
    }

    pub fn from_ea2_f64(self, ea2: f64, wa2: f64) -> f64 {
        match self {
            EnergyUnit::Ea2 => ea2,
            EnergyUnit::TwoEa2 => 2.0 * ea2,
            EnergyUnit::EOverW => ea2 / wa2,
            EnergyUnit::Reduced => ea2 / (2.0 * wa2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{within, Precision};

    #[test]
    fn roundtrips() {
        let p = Precision::digits(30);
        let wa2 = BigReal::parse("1.5", p).unwrap();
        let e = BigReal::parse("-2.25", p).unwrap();
        for u in [EnergyUnit::Ea2, EnergyUnit::TwoEa2, EnergyUnit::EOverW, EnergyUnit::Reduced] {
            assert!(within(&u.to_ea2(&u.from_ea2(&e, &wa2), &wa2), &e, &p.epsilon(2)));
        }
        assert_eq!(EnergyUnit::Reduced.from_ea2_f64(3.0, 1.5), 1.0);
    }
}
