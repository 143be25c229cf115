//! Seeded random edge weights and fugacities.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Region of the complex plane edge weights are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightRegime {
    /// `|1 + w| ≤ 1`.
    Antiferromagnetic,
    /// `|1 + w| > 1`.
    Ferromagnetic,
    /// Each edge independently from one of the two.
    Mixed,
}

impl WeightRegime {
    pub const ALL: [WeightRegime; 3] = [Self::Antiferromagnetic, Self::Ferromagnetic, Self::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Self::Antiferromagnetic => "antiferromagnetic",
            Self::Ferromagnetic => "ferromagnetic",
            Self::Mixed => "mixed",
        }
    }
}

/// The generator every sweep draws from.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One weight: `w = −1 + r e^{iθ}` with `r` uniform-in-area on the unit
/// disc (antiferromagnetic) or log-uniform on `(1, 10]` (ferromagnetic).
pub fn sample_weight(rng: &mut impl Rng, regime: WeightRegime) -> Complex64 {
    let regime = match regime {
        WeightRegime::Mixed if rng.gen_bool(0.5) => WeightRegime::Antiferromagnetic,
        WeightRegime::Mixed => WeightRegime::Ferromagnetic,
        r => r,
    };
    let theta = rng.gen_range(0.0..TAU);
    let r = match regime {
        WeightRegime::Antiferromagnetic => rng.gen::<f64>().sqrt(),
        // Kept away from 1 so rounding cannot move the draw across the circle.
        _ => 10f64.powf(1.0 - rng.gen::<f64>()).max(1.0 + 1e-9),
    };
    Complex64::from_polar(r, theta) - 1.0
}

pub fn sample_weights(rng: &mut impl Rng, regime: WeightRegime, count: usize) -> Vec<Complex64> {
    (0..count).map(|_| sample_weight(rng, regime)).collect()
}

/// A nonzero fugacity with modulus log-uniform on `[0.1, 10]`.
pub fn sample_q(rng: &mut impl Rng) -> Complex64 {
    let r = 10f64.powf(rng.gen_range(-1.0..=1.0));
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes_respect_their_regions() {
        let mut rng = seeded_rng(0);
        for _ in 0..1000 {
            assert!((1.0 + sample_weight(&mut rng, WeightRegime::Antiferromagnetic)).norm() <= 1.0 + 1e-15);
            assert!((1.0 + sample_weight(&mut rng, WeightRegime::Ferromagnetic)).norm() > 1.0);
        }
    }

    #[test]
    fn same_seed_same_draws() {
        let a = sample_weights(&mut seeded_rng(7), WeightRegime::Mixed, 20);
        let b = sample_weights(&mut seeded_rng(7), WeightRegime::Mixed, 20);
        assert_eq!(a, b);
    }
}
