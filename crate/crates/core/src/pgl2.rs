//! The one-dimensional warm-up: orbit closures of `d`-tuples of points on a
//! line under PGL(2).

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TupleError {
    #[error("a tuple needs at least one point")]
    Empty,
    #[error("multiplicity at position {0} is zero")]
    ZeroMultiplicity(usize),
}

/// Distinct points `p_1, …, p_s` on a line with multiplicities `m_i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleConfig {
    multiplicities: Vec<u64>,
}

impl TupleConfig {
    pub fn new(multiplicities: Vec<u64>) -> Result<Self, TupleError> {
        if multiplicities.is_empty() {
            return Err(TupleError::Empty);
        }
        if let Some(i) = multiplicities.iter().position(|&m| m == 0) {
            return Err(TupleError::ZeroMultiplicity(i));
        }
        Ok(TupleConfig { multiplicities })
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// `d = Σ m_i`.
    pub fn degree(&self) -> BigInt {
        self.power_sum(1)
    }

    /// `m^(k) = Σ m_i^k`.
    pub fn power_sum(&self, k: u32) -> BigInt {
        self.multiplicities
            .iter()
            .map(|&m| num_traits::pow(BigInt::from(m), k as usize))
            .sum()
    }
}

/// `d³ − 3d·m^(2) + 2·m^(3)`.
pub fn pgl2_predegree(cfg: &TupleConfig) -> BigInt {
    let d = cfg.degree();
    &d * &d * &d - BigInt::from(3) * &d * cfg.power_sum(2) + BigInt::from(2) * cfg.power_sum(3)
}

/// Counts by brute force: a Möbius transformation is fixed by where it sends
/// three distinct points, so every ordered triple of distinct support points
/// contributes the product of their multiplicities.
pub fn pgl2_oracle(cfg: &TupleConfig) -> BigInt {
    let m = cfg.multiplicities();
    let mut total = BigInt::from(0);
    for (a, &ma) in m.iter().enumerate() {
        for (b, &mb) in m.iter().enumerate() {
            for (c, &mc) in m.iter().enumerate() {
                if a != b && b != c && a != c {
                    total += BigInt::from(ma) * mb * mc;
                }
            }
        }
    }
    total
}
