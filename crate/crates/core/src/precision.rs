//! Working-precision configuration.
//!
//! Precision is never ambient: every numerical routine receives the
//! [`PrecisionConfig`] it must compute at. `target_eps` is the accuracy the
//! engine aims to certify after the guard bits absorb accumulated rounding.

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    working_bits: usize,
    guard_bits: usize,
}

impl PrecisionConfig {
    pub fn new(working_bits: usize, guard_bits: usize) -> Result<Self> {
        if working_bits < 64 {
            return Err(Error::Domain(format!(
                "working_bits must be >= 64, got {working_bits}"
            )));
        }
        if guard_bits < 16 {
            return Err(Error::Domain(format!(
                "guard_bits must be >= 16, got {guard_bits}"
            )));
        }
        if working_bits - guard_bits < 48 {
            return Err(Error::Domain(format!(
                "working_bits - guard_bits must be >= 48, got {}",
                working_bits - guard_bits
            )));
        }
        Ok(Self {
            working_bits,
            guard_bits,
        })
    }

    pub fn working_bits(&self) -> usize {
        self.working_bits
    }

    pub fn guard_bits(&self) -> usize {
        self.guard_bits
    }

    /// 2^-(working_bits - guard_bits), the certified accuracy target.
    pub fn target_eps(&self) -> Real {
        Real::two_pow(-((self.working_bits - self.guard_bits) as i64), self)
    }

    pub fn target_eps_log2(&self) -> i64 {
        -((self.working_bits - self.guard_bits) as i64)
    }
}

impl Default for PrecisionConfig {
    /// 192 working bits with 32 guard bits: enough headroom for the
    /// acceptance tolerances down to 1e-40.
    fn default() -> Self {
        Self {
            working_bits: 192,
            guard_bits: 32,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_enforced() {
        assert!(PrecisionConfig::new(64, 16, ).is_ok());
        assert!(PrecisionConfig::new(63, 16).is_err());
        assert!(PrecisionConfig::new(128, 8).is_err());
        assert!(PrecisionConfig::new(60, 16).is_err());
        assert!(PrecisionConfig::new(64, 17).is_err());
    }

    #[test]
    fn eps_matches_bits() {
        let cfg = PrecisionConfig::default();
        let eps = cfg.target_eps();
        assert_eq!(eps.exponent_of_two(), Some(-160));
    }
}
