//! Arbitrary-precision real numbers.
//!
//! Thin wrapper over `astro_float::BigFloat` that pins the rounding mode and
//! routes every operation through an explicit [`PrecisionConfig`]. A
//! thread-local cache holds the transcendental-constant tables that the
//! backend needs (pi, ln 2, ...); it is pure memoization and carries no
//! semantic state.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::precision::PrecisionConfig;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Debug, Clone)]
pub struct Real(BigFloat);

impl Real {
    fn p(cfg: &PrecisionConfig) -> usize {
        cfg.working_bits()
    }

    pub fn zero(cfg: &PrecisionConfig) -> Self {
        Real(BigFloat::new(Self::p(cfg)))
    }

    pub fn one(cfg: &PrecisionConfig) -> Self {
        Real(BigFloat::from_i8(1, Self::p(cfg)))
    }

    pub fn from_i64(v: i64, cfg: &PrecisionConfig) -> Self {
        Real(BigFloat::from_i64(v, Self::p(cfg)))
    }

    pub fn from_u64(v: u64, cfg: &PrecisionConfig) -> Self {
        Real(BigFloat::from_u64(v, Self::p(cfg)))
    }

    pub fn from_f64(v: f64, cfg: &PrecisionConfig) -> Self {
        Real(BigFloat::from_f64(v, Self::p(cfg)))
    }

    /// Parse a decimal literal at working precision.
    pub fn parse(s: &str, cfg: &PrecisionConfig) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, Self::p(cfg), RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Real(v))
        }
    }

    /// Exact power of two, 2^e.
    pub fn two_pow(e: i64, cfg: &PrecisionConfig) -> Self {
        let mut v = BigFloat::from_i8(1, Self::p(cfg));
        v.set_exponent((e + 1) as astro_float::Exponent);
        Real(v)
    }

    pub fn pi(cfg: &PrecisionConfig) -> Self {
        Real(with_consts(|cc| cc.pi(Self::p(cfg), RM)))
    }

    pub fn ln2(cfg: &PrecisionConfig) -> Self {
        Real(with_consts(|cc| cc.ln_2(Self::p(cfg), RM)))
    }

    pub fn euler_gamma(cfg: &PrecisionConfig) -> Self {
        // 80 decimal digits, enough for working precisions up to 256 bits.
        Self::parse(
            "5.772156649015328606065120900824024310421593359399235988057672348848677267776646709e-1",
            cfg,
        )
        .expect("euler gamma literal")
    }

    // -- arithmetic ------------------------------------------------------

    pub fn add(&self, rhs: &Real, cfg: &PrecisionConfig) -> Real {
        Real(self.0.add(&rhs.0, Self::p(cfg), RM))
    }

    pub fn sub(&self, rhs: &Real, cfg: &PrecisionConfig) -> Real {
        Real(self.0.sub(&rhs.0, Self::p(cfg), RM))
    }

    pub fn mul(&self, rhs: &Real, cfg: &PrecisionConfig) -> Real {
        Real(self.0.mul(&rhs.0, Self::p(cfg), RM))
    }

    pub fn div(&self, rhs: &Real, cfg: &PrecisionConfig) -> Real {
        Real(self.0.div(&rhs.0, Self::p(cfg), RM))
    }

    pub fn recip(&self, cfg: &PrecisionConfig) -> Real {
        Real(self.0.reciprocal(Self::p(cfg), RM))
    }

    pub fn neg(&self) -> Real {
        Real(self.0.neg())
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn mul_i64(&self, k: i64, cfg: &PrecisionConfig) -> Real {
        self.mul(&Real::from_i64(k, cfg), cfg)
    }

    /// self * 2^e (exact).
    pub fn scale2(&self, e: i64) -> Real {
        if self.0.is_zero() || self.0.is_nan() || self.0.is_inf() {
            return self.clone();
        }
        let mut v = self.0.clone();
        let cur = v.exponent().expect("finite");
        v.set_exponent(cur + e as astro_float::Exponent);
        Real(v)
    }

    pub fn sqrt(&self, cfg: &PrecisionConfig) -> Real {
        Real(self.0.sqrt(Self::p(cfg), RM))
    }

    /// Integer power with exponent >= 0.
    pub fn powi(&self, n: usize, cfg: &PrecisionConfig) -> Real {
        Real(self.0.powi(n, Self::p(cfg), RM))
    }

    pub fn exp(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.exp(Self::p(cfg), RM, cc)))
    }

    pub fn ln(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.ln(Self::p(cfg), RM, cc)))
    }

    pub fn pow(&self, e: &Real, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.pow(&e.0, Self::p(cfg), RM, cc)))
    }

    pub fn sin(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.sin(Self::p(cfg), RM, cc)))
    }

    pub fn cos(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.cos(Self::p(cfg), RM, cc)))
    }

    pub fn atan(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.atan(Self::p(cfg), RM, cc)))
    }

    pub fn acos(&self, cfg: &PrecisionConfig) -> Real {
        Real(with_consts(|cc| self.0.acos(Self::p(cfg), RM, cc)))
    }

    /// Four-quadrant arctangent of self/x.
    pub fn atan2(&self, x: &Real, cfg: &PrecisionConfig) -> Real {
        let y = self;
        if x.is_zero() && y.is_zero() {
            return Real::zero(cfg);
        }
        if x.is_positive() || x.is_zero() {
            if x.is_zero() {
                let half_pi = Real::pi(cfg).scale2(-1);
                return if y.is_negative() { half_pi.neg() } else { half_pi };
            }
            y.div(x, cfg).atan(cfg)
        } else {
            let base = y.div(x, cfg).atan(cfg);
            let pi = Real::pi(cfg);
            if y.is_negative() {
                base.sub(&pi, cfg)
            } else {
                base.add(&pi, cfg)
            }
        }
    }

    // -- predicates and comparisons ---------------------------------------

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn signum_i(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn cmp(&self, rhs: &Real) -> Option<Ordering> {
        self.0.cmp(&rhs.0).map(|s| s.cmp(&0))
    }

    pub fn lt(&self, rhs: &Real) -> bool {
        self.cmp(rhs) == Some(Ordering::Less)
    }

    pub fn le(&self, rhs: &Real) -> bool {
        matches!(self.cmp(rhs), Some(Ordering::Less | Ordering::Equal))
    }

    pub fn gt(&self, rhs: &Real) -> bool {
        self.cmp(rhs) == Some(Ordering::Greater)
    }

    pub fn ge(&self, rhs: &Real) -> bool {
        matches!(self.cmp(rhs), Some(Ordering::Greater | Ordering::Equal))
    }

    /// Binary exponent e such that |self| in [2^(e-1), 2^e), None for zero/non-finite.
    pub fn exponent(&self) -> Option<i64> {
        self.0.exponent().map(|e| e as i64)
    }

    /// If self is an exact power of two, its exponent.
    pub fn exponent_of_two(&self) -> Option<i64> {
        let (m, n, _, e, _) = self.0.as_raw_parts()?;
        let mut bits = 0u32;
        for w in &m[..(n + astro_float::WORD_BIT_SIZE - 1) / astro_float::WORD_BIT_SIZE] {
            bits += w.count_ones();
        }
        if bits == 1 {
            Some(e as i64 - 1)
        } else {
            None
        }
    }

    // -- conversions -------------------------------------------------------

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        match self.0.as_raw_parts() {
            Some((m, _, s, e, _)) => {
                // value = 0.mantissa * 2^e, words little-endian, top word normalized
                let nw = m.len();
                let mut frac = m[nw - 1] as f64 / 2f64.powi(astro_float::WORD_BIT_SIZE as i32);
                if nw >= 2 {
                    frac += m[nw - 2] as f64 / 2f64.powi(2 * astro_float::WORD_BIT_SIZE as i32);
                }
                let v = frac * 2f64.powi(e as i32);
                if s == Sign::Neg {
                    -v
                } else {
                    v
                }
            }
            None => f64::NAN,
        }
    }

    /// Decimal string with the given number of significant digits.
    pub fn to_dec(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        if self.0.is_nan() || self.0.is_inf() {
            return format!("{}", self.0);
        }
        let (sig, exp10) = self.dec_parts(digits);
        format!("{}e{}", sig, exp10)
    }

    /// (signed significand string "d.ddd..", decimal exponent)
    fn dec_parts(&self, digits: usize) -> (String, i64) {
        let mut v = self.0.clone();
        let neg = v.is_negative();
        v = v.abs();
        // decimal exponent estimate from binary exponent
        let e2 = v.exponent().unwrap() as f64;
        let mut e10 = (e2 * std::f64::consts::LOG10_2).floor() as i64;
        let cfgp = v.mantissa_max_bit_len().unwrap_or(192).max(64 + digits * 4);
        let ten = BigFloat::from_i8(10, cfgp);
        let mut cc = Consts::new().unwrap();
        // scale into [1, 10)
        let scale = ten.pow(&BigFloat::from_i64(e10, cfgp), cfgp, RM, &mut cc);
        let mut mant = v.div(&scale, cfgp, RM);
        let one = BigFloat::from_i8(1, cfgp);
        while mant.cmp(&ten).map(|c| c >= 0).unwrap_or(false) {
            mant = mant.div(&ten, cfgp, RM);
            e10 += 1;
        }
        while mant.cmp(&one).map(|c| c < 0).unwrap_or(false) {
            mant = mant.mul(&ten, cfgp, RM);
            e10 -= 1;
        }
        // extract digits
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        for i in 0..digits {
            let d = mant.int();
            let di = digit_value(&d);
            out.push(char::from_digit(di as u32, 10).unwrap());
            if i == 0 {
                out.push('.');
            }
            mant = mant.sub(&d, cfgp, RM).mul(&ten, cfgp, RM);
        }
        (out, e10)
    }

    pub(crate) fn raw(&self) -> &BigFloat {
        &self.0
    }

    pub(crate) fn from_raw(v: BigFloat) -> Real {
        Real(v)
    }
}

fn digit_value(d: &BigFloat) -> u8 {
    for k in 0..=9u8 {
        if d.cmp(&BigFloat::from_u8(k, 64)) == Some(0) {
            return k;
        }
    }
    9
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn basic_arithmetic() {
        let c = cfg();
        let a = Real::from_i64(7, &c);
        let b = Real::from_i64(3, &c);
        assert_eq!(a.add(&b, &c).to_f64(), 10.0);
        assert_eq!(a.sub(&b, &c).to_f64(), 4.0);
        assert_eq!(a.mul(&b, &c).to_f64(), 21.0);
        let q = a.div(&b, &c);
        assert!((q.to_f64() - 7.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn two_pow_and_scale() {
        let c = cfg();
        let e = Real::two_pow(-160, &c);
        assert_eq!(e.exponent_of_two(), Some(-160));
        let x = Real::from_i64(3, &c).scale2(-2);
        assert_eq!(x.to_f64(), 0.75);
    }

    #[test]
    fn transcendentals_agree_with_f64() {
        let c = cfg();
        let x = Real::from_f64(1.25, &c);
        assert!((x.exp(&c).to_f64() - 1.25f64.exp()).abs() < 1e-14);
        assert!((x.ln(&c).to_f64() - 1.25f64.ln()).abs() < 1e-14);
        assert!((x.sin(&c).to_f64() - 1.25f64.sin()).abs() < 1e-14);
        assert!((x.cos(&c).to_f64() - 1.25f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn atan2_quadrants() {
        let c = cfg();
        for (y, x) in [(1.0, 2.0), (1.0, -2.0), (-1.0, -2.0), (-1.0, 2.0), (1.0, 0.0), (-1.0, 0.0)] {
            let got = Real::from_f64(y, &c)
                .atan2(&Real::from_f64(x, &c), &c)
                .to_f64();
            assert!((got - y.atan2(x)).abs() < 1e-14, "atan2({y},{x}): {got}");
        }
    }

    #[test]
    fn decimal_rendering() {
        let c = cfg();
        let x = Real::from_f64(-0.001234567, &c);
        let s = x.to_dec(6);
        assert!(s.starts_with("-1.23456"), "{s}");
        assert!(s.ends_with("e-3"), "{s}");
    }

    #[test]
    fn euler_gamma_value() {
        let c = cfg();
        let g = Real::euler_gamma(&c);
        assert!((g.to_f64() - 0.5772156649015329).abs() < 1e-15);
    }
}
