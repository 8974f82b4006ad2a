//! Complex arithmetic on [`Real`] pairs.

use crate::precision::PrecisionConfig;
use crate::real::Real;

#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(cfg: &PrecisionConfig) -> Self {
        Complex::new(Real::zero(cfg), Real::zero(cfg))
    }

    pub fn one(cfg: &PrecisionConfig) -> Self {
        Complex::new(Real::one(cfg), Real::zero(cfg))
    }

    pub fn from_real(re: Real, cfg: &PrecisionConfig) -> Self {
        Complex::new(re, Real::zero(cfg))
    }

    pub fn from_i64(re: i64, im: i64, cfg: &PrecisionConfig) -> Self {
        Complex::new(Real::from_i64(re, cfg), Real::from_i64(im, cfg))
    }

    pub fn from_f64(re: f64, im: f64, cfg: &PrecisionConfig) -> Self {
        Complex::new(Real::from_f64(re, cfg), Real::from_f64(im, cfg))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), self.im.neg())
    }

    pub fn neg(&self) -> Complex {
        Complex::new(self.re.neg(), self.im.neg())
    }

    pub fn add(&self, rhs: &Complex, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.re.add(&rhs.re, cfg), self.im.add(&rhs.im, cfg))
    }

    pub fn sub(&self, rhs: &Complex, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.re.sub(&rhs.re, cfg), self.im.sub(&rhs.im, cfg))
    }

    pub fn add_real(&self, rhs: &Real, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.re.add(rhs, cfg), self.im.clone())
    }

    pub fn mul(&self, rhs: &Complex, cfg: &PrecisionConfig) -> Complex {
        let re = self
            .re
            .mul(&rhs.re, cfg)
            .sub(&self.im.mul(&rhs.im, cfg), cfg);
        let im = self
            .re
            .mul(&rhs.im, cfg)
            .add(&self.im.mul(&rhs.re, cfg), cfg);
        Complex::new(re, im)
    }

    pub fn mul_real(&self, rhs: &Real, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.re.mul(rhs, cfg), self.im.mul(rhs, cfg))
    }

    pub fn div_real(&self, rhs: &Real, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.re.div(rhs, cfg), self.im.div(rhs, cfg))
    }

    pub fn scale2(&self, e: i64) -> Complex {
        Complex::new(self.re.scale2(e), self.im.scale2(e))
    }

    pub fn abs_sq(&self, cfg: &PrecisionConfig) -> Real {
        self.re
            .mul(&self.re, cfg)
            .add(&self.im.mul(&self.im, cfg), cfg)
    }

    pub fn abs(&self, cfg: &PrecisionConfig) -> Real {
        self.abs_sq(cfg).sqrt(cfg)
    }

    pub fn arg(&self, cfg: &PrecisionConfig) -> Real {
        self.im.atan2(&self.re, cfg)
    }

    pub fn recip(&self, cfg: &PrecisionConfig) -> Complex {
        let d = self.abs_sq(cfg);
        Complex::new(self.re.div(&d, cfg), self.im.neg().div(&d, cfg))
    }

    pub fn div(&self, rhs: &Complex, cfg: &PrecisionConfig) -> Complex {
        let d = rhs.abs_sq(cfg);
        let num = self.mul(&rhs.conj(), cfg);
        Complex::new(num.re.div(&d, cfg), num.im.div(&d, cfg))
    }

    pub fn exp(&self, cfg: &PrecisionConfig) -> Complex {
        let m = self.re.exp(cfg);
        Complex::new(
            m.mul(&self.im.cos(cfg), cfg),
            m.mul(&self.im.sin(cfg), cfg),
        )
    }

    /// Principal branch logarithm.
    pub fn ln(&self, cfg: &PrecisionConfig) -> Complex {
        Complex::new(self.abs(cfg).ln(cfg), self.arg(cfg))
    }

    /// Principal branch power z^w = exp(w ln z).
    pub fn pow(&self, w: &Complex, cfg: &PrecisionConfig) -> Complex {
        self.ln(cfg).mul(w, cfg).exp(cfg)
    }

    pub fn powi(&self, mut n: u64, cfg: &PrecisionConfig) -> Complex {
        let mut base = self.clone();
        let mut acc = Complex::one(cfg);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, cfg);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, cfg);
            }
        }
        acc
    }

    /// Distance |self - rhs|.
    pub fn dist(&self, rhs: &Complex, cfg: &PrecisionConfig) -> Real {
        self.sub(rhs, cfg).abs(cfg)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn to_dec(&self, digits: usize) -> String {
        format!("{} + {}i", self.re.to_dec(digits), self.im.to_dec(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-13 && (a.1 - b.1).abs() < 1e-13
    }

    #[test]
    fn field_ops() {
        let c = cfg();
        let a = Complex::from_f64(1.5, -2.0, &c);
        let b = Complex::from_f64(-0.25, 3.0, &c);
        assert!(close(a.mul(&b, &c).to_f64_pair(), (5.625, 5.0)));
        let q = a.div(&b, &c);
        let back = q.mul(&b, &c);
        assert!(close(back.to_f64_pair(), (1.5, -2.0)));
    }

    #[test]
    fn exp_ln_roundtrip() {
        let c = cfg();
        let z = Complex::from_f64(0.3, 2.4, &c);
        let w = z.exp(&c).ln(&c);
        assert!(close(w.to_f64_pair(), (0.3, 2.4)));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let c = cfg();
        let z = Complex::from_f64(1.1, 0.7, &c);
        let p3 = z.powi(3, &c);
        let m3 = z.mul(&z, &c).mul(&z, &c);
        assert!(close(p3.to_f64_pair(), m3.to_f64_pair()));
    }
}
