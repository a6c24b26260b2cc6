//! Stiffened-gas equation of state, p = (gamma - 1) rho e - gamma p_inf.
//!
//! The ideal gas is the `p_inf = 0` case. Entropy is the mathematical
//! (convex, dissipated) one: s = s_ref - cv ln((rho e - p_inf) / rho^gamma).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EosParams {
    pub gamma: f64,
    pub p_inf: f64,
    pub cv: f64,
    pub s_ref: f64,
}

impl EosParams {
    pub fn new(gamma: f64, p_inf: f64) -> Result<Self> {
        Self::with_entropy(gamma, p_inf, 1.0, 0.0)
    }

    pub fn with_entropy(gamma: f64, p_inf: f64, cv: f64, s_ref: f64) -> Result<Self> {
        if !(gamma > 1.0) || !gamma.is_finite() {
            return Err(Error::Domain(format!("gamma must be > 1, got {gamma}")));
        }
        if !(p_inf >= 0.0) || !p_inf.is_finite() {
            return Err(Error::Domain(format!("p_inf must be >= 0, got {p_inf}")));
        }
        if !(cv > 0.0) {
            return Err(Error::Domain(format!("cv must be > 0, got {cv}")));
        }
        Ok(EosParams { gamma, p_inf, cv, s_ref })
    }

    pub fn ideal(gamma: f64) -> Result<Self> {
        Self::new(gamma, 0.0)
    }

    pub fn pressure(&self, rho: f64, e: f64) -> Result<f64> {
        check_rho(rho)?;
        Ok((self.gamma - 1.0) * rho * e - self.gamma * self.p_inf)
    }

    pub fn internal_energy(&self, rho: f64, p: f64) -> Result<f64> {
        check_rho(rho)?;
        Ok((p + self.gamma * self.p_inf) / ((self.gamma - 1.0) * rho))
    }

    pub fn sound_speed(&self, rho: f64, p: f64) -> Result<f64> {
        check_rho(rho)?;
        let c2 = self.gamma * (p + self.p_inf) / rho;
        if !(c2 > 0.0) {
            return Err(Error::ComplexSoundSpeed(c2));
        }
        Ok(c2.sqrt())
    }

    pub fn entropy(&self, rho: f64, e: f64) -> Result<f64> {
        let x = self.excess(rho, e)?;
        Ok(self.s_ref - self.cv * (x.ln() - self.gamma * rho.ln()))
    }

    pub fn temperature(&self, rho: f64, e: f64) -> Result<f64> {
        let x = self.excess(rho, e)?;
        Ok(x / (self.cv * rho))
    }

    /// rho e - p_inf, which must stay positive for a real sound speed.
    fn excess(&self, rho: f64, e: f64) -> Result<f64> {
        check_rho(rho)?;
        let x = rho * e - self.p_inf;
        if !(x > 0.0) {
            return Err(Error::Domain(format!(
                "rho e - p_inf = {x} <= 0 (rho = {rho}, e = {e})"
            )));
        }
        Ok(x)
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("density must be positive, got {rho}")))
    }
}
