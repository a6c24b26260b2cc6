use crate::eos::EosParams;
use crate::error::{Error, Result, Violation};

pub const NVARS: usize = 7;

/// Conserved vector (alpha1, a1 r1, a2 r2, a1 r1 u1, a2 r2 u2, a1 r1 E1, a2 r2 E2).
/// alpha2 is never stored; it is always 1 - alpha1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservedState(pub [f64; NVARS]);

impl ConservedState {
    pub fn new(alpha1: f64, m1: f64, m2: f64, q1: f64, q2: f64, eta1: f64, eta2: f64) -> Self {
        ConservedState([alpha1, m1, m2, q1, q2, eta1, eta2])
    }

    pub fn alpha1(&self) -> f64 {
        self.0[0]
    }
    pub fn alpha2(&self) -> f64 {
        1.0 - self.0[0]
    }
    pub fn alpha(&self, k: usize) -> f64 {
        if k == 0 {
            self.alpha1()
        } else {
            self.alpha2()
        }
    }
    /// Partial mass of phase k (0-based).
    pub fn mass(&self, k: usize) -> f64 {
        self.0[1 + k]
    }
    pub fn momentum(&self, k: usize) -> f64 {
        self.0[3 + k]
    }
    pub fn energy(&self, k: usize) -> f64 {
        self.0[5 + k]
    }

    /// Partial internal energy alpha_k rho_k e_k.
    pub fn internal_energy(&self, k: usize) -> f64 {
        let m = self.mass(k);
        let q = self.momentum(k);
        self.energy(k) - 0.5 * q * q / m
    }

    /// Membership in the physical set, including rho_k e_k > p_inf_k.
    pub fn check(&self, eos: &[EosParams; 2]) -> std::result::Result<(), Violation> {
        if self.0.iter().any(|v| !v.is_finite()) {
            return Err(Violation::NonFinite);
        }
        let a1 = self.alpha1();
        if !(a1 > 0.0 && a1 < 1.0) {
            return Err(Violation::Alpha1OutOfRange);
        }
        for k in 0..2 {
            let phase = k as u8 + 1;
            if !(self.mass(k) > 0.0) {
                return Err(Violation::NonPositiveMass { phase });
            }
            let rho_e_alpha = self.internal_energy(k);
            if !(rho_e_alpha > 0.0) {
                return Err(Violation::NonPositiveInternalEnergy { phase });
            }
            if !(rho_e_alpha / self.alpha(k) > eos[k].p_inf) {
                return Err(Violation::StiffenedBound { phase });
            }
        }
        Ok(())
    }
}

/// Nonconservative variables (alpha1, rho1, u1, p1, rho2, u2, p2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimitiveState {
    pub alpha1: f64,
    pub rho1: f64,
    pub u1: f64,
    pub p1: f64,
    pub rho2: f64,
    pub u2: f64,
    pub p2: f64,
}

impl PrimitiveState {
    pub fn from_array(v: [f64; NVARS]) -> Self {
        PrimitiveState {
            alpha1: v[0],
            rho1: v[1],
            u1: v[2],
            p1: v[3],
            rho2: v[4],
            u2: v[5],
            p2: v[6],
        }
    }

    pub fn to_array(&self) -> [f64; NVARS] {
        [self.alpha1, self.rho1, self.u1, self.p1, self.rho2, self.u2, self.p2]
    }

    pub fn alpha(&self, k: usize) -> f64 {
        if k == 0 {
            self.alpha1
        } else {
            1.0 - self.alpha1
        }
    }
    pub fn rho(&self, k: usize) -> f64 {
        if k == 0 {
            self.rho1
        } else {
            self.rho2
        }
    }
    pub fn u(&self, k: usize) -> f64 {
        if k == 0 {
            self.u1
        } else {
            self.u2
        }
    }
    pub fn p(&self, k: usize) -> f64 {
        if k == 0 {
            self.p1
        } else {
            self.p2
        }
    }

    /// Same phase data with both velocities negated.
    pub fn mirrored(&self) -> Self {
        PrimitiveState {
            u1: -self.u1,
            u2: -self.u2,
            ..*self
        }
    }

    pub fn check(&self, eos: &[EosParams; 2]) -> std::result::Result<(), Violation> {
        if self.to_array().iter().any(|v| !v.is_finite()) {
            return Err(Violation::NonFinite);
        }
        if !(self.alpha1 > 0.0 && self.alpha1 < 1.0) {
            return Err(Violation::Alpha1OutOfRange);
        }
        for k in 0..2 {
            let phase = k as u8 + 1;
            if !(self.rho(k) > 0.0) {
                return Err(Violation::NonPositiveDensity { phase });
            }
            if !(self.p(k) + eos[k].p_inf > 0.0) {
                return Err(Violation::StiffenedBound { phase });
            }
        }
        Ok(())
    }
}

pub fn to_primitive(u: &ConservedState, eos: &[EosParams; 2]) -> Result<PrimitiveState> {
    u.check(eos).map_err(Error::Inadmissible)?;
    let mut rho = [0.0; 2];
    let mut vel = [0.0; 2];
    let mut p = [0.0; 2];
    for k in 0..2 {
        let m = u.mass(k);
        rho[k] = m / u.alpha(k);
        vel[k] = u.momentum(k) / m;
        let e = u.energy(k) / m - 0.5 * vel[k] * vel[k];
        p[k] = eos[k].pressure(rho[k], e)?;
    }
    Ok(PrimitiveState {
        alpha1: u.alpha1(),
        rho1: rho[0],
        u1: vel[0],
        p1: p[0],
        rho2: rho[1],
        u2: vel[1],
        p2: p[1],
    })
}

pub fn to_conserved(w: &PrimitiveState, eos: &[EosParams; 2]) -> Result<ConservedState> {
    w.check(eos).map_err(Error::Inadmissible)?;
    let mut out = [0.0; NVARS];
    out[0] = w.alpha1;
    for k in 0..2 {
        let m = w.alpha(k) * w.rho(k);
        let e = eos[k].internal_energy(w.rho(k), w.p(k))?;
        out[1 + k] = m;
        out[3 + k] = m * w.u(k);
        out[5 + k] = m * (e + 0.5 * w.u(k) * w.u(k));
    }
    Ok(ConservedState(out))
}

/// max_k (|u_k| + c_k): the spectral radius of the model.
pub fn max_abs_eigenvalue(w: &PrimitiveState, eos: &[EosParams; 2]) -> Result<f64> {
    let mut s: f64 = 0.0;
    for k in 0..2 {
        let c = eos[k].sound_speed(w.rho(k), w.p(k))?;
        s = s.max(w.u(k).abs() + c);
    }
    Ok(s)
}

/// Conservative part of the flux, with pressure p_k.
pub fn physical_flux(w: &PrimitiveState, eos: &[EosParams; 2]) -> Result<[f64; NVARS]> {
    let mut f = [0.0; NVARS];
    for k in 0..2 {
        let (a, r, u, p) = (w.alpha(k), w.rho(k), w.u(k), w.p(k));
        let e = eos[k].internal_energy(r, p)?;
        let m = a * r * u;
        f[1 + k] = m;
        f[3 + k] = m * u + a * p;
        f[5 + k] = m * (e + 0.5 * u * u) + a * p * u;
    }
    Ok(f)
}

/// Coefficients multiplying d(alpha1)/dx in the nonconservative product.
pub fn noncons_vector(w: &PrimitiveState) -> [f64; NVARS] {
    let (u2, p1) = (w.u2, w.p1);
    [u2, 0.0, 0.0, -p1, p1, -p1 * u2, p1 * u2]
}
