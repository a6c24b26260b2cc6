#![allow(dead_code)]

use bn_relax::{EosParams, PrimitiveState};
use rand::Rng;

pub fn ideal() -> [EosParams; 2] {
    [EosParams::new(1.4, 0.0).unwrap(), EosParams::new(1.4, 0.0).unwrap()]
}

pub fn mixed() -> [EosParams; 2] {
    [EosParams::new(1.4, 0.0).unwrap(), EosParams::new(3.0, 100.0).unwrap()]
}

/// Random admissible state with moderate contrasts (subsonic relative speeds).
pub fn random_state<R: Rng>(rng: &mut R, eos: &[EosParams; 2]) -> PrimitiveState {
    let alpha1 = rng.gen_range(0.02..0.98);
    let mut v = [alpha1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    for k in 0..2 {
        let rho: f64 = rng.gen_range(0.2..3.0);
        let p: f64 = rng.gen_range(0.1..3.0) * (1.0 + eos[k].p_inf);
        v[1 + 3 * k] = rho;
        v[2 + 3 * k] = rng.gen_range(-0.6..0.6);
        v[3 + 3 * k] = p;
    }
    PrimitiveState::from_array(v)
}

/// Same as `random_state` but with a prescribed alpha1.
pub fn random_state_alpha<R: Rng>(rng: &mut R, eos: &[EosParams; 2], alpha1: f64) -> PrimitiveState {
    PrimitiveState {
        alpha1,
        ..random_state(rng, eos)
    }
}

/// Single-phase Suliciu star state from the two acoustic Riemann
/// invariants pi + a u (left wave) and pi - a u (right wave), solved as a
/// 2x2 linear system. Returns (u*, pi*, tau_L*, tau_R*).
pub fn suliciu_star(tau_l: f64, u_l: f64, p_l: f64, tau_r: f64, u_r: f64, p_r: f64, a: f64) -> (f64, f64, f64, f64) {
    let w_minus = p_l + a * u_l;
    let w_plus = p_r - a * u_r;
    let u = (w_minus - w_plus) / (2.0 * a);
    let pi = 0.5 * (w_minus + w_plus);
    // tau + pi / a^2 is carried by each acoustic wave
    let tl = tau_l + (p_l - pi) / (a * a);
    let tr = tau_r + (p_r - pi) / (a * a);
    (u, pi, tl, tr)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
