//! Rusanov (local Lax-Friedrichs) baseline.
//!
//! Conservative part: F = (F(uL) + F(uR))/2 - r (uR - uL)/2 with r the
//! larger spectral radius of the two states, applied to all seven
//! components. The nonconservative product is centered in each cell:
//! C(u_j) (abar_j+1/2 - abar_j-1/2) with abar the interface average of
//! alpha1. Splitting C(u_j) (alpha_j+1 - alpha_j-1)/2 into two halves gives
//! the same two-flux form as the relaxation scheme.

use crate::eos::EosParams;
use crate::error::Result;
use crate::riemann::Side;
use crate::scheme::InterfaceFluxes;
use crate::state::{
    max_abs_eigenvalue, noncons_vector, physical_flux, to_conserved, ConservedState,
    PrimitiveState, NVARS,
};

/// Conservative Rusanov flux and its dissipation speed r.
pub fn rusanov_fluxes(
    ul: &ConservedState,
    ur: &ConservedState,
    eos: &[EosParams; 2],
) -> Result<([f64; NVARS], f64)> {
    let wl = crate::state::to_primitive(ul, eos)?;
    let wr = crate::state::to_primitive(ur, eos)?;
    flux_prim(&wl, &wr, ul, ur, eos)
}

fn flux_prim(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    ul: &ConservedState,
    ur: &ConservedState,
    eos: &[EosParams; 2],
) -> Result<([f64; NVARS], f64)> {
    let fl = physical_flux(wl, eos)?;
    let fr = physical_flux(wr, eos)?;
    let r = max_abs_eigenvalue(wl, eos)?.max(max_abs_eigenvalue(wr, eos)?);
    let mut f = [0.0; NVARS];
    for i in 0..NVARS {
        f[i] = 0.5 * (fl[i] + fr[i]) - 0.5 * r * (ur.0[i] - ul.0[i]);
    }
    Ok((f, r))
}

pub fn interface_fluxes(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
) -> Result<InterfaceFluxes> {
    let ul = to_conserved(wl, eos)?;
    let ur = to_conserved(wr, eos)?;
    let (f, _) = flux_prim(wl, wr, &ul, &ur, eos)?;
    let half_jump = 0.5 * (wr.alpha1 - wl.alpha1);
    let cl = noncons_vector(wl);
    let cr = noncons_vector(wr);
    let mut f_minus = f;
    let mut f_plus = f;
    for i in 0..NVARS {
        f_minus[i] += cl[i] * half_jump;
        f_plus[i] -= cr[i] * half_jump;
    }
    let mut speed: f64 = 0.0;
    for k in 0..2 {
        let cl = eos[k].sound_speed(wl.rho(k), wl.p(k))?;
        let cr = eos[k].sound_speed(wr.rho(k), wr.p(k))?;
        speed = speed
            .max((wl.u(k) - cl).abs())
            .max((wr.u(k) + cr).abs());
    }
    let upwind = [0, 1].map(|k| {
        if f[1 + k] >= 0.0 {
            Side::Left
        } else {
            Side::Right
        }
    });
    Ok(InterfaceFluxes {
        f_minus,
        f_plus,
        speed,
        mass_flux: [f[1], f[2]],
        upwind,
    })
}

/// One Rusanov step on its own (the generic loop in `scheme` does the
/// same through [`interface_fluxes`]).
pub fn rusanov_step(
    cells: &[ConservedState],
    cfg: &crate::scheme::RunConfig,
    eos: &[EosParams; 2],
) -> Result<(Vec<ConservedState>, f64)> {
    let cfg = crate::scheme::RunConfig {
        scheme: crate::scheme::SchemeKind::Rusanov,
        ..*cfg
    };
    let res = crate::scheme::step(cells, &cfg, eos, f64::INFINITY, 0, 0.0)?;
    Ok((res.cells, res.dt))
}
