//! Exact solution of the interface relaxation Riemann problem.
//!
//! Each phase is a Suliciu-type relaxation system with linearized pressure
//! pi_k = P_k(T_k) + a_k^2 (T_k - tau_k). The phases couple through the
//! phase-fraction wave travelling at u2*; phase 1 carries a kinetic relation
//! on that wave which dissipates energy when needed to keep tau positive.
//!
//! Solutions with u2* < u1* are built directly. The opposite ordering is
//! obtained by mirroring (x -> -x, u -> -u, left <-> right).

use crate::eos::EosParams;
use crate::error::{Error, Result};
use crate::state::{PrimitiveState, NVARS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxParams {
    pub a1: f64,
    pub a2: f64,
}

impl RelaxParams {
    pub fn get(&self, k: usize) -> f64 {
        if k == 0 {
            self.a1
        } else {
            self.a2
        }
    }
}

/// Star predictors of the two decoupled single-phase problems plus the
/// coupling quantities Lambda^alpha and U#.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpQuantities {
    pub u_sharp: [f64; 2],
    pub pi_sharp: [f64; 2],
    pub tau_sharp_l: [f64; 2],
    pub tau_sharp_r: [f64; 2],
    pub lambda_alpha: f64,
    pub u_cap: f64,
}

impl SharpQuantities {
    pub fn tau_positive(&self, k: usize) -> bool {
        self.tau_sharp_l[k] > 0.0 && self.tau_sharp_r[k] > 0.0
    }
}

pub fn sharp_quantities(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    params: &RelaxParams,
) -> SharpQuantities {
    let mut u_sharp = [0.0; 2];
    let mut pi_sharp = [0.0; 2];
    let mut tau_sharp_l = [0.0; 2];
    let mut tau_sharp_r = [0.0; 2];
    for k in 0..2 {
        let a = params.get(k);
        let (ul, ur) = (wl.u(k), wr.u(k));
        let (pl, pr) = (wl.p(k), wr.p(k));
        let us = 0.5 * (ul + ur) - (pr - pl) / (2.0 * a);
        u_sharp[k] = us;
        pi_sharp[k] = 0.5 * (pr + pl) - 0.5 * a * (ur - ul);
        tau_sharp_l[k] = 1.0 / wl.rho(k) + (us - ul) / a;
        tau_sharp_r[k] = 1.0 / wr.rho(k) - (us - ur) / a;
    }
    let (a2l, a2r) = (wl.alpha(1), wr.alpha(1));
    let lambda_alpha = (a2r - a2l) / (a2r + a2l);
    let (a1, a2) = (params.a1, params.a2);
    let u_cap = (u_sharp[0] - u_sharp[1] - lambda_alpha * (pi_sharp[0] - pi_sharp[1]) / a2)
        / (1.0 + (a1 / a2) * lambda_alpha.abs());
    SharpQuantities {
        u_sharp,
        pi_sharp,
        tau_sharp_l,
        tau_sharp_r,
        lambda_alpha,
        u_cap,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveOrdering {
    /// u2* < u1*
    Order12,
    /// u2* > u1*
    Order21,
    Coincident,
    /// No phase-fraction jump: two independent single-phase problems, any
    /// relative position of u1* and u2*.
    Decoupled,
}

/// Scaled tolerance under which U# counts as zero.
pub fn coincident_eps(s: &SharpQuantities, params: &RelaxParams) -> f64 {
    1e-12 * params.a1 * s.tau_sharp_l[0].max(s.tau_sharp_r[0])
}

/// `None` when -a1 tau#1R < U# < a1 tau#1L fails: the caller has to
/// enlarge a1.
pub fn classify_ordering(s: &SharpQuantities, params: &RelaxParams) -> Option<WaveOrdering> {
    let a1 = params.a1;
    let uc = s.u_cap;
    if uc.abs() <= coincident_eps(s, params) {
        return Some(WaveOrdering::Coincident);
    }
    if uc > 0.0 && uc < a1 * s.tau_sharp_l[0] {
        Some(WaveOrdering::Order12)
    } else if uc < 0.0 && uc > -a1 * s.tau_sharp_r[0] {
        Some(WaveOrdering::Order21)
    } else {
        None
    }
}

/// Data of the scalar equation Psi(m) = rhs fixing the Mach number of u2*
/// relative to the phase-1 predictor, for the ordering u2* < u1*.
#[derive(Debug, Clone, Copy)]
pub struct FixedPointContext {
    /// alpha1L / alpha1R
    pub nu: f64,
    pub m_sharp: f64,
    pub p_sharp: f64,
    pub mu: f64,
    pub tol: f64,
    pub max_iterations: usize,
    alpha1: [f64; 2],
    alpha2_sum: f64,
    a_ratio: f64,
    lambda_alpha: f64,
    /// tau#1R / tau#1L
    tau_ratio: f64,
}

impl FixedPointContext {
    pub fn new(
        alpha1_l: f64,
        alpha1_r: f64,
        s: &SharpQuantities,
        params: &RelaxParams,
        mu: f64,
    ) -> Self {
        let a1 = params.a1;
        let tl = s.tau_sharp_l[0];
        FixedPointContext {
            nu: alpha1_l / alpha1_r,
            m_sharp: (s.u_sharp[0] - s.u_sharp[1]) / (a1 * tl),
            p_sharp: (s.pi_sharp[0] - s.pi_sharp[1]) / (a1 * a1 * tl),
            mu,
            tol: 1e-12,
            max_iterations: 200,
            alpha1: [alpha1_l, alpha1_r],
            alpha2_sum: (1.0 - alpha1_l) + (1.0 - alpha1_r),
            a_ratio: a1 / params.a2,
            lambda_alpha: s.lambda_alpha,
            tau_ratio: s.tau_sharp_r[0] / tl,
        }
    }

    pub fn rhs(&self) -> f64 {
        self.m_sharp - self.a_ratio * self.lambda_alpha * self.p_sharp
    }

    /// Energy-preserving branch M0(omega).
    pub fn m0(&self, omega: f64) -> f64 {
        let w2 = omega * omega;
        self.m0_from_b((1.0 + w2) / (1.0 - w2))
    }

    /// Smaller root of X^2 - b (1 + 1/nu) X + 1/nu, written without
    /// cancellation.
    fn m0_from_b(&self, b: f64) -> f64 {
        let t = b * (1.0 + 1.0 / self.nu);
        let d = 1.0 - 4.0 / (self.nu * t * t);
        (2.0 / self.nu) / (t * (1.0 + d.max(0.0).sqrt()))
    }

    /// Dissipative branch bounding the downstream specific volume.
    pub fn m_mu(&self, m: f64) -> f64 {
        let c = (1.0 - self.mu) * self.tau_ratio;
        if c >= 1.0 {
            return f64::INFINITY;
        }
        (m + c) / (self.nu * (1.0 - c))
    }

    /// M(m) = min(M0((1-m)/(1+m)), M_mu(m)).
    pub fn m_of(&self, m: f64) -> f64 {
        // With omega = (1-m)/(1+m): (1+omega^2)/(1-omega^2) = (1+m^2)/(2m).
        let b = (1.0 + m * m) / (2.0 * m);
        self.m0_from_b(b).min(self.m_mu(m))
    }

    pub fn psi(&self, m: f64) -> f64 {
        let [al, ar] = self.alpha1;
        m + self.a_ratio * ((al + ar) * m - 2.0 * al * self.m_of(m)) / self.alpha2_sum
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarSolution {
    pub m_star: f64,
    /// M(m*), the phase-1 Mach number just left of the u2 wave.
    pub m_left: f64,
    pub u2_star: f64,
    pub u1_star: f64,
    pub iterations: usize,
}

/// Bisection for Psi(m) = rhs, valid for the ordering u2* < u1*.
pub fn solve_star(
    ctx: &FixedPointContext,
    s: &SharpQuantities,
    params: &RelaxParams,
) -> Result<StarSolution> {
    let rhs = ctx.rhs();
    if ctx.alpha1[0] == ctx.alpha1[1] {
        // M(m) = m and Psi is the identity: both phases keep their predictor
        // velocity. Returned directly to avoid roundoff in u# - a tau m.
        return Ok(StarSolution {
            m_star: rhs,
            m_left: rhs,
            u2_star: s.u_sharp[1],
            u1_star: s.u_sharp[0],
            iterations: 0,
        });
    }
    let (m_star, iterations) = bisect(ctx, rhs)?;
    let m_left = ctx.m_of(m_star);
    let a1 = params.a1;
    let tl = s.tau_sharp_l[0];
    let u2_star = s.u_sharp[0] - a1 * tl * m_star;
    let tau_plus = tl * (1.0 + m_star) / (1.0 + ctx.nu * m_left);
    let u1_star = u2_star + ctx.nu * a1 * m_left * tau_plus;
    Ok(StarSolution {
        m_star,
        m_left,
        u2_star,
        u1_star,
        iterations,
    })
}

fn bisect(ctx: &FixedPointContext, rhs: f64) -> Result<(f64, usize)> {
    let f = |m: f64| ctx.psi(m) - rhs;
    let m0 = ctx.m_sharp.clamp(0.0, 1.0);
    let f0 = f(m0);
    if f0 == 0.0 && m0 > 0.0 && m0 < 1.0 {
        return Ok((m0, 0));
    }
    let (mut lo, mut hi) = if f0 < 0.0 { (m0, 1.0) } else { (0.0, m0) };
    if !(f(lo) <= 0.0 && f(hi) >= 0.0) {
        return Err(Error::BracketFailure);
    }
    // iterate with the smallest residual seen, for brackets that collapse
    // to adjacent floats before the residual drops below tol
    let mut best = (f64::INFINITY, m0);
    for it in 1..=ctx.max_iterations {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm.abs() < best.0 {
            best = (fm.abs(), mid);
        }
        if fm == 0.0 {
            return Ok((mid, it));
        }
        if fm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        let converged = hi - lo <= ctx.tol && fm.abs() <= ctx.tol;
        let next = 0.5 * (lo + hi);
        if converged {
            return Ok((mid, it));
        }
        if next <= lo || next >= hi {
            return Ok((best.1, it));
        }
    }
    Ok((best.1, ctx.max_iterations))
}

/// Which input state the relaxation volume T_k (and entropy) of a region
/// is inherited from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One constant region of a single phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseRegion {
    pub tau: f64,
    pub u: f64,
    pub pi: f64,
    /// Relaxation total energy (script E).
    pub energy: f64,
    pub side: Side,
}

impl PhaseRegion {
    fn mirrored(self) -> Self {
        PhaseRegion {
            u: -self.u,
            side: self.side.flip(),
            ..self
        }
    }
}

/// Wave speeds and constant regions of one phase, left to right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFan {
    speeds: [f64; 4],
    regions: [PhaseRegion; 5],
    waves: usize,
}

impl PhaseFan {
    fn new(speeds: &[f64], regions: &[PhaseRegion]) -> Self {
        debug_assert_eq!(speeds.len() + 1, regions.len());
        let mut s = [0.0; 4];
        let mut r = [regions[0]; 5];
        s[..speeds.len()].copy_from_slice(speeds);
        r[..regions.len()].copy_from_slice(regions);
        PhaseFan {
            speeds: s,
            regions: r,
            waves: speeds.len(),
        }
    }

    pub fn speeds(&self) -> &[f64] {
        &self.speeds[..self.waves]
    }

    pub fn regions(&self) -> &[PhaseRegion] {
        &self.regions[..self.waves + 1]
    }

    fn mirrored(&self) -> Self {
        let n = self.waves;
        let speeds: Vec<f64> = self.speeds().iter().rev().map(|s| -s).collect();
        let regions: Vec<PhaseRegion> =
            self.regions().iter().rev().map(|r| r.mirrored()).collect();
        debug_assert_eq!(speeds.len(), n);
        PhaseFan::new(&speeds, &regions)
    }

    fn region_at(&self, xi: f64, right_limit: bool) -> &PhaseRegion {
        let idx = self
            .speeds()
            .iter()
            .take_while(|&&s| if right_limit { s <= xi } else { s < xi })
            .count();
        &self.regions[idx]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxRiemannSolution {
    pub ordering: WaveOrdering,
    pub u1_star: f64,
    pub u2_star: f64,
    /// Defined only when the phase fraction jumps.
    pub pi1_star: Option<f64>,
    pub alpha1_l: f64,
    pub alpha1_r: f64,
    /// m* of the fixed point in the frame where it was solved.
    pub m_star: Option<f64>,
    pub phases: [PhaseFan; 2],
}

/// Nonconservative state at one self-similar speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledState {
    pub alpha1: f64,
    pub tau: [f64; 2],
    pub u: [f64; 2],
    pub pi: [f64; 2],
    pub energy: [f64; 2],
    pub side: [Side; 2],
}

impl SampledState {
    pub fn alpha(&self, k: usize) -> f64 {
        if k == 0 {
            self.alpha1
        } else {
            1.0 - self.alpha1
        }
    }

    /// (0, a r u, a r u^2 + a pi, a r E u + a pi u) per phase.
    pub fn flux(&self) -> [f64; NVARS] {
        let mut f = [0.0; NVARS];
        for k in 0..2 {
            let a = self.alpha(k);
            let u = self.u[k];
            let m = a * u / self.tau[k];
            f[1 + k] = m;
            f[3 + k] = m * u + a * self.pi[k];
            f[5 + k] = m * self.energy[k] + a * self.pi[k] * u;
        }
        f
    }
}

impl RelaxRiemannSolution {
    /// Right limit at a wave speed.
    pub fn sample(&self, xi: f64) -> SampledState {
        self.sample_with(xi, true)
    }

    pub fn sample_left(&self, xi: f64) -> SampledState {
        self.sample_with(xi, false)
    }

    fn sample_with(&self, xi: f64, right_limit: bool) -> SampledState {
        let past = if right_limit {
            xi >= self.u2_star
        } else {
            xi > self.u2_star
        };
        let alpha1 = if past { self.alpha1_r } else { self.alpha1_l };
        let r1 = self.phases[0].region_at(xi, right_limit);
        let r2 = self.phases[1].region_at(xi, right_limit);
        SampledState {
            alpha1,
            tau: [r1.tau, r2.tau],
            u: [r1.u, r2.u],
            pi: [r1.pi, r2.pi],
            energy: [r1.energy, r2.energy],
            side: [r1.side, r2.side],
        }
    }

    /// Outermost acoustic speeds u_kL - a_k tau_kL and u_kR + a_k tau_kR.
    pub fn extreme_speeds(&self) -> [(f64, f64); 2] {
        let f = |p: &PhaseFan| (p.speeds()[0], p.speeds()[p.waves - 1]);
        [f(&self.phases[0]), f(&self.phases[1])]
    }

    fn mirrored(&self) -> Self {
        RelaxRiemannSolution {
            ordering: match self.ordering {
                WaveOrdering::Order12 => WaveOrdering::Order21,
                WaveOrdering::Order21 => WaveOrdering::Order12,
                o => o,
            },
            u1_star: -self.u1_star,
            u2_star: -self.u2_star,
            pi1_star: self.pi1_star,
            alpha1_l: self.alpha1_r,
            alpha1_r: self.alpha1_l,
            m_star: self.m_star,
            phases: [self.phases[0].mirrored(), self.phases[1].mirrored()],
        }
    }
}

/// Input data of one side, in the variables the construction uses.
#[derive(Debug, Clone, Copy)]
struct SideData {
    tau: f64,
    u: f64,
    p: f64,
    e: f64,
}

impl SideData {
    fn region(&self, side: Side) -> PhaseRegion {
        PhaseRegion {
            tau: self.tau,
            u: self.u,
            pi: self.p,
            energy: 0.5 * self.u * self.u + self.e,
            side,
        }
    }

    /// Region with upwinded volume/pressure/energy from this side.
    fn star(&self, tau: f64, u: f64, a: f64, side: Side) -> PhaseRegion {
        let pi = self.p + a * a * (self.tau - tau);
        PhaseRegion {
            tau,
            u,
            pi,
            energy: 0.5 * u * u + self.e + (pi * pi - self.p * self.p) / (2.0 * a * a),
            side,
        }
    }
}

fn side_data(w: &PrimitiveState, eos: &[EosParams; 2]) -> Result<[SideData; 2]> {
    let mut out = [SideData {
        tau: 0.0,
        u: 0.0,
        p: 0.0,
        e: 0.0,
    }; 2];
    for k in 0..2 {
        out[k] = SideData {
            tau: 1.0 / w.rho(k),
            u: w.u(k),
            p: w.p(k),
            e: eos[k].internal_energy(w.rho(k), w.p(k))?,
        };
    }
    Ok(out)
}

/// Coupling pressure on the phase-fraction wave, from phase-2 momentum.
pub fn pi1_star(
    s: &SharpQuantities,
    params: &RelaxParams,
    alpha1_l: f64,
    alpha1_r: f64,
    u2_star: f64,
) -> Option<f64> {
    let d = alpha1_r - alpha1_l;
    if d == 0.0 {
        return None;
    }
    let alpha2_sum = (1.0 - alpha1_l) + (1.0 - alpha1_r);
    Some(s.pi_sharp[1] - params.a2 * alpha2_sum / d * (u2_star - s.u_sharp[1]))
}

/// Builds the full relaxation solution for given (a1, a2). Feasibility of
/// the parameters is the caller's business; a violated condition surfaces
/// as an error.
pub fn build_solution(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    params: &RelaxParams,
    mu: f64,
) -> Result<RelaxRiemannSolution> {
    let s = sharp_quantities(wl, wr, params);
    build_with_sharp(wl, wr, eos, params, &s, mu)
}

pub(crate) fn build_with_sharp(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    params: &RelaxParams,
    s: &SharpQuantities,
    mu: f64,
) -> Result<RelaxRiemannSolution> {
    if !(s.tau_positive(0) && s.tau_positive(1)) {
        return Err(Error::NegativeVolume("tau#"));
    }
    if wl.alpha1 == wr.alpha1 {
        return build_decoupled(wl, wr, eos, params, s);
    }
    let ordering = classify_ordering(s, params).ok_or_else(|| Error::Infeasible {
        inflations: 0,
        detail: format!("U# = {} outside the subsonic window", s.u_cap),
    })?;
    match ordering {
        WaveOrdering::Order12 => build_order12(wl, wr, eos, params, s, mu),
        WaveOrdering::Coincident => build_coincident(wl, wr, eos, params, s),
        WaveOrdering::Decoupled => build_decoupled(wl, wr, eos, params, s),
        WaveOrdering::Order21 => {
            let (ml, mr) = (wr.mirrored(), wl.mirrored());
            let ms = sharp_quantities(&ml, &mr, params);
            let sol = build_order12(&ml, &mr, eos, params, &ms, mu)?;
            let mut out = sol.mirrored();
            out.pi1_star = pi1_star(s, params, wl.alpha1, wr.alpha1, out.u2_star);
            Ok(out)
        }
    }
}

fn phase2_fan(
    d: [&SideData; 2],
    a2: f64,
    u2_star: f64,
) -> Result<PhaseFan> {
    let [l, r] = d;
    let tau_l = l.tau + (u2_star - l.u) / a2;
    let tau_r = r.tau - (u2_star - r.u) / a2;
    if !(tau_l > 0.0) {
        return Err(Error::NegativeVolume("tau2L*"));
    }
    if !(tau_r > 0.0) {
        return Err(Error::NegativeVolume("tau2R*"));
    }
    Ok(PhaseFan::new(
        &[l.u - a2 * l.tau, u2_star, r.u + a2 * r.tau],
        &[
            l.region(Side::Left),
            l.star(tau_l, u2_star, a2, Side::Left),
            r.star(tau_r, u2_star, a2, Side::Right),
            r.region(Side::Right),
        ],
    ))
}

fn build_order12(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    params: &RelaxParams,
    s: &SharpQuantities,
    mu: f64,
) -> Result<RelaxRiemannSolution> {
    let dl = side_data(wl, eos)?;
    let dr = side_data(wr, eos)?;
    let ctx = FixedPointContext::new(wl.alpha1, wr.alpha1, s, params, mu);
    let star = solve_star(&ctx, s, params)?;
    let (ms, m) = (star.m_star, star.m_left);
    let nu = ctx.nu;
    let a1 = params.a1;
    let tl = s.tau_sharp_l[0];
    let tr = s.tau_sharp_r[0];
    let u2s = star.u2_star;

    let tau_minus = tl * (1.0 - ms) / (1.0 - m);
    let tau_plus = tl * (1.0 + ms) / (1.0 + nu * m);
    let tau_rstar = tr + tl * (ms - nu * m) / (1.0 + nu * m);
    for (v, name) in [
        (tau_minus, "tau1-"),
        (tau_plus, "tau1+"),
        (tau_rstar, "tau1R*"),
    ] {
        if !(v > 0.0) {
            return Err(Error::NegativeVolume(name));
        }
    }
    let u_minus = u2s + a1 * m * tau_minus;
    let u1s = star.u1_star;

    let (l1, r1) = (&dl[0], &dr[0]);
    let phase1 = PhaseFan::new(
        &[l1.u - a1 * l1.tau, u2s, u1s, r1.u + a1 * r1.tau],
        &[
            l1.region(Side::Left),
            l1.star(tau_minus, u_minus, a1, Side::Left),
            l1.star(tau_plus, u1s, a1, Side::Left),
            r1.star(tau_rstar, u1s, a1, Side::Right),
            r1.region(Side::Right),
        ],
    );
    let phase2 = phase2_fan([&dl[1], &dr[1]], params.a2, u2s)?;
    Ok(RelaxRiemannSolution {
        ordering: WaveOrdering::Order12,
        u1_star: u1s,
        u2_star: u2s,
        pi1_star: pi1_star(s, params, wl.alpha1, wr.alpha1, u2s),
        alpha1_l: wl.alpha1,
        alpha1_r: wr.alpha1,
        m_star: Some(ms),
        phases: [phase1, phase2],
    })
}

fn build_coincident(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    params: &RelaxParams,
    s: &SharpQuantities,
) -> Result<RelaxRiemannSolution> {
    let dl = side_data(wl, eos)?;
    let dr = side_data(wr, eos)?;
    let a1 = params.a1;
    let us = s.u_sharp[0];
    let (l1, r1) = (&dl[0], &dr[0]);
    let phase1 = PhaseFan::new(
        &[l1.u - a1 * l1.tau, us, r1.u + a1 * r1.tau],
        &[
            l1.region(Side::Left),
            l1.star(s.tau_sharp_l[0], us, a1, Side::Left),
            r1.star(s.tau_sharp_r[0], us, a1, Side::Right),
            r1.region(Side::Right),
        ],
    );
    let phase2 = phase2_fan([&dl[1], &dr[1]], params.a2, us)?;
    Ok(RelaxRiemannSolution {
        ordering: WaveOrdering::Coincident,
        u1_star: us,
        u2_star: us,
        pi1_star: pi1_star(s, params, wl.alpha1, wr.alpha1, us),
        alpha1_l: wl.alpha1,
        alpha1_r: wr.alpha1,
        m_star: None,
        phases: [phase1, phase2],
    })
}

fn build_decoupled(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    params: &RelaxParams,
    s: &SharpQuantities,
) -> Result<RelaxRiemannSolution> {
    let dl = side_data(wl, eos)?;
    let dr = side_data(wr, eos)?;
    let a1 = params.a1;
    let (u1s, u2s) = (s.u_sharp[0], s.u_sharp[1]);
    let (l1, r1) = (&dl[0], &dr[0]);
    let phase1 = PhaseFan::new(
        &[l1.u - a1 * l1.tau, u1s, r1.u + a1 * r1.tau],
        &[
            l1.region(Side::Left),
            l1.star(s.tau_sharp_l[0], u1s, a1, Side::Left),
            r1.star(s.tau_sharp_r[0], u1s, a1, Side::Right),
            r1.region(Side::Right),
        ],
    );
    let phase2 = phase2_fan([&dl[1], &dr[1]], params.a2, u2s)?;
    Ok(RelaxRiemannSolution {
        ordering: WaveOrdering::Decoupled,
        u1_star: u1s,
        u2_star: u2s,
        pi1_star: None,
        alpha1_l: wl.alpha1,
        alpha1_r: wr.alpha1,
        m_star: None,
        phases: [phase1, phase2],
    })
}

/// The Dirac mass carried by the phase-fraction wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceJump {
    pub u2_star: f64,
    pub pi1_star: Option<f64>,
    /// dalpha (u2*, 0, 0, -pi1*, pi1*, -u2* pi1*, u2* pi1*)
    pub d_star: [f64; NVARS],
}

pub fn interface_jump(sol: &RelaxRiemannSolution, d_alpha: f64) -> InterfaceJump {
    let u = sol.u2_star;
    match sol.pi1_star {
        Some(pi) if d_alpha != 0.0 => InterfaceJump {
            u2_star: u,
            pi1_star: Some(pi),
            d_star: [
                d_alpha * u,
                0.0,
                0.0,
                -d_alpha * pi,
                d_alpha * pi,
                -d_alpha * u * pi,
                d_alpha * u * pi,
            ],
        },
        _ => InterfaceJump {
            u2_star: u,
            pi1_star: None,
            d_star: [0.0; NVARS],
        },
    }
}
