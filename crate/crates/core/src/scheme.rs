//! Relaxation finite-volume scheme and the shared time-marching loop.
//!
//! Both schemes are written in the two-flux form
//! U_j <- U_j - dt/dx (F-(U_j, U_j+1) - F+(U_j-1, U_j)),
//! so the loop, the CFL logic and the audits do not care which one runs.

use std::str::FromStr;

use crate::eos::EosParams;
use crate::error::{Error, Result};
use crate::riemann::{
    build_with_sharp, classify_ordering, interface_jump, sharp_quantities, RelaxParams,
    RelaxRiemannSolution, SharpQuantities, Side,
};
use crate::rusanov;
use crate::state::{to_primitive, ConservedState, PrimitiveState, NVARS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSelectConfig {
    pub eta: f64,
    pub max_inflations: usize,
    /// Dissipation parameter of the phase-1 kinetic relation.
    pub mu: f64,
}

impl Default for ParamSelectConfig {
    fn default() -> Self {
        ParamSelectConfig {
            eta: 0.01,
            max_inflations: 100,
            mu: 0.1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    Relaxation,
    Rusanov,
}

impl SchemeKind {
    pub fn name(&self) -> &'static str {
        match self {
            SchemeKind::Relaxation => "relax",
            SchemeKind::Rusanov => "rusanov",
        }
    }
}

impl FromStr for SchemeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relax" | "relaxation" => Ok(SchemeKind::Relaxation),
            "rusanov" => Ok(SchemeKind::Rusanov),
            other => Err(Error::Config(format!(
                "unknown scheme '{other}' (expected relax or rusanov)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub cells: usize,
    pub domain: (f64, f64),
    pub cfl: f64,
    pub t_final: f64,
    pub scheme: SchemeKind,
    pub select: ParamSelectConfig,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cells < 2 {
            return Err(Error::Config(format!("cells must be >= 2, got {}", self.cells)));
        }
        if !(self.cfl > 0.0 && self.cfl < 0.5) {
            return Err(Error::Config(format!("cfl must lie in (0, 0.5), got {}", self.cfl)));
        }
        if !(self.domain.1 > self.domain.0) {
            return Err(Error::Config("empty domain".into()));
        }
        if !(self.t_final >= 0.0) {
            return Err(Error::Config(format!("t_final must be >= 0, got {}", self.t_final)));
        }
        let s = &self.select;
        if !(s.eta > 0.0 && s.eta < 1.0) || s.max_inflations < 1 || !(s.mu > 0.0 && s.mu < 1.0) {
            return Err(Error::Config(format!("invalid parameter selection settings {s:?}")));
        }
        Ok(())
    }

    pub fn dx(&self) -> f64 {
        (self.domain.1 - self.domain.0) / self.cells as f64
    }

    pub fn centers(&self) -> Vec<f64> {
        let dx = self.dx();
        (0..self.cells)
            .map(|j| self.domain.0 + (j as f64 + 0.5) * dx)
            .collect()
    }
}

/// Accepted relaxation parameters with the solution computed for them.
#[derive(Debug, Clone, Copy)]
pub struct Selection {
    pub params: RelaxParams,
    pub sharp: SharpQuantities,
    pub solution: RelaxRiemannSolution,
    pub inflations: usize,
}

fn infeasible(n: usize, what: &str, wl: &PrimitiveState, wr: &PrimitiveState, a: &[f64; 2]) -> Error {
    Error::Infeasible {
        inflations: n,
        detail: format!("{what}; a = {a:?}; left = {wl:?}; right = {wr:?}"),
    }
}

/// Chooses (a1, a2) for one interface: Whitham on the end states, then
/// inflation until tau# > 0, the subsonic condition on U# and positivity of
/// the phase-2 star volumes all hold.
pub fn select_parameters(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    cfg: &ParamSelectConfig,
) -> Result<Selection> {
    let grow = 1.0 + cfg.eta;
    let mut a = [0.0; 2];
    for k in 0..2 {
        let zl = wl.rho(k) * eos[k].sound_speed(wl.rho(k), wl.p(k))?;
        let zr = wr.rho(k) * eos[k].sound_speed(wr.rho(k), wr.p(k))?;
        a[k] = grow * zl.max(zr);
    }
    let mut total = 0usize;
    let sharp = |a: &[f64; 2]| {
        let p = RelaxParams { a1: a[0], a2: a[1] };
        (p, sharp_quantities(wl, wr, &p))
    };

    let mut outer = 0usize;
    loop {
        // a2 first: tau#2 depends on a2 only.
        let mut n = 0;
        while !sharp(&a).1.tau_positive(1) {
            n += 1;
            if n > cfg.max_inflations {
                return Err(infeasible(total, "tau#2 stays nonpositive", wl, wr, &a));
            }
            a[1] *= grow;
        }
        total += n;
        let mut n = 0;
        let (params, s) = loop {
            let (p, s) = sharp(&a);
            // without a phase-fraction jump the phases decouple and any
            // position of u2* relative to the phase-1 waves is admissible
            let ordered = wl.alpha1 == wr.alpha1 || classify_ordering(&s, &p).is_some();
            if s.tau_positive(0) && ordered {
                break (p, s);
            }
            n += 1;
            if n > cfg.max_inflations {
                return Err(infeasible(total, "subsonic condition on U# not reached", wl, wr, &a));
            }
            a[0] *= grow;
        };
        total += n;
        match build_with_sharp(wl, wr, eos, &params, &s, cfg.mu) {
            Ok(solution) => {
                return Ok(Selection {
                    params,
                    sharp: s,
                    solution,
                    inflations: total,
                })
            }
            Err(Error::NegativeVolume(what)) => {
                outer += 1;
                if outer > cfg.max_inflations {
                    let msg = format!("{what} stays nonpositive");
                    return Err(infeasible(total, &msg, wl, wr, &a));
                }
                total += 1;
                a[1] *= grow;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Fluxes F- (seen by the left cell) and F+ (seen by the right cell) of one
/// interface, plus what the audits need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceFluxes {
    pub f_minus: [f64; NVARS],
    pub f_plus: [f64; NVARS],
    /// Local wave-speed bound entering the CFL condition.
    pub speed: f64,
    /// Partial mass fluxes at the interface.
    pub mass_flux: [f64; 2],
    /// Side whose entropy is advected through the interface, per phase.
    pub upwind: [Side; 2],
}

/// Relaxation fluxes for an interface whose parameters are already chosen.
pub fn fluxes_from_selection(wl: &PrimitiveState, wr: &PrimitiveState, sel: &Selection) -> InterfaceFluxes {
    let sol = &sel.solution;
    let left = sol.sample_left(0.0);
    let right = sol.sample(0.0);
    let gl = left.flux();
    let gr = right.flux();
    let jump = interface_jump(sol, wr.alpha1 - wl.alpha1);
    let u2s = sol.u2_star;
    let mut f_minus = gl;
    f_minus[5] = gr[5];
    f_minus[6] = gr[6];
    let mut f_plus = gr;
    for i in 0..NVARS {
        if u2s < 0.0 {
            f_minus[i] += jump.d_star[i];
        } else if u2s > 0.0 {
            f_plus[i] -= jump.d_star[i];
        }
    }
    let mut speed: f64 = 0.0;
    for k in 0..2 {
        let a = sel.params.get(k);
        speed = speed
            .max((wl.u(k) - a / wl.rho(k)).abs())
            .max((wr.u(k) + a / wr.rho(k)).abs());
    }
    InterfaceFluxes {
        f_minus,
        f_plus,
        speed,
        mass_flux: [gr[1], gr[2]],
        upwind: right.side,
    }
}

pub fn interface_fluxes(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    eos: &[EosParams; 2],
    cfg: &ParamSelectConfig,
) -> Result<InterfaceFluxes> {
    let sel = select_parameters(wl, wr, eos, cfg)?;
    Ok(fluxes_from_selection(wl, wr, &sel))
}

/// dt = cfl dx / S with S the largest |u_k,j - a_k tau_k,j|, |u_k,j+1 +
/// a_k tau_k,j+1| over interfaces. `params[i]` belongs to the interface
/// left of cell i; boundaries use ghost copies, so there are cells + 1.
pub fn cfl_dt(cells: &[PrimitiveState], params: &[RelaxParams], dx: f64, cfl: f64) -> Result<f64> {
    if params.len() != cells.len() + 1 {
        return Err(Error::Config(format!(
            "expected {} interface parameters, got {}",
            cells.len() + 1,
            params.len()
        )));
    }
    let n = cells.len();
    let mut s: f64 = 0.0;
    for (i, p) in params.iter().enumerate() {
        let wl = &cells[i.saturating_sub(1)];
        let wr = &cells[i.min(n - 1)];
        for k in 0..2 {
            let a = p.get(k);
            s = s
                .max((wl.u(k) - a / wl.rho(k)).abs())
                .max((wr.u(k) + a / wr.rho(k)).abs());
        }
    }
    speed_to_dt(s, dx, cfl)
}

fn speed_to_dt(s: f64, dx: f64, cfl: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::ZeroSpeed);
    }
    Ok(cfl * dx / s)
}

/// Interface fluxes of either scheme for the (ghost-padded) cell array.
pub fn all_fluxes(
    prim: &[PrimitiveState],
    scheme: SchemeKind,
    eos: &[EosParams; 2],
    select: &ParamSelectConfig,
) -> Result<Vec<InterfaceFluxes>> {
    let n = prim.len();
    (0..=n)
        .map(|i| {
            let wl = &prim[i.saturating_sub(1)];
            let wr = &prim[i.min(n - 1)];
            match scheme {
                SchemeKind::Relaxation => interface_fluxes(wl, wr, eos, select),
                SchemeKind::Rusanov => rusanov::interface_fluxes(wl, wr, eos),
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct StepResult {
    pub cells: Vec<ConservedState>,
    pub dt: f64,
    pub fluxes: Vec<InterfaceFluxes>,
}

/// One explicit update. `dt_cap` clips the step (never enlarges it);
/// `index` and `t` only label errors.
pub fn step(
    cells: &[ConservedState],
    cfg: &RunConfig,
    eos: &[EosParams; 2],
    dt_cap: f64,
    index: usize,
    t: f64,
) -> Result<StepResult> {
    let dx = cfg.dx();
    let prim = cells
        .iter()
        .enumerate()
        .map(|(j, u)| {
            to_primitive(u, eos).map_err(|e| match e {
                Error::Inadmissible(violation) => Error::Positivity {
                    cell: j,
                    step: index,
                    t,
                    violation,
                },
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fluxes = all_fluxes(&prim, cfg.scheme, eos, &cfg.select)?;
    let s = fluxes.iter().fold(0.0f64, |m, f| m.max(f.speed));
    let dt = speed_to_dt(s, dx, cfg.cfl)?.min(dt_cap);
    let lambda = dt / dx;
    let mut out = Vec::with_capacity(cells.len());
    for (j, u) in cells.iter().enumerate() {
        let mut v = u.0;
        let (fr, fl) = (&fluxes[j + 1].f_minus, &fluxes[j].f_plus);
        for i in 0..NVARS {
            v[i] -= lambda * (fr[i] - fl[i]);
        }
        let next = ConservedState(v);
        next.check(eos).map_err(|violation| Error::Positivity {
            cell: j,
            step: index + 1,
            t: t + dt,
            violation,
        })?;
        out.push(next);
    }
    Ok(StepResult {
        cells: out,
        dt,
        fluxes,
    })
}

/// Domain totals of (a1 r1, a2 r2, sum of momenta, sum of energies) times dx.
pub fn totals(cells: &[ConservedState], dx: f64) -> [f64; 4] {
    let mut t = [0.0; 4];
    for u in cells {
        t[0] += u.0[1];
        t[1] += u.0[2];
        t[2] += u.0[3] + u.0[4];
        t[3] += u.0[5] + u.0[6];
    }
    t.map(|v| v * dx)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    pub step: usize,
    pub t: f64,
    pub dt: f64,
    pub totals: [f64; 4],
    pub min_alpha1: f64,
    pub min_alpha2: f64,
    pub min_rho: [f64; 2],
    pub min_e: [f64; 2],
}

impl StepRecord {
    fn new(step: usize, t: f64, dt: f64, cells: &[ConservedState], dx: f64) -> Self {
        let mut r = StepRecord {
            step,
            t,
            dt,
            totals: totals(cells, dx),
            min_alpha1: f64::INFINITY,
            min_alpha2: f64::INFINITY,
            min_rho: [f64::INFINITY; 2],
            min_e: [f64::INFINITY; 2],
        };
        for u in cells {
            r.min_alpha1 = r.min_alpha1.min(u.alpha1());
            r.min_alpha2 = r.min_alpha2.min(u.alpha2());
            for k in 0..2 {
                r.min_rho[k] = r.min_rho[k].min(u.mass(k) / u.alpha(k));
                r.min_e[k] = r.min_e[k].min(u.internal_energy(k) / u.mass(k));
            }
        }
        r
    }

    pub const CSV_HEADER: &'static str =
        "step,t,dt,mass1,mass2,momentum,energy,min_alpha1,min_alpha2,min_rho1,min_rho2,min_e1,min_e2";

    pub fn csv_row(&self) -> String {
        let v = [
            self.t,
            self.dt,
            self.totals[0],
            self.totals[1],
            self.totals[2],
            self.totals[3],
            self.min_alpha1,
            self.min_alpha2,
            self.min_rho[0],
            self.min_rho[1],
            self.min_e[0],
            self.min_e[1],
        ];
        let mut s = self.step.to_string();
        for x in v {
            s.push(',');
            s.push_str(&format!("{x:.16e}"));
        }
        s
    }
}

/// What an observer sees after each accepted step.
pub struct StepView<'a> {
    pub index: usize,
    /// Time at the start of the step.
    pub t: f64,
    pub dt: f64,
    pub dx: f64,
    pub before: &'a [ConservedState],
    pub after: &'a [ConservedState],
    /// Interface i sits between cells i-1 and i (ghost copies at the ends).
    pub fluxes: &'a [InterfaceFluxes],
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub x: Vec<f64>,
    pub dx: f64,
    pub t: f64,
    pub cells: Vec<ConservedState>,
    pub log: Vec<StepRecord>,
}

impl RunOutput {
    pub fn primitive(&self, eos: &[EosParams; 2]) -> Result<Vec<PrimitiveState>> {
        self.cells.iter().map(|u| to_primitive(u, eos)).collect()
    }
}

/// Cell-center projection of a two-state initial datum.
pub fn riemann_initial(
    left: &PrimitiveState,
    right: &PrimitiveState,
    x0: f64,
    cfg: &RunConfig,
    eos: &[EosParams; 2],
) -> Result<Vec<ConservedState>> {
    let ul = crate::state::to_conserved(left, eos)?;
    let ur = crate::state::to_conserved(right, eos)?;
    Ok(cfg
        .centers()
        .into_iter()
        .map(|x| if x < x0 { ul } else { ur })
        .collect())
}

pub fn run(initial: &[ConservedState], cfg: &RunConfig, eos: &[EosParams; 2]) -> Result<RunOutput> {
    run_observed(initial, cfg, eos, |_| {})
}

pub fn run_observed<F>(
    initial: &[ConservedState],
    cfg: &RunConfig,
    eos: &[EosParams; 2],
    mut observer: F,
) -> Result<RunOutput>
where
    F: FnMut(&StepView),
{
    cfg.validate()?;
    if initial.len() != cfg.cells {
        return Err(Error::Config(format!(
            "initial data has {} cells, config says {}",
            initial.len(),
            cfg.cells
        )));
    }
    let dx = cfg.dx();
    for (j, u) in initial.iter().enumerate() {
        u.check(eos).map_err(|violation| Error::Positivity {
            cell: j,
            step: 0,
            t: 0.0,
            violation,
        })?;
    }
    let mut cells = initial.to_vec();
    let mut t = 0.0;
    let mut log = vec![StepRecord::new(0, 0.0, 0.0, &cells, dx)];
    let mut index = 0;
    while t < cfg.t_final {
        let res = step(&cells, cfg, eos, cfg.t_final - t, index, t)?;
        observer(&StepView {
            index,
            t,
            dt: res.dt,
            dx,
            before: &cells,
            after: &res.cells,
            fluxes: &res.fluxes,
        });
        index += 1;
        // Land exactly on t_final when the step was clipped.
        t = if res.dt == cfg.t_final - t { cfg.t_final } else { t + res.dt };
        cells = res.cells;
        log.push(StepRecord::new(index, t, res.dt, &cells, dx));
    }
    Ok(RunOutput {
        x: cfg.centers(),
        dx,
        t,
        cells,
        log,
    })
}
