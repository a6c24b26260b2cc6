//! The five benchmark Riemann problems and their exact solutions.
//!
//! Constant states are the published ones (about five significant digits).
//! Shock speeds come from the mass jump condition, fans from isentropic
//! gas dynamics of the phase concerned: away from the coupling wave the
//! phase fraction is constant and each phase is a plain Euler gas.

use crate::eos::EosParams;
use crate::error::{Error, Result};
use crate::scheme::{ParamSelectConfig, RunConfig, SchemeKind};
use crate::state::PrimitiveState;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub name: &'static str,
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

const fn reg(name: &'static str, rho: f64, u: f64, p: f64) -> Region {
    Region { name, rho, u, p }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveKind {
    Shock,
    /// Phase-velocity contact u_k.
    Contact,
    /// The u2 contact carrying the phase-fraction jump.
    Coupling,
    /// Fan of the u - c family.
    RarefactionMinus,
    /// Fan of the u + c family.
    RarefactionPlus,
}

impl WaveKind {
    pub fn is_fan(&self) -> bool {
        matches!(self, WaveKind::RarefactionMinus | WaveKind::RarefactionPlus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WavePhase {
    One,
    Two,
    Coupling,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactWave {
    pub kind: WaveKind,
    /// Leftmost and rightmost speed; equal for discontinuities.
    pub speeds: (f64, f64),
}

/// Wave sequence of one phase: `regions.len() == waves.len() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseWaves {
    pub regions: Vec<Region>,
    pub waves: Vec<ExactWave>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactWaveFan {
    pub alpha1: (f64, f64),
    pub coupling_speed: f64,
    pub phases: [PhaseWaves; 2],
    pub eos: [EosParams; 2],
}

/// Flattened description of one wave for reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveInfo {
    pub kind: WaveKind,
    pub phase: WavePhase,
    pub speeds: (f64, f64),
    pub left: Region,
    pub right: Region,
}

impl ExactWaveFan {
    fn build(
        alpha1: (f64, f64),
        eos: [EosParams; 2],
        spec: [(&[Region], &[WaveKind]); 2],
    ) -> Self {
        // u2 is continuous across the coupling wave; phase 1 is not, so
        // its speed is read from phase 2.
        let coupling = {
            let (regions, kinds) = spec[1];
            kinds
                .iter()
                .position(|&k| k == WaveKind::Coupling)
                .map_or(f64::NAN, |i| 0.5 * (regions[i].u + regions[i + 1].u))
        };
        let phases = [0, 1].map(|k| {
            let (regions, kinds) = spec[k];
            assert_eq!(regions.len(), kinds.len() + 1);
            let waves = kinds
                .iter()
                .enumerate()
                .map(|(i, &kind)| {
                    let (l, r) = (&regions[i], &regions[i + 1]);
                    let speeds = match kind {
                        WaveKind::Shock => {
                            let s = (r.rho * r.u - l.rho * l.u) / (r.rho - l.rho);
                            (s, s)
                        }
                        WaveKind::Contact => {
                            let s = 0.5 * (l.u + r.u);
                            (s, s)
                        }
                        WaveKind::Coupling => (coupling, coupling),
                        WaveKind::RarefactionMinus => {
                            (l.u - sound(&eos[k], l), r.u - sound(&eos[k], r))
                        }
                        WaveKind::RarefactionPlus => {
                            (l.u + sound(&eos[k], l), r.u + sound(&eos[k], r))
                        }
                    };
                    ExactWave { kind, speeds }
                })
                .collect();
            PhaseWaves {
                regions: regions.to_vec(),
                waves,
            }
        });
        ExactWaveFan {
            alpha1,
            coupling_speed: coupling,
            phases,
            eos,
        }
    }

    /// All waves, ordered by their left speed. The coupling wave is listed
    /// once, with the phase-2 regions on each side.
    pub fn waves(&self) -> Vec<WaveInfo> {
        let mut out = Vec::new();
        for (k, ph) in self.phases.iter().enumerate() {
            for (i, w) in ph.waves.iter().enumerate() {
                let phase = match (w.kind, k) {
                    (WaveKind::Coupling, 0) => continue,
                    (WaveKind::Coupling, _) => WavePhase::Coupling,
                    (_, 0) => WavePhase::One,
                    _ => WavePhase::Two,
                };
                out.push(WaveInfo {
                    kind: w.kind,
                    phase,
                    speeds: w.speeds,
                    left: ph.regions[i],
                    right: ph.regions[i + 1],
                });
            }
        }
        out.sort_by(|a, b| a.speeds.0.total_cmp(&b.speeds.0));
        out
    }

    fn sample_phase(&self, k: usize, xi: f64) -> (f64, f64, f64) {
        let ph = &self.phases[k];
        for (i, w) in ph.waves.iter().enumerate() {
            if xi < w.speeds.0 {
                let r = &ph.regions[i];
                return (r.rho, r.u, r.p);
            }
            if w.kind.is_fan() && xi < w.speeds.1 {
                return self.fan_state(k, w.kind, &ph.regions[i], &ph.regions[i + 1], xi);
            }
        }
        let r = ph.regions.last().expect("nonempty regions");
        (r.rho, r.u, r.p)
    }

    /// Interior of an isentropic fan. The Riemann invariant and entropy are
    /// taken from the undisturbed side (left for u - c, right for u + c).
    fn fan_state(&self, k: usize, kind: WaveKind, l: &Region, r: &Region, xi: f64) -> (f64, f64, f64) {
        let eos = &self.eos[k];
        let g = eos.gamma;
        let outer = if kind == WaveKind::RarefactionMinus { l } else { r };
        let c0 = sound(eos, outer);
        let entropy_k = (outer.p + eos.p_inf) / outer.rho.powf(g);
        let (c, u) = if kind == WaveKind::RarefactionMinus {
            let j = outer.u + 2.0 * c0 / (g - 1.0);
            let c = (g - 1.0) / (g + 1.0) * (j - xi);
            (c, xi + c)
        } else {
            let j = outer.u - 2.0 * c0 / (g - 1.0);
            let c = (g - 1.0) / (g + 1.0) * (xi - j);
            (c, xi - c)
        };
        let rho = (c * c / (g * entropy_k)).powf(1.0 / (g - 1.0));
        let p = entropy_k * rho.powf(g) - eos.p_inf;
        (rho, u, p)
    }
}

fn sound(eos: &EosParams, r: &Region) -> f64 {
    (eos.gamma * (r.p + eos.p_inf) / r.rho).sqrt()
}

/// Exact state at xi = (x - x0) / t, right limit on discontinuities.
pub fn exact_sample(fan: &ExactWaveFan, xi: f64) -> PrimitiveState {
    let (rho1, u1, p1) = fan.sample_phase(0, xi);
    let (rho2, u2, p2) = fan.sample_phase(1, xi);
    let alpha1 = if xi < fan.coupling_speed {
        fan.alpha1.0
    } else {
        fan.alpha1.1
    };
    PrimitiveState {
        alpha1,
        rho1,
        u1,
        p1,
        rho2,
        u2,
        p2,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestCase {
    pub id: Option<u32>,
    pub eos: [EosParams; 2],
    pub x0: f64,
    pub t_max: f64,
    pub cfl: f64,
    pub domain: (f64, f64),
    pub left: PrimitiveState,
    pub right: PrimitiveState,
    pub fan: Option<ExactWaveFan>,
}

impl TestCase {
    pub fn run_config(&self, cells: usize, scheme: SchemeKind) -> RunConfig {
        RunConfig {
            cells,
            domain: self.domain,
            cfl: self.cfl,
            t_final: self.t_max,
            scheme,
            select: ParamSelectConfig::default(),
        }
    }

    /// Exact profile at the cell centers of a uniform mesh.
    pub fn exact_profile(&self, cells: usize, t: f64) -> Result<Vec<PrimitiveState>> {
        let fan = self
            .fan
            .as_ref()
            .ok_or_else(|| Error::Config("no exact solution for this case".into()))?;
        if !(t > 0.0) {
            return Err(Error::Config(format!("exact profile needs t > 0, got {t}")));
        }
        let dx = (self.domain.1 - self.domain.0) / cells as f64;
        Ok((0..cells)
            .map(|j| {
                let x = self.domain.0 + (j as f64 + 0.5) * dx;
                exact_sample(fan, (x - self.x0) / t)
            })
            .collect())
    }
}

pub fn exact_profile(case: &TestCase, cells: usize, t: f64) -> Result<Vec<PrimitiveState>> {
    case.exact_profile(cells, t)
}

fn prim(alpha1: f64, p1: &Region, p2: &Region) -> PrimitiveState {
    PrimitiveState {
        alpha1,
        rho1: p1.rho,
        u1: p1.u,
        p1: p1.p,
        rho2: p2.rho,
        u2: p2.u,
        p2: p2.p,
    }
}

fn eos(gamma: f64, p_inf: f64) -> EosParams {
    EosParams::new(gamma, p_inf).expect("registry EOS parameters are valid")
}

pub fn get_case(id: u32) -> Result<TestCase> {
    use WaveKind::*;
    let (eos_pair, x0, t_max, domain, alpha1, r1, k1, r2, k2): (
        [EosParams; 2],
        f64,
        f64,
        (f64, f64),
        (f64, f64),
        Vec<Region>,
        Vec<WaveKind>,
        Vec<Region>,
        Vec<WaveKind>,
    ) = match id {
        1 => (
            [eos(1.4, 0.0), eos(1.4, 0.0)],
            0.0,
            0.15,
            (-0.5, 0.5),
            (0.2, 0.7),
            vec![
                reg("L", 0.2143, -0.02609, 0.3),
                reg("L*", 0.35, -0.7683, 0.6045),
                reg("-", 0.698, -0.7683, 0.6045),
                reg("+", 0.90583, -0.11581, 0.87069),
                reg("R", 0.96964, -0.03629, 0.95776),
            ],
            vec![Shock, Contact, Coupling, RarefactionPlus],
            vec![
                reg("L", 1.00003, 0.00007, 1.0),
                reg("-", 0.9436, 0.0684, 0.9219),
                reg("+", 1.0591, 0.0684, 1.08383),
                reg("R", 0.99993, -0.00004, 1.0),
            ],
            vec![RarefactionMinus, Coupling, Shock],
        ),
        2 => (
            [eos(1.4, 0.0), eos(3.0, 100.0)],
            0.8,
            0.007,
            (0.0, 1.0),
            (0.3, 0.8),
            vec![
                reg("L", 1.0, -19.59741, 1000.0),
                reg("-", 0.4684, 6.7332, 345.8279),
                reg("+", 0.50297, -1.75405, 382.08567),
                reg("R*", 5.9991, -1.75405, 382.08567),
                reg("R", 1.0, -19.59741, 0.01),
            ],
            vec![RarefactionMinus, Coupling, Contact, Shock],
            vec![
                reg("L", 1.0, -19.59716, 1000.0),
                reg("-", 0.7687, -6.3085, 399.5878),
                reg("+", 1.6087, -6.3085, 466.72591),
                reg("R", 1.0, -19.59741, 0.01),
            ],
            vec![RarefactionMinus, Coupling, Shock],
        ),
        3 => {
            let phase = vec![
                reg("L", 0.99988, -1.99931, 0.4),
                reg("-", 0.0219, 0.0, 0.0019),
                reg("+", 0.0219, 0.0, 0.0019),
                reg("R", 0.99988, 1.99931, 0.4),
            ];
            let kinds = vec![RarefactionMinus, Coupling, RarefactionPlus];
            (
                [eos(1.4, 0.0), eos(1.4, 0.0)],
                0.5,
                0.15,
                (0.0, 1.0),
                (0.2, 0.5),
                phase.clone(),
                kinds.clone(),
                phase,
                kinds,
            )
        }
        4 => (
            [eos(3.0, 0.0), eos(1.4, 0.0)],
            0.0,
            0.15,
            (-0.5, 0.5),
            (1.0 - 1e-4, 0.4),
            vec![
                reg("L", 1.6, 0.80311, 1.3),
                reg("-", 2.0, 0.4, 2.6),
                reg("+", 1.8485, 0.91147, 2.05277),
                reg("R*", 2.03335, 0.91147, 2.05277),
                reg("R", 1.62668, 0.55623, 1.02638),
            ],
            vec![Shock, Coupling, Contact, Shock],
            vec![
                // absent phase: copied from the + region
                reg("L", 4.0, 0.1, 2.45335),
                reg("+", 4.0, 0.1, 2.45335),
                reg("R", 7.69667, 0.74797, 6.13338),
            ],
            vec![Coupling, RarefactionPlus],
        ),
        5 => (
            [eos(3.0, 0.0), eos(1.4, 0.0)],
            0.0,
            0.05,
            (-0.5, 0.5),
            (1.0 - 1e-9, 1e-9),
            vec![
                reg("L", 1.6, 1.79057, 5.0),
                reg("-", 2.0, 1.0, 10.0),
                // absent phase: copied from the - region
                reg("R", 2.0, 1.0, 10.0),
            ],
            vec![Shock, Coupling],
            vec![
                // absent phase: copied from the + region
                reg("L", 2.0, 1.0, 10.0),
                reg("+", 2.0, 1.0, 10.0),
                reg("R", 2.67183, 1.78888, 15.0),
            ],
            vec![Coupling, RarefactionPlus],
        ),
        other => return Err(Error::UnknownCase(other)),
    };
    let fan = ExactWaveFan::build(alpha1, eos_pair, [(&r1, &k1), (&r2, &k2)]);
    let left = prim(alpha1.0, &r1[0], &r2[0]);
    let right = prim(alpha1.1, r1.last().unwrap(), r2.last().unwrap());
    Ok(TestCase {
        id: Some(id),
        eos: eos_pair,
        x0,
        t_max,
        cfl: 0.45,
        domain,
        left,
        right,
        fan: Some(fan),
    })
}
