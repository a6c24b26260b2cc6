//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use bn_relax::harness::{bench, convergence_slopes, convergence_study, measure, mesh_levels, time_to_target, VARIABLES};
use bn_relax::reference::{exact_sample, get_case, TestCase};
use bn_relax::riemann::{
    build_solution, classify_ordering, sharp_quantities, solve_star, FixedPointContext, RelaxParams, WaveOrdering,
};
use bn_relax::scheme::{
    riemann_initial, run, run_observed, select_parameters, totals, ParamSelectConfig, RunConfig, SchemeKind,
};
use bn_relax::state::ConservedState;
use bn_relax::{EosParams, PrimitiveState};
use common::{ideal, mixed, random_state, rel, suliciu_star};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;

type Outcome = Result<String, String>;

fn run_case(case: &TestCase, scheme: SchemeKind, cells: usize) -> Result<(RunConfig, Vec<PrimitiveState>), String> {
    let cfg = case.run_config(cells, scheme);
    let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos).map_err(|e| e.to_string())?;
    let out = run(&init, &cfg, &case.eos).map_err(|e| e.to_string())?;
    Ok((cfg, out.primitive(&case.eos).map_err(|e| e.to_string())?))
}

/// Worst relative error per variable over cells at least `margin` cells
/// from every wave, and how many cells qualified.
fn plateau_errors(case: &TestCase, cfg: &RunConfig, num: &[PrimitiveState], margin: f64) -> ([f64; 7], usize) {
    let fan = case.fan.as_ref().unwrap();
    let (dx, t) = (cfg.dx(), case.t_max);
    let waves = fan.waves();
    // some velocities vanish in a region; floor the denominator at a tenth
    // of the variable's largest magnitude over the case's regions
    let mut floor = [0.0f64; 7];
    for w in &waves {
        for reg in [&w.left, &w.right] {
            let vals = [reg.rho, reg.u, reg.p];
            let k = if w.phase == bn_relax::reference::WavePhase::Two { 1 } else { 0 };
            for (j, v) in vals.iter().enumerate() {
                floor[1 + 3 * k + j] = floor[1 + 3 * k + j].max(0.1 * v.abs());
            }
        }
    }
    floor[0] = 0.1 * fan.alpha1.0.max(fan.alpha1.1);
    let mut worst = [0.0f64; 7];
    let mut counted = 0;
    for (x, w) in cfg.centers().iter().zip(num) {
        let clear = waves.iter().all(|wv| {
            let (a, b) = (case.x0 + wv.speeds.0 * t, case.x0 + wv.speeds.1 * t);
            (x - a).abs() >= margin * dx && (x - b).abs() >= margin * dx && !(a < *x && *x < b)
        });
        if !clear {
            continue;
        }
        counted += 1;
        let exact = exact_sample(fan, (x - case.x0) / t).to_array();
        for (i, (n, e)) in w.to_array().iter().zip(exact).enumerate() {
            worst[i] = worst[i].max((n - e).abs() / e.abs().max(floor[i]));
        }
    }
    (worst, counted)
}

fn argmax(v: &[f64; 7]) -> (usize, f64) {
    v.iter().enumerate().fold((0, 0.0), |acc, (i, &x)| if x > acc.1 { (i, x) } else { acc })
}

/// Constant-region values at 3200 cells, 10 cells away from every wave.
fn plateaus() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for id in [1, 2, 4] {
        let case = get_case(id).unwrap();
        let (cfg, num) = run_case(&case, SchemeKind::Relaxation, 3200)?;
        let (worst, counted) = plateau_errors(&case, &cfg, &num, 10.0);
        for (i, &err) in worst.iter().enumerate() {
            let tol = if id == 2 && i == 1 { 5e-2 } else { 2e-2 };
            if err > tol {
                failures.push(format!("case {id} {} {err:.2e}", VARIABLES[i]));
            }
        }
        // contacts smear over O(sqrt(steps)) cells; a wide margin shows
        // whether the plateau values themselves are right
        let (wide, wide_n) = plateau_errors(&case, &cfg, &num, 100.0);
        let (i, m) = argmax(&worst);
        let (j, mw) = argmax(&wide);
        report.push(format!(
            "case {id}: worst {} {m:.2e} over {counted} cells, {} {mw:.2e} over {wide_n} cells at 100 dx",
            VARIABLES[i], VARIABLES[j]
        ));
    }
    if failures.is_empty() {
        Ok(report.join("; "))
    } else {
        Err(format!("over tolerance: {} [{}]", failures.join(", "), report.join("; ")))
    }
}

fn convergence_order() -> Outcome {
    let case = get_case(1).unwrap();
    let rows = convergence_study(&case, SchemeKind::Relaxation, &mesh_levels(6)).unwrap();
    let slopes = convergence_slopes(&rows);
    let mut parts = Vec::new();
    let mut ok = true;
    for (i, s) in slopes.iter().enumerate() {
        let s = s.ok_or_else(|| format!("no slope for {}", VARIABLES[i]))?;
        parts.push(format!("{} {s:.3}", VARIABLES[i]));
        if VARIABLES[i] != "u2" && !(0.35..=0.95).contains(&s) {
            ok = false;
        }
    }
    if ok {
        Ok(parts.join(", "))
    } else {
        Err(parts.join(", "))
    }
}

fn positivity() -> Outcome {
    let mut checked = 0usize;
    for id in [3, 4, 5] {
        let case = get_case(id).unwrap();
        for cells in [100, 1000] {
            let cfg = case.run_config(cells, SchemeKind::Relaxation);
            let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos).unwrap();
            let mut bad = None;
            let out = run_observed(&init, &cfg, &case.eos, |v| {
                for (j, c) in v.after.iter().enumerate() {
                    checked += 1;
                    if let Err(e) = c.check(&case.eos) {
                        bad.get_or_insert(format!("case {id}, {cells} cells, step {}, cell {j}: {e}", v.index));
                    }
                }
            })
            .map_err(|e| format!("case {id}, {cells} cells: {e}"))?;
            if let Some(b) = bad {
                return Err(b);
            }
            if (out.t - case.t_max).abs() > 1e-12 * case.t_max {
                return Err(format!("case {id}, {cells} cells stopped at t={}", out.t));
            }
        }
    }
    Ok(format!("{checked} cell updates admissible"))
}

fn conservation() -> Outcome {
    let mut worst: f64 = 0.0;
    for id in 1..=5 {
        let case = get_case(id).unwrap();
        let cfg = case.run_config(200, SchemeKind::Relaxation);
        let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos).unwrap();
        run_observed(&init, &cfg, &case.eos, |v| {
            let (b, a) = (totals(v.before, v.dx), totals(v.after, v.dx));
            let (fl, fr) = (&v.fluxes[0].f_plus, &v.fluxes[v.fluxes.len() - 1].f_minus);
            let boundary = [
                fr[1] - fl[1],
                fr[2] - fl[2],
                fr[3] + fr[4] - fl[3] - fl[4],
                fr[5] + fr[6] - fl[5] - fl[6],
            ];
            // momentum can sum to zero; scale by its L1 content instead
            let l1_mom: f64 = v.before.iter().map(|c| (c.0[3].abs() + c.0[4].abs()) * v.dx).sum();
            for q in 0..4 {
                let scale = if q == 2 { l1_mom } else { b[q].abs() };
                let expect = b[q] - v.dt * boundary[q];
                worst = worst.max((a[q] - expect).abs() / scale.max(1e-300));
            }
        })
        .map_err(|e| format!("case {id}: {e}"))?;
    }
    if worst <= 1e-11 {
        Ok(format!("worst relative discrepancy {worst:.2e}"))
    } else {
        Err(format!("worst relative discrepancy {worst:.2e}"))
    }
}

fn partial_entropy(c: &ConservedState, eos: &[EosParams; 2], k: usize) -> (f64, f64) {
    let m = c.mass(k);
    let rho = m / c.alpha(k);
    let s = eos[k].entropy(rho, c.internal_energy(k) / m).unwrap();
    (s, m * s)
}

fn entropy_inequality() -> Outcome {
    let mut worst: f64 = f64::INFINITY;
    let mut steps = 0;
    for id in [1, 2] {
        let case = get_case(id).unwrap();
        let cfg = case.run_config(200, SchemeKind::Relaxation);
        let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos).unwrap();
        run_observed(&init, &cfg, &case.eos, |v| {
            steps += 1;
            let n = v.before.len();
            let lam = v.dt / v.dx;
            for k in 0..2 {
                let flux: Vec<f64> = v
                    .fluxes
                    .iter()
                    .enumerate()
                    .map(|(j, f)| {
                        // ghost cells copy their neighbours
                        let cell = match f.upwind[k] {
                            bn_relax::riemann::Side::Left => j.saturating_sub(1),
                            bn_relax::riemann::Side::Right => j.min(n - 1),
                        };
                        f.mass_flux[k] * partial_entropy(&v.before[cell], &case.eos, k).0
                    })
                    .collect();
                for j in 0..n {
                    let old = partial_entropy(&v.before[j], &case.eos, k).1;
                    let new = partial_entropy(&v.after[j], &case.eos, k).1;
                    let (gl, gr) = (lam * flux[j], lam * flux[j + 1]);
                    let lhs = new - old + gr - gl;
                    let scale = old.abs() + new.abs() + gl.abs() + gr.abs();
                    // slack = -lhs must stay above -1e-10 scale
                    worst = worst.min((-lhs) / scale.max(1e-300));
                }
            }
        })
        .map_err(|e| format!("case {id}: {e}"))?;
    }
    let msg = format!("{steps} steps, smallest scaled slack {worst:.2e}");
    if worst >= -1e-10 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn well_balanced() -> Outcome {
    let eos = ideal();
    let l = PrimitiveState { alpha1: 0.2, rho1: 1.0, u1: 0.0, p1: 1.0, rho2: 2.0, u2: 0.0, p2: 1.0 };
    let r = PrimitiveState { alpha1: 0.7, rho1: 0.5, rho2: 3.0, ..l };
    let mut cfg = RunConfig {
        cells: 50,
        domain: (0.0, 1.0),
        cfl: 0.45,
        t_final: 1.0,
        scheme: SchemeKind::Relaxation,
        select: ParamSelectConfig::default(),
    };
    let init = riemann_initial(&l, &r, 0.5, &cfg, &eos).unwrap();
    let max_change = |a: &[ConservedState]| {
        a.iter()
            .zip(&init)
            .flat_map(|(x, y)| (0..7).map(move |i| (x.0[i] - y.0[i]).abs()))
            .fold(0.0f64, f64::max)
    };
    let mut relax: f64 = 0.0;
    let mut steps = 0;
    let res = run_observed(&init, &cfg, &eos, |v| {
        if steps < 100 {
            relax = relax.max(max_change(v.after));
        }
        steps += 1;
    });
    res.map_err(|e| e.to_string())?;
    if steps < 100 {
        return Err(format!("only {steps} steps"));
    }
    cfg.scheme = SchemeKind::Rusanov;
    let mut rus = None;
    run_observed(&init, &cfg, &eos, |v| {
        rus.get_or_insert_with(|| max_change(v.after));
    })
    .map_err(|e| e.to_string())?;
    let rus = rus.unwrap();
    let msg = format!("relaxation drift {relax:.2e} over 100 steps, Rusanov one-step change {rus:.2e}");
    if relax <= 1e-12 && rus > 1e-6 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn accuracy_ordering() -> Outcome {
    let case = get_case(1).unwrap();
    let re = measure(&case, SchemeKind::Relaxation, 100, None).map_err(|e| e.to_string())?;
    let ru = measure(&case, SchemeKind::Rusanov, 100, None).map_err(|e| e.to_string())?;
    let mut worse = Vec::new();
    for i in 0..7 {
        let (a, b) = (re.errors[i].unwrap(), ru.errors[i].unwrap());
        if a >= b {
            worse.push(format!("{} {a:.3e} >= {b:.3e}", VARIABLES[i]));
        }
    }
    let rows = bench(&case, &mesh_levels(4)).map_err(|e| e.to_string())?;
    // target: what the baseline reaches on its finest mesh
    let target = rows
        .iter()
        .filter_map(|o| o.report())
        .rfind(|r| r.scheme == SchemeKind::Rusanov)
        .and_then(|r| r.errors[1])
        .unwrap();
    let t_re = time_to_target(&rows, SchemeKind::Relaxation, 1, target);
    let t_ru = time_to_target(&rows, SchemeKind::Rusanov, 1, target);
    let timing = format!("rho1 target {target:.3e}: relaxation {t_re:?} s, Rusanov {t_ru:?} s");
    let faster = matches!((t_re, t_ru), (Some(a), Some(b)) if a < b);
    if worse.is_empty() && faster {
        Ok(format!("all variables lower at 100 cells; {timing}"))
    } else {
        Err(format!("{}; {timing}", worse.join(", ")))
    }
}

fn kernel_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cfg = ParamSelectConfig { max_inflations: 2000, ..ParamSelectConfig::default() };
    let (mut psi_worst, mut mirror_worst) = (0.0f64, 0.0f64);
    let mut dec_worst = (0.0, "");
    let mut solved = 0;
    for n in 0..10_000 {
        let eos = if n % 2 == 0 { ideal() } else { mixed() };
        let wl = random_state(&mut rng, &eos);
        let wr = random_state(&mut rng, &eos);
        let sel = select_parameters(&wl, &wr, &eos, &cfg).map_err(|e| format!("pair {n}: {e}"))?;
        let (p, sol) = (sel.params, sel.solution);

        // fixed point, written for the ordering with u2* below the phase-1 contact
        let s = sharp_quantities(&wl, &wr, &p);
        let (cl, cr, sc) = match classify_ordering(&s, &p) {
            Some(WaveOrdering::Order21) => {
                let (ml, mr) = (wr.mirrored(), wl.mirrored());
                let sm = sharp_quantities(&ml, &mr, &p);
                (ml, mr, sm)
            }
            _ => (wl, wr, s),
        };
        if cl.alpha1 != cr.alpha1 && classify_ordering(&sc, &p) == Some(WaveOrdering::Order12) {
            let ctx = FixedPointContext::new(cl.alpha1, cr.alpha1, &sc, &p, 0.1);
            let star = solve_star(&ctx, &sc, &p).map_err(|e| format!("pair {n}: {e}"))?;
            psi_worst = psi_worst.max((ctx.psi(star.m_star) - ctx.rhs()).abs());
            solved += 1;
        }

        let u2s = sol.u2_star;
        let bounds = wl.u1 - p.a1 / wl.rho1 < u2s
            && u2s < wr.u1 + p.a1 / wr.rho1
            && s.u_sharp[1] - p.a2 * s.tau_sharp_l[1] < u2s
            && u2s < s.u_sharp[1] + p.a2 * s.tau_sharp_r[1];
        if !bounds {
            return Err(format!("pair {n}: u2* = {u2s} outside the subsonic window"));
        }

        let xi: f64 = rng.gen_range(-3.0..3.0);
        let mirrored = build_solution(&wr.mirrored(), &wl.mirrored(), &eos, &p, 0.1).map_err(|e| e.to_string())?;
        let (a, b) = (sol.sample(xi), mirrored.sample(-xi));
        if a.alpha1 != b.alpha1 {
            return Err(format!("pair {n}: mirrored alpha1 differs"));
        }
        for k in 0..2 {
            mirror_worst = mirror_worst
                .max(rel(a.tau[k], b.tau[k]))
                .max((a.u[k] + b.u[k]).abs() / a.u[k].abs().max(1.0))
                .max(rel(a.pi[k], b.pi[k]))
                .max(rel(a.energy[k], b.energy[k]));
        }

        let wr_eq = PrimitiveState { alpha1: wl.alpha1, ..wr };
        let sel = select_parameters(&wl, &wr_eq, &eos, &cfg).map_err(|e| format!("pair {n}: {e}"))?;
        let d = decoupling_error(&wl, &wr_eq, &sel.params, &sel.solution);
        if d.0 > dec_worst.0 {
            dec_worst = d;
        }
    }
    let msg = format!(
        "10000 pairs ({solved} fixed points): residual {psi_worst:.3e}, mirror {mirror_worst:.1e}, decoupling {:.1e} ({})",
        dec_worst.0,
        dec_worst.1
    );
    if psi_worst <= 1e-12 && mirror_worst <= 1e-13 && dec_worst.0 <= 1e-13 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

/// Largest relative gap between the star states and the single-phase
/// oracle, with the quantity it came from.
fn decoupling_error(
    wl: &PrimitiveState,
    wr: &PrimitiveState,
    p: &RelaxParams,
    sol: &bn_relax::riemann::RelaxRiemannSolution,
) -> (f64, &'static str) {
    let mut worst = (0.0, "");
    for k in 0..2 {
        let (tl0, tr0) = (1.0 / wl.rho(k), 1.0 / wr.rho(k));
        let (u, pi, tl, tr) = suliciu_star(tl0, wl.u(k), wl.p(k), tr0, wr.u(k), wr.p(k), p.get(k));
        let regs = sol.phases[k].regions();
        let (sl, sr) = (&regs[1], &regs[regs.len() - 2]);
        // pi* and u* come out of a cancellation between the two acoustic
        // invariants, so compare against the size of the inputs
        let a = p.get(k);
        let pscale = wl.p(k).abs() + wr.p(k).abs() + a * (wl.u(k).abs() + wr.u(k).abs());
        let uscale = pscale / a;
        for (e, what) in [
            ((sl.u - u).abs() / uscale, "u"),
            ((sr.u - u).abs() / uscale, "u"),
            ((sl.pi - pi).abs() / pscale, "pi"),
            ((sr.pi - pi).abs() / pscale, "pi"),
            ((sl.tau - tl).abs() / (tl0 + tr0), "tau"),
            ((sr.tau - tr).abs() / (tl0 + tr0), "tau"),
        ] {
            if e > worst.0 {
                worst = (e, what);
            }
        }
    }
    worst
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 constant-region reproduction", plateaus),
        ("2 convergence order", convergence_order),
        ("3 positivity under stress", positivity),
        ("4 conservation audit", conservation),
        ("5 discrete entropy inequality", entropy_inequality),
        ("6 well-balanced contact", well_balanced),
        ("7 accuracy ordering", accuracy_ordering),
        ("8 solver kernel properties", kernel_properties),
    ];
    // `cargo test --test acceptance -- 3 5` runs only those criteria
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, (name, check)) in criteria.into_iter().enumerate() {
        if !only.is_empty() && !only.contains(&(n + 1)) {
            continue;
        }
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
