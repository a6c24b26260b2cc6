//! Error metrics, convergence studies, timing and file formats.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde_json::Value;

use crate::eos::EosParams;
use crate::error::{Error, Result};
use crate::reference::TestCase;
use crate::scheme::{riemann_initial, run, RunConfig, SchemeKind};
use crate::state::{PrimitiveState, NVARS};

pub const VARIABLES: [&str; NVARS] = ["alpha1", "rho1", "u1", "p1", "rho2", "u2", "p2"];

/// Normalized L1 error per variable; `None` where the exact norm vanishes.
pub fn l1_error(
    approx: &[PrimitiveState],
    exact: &[PrimitiveState],
    dx: f64,
) -> Result<[Option<f64>; NVARS]> {
    if approx.len() != exact.len() {
        return Err(Error::Config(format!(
            "profile lengths differ: {} vs {}",
            approx.len(),
            exact.len()
        )));
    }
    let mut num = [0.0; NVARS];
    let mut den = [0.0; NVARS];
    for (a, e) in approx.iter().zip(exact) {
        let (a, e) = (a.to_array(), e.to_array());
        for i in 0..NVARS {
            num[i] += (a[i] - e[i]).abs() * dx;
            den[i] += e[i].abs() * dx;
        }
    }
    Ok(std::array::from_fn(|i| {
        (den[i] > 0.0).then(|| num[i] / den[i])
    }))
}

/// log2(E(dx) / E(dx/2)), defined when both errors are positive.
pub fn observed_order(coarse: Option<f64>, fine: Option<f64>) -> Option<f64> {
    match (coarse, fine) {
        (Some(c), Some(f)) if c > 0.0 && f > 0.0 => Some((c / f).log2()),
        _ => None,
    }
}

/// Least-squares slope of log y against log x.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 || x.iter().chain(y).any(|v| !(*v > 0.0)) {
        return None;
    }
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    Some(sxy / sxx)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub scheme: SchemeKind,
    pub cells: usize,
    pub dx: f64,
    pub errors: [Option<f64>; NVARS],
    /// Time loop only, setup and I/O excluded.
    pub wall_seconds: f64,
    /// Order against the previous (coarser) level.
    pub order: Option<[Option<f64>; NVARS]>,
}

/// Outcome of one mesh of a study; failures are kept, not skipped.
#[derive(Debug, Clone)]
pub enum LevelOutcome {
    Done(ErrorReport),
    Failed {
        scheme: SchemeKind,
        cells: usize,
        message: String,
    },
}

impl LevelOutcome {
    pub fn report(&self) -> Option<&ErrorReport> {
        match self {
            LevelOutcome::Done(r) => Some(r),
            LevelOutcome::Failed { .. } => None,
        }
    }
}

/// Runs `case` with `scheme` on `cells` and compares with the exact
/// profile at the final time.
pub fn measure(case: &TestCase, scheme: SchemeKind, cells: usize, cfl: Option<f64>) -> Result<ErrorReport> {
    let mut cfg = case.run_config(cells, scheme);
    if let Some(c) = cfl {
        cfg.cfl = c;
    }
    let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos)?;
    let start = Instant::now();
    let out = run(&init, &cfg, &case.eos)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    let approx = out.primitive(&case.eos)?;
    let exact = case.exact_profile(cells, case.t_max)?;
    Ok(ErrorReport {
        scheme,
        cells,
        dx: cfg.dx(),
        errors: l1_error(&approx, &exact, cfg.dx())?,
        wall_seconds,
        order: None,
    })
}

/// Cell counts 100 * 2^n, n = 0..levels.
pub fn mesh_levels(levels: usize) -> Vec<usize> {
    (0..levels).map(|n| 100usize << n).collect()
}

pub fn convergence_study(case: &TestCase, scheme: SchemeKind, levels: &[usize]) -> Result<Vec<LevelOutcome>> {
    if levels.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Config("levels must be increasing".into()));
    }
    let mut out: Vec<LevelOutcome> = Vec::new();
    for &cells in levels {
        let outcome = match measure(case, scheme, cells, None) {
            Ok(mut r) => {
                if let Some(prev) = out.last().and_then(|o| o.report()) {
                    r.order = Some(std::array::from_fn(|i| {
                        observed_order(prev.errors[i], r.errors[i])
                    }));
                }
                LevelOutcome::Done(r)
            }
            Err(e) => LevelOutcome::Failed {
                scheme,
                cells,
                message: e.to_string(),
            },
        };
        out.push(outcome);
    }
    Ok(out)
}

/// Slope of log E against log dx per variable over the successful levels.
pub fn convergence_slopes(outcomes: &[LevelOutcome]) -> [Option<f64>; NVARS] {
    let reports: Vec<&ErrorReport> = outcomes.iter().filter_map(|o| o.report()).collect();
    std::array::from_fn(|i| {
        let pts: Vec<(f64, f64)> = reports
            .iter()
            .filter_map(|r| r.errors[i].map(|e| (r.dx, e)))
            .collect();
        let (x, y): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
        log_log_slope(&x, &y)
    })
}

/// Both schemes on the same meshes.
pub fn bench(case: &TestCase, levels: &[usize]) -> Result<Vec<LevelOutcome>> {
    let mut rows = convergence_study(case, SchemeKind::Relaxation, levels)?;
    rows.extend(convergence_study(case, SchemeKind::Rusanov, levels)?);
    Ok(rows)
}

/// Least wall time at which `scheme` reaches error <= target on variable
/// `var`, among the measured levels.
pub fn time_to_target(rows: &[LevelOutcome], scheme: SchemeKind, var: usize, target: f64) -> Option<f64> {
    rows.iter()
        .filter_map(|o| o.report())
        .filter(|r| r.scheme == scheme)
        .filter(|r| r.errors[var].is_some_and(|e| e <= target))
        .map(|r| r.wall_seconds)
        .min_by(|a, b| a.total_cmp(b))
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_default()
}

fn study_header(with_scheme: bool) -> String {
    let mut h = String::new();
    if with_scheme {
        h.push_str("scheme,");
    }
    h.push_str("cells,dx,seconds,status");
    for v in VARIABLES {
        write!(h, ",e_{v}").unwrap();
    }
    for v in VARIABLES {
        write!(h, ",order_{v}").unwrap();
    }
    h
}

/// CSV of a convergence study or bench (`with_scheme` adds the column).
pub fn study_csv(rows: &[LevelOutcome], with_scheme: bool) -> String {
    let mut s = study_header(with_scheme);
    s.push('\n');
    for row in rows {
        match row {
            LevelOutcome::Done(r) => {
                if with_scheme {
                    write!(s, "{},", r.scheme.name()).unwrap();
                }
                write!(s, "{},{:.16e},{:.16e},ok", r.cells, r.dx, r.wall_seconds).unwrap();
                for e in r.errors {
                    write!(s, ",{}", fmt_opt(e)).unwrap();
                }
                for i in 0..NVARS {
                    write!(s, ",{}", fmt_opt(r.order.and_then(|o| o[i]))).unwrap();
                }
            }
            LevelOutcome::Failed { scheme, cells, message } => {
                if with_scheme {
                    write!(s, "{},", scheme.name()).unwrap();
                }
                let msg = message.replace([',', '\n'], ";");
                write!(s, "{cells},,,failed: {msg}").unwrap();
                s.push_str(&",".repeat(2 * NVARS));
            }
        }
        s.push('\n');
    }
    s
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub const PROFILE_HEADER: &str = "x,alpha1,rho1,u1,p1,rho2,u2,p2";

pub fn profile_csv(xs: &[f64], profile: &[PrimitiveState]) -> String {
    let mut s = String::with_capacity(200 * (xs.len() + 1));
    s.push_str(PROFILE_HEADER);
    s.push('\n');
    for (x, w) in xs.iter().zip(profile) {
        write!(s, "{x:.16e}").unwrap();
        for v in w.to_array() {
            write!(s, ",{v:.16e}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn write_profile_csv(path: &Path, xs: &[f64], profile: &[PrimitiveState]) -> Result<()> {
    if xs.len() != profile.len() {
        return Err(Error::Config("x column and profile lengths differ".into()));
    }
    write_file(path, &profile_csv(xs, profile))
}

pub fn write_text(path: &Path, contents: &str) -> Result<()> {
    write_file(path, contents)
}

pub fn read_profile_csv(path: &Path) -> Result<(Vec<f64>, Vec<PrimitiveState>)> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let bad = |msg: String| Error::Parse {
        path: path.to_path_buf(),
        msg,
    };
    let mut lines = text.lines();
    if lines.next() != Some(PROFILE_HEADER) {
        return Err(bad("missing or wrong header".into()));
    }
    let mut xs = Vec::new();
    let mut rows = Vec::new();
    for (n, line) in lines.enumerate() {
        let vals = line
            .split(',')
            .map(|t| t.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| bad(format!("line {}: {e}", n + 2)))?;
        if vals.len() != 8 {
            return Err(bad(format!("line {}: expected 8 columns", n + 2)));
        }
        xs.push(vals[0]);
        rows.push(PrimitiveState::from_array(std::array::from_fn(|i| vals[i + 1])));
    }
    Ok((xs, rows))
}

fn field<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Schema(format!("missing key \"{path}{key}\"")))
}

fn number(obj: &Value, key: &str, path: &str) -> Result<f64> {
    field(obj, key, path)?
        .as_f64()
        .ok_or_else(|| Error::Schema(format!("key \"{path}{key}\" must be a number")))
}

fn eos_from(v: &Value, key: &str) -> Result<EosParams> {
    let o = field(v, key, "")?;
    let path = format!("{key}.");
    let gamma = number(o, "gamma", &path)?;
    let p_inf = match o.get("p_inf") {
        Some(_) => number(o, "p_inf", &path)?,
        None => 0.0,
    };
    EosParams::new(gamma, p_inf).map_err(|e| Error::Schema(format!("key \"{key}\": {e}")))
}

fn state_from(v: &Value, key: &str) -> Result<PrimitiveState> {
    let o = field(v, key, "")?;
    let path = format!("{key}.");
    let vals: Vec<f64> = VARIABLES
        .iter()
        .map(|name| number(o, name, &path))
        .collect::<Result<_>>()?;
    Ok(PrimitiveState::from_array(std::array::from_fn(|i| vals[i])))
}

/// Parses a user-defined Riemann problem. Such cases carry no exact
/// solution.
pub fn parse_case_json(text: &str) -> Result<TestCase> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Schema(format!("invalid JSON: {e}")))?;
    if !v.is_object() {
        return Err(Error::Schema("top level must be an object".into()));
    }
    let eos = [eos_from(&v, "eos1")?, eos_from(&v, "eos2")?];
    let x0 = number(&v, "x0", "")?;
    let t_max = number(&v, "t_max", "")?;
    let cfl = number(&v, "cfl", "")?;
    let dom = field(&v, "domain", "")?
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Schema("key \"domain\" must be [a, b]".into()))?;
    let a = dom[0].as_f64();
    let b = dom[1].as_f64();
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) if b > a => (a, b),
        _ => return Err(Error::Schema("key \"domain\" must be [a, b] with a < b".into())),
    };
    if !(cfl > 0.0 && cfl < 0.5) {
        return Err(Error::Schema(format!("key \"cfl\" must lie in (0, 0.5), got {cfl}")));
    }
    if !(t_max >= 0.0) {
        return Err(Error::Schema(format!("key \"t_max\" must be >= 0, got {t_max}")));
    }
    if !(x0 > a && x0 < b) {
        return Err(Error::Schema(format!("key \"x0\" must lie inside the domain, got {x0}")));
    }
    let left = state_from(&v, "left")?;
    let right = state_from(&v, "right")?;
    for w in [&left, &right] {
        w.check(&eos).map_err(Error::Inadmissible)?;
    }
    Ok(TestCase {
        id: None,
        eos,
        x0,
        t_max,
        cfl,
        domain: (a, b),
        left,
        right,
        fan: None,
    })
}

pub fn load_case_json(path: &Path) -> Result<TestCase> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_case_json(&text)
}

/// Run config for a case with an optional CFL override.
pub fn case_config(case: &TestCase, cells: usize, scheme: SchemeKind, cfl: Option<f64>) -> RunConfig {
    let mut cfg = case.run_config(cells, scheme);
    if let Some(c) = cfl {
        cfg.cfl = c;
    }
    cfg
}
