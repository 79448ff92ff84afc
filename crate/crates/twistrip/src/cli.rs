//! Command-line front end: subcommands over the physics modules, a flat
//! key-value configuration with `--key value` overrides, deterministic
//! CSV/JSON emission, and a content-addressed result cache.
//!
//! Exit codes: 0 success, 1 numeric failure (or failed validation),
//! 2 configuration error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::criticality::{
    critical_length_count, critical_length_indicator, threshold_mode, CritGrid, CriticalBracket,
};
use crate::discretize::{assemble, build_grid, EndCondition, GridSpec};
use crate::error::{Error, Result};
use crate::model::{Variant, WaveguideSpec};
use crate::perturbation::{
    compute_mu1, compute_mu2, emergence_fit, grid_critical_ell, mu1_from_alpha, solve_corrector,
    CutoffSpec, EmergenceSeries,
};
use crate::spectrum::{self, discrete_spectrum, validate_bracketing, Numerics, SpectrumReport};

/// Version string folded into every cache key; bump the suffix when the
/// serialized report formats change.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+fmt2");

#[derive(Debug, Parser)]
#[command(name = "twistrip", version, about = "Spectral laboratory for the mixed-boundary strip waveguide")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discrete spectrum below the threshold for one window length.
    Spectrum(Overrides),
    /// Spectra over a range of window lengths (cached, parallel).
    Sweep(Overrides),
    /// Critical window length by two independent detectors.
    Critical(Overrides),
    /// Generalized threshold mode at a critical length.
    ThresholdMode(Overrides),
    /// Emergence coefficients and the ε-sweep fit.
    Emerge(Overrides),
    /// Run the invariant suite; nonzero exit on any failure.
    Validate(Overrides),
}

/// Every configuration key, exposed uniformly as a CLI flag. Values given
/// on the command line override the config file, which overrides defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// Flat key-value config file (`key = value` lines, `#` comments).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Strip width.
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<f64>,
    /// Window half-length.
    #[arg(long, allow_negative_numbers = true)]
    pub ell: Option<f64>,
    /// Boundary layout: twisted | auxiliary.
    #[arg(long)]
    pub variant: Option<String>,
    /// Truncation half-length of the computational strip.
    #[arg(long = "L", allow_negative_numbers = true)]
    pub l_half: Option<f64>,
    /// Longitudinal cell count; derived from L and ny, accepted as a cross-check.
    #[arg(long)]
    pub nx: Option<usize>,
    /// Transverse cell count (coarsest level).
    #[arg(long)]
    pub ny: Option<usize>,
    /// Grid-family depth for extrapolation.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Eigensolver residual tolerance.
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Random seed for the eigensolver start vectors.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Near-threshold counting margin as a fraction of E₁.
    #[arg(long, allow_negative_numbers = true)]
    pub margin_frac: Option<f64>,
    /// Sweep range start.
    #[arg(long, allow_negative_numbers = true)]
    pub ell_start: Option<f64>,
    /// Sweep range end (inclusive).
    #[arg(long, allow_negative_numbers = true)]
    pub ell_end: Option<f64>,
    /// Sweep sample count.
    #[arg(long)]
    pub ell_steps: Option<usize>,
    /// Branch index for criticality and emergence work.
    #[arg(long)]
    pub n: Option<usize>,
    /// Target longitudinal spacing for criticality grids (finest level).
    #[arg(long, allow_negative_numbers = true)]
    pub hx: Option<f64>,
    /// δ-ladder for the count-bisection detector (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub deltas: Option<Vec<f64>>,
    /// ε-sweep window extensions as fractions of ℓ* (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub eps_fracs: Option<Vec<f64>>,
    /// Output path prefix (writes <out>.json / <out>.csv).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format: csv | json | both.
    #[arg(long)]
    pub format: Option<String>,
    /// Cache directory (also via TWISTRIP_CACHE_DIR; default .twistrip-cache).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Disable the result cache.
    #[arg(long)]
    pub no_cache: bool,
    /// Thread-pool size for concurrent solves.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Reduced validation set.
    #[arg(long)]
    pub quick: bool,
    /// Write the assembled operator as coordinate-list text to this path.
    #[arg(long)]
    pub dump_matrix: Option<PathBuf>,
}

/// Fully merged run configuration.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub d: Option<f64>,
    pub ell: Option<f64>,
    pub variant: Option<Variant>,
    pub l_half: Option<f64>,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub levels: Option<usize>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub margin_frac: Option<f64>,
    pub ell_start: Option<f64>,
    pub ell_end: Option<f64>,
    pub ell_steps: Option<usize>,
    pub n: Option<usize>,
    pub hx: Option<f64>,
    pub deltas: Option<Vec<f64>>,
    pub eps_fracs: Option<Vec<f64>>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub cache_dir: Option<PathBuf>,
    pub no_cache: bool,
    pub jobs: Option<usize>,
    pub quick: bool,
    pub dump_matrix: Option<PathBuf>,
}

fn parse_variant(s: &str) -> Result<Variant> {
    match s {
        "twisted" => Ok(Variant::Twisted),
        "auxiliary" => Ok(Variant::Auxiliary),
        other => Err(Error::config(format!("variant must be twisted or auxiliary, got {other}"))),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::config(format!("invalid value {v:?} for key {key}")))
}

fn parse_list(key: &str, v: &str) -> Result<Vec<f64>> {
    v.split(',')
        .map(|p| parse_num::<f64>(key, p.trim()))
        .collect()
}

impl RunConfig {
    /// Parse a flat `key = value` config file; unknown keys are rejected.
    pub fn from_file(path: &Path) -> Result<RunConfig> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::config(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| {
                    Error::config(format!("line {}: expected `key = value`", lineno + 1))
                })?;
            cfg.apply_kv(key, value)?;
        }
        Ok(cfg)
    }

    fn apply_kv(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "d" => self.d = Some(parse_num(key, v)?),
            "ell" => self.ell = Some(parse_num(key, v)?),
            "variant" => self.variant = Some(parse_variant(v)?),
            "L" | "l_half" => self.l_half = Some(parse_num(key, v)?),
            "nx" => self.nx = Some(parse_num(key, v)?),
            "ny" => self.ny = Some(parse_num(key, v)?),
            "levels" => self.levels = Some(parse_num(key, v)?),
            "tol" => self.tol = Some(parse_num(key, v)?),
            "seed" => self.seed = Some(parse_num(key, v)?),
            "margin_frac" => self.margin_frac = Some(parse_num(key, v)?),
            "ell_start" => self.ell_start = Some(parse_num(key, v)?),
            "ell_end" => self.ell_end = Some(parse_num(key, v)?),
            "ell_steps" => self.ell_steps = Some(parse_num(key, v)?),
            "n" => self.n = Some(parse_num(key, v)?),
            "hx" => self.hx = Some(parse_num(key, v)?),
            "deltas" => self.deltas = Some(parse_list(key, v)?),
            "eps_fracs" => self.eps_fracs = Some(parse_list(key, v)?),
            "out" => self.out = Some(PathBuf::from(v)),
            "format" => self.format = Some(v.to_string()),
            "cache_dir" => self.cache_dir = Some(PathBuf::from(v)),
            "no_cache" => self.no_cache = parse_num(key, v)?,
            "jobs" => self.jobs = Some(parse_num(key, v)?),
            "quick" => self.quick = parse_num(key, v)?,
            other => return Err(Error::config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    fn apply_overrides(&mut self, o: &Overrides) {
        macro_rules! take {
            ($f:ident) => {
                if o.$f.is_some() {
                    self.$f = o.$f.clone();
                }
            };
        }
        take!(d);
        take!(ell);
        take!(l_half);
        take!(nx);
        take!(ny);
        take!(levels);
        take!(tol);
        take!(seed);
        take!(margin_frac);
        take!(ell_start);
        take!(ell_end);
        take!(ell_steps);
        take!(n);
        take!(hx);
        take!(deltas);
        take!(eps_fracs);
        take!(out);
        take!(format);
        take!(cache_dir);
        take!(jobs);
        take!(dump_matrix);
        if let Some(v) = &o.variant {
            // parse errors surfaced later through validate()
            self.variant = parse_variant(v).ok();
            if self.variant.is_none() {
                self.format = Some(format!("__bad_variant:{v}"));
            }
        }
        self.no_cache |= o.no_cache;
        self.quick |= o.quick;
    }

    fn validate(&self) -> Result<()> {
        if let Some(f) = &self.format {
            if let Some(v) = f.strip_prefix("__bad_variant:") {
                return Err(Error::config(format!("variant must be twisted or auxiliary, got {v}")));
            }
            if !matches!(f.as_str(), "csv" | "json" | "both") {
                return Err(Error::config(format!("format must be csv, json or both, got {f}")));
            }
        }
        if let Some(d) = self.d {
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::config(format!("d must be > 0, got {d}")));
            }
        }
        if let Some(ell) = self.ell {
            if !(ell >= 0.0) || !ell.is_finite() {
                return Err(Error::config(format!("ell must be >= 0, got {ell}")));
            }
        }
        if let Some(l) = self.l_half {
            if !(l > 0.0) || !l.is_finite() {
                return Err(Error::config(format!("L must be > 0, got {l}")));
            }
        }
        if let Some(ny) = self.ny {
            if ny < 4 {
                return Err(Error::config(format!("ny must be >= 4, got {ny}")));
            }
        }
        if let Some(levels) = self.levels {
            if levels == 0 || levels > 6 {
                return Err(Error::config(format!("levels must lie in 1..=6, got {levels}")));
            }
        }
        if let Some(t) = self.tol {
            if !(t > 0.0) || !t.is_finite() {
                return Err(Error::config(format!("tol must be > 0, got {t}")));
            }
        }
        if let Some(m) = self.margin_frac {
            if !(m >= 0.0 && m < 0.5) {
                return Err(Error::config(format!("margin_frac must lie in [0, 0.5), got {m}")));
            }
        }
        if let Some(n) = self.n {
            if n == 0 {
                return Err(Error::config("n must be >= 1"));
            }
        }
        if let Some(h) = self.hx {
            if !(h > 0.0) || !h.is_finite() {
                return Err(Error::config(format!("hx must be > 0, got {h}")));
            }
        }
        if let Some(steps) = self.ell_steps {
            if steps < 2 {
                return Err(Error::config(format!("ell_steps must be >= 2, got {steps}")));
            }
        }
        Ok(())
    }

    fn numerics(&self) -> Numerics {
        let mut num = Numerics::default();
        num.l_half = self.l_half;
        if let Some(ny) = self.ny {
            num.ny = ny;
        }
        if let Some(levels) = self.levels {
            num.levels = levels;
        }
        if let Some(tol) = self.tol {
            num.tol = tol;
        }
        if let Some(seed) = self.seed {
            num.seed = seed;
        }
        if let Some(m) = self.margin_frac {
            num.margin_frac = m;
        }
        num
    }

    fn d(&self) -> f64 {
        self.d.unwrap_or(1.0)
    }

    fn variant(&self) -> Variant {
        self.variant.unwrap_or(Variant::Twisted)
    }

    fn n(&self) -> usize {
        self.n.unwrap_or(1)
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(42)
    }

    /// Grid family for criticality work, coarse → fine, finest spacing `hx`.
    fn crit_grids(&self) -> Vec<CritGrid> {
        let d = self.d();
        let n = self.n();
        let l_half = self.l_half.unwrap_or((n as f64 + 3.5) * d);
        let hx = self.hx.unwrap_or(d / 192.0);
        let ny = self.ny.unwrap_or(16);
        let levels = self.levels.unwrap_or(2);
        (0..levels)
            .map(|k| {
                let factor = 1 << (levels - 1 - k);
                CritGrid::with_spacing(l_half, hx * factor as f64, ny)
            })
            .collect()
    }

    fn cache_dir(&self) -> PathBuf {
        if let Some(p) = &self.cache_dir {
            return p.clone();
        }
        if let Ok(p) = std::env::var("TWISTRIP_CACHE_DIR") {
            return PathBuf::from(p);
        }
        PathBuf::from(".twistrip-cache")
    }
}

// ---------------------------------------------------------------------------
// cache

fn cache_key(command: &str, canonical: &str) -> String {
    let mut h = Sha256::new();
    h.update(CODE_VERSION.as_bytes());
    h.update(b"\x1f");
    h.update(command.as_bytes());
    h.update(b"\x1f");
    h.update(canonical.as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn cache_get(dir: &Path, key: &str) -> Option<String> {
    fs::read_to_string(dir.join(format!("{key}.json"))).ok()
}

fn cache_put(dir: &Path, key: &str, payload: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".tmp-{key}-{}", std::process::id()));
    fs::write(&tmp, payload)?;
    fs::rename(&tmp, dir.join(format!("{key}.json")))?;
    Ok(())
}

/// Run a computation through the cache: the payload is the canonical JSON
/// serialization of the report, reused verbatim on a hit.
fn run_cached<T, F>(cfg: &RunConfig, command: &str, canonical: &str, f: F) -> Result<(T, String, bool)>
where
    T: Serialize + DeserializeOwned,
    F: FnOnce() -> Result<T>,
{
    let key = cache_key(command, canonical);
    let dir = cfg.cache_dir();
    if !cfg.no_cache {
        if let Some(payload) = cache_get(&dir, &key) {
            if let Ok(report) = serde_json::from_str::<T>(&payload) {
                return Ok((report, payload, true));
            }
            // stale or foreign format: ignore, recompute
        }
    }
    let report = f()?;
    let payload = serde_json::to_string_pretty(&report).map_err(Error::from)?;
    if !cfg.no_cache {
        cache_put(&dir, &key, &payload)?;
    }
    Ok((report, payload, false))
}

// ---------------------------------------------------------------------------
// output plumbing

fn write_outputs(cfg: &RunConfig, command: &str, json: &str, csv: Option<&str>) -> Result<()> {
    let prefix = cfg
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("twistrip_{}", command.replace('-', "_"))));
    let format = cfg.format.as_deref().unwrap_or("both");
    if matches!(format, "json" | "both") {
        let path = prefix.with_extension("json");
        fs::write(&path, json)?;
        println!("wrote {}", path.display());
    }
    if let Some(csv) = csv {
        if matches!(format, "csv" | "both") {
            let path = prefix.with_extension("csv");
            fs::write(&path, csv)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn dump_matrix_if_requested(cfg: &RunConfig, spec: &WaveguideSpec, gs: GridSpec) -> Result<()> {
    if let Some(path) = &cfg.dump_matrix {
        let grid = build_grid(*spec, gs)?;
        let n_modes = crate::criticality::default_n_modes(grid.gs.ny);
        let bundle = assemble(&grid, EndCondition::Transparent { mu: 0.0, n_modes })?;
        fs::write(path, bundle.dump_matrix())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn check_nx_consistency(cfg: &RunConfig, spec: &WaveguideSpec, num: &Numerics) -> Result<()> {
    if let Some(nx) = cfg.nx {
        let derived = num.nx_for(spec, 0);
        if nx.abs_diff(derived) > 2 {
            return Err(Error::config(format!(
                "nx = {nx} conflicts with the value {derived} derived from L and ny \
                 (nx is tied to square cells; adjust L or ny instead)"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// per-command drivers

#[derive(Debug, Serialize)]
struct SpectrumParams<'a> {
    d: f64,
    ell: f64,
    variant: Variant,
    num: &'a Numerics,
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let ell = cfg.ell.ok_or_else(|| Error::config("spectrum requires --ell"))?;
    let spec = WaveguideSpec::new(d, ell, cfg.variant())?;
    let num = cfg.numerics();
    check_nx_consistency(cfg, &spec, &num)?;
    let canonical = serde_json::to_string(&SpectrumParams { d, ell, variant: cfg.variant(), num: &num })
        .map_err(Error::from)?;
    let (report, json, hit) =
        run_cached::<SpectrumReport, _>(cfg, "spectrum", &canonical, || discrete_spectrum(&spec, &num))?;
    println!("cache hits: {}/1", hit as usize);
    let csv = format!("{}\n{}", spectrum::CSV_HEADER, report.csv_rows());
    write_outputs(cfg, "spectrum", &json, Some(&csv))?;
    let gs = GridSpec::new(report.l_half, report.levels.last().unwrap().nx, report.levels.last().unwrap().ny);
    dump_matrix_if_requested(cfg, &spec, gs)?;
    let lowest = report
        .eigenvalues
        .first()
        .map(|b| format!("[{:.6}, {:.6}]", b.lower, b.upper))
        .unwrap_or_else(|| "none".into());
    println!(
        "count={} near_threshold={} E1={:.6} lowest={}",
        report.count, report.near_threshold, report.e1, lowest
    );
    Ok(0)
}

#[derive(Debug, Serialize, Deserialize)]
struct SweepOutput {
    reports: Vec<SpectrumReport>,
    values_monotone: bool,
    counts_monotone: bool,
}

fn cmd_sweep(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let start = cfg.ell_start.ok_or_else(|| Error::config("sweep requires --ell-start"))?;
    let end = cfg.ell_end.ok_or_else(|| Error::config("sweep requires --ell-end"))?;
    let steps = cfg.ell_steps.unwrap_or(8);
    if !(end > start) {
        return Err(Error::config(format!("need ell_end > ell_start, got {start}..{end}")));
    }
    let ells: Vec<f64> = (0..steps)
        .map(|k| start + (end - start) * k as f64 / (steps - 1) as f64)
        .collect();
    let num = cfg.numerics();
    let variant = cfg.variant();

    // per-length cache entries make interrupted sweeps resumable
    use rayon::prelude::*;
    let entries: Result<Vec<(SpectrumReport, bool)>> = ells
        .par_iter()
        .map(|&ell| {
            let spec = WaveguideSpec::new(d, ell, variant)?;
            let canonical =
                serde_json::to_string(&SpectrumParams { d, ell, variant, num: &num })
                    .map_err(Error::from)?;
            let (report, _, hit) = run_cached::<SpectrumReport, _>(cfg, "spectrum", &canonical, || {
                discrete_spectrum(&spec, &num)
            })?;
            Ok((report, hit))
        })
        .collect();
    let entries = entries?;
    let hits = entries.iter().filter(|e| e.1).count();
    println!("cache hits: {}/{}", hits, entries.len());

    let reports: Vec<SpectrumReport> = entries.into_iter().map(|e| e.0).collect();
    let mut values_monotone = true;
    let mut counts_monotone = true;
    for w in reports.windows(2) {
        counts_monotone &= w[0].count <= w[1].count;
        for (a, b) in w[0].eigenvalues.iter().zip(&w[1].eigenvalues) {
            let tol = (a.upper - a.lower).abs() + (b.upper - b.lower).abs() + 1e-8;
            values_monotone &= b.extrapolated <= a.extrapolated + tol;
        }
    }
    let out = SweepOutput { reports, values_monotone, counts_monotone };
    let json = serde_json::to_string_pretty(&out).map_err(Error::from)?;
    let mut csv = String::from(spectrum::CSV_HEADER);
    csv.push('\n');
    for r in &out.reports {
        csv.push_str(&r.csv_rows());
    }
    write_outputs(cfg, "sweep", &json, Some(&csv))?;
    let counts: Vec<usize> = out.reports.iter().map(|r| r.count).collect();
    println!(
        "sweep over {} lengths, counts {:?}, monotone values={} counts={}",
        out.reports.len(),
        counts,
        out.values_monotone,
        out.counts_monotone
    );
    Ok(0)
}

#[derive(Debug, Serialize, Deserialize)]
struct CriticalOutput {
    n: usize,
    d: f64,
    indicator: CriticalBracket,
    count: CriticalBracket,
    /// |indicator − count| / indicator.
    relative_disagreement: f64,
}

#[derive(Debug, Serialize)]
struct CriticalParams<'a> {
    d: f64,
    n: usize,
    variant: Variant,
    seed: u64,
    deltas: &'a [f64],
    grids: &'a [CritGrid],
}

fn cmd_critical(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let n = cfg.n();
    let variant = cfg.variant();
    let seed = cfg.seed();
    let grids = cfg.crit_grids();
    let deltas = cfg.deltas.clone().unwrap_or_else(|| vec![0.02, 0.01, 0.005]);
    let canonical = serde_json::to_string(&CriticalParams {
        d,
        n,
        variant,
        seed,
        deltas: &deltas,
        grids: &grids,
    })
    .map_err(Error::from)?;
    let (out, json, hit) = run_cached::<CriticalOutput, _>(cfg, "critical", &canonical, || {
        let indicator = critical_length_indicator(d, n, variant, &grids, seed)?;
        let count = critical_length_count(d, n, variant, &deltas, &grids)?;
        let relative_disagreement = (indicator.value - count.value).abs() / indicator.value;
        Ok(CriticalOutput { n, d, indicator, count, relative_disagreement })
    })?;
    println!("cache hits: {}/1", hit as usize);
    let csv = format!(
        "method,value,lo,hi\nindicator,{:.16e},{:.16e},{:.16e}\ncount,{:.16e},{:.16e},{:.16e}\n",
        out.indicator.value, out.indicator.lo, out.indicator.hi, out.count.value, out.count.lo,
        out.count.hi
    );
    write_outputs(cfg, "critical", &json, Some(&csv))?;
    println!(
        "ell_{} = {:.6} [{:.6}, {:.6}] (indicator) vs {:.6} (count), disagreement {:.2}%",
        out.n,
        out.indicator.value,
        out.indicator.lo,
        out.indicator.hi,
        out.count.value,
        100.0 * out.relative_disagreement
    );
    Ok(0)
}

#[derive(Debug, Serialize)]
struct ThresholdModeParams {
    d: f64,
    n: usize,
    ell: f64,
    grid: CritGrid,
}

fn cmd_threshold_mode(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let n = cfg.n();
    let grids = cfg.crit_grids();
    let g = *grids.last().expect("at least one level");
    let ell = match cfg.ell {
        Some(e) => e,
        None => grid_critical_ell(d, n, &g)?,
    };
    let canonical = serde_json::to_string(&ThresholdModeParams { d, n, ell, grid: g })
        .map_err(Error::from)?;
    let (tm, json, hit) =
        run_cached::<crate::criticality::ThresholdMode, _>(cfg, "threshold-mode", &canonical, || {
            threshold_mode(d, ell, n, &g)
        })?;
    println!("cache hits: {}/1", hit as usize);
    let csv = tm.csv_field();
    write_outputs(cfg, "threshold-mode", &json, Some(&csv))?;
    let spec = WaveguideSpec::twisted(d, ell)?;
    dump_matrix_if_requested(cfg, &spec, GridSpec::new(g.l_half, g.nx, g.ny))?;
    println!(
        "ell={:.6} parity={} alpha1={:.6} a1={:.6} decay={:.3} (expected {:.3})",
        tm.ell,
        tm.wp,
        tm.alpha1,
        tm.a_star[0],
        tm.decay_rate,
        tm.expected_decay_rate()
    );
    Ok(0)
}

/// Full emergence report: fitted and formula coefficients side by side.
#[derive(Debug, Serialize, Deserialize)]
pub struct EmergeOutput {
    pub series: EmergenceSeries,
    /// μ₁ via the corner identity πα₁²/4.
    pub mu1_alpha: f64,
    pub alpha1: f64,
    pub mu2_term_mass: f64,
    pub mu2_term_operators: f64,
    pub mu2_term_modes: f64,
    pub mu2_variant: f64,
    pub mu2_variant_discrepancy: f64,
    pub corrector_parity_score: f64,
    pub solvability_mismatch: f64,
    /// |mu1_fit − mu1_integral| / mu1_integral ≤ 5% target.
    pub mu1_agreement_ok: bool,
}

#[derive(Debug, Serialize)]
struct EmergeParams<'a> {
    d: f64,
    n: usize,
    seed: u64,
    grid: CritGrid,
    eps_fracs: &'a [f64],
}

fn cmd_emerge(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let n = cfg.n();
    let seed = cfg.seed();
    let grids = cfg.crit_grids();
    let g = *grids.last().expect("at least one level");
    let eps_fracs = cfg.eps_fracs.clone().unwrap_or_else(|| vec![0.02, 0.04, 0.08, 0.16]);
    let canonical =
        serde_json::to_string(&EmergeParams { d, n, seed, grid: g, eps_fracs: &eps_fracs })
            .map_err(Error::from)?;
    let (out, json, hit) = run_cached::<EmergeOutput, _>(cfg, "emerge", &canonical, || {
        let mut series = emergence_fit(d, n, &g, &eps_fracs, None, seed)?;
        let ell_c = grid_critical_ell(d, n, &g)?;
        let tm = threshold_mode(d, ell_c, n, &g)?;
        let mu1 = compute_mu1(&tm)?;
        let cutoff = CutoffSpec::new(tm.ell)?;
        let corr = solve_corrector(&tm, mu1, &cutoff)?;
        let m2 = compute_mu2(&tm, &corr, mu1, &cutoff)?;
        series.mu1_integral = Some(mu1);
        series.mu2_formula = Some(m2.mu2);
        let mu1_agreement_ok = series.mu1_agreement().map(|a| a <= 0.05).unwrap_or(false);
        Ok(EmergeOutput {
            series,
            mu1_alpha: mu1_from_alpha(tm.alpha1),
            alpha1: tm.alpha1,
            mu2_term_mass: m2.term_mass,
            mu2_term_operators: m2.term_operators,
            mu2_term_modes: m2.term_modes,
            mu2_variant: m2.mu2_variant,
            mu2_variant_discrepancy: m2.variant_discrepancy,
            corrector_parity_score: corr.parity_score,
            solvability_mismatch: corr.solvability_mismatch,
            mu1_agreement_ok,
        })
    })?;
    println!("cache hits: {}/1", hit as usize);
    let csv = out.series.csv();
    write_outputs(cfg, "emerge", &json, Some(&csv))?;
    println!(
        "mu1: fit={:.6} integral={:.6} alpha={:.6} agreement_ok={} | mu2: fit={:.6} formula={:.6} | slope={:.3}",
        out.series.mu1_fit,
        out.series.mu1_integral.unwrap_or(f64::NAN),
        out.mu1_alpha,
        out.mu1_agreement_ok,
        out.series.mu2_fit,
        out.series.mu2_formula.unwrap_or(f64::NAN),
        out.series.slope_loglog
    );
    Ok(0)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ValidateOutput {
    pub quick: bool,
    pub checks: Vec<Check>,
    pub all_ok: bool,
}

#[derive(Debug, Serialize)]
struct ValidateParams<'a> {
    quick: bool,
    d: f64,
    num: &'a Numerics,
}

fn cmd_validate(cfg: &RunConfig) -> Result<i32> {
    let d = cfg.d();
    let num = cfg.numerics();
    let quick = cfg.quick;
    let canonical =
        serde_json::to_string(&ValidateParams { quick, d, num: &num }).map_err(Error::from)?;
    let (out, json, hit) = run_cached::<ValidateOutput, _>(cfg, "validate", &canonical, || {
        let mut checks = Vec::new();
        let bracket_ells: &[f64] = if quick { &[1.0] } else { &[1.0, 2.0, 3.0] };
        let band_ells: &[f64] = if quick { &[0.5, 1.5] } else { &[0.5, 1.5, 2.5, 3.5] };
        for &ell in bracket_ells {
            let br = validate_bracketing(d, ell, &num)?;
            checks.push(Check {
                name: format!("bracketing ell={ell}"),
                ok: br.checks.iter().all(|c| c.ok),
                detail: format!(
                    "{} eigenvalue(s) inside their auxiliary brackets",
                    br.checks.len()
                ),
            });
            checks.push(Check {
                name: format!("aux analytic bounds ell={ell}"),
                ok: br.aux_analytic_ok,
                detail: format!("{} auxiliary value(s)", br.auxiliary.eigenvalues.len()),
            });
            checks.push(Check {
                name: format!("count sandwich ell={ell}"),
                ok: br.count_sandwich_ok,
                detail: format!("N={} N*={}", br.twisted.count, br.auxiliary.count),
            });
            let parity_ok = br.twisted.eigenvalues.iter().enumerate().all(|(k, b)| {
                let want = if k % 2 == 0 { spectrum::Parity::Even } else { spectrum::Parity::Odd };
                b.parity == want && b.parity_score < 1e-6
            });
            checks.push(Check {
                name: format!("parity alternation ell={ell}"),
                ok: parity_ok,
                detail: br
                    .twisted
                    .eigenvalues
                    .iter()
                    .map(|b| format!("{}", b.parity))
                    .collect::<Vec<_>>()
                    .join(","),
            });
        }
        for &ell in band_ells {
            let spec = WaveguideSpec::auxiliary(d, ell)?;
            let rep = discrete_spectrum(&spec, &num)?;
            let floor = (ell / d).floor() as usize;
            let ok = rep.count >= floor && rep.count <= floor + 1;
            checks.push(Check {
                name: format!("aux count band ell={ell}"),
                ok,
                detail: format!("N*={} in [{floor}, {}]", rep.count, floor + 1),
            });
        }
        let all_ok = checks.iter().all(|c| c.ok);
        Ok(ValidateOutput { quick, checks, all_ok })
    })?;
    println!("cache hits: {}/1", hit as usize);
    write_outputs(cfg, "validate", &json, None)?;
    for c in &out.checks {
        println!("{} {} ({})", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    println!("validate: {}", if out.all_ok { "all checks passed" } else { "FAILURES present" });
    Ok(if out.all_ok { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// entry

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Domain(_) => 2,
        _ => 1,
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let (name, over): (&str, &Overrides) = match &cli.command {
        Command::Spectrum(o) => ("spectrum", o),
        Command::Sweep(o) => ("sweep", o),
        Command::Critical(o) => ("critical", o),
        Command::ThresholdMode(o) => ("threshold-mode", o),
        Command::Emerge(o) => ("emerge", o),
        Command::Validate(o) => ("validate", o),
    };
    let mut cfg = match &over.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    cfg.apply_overrides(over);
    cfg.validate()?;
    if let Some(jobs) = cfg.jobs {
        if jobs == 0 {
            return Err(Error::config("jobs must be >= 1"));
        }
        // a global pool may already exist (e.g. in tests); that is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match name {
        "spectrum" => cmd_spectrum(&cfg),
        "sweep" => cmd_sweep(&cfg),
        "critical" => cmd_critical(&cfg),
        "threshold-mode" => cmd_threshold_mode(&cfg),
        "emerge" => cmd_emerge(&cfg),
        "validate" => cmd_validate(&cfg),
        _ => unreachable!(),
    }
}

/// Parse the process arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own message; usage problems are config errors
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { 0 } else { 2 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn config_file_roundtrip_and_unknown_keys() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        let mut f = fs::File::create(&path).unwrap();
        writeln!(f, "# geometry").unwrap();
        writeln!(f, "d = 1.0").unwrap();
        writeln!(f, "ell = 2.0").unwrap();
        writeln!(f, "variant = auxiliary").unwrap();
        writeln!(f, "L = 6.5").unwrap();
        writeln!(f, "ny = 16").unwrap();
        writeln!(f, "deltas = 0.02, 0.01").unwrap();
        drop(f);
        let cfg = RunConfig::from_file(&path).unwrap();
        assert_eq!(cfg.d, Some(1.0));
        assert_eq!(cfg.ell, Some(2.0));
        assert_eq!(cfg.variant, Some(Variant::Auxiliary));
        assert_eq!(cfg.l_half, Some(6.5));
        assert_eq!(cfg.deltas, Some(vec![0.02, 0.01]));

        let mut f = fs::File::create(&path).unwrap();
        writeln!(f, "elll = 2.0").unwrap();
        drop(f);
        let err = RunConfig::from_file(&path).unwrap_err();
        assert!(matches!(err, Error::Config(_)), "{err}");
    }

    #[test]
    fn overrides_win_over_file() {
        let mut cfg = RunConfig { ell: Some(1.0), ny: Some(8), ..Default::default() };
        let over = Overrides { ell: Some(2.5), ..Default::default() };
        cfg.apply_overrides(&over);
        assert_eq!(cfg.ell, Some(2.5));
        assert_eq!(cfg.ny, Some(8));
    }

    #[test]
    fn validation_rejects_bad_values() {
        for (k, v) in [("d", "-1"), ("ell", "-0.5"), ("ny", "2"), ("tol", "0"), ("levels", "0")] {
            let mut cfg = RunConfig::default();
            cfg.apply_kv(k, v).unwrap();
            assert!(cfg.validate().is_err(), "{k}={v} should be rejected");
        }
        let mut cfg = RunConfig::default();
        assert!(cfg.apply_kv("variant", "spiral").is_err());
        cfg.apply_kv("format", "yaml").unwrap();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn cache_key_sensitivity() {
        let a = cache_key("spectrum", "{\"ell\":1.0}");
        let b = cache_key("spectrum", "{\"ell\":2.0}");
        let c = cache_key("sweep", "{\"ell\":1.0}");
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, cache_key("spectrum", "{\"ell\":1.0}"));
    }

    #[test]
    fn cache_roundtrip_is_atomic_and_verbatim() {
        let dir = tempfile::tempdir().unwrap();
        let key = cache_key("test", "payload");
        assert!(cache_get(dir.path(), &key).is_none());
        cache_put(dir.path(), &key, "{\"x\": 1}").unwrap();
        assert_eq!(cache_get(dir.path(), &key).unwrap(), "{\"x\": 1}");
        // no temp droppings left behind
        let leftovers: Vec<_> = fs::read_dir(dir.path())
            .unwrap()
            .filter_map(|e| e.ok())
            .filter(|e| e.file_name().to_string_lossy().starts_with(".tmp-"))
            .collect();
        assert!(leftovers.is_empty());
    }

    #[test]
    fn crit_grid_family_coarse_to_fine() {
        let cfg = RunConfig { hx: Some(1.0 / 64.0), levels: Some(3), ..Default::default() };
        let grids = cfg.crit_grids();
        assert_eq!(grids.len(), 3);
        assert!(grids[0].hx() > grids[1].hx());
        assert!(grids[1].hx() > grids[2].hx());
        assert!((grids[2].hx() - 1.0 / 64.0).abs() < 1e-12);
    }
}
