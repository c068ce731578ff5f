//! Monte Carlo harness for Type I error and power studies.
//!
//! Every replicate `r` draws from `RngSpec::new(seed).replicate(r)`, shared
//! across scenario parameters so power curves use common random numbers.
//! Results depend only on the configuration, never on thread count or on
//! how often a run was interrupted and resumed.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{load_mask, make_grid, Grid, GridConvention, MaskRaster};
use crate::par;
use crate::randmat::{isotropy_test, TestOptions};
use crate::simulate::{
    legendre_matern_spectrum, sim_aniso_corr, sim_aniso_landsea, sim_ar1_coeffs, sim_iso_coeffs,
    Ar1Schedule, RngSpec, Spectrum, DEFAULT_A00_VAR,
};
use crate::transform::{
    correlation_profile, select_l_corr_from_profile, select_l_reg, CoeffSeries, FieldSeries, Synthesizer,
    TruncationReport, WlsAnalyzer, DEFAULT_CONDITION_THRESHOLD, DEFAULT_CORRELATION_CUTOFF,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_lat: usize,
    pub n_lon: usize,
    #[serde(default = "default_convention")]
    pub convention: GridConvention,
}

fn default_convention() -> GridConvention {
    GridConvention::CellCenters
}

impl GridSpec {
    pub fn build(&self) -> Result<Grid> {
        make_grid(self.n_lat, self.n_lon, self.convention)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSpec {
    #[default]
    #[serde(rename = "c_l2")]
    CL2,
    #[serde(rename = "c_l3")]
    CL3,
    Custom { sigma2: f64, alpha: f64, nu: f64 },
}

impl SpectrumSpec {
    pub fn build(&self, l_sim: usize) -> Result<Spectrum> {
        match *self {
            SpectrumSpec::CL2 => Ok(Spectrum::c_l2(l_sim)),
            SpectrumSpec::CL3 => Ok(Spectrum::c_l3(l_sim)),
            SpectrumSpec::Custom { sigma2, alpha, nu } => {
                legendre_matern_spectrum(sigma2, alpha, nu, l_sim)
            }
        }
    }
}

/// Temporal dependence of the simulated coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Temporal {
    #[default]
    Iid,
    /// AR(1) with `rho_0 = 0.99`, `rho_l = 0.9 / sqrt(l)`.
    Ar1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PrewhitenMode {
    #[default]
    Off,
    On,
    /// Test every replicate both ways.
    Both,
}

impl PrewhitenMode {
    fn variants(self) -> &'static [bool] {
        match self {
            PrewhitenMode::Off => &[false],
            PrewhitenMode::On => &[true],
            PrewhitenMode::Both => &[false, true],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MaskSpec {
    #[default]
    EasternHemisphere,
    File(PathBuf),
}

impl MaskSpec {
    pub fn build(&self, grid: &Grid) -> Result<MaskRaster> {
        match self {
            MaskSpec::EasternHemisphere => Ok(MaskRaster::eastern_hemisphere(grid)),
            MaskSpec::File(p) => load_mask(p, grid),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scenario {
    #[default]
    Isotropic,
    /// Equal-time correlation `psi` between orders of the same degree.
    Correlated { psi: Vec<f64> },
    /// Ocean damping `l^-epsilon` of the harmonic content.
    LandSea {
        epsilon: Vec<f64>,
        #[serde(default)]
        mask: MaskSpec,
    },
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Isotropic => "isotropic",
            Scenario::Correlated { .. } => "correlated",
            Scenario::LandSea { .. } => "land_sea",
        }
    }

    /// Parameter grid; a single `None` for the isotropic case.
    pub fn parameters(&self) -> Vec<Option<f64>> {
        match self {
            Scenario::Isotropic => vec![None],
            Scenario::Correlated { psi } => psi.iter().copied().map(Some).collect(),
            Scenario::LandSea { epsilon, .. } => epsilon.iter().copied().map(Some).collect(),
        }
    }
}

fn d_l_sim() -> usize {
    150
}
fn d_times() -> usize {
    360
}
fn d_replicates() -> usize {
    500
}
fn d_alpha() -> f64 {
    0.05
}
fn d_seed() -> u64 {
    1
}
fn d_a00() -> f64 {
    DEFAULT_A00_VAR
}
fn d_one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub grid: GridSpec,
    #[serde(default)]
    pub spectrum: SpectrumSpec,
    #[serde(default = "d_l_sim")]
    pub l_sim: usize,
    #[serde(rename = "T", default = "d_times")]
    pub n_times: usize,
    #[serde(default = "d_replicates")]
    pub replicates: usize,
    #[serde(default = "d_alpha")]
    pub alpha: f64,
    /// Degrees at which the test is run.
    #[serde(default)]
    pub l_values: Vec<usize>,
    /// Regression degree; chosen by the condition rule when absent.
    #[serde(default)]
    pub l_reg: Option<usize>,
    /// Largest certified degree, used only to warn about larger `l_values`.
    #[serde(default)]
    pub l_corr: Option<usize>,
    #[serde(default)]
    pub temporal: Temporal,
    #[serde(default)]
    pub prewhiten: PrewhitenMode,
    #[serde(default)]
    pub scenario: Scenario,
    #[serde(default = "d_seed")]
    pub seed: u64,
    #[serde(default = "d_a00")]
    pub a00_var: f64,
    #[serde(default = "d_one")]
    pub chi_repetitions: usize,
    /// Output directory; not part of the experiment identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(grid: GridSpec, l_values: Vec<usize>) -> Self {
        ExperimentConfig {
            grid,
            spectrum: SpectrumSpec::default(),
            l_sim: d_l_sim(),
            n_times: d_times(),
            replicates: d_replicates(),
            alpha: d_alpha(),
            l_values,
            l_reg: None,
            l_corr: None,
            temporal: Temporal::Iid,
            prewhiten: PrewhitenMode::Off,
            scenario: Scenario::Isotropic,
            seed: d_seed(),
            a00_var: d_a00(),
            chi_repetitions: 1,
            output: None,
        }
    }

    /// Checks the parts that matter for simulation alone.
    pub fn validate_simulation(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.n_times < 3 {
            return bad(format!("T must be at least 3, got {}", self.n_times));
        }
        if self.scenario.parameters().is_empty() {
            return bad(format!("scenario {} has an empty parameter grid", self.scenario.name()));
        }
        if self.temporal == Temporal::Ar1 && self.scenario != Scenario::Isotropic {
            return bad("AR(1) dynamics are only available for the isotropic scenario".into());
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_simulation()?;
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.replicates == 0 {
            return bad("replicates must be at least 1".into());
        }
        if self.l_values.is_empty() {
            return bad("l_values must not be empty".into());
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad(format!("alpha must lie in (0, 1), got {}", self.alpha));
        }
        if self.chi_repetitions == 0 {
            return bad("chi_repetitions must be at least 1".into());
        }
        if let Some(&l) = self.l_values.iter().find(|&&l| l == 0 || l > self.l_sim) {
            return bad(format!("test degree {l} must lie in 1..={}", self.l_sim));
        }
        if let Some(l_corr) = self.l_corr {
            for &l in self.l_values.iter().filter(|&&l| l > l_corr) {
                log::warn!("test degree {l} exceeds l_corr = {l_corr}; coefficients may be inaccurate");
            }
        }
        Ok(())
    }

    fn identity(&self) -> ExperimentConfig {
        ExperimentConfig {
            output: None,
            ..self.clone()
        }
    }
}

/// One test outcome inside a replicate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub param: usize,
    pub l: usize,
    pub prewhitened: bool,
    pub statistic: f64,
    pub p_value: f64,
    pub rejected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicateRecord {
    pub replicate: usize,
    pub outcomes: Vec<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub scenario: String,
    pub parameter: Option<f64>,
    pub l: usize,
    pub prewhitened: bool,
    pub replicates: usize,
    pub rejections: usize,
    pub rate: f64,
    pub mc_se: f64,
    pub mean_statistic: f64,
}

/// Aggregated rejection rates; free of timing data so reruns match byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultTable {
    pub l_reg: usize,
    pub alpha: f64,
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub fn row(&self, parameter: Option<f64>, l: usize, prewhitened: bool) -> Option<&ResultRow> {
        self.rows
            .iter()
            .find(|r| r.parameter == parameter && r.l == l && r.prewhitened == prewhitened)
    }

    pub fn write_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in &self.rows {
            w.serialize(row)
                .map_err(|e| Error::format("result table", e.to_string()))?;
        }
        w.flush().map_err(|e| Error::io("<result table>", e))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

/// Monte Carlo standard error of a rejection rate.
pub fn mc_standard_error(rate: f64, replicates: usize) -> f64 {
    (rate * (1.0 - rate) / replicates as f64).sqrt()
}

#[derive(Debug, Clone)]
pub struct ExperimentRun {
    pub table: ResultTable,
    pub records: Vec<ReplicateRecord>,
    /// Replicates computed in this call; the rest came from the checkpoint.
    pub computed: usize,
    pub elapsed_secs: f64,
}

/// One simulated dataset; coefficients are absent for the land/sea scenario,
/// whose fields are not a single harmonic expansion.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub coeffs: Option<CoeffSeries>,
    pub fields: FieldSeries,
}

/// Draws datasets for the configured scenario.
pub struct Simulator {
    config: ExperimentConfig,
    spectrum: Spectrum,
    synth: Synthesizer,
    mask: Option<MaskRaster>,
    ar1: Option<Ar1Schedule>,
}

impl Simulator {
    pub fn new(config: &ExperimentConfig) -> Result<Self> {
        config.validate_simulation()?;
        let grid = config.grid.build()?;
        let mask = match &config.scenario {
            Scenario::LandSea { mask, .. } => Some(mask.build(&grid)?),
            _ => None,
        };
        Ok(Simulator {
            spectrum: config.spectrum.build(config.l_sim)?,
            synth: Synthesizer::new(&grid, config.l_sim),
            mask,
            ar1: (config.temporal == Temporal::Ar1).then(|| Ar1Schedule::decaying(config.l_sim)),
            config: config.clone(),
        })
    }

    pub fn grid(&self) -> &Grid {
        self.synth.grid()
    }

    /// `param` is required for parameterized scenarios and ignored otherwise.
    pub fn simulate(&self, param: Option<f64>, rng: &RngSpec) -> Result<Dataset> {
        let c = &self.config;
        let coeffs = match (&c.scenario, param) {
            (Scenario::Isotropic, _) => match &self.ar1 {
                Some(s) => sim_ar1_coeffs(&self.spectrum, s, c.n_times, rng)?,
                None => sim_iso_coeffs(&self.spectrum, c.n_times, c.a00_var, rng)?,
            },
            (Scenario::Correlated { .. }, Some(psi)) => {
                sim_aniso_corr(&self.spectrum, psi, c.n_times, c.a00_var, rng)?
            }
            (Scenario::LandSea { .. }, Some(eps)) => {
                let fields = sim_aniso_landsea(
                    &self.spectrum,
                    eps,
                    self.mask.as_ref().expect("mask built for land/sea"),
                    &self.synth,
                    c.n_times,
                    c.a00_var,
                    rng,
                )?;
                return Ok(Dataset {
                    coeffs: None,
                    fields,
                });
            }
            (s, None) => {
                return Err(Error::InvalidParameter(format!(
                    "scenario {} needs a parameter value",
                    s.name()
                )))
            }
        };
        let fields = self.synth.synthesize(&coeffs)?;
        Ok(Dataset {
            coeffs: Some(coeffs),
            fields,
        })
    }
}

struct Context {
    config: ExperimentConfig,
    sim: Simulator,
    analyzer: WlsAnalyzer,
    params: Vec<Option<f64>>,
}

impl Context {
    fn new(config: &ExperimentConfig) -> Result<Self> {
        config.validate()?;
        let sim = Simulator::new(config)?;
        let grid = sim.grid().clone();
        let l_reg = match config.l_reg {
            Some(l) => l,
            None => select_l_reg(&grid, DEFAULT_CONDITION_THRESHOLD).l_reg,
        };
        if let Some(&l) = config.l_values.iter().find(|&&l| l > l_reg) {
            return Err(Error::InvalidParameter(format!(
                "test degree {l} exceeds the regression degree {l_reg}"
            )));
        }
        Ok(Context {
            analyzer: WlsAnalyzer::new(&grid, l_reg)?,
            params: config.scenario.parameters(),
            sim,
            config: config.clone(),
        })
    }

    fn replicate(&self, r: usize) -> Result<ReplicateRecord> {
        let c = &self.config;
        let rng = RngSpec::new(c.seed).replicate(r as u64);
        let mut outcomes = Vec::new();
        for (pi, &param) in self.params.iter().enumerate() {
            let fields = self.sim.simulate(param, &rng)?.fields;
            let coeffs = self.analyzer.analyze(&fields)?;
            for &l in &c.l_values {
                for &pw in c.prewhiten.variants() {
                    let opts = TestOptions {
                        alpha: c.alpha,
                        prewhiten: pw,
                        chi_repetitions: c.chi_repetitions,
                    };
                    let res = isotropy_test(&coeffs, l, &opts, &rng)?;
                    outcomes.push(Outcome {
                        param: pi,
                        l,
                        prewhitened: pw,
                        statistic: res.statistic,
                        p_value: res.p_value,
                        rejected: res.rejected,
                    });
                }
            }
        }
        Ok(ReplicateRecord {
            replicate: r,
            outcomes,
        })
    }

    fn aggregate(&self, records: &[ReplicateRecord]) -> ResultTable {
        let c = &self.config;
        let mut rows = Vec::new();
        for (pi, &param) in self.params.iter().enumerate() {
            for &l in &c.l_values {
                for &pw in c.prewhiten.variants() {
                    let hits: Vec<&Outcome> = records
                        .iter()
                        .flat_map(|rec| rec.outcomes.iter())
                        .filter(|o| o.param == pi && o.l == l && o.prewhitened == pw)
                        .collect();
                    let n = hits.len();
                    let rejections = hits.iter().filter(|o| o.rejected).count();
                    let rate = rejections as f64 / n as f64;
                    rows.push(ResultRow {
                        scenario: c.scenario.name().to_string(),
                        parameter: param,
                        l,
                        prewhitened: pw,
                        replicates: n,
                        rejections,
                        rate,
                        mc_se: mc_standard_error(rate, n),
                        mean_statistic: hits.iter().map(|o| o.statistic).sum::<f64>() / n as f64,
                    });
                }
            }
        }
        ResultTable {
            l_reg: self.analyzer.l_reg(),
            alpha: c.alpha,
            rows,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CheckpointHeader {
    config: ExperimentConfig,
}

fn read_checkpoint(path: &Path, config: &ExperimentConfig) -> Result<BTreeMap<usize, ReplicateRecord>> {
    let mut done = BTreeMap::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(Error::io(path, e)),
    };
    let loc = path.display().to_string();
    let mut lines = BufReader::new(file).lines();
    let Some(first) = lines.next() else {
        return Ok(done);
    };
    let first = first.map_err(|e| Error::io(path, e))?;
    let header: CheckpointHeader = serde_json::from_str(&first)
        .map_err(|e| Error::format(format!("{loc}:1"), e.to_string()))?;
    if header.config != config.identity() {
        return Err(Error::InvalidParameter(format!(
            "checkpoint {loc} belongs to a different experiment configuration"
        )));
    }
    for (i, line) in lines.enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ReplicateRecord>(&line) {
            Ok(rec) if rec.replicate < config.replicates => {
                done.insert(rec.replicate, rec);
            }
            Ok(_) => {}
            // a torn final line from an interrupted run
            Err(e) if e.is_eof() => break,
            Err(e) => return Err(Error::format(format!("{loc}:{}", i + 2), e.to_string())),
        }
    }
    Ok(done)
}

/// Runs the experiment, resuming from and appending to `checkpoint` if given.
pub fn run_experiment(config: &ExperimentConfig, checkpoint: Option<&Path>) -> Result<ExperimentRun> {
    let start = Instant::now();
    let ctx = Context::new(config)?;
    let mut done = match checkpoint {
        Some(p) => read_checkpoint(p, config)?,
        None => BTreeMap::new(),
    };
    let todo: Vec<usize> = (0..config.replicates).filter(|r| !done.contains_key(r)).collect();

    let mut sink = match checkpoint {
        Some(p) if !todo.is_empty() => {
            let fresh = !p.exists() || std::fs::metadata(p).map(|m| m.len() == 0).unwrap_or(true);
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(|e| Error::io(p, e))?;
            if fresh {
                let header = CheckpointHeader {
                    config: config.identity(),
                };
                let line = serde_json::to_string(&header)
                    .map_err(|e| Error::format("checkpoint", e.to_string()))?;
                writeln!(f, "{line}").map_err(|e| Error::io(p, e))?;
            }
            Some((p, f))
        }
        _ => None,
    };

    let batch = (4 * par::threads()).max(8);
    for chunk in todo.chunks(batch) {
        let recs = par::map_range(chunk.len(), |i| ctx.replicate(chunk[i]));
        for rec in recs {
            let rec = rec?;
            if let Some((p, f)) = sink.as_mut() {
                let line = serde_json::to_string(&rec)
                    .map_err(|e| Error::format("checkpoint", e.to_string()))?;
                writeln!(f, "{line}").map_err(|e| Error::io(*p, e))?;
            }
            done.insert(rec.replicate, rec);
        }
        if let Some((p, f)) = sink.as_mut() {
            f.flush().map_err(|e| Error::io(*p, e))?;
        }
        log::info!("{} / {} replicates", done.len(), config.replicates);
    }

    let records: Vec<ReplicateRecord> = done.into_values().collect();
    Ok(ExperimentRun {
        table: ctx.aggregate(&records),
        records,
        computed: todo.len(),
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Condition-based `l_reg` plus the Monte Carlo `l_corr` from one simulated
/// isotropic series at `T` times.
pub fn truncation_study(
    grid: &Grid,
    spectrum: &Spectrum,
    n_times: usize,
    a00_var: f64,
    rng: &RngSpec,
) -> Result<TruncationReport> {
    let mut report = select_l_reg(grid, DEFAULT_CONDITION_THRESHOLD);
    let truth = sim_iso_coeffs(spectrum, n_times, a00_var, rng)?;
    let fields = Synthesizer::new(grid, spectrum.l_sim()).synthesize(&truth)?;
    let est = WlsAnalyzer::new(grid, report.l_reg)?.analyze(&fields)?;
    let r_l = correlation_profile(&truth, &est)?;
    report.l_corr = Some(select_l_corr_from_profile(&r_l, DEFAULT_CORRELATION_CUTOFF));
    report.r_l = r_l;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(scenario: Scenario) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(
            GridSpec {
                n_lat: 10,
                n_lon: 20,
                convention: GridConvention::CellCenters,
            },
            vec![2, 3],
        );
        c.l_sim = 12;
        c.n_times = 60;
        c.replicates = 6;
        c.l_reg = Some(5);
        c.scenario = scenario;
        c
    }

    #[test]
    fn deterministic_and_resumable() {
        let cfg = small(Scenario::Correlated {
            psi: vec![0.0, 0.5],
        });
        let full = run_experiment(&cfg, None).unwrap();
        assert_eq!(full.table.rows.len(), 4);
        for row in &full.table.rows {
            assert!((0.0..=1.0).contains(&row.rate));
            assert_eq!(row.replicates, 6);
            assert!((row.mc_se - mc_standard_error(row.rate, 6)).abs() < 1e-15);
        }

        let dir = tempfile::tempdir().unwrap();
        let ck = dir.path().join("ck.jsonl");
        let mut partial = cfg.clone();
        partial.replicates = 3;
        // a checkpoint for another configuration is refused
        run_experiment(&partial, Some(&ck)).unwrap();
        assert!(run_experiment(&cfg, Some(&ck)).is_err());

        std::fs::remove_file(&ck).unwrap();
        let first = run_experiment(&cfg, Some(&ck)).unwrap();
        assert_eq!(first.computed, 6);
        // drop the last three replicates and resume
        let text = std::fs::read_to_string(&ck).unwrap();
        let kept: Vec<&str> = text.lines().take(4).collect();
        std::fs::write(&ck, kept.join("\n") + "\n").unwrap();
        let resumed = run_experiment(&cfg, Some(&ck)).unwrap();
        assert_eq!(resumed.computed, 3);
        let again = run_experiment(&cfg, Some(&ck)).unwrap();
        assert_eq!(again.computed, 0);
        let csv = full.table.to_csv_string().unwrap();
        assert_eq!(csv, resumed.table.to_csv_string().unwrap());
        assert_eq!(csv, again.table.to_csv_string().unwrap());
        assert!(csv.starts_with("scenario,parameter,l,prewhitened"));
    }

    #[test]
    fn torn_checkpoint_line_is_recomputed() {
        let cfg = small(Scenario::Isotropic);
        let dir = tempfile::tempdir().unwrap();
        let ck = dir.path().join("ck.jsonl");
        let full = run_experiment(&cfg, Some(&ck)).unwrap();
        let mut text = std::fs::read_to_string(&ck).unwrap();
        text.truncate(text.len() - 10);
        std::fs::write(&ck, text).unwrap();
        let resumed = run_experiment(&cfg, Some(&ck)).unwrap();
        assert_eq!(resumed.computed, 1);
        assert_eq!(resumed.table, full.table);
    }

    #[test]
    fn config_round_trips_and_validates() {
        let mut cfg = small(Scenario::LandSea {
            epsilon: vec![0.1],
            mask: MaskSpec::EasternHemisphere,
        });
        let json = serde_json::to_string(&cfg).unwrap();
        assert!(json.contains("\"kind\":\"land_sea\""));
        let back: ExperimentConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);
        let minimal: ExperimentConfig =
            serde_json::from_str(r#"{"grid":{"n_lat":20,"n_lon":50},"l_values":[5]}"#).unwrap();
        assert_eq!(minimal.replicates, 500);
        assert_eq!(minimal.n_times, 360);
        assert_eq!(minimal.l_sim, 150);

        cfg.temporal = Temporal::Ar1;
        assert!(cfg.validate().is_err());
        let mut cfg = small(Scenario::Isotropic);
        cfg.replicates = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = small(Scenario::Isotropic);
        cfg.l_values = vec![6];
        assert!(run_experiment(&cfg, None).is_err());
    }

    #[test]
    fn strong_anisotropy_is_detected() {
        let mut cfg = small(Scenario::Correlated { psi: vec![0.9] });
        cfg.l_values = vec![3];
        cfg.n_times = 120;
        let run = run_experiment(&cfg, None).unwrap();
        assert_eq!(run.table.rows[0].rate, 1.0);
    }

    #[test]
    fn prewhiten_both_gives_two_rows() {
        let mut cfg = small(Scenario::Isotropic);
        cfg.temporal = Temporal::Ar1;
        cfg.prewhiten = PrewhitenMode::Both;
        cfg.l_values = vec![3];
        let run = run_experiment(&cfg, None).unwrap();
        assert_eq!(run.table.rows.len(), 2);
        assert!(run.table.row(None, 3, true).is_some());
    }

    #[test]
    fn simulator_matches_scenario() {
        let rng = RngSpec::new(4);
        let iso = Simulator::new(&small(Scenario::Isotropic)).unwrap();
        let d = iso.simulate(None, &rng).unwrap();
        assert_eq!(d.fields.n_times(), 60);
        assert_eq!(d.coeffs.as_ref().unwrap().l_max(), 12);
        assert_eq!(iso.simulate(None, &rng).unwrap().fields, d.fields);

        let corr = Simulator::new(&small(Scenario::Correlated { psi: vec![0.3] })).unwrap();
        assert!(corr.simulate(None, &rng).is_err());
        let zero = corr.simulate(Some(0.0), &rng).unwrap();
        assert_eq!(zero.fields, d.fields);

        let ls = Simulator::new(&small(Scenario::LandSea {
            epsilon: vec![0.5],
            mask: MaskSpec::EasternHemisphere,
        }))
        .unwrap();
        let damped = ls.simulate(Some(0.5), &rng).unwrap();
        assert!(damped.coeffs.is_none());
        assert_ne!(damped.fields, d.fields);
    }
}
