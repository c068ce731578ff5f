//! `sphiso` command-line tool.
//!
//! Exit codes: 0 success (no rejection), 3 isotropy rejected by `test`,
//! 1 any other error, 2 invalid usage.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use sphiso::experiment::{
    run_experiment, truncation_study, ExperimentConfig, GridSpec, MaskSpec, Scenario,
    Simulator, SpectrumSpec, Temporal,
};
use sphiso::grid::{make_grid, GridConvention};
use sphiso::harmonics::build_basis;
use sphiso::io;
use sphiso::pipeline::{
    cell_weights, fit_mean_model, localize_anisotropy, prewhiten_ar1, Aggregation, ModelKind,
    ModelSpec, DEFAULT_PERIOD,
};
use sphiso::randmat::{isotropy_test, TestOptions};
use sphiso::simulate::RngSpec;
use sphiso::transform::{
    select_l_reg, CoeffSeries, WlsAnalyzer, DEFAULT_CONDITION_THRESHOLD,
};

const EXIT_REJECTED: u8 = 3;

#[derive(Parser)]
#[command(name = "sphiso", version, about = "Test isotropy of gridded spherical random fields")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate one dataset and write field (and coefficient) files.
    Simulate(SimulateArgs),
    /// Run the isotropy test on a field or coefficient file.
    Test(TestArgs),
    /// Monte Carlo Type I error study for an isotropic configuration.
    Type1(StudyArgs),
    /// Monte Carlo power study over a scenario parameter grid.
    Power(StudyArgs),
    /// Fit a mean model and map where the anisotropy sits.
    Localize(LocalizeArgs),
    /// Report truncation degrees for a grid.
    Select(SelectArgs),
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    n_lat: Option<usize>,
    #[arg(long)]
    n_lon: Option<usize>,
    /// cell_centers or pole_inclusive.
    #[arg(long)]
    convention: Option<GridConvention>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Experiment configuration (TOML or JSON); flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
    /// c_l2 or c_l3.
    #[arg(long)]
    spectrum: Option<String>,
    #[arg(long)]
    l_sim: Option<usize>,
    #[arg(long = "T")]
    n_times: Option<usize>,
    /// Correlated-orders scenario with this psi.
    #[arg(long, conflicts_with = "epsilon")]
    psi: Option<f64>,
    /// Land/sea scenario with this epsilon.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Land mask file for the land/sea scenario (default: eastern hemisphere).
    #[arg(long, requires = "epsilon")]
    mask: Option<PathBuf>,
    /// AR(1) coefficients in time.
    #[arg(long)]
    ar1: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TestArgs {
    /// Field file (binary with JSON header) or coefficient CSV.
    input: PathBuf,
    /// Largest degree included in the test.
    #[arg(long)]
    l: usize,
    /// Regression degree for field input (default: condition rule).
    #[arg(long)]
    l_reg: Option<usize>,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long)]
    prewhiten: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the JSON result here as well as to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StudyArgs {
    /// Experiment configuration (TOML or JSON).
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    replicates: Option<usize>,
    /// Output directory for tables, timing and checkpoint.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Do not read or write a checkpoint.
    #[arg(long)]
    no_checkpoint: bool,
}

#[derive(Args)]
struct LocalizeArgs {
    /// Field file.
    input: PathBuf,
    /// Mean model: M1, M2 or M3.
    #[arg(long, default_value = "M3")]
    model: ModelKind,
    /// Largest degree kept for the covariance estimate.
    #[arg(long)]
    l: usize,
    #[arg(long)]
    l_reg: Option<usize>,
    #[arg(long, default_value_t = 5)]
    top_k: usize,
    /// sum, max or weighted.
    #[arg(long, default_value = "sum")]
    aggregation: Aggregation,
    #[arg(long, default_value_t = DEFAULT_PERIOD)]
    period: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SelectArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Also estimate l_corr from one simulated dataset.
    #[arg(long)]
    l_corr: bool,
    #[arg(long, default_value = "c_l2")]
    spectrum: String,
    #[arg(long, default_value_t = 150)]
    l_sim: usize,
    #[arg(long = "T", default_value_t = 360)]
    n_times: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(1);
        }
    }
    let outcome = match cli.command {
        Command::Simulate(a) => cmd_simulate(a),
        Command::Test(a) => cmd_test(a),
        Command::Type1(a) => cmd_study(a, false),
        Command::Power(a) => cmd_study(a, true),
        Command::Localize(a) => cmd_localize(a),
        Command::Select(a) => cmd_select(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_toml = path.extension().is_some_and(|e| e == "toml");
    let cfg = if is_toml {
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
    } else {
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
    };
    Ok(cfg)
}

fn parse_spectrum(name: &str) -> Result<SpectrumSpec> {
    match name {
        "c_l2" => Ok(SpectrumSpec::CL2),
        "c_l3" => Ok(SpectrumSpec::CL3),
        other => bail!("unknown spectrum {other:?}; expected c_l2 or c_l3"),
    }
}

fn grid_spec(base: Option<GridSpec>, args: &GridArgs) -> Result<GridSpec> {
    let mut g = base.unwrap_or(GridSpec {
        n_lat: 0,
        n_lon: 0,
        convention: GridConvention::CellCenters,
    });
    if let Some(v) = args.n_lat {
        g.n_lat = v;
    }
    if let Some(v) = args.n_lon {
        g.n_lon = v;
    }
    if let Some(v) = args.convention {
        g.convention = v;
    }
    if g.n_lat == 0 || g.n_lon == 0 {
        bail!("grid size required: pass --n-lat and --n-lon or a config file");
    }
    Ok(g)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn cmd_simulate(a: SimulateArgs) -> Result<u8> {
    let base = a.config.as_deref().map(load_config).transpose()?;
    let grid = grid_spec(base.as_ref().map(|c| c.grid.clone()), &a.grid)?;
    let mut cfg = base.unwrap_or_else(|| ExperimentConfig::new(grid.clone(), Vec::new()));
    cfg.grid = grid;
    if let Some(s) = &a.spectrum {
        cfg.spectrum = parse_spectrum(s)?;
    }
    if let Some(v) = a.l_sim {
        cfg.l_sim = v;
    }
    if let Some(v) = a.n_times {
        cfg.n_times = v;
    }
    if let Some(v) = a.seed {
        cfg.seed = v;
    }
    if a.ar1 {
        cfg.temporal = Temporal::Ar1;
    }
    if let Some(psi) = a.psi {
        cfg.scenario = Scenario::Correlated { psi: vec![psi] };
    }
    if let Some(eps) = a.epsilon {
        let mask = a.mask.clone().map(MaskSpec::File).unwrap_or_default();
        cfg.scenario = Scenario::LandSea {
            epsilon: vec![eps],
            mask,
        };
    }
    let param = cfg.scenario.parameters()[0];
    let sim = Simulator::new(&cfg)?;
    let data = sim.simulate(param, &RngSpec::new(cfg.seed))?;

    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let fields_path = a.out.join("fields.bin");
    io::save_fields(&fields_path, &data.fields, Some(cfg.seed))?;
    println!("wrote {}", fields_path.display());
    if let Some(coeffs) = &data.coeffs {
        let mut meta = BTreeMap::new();
        meta.insert("seed".to_string(), cfg.seed.to_string());
        meta.insert("scenario".to_string(), cfg.scenario.name().to_string());
        let path = a.out.join("coeffs.csv");
        io::save_coeffs(&path, coeffs, &meta)?;
        println!("wrote {}", path.display());
    }
    let mut cfg_out = cfg.clone();
    cfg_out.output = None;
    write_text(&a.out.join("config.json"), &io::to_json(&cfg_out)?)?;
    Ok(0)
}

/// Field files start with their JSON header, coefficient files do not.
fn read_input(path: &Path, l_reg: Option<usize>, l: usize) -> Result<CoeffSeries> {
    let head = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if head.first() == Some(&b'{') {
        let (_, fields) = io::load_fields(path)?;
        let l_reg = match l_reg {
            Some(v) => v,
            None => select_l_reg(fields.grid(), DEFAULT_CONDITION_THRESHOLD).l_reg,
        };
        if l > l_reg {
            bail!("test degree {l} exceeds the regression degree {l_reg}");
        }
        Ok(WlsAnalyzer::new(fields.grid(), l_reg)?.analyze(&fields)?)
    } else {
        Ok(io::load_coeffs(path)?.0)
    }
}

fn cmd_test(a: TestArgs) -> Result<u8> {
    let coeffs = read_input(&a.input, a.l_reg, a.l)?;
    let opts = TestOptions::alpha(a.alpha).prewhitened(a.prewhiten);
    let result = isotropy_test(&coeffs, a.l, &opts, &RngSpec::new(a.seed))?;
    let json = io::to_json(&result)?;
    println!("{json}");
    if let Some(out) = &a.out {
        write_text(out, &(json + "\n"))?;
    }
    Ok(if result.rejected { EXIT_REJECTED } else { 0 })
}

fn cmd_study(a: StudyArgs, power: bool) -> Result<u8> {
    let mut cfg = load_config(&a.config)?;
    if let Some(v) = a.seed {
        cfg.seed = v;
    }
    if let Some(v) = a.replicates {
        cfg.replicates = v;
    }
    if let Some(v) = a.out {
        cfg.output = Some(v);
    }
    match (&cfg.scenario, power) {
        (Scenario::Isotropic, true) => bail!("power needs a correlated or land_sea scenario"),
        (Scenario::Isotropic, false) => {}
        (s, false) => bail!("type1 needs the isotropic scenario, config has {}", s.name()),
        _ => {}
    }
    let name = if power { "power" } else { "type1" };
    let out = cfg.output.clone().unwrap_or_else(|| PathBuf::from(name));
    fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
    let checkpoint = (!a.no_checkpoint).then(|| out.join("checkpoint.jsonl"));

    let run = run_experiment(&cfg, checkpoint.as_deref())?;
    let csv = run.table.to_csv_string()?;
    write_text(&out.join(format!("{name}.csv")), &csv)?;
    write_text(&out.join(format!("{name}.json")), &(io::to_json(&run.table)? + "\n"))?;
    let timing = serde_json::json!({
        "elapsed_secs": run.elapsed_secs,
        "computed_replicates": run.computed,
        "replicates": cfg.replicates,
    });
    write_text(&out.join("timing.json"), &(serde_json::to_string_pretty(&timing)? + "\n"))?;
    print!("{csv}");
    log::info!("{} replicates computed in {:.1}s", run.computed, run.elapsed_secs);
    Ok(0)
}

fn cmd_localize(a: LocalizeArgs) -> Result<u8> {
    let (_, fields) = io::load_fields(&a.input)?;
    let grid = fields.grid().clone();
    let l_reg = match a.l_reg {
        Some(v) => v,
        None => select_l_reg(&grid, DEFAULT_CONDITION_THRESHOLD).l_reg,
    };
    if a.l > l_reg {
        bail!("degree {} exceeds the regression degree {l_reg}", a.l);
    }
    let fit = fit_mean_model(&fields, ModelSpec { kind: a.model, period: a.period })?;
    let coeffs = WlsAnalyzer::new(&grid, l_reg)?.analyze(&fit.residuals)?.truncated(a.l)?;
    let innov = prewhiten_ar1(&coeffs)?.innovations;
    let basis = build_basis(&grid, a.l)?;
    let weights = cell_weights(&basis);
    let map = localize_anisotropy(&innov, &basis, Some(&weights), a.top_k, a.aggregation)?;

    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let dev_path = a.out.join("deviation.csv");
    let file = fs::File::create(&dev_path).with_context(|| format!("creating {}", dev_path.display()))?;
    io::write_cell_map(file, &grid, "deviation", &map.deviation)?;
    write_text(&a.out.join("sites.json"), &(io::to_json(&map.top_sites)? + "\n"))?;
    for (name, values) in [
        ("b0", Some(&fit.b0)),
        ("b1", fit.b1.as_ref()),
        ("b2", fit.b2.as_ref()),
        ("sd", fit.sd_map.as_ref()),
    ] {
        if let Some(v) = values {
            let path = a.out.join(format!("{name}.csv"));
            let f = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            io::write_cell_map(f, &grid, name, v)?;
        }
    }
    for s in &map.top_sites {
        println!(
            "cell {:>6}  colatitude {:.4}  longitude {:.4}  deviation {:.6e}",
            s.cell, s.colatitude, s.longitude, s.deviation
        );
    }
    Ok(0)
}

fn cmd_select(a: SelectArgs) -> Result<u8> {
    let g = grid_spec(None, &a.grid)?;
    let grid = make_grid(g.n_lat, g.n_lon, g.convention)?;
    let report = if a.l_corr {
        let spectrum = parse_spectrum(&a.spectrum)?.build(a.l_sim)?;
        truncation_study(&grid, &spectrum, a.n_times, sphiso::simulate::DEFAULT_A00_VAR, &RngSpec::new(a.seed))?
    } else {
        select_l_reg(&grid, DEFAULT_CONDITION_THRESHOLD)
    };
    let json = io::to_json(&report)?;
    match &a.out {
        Some(p) => {
            write_text(p, &(json + "\n"))?;
            println!("l_reg {} l_corr {:?}", report.l_reg, report.l_corr);
        }
        None => println!("{json}"),
    }
    Ok(0)
}
