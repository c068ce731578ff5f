//! WebAssembly bindings for the static page in `www/`.
//!
//! Everything is single-threaded and sized for interactive use.

use wasm_bindgen::prelude::*;

use sphiso::experiment::{ExperimentConfig, GridSpec, Scenario, Simulator};
use sphiso::grid::GridConvention;
use sphiso::io::to_json;
use sphiso::randmat::{isotropy_test, tw1_cdf, tw1_quantile, TestOptions};
use sphiso::simulate::RngSpec;
use sphiso::transform::{select_l_reg, WlsAnalyzer, DEFAULT_CONDITION_THRESHOLD};

const DEMO_L_SIM: usize = 40;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn config(n_lat: usize, n_lon: usize, n_times: usize, psi: f64) -> ExperimentConfig {
    let grid = GridSpec {
        n_lat,
        n_lon,
        convention: GridConvention::CellCenters,
    };
    let mut cfg = ExperimentConfig::new(grid, Vec::new());
    cfg.l_sim = DEMO_L_SIM;
    cfg.n_times = n_times;
    if psi != 0.0 {
        cfg.scenario = Scenario::Correlated { psi: vec![psi] };
    }
    cfg
}

fn simulate(n_lat: usize, n_lon: usize, n_times: usize, psi: f64, seed: u64) -> sphiso::Result<sphiso::experiment::Dataset> {
    let cfg = config(n_lat, n_lon, n_times, psi);
    let param = cfg.scenario.parameters()[0];
    Simulator::new(&cfg)?.simulate(param, &RngSpec::new(seed))
}

/// First time slice of a simulated field, row-major from north to south.
#[wasm_bindgen]
pub fn simulate_map(n_lat: usize, n_lon: usize, psi: f64, seed: u64) -> Result<Vec<f64>, JsValue> {
    let data = simulate(n_lat, n_lon, 3, psi, seed).map_err(err)?;
    Ok(data.fields.time_slice(0).to_vec())
}

/// Simulates `n_times` fields, recovers coefficients and runs the test up to degree `l`.
/// Returns the test result as JSON.
#[wasm_bindgen]
pub fn run_test(
    n_lat: usize,
    n_lon: usize,
    n_times: usize,
    l: usize,
    psi: f64,
    seed: u64,
) -> Result<String, JsValue> {
    let data = simulate(n_lat, n_lon, n_times, psi, seed).map_err(err)?;
    let grid = data.fields.grid();
    let l_reg = select_l_reg(grid, DEFAULT_CONDITION_THRESHOLD).l_reg;
    if l > l_reg {
        return Err(err(format!("degree {l} exceeds the regression degree {l_reg} of this grid")));
    }
    let coeffs = WlsAnalyzer::new(grid, l_reg)
        .and_then(|a| a.analyze(&data.fields))
        .map_err(err)?;
    let result = isotropy_test(&coeffs, l, &TestOptions::alpha(0.05), &RngSpec::new(seed)).map_err(err)?;
    to_json(&result).map_err(err)
}

/// Tracy-Widom order-one CDF.
#[wasm_bindgen]
pub fn tw1(s: f64) -> f64 {
    tw1_cdf(s)
}

/// Tracy-Widom order-one quantile.
#[wasm_bindgen]
pub fn tw1_inverse(prob: f64) -> f64 {
    tw1_quantile(prob)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_has_one_value_per_cell() {
        let v = simulate_map(10, 20, 0.0, 3).unwrap();
        assert_eq!(v.len(), 200);
        assert!(v.iter().all(|x| x.is_finite()));
    }

    #[test]
    fn strong_correlation_is_rejected() {
        let json = run_test(20, 50, 120, 4, 0.6, 5).unwrap();
        assert!(json.contains("\"rejected\": true"), "{json}");
    }

    #[test]
    fn tw1_median_round_trips() {
        let q = tw1_inverse(0.5);
        assert!((tw1(q) - 0.5).abs() < 1e-6);
    }
}
