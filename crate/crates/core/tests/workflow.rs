use std::collections::BTreeMap;

use proptest::prelude::*;

use sphiso::grid::{make_grid, GridConvention};
use sphiso::io::{read_coeffs, read_fields, write_coeffs, write_fields};
use sphiso::randmat::{isotropy_test, tw1_cdf, tw1_quantile, TestOptions};
use sphiso::simulate::{sim_iso_coeffs, RngSpec, Spectrum, DEFAULT_A00_VAR};
use sphiso::transform::{synthesize, CoeffSeries, FieldSeries, WlsAnalyzer};

fn series(l_max: usize, n_times: usize, values: &[f64]) -> CoeffSeries {
    let mut c = CoeffSeries::zeros(l_max, n_times);
    let p = c.n_coeffs();
    for k in 0..p {
        for (t, v) in c.column_at_mut(k).iter_mut().enumerate() {
            *v = values[(k * n_times + t) % values.len()];
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficient_files_round_trip(
        l_max in 0usize..7,
        n_times in 1usize..5,
        values in prop::collection::vec(-1e6f64..1e6, 1..64),
    ) {
        let c = series(l_max, n_times, &values);
        let mut meta = BTreeMap::new();
        meta.insert("seed".to_string(), "17".to_string());
        let mut buf = Vec::new();
        write_coeffs(&mut buf, &c, &meta).unwrap();
        let (back, meta_back) = read_coeffs(buf.as_slice(), "mem").unwrap();
        prop_assert_eq!(back, c);
        prop_assert_eq!(meta_back.get("seed").map(String::as_str), Some("17"));
    }

    #[test]
    fn field_files_round_trip(
        n_lat in 2usize..6,
        n_lon in 4usize..9,
        n_times in 1usize..4,
        seed in any::<u64>(),
        poles in any::<bool>(),
    ) {
        let conv = if poles { GridConvention::PoleInclusive } else { GridConvention::CellCenters };
        let grid = make_grid(n_lat, n_lon, conv).unwrap();
        let n = grid.n_cells() * n_times;
        let values: Vec<f64> = (0..n).map(|i| ((i as u64 ^ seed) as f64).sin()).collect();
        let fields = FieldSeries::new(grid, n_times, values).unwrap();
        let mut buf = Vec::new();
        write_fields(&mut buf, &fields, Some(seed)).unwrap();
        let (header, back) = read_fields(buf.as_slice(), "mem").unwrap();
        prop_assert_eq!(header.seed, Some(seed));
        prop_assert_eq!(back, fields);
    }

    #[test]
    fn tw1_quantile_inverts_cdf(p in 0.001f64..0.999) {
        let q = tw1_quantile(p);
        prop_assert!((tw1_cdf(q) - p).abs() < 1e-7);
    }
}

#[test]
fn files_to_test_result() {
    let grid = make_grid(20, 50, GridConvention::PoleInclusive).unwrap();
    let spectrum = Spectrum::c_l2(18);
    let truth = sim_iso_coeffs(&spectrum, 200, DEFAULT_A00_VAR, &RngSpec::new(33)).unwrap();
    let fields = synthesize(&truth, &grid).unwrap();

    let mut buf = Vec::new();
    write_fields(&mut buf, &fields, Some(33)).unwrap();
    let (_, loaded) = read_fields(buf.as_slice(), "mem").unwrap();
    let est = WlsAnalyzer::new(loaded.grid(), 18).unwrap().analyze(&loaded).unwrap();
    let err = (est.real() - truth.real()).abs().max();
    assert!(err < 1e-8, "recovery error {err}");

    let opts = TestOptions::alpha(0.05);
    let a = isotropy_test(&est, 4, &opts, &RngSpec::new(5)).unwrap();
    let b = isotropy_test(&truth, 4, &opts, &RngSpec::new(5)).unwrap();
    assert_eq!(a.p, 25);
    assert!((a.statistic - b.statistic).abs() < 1e-6);
    assert!((0.0..=1.0).contains(&a.p_value));
}
