//! Mean and variance normalization models, per-coefficient AR(1)
//! prewhitening, and covariance-based localization of anisotropy.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::quadrature_weights;
use crate::harmonics::{real_layout, BasisMatrix, ColumnLabel};
use crate::par;
use crate::randmat::{isotropy_test, TestOptions, TestResult};
use crate::simulate::RngSpec;
use crate::transform::{CoeffSeries, FieldSeries, WlsAnalyzer};

/// Time steps per seasonal cycle.
pub const DEFAULT_PERIOD: f64 = 360.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    /// Per-cell mean.
    M1,
    /// Per-cell mean plus one seasonal harmonic.
    M2,
    /// As `M2`, residuals divided by the per-cell standard deviation.
    M3,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::M1, ModelKind::M2, ModelKind::M3];
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ModelKind::M1 => "M1",
            ModelKind::M2 => "M2",
            ModelKind::M3 => "M3",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "M1" => Ok(ModelKind::M1),
            "M2" => Ok(ModelKind::M2),
            "M3" => Ok(ModelKind::M3),
            _ => Err(Error::InvalidParameter(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub period: f64,
}

impl ModelSpec {
    pub fn new(kind: ModelKind) -> Self {
        ModelSpec {
            kind,
            period: DEFAULT_PERIOD,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelFit {
    pub spec: ModelSpec,
    pub b0: Vec<f64>,
    /// Sine loading, `M2`/`M3` only.
    pub b1: Option<Vec<f64>>,
    /// Cosine loading, `M2`/`M3` only.
    pub b2: Option<Vec<f64>>,
    /// Per-cell residual standard deviation, `M3` only.
    pub sd_map: Option<Vec<f64>>,
    pub residuals: FieldSeries,
}

/// Per-cell least squares of `Y_t` on `{1}` or `{1, sin(2 pi t / P), cos(2 pi t / P)}`
/// with `t = 1..=T`.
pub fn fit_mean_model(fields: &FieldSeries, spec: ModelSpec) -> Result<ModelFit> {
    let n_times = fields.n_times();
    let n_cells = fields.grid().n_cells();
    let seasonal = spec.kind != ModelKind::M1;
    let k = if seasonal { 3 } else { 1 };
    if n_times < k.max(2) {
        return Err(Error::InvalidParameter(format!(
            "model {} needs at least {} time points, got {n_times}",
            spec.kind,
            k.max(2)
        )));
    }
    if seasonal && !(spec.period > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "period must be positive, got {}",
            spec.period
        )));
    }
    let omega = 2.0 * std::f64::consts::PI / spec.period;
    let x = DMatrix::from_fn(n_times, k, |t, j| {
        let tt = (t + 1) as f64;
        match j {
            0 => 1.0,
            1 => (omega * tt).sin(),
            _ => (omega * tt).cos(),
        }
    });
    let y = DMatrix::from_row_slice(n_times, n_cells, fields.values());
    let qr = x.clone().qr();
    let beta = qr
        .r()
        .solve_upper_triangular(&(qr.q().transpose() * &y))
        .ok_or_else(|| Error::Degenerate("seasonal design is singular".into()))?;
    let mut resid = &y - &x * &beta;

    let sd_map = if spec.kind == ModelKind::M3 {
        let mut sd = Vec::with_capacity(n_cells);
        for (cell, mut col) in resid.column_iter_mut().enumerate() {
            let s = (col.norm_squared() / (n_times - 1) as f64).sqrt();
            let level = y.column(cell).amax();
            if !(s > 1e-12 * level) {
                return Err(Error::Degenerate(format!(
                    "cell {cell} has zero residual variance"
                )));
            }
            col /= s;
            sd.push(s);
        }
        Some(sd)
    } else {
        None
    };

    let mut values = Vec::with_capacity(n_times * n_cells);
    for t in 0..n_times {
        values.extend(resid.row(t).iter());
    }
    let row = |j: usize| beta.row(j).iter().copied().collect::<Vec<_>>();
    Ok(ModelFit {
        spec,
        b0: row(0),
        b1: seasonal.then(|| row(1)),
        b2: seasonal.then(|| row(2)),
        sd_map,
        residuals: FieldSeries::new(fields.grid().clone(), n_times, values)?,
    })
}

/// Per-coordinate AR(1) fit.
#[derive(Debug, Clone, PartialEq)]
pub struct Ar1Fit {
    pub labels: Vec<ColumnLabel>,
    pub rho: Vec<f64>,
    pub innov_var: Vec<f64>,
    /// `eps_t = a_t - rho a_{t-1}` for `t = 2..=T`.
    pub innovations: CoeffSeries,
    /// Coordinates with `|rho| >= 1`.
    pub nonstationary: Vec<ColumnLabel>,
}

/// Regresses `a_2..a_T` on `a_1..a_{T-1}` without intercept for every real
/// coefficient series.
pub fn prewhiten_ar1(coeffs: &CoeffSeries) -> Result<Ar1Fit> {
    let n_times = coeffs.n_times();
    if n_times < 3 {
        return Err(Error::InvalidParameter(format!(
            "prewhitening needs at least 3 time points, got {n_times}"
        )));
    }
    let labels = real_layout(coeffs.l_max());
    let n = n_times - 1;
    let p = coeffs.n_coeffs();
    let mut rho = Vec::with_capacity(p);
    let mut innov_var = Vec::with_capacity(p);
    let mut innov = DMatrix::zeros(n, p);
    let mut nonstationary = Vec::new();
    for k in 0..p {
        let a = coeffs.column_at(k);
        let den: f64 = a[..n].iter().map(|v| v * v).sum();
        if !(den > 0.0) {
            return Err(Error::Degenerate(format!(
                "coefficient series {} has zero energy",
                labels[k]
            )));
        }
        let num: f64 = a.windows(2).map(|w| w[0] * w[1]).sum();
        let r = num / den;
        if r.abs() >= 1.0 {
            nonstationary.push(labels[k]);
        }
        let mut col = innov.column_mut(k);
        for t in 0..n {
            col[t] = a[t + 1] - r * a[t];
        }
        let mean = col.sum() / n as f64;
        let var = col.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / (n - 1) as f64;
        rho.push(r);
        innov_var.push(var);
    }
    if !nonstationary.is_empty() {
        log::warn!("{} coefficient series have |rho| >= 1", nonstationary.len());
    }
    Ok(Ar1Fit {
        labels,
        rho,
        innov_var,
        innovations: CoeffSeries::from_real(coeffs.l_max(), innov)?,
        nonstationary,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelTest {
    pub model: ModelKind,
    pub result: TestResult,
}

/// For each of `M1`, `M2`, `M3`: fit, project residuals with WLS at `l_reg`,
/// prewhiten, and test degrees `<= l`.
pub fn run_model_sequence(
    fields: &FieldSeries,
    analyzer: &WlsAnalyzer,
    l: usize,
    alpha: f64,
    period: f64,
    rng: &RngSpec,
) -> Result<Vec<ModelTest>> {
    if l > analyzer.l_reg() {
        return Err(Error::InvalidParameter(format!(
            "test degree {l} exceeds regression degree {}",
            analyzer.l_reg()
        )));
    }
    if (fields.n_times() as f64) < 2.0 * period {
        log::warn!(
            "{} time points cover fewer than two periods of {period}",
            fields.n_times()
        );
    }
    let options = TestOptions::alpha(alpha).prewhitened(true);
    ModelKind::ALL
        .iter()
        .map(|&kind| {
            let fit = fit_mean_model(fields, ModelSpec { kind, period })?;
            let coeffs = analyzer.analyze(&fit.residuals)?.truncated(l)?;
            Ok(ModelTest {
                model: kind,
                result: isotropy_test(&coeffs, l, &options, rng)?,
            })
        })
        .collect()
}

/// Sample covariance of coefficient series with divisor `n - 1`.
pub fn coefficient_covariance(series: &CoeffSeries) -> Result<DMatrix<f64>> {
    let n = series.n_times();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "covariance needs at least 2 time points".into(),
        ));
    }
    let mut centered = series.real().clone();
    for mut col in centered.column_iter_mut() {
        let mean = col.sum() / n as f64;
        col.add_scalar_mut(-mean);
    }
    Ok(centered.tr_mul(&centered) / (n - 1) as f64)
}

fn check_basis(cov: &DMatrix<f64>, basis: &BasisMatrix) -> Result<()> {
    if basis.values.ncols() != cov.nrows() {
        return Err(Error::Dimension(format!(
            "basis has {} columns, covariance is {}x{}",
            basis.values.ncols(),
            cov.nrows(),
            cov.ncols()
        )));
    }
    Ok(())
}

/// Row `site` of `S Cov S'` without forming the cell-by-cell matrix.
pub fn covariance_row(cov: &DMatrix<f64>, site: usize, basis: &BasisMatrix) -> Result<Vec<f64>> {
    check_basis(cov, basis)?;
    if site >= basis.values.nrows() {
        return Err(Error::InvalidParameter(format!(
            "site {site} outside {} cells",
            basis.values.nrows()
        )));
    }
    let s_row: DVector<f64> = basis.values.row(site).transpose();
    let v = cov * s_row;
    Ok((&basis.values * v).iter().copied().collect())
}

/// Row `site` of `S Cov(a_innov) S'` with the covariance estimated from `innov`.
pub fn anisotropic_covariance_row(
    innov: &CoeffSeries,
    site: usize,
    basis: &BasisMatrix,
) -> Result<Vec<f64>> {
    covariance_row(&coefficient_covariance(innov)?, site, basis)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Aggregation {
    /// Sum over cells of the absolute discrepancy.
    #[default]
    Sum,
    /// Largest absolute discrepancy.
    Max,
    /// Area-weighted sum of the absolute discrepancy.
    Weighted,
}

impl std::str::FromStr for Aggregation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Aggregation::Sum),
            "max" => Ok(Aggregation::Max),
            "weighted" => Ok(Aggregation::Weighted),
            _ => Err(Error::InvalidParameter(format!("unknown aggregation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiteReport {
    pub cell: usize,
    pub colatitude: f64,
    pub longitude: f64,
    pub deviation: f64,
    pub cov_ani: Vec<f64>,
    pub cov_iso: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalizationMap {
    pub aggregation: Aggregation,
    /// Per-cell discrepancy between `|Cov_ani|` and `|Cov_iso|`.
    pub deviation: Vec<f64>,
    /// Highest-deviation sites, in decreasing order.
    pub top_sites: Vec<SiteReport>,
}

const SITE_BLOCK: usize = 128;

/// Compares `S Cov S'` with `S diag(Cov) S'` at every site.
pub fn localize_anisotropy(
    innov: &CoeffSeries,
    basis: &BasisMatrix,
    grid_weights: Option<&[f64]>,
    top_k: usize,
    aggregation: Aggregation,
) -> Result<LocalizationMap> {
    let cov = coefficient_covariance(innov)?;
    localize_with_covariance(&cov, basis, grid_weights, top_k, aggregation)
}

pub fn localize_with_covariance(
    cov: &DMatrix<f64>,
    basis: &BasisMatrix,
    grid_weights: Option<&[f64]>,
    top_k: usize,
    aggregation: Aggregation,
) -> Result<LocalizationMap> {
    check_basis(cov, basis)?;
    let s = &basis.values;
    let n_cells = s.nrows();
    let weights = match (aggregation, grid_weights) {
        (Aggregation::Weighted, Some(w)) if w.len() == n_cells => Some(w),
        (Aggregation::Weighted, _) => {
            return Err(Error::InvalidParameter(
                "weighted aggregation needs one weight per cell".into(),
            ))
        }
        _ => None,
    };
    let diag = DVector::from_iterator(cov.nrows(), cov.diagonal().iter().copied());
    let s_cov = s * cov;
    let s_diag = {
        let mut m = s.clone();
        for (mut col, &d) in m.column_iter_mut().zip(diag.iter()) {
            col *= d;
        }
        m
    };
    let n_blocks = n_cells.div_ceil(SITE_BLOCK);
    let blocks = par::map_range(n_blocks, |b| {
        let r0 = b * SITE_BLOCK;
        let rows = SITE_BLOCK.min(n_cells - r0);
        let ani = s_cov.rows(r0, rows) * s.transpose();
        let iso = s_diag.rows(r0, rows) * s.transpose();
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut acc = 0.0f64;
            for j in 0..n_cells {
                let d = (ani[(i, j)].abs() - iso[(i, j)].abs()).abs();
                acc = match aggregation {
                    Aggregation::Sum => acc + d,
                    Aggregation::Max => acc.max(d),
                    Aggregation::Weighted => acc + weights.unwrap()[j] * d,
                };
            }
            out.push(acc);
        }
        out
    });
    let deviation: Vec<f64> = blocks.into_iter().flatten().collect();

    let mut order: Vec<usize> = (0..n_cells).collect();
    order.sort_by(|&a, &b| deviation[b].total_cmp(&deviation[a]).then(a.cmp(&b)));
    let diag_cov = DMatrix::from_diagonal(&diag);
    let top_sites = order
        .into_iter()
        .take(top_k.min(n_cells))
        .map(|cell| {
            let (colatitude, longitude) = basis.cell_coordinates(cell);
            Ok(SiteReport {
                cell,
                colatitude,
                longitude,
                deviation: deviation[cell],
                cov_ani: covariance_row(cov, cell, basis)?,
                cov_iso: covariance_row(&diag_cov, cell, basis)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalizationMap {
        aggregation,
        deviation,
        top_sites,
    })
}

/// Area weights for [`Aggregation::Weighted`].
pub fn cell_weights(basis: &BasisMatrix) -> Vec<f64> {
    quadrature_weights(basis.grid()).w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, GridConvention};
    use crate::harmonics::{build_basis, sh_eval, HarmonicIndex, Part};
    use crate::simulate::{sim_ar1_coeffs, sim_iso_coeffs, Ar1Schedule, Spectrum, StreamKind};
    use rand::Rng;
    use rand_distr::StandardNormal;

    fn grid() -> crate::grid::Grid {
        make_grid(6, 10, GridConvention::CellCenters).unwrap()
    }

    fn field_from(n_times: usize, f: impl Fn(usize, usize) -> f64) -> FieldSeries {
        let g = grid();
        let n = g.n_cells();
        let v = (0..n_times * n).map(|i| f(i / n, i % n)).collect();
        FieldSeries::new(g, n_times, v).unwrap()
    }

    #[test]
    fn constant_field_models() {
        let f = field_from(10, |_, _| 2.5);
        let fit = fit_mean_model(&f, ModelSpec::new(ModelKind::M1)).unwrap();
        assert!(fit.b0.iter().all(|b| (b - 2.5).abs() < 1e-12));
        assert!(fit.residuals.values().iter().all(|r| r.abs() < 1e-12));
        assert!(fit.b1.is_none() && fit.sd_map.is_none());
        assert!(matches!(
            fit_mean_model(&f, ModelSpec::new(ModelKind::M3)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn seasonal_recovery() {
        let w = 2.0 * std::f64::consts::PI / 360.0;
        let f = field_from(720, |t, _| 2.0 + (w * (t + 1) as f64).sin());
        let fit = fit_mean_model(&f, ModelSpec::new(ModelKind::M2)).unwrap();
        for c in 0..grid().n_cells() {
            assert!((fit.b0[c] - 2.0).abs() < 1e-10);
            assert!((fit.b1.as_ref().unwrap()[c] - 1.0).abs() < 1e-10);
            assert!(fit.b2.as_ref().unwrap()[c].abs() < 1e-10);
        }
        assert!(fit.residuals.values().iter().all(|r| r.abs() < 1e-10));
        assert!(fit_mean_model(&field_from(2, |_, _| 1.0), ModelSpec::new(ModelKind::M2)).is_err());
    }

    #[test]
    fn m3_unit_variance() {
        let mut r = RngSpec::new(1).stream(StreamKind::Auxiliary, 0);
        let noise: Vec<f64> = (0..400 * 60).map(|_| r.sample(StandardNormal)).collect();
        let f = field_from(400, |t, c| (1.0 + c as f64) * noise[t * 60 + c] + (0.1 * t as f64).sin());
        let fit = fit_mean_model(&f, ModelSpec::new(ModelKind::M3)).unwrap();
        for c in 0..60 {
            let s = fit.residuals.cell_series(c);
            let mean = s.iter().sum::<f64>() / 400.0;
            let var = s.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 399.0;
            assert!(mean.abs() < 1e-10);
            assert!((var - 1.0).abs() < 1e-10);
        }
        let sd = fit.sd_map.unwrap();
        assert!(sd[59] > 20.0 * sd[0]);
    }

    #[test]
    fn prewhitening_exact_and_white() {
        // a_t = 0.6 a_{t-1} exactly
        let mut d = DMatrix::zeros(20, 1);
        d[(0, 0)] = 1.0;
        for t in 1..20 {
            d[(t, 0)] = 0.6 * d[(t - 1, 0)];
        }
        let fit = prewhiten_ar1(&CoeffSeries::from_real(0, d).unwrap()).unwrap();
        assert!((fit.rho[0] - 0.6).abs() < 1e-14);
        assert!(fit.innovations.column_at(0).iter().all(|e| e.abs() < 1e-14));
        assert_eq!(fit.innovations.n_times(), 19);

        let s = Spectrum::c_l2(3);
        let t = 2000;
        let white = sim_iso_coeffs(&s, t, 1.5, &RngSpec::new(3)).unwrap();
        let fit = prewhiten_ar1(&white).unwrap();
        assert!(fit.rho.iter().all(|r| r.abs() < 4.0 / (t as f64).sqrt()));

        let sched = Ar1Schedule::decaying(3);
        let ar = sim_ar1_coeffs(&s, &sched, t, &RngSpec::new(4)).unwrap();
        let fit = prewhiten_ar1(&ar).unwrap();
        for (k, lab) in fit.labels.iter().enumerate().skip(1) {
            let rho = sched.rho(lab.l);
            assert!((fit.rho[k] - rho).abs() < 4.0 * ((1.0 - rho * rho) / t as f64).sqrt());
        }
        // idempotence
        let again = prewhiten_ar1(&fit.innovations).unwrap();
        assert!(again.rho.iter().all(|r| r.abs() < 4.0 / (t as f64).sqrt()));
        assert!(fit.nonstationary.is_empty());

        let zero = CoeffSeries::zeros(1, 10);
        assert!(matches!(prewhiten_ar1(&zero), Err(Error::Degenerate(_))));
    }

    #[test]
    fn covariance_row_matches_dense_product() {
        let g = grid();
        let basis = build_basis(&g, 1).unwrap();
        let s = Spectrum::c_l2(1);
        let c = sim_iso_coeffs(&s, 30, 1.5, &RngSpec::new(8)).unwrap();
        let cov = coefficient_covariance(&c).unwrap();
        assert_eq!(cov.shape(), (4, 4));
        let full = &basis.values * &cov * basis.values.transpose();
        for site in [0, 17, 59] {
            let row = anisotropic_covariance_row(&c, site, &basis).unwrap();
            for j in 0..g.n_cells() {
                assert!((row[j] - full[(site, j)]).abs() < 1e-12);
            }
            // Cauchy-Schwarz against the diagonal of the full product
            for j in 0..g.n_cells() {
                assert!(row[j].abs() <= (row[site] * full[(j, j)]).sqrt() + 1e-12);
            }
        }
        assert!(covariance_row(&cov, 60, &basis).is_err());
    }

    #[test]
    fn diagonal_spectrum_row_is_addition_theorem() {
        let g = make_grid(7, 12, GridConvention::PoleInclusive).unwrap();
        let l_max = 4;
        let basis = build_basis(&g, l_max).unwrap();
        let s = Spectrum::c_l2(l_max);
        // real-coordinate variances of an isotropic spectrum
        let diag: Vec<f64> = real_layout(l_max)
            .iter()
            .map(|lab| if lab.m == 0 { s.c(lab.l) } else { s.c(lab.l) / 2.0 })
            .collect();
        let cov = DMatrix::from_diagonal(&DVector::from_vec(diag));
        let row = covariance_row(&cov, 0, &basis).unwrap();
        for j in 0..g.n_cells() {
            let (th, ph) = g.cell(j);
            let mut expect = 0.0;
            for l in 0..=l_max {
                for m in -(l as i64)..=l as i64 {
                    let a = sh_eval(HarmonicIndex::new(l, m).unwrap(), 0.0, 0.0).unwrap();
                    let b = sh_eval(HarmonicIndex::new(l, m).unwrap(), th, ph).unwrap();
                    expect += s.c(l) * (a * b.conj()).re;
                }
            }
            assert!((row[j] - expect).abs() < 1e-12, "cell {j}");
        }
        let map = localize_with_covariance(&cov, &basis, None, 3, Aggregation::Sum).unwrap();
        assert!(map.deviation.iter().all(|&d| d == 0.0));
        assert_eq!(map.top_sites.len(), 3);
        assert_eq!(real_layout(1)[2].part, Part::Cos);
    }

    #[test]
    fn localization_detects_off_diagonal_structure() {
        let g = grid();
        let basis = build_basis(&g, 2).unwrap();
        let mut cov = DMatrix::<f64>::identity(9, 9);
        cov[(1, 4)] = 0.5;
        cov[(4, 1)] = 0.5;
        let w = cell_weights(&basis);
        for agg in [Aggregation::Sum, Aggregation::Max, Aggregation::Weighted] {
            let map = localize_with_covariance(&cov, &basis, Some(&w), 2, agg).unwrap();
            assert!(map.deviation.iter().any(|&d| d > 1e-3));
            assert!(map.deviation.iter().all(|&d| d >= 0.0));
            assert!(map.top_sites[0].deviation >= map.top_sites[1].deviation);
        }
        assert!(localize_with_covariance(&cov, &basis, None, 2, Aggregation::Weighted).is_err());
    }

    #[test]
    fn model_sequence_runs() {
        let g = make_grid(10, 20, GridConvention::CellCenters).unwrap();
        let s = Spectrum::c_l2(8);
        let rng = RngSpec::new(5);
        let c = sim_iso_coeffs(&s, 100, 1.5, &rng).unwrap();
        let f = crate::transform::synthesize(&c, &g).unwrap();
        let an = WlsAnalyzer::new(&g, 6).unwrap();
        let out = run_model_sequence(&f, &an, 3, 0.05, 50.0, &rng).unwrap();
        let kinds: Vec<ModelKind> = out.iter().map(|m| m.model).collect();
        assert_eq!(kinds, ModelKind::ALL.to_vec());
        assert!(out.iter().all(|m| m.result.prewhitened && m.result.p == 16));
        assert!(run_model_sequence(&f, &an, 7, 0.05, 50.0, &rng).is_err());
        assert_eq!("m2".parse::<ModelKind>().unwrap(), ModelKind::M2);
    }
}
