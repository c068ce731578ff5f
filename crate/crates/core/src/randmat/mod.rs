//! The largest-eigenvalue isotropy test.
//!
//! Each real coefficient series is scaled to unit norm, multiplied by an
//! independent chi variable with `T` degrees of freedom, and the largest
//! eigenvalue of the resulting Gram matrix is centered and scaled for
//! comparison with the Tracy-Widom law of order one. The test is right-tailed.

pub mod tracy_widom;
mod tw1_table;

use nalgebra::DMatrix;
use rand_distr::{ChiSquared, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonics::{real_index, real_layout, ColumnLabel, HarmonicIndex};
use crate::pipeline::prewhiten_ar1;
use crate::simulate::{RngSpec, StreamKind};
use crate::transform::CoeffSeries;

pub use tracy_widom::{tw1_cdf, tw1_quantile, tw1_sf};

/// Below this many rows and columns the asymptotic law is unreliable.
pub const SMALL_SAMPLE: usize = 20;

const LANCZOS_TOL: f64 = 1e-10;

/// Columns scaled to unit Euclidean norm, without centering.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardizedMatrix {
    w: DMatrix<f64>,
    labels: Vec<ColumnLabel>,
}

impl StandardizedMatrix {
    pub fn values(&self) -> &DMatrix<f64> {
        &self.w
    }

    pub fn labels(&self) -> &[ColumnLabel] {
        &self.labels
    }
}

pub fn standardize(coeffs: &DMatrix<f64>, labels: &[ColumnLabel]) -> Result<StandardizedMatrix> {
    if labels.len() != coeffs.ncols() {
        return Err(Error::Dimension(format!(
            "{} labels for {} columns",
            labels.len(),
            coeffs.ncols()
        )));
    }
    let mut w = coeffs.clone();
    for (c, mut col) in w.column_iter_mut().enumerate() {
        let norm = col.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Degenerate(format!(
                "coefficient column {} has norm {norm}",
                labels[c]
            )));
        }
        col /= norm;
    }
    Ok(StandardizedMatrix {
        w,
        labels: labels.to_vec(),
    })
}

/// Standardized columns multiplied by independent chi draws.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiScaledMatrix {
    pub values: DMatrix<f64>,
    pub r: Vec<f64>,
}

/// Column `(l, m, part)` uses the chi stream `repetition << 32 | real_index`,
/// so a column keeps its draw wherever it sits in the matrix.
pub fn chi_scale(std: &StandardizedMatrix, rng: &RngSpec, repetition: u64) -> ChiScaledMatrix {
    let t = std.w.nrows();
    let chi2 = ChiSquared::new(t as f64).expect("positive degrees of freedom");
    let r: Vec<f64> = std
        .labels
        .iter()
        .map(|lab| {
            let key = (repetition << 32) | real_index(lab.l, lab.m, lab.part) as u64;
            let mut stream = rng.stream(StreamKind::Chi, key);
            let x: f64 = chi2.sample(&mut stream);
            x.sqrt()
        })
        .collect();
    let mut values = std.w.clone();
    for (mut col, &rc) in values.column_iter_mut().zip(&r) {
        col *= rc;
    }
    ChiScaledMatrix { values, r }
}

fn check_symmetric(a: &DMatrix<f64>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "matrix is {}x{}, expected square",
            a.nrows(),
            a.ncols()
        )));
    }
    let scale = a.amax().max(f64::MIN_POSITIVE);
    for i in 0..a.nrows() {
        for j in 0..i {
            if (a[(i, j)] - a[(j, i)]).abs() > 1e-12 * scale {
                return Err(Error::InvalidParameter(format!(
                    "matrix is not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Largest eigenvalue of a symmetric matrix by Lanczos iteration with full
/// reorthogonalization, stopped when the Ritz residual falls below
/// `1e-10` times the Ritz value.
pub fn largest_eigenvalue(gram: &DMatrix<f64>) -> Result<f64> {
    check_symmetric(gram)?;
    Ok(lanczos_max(gram))
}

fn lanczos_max(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    if n == 0 {
        return 0.0;
    }
    if n == 1 {
        return a[(0, 0)];
    }
    let scale = a.amax();
    if scale == 0.0 {
        return 0.0;
    }
    let mut v = nalgebra::DVector::from_fn(n, |i, _| 1.0 + 0.5 * (1.7 * i as f64 + 0.3).sin());
    v.normalize_mut();
    let mut basis: Vec<nalgebra::DVector<f64>> = vec![v];
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let mut theta = 0.0;
    for j in 0..n {
        let mut w = a * &basis[j];
        let aj = basis[j].dot(&w);
        alpha.push(aj);
        for _ in 0..2 {
            for q in &basis {
                let c = q.dot(&w);
                w.axpy(-c, q, 1.0);
            }
        }
        let bj = w.norm();
        let k = j + 1;
        let tri = DMatrix::from_fn(k, k, |r, c| {
            if r == c {
                alpha[r]
            } else if r + 1 == c {
                beta[r]
            } else if c + 1 == r {
                beta[c]
            } else {
                0.0
            }
        });
        let eig = tri.symmetric_eigen();
        let top = eig.eigenvalues.imax();
        theta = eig.eigenvalues[top];
        let residual = bj * eig.eigenvectors[(k - 1, top)].abs();
        if residual <= LANCZOS_TOL * theta.abs().max(f64::MIN_POSITIVE) || bj <= 1e-14 * scale || k == n {
            return theta;
        }
        beta.push(bj);
        basis.push(w / bj);
    }
    theta
}

/// Largest eigenvalue of `x' x`, using the smaller of `x' x` and `x x'`.
pub fn largest_gram_eigenvalue(x: &DMatrix<f64>) -> f64 {
    let gram = if x.nrows() >= x.ncols() {
        x.tr_mul(x)
    } else {
        x * x.transpose()
    };
    // exact symmetry by construction
    let gram = (&gram + gram.transpose()) * 0.5;
    lanczos_max(&gram)
}

/// Centering and scaling `(mu, sigma)` for `T` rows and `p` columns, with the
/// roles of `T` and `p` exchanged when `T < p`.
pub fn tw_parameters(n_times: usize, p: usize) -> (f64, f64) {
    let (n, k) = if n_times >= p { (n_times, p) } else { (p, n_times) };
    let a = ((n - 1) as f64).sqrt();
    let b = (k as f64).sqrt();
    let mu = (a + b) * (a + b);
    let sigma = (a + b) * (1.0 / a + 1.0 / b).cbrt();
    (mu, sigma)
}

pub fn tw_center_scale(l1: f64, n_times: usize, p: usize) -> f64 {
    let (mu, sigma) = tw_parameters(n_times, p);
    (l1 - mu) / sigma
}

/// Largest eigenvalue and centered statistic of one chi-scaled draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub l1: f64,
    pub statistic: f64,
}

/// Standardize, chi-scale and reduce a `T x p` matrix to its statistic.
pub fn statistic_draw(
    data: &DMatrix<f64>,
    labels: &[ColumnLabel],
    rng: &RngSpec,
    repetition: u64,
) -> Result<Draw> {
    let std = standardize(data, labels)?;
    let scaled = chi_scale(&std, rng, repetition);
    let l1 = largest_gram_eigenvalue(&scaled.values);
    Ok(Draw {
        l1,
        statistic: tw_center_scale(l1, data.nrows(), data.ncols()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestOptions {
    pub alpha: f64,
    pub prewhiten: bool,
    /// Number of independent chi draws averaged into the p-value.
    pub chi_repetitions: usize,
}

impl Default for TestOptions {
    fn default() -> Self {
        TestOptions {
            alpha: 0.05,
            prewhiten: false,
            chi_repetitions: 1,
        }
    }
}

impl TestOptions {
    pub fn alpha(alpha: f64) -> Self {
        TestOptions {
            alpha,
            ..Default::default()
        }
    }

    pub fn prewhitened(self, prewhiten: bool) -> Self {
        TestOptions { prewhiten, ..self }
    }
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

fn is_one(v: &usize) -> bool {
    *v == 1
}

fn one() -> usize {
    1
}

/// Outcome of one isotropy test. With several chi repetitions the statistic,
/// `l1` and p-value are averages over repetitions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub statistic: f64,
    pub p_value: f64,
    pub l1: f64,
    pub mu: f64,
    pub sigma: f64,
    #[serde(rename = "T")]
    pub n_times: usize,
    pub p: usize,
    pub l_corr: usize,
    pub prewhitened: bool,
    pub alpha: f64,
    pub rejected: bool,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub replicate: u64,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub chi_repetitions: usize,
}

/// Tests `H0: R = I_p` on the real coefficient coordinates with degree `<= l_corr`.
pub fn isotropy_test(
    coeffs: &CoeffSeries,
    l_corr: usize,
    options: &TestOptions,
    rng: &RngSpec,
) -> Result<TestResult> {
    if !(options.alpha > 0.0 && options.alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1), got {}",
            options.alpha
        )));
    }
    if options.chi_repetitions == 0 {
        return Err(Error::InvalidParameter("chi_repetitions must be positive".into()));
    }
    if coeffs.n_times() < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 time points, got {}",
            coeffs.n_times()
        )));
    }
    let coeffs = coeffs.truncated(l_corr)?;
    let data = if options.prewhiten {
        prewhiten_ar1(&coeffs)?.innovations.into_real()
    } else {
        coeffs.into_real()
    };
    let (n_times, p) = data.shape();
    debug_assert_eq!(p, HarmonicIndex::count(l_corr));
    if n_times < SMALL_SAMPLE && p < SMALL_SAMPLE {
        log::warn!(
            "T = {n_times} and p = {p} are both below {SMALL_SAMPLE}; the Tracy-Widom approximation may be poor"
        );
    }
    let labels = real_layout(l_corr);
    let (mut l1, mut stat, mut pv) = (0.0, 0.0, 0.0);
    for rep in 0..options.chi_repetitions {
        let d = statistic_draw(&data, &labels, rng, rep as u64)?;
        l1 += d.l1;
        stat += d.statistic;
        pv += tw1_sf(d.statistic);
    }
    let k = options.chi_repetitions as f64;
    let (mu, sigma) = tw_parameters(n_times, p);
    let p_value = pv / k;
    Ok(TestResult {
        statistic: stat / k,
        p_value,
        l1: l1 / k,
        mu,
        sigma,
        n_times,
        p,
        l_corr,
        prewhitened: options.prewhiten,
        alpha: options.alpha,
        rejected: p_value < options.alpha,
        seed: rng.master_seed,
        replicate: rng.replicate,
        chi_repetitions: options.chi_repetitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::Part;
    use proptest::prelude::*;
    use rand::Rng;
    use rand_distr::StandardNormal;

    fn gaussian(rows: usize, cols: usize, seed: u64) -> DMatrix<f64> {
        let mut r = RngSpec::new(seed).stream(StreamKind::Auxiliary, 0);
        DMatrix::from_fn(rows, cols, |_, _| r.sample(StandardNormal))
    }

    #[test]
    fn standardize_basics() {
        let labels = real_layout(1);
        let mut x = DMatrix::from_element(9, 4, 3.0);
        x[(0, 2)] = -1.0;
        let s = standardize(&x, &labels).unwrap();
        for j in 0..4 {
            assert!((s.values().column(j).norm() - 1.0).abs() < 1e-12);
        }
        assert!((s.values()[(5, 0)] - 1.0 / 3.0).abs() < 1e-15);
        let again = standardize(s.values(), &labels).unwrap();
        assert!((again.values() - s.values()).amax() < 1e-15);

        x.column_mut(3).fill(0.0);
        let err = standardize(&x, &labels).unwrap_err();
        assert!(err.to_string().contains("(l=1, m=1, im)"), "{err}");
    }

    #[test]
    fn chi_scale_is_seeded_and_has_t_mean() {
        let labels = real_layout(5);
        let x = gaussian(40, 36, 1);
        let s = standardize(&x, &labels).unwrap();
        let rng = RngSpec::new(4);
        let a = chi_scale(&s, &rng, 0);
        assert_eq!(a, chi_scale(&s, &rng, 0));
        assert_ne!(a.r, chi_scale(&s, &rng, 1).r);
        let mean_r2 = a.r.iter().map(|r| r * r).sum::<f64>() / 36.0;
        // E r^2 = T, sd of the mean sqrt(2T/36)
        assert!((mean_r2 - 40.0).abs() < 4.0 * (80.0f64 / 36.0).sqrt());
        for (j, col) in a.values.column_iter().enumerate() {
            assert!((col.norm() - a.r[j]).abs() < 1e-12);
        }
    }

    #[test]
    fn chi_scaled_entries_look_gaussian() {
        let (t, p) = (200, 100);
        let x = gaussian(t, p, 2);
        let s = standardize(&x, &real_layout(9)).unwrap();
        let a = chi_scale(&s, &RngSpec::new(3), 0);
        let n = (t * p) as f64;
        let m2 = a.values.iter().map(|v| v * v).sum::<f64>() / n;
        let m4 = a.values.iter().map(|v| v.powi(4)).sum::<f64>() / n;
        let kurt = m4 / (m2 * m2);
        assert!((kurt - 3.0).abs() < 4.0 * (24.0 / n).sqrt(), "kurtosis {kurt}");
    }

    #[test]
    fn eigenvalue_edge_cases() {
        assert!((largest_eigenvalue(&DMatrix::identity(7, 7)).unwrap() - 1.0).abs() < 1e-12);
        // orthogonal columns with norms 3 and 2
        let mut x = DMatrix::zeros(5, 2);
        x[(0, 0)] = 3.0;
        x[(3, 1)] = 2.0;
        let g = x.tr_mul(&x);
        assert!((largest_eigenvalue(&g).unwrap() - 9.0).abs() < 1e-12);
        let mut bad = DMatrix::identity(3, 3);
        bad[(0, 2)] = 0.5;
        assert!(largest_eigenvalue(&bad).is_err());
        assert_eq!(largest_eigenvalue(&DMatrix::zeros(3, 3)).unwrap(), 0.0);
    }

    #[test]
    fn lanczos_matches_dense_solver() {
        for seed in 0..20 {
            let x = gaussian(8, 5, seed);
            let g = x.tr_mul(&x);
            let dense = g.clone().symmetric_eigenvalues().max();
            let l = largest_eigenvalue(&g).unwrap();
            assert!((l - dense).abs() < 1e-8 * dense);
            assert!((largest_gram_eigenvalue(&x) - dense).abs() < 1e-8 * dense);
            assert!((largest_gram_eigenvalue(&x.transpose()) - dense).abs() < 1e-8 * dense);
        }
        let x = gaussian(360, 200, 99);
        let g = x.tr_mul(&x);
        let dense = g.clone().symmetric_eigenvalues().max();
        assert!((largest_eigenvalue(&g).unwrap() - dense).abs() < 1e-9 * dense);
    }

    #[test]
    fn centering_constants() {
        let (mu, sigma) = tw_parameters(360, 49);
        let a = 359f64.sqrt();
        assert!((mu - (a + 7.0).powi(2)).abs() < 1e-12);
        assert!((mu - 673.262_134_5).abs() < 1e-6);
        assert!((sigma - (a + 7.0) * (1.0 / a + 1.0 / 7.0).cbrt()).abs() < 1e-12);
        assert_eq!(tw_center_scale(mu, 360, 49), 0.0);
        assert_eq!(tw_parameters(30, 100), tw_parameters(100, 30));
        assert_eq!(tw_center_scale(55.0, 30, 100), tw_center_scale(55.0, 100, 30));
    }

    #[test]
    fn scale_invariance_with_fixed_seed() {
        let s = crate::simulate::Spectrum::c_l2(4);
        let rng = RngSpec::new(12);
        let c = crate::simulate::sim_iso_coeffs(&s, 120, 1.5, &rng).unwrap();
        let base = isotropy_test(&c, 4, &TestOptions::default(), &rng).unwrap();
        let mut scaled = c.clone();
        scaled.column_at_mut(5).iter_mut().for_each(|v| *v *= 4.0);
        assert_eq!(isotropy_test(&scaled, 4, &TestOptions::default(), &rng).unwrap(), base);
        scaled.column_at_mut(7).iter_mut().for_each(|v| *v *= 3.7);
        let other = isotropy_test(&scaled, 4, &TestOptions::default(), &rng).unwrap();
        assert!((other.statistic - base.statistic).abs() < 1e-10);
    }

    #[test]
    fn permutation_keeps_l1_when_draws_follow_columns() {
        let labels = real_layout(3);
        let x = gaussian(50, 16, 8);
        let rng = RngSpec::new(2);
        let base = statistic_draw(&x, &labels, &rng, 0).unwrap();
        let perm: Vec<usize> = (0..16).rev().collect();
        let xp = DMatrix::from_fn(50, 16, |i, j| x[(i, perm[j])]);
        let lp: Vec<ColumnLabel> = perm.iter().map(|&j| labels[j]).collect();
        let d = statistic_draw(&xp, &lp, &rng, 0).unwrap();
        assert!((d.l1 - base.l1).abs() < 1e-9 * base.l1);
        assert_eq!(lp[0], ColumnLabel { l: 3, m: 3, part: Part::Sin });
    }

    #[test]
    fn result_json_fields() {
        let s = crate::simulate::Spectrum::c_l2(3);
        let rng = RngSpec::new(77);
        let c = crate::simulate::sim_iso_coeffs(&s, 60, 1.5, &rng).unwrap();
        let r = isotropy_test(&c, 3, &TestOptions::alpha(0.1).prewhitened(true), &rng).unwrap();
        assert_eq!(r.n_times, 59);
        assert_eq!(r.p, 16);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for k in [
            "statistic", "p_value", "l1", "mu", "sigma", "T", "p", "l_corr", "prewhitened",
            "alpha", "rejected", "seed",
        ] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert_eq!(keys.len(), 12);
        let back: TestResult = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.rejected, r.p_value < 0.1);
    }

    #[test]
    fn invalid_options() {
        let c = CoeffSeries::zeros(2, 10);
        let rng = RngSpec::new(0);
        assert!(isotropy_test(&c, 2, &TestOptions::alpha(0.0), &rng).is_err());
        assert!(matches!(
            isotropy_test(&c, 2, &TestOptions::default(), &rng),
            Err(Error::Degenerate(_))
        ));
        assert!(isotropy_test(&c, 3, &TestOptions::default(), &rng).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn standardized_columns_have_unit_norm(
            seed in 0u64..1000, rows in 2usize..30, l in 0usize..4,
        ) {
            let p = HarmonicIndex::count(l);
            let x = gaussian(rows, p, seed);
            let s = standardize(&x, &real_layout(l)).unwrap();
            for col in s.values().column_iter() {
                prop_assert!((col.norm() - 1.0).abs() < 1e-12);
            }
        }

        #[test]
        fn lanczos_agrees_with_dense(seed in 0u64..1000, n in 1usize..12, k in 1usize..12) {
            let x = gaussian(n, k, seed);
            let g = x.tr_mul(&x);
            let dense = g.clone().symmetric_eigenvalues().max();
            let l = largest_eigenvalue(&g).unwrap();
            prop_assert!((l - dense).abs() <= 1e-8 * dense.max(1e-300));
        }

        #[test]
        fn cdf_is_monotone(a in -12.0f64..8.0, d in 0.0f64..3.0) {
            prop_assert!(tw1_cdf(a) <= tw1_cdf(a + d));
        }
    }
}
