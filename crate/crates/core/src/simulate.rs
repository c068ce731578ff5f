//! Gaussian coefficient and field generators.
//!
//! Randomness is drawn from ChaCha8 streams derived from a master seed, one
//! stream per `(replicate, purpose, index)`. Generators draw each degree from
//! its own stream, so results do not depend on thread count.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, MaskRaster};
use crate::harmonics::HarmonicIndex;
use crate::par;
use crate::transform::{CoeffSeries, FieldSeries, Synthesizer};

/// Variance of `a_00` used by the simulation study.
pub const DEFAULT_A00_VAR: f64 = 1.5;

/// Per-degree variances `C_l = sigma2 / (alpha^2 + l^2)^(nu + 1/2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub sigma2: f64,
    pub alpha: f64,
    pub nu: f64,
    c: Vec<f64>,
}

impl Spectrum {
    pub fn l_sim(&self) -> usize {
        self.c.len() - 1
    }

    pub fn c(&self, l: usize) -> f64 {
        self.c[l]
    }

    pub fn values(&self) -> &[f64] {
        &self.c
    }

    /// `nu = 0.5`: `C_l` of order `1/l^2`.
    pub fn c_l2(l_sim: usize) -> Self {
        legendre_matern_spectrum(1.0, 1.0, 0.5, l_sim).expect("valid preset")
    }

    /// `nu = 1`: `C_l` of order `1/l^3`.
    pub fn c_l3(l_sim: usize) -> Self {
        legendre_matern_spectrum(1.0, 1.0, 1.0, l_sim).expect("valid preset")
    }

    /// Upper bound on the omitted tail `sum_{l > l_sim} C_l`.
    pub fn truncation_bound(&self) -> f64 {
        let l = self.l_sim() as f64;
        self.sigma2 * l.powf(-2.0 * self.nu) / (2.0 * self.nu)
    }
}

pub fn legendre_matern_spectrum(sigma2: f64, alpha: f64, nu: f64, l_sim: usize) -> Result<Spectrum> {
    for (name, v) in [("sigma2", sigma2), ("alpha", alpha), ("nu", nu)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
        }
    }
    let c = (0..=l_sim)
        .map(|l| {
            let l = l as f64;
            sigma2 / (alpha * alpha + l * l).powf(nu + 0.5)
        })
        .collect();
    Ok(Spectrum {
        sigma2,
        alpha,
        nu,
        c,
    })
}

/// `psi(theta) = sum_l C_l P_l(cos theta)` over the stored degrees.
///
/// The omitted tail is bounded by [`Spectrum::truncation_bound`].
pub fn legendre_matern_cov(spectrum: &Spectrum, theta: f64) -> f64 {
    let x = theta.cos().clamp(-1.0, 1.0);
    let c = spectrum.values();
    let mut sum = c[0];
    let (mut p0, mut p1) = (1.0, x);
    for (l, &cl) in c.iter().enumerate().skip(1) {
        if l >= 2 {
            let lf = l as f64;
            let p2 = ((2.0 * lf - 1.0) * x * p1 - (lf - 1.0) * p0) / lf;
            p0 = p1;
            p1 = p2;
        }
        sum += cl * p1;
    }
    sum
}

/// Per-degree lag-one autocorrelations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ar1Schedule {
    rho: Vec<f64>,
}

impl Ar1Schedule {
    pub fn new(rho: Vec<f64>) -> Result<Self> {
        if let Some((l, r)) = rho.iter().enumerate().find(|(_, r)| !(r.abs() < 1.0)) {
            return Err(Error::InvalidParameter(format!(
                "rho_{l} = {r} is not stationary"
            )));
        }
        Ok(Ar1Schedule { rho })
    }

    /// `rho_l = 0.9 / sqrt(l)` with `rho_0 = 0.99`.
    pub fn decaying(l_sim: usize) -> Self {
        let rho = (0..=l_sim)
            .map(|l| if l == 0 { 0.99 } else { 0.9 / (l as f64).sqrt() })
            .collect();
        Ar1Schedule { rho }
    }

    pub fn constant(rho: f64, l_sim: usize) -> Result<Self> {
        Self::new(vec![rho; l_sim + 1])
    }

    pub fn rho(&self, l: usize) -> f64 {
        self.rho[l]
    }

    pub fn l_max(&self) -> usize {
        self.rho.len() - 1
    }
}

/// Independent random streams a generator may ask for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamKind {
    /// Coefficient draws; index is the degree.
    Coefficients = 0,
    /// Common factor of the correlated-orders scenario; index is the degree.
    CommonFactor = 1,
    /// Chi draws of the test; index encodes repetition and column.
    Chi = 2,
    /// Auxiliary draws (noise fields, synthetic covariates).
    Auxiliary = 3,
}

/// Master seed plus replicate number.
///
/// A stream is the ChaCha8 generator keyed by the 32-byte seed
/// `master || replicate || kind || 0` (little-endian words) with stream
/// number `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngSpec {
    pub master_seed: u64,
    pub replicate: u64,
}

impl RngSpec {
    pub fn new(master_seed: u64) -> Self {
        RngSpec {
            master_seed,
            replicate: 0,
        }
    }

    pub fn replicate(self, replicate: u64) -> Self {
        RngSpec { replicate, ..self }
    }

    pub fn stream(&self, kind: StreamKind, index: u64) -> ChaCha8Rng {
        let mut seed = [0u8; 32];
        seed[0..8].copy_from_slice(&self.master_seed.to_le_bytes());
        seed[8..16].copy_from_slice(&self.replicate.to_le_bytes());
        seed[16..24].copy_from_slice(&(kind as u64).to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(seed);
        rng.set_stream(index);
        rng
    }
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Standard deviation of each real coordinate of degree `l`, `m = 0` first.
fn coordinate_sd(spectrum: &Spectrum, l: usize, a00_var: f64) -> (f64, f64) {
    if l == 0 {
        (a00_var.sqrt(), 0.0)
    } else {
        let c = spectrum.c(l);
        (c.sqrt(), (0.5 * c).sqrt())
    }
}

/// Fills a series degree by degree. `fill(l, block)` writes the `T x (2l+1)`
/// column-major block of degree `l`.
fn assemble<F>(l_max: usize, n_times: usize, fill: F) -> CoeffSeries
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    let blocks = par::map_range(l_max + 1, |l| {
        let mut block = vec![0.0; n_times * (2 * l + 1)];
        fill(l, &mut block);
        block
    });
    let mut data = Vec::with_capacity(n_times * HarmonicIndex::count(l_max));
    for b in blocks {
        data.extend(b);
    }
    let p = HarmonicIndex::count(l_max);
    CoeffSeries::from_real(l_max, DMatrix::from_vec(n_times, p, data)).expect("layout matches")
}

fn check_times(n_times: usize) -> Result<()> {
    if n_times < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least 2 time points, got {n_times}"
        )));
    }
    Ok(())
}

/// I.i.d.-in-time isotropic coefficients up to the spectrum's degree.
///
/// For `m > 0`, `Re a` and `Im a` are `N(0, C_l / 2)`; `a_{l0}` is real
/// `N(0, C_l)`; `a_00` has variance `a00_var`.
pub fn sim_iso_coeffs(
    spectrum: &Spectrum,
    n_times: usize,
    a00_var: f64,
    rng: &RngSpec,
) -> Result<CoeffSeries> {
    check_times(n_times)?;
    Ok(assemble(spectrum.l_sim(), n_times, |l, block| {
        let mut r = rng.stream(StreamKind::Coefficients, l as u64);
        let (sd0, sd) = coordinate_sd(spectrum, l, a00_var);
        let width = 2 * l + 1;
        for t in 0..n_times {
            for k in 0..width {
                let s = if k == 0 { sd0 } else { sd };
                block[k * n_times + t] = s * normal(&mut r);
            }
        }
    }))
}

/// Stationary AR(1) coefficients `a_t = rho_l a_{t-1} + e_t`, `e ~ CN(0, C_l)`.
///
/// The first state is drawn from the stationary law.
pub fn sim_ar1_coeffs(
    spectrum: &Spectrum,
    schedule: &Ar1Schedule,
    n_times: usize,
    rng: &RngSpec,
) -> Result<CoeffSeries> {
    check_times(n_times)?;
    if schedule.l_max() < spectrum.l_sim() {
        return Err(Error::Dimension(format!(
            "schedule covers degree {}, spectrum needs {}",
            schedule.l_max(),
            spectrum.l_sim()
        )));
    }
    Ok(assemble(spectrum.l_sim(), n_times, |l, block| {
        let mut r = rng.stream(StreamKind::Coefficients, l as u64);
        let c = spectrum.c(l);
        let (sd0, sd) = (c.sqrt(), (0.5 * c).sqrt());
        let rho = schedule.rho(l);
        let stationary = 1.0 / (1.0 - rho * rho).sqrt();
        let width = 2 * l + 1;
        for t in 0..n_times {
            for k in 0..width {
                let s = if k == 0 { sd0 } else { sd };
                let e = s * normal(&mut r);
                block[k * n_times + t] = if t == 0 {
                    e * stationary
                } else {
                    rho * block[k * n_times + t - 1] + e
                };
            }
        }
    }))
}

/// Coefficients whose orders within a degree share correlation `psi`.
///
/// `a_{lmt} = sqrt(psi) z_{lt} + sqrt(1 - psi) xi_{lmt}` with a common complex
/// factor `z_{lt}` per degree and time; for `m = 0` the real factor
/// `sqrt(2) Re z_{lt}` stands in for `z`. The `xi` draws are those of
/// [`sim_iso_coeffs`], so `psi = 0` reproduces it exactly.
pub fn sim_aniso_corr(
    spectrum: &Spectrum,
    psi: f64,
    n_times: usize,
    a00_var: f64,
    rng: &RngSpec,
) -> Result<CoeffSeries> {
    if !(0.0..1.0).contains(&psi) {
        return Err(Error::InvalidParameter(format!("psi must lie in [0, 1), got {psi}")));
    }
    let mut out = sim_iso_coeffs(spectrum, n_times, a00_var, rng)?;
    if psi == 0.0 {
        return Ok(out);
    }
    let (a, b) = (psi.sqrt(), (1.0 - psi).sqrt());
    let l_max = spectrum.l_sim();
    let factors = par::map_range(l_max + 1, |l| {
        let mut r = rng.stream(StreamKind::CommonFactor, l as u64);
        let sd = (0.5 * spectrum.c(l)).sqrt();
        (0..n_times)
            .map(|_| (sd * normal(&mut r), sd * normal(&mut r)))
            .collect::<Vec<_>>()
    });
    for (l, z) in factors.iter().enumerate().skip(1) {
        for k in l * l..(l + 1) * (l + 1) {
            let offset = k - l * l;
            let col = out.column_at_mut(k);
            for (t, v) in col.iter_mut().enumerate() {
                // coordinates: u = Re a, v = -Im a
                let f = match offset {
                    0 => std::f64::consts::SQRT_2 * z[t].0,
                    o if o % 2 == 1 => z[t].0,
                    _ => -z[t].1,
                };
                *v = a * f + b * *v;
            }
        }
    }
    Ok(out)
}

/// Fields with per-degree damping `l^-epsilon` over ocean cells.
///
/// `Y(s) = sum_l g_l(s) sum_m a_{lm} S_{lm}(s)` with `g_l = 1` on land, and
/// `g_0 = 1` everywhere.
pub fn sim_aniso_landsea(
    spectrum: &Spectrum,
    epsilon: f64,
    mask: &MaskRaster,
    synth: &Synthesizer,
    n_times: usize,
    a00_var: f64,
    rng: &RngSpec,
) -> Result<FieldSeries> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    if !mask.matches(synth.grid()) {
        let (r, c) = mask.shape();
        return Err(Error::Dimension(format!(
            "mask {r}x{c} does not match grid {}x{}",
            synth.grid().n_lat(),
            synth.grid().n_lon()
        )));
    }
    let coeffs = sim_iso_coeffs(spectrum, n_times, a00_var, rng)?;
    let iso = synth.synthesize(&coeffs)?;
    if epsilon == 0.0 || mask.cells().iter().all(|&land| land) {
        return Ok(iso);
    }
    let mut damped = coeffs;
    for l in 1..=damped.l_max() {
        let g = (l as f64).powf(-epsilon);
        for k in l * l..(l + 1) * (l + 1) {
            damped.column_at_mut(k).iter_mut().for_each(|v| *v *= g);
        }
    }
    let ocean = synth.synthesize(&damped)?;
    let n_cells = synth.grid().n_cells();
    let mut values = iso.into_values();
    for (i, v) in values.iter_mut().enumerate() {
        if !mask.is_land(i % n_cells) {
            *v = ocean.values()[i];
        }
    }
    FieldSeries::new(synth.grid().clone(), n_times, values)
}

/// Convenience wrapper building the synthesizer for `grid`.
pub fn sim_aniso_landsea_on(
    spectrum: &Spectrum,
    epsilon: f64,
    mask: &MaskRaster,
    grid: &Grid,
    n_times: usize,
    a00_var: f64,
    rng: &RngSpec,
) -> Result<FieldSeries> {
    let synth = Synthesizer::new(grid, spectrum.l_sim());
    sim_aniso_landsea(spectrum, epsilon, mask, &synth, n_times, a00_var, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, GridConvention};
    use crate::harmonics::{real_index, Part};
    use crate::transform::synthesize;

    fn mean_var(x: &[f64]) -> (f64, f64) {
        let n = x.len() as f64;
        let m = x.iter().sum::<f64>() / n;
        (m, x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n - 1.0))
    }

    fn lag1(x: &[f64]) -> f64 {
        let (m, _) = mean_var(x);
        let num: f64 = x.windows(2).map(|w| (w[0] - m) * (w[1] - m)).sum();
        let den: f64 = x.iter().map(|v| (v - m) * (v - m)).sum();
        num / den
    }

    fn corr(x: &[f64], y: &[f64]) -> f64 {
        let (mx, vx) = mean_var(x);
        let (my, vy) = mean_var(y);
        let c: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum::<f64>()
            / (x.len() as f64 - 1.0);
        c / (vx * vy).sqrt()
    }

    #[test]
    fn spectrum_values() {
        let s = Spectrum::c_l2(10);
        assert!((s.c(1) - 0.5).abs() < 1e-15);
        let s3 = Spectrum::c_l3(10);
        assert!((s3.c(2) - 5f64.powf(-1.5)).abs() < 1e-15);
        assert!(legendre_matern_spectrum(0.0, 1.0, 1.0, 3).is_err());
        assert!(legendre_matern_spectrum(1.0, -1.0, 1.0, 3).is_err());
        for l in 1..10 {
            assert!(s.c(l + 1) < s.c(l));
        }
        // order 1/l^2 and 1/l^3
        let big = Spectrum::c_l2(2000);
        assert!((big.c(2000) * 2000f64.powi(2) - 1.0).abs() < 1e-5);
        let big3 = Spectrum::c_l3(2000);
        assert!((big3.c(2000) * 2000f64.powi(3) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn matern_covariance() {
        let s = Spectrum::c_l2(150);
        let total: f64 = s.values().iter().sum();
        assert!((legendre_matern_cov(&s, 0.0) - total).abs() < 1e-12);
        // even-degree partial sum with P_l(0) = (-1)^(l/2) (l-1)!!/l!!
        let mut brute = 0.0;
        let mut p0 = 1.0;
        for l in (0..=150).step_by(2) {
            if l > 0 {
                p0 *= -((l - 1) as f64) / l as f64;
            }
            brute += s.c(l) * p0;
        }
        let v = legendre_matern_cov(&s, std::f64::consts::FRAC_PI_2);
        assert!((v - brute).abs() < 1e-13);
        assert!((v - 0.916_314_142_325_198_2).abs() < 1e-12);
        for i in 0..=200 {
            let th = std::f64::consts::PI * i as f64 / 200.0;
            assert!(legendre_matern_cov(&s, th) <= total + 1e-12);
        }
        assert!(s.truncation_bound() > 0.0 && s.truncation_bound() < 0.01);
    }

    #[test]
    fn schedule() {
        let s = Ar1Schedule::decaying(16);
        assert_eq!(s.rho(0), 0.99);
        assert!((s.rho(4) - 0.45).abs() < 1e-15);
        assert!(Ar1Schedule::new(vec![0.5, 1.0]).is_err());
        assert!(Ar1Schedule::constant(-0.3, 4).is_ok());
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        use rand::Rng;
        let a = RngSpec::new(7);
        let x: u64 = a.stream(StreamKind::Coefficients, 3).random();
        let y: u64 = a.stream(StreamKind::Coefficients, 3).random();
        let z: u64 = a.stream(StreamKind::Coefficients, 4).random();
        let w: u64 = a.replicate(1).stream(StreamKind::Coefficients, 3).random();
        let v: u64 = a.stream(StreamKind::Chi, 3).random();
        assert_eq!(x, y);
        assert!(x != z && x != w && x != v);
    }

    #[test]
    fn iso_moments() {
        let s = Spectrum::c_l2(6);
        let t = 4000;
        let c = sim_iso_coeffs(&s, t, DEFAULT_A00_VAR, &RngSpec::new(11)).unwrap();
        let tol = |v: f64| 4.0 * v * (2.0 / t as f64).sqrt();
        let (_, v00) = mean_var(c.column(0, 0, Part::Cos));
        assert!((v00 - 1.5).abs() < tol(1.5), "{v00}");
        for l in 1..=6 {
            let cl = s.c(l);
            let (_, v0) = mean_var(c.column(l, 0, Part::Cos));
            assert!((v0 - cl).abs() < tol(cl));
            for m in 1..=l {
                for part in [Part::Cos, Part::Sin] {
                    let (_, v) = mean_var(c.column(l, m, part));
                    assert!((v - cl / 2.0).abs() < tol(cl / 2.0));
                }
            }
        }
        let bound = 4.0 / (t as f64).sqrt();
        assert!(corr(c.column(3, 1, Part::Cos), c.column(3, 2, Part::Cos)).abs() < bound);
        assert!(corr(c.column(2, 0, Part::Cos), c.column(5, 5, Part::Sin)).abs() < bound);
        let again = sim_iso_coeffs(&s, t, DEFAULT_A00_VAR, &RngSpec::new(11)).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn ar1_autocorrelation_and_stationarity() {
        let s = Spectrum::c_l2(4);
        let sched = Ar1Schedule::decaying(4);
        let t = 20000;
        let c = sim_ar1_coeffs(&s, &sched, t, &RngSpec::new(5)).unwrap();
        let bound = 4.0 / (t as f64).sqrt();
        for l in 1..=4 {
            for m in 0..=l {
                let r = lag1(c.column(l, m, Part::Cos));
                assert!((r - sched.rho(l)).abs() < bound, "l={l} m={m} r={r}");
            }
        }
        assert!((lag1(c.column(0, 0, Part::Cos)) - 0.99).abs() < 0.02);
        // halves share the marginal variance
        let col = c.column(2, 1, Part::Sin);
        let (_, v1) = mean_var(&col[..t / 2]);
        let (_, v2) = mean_var(&col[t / 2..]);
        let target = s.c(2) / 2.0 / (1.0 - sched.rho(2).powi(2));
        assert!((v1 - target).abs() < 0.1 * target && (v2 - target).abs() < 0.1 * target);
    }

    #[test]
    fn ar1_zero_rho_matches_iso_law() {
        let s = Spectrum::c_l2(3);
        let sched = Ar1Schedule::constant(0.0, 3).unwrap();
        let c = sim_ar1_coeffs(&s, &sched, 3000, &RngSpec::new(1)).unwrap();
        let (_, v) = mean_var(c.column(3, 2, Part::Cos));
        assert!((v - s.c(3) / 2.0).abs() < 0.15 * s.c(3) / 2.0);
        assert!(lag1(c.column(3, 2, Part::Cos)).abs() < 4.0 / 3000f64.sqrt());
    }

    #[test]
    fn correlated_orders() {
        let s = Spectrum::c_l2(5);
        let rng = RngSpec::new(9);
        let iso = sim_iso_coeffs(&s, 50, 1.5, &rng).unwrap();
        assert_eq!(sim_aniso_corr(&s, 0.0, 50, 1.5, &rng).unwrap(), iso);
        assert!(sim_aniso_corr(&s, 1.0, 50, 1.5, &rng).is_err());

        let t = 6000;
        let psi = 0.4;
        let c = sim_aniso_corr(&s, psi, t, 1.5, &rng).unwrap();
        let bound = 4.0 / (t as f64).sqrt();
        // Re parts of orders 1 and 2 share correlation psi, as do Im parts
        let r = corr(c.column(4, 1, Part::Cos), c.column(4, 2, Part::Cos));
        assert!((r - psi).abs() < bound, "{r}");
        let r = corr(c.column(4, 1, Part::Sin), c.column(4, 3, Part::Sin));
        assert!((r - psi).abs() < bound, "{r}");
        // m = 0 against the real part of m = 1: E[a0 u1] = psi C_l / sqrt(2)
        let r = corr(c.column(4, 0, Part::Cos), c.column(4, 1, Part::Cos));
        assert!((r - psi).abs() < bound, "{r}");
        let (_, v0) = mean_var(c.column(4, 0, Part::Cos));
        assert!((v0 - s.c(4)).abs() < 0.1 * s.c(4));
        // no cross-degree coupling
        assert!(corr(c.column(3, 1, Part::Cos), c.column(4, 1, Part::Cos)).abs() < bound);
    }

    #[test]
    fn landsea_limits() {
        let g = make_grid(8, 16, GridConvention::CellCenters).unwrap();
        let s = Spectrum::c_l2(6);
        let rng = RngSpec::new(3);
        let iso = synthesize(&sim_iso_coeffs(&s, 4, 1.5, &rng).unwrap(), &g).unwrap();
        let half = MaskRaster::eastern_hemisphere(&g);
        let land = MaskRaster::filled(&g, true);
        assert_eq!(sim_aniso_landsea_on(&s, 0.0, &half, &g, 4, 1.5, &rng).unwrap(), iso);
        assert_eq!(sim_aniso_landsea_on(&s, 0.7, &land, &g, 4, 1.5, &rng).unwrap(), iso);

        let aniso = sim_aniso_landsea_on(&s, 0.7, &half, &g, 4, 1.5, &rng).unwrap();
        let mut land_same = true;
        let mut ocean_differs = false;
        for t in 0..4 {
            for cell in 0..g.n_cells() {
                let same = aniso.at(t, cell) == iso.at(t, cell);
                if half.is_land(cell) {
                    land_same &= same;
                } else {
                    ocean_differs |= !same;
                }
            }
        }
        assert!(land_same && ocean_differs);

        let other = make_grid(8, 12, GridConvention::CellCenters).unwrap();
        let bad = MaskRaster::filled(&other, false);
        assert!(sim_aniso_landsea_on(&s, 0.1, &bad, &g, 4, 1.5, &rng).is_err());
    }

    #[test]
    fn field_variance_matches_spectrum_sum() {
        let g = make_grid(10, 20, GridConvention::CellCenters).unwrap();
        let s = Spectrum::c_l2(30);
        let t = 3000;
        let c = sim_iso_coeffs(&s, t, s.c(0), &RngSpec::new(21)).unwrap();
        let f = synthesize(&c, &g).unwrap();
        let total: f64 = s.values().iter().sum();
        let tol = 4.0 * total * (2.0 / t as f64).sqrt();
        for cell in (0..g.n_cells()).step_by(10) {
            let (_, v) = mean_var(&f.cell_series(cell));
            assert!((v - total).abs() < tol, "cell {cell}: {v} vs {total}");
        }
        assert_eq!(c.column(0, 0, Part::Cos).len(), t);
        assert_eq!(real_index(1, 1, Part::Sin), 3);
    }
}
