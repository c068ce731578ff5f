//! Synthesis of fields from harmonic coefficients and weighted least-squares
//! analysis back to coefficients, plus the truncation-degree rules.
//!
//! Two analysis routes exist. The dense route factorizes `W^{1/2} S` for the
//! full real basis and is the reference. The fast route uses the fact that on a
//! grid with equispaced longitudes and `2 l_reg < n_lon` the weighted normal
//! matrix is block diagonal in the order `m`: each row is Fourier transformed
//! over longitude and one small latitude problem per order is solved. Both
//! routes minimize the same objective.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{quadrature_weights, Grid};
use crate::harmonics::{build_basis, real_index, real_layout, HarmonicIndex, LegendreTable, Part};
use crate::par;

/// Condition ratios below this are treated as numerically singular.
pub const DEGENERACY_FLOOR: f64 = 1e-13;

/// Default condition-ratio threshold for choosing `l_reg`.
pub const DEFAULT_CONDITION_THRESHOLD: f64 = 0.001;

/// Default per-degree correlation cutoff for choosing `l_corr`.
pub const DEFAULT_CORRELATION_CUTOFF: f64 = 0.999;

const TIME_CHUNK: usize = 32;

/// Harmonic coefficients over time in real coordinates.
///
/// Stored as a `T x (l_max+1)^2` column-major matrix; column order follows
/// [`real_layout`]. Complex values are reconstructed on demand and always
/// satisfy `a_{l,-m} = (-1)^m conj(a_{l,m})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeries {
    l_max: usize,
    data: DMatrix<f64>,
}

impl CoeffSeries {
    pub fn zeros(l_max: usize, n_times: usize) -> Self {
        CoeffSeries {
            l_max,
            data: DMatrix::zeros(n_times, HarmonicIndex::count(l_max)),
        }
    }

    pub fn from_real(l_max: usize, data: DMatrix<f64>) -> Result<Self> {
        if data.ncols() != HarmonicIndex::count(l_max) {
            return Err(Error::Dimension(format!(
                "{} columns given, degree {l_max} needs {}",
                data.ncols(),
                HarmonicIndex::count(l_max)
            )));
        }
        Ok(CoeffSeries { l_max, data })
    }

    /// Builds a series from complex values for every `(l, m, t)`, checking that
    /// negative orders are the Hermitian partners of positive ones.
    pub fn from_complex<F>(l_max: usize, n_times: usize, value: F) -> Result<Self>
    where
        F: Fn(usize, i64, usize) -> Complex64,
    {
        let mut out = CoeffSeries::zeros(l_max, n_times);
        for l in 0..=l_max {
            for m in 0..=l as i64 {
                for t in 0..n_times {
                    let a = value(l, m, t);
                    let tol = 1e-10 * a.norm().max(1.0);
                    if m == 0 && a.im.abs() > tol {
                        return Err(Error::SymmetryViolation { l, m, t });
                    }
                    if m > 0 {
                        let partner = value(l, -m, t);
                        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                        if (partner - a.conj() * sign).norm() > tol {
                            return Err(Error::SymmetryViolation { l, m: -m, t });
                        }
                    }
                    out.set(l, m as usize, t, a)?;
                }
            }
        }
        Ok(out)
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn n_times(&self) -> usize {
        self.data.nrows()
    }

    pub fn n_coeffs(&self) -> usize {
        self.data.ncols()
    }

    pub fn real(&self) -> &DMatrix<f64> {
        &self.data
    }

    pub fn real_mut(&mut self) -> &mut DMatrix<f64> {
        &mut self.data
    }

    pub fn into_real(self) -> DMatrix<f64> {
        self.data
    }

    /// Time series of one real coordinate.
    pub fn column(&self, l: usize, m: usize, part: Part) -> &[f64] {
        self.column_at(real_index(l, m, part))
    }

    pub fn column_at(&self, k: usize) -> &[f64] {
        let n = self.n_times();
        &self.data.as_slice()[k * n..(k + 1) * n]
    }

    pub fn column_at_mut(&mut self, k: usize) -> &mut [f64] {
        let n = self.n_times();
        &mut self.data.as_mut_slice()[k * n..(k + 1) * n]
    }

    /// Complex coefficient `a_{l,m,t}` for any `-l <= m <= l`.
    pub fn get(&self, l: usize, m: i64, t: usize) -> Complex64 {
        let am = m.unsigned_abs() as usize;
        assert!(am <= l && l <= self.l_max, "index (l={l}, m={m}) out of range");
        if am == 0 {
            return Complex64::new(self.data[(t, real_index(l, 0, Part::Cos))], 0.0);
        }
        let u = self.data[(t, real_index(l, am, Part::Cos))];
        let v = self.data[(t, real_index(l, am, Part::Sin))];
        let a = Complex64::new(u, -v);
        if m > 0 {
            a
        } else if am.is_multiple_of(2) {
            a.conj()
        } else {
            -a.conj()
        }
    }

    /// Sets `a_{l,m,t}` for `m >= 0`; the negative order follows by symmetry.
    pub fn set(&mut self, l: usize, m: usize, t: usize, value: Complex64) -> Result<()> {
        if m == 0 {
            if value.im.abs() > 1e-10 * value.norm().max(1.0) {
                return Err(Error::SymmetryViolation { l, m: 0, t });
            }
            self.data[(t, real_index(l, 0, Part::Cos))] = value.re;
        } else {
            self.data[(t, real_index(l, m, Part::Cos))] = value.re;
            self.data[(t, real_index(l, m, Part::Sin))] = -value.im;
        }
        Ok(())
    }

    /// Coefficients with degree `<= l`.
    pub fn truncated(&self, l: usize) -> Result<CoeffSeries> {
        if l > self.l_max {
            return Err(Error::Dimension(format!(
                "cannot truncate degree {} series to {l}",
                self.l_max
            )));
        }
        let p = HarmonicIndex::count(l);
        Ok(CoeffSeries {
            l_max: l,
            data: self.data.columns(0, p).clone_owned(),
        })
    }

    /// Rows `start..end` in time.
    pub fn time_range(&self, start: usize, end: usize) -> CoeffSeries {
        CoeffSeries {
            l_max: self.l_max,
            data: self.data.rows(start, end - start).clone_owned(),
        }
    }
}

/// Real field values over time, stored time-major: `values[t * n_cells + cell]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSeries {
    grid: Grid,
    n_times: usize,
    values: Vec<f64>,
}

impl FieldSeries {
    pub fn new(grid: Grid, n_times: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != n_times * grid.n_cells() {
            return Err(Error::Dimension(format!(
                "{} values for {n_times} times on {} cells",
                values.len(),
                grid.n_cells()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "non-finite field value at t={}, cell={}",
                pos / grid.n_cells(),
                pos % grid.n_cells()
            )));
        }
        Ok(FieldSeries {
            grid,
            n_times,
            values,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn n_times(&self) -> usize {
        self.n_times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn at(&self, t: usize, cell: usize) -> f64 {
        self.values[t * self.grid.n_cells() + cell]
    }

    pub fn time_slice(&self, t: usize) -> &[f64] {
        let n = self.grid.n_cells();
        &self.values[t * n..(t + 1) * n]
    }

    pub fn cell_series(&self, cell: usize) -> Vec<f64> {
        let n = self.grid.n_cells();
        (0..self.n_times).map(|t| self.values[t * n + cell]).collect()
    }
}

/// Evaluates the truncated harmonic expansion on a grid.
///
/// Orders above the Nyquist limit of the longitude sampling are folded onto
/// their aliases; the result equals the direct double sum at every cell.
pub struct Synthesizer {
    grid: Grid,
    l_max: usize,
    /// Per order `m`: `(l_max - m + 1) x n_lat`, row `l - m` holds `P~_{l,m}`.
    legendre: Vec<DMatrix<f64>>,
    phase: Vec<Complex64>,
    ifft: Arc<dyn Fft<f64>>,
}

impl Synthesizer {
    pub fn new(grid: &Grid, l_max: usize) -> Self {
        let table = LegendreTable::new(l_max, grid.colatitudes());
        let n_lat = grid.n_lat();
        let legendre = (0..=l_max)
            .map(|m| {
                let k = l_max - m + 1;
                // order_block is row-major k x n_lat
                DMatrix::from_row_slice(k, n_lat, table.order_block(m))
            })
            .collect();
        let phase = (0..=l_max)
            .map(|m| Complex64::from_polar(1.0, m as f64 * grid.lon_offset()))
            .collect();
        let ifft = FftPlanner::new().plan_fft_inverse(grid.n_lon());
        Synthesizer {
            grid: grid.clone(),
            l_max,
            legendre,
            phase,
            ifft,
        }
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn synthesize(&self, coeffs: &CoeffSeries) -> Result<FieldSeries> {
        let lc = coeffs.l_max();
        if lc > self.l_max {
            return Err(Error::Dimension(format!(
                "synthesizer built for degree {}, coefficients have degree {lc}",
                self.l_max
            )));
        }
        let n_times = coeffs.n_times();
        let n_cells = self.grid.n_cells();
        let n_chunks = n_times.div_ceil(TIME_CHUNK);
        let chunks = par::map_range(n_chunks, |c| {
            let t0 = c * TIME_CHUNK;
            let t1 = (t0 + TIME_CHUNK).min(n_times);
            self.synthesize_chunk(coeffs, t0, t1)
        });
        let mut values = Vec::with_capacity(n_times * n_cells);
        for chunk in chunks {
            values.extend(chunk?);
        }
        FieldSeries::new(self.grid.clone(), n_times, values)
    }

    fn synthesize_chunk(&self, coeffs: &CoeffSeries, t0: usize, t1: usize) -> Result<Vec<f64>> {
        let lc = coeffs.l_max();
        let tc = t1 - t0;
        let n_lat = self.grid.n_lat();
        let n_lon = self.grid.n_lon();
        let mut spectrum = vec![Complex64::new(0.0, 0.0); tc * n_lat * n_lon];

        for m in 0..=lc {
            let k = lc - m + 1;
            let p = self.legendre[m].rows(0, k);
            let gather = |part: Part| {
                DMatrix::from_fn(tc, k, |tt, dl| coeffs.column(m + dl, m, part)[t0 + tt])
            };
            // (tc x k) * (k x n_lat)
            let gu = gather(Part::Cos) * p;
            let gv = if m > 0 {
                Some(gather(Part::Sin) * p)
            } else {
                None
            };
            let bin = m % n_lon;
            let mirror = (n_lon - bin) % n_lon;
            for i in 0..n_lat {
                for tt in 0..tc {
                    let base = (tt * n_lat + i) * n_lon;
                    match &gv {
                        None => spectrum[base] += Complex64::new(gu[(tt, i)], 0.0),
                        Some(gv) => {
                            let h = Complex64::new(gu[(tt, i)], -gv[(tt, i)]) * self.phase[m];
                            spectrum[base + bin] += h;
                            spectrum[base + mirror] += h.conj();
                        }
                    }
                }
            }
        }

        let mut out = vec![0.0; tc * n_lat * n_lon];
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.ifft.get_inplace_scratch_len()];
        for (row, chunk) in spectrum.chunks_mut(n_lon).enumerate() {
            self.ifft.process_with_scratch(chunk, &mut scratch);
            let scale = chunk.iter().fold(1.0f64, |a, z| a.max(z.re.abs()));
            let residual = chunk.iter().fold(0.0f64, |a, z| a.max(z.im.abs()));
            if residual > 1e-10 * scale {
                return Err(Error::Domain(format!(
                    "synthesized field has imaginary residual {residual:.3e}"
                )));
            }
            for (dst, z) in out[row * n_lon..(row + 1) * n_lon].iter_mut().zip(chunk.iter()) {
                *dst = z.re;
            }
        }
        Ok(out)
    }
}

/// Synthesizes `coeffs` on `grid`.
pub fn synthesize(coeffs: &CoeffSeries, grid: &Grid) -> Result<FieldSeries> {
    Synthesizer::new(grid, coeffs.l_max()).synthesize(coeffs)
}

/// Reference synthesis by a dense product with the real basis.
pub fn synthesize_dense(coeffs: &CoeffSeries, grid: &Grid) -> Result<FieldSeries> {
    let basis = build_basis(grid, coeffs.l_max())?;
    // (T x p) * (p x cells)
    let fields = coeffs.real() * basis.values.transpose();
    let n_times = coeffs.n_times();
    let values = (0..n_times)
        .flat_map(|t| fields.row(t).iter().copied().collect::<Vec<_>>())
        .collect();
    FieldSeries::new(grid.clone(), n_times, values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WlsMethod {
    /// Fast route when the grid allows it, dense otherwise.
    Auto,
    Fast,
    Dense,
}

enum Solver {
    Fast {
        /// Per order `m`: `(l_reg - m + 1) x n_lat` solution operator mapping
        /// the order-`m` Fourier coefficient of each row to complex `a_{lm}`.
        operators: Vec<DMatrix<f64>>,
        phase: Vec<Complex64>,
        fft: Arc<dyn Fft<f64>>,
    },
    Dense {
        q: DMatrix<f64>,
        r: DMatrix<f64>,
        sqrt_w: Vec<f64>,
    },
}

/// Weighted least-squares projection of fields onto harmonics up to `l_reg`.
///
/// The factorization is computed once and shared by every time slice.
pub struct WlsAnalyzer {
    grid: Grid,
    l_reg: usize,
    condition_ratio: f64,
    solver: Solver,
}

impl WlsAnalyzer {
    pub fn new(grid: &Grid, l_reg: usize) -> Result<Self> {
        Self::with_method(grid, l_reg, WlsMethod::Auto)
    }

    pub fn with_method(grid: &Grid, l_reg: usize, method: WlsMethod) -> Result<Self> {
        let p = HarmonicIndex::count(l_reg);
        if p > grid.n_cells() {
            return Err(Error::Dimension(format!(
                "(l_reg+1)^2 = {p} exceeds {} grid cells",
                grid.n_cells()
            )));
        }
        let fast_ok = fast_path_applies(grid, l_reg);
        let use_fast = match method {
            WlsMethod::Auto => fast_ok,
            WlsMethod::Fast if !fast_ok => {
                return Err(Error::InvalidParameter(format!(
                    "fast analysis needs 2 l_reg < n_lon, got l_reg={l_reg}, n_lon={}",
                    grid.n_lon()
                )))
            }
            WlsMethod::Fast => true,
            WlsMethod::Dense => false,
        };
        let (solver, condition_ratio) = if use_fast {
            build_fast(grid, l_reg)?
        } else {
            build_dense(grid, l_reg)?
        };
        if condition_ratio < DEGENERACY_FLOOR {
            return Err(Error::RankDeficient {
                l_max: l_reg,
                ratio: condition_ratio,
            });
        }
        Ok(WlsAnalyzer {
            grid: grid.clone(),
            l_reg,
            condition_ratio,
            solver,
        })
    }

    pub fn l_reg(&self) -> usize {
        self.l_reg
    }

    /// Smallest over largest eigenvalue of `S' W S`.
    pub fn condition_ratio(&self) -> f64 {
        self.condition_ratio
    }

    pub fn is_fast(&self) -> bool {
        matches!(self.solver, Solver::Fast { .. })
    }

    pub fn analyze(&self, fields: &FieldSeries) -> Result<CoeffSeries> {
        let g = fields.grid();
        if g.n_lat() != self.grid.n_lat()
            || g.n_lon() != self.grid.n_lon()
            || g.convention() != self.grid.convention()
        {
            return Err(Error::Dimension(format!(
                "field grid {}x{} ({}) differs from analyzer grid {}x{} ({})",
                g.n_lat(),
                g.n_lon(),
                g.convention(),
                self.grid.n_lat(),
                self.grid.n_lon(),
                self.grid.convention()
            )));
        }
        match &self.solver {
            Solver::Fast {
                operators,
                phase,
                fft,
            } => Ok(self.analyze_fast(fields, operators, phase, fft.as_ref())),
            Solver::Dense { q, r, sqrt_w } => self.analyze_dense(fields, q, r, sqrt_w),
        }
    }

    fn analyze_fast(
        &self,
        fields: &FieldSeries,
        operators: &[DMatrix<f64>],
        phase: &[Complex64],
        fft: &dyn Fft<f64>,
    ) -> CoeffSeries {
        let n_times = fields.n_times();
        let n_lat = self.grid.n_lat();
        let n_lon = self.grid.n_lon();
        let l_reg = self.l_reg;
        let p = HarmonicIndex::count(l_reg);
        let n_chunks = n_times.div_ceil(TIME_CHUNK);

        let chunks = par::map_range(n_chunks, |c| {
            let t0 = c * TIME_CHUNK;
            let t1 = (t0 + TIME_CHUNK).min(n_times);
            let tc = t1 - t0;
            let mut spectra = Vec::with_capacity(tc * n_lat * n_lon);
            for t in t0..t1 {
                spectra.extend(fields.time_slice(t).iter().map(|&v| Complex64::new(v, 0.0)));
            }
            let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
            for row in spectra.chunks_mut(n_lon) {
                fft.process_with_scratch(row, &mut scratch);
            }
            let inv_n = 1.0 / n_lon as f64;
            // tc x p block of this chunk
            let mut block = DMatrix::<f64>::zeros(tc, p);
            for m in 0..=l_reg {
                let rot = phase[m].conj() * inv_n;
                let target = DMatrix::from_fn(n_lat, 2 * tc, |i, col| {
                    let tt = col % tc;
                    let z = spectra[(tt * n_lat + i) * n_lon + m] * rot;
                    if col < tc {
                        z.re
                    } else {
                        z.im
                    }
                });
                let sol = &operators[m] * target;
                for dl in 0..sol.nrows() {
                    let l = m + dl;
                    for tt in 0..tc {
                        if m == 0 {
                            block[(tt, real_index(l, 0, Part::Cos))] = sol[(dl, tt)];
                        } else {
                            block[(tt, real_index(l, m, Part::Cos))] = sol[(dl, tt)];
                            block[(tt, real_index(l, m, Part::Sin))] = -sol[(dl, tc + tt)];
                        }
                    }
                }
            }
            block
        });

        let mut out = CoeffSeries::zeros(l_reg, n_times);
        for (c, block) in chunks.into_iter().enumerate() {
            let t0 = c * TIME_CHUNK;
            out.real_mut().rows_mut(t0, block.nrows()).copy_from(&block);
        }
        out
    }

    fn analyze_dense(
        &self,
        fields: &FieldSeries,
        q: &DMatrix<f64>,
        r: &DMatrix<f64>,
        sqrt_w: &[f64],
    ) -> Result<CoeffSeries> {
        let n_cells = self.grid.n_cells();
        let n_times = fields.n_times();
        let rhs = DMatrix::from_fn(n_cells, n_times, |c, t| sqrt_w[c] * fields.at(t, c));
        let qtb = q.transpose() * rhs;
        let x = r
            .solve_upper_triangular(&qtb)
            .ok_or(Error::RankDeficient {
                l_max: self.l_reg,
                ratio: self.condition_ratio,
            })?;
        CoeffSeries::from_real(self.l_reg, x.transpose())
    }
}

/// Block-diagonal structure in `m` is exact when `m + m' < n_lon` for all orders.
fn fast_path_applies(grid: &Grid, l_max: usize) -> bool {
    2 * l_max < grid.n_lon()
}

/// Per-order latitude design `sqrt(w_i) P~_{l,m}(theta_i)`, `n_lat x (l_max - m + 1)`.
fn order_designs(grid: &Grid, l_max: usize) -> Vec<DMatrix<f64>> {
    let table = LegendreTable::new(l_max, grid.colatitudes());
    let sqrt_w: Vec<f64> = grid.row_weights().iter().map(|w| w.sqrt()).collect();
    (0..=l_max)
        .map(|m| {
            DMatrix::from_fn(grid.n_lat(), l_max - m + 1, |i, dl| {
                sqrt_w[i] * table.get(m + dl, m, i)
            })
        })
        .collect()
}

fn build_fast(grid: &Grid, l_reg: usize) -> Result<(Solver, f64)> {
    let designs = order_designs(grid, l_reg);
    let n_lon = grid.n_lon() as f64;
    let sqrt_w: Vec<f64> = grid.row_weights().iter().map(|w| w.sqrt()).collect();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    let mut operators = Vec::with_capacity(designs.len());
    for (m, d) in designs.into_iter().enumerate() {
        let gram = d.transpose() * &d * n_lon;
        let eig = gram.symmetric_eigenvalues();
        lo = lo.min(eig.min());
        hi = hi.max(eig.max());
        if d.nrows() < d.ncols() {
            return Err(Error::RankDeficient {
                l_max: l_reg,
                ratio: 0.0,
            });
        }
        let qr = d.qr();
        let (q, r) = (qr.q(), qr.r());
        // R^{-1} Q' diag(sqrt w)
        let mut qt = q.transpose();
        for (i, mut col) in qt.column_iter_mut().enumerate() {
            col *= sqrt_w[i];
        }
        let op = r.solve_upper_triangular(&qt).ok_or(Error::RankDeficient {
            l_max: l_reg,
            ratio: 0.0,
        })?;
        debug_assert_eq!(op.nrows(), l_reg - m + 1);
        operators.push(op);
    }
    let ratio = if hi > 0.0 { lo.max(0.0) / hi } else { 0.0 };
    let phase = (0..=l_reg)
        .map(|m| Complex64::from_polar(1.0, m as f64 * grid.lon_offset()))
        .collect();
    let fft = FftPlanner::new().plan_fft_forward(grid.n_lon());
    Ok((
        Solver::Fast {
            operators,
            phase,
            fft,
        },
        ratio,
    ))
}

/// Real Gram rescaled so it is unitarily similar to the complex `S^H W S`.
fn dense_complex_gram(basis: &DMatrix<f64>, w: &[f64], l_max: usize) -> DMatrix<f64> {
    let layout = real_layout(l_max);
    let mut weighted = basis.clone();
    for (c, mut col) in weighted.column_iter_mut().enumerate() {
        let scale = if layout[c].m == 0 { 1.0 } else { std::f64::consts::FRAC_1_SQRT_2 };
        for (i, v) in col.iter_mut().enumerate() {
            *v *= w[i].sqrt() * scale;
        }
    }
    weighted.transpose() * weighted
}

fn build_dense(grid: &Grid, l_reg: usize) -> Result<(Solver, f64)> {
    let basis = build_basis(grid, l_reg)?;
    let w = quadrature_weights(grid).w;
    let gram = dense_complex_gram(&basis.values, &w, l_reg);
    let eig = gram.symmetric_eigenvalues();
    let ratio = eig.min().max(0.0) / eig.max();
    let sqrt_w: Vec<f64> = w.iter().map(|x| x.sqrt()).collect();
    let mut design = basis.values;
    for (i, mut row) in design.row_iter_mut().enumerate() {
        row *= sqrt_w[i];
    }
    let qr = design.qr();
    Ok((
        Solver::Dense {
            q: qr.q(),
            r: qr.r(),
            sqrt_w,
        },
        ratio,
    ))
}

/// WLS coefficients for every time slice, truncated at `l_reg`.
pub fn analyze_wls(fields: &FieldSeries, l_reg: usize) -> Result<CoeffSeries> {
    WlsAnalyzer::new(fields.grid(), l_reg)?.analyze(fields)
}

/// Outcome of the truncation-degree rules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncationReport {
    pub l_reg: usize,
    /// Condition ratio of `S' W S` for each scanned degree, indexed by degree.
    pub condition_numbers: Vec<f64>,
    pub l_corr: Option<usize>,
    /// Per-degree correlation diagnostic, indexed by degree.
    pub r_l: Vec<f64>,
}

/// Condition ratios `lambda_min / lambda_max` of `S' W S` for degrees
/// `0..`, stopping after the first ratio at or below `threshold` (ratios are
/// nonincreasing in the degree by eigenvalue interlacing) or at the grid-size
/// bound `(l+1)^2 <= n_cells`.
pub fn condition_scan(grid: &Grid, threshold: f64) -> Vec<f64> {
    let mut bound = 0;
    while HarmonicIndex::count(bound + 1) <= grid.n_cells() {
        bound += 1;
    }
    let fast_cap = bound.min((grid.n_lon() - 1) / 2);

    let n_lon = grid.n_lon() as f64;
    let grams: Vec<DMatrix<f64>> = order_designs(grid, fast_cap)
        .into_iter()
        .map(|d| d.transpose() * &d * n_lon)
        .collect();

    let mut ratios = Vec::new();
    for l in 0..=fast_cap {
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for (m, gram) in grams.iter().enumerate().take(l + 1) {
            let k = l - m + 1;
            let eig = gram.view((0, 0), (k, k)).clone_owned().symmetric_eigenvalues();
            lo = lo.min(eig.min());
            hi = hi.max(eig.max());
        }
        let ratio = lo.max(0.0) / hi;
        ratios.push(ratio);
        if ratio <= threshold {
            return ratios;
        }
    }

    // Past the longitude Nyquist limit the order blocks couple.
    for l in (fast_cap + 1)..=bound {
        let ratio = if grid.n_lon().is_multiple_of(2) && 2 * l >= grid.n_lon() {
            // S_{l, n/2} and S_{l, -n/2} coincide on the grid.
            0.0
        } else {
            let basis = match build_basis(grid, l) {
                Ok(b) => b,
                Err(_) => break,
            };
            let w = quadrature_weights(grid).w;
            let eig = dense_complex_gram(&basis.values, &w, l).symmetric_eigenvalues();
            eig.min().max(0.0) / eig.max()
        };
        ratios.push(ratio);
        if ratio <= threshold {
            break;
        }
    }
    ratios
}

/// Largest degree whose condition ratio exceeds `threshold`.
pub fn select_l_reg(grid: &Grid, threshold: f64) -> TruncationReport {
    let ratios = condition_scan(grid, threshold);
    let l_reg = ratios
        .iter()
        .rposition(|&r| r > threshold)
        .unwrap_or(0);
    TruncationReport {
        l_reg,
        condition_numbers: ratios,
        l_corr: None,
        r_l: Vec::new(),
    }
}

fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx <= 0.0 || syy <= 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Mean over the `2l + 1` real coordinates of degree `l` of the Pearson
/// correlation across time between true and estimated coefficients.
pub fn coeff_correlation(truth: &CoeffSeries, est: &CoeffSeries, l: usize) -> Result<f64> {
    if truth.n_times() != est.n_times() {
        return Err(Error::Dimension(format!(
            "true series has {} times, estimate has {}",
            truth.n_times(),
            est.n_times()
        )));
    }
    if l > truth.l_max() || l > est.l_max() {
        return Err(Error::Dimension(format!(
            "degree {l} not present in both series"
        )));
    }
    let start = l * l;
    let end = (l + 1) * (l + 1);
    let mut sum = 0.0;
    for k in start..end {
        sum += pearson(truth.column_at(k), est.column_at(k)).ok_or_else(|| {
            Error::Degenerate(format!(
                "zero-variance coefficient series {}",
                real_layout(l)[k]
            ))
        })?;
    }
    Ok(sum / (2 * l + 1) as f64)
}

/// Per-degree correlations for `l = 0..=min(l_max)`.
pub fn correlation_profile(truth: &CoeffSeries, est: &CoeffSeries) -> Result<Vec<f64>> {
    let top = truth.l_max().min(est.l_max());
    (0..=top).map(|l| coeff_correlation(truth, est, l)).collect()
}

/// Last degree of the initial run with `r_l > cutoff`; 0 if `r_0` already fails.
pub fn select_l_corr_from_profile(r_l: &[f64], cutoff: f64) -> usize {
    r_l.iter()
        .position(|&r| r <= cutoff)
        .map(|first_bad| first_bad.saturating_sub(1))
        .unwrap_or(r_l.len().saturating_sub(1))
}

/// `l_corr` from true and estimated series.
pub fn select_l_corr(truth: &CoeffSeries, est: &CoeffSeries, cutoff: f64) -> Result<usize> {
    Ok(select_l_corr_from_profile(&correlation_profile(truth, est)?, cutoff))
}
