//! Legendre functions and Schmidt semi-normalized spherical harmonics.
//!
//! The Condon-Shortley phase `(-1)^m` lives inside [`assoc_legendre`]; the
//! harmonic adds only the normalization and the longitude phase:
//!
//! ```text
//! S_{l,m}(theta, phi) = sqrt((l-m)!/(l+m)!) P_{l,m}(cos theta) e^{i m phi},  m >= 0
//! S_{l,m}             = (-1)^m conj(S_{l,-m}),                               m <  0
//! ```
//!
//! With this scaling `sum_m |S_{l,m}|^2 = 1` at every point.
//!
//! Real fields are regressed on a real re-parameterization of the harmonics.
//! For each degree `l` the columns are, in order, `P~_{l,0}` and then for
//! `m = 1..=l` the pair `2 P~_{l,m} cos(m phi)`, `2 P~_{l,m} sin(m phi)`, where
//! `P~` is the normalized Legendre function. A complex coefficient
//! `a_{lm} = u - i v` (m > 0) has real coordinates `(u, v)`, and the
//! Hermitian-symmetric double sum over `m = -l..=l` equals the real sum
//! exactly. For `m = 0` the coefficient is real and equals its coordinate.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HarmonicIndex {
    pub l: usize,
    pub m: i64,
}

impl HarmonicIndex {
    pub fn new(l: usize, m: i64) -> Result<Self> {
        if m.unsigned_abs() as usize > l {
            return Err(Error::Domain(format!("|m| = {} exceeds l = {l}", m.abs())));
        }
        Ok(HarmonicIndex { l, m })
    }

    /// Number of harmonics with degree `<= l_max`.
    pub fn count(l_max: usize) -> usize {
        (l_max + 1) * (l_max + 1)
    }
}

/// Which real coordinate of a complex coefficient a column carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    /// `m = 0` value, or the cosine coordinate `u = Re a_{lm}`.
    Cos,
    /// Sine coordinate `v = -Im a_{lm}`, only for `m > 0`.
    Sin,
}

/// Label of one real basis column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnLabel {
    pub l: usize,
    pub m: usize,
    pub part: Part,
}

impl std::fmt::Display for ColumnLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.part {
            Part::Cos if self.m == 0 => write!(f, "(l={}, m=0)", self.l),
            Part::Cos => write!(f, "(l={}, m={}, re)", self.l, self.m),
            Part::Sin => write!(f, "(l={}, m={}, im)", self.l, self.m),
        }
    }
}

/// Position of a real coordinate in the `(l_max+1)^2` layout.
#[inline]
pub fn real_index(l: usize, m: usize, part: Part) -> usize {
    debug_assert!(m <= l);
    match (m, part) {
        (0, _) => l * l,
        (_, Part::Cos) => l * l + 2 * m - 1,
        (_, Part::Sin) => l * l + 2 * m,
    }
}

pub fn real_layout(l_max: usize) -> Vec<ColumnLabel> {
    let mut out = Vec::with_capacity(HarmonicIndex::count(l_max));
    for l in 0..=l_max {
        out.push(ColumnLabel {
            l,
            m: 0,
            part: Part::Cos,
        });
        for m in 1..=l {
            out.push(ColumnLabel {
                l,
                m,
                part: Part::Cos,
            });
            out.push(ColumnLabel {
                l,
                m,
                part: Part::Sin,
            });
        }
    }
    out
}

fn check_unit(x: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("argument {x} outside [-1, 1]")));
    }
    Ok(())
}

/// Legendre polynomial by the three-term recurrence.
pub fn legendre_p(l: usize, x: f64) -> Result<f64> {
    check_unit(x)?;
    Ok(legendre_unchecked(l, x))
}

pub(crate) fn legendre_unchecked(l: usize, x: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=l {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `ln((l+m)! / (l-m)!)`.
fn ln_factorial_ratio(l: usize, m: usize) -> f64 {
    libm::lgamma((l + m) as f64 + 1.0) - libm::lgamma((l - m) as f64 + 1.0)
}

/// Normalized diagonal seed `P~_{m,m}(x)` with `s = sqrt(1 - x^2)`.
fn normalized_seed(m: usize, s: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    if s == 0.0 {
        return 0.0;
    }
    let mf = m as f64;
    let ln_mag = 0.5 * libm::lgamma(2.0 * mf + 1.0)
        - mf * std::f64::consts::LN_2
        - libm::lgamma(mf + 1.0)
        + mf * s.ln();
    let mag = ln_mag.exp();
    if m % 2 == 1 {
        -mag
    } else {
        mag
    }
}

/// Schmidt-normalized `P~_{l,m}(x) = sqrt((l-m)!/(l+m)!) P_{l,m}(x)` for one `m`
/// and all `l` in `m..=l_max`, written to `out[l - m]`.
pub(crate) fn normalized_column(m: usize, l_max: usize, x: f64, out: &mut [f64]) {
    debug_assert!(out.len() > l_max - m);
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mf = m as f64;
    out[0] = normalized_seed(m, s);
    if l_max == m {
        return;
    }
    out[1] = x * (2.0 * mf + 1.0).sqrt() * out[0];
    for l in (m + 2)..=l_max {
        let lf = l as f64;
        let a = (2.0 * lf - 1.0) / ((lf - mf) * (lf + mf)).sqrt();
        let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / ((lf - mf) * (lf + mf))).sqrt();
        out[l - m] = a * x * out[l - m - 1] - b * out[l - m - 2];
    }
}

/// Schmidt-normalized Legendre value for a single `(l, m)`.
pub fn schmidt_legendre(l: usize, m: usize, x: f64) -> Result<f64> {
    if m > l {
        return Err(Error::Domain(format!("order m = {m} exceeds degree l = {l}")));
    }
    check_unit(x)?;
    let mut col = vec![0.0; l - m + 1];
    normalized_column(m, l, x, &mut col);
    Ok(col[l - m])
}

/// Associated Legendre function with the Condon-Shortley phase,
/// `P_{l,m}(x) = (-1)^m (1-x^2)^{m/2} d^m/dx^m P_l(x)`.
///
/// Overflows to infinity once `(l+m)!/(l-m)!` leaves double range; callers
/// needing large orders should use [`schmidt_legendre`].
pub fn assoc_legendre(l: usize, m: usize, x: f64) -> Result<f64> {
    let normalized = schmidt_legendre(l, m, x)?;
    if m == 0 {
        return Ok(normalized);
    }
    Ok(normalized * (0.5 * ln_factorial_ratio(l, m)).exp())
}

/// Complex Schmidt semi-normalized harmonic at colatitude `theta`, longitude `phi`.
pub fn sh_eval(idx: HarmonicIndex, theta: f64, phi: f64) -> Result<Complex64> {
    let HarmonicIndex { l, m } = HarmonicIndex::new(idx.l, idx.m)?;
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::Domain(format!("colatitude {theta} outside [0, pi]")));
    }
    let am = m.unsigned_abs() as usize;
    let p = schmidt_legendre(l, am, theta.cos())?;
    let positive = Complex64::from_polar(p, am as f64 * phi);
    if m >= 0 {
        Ok(positive)
    } else if am.is_multiple_of(2) {
        Ok(positive.conj())
    } else {
        Ok(-positive.conj())
    }
}

/// Normalized Legendre values for every `(l, m)` with `l <= l_max` at a set of
/// colatitudes. Layout: for each `m`, a block of `(l_max - m + 1) x n_lat`.
#[derive(Debug, Clone)]
pub struct LegendreTable {
    l_max: usize,
    n_lat: usize,
    offsets: Vec<usize>,
    data: Vec<f64>,
}

impl LegendreTable {
    pub fn new(l_max: usize, colatitudes: &[f64]) -> Self {
        let n_lat = colatitudes.len();
        let mut offsets = Vec::with_capacity(l_max + 2);
        let mut total = 0;
        for m in 0..=l_max {
            offsets.push(total);
            total += (l_max - m + 1) * n_lat;
        }
        offsets.push(total);
        let mut data = vec![0.0; total];
        let mut col = vec![0.0; l_max + 1];
        for (i, &theta) in colatitudes.iter().enumerate() {
            let x = theta.cos();
            for m in 0..=l_max {
                let k = l_max - m + 1;
                normalized_column(m, l_max, x, &mut col[..k]);
                let base = offsets[m];
                for (dl, &v) in col[..k].iter().enumerate() {
                    data[base + dl * n_lat + i] = v;
                }
            }
        }
        LegendreTable {
            l_max,
            n_lat,
            offsets,
            data,
        }
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn n_lat(&self) -> usize {
        self.n_lat
    }

    #[inline]
    pub fn get(&self, l: usize, m: usize, lat: usize) -> f64 {
        self.data[self.offsets[m] + (l - m) * self.n_lat + lat]
    }

    /// Row-major `(l_max - m + 1) x n_lat` block for order `m`.
    pub fn order_block(&self, m: usize) -> &[f64] {
        &self.data[self.offsets[m]..self.offsets[m + 1]]
    }
}

/// Real design matrix of the harmonics on a grid.
#[derive(Debug, Clone)]
pub struct BasisMatrix {
    pub values: DMatrix<f64>,
    pub columns: Vec<ColumnLabel>,
    l_max: usize,
    grid: Grid,
}

impl BasisMatrix {
    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// `(colatitude, longitude)` of the cell behind row `row`.
    pub fn cell_coordinates(&self, row: usize) -> (f64, f64) {
        self.grid.cell(row)
    }

    pub fn n_rows(&self) -> usize {
        self.values.nrows()
    }
}

/// Builds the `n_cells x (l_max+1)^2` real basis in [`real_layout`] order.
pub fn build_basis(grid: &Grid, l_max: usize) -> Result<BasisMatrix> {
    let n_cols = HarmonicIndex::count(l_max);
    if n_cols > grid.n_cells() {
        return Err(Error::Dimension(format!(
            "(l_max+1)^2 = {n_cols} basis functions exceed {} grid cells",
            grid.n_cells()
        )));
    }
    let table = LegendreTable::new(l_max, grid.colatitudes());
    let n_lon = grid.n_lon();
    let mut values = DMatrix::<f64>::zeros(grid.n_cells(), n_cols);
    for (c, &phi) in grid.longitudes().iter().enumerate() {
        for lat in 0..grid.n_lat() {
            let row = lat * n_lon + c;
            for l in 0..=l_max {
                values[(row, real_index(l, 0, Part::Cos))] = table.get(l, 0, lat);
                for m in 1..=l {
                    let p = 2.0 * table.get(l, m, lat);
                    let (sin, cos) = (m as f64 * phi).sin_cos();
                    values[(row, real_index(l, m, Part::Cos))] = p * cos;
                    values[(row, real_index(l, m, Part::Sin))] = p * sin;
                }
            }
        }
    }
    Ok(BasisMatrix {
        values,
        columns: real_layout(l_max),
        l_max,
        grid: grid.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, GridConvention};
    use std::f64::consts::PI;

    #[test]
    fn legendre_small_degrees() {
        assert_eq!(legendre_p(0, 0.3).unwrap(), 1.0);
        assert_eq!(legendre_p(1, 0.3).unwrap(), 0.3);
        assert!((legendre_p(2, 0.5).unwrap() + 0.125).abs() < 1e-15);
        assert!(legendre_p(3, 1.5).is_err());
    }

    #[test]
    fn assoc_legendre_basics() {
        assert!((assoc_legendre(1, 1, 0.0).unwrap() + 1.0).abs() < 1e-15);
        assert!((assoc_legendre(1, 0, 0.42).unwrap() - 0.42).abs() < 1e-15);
        assert!(assoc_legendre(2, 3, 0.1).is_err());
        assert!(assoc_legendre(2, 1, -1.01).is_err());
    }

    #[test]
    fn assoc_legendre_closed_forms() {
        for &x in &[-0.93f64, -0.4, 0.0, 0.17, 0.66, 0.999] {
            let s: f64 = (1.0 - x * x).sqrt();
            let cases = [
                (2, 1, -3.0 * x * s),
                (2, 2, 3.0 * s * s),
                (3, 0, 0.5 * (5.0 * x * x * x - 3.0 * x)),
                (3, 1, -1.5 * (5.0 * x * x - 1.0) * s),
                (3, 2, 15.0 * x * s * s),
                (3, 3, -15.0 * s * s * s),
                (4, 0, (35.0 * x.powi(4) - 30.0 * x * x + 3.0) / 8.0),
                (4, 1, -2.5 * (7.0 * x.powi(3) - 3.0 * x) * s),
                (4, 2, 7.5 * (7.0 * x * x - 1.0) * s * s),
                (4, 3, -105.0 * x * s.powi(3)),
                (4, 4, 105.0 * s.powi(4)),
            ];
            for (l, m, want) in cases {
                let got = assoc_legendre(l, m, x).unwrap();
                assert!((got - want).abs() < 1e-12, "P_{l},{m}({x}) = {got} want {want}");
            }
        }
    }

    /// `P_l` expanded exactly as an integer polynomial scaled by `2^-l`,
    /// differentiated `m` times and multiplied by `(-1)^m (1-x^2)^{m/2}`.
    fn derivative_definition(l: usize, m: usize, x: f64) -> f64 {
        fn binom(n: i128, k: i128) -> i128 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        // coefficient of x^(l-2k) in 2^l P_l
        let mut coeffs = vec![0i128; l + 1];
        for k in 0..=l / 2 {
            let c = binom(l as i128, k as i128) * binom((2 * l - 2 * k) as i128, l as i128);
            coeffs[l - 2 * k] = if k % 2 == 0 { c } else { -c };
        }
        for _ in 0..m {
            coeffs = (1..coeffs.len())
                .map(|p| coeffs[p] * p as i128)
                .collect();
        }
        let poly: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(p, &c)| c as f64 * x.powi(p as i32))
            .sum::<f64>()
            / 2f64.powi(l as i32);
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * (1.0 - x * x).powf(m as f64 / 2.0) * poly
    }

    #[test]
    fn assoc_legendre_matches_derivative_definition() {
        // Frozen from a 40-digit evaluation of the derivative definition.
        let frozen = -20321.279317331331807;
        let got = assoc_legendre(10, 5, 0.7).unwrap();
        assert!((got / frozen - 1.0).abs() < 1e-12, "{got}");
        let oracle = derivative_definition(10, 5, 0.7);
        assert!((got / oracle - 1.0).abs() < 1e-11);
        for (l, m, x) in [(7, 3, -0.35), (12, 8, 0.2), (9, 0, 0.81), (6, 6, 0.5)] {
            let got = assoc_legendre(l, m, x).unwrap();
            let want = derivative_definition(l, m, x);
            assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0), "{l},{m}");
        }
    }

    #[test]
    fn harmonic_examples() {
        let s00 = sh_eval(HarmonicIndex::new(0, 0).unwrap(), 1.1, 4.0).unwrap();
        assert_eq!(s00, Complex64::new(1.0, 0.0));
        let s10 = sh_eval(HarmonicIndex::new(1, 0).unwrap(), PI / 2.0, 0.3).unwrap();
        assert!(s10.norm() < 1e-15);
        let a = sh_eval(HarmonicIndex::new(1, -1).unwrap(), 0.7, 2.1).unwrap();
        let b = sh_eval(HarmonicIndex::new(1, 1).unwrap(), 0.7, 2.1).unwrap();
        assert_eq!(a, -b.conj());
        assert!(HarmonicIndex::new(2, -3).is_err());
        assert!(sh_eval(HarmonicIndex { l: 1, m: 0 }, 4.0, 0.0).is_err());
    }

    #[test]
    fn negative_order_identity() {
        for l in 0..12usize {
            for m in 1..=l as i64 {
                let (th, ph) = (0.3 + 0.1 * l as f64, 0.7 * m as f64);
                let pos = sh_eval(HarmonicIndex::new(l, m).unwrap(), th, ph).unwrap();
                let neg = sh_eval(HarmonicIndex::new(l, -m).unwrap(), th, ph).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(neg, pos.conj() * sign);
            }
        }
    }

    #[test]
    fn large_degree_is_finite() {
        for &x in &[0.0f64, 0.3, 0.99, 1.0] {
            for m in [0, 1, 86, 150] {
                let v = schmidt_legendre(150, m, x).unwrap();
                assert!(v.is_finite() && v.abs() <= 1.0);
            }
        }
    }

    #[test]
    fn basis_shapes() {
        let g = make_grid(6, 8, GridConvention::CellCenters).unwrap();
        let b = build_basis(&g, 0).unwrap();
        assert_eq!(b.values.ncols(), 1);
        assert!(b.values.iter().all(|&v| v == 1.0));
        assert!(build_basis(&g, 7).is_err());

        let g = make_grid(73, 96, GridConvention::PoleInclusive).unwrap();
        let b = build_basis(&g, 47).unwrap();
        assert_eq!(b.values.shape(), (7008, 2304));
        assert!(b.values.iter().all(|v| v.is_finite() && v.abs() <= 2f64.sqrt() + 1e-12));
    }

    #[test]
    fn basis_reproduces_complex_synthesis() {
        // a_{lm} = u - i v with Hermitian partner must equal the real column sum.
        let g = make_grid(5, 9, GridConvention::CellCenters).unwrap();
        let b = build_basis(&g, 2).unwrap();
        let (l, m) = (2usize, 1i64);
        let (u, v) = (0.8, -0.3);
        let a = Complex64::new(u, -v);
        for cell in 0..g.n_cells() {
            let (th, ph) = g.cell(cell);
            let sp = sh_eval(HarmonicIndex::new(l, m).unwrap(), th, ph).unwrap();
            let sn = sh_eval(HarmonicIndex::new(l, -m).unwrap(), th, ph).unwrap();
            let partner = -a.conj();
            let complex = a * sp + partner * sn;
            assert!(complex.im.abs() < 1e-14);
            let real = u * b.values[(cell, real_index(2, 1, Part::Cos))]
                + v * b.values[(cell, real_index(2, 1, Part::Sin))];
            assert!((complex.re - real).abs() < 1e-14);
        }
    }

    #[test]
    fn layout_is_consistent() {
        for (k, label) in real_layout(9).iter().enumerate() {
            assert_eq!(real_index(label.l, label.m, label.part), k);
        }
        assert_eq!(real_layout(9).len(), 100);
    }
}
