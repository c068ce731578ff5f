//! Latitude-longitude grids, quadrangle area weights and land/ocean masks.
//!
//! Cells are stored row-major from north to south: cell `i * n_lon + j` sits at
//! colatitude row `i` and longitude column `j`.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Placement of latitude rows and longitude columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridConvention {
    /// Rows and columns at cell midpoints; no row touches a pole.
    CellCenters,
    /// Rows from 90N to 90S inclusive, first longitude at 0 (HadCM3 layout).
    PoleInclusive,
}

impl std::fmt::Display for GridConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GridConvention::CellCenters => f.write_str("cell_centers"),
            GridConvention::PoleInclusive => f.write_str("pole_inclusive"),
        }
    }
}

impl std::str::FromStr for GridConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cell_centers" | "cell-centers" | "centers" => Ok(GridConvention::CellCenters),
            "pole_inclusive" | "pole-inclusive" | "poles" => Ok(GridConvention::PoleInclusive),
            other => Err(Error::InvalidParameter(format!(
                "unknown grid convention `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    n_lat: usize,
    n_lon: usize,
    colatitudes: Vec<f64>,
    longitudes: Vec<f64>,
    convention: GridConvention,
}

/// Builds a regular latitude-longitude grid.
pub fn make_grid(n_lat: usize, n_lon: usize, convention: GridConvention) -> Result<Grid> {
    if n_lat < 2 || n_lon < 4 {
        return Err(Error::InvalidParameter(format!(
            "grid needs n_lat >= 2 and n_lon >= 4, got {n_lat} x {n_lon}"
        )));
    }
    let dlon = 2.0 * PI / n_lon as f64;
    let (colatitudes, longitudes) = match convention {
        GridConvention::PoleInclusive => {
            let dlat = PI / (n_lat - 1) as f64;
            let mut colat: Vec<f64> = (0..n_lat).map(|i| i as f64 * dlat).collect();
            colat[n_lat - 1] = PI;
            (colat, (0..n_lon).map(|j| j as f64 * dlon).collect())
        }
        GridConvention::CellCenters => {
            let dlat = PI / n_lat as f64;
            (
                (0..n_lat).map(|i| (i as f64 + 0.5) * dlat).collect(),
                (0..n_lon).map(|j| (j as f64 + 0.5) * dlon).collect(),
            )
        }
    };
    Ok(Grid {
        n_lat,
        n_lon,
        colatitudes,
        longitudes,
        convention,
    })
}

impl Grid {
    pub fn n_lat(&self) -> usize {
        self.n_lat
    }

    pub fn n_lon(&self) -> usize {
        self.n_lon
    }

    pub fn n_cells(&self) -> usize {
        self.n_lat * self.n_lon
    }

    pub fn convention(&self) -> GridConvention {
        self.convention
    }

    /// Colatitudes in radians, strictly increasing from the north pole.
    pub fn colatitudes(&self) -> &[f64] {
        &self.colatitudes
    }

    pub fn longitudes(&self) -> &[f64] {
        &self.longitudes
    }

    pub fn lon_spacing(&self) -> f64 {
        2.0 * PI / self.n_lon as f64
    }

    /// Longitude of the first column; columns are `lon_offset + j * lon_spacing`.
    pub fn lon_offset(&self) -> f64 {
        self.longitudes[0]
    }

    pub fn cell(&self, index: usize) -> (f64, f64) {
        (
            self.colatitudes[index / self.n_lon],
            self.longitudes[index % self.n_lon],
        )
    }

    /// Colatitudes of the band edges, `n_lat + 1` values from 0 to pi.
    fn band_edges(&self) -> Vec<f64> {
        let theta = &self.colatitudes;
        let mut edges = Vec::with_capacity(self.n_lat + 1);
        edges.push(0.0);
        for i in 1..self.n_lat {
            edges.push(0.5 * (theta[i - 1] + theta[i]));
        }
        edges.push(PI);
        edges
    }

    /// Area of one cell in each latitude row, as a fraction of the sphere.
    pub fn row_weights(&self) -> Vec<f64> {
        let edges = self.band_edges();
        let per_row: Vec<f64> = edges
            .windows(2)
            .map(|e| (e[0].cos() - e[1].cos()) / (2.0 * self.n_lon as f64))
            .collect();
        // The band areas telescope to exactly 1; renormalize away the rounding.
        let total: f64 = per_row.iter().sum::<f64>() * self.n_lon as f64;
        per_row.into_iter().map(|w| w / total).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureWeights {
    pub w: Vec<f64>,
}

/// Relative surface area of every grid quadrangle; sums to one.
pub fn quadrature_weights(grid: &Grid) -> QuadratureWeights {
    let rows = grid.row_weights();
    let w = rows
        .iter()
        .flat_map(|&wr| std::iter::repeat_n(wr, grid.n_lon()))
        .collect();
    QuadratureWeights { w }
}

/// Land (`true`) / ocean (`false`) flag per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskRaster {
    n_lat: usize,
    n_lon: usize,
    mask: Vec<bool>,
}

impl MaskRaster {
    pub fn new(grid: &Grid, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != grid.n_cells() {
            return Err(Error::Dimension(format!(
                "mask has {} cells, grid has {}",
                mask.len(),
                grid.n_cells()
            )));
        }
        Ok(MaskRaster {
            n_lat: grid.n_lat(),
            n_lon: grid.n_lon(),
            mask,
        })
    }

    pub fn filled(grid: &Grid, land: bool) -> Self {
        MaskRaster {
            n_lat: grid.n_lat(),
            n_lon: grid.n_lon(),
            mask: vec![land; grid.n_cells()],
        }
    }

    /// Eastern hemisphere (longitudes in `[0, pi)`) is land, the rest ocean.
    pub fn eastern_hemisphere(grid: &Grid) -> Self {
        let mask = (0..grid.n_cells())
            .map(|c| grid.cell(c).1 < PI)
            .collect();
        MaskRaster {
            n_lat: grid.n_lat(),
            n_lon: grid.n_lon(),
            mask,
        }
    }

    pub fn is_land(&self, cell: usize) -> bool {
        self.mask[cell]
    }

    pub fn cells(&self) -> &[bool] {
        &self.mask
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n_lat, self.n_lon)
    }

    pub fn matches(&self, grid: &Grid) -> bool {
        self.n_lat == grid.n_lat() && self.n_lon == grid.n_lon()
    }

    pub fn land_fraction(&self) -> f64 {
        self.mask.iter().filter(|&&b| b).count() as f64 / self.mask.len() as f64
    }
}

/// Reads a 0/1 raster, row-major from north to south.
///
/// Accepted layouts: raw bytes (`n_lat * n_lon` bytes, each 0 or 1), or text
/// with one grid row per line separated by whitespace or commas. Text files may
/// start with a `n_lat,n_lon` header line followed by the dimensions.
pub fn load_mask(path: &Path, grid: &Grid) -> Result<MaskRaster> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let location = path.display().to_string();
    if bytes.len() == grid.n_cells() && bytes.iter().all(|&b| b <= 1) {
        return MaskRaster::new(grid, bytes.into_iter().map(|b| b == 1).collect());
    }
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Error::format(&location, "neither a binary 0/1 raster nor UTF-8 text"))?;
    parse_mask_text(text, grid, &location)
}

pub fn parse_mask_text(text: &str, grid: &Grid, location: &str) -> Result<MaskRaster> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    if let Some((_, first)) = lines.peek() {
        if first.replace(' ', "").eq_ignore_ascii_case("n_lat,n_lon") {
            lines.next();
            let (lineno, dims) = lines
                .next()
                .ok_or_else(|| Error::format(location, "header without dimensions line"))?;
            let parsed: Vec<usize> = dims
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::format(format!("{location}:{lineno}"), e.to_string()))?;
            if parsed != [grid.n_lat(), grid.n_lon()] {
                return Err(Error::Dimension(format!(
                    "{location}:{lineno}: mask header {parsed:?} does not match grid {} x {}",
                    grid.n_lat(),
                    grid.n_lon()
                )));
            }
        }
    }

    let mut mask = Vec::with_capacity(grid.n_cells());
    let mut rows = 0;
    for (lineno, line) in lines {
        let before = mask.len();
        for token in line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            match token {
                "0" => mask.push(false),
                "1" => mask.push(true),
                other => {
                    return Err(Error::format(
                        format!("{location}:{lineno}"),
                        format!("expected 0 or 1, found `{other}`"),
                    ))
                }
            }
        }
        if mask.len() - before != grid.n_lon() {
            return Err(Error::Dimension(format!(
                "{location}:{lineno}: row has {} cells, grid has {} longitudes",
                mask.len() - before,
                grid.n_lon()
            )));
        }
        rows += 1;
    }
    if rows != grid.n_lat() {
        return Err(Error::Dimension(format!(
            "{location}: mask has {rows} rows, grid has {} latitudes",
            grid.n_lat()
        )));
    }
    MaskRaster::new(grid, mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn hadcm3_spacing() {
        let g = make_grid(73, 96, GridConvention::PoleInclusive).unwrap();
        let dlat = (g.colatitudes()[1] - g.colatitudes()[0]).to_degrees();
        assert!((dlat - 2.5).abs() < 1e-12);
        assert!((g.lon_spacing().to_degrees() - 3.75).abs() < 1e-12);
        assert_eq!(g.colatitudes()[0], 0.0);
        assert_eq!(g.colatitudes()[72], PI);
    }

    #[test]
    fn two_band_centers() {
        let g = make_grid(2, 4, GridConvention::CellCenters).unwrap();
        assert!((g.colatitudes()[0] - PI / 4.0).abs() < 1e-15);
        assert!((g.colatitudes()[1] - 3.0 * PI / 4.0).abs() < 1e-15);
        let w = quadrature_weights(&g);
        for wi in &w.w {
            assert!((wi - 0.125).abs() < 1e-15);
        }
    }

    #[test]
    fn standard_grid_cell_counts() {
        let g = make_grid(20, 50, GridConvention::CellCenters).unwrap();
        assert_eq!(g.n_cells(), 1000);
    }

    #[test]
    fn rejects_tiny_grids() {
        assert!(make_grid(1, 10, GridConvention::CellCenters).is_err());
        assert!(make_grid(10, 3, GridConvention::PoleInclusive).is_err());
    }

    #[test]
    fn weights_partition_sphere() {
        for &(a, b) in &[(20, 50), (73, 96), (100, 200), (5, 7)] {
            for conv in [GridConvention::CellCenters, GridConvention::PoleInclusive] {
                let g = make_grid(a, b, conv).unwrap();
                let w = quadrature_weights(&g);
                let total: f64 = w.w.iter().sum();
                assert!((total - 1.0).abs() < 1e-12, "{a}x{b} {conv}: {total}");
                assert!(w.w.iter().all(|&x| x > 0.0));
            }
        }
    }

    #[test]
    fn equator_outweighs_pole() {
        let g = make_grid(73, 96, GridConvention::PoleInclusive).unwrap();
        let w = quadrature_weights(&g);
        assert!(w.w[36 * 96] > w.w[0]);
        assert!(w.w[36 * 96] > w.w[72 * 96 + 5]);
    }

    #[test]
    fn weights_depend_only_on_row() {
        let g = make_grid(11, 13, GridConvention::PoleInclusive).unwrap();
        let w = quadrature_weights(&g);
        for i in 0..11 {
            let row = &w.w[i * 13..(i + 1) * 13];
            assert!(row.iter().all(|&x| x == row[0]));
        }
    }

    fn write_tmp(contents: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents).unwrap();
        f
    }

    #[test]
    fn mask_text_variants() {
        let g = make_grid(2, 4, GridConvention::CellCenters).unwrap();
        let zeros = write_tmp(b"0 0 0 0\n0 0 0 0\n");
        let m = load_mask(zeros.path(), &g).unwrap();
        assert_eq!(m.land_fraction(), 0.0);

        let ones = write_tmp(b"n_lat,n_lon\n2,4\n1,1,1,1\n1,1,1,1\n");
        let m = load_mask(ones.path(), &g).unwrap();
        assert_eq!(m.land_fraction(), 1.0);

        let checker = write_tmp(b"1 0 1 0\n0 1 0 1\n");
        let m = load_mask(checker.path(), &g).unwrap();
        assert_eq!(
            m.cells(),
            &[true, false, true, false, false, true, false, true]
        );
    }

    #[test]
    fn mask_binary() {
        let g = make_grid(2, 4, GridConvention::CellCenters).unwrap();
        let f = write_tmp(&[1, 0, 0, 0, 0, 0, 0, 1]);
        let m = load_mask(f.path(), &g).unwrap();
        assert!(m.is_land(0) && m.is_land(7) && !m.is_land(3));
    }

    #[test]
    fn mask_errors() {
        let g = make_grid(2, 4, GridConvention::CellCenters).unwrap();
        let short = write_tmp(b"0 0 0\n0 0 0 0\n");
        assert!(matches!(load_mask(short.path(), &g), Err(Error::Dimension(_))));
        let bad = write_tmp(b"0 0 2 0\n0 0 0 0\n");
        assert!(matches!(load_mask(bad.path(), &g), Err(Error::Format { .. })));
        let header = write_tmp(b"n_lat,n_lon\n3,4\n0 0 0 0\n0 0 0 0\n");
        assert!(load_mask(header.path(), &g).is_err());
        assert!(matches!(
            load_mask(Path::new("/nonexistent/mask.txt"), &g),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn hemispheric_mask_is_half_land() {
        let g = make_grid(20, 50, GridConvention::CellCenters).unwrap();
        let m = MaskRaster::eastern_hemisphere(&g);
        assert!((m.land_fraction() - 0.5).abs() < 1e-12);
    }
}
