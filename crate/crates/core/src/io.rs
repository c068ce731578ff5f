//! File formats.
//!
//! Field file: one line of JSON
//! `{"n_lat":..,"n_lon":..,"convention":..,"T":..,"layout":"row-major-f64","seed":..}`
//! terminated by `\n`, then `T * n_lat * n_lon` little-endian `f64` values,
//! time-major, cells row-major from north to south.
//!
//! Coefficient file: CSV with header `l,m,t,re,im`, `t` starting at 1, one row
//! per `(l, m, t)` with `-l <= m <= l`. Lines starting with `#` carry
//! `key=value` metadata and are otherwise ignored. Rows for negative orders
//! are optional on input but must agree with Hermitian symmetry.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{make_grid, GridConvention};
use crate::transform::{CoeffSeries, FieldSeries};

pub const FIELD_LAYOUT: &str = "row-major-f64";

const MAX_HEADER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldHeader {
    pub n_lat: usize,
    pub n_lon: usize,
    pub convention: GridConvention,
    #[serde(rename = "T")]
    pub n_times: usize,
    pub layout: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

pub fn write_fields(writer: impl Write, fields: &FieldSeries, seed: Option<u64>) -> Result<()> {
    let g = fields.grid();
    let header = FieldHeader {
        n_lat: g.n_lat(),
        n_lon: g.n_lon(),
        convention: g.convention(),
        n_times: fields.n_times(),
        layout: FIELD_LAYOUT.into(),
        seed,
    };
    let mut w = BufWriter::new(writer);
    let io = |e| Error::io("<field output>", e);
    serde_json::to_writer(&mut w, &header).map_err(|e| Error::format("field header", e.to_string()))?;
    w.write_all(b"\n").map_err(io)?;
    for v in fields.values() {
        w.write_all(&v.to_le_bytes()).map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn read_fields(reader: impl Read, location: &str) -> Result<(FieldHeader, FieldSeries)> {
    let mut r = BufReader::new(reader);
    let mut line = Vec::new();
    r.by_ref()
        .take(MAX_HEADER as u64)
        .read_until(b'\n', &mut line)
        .map_err(|e| Error::io(location, e))?;
    if line.last() != Some(&b'\n') {
        return Err(Error::format(
            format!("{location}:header"),
            "missing newline-terminated JSON header",
        ));
    }
    let header: FieldHeader = serde_json::from_slice(&line[..line.len() - 1]).map_err(|e| {
        Error::format(
            format!("{location}:header, column {}", e.column()),
            e.to_string(),
        )
    })?;
    if header.layout != FIELD_LAYOUT {
        return Err(Error::format(
            format!("{location}:header"),
            format!("unsupported layout {:?}, expected {FIELD_LAYOUT:?}", header.layout),
        ));
    }
    let grid = make_grid(header.n_lat, header.n_lon, header.convention)
        .map_err(|e| Error::format(format!("{location}:header"), e.to_string()))?;
    let count = header.n_times * grid.n_cells();
    let offset = line.len();
    let mut payload = Vec::new();
    r.read_to_end(&mut payload).map_err(|e| Error::io(location, e))?;
    if payload.len() != count * 8 {
        return Err(Error::format(
            format!("{location}:byte {offset}"),
            format!(
                "payload has {} bytes, header implies {} ({} values)",
                payload.len(),
                count * 8,
                count
            ),
        ));
    }
    let mut values = Vec::with_capacity(count);
    for (i, chunk) in payload.chunks_exact(8).enumerate() {
        let v = f64::from_le_bytes(chunk.try_into().expect("8-byte chunk"));
        if !v.is_finite() {
            return Err(Error::format(
                format!("{location}:byte {}", offset + 8 * i),
                format!("non-finite value {v}"),
            ));
        }
        values.push(v);
    }
    let fields = FieldSeries::new(grid, header.n_times, values)?;
    Ok((header, fields))
}

pub fn save_fields(path: &Path, fields: &FieldSeries, seed: Option<u64>) -> Result<()> {
    let f = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_fields(f, fields, seed).map_err(|e| retarget(e, path))
}

pub fn load_fields(path: &Path) -> Result<(FieldHeader, FieldSeries)> {
    let f = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_fields(f, &path.display().to_string())
}

fn retarget(e: Error, path: &Path) -> Error {
    match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CoeffRow {
    l: usize,
    m: i64,
    t: usize,
    re: f64,
    im: f64,
}

/// Writes every `(l, m, t)` including negative orders.
pub fn write_coeffs(
    writer: impl Write,
    coeffs: &CoeffSeries,
    metadata: &BTreeMap<String, String>,
) -> Result<()> {
    let mut w = BufWriter::new(writer);
    let io = |e| Error::io("<coefficient output>", e);
    writeln!(w, "# l_max={}", coeffs.l_max()).map_err(io)?;
    writeln!(w, "# T={}", coeffs.n_times()).map_err(io)?;
    for (k, v) in metadata {
        writeln!(w, "# {k}={v}").map_err(io)?;
    }
    let mut csv = csv::Writer::from_writer(w);
    for l in 0..=coeffs.l_max() {
        for m in -(l as i64)..=l as i64 {
            for t in 0..coeffs.n_times() {
                let a = coeffs.get(l, m, t);
                csv.serialize(CoeffRow {
                    l,
                    m,
                    t: t + 1,
                    re: a.re,
                    im: a.im,
                })
                .map_err(|e| Error::format("coefficient output", e.to_string()))?;
            }
        }
    }
    csv.flush().map_err(io)
}

/// Coefficient series plus the `#` metadata found in the file.
pub fn read_coeffs(reader: impl Read, location: &str) -> Result<(CoeffSeries, BTreeMap<String, String>)> {
    let mut text = String::new();
    BufReader::new(reader)
        .read_to_string(&mut text)
        .map_err(|e| Error::io(location, e))?;
    let mut metadata = BTreeMap::new();
    for line in text.lines() {
        if let Some(rest) = line.trim_start().strip_prefix('#') {
            if let Some((k, v)) = rest.split_once('=') {
                metadata.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
    }

    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| Error::format(location, e.to_string()))?
        .clone();
    if headers.iter().collect::<Vec<_>>() != ["l", "m", "t", "re", "im"] {
        return Err(Error::format(
            location,
            format!("expected header l,m,t,re,im, found {}", headers.iter().collect::<Vec<_>>().join(",")),
        ));
    }
    let mut rows = Vec::new();
    for rec in rdr.deserialize::<CoeffRow>() {
        let row = rec.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            Error::format(format!("{location}:{line}"), e.to_string())
        })?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::format(location, "no coefficient rows"));
    }
    let l_max = rows.iter().map(|r| r.l).max().unwrap_or(0);
    let n_times = rows.iter().map(|r| r.t).max().unwrap_or(0);
    if rows.iter().any(|r| r.t == 0) {
        return Err(Error::format(location, "time index t starts at 1"));
    }
    let mut filled = vec![false; (l_max + 1) * (l_max + 1) * n_times];
    let slot = |l: usize, m: usize, t: usize| ((l * (l + 1) / 2 + m) * n_times) + t;
    let mut out = CoeffSeries::zeros(l_max, n_times);
    let mut negatives = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let line = i + 2;
        if r.m.unsigned_abs() as usize > r.l {
            return Err(Error::format(
                format!("{location}: data row {line}"),
                format!("|m| = {} exceeds l = {}", r.m.abs(), r.l),
            ));
        }
        if r.m < 0 {
            negatives.push(i);
            continue;
        }
        let m = r.m as usize;
        out.set(r.l, m, r.t - 1, Complex64::new(r.re, r.im))
            .map_err(|e| Error::format(format!("{location}: data row {line}"), e.to_string()))?;
        filled[slot(r.l, m, r.t - 1)] = true;
    }
    for l in 0..=l_max {
        for m in 0..=l {
            for t in 0..n_times {
                if !filled[slot(l, m, t)] {
                    return Err(Error::format(
                        location,
                        format!("missing coefficient l={l}, m={m}, t={}", t + 1),
                    ));
                }
            }
        }
    }
    for i in negatives {
        let r = &rows[i];
        let expect = out.get(r.l, r.m, r.t - 1);
        let got = Complex64::new(r.re, r.im);
        if (expect - got).norm() > 1e-9 * expect.norm().max(1.0) {
            return Err(Error::format(
                format!("{location}: data row {}", i + 2),
                format!("l={}, m={}, t={} breaks Hermitian symmetry", r.l, r.m, r.t),
            ));
        }
    }
    Ok((out, metadata))
}

pub fn save_coeffs(path: &Path, coeffs: &CoeffSeries, metadata: &BTreeMap<String, String>) -> Result<()> {
    let f = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_coeffs(f, coeffs, metadata).map_err(|e| retarget(e, path))
}

pub fn load_coeffs(path: &Path) -> Result<(CoeffSeries, BTreeMap<String, String>)> {
    let f = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_coeffs(f, &path.display().to_string())
}

/// Pretty JSON of any serializable result.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::format("json output", e.to_string()))
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = to_json(value)?;
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Error::io(path, e))
}

/// Writes one value per cell as CSV `cell,lat_index,lon_index,colatitude,longitude,value`.
pub fn write_cell_map(
    writer: impl Write,
    grid: &crate::grid::Grid,
    name: &str,
    values: &[f64],
) -> Result<()> {
    if values.len() != grid.n_cells() {
        return Err(Error::Dimension(format!(
            "{} values for {} cells",
            values.len(),
            grid.n_cells()
        )));
    }
    let mut w = BufWriter::new(writer);
    let io = |e| Error::io("<map output>", e);
    writeln!(w, "cell,lat_index,lon_index,colatitude,longitude,{name}").map_err(io)?;
    for (cell, v) in values.iter().enumerate() {
        let (th, ph) = grid.cell(cell);
        writeln!(
            w,
            "{cell},{},{},{th},{ph},{v}",
            cell / grid.n_lon(),
            cell % grid.n_lon()
        )
        .map_err(io)?;
    }
    w.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::simulate::{sim_iso_coeffs, RngSpec, Spectrum};
    use crate::transform::synthesize;

    fn sample() -> FieldSeries {
        let g = make_grid(4, 8, GridConvention::PoleInclusive).unwrap();
        let c = sim_iso_coeffs(&Spectrum::c_l2(3), 5, 1.5, &RngSpec::new(1)).unwrap();
        synthesize(&c, &g).unwrap()
    }

    #[test]
    fn field_round_trip() {
        let f = sample();
        let mut buf = Vec::new();
        write_fields(&mut buf, &f, Some(42)).unwrap();
        let nl = buf.iter().position(|&b| b == b'\n').unwrap();
        let header: serde_json::Value = serde_json::from_slice(&buf[..nl]).unwrap();
        assert_eq!(header["layout"], "row-major-f64");
        assert_eq!(header["T"], 5);
        assert_eq!(header["convention"], "pole_inclusive");
        assert_eq!(buf.len(), nl + 1 + 5 * 32 * 8);
        let (h, back) = read_fields(buf.as_slice(), "mem").unwrap();
        assert_eq!(h.seed, Some(42));
        assert_eq!(back, f);
    }

    #[test]
    fn field_errors_carry_location() {
        let f = sample();
        let mut buf = Vec::new();
        write_fields(&mut buf, &f, None).unwrap();
        let truncated = &buf[..buf.len() - 3];
        let e = read_fields(truncated, "f.bin").unwrap_err().to_string();
        assert!(e.contains("f.bin:byte"), "{e}");

        let e = read_fields(&b"{\"n_lat\": 4,, }\n"[..], "f.bin").unwrap_err().to_string();
        assert!(e.contains("f.bin:header"), "{e}");
        let e = read_fields(&b"no newline"[..], "f.bin").unwrap_err().to_string();
        assert!(e.contains("header"), "{e}");

        let mut bad = buf.clone();
        let nl = bad.iter().position(|&b| b == b'\n').unwrap();
        bad[nl + 1..nl + 9].copy_from_slice(&f64::NAN.to_le_bytes());
        let e = read_fields(bad.as_slice(), "f.bin").unwrap_err().to_string();
        assert!(e.contains("non-finite"), "{e}");
    }

    #[test]
    fn coeff_round_trip_and_metadata() {
        let c = sim_iso_coeffs(&Spectrum::c_l2(3), 4, 1.5, &RngSpec::new(2)).unwrap();
        let mut meta = BTreeMap::new();
        meta.insert("seed".to_string(), "2".to_string());
        let mut buf = Vec::new();
        write_coeffs(&mut buf, &c, &meta).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("l,m,t,re,im"));
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1 + 16 * 4);
        let (back, m) = read_coeffs(buf.as_slice(), "c.csv").unwrap();
        assert_eq!(m["seed"], "2");
        assert_eq!(m["l_max"], "3");
        assert!((back.real() - c.real()).amax() < 1e-15);
    }

    #[test]
    fn coeff_errors() {
        let e = read_coeffs(&b"a,b\n1,2\n"[..], "c.csv").unwrap_err().to_string();
        assert!(e.contains("expected header"), "{e}");
        let e = read_coeffs(&b"l,m,t,re,im\n0,0,1,1.0,0\n1,0,1,x,0\n"[..], "c.csv")
            .unwrap_err()
            .to_string();
        assert!(e.contains("c.csv:3"), "{e}");
        let e = read_coeffs(&b"l,m,t,re,im\n0,0,1,1.0,0\n1,1,1,1.0,0\n"[..], "c.csv")
            .unwrap_err()
            .to_string();
        assert!(e.contains("missing"), "{e}");
        let bad_sym = b"l,m,t,re,im\n0,0,1,1,0\n1,0,1,1,0\n1,1,1,1,2\n1,-1,1,1,2\n";
        let e = read_coeffs(&bad_sym[..], "c.csv").unwrap_err().to_string();
        assert!(e.contains("Hermitian"), "{e}");
        let ok_sym = b"l,m,t,re,im\n0,0,1,1,0\n1,0,1,1,0\n1,1,1,1,2\n1,-1,1,-1,2\n";
        let (c, _) = read_coeffs(&ok_sym[..], "c.csv").unwrap();
        assert_eq!(c.get(1, 1, 0), Complex64::new(1.0, 2.0));
        let e = read_coeffs(&b"l,m,t,re,im\n0,0,1,1,0.5\n"[..], "c.csv").unwrap_err().to_string();
        assert!(e.contains("symmetry"), "{e}");
    }

    #[test]
    fn cell_map_rows() {
        let g = make_grid(2, 4, GridConvention::CellCenters).unwrap();
        let mut buf = Vec::new();
        write_cell_map(&mut buf, &g, "deviation", &[0.0; 8]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 9);
        assert!(write_cell_map(Vec::new(), &g, "x", &[0.0; 3]).is_err());
    }
}
