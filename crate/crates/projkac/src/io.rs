//! CSV and JSON formats for sampled functions and kernels.
//!
//! CSV files start with a metadata header and row, then a data header:
//!
//! ```text
//! n,extent            n,extent,nu
//! 64,16               64,16,1
//! index,re,im         row,col,re,im
//! ```
//!
//! Two-dimensional samples are indexed row-major, `index = i·n + j`.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::grid::{Grid2D, GridFunction2D, OperatorKernel, WaveFunction1D, C};

/// On-disk encoding, chosen from the file extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("csv") => Ok(Format::Csv),
            Some("json") => Ok(Format::Json),
            _ => Err(Error::Parse(format!("{}: expected a .csv or .json file", path.display()))),
        }
    }
}

fn reader<R: Read>(r: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(r)
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().has_headers(false).flexible(true).from_writer(w)
}

fn records<R: Read>(r: R) -> Result<Vec<csv::StringRecord>> {
    reader(r).records().map(|rec| rec.map_err(Error::from)).collect()
}

fn expect_header(rec: Option<&csv::StringRecord>, names: &[&str]) -> Result<()> {
    let got: Vec<&str> = rec.map(|r| r.iter().collect()).unwrap_or_default();
    if got != names {
        return Err(Error::Parse(format!("expected header {names:?}, found {got:?}")));
    }
    Ok(())
}

fn num<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
    rec.get(i)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad field {i} in row {:?}", rec.iter().collect::<Vec<_>>())))
}

fn finite(v: C) -> Result<C> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parse(format!("non-finite sample {v}")))
    }
}

/// Parses the `n,extent` block and returns the grid and the data rows.
fn grid_block(recs: &[csv::StringRecord]) -> Result<(Grid2D, &[csv::StringRecord])> {
    expect_header(recs.first(), &["n", "extent"])?;
    let meta = recs.get(1).ok_or_else(|| Error::Parse("missing metadata row".into()))?;
    let grid = Grid2D::new(num(meta, 0)?, num(meta, 1)?)?;
    expect_header(recs.get(2), &["index", "re", "im"])?;
    Ok((grid, &recs[3..]))
}

fn indexed_values(rows: &[csv::StringRecord], len: usize) -> Result<Vec<C>> {
    let mut values = vec![None; len];
    for r in rows {
        let i: usize = num(r, 0)?;
        let slot = values.get_mut(i).ok_or_else(|| Error::Parse(format!("index {i} out of range")))?;
        *slot = Some(finite(C::new(num(r, 1)?, num(r, 2)?))?);
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("missing sample {i}"))))
        .collect()
}

pub fn read_grid_function_csv<R: Read>(r: R) -> Result<GridFunction2D> {
    let recs = records(r)?;
    let (grid, rows) = grid_block(&recs)?;
    Ok(GridFunction2D { grid, values: indexed_values(rows, grid.n * grid.n)? })
}

pub fn write_grid_function_csv<W: Write>(f: &GridFunction2D, w: W) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["n", "extent"])?;
    out.write_record([f.grid.n.to_string(), f.grid.extent.to_string()])?;
    out.write_record(["index", "re", "im"])?;
    for (i, v) in f.values.iter().enumerate() {
        out.write_record([i.to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_wave_function_csv<R: Read>(r: R) -> Result<WaveFunction1D> {
    let recs = records(r)?;
    let (grid, rows) = grid_block(&recs)?;
    Ok(WaveFunction1D { n: grid.n, extent: grid.extent, values: indexed_values(rows, grid.n)? })
}

pub fn write_wave_function_csv<W: Write>(f: &WaveFunction1D, w: W) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["n", "extent"])?;
    out.write_record([f.n.to_string(), f.extent.to_string()])?;
    out.write_record(["index", "re", "im"])?;
    for (i, v) in f.values.iter().enumerate() {
        out.write_record([i.to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_kernel_csv<R: Read>(r: R) -> Result<OperatorKernel> {
    let recs = records(r)?;
    expect_header(recs.first(), &["n", "extent", "nu"])?;
    let meta = recs.get(1).ok_or_else(|| Error::Parse("missing metadata row".into()))?;
    let grid = Grid2D::new(num(meta, 0)?, num(meta, 1)?)?;
    let nu: f64 = num(meta, 2)?;
    expect_header(recs.get(2), &["row", "col", "re", "im"])?;
    let n = grid.n;
    let mut values = vec![None; n * n];
    for r in &recs[3..] {
        let (a, b): (usize, usize) = (num(r, 0)?, num(r, 1)?);
        if a >= n || b >= n {
            return Err(Error::Parse(format!("entry ({a},{b}) out of range")));
        }
        values[a * n + b] = Some(finite(C::new(num(r, 2)?, num(r, 3)?))?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("missing entry ({},{})", i / n, i % n))))
        .collect::<Result<_>>()?;
    Ok(OperatorKernel { n, extent: grid.extent, nu, values })
}

pub fn write_kernel_csv<W: Write>(k: &OperatorKernel, w: W) -> Result<()> {
    let mut out = writer(w);
    out.write_record(["n", "extent", "nu"])?;
    out.write_record([k.n.to_string(), k.extent.to_string(), k.nu.to_string()])?;
    out.write_record(["row", "col", "re", "im"])?;
    for (i, v) in k.values.iter().enumerate() {
        out.write_record([(i / k.n).to_string(), (i % k.n).to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_reader(std::io::BufReader::new(File::open(path)?))?)
}

fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut f = File::create(path)?;
    serde_json::to_writer_pretty(&mut f, value)?;
    f.write_all(b"\n")?;
    Ok(())
}

/// Loading and saving by file extension.
pub trait Persist: Sized {
    fn load(path: &Path) -> Result<Self>;
    fn save(&self, path: &Path) -> Result<()>;
}

macro_rules! persist {
    ($t:ty, $read:ident, $write:ident, $check:expr) => {
        impl Persist for $t {
            fn load(path: &Path) -> Result<Self> {
                let v: $t = match Format::from_path(path)? {
                    Format::Csv => $read(File::open(path)?)?,
                    Format::Json => read_json(path)?,
                };
                $check(&v)?;
                Ok(v)
            }

            fn save(&self, path: &Path) -> Result<()> {
                match Format::from_path(path)? {
                    Format::Csv => $write(self, File::create(path)?),
                    Format::Json => write_json(self, path),
                }
            }
        }
    };
}

fn check_len(n: usize, extent: f64, len: usize, expected: usize) -> Result<()> {
    Grid2D::new(n, extent)?;
    if len != expected {
        return Err(Error::Parse(format!("expected {expected} samples, found {len}")));
    }
    Ok(())
}

persist!(GridFunction2D, read_grid_function_csv, write_grid_function_csv, |v: &GridFunction2D| check_len(
    v.grid.n,
    v.grid.extent,
    v.values.len(),
    v.grid.n * v.grid.n
));
persist!(WaveFunction1D, read_wave_function_csv, write_wave_function_csv, |v: &WaveFunction1D| check_len(
    v.n,
    v.extent,
    v.values.len(),
    v.n
));
persist!(OperatorKernel, read_kernel_csv, write_kernel_csv, |v: &OperatorKernel| check_len(
    v.n,
    v.extent,
    v.values.len(),
    v.n * v.n
));
