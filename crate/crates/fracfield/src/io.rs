//! File formats: sampled lines, wave series, dispersion sweeps and field
//! snapshots.
//!
//! Every CSV file carries a header row. Readers report the offending file and
//! 1-based data row (the header is row 0).

use std::fs::{self, File};
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use fracfield_core::fields::FourPotential;
use fracfield_core::fracops::{FracScheme, SampledLine};
use fracfield_core::grid::{Grid, ScalarField};
use fracfield_core::specwave::WaveSolution;
use fracfield_core::AXES;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Relative tolerance on the spacing of `x` columns.
const SPACING_TOLERANCE: f64 = 1e-9;

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| CliError::io(path, e))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

fn csv_reader<R: Read>(reader: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader)
}

fn parse_error(path: &Path, row: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: path.to_path_buf(),
        row,
        message: message.into(),
    }
}

fn check_header(path: &Path, reader: &mut csv::Reader<impl Read>, expected: &[&str]) -> Result<()> {
    let headers = reader.headers().map_err(|e| parse_error(path, 0, e.to_string()))?;
    let found: Vec<&str> = headers.iter().collect();
    if found != expected {
        return Err(parse_error(
            path,
            0,
            format!("expected header `{}`, found `{}`", expected.join(","), found.join(",")),
        ));
    }
    Ok(())
}

fn parse_f64(path: &Path, row: usize, field: &str, name: &str) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| parse_error(path, row, format!("`{field}` is not a number in column {name}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(parse_error(path, row, format!("non-finite value in column {name}")))
    }
}

/// Parses `x,value` rows with uniformly spaced, increasing `x`.
pub fn read_line_from(path: &Path, reader: impl Read) -> Result<SampledLine> {
    let mut rdr = csv_reader(reader);
    check_header(path, &mut rdr, &["x", "value"])?;
    let mut xs = Vec::new();
    let mut values = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| parse_error(path, row, e.to_string()))?;
        if record.len() != 2 {
            return Err(parse_error(
                path,
                row,
                format!("expected 2 columns, found {}", record.len()),
            ));
        }
        xs.push(parse_f64(path, row, &record[0], "x")?);
        values.push(parse_f64(path, row, &record[1], "value")?);
    }
    if xs.len() < 2 {
        return Err(CliError::format(
            path,
            format!("need at least 2 samples, found {}", xs.len()),
        ));
    }
    let h = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    if !(h > 0.0) {
        return Err(CliError::format(path, "x must be increasing"));
    }
    for (i, &x) in xs.iter().enumerate() {
        let expected = xs[0] + i as f64 * h;
        if (x - expected).abs() > SPACING_TOLERANCE * h.max(x.abs()) {
            return Err(parse_error(
                path,
                i + 1,
                format!("non-uniform spacing: x = {x}, expected {expected}"),
            ));
        }
    }
    Ok(SampledLine::new(values, h, xs[0])?)
}

pub fn read_line_csv(path: &Path) -> Result<SampledLine> {
    read_line_from(path, open(path)?)
}

pub fn write_line(out: &mut (impl Write + ?Sized), line: &SampledLine) -> Result<()> {
    writeln!(out, "x,value")?;
    for (i, v) in line.values().iter().enumerate() {
        writeln!(out, "{},{}", line.x(i), v)?;
    }
    Ok(())
}

pub fn write_line_csv(path: &Path, line: &SampledLine) -> Result<()> {
    let mut out = create(path)?;
    write_line(&mut out, line)?;
    out.flush().map_err(|e| CliError::io(path, e))
}

/// Long-format `t,x,u`, one row per output time and sample.
pub fn write_wave(out: &mut (impl Write + ?Sized), solution: &WaveSolution) -> Result<()> {
    writeln!(out, "t,x,u")?;
    for (t, line) in solution.times.iter().zip(&solution.lines) {
        for (i, u) in line.values().iter().enumerate() {
            writeln!(out, "{},{},{}", t, line.x(i), u)?;
        }
    }
    Ok(())
}

/// `(t, x, u)` rows of a wave CSV, for reading results back.
pub fn read_wave_from(path: &Path, reader: impl Read) -> Result<Vec<[f64; 3]>> {
    let mut rdr = csv_reader(reader);
    check_header(path, &mut rdr, &["t", "x", "u"])?;
    rdr.records()
        .enumerate()
        .map(|(i, record)| {
            let record = record.map_err(|e| parse_error(path, i + 1, e.to_string()))?;
            let mut row = [0.0; 3];
            for (idx, name) in ["t", "x", "u"].into_iter().enumerate() {
                row[idx] = parse_f64(path, i + 1, record.get(idx).unwrap_or(""), name)?;
            }
            Ok(row)
        })
        .collect()
}

pub fn write_dispersion(out: &mut (impl Write + ?Sized), rows: &[(f64, f64, f64)]) -> Result<()> {
    writeln!(out, "k,alpha,omega")?;
    for (k, alpha, omega) in rows {
        writeln!(out, "{k},{alpha},{omega}")?;
    }
    Ok(())
}

/// Grid and scheme stored next to a snapshot's component files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SnapshotMeta {
    pub counts: [usize; AXES],
    pub lower: [f64; AXES],
    pub upper: [f64; AXES],
    pub alpha: [f64; AXES],
    pub beta: [f64; AXES],
    /// Component file names, relative to the sidecar.
    pub components: Vec<String>,
}

impl SnapshotMeta {
    pub fn grid(&self) -> Result<Grid> {
        Ok(Grid::new(self.counts, self.lower, self.upper)?)
    }

    pub fn scheme(&self) -> Result<FracScheme> {
        Ok(FracScheme::on_grid(&self.grid()?, self.alpha, self.beta)?)
    }
}

/// Writes `i0,i1,i2,i3,value` rows of a scalar field.
pub fn write_field(out: &mut (impl Write + ?Sized), field: &ScalarField) -> Result<()> {
    writeln!(out, "i0,i1,i2,i3,value")?;
    let grid = field.grid();
    for (k, v) in field.data().iter().enumerate() {
        let [a, b, c, d] = grid.multi_index(k);
        writeln!(out, "{a},{b},{c},{d},{v}")?;
    }
    Ok(())
}

/// Reads a scalar field; every grid point must appear exactly once.
pub fn read_field_from(path: &Path, reader: impl Read, grid: Grid) -> Result<ScalarField> {
    let mut rdr = csv_reader(reader);
    check_header(path, &mut rdr, &["i0", "i1", "i2", "i3", "value"])?;
    let mut data = vec![f64::NAN; grid.len()];
    let mut seen = vec![false; grid.len()];
    for (i, record) in rdr.records().enumerate() {
        let row = i + 1;
        let record = record.map_err(|e| parse_error(path, row, e.to_string()))?;
        if record.len() != 5 {
            return Err(parse_error(
                path,
                row,
                format!("expected 5 columns, found {}", record.len()),
            ));
        }
        let mut idx = [0usize; AXES];
        for (axis, slot) in idx.iter_mut().enumerate() {
            *slot = record[axis].parse().map_err(|_| {
                parse_error(
                    path,
                    row,
                    format!("`{}` is not an index in column i{axis}", &record[axis]),
                )
            })?;
            if *slot >= grid.count(axis) {
                return Err(parse_error(
                    path,
                    row,
                    format!("index i{axis} = {slot} outside the grid"),
                ));
            }
        }
        let flat = grid.flat_index(idx);
        if std::mem::replace(&mut seen[flat], true) {
            return Err(parse_error(path, row, "duplicate grid point"));
        }
        data[flat] = parse_f64(path, row, &record[4], "value")?;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(CliError::format(
            path,
            format!("grid point {:?} missing", grid.multi_index(missing)),
        ));
    }
    Ok(ScalarField::new(grid, data)?)
}

fn component_name(stem: &str, mu: usize) -> String {
    format!("{stem}.A{mu}.csv")
}

/// Writes `<stem>.json` and one `<stem>.A<mu>.csv` per covariant component
/// into `dir`. Returns the sidecar path.
pub fn write_snapshot(dir: &Path, stem: &str, potential: &FourPotential, scheme: &FracScheme) -> Result<PathBuf> {
    let grid = potential.grid();
    let meta = SnapshotMeta {
        counts: grid.counts(),
        lower: grid.lower(),
        upper: grid.upper(),
        alpha: scheme.alpha(),
        beta: scheme.beta(),
        components: (0..AXES).map(|mu| component_name(stem, mu)).collect(),
    };
    for (mu, name) in meta.components.iter().enumerate() {
        let path = dir.join(name);
        let mut out = create(&path)?;
        write_field(&mut out, potential.component(mu))?;
        out.flush().map_err(|e| CliError::io(&path, e))?;
    }
    let sidecar = dir.join(format!("{stem}.json"));
    let text = serde_json::to_string_pretty(&meta).map_err(|e| CliError::format(&sidecar, e.to_string()))?;
    fs::write(&sidecar, text + "\n").map_err(|e| CliError::io(&sidecar, e))?;
    Ok(sidecar)
}

/// Loads a snapshot written by [`write_snapshot`] from its sidecar path.
pub fn read_snapshot(sidecar: &Path) -> Result<(FourPotential, FracScheme)> {
    let text = fs::read_to_string(sidecar).map_err(|e| CliError::io(sidecar, e))?;
    let meta: SnapshotMeta = serde_json::from_str(&text).map_err(|e| CliError::format(sidecar, e.to_string()))?;
    if meta.components.len() != AXES {
        return Err(CliError::format(
            sidecar,
            format!("expected {AXES} component files, found {}", meta.components.len()),
        ));
    }
    let grid = meta.grid()?;
    let scheme = meta.scheme()?;
    let dir = sidecar.parent().unwrap_or(Path::new("."));
    let mut fields = Vec::with_capacity(AXES);
    for name in &meta.components {
        let path = dir.join(name);
        fields.push(read_field_from(&path, open(&path)?, grid)?);
    }
    let components: [ScalarField; AXES] = fields
        .try_into()
        .map_err(|_| CliError::format(sidecar, "component count changed while reading"))?;
    Ok((FourPotential::new(components)?, scheme))
}
