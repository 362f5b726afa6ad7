//! Uniform space-time lattices and real sample arrays over them.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result, AXES};

/// Uniform rectangular lattice over `[a_0,b_0] x ... x [a_3,b_3]`.
///
/// Samples include both endpoints, so `h_mu = (b_mu - a_mu) / (n_mu - 1)`.
/// Storage is row-major with axis 0 varying slowest.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    counts: [usize; AXES],
    lower: [f64; AXES],
    upper: [f64; AXES],
}

impl Grid {
    pub fn new(counts: [usize; AXES], lower: [f64; AXES], upper: [f64; AXES]) -> Result<Self> {
        for axis in 0..AXES {
            if counts[axis] < 2 {
                return Err(Error::TooFewSamples {
                    got: counts[axis],
                    min: 2,
                });
            }
            if !(lower[axis].is_finite() && upper[axis].is_finite() && lower[axis] < upper[axis]) {
                return Err(Error::Domain(alloc::format!(
                    "axis {axis}: need finite endpoints with a < b, got [{}, {}]",
                    lower[axis],
                    upper[axis]
                )));
            }
        }
        Ok(Grid { counts, lower, upper })
    }

    /// Same count and interval on every axis.
    pub fn cube(count: usize, lower: f64, upper: f64) -> Result<Self> {
        Grid::new([count; AXES], [lower; AXES], [upper; AXES])
    }

    pub fn counts(&self) -> [usize; AXES] {
        self.counts
    }

    pub fn count(&self, axis: usize) -> usize {
        self.counts[axis]
    }

    pub fn lower(&self) -> [f64; AXES] {
        self.lower
    }

    pub fn upper(&self) -> [f64; AXES] {
        self.upper
    }

    pub fn spacing(&self, axis: usize) -> f64 {
        (self.upper[axis] - self.lower[axis]) / (self.counts[axis] - 1) as f64
    }

    pub fn coord(&self, axis: usize, i: usize) -> f64 {
        if i + 1 == self.counts[axis] {
            self.upper[axis]
        } else {
            self.lower[axis] + i as f64 * self.spacing(axis)
        }
    }

    /// Total number of lattice points.
    pub fn len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn volume(&self) -> f64 {
        (0..AXES).map(|a| self.upper[a] - self.lower[a]).product()
    }

    /// Distance in the flat array between neighbours along `axis`.
    pub fn stride(&self, axis: usize) -> usize {
        self.counts[axis + 1..].iter().product()
    }

    pub fn flat_index(&self, idx: [usize; AXES]) -> usize {
        idx.iter().zip(self.counts.iter()).fold(0, |acc, (&i, &n)| acc * n + i)
    }

    pub fn multi_index(&self, mut flat: usize) -> [usize; AXES] {
        let mut idx = [0; AXES];
        for axis in (0..AXES).rev() {
            idx[axis] = flat % self.counts[axis];
            flat /= self.counts[axis];
        }
        idx
    }

    pub fn point(&self, idx: [usize; AXES]) -> [f64; AXES] {
        core::array::from_fn(|axis| self.coord(axis, idx[axis]))
    }

    /// True if any index sits on the first or last layer of its axis.
    pub fn on_boundary(&self, idx: [usize; AXES]) -> bool {
        (0..AXES).any(|a| idx[a] == 0 || idx[a] + 1 == self.counts[a])
    }

    /// Flat offsets of the first sample of every 1-D line along `axis`.
    pub fn line_starts(&self, axis: usize) -> impl Iterator<Item = usize> + '_ {
        let stride = self.stride(axis);
        let block = stride * self.counts[axis];
        (0..self.len() / self.counts[axis]).map(move |k| (k / stride) * block + k % stride)
    }
}

/// Real samples on every point of a [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarField {
    grid: Grid,
    data: Vec<f64>,
}

impl ScalarField {
    pub fn new(grid: Grid, data: Vec<f64>) -> Result<Self> {
        if data.len() != grid.len() {
            return Err(Error::Domain(alloc::format!(
                "field has {} samples but the grid has {} points",
                data.len(),
                grid.len()
            )));
        }
        Ok(ScalarField { grid, data })
    }

    pub fn zeros(grid: Grid) -> Self {
        ScalarField {
            grid,
            data: vec![0.0; grid.len()],
        }
    }

    pub fn constant(grid: Grid, value: f64) -> Self {
        ScalarField {
            grid,
            data: vec![value; grid.len()],
        }
    }

    /// Samples `f` at every lattice coordinate.
    pub fn from_fn(grid: Grid, mut f: impl FnMut([f64; AXES]) -> f64) -> Self {
        let data = (0..grid.len()).map(|k| f(grid.point(grid.multi_index(k)))).collect();
        ScalarField { grid, data }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn get(&self, idx: [usize; AXES]) -> f64 {
        self.data[self.grid.flat_index(idx)]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Max-abs over points that are not on the outer layer of the grid.
    pub fn max_abs_interior(&self) -> f64 {
        self.data
            .iter()
            .enumerate()
            .filter(|(k, _)| !self.grid.on_boundary(self.grid.multi_index(*k)))
            .fold(0.0, |m, (_, v)| m.max(v.abs()))
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        ScalarField {
            grid: self.grid,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_with(&self, other: &ScalarField, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.grid, other.grid, "fields live on different grids");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        ScalarField { grid: self.grid, data }
    }

    pub fn scaled(&self, s: f64) -> Self {
        self.map(|v| s * v)
    }

    /// Pointwise `sum_k (a_k * b_k)` weighted by `weights`.
    pub fn weighted_dot(&self, other: &ScalarField, weights: &[f64]) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .zip(weights)
            .map(|((a, b), w)| w * a * b)
            .sum()
    }
}

pub(crate) fn ensure_same_grid<'a>(mut fields: impl Iterator<Item = &'a ScalarField>) -> Result<Grid> {
    let first = *fields.next().expect("at least one field").grid();
    if fields.all(|f| *f.grid() == first) {
        Ok(first)
    } else {
        Err(Error::GridMismatch)
    }
}

impl Add for &ScalarField {
    type Output = ScalarField;
    fn add(self, rhs: &ScalarField) -> ScalarField {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ScalarField {
    type Output = ScalarField;
    fn sub(self, rhs: &ScalarField) -> ScalarField {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        self.map(|v| -v)
    }
}

impl Mul<&ScalarField> for f64 {
    type Output = ScalarField;
    fn mul(self, rhs: &ScalarField) -> ScalarField {
        rhs.scaled(self)
    }
}
