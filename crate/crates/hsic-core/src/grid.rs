//! Discretized L²(0,1) geometry: grids, trapezoidal quadrature, inner
//! products, norms and distances for samples of curves.
//!
//! Curves are represented by their values on a fixed grid; integrals are
//! approximated by quadrature weights attached to the grid. Finite
//! dimensional vectors reuse the same machinery through [`Grid::euclidean`],
//! which carries uniform weights `1/d` (the Euclidean inner product up to a
//! fixed positive scale, which cancels in all test decisions).

use ndarray::{Array2, ArrayView1};

use crate::error::{HsicError, Result};

/// A quadrature grid on `[0, 1]`.
///
/// Invariants enforced at construction:
/// - at least two points for quadrature grids, strictly increasing,
///   starting at `0` and ending at `1`;
/// - one weight per point, all nonnegative, summing to one.
///
/// [`Grid::euclidean`] is the single exception: it models `R^d` with uniform
/// weights `1/d` and admits `d = 1` so that scalar series fit the same API.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl Grid {
    /// Equally spaced grid of `m >= 2` points on `[0, 1]` with composite
    /// trapezoid weights: `h/2` at the endpoints, `h` inside, `h = 1/(m-1)`.
    pub fn uniform(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(HsicError::InvalidGrid(format!(
                "uniform grid needs at least 2 points, got {m}"
            )));
        }
        let h = 1.0 / (m - 1) as f64;
        let points: Vec<f64> = (0..m).map(|k| k as f64 / (m - 1) as f64).collect();
        let mut weights = vec![h; m];
        weights[0] = 0.5 * h;
        weights[m - 1] = 0.5 * h;
        Ok(Self { points, weights })
    }

    /// Grid on arbitrary strictly increasing points with `points[0] = 0` and
    /// `points[m-1] = 1`, carrying the general trapezoid weights
    /// `w_k = (t_{k+1} - t_{k-1}) / 2` (one-sided at the ends).
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        let m = points.len();
        if m < 2 {
            return Err(HsicError::InvalidGrid(format!(
                "grid needs at least 2 points, got {m}"
            )));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(HsicError::InvalidGrid("non-finite grid point".into()));
        }
        if points[0] != 0.0 || points[m - 1] != 1.0 {
            return Err(HsicError::InvalidGrid(format!(
                "grid must span [0, 1], got [{}, {}]",
                points[0],
                points[m - 1]
            )));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(HsicError::InvalidGrid(
                "grid points must be strictly increasing".into(),
            ));
        }
        let mut weights = vec![0.0; m];
        weights[0] = 0.5 * (points[1] - points[0]);
        weights[m - 1] = 0.5 * (points[m - 1] - points[m - 2]);
        for k in 1..m - 1 {
            weights[k] = 0.5 * (points[k + 1] - points[k - 1]);
        }
        Ok(Self { points, weights })
    }

    /// Grid modelling `R^d` with uniform weights `1/d`.
    ///
    /// The points are cosmetic for vector data (only the weights enter inner
    /// products); they are set to an equally spaced layout, or `[0]` for
    /// `d = 1`.
    pub fn euclidean(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(HsicError::InvalidGrid(
                "euclidean grid needs at least 1 coordinate".into(),
            ));
        }
        let points = if d == 1 {
            vec![0.0]
        } else {
            (0..d).map(|k| k as f64 / (d - 1) as f64).collect()
        };
        Ok(Self {
            points,
            weights: vec![1.0 / d as f64; d],
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Weighted inner product `sum_k w_k f(t_k) g(t_k)`.
pub fn inner_product(f: ArrayView1<f64>, g: ArrayView1<f64>, grid: &Grid) -> Result<f64> {
    check_len(f.len(), grid)?;
    check_len(g.len(), grid)?;
    Ok(f.iter()
        .zip(g.iter())
        .zip(grid.weights())
        .map(|((a, b), w)| w * a * b)
        .sum())
}

/// Quadrature norm `sqrt(<f, f>)`.
pub fn norm(f: ArrayView1<f64>, grid: &Grid) -> Result<f64> {
    check_len(f.len(), grid)?;
    let s: f64 = f
        .iter()
        .zip(grid.weights())
        .map(|(a, w)| w * a * a)
        .sum();
    Ok(s.max(0.0).sqrt())
}

/// Quadrature distance `|| f - g ||`.
pub fn distance(f: ArrayView1<f64>, g: ArrayView1<f64>, grid: &Grid) -> Result<f64> {
    check_len(f.len(), grid)?;
    check_len(g.len(), grid)?;
    let s: f64 = f
        .iter()
        .zip(g.iter())
        .zip(grid.weights())
        .map(|((a, b), w)| {
            let d = a - b;
            w * d * d
        })
        .sum();
    Ok(s.max(0.0).sqrt())
}

fn check_len(len: usize, grid: &Grid) -> Result<()> {
    if len != grid.len() {
        return Err(HsicError::DimensionMismatch(format!(
            "curve has {len} values but grid has {} points",
            grid.len()
        )));
    }
    Ok(())
}

/// `n` observed curves evaluated on a common grid, one curve per row.
#[derive(Debug, Clone)]
pub struct FunctionalSample {
    values: Array2<f64>,
    grid: Grid,
}

impl FunctionalSample {
    /// Wraps an `n x m` value matrix; every entry must be finite and `m`
    /// must match the grid.
    pub fn new(values: Array2<f64>, grid: Grid) -> Result<Self> {
        if values.nrows() == 0 {
            return Err(HsicError::DimensionMismatch(
                "sample needs at least one observation".into(),
            ));
        }
        if values.ncols() != grid.len() {
            return Err(HsicError::DimensionMismatch(format!(
                "sample has {} columns but grid has {} points",
                values.ncols(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(HsicError::Data("sample contains a non-finite value".into()));
        }
        Ok(Self { values, grid })
    }

    /// Builds a sample from row vectors; all rows must share the grid length.
    pub fn from_rows(rows: &[Vec<f64>], grid: Grid) -> Result<Self> {
        let n = rows.len();
        let m = grid.len();
        let mut flat = Vec::with_capacity(n * m);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(HsicError::DimensionMismatch(format!(
                    "row {} has {} values but grid has {m} points",
                    i + 1,
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        let values = Array2::from_shape_vec((n, m), flat)
            .map_err(|e| HsicError::DimensionMismatch(e.to_string()))?;
        Self::new(values, grid)
    }

    /// A scalar series viewed as vectors in `R^1`.
    pub fn from_scalars(xs: &[f64]) -> Result<Self> {
        let values = Array2::from_shape_vec((xs.len(), 1), xs.to_vec())
            .map_err(|e| HsicError::DimensionMismatch(e.to_string()))?;
        Self::new(values, Grid::euclidean(1)?)
    }

    /// Number of observations.
    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    /// The `i`-th observed curve.
    pub fn curve(&self, i: usize) -> ArrayView1<f64> {
        self.values.row(i)
    }

    /// Restricts the sample to rows `[start, end)`.
    pub fn slice_rows(&self, start: usize, end: usize) -> Result<Self> {
        if start >= end || end > self.n() {
            return Err(HsicError::DimensionMismatch(format!(
                "row range {start}..{end} out of bounds for n = {}",
                self.n()
            )));
        }
        let values = self
            .values
            .slice(ndarray::s![start..end, ..])
            .to_owned();
        Ok(Self {
            values,
            grid: self.grid.clone(),
        })
    }
}
