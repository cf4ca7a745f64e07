//! Evenly spaced evaluation grids and the parallel/serial point dispatcher.

use crate::CliError;

/// An inclusive, evenly spaced grid of at least two points.
///
/// Point `i` is computed as `start + i·(stop−start)/(count−1)`, the same
/// arithmetic on every code path, so grid values are bit-identical between
/// the parallel and serial dispatchers and across runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    count: usize,
}

impl Grid {
    /// Builds a grid, rejecting non-finite endpoints and `count < 2`.
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, CliError> {
        if !start.is_finite() || !stop.is_finite() {
            return Err(CliError::Usage(format!(
                "grid endpoints must be finite, got from={start} to={stop}"
            )));
        }
        if count < 2 {
            return Err(CliError::Usage(format!(
                "a sweep needs at least 2 grid points, got count={count}"
            )));
        }
        Ok(Grid { start, stop, count })
    }

    /// First grid point.
    pub fn start(&self) -> f64 {
        self.start
    }

    /// Last grid point.
    pub fn stop(&self) -> f64 {
        self.stop
    }

    /// Number of points.
    pub fn count(&self) -> usize {
        self.count
    }

    /// The `i`-th grid value.
    pub fn value(&self, i: usize) -> f64 {
        debug_assert!(i < self.count);
        let span = self.stop - self.start;
        self.start + span * (i as f64) / ((self.count - 1) as f64)
    }

    /// All grid values in order.
    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }

    /// Smallest value on the grid (for domain pre-checks).
    pub fn min(&self) -> f64 {
        self.start.min(self.stop)
    }
}

/// Applies `f` to `0..n`, in parallel when the `parallel` feature is on,
/// and returns the results in index order either way.
#[cfg(feature = "parallel")]
pub fn map_grid<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Applies `f` to `0..n` on the current thread, in index order. With the
/// `parallel` feature disabled this is what [`map_grid`] does too.
#[cfg(not(feature = "parallel"))]
pub fn map_grid<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_grid_serial(n, f)
}

/// Single-threaded grid dispatch, always compiled; the benchmark suite
/// compares it against the parallel path.
pub fn map_grid_serial<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Collects per-point results, surfacing the first error in grid order so
/// the parallel and serial paths report identically.
pub(crate) fn collect_points<T>(results: Vec<Result<T, CliError>>) -> Result<Vec<T>, CliError> {
    results.into_iter().collect()
}
