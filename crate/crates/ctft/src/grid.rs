//! Uniform axes and the sampled-data containers bound to them.
//!
//! A [`UniformGrid`] is stored as `(start, spacing, count)` rather than as a
//! materialized point list so that shift arithmetic stays exact in integer
//! steps. Time and frequency axes share the representation; the conjugate
//! ("natural") grid constructions below tie the two domains together:
//!
//! ```text
//! ω_k = −2π (k−1) / (τ b N)        natural frequency grid of a time grid
//! t_j = −2π (j−1) / (W b N)        natural time grid of a frequency grid
//! ```
//!
//! where `τ` and `W` are the respective spacings and `b` the convention's
//! frequency factor.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::convention::TransformConvention;
use crate::error::{Error, Result};

/// Relative tolerance on consecutive gaps when recovering a grid from points.
pub const UNIFORMITY_REL_TOL: f64 = 1e-9;

/// An evenly spaced axis: `point(j) = start + spacing·j` for `j = 0..count`.
///
/// Spacing may be negative (descending axes are legal); it must be nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    start: f64,
    spacing: f64,
    count: usize,
}

impl UniformGrid {
    /// Builds a grid, rejecting non-finite fields, zero spacing, and zero count.
    pub fn new(start: f64, spacing: f64, count: usize) -> Result<Self> {
        if !start.is_finite() || !spacing.is_finite() || spacing == 0.0 || count == 0 {
            return Err(Error::InvalidGrid {
                start,
                spacing,
                count,
            });
        }
        Ok(Self {
            start,
            spacing,
            count,
        })
    }

    /// First axis value.
    pub fn start(&self) -> f64 {
        self.start
    }

    /// Step between consecutive points (signed).
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Number of points.
    pub fn count(&self) -> usize {
        self.count
    }

    /// The `j`-th axis value (0-based).
    pub fn point(&self, j: usize) -> f64 {
        debug_assert!(j < self.count);
        self.start + self.spacing * j as f64
    }

    /// All axis values in order.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |j| self.point(j))
    }

    /// The conjugate frequency axis on which a Riemann-sum forward transform
    /// of data on `self` is exactly a phase-scaled DFT: spacing
    /// `W = −2π/(τ b N)`, starting at zero.
    pub fn natural_frequency_grid(&self, conv: TransformConvention) -> UniformGrid {
        let w = -TAU / (self.spacing * conv.b() * self.count as f64);
        UniformGrid {
            start: 0.0,
            spacing: w,
            count: self.count,
        }
    }

    /// The conjugate time axis of a frequency grid: spacing `τ = −2π/(W b N)`,
    /// starting at zero. Mirror image of [`Self::natural_frequency_grid`].
    pub fn natural_time_grid(&self, conv: TransformConvention) -> UniformGrid {
        let tau = -TAU / (self.spacing * conv.b() * self.count as f64);
        UniformGrid {
            start: 0.0,
            spacing: tau,
            count: self.count,
        }
    }

    /// Nyquist frequency `−π/(τ b)` of a time grid with spacing `τ`.
    pub fn nyquist_frequency(&self, conv: TransformConvention) -> f64 {
        -PI / (self.spacing * conv.b())
    }
}

/// Recovers a [`UniformGrid`] from an explicit point list.
///
/// The spacing is taken as `(last − first)/(N − 1)` and every consecutive gap
/// must agree with it to within [`UNIFORMITY_REL_TOL`] relative. Descending
/// inputs are accepted and produce negative spacing.
pub fn infer_grid(points: &[f64]) -> Result<UniformGrid> {
    if points.len() < 2 {
        return Err(Error::TooShort { len: points.len() });
    }
    let count = points.len();
    let start = points[0];
    let spacing = (points[count - 1] - start) / (count - 1) as f64;
    if !spacing.is_finite() || spacing == 0.0 || !start.is_finite() {
        return Err(Error::NonUniformGrid {
            index: 0,
            expected: spacing,
            actual: points[1] - points[0],
        });
    }
    let tol = UNIFORMITY_REL_TOL * spacing.abs();
    for (index, pair) in points.windows(2).enumerate() {
        let gap = pair[1] - pair[0];
        if (gap - spacing).abs() > tol {
            return Err(Error::NonUniformGrid {
                index,
                expected: spacing,
                actual: gap,
            });
        }
    }
    UniformGrid::new(start, spacing, count)
}

/// Complex samples of a time-domain function on a [`UniformGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: UniformGrid,
    values: Vec<Complex64>,
}

impl SampledSignal {
    /// Binds sample values to a time grid; lengths must match.
    pub fn new(grid: UniformGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                count: grid.count(),
            });
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every grid point.
    pub fn from_fn(grid: UniformGrid, mut f: impl FnMut(f64) -> Complex64) -> Self {
        let values = grid.points().map(&mut f).collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Complex transform values on a frequency-domain [`UniformGrid`], together
/// with the convention they were computed under.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: UniformGrid,
    values: Vec<Complex64>,
    convention: TransformConvention,
}

impl Spectrum {
    /// Binds transform values to a frequency grid; lengths must match.
    pub fn new(
        grid: UniformGrid,
        values: Vec<Complex64>,
        convention: TransformConvention,
    ) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                count: grid.count(),
            });
        }
        Ok(Self {
            grid,
            values,
            convention,
        })
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn convention(&self) -> TransformConvention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn conv(a: f64, b: f64) -> TransformConvention {
        TransformConvention::new(a, b).unwrap()
    }

    #[test]
    fn infer_grid_recovers_fig2_style_axis() {
        // 201 evenly spaced points on [-10, 10].
        let points: Vec<f64> = (0..201).map(|j| -10.0 + 0.1 * j as f64).collect();
        let grid = infer_grid(&points).unwrap();
        assert_eq!(grid.count(), 201);
        assert_relative_eq!(grid.start(), -10.0);
        assert_relative_eq!(grid.spacing(), 0.1, max_relative = 1e-12);
    }

    #[test]
    fn infer_grid_two_points() {
        let grid = infer_grid(&[0.0, 1.0]).unwrap();
        assert_eq!((grid.start(), grid.spacing(), grid.count()), (0.0, 1.0, 2));
    }

    #[test]
    fn infer_grid_rejects_irregular_gap() {
        let err = infer_grid(&[0.0, 1.0, 2.1]).unwrap_err();
        assert!(matches!(err, Error::NonUniformGrid { .. }));
    }

    #[test]
    fn infer_grid_rejects_short_and_degenerate_input() {
        assert!(matches!(infer_grid(&[0.0]), Err(Error::TooShort { len: 1 })));
        assert!(infer_grid(&[1.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn infer_grid_accepts_descending_points() {
        let grid = infer_grid(&[3.0, 2.0, 1.0]).unwrap();
        assert_relative_eq!(grid.spacing(), -1.0);
    }

    #[test]
    fn natural_frequency_grid_examples() {
        // τ=1, N=201, b=−1: W = 2π/201.
        let g = UniformGrid::new(-100.0, 1.0, 201).unwrap();
        let f = g.natural_frequency_grid(conv(0.0, -1.0));
        assert_relative_eq!(f.spacing(), TAU / 201.0, max_relative = 1e-14);
        assert_eq!(f.start(), 0.0);
        assert_eq!(f.count(), 201);
        assert_relative_eq!(f.point(200), 200.0 * TAU / 201.0, max_relative = 1e-12);

        // τ=1, N=1, b=1: W = −2π.
        let g = UniformGrid::new(0.0, 1.0, 1).unwrap();
        let f = g.natural_frequency_grid(conv(0.0, 1.0));
        assert_relative_eq!(f.spacing(), -TAU, max_relative = 1e-14);

        // τ=0.1, N=201, b=−1: W = 2π/20.1 ≈ 0.3125963.
        let g = UniformGrid::new(-10.0, 0.1, 201).unwrap();
        let f = g.natural_frequency_grid(conv(0.0, -1.0));
        assert_relative_eq!(f.spacing(), 0.312596283939283, max_relative = 1e-12);
    }

    #[test]
    fn natural_time_grid_examples() {
        // W=2π/201, N=201, b=−1: τ = 1.
        let g = UniformGrid::new(0.0, TAU / 201.0, 201).unwrap();
        let t = g.natural_time_grid(conv(0.0, -1.0));
        assert_relative_eq!(t.spacing(), 1.0, max_relative = 1e-14);

        // W=−2π, N=1, b=1: τ = 1.
        let g = UniformGrid::new(0.0, -TAU, 1).unwrap();
        let t = g.natural_time_grid(conv(0.0, 1.0));
        assert_relative_eq!(t.spacing(), 1.0, max_relative = 1e-14);

        // W=1, N=4, b=1: τ = −π/2.
        let g = UniformGrid::new(0.0, 1.0, 4).unwrap();
        let t = g.natural_time_grid(conv(0.0, 1.0));
        assert_relative_eq!(t.spacing(), -PI / 2.0, max_relative = 1e-14);
    }

    #[test]
    fn nyquist_frequency_examples() {
        let g = UniformGrid::new(0.0, 1.0, 16).unwrap();
        assert_relative_eq!(g.nyquist_frequency(conv(0.0, -1.0)), PI, max_relative = 1e-14);

        let g = UniformGrid::new(0.0, PI, 16).unwrap();
        assert_relative_eq!(g.nyquist_frequency(conv(0.0, 1.0)), -1.0, max_relative = 1e-14);

        // τ=0.1, b=−1: 10π, the edge of the rect-pulse demo window.
        let g = UniformGrid::new(-10.0, 0.1, 201).unwrap();
        assert_relative_eq!(
            g.nyquist_frequency(conv(0.0, -1.0)),
            10.0 * PI,
            max_relative = 1e-14
        );
    }

    #[test]
    fn signal_and_spectrum_reject_length_mismatch() {
        let g = UniformGrid::new(0.0, 1.0, 3).unwrap();
        assert!(SampledSignal::new(g, vec![Complex64::new(1.0, 0.0); 2]).is_err());
        assert!(Spectrum::new(g, vec![Complex64::new(1.0, 0.0); 4], conv(0.0, -1.0)).is_err());
    }

    proptest! {
        // The two natural-grid maps invert each other's spacing.
        #[test]
        fn natural_grids_mutually_inverse(
            spacing in prop::sample::select(vec![-2.0f64, -0.125, 0.05, 0.1, 1.0, 3.5]),
            count in 1usize..300,
            b in prop::sample::select(vec![-TAU, -1.0f64, 1.0, TAU]),
        ) {
            let c = conv(0.0, b);
            let g = UniformGrid::new(0.0, spacing, count).unwrap();
            let back = g.natural_frequency_grid(c).natural_time_grid(c);
            prop_assert!((back.spacing() - spacing).abs() <= 1e-12 * spacing.abs());

            // Conjugate-grid product identity: |W|·|τ|·N = 2π/|b|.
            let w = g.natural_frequency_grid(c).spacing();
            let product = w.abs() * spacing.abs() * count as f64;
            prop_assert!((product - TAU / b.abs()).abs() <= 1e-12 * (TAU / b.abs()));
        }

        // infer_grid reproduces any grid from its own points.
        #[test]
        fn infer_grid_round_trip(
            start in -1e3f64..1e3,
            spacing in prop::sample::select(vec![-3.0f64, -0.25, 0.01, 0.5, 2.0]),
            count in 2usize..400,
        ) {
            let grid = UniformGrid::new(start, spacing, count).unwrap();
            let points: Vec<f64> = grid.points().collect();
            let back = infer_grid(&points).unwrap();
            prop_assert_eq!(back.count(), count);
            prop_assert!((back.start() - start).abs() <= 1e-12 * start.abs().max(1.0));
            prop_assert!((back.spacing() - spacing).abs() <= 1e-12 * spacing.abs());
        }
    }
}
