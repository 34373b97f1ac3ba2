//! Riemann-sum approximation of the continuous Fourier transform and its
//! inverse, with an O(N log N) FFT path.
//!
//! For samples `x_j = f(t_j)` on a uniform grid `t_j = t₁ + τ·j`, the forward
//! integral is approximated by
//!
//! ```text
//! F̃(ω) = √(|b|/(2π)^(1−a)) |τ| Σ_j x_j e^{i b ω t_j}
//! ```
//!
//! Evaluating this directly at M frequencies costs O(N·M)
//! ([`forward_naive`]). On the natural frequency grid `ω_k = W·k` with
//! `W = −2π/(τ b N)` the sum collapses to a phase-scaled DFT,
//!
//! ```text
//! F̃(ω_k) = √(|b|/(2π)^(1−a)) |τ| e^{i b ω_k t₁} X_k
//! ```
//!
//! and the whole evaluation costs O(N log N) ([`forward_fft`]). F̃ is
//! periodic up to a phase,
//!
//! ```text
//! F̃(ω + (2π/(τ b)) m) = e^{i (2π/τ) m t₁} F̃(ω)       m ∈ ℤ
//! ```
//!
//! so the natural-grid output can be relabeled onto any window whose start
//! lies on the `W` lattice — in particular the Nyquist-centered window
//! `[−|ω_nyq|, +|ω_nyq|]` that puts negative-frequency content below zero
//! ([`apply_shift`]). The inverse transform mirrors all of this with kernel
//! `e^{−i b ω t}`, prefactor `√(|b|/(2π)^(1+a))`, and wrap phase
//! `e^{−i (2π/W) l ω₁}`.
//!
//! On lattice-aligned input grids (`t₁` an integer multiple of `τ`) the two
//! approximations are exact inverses of each other ([`round_trip`]).

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::convention::TransformConvention;
use crate::dft;
use crate::error::{Error, Result};
use crate::grid::{SampledSignal, Spectrum, UniformGrid};

/// Absolute tolerance on `start/spacing` when snapping a requested output
/// start onto the natural lattice.
pub const START_SNAP_TOL: f64 = 1e-6;

/// Relative tolerance for the origin-alignment precondition of [`round_trip`].
pub const ORIGIN_ALIGN_TOL: f64 = 1e-6;

/// Bookkeeping for one lattice shift: how each output index maps back into
/// the natural grid and how many periods it wrapped on the way.
///
/// Indices are 0-based. For every output index `k`:
///
/// ```text
/// permutation[k] − N·wrap_counts[k] = k + steps
/// ```
///
/// which determines `permutation[k] = (k + steps) mod N` (mathematical
/// modulo) and `wrap_counts[k] = −⌊(k + steps)/N⌋` exactly in integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridShift {
    /// Requested start offset in units of the natural grid spacing.
    pub steps: i64,
    /// Period-wrap count `m_k` per output index.
    pub wrap_counts: Vec<i64>,
    /// Source index into the natural-grid values per output index; a
    /// bijection on `0..N`.
    pub permutation: Vec<usize>,
}

impl GridShift {
    /// Checks the defining relation in exact integer arithmetic.
    pub fn defining_relation_holds(&self) -> bool {
        let n = self.permutation.len() as i64;
        self.permutation.len() == self.wrap_counts.len()
            && self
                .permutation
                .iter()
                .zip(&self.wrap_counts)
                .enumerate()
                .all(|(k, (&q, &m))| q as i64 - n * m == k as i64 + self.steps)
    }
}

/// Relabels natural-grid values onto a window shifted by `steps` lattice
/// points, applying the periodic wrap phase `e^{i m_k θ}` per output index.
///
/// `wrap_angle` is the phase angle θ contributed by one full period wrap:
/// `(2π/τ)·t₁` for forward spectra and `−(2π/W)·ω₁` for inverse-transform
/// outputs. Output index `k` receives the natural-grid value at
/// `(k + steps) mod N` scaled by `exp(i · wrap_counts[k] · wrap_angle)`;
/// the phase is evaluated from the exact angle `m_k·θ`, never by repeated
/// multiplication.
pub fn apply_shift(
    natural_values: &[Complex64],
    steps: i64,
    wrap_angle: f64,
) -> (Vec<Complex64>, GridShift) {
    let n = natural_values.len() as i64;
    assert!(n > 0, "apply_shift needs at least one value");
    let mut values = Vec::with_capacity(natural_values.len());
    let mut wrap_counts = Vec::with_capacity(natural_values.len());
    let mut permutation = Vec::with_capacity(natural_values.len());
    for k in 0..n {
        let j = k + steps;
        let q = j.rem_euclid(n) as usize;
        let m = -j.div_euclid(n);
        values.push(Complex64::cis(m as f64 * wrap_angle) * natural_values[q]);
        wrap_counts.push(m);
        permutation.push(q);
    }
    (
        values,
        GridShift {
            steps,
            wrap_counts,
            permutation,
        },
    )
}

/// Direct Riemann-sum forward transform evaluated at arbitrary frequencies.
/// O(N·M); the oracle for [`forward_fft`].
pub fn forward_naive(
    signal: &SampledSignal,
    omegas: &[f64],
    conv: TransformConvention,
) -> Vec<Complex64> {
    let grid = signal.grid();
    let scale = conv.forward_prefactor() * grid.spacing().abs();
    let b = conv.b();
    omegas
        .iter()
        .map(|&omega| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &xj) in signal.values().iter().enumerate() {
                acc += xj * Complex64::cis(b * omega * grid.point(j));
            }
            acc * scale
        })
        .collect()
}

/// Direct Riemann-sum inverse transform evaluated at arbitrary times.
/// O(N·M); the oracle for [`inverse_fft`].
pub fn inverse_naive(spectrum: &Spectrum, times: &[f64]) -> Vec<Complex64> {
    let grid = spectrum.grid();
    let conv = spectrum.convention();
    let scale = conv.inverse_prefactor() * grid.spacing().abs();
    let b = conv.b();
    times
        .iter()
        .map(|&t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &xk) in spectrum.values().iter().enumerate() {
                acc += xk * Complex64::cis(-b * grid.point(k) * t);
            }
            acc * scale
        })
        .collect()
}

/// Snaps `start` onto the lattice `{n·spacing}` and returns `n`, or an
/// [`Error::OffGridStart`] if it is farther than [`START_SNAP_TOL`] from any
/// lattice point (measured on the ratio).
fn snap_to_lattice(start: f64, spacing: f64) -> Result<i64> {
    let ratio = start / spacing;
    let steps = ratio.round();
    if (ratio - steps).abs() > START_SNAP_TOL {
        return Err(Error::OffGridStart {
            requested: start,
            spacing,
        });
    }
    Ok(steps as i64)
}

/// FFT-path forward transform onto the frequency window starting at
/// `omega_start`, which must lie on the natural lattice `{n·W}` with
/// `W = −2π/(τ b N)`.
///
/// The result grid starts at exactly `n·W` with spacing `W` and `N` bins.
/// Agrees with [`forward_naive`] on those frequencies; costs O(N log N).
pub fn forward_fft(
    signal: &SampledSignal,
    omega_start: f64,
    conv: TransformConvention,
) -> Result<Spectrum> {
    let grid = signal.grid();
    let n = grid.count();
    if n < 2 {
        return Err(Error::GridTooShort);
    }
    let freq = grid.natural_frequency_grid(conv);
    let w = freq.spacing();
    let steps = snap_to_lattice(omega_start, w)?;

    let spectrum = dft::fft(signal.values());
    let scale = conv.forward_prefactor() * grid.spacing().abs();
    // Phase-correct the DFT onto the natural grid ω_k = W·k.
    let angle_step = conv.b() * w * grid.start();
    let natural: Vec<Complex64> = spectrum
        .iter()
        .enumerate()
        .map(|(k, &xk)| xk * Complex64::cis(angle_step * k as f64) * scale)
        .collect();

    let wrap_angle = TAU / grid.spacing() * grid.start();
    let (values, _) = apply_shift(&natural, steps, wrap_angle);

    let out_grid = UniformGrid::new(steps as f64 * w, w, n)?;
    Spectrum::new(out_grid, values, conv)
}

/// FFT-path inverse transform onto the time window starting at `time_start`,
/// which must lie on the natural lattice `{n·τ}` with `τ = −2π/(W b N)`.
///
/// Mirror image of [`forward_fft`]; agrees with [`inverse_naive`].
pub fn inverse_fft(spectrum: &Spectrum, time_start: f64) -> Result<SampledSignal> {
    let grid = spectrum.grid();
    let conv = spectrum.convention();
    let n = grid.count();
    if n < 2 {
        return Err(Error::GridTooShort);
    }
    let time = grid.natural_time_grid(conv);
    let tau = time.spacing();
    let steps = snap_to_lattice(time_start, tau)?;

    let samples = dft::ifft(spectrum.values());
    let scale = conv.inverse_prefactor() * n as f64 * grid.spacing().abs();
    // Phase-correct the inverse DFT onto the natural grid t_j = τ·j.
    let angle_step = -conv.b() * grid.start() * tau;
    let natural: Vec<Complex64> = samples
        .iter()
        .enumerate()
        .map(|(j, &xj)| xj * Complex64::cis(angle_step * j as f64) * scale)
        .collect();

    let wrap_angle = -TAU / grid.spacing() * grid.start();
    let (values, _) = apply_shift(&natural, steps, wrap_angle);

    let out_grid = UniformGrid::new(steps as f64 * tau, tau, n)?;
    SampledSignal::new(out_grid, values)
}

/// Forward then inverse through the FFT path, landing back on the input grid.
///
/// Requires the input origin to be an integer multiple of the spacing
/// (within [`ORIGIN_ALIGN_TOL`] relative); on such grids the two Riemann-sum
/// approximations are exact inverses up to rounding.
pub fn round_trip(signal: &SampledSignal, conv: TransformConvention) -> Result<SampledSignal> {
    let grid = signal.grid();
    let ratio = grid.start() / grid.spacing();
    if (ratio - ratio.round()).abs() > ORIGIN_ALIGN_TOL * ratio.abs().max(1.0) {
        return Err(Error::MisalignedOrigin {
            start: grid.start(),
            spacing: grid.spacing(),
        });
    }
    let spectrum = forward_fft(signal, 0.0, conv)?;
    inverse_fft(&spectrum, grid.start())
}
