//! The discrete Fourier transform pair.
//!
//! Convention (no scaling on the forward side, `1/N` on the inverse):
//!
//! ```text
//! X_k = Σ_j x_j e^{−2πi jk/N}          j, k = 0..N
//! x_j = (1/N) Σ_k X_k e^{+2πi jk/N}
//! ```
//!
//! [`dft_naive`] and [`idft_naive`] are the literal O(N²) double loops and
//! serve as the oracle everywhere else in the crate. [`fft`] and [`ifft`]
//! compute the same values in O(N log N) for arbitrary `N` (rustfft plans
//! mixed-radix or Bluestein automatically; its sign convention already
//! matches the definition above, so only the inverse `1/N` is applied here).

use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Direct-sum DFT. O(N²); the reference oracle for [`fft`].
pub fn dft_naive(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &xj) in x.iter().enumerate() {
            // Reduce j·k mod N before forming the angle so the phase stays
            // accurate at large N.
            let angle = -TAU * ((j * k) % n) as f64 / n as f64;
            acc += xj * Complex64::cis(angle);
        }
        out.push(acc);
    }
    out
}

/// Direct-sum inverse DFT (carries the `1/N`). O(N²); oracle for [`ifft`].
pub fn idft_naive(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let scale = 1.0 / n as f64;
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &xk) in x.iter().enumerate() {
            let angle = TAU * ((j * k) % n) as f64 / n as f64;
            acc += xk * Complex64::cis(angle);
        }
        out.push(acc * scale);
    }
    out
}

/// Fast DFT for arbitrary `N`, identical contract to [`dft_naive`].
pub fn fft(x: &[Complex64]) -> Vec<Complex64> {
    if x.len() <= 1 {
        return x.to_vec();
    }
    let mut buf = x.to_vec();
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(buf.len()).process(&mut buf);
    buf
}

/// Fast inverse DFT for arbitrary `N`, identical contract to [`idft_naive`].
pub fn ifft(x: &[Complex64]) -> Vec<Complex64> {
    if x.len() <= 1 {
        return x.to_vec();
    }
    let mut buf = x.to_vec();
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(buf.len()).process(&mut buf);
    let scale = 1.0 / buf.len() as f64;
    for v in &mut buf {
        *v *= scale;
    }
    buf
}
