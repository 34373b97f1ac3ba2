//! Fourier-transform convention constants and their scalar prefactors.
//!
//! A convention is the pair `(a, b)` selecting where the `2π` normalization
//! lives and how frequency is signed/scaled:
//!
//! ```text
//! forward:  f̃(ω) = √(|b| / (2π)^(1−a)) ∫ f(t) e^{i b ω t} dt
//! inverse:  f(t) = √(|b| / (2π)^(1+a)) ∫ f̃(ω) e^{−i b ω t} dω
//! ```
//!
//! `(a, b) = (0, −1)` is the symmetric "angular frequency" convention used
//! throughout the demos; `(a, b) = (1, 1)` and `(−1, 1)` push the whole
//! `1/2π` onto one side.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// The `(a, b)` constants selecting a Fourier-transform convention.
///
/// `a` and `b` may be any finite reals with `b ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformConvention {
    a: f64,
    b: f64,
}

impl TransformConvention {
    /// Builds a convention, rejecting non-finite constants and `b = 0`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || b == 0.0 {
            return Err(Error::InvalidConvention { a, b });
        }
        Ok(Self { a, b })
    }

    /// The normalization-placement exponent.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The frequency sign/scale factor.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// `√(|b| / (2π)^(1−a))`, the scalar multiplying the forward transform.
    pub fn forward_prefactor(&self) -> f64 {
        (self.b.abs() / TAU.powf(1.0 - self.a)).sqrt()
    }

    /// `√(|b| / (2π)^(1+a))`, the scalar multiplying the inverse transform.
    pub fn inverse_prefactor(&self) -> f64 {
        (self.b.abs() / TAU.powf(1.0 + self.a)).sqrt()
    }
}

/// `(a, b) = (0, −1)`: the symmetric convention with `e^{−iωt}` forward kernel.
impl Default for TransformConvention {
    fn default() -> Self {
        Self { a: 0.0, b: -1.0 }
    }
}
