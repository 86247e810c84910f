//! Global sign/zero tolerance.
//!
//! Every boundary decision in the crate goes through [`sign_with`]: a value
//! `v` is treated as zero when `|v| <= tau * scale`, where `scale` is the
//! magnitude of the terms that produced `v`. The factor `tau` defaults to
//! 1e-9 and can be overridden process-wide (the CLI exposes `--tol`).

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOL_BITS: AtomicU64 = AtomicU64::new(f64::to_bits(DEFAULT_TOLERANCE));

/// Current relative tolerance `tau`.
pub fn tolerance() -> f64 {
    f64::from_bits(TOL_BITS.load(Ordering::Relaxed))
}

/// Overrides the tolerance for the whole process.
///
/// Intended for startup configuration; callers racing computations against
/// a tolerance change get whichever value was visible at the time.
pub fn set_tolerance(tau: f64) {
    assert!(tau.is_finite() && tau > 0.0, "tolerance must be finite and positive");
    TOL_BITS.store(tau.to_bits(), Ordering::Relaxed);
}

/// Outcome of a tolerance-aware sign query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

/// Sign of `v` measured against `tau * scale`.
///
/// `scale` should be the largest magnitude among the terms entering `v`;
/// a non-finite or zero `scale` degenerates to an exact comparison.
pub fn sign_with(v: f64, scale: f64) -> Sign {
    let band = tolerance() * scale.abs();
    if v > band {
        Sign::Positive
    } else if v < -band {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// True when `v` is within the tolerance band around zero.
pub fn is_zero_with(v: f64, scale: f64) -> bool {
    sign_with(v, scale).is_zero()
}
