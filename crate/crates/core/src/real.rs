//! Scalar abstraction for the simulation math.
//!
//! Everything numeric in the simulator is generic over [`Real`] so the same
//! code runs on `f32` and `f64`. The trait is `num_traits::Float` plus the
//! constants and conversions the engine needs.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumCast};

/// Floating-point scalar used throughout the simulator.
pub trait Real: Float + FloatConst + Debug + Display + Sum + Send + Sync + 'static {
    /// Map 64 random bits to a uniform value in `[0, 1)`.
    ///
    /// Uses the top mantissa-width bits so every representable output is an
    /// exact multiple of 2^-53 (f64) or 2^-24 (f32); the result can never
    /// round up to 1.0.
    fn unit_from_bits(bits: u64) -> Self;

    /// Lossy conversion from an `f64` literal (rounds once for `f32`).
    fn from_f64(v: f64) -> Self {
        <Self as NumCast>::from(v).expect("finite f64 converts to any Real")
    }

    /// Conversion from a count; exact for the magnitudes the simulator uses.
    fn from_usize(v: usize) -> Self {
        <Self as NumCast>::from(v).expect("usize converts to any Real")
    }
}

impl Real for f64 {
    #[inline]
    fn unit_from_bits(bits: u64) -> Self {
        (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

impl Real for f32 {
    #[inline]
    fn unit_from_bits(bits: u64) -> Self {
        (bits >> 40) as f32 * (1.0 / (1u32 << 24) as f32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_from_bits_covers_half_open_interval() {
        assert_eq!(f64::unit_from_bits(0), 0.0);
        assert_eq!(f32::unit_from_bits(0), 0.0);
        // All-ones bits map to the largest representable value below 1.
        assert!(f64::unit_from_bits(u64::MAX) < 1.0);
        assert!(f32::unit_from_bits(u64::MAX) < 1.0);
        assert!(f64::unit_from_bits(u64::MAX) > 0.9999);
        assert!(f32::unit_from_bits(u64::MAX) > 0.9999);
    }

    #[test]
    fn from_f64_round_trips_for_f64() {
        assert_eq!(<f64 as Real>::from_f64(0.3), 0.3);
        assert_eq!(<f64 as Real>::from_usize(300), 300.0);
    }
}
