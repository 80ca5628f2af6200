//! Scalar abstraction for the numerical core.
//!
//! Everything numeric in this crate is generic over [`Real`], which bundles
//! the nalgebra field operations with the num-traits conversions needed to
//! move literals and RNG output (always produced in `f64`) into the working
//! precision. `f32` and `f64` are the supported instantiations; the crate
//! root exposes `f64` aliases for ordinary use.

use num_traits::{FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display, LowerExp};

pub trait Real:
    nalgebra::RealField
    + FromPrimitive
    + ToPrimitive
    + Copy
    + Default
    + Display
    + Debug
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` literal or RNG draw.
    fn of(x: f64) -> Self;

    /// Conversion back to `f64` for reporting and serialization.
    fn to64(self) -> f64;

    fn is_finite_scalar(self) -> bool;
}

impl Real for f64 {
    #[inline]
    fn of(x: f64) -> Self {
        x
    }

    #[inline]
    fn to64(self) -> f64 {
        self
    }

    #[inline]
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }
}

impl Real for f32 {
    #[inline]
    fn of(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn to64(self) -> f64 {
        self as f64
    }

    #[inline]
    fn is_finite_scalar(self) -> bool {
        self.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_round_trip() {
        assert_eq!(f64::of(0.5).to64(), 0.5);
        assert_eq!(f32::of(0.5).to64(), 0.5);
        assert!(f64::of(1.0).is_finite_scalar());
        assert!(!f64::of(f64::INFINITY).is_finite_scalar());
    }
}
