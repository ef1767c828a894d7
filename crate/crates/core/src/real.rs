//! Scalar abstraction for the numeric core.
//!
//! All of the math in this crate (environment model, flight dynamics,
//! decision metrics, planners, controllers) is written against the [`Real`]
//! trait so it can be instantiated at `f32` or `f64`. The simulation stack
//! itself runs on the concrete [`crate::Scalar`] alias.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used by the numeric core.
pub trait Real:
    Float + FloatConst + FromPrimitive + Default + std::fmt::Debug + std::fmt::Display + 'static
{
    /// Lift an `f64` literal into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Round-trip to `f64` (lossy for wider types, exact for f32/f64).
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Wrap an angle into `(-pi, pi]`.
pub fn wrap_angle<R: Real>(a: R) -> R {
    let two_pi = R::PI() + R::PI();
    let mut a = a % two_pi;
    if a > R::PI() {
        a = a - two_pi;
    } else if a <= -R::PI() {
        a = a + two_pi;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_angle_range() {
        for k in -20..20 {
            let a = 0.37 + (k as f64) * 1.1;
            let w = wrap_angle(a);
            assert!(w > -std::f64::consts::PI && w <= std::f64::consts::PI);
            // same direction
            assert!((w.sin() - a.sin()).abs() < 1e-12);
            assert!((w.cos() - a.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn wrap_angle_f32_instantiates() {
        let w: f32 = wrap_angle(7.0_f32);
        assert!(w > -std::f32::consts::PI && w <= std::f32::consts::PI);
    }
}
