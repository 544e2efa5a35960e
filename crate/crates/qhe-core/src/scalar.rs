//! Scalar abstraction: all core math is generic over the floating-point type.

use core::fmt::{Debug, Display};
use core::iter::Sum;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps};

/// Floating-point scalar the engine math is generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into `T`.
///
/// Panics if the value is not representable, which cannot happen for the
/// fixed tolerances and small integers this crate feeds it.
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}
