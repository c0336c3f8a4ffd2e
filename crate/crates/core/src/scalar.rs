//! Scalar abstraction: the crate's numerics are generic over `f32`/`f64`.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real floating-point scalar underlying all matrices and kernels.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex number from `f64` parts.
pub fn cx<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}

/// Real complex number from an `f64` literal.
pub fn cr<T: Scalar>(re: f64) -> Complex<T> {
    Complex::new(T::of(re), T::zero())
}
