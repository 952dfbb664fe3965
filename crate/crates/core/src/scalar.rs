use num_rational::Ratio;
use num_traits::Num;

/// Scalar types the bilinear form can be evaluated in.
///
/// All form values are rationals with small denominators, so any field that
/// can represent `num / den` works. Exact types are preferred; floats are
/// supported for geometry-oriented callers.
pub trait Scalar: Num + Clone + PartialOrd + std::fmt::Debug {
    fn from_ratio(num: i64, den: i64) -> Self;
}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl Scalar for Ratio<i32> {
    fn from_ratio(num: i64, den: i64) -> Self {
        let r = Ratio::new(num, den);
        Ratio::new(*r.numer() as i32, *r.denom() as i32)
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            fn from_ratio(num: i64, den: i64) -> Self {
                num as $f / den as $f
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);
