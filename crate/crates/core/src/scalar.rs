//! Coefficient rings.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring with exact arithmetic suitable for polynomial
/// coefficients and occupancy counts.
///
/// Implemented for the primitive signed integers (fast, may overflow),
/// [`num_bigint::BigInt`] (exact) and rationals such as
/// `num_rational::BigRational`. Division is only ever used where the
/// quotient is known to be exact; a nonzero remainder is reported as an
/// error rather than rounded.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count not representable in scalar type")
    }

    fn from_signed(n: i64) -> Self {
        Self::from_i64(n).expect("integer not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use crate::occupancy::{Backend, Occupancy, SpinConfig};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn rational_coefficients_match_integers() {
        let spins = SpinConfig::uniform(2, 4).unwrap();
        let q = Occupancy::<BigRational>::ordinary(&spins, 2, Backend::Poly);
        let z = Occupancy::<BigInt>::ordinary(&spins, 2, Backend::Dp);
        for m in [[4, 2], [8, 0], [5, 5], [3, 1]] {
            assert_eq!(q.coefficient(&m), BigRational::from_integer(z.coefficient(&m)));
        }
    }
}
