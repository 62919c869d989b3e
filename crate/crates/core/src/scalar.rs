//! Scalar abstractions the rest of the crate is generic over.
//!
//! Counts are parameterised by [`Count`] so the recursion can run on fixed-width
//! integers (overflow is reported, never wrapped) or on [`num_bigint::BigUint`].
//! Guess scores only need a total order on the values actually supplied, which
//! [`Score`] captures; exact rationals and floats both qualify.

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Nonnegative integer used for labeling counts.
pub trait Count: Zero + One + Clone + PartialEq + Debug + Display + Send + Sync {
    /// `self += rhs`; returns `false` (leaving `self` unspecified) on overflow.
    fn checked_add_assign(&mut self, rhs: &Self) -> bool;
}

macro_rules! impl_count_prim {
    ($($t:ty),*) => {$(
        impl Count for $t {
            #[inline]
            fn checked_add_assign(&mut self, rhs: &Self) -> bool {
                match self.checked_add(*rhs) {
                    Some(v) => {
                        *self = v;
                        true
                    }
                    None => false,
                }
            }
        }
    )*};
}

impl_count_prim!(u32, u64, u128, usize);

impl Count for BigUint {
    #[inline]
    fn checked_add_assign(&mut self, rhs: &Self) -> bool {
        *self += rhs;
        true
    }
}

/// A classifier output. Only ordering matters to the AUC.
pub trait Score: PartialOrd + Clone + Debug + Send + Sync {}

impl<T: PartialOrd + Clone + Debug + Send + Sync> Score for T {}
