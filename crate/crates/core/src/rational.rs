//! Exact rational values for bound verdicts.
//!
//! Bounds like 2n³/25 are exact statements; comparisons must never pass
//! through floating point. `Exact` wraps an arbitrary-precision rational and
//! serializes as a numerator/denominator string pair so JSON output carries
//! no decimal approximations.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn from_int(v: i64) -> Self {
        Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_u64(v: u64) -> Self {
        Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn big_ratio(num: BigInt, den: BigInt) -> Self {
        Exact(BigRational::new(num, den))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, when the rational is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn zero() -> Self {
        Exact(BigRational::zero())
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.to_integer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Exact", 2)?;
        s.serialize_field("num", &self.0.numer().to_string())?;
        s.serialize_field("den", &self.0.denom().to_string())?;
        s.end()
    }
}

macro_rules! exact_binops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Exact {
            type Output = Exact;
            fn $method(self, rhs: Exact) -> Exact {
                Exact($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Exact> for &'a Exact {
            type Output = Exact;
            fn $method(self, rhs: &'a Exact) -> Exact {
                Exact($trait::$method(&self.0, &rhs.0))
            }
        }
    )*};
}
exact_binops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

/// The outcome of one exact bound check: LHS ≤ RHS with slack RHS − LHS.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub bound: String,
    pub lhs: Exact,
    pub rhs: Exact,
    pub slack: Exact,
    pub holds: bool,
}

impl BoundReport {
    /// Checks `lhs ≤ rhs` exactly.
    pub fn le(name: impl Into<String>, lhs: Exact, rhs: Exact) -> Self {
        let slack = &rhs - &lhs;
        let holds = lhs <= rhs;
        BoundReport {
            bound: name.into(),
            lhs,
            rhs,
            slack,
            holds,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ≤ {} — {}",
            self.bound,
            self.lhs,
            self.rhs,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}
