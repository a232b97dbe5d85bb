use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An unbounded non-negative count: n!, C(n, k), Bell numbers and friends.
pub type Count = BigUint;

/// 1-based position of an object in its family's enumeration order.
///
/// A `Serial` is never zero. Whether it is in range for a particular family
/// is checked by the family's unrank function, which knows the count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Serial(BigUint);

impl Serial {
    pub fn new(value: BigUint) -> Result<Self> {
        if value.is_zero() {
            Err(Error::ZeroSerial)
        } else {
            Ok(Serial(value))
        }
    }

    pub fn first() -> Self {
        Serial(BigUint::one())
    }

    /// Builds the serial whose zero-based offset is `offset`, i.e. `offset + 1`.
    pub fn from_offset(offset: BigUint) -> Self {
        Serial(offset + 1u32)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    /// `s - 1`, the quantity every closed-form formula works with.
    pub fn offset(&self) -> BigUint {
        &self.0 - 1u32
    }

    /// The next serial. No upper bound is applied.
    pub fn next(&self) -> Self {
        Serial(&self.0 + 1u32)
    }

    /// Fails with [`Error::SerialOutOfRange`] unless `self <= count`.
    pub fn check_within(&self, count: &Count) -> Result<()> {
        if &self.0 > count {
            Err(Error::SerialOutOfRange {
                serial: self.0.clone(),
                count: count.clone(),
            })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<u64> for Serial {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Serial::new(BigUint::from(value))
    }
}

impl TryFrom<BigUint> for Serial {
    type Error = Error;

    fn try_from(value: BigUint) -> Result<Self> {
        Serial::new(value)
    }
}

impl PartialEq<u64> for Serial {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl FromStr for Serial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = BigUint::from_str(s.trim())
            .map_err(|_| Error::InvalidParameter(format!("`{s}` is not a decimal serial")))?;
        Serial::new(value)
    }
}

impl fmt::Display for Serial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_rejected() {
        assert_eq!(Serial::try_from(0u64), Err(Error::ZeroSerial));
        assert_eq!("0".parse::<Serial>(), Err(Error::ZeroSerial));
    }

    #[test]
    fn parse_and_display() {
        let s: Serial = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(s.to_string(), "123456789012345678901234567890");
        assert!("abc".parse::<Serial>().is_err());
        assert!("-3".parse::<Serial>().is_err());
    }

    #[test]
    fn offset_round_trip() {
        let s = Serial::try_from(42u64).unwrap();
        assert_eq!(s.offset(), BigUint::from(41u32));
        assert_eq!(Serial::from_offset(s.offset()), s);
        assert_eq!(Serial::first(), 1u64);
    }

    #[test]
    fn range_check() {
        let s = Serial::try_from(25u64).unwrap();
        assert!(s.check_within(&BigUint::from(25u32)).is_ok());
        assert!(matches!(
            s.check_within(&BigUint::from(24u32)),
            Err(Error::SerialOutOfRange { .. })
        ));
    }
}
