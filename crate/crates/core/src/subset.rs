//! All 2^n subsets of `{1..n}` as 0/1 inclusion masks.
//!
//! Flag `k` of serial `s` is `⌊((s - 1 + 2^k) mod 2^(k+2)) / 2^(k+1)⌋`. The
//! resulting order is the binary reflected Gray code read least significant
//! flag first, so neighbouring serials differ in exactly one flag.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::serial::{Count, Serial};

/// Inclusion flags; flag `i` says whether element `i + 1` is in the subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask(Vec<bool>);

impl SubsetMask {
    /// Builds a mask from 0/1 values.
    pub fn from_flags(flags: &[usize]) -> Result<Self> {
        flags
            .iter()
            .enumerate()
            .map(|(index, &value)| match value {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::InvalidFlag { index, value }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SubsetMask)
    }

    pub fn from_bools(flags: Vec<bool>) -> Self {
        SubsetMask(flags)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flags(&self) -> &[bool] {
        &self.0
    }

    pub fn to_flags(&self) -> Vec<usize> {
        self.0.iter().map(|&b| usize::from(b)).collect()
    }

    /// The chosen elements, 1-based and ascending.
    pub fn elements(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &on)| on.then_some(i + 1))
            .collect()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        f.write_str(")")
    }
}

/// 2^n
pub fn count_subsets(n: usize) -> Count {
    BigUint::one() << n
}

/// The `s`-th subset of an n-set.
///
/// Adding `2^k` to `s - 1` and reading bit `k + 1` gives bit `k + 1` of
/// `s - 1` xor the carry out of bit `k`, which is bit `k` itself; so the flag
/// is `bit(k) ^ bit(k + 1)` of `s - 1`.
pub fn unrank_subset(s: &Serial, n: usize) -> Result<SubsetMask> {
    s.check_within(&count_subsets(n))?;
    let offset = s.offset();
    let flags = (0..n as u64)
        .map(|k| offset.bit(k) ^ offset.bit(k + 1))
        .collect();
    Ok(SubsetMask(flags))
}

/// Serial of `p`.
///
/// Reads flags from the most significant end with a direct/inverted state
/// that starts direct. When `flag xor direct` holds the state becomes direct;
/// otherwise `2^i` is added and the state becomes inverted.
pub fn rank_subset(p: &SubsetMask) -> Serial {
    let mut offset = BigUint::zero();
    let mut direct = true;
    for (i, &flag) in p.0.iter().enumerate().rev() {
        if flag ^ direct {
            direct = true;
        } else {
            direct = false;
            offset.set_bit(i as u64, true);
        }
    }
    Serial::from_offset(offset)
}
