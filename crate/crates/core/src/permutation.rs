//! Permutations in the transposition order produced by the classic
//! "next permutation" generator, addressed through offset (inversion) vectors.
//!
//! A permutation `p` of `{1..m}` has an offset vector `d` of length `m - 1`
//! where `d[k-1]` counts the entries among `p_1..p_k` that are larger than
//! `p_{k+1}`. Within the enumeration, column `k` of the offset vectors sweeps
//! `0..=k` and back again (`k..=0`), each value held for `k!` consecutive
//! serials; whether a given sweep runs up ("direct") or down ("inverted") is
//! the parity of `(s - 1) / (k + 1)!`.
//!
//! Unranking goes serial → offset vector → permutation and ranking runs the
//! two steps backwards.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::factorial;
use crate::serial::{Count, Serial};

/// A permutation of `{1, ..., m}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `entries` is a bijection on `{1..entries.len()}`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let m = entries.len();
        if m == 0 {
            return Err(Error::NotAPermutation {
                len: 0,
                reason: "a permutation has at least one entry".into(),
            });
        }
        let mut seen = vec![false; m];
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v > m {
                return Err(Error::NotAPermutation {
                    len: m,
                    reason: format!("entry {v} at position {} is out of range", i + 1),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation {
                    len: m,
                    reason: format!("value {v} appears more than once"),
                });
            }
        }
        Ok(Permutation(entries))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Inversion vector of a permutation of size `m`; holds `m - 1` entries with
/// `entries[k-1] <= k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OffsetVector(Vec<usize>);

impl OffsetVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (i, &v) in entries.iter().enumerate() {
            let bound = i + 1;
            if v > bound {
                return Err(Error::OffsetOutOfRange {
                    index: bound,
                    value: v,
                    bound,
                });
            }
        }
        Ok(OffsetVector(entries))
    }

    /// Size of the permutation this vector describes.
    pub fn permutation_len(&self) -> usize {
        self.0.len() + 1
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for OffsetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

fn check_size(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidParameter(
            "permutation size must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// m!
pub fn count_permutations(m: usize) -> Result<Count> {
    check_size(m)?;
    Ok(factorial(m as u64))
}

/// Offset vector of the `s`-th permutation of size `m`.
///
/// For column `k` the digit `⌊((s-1) mod (k+1)!) / k!⌋` is used as is when
/// `⌊(s-1) / (k+1)!⌋` is even and complemented to `k - digit` when it is odd.
/// Both quantities fall out of peeling `s - 1` in the factorial number
/// system: after dividing by `2, 3, ..., k+1` the remainder is the digit and
/// the quotient is `⌊(s-1) / (k+1)!⌋`.
pub fn serial_to_offset(s: &Serial, m: usize) -> Result<OffsetVector> {
    s.check_within(&count_permutations(m)?)?;
    let mut rest = s.offset();
    let mut entries = Vec::with_capacity(m - 1);
    for k in 1..m {
        let (quotient, digit) = rest.div_rem(&BigUint::from(k + 1));
        let digit = digit.to_usize().expect("digit is at most k");
        let inverted = quotient.is_odd();
        entries.push(if inverted { k - digit } else { digit });
        rest = quotient;
    }
    debug_assert!(rest.is_zero());
    Ok(OffsetVector(entries))
}

/// Decodes an offset vector into its permutation.
///
/// Positions are inserted one at a time into a chain ordered by value:
/// position `k + 1` goes in with exactly `d[k-1]` earlier positions above
/// it. Reading the finished chain bottom-up assigns values `1..=m`.
pub fn offset_to_permutation(d: &OffsetVector) -> Permutation {
    let m = d.permutation_len();
    let mut chain: Vec<usize> = Vec::with_capacity(m);
    chain.push(0);
    for (k, &larger) in d.0.iter().enumerate() {
        let at = chain.len() - larger;
        chain.insert(at, k + 1);
    }
    let mut entries = vec![0; m];
    for (value, &position) in chain.iter().enumerate() {
        entries[position] = value + 1;
    }
    Permutation(entries)
}

/// Offset vector of `p`: entry `i` counts `p_j > p_{i+1}` over `j <= i`.
pub fn permutation_to_offset(p: &Permutation) -> OffsetVector {
    let m = p.len();
    // Fenwick tree over values; counts how many earlier entries are <= v.
    let mut tree = vec![0usize; m + 1];
    let mut entries = Vec::with_capacity(m.saturating_sub(1));
    for (i, &v) in p.0.iter().enumerate() {
        if i > 0 {
            let mut at_most = 0;
            let mut idx = v;
            while idx > 0 {
                at_most += tree[idx];
                idx &= idx - 1;
            }
            entries.push(i - at_most);
        }
        let mut idx = v;
        while idx <= m {
            tree[idx] += 1;
            idx += idx & idx.wrapping_neg();
        }
    }
    OffsetVector(entries)
}

/// Serial of the permutation whose offset vector is `d`.
///
/// Walks `d` right to left. The last column is always swept upward. Each
/// column contributes `d_k * k!` when swept upward and `(k - d_k) * k!` when
/// swept downward, and an odd `d_k` flips the direction for the column to its
/// left. The sum is accumulated Horner-style, so no factorial is formed.
pub fn offset_to_serial(d: &OffsetVector) -> Serial {
    let mut direct = true;
    let mut acc = BigUint::zero();
    for (i, &value) in d.0.iter().enumerate().rev() {
        let k = i + 1;
        let digit = if direct { value } else { k - value };
        acc = acc * (k + 1) + digit;
        if value.is_odd() {
            direct = !direct;
        }
    }
    Serial::from_offset(acc)
}

/// The `s`-th permutation of `{1..m}`.
pub fn unrank_permutation(s: &Serial, m: usize) -> Result<Permutation> {
    Ok(offset_to_permutation(&serial_to_offset(s, m)?))
}

/// Serial of `p`.
pub fn rank_permutation(p: &Permutation) -> Serial {
    offset_to_serial(&permutation_to_offset(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serial(v: u64) -> Serial {
        Serial::try_from(v).unwrap()
    }

    fn offsets(v: &[usize]) -> OffsetVector {
        OffsetVector::new(v.to_vec()).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count_permutations(1).unwrap(), Count::from(1u32));
        assert_eq!(count_permutations(4).unwrap(), Count::from(24u32));
        assert_eq!(count_permutations(6).unwrap(), Count::from(720u32));
        assert!(count_permutations(0).is_err());
    }

    #[test]
    fn serial_to_offset_examples() {
        assert_eq!(
            serial_to_offset(&serial(7), 4).unwrap(),
            offsets(&[1, 2, 1])
        );
        assert_eq!(
            serial_to_offset(&serial(1), 4).unwrap(),
            offsets(&[0, 0, 0])
        );
        assert_eq!(
            serial_to_offset(&serial(32), 5).unwrap(),
            offsets(&[0, 2, 2, 1])
        );
    }

    #[test]
    fn serial_out_of_range() {
        assert!(matches!(
            serial_to_offset(&serial(25), 4),
            Err(Error::SerialOutOfRange { .. })
        ));
        assert!(serial_to_offset(&serial(24), 4).is_ok());
    }

    #[test]
    fn offset_to_permutation_examples() {
        assert_eq!(
            offset_to_permutation(&offsets(&[0, 2, 2])),
            perm(&[3, 4, 1, 2])
        );
        assert_eq!(
            offset_to_permutation(&offsets(&[0, 0, 0])),
            perm(&[1, 2, 3, 4])
        );
        assert_eq!(
            offset_to_permutation(&offsets(&[1, 0, 3])),
            perm(&[3, 2, 4, 1])
        );
    }

    #[test]
    fn offset_entry_out_of_range() {
        assert_eq!(
            OffsetVector::new(vec![0, 3, 0]),
            Err(Error::OffsetOutOfRange {
                index: 2,
                value: 3,
                bound: 2
            })
        );
        assert!(OffsetVector::new(vec![2]).is_err());
    }

    #[test]
    fn permutation_to_offset_examples() {
        assert_eq!(
            permutation_to_offset(&perm(&[3, 5, 1, 2, 4])),
            offsets(&[0, 2, 2, 1])
        );
        assert_eq!(
            permutation_to_offset(&perm(&[4, 2, 1, 3])),
            offsets(&[1, 2, 1])
        );
        for m in 1..8 {
            let d = permutation_to_offset(&Permutation::identity(m));
            assert!(d.as_slice().iter().all(|&x| x == 0));
            assert_eq!(d.permutation_len(), m);
        }
    }

    #[test]
    fn offset_to_serial_examples() {
        assert_eq!(offset_to_serial(&offsets(&[1, 0, 3])), 23);
        assert_eq!(offset_to_serial(&offsets(&[0, 0, 0])), 1);
        assert_eq!(offset_to_serial(&offsets(&[0, 0, 3])), 24);
    }

    #[test]
    fn unrank_and_rank_examples() {
        assert_eq!(
            unrank_permutation(&serial(7), 4).unwrap(),
            perm(&[4, 2, 1, 3])
        );
        assert_eq!(
            unrank_permutation(&serial(32), 5).unwrap(),
            perm(&[3, 5, 1, 2, 4])
        );
        assert_eq!(
            unrank_permutation(&serial(1), 6).unwrap(),
            Permutation::identity(6)
        );
        assert_eq!(rank_permutation(&perm(&[3, 2, 4, 1])), 23);
        assert_eq!(rank_permutation(&perm(&[2, 3, 4, 1])), 24);
        assert_eq!(rank_permutation(&Permutation::identity(9)), 1);
    }

    #[test]
    fn size_one() {
        assert_eq!(unrank_permutation(&serial(1), 1).unwrap(), perm(&[1]));
        assert_eq!(rank_permutation(&perm(&[1])), 1);
        assert!(unrank_permutation(&serial(2), 1).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(perm(&[3, 4, 1, 2]).to_string(), "(3,4,1,2)");
        assert_eq!(offsets(&[0, 2, 2]).to_string(), "(0,2,2)");
    }
}
