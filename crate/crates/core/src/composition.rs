//! Weak compositions of `n` into `k` ordered parts.
//!
//! The enumeration order is fixed by a walk over a conceptual matrix of
//! binomial coefficients with `k - 1` rows and `n + 1` columns, where row `r`
//! column `c` holds `C(n + k - 2 - r - c, n - c)`: the number of compositions
//! of the remaining `n - c` into `k - 1 - r` parts once the current part is
//! fixed. The last part is decided on row 0, the second-to-last on row 1 and
//! so on; the first part takes whatever is left. Entries are computed on
//! demand and the matrix is never stored.
//!
//! The resulting order is ascending lexicographic order of the reversed part
//! vector `(c_k, ..., c_1)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::choose;
use crate::serial::{Count, Serial};

/// `parts.len() = k >= 1` non-negative parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    n: usize,
}

impl Composition {
    /// Builds a composition and checks that `parts` sums to `n`.
    pub fn new(parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "a composition has at least one part".into(),
            ));
        }
        let actual = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidParameter("parts overflow".into()))?;
        if actual != n {
            return Err(Error::CompositionSum {
                expected: n,
                actual,
            });
        }
        Ok(Composition { parts, n })
    }

    /// Builds a composition of whatever `parts` sums to.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        let n = parts.iter().sum();
        Composition::new(parts, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.n
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// J(n, k) = C(n + k - 1, n).
pub fn count_compositions(n: usize, k: usize) -> Result<Count> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "number of parts must be at least 1".into(),
        ));
    }
    Ok(choose((n + k - 1) as u64, n as u64))
}

/// Matrix entry on `row` at `column`.
fn entry(n: usize, k: usize, row: usize, column: usize) -> Count {
    choose((n + k - 2 - row - column) as u64, (n - column) as u64)
}

/// The `s`-th composition of `n` into `k` parts.
pub fn unrank_composition(s: &Serial, n: usize, k: usize) -> Result<Composition> {
    s.check_within(&count_compositions(n, k)?)?;
    let target = s.offset();
    let mut parts = vec![0; k];
    let mut reached = Count::zero();
    let mut column = 0;
    // row r fixes part k-1-r; the single-part case has no rows
    for row in 0..k - 1 {
        let start = column;
        while column < n {
            let candidate = &reached + entry(n, k, row, column);
            if candidate > target {
                break;
            }
            reached = candidate;
            column += 1;
        }
        parts[k - 1 - row] = column - start;
    }
    debug_assert_eq!(reached, target);
    parts[0] = n - column;
    Ok(Composition { parts, n })
}

/// Serial of `c` among the compositions of `c.total()` into `c.num_parts()` parts.
pub fn rank_composition(c: &Composition) -> Serial {
    let n = c.n;
    let k = c.parts.len();
    let mut skipped = Count::zero();
    let mut column = 0;
    for row in 0..k - 1 {
        let part = c.parts[k - 1 - row];
        for j in 0..part {
            skipped += entry(n, k, row, column + j);
        }
        column += part;
    }
    Serial::from_offset(skipped)
}
