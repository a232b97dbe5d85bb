//! k-element subsets of `{1..n}` in lexicographic order.
//!
//! Unranking walks a tree of binomial coefficients without building it: a
//! node `C(x, y)` has children `C(x - 1, y - 1)`, `C(x - 2, y - 1)`, ... and
//! choosing the `j`-th child advances the current element by `j`. Only the
//! indices `(x, y)` and the running element label are carried.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::choose;
use crate::serial::{Count, Serial};

/// Deepest recursion [`generate_ksubsets_lex`] accepts.
pub const GENERATOR_MAX_N: usize = 20;

/// Strictly increasing elements of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KSubset {
    elements: Vec<usize>,
    n: usize,
}

impl KSubset {
    pub fn new(elements: Vec<usize>, n: usize) -> Result<Self> {
        let mut previous = 0;
        for (index, &element) in elements.iter().enumerate() {
            if element == 0 || element > n {
                return Err(Error::ElementOutOfRange { index, element, n });
            }
            if element <= previous {
                return Err(Error::NotIncreasing { index });
            }
            previous = element;
        }
        Ok(KSubset { elements, n })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn into_elements(self) -> Vec<usize> {
        self.elements
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

fn check_sizes(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::SizeExceedsGround { n, k })
    } else {
        Ok(())
    }
}

/// C(n, k).
pub fn count_ksubsets(n: usize, k: usize) -> Result<Count> {
    check_sizes(n, k)?;
    Ok(choose(n as u64, k as u64))
}

/// The `s`-th k-subset of `{1..n}` in lexicographic order.
pub fn unrank_ksubset(s: &Serial, n: usize, k: usize) -> Result<KSubset> {
    s.check_within(&count_ksubsets(n, k)?)?;
    let target = s.value();
    let mut elements = Vec::with_capacity(k);
    let mut x = n;
    let mut label = 0;
    let mut before = Count::zero();
    for i in 0..k {
        let y = k - 1 - i;
        let mut step = None;
        for j in 1..=x - y {
            // subsets whose next element is label + j
            let subtree = choose((x - j) as u64, y as u64);
            let reached = &before + &subtree;
            if &reached < target {
                before = reached;
            } else {
                step = Some(j);
                break;
            }
        }
        let j = step.expect("serial within C(n, k) always lands in a subtree");
        x -= j;
        label += j;
        elements.push(label);
    }
    Ok(KSubset { elements, n })
}

/// Serial of `p` among the `p.k()`-subsets of `{1..p.n()}`.
pub fn rank_ksubset(p: &KSubset) -> Serial {
    let k = p.k();
    let mut x = p.n;
    let mut label = 0;
    let mut skipped = Count::zero();
    for (i, &element) in p.elements.iter().enumerate() {
        let y = k - 1 - i;
        let gap = element - label;
        for j in 1..gap {
            skipped += choose((x - j) as u64, y as u64);
        }
        x -= gap;
        label = element;
    }
    Serial::from_offset(skipped)
}

/// All k-subsets of `{1..n}` in lexicographic order, built recursively.
///
/// This is a reference generator for testing and for small listings; it is
/// limited to `n <= GENERATOR_MAX_N`.
pub fn generate_ksubsets_lex(n: usize, k: usize) -> Result<Vec<KSubset>> {
    check_sizes(n, k)?;
    if n > GENERATOR_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "reference generator is limited to n <= {GENERATOR_MAX_N}"
        )));
    }

    fn combine(n: usize, k: usize, first: usize, current: &mut Vec<usize>, out: &mut Vec<KSubset>) {
        if current.len() == k {
            out.push(KSubset {
                elements: current.clone(),
                n,
            });
            return;
        }
        let remaining = k - current.len();
        for e in first..=n + 1 - remaining {
            current.push(e);
            combine(n, k, e + 1, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    combine(n, k, 1, &mut Vec::with_capacity(k), &mut out);
    Ok(out)
}
