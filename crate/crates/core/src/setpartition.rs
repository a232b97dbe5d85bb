//! Set partitions of `{1..n}` as restricted growth strings.
//!
//! All partitions of an n-set hang off a tree whose level `i` decides the
//! block of element `i`: join one of the blocks opened so far, or open a new
//! one. Subtree sizes depend only on how many elements have joined an existing
//! block (`u`) and how many have opened a new one (`v`), which is what the
//! triangular [`DMatrix`] stores. Unranking descends the tree by skipping
//! whole sibling subtrees; ranking adds up the subtrees it would skip.

use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{bell, bell_numbers};
use crate::serial::{Count, Serial};

/// Block index for each element, 0-based, in first-appearance order.
///
/// `blocks[0] = 0` and `blocks[i] <= 1 + max(blocks[..i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionVector(Vec<usize>);

impl PartitionVector {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidParameter(
                "a set partition needs at least one element".into(),
            ));
        }
        let mut opened = 0;
        for (index, &value) in blocks.iter().enumerate() {
            if value > opened {
                return Err(Error::RestrictedGrowth {
                    index,
                    value,
                    bound: opened,
                });
            }
            if value == opened {
                opened += 1;
            }
        }
        Ok(PartitionVector(blocks))
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

    pub fn num_blocks(&self) -> usize {
        self.0.iter().max().map_or(0, |&m| m + 1)
    }

    /// The blocks as lists of 1-based elements, in block-index order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (element, &block) in self.0.iter().enumerate() {
            blocks[block].push(element + 1);
        }
        blocks
    }
}

impl fmt::Display for PartitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// Upper-triangular table of Bell-tree subtree sizes for an n-set.
///
/// Row `v` holds `n - v` entries. Column 0 is `B_n, B_{n-1}, ..., B_1` and
/// every other entry is `D[u][v] = D[u][v-1] - v * D[u+1][v-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DMatrix {
    rows: Vec<Vec<Count>>,
}

impl DMatrix {
    pub fn new(n: usize) -> Result<Self> {
        check_size(n)?;
        let bells = bell_numbers(n);
        let mut rows: Vec<Vec<Count>> = (0..n)
            .map(|v| {
                let mut row = Vec::with_capacity(n - v);
                row.push(bells[n - v].clone());
                row
            })
            .collect();
        for col in 1..n {
            for row in 0..n - col {
                let value = &rows[row][col - 1] - &rows[row + 1][col - 1] * col;
                rows[row].push(value);
            }
        }
        Ok(DMatrix { rows })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Count> {
        self.rows.get(row).and_then(|r| r.get(col))
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }

    /// Number of stored entries, `(n^2 + n) / 2`.
    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// B_n, the number of partitions this matrix addresses.
    pub fn count(&self) -> &Count {
        &self.rows[0][0]
    }

    /// The `s`-th partition of the n-set.
    pub fn unrank(&self, s: &Serial) -> Result<PartitionVector> {
        s.check_within(self.count())?;
        let n = self.n();
        let target = s.value();
        let mut blocks = Vec::with_capacity(n);
        let (mut row, mut col) = (0, 0);
        // `before` counts partitions strictly ahead of the current subtree
        let mut before = Count::zero();
        for _ in 0..n {
            let subtree = &self.rows[row][col];
            let mut chosen = None;
            for t in 0..=col {
                if &(&before + subtree) >= target {
                    chosen = Some(t);
                    break;
                }
                before += subtree;
            }
            match chosen {
                Some(t) => {
                    row += 1;
                    blocks.push(t);
                }
                None => {
                    col += 1;
                    blocks.push(col);
                }
            }
        }
        Ok(PartitionVector(blocks))
    }

    /// Serial of `p`, which must have `self.n()` elements.
    pub fn rank(&self, p: &PartitionVector) -> Result<Serial> {
        if p.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: p.len(),
            });
        }
        let mut skipped = Count::zero();
        // the first element always joins block 0 at the root
        let (mut row, mut col) = (1, 0);
        for &block in &p.0[1..] {
            if block > 0 {
                skipped += &self.rows[row][col] * block;
            }
            if block <= col {
                row += 1;
            } else {
                col += 1;
            }
        }
        Ok(Serial::from_offset(skipped))
    }

    /// Checks the two defining rules of the table. Used by tests and self-checks.
    pub fn satisfies_recurrence(&self) -> bool {
        let n = self.n();
        let bells = bell_numbers(n);
        (0..n).all(|v| self.rows[v].len() == n - v && self.rows[v][0] == bells[n - v])
            && (1..n).all(|col| {
                (0..n - col).all(|row| {
                    &self.rows[row][col] + &self.rows[row + 1][col - 1] * col
                        == self.rows[row][col - 1]
                })
            })
            && self.rows.iter().flatten().all(|x| x >= &Count::one())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("set partitions need n >= 1".into()))
    } else {
        Ok(())
    }
}

/// Builds the D matrix for an n-set.
pub fn build_d_matrix(n: usize) -> Result<DMatrix> {
    DMatrix::new(n)
}

/// B_n.
pub fn count_setpartitions(n: usize) -> Result<Count> {
    check_size(n)?;
    Ok(bell(n as u64))
}

/// The `s`-th partition of an n-set. Builds a fresh [`DMatrix`]; hold on to
/// one and call [`DMatrix::unrank`] when unranking many serials.
pub fn unrank_setpartition(s: &Serial, n: usize) -> Result<PartitionVector> {
    DMatrix::new(n)?.unrank(s)
}

/// Serial of `p`. Builds a fresh [`DMatrix`]; see [`DMatrix::rank`].
pub fn rank_setpartition(p: &PartitionVector) -> Result<Serial> {
    DMatrix::new(p.len())?.rank(p)
}

/// Human-readable form, e.g. `(0,1,1,0,0)` becomes `"(1, 4, 5)(2, 3)"`.
pub fn stylize(p: &PartitionVector) -> String {
    let mut out = String::new();
    for block in p.blocks().iter().filter(|b| !b.is_empty()) {
        out.push('(');
        for (i, element) in block.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "{element}").expect("writing to a String");
        }
        out.push(')');
    }
    out
}

/// Parses the output of [`stylize`] back into a partition vector.
pub fn parse_stylized(text: &str) -> Result<PartitionVector> {
    let bad = |why: &str| Error::InvalidParameter(format!("stylized partition `{text}`: {why}"));
    let mut owner: Vec<Option<usize>> = Vec::new();
    let mut rest = text;
    let mut block = 0;
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = inner.find(')').ok_or_else(|| bad("unclosed group"))?;
        for item in inner[..close].split(", ") {
            let element: usize = item.parse().map_err(|_| bad("bad element"))?;
            if element == 0 {
                return Err(bad("elements are 1-based"));
            }
            if owner.len() < element {
                owner.resize(element, None);
            }
            if owner[element - 1].replace(block).is_some() {
                return Err(bad("element listed twice"));
            }
        }
        block += 1;
        rest = &inner[close + 1..];
    }
    let assigned: Option<Vec<usize>> = owner.into_iter().collect();
    let raw = assigned.ok_or_else(|| bad("elements missing"))?;
    // relabel by first appearance
    let mut relabel: Vec<Option<usize>> = vec![None; block];
    let mut next = 0;
    let blocks = raw
        .into_iter()
        .map(|b| {
            *relabel[b].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    PartitionVector::new(blocks)
}
