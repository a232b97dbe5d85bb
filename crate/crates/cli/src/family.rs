//! Uniform access to the five families for the command layer.

use std::fmt;

use clap::ValueEnum;
use serialrank::setpartition::DMatrix;
use serialrank::{
    composition, ksubset, permutation, subset, Composition, Count, Error, KSubset, PartitionVector,
    Permutation, Serial, SubsetMask,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Permutation,
    Composition,
    Setpartition,
    Ksubset,
    Subset,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Permutation => "permutation",
            Family::Composition => "composition",
            Family::Setpartition => "setpartition",
            Family::Ksubset => "ksubset",
            Family::Subset => "subset",
        }
    }

    pub fn needs_k(self) -> bool {
        matches!(self, Family::Composition | Family::Ksubset)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with validated size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySelector {
    pub family: Family,
    pub n: usize,
    pub k: Option<usize>,
}

impl FamilySelector {
    pub fn new(family: Family, n: usize, k: Option<usize>) -> Result<Self, String> {
        match (family.needs_k(), k) {
            (true, None) => return Err(format!("--k is required for {family}")),
            (false, Some(_)) => return Err(format!("--k is not accepted for {family}")),
            _ => {}
        }
        let sel = FamilySelector { family, n, k };
        sel.count().map_err(|e| e.to_string())?;
        Ok(sel)
    }

    fn k(&self) -> usize {
        self.k.expect("validated at construction")
    }

    pub fn count(&self) -> Result<Count, Error> {
        match self.family {
            Family::Permutation => permutation::count_permutations(self.n),
            Family::Composition => composition::count_compositions(self.n, self.k()),
            Family::Setpartition => serialrank::count_setpartitions(self.n),
            Family::Ksubset => ksubset::count_ksubsets(self.n, self.k()),
            Family::Subset => Ok(subset::count_subsets(self.n)),
        }
    }

    /// Prepares repeated unranking; builds the D matrix once for set partitions.
    pub fn unranker(&self) -> Result<Unranker, Error> {
        let matrix = match self.family {
            Family::Setpartition => Some(DMatrix::new(self.n)?),
            _ => None,
        };
        Ok(Unranker { sel: *self, matrix })
    }

    pub fn rank(&self, vector: Vec<usize>) -> Result<Serial, Error> {
        match self.family {
            Family::Permutation => {
                check_len(self.n, vector.len())?;
                Ok(permutation::rank_permutation(&Permutation::new(vector)?))
            }
            Family::Composition => {
                check_len(self.k(), vector.len())?;
                Ok(composition::rank_composition(&Composition::new(
                    vector, self.n,
                )?))
            }
            Family::Setpartition => {
                check_len(self.n, vector.len())?;
                serialrank::rank_setpartition(&PartitionVector::new(vector)?)
            }
            Family::Ksubset => {
                check_len(self.k(), vector.len())?;
                Ok(ksubset::rank_ksubset(&KSubset::new(vector, self.n)?))
            }
            Family::Subset => {
                check_len(self.n, vector.len())?;
                Ok(subset::rank_subset(&SubsetMask::from_flags(&vector)?))
            }
        }
    }
}

fn check_len(expected: usize, actual: usize) -> Result<(), Error> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// One unranked object in wire-ready form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unranked {
    pub vector: Vec<usize>,
    pub stylized: Option<String>,
}

pub struct Unranker {
    sel: FamilySelector,
    matrix: Option<DMatrix>,
}

impl Unranker {
    pub fn unrank(&self, s: &Serial) -> Result<Unranked, Error> {
        let n = self.sel.n;
        let vector = match self.sel.family {
            Family::Permutation => permutation::unrank_permutation(s, n)?.into_vec(),
            Family::Composition => {
                composition::unrank_composition(s, n, self.sel.k())?.into_parts()
            }
            Family::Setpartition => {
                let p = self
                    .matrix
                    .as_ref()
                    .expect("built for set partitions")
                    .unrank(s)?;
                let stylized = serialrank::stylize(&p);
                return Ok(Unranked {
                    vector: p.into_vec(),
                    stylized: Some(stylized),
                });
            }
            Family::Ksubset => ksubset::unrank_ksubset(s, n, self.sel.k())?.into_elements(),
            Family::Subset => subset::unrank_subset(s, n)?.to_flags(),
        };
        Ok(Unranked {
            vector,
            stylized: None,
        })
    }
}
