//! Built-in golden checks behind `serialrank selftest`.

use std::io::{self, Write};

use serialrank::{
    build_d_matrix, offset_to_permutation, offset_to_serial, permutation_to_offset,
    rank_composition, rank_permutation, serial_to_offset, stylize, unrank_composition,
    unrank_permutation, Count, OffsetVector, Serial,
};

use crate::family::{Family, FamilySelector};

/// Reference values the checks compare against.
#[derive(Debug, Clone)]
pub struct Fixtures {
    /// (serial, permutation, offset vector) for every permutation of size 4.
    pub permutations_of_four: Vec<(u64, Vec<usize>, Vec<usize>)>,
    /// (serial, size, permutation, offset vector).
    pub permutation_32_of_five: (u64, usize, Vec<usize>, Vec<usize>),
    /// (offset vector, serial, permutation).
    pub offset_serial_23: (Vec<usize>, u64, Vec<usize>),
    /// (serial, n, k, parts).
    pub composition_283: (u64, usize, usize, Vec<usize>),
    /// D matrix rows for n = 6.
    pub d_matrix_six: Vec<Vec<u64>>,
    /// (serial, n, growth string, stylized text).
    pub partition_26_of_five: (u64, usize, Vec<usize>, String),
}

impl Fixtures {
    pub fn golden() -> Self {
        let rows: [(u64, [usize; 4], [usize; 3]); 24] = [
            (1, [1, 2, 3, 4], [0, 0, 0]),
            (2, [2, 1, 3, 4], [1, 0, 0]),
            (3, [3, 1, 2, 4], [1, 1, 0]),
            (4, [1, 3, 2, 4], [0, 1, 0]),
            (5, [2, 3, 1, 4], [0, 2, 0]),
            (6, [3, 2, 1, 4], [1, 2, 0]),
            (7, [4, 2, 1, 3], [1, 2, 1]),
            (8, [2, 4, 1, 3], [0, 2, 1]),
            (9, [1, 4, 2, 3], [0, 1, 1]),
            (10, [4, 1, 2, 3], [1, 1, 1]),
            (11, [2, 1, 4, 3], [1, 0, 1]),
            (12, [1, 2, 4, 3], [0, 0, 1]),
            (13, [1, 3, 4, 2], [0, 0, 2]),
            (14, [3, 1, 4, 2], [1, 0, 2]),
            (15, [4, 1, 3, 2], [1, 1, 2]),
            (16, [1, 4, 3, 2], [0, 1, 2]),
            (17, [3, 4, 1, 2], [0, 2, 2]),
            (18, [4, 3, 1, 2], [1, 2, 2]),
            (19, [4, 3, 2, 1], [1, 2, 3]),
            (20, [3, 4, 2, 1], [0, 2, 3]),
            (21, [2, 4, 3, 1], [0, 1, 3]),
            (22, [4, 2, 3, 1], [1, 1, 3]),
            (23, [3, 2, 4, 1], [1, 0, 3]),
            (24, [2, 3, 4, 1], [0, 0, 3]),
        ];
        Fixtures {
            permutations_of_four: rows
                .iter()
                .map(|(s, p, d)| (*s, p.to_vec(), d.to_vec()))
                .collect(),
            permutation_32_of_five: (32, 5, vec![3, 5, 1, 2, 4], vec![0, 2, 2, 1]),
            offset_serial_23: (vec![1, 0, 3], 23, vec![3, 2, 4, 1]),
            composition_283: (283, 7, 5, vec![1, 0, 2, 1, 3]),
            d_matrix_six: vec![
                vec![203, 151, 77, 26, 6, 1],
                vec![52, 37, 17, 5, 1],
                vec![15, 10, 4, 1],
                vec![5, 3, 1],
                vec![2, 1],
                vec![1],
            ],
            partition_26_of_five: (26, 5, vec![0, 1, 1, 0, 0], "(1, 4, 5)(2, 3)".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome.is_ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome.is_err())
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        for check in &self.checks {
            match &check.outcome {
                Ok(()) => writeln!(out, "ok   {}", check.name)?,
                Err(why) => writeln!(out, "FAIL {}: {why}", check.name)?,
            }
        }
        let failed = self.failures().count();
        if failed == 0 {
            writeln!(out, "all checks passed")
        } else {
            writeln!(out, "{failed} check(s) failed")
        }
    }
}

type Outcome = Result<(), String>;

fn serial(v: u64) -> Result<Serial, String> {
    Serial::try_from(v).map_err(|e| e.to_string())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn permutations_of_four(fx: &Fixtures) -> Outcome {
    for (s, p, d) in &fx.permutations_of_four {
        let serial = serial(*s)?;
        let got = unrank_permutation(&serial, 4).map_err(|e| e.to_string())?;
        expect_eq(&format!("p at serial {s}"), got.as_slice(), p.as_slice())?;
        let offsets = serial_to_offset(&serial, 4).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("d at serial {s}"),
            offsets.as_slice(),
            d.as_slice(),
        )?;
        expect_eq(&format!("rank of {got}"), rank_permutation(&got), serial)?;
    }
    Ok(())
}

fn permutation_32_of_five(fx: &Fixtures) -> Outcome {
    let (s, m, p, d) = &fx.permutation_32_of_five;
    let got = unrank_permutation(&serial(*s)?, *m).map_err(|e| e.to_string())?;
    expect_eq("permutation", got.as_slice(), p.as_slice())?;
    expect_eq(
        "offsets",
        permutation_to_offset(&got).as_slice(),
        d.as_slice(),
    )
}

fn offset_serial_23(fx: &Fixtures) -> Outcome {
    let (d, s, p) = &fx.offset_serial_23;
    let d = OffsetVector::new(d.clone()).map_err(|e| e.to_string())?;
    expect_eq("serial", offset_to_serial(&d), serial(*s)?)?;
    expect_eq(
        "permutation",
        offset_to_permutation(&d).as_slice(),
        p.as_slice(),
    )
}

fn composition_283(fx: &Fixtures) -> Outcome {
    let (s, n, k, parts) = &fx.composition_283;
    let got = unrank_composition(&serial(*s)?, *n, *k).map_err(|e| e.to_string())?;
    expect_eq("parts", got.parts(), parts.as_slice())?;
    expect_eq("rank", rank_composition(&got), serial(*s)?)
}

fn d_matrix_six(fx: &Fixtures) -> Outcome {
    let d = build_d_matrix(6).map_err(|e| e.to_string())?;
    let want: Vec<Vec<Count>> = fx
        .d_matrix_six
        .iter()
        .map(|row| row.iter().map(|&v| Count::from(v)).collect())
        .collect();
    expect_eq("D matrix", d.rows(), want.as_slice())
}

fn partition_26_of_five(fx: &Fixtures) -> Outcome {
    let (s, n, blocks, text) = &fx.partition_26_of_five;
    let p = serialrank::unrank_setpartition(&serial(*s)?, *n).map_err(|e| e.to_string())?;
    expect_eq("growth string", p.as_slice(), blocks.as_slice())?;
    expect_eq("stylized", stylize(&p).as_str(), text.as_str())
}

fn small_round_trips() -> Outcome {
    let shapes: &[(Family, usize, Option<usize>)] = &[
        (Family::Permutation, 5, None),
        (Family::Composition, 5, Some(4)),
        (Family::Setpartition, 6, None),
        (Family::Ksubset, 8, Some(3)),
        (Family::Subset, 7, None),
    ];
    for &(family, n, k) in shapes {
        let sel = FamilySelector::new(family, n, k)?;
        let unranker = sel.unranker().map_err(|e| e.to_string())?;
        let count = sel.count().map_err(|e| e.to_string())?;
        let mut s = Serial::first();
        while s.value() <= &count {
            let object = unranker.unrank(&s).map_err(|e| e.to_string())?;
            let back = sel.rank(object.vector).map_err(|e| e.to_string())?;
            expect_eq(&format!("{family} n={n} round trip"), &back, &s)?;
            s = s.next();
        }
    }
    Ok(())
}

/// Runs every check against `fixtures`.
pub fn run(fixtures: &Fixtures) -> Report {
    let checks = vec![
        Check {
            name: "permutations of 4 (full list)",
            outcome: permutations_of_four(fixtures),
        },
        Check {
            name: "permutation serial 32 of size 5",
            outcome: permutation_32_of_five(fixtures),
        },
        Check {
            name: "offset vector (1,0,3) is serial 23",
            outcome: offset_serial_23(fixtures),
        },
        Check {
            name: "composition serial 283 of 7 into 5",
            outcome: composition_283(fixtures),
        },
        Check {
            name: "D matrix for n = 6",
            outcome: d_matrix_six(fixtures),
        },
        Check {
            name: "set partition serial 26 of 5, stylized",
            outcome: partition_26_of_five(fixtures),
        },
        Check {
            name: "small exhaustive round trips",
            outcome: small_round_trips(),
        },
    ];
    Report { checks }
}
