//! Exact combinatorial number functions shared by every family.
//!
//! Everything here returns [`Count`] (an unbounded integer); nothing overflows
//! and there are no floating-point paths.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::serial::Count;

/// m!
pub fn factorial(m: u64) -> Count {
    (2..=m).fold(Count::one(), |acc, i| acc * i)
}

/// C(a, b), or 0 when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> Count {
    if b < 0 || b as u64 > a {
        return Count::zero();
    }
    choose(a, b as u64)
}

/// C(a, b) for unsigned arguments; 0 when `b > a`.
pub(crate) fn choose(a: u64, b: u64) -> Count {
    if b > a {
        return Count::zero();
    }
    let b = b.min(a - b);
    // Each partial product is C(a - b + i, i), so the division is exact.
    let mut acc = Count::one();
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// Stirling number of the second kind, {n k}, from the alternating sum
///
/// ```text
/// {n k} = 1/k! * sum_{i=0}^{k-1} (-1)^i C(k, i) (k - i)^n
/// ```
///
/// The sum is accumulated exactly and divided by k! once at the end.
pub fn stirling2(n: u64, k: u64) -> Count {
    let mut sum = BigInt::zero();
    for i in 0..k {
        let term = BigInt::from(choose(k, i)) * BigInt::from(k - i).pow(n as u32);
        if i.is_even() {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (quotient, remainder) = sum.div_rem(&BigInt::from(factorial(k)));
    assert!(remainder.is_zero(), "alternating sum not divisible by {k}!");
    match quotient.into_parts() {
        (Sign::Minus, _) => unreachable!("Stirling numbers are non-negative"),
        (_, magnitude) => magnitude,
    }
}

/// Bell number B_n, the number of partitions of an n-set.
pub fn bell(n: u64) -> Count {
    bell_numbers(n as usize)
        .pop()
        .expect("bell_numbers always returns n + 1 values")
}

/// `[B_0, B_1, ..., B_n]` computed with the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<Count> {
    let mut bells = Vec::with_capacity(n + 1);
    let mut row = vec![Count::one()];
    bells.push(Count::one());
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("rows are never empty").clone());
        for prev in &row {
            let value = next.last().expect("just pushed") + prev;
            next.push(value);
        }
        row = next;
        bells.push(row[0].clone());
    }
    bells
}
