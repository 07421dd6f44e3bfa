//! Partition multi-indices and multinomial coefficients.
//!
//! A partition of weight `s` is stored as the multi-index
//! `m = (m_1, ..., m_s)` with `sum_j j * m_j = s`, where `m_j` counts the
//! parts of size `j`. The set of all such `m` indexes the terms of the
//! generalized chain rule.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Cap on the partition weight; keeps enumeration sizes sane.
pub const MAX_PARTITION_WEIGHT: usize = 20;

/// Multi-index `m` in `N^s` with `sum_j j * m_j = s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    m: Vec<usize>,
}

impl Partition {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        let s = m.len();
        let weighted: usize = m.iter().enumerate().map(|(i, &mj)| (i + 1) * mj).sum();
        if weighted != s {
            return Err(Error::Domain(format!(
                "multi-index {m:?} has weighted sum {weighted}, expected its length {s}"
            )));
        }
        Ok(Self { m })
    }

    /// The weight `s = sum_j j * m_j` (also the length of `m`).
    pub fn weight(&self) -> usize {
        self.m.len()
    }

    /// `|m| = sum_j m_j`: the number of parts, and the number of columns the
    /// partition contributes to a derivative matrix.
    pub fn order(&self) -> usize {
        self.m.iter().sum()
    }

    pub fn counts(&self) -> &[usize] {
        &self.m
    }

    /// `m_j` for 1-based part size `j`; zero beyond the stored length.
    pub fn count(&self, j: usize) -> usize {
        assert!(j >= 1, "part sizes are 1-based");
        self.m.get(j - 1).copied().unwrap_or(0)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, mj) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{mj}")?;
        }
        write!(f, ")")
    }
}

/// Every partition of weight `s`, exactly once, in ascending lexicographic
/// order of the multi-index. The list length is the partition count `p(s)`.
pub fn enumerate_partitions(s: usize) -> Result<Vec<Partition>> {
    if s == 0 || s > MAX_PARTITION_WEIGHT {
        return Err(Error::Domain(format!(
            "partition weight must lie in 1..={MAX_PARTITION_WEIGHT}, got {s}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(s);
    extend(&mut prefix, 1, s, s, &mut out);
    Ok(out)
}

fn extend(prefix: &mut Vec<usize>, j: usize, remaining: usize, s: usize, out: &mut Vec<Partition>) {
    if j > s {
        if remaining == 0 {
            out.push(Partition { m: prefix.clone() });
        }
        return;
    }
    for mj in 0..=remaining / j {
        prefix.push(mj);
        extend(prefix, j + 1, remaining - mj * j, s, out);
        prefix.pop();
    }
}

/// Exact multinomial `s! / (m_1! ... m_s!)`.
pub fn multinomial(m: &Partition) -> BigInt {
    let mut value = factorial(m.weight());
    for &mj in m.counts() {
        value /= factorial(mj);
    }
    value
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(m: &[usize]) -> Partition {
        Partition::new(m.to_vec()).unwrap()
    }

    #[test]
    fn single_partition_of_one() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![part(&[1])]);
    }

    #[test]
    fn partitions_of_three() {
        // 1+1+1, 1+2, 3 — in ascending lexicographic order of m.
        assert_eq!(
            enumerate_partitions(3).unwrap(),
            vec![part(&[0, 0, 1]), part(&[1, 1, 0]), part(&[3, 0, 0])]
        );
    }

    #[test]
    fn count_matches_brute_force_for_five() {
        // Independent oracle: scan all of {0..5}^5 for weighted sum 5.
        let mut brute = 0usize;
        for a in 0..=5usize {
            for b in 0..=2usize {
                for c in 0..=1usize {
                    for d in 0..=1usize {
                        for e in 0..=1usize {
                            if a + 2 * b + 3 * c + 4 * d + 5 * e == 5 {
                                brute += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(brute, 7);
        assert_eq!(enumerate_partitions(5).unwrap().len(), 7);
    }

    #[test]
    fn invalid_weights_rejected() {
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(MAX_PARTITION_WEIGHT + 1).is_err());
        assert!(Partition::new(vec![1, 1]).is_err());
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&part(&[0, 0, 1])), BigInt::from(6));
        assert_eq!(multinomial(&part(&[1, 1, 0])), BigInt::from(6));
        // 4!/(2! * 1!) by a direct factorial oracle.
        let oracle = factorial(4) / (factorial(2) * factorial(1));
        assert_eq!(oracle, BigInt::from(12));
        assert_eq!(multinomial(&part(&[2, 1, 0, 0])), BigInt::from(12));
    }

    #[test]
    fn weights_and_orders_are_consistent() {
        for s in 1..=10 {
            for m in enumerate_partitions(s).unwrap() {
                assert_eq!(m.weight(), s);
                let weighted: usize = (1..=s).map(|j| j * m.count(j)).sum();
                assert_eq!(weighted, s);
                assert!(m.order() >= 1 && m.order() <= s);
            }
        }
    }

    #[test]
    fn lexicographic_order_is_strictly_ascending() {
        for s in 1..=12 {
            let parts = enumerate_partitions(s).unwrap();
            for w in parts.windows(2) {
                assert!(w[0].counts() < w[1].counts());
            }
        }
    }
}
