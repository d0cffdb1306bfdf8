//! Integer partitions and the statistics `|λ|`, `l(λ)`, `o(λ)`, `n(λ)`,
//! `m_i(λ)`, `λ'`, plus constrained enumeration and the two support
//! predicates (odd parts with even multiplicity; all multiplicities even)
//! that the orthogonal-group formulas condition on.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),
}

/// An integer partition stored as a nonincreasing list of positive parts.
///
/// The multiplicity map is computed once at construction; all other
/// statistics are cheap folds over it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    /// `(part, multiplicity)` with parts strictly decreasing.
    mults: Vec<(u32, u32)>,
}

impl Partition {
    /// Build a partition from arbitrary-order positive entries.
    pub fn new<I: IntoIterator<Item = i64>>(parts: I) -> Result<Partition, PartitionError> {
        let mut v = Vec::new();
        for p in parts {
            if p < 1 {
                return Err(PartitionError::NonPositivePart(p));
            }
            v.push(p as u32);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(v))
    }

    /// Build from parts already sorted nonincreasing (checked in debug).
    pub fn from_sorted(parts: Vec<u32>) -> Partition {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        let mut mults: Vec<(u32, u32)> = Vec::new();
        for &p in &parts {
            match mults.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => mults.push((p, 1)),
            }
        }
        Partition { parts, mults }
    }

    pub fn empty() -> Partition {
        Partition {
            parts: Vec::new(),
            mults: Vec::new(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `l(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `o(λ)`, the number of odd parts.
    pub fn odd_parts(&self) -> u64 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u64
    }

    /// `m_i(λ)`, the multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.mults
            .iter()
            .find(|&&(p, _)| p == i)
            .map_or(0, |&(_, m)| m)
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn multiplicities(&self) -> &[(u32, u32)] {
        &self.mults
    }

    /// The conjugate partition `λ'` with `λ'_i = m_i + m_{i+1} + …`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(cols as usize);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p >= i).count() as u32);
        }
        Partition::from_sorted(parts)
    }

    /// `n(λ) = Σ_i C(λ'_i, 2)`.
    pub fn n_stat(&self) -> u64 {
        self.conjugate()
            .parts()
            .iter()
            .map(|&c| (c as u64) * (c as u64 - 1) / 2)
            .sum()
    }

    /// `Σ_i (λ'_i)^2`.
    pub fn conjugate_square_sum(&self) -> u64 {
        self.conjugate()
            .parts()
            .iter()
            .map(|&c| (c as u64) * (c as u64))
            .sum()
    }

    /// Whether every odd part occurs with even multiplicity.
    pub fn odd_parts_even_mult(&self) -> bool {
        self.mults
            .iter()
            .all(|&(p, m)| p % 2 == 0 || m % 2 == 0)
    }

    /// Whether every part occurs with even multiplicity.
    pub fn all_mults_even(&self) -> bool {
        self.mults.iter().all(|&(_, m)| m % 2 == 0)
    }

    /// `λ` with one extra part of size 1.
    pub fn with_extra_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition::from_sorted(parts)
    }
}

impl std::fmt::Display for Partition {
    /// Bracketed part list, `[5,4,4,1]`; the empty partition is `[]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.parts.iter())
    }
}

/// All partitions of `size` in lexicographically descending order.
pub fn partitions_of(size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    descend(size, u32::MAX as u64, &mut stack, &mut out);
    out
}

fn descend(remaining: u64, cap: u64, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(stack.clone()));
        return;
    }
    let first = remaining.min(cap);
    for p in (1..=first).rev() {
        stack.push(p as u32);
        descend(remaining - p, p, stack, out);
        stack.pop();
    }
}

/// Partitions of `size` passing `pred`, in the canonical descending order.
pub fn partitions_matching<F: Fn(&Partition) -> bool>(size: u64, pred: F) -> Vec<Partition> {
    partitions_of(size).into_iter().filter(|l| pred(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn make_partition_canonicalizes() {
        let l = Partition::new([4, 5, 1, 4]).unwrap();
        assert_eq!(l.parts(), &[5, 4, 4, 1]);
        assert_eq!(Partition::new([]).unwrap(), Partition::empty());
        assert_eq!(
            Partition::new([1, 0]),
            Err(PartitionError::NonPositivePart(0))
        );
    }

    #[test]
    fn stats_of_5441() {
        let l = Partition::new([5, 4, 4, 1]).unwrap();
        assert_eq!(l.size(), 14);
        assert_eq!(l.n_stat(), 15);
        assert_eq!(l.len(), 4);
        assert_eq!(l.odd_parts(), 2);
        assert_eq!(l.conjugate().parts(), &[4, 3, 3, 3, 1]);
    }

    #[test]
    fn stats_edge_cases() {
        let e = Partition::empty();
        assert_eq!((e.size(), e.len(), e.odd_parts(), e.n_stat()), (0, 0, 0, 0));
        let l = Partition::new([2, 2]).unwrap();
        assert_eq!(l.n_stat(), 2);
        assert_eq!(l.len(), 2);
        assert_eq!(l.odd_parts(), 0);
        assert_eq!(l.conjugate().parts(), &[2, 2]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let p2 = partitions_of(2);
        assert_eq!(
            p2.iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>(),
            vec![vec![2], vec![1, 1]]
        );
        // p(0..9) = 1,1,2,3,5,7,11,15,22
        let counts: Vec<usize> = (0..9).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // lexicographic descending throughout
        let p6 = partitions_of(6);
        for w in p6.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn support_predicates() {
        assert!(Partition::new([2, 1, 1]).unwrap().odd_parts_even_mult());
        assert!(!Partition::new([3, 1]).unwrap().odd_parts_even_mult());
        assert!(Partition::new([2, 2]).unwrap().all_mults_even());
        assert!(!Partition::new([2]).unwrap().all_mults_even());

        let sel: HashSet<Vec<u32>> =
            partitions_matching(4, Partition::odd_parts_even_mult)
                .into_iter()
                .map(|l| l.parts().to_vec())
                .collect();
        let want: HashSet<Vec<u32>> =
            [vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
                .into_iter()
                .collect();
        assert_eq!(sel, want);

        let sel: HashSet<Vec<u32>> = partitions_matching(4, Partition::all_mults_even)
            .into_iter()
            .map(|l| l.parts().to_vec())
            .collect();
        let want: HashSet<Vec<u32>> = [vec![2, 2], vec![1, 1, 1, 1]].into_iter().collect();
        assert_eq!(sel, want);
    }

    #[test]
    fn conjugation_involution_exhaustive() {
        for n in 0..=30u64 {
            for l in partitions_of(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), l.size());
            }
        }
    }

    #[test]
    fn conjugate_square_sum_identity_exhaustive() {
        // Σ_j (λ'_j)^2 = Σ_j [ j·m_j + 2 Σ_{i<j} i·m_i ] · m_j
        for n in 0..=30u64 {
            for l in partitions_of(n) {
                let mut rhs: u64 = 0;
                let mults = l.multiplicities();
                for &(j, mj) in mults {
                    let mut inner = (j as u64) * (mj as u64);
                    for &(i, mi) in mults {
                        if i < j {
                            inner += 2 * (i as u64) * (mi as u64);
                        }
                    }
                    rhs += inner * (mj as u64);
                }
                assert_eq!(l.conjugate_square_sum(), rhs, "λ = {l}");
            }
        }
    }

    #[test]
    fn odd_even_mult_column_parity_exhaustive() {
        // odd parts have even multiplicity ⇔ λ'_{2i-1} ≡ λ'_{2i} (mod 2) ∀i
        for n in 0..=30u64 {
            for l in partitions_of(n) {
                let mut cols = l.conjugate().parts().to_vec();
                if cols.len() % 2 == 1 {
                    cols.push(0);
                }
                let col_parity = cols.chunks(2).all(|c| c[0] % 2 == c[1] % 2);
                assert_eq!(l.odd_parts_even_mult(), col_parity, "λ = {l}");
            }
        }
    }

    #[test]
    fn size_matches_weighted_multiplicities() {
        for n in 0..=20u64 {
            for l in partitions_of(n) {
                let via_mults: u64 = l
                    .multiplicities()
                    .iter()
                    .map(|&(p, m)| p as u64 * m as u64)
                    .sum();
                assert_eq!(via_mults, n);
                let via_conj: u64 = l.conjugate().parts().iter().map(|&c| c as u64).sum();
                assert_eq!(via_conj, n);
                assert_eq!(l.len() as u64, l.multiplicities().iter().map(|&(_, m)| m as u64).sum());
            }
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(Partition::new([5, 4, 4, 1]).unwrap().to_string(), "[5,4,4,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }
}
