//! Integer partitions, used both as h/e-basis monomial indices and as the
//! value-multiplicity data of Dyck paths.

use std::cmp::Ordering;
use std::fmt;

use num::BigInt;
use num::One;

/// A weakly decreasing sequence of positive integer parts. The empty
/// sequence is the empty partition.
///
/// Ordering is the canonical term order used everywhere in this crate:
/// weight first, then lexicographically *descending* on the parts, so that
/// for weight 3 the iteration order is `[3]`, `[2,1]`, `[1,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from arbitrary nonnegative entries: zeros are
    /// dropped, the rest sorted decreasingly.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Single-part partition `[k]`, or empty when `k == 0`.
    pub fn single(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight `|λ|`: the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Merge of two partitions: the multiset union of their parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `n! / (λ_1! · λ_2! · ...)`, the number of rearrangements of a word
    /// whose letter multiplicities are the parts. Requires `|λ| = n`.
    pub fn multinomial(&self) -> BigInt {
        let mut result = BigInt::one();
        let mut next = 1usize;
        for &part in &self.parts {
            // multiply a block of (next..next+part) and divide by part!
            for i in 0..part as usize {
                result *= BigInt::from(next + i);
                result /= BigInt::from(i + 1);
            }
            next += part as usize;
        }
        result
    }

    /// All partitions of `n`, in canonical order.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: stack.clone(),
                });
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                stack.push(p);
                rec(remaining - p, p, stack, out);
                stack.pop();
                p -= 1;
            }
        }
        rec(n, n, &mut stack, &mut out);
        out
    }

    /// Number of distinct compositions (ordered sequences) whose sorted form
    /// is this partition: `ℓ! / ∏ m_j!` over part multiplicities `m_j`.
    pub fn composition_count(&self) -> BigInt {
        let mut mults: Vec<u32> = Vec::new();
        let mut prev = None;
        for &p in &self.parts {
            if prev == Some(p) {
                *mults.last_mut().unwrap() += 1;
            } else {
                mults.push(1);
                prev = Some(p);
            }
        }
        Partition::from_unsorted(mults).multinomial()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            // lexicographically descending within a weight
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::from_unsorted(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_weight_then_lex_descending() {
        let p3 = Partition::single(3);
        let p21 = Partition::from_unsorted(vec![2, 1]);
        let p111 = Partition::from_unsorted(vec![1, 1, 1]);
        let p2 = Partition::single(2);
        assert!(p2 < p3);
        assert!(p3 < p21);
        assert!(p21 < p111);
        assert!(Partition::empty() < p2);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(Partition::single(3).multinomial(), BigInt::from(1));
        assert_eq!(
            Partition::from_unsorted(vec![2, 1]).multinomial(),
            BigInt::from(3)
        );
        // 10!/(2!*3!*4!*1!) = 12600
        assert_eq!(
            Partition::from_unsorted(vec![4, 3, 2, 1]).multinomial(),
            BigInt::from(12600)
        );
        assert_eq!(Partition::empty().multinomial(), BigInt::from(1));
    }

    #[test]
    fn partitions_of_small_weight() {
        assert_eq!(Partition::all_of_weight(0).len(), 1);
        assert_eq!(Partition::all_of_weight(4).len(), 5);
        assert_eq!(Partition::all_of_weight(8).len(), 22);
        // first element of weight 4 in canonical order is [4]
        assert_eq!(Partition::all_of_weight(4)[0], Partition::single(4));
    }

    #[test]
    fn composition_counts() {
        // compositions of 3: (3); (2,1),(1,2); (1,1,1)
        assert_eq!(
            Partition::single(3).composition_count(),
            BigInt::from(1)
        );
        assert_eq!(
            Partition::from_unsorted(vec![2, 1]).composition_count(),
            BigInt::from(2)
        );
        assert_eq!(
            Partition::from_unsorted(vec![1, 1, 1]).composition_count(),
            BigInt::from(1)
        );
    }
}
