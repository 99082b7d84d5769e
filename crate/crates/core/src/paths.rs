//! Dyck-path combinatorics: enumeration, height and area statistics, hook
//! decomposition, conjugation, characters, and explicit parking-function
//! enumeration for the brute-force oracle.

use std::fmt;

use num::BigInt;

use crate::algebra::bisym::BiSymH;
use crate::algebra::partition::Partition;
use crate::algebra::qpoly::QPoly;
use crate::{Error, Result};

/// Default size cap for exhaustive parking-function enumeration.
pub const PARKING_ENUM_LIMIT: usize = 7;

/// Size cap for path-indexed oracle sums (Catalan growth).
pub const PATH_ORACLE_LIMIT: usize = 12;

/// A weakly decreasing sequence `a_1 ≥ … ≥ a_n ≥ 0` with `a_k ≤ n−k`:
/// a partition drawn inside the staircase, i.e. a Dyck path. The empty
/// path (`n = 0`) is allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DyckPath {
    a: Vec<u32>,
}

impl DyckPath {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        let n = a.len();
        for (k, &v) in a.iter().enumerate() {
            if v as usize > n - k - 1 {
                return Err(Error::InvalidHookList(format!(
                    "entry a_{} = {} exceeds staircase bound {}",
                    k + 1,
                    v,
                    n - k - 1
                )));
            }
            if k + 1 < n && a[k + 1] > v {
                return Err(Error::InvalidHookList(
                    "sequence is not weakly decreasing".into(),
                ));
            }
        }
        Ok(DyckPath { a })
    }

    pub fn empty() -> Self {
        DyckPath { a: Vec::new() }
    }

    /// The full staircase `(n−1, n−2, …, 1, 0)`, the unique height-0 path.
    pub fn staircase(n: usize) -> Self {
        DyckPath {
            a: (0..n).rev().map(|v| v as u32).collect(),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    /// `max_k (n − k − a_k)`, 0 for the empty path.
    pub fn height(&self) -> usize {
        let n = self.a.len();
        self.a
            .iter()
            .enumerate()
            .map(|(k, &v)| n - (k + 1) - v as usize)
            .max()
            .unwrap_or(0)
    }

    /// `Σ_k (n − k − a_k) = n(n−1)/2 − Σ_k a_k`.
    pub fn area(&self) -> usize {
        let n = self.a.len();
        n * n.saturating_sub(1) / 2 - self.a.iter().map(|&v| v as usize).sum::<usize>()
    }

    /// The unique hook decomposition, read top-left to bottom-right: the
    /// vertical runs are the multiplicities of the distinct values in
    /// increasing value order, the horizontal runs the gaps between them.
    pub fn hooks(&self) -> HookList {
        let n = self.a.len();
        if n == 0 {
            return HookList { hooks: Vec::new() };
        }
        // distinct values ascending with multiplicities
        let mut runs: Vec<(u32, u32)> = Vec::new(); // (value, multiplicity)
        for &v in self.a.iter().rev() {
            match runs.last_mut() {
                Some((value, mult)) if *value == v => *mult += 1,
                _ => runs.push((v, 1)),
            }
        }
        let mut hooks = Vec::with_capacity(runs.len());
        for (i, &(value, mult)) in runs.iter().enumerate() {
            let next = runs
                .get(i + 1)
                .map(|&(v, _)| v)
                .unwrap_or(n as u32);
            hooks.push((mult, next - value));
        }
        HookList { hooks }
    }

    /// Transpose of the partition diagram inside the staircase; equivalently
    /// the path whose hooks are this path's hooks reversed with `r` and `s`
    /// swapped.
    pub fn conjugate(&self) -> DyckPath {
        let mut hooks = self.hooks().hooks;
        hooks.reverse();
        for h in &mut hooks {
            *h = (h.1, h.0);
        }
        path_from_hooks(&HookList { hooks }).expect("conjugate of a valid path is valid")
    }

    /// Corner depths along the hook walk: `post` lists the depth after each
    /// hook with `d_0 = 0` prepended; `max_pre` is the deepest point reached
    /// at the bottom of a vertical run (`height + 1` for nonempty paths).
    pub fn corner_depths(&self) -> (Vec<usize>, usize) {
        let mut post = vec![0usize];
        let mut max_pre = 0usize;
        let mut depth = 0usize;
        for &(r, s) in &self.hooks().hooks {
            max_pre = max_pre.max(depth + r as usize);
            depth = depth + r as usize - s as usize;
            post.push(depth);
        }
        (post, max_pre)
    }

    /// Frobenius characteristic of the permutation action on this shape's
    /// parking functions: the product of `h_r(x)` over all value
    /// multiplicities (including the multiplicity of the value 0).
    pub fn char_x(&self) -> BiSymH {
        let mults: Vec<u32> = self.hooks().hooks.iter().map(|&(r, _)| r).collect();
        BiSymH::term(
            Partition::from_unsorted(mults),
            Partition::empty(),
            QPoly::one(),
        )
    }

    /// Character of the pair action: `∏ h_{r_t}(x)·h_{s_t}(y)` over hooks.
    pub fn bichar(&self) -> BiSymH {
        let hooks = self.hooks().hooks;
        let rs: Vec<u32> = hooks.iter().map(|&(r, _)| r).collect();
        let ss: Vec<u32> = hooks.iter().map(|&(_, s)| s).collect();
        BiSymH::term(
            Partition::from_unsorted(rs),
            Partition::from_unsorted(ss),
            QPoly::one(),
        )
    }

    /// Number of distinct rearrangements of the path word: the multinomial
    /// `n! / ∏ r_i!` over value multiplicities.
    pub fn parking_count(&self) -> BigInt {
        let mults: Vec<u32> = self.hooks().hooks.iter().map(|&(r, _)| r).collect();
        Partition::from_unsorted(mults).multinomial()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.a.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A hook decomposition: pairs `(r_t, s_t)` of vertical/horizontal run
/// lengths with `Σ r = Σ s = n` and every entry positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookList {
    pub hooks: Vec<(u32, u32)>,
}

impl fmt::Display for HookList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (r, s)) in self.hooks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({r},{s})")?;
        }
        write!(f, "]")
    }
}

/// Rebuilds the path from a hook list; fails when the walk leaves the
/// staircase (a partial depth would go negative), does not close at depth
/// zero, or contains a nonpositive run.
pub fn path_from_hooks(h: &HookList) -> Result<DyckPath> {
    let mut depth: i64 = 0;
    for &(r, s) in &h.hooks {
        if r == 0 || s == 0 {
            return Err(Error::InvalidHookList("runs must be positive".into()));
        }
        depth += r as i64 - s as i64;
        if depth < 0 {
            return Err(Error::InvalidHookList(
                "horizontal run overshoots the diagonal".into(),
            ));
        }
    }
    if depth != 0 {
        return Err(Error::InvalidHookList(
            "vertical and horizontal totals differ".into(),
        ));
    }
    // values ascend by the horizontal gaps; multiplicities are the r's
    let mut a: Vec<u32> = Vec::new();
    let mut value = 0u32;
    for &(r, s) in &h.hooks {
        for _ in 0..r {
            a.push(value);
        }
        value += s;
    }
    a.reverse();
    DyckPath::new(a)
}

/// All Dyck paths of size `n`, optionally height-bounded, in the canonical
/// suffix-major order: the staircase first, `(0,…,0)` last.
pub fn enumerate_paths(n: usize, max_height: Option<usize>) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut acc = vec![0u32; n];
    // positions are filled from a_n back to a_1, largest candidate first
    fn rec(
        k: usize,
        n: usize,
        max_height: Option<usize>,
        acc: &mut Vec<u32>,
        out: &mut Vec<DyckPath>,
    ) {
        if k == 0 {
            let mut a = acc.clone();
            a.reverse();
            out.push(DyckPath { a });
            return;
        }
        let upper = (n - k) as u32;
        let mut lower = if k < n { acc[n - k - 1] } else { 0 };
        if let Some(eta) = max_height {
            let min_for_height = (n - k).saturating_sub(eta) as u32;
            lower = lower.max(min_for_height);
        }
        let mut v = upper;
        loop {
            acc[n - k] = v;
            rec(k - 1, n, max_height, acc, out);
            if v == lower {
                break;
            }
            v -= 1;
        }
    }
    rec(n, n, max_height, &mut acc, &mut out);
    out
}

/// A sequence whose decreasing reordering is a Dyck path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParkingFunction {
    values: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut sorted = values.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        DyckPath::new(sorted)?;
        Ok(ParkingFunction { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The shape: the decreasing reordering.
    pub fn shape(&self) -> DyckPath {
        let mut sorted = self.values.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        DyckPath { a: sorted }
    }
}

/// All parking functions of size `n` (optionally bounded-height shape),
/// generated shape by shape; capped at [`PARKING_ENUM_LIMIT`].
pub fn enumerate_parking_functions(
    n: usize,
    max_height: Option<usize>,
) -> Result<Vec<ParkingFunction>> {
    enumerate_parking_functions_with_limit(n, max_height, PARKING_ENUM_LIMIT)
}

pub fn enumerate_parking_functions_with_limit(
    n: usize,
    max_height: Option<usize>,
    limit: usize,
) -> Result<Vec<ParkingFunction>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "parking-function enumeration",
            limit,
            requested: n,
        });
    }
    let mut out = Vec::new();
    for shape in enumerate_paths(n, max_height) {
        // distinct rearrangements in ascending lexicographic order
        let mut word: Vec<u32> = shape.a.clone();
        word.reverse();
        loop {
            out.push(ParkingFunction {
                values: word.clone(),
            });
            if !next_permutation(&mut word) {
                break;
            }
        }
    }
    Ok(out)
}

/// Standard in-place next lexicographic permutation; `false` at the last.
fn next_permutation(word: &mut [u32]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// `C(n) = (2n)! / (n! (n+1)!)`, computed from the multiplicative recurrence.
pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for i in 0..n {
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(a: &[u32]) -> DyckPath {
        DyckPath::new(a.to_vec()).unwrap()
    }

    fn fig1() -> DyckPath {
        path(&[8, 3, 3, 3, 3, 1, 1, 1, 0, 0])
    }

    #[test]
    fn staircase_and_validation() {
        assert_eq!(DyckPath::staircase(3), path(&[2, 1, 0]));
        assert!(DyckPath::new(vec![3, 1, 0]).is_err());
        assert!(DyckPath::new(vec![1, 2, 0]).is_err());
        assert!(DyckPath::new(vec![]).is_ok());
    }

    #[test]
    fn height_examples() {
        assert_eq!(path(&[2, 1, 0]).height(), 0);
        assert_eq!(path(&[0, 0, 0]).height(), 2);
        assert_eq!(fig1().height(), 5);
        assert_eq!(DyckPath::empty().height(), 0);
    }

    #[test]
    fn area_examples() {
        assert_eq!(path(&[2, 1, 0]).area(), 0);
        assert_eq!(path(&[0, 0, 0]).area(), 3);
        assert_eq!(fig1().area(), 22);
        assert_eq!(DyckPath::empty().area(), 0);
    }

    #[test]
    fn hooks_examples() {
        assert_eq!(
            fig1().hooks().hooks,
            vec![(2, 1), (3, 2), (4, 5), (1, 2)]
        );
        assert_eq!(
            path(&[2, 1, 0]).hooks().hooks,
            vec![(1, 1), (1, 1), (1, 1)]
        );
        assert_eq!(path(&[0, 0]).hooks().hooks, vec![(2, 2)]);
        assert!(DyckPath::empty().hooks().hooks.is_empty());
    }

    #[test]
    fn hooks_round_trip_and_errors() {
        let h = HookList {
            hooks: vec![(2, 1), (3, 2), (4, 5), (1, 2)],
        };
        assert_eq!(path_from_hooks(&h).unwrap(), fig1());
        assert_eq!(
            path_from_hooks(&HookList {
                hooks: vec![(2, 2)]
            })
            .unwrap(),
            path(&[0, 0])
        );
        assert!(path_from_hooks(&HookList {
            hooks: vec![(1, 2), (1, 1)]
        })
        .is_err());
        assert!(path_from_hooks(&HookList {
            hooks: vec![(1, 0)]
        })
        .is_err());
        assert!(path_from_hooks(&HookList {
            hooks: vec![(2, 1)]
        })
        .is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(path(&[1, 1, 0]).conjugate(), path(&[2, 0, 0]));
        assert_eq!(
            DyckPath::staircase(5).conjugate(),
            DyckPath::staircase(5)
        );
        assert_eq!(path(&[0, 0, 0]).conjugate(), path(&[0, 0, 0]));
        assert_eq!(DyckPath::empty().conjugate(), DyckPath::empty());
    }

    #[test]
    fn corner_depth_examples() {
        let (post, max_pre) = fig1().corner_depths();
        assert_eq!(post, vec![0, 1, 2, 1, 0]);
        assert_eq!(max_pre, 6);
        let (post, max_pre) = DyckPath::staircase(4).corner_depths();
        assert_eq!(post, vec![0; 5]);
        assert_eq!(max_pre, 1);
        let (post, max_pre) = path(&[0, 0]).corner_depths();
        assert_eq!(post, vec![0, 0]);
        assert_eq!(max_pre, 2);
    }

    #[test]
    fn characters_and_counts() {
        assert_eq!(path(&[2, 1, 0]).char_x(), {
            BiSymH::term(
                Partition::from_unsorted(vec![1, 1, 1]),
                Partition::empty(),
                QPoly::one(),
            )
        });
        assert_eq!(
            path(&[1, 1, 0]).char_x(),
            BiSymH::term(
                Partition::from_unsorted(vec![2, 1]),
                Partition::empty(),
                QPoly::one(),
            )
        );
        assert_eq!(
            fig1().char_x(),
            BiSymH::term(
                Partition::from_unsorted(vec![4, 3, 2, 1]),
                Partition::empty(),
                QPoly::one(),
            )
        );
        // bichar of the figure path: h{4321}(x) h{52211...}: r = (2,3,4,1), s = (1,2,5,2)
        assert_eq!(
            fig1().bichar(),
            BiSymH::term(
                Partition::from_unsorted(vec![2, 3, 4, 1]),
                Partition::from_unsorted(vec![1, 2, 5, 2]),
                QPoly::one(),
            )
        );
        assert_eq!(path(&[0, 0]).bichar(), BiSymH::h_pair(2, 2));
        assert_eq!(DyckPath::empty().bichar(), BiSymH::one());
        assert_eq!(
            DyckPath::staircase(4).bichar(),
            BiSymH::term(
                Partition::from_unsorted(vec![1; 4]),
                Partition::from_unsorted(vec![1; 4]),
                QPoly::one(),
            )
        );
        assert_eq!(DyckPath::staircase(3).parking_count(), BigInt::from(6));
        assert_eq!(path(&[0, 0, 0]).parking_count(), BigInt::from(1));
        assert_eq!(fig1().parking_count(), BigInt::from(12600));
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(enumerate_paths(0, None), vec![DyckPath::empty()]);
        let all3 = enumerate_paths(3, None);
        assert_eq!(
            all3,
            vec![
                path(&[2, 1, 0]),
                path(&[1, 1, 0]),
                path(&[2, 0, 0]),
                path(&[1, 0, 0]),
                path(&[0, 0, 0]),
            ]
        );
        let bounded = enumerate_paths(3, Some(1));
        assert_eq!(bounded.len(), 4);
        assert!(!bounded.contains(&path(&[0, 0, 0])));
        for n in 0..=12 {
            assert_eq!(
                BigInt::from(enumerate_paths(n, None).len()),
                catalan(n),
                "Catalan count at n = {n}"
            );
        }
    }

    #[test]
    fn parking_function_enumeration() {
        let pf1 = enumerate_parking_functions(1, None).unwrap();
        assert_eq!(pf1.len(), 1);
        assert_eq!(pf1[0].values(), &[0]);
        let pf3 = enumerate_parking_functions(3, None).unwrap();
        assert_eq!(pf3.len(), 16);
        let pf3b = enumerate_parking_functions(3, Some(1)).unwrap();
        assert_eq!(pf3b.len(), 15);
        // (n+1)^{n-1}
        for n in 1..=6usize {
            let count = enumerate_parking_functions(n, None).unwrap().len();
            assert_eq!(count, (n + 1).pow(n as u32 - 1));
        }
        assert!(matches!(
            enumerate_parking_functions(8, None),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn per_shape_counts_match_multinomial() {
        for n in 0..=6usize {
            let all = enumerate_parking_functions(n, None).unwrap();
            for shape in enumerate_paths(n, None) {
                let observed = all.iter().filter(|p| p.shape() == shape).count();
                assert_eq!(BigInt::from(observed), shape.parking_count());
            }
        }
    }

    #[test]
    fn conjugation_is_involution_preserving_stats() {
        for n in 0..=10usize {
            for p in enumerate_paths(n, None) {
                let c = p.conjugate();
                assert_eq!(c.conjugate(), p);
                assert_eq!(c.area(), p.area());
                assert_eq!(c.height(), p.height());
                let mut rs: Vec<(u32, u32)> =
                    p.hooks().hooks.iter().map(|&(r, s)| (s, r)).collect();
                rs.reverse();
                assert_eq!(c.hooks().hooks, rs);
            }
        }
    }

    #[test]
    fn corner_depths_bound_by_height() {
        for n in 0..=10usize {
            for p in enumerate_paths(n, None) {
                let (post, max_pre) = p.corner_depths();
                if n > 0 {
                    assert_eq!(max_pre, p.height() + 1);
                }
                assert!(post.iter().all(|&d| d <= p.height()));
            }
        }
    }

    #[test]
    fn area_decomposes_over_hooks() {
        // Σ_t (r_t·d_{t-1} + r_t(r_t-1)/2) = area, the transfer-matrix weight rule
        for n in 0..=10usize {
            for p in enumerate_paths(n, None) {
                let (post, _) = p.corner_depths();
                let total: usize = p
                    .hooks()
                    .hooks
                    .iter()
                    .enumerate()
                    .map(|(t, &(r, _))| {
                        let r = r as usize;
                        r * post[t] + r * (r - 1) / 2
                    })
                    .sum();
                assert_eq!(total, p.area());
            }
        }
    }

    #[test]
    fn bichar_specializes_to_char() {
        for n in 0..=10usize {
            for p in enumerate_paths(n, None) {
                assert_eq!(p.bichar().spec_y_one(), p.char_x());
            }
        }
    }
}
