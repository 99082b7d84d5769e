//! Finite `QPoly`-linear combinations of basis terms `h_λ(x)·h_μ(y)` over
//! two independent alphabets. The empty combination is zero; the pair of
//! empty partitions with coefficient 1 is the scalar 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Zero};

use super::partition::Partition;
use super::qpoly::QPoly;
use super::series::ZSeries;
use crate::{Error, Result};

/// Basis key `h_λ(x)·h_μ(y)`; ordering is inherited from [`Partition`]
/// (weight, then lex descending), λ before μ.
pub type BiKey = (Partition, Partition);

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct BiSymH {
    terms: BTreeMap<BiKey, QPoly>,
}

impl BiSymH {
    pub fn zero() -> Self {
        BiSymH {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiSymH::scalar(QPoly::one())
    }

    pub fn scalar(c: QPoly) -> Self {
        BiSymH::term(Partition::empty(), Partition::empty(), c)
    }

    pub fn term(lambda: Partition, mu: Partition, c: QPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((lambda, mu), c);
        }
        BiSymH { terms }
    }

    /// `h_k(x)` (the scalar 1 when `k == 0`).
    pub fn h_x(k: u32) -> Self {
        BiSymH::term(Partition::single(k), Partition::empty(), QPoly::one())
    }

    /// `h_k(y)`.
    pub fn h_y(k: u32) -> Self {
        BiSymH::term(Partition::empty(), Partition::single(k), QPoly::one())
    }

    /// `h_r(x)·h_s(y)`.
    pub fn h_pair(r: u32, s: u32) -> Self {
        BiSymH::term(Partition::single(r), Partition::single(s), QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(Partition::empty(), Partition::empty()))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Canonical-order view of the terms.
    pub fn terms(&self) -> impl Iterator<Item = (&BiKey, &QPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> QPoly {
        self.terms
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, key: BiKey, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient-wise product with a `q`-polynomial.
    pub fn mul_scalar(&self, c: &QPoly) -> BiSymH {
        if c.is_zero() {
            return BiSymH::zero();
        }
        let mut out = BiSymH::zero();
        for (key, v) in &self.terms {
            out.add_term(key.clone(), &(v * c));
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn mul_q_pow(&self, k: u32) -> BiSymH {
        BiSymH {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (key.clone(), v.mul_q_pow(k)))
                .collect(),
        }
    }

    /// The substitution `x ↦ q^a x`: each term gains `q^{a·|λ|}`.
    pub fn scale_x_q(&self, a: u32) -> BiSymH {
        BiSymH {
            terms: self
                .terms
                .iter()
                .map(|((l, m), v)| {
                    let shift = a * l.weight() as u32;
                    ((l.clone(), m.clone()), v.mul_q_pow(shift))
                })
                .collect(),
        }
    }

    /// The substitution `x ↦ q^a z^b x`: each term gains `q^{a·|λ|}` and
    /// moves to `z`-degree `b·|λ|`. The result is an exact polynomial in `z`
    /// (everything lands at degree 0 when `b == 0`).
    pub fn scale_x_z(&self, a: u32, b: u32) -> ZSeries {
        let max_deg = self
            .terms
            .keys()
            .map(|(l, _)| b as usize * l.weight())
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![BiSymH::zero(); max_deg + 1];
        for ((l, m), v) in &self.terms {
            let w = l.weight() as u32;
            coeffs[(b * w) as usize].add_term((l.clone(), m.clone()), &v.mul_q_pow(a * w));
        }
        ZSeries::from_coeffs_exact(coeffs)
    }

    /// Sets every `h_k(y)` to 1: the key `(λ, μ)` collapses to `(λ, ∅)`.
    pub fn spec_y_one(&self) -> BiSymH {
        let mut out = BiSymH::zero();
        for ((l, _), v) in &self.terms {
            out.add_term((l.clone(), Partition::empty()), v);
        }
        out
    }

    /// Swaps the two alphabets.
    pub fn swap_xy(&self) -> BiSymH {
        BiSymH {
            terms: self
                .terms
                .iter()
                .map(|((l, m), v)| ((m.clone(), l.clone()), v.clone()))
                .collect(),
        }
    }

    /// Replaces each `h_λ(x)h_μ(y)` by the product of multinomial
    /// coefficients `(n!/∏λᵢ!)·(n!/∏μⱼ!)`, the dimension of the module the
    /// term encodes. Every λ must have weight exactly `n`, and every μ must
    /// be empty or of weight `n`.
    pub fn dim_multinomial(&self, n: usize) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for ((l, m), v) in &self.terms {
            if l.weight() != n {
                return Err(Error::GradingViolation {
                    expected: n,
                    found: l.weight(),
                });
            }
            if !m.is_empty() && m.weight() != n {
                return Err(Error::GradingViolation {
                    expected: n,
                    found: m.weight(),
                });
            }
            let dim = l.multinomial() * m.multinomial();
            out += &v.mul_int(&dim);
        }
        Ok(out)
    }

    /// Counting specialization: every `h` goes to 1 and `q` is evaluated at
    /// the given integer.
    pub fn specialize_count(&self, q: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for v in self.terms.values() {
            total += v.eval_int(q);
        }
        total
    }

    /// True when every `q`-coefficient of every term is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|v| v.is_nonnegative())
    }

    /// True when every term satisfies `|λ| = |μ| = n`.
    pub fn is_balanced(&self, n: usize) -> bool {
        self.terms
            .keys()
            .all(|(l, m)| l.weight() == n && m.weight() == n)
    }
}

impl Add for &BiSymH {
    type Output = BiSymH;
    fn add(self, rhs: &BiSymH) -> BiSymH {
        let mut out = self.clone();
        for (key, v) in &rhs.terms {
            out.add_term(key.clone(), v);
        }
        out
    }
}

impl Sub for &BiSymH {
    type Output = BiSymH;
    fn sub(self, rhs: &BiSymH) -> BiSymH {
        let mut out = self.clone();
        for (key, v) in &rhs.terms {
            out.add_term(key.clone(), &(-v));
        }
        out
    }
}

impl Mul for &BiSymH {
    type Output = BiSymH;
    fn mul(self, rhs: &BiSymH) -> BiSymH {
        let mut out = BiSymH::zero();
        for ((la, ma), va) in &self.terms {
            for ((lb, mb), vb) in &rhs.terms {
                out.add_term((la.concat(lb), ma.concat(mb)), &(va * vb));
            }
        }
        out
    }
}

impl Neg for &BiSymH {
    type Output = BiSymH;
    fn neg(self) -> BiSymH {
        BiSymH {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

/// One rendered product `h[2,1]x*h[1]y`, or `1` for the scalar key.
fn write_basis(f: &mut fmt::Formatter<'_>, key: &BiKey) -> fmt::Result {
    let (l, m) = key;
    if !l.is_empty() {
        write!(f, "h{l}x")?;
    }
    if !m.is_empty() {
        if !l.is_empty() {
            write!(f, "*")?;
        }
        write!(f, "h{m}y")?;
    }
    Ok(())
}

/// Writes one flat term `sign qpart*basis*zpow` used by all the polynomial
/// and series renderers; `first` suppresses the leading `+`.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &QPoly,
    basis: &dyn fmt::Display,
    basis_is_scalar: bool,
    z_pow: Option<usize>,
) -> fmt::Result {
    let (negated, body): (bool, QPoly) = if coeff.is_uniformly_negative() {
        (true, -coeff)
    } else {
        (false, coeff.clone())
    };
    if first {
        if negated {
            write!(f, "-")?;
        }
    } else if negated {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let z_deg = z_pow.unwrap_or(0);
    let mut wrote_factor = false;
    // a bare coefficient 1 is only written when nothing else would be
    if !body.is_one() || (basis_is_scalar && z_deg == 0) {
        if body.num_terms() == 1 {
            write!(f, "{body}")?;
        } else {
            write!(f, "({body})")?;
        }
        wrote_factor = true;
    }
    if !basis_is_scalar {
        if wrote_factor {
            write!(f, "*")?;
        }
        write!(f, "{basis}")?;
        wrote_factor = true;
    }
    if z_deg > 0 {
        if wrote_factor {
            write!(f, "*")?;
        }
        if z_deg == 1 {
            write!(f, "z")?;
        } else {
            write!(f, "z^{z_deg}")?;
        }
    }
    Ok(())
}

pub(crate) struct BasisDisplay<'a>(pub(crate) &'a BiKey);

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_basis(f, self.0)
    }
}

/// Canonical flat rendering: terms in canonical key order, each as
/// `coeff*h[..]x*h[..]y`, e.g. `h[1]x*h[1]y + q*h[2]x*h[2]y`. Zero is `0`.
impl fmt::Display for BiSymH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, v)) in self.terms.iter().enumerate() {
            let scalar = key.0.is_empty() && key.1.is_empty();
            write_term(f, i == 0, v, &BasisDisplay(key), scalar, None)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QPoly {
        QPoly::q_pow(1)
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let t = BiSymH::h_pair(1, 1);
        assert_eq!(&t + &BiSymH::zero(), t);
        let m = BiSymH::h_pair(2, 2);
        let cancel = &m + &m.mul_scalar(&QPoly::from_int(-1));
        assert!(cancel.is_zero());
        // like-term merge: h11 + q*h11 = (1+q)*h11
        let merged = &t + &t.mul_scalar(&q());
        assert_eq!(merged.num_terms(), 1);
        assert_eq!(
            merged.coeff(&Partition::single(1), &Partition::single(1)),
            &QPoly::one() + &q()
        );
    }

    #[test]
    fn product_concatenates_basis_keys() {
        // h2(x)h1(y) * h3(x)h2(y) = h{32}(x) h{21}(y)
        let p = &BiSymH::h_pair(2, 1) * &BiSymH::h_pair(3, 2);
        assert_eq!(
            p,
            BiSymH::term(
                Partition::from_unsorted(vec![3, 2]),
                Partition::from_unsorted(vec![2, 1]),
                QPoly::one()
            )
        );
        // multiplicative identity
        let f = &BiSymH::h_pair(1, 1) + &BiSymH::h_pair(2, 2).mul_scalar(&q());
        assert_eq!(&BiSymH::one() * &f, f);
        // distributivity on the spec's example
        let d = &f * &BiSymH::h_pair(1, 1);
        let expect = &BiSymH::term(
            Partition::from_unsorted(vec![1, 1]),
            Partition::from_unsorted(vec![1, 1]),
            QPoly::one(),
        ) + &BiSymH::term(
            Partition::from_unsorted(vec![2, 1]),
            Partition::from_unsorted(vec![2, 1]),
            q(),
        );
        assert_eq!(d, expect);
    }

    #[test]
    fn scale_x_examples() {
        // h2(x)h1(y) under x -> qx gains q^2
        let t = BiSymH::h_pair(2, 1);
        assert_eq!(t.scale_x_q(1), t.mul_q_pow(2));
        // h21(x) under x -> zx lands at z^3
        let h21 = BiSymH::term(
            Partition::from_unsorted(vec![2, 1]),
            Partition::empty(),
            QPoly::one(),
        );
        let zs = h21.scale_x_z(0, 1);
        assert_eq!(zs.order(), 3);
        assert_eq!(zs.coeff(3), &h21);
        assert!(zs.coeff(0).is_zero());
        // the scalar 1 is fixed
        assert_eq!(BiSymH::one().scale_x_q(5), BiSymH::one());
        let one_z = BiSymH::one().scale_x_z(2, 3);
        assert_eq!(one_z.order(), 0);
        assert_eq!(one_z.coeff(0), &BiSymH::one());
    }

    #[test]
    fn spec_y_one_collapses_mu() {
        let t = BiSymH::h_pair(2, 5);
        assert_eq!(t.spec_y_one(), BiSymH::h_x(2));
        // idempotent
        let f = &BiSymH::h_pair(1, 2) + &BiSymH::h_pair(1, 3).mul_scalar(&q());
        assert_eq!(f.spec_y_one().spec_y_one(), f.spec_y_one());
    }

    #[test]
    fn dim_multinomial_examples() {
        assert_eq!(
            BiSymH::h_x(3).dim_multinomial(3).unwrap(),
            QPoly::from_int(1)
        );
        let h21 = BiSymH::term(
            Partition::from_unsorted(vec![2, 1]),
            Partition::empty(),
            QPoly::one(),
        );
        assert_eq!(h21.dim_multinomial(3).unwrap(), QPoly::from_int(3));
        let fig1 = BiSymH::term(
            Partition::from_unsorted(vec![4, 3, 2, 1]),
            Partition::empty(),
            QPoly::one(),
        );
        assert_eq!(fig1.dim_multinomial(10).unwrap(), QPoly::from_int(12600));
        // grading violation
        assert!(matches!(
            BiSymH::h_x(2).dim_multinomial(3),
            Err(Error::GradingViolation { .. })
        ));
    }

    #[test]
    fn display_matches_canonical_form() {
        assert_eq!(BiSymH::zero().to_string(), "0");
        assert_eq!(BiSymH::one().to_string(), "1");
        let f = &BiSymH::h_pair(1, 1) + &BiSymH::h_pair(2, 2).mul_scalar(&q());
        assert_eq!(f.to_string(), "h[1]x*h[1]y + q*h[2]x*h[2]y");
        let neg = -&BiSymH::h_pair(1, 1);
        assert_eq!(neg.to_string(), "-h[1]x*h[1]y");
    }
}
