//! Products of elementary symmetric functions `e_λ` in one alphabet, the
//! `z`-polynomials over them used by the recurrence-defined Chebyshev-like
//! polynomials, and the expansion of `e_k` into the h basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;

use super::bisym::{write_term, BiSymH};
use super::partition::Partition;
use super::qpoly::QPoly;
use super::series::ZSeries;

/// A finite `QPoly`-linear combination of `e_λ` basis elements.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ESym {
    terms: BTreeMap<Partition, QPoly>,
}

impl ESym {
    pub fn zero() -> Self {
        ESym {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ESym::term(Partition::empty(), QPoly::one())
    }

    pub fn term(lambda: Partition, c: QPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        ESym { terms }
    }

    /// `e_k` (the scalar 1 when `k == 0`).
    pub fn e(k: u32) -> Self {
        ESym::term(Partition::single(k), QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, key: Partition, c: &QPoly) {
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

    pub fn mul_scalar(&self, c: &QPoly) -> ESym {
        let mut out = ESym::zero();
        for (key, v) in &self.terms {
            out.add_term(key.clone(), &(v * c));
        }
        out
    }

    pub fn mul_q_pow(&self, k: u32) -> ESym {
        ESym {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (key.clone(), v.mul_q_pow(k)))
                .collect(),
        }
    }

    /// Expansion into the h basis (single alphabet, on `x`).
    pub fn to_h(&self) -> BiSymH {
        let mut out = BiSymH::zero();
        for (lambda, c) in &self.terms {
            let mut prod = BiSymH::scalar(c.clone());
            for &part in lambda.parts() {
                prod = &prod * &e_to_h(part);
            }
            out = &out + &prod;
        }
        out
    }
}

impl Add for &ESym {
    type Output = ESym;
    fn add(self, rhs: &ESym) -> ESym {
        let mut out = self.clone();
        for (key, v) in &rhs.terms {
            out.add_term(key.clone(), v);
        }
        out
    }
}

impl Sub for &ESym {
    type Output = ESym;
    fn sub(self, rhs: &ESym) -> ESym {
        let mut out = self.clone();
        for (key, v) in &rhs.terms {
            out.add_term(key.clone(), &(-v));
        }
        out
    }
}

impl Mul for &ESym {
    type Output = ESym;
    fn mul(self, rhs: &ESym) -> ESym {
        let mut out = ESym::zero();
        for (la, va) in &self.terms {
            for (lb, vb) in &rhs.terms {
                out.add_term(la.concat(lb), &(va * vb));
            }
        }
        out
    }
}

impl Neg for &ESym {
    type Output = ESym;
    fn neg(self) -> ESym {
        ESym {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

struct EBasisDisplay<'a>(&'a Partition);

impl fmt::Display for EBasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for ESym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, v)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, v, &EBasisDisplay(key), key.is_empty(), None)?;
        }
        Ok(())
    }
}

/// The h-expansion of `e_k`: the signed sum over partitions λ of `k` of the
/// number of compositions sorting to λ, `e_k = Σ (−1)^{k−ℓ(λ)} #comp(λ) h_λ`.
pub fn e_to_h(k: u32) -> BiSymH {
    let mut out = BiSymH::zero();
    for lambda in Partition::all_of_weight(k) {
        let count = lambda.composition_count();
        let signed: BigInt = if (k as usize - lambda.len()) % 2 == 0 {
            count
        } else {
            -count
        };
        out.add_term(
            (lambda, Partition::empty()),
            &QPoly::monomial(0, signed),
        );
    }
    out
}

/// An exact polynomial in `z` with [`ESym`] coefficients; the carrier for
/// the recurrence-defined Chebyshev-like polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EPoly {
    coeffs: Vec<ESym>,
}

impl EPoly {
    pub fn one() -> Self {
        EPoly {
            coeffs: vec![ESym::one()],
        }
    }

    pub fn zero() -> Self {
        EPoly {
            coeffs: vec![ESym::zero()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<ESym>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(ESym::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ESym::zero());
        }
        EPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> ESym {
        self.coeffs.get(d).cloned().unwrap_or_else(ESym::zero)
    }

    pub fn coeffs(&self) -> &[ESym] {
        &self.coeffs
    }

    /// The substitution `z ↦ q^c z`.
    pub fn subst_z_qpow(&self, c: u32) -> EPoly {
        EPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, e)| e.mul_q_pow(c * d as u32))
                .collect(),
        }
    }

    /// Multiplication by the monomial `s·z^shift` with an `ESym` scalar.
    pub fn mul_term(&self, s: &ESym, shift: usize) -> EPoly {
        if s.is_zero() {
            return EPoly::zero();
        }
        let mut coeffs = vec![ESym::zero(); self.coeffs.len() + shift];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d + shift] = c * s;
        }
        EPoly::from_coeffs(coeffs)
    }

    /// Conversion to the h basis, coefficient by coefficient.
    pub fn to_h_zseries(&self) -> ZSeries {
        ZSeries::from_coeffs_exact(self.coeffs.iter().map(ESym::to_h).collect())
    }
}

impl Add for &EPoly {
    type Output = EPoly;
    fn add(self, rhs: &EPoly) -> EPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|d| &self.coeff(d) + &rhs.coeff(d))
            .collect();
        EPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            for (key, v) in c.terms() {
                write_term(f, first, v, &EBasisDisplay(key), key.is_empty(), Some(d))?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_is_h1() {
        assert_eq!(e_to_h(1), BiSymH::h_x(1));
    }

    #[test]
    fn e2_and_e3_expansions() {
        // frozen from the evaluation oracle exercised in the crate's
        // integration tests: e2 = h11 - h2, e3 = h111 - 2 h21 + h3
        let h = |parts: Vec<u32>, c: i64| {
            BiSymH::term(
                Partition::from_unsorted(parts),
                Partition::empty(),
                QPoly::from_int(c),
            )
        };
        let e2 = &h(vec![1, 1], 1) + &h(vec![2], -1);
        assert_eq!(e_to_h(2), e2);
        let e3 = &(&h(vec![1, 1, 1], 1) + &h(vec![2, 1], -2)) + &h(vec![3], 1);
        assert_eq!(e_to_h(3), e3);
    }

    #[test]
    fn e_to_h_is_homogeneous() {
        for k in 0..=8u32 {
            for (key, _) in e_to_h(k).terms() {
                assert_eq!(key.0.weight(), k as usize);
                assert!(key.1.is_empty());
            }
        }
    }

    #[test]
    fn epoly_substitution_and_display() {
        // 1 - e1 z
        let p = EPoly::from_coeffs(vec![ESym::one(), -&ESym::e(1)]);
        assert_eq!(p.to_string(), "1 - e[1]*z");
        let pq = p.subst_z_qpow(1);
        assert_eq!(pq.coeff(1), -&ESym::e(1).mul_q_pow(1));
    }

    #[test]
    fn esym_product_concatenates() {
        let p = &ESym::e(2) * &ESym::e(1);
        assert_eq!(
            p,
            ESym::term(Partition::from_unsorted(vec![2, 1]), QPoly::one())
        );
    }
}
