//! Polynomials in the formal parameter `q` with arbitrary-precision integer
//! coefficients. Canonical form: a sorted exponent map with no stored zeros.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct QPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigInt::one())
    }

    pub fn from_int(c: i64) -> Self {
        QPoly::monomial(0, BigInt::from(c))
    }

    /// `c * q^exp`; the zero coefficient collapses to the zero polynomial.
    pub fn monomial(exp: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QPoly { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: u32) -> Self {
        QPoly::monomial(exp, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when every coefficient is negative (used to pull a leading minus
    /// sign out when rendering).
    pub fn is_uniformly_negative(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_negative())
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Single monomial with coefficient ±1, e.g. `q^3` or `-q`.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().magnitude().is_one()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Ascending-exponent view of the terms.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by `q^k`.
    pub fn mul_q_pow(&self, k: u32) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiplication by an integer.
    pub fn mul_int(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn eval_int(&self, q: &BigInt) -> BigInt {
        // Horner over the sparse descending exponents
        let mut acc = BigInt::zero();
        let mut last_exp: Option<u32> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(prev) = last_exp {
                acc *= num::pow::pow(q.clone(), (prev - e) as usize);
            }
            acc += c;
            last_exp = Some(e);
        }
        if let Some(e) = last_exp {
            acc *= num::pow::pow(q.clone(), e as usize);
        }
        acc
    }

    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += BigRational::from(c.clone()) * num::pow::pow(q.clone(), e as usize);
        }
        acc
    }

    /// Sum of all coefficients, i.e. the evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &(-c));
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

/// Renders with descending exponents and no interior spaces: `q^2+q+1`,
/// `-q-1`, `2*q`, `7`. The zero polynomial prints as `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.magnitude();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let coeff_is_one = mag.is_one();
            match (e, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
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
    fn canonical_cancellation() {
        let a = &q() + &QPoly::one();
        let b = &a - &a;
        assert!(b.is_zero());
        assert_eq!(b, QPoly::zero());
    }

    #[test]
    fn product_and_eval() {
        // (q+1)^2 = q^2 + 2q + 1
        let a = &q() + &QPoly::one();
        let sq = &a * &a;
        assert_eq!(sq.coeff(0), BigInt::from(1));
        assert_eq!(sq.coeff(1), BigInt::from(2));
        assert_eq!(sq.coeff(2), BigInt::from(1));
        assert_eq!(sq.eval_int(&BigInt::from(3)), BigInt::from(16));
        assert_eq!(sq.eval_at_one(), BigInt::from(4));
    }

    #[test]
    fn display_descending_compact() {
        let p = &(&q() * &q()) + &(&q() + &QPoly::from_int(1));
        assert_eq!(p.to_string(), "q^2+q+1");
        assert_eq!((-&p).to_string(), "-q^2-q-1");
        assert_eq!(QPoly::monomial(1, BigInt::from(2)).to_string(), "2*q");
        assert_eq!(QPoly::q_pow(3).to_string(), "q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        let mixed = &QPoly::q_pow(2) - &QPoly::monomial(1, BigInt::from(2));
        assert_eq!(mixed.to_string(), "q^2-2*q");
    }
}
