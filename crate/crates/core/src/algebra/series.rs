//! Polynomials and truncated power series in `z` with [`BiSymH`]
//! coefficients. A value is either exact (a genuine polynomial, such as the
//! determinant polynomials) or a truncation of an infinite series; mixing
//! the two takes the minimum order and flags the result as truncated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::bisym::{write_term, BasisDisplay, BiSymH};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSeries {
    /// Coefficient of `z^d` at index `d`; always `order + 1` entries.
    coeffs: Vec<BiSymH>,
    /// Exact polynomial (no truncation happened) vs. truncated series.
    exact: bool,
}

impl ZSeries {
    /// The exact polynomial 1.
    pub fn one() -> Self {
        ZSeries {
            coeffs: vec![BiSymH::one()],
            exact: true,
        }
    }

    /// The exact zero polynomial.
    pub fn zero() -> Self {
        ZSeries {
            coeffs: vec![BiSymH::zero()],
            exact: true,
        }
    }

    /// An exact polynomial from coefficients (trailing zeros trimmed).
    pub fn from_coeffs_exact(mut coeffs: Vec<BiSymH>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(BiSymH::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BiSymH::zero());
        }
        ZSeries {
            coeffs,
            exact: true,
        }
    }

    /// A truncated series with coefficients `0..=order` (padded with zeros).
    pub fn from_coeffs_truncated(mut coeffs: Vec<BiSymH>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, BiSymH::zero());
        ZSeries {
            coeffs,
            exact: false,
        }
    }

    pub fn is_exact_polynomial(&self) -> bool {
        self.exact
    }

    /// Highest stored `z`-exponent: the degree for an exact polynomial, the
    /// truncation order otherwise.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn effective_order(&self) -> usize {
        if self.exact {
            usize::MAX
        } else {
            self.order()
        }
    }

    pub fn coeff(&self, d: usize) -> &BiSymH {
        static ZERO: std::sync::OnceLock<BiSymH> = std::sync::OnceLock::new();
        self.coeffs
            .get(d)
            .unwrap_or_else(|| ZERO.get_or_init(BiSymH::zero))
    }

    pub fn coeffs(&self) -> &[BiSymH] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BiSymH::is_zero)
    }

    /// Truncation to the given order (marks the value as truncated).
    pub fn truncated(&self, order: usize) -> ZSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, BiSymH::zero());
        ZSeries {
            coeffs,
            exact: false,
        }
    }

    /// The substitution `z ↦ q^c z`: the `z^d` coefficient gains `q^{c·d}`.
    pub fn subst_z_qpow(&self, c: u32) -> ZSeries {
        ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, b)| b.mul_q_pow(c * d as u32))
                .collect(),
            exact: self.exact,
        }
    }

    /// Coefficient-wise `h_k(y) ↦ 1`.
    pub fn spec_y_one(&self) -> ZSeries {
        self.map(BiSymH::spec_y_one)
    }

    /// Coefficient-wise alphabet swap.
    pub fn swap_xy(&self) -> ZSeries {
        self.map(BiSymH::swap_xy)
    }

    fn map(&self, op: impl Fn(&BiSymH) -> BiSymH) -> ZSeries {
        let coeffs = self.coeffs.iter().map(op).collect();
        if self.exact {
            // specializations can zero out the top coefficient
            ZSeries::from_coeffs_exact(coeffs)
        } else {
            ZSeries {
                coeffs,
                exact: false,
            }
        }
    }

    /// Multiplicative inverse as a series truncated at `order`, by the
    /// constant-term-1 recurrence `c_0 = 1`, `c_n = -Σ_{k≥1} t_k c_{n-k}`.
    pub fn invert(&self, order: usize) -> Result<ZSeries> {
        if !self.coeff(0).is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut inv: Vec<BiSymH> = Vec::with_capacity(order + 1);
        inv.push(BiSymH::one());
        for n in 1..=order {
            let mut acc = BiSymH::zero();
            for k in 1..=n.min(self.order()) {
                acc = &acc + &(self.coeff(k) * &inv[n - k]);
            }
            inv.push(-&acc);
        }
        Ok(ZSeries {
            coeffs: inv,
            exact: false,
        })
    }

    /// `numerator / denominator` truncated at `order`; the denominator must
    /// have constant term exactly 1.
    pub fn quotient(numerator: &ZSeries, denominator: &ZSeries, order: usize) -> Result<ZSeries> {
        let inv = denominator.invert(order)?;
        Ok((numerator * &inv).truncated(order))
    }
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        let exact = self.exact && rhs.exact;
        let keep = self.effective_order().min(rhs.effective_order());
        let len = if exact {
            self.coeffs.len().max(rhs.coeffs.len())
        } else {
            keep + 1
        };
        let coeffs = (0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        if exact {
            ZSeries::from_coeffs_exact(coeffs)
        } else {
            ZSeries {
                coeffs,
                exact: false,
            }
        }
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        self + &(-rhs)
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            exact: self.exact,
        }
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        let exact = self.exact && rhs.exact;
        let len = if exact {
            self.order() + rhs.order() + 1
        } else {
            self.effective_order().min(rhs.effective_order()) + 1
        };
        let mut coeffs = vec![BiSymH::zero(); len];
        for (da, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (db, cb) in rhs.coeffs.iter().enumerate() {
                if da + db >= len {
                    break;
                }
                if cb.is_zero() {
                    continue;
                }
                coeffs[da + db] = &coeffs[da + db] + &(ca * cb);
            }
        }
        if exact {
            ZSeries::from_coeffs_exact(coeffs)
        } else {
            ZSeries {
                coeffs,
                exact: false,
            }
        }
    }
}

/// Flat single-line rendering, terms grouped by ascending `z`-degree, each
/// coefficient in canonical term order: `1 - (q+1)*h[1]x*h[1]y*z + ...`.
impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            for (key, v) in c.terms() {
                let scalar = key.0.is_empty() && key.1.is_empty();
                write_term(f, first, v, &BasisDisplay(key), scalar, Some(d))?;
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
    use crate::algebra::qpoly::QPoly;

    fn u() -> BiSymH {
        BiSymH::h_pair(1, 1)
    }

    #[test]
    fn geometric_series_inversion() {
        // (1 - u z)^{-1} = 1 + u z + u^2 z^2 + u^3 z^3
        let den = ZSeries::from_coeffs_exact(vec![BiSymH::one(), -&u()]);
        let inv = den.invert(3).unwrap();
        assert_eq!(inv.coeff(0), &BiSymH::one());
        assert_eq!(inv.coeff(1), &u());
        assert_eq!(inv.coeff(2), &(&u() * &u()));
        assert_eq!(inv.coeff(3), &(&(&u() * &u()) * &u()));
    }

    #[test]
    fn invert_one_is_one() {
        let inv = ZSeries::one().invert(4).unwrap();
        assert_eq!(inv.coeff(0), &BiSymH::one());
        for d in 1..=4 {
            assert!(inv.coeff(d).is_zero());
        }
    }

    #[test]
    fn non_unit_constant_term_is_rejected() {
        let bad = ZSeries::from_coeffs_exact(vec![u()]);
        assert_eq!(bad.invert(2), Err(Error::NonUnitConstantTerm));
        let two = ZSeries::from_coeffs_exact(vec![BiSymH::scalar(QPoly::from_int(2))]);
        assert_eq!(two.invert(2), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn quotient_times_denominator_recovers_numerator() {
        let num = ZSeries::from_coeffs_exact(vec![BiSymH::one(), u(), BiSymH::h_pair(2, 2)]);
        let den = ZSeries::from_coeffs_exact(vec![
            BiSymH::one(),
            -&u(),
            BiSymH::h_pair(2, 1).mul_scalar(&QPoly::q_pow(1)),
        ]);
        let n = 6;
        let q = ZSeries::quotient(&num, &den, n).unwrap();
        let back = (&q * &den).truncated(n);
        assert_eq!(back, num.truncated(n));
    }

    #[test]
    fn exactness_propagation() {
        let a = ZSeries::from_coeffs_exact(vec![BiSymH::one(), u()]);
        let b = &a * &a;
        assert!(b.is_exact_polynomial());
        assert_eq!(b.order(), 2);
        let t = a.truncated(4);
        let mixed = &a * &t;
        assert!(!mixed.is_exact_polynomial());
        assert_eq!(mixed.order(), 4);
    }

    #[test]
    fn subst_z_qpow_weights_by_degree() {
        let s = ZSeries::from_coeffs_exact(vec![BiSymH::one(), u(), u()]);
        let t = s.subst_z_qpow(2);
        assert_eq!(t.coeff(0), &BiSymH::one());
        assert_eq!(t.coeff(1), &u().mul_q_pow(2));
        assert_eq!(t.coeff(2), &u().mul_q_pow(4));
    }

    #[test]
    fn display_flat_form() {
        let one_minus = ZSeries::from_coeffs_exact(vec![BiSymH::one(), -&u()]);
        assert_eq!(one_minus.to_string(), "1 - h[1]x*h[1]y*z");
        assert_eq!(ZSeries::zero().to_string(), "0");
    }
}
