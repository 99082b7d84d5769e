//! Numeric identity oracle: truncates each alphabet to finitely many
//! variables and evaluates symmetric-function expressions at rational
//! points, so that algebraic identities can be spot-checked independently
//! of the symbolic path.

use num::{BigRational, One, Zero};

use super::bisym::BiSymH;

/// Values of `h_0..h_max` in the variables `points`, by the recurrence
/// `h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m · h_{k-1}(x_1..x_m)`.
pub fn h_values(max: u32, points: &[BigRational]) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); max as usize + 1];
    h[0] = BigRational::one();
    for x in points {
        for k in 1..=max as usize {
            let carry = h[k - 1].clone() * x.clone();
            h[k] += carry;
        }
    }
    h
}

/// Values of `e_0..e_max`, by `e_k(x_1..x_m) = e_k(..m-1) + x_m·e_{k-1}(..m-1)`.
pub fn e_values(max: u32, points: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); max as usize + 1];
    e[0] = BigRational::one();
    for x in points {
        for k in (1..=max as usize).rev() {
            let carry = e[k - 1].clone() * x.clone();
            e[k] += carry;
        }
    }
    e
}

/// Evaluates a two-alphabet expression with each alphabet truncated to the
/// given points and `q` evaluated at a rational.
pub fn eval_vars(
    f: &BiSymH,
    q: &BigRational,
    points_x: &[BigRational],
    points_y: &[BigRational],
) -> BigRational {
    let max_part = f
        .terms()
        .flat_map(|((l, m), _)| {
            l.parts()
                .iter()
                .chain(m.parts().iter())
                .copied()
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(0);
    let hx = h_values(max_part, points_x);
    let hy = h_values(max_part, points_y);
    let mut total = BigRational::zero();
    for ((l, m), c) in f.terms() {
        let mut v = c.eval_rational(q);
        for &p in l.parts() {
            v *= hx[p as usize].clone();
        }
        for &p in m.parts() {
            v *= hy[p as usize].clone();
        }
        total += v;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn h_at_ones_counts_monomials() {
        // h_k(1,1) = k+1
        let pts = vec![rat(1), rat(1)];
        let h = h_values(3, &pts);
        assert_eq!(h[1], rat(2));
        assert_eq!(h[2], rat(3));
        assert_eq!(h[3], rat(4));
    }

    #[test]
    fn eval_of_h1_and_h2() {
        let pts = vec![rat(1), rat(1)];
        assert_eq!(eval_vars(&BiSymH::h_x(1), &rat(1), &pts, &pts), rat(2));
        assert_eq!(eval_vars(&BiSymH::h_x(2), &rat(1), &pts, &pts), rat(3));
    }

    #[test]
    fn e_values_match_direct_expansion() {
        // e_1(2,3) = 5, e_2(2,3) = 6
        let pts = vec![rat(2), rat(3)];
        let e = e_values(2, &pts);
        assert_eq!(e[1], rat(5));
        assert_eq!(e[2], rat(6));
    }
}
