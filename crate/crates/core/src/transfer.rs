//! The transfer matrix over corner depths, its Chebyshev-like determinant
//! polynomials, the recurrence-defined single-alphabet variants, and the
//! bounded-height generating series obtained from them.

use std::fmt;

use crate::algebra::bisym::BiSymH;
use crate::algebra::esym::{EPoly, ESym};
use crate::algebra::series::ZSeries;
use crate::{Error, Result};

/// How a hook from corner depth `i` to depth `j` is weighted: `r` vertical
/// steps starting at depth `i` contribute `q^{r·i + r(r−1)/2}`.
fn hook_weight(r: u32, i: usize) -> u32 {
    r * i as u32 + r * (r - 1) / 2
}

/// Entry `(i, j)` of the `(η+1)×(η+1)` transfer matrix: the sum over all
/// single hooks `(r, s)` from depth `i` to depth `j` respecting the height
/// bound, `Σ_{r−s=j−i, r,s≥1, r+i≤η+1} q^{r·i + r(r−1)/2} h_r(x) h_s(y)`.
pub fn transfer_entry(eta: usize, i: usize, j: usize) -> Result<BiSymH> {
    if i > eta || j > eta {
        return Err(Error::IndexOutOfRange { eta, i, j });
    }
    let mut out = BiSymH::zero();
    let r_min = if j > i { (j - i + 1) as u32 } else { 1 };
    let r_max = (eta + 1 - i) as u32;
    for r in r_min..=r_max {
        let s = r as i64 + i as i64 - j as i64;
        if s < 1 {
            continue;
        }
        out = &out + &BiSymH::h_pair(r, s as u32).mul_q_pow(hook_weight(r, i));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuildMode {
    /// Every entry from the closed single-hook rule.
    Closed,
    /// Boundary row/column from their closed formulas, interior copied from
    /// the `η−1` matrix under `x ↦ qx`.
    Recursive,
}

/// The `(η+1)×(η+1)` transfer matrix, rows and columns indexed by corner
/// depths `0..=η`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferMatrix {
    eta: usize,
    entries: Vec<Vec<BiSymH>>,
}

impl TransferMatrix {
    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn size(&self) -> usize {
        self.eta + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &BiSymH {
        &self.entries[i][j]
    }

    /// Entries after the substitution `x ↦ z x`, as exact `z`-polynomials.
    pub fn substituted_zx(&self) -> Vec<Vec<ZSeries>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.scale_x_z(0, 1)).collect())
            .collect()
    }
}

pub fn build_matrix(eta: usize, mode: BuildMode) -> TransferMatrix {
    match mode {
        BuildMode::Closed => {
            let entries = (0..=eta)
                .map(|i| {
                    (0..=eta)
                        .map(|j| transfer_entry(eta, i, j).expect("indices in range"))
                        .collect()
                })
                .collect();
            TransferMatrix { eta, entries }
        }
        BuildMode::Recursive => {
            let mut entries = vec![vec![BiSymH::zero(); eta + 1]; eta + 1];
            // top row: hooks from depth 0, q-weight binom(r, 2)
            for j in 0..=eta {
                let mut acc = BiSymH::zero();
                for k in 1..=(eta + 1 - j) as u32 {
                    let r = k + j as u32;
                    acc = &acc + &BiSymH::h_pair(r, k).mul_q_pow(r * (r - 1) / 2);
                }
                entries[0][j] = acc;
            }
            // left column: hooks returning to depth 0
            for i in 1..=eta {
                let mut acc = BiSymH::zero();
                for k in 1..=(eta + 1 - i) as u32 {
                    let e = k * (k + 1) / 2 + (i as u32 - 1) * k;
                    acc = &acc + &BiSymH::h_pair(k, k + i as u32).mul_q_pow(e);
                }
                entries[i][0] = acc;
            }
            if eta > 0 {
                let inner = build_matrix(eta - 1, BuildMode::Recursive);
                for i in 1..=eta {
                    for j in 1..=eta {
                        entries[i][j] = inner.entries[i - 1][j - 1].scale_x_q(1);
                    }
                }
            }
            TransferMatrix { eta, entries }
        }
    }
}

/// One line per entry, `a[i][j] = …`, in row-major order.
impl fmt::Display for TransferMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.eta {
            for j in 0..=self.eta {
                if i + j > 0 {
                    writeln!(f)?;
                }
                write!(f, "a[{i}][{j}] = {}", self.entries[i][j])?;
            }
        }
        Ok(())
    }
}

/// `Id_{η+1} − A_η(zx, y)`, the matrix whose determinant is the bi-alphabet
/// Chebyshev-like polynomial.
pub fn id_minus_a_zx(eta: usize) -> Vec<Vec<ZSeries>> {
    let a = build_matrix(eta, BuildMode::Closed).substituted_zx();
    let n = eta + 1;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        &ZSeries::one() - &a[i][j]
                    } else {
                        -&a[i][j]
                    }
                })
                .collect()
        })
        .collect()
}

/// Division-free determinant over the commutative coefficient ring, by the
/// Berkowitz iteration on leading principal submatrices.
pub fn det_berkowitz(m: &[Vec<ZSeries>]) -> ZSeries {
    let n = m.len();
    if n == 0 {
        return ZSeries::one();
    }
    // p holds the characteristic polynomial of the leading k×k submatrix,
    // monic, p[i] the coefficient of t^{k-i}
    let mut p: Vec<ZSeries> = vec![ZSeries::one(), -&m[0][0]];
    for k in 1..n {
        // Toeplitz column [1, -m_kk, -(R·S), -(R·M·S), …]
        let mut t: Vec<ZSeries> = Vec::with_capacity(k + 2);
        t.push(ZSeries::one());
        t.push(-&m[k][k]);
        let mut v: Vec<ZSeries> = (0..k).map(|i| m[i][k].clone()).collect();
        for step in 0..k {
            if step > 0 {
                v = (0..k)
                    .map(|i| {
                        let mut acc = ZSeries::zero();
                        for (j, vj) in v.iter().enumerate() {
                            acc = &acc + &(&m[i][j] * vj);
                        }
                        acc
                    })
                    .collect();
            }
            let mut rv = ZSeries::zero();
            for (j, vj) in v.iter().enumerate() {
                rv = &rv + &(&m[k][j] * vj);
            }
            t.push(-&rv);
        }
        let mut next: Vec<ZSeries> = Vec::with_capacity(k + 2);
        for i in 0..=(k + 1) {
            let mut acc = ZSeries::zero();
            for (j, tj) in t.iter().enumerate().take(i + 1) {
                if i - j < p.len() {
                    acc = &acc + &(tj * &p[i - j]);
                }
            }
            next.push(acc);
        }
        p = next;
    }
    let det = p.pop().expect("nonempty coefficient vector");
    if n % 2 == 1 {
        -&det
    } else {
        det
    }
}

/// Cofactor-expansion determinant, the independent cross-check route.
pub fn det_cofactor(m: &[Vec<ZSeries>]) -> ZSeries {
    let n = m.len();
    if n == 0 {
        return ZSeries::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = ZSeries::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ZSeries>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Removes row 0 and column 0.
pub fn minor_00(m: &[Vec<ZSeries>]) -> Vec<Vec<ZSeries>> {
    m.iter()
        .skip(1)
        .map(|row| row.iter().skip(1).cloned().collect())
        .collect()
}

/// The bi-alphabet Chebyshev-like polynomial `det(Id_{η+1} − A_η(zx, y))`,
/// exact; the empty determinant at `η = −1` is 1.
pub fn bbt(eta: i64) -> ZSeries {
    assert!(eta >= -1, "defined for eta >= -1");
    if eta < 0 {
        return ZSeries::one();
    }
    det_berkowitz(&id_minus_a_zx(eta as usize))
}

/// Same determinant with all arithmetic truncated at `z^order`; only the
/// low-order coefficients are valid, which is all a series expansion needs.
pub fn bbt_truncated(eta: i64, order: usize) -> ZSeries {
    assert!(eta >= -1, "defined for eta >= -1");
    if eta < 0 {
        return ZSeries::one().truncated(order);
    }
    let m: Vec<Vec<ZSeries>> = id_minus_a_zx(eta as usize)
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.truncated(order)).collect())
        .collect();
    det_berkowitz(&m)
}

/// The recurrence-defined single-alphabet Chebyshev-like polynomial, with
/// coefficients in the e basis; `1` for `η ∈ {−2, −1}`.
pub fn chebt(eta: i64) -> EPoly {
    assert!(eta >= -2, "defined for eta >= -2");
    if eta < 0 {
        return EPoly::one();
    }
    // memo[k + 2] holds the polynomial of index k
    let mut memo: Vec<EPoly> = vec![EPoly::one(), EPoly::one()];
    for m in 0..=eta as usize {
        let mut acc = EPoly::zero();
        for i in 0..=(m + 1) {
            let prev = &memo[m + 1 - i];
            let shifted = prev.subst_z_qpow(i as u32 + 1);
            let binom2 = (i * i.saturating_sub(1) / 2) as u32;
            let mut coeff = ESym::e(i as u32).mul_q_pow(binom2);
            if i % 2 == 1 {
                coeff = -&coeff;
            }
            acc = &acc + &shifted.mul_term(&coeff, i);
        }
        memo.push(acc);
    }
    memo.pop().expect("memo is nonempty")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// Quotient of consecutive determinant polynomials.
    Quotient,
    /// Geometric expansion of the resolvent, `(0,0)` entry of `Σ A^k`.
    Neumann,
}

/// Generating series of interlaced pairs with height bound `eta`, truncated
/// at `z^order`: the `z^n` coefficient is the area-graded bi-character of
/// size-`n` pairs. Both routes give identical output.
pub fn series_pp(eta: usize, order: usize, route: Route) -> ZSeries {
    match route {
        Route::Quotient => {
            let num = bbt_truncated(eta as i64 - 1, order).subst_z_qpow(1);
            let den = bbt_truncated(eta as i64, order);
            ZSeries::quotient(&num, &den, order)
                .expect("determinant polynomial has constant term 1")
        }
        Route::Neumann => {
            let a: Vec<Vec<ZSeries>> = build_matrix(eta, BuildMode::Closed)
                .substituted_zx()
                .into_iter()
                .map(|row| row.into_iter().map(|e| e.truncated(order)).collect())
                .collect();
            let size = eta + 1;
            let mut power: Vec<Vec<ZSeries>> = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| {
                            if i == j {
                                ZSeries::one().truncated(order)
                            } else {
                                ZSeries::zero().truncated(order)
                            }
                        })
                        .collect()
                })
                .collect();
            let mut s00 = ZSeries::one().truncated(order);
            // each factor of A raises the minimum z-degree, so `order` steps
            // suffice
            for _ in 1..=order {
                let mut next = vec![vec![ZSeries::zero().truncated(order); size]; size];
                for i in 0..size {
                    for j in 0..size {
                        let mut acc = ZSeries::zero().truncated(order);
                        for (k, ak) in a.iter().enumerate() {
                            if power[i][k].is_zero() || ak[j].is_zero() {
                                continue;
                            }
                            acc = &acc + &(&power[i][k] * &ak[j]);
                        }
                        next[i][j] = acc;
                    }
                }
                power = next;
                if power.iter().all(|row| row.iter().all(ZSeries::is_zero)) {
                    break;
                }
                s00 = &s00 + &power[0][0];
            }
            s00
        }
    }
}

/// Generating series of single parking functions with height bound `eta`,
/// truncated at `z^order`, in the h basis (the recurrence quotient after
/// e→h conversion).
pub fn series_p(eta: usize, order: usize) -> ZSeries {
    let num = chebt(eta as i64 - 1)
        .to_h_zseries()
        .subst_z_qpow(1)
        .truncated(order);
    let den = chebt(eta as i64).to_h_zseries();
    ZSeries::quotient(&num, &den, order).expect("recurrence polynomial has constant term 1")
}
