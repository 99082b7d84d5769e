//! Text and LaTeX renderers. Text output reuses the canonical `Display`
//! forms from the core types; LaTeX follows the usual
//! `h_{2}(\mathbf{x})h_{1}(\mathbf{y})` notation.

use num::BigInt;
use parkfun_core::algebra::partition::Partition;
use parkfun_core::oracle::{CountKind, VerifyReport};
use parkfun_core::transfer::TransferMatrix;
use parkfun_core::{BiSymH, DyckPath, EPoly, QPoly, ZSeries};

pub fn paths_text(paths: &[DyckPath]) -> String {
    let mut out = String::new();
    for p in paths {
        out.push_str(&format!(
            "a={} height={} area={} hooks={}\n",
            p,
            p.height(),
            p.area(),
            p.hooks()
        ));
    }
    out
}

/// Per-degree listing, `z^d: coefficient` on each line.
pub fn series_text(s: &ZSeries) -> String {
    let mut out = String::new();
    for (d, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("z^{d}: {c}\n"));
    }
    out
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        if c.pass {
            out.push_str(&format!("[PASS] {}\n", c.id()));
        } else {
            out.push_str(&format!("[FAIL] {} :: {}\n", c.id(), c.detail));
        }
    }
    out.push_str(&format!(
        "passed={} failed={} seed={}\n",
        report.passed, report.failed, report.seed
    ));
    out
}

pub struct CountTable {
    pub q: BigInt,
    pub max_height: Option<usize>,
    pub rows: Vec<(usize, BigInt, BigInt, BigInt)>,
}

pub fn count_table(max_n: usize, max_height: Option<usize>, q: &BigInt) -> parkfun_core::Result<CountTable> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        rows.push((
            n,
            parkfun_core::oracle::oracle_count(n, max_height, CountKind::Paths, q)?,
            parkfun_core::oracle::oracle_count(n, max_height, CountKind::Parking, q)?,
            parkfun_core::oracle::oracle_count(n, max_height, CountKind::PairsDim, q)?,
        ));
    }
    Ok(CountTable {
        q: q.clone(),
        max_height,
        rows,
    })
}

pub fn dims_text(t: &CountTable) -> String {
    let mut out = String::from("n paths parking pairs\n");
    for (n, paths, parking, pairs) in &t.rows {
        out.push_str(&format!("{n} {paths} {parking} {pairs}\n"));
    }
    out
}

// --- LaTeX ---------------------------------------------------------------

fn qpoly_latex(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let terms: Vec<(u32, BigInt)> = p.terms().map(|(e, c)| (e, c.clone())).collect();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c < &BigInt::from(0);
        let mag = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let unit = mag == BigInt::from(1);
        if *e == 0 || !unit {
            out.push_str(&mag.to_string());
        }
        match e {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{{{e}}}")),
        }
    }
    out
}

fn partition_latex(p: &Partition, symbol: char, alphabet: Option<&str>) -> String {
    let mut out = String::new();
    let mut run: Option<(u32, u32)> = None; // (part, multiplicity)
    let mut flush = |out: &mut String, part: u32, mult: u32| {
        out.push_str(&format!("{symbol}_{{{part}}}"));
        if let Some(a) = alphabet {
            out.push_str(&format!("(\\mathbf{{{a}}})"));
        }
        if mult > 1 {
            out.push_str(&format!("^{{{mult}}}"));
        }
    };
    for &part in p.parts() {
        match run {
            Some((v, m)) if v == part => run = Some((v, m + 1)),
            Some((v, m)) => {
                flush(&mut out, v, m);
                run = Some((part, 1));
            }
            None => run = Some((part, 1)),
        }
    }
    if let Some((v, m)) = run {
        flush(&mut out, v, m);
    }
    out
}

fn bisym_term_latex(out: &mut String, first: bool, key: (&Partition, &Partition), c: &QPoly, z_pow: usize) {
    let negated = c.is_uniformly_negative();
    let body = if negated { -c } else { c.clone() };
    if first {
        if negated {
            out.push('-');
        }
    } else {
        out.push(if negated { '-' } else { '+' });
    }
    let basis_scalar = key.0.is_empty() && key.1.is_empty();
    if !body.is_one() || (basis_scalar && z_pow == 0) {
        if body.num_terms() == 1 {
            out.push_str(&qpoly_latex(&body));
        } else {
            out.push_str(&format!("\\left({}\\right)", qpoly_latex(&body)));
        }
    }
    out.push_str(&partition_latex(key.0, 'h', Some("x")));
    out.push_str(&partition_latex(key.1, 'h', Some("y")));
    match z_pow {
        0 => {}
        1 => out.push('z'),
        d => out.push_str(&format!("z^{{{d}}}")),
    }
}

pub fn bisym_latex(f: &BiSymH) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (key, c)) in f.terms().enumerate() {
        bisym_term_latex(&mut out, i == 0, (&key.0, &key.1), c, 0);
    }
    out
}

pub fn zseries_latex(s: &ZSeries) -> String {
    let mut out = String::new();
    let mut first = true;
    for (d, c) in s.coeffs().iter().enumerate() {
        for (key, v) in c.terms() {
            bisym_term_latex(&mut out, first, (&key.0, &key.1), v, d);
            first = false;
        }
    }
    if first {
        out.push('0');
    }
    out
}

pub fn epoly_latex(p: &EPoly) -> String {
    let mut out = String::new();
    let mut first = true;
    for (d, c) in p.coeffs().iter().enumerate() {
        for (key, v) in c.terms() {
            let negated = v.is_uniformly_negative();
            let body = if negated { -v } else { v.clone() };
            if first {
                if negated {
                    out.push('-');
                }
            } else {
                out.push(if negated { '-' } else { '+' });
            }
            first = false;
            if !body.is_one() || (key.is_empty() && d == 0) {
                if body.num_terms() == 1 {
                    out.push_str(&qpoly_latex(&body));
                } else {
                    out.push_str(&format!("\\left({}\\right)", qpoly_latex(&body)));
                }
            }
            out.push_str(&partition_latex(key, 'e', None));
            match d {
                0 => {}
                1 => out.push('z'),
                _ => out.push_str(&format!("z^{{{d}}}")),
            }
        }
    }
    if first {
        out.push('0');
    }
    out
}

pub fn matrix_latex(m: &TransferMatrix) -> String {
    let mut out = String::from("\\begin{bmatrix}\n");
    for i in 0..m.size() {
        for j in 0..m.size() {
            if j > 0 {
                out.push_str(" & ");
            }
            out.push_str(&bisym_latex(m.entry(i, j)));
        }
        if i + 1 < m.size() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{bmatrix}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_of_printed_polynomials() {
        let t0 = parkfun_core::transfer::bbt(0);
        assert_eq!(
            zseries_latex(&t0),
            "1-h_{1}(\\mathbf{x})h_{1}(\\mathbf{y})z"
        );
        let c1 = parkfun_core::transfer::chebt(1);
        assert_eq!(
            epoly_latex(&c1),
            "1-\\left(q+1\\right)e_{1}z+qe_{2}z^{2}"
        );
    }

    #[test]
    fn latex_powers_group_repeated_parts() {
        let p = Partition::from_unsorted(vec![1, 1]);
        assert_eq!(
            partition_latex(&p, 'h', Some("x")),
            "h_{1}(\\mathbf{x})^{2}"
        );
    }
}
