//! The JSON output schema. Every document kind round-trips through serde,
//! and term lists follow the canonical order of the underlying values, so
//! identical inputs always produce byte-identical output.

use parkfun_core::oracle::Check;
use parkfun_core::transfer::TransferMatrix;
use parkfun_core::{BiSymH, DyckPath, EPoly, ESym, QPoly, VerifyReport, ZSeries};
use serde::{Deserialize, Serialize};

/// One basis term with its `q`-polynomial: `{"x":[2],"y":[2],"q":[[1,"1"]]}`.
/// h-basis terms carry `x`/`y` part lists; e-basis terms carry `e`.
/// Coefficients are decimal strings so consumers never hit integer limits.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct TermJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<u32>>,
    pub q: Vec<(u32, String)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ZTermJson {
    pub z: usize,
    pub coeffs: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct PathJson {
    pub a: Vec<u32>,
    pub height: usize,
    pub area: usize,
    pub hooks: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CountRowJson {
    pub n: usize,
    pub paths: String,
    pub parking: String,
    pub pairs: String,
}

/// Top-level output document, tagged by `kind`.
#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OutputDoc {
    Matrix {
        eta: usize,
        entries: Vec<Vec<Vec<TermJson>>>,
    },
    Polynomial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<i64>,
        variant: String,
        order: usize,
        terms: Vec<ZTermJson>,
    },
    Series {
        eta: usize,
        variant: String,
        route: String,
        order: usize,
        terms: Vec<ZTermJson>,
    },
    PathList {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_height: Option<usize>,
        paths: Vec<PathJson>,
    },
    CountTable {
        q: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_height: Option<usize>,
        rows: Vec<CountRowJson>,
    },
    VerifyReport {
        seed: u64,
        passed: usize,
        failed: usize,
        checks: Vec<Check>,
    },
}

fn qpoly_json(p: &QPoly) -> Vec<(u32, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

pub fn bisym_terms(f: &BiSymH) -> Vec<TermJson> {
    f.terms()
        .map(|((l, m), c)| TermJson {
            x: Some(l.parts().to_vec()),
            y: Some(m.parts().to_vec()),
            e: None,
            q: qpoly_json(c),
        })
        .collect()
}

pub fn esym_terms(f: &ESym) -> Vec<TermJson> {
    f.terms()
        .map(|(l, c)| TermJson {
            x: None,
            y: None,
            e: Some(l.parts().to_vec()),
            q: qpoly_json(c),
        })
        .collect()
}

/// Per-degree terms of a series/polynomial; zero coefficients are kept as
/// empty lists so the `z` indexing stays dense.
pub fn zseries_terms(s: &ZSeries) -> Vec<ZTermJson> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(z, c)| ZTermJson {
            z,
            coeffs: bisym_terms(c),
        })
        .collect()
}

pub fn epoly_terms(p: &EPoly) -> Vec<ZTermJson> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(z, c)| ZTermJson {
            z,
            coeffs: esym_terms(c),
        })
        .collect()
}

pub fn matrix_doc(m: &TransferMatrix) -> OutputDoc {
    OutputDoc::Matrix {
        eta: m.eta(),
        entries: (0..m.size())
            .map(|i| (0..m.size()).map(|j| bisym_terms(m.entry(i, j))).collect())
            .collect(),
    }
}

pub fn path_doc(n: usize, max_height: Option<usize>, paths: &[DyckPath]) -> OutputDoc {
    OutputDoc::PathList {
        n,
        max_height,
        paths: paths
            .iter()
            .map(|p| PathJson {
                a: p.entries().to_vec(),
                height: p.height(),
                area: p.area(),
                hooks: p.hooks().hooks.clone(),
            })
            .collect(),
    }
}

pub fn verify_doc(r: &VerifyReport) -> OutputDoc {
    OutputDoc::VerifyReport {
        seed: r.seed,
        passed: r.passed,
        failed: r.failed,
        checks: r.checks.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_example_instance() {
        // h2(x)h2(y) with coefficient q
        let f = BiSymH::h_pair(2, 2).mul_q_pow(1);
        let terms = bisym_terms(&f);
        let json = serde_json::to_string(&terms[0]).unwrap();
        assert_eq!(json, r#"{"x":[2],"y":[2],"q":[[1,"1"]]}"#);
    }

    #[test]
    fn document_round_trip() {
        let doc = matrix_doc(&parkfun_core::transfer::build_matrix(
            2,
            parkfun_core::transfer::BuildMode::Closed,
        ));
        let json = serde_json::to_string(&doc).unwrap();
        let back: OutputDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
