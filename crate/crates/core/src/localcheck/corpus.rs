use rayon::prelude::*;
use serde_json::json;

use super::{case, minus_witness, SuiteReport};
use crate::chevalley::{LieAlg, LieVec};
use crate::decomp::root_values;
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root};

/// Rank guard for the witness corpus.
pub const MAX_CORPUS_RANK: usize = 4;
/// Cap on grid points per family.
const GRID_CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub id: String,
    pub family: &'static str,
    pub x: LieVec,
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn label(j: &[usize]) -> String {
    let inner: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Integer grid `{-2..2}^n`, nonzero points, in lexicographic order.
fn grid(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 5) as i64 - 2;
                c /= 5;
                d
            })
            .collect();
        if v.iter().any(|&x| x != 0) {
            out.push(v);
        }
    }
    out
}

/// Evenly spaced picks, at most `cap`.
fn spread<T: Clone>(v: &[T], cap: usize) -> Vec<T> {
    if v.len() <= cap {
        return v.to_vec();
    }
    (0..cap).map(|i| v[i * v.len() / cap].clone()).collect()
}

/// Pure nilpotents over simple roots, exceptional representatives, mixed
/// normal forms and Cartan elements on a rational grid.
pub fn inversa_corpus(l: &LieAlg) -> Result<Vec<CorpusCase>> {
    let n = l.rank();
    if n > MAX_CORPUS_RANK {
        return Err(Error::NotApplicable(format!(
            "the witness corpus is limited to rank at most {MAX_CORPUS_RANK}"
        )));
    }
    let f = l.field();
    let rs = l.root_system();
    let mut out = vec![CorpusCase {
        id: "zero".into(),
        family: "zero",
        x: l.zero(),
    }];
    let sum_simple = |j: &[usize]| j.iter().fold(l.zero(), |acc, &i| &acc + &l.e_simple(i));
    for j in subsets(n).filter(|j| !j.is_empty()) {
        out.push(CorpusCase {
            id: format!("nilpotent/J={}", label(&j)),
            family: "nilpotent",
            x: sum_simple(&j),
        });
    }
    if rs.cartan().typ == CartanType::G {
        let x = &l.e(&Root(vec![0, 1]))? + &l.e(&Root(vec![3, 1]))?;
        out.push(CorpusCase {
            id: "nilpotent/subregular".into(),
            family: "nilpotent",
            x,
        });
    }
    let points = grid(n);
    let to_h = |c: &[i64]| {
        c.iter()
            .enumerate()
            .fold(l.zero(), |acc, (i, &v)| &acc + &l.h(i).scale(&f.int(v)))
    };
    for j in subsets(n).filter(|j| !j.is_empty() && j.len() < n) {
        let ok: Vec<Vec<i64>> = points
            .iter()
            .filter(|c| {
                let vals = root_values(l, &to_h(c));
                j.iter().all(|&i| vals[rs.simple_index(i)].is_zero())
            })
            .cloned()
            .collect();
        for c in spread(&ok, GRID_CAP) {
            out.push(CorpusCase {
                id: format!("mixed/J={}/s={:?}", label(&j), c),
                family: "mixed",
                x: &to_h(&c) + &sum_simple(&j),
            });
        }
    }
    for c in spread(&points, GRID_CAP) {
        out.push(CorpusCase {
            id: format!("semisimple/s={c:?}"),
            family: "semisimple",
            x: to_h(&c),
        });
    }
    let half = (0..n).fold(l.zero(), |acc, i| &acc + &l.h(i).scale(&f.frac(1, 2)));
    out.push(CorpusCase {
        id: "semisimple/s=1/2".into(),
        family: "semisimple",
        x: half,
    });
    Ok(out)
}

pub fn inversa_corpus_suite(l: &LieAlg) -> Result<SuiteReport> {
    let corpus = inversa_corpus(l)?;
    let cases = corpus
        .par_iter()
        .map(|c| {
            let input = json!({"family": c.family, "x": l.format_vec(&c.x)});
            match minus_witness(l, &c.x) {
                Ok(w) => case(c.id.clone(), input, true, w.to_json(l)),
                Err(e) => case(c.id.clone(), input, false, json!({"error": e.to_string()})),
            }
        })
        .collect();
    Ok(SuiteReport::new("inversa", cases))
}
