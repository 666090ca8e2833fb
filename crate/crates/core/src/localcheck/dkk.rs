use std::collections::BTreeSet;

use serde_json::json;

use super::{case, SuiteConfig, SuiteReport};
use crate::autgrp::{nilradical, NilradicalDesc};
use crate::chevalley::{LieAlg, LieVec};
use crate::decomp::is_nilpotent;
use crate::error::Result;
use crate::linalg::Subspace;

/// Lower central series `V, [V,V], [V,[V,V]], ...` reaches zero.
fn lower_central_series_vanishes(l: &LieAlg, v: &Subspace) -> bool {
    let basis: Vec<LieVec> = v
        .basis()
        .iter()
        .map(|c| l.vec_from_coords(c.clone()).expect("dimension"))
        .collect();
    let mut cur = v.clone();
    for _ in 0..=l.dim() {
        if cur.dim() == 0 {
            return true;
        }
        let mut next = Vec::new();
        for x in &basis {
            for y in cur.basis() {
                let y = l.vec_from_coords(y.clone()).expect("dimension");
                next.push(l.bracket(x, &y));
            }
        }
        let span = l.span(&next);
        if span == cur {
            return false;
        }
        cur = span;
    }
    false
}

pub fn dkk_suite(l: &LieAlg, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rs = l.root_system();
    let (max, sets) = rs.closed_subsets_max(cfg.max_roots)?;
    let words = rs.weyl_enumerate(cfg.max_weyl)?;
    let npos = rs.num_positive();
    let mut cases = Vec::new();

    let bound_ok = max == npos && 2 * max == l.dim() - l.rank();
    cases.push(case(
        "bound",
        json!({"algebra": rs.cartan().to_string()}),
        bound_ok,
        json!({"max": max, "positive_roots": npos, "bound": (l.dim() - l.rank()) / 2}),
    ));

    let images: Vec<BTreeSet<usize>> = words
        .iter()
        .map(|w| {
            rs.positive_roots()
                .iter()
                .map(|r| rs.index_of(&w.apply(r)).expect("root"))
                .collect()
        })
        .collect();
    let distinct: BTreeSet<&BTreeSet<usize>> = images.iter().collect();
    let found: BTreeSet<BTreeSet<usize>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
    let expected: BTreeSet<BTreeSet<usize>> = images.iter().cloned().collect();
    cases.push(case(
        "maximizers",
        json!({"algebra": rs.cartan().to_string()}),
        found == expected && sets.len() == words.len() && distinct.len() == words.len(),
        json!({
            "maximizers": sets.len(),
            "weyl_order": words.len(),
            "injective": distinct.len() == words.len(),
        }),
    ));

    for (w, img) in words.iter().zip(&images) {
        let roots: Vec<usize> = img.iter().copied().collect();
        let span = l.root_span(&roots);
        let nil = nilradical(l, &NilradicalDesc::trivial(l, w.clone()))?;
        let probe = roots
            .iter()
            .fold(l.zero(), |acc, &k| &acc + &l.e_idx(k));
        let probe_ok = is_nilpotent(l, &probe);
        let lcs_ok = lower_central_series_vanishes(l, &span);
        cases.push(case(
            format!("w={}", w.display_word()),
            json!({"w": w.display_word()}),
            span == nil && probe_ok && lcs_ok,
            json!({
                "is_nilradical": span == nil,
                "probe_nilpotent": probe_ok,
                "lower_central_series_vanishes": lcs_ok,
            }),
        ));
    }
    Ok(SuiteReport::new("dkk", cases))
}
