use std::collections::BTreeSet;

use serde_json::json;

use super::{case, SuiteReport};
use crate::rootsys::RootSystem;

fn label(j: &[usize]) -> String {
    let inner: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// For every distinguished `J`, checks `w_0(Phi_J ∪ Phi+) = Phi_J ∪ Phi-`
/// and `theta(J) = J`; when `w_0 = -1` also records the blanket case.
pub fn opposite_suite(rs: &RootSystem) -> SuiteReport {
    let n = rs.rank();
    let w0 = rs.longest_element();
    let theta = rs.opposite_involution();
    let mut cases = Vec::new();
    let mut distinguished = Vec::new();
    for mask in 0u32..(1 << n) {
        let j: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !rs.is_distinguished(&j) {
            continue;
        }
        let levi: BTreeSet<usize> = rs.levi_roots(&j).into_iter().collect();
        let pos: BTreeSet<usize> = rs.positive_indices().into_iter().collect();
        let neg: BTreeSet<usize> = pos.iter().map(|&k| rs.neg_index(k)).collect();
        let parabolic: BTreeSet<usize> = levi.union(&pos).copied().collect();
        let opposite: BTreeSet<usize> = levi.union(&neg).copied().collect();
        let image: BTreeSet<usize> = parabolic
            .iter()
            .map(|&k| rs.index_of(&w0.apply(rs.root(k))).expect("root"))
            .collect();
        let tj: BTreeSet<usize> = j.iter().map(|&i| theta[i]).collect();
        let invariant = tj == j.iter().copied().collect();
        let roots_ok = image == opposite;
        let (lev, lvl) = rs.parabolic_dims(&j);
        cases.push(case(
            format!("J={}", label(&j)),
            json!({"J": j.iter().map(|i| i + 1).collect::<Vec<_>>()}),
            roots_ok && invariant,
            json!({
                "levi_dim": lev,
                "level_one": lvl,
                "theta_invariant": invariant,
                "w0_maps_to_opposite": roots_ok,
            }),
        ));
        distinguished.push(j);
    }
    let minus_one = (0..n).all(|i| (0..n).all(|k| w0.matrix[i][k] == if i == k { -1 } else { 0 }));
    if minus_one {
        cases.push(case(
            "w0=-1",
            json!({"algebra": rs.cartan().to_string()}),
            theta.iter().enumerate().all(|(i, &t)| i == t),
            json!({"distinguished": distinguished.len()}),
        ));
    }
    SuiteReport::new("opposite", cases)
}
