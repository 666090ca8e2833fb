use std::collections::{HashSet, VecDeque};

use serde_json::json;

use super::{case, SuiteReport};
use crate::autgrp::sdot_apply;
use crate::chevalley::{LieAlg, LieVec};
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};

/// Orbit of `h_alpha` (root index `k`) under the simple Weyl representatives.
fn coroot_orbit(l: &LieAlg, k: usize) -> Vec<LieVec> {
    let start = l.coroot_idx(k);
    let mut seen: HashSet<LieVec> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for i in 0..l.rank() {
            let w = sdot_apply(l, i, &v);
            if seen.insert(w.clone()) {
                order.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    order
}

/// Whether `c h_alpha` is `±h_beta` for some `beta` in the Weyl orbit of
/// `alpha` (root index `k`).
pub fn scalar_local_test_at(l: &LieAlg, k: usize, c: &Scalar) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let probe = l.coroot_idx(k).scale(c);
    let orbit = coroot_orbit(l, k);
    Ok(orbit.iter().any(|h| *h == probe || -h == probe))
}

/// The test at the probe `h_{alpha_1}`.
pub fn scalar_local_test(l: &LieAlg, c: &Scalar) -> Result<bool> {
    scalar_local_test_at(l, l.root_system().simple_index(0), c)
}

/// Scalars exercised by the suite: `±1` and a spread of non-units.
pub fn scalar_test_set(l: &LieAlg) -> Vec<Scalar> {
    let f = l.field();
    let i = f.imag_unit();
    vec![
        f.int(1),
        f.int(-1),
        f.int(2),
        f.frac(1, 2),
        f.int(3),
        f.int(-2),
        f.frac(-1, 3),
        i.clone(),
        f.zeta_power(1),
        &f.one() + &i,
        -&i,
    ]
}

pub fn scalar_suite(l: &LieAlg) -> Result<SuiteReport> {
    let rs = l.root_system();
    let probes: Vec<usize> = if l.rank() <= 2 {
        (0..rs.roots().len()).collect()
    } else {
        vec![rs.simple_index(0)]
    };
    let one = l.field().one();
    let mut cases = Vec::new();
    for &k in &probes {
        let orbit = coroot_orbit(l, k);
        for c in scalar_test_set(l) {
            let probe = l.coroot_idx(k).scale(&c);
            let member = orbit.iter().any(|h| *h == probe || -h == probe);
            let expected = c == one || c == -&one;
            cases.push(case(
                format!("probe={}/c={}", rs.root(k), c),
                json!({"probe": format!("h({})", rs.root(k)), "c": c.to_string()}),
                member == expected,
                json!({"orbit_size": orbit.len(), "local": member, "expected": expected}),
            ));
        }
    }
    Ok(SuiteReport::new("scalari", cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::CycloField;
    use crate::rootsys::{cartan, CartanType};

    #[test]
    fn scalar_test_a2() {
        let l = LieAlg::build(cartan(CartanType::A, 2).unwrap(), CycloField::default()).unwrap();
        let f = l.field();
        assert!(scalar_local_test(&l, &f.int(1)).unwrap());
        assert!(scalar_local_test(&l, &f.int(-1)).unwrap());
        for c in [f.int(2), f.frac(1, 2), f.imag_unit()] {
            assert!(!scalar_local_test(&l, &c).unwrap());
        }
        assert_eq!(scalar_local_test(&l, &f.zero()), Err(Error::ZeroScalar));
        // the orbit of h_{alpha_1} is all six coroots
        assert_eq!(coroot_orbit(&l, l.root_system().simple_index(0)).len(), 6);
        assert!(scalar_suite(&l).unwrap().all_passed());
    }
}
