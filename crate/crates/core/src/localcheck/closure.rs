use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{case, conjugate_witness, minus_witness, CaseRecord, SuiteConfig, SuiteReport};
use crate::autgrp::{
    chevalley_involution, exp_ad, grading_aut, graph_aut, is_automorphism, torus_aut,
    weyl_rep_word, LinMap,
};
use crate::chevalley::{LieAlg, LieVec};
use crate::cyclofield::Scalar;
use crate::decomp::{is_nilpotent, is_semisimple, jordan};
use crate::error::Result;

fn small_scalar(l: &LieAlg, rng: &mut ChaCha8Rng) -> Scalar {
    let f = l.field();
    let choices = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 3), (3, 1)];
    let (a, b) = *choices.choose(rng).expect("nonempty");
    f.frac(a, b)
}

/// A product of one to three random generators.
pub(crate) fn random_automorphism(l: &LieAlg, rng: &mut ChaCha8Rng) -> LinMap {
    let rs = l.root_system();
    let n = l.rank();
    let mut m = LinMap::identity(l);
    for _ in 0..rng.gen_range(1..=3) {
        let g = match rng.gen_range(0..4) {
            0 => {
                let k = rng.gen_range(0..rs.roots().len());
                let t = small_scalar(l, rng);
                exp_ad(l, &l.e_idx(k), &t).expect("root vectors are nilpotent")
            }
            1 => {
                let v: Vec<Scalar> = (0..n).map(|_| small_scalar(l, rng)).collect();
                torus_aut(l, &v).expect("nonzero values")
            }
            2 => weyl_rep_word(l, &[rng.gen_range(0..n)]),
            _ => chevalley_involution(l),
        };
        m = m.compose(&g);
    }
    m
}

/// Random element from one of four families, labelled by family.
pub(crate) fn random_element(l: &LieAlg, rng: &mut ChaCha8Rng) -> (&'static str, LieVec) {
    let rs = l.root_system();
    let f = l.field();
    let n = l.rank();
    let pick = |rng: &mut ChaCha8Rng| f.int(rng.gen_range(-2..=2));
    match rng.gen_range(0..4) {
        0 => {
            let mut x = l.zero();
            for k in rs.positive_indices() {
                if rng.gen_bool(0.5) {
                    x = &x + &l.e_idx(k).scale(&pick(rng));
                }
            }
            ("nilpotent", x)
        }
        1 => {
            let x = (0..n).fold(l.zero(), |acc, i| &acc + &l.h(i).scale(&pick(rng)));
            ("semisimple", x)
        }
        2 => {
            // s + e with e in the centralizer of s
            let i = rng.gen_range(0..n);
            let mut s = l.zero();
            for j in 0..n {
                s = &s + &l.h(j).scale(&pick(rng));
            }
            let vals = crate::decomp::root_values(l, &s);
            let k = rs.simple_index(i);
            let e = if vals[k].is_zero() { l.e_idx(k) } else { l.zero() };
            ("mixed", &s + &e)
        }
        _ => {
            let mut x = l.zero();
            for b in 0..l.dim() {
                if rng.gen_bool(0.3) {
                    x.set(b, pick(rng));
                }
            }
            ("generic", x)
        }
    }
}

fn constructor_cases(l: &LieAlg) -> Vec<CaseRecord> {
    let f = l.field();
    let rs = l.root_system();
    let n = l.rank();
    let mut maps: Vec<(String, LinMap)> = Vec::new();
    for i in 0..n {
        let t = f.frac(5, 7);
        maps.push((format!("exp_ad/e(alpha{})", i + 1), exp_ad(l, &l.e_simple(i), &t).expect("nilpotent")));
        maps.push((format!("exp_ad/e(-alpha{})", i + 1), exp_ad(l, &l.f_simple(i), &t).expect("nilpotent")));
        maps.push((format!("weyl_rep/s{}", i + 1), weyl_rep_word(l, &[i])));
    }
    let vals: Vec<Scalar> = (0..n).map(|i| f.int(i as i64 + 2)).collect();
    maps.push(("torus".into(), torus_aut(l, &vals).expect("nonzero")));
    let h = l.coroot_idx(rs.simple_index(0));
    maps.push(("grading/h(alpha1)".into(), grading_aut(l, &h, &f.imag_unit()).expect("integral")));
    for p in rs.diagram_symmetries() {
        let name = format!("graph/{:?}", p.iter().map(|i| i + 1).collect::<Vec<_>>());
        if let Ok(g) = graph_aut(l, &p) {
            maps.push((name, g));
        }
    }
    maps.push(("involution".into(), chevalley_involution(l)));
    maps.par_iter()
        .map(|(name, m)| {
            let ok = is_automorphism(l, &m.matrix);
            case(format!("automorphism/{name}"), json!({"map": name}), ok, json!({}))
        })
        .collect()
}

pub fn closure_suite(l: &LieAlg, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut cases = constructor_cases(l);
    let samples: Vec<CaseRecord> = (0..cfg.closure_samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (idx as u64).wrapping_mul(0x9e37_79b9));
            let m = random_automorphism(l, &mut rng);
            let (family, x) = random_element(l, &mut rng);
            let y = m.apply(&x);
            let (nx, ny) = (is_nilpotent(l, &x), is_nilpotent(l, &y));
            let (sx, sy) = (is_semisimple(l, &x), is_semisimple(l, &y));
            case(
                format!("invariance/{idx}"),
                json!({
                    "family": family,
                    "x": l.format_vec(&x),
                    "map": m.trace_json(l),
                }),
                nx == ny && sx == sy,
                json!({"nilpotent": [nx, ny], "semisimple": [sx, sy]}),
            )
        })
        .collect();
    cases.extend(samples);

    // conjugation: M o phi o M^{-1} is a witness for M x
    let conj: Vec<CaseRecord> = (0..cfg.closure_samples.min(8))
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1000 + idx as u64));
            let m = random_automorphism(l, &mut rng);
            let x = normal_form_sample(l, idx);
            let input = json!({"x": l.format_vec(&x), "map": m.trace_json(l)});
            let res = minus_witness(l, &x).and_then(|w| conjugate_witness(l, &m, &w));
            let equiv = jordan_equivariant(l, &m, &x);
            match (res, equiv) {
                (Ok(_), Ok(eq)) => case(
                    format!("conjugation/{idx}"),
                    input,
                    eq,
                    json!({"jordan_equivariant": eq}),
                ),
                (Err(e), _) | (_, Err(e)) => case(
                    format!("conjugation/{idx}"),
                    input,
                    false,
                    json!({"error": e.to_string()}),
                ),
            }
        })
        .collect();
    cases.extend(conj);
    Ok(SuiteReport::new("closure", cases))
}

fn normal_form_sample(l: &LieAlg, idx: usize) -> LieVec {
    let n = l.rank();
    let f = l.field();
    match idx % 3 {
        0 => (0..n).fold(l.zero(), |acc, i| &acc + &l.e_simple(i)),
        1 => (0..n).fold(l.zero(), |acc, i| &acc + &l.h(i).scale(&f.int(i as i64 + 1))),
        _ => l.e_simple(idx % n),
    }
}

fn jordan_equivariant(l: &LieAlg, m: &LinMap, x: &LieVec) -> Result<bool> {
    let p = jordan(l, x)?;
    let q = jordan(l, &m.apply(x))?;
    Ok(q.s == m.apply(&p.s) && q.e == m.apply(&p.e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::CycloField;
    use crate::rootsys::{cartan, CartanType};

    #[test]
    fn closure_a2() {
        let l = LieAlg::build(cartan(CartanType::A, 2).unwrap(), CycloField::default()).unwrap();
        let mut cfg = SuiteConfig::new(&l);
        cfg.closure_samples = 20;
        let r = closure_suite(&l, &cfg).unwrap();
        let bad: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
