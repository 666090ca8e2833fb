use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{case, CaseRecord, SuiteConfig, SuiteReport};
use crate::autgrp::{exp_ad_apply, weyl_apply_vec};
use crate::chevalley::LieAlg;
use crate::cyclofield::Scalar;
use crate::error::Result;
use crate::rootsys::WeylWord;

/// `exp(k ad e_alpha) e_{-alpha} = e_{-alpha} + k h_alpha - k^2 e_alpha`
/// for the root with index `a`.
pub fn chevalley_identity_check(l: &LieAlg, a: usize, k: &Scalar) -> bool {
    let rs = l.root_system();
    let neg = l.e_idx(rs.neg_index(a));
    let got = exp_ad_apply(l, &l.e_idx(a), k, &neg).expect("root vectors are nilpotent");
    let want = &(&neg + &l.coroot_idx(a).scale(k)) - &l.e_idx(a).scale(&(k * k));
    got == want
}

/// `Ad w h_beta = h_{w(beta)}` for every root `beta`.
pub fn weyl_action_check(l: &LieAlg, w: &WeylWord) -> bool {
    let rs = l.root_system();
    rs.roots().iter().enumerate().all(|(k, r)| {
        let img = rs.index_of(&w.apply(r)).expect("Weyl group permutes roots");
        weyl_apply_vec(l, &w.word, &l.coroot_idx(k)) == l.coroot_idx(img)
    })
}

/// All of `W` when small, otherwise the simple reflections, `w_0` and
/// random words.
fn weyl_sample(l: &LieAlg, cfg: &SuiteConfig) -> Vec<WeylWord> {
    let rs = l.root_system();
    if rs.cartan().weyl_order() <= 1_200 && rs.cartan().weyl_order() <= cfg.max_weyl {
        return rs.weyl_enumerate(cfg.max_weyl).expect("guarded");
    }
    let n = rs.rank();
    let mut out: Vec<WeylWord> = (0..n).map(|i| rs.weyl_word(&[i])).collect();
    out.push(rs.longest_element());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..8 {
        let len = rng.gen_range(2..=2 * n);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        out.push(rs.weyl_word(&word));
    }
    out
}

pub fn structure_suite(l: &LieAlg, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rs = l.root_system();
    let f = l.field();
    let mut cases: Vec<CaseRecord> = Vec::new();
    let name = rs.cartan().to_string();
    cases.push(case(
        "jacobi",
        json!({"algebra": name}),
        l.jacobi_check(),
        json!({"dim": l.dim()}),
    ));

    let m = rs.roots().len();
    let mut carter_ok = true;
    let mut pairs = 0usize;
    for a in 0..m {
        for b in 0..m {
            let Some(v) = l.constant(a, b) else { continue };
            pairs += 1;
            let (p, _) = rs.alpha_chain(rs.root(a), rs.root(b))?;
            carter_ok &= l.constant(b, a) == Some(-v)
                && l.constant(rs.neg_index(a), rs.neg_index(b)) == Some(-v)
                && v.abs() == p + 1;
        }
    }
    cases.push(case(
        "carter_relations",
        json!({"algebra": name}),
        carter_ok,
        json!({"pairs": pairs}),
    ));

    let ks = [f.int(1), f.int(-1), f.int(2), f.frac(1, 2), f.zeta_power(1)];
    let ident: Vec<CaseRecord> = (0..m)
        .into_par_iter()
        .map(|a| {
            let ok = ks.iter().all(|k| chevalley_identity_check(l, a, k));
            case(
                format!("root_group/{}", rs.root(a)),
                json!({"alpha": rs.root(a).to_string(), "k": ks.iter().map(Scalar::to_string).collect::<Vec<_>>()}),
                ok,
                json!({}),
            )
        })
        .collect();
    cases.extend(ident);

    let words = weyl_sample(l, cfg);
    let weyl: Vec<CaseRecord> = words
        .par_iter()
        .map(|w| {
            case(
                format!("weyl_action/{}", w.display_word()),
                json!({"w": w.display_word()}),
                weyl_action_check(l, w),
                json!({}),
            )
        })
        .collect();
    cases.extend(weyl);
    Ok(SuiteReport::new("jacobi", cases))
}
