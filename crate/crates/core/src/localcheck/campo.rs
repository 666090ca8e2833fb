use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::json;

use super::{case, CaseRecord, SuiteConfig, SuiteReport};
use crate::autgrp::{
    exp_ad, exp_ad_apply, semilinear_af_subspace, simple_reflection_reps, weyl_rep,
};
use crate::chevalley::{LieAlg, LieVec};
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Outcome of expanding `exp(t ad e_alpha) e_beta` along the alpha-chain.
#[derive(Clone, Debug)]
pub struct ChainCheck {
    pub p: i64,
    pub q: i64,
    /// `M_{alpha,beta,r}` for `r = 0..=q`, read off at `t = 1`.
    pub m: Vec<Scalar>,
    pub support_ok: bool,
    pub binomial_ok: bool,
    /// Coefficients at `t` equal `M_r t^r`.
    pub scaling_ok: bool,
}

impl ChainCheck {
    pub fn pass(&self) -> bool {
        self.support_ok && self.binomial_ok && self.scaling_ok
    }
}

/// Expands `exp(t ad e_a) e_b` (root indices, independent roots) and compares
/// with `M_r = ±C(p+r, r)`, `M_0 = 1`.
pub fn chain_check(l: &LieAlg, a: usize, b: usize, t: &Scalar) -> Result<ChainCheck> {
    let rs = l.root_system();
    let (ra, rb) = (rs.root(a), rs.root(b));
    let (p, q) = rs.alpha_chain(ra, rb)?;
    let f = l.field();
    let ea = l.e_idx(a);
    let eb = l.e_idx(b);
    let at_one = exp_ad_apply(l, &ea, &f.one(), &eb)?;
    let at_t = exp_ad_apply(l, &ea, t, &eb)?;
    let chain: Vec<usize> = (0..=q)
        .map(|r| l.e_index(rs.index_of(&rb.add(&ra.scale(r))).expect("chain root")))
        .collect();
    let support_ok = at_one.support() == {
        let mut s = chain.clone();
        s.sort_unstable();
        s
    };
    let m: Vec<Scalar> = chain.iter().map(|&c| at_one.get(c).clone()).collect();
    let binomial_ok = m[0].is_one()
        && m.iter().enumerate().all(|(r, c)| {
            let want = BigRational::from_integer(BigInt::from(binomial(p + r as i64, r as i64)));
            c.as_rational().is_some_and(|x| x.abs() == want)
        });
    let mut scaling_ok = at_t.support().iter().all(|b| chain.contains(b));
    for (r, &c) in chain.iter().enumerate() {
        scaling_ok &= *at_t.get(c) == &m[r] * &t.pow(r as i64)?;
    }
    Ok(ChainCheck {
        p,
        q,
        m,
        support_ok,
        binomial_ok,
        scaling_ok,
    })
}

/// `e_{-alpha_i} + k h_{alpha_i} - k^2 e_{alpha_i}`.
fn generic_line_vector(l: &LieAlg, i: usize, k: &Scalar) -> LieVec {
    let neg = l.f_simple(i);
    let h = l.h(i).scale(k);
    let e = l.e_simple(i).scale(&(k * k));
    &(&neg + &h) - &e
}

pub fn campo_suite(l: &LieAlg, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if l.rank() < 2 {
        return Err(Error::NotApplicable(
            "the campo suite needs rank at least 2".into(),
        ));
    }
    let rs = l.root_system();
    let n = l.rank();
    let f = l.field();
    let words = rs.weyl_enumerate(cfg.max_weyl)?;
    let reps = simple_reflection_reps(l);
    let nplus = l.nplus();
    let nminus = l.nminus();
    let mut cases: Vec<CaseRecord> = Vec::new();

    // (a)
    for (i, s) in reps.iter().enumerate() {
        let up = nminus.image(s).intersect(&nplus);
        let down = nplus.image(s).intersect(&nminus);
        let pass = up == l.line(&l.e_simple(i)) && down == l.line(&l.f_simple(i));
        cases.push(case(
            format!("a/s{}", i + 1),
            json!({"i": i + 1}),
            pass,
            json!({"dim_up": up.dim(), "dim_down": down.dim()}),
        ));
    }

    // (b): remember one (w, i) per root for item (e)
    let weyl_mats: Vec<Matrix> = words.iter().map(|w| weyl_rep(l, w).matrix).collect();
    let mut realize: Vec<Option<(usize, usize)>> = vec![None; rs.roots().len()];
    for (wi, w) in words.iter().enumerate() {
        let wn = nplus.image(&weyl_mats[wi]);
        for (i, rep) in reps.iter().enumerate() {
            let beta = w.apply(&rs.simple_root(i));
            let k = rs.index_of(&beta).expect("Weyl group permutes roots");
            let lhs = nminus.image(&weyl_mats[wi].mul(rep)).intersect(&wn);
            let pass = lhs == l.line(&l.e_idx(k));
            if realize[k].is_none() {
                realize[k] = Some((wi, i));
            }
            cases.push(case(
                format!("b/{}/s{}", w.display_word(), i + 1),
                json!({"w": w.display_word(), "i": i + 1, "root": beta.to_string()}),
                pass,
                json!({"dim": lhs.dim()}),
            ));
        }
    }

    // (c)
    let mut generic_lines: Vec<(usize, Scalar, Subspace)> = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        let sn = nplus.image(rep);
        for k in &cfg.samples {
            let x = exp_ad(l, &l.e_simple(i), k)?.matrix;
            let lhs = sn.image(&x).intersect(&nminus.image(&x));
            let want = l.line(&generic_line_vector(l, i, k));
            let pass = lhs == want;
            cases.push(case(
                format!("c/s{}/k={}", i + 1, k),
                json!({"i": i + 1, "k": k.to_string()}),
                pass,
                json!({"dim": lhs.dim()}),
            ));
            generic_lines.push((i, k.clone(), lhs));
        }
    }

    // (d)
    let t = f.int(2);
    for a in 0..rs.roots().len() {
        for b in 0..rs.roots().len() {
            if b == a || b == rs.neg_index(a) {
                continue;
            }
            let c = chain_check(l, a, b, &t)?;
            let m: Vec<String> = c.m.iter().map(Scalar::to_string).collect();
            cases.push(case(
                format!("d/{}/{}", rs.root(a), rs.root(b)),
                json!({"alpha": rs.root(a).to_string(), "beta": rs.root(b).to_string()}),
                c.pass(),
                json!({"p": c.p, "q": c.q, "m": m}),
            ));
        }
    }

    // (e): lines whose supports tie the diagonal entries together
    let mut supports: Vec<Vec<usize>> = Vec::new();
    let mut lines_ok = true;
    let mut line_count = 0usize;
    for (k, r) in rs.roots().iter().enumerate() {
        let Some((wi, i)) = realize[k] else {
            lines_ok = false;
            continue;
        };
        let sign = if r.is_positive() { 1 } else { -1 };
        let a = l.nminus().image(&weyl_mats[wi].mul(&reps[i]));
        let b = l.nplus().image(&weyl_mats[wi]);
        for j in 0..n {
            let g = rs.simple_root(j).scale(sign);
            if !rs.contains(&r.add(&g)) {
                continue;
            }
            let gi = rs.index_of(&g).expect("simple root");
            let x = exp_ad(l, &l.e_idx(gi), &f.one())?.matrix;
            let v = l.e_idx(k).apply(&x);
            let line = a.image(&x).intersect(&b.image(&x));
            lines_ok &= line == l.line(&v);
            line_count += 1;
            supports.push(v.support());
        }
    }
    for (_, _, line) in &generic_lines {
        if let Some(v) = line.basis().first() {
            supports.push((0..v.len()).filter(|&b| !v[b].is_zero()).collect());
        }
    }
    let dim = l.dim();
    let mut rows = Vec::new();
    for s in &supports {
        for w in s.windows(2) {
            let mut row = vec![f.zero(); dim];
            row[w[0]] = f.one();
            row[w[1]] = f.int(-1);
            rows.push(row);
        }
    }
    let sys = Matrix::from_rows(f, dim, rows);
    let sol = sys.nullspace();
    let identity_only = sol.len() == 1 && sol[0].iter().all(Scalar::is_one);
    cases.push(case(
        "e/diagonal",
        json!({"lines": line_count + generic_lines.len()}),
        lines_ok && identity_only,
        json!({"lines_are_intersections": lines_ok, "solution_dim": sol.len()}),
    ));

    // (f)
    let i = 0;
    for g in f.galois_indices().into_iter().filter(|&g| g != 1) {
        let found = generic_lines.iter().find_map(|(li, k, line)| {
            if *li != i {
                return None;
            }
            let fk = f.galois_apply(g, k).ok()?;
            if fk == *k {
                return None;
            }
            let moved = semilinear_af_subspace(l, g, line).ok()?;
            let expected = l.line(&generic_line_vector(l, i, &fk));
            (moved != *line && moved == expected).then(|| (k.clone(), fk))
        });
        cases.push(case(
            format!("f/galois={g}"),
            json!({"galois_index": g}),
            found.is_some(),
            match &found {
                Some((k, fk)) => json!({"k": k.to_string(), "f(k)": fk.to_string()}),
                None => json!({"k": null}),
            },
        ));
    }

    Ok(SuiteReport::new("campo", cases))
}
