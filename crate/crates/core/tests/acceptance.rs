//! Acceptance gate. Runs every criterion at exact settings, prints one
//! PASS/FAIL line each and exits nonzero if any fails.
//!
//! Each criterion runs the library routine and, where one exists, a separate
//! oracle written here from the defining property.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lielocal::autgrp::{chevalley_involution, exp_ad, torus_aut, weyl_rep_word, LinMap};
use lielocal::decomp::{is_nilpotent, is_semisimple, jordan};
use lielocal::linalg::Matrix;
use lielocal::localcheck::{
    campo_suite, chain_check, chevalley_identity_check, closure_suite, dkk_suite,
    inversa_corpus, inversa_corpus_suite, minus_witness, opposite_suite, scalar_local_test,
    weyl_action_check, SuiteConfig, SuiteReport,
};
use lielocal::poly::Poly;
use lielocal::rootsys::{cartan, CartanType, RootSystem};
use lielocal::{CycloField, LieAlg, LieVec, Scalar};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn alg(t: CartanType, n: usize) -> LieAlg {
    LieAlg::build(cartan(t, n).unwrap(), CycloField::default()).unwrap()
}

fn parse(name: &str) -> LieAlg {
    let t: CartanType = name[..1].parse().unwrap();
    alg(t, name[1..].parse().unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_ok(r: &SuiteReport) -> Result<(), String> {
    let bad: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    ensure(bad.is_empty(), || format!("{}: failing cases {bad:?}", r.suite))
}

const CORE_TYPES: [&str; 9] = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"];
const RANK_TWO: [&str; 3] = ["A2", "B2", "G2"];

// ---------- oracles ----------

/// Root membership as a set of coefficient vectors.
fn root_set(rs: &RootSystem) -> HashSet<Vec<i64>> {
    rs.roots().iter().map(|r| r.0.clone()).collect()
}

fn add_mul(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`, from the Cartan matrix.
fn reflect(rs: &RootSystem, i: usize, beta: &[i64]) -> Vec<i64> {
    let a = &rs.cartan().matrix;
    let pairing: i64 = (0..beta.len()).map(|j| beta[j] * a[i][j]).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

/// Word applied right to left.
fn apply_word(rs: &RootSystem, word: &[usize], beta: &[i64]) -> Vec<i64> {
    word.iter().rev().fold(beta.to_vec(), |b, &i| reflect(rs, i, &b))
}

/// Matrix of `ad x` assembled column by column from brackets.
fn ad_matrix(l: &LieAlg, x: &LieVec) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..l.dim())
        .map(|b| l.bracket(x, &l.basis(b)).coords().to_vec())
        .collect();
    Matrix::from_columns(l.field(), l.dim(), &cols)
}

/// Bracket preservation on all pairs of basis vectors.
fn preserves_brackets(l: &LieAlg, m: &Matrix) -> bool {
    let img: Vec<LieVec> = (0..l.dim()).map(|b| l.basis(b).apply(m)).collect();
    (0..l.dim()).all(|a| {
        (a + 1..l.dim()).all(|b| l.bracket(&l.basis(a), &l.basis(b)).apply(m) == l.bracket(&img[a], &img[b]))
    })
}

/// Monic minimal polynomial of `a`, low degree first: the dependency among
/// `I, a, ..., a^n` whose top power is smallest.
fn minimal_polynomial(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let f = a.get(0, 0).field();
    let flat = |m: &Matrix| (0..n).flat_map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
    let mut cur = Matrix::identity(f, n);
    let mut powers = vec![flat(&cur)];
    for _ in 0..n {
        cur = cur.mul(a);
        powers.push(flat(&cur));
    }
    let null = Matrix::from_columns(f, n * n, &powers).nullspace();
    let top = |v: &Vec<Scalar>| v.iter().rposition(|c| !c.is_zero()).unwrap();
    let v = null.iter().min_by_key(|v| top(v)).expect("Cayley-Hamilton");
    let lead = v[top(v)].inv().unwrap();
    v[..=top(v)].iter().map(|c| c * &lead).collect()
}

fn squarefree(p: &[Scalar]) -> bool {
    let f = p[0].field();
    let poly = Poly::new(f, p.to_vec());
    poly.gcd(&poly.derivative()).degree() == Some(0)
}

fn nilpotent_oracle(a: &Matrix) -> bool {
    a.pow(a.rows() as u32).is_zero()
}

fn semisimple_oracle(a: &Matrix) -> bool {
    squarefree(&minimal_polynomial(a))
}

fn rat(s: &Scalar) -> Option<BigRational> {
    s.as_rational().cloned()
}

/// Evaluates a rational polynomial and divides out `x - lambda` if it is a root.
fn deflate(p: &[BigRational], lambda: &BigRational) -> Option<Vec<BigRational>> {
    let mut out = vec![BigRational::zero(); p.len() - 1];
    let mut carry = BigRational::zero();
    for k in (0..p.len()).rev() {
        let v = &p[k] + &carry * lambda;
        if k == 0 {
            return v.is_zero().then_some(out);
        }
        out[k - 1] = v.clone();
        carry = v;
    }
    None
}

/// Semisimple part of `a` from its generalized eigenspaces, when every
/// eigenvalue is rational. Denominators of eigenvalues divide the common
/// denominator `d` of the entries, and `|lambda|` is at most the max row sum.
fn eigen_semisimple_part(a: &Matrix) -> Option<Matrix> {
    let n = a.rows();
    let f = a.get(0, 0).field();
    let mut d = BigInt::from(1);
    let mut bound = BigRational::zero();
    for i in 0..n {
        let mut row = BigRational::zero();
        for j in 0..n {
            let e = rat(a.get(i, j))?;
            d = num_integer::Integer::lcm(&d, e.denom());
            row += e.abs();
        }
        if row > bound {
            bound = row;
        }
    }
    let mut p: Vec<BigRational> = minimal_polynomial(a).iter().map(rat).collect::<Option<_>>()?;
    let kmax = (bound * BigRational::from_integer(d.clone())).ceil().to_integer().to_i64()?;
    let mut eig: Vec<(BigRational, u32)> = Vec::new();
    for k in -kmax..=kmax {
        let lambda = BigRational::new(k.into(), d.clone());
        let mut mult = 0;
        while p.len() > 1 {
            match deflate(&p, &lambda) {
                Some(q) => {
                    p = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            eig.push((lambda, mult));
        }
    }
    if p.len() != 1 {
        return None;
    }
    let mut cols = Vec::new();
    let mut diag = Vec::new();
    for (lambda, m) in &eig {
        let shifted = a.sub(&Matrix::identity(f, n).scale(&f.rational(lambda.clone())));
        for v in shifted.pow(*m).nullspace() {
            cols.push(v);
            diag.push(f.rational(lambda.clone()));
        }
    }
    let b = Matrix::from_columns(f, n, &cols);
    let mut dm = Matrix::zeros(f, n, n);
    for (i, v) in diag.into_iter().enumerate() {
        dm.set(i, i, v);
    }
    Some(b.mul(&dm).mul(&b.inverse()?))
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---------- criteria ----------

fn c1_jacobi() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for name in CORE_TYPES {
        let l = parse(name);
        ensure(l.jacobi_check(), || format!("{name}: jacobi_check failed"))?;
        // |N| = p + 1 from root strings, and Jacobi on random triples
        let rs = l.root_system();
        let set = root_set(rs);
        for (a, ra) in rs.roots().iter().enumerate() {
            for (b, rb) in rs.roots().iter().enumerate() {
                let sum = add_mul(&rb.0, &ra.0, 1);
                if !set.contains(&sum) {
                    continue;
                }
                let p = (1..).take_while(|&r| set.contains(&add_mul(&rb.0, &ra.0, -r))).count() as i64;
                let n = l.constant(a, b).unwrap_or(0);
                ensure(n.abs() == p + 1, || format!("{name}: N({ra},{rb}) = {n}, p = {p}"))?;
            }
        }
        for _ in 0..20 {
            let mut pick = || {
                let c: Vec<i64> = (0..l.dim()).map(|_| rng.gen_range(-2..=2)).collect();
                l.vec_from_ints(&c).unwrap()
            };
            let (x, y, z) = (pick(), pick(), pick());
            let j = &(&l.bracket(&x, &l.bracket(&y, &z)) + &l.bracket(&y, &l.bracket(&z, &x)))
                + &l.bracket(&z, &l.bracket(&x, &y));
            ensure(j.is_zero(), || format!("{name}: Jacobi fails on a random triple"))?;
        }
    }
    Ok(format!("{} types", CORE_TYPES.len()))
}

fn c2_chevalley_identity() -> Outcome {
    let mut count = 0;
    for name in CORE_TYPES {
        let l = parse(name);
        let f = l.field();
        let rs = l.root_system();
        let ks = [f.int(1), f.int(-1), f.int(2), f.frac(1, 2), f.zeta_power(1)];
        for a in 0..rs.roots().len() {
            let (ea, en) = (l.e_idx(a), l.e_idx(rs.neg_index(a)));
            let h = l.bracket(&ea, &en);
            ensure(h == l.coroot_idx(a), || format!("{name}: [e_a, e_-a] != h_a for {}", rs.root(a)))?;
            for k in &ks {
                ensure(chevalley_identity_check(&l, a, k), || {
                    format!("{name}: library identity fails at {} k={k}", rs.root(a))
                })?;
                // the series exp(k ad e_a) e_-a, summed here
                let mut term = en.clone();
                let mut got = en.clone();
                for r in 1..=4i64 {
                    term = l.bracket(&ea, &term).scale(&k.scale(&BigRational::new(1.into(), r.into())));
                    got = &got + &term;
                }
                let want = &(&en + &h.scale(k)) - &ea.scale(&(k * k));
                ensure(got == want, || format!("{name}: series mismatch at {} k={k}", rs.root(a)))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (root, k) checks"))
}

fn c3_chain_formula() -> Outcome {
    let mut pairs = 0;
    let mut longest = 0;
    for name in RANK_TWO {
        let l = parse(name);
        let f = l.field();
        let rs = l.root_system();
        let set = root_set(rs);
        for a in 0..rs.roots().len() {
            for b in 0..rs.roots().len() {
                if b == a || b == rs.neg_index(a) {
                    continue;
                }
                let (ra, rb) = (rs.root(a).0.clone(), rs.root(b).0.clone());
                let p = (1..).take_while(|&r| set.contains(&add_mul(&rb, &ra, -r))).count() as i64;
                let q = (1..).take_while(|&r| set.contains(&add_mul(&rb, &ra, r))).count() as i64;
                longest = longest.max(p + q + 1);
                for t in [f.int(1), f.int(2), f.zeta_power(1)] {
                    let c = chain_check(&l, a, b, &t).map_err(|e| e.to_string())?;
                    ensure(c.pass() && c.p == p && c.q == q, || {
                        format!("{name}: chain_check({}, {}) at t={t}", rs.root(a), rs.root(b))
                    })?;
                    // exp(t ad e_a) e_b by its series
                    let ea = l.e_idx(a);
                    let mut term = l.e_idx(b);
                    let mut v = term.clone();
                    for r in 1..=4i64 {
                        term = l.bracket(&ea, &term).scale(&t.scale(&BigRational::new(1.into(), r.into())));
                        v = &v + &term;
                    }
                    let support: BTreeSet<usize> = v.support().into_iter().collect();
                    let want: BTreeSet<usize> = (0..=q)
                        .map(|r| l.e_index(rs.index_of(&lielocal::rootsys::Root(add_mul(&rb, &ra, r))).unwrap()))
                        .collect();
                    ensure(support == want, || format!("{name}: support of chain {a},{b}"))?;
                    for r in 0..=q {
                        let k = rs.index_of(&lielocal::rootsys::Root(add_mul(&rb, &ra, r))).unwrap();
                        let m = v.get(l.e_index(k)).checked_div(&t.pow(r).unwrap()).unwrap();
                        let mi = m.as_i64().ok_or_else(|| format!("{name}: non-integral M"))?;
                        ensure(mi.abs() == binomial(p + r, r) && (r > 0 || mi == 1), || {
                            format!("{name}: M_{r} = {mi} for ({}, {})", rs.root(a), rs.root(b))
                        })?;
                    }
                }
                pairs += 1;
            }
        }
    }
    ensure(longest == 4, || format!("longest chain {longest}, expected 4 in G2"))?;
    Ok(format!("{pairs} pairs, longest chain {longest}"))
}

fn c4_weyl_action() -> Outcome {
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for name in ["A2", "B2", "G2", "A3", "A4"] {
        let l = parse(name);
        let rs = l.root_system();
        let all = rs.weyl_enumerate(1_000_000).map_err(|e| e.to_string())?;
        let exhaustive = RANK_TWO.contains(&name);
        if exhaustive {
            ensure(all.len() <= 12, || format!("{name}: |W| = {}", all.len()))?;
        }
        let words: Vec<_> = if exhaustive {
            all.clone()
        } else {
            (0..20).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
        };
        for w in &words {
            ensure(weyl_action_check(&l, w), || format!("{name}: library check at {}", w.display_word()))?;
            let m = weyl_rep_word(&l, &w.word).matrix;
            for (k, r) in rs.roots().iter().enumerate() {
                let img = rs.index_of(&lielocal::rootsys::Root(apply_word(rs, &w.word, &r.0))).unwrap();
                ensure(l.coroot_idx(k).apply(&m) == l.coroot_idx(img), || {
                    format!("{name}: Ad {} h({r})", w.display_word())
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} Weyl elements"))
}

fn c5_corpus() -> Outcome {
    let mut total = 0;
    for name in ["A1", "A2", "B2", "G2"] {
        let l = parse(name);
        let r = inversa_corpus_suite(&l).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        let corpus = inversa_corpus(&l).map_err(|e| e.to_string())?;
        if name == "G2" {
            ensure(corpus.iter().any(|c| c.id == "nilpotent/subregular"), || "no G2 subregular".into())?;
        }
        if name != "A1" {
            ensure(corpus.iter().any(|c| c.family == "mixed"), || format!("{name}: no mixed case"))?;
        }
        for c in &corpus {
            let w = minus_witness(&l, &c.x).map_err(|e| format!("{name} {}: {e}", c.id))?;
            ensure(w.map.apply(&c.x) == -&c.x, || format!("{name} {}: not negated", c.id))?;
            ensure(w.map.matrix.is_invertible() && preserves_brackets(&l, &w.map.matrix), || {
                format!("{name} {}: not an automorphism", c.id)
            })?;
        }
        total += corpus.len();
    }
    Ok(format!("{total} corpus cases verified"))
}

fn c6_scalar() -> Outcome {
    let types = [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "C3", "C4", "C5",
        "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2",
    ];
    for name in types {
        let l = parse(name);
        let f = l.field();
        let i = f.imag_unit();
        for c in [f.int(1), f.int(-1)] {
            ensure(scalar_local_test(&l, &c).unwrap(), || format!("{name}: false at c={c}"))?;
        }
        let bad = [f.int(2), f.frac(1, 2), f.int(3), f.int(-2), i.clone(), f.zeta_power(1), &f.one() + &i];
        for c in bad {
            ensure(!scalar_local_test(&l, &c).unwrap(), || format!("{name}: true at c={c}"))?;
        }
    }
    Ok(format!("{} types", types.len()))
}

fn c7_campo() -> Outcome {
    for name in RANK_TWO {
        let l = parse(name);
        let r = campo_suite(&l, &SuiteConfig::new(&l)).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        for item in ["a/", "b/", "c/", "d/", "e/", "f/"] {
            ensure(r.cases.iter().any(|c| c.id.starts_with(item)), || format!("{name}: no {item} cases"))?;
        }
        let e = r.cases.iter().find(|c| c.id == "e/diagonal").unwrap();
        ensure(e.detail["solution_dim"] == 1, || format!("{name}: solution_dim {}", e.detail["solution_dim"]))?;
        let mut want: BTreeSet<i64> = [5, 7, 11, 13, 17, 19, 23].into();
        for c in r.cases.iter().filter(|c| c.id.starts_with("f/")) {
            want.remove(&c.input["galois_index"].as_i64().unwrap());
        }
        ensure(want.is_empty(), || format!("{name}: Galois indices without a mismatch {want:?}"))?;
    }
    Ok("A2, B2, G2".into())
}

fn c8_dkk() -> Outcome {
    for (name, count) in [("A2", 6), ("B2", 8), ("G2", 12)] {
        let l = parse(name);
        let rs = l.root_system();
        let r = dkk_suite(&l, &SuiteConfig::new(&l)).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        let m = r.cases.iter().find(|c| c.id == "maximizers").unwrap();
        ensure(m.detail["maximizers"] == count, || format!("{name}: {} maximizers", m.detail["maximizers"]))?;
        // exhaustive search here
        let roots: Vec<Vec<i64>> = rs.roots().iter().map(|r| r.0.clone()).collect();
        let index = |v: &[i64]| roots.iter().position(|r| r == v);
        let neg: Vec<usize> = roots.iter().map(|r| index(&r.iter().map(|x| -x).collect::<Vec<_>>()).unwrap()).collect();
        let nr = roots.len();
        let mut best = 0;
        let mut best_sets: BTreeSet<u64> = BTreeSet::new();
        for mask in 0u64..(1 << nr) {
            let has = |k: usize| mask >> k & 1 == 1;
            if (0..nr).any(|k| has(k) && has(neg[k])) {
                continue;
            }
            let closed = (0..nr).all(|a| {
                !has(a) || (0..nr).all(|b| !has(b) || index(&add_mul(&roots[a], &roots[b], 1)).is_none_or(&has))
            });
            if !closed {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size > best {
                best = size;
                best_sets.clear();
            }
            if size == best {
                best_sets.insert(mask);
            }
        }
        ensure(best == rs.num_positive(), || format!("{name}: bound {best}"))?;
        // W-orbit of the positive system by reflections
        let pos: u64 = rs.positive_indices().iter().map(|&k| 1u64 << k).sum();
        let mut orbit = BTreeSet::from([pos]);
        let mut queue = VecDeque::from([pos]);
        while let Some(s) = queue.pop_front() {
            for i in 0..rs.rank() {
                let t: u64 = (0..nr)
                    .filter(|k| s >> k & 1 == 1)
                    .map(|k| 1u64 << index(&reflect(rs, i, &roots[k])).unwrap())
                    .sum();
                if orbit.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        ensure(best_sets == orbit && orbit.len() == count, || {
            format!("{name}: maximizers {} vs orbit {}", best_sets.len(), orbit.len())
        })?;
    }
    Ok("counts 6, 8, 12".into())
}

fn c9_opposite() -> Outcome {
    for name in ["A2", "A3", "A4", "B2", "C3", "D4", "G2"] {
        let l = parse(name);
        let rs = l.root_system();
        let r = opposite_suite(rs);
        suite_ok(&r)?;
        let n = rs.rank();
        let pos = rs.positive_roots();
        let mut want = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let outside = |r: &lielocal::rootsys::Root| (0..n).filter(|i| mask >> i & 1 == 0).map(|i| r.0[i]).sum::<i64>();
            let g0 = n + 2 * pos.iter().filter(|r| outside(r) == 0).count();
            let g2 = pos.iter().filter(|r| outside(r) == 1).count();
            if g0 == g2 {
                let j: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                want.insert(format!("J={{{}}}", j.join(",")));
            }
        }
        let got: BTreeSet<String> = r.cases.iter().filter(|c| c.id.starts_with("J=")).map(|c| c.id.clone()).collect();
        ensure(got == want, || format!("{name}: distinguished {got:?} vs {want:?}"))?;
        if name.starts_with('A') {
            ensure(want == BTreeSet::from(["J={}".to_string()]), || format!("{name}: {want:?}"))?;
        }
    }
    Ok("7 types".into())
}

fn c10_invariance() -> Outcome {
    let mut total = 0;
    for name in ["A1", "A2", "B2", "G2", "A3"] {
        let l = parse(name);
        let f = l.field();
        let rs = l.root_system();
        let cfg = SuiteConfig::new(&l);
        let r = closure_suite(&l, &cfg).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
        let sampled = r.cases.iter().filter(|c| c.id.starts_with("invariance/")).count();
        ensure(sampled == 100, || format!("{name}: {sampled} samples"))?;
        // 100 more pairs drawn here, judged by matrix oracles
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let mut m = LinMap::identity(&l);
            for _ in 0..rng.gen_range(1..=3) {
                let g = match rng.gen_range(0..4) {
                    0 => exp_ad(&l, &l.e_idx(rng.gen_range(0..rs.roots().len())), &f.int(rng.gen_range(1..=3))).unwrap(),
                    1 => torus_aut(&l, &(0..l.rank()).map(|_| f.frac(rng.gen_range(1..=3), rng.gen_range(1..=2))).collect::<Vec<_>>()).unwrap(),
                    2 => weyl_rep_word(&l, &[rng.gen_range(0..l.rank())]),
                    _ => chevalley_involution(&l),
                };
                m = m.compose(&g);
            }
            ensure(preserves_brackets(&l, &m.matrix), || format!("{name}: generated map is not an automorphism"))?;
            let x = match rng.gen_range(0..3) {
                0 => rs.positive_indices().into_iter().fold(l.zero(), |acc, k| &acc + &l.e_idx(k).scale(&f.int(rng.gen_range(-1..=1)))),
                1 => (0..l.rank()).fold(l.zero(), |acc, i| &acc + &l.h(i).scale(&f.int(rng.gen_range(-2..=2)))),
                _ => l.vec_from_ints(&(0..l.dim()).map(|_| rng.gen_range(-1..=1)).collect::<Vec<_>>()).unwrap(),
            };
            let y = m.apply(&x);
            let (ax, ay) = (ad_matrix(&l, &x), ad_matrix(&l, &y));
            let (nx, ny) = (nilpotent_oracle(&ax), nilpotent_oracle(&ay));
            let (sx, sy) = (semisimple_oracle(&ax), semisimple_oracle(&ay));
            ensure(nx == ny && sx == sy, || format!("{name}: invariance fails for {}", l.format_vec(&x)))?;
            ensure(nx == is_nilpotent(&l, &x) && sx == is_semisimple(&l, &x), || {
                format!("{name}: library predicates disagree at {}", l.format_vec(&x))
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} oracle pairs plus 500 suite samples"))
}

fn c11_jordan() -> Outcome {
    let (mut checked, mut rational) = (0, 0);
    for name in ["A1", "A2", "B2", "G2"] {
        let l = parse(name);
        for c in inversa_corpus(&l).map_err(|e| e.to_string())? {
            let p = jordan(&l, &c.x).map_err(|e| format!("{name} {}: {e}", c.id))?;
            let (as_, ae) = (ad_matrix(&l, &p.s), ad_matrix(&l, &p.e));
            ensure(&p.s + &p.e == c.x, || format!("{name} {}: s + e != x", c.id))?;
            ensure(l.bracket(&p.s, &p.e).is_zero(), || format!("{name} {}: [s, e] != 0", c.id))?;
            ensure(semisimple_oracle(&as_) && nilpotent_oracle(&ae), || format!("{name} {}: parts", c.id))?;
            if let Some(s) = eigen_semisimple_part(&ad_matrix(&l, &c.x)) {
                ensure(s == as_, || format!("{name} {}: eigen-decomposition disagrees", c.id))?;
                rational += 1;
            }
            checked += 1;
        }
    }
    ensure(rational == checked, || format!("only {rational} of {checked} had rational spectrum"))?;
    Ok(format!("{checked} corpus elements, all with rational spectrum"))
}

fn c12_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_lielocal"))
            .args(["suite", "run", "--type", "A2,B2,G2", "--suites", "all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0) && b.status.code() == Some(0), || "nonzero exit".into())?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("construction soundness", c1_jacobi),
        ("root-group identities", c2_chevalley_identity),
        ("chain formula", c3_chain_formula),
        ("Weyl action on coroots", c4_weyl_action),
        ("witness corpus", c5_corpus),
        ("scalar local test", c6_scalar),
        ("line identities and Galois mismatch", c7_campo),
        ("closed-set bound and maximizers", c8_dkk),
        ("opposite involution and distinguished parabolics", c9_opposite),
        ("invariance of nilpotency and semisimplicity", c10_invariance),
        ("Jordan decomposition", c11_jordan),
        ("determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({secs:.1}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
