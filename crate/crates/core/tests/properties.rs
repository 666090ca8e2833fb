use num_rational::BigRational;
use proptest::prelude::*;

use lielocal::autgrp::{chevalley_involution, exp_ad, torus_aut, weyl_rep_word, LinMap};
use lielocal::cli::parse_element;
use lielocal::decomp::{is_nilpotent, is_semisimple, jacobson_morozov, jordan};
use lielocal::linalg::Matrix;
use lielocal::rootsys::{cartan, CartanType};
use lielocal::{CycloField, LieAlg, LieVec, Scalar};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    let f = CycloField::default();
    prop::collection::vec((-4i64..=4, 1i64..=3), f.degree())
        .prop_map(move |c| f.from_poly(&c.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>()))
}

fn algebra(idx: usize) -> LieAlg {
    let (t, n) = [(CartanType::A, 2), (CartanType::B, 2), (CartanType::G, 2)][idx];
    LieAlg::build(cartan(t, n).unwrap(), CycloField::default()).unwrap()
}

thread_local! {
    static ALGS: Vec<LieAlg> = (0..3).map(algebra).collect();
}

fn with_alg<R>(idx: usize, f: impl FnOnce(&LieAlg) -> R) -> R {
    ALGS.with(|a| f(&a[idx]))
}

fn element(l: &LieAlg, c: &[i64]) -> LieVec {
    l.vec_from_ints(&c[..l.dim()]).unwrap()
}

/// Generator codes: (kind, root or simple index, parameter).
fn automorphism(l: &LieAlg, gens: &[(u8, usize, i64)]) -> LinMap {
    let f = l.field();
    let m = l.root_system().roots().len();
    gens.iter().fold(LinMap::identity(l), |acc, &(kind, k, t)| {
        let t = if t == 0 { 1 } else { t };
        let g = match kind % 4 {
            0 => exp_ad(l, &l.e_idx(k % m), &f.frac(t, 2)).unwrap(),
            1 => torus_aut(l, &vec![f.int(t); l.rank()]).unwrap(),
            2 => weyl_rep_word(l, &[k % l.rank()]),
            _ => chevalley_involution(l),
        };
        acc.compose(&g)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn galois_is_a_field_automorphism(a in scalar(), b in scalar(), pick in 0usize..8, pick2 in 0usize..8) {
        let f = CycloField::default();
        let ks = f.galois_indices();
        let (k, j) = (ks[pick % ks.len()], ks[pick2 % ks.len()]);
        let g = |x: &Scalar| f.galois_apply(k, x).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
        let kj = (k * j).rem_euclid(f.order() as i64);
        prop_assert_eq!(f.galois_apply(j, &g(&a)).unwrap(), f.galois_apply(kj, &a).unwrap());
        if a.is_rational() {
            prop_assert_eq!(g(&a), a.clone());
        }
    }

    #[test]
    fn bracket_axioms(idx in 0usize..3, c in prop::collection::vec(-2i64..=2, 3 * 14)) {
        with_alg(idx, |l| {
            let d = l.dim();
            let (x, y, z) = (element(l, &c[..d]), element(l, &c[d..2 * d]), element(l, &c[2 * d..]));
            prop_assert_eq!(l.bracket(&x, &y), -&l.bracket(&y, &x));
            let jac = &(&l.bracket(&x, &l.bracket(&y, &z)) + &l.bracket(&y, &l.bracket(&z, &x)))
                + &l.bracket(&z, &l.bracket(&x, &y));
            prop_assert!(jac.is_zero());
            Ok(())
        })?;
    }

    #[test]
    fn generated_maps_are_automorphisms(
        idx in 0usize..3,
        gens in prop::collection::vec((0u8..4, 0usize..12, -2i64..=2), 1..4),
        c in prop::collection::vec(-2i64..=2, 2 * 14),
    ) {
        with_alg(idx, |l| {
            let d = l.dim();
            let phi = automorphism(l, &gens);
            let (x, y) = (element(l, &c[..d]), element(l, &c[d..2 * d]));
            prop_assert_eq!(phi.apply(&l.bracket(&x, &y)), l.bracket(&phi.apply(&x), &phi.apply(&y)));
            prop_assert_eq!(is_nilpotent(l, &x), is_nilpotent(l, &phi.apply(&x)));
            Ok(())
        })?;
    }

    #[test]
    fn jordan_invariants(idx in 0usize..2, c in prop::collection::vec(-2i64..=2, 14)) {
        with_alg(idx, |l| {
            let x = element(l, &c);
            let p = jordan(l, &x).unwrap();
            prop_assert_eq!(&p.s + &p.e, x);
            prop_assert!(l.bracket(&p.s, &p.e).is_zero());
            prop_assert!(is_semisimple(l, &p.s));
            prop_assert!(is_nilpotent(l, &p.e));
            Ok(())
        })?;
    }

    #[test]
    fn sl2_triples(idx in 0usize..3, c in prop::collection::vec(-2i64..=2, 6)) {
        with_alg(idx, |l| {
            let f = l.field();
            let rs = l.root_system();
            let e = rs
                .positive_indices()
                .into_iter()
                .zip(&c)
                .fold(l.zero(), |acc, (k, &v)| &acc + &l.e_idx(k).scale(&f.int(v)));
            prop_assume!(!e.is_zero());
            let t = jacobson_morozov(l, &e).unwrap();
            prop_assert_eq!(l.bracket(&t.h, &t.e), t.e.scale(&f.int(2)));
            prop_assert_eq!(l.bracket(&t.h, &t.f), t.f.scale(&f.int(-2)));
            prop_assert_eq!(l.bracket(&t.e, &t.f), t.h.clone());
            Ok(())
        })?;
    }

    #[test]
    fn element_spec_round_trip(idx in 0usize..3, c in prop::collection::vec((-3i64..=3, 1i64..=3), 14), zk in 0i64..8) {
        with_alg(idx, |l| {
            let f = l.field();
            let mut x = l.zero();
            for (b, &(n, d)) in c.iter().take(l.dim()).enumerate() {
                let mut s = f.frac(n, d);
                if b % 3 == 0 {
                    s = &s + &f.zeta_power(zk);
                }
                x.set(b, s);
            }
            prop_assert_eq!(parse_element(l, &l.format_vec(&x)).unwrap(), x);
            Ok(())
        })?;
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..6)) {
        let f = CycloField::default();
        let m = Matrix::from_i64(f, &rows);
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), 5);
        for v in &null {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }
}
