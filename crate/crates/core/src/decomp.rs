//! Jordan decomposition, sl2-triples and centralizers of Cartan elements.

use crate::autgrp::ad;
use crate::chevalley::{LieAlg, LieVec};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{charpoly, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub s: LieVec,
    pub e: LieVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: LieVec,
    pub h: LieVec,
    pub f: LieVec,
}

/// `ad(x)^dim = 0`.
pub fn is_nilpotent(l: &LieAlg, x: &LieVec) -> bool {
    matrix_is_nilpotent(&ad(l, x))
}

fn matrix_is_nilpotent(a: &Matrix) -> bool {
    let n = a.rows();
    let mut p = a.clone();
    let mut k = 1;
    while k < n {
        if p.is_zero() {
            return true;
        }
        p = p.mul(&p);
        k *= 2;
    }
    p.is_zero()
}

/// The squarefree part of the characteristic polynomial annihilates `ad x`.
pub fn is_semisimple(l: &LieAlg, x: &LieVec) -> bool {
    let a = ad(l, x);
    charpoly(&a).squarefree_part().eval_matrix(&a).is_zero()
}

/// Solves `ad(s) = target` for `s`; `ad` is injective on a simple algebra.
fn solve_ad(l: &LieAlg, target: &Matrix) -> Result<LieVec> {
    let dim = l.dim();
    let f = l.field();
    // unknown s_a; equation (r, b): sum_a s_a [b_a, b_b]_r = target[r][b]
    let mut m = Matrix::zeros(f, dim * dim, dim);
    let mut rhs = Vec::with_capacity(dim * dim);
    for r in 0..dim {
        for b in 0..dim {
            rhs.push(target.get(r, b).clone());
        }
    }
    for a in 0..dim {
        for b in 0..dim {
            for &(r, k) in l.basis_bracket(a, b) {
                let v = m.get(r * dim + b, a) + &f.int(k);
                m.set(r * dim + b, a, v);
            }
        }
    }
    let s = m
        .solve(&rhs)
        .ok_or_else(|| Error::SolveFailure("semisimple part is not inner".into()))?;
    l.vec_from_coords(s)
}

/// Jordan decomposition `x = s + e` by Newton iteration on the squarefree
/// part of the characteristic polynomial of `ad x`.
pub fn jordan(l: &LieAlg, x: &LieVec) -> Result<JordanPair> {
    let a = ad(l, x);
    if matrix_is_nilpotent(&a) {
        return Ok(JordanPair {
            s: l.zero(),
            e: x.clone(),
        });
    }
    let q = charpoly(&a).squarefree_part();
    if q.eval_matrix(&a).is_zero() {
        return Ok(JordanPair {
            s: x.clone(),
            e: l.zero(),
        });
    }
    let dq = q.derivative();
    let dim = l.dim();
    let cap = (usize::BITS - (dim - 1).leading_zeros()) as usize + 1;
    let mut s = a;
    let mut converged = false;
    for _ in 0..cap {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            converged = true;
            break;
        }
        let inv = dq
            .eval_matrix(&s)
            .inverse()
            .ok_or_else(|| Error::SolveFailure("Newton step is singular".into()))?;
        s = s.sub(&qs.mul(&inv));
    }
    if !converged && !q.eval_matrix(&s).is_zero() {
        return Err(Error::SolveFailure("Newton iteration did not converge".into()));
    }
    let sv = solve_ad(l, &s)?;
    let ev = x - &sv;
    let pair = JordanPair { s: sv, e: ev };
    if !l.bracket(&pair.s, &pair.e).is_zero()
        || !is_semisimple(l, &pair.s)
        || !is_nilpotent(l, &pair.e)
    {
        return Err(Error::SolveFailure("Jordan pair invariants fail".into()));
    }
    Ok(pair)
}

fn stack(top: &Matrix, bottom: &Matrix) -> Matrix {
    let mut rows = top.to_rows();
    rows.extend(bottom.to_rows());
    Matrix::from_rows(top.field(), top.cols(), rows)
}

/// An sl2-triple through a nonzero nilpotent `e`. Each underdetermined
/// system is solved with its free variables set to zero.
pub fn jacobson_morozov(l: &LieAlg, e: &LieVec) -> Result<Sl2Triple> {
    if e.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ade = ad(l, e);
    if !matrix_is_nilpotent(&ade) {
        return Err(Error::NotNilpotent);
    }
    let f = l.field();
    let dim = l.dim();
    let rhs: Vec<_> = e.coords().iter().map(|c| c.scale_int(-2)).collect();
    let z = ade
        .mul(&ade)
        .solve(&rhs)
        .ok_or_else(|| Error::SolveFailure("no z with ad(e)^2 z = -2e".into()))?;
    let h = l.bracket(e, &l.vec_from_coords(z)?);
    let adh2 = ad(l, &h).add(&Matrix::identity(f, dim).scale(&f.int(2)));
    let mut rhs = h.coords().to_vec();
    rhs.extend((0..dim).map(|_| f.zero()));
    let fv = stack(&ade, &adh2)
        .solve(&rhs)
        .ok_or_else(|| Error::SolveFailure("no f completing the triple".into()))?;
    let fv = l.vec_from_coords(fv)?;
    let t = Sl2Triple {
        e: e.clone(),
        h,
        f: fv,
    };
    let two = f.int(2);
    if l.bracket(&t.h, &t.e) != t.e.scale(&two)
        || l.bracket(&t.h, &t.f) != t.f.scale(&f.int(-2))
        || l.bracket(&t.e, &t.f) != t.h
    {
        return Err(Error::SolveFailure("triple relations fail".into()));
    }
    Ok(t)
}

/// Centralizer of a Cartan element: `h + sum of root spaces with alpha(s) = 0`.
#[derive(Clone, Debug)]
pub struct CentralizerLevi {
    /// Root indices with `alpha(s) = 0`.
    pub roots: Vec<usize>,
    /// Simple indices `J` when the root set is the standard Levi `Phi_J`.
    pub j: Option<Vec<usize>>,
    /// Root indices of a base of the vanishing root set.
    pub base: Vec<usize>,
    pub subspace: Subspace,
}

/// `alpha(s)` for each root, `s` in the Cartan subalgebra.
pub fn root_values(l: &LieAlg, s: &LieVec) -> Vec<crate::Scalar> {
    let rs = l.root_system();
    let a = &rs.cartan().matrix;
    let n = l.rank();
    rs.roots()
        .iter()
        .map(|r| {
            let mut v = l.field().zero();
            for (i, si) in s.h_part().iter().enumerate() {
                let pair: i64 = (0..n).map(|j| r.0[j] * a[i][j]).sum();
                if pair != 0 && !si.is_zero() {
                    v += &si.scale_int(pair);
                }
            }
            v
        })
        .collect()
}

pub fn centralizer_levi(l: &LieAlg, s: &LieVec) -> Result<CentralizerLevi> {
    if !s.in_cartan() {
        return Err(Error::NotInCartan);
    }
    let rs = l.root_system();
    let vals = root_values(l, s);
    let roots: Vec<usize> = (0..vals.len()).filter(|&k| vals[k].is_zero()).collect();
    let pos: Vec<usize> = roots
        .iter()
        .copied()
        .filter(|&k| rs.root(k).is_positive())
        .collect();
    // indecomposable positive roots of the closed subsystem form its base
    let base: Vec<usize> = pos
        .iter()
        .copied()
        .filter(|&k| {
            !pos.iter().any(|&a| {
                rs.index_of(&rs.root(k).sub(rs.root(a)))
                    .is_some_and(|b| pos.contains(&b))
            })
        })
        .collect();
    let simple: Vec<usize> = (0..l.rank())
        .filter(|&i| roots.contains(&rs.simple_index(i)))
        .collect();
    let j = (rs.levi_roots(&simple) == roots).then_some(simple);
    let mut vecs: Vec<LieVec> = (0..l.rank()).map(|i| l.h(i)).collect();
    vecs.extend(roots.iter().map(|&k| l.e_idx(k)));
    Ok(CentralizerLevi {
        subspace: l.span(&vecs),
        roots,
        j,
        base,
    })
}

/// Minimal polynomial of a matrix, by finding the first linear dependency
/// among its powers.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let f = m.field();
    let n = m.rows();
    let flat = |x: &Matrix| -> Vec<crate::Scalar> { x.to_rows().into_iter().flatten().collect() };
    let mut powers = vec![flat(&Matrix::identity(f, n))];
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(m);
        let target = flat(&cur);
        let sys = Matrix::from_columns(f, n * n, &powers);
        if let Some(c) = sys.solve(&target) {
            let mut coeffs: Vec<_> = c.into_iter().map(|x| -x).collect();
            coeffs.push(f.one());
            return Poly::new(f, coeffs);
        }
        powers.push(target);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::CycloField;
    use crate::rootsys::{cartan, CartanType, Root};

    fn alg(t: CartanType, n: usize) -> LieAlg {
        LieAlg::build(cartan(t, n).unwrap(), CycloField::default()).unwrap()
    }

    #[test]
    fn predicates() {
        let l = alg(CartanType::A, 1);
        let (h, e) = (l.h(0), l.e_simple(0));
        assert!(is_nilpotent(&l, &e) && !is_semisimple(&l, &e));
        assert!(is_semisimple(&l, &h) && !is_nilpotent(&l, &h));
        let x = &h + &e;
        assert!(is_semisimple(&l, &x));
        let mp = minimal_polynomial(&ad(&l, &x));
        assert_eq!(mp.degree(), Some(3));
        assert_eq!(mp.squarefree_part(), mp);
    }

    #[test]
    fn jordan_examples() {
        let l = alg(CartanType::A, 1);
        let x = &l.h(0) + &l.e_simple(0);
        assert_eq!(jordan(&l, &x).unwrap(), JordanPair { s: x.clone(), e: l.zero() });
        let e = l.e_simple(0);
        assert_eq!(jordan(&l, &e).unwrap(), JordanPair { s: l.zero(), e: e.clone() });

        let l = alg(CartanType::A, 2);
        let f = l.field();
        let s = &l.h(0) + &l.h(1).scale(&f.int(2));
        let x = &s + &l.e_simple(0);
        let p = jordan(&l, &x).unwrap();
        assert_eq!(p.s, s);
        assert_eq!(p.e, l.e_simple(0));
    }

    #[test]
    fn jordan_non_diagonal() {
        // s is a conjugate of a Cartan element, e commutes with it
        let l = alg(CartanType::B, 2);
        let f = l.field();
        let rs = l.root_system();
        let s0 = l.coroot(&Root(vec![1, 1])).unwrap();
        let vals = root_values(&l, &s0);
        let k = (0..vals.len())
            .find(|&k| vals[k].is_zero() && rs.root(k).is_positive())
            .unwrap();
        let e0 = l.e_idx(k);
        let g = crate::autgrp::exp_ad(&l, &l.e_simple(0), &f.int(2)).unwrap();
        let x = g.apply(&(&s0 + &e0));
        let p = jordan(&l, &x).unwrap();
        assert_eq!(p.s, g.apply(&s0));
        assert_eq!(p.e, g.apply(&e0));
    }

    #[test]
    fn jm_examples() {
        let l = alg(CartanType::A, 2);
        let f = l.field();
        let e = &l.e_simple(0) + &l.e_simple(1);
        let t = jacobson_morozov(&l, &e).unwrap();
        assert_eq!(t.h, (&l.h(0) + &l.h(1)).scale(&f.int(2)));
        let t = jacobson_morozov(&l, &l.e_simple(0)).unwrap();
        assert_eq!(t.h, l.h(0));
        assert_eq!(t.f, l.f_simple(0));
        assert_eq!(jacobson_morozov(&l, &l.zero()), Err(Error::ZeroInput));
        assert_eq!(jacobson_morozov(&l, &l.h(0)), Err(Error::NotNilpotent));
    }

    #[test]
    fn jm_g2_subregular() {
        let l = alg(CartanType::G, 2);
        let e = &l.e(&Root(vec![0, 1])).unwrap() + &l.e(&Root(vec![3, 1])).unwrap();
        let t = jacobson_morozov(&l, &e).unwrap();
        assert!(is_nilpotent(&l, &t.f));
        assert!(crate::autgrp::integer_eigenspaces(&l, &t.h).is_ok());
    }

    #[test]
    fn centralizers() {
        let l = alg(CartanType::A, 2);
        let f = l.field();
        let s = &l.h(0) + &l.h(1).scale(&f.int(2));
        let c = centralizer_levi(&l, &s).unwrap();
        assert_eq!(c.subspace.dim(), 4);
        assert_eq!(c.j, Some(vec![0]));
        let reg = &l.h(0) + &l.h(1);
        assert_eq!(centralizer_levi(&l, &reg).unwrap().subspace.dim(), 2);
        let z = centralizer_levi(&l, &l.zero()).unwrap();
        assert_eq!(z.subspace.dim(), 8);
        assert_eq!(z.base.len(), 2);
        assert_eq!(centralizer_levi(&l, &l.e_simple(0)).err(), Some(Error::NotInCartan));
        // a non-standard Levi: only alpha1+alpha2 vanishes
        let s = &l.h(0) - &l.h(1);
        let c = centralizer_levi(&l, &s).unwrap();
        assert_eq!(c.j, None);
        assert_eq!(c.base, vec![l.root_system().index_of(&Root(vec![1, 1])).unwrap()]);
    }
}
