//! Automorphisms of `g` as exact matrices in the Chevalley basis.
//!
//! Every constructor records a trace of named factors; `eval_trace` rebuilds
//! the matrix from the trace alone, so a trace is an independent certificate
//! of how a map was assembled.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::chevalley::{LieAlg, LieVec};
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rootsys::WeylWord;

/// One named generator in the construction of a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `exp(t ad x)`.
    ExpAd { x: LieVec, t: Scalar },
    /// `Ad w` for a reduced word (zero-based simple indices).
    Weyl { word: Vec<usize> },
    /// Torus element acting by `prod v_i^{m_i}` on `e_alpha`.
    Torus { values: Vec<Scalar> },
    /// `lambda^m` on the `m`-eigenspace of `ad h`.
    Grading { h: LieVec, lambda: Scalar },
    /// Diagram automorphism for a permutation of simple indices.
    Graph { perm: Vec<usize> },
    /// The Chevalley involution.
    Involution,
    /// Inverse of a composite, listed outermost first.
    Inverse(Vec<Factor>),
}

impl Factor {
    pub fn to_json(&self, l: &LieAlg) -> Value {
        match self {
            Factor::ExpAd { x, t } => {
                json!({"kind": "exp_ad", "x": l.format_vec(x), "t": t.to_string()})
            }
            Factor::Weyl { word } => json!({
                "kind": "weyl_rep",
                "word": word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            }),
            Factor::Torus { values } => json!({
                "kind": "torus",
                "values": values.iter().map(Scalar::to_string).collect::<Vec<_>>(),
            }),
            Factor::Grading { h, lambda } => {
                json!({"kind": "grading", "h": l.format_vec(h), "lambda": lambda.to_string()})
            }
            Factor::Graph { perm } => json!({
                "kind": "graph",
                "perm": perm.iter().map(|i| i + 1).collect::<Vec<_>>(),
            }),
            Factor::Involution => json!({"kind": "involution"}),
            Factor::Inverse(fs) => json!({
                "kind": "inverse",
                "of": fs.iter().map(|f| f.to_json(l)).collect::<Vec<_>>(),
            }),
        }
    }

    /// Short label such as `torus` or `weyl_rep`.
    pub fn kind(&self) -> &'static str {
        match self {
            Factor::ExpAd { .. } => "exp_ad",
            Factor::Weyl { .. } => "weyl_rep",
            Factor::Torus { .. } => "torus",
            Factor::Grading { .. } => "grading",
            Factor::Graph { .. } => "graph",
            Factor::Involution => "involution",
            Factor::Inverse(_) => "inverse",
        }
    }
}

/// A linear endomorphism of `g` with the factors it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub matrix: Matrix,
    /// Outermost factor first; empty means the identity.
    pub trace: Vec<Factor>,
}

impl LinMap {
    pub fn identity(l: &LieAlg) -> LinMap {
        LinMap {
            matrix: Matrix::identity(l.field(), l.dim()),
            trace: Vec::new(),
        }
    }

    fn single(matrix: Matrix, f: Factor) -> LinMap {
        LinMap {
            matrix,
            trace: vec![f],
        }
    }

    /// `self o other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        let mut trace = self.trace.clone();
        trace.extend(other.trace.iter().cloned());
        LinMap {
            matrix: self.matrix.mul(&other.matrix),
            trace,
        }
    }

    pub fn inverse(&self) -> Option<LinMap> {
        Some(LinMap {
            matrix: self.matrix.inverse()?,
            trace: vec![Factor::Inverse(self.trace.clone())],
        })
    }

    pub fn apply(&self, x: &LieVec) -> LieVec {
        x.apply(&self.matrix)
    }

    pub fn trace_json(&self, l: &LieAlg) -> Value {
        Value::Array(self.trace.iter().map(|f| f.to_json(l)).collect())
    }
}

/// Matrix of `y -> [x, y]`.
pub fn ad(l: &LieAlg, x: &LieVec) -> Matrix {
    let dim = l.dim();
    let f = l.field();
    let mut m = Matrix::zeros(f, dim, dim);
    for (a, xa) in x.coords().iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for b in 0..dim {
            for &(r, k) in l.basis_bracket(a, b) {
                let v = m.get(r, b) + &xa.scale_int(k);
                m.set(r, b, v);
            }
        }
    }
    m
}

/// Killing form matrix `tr(ad b_a ad b_b)` on the basis.
pub fn killing_form(l: &LieAlg) -> Matrix {
    let dim = l.dim();
    let ads: Vec<Matrix> = (0..dim).map(|b| ad(l, &l.basis(b))).collect();
    let mut k = Matrix::zeros(l.field(), dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let t = ads[a].mul(&ads[b]).trace();
            k.set(a, b, t.clone());
            k.set(b, a, t);
        }
    }
    k
}

/// `exp(t ad x)` as a matrix; requires `ad x` nilpotent.
pub fn exp_ad(l: &LieAlg, x: &LieVec, t: &Scalar) -> Result<LinMap> {
    let dim = l.dim();
    let a = ad(l, x);
    let mut acc = Matrix::identity(l.field(), dim);
    let mut power = Matrix::identity(l.field(), dim);
    let mut coef = l.field().one();
    let mut r = 0u32;
    loop {
        power = power.mul(&a);
        r += 1;
        if power.is_zero() {
            break;
        }
        if r as usize >= dim {
            return Err(Error::NotNilpotent);
        }
        coef = (&coef * t).scale(&num_rational::BigRational::new(1.into(), (r as i64).into()));
        if !coef.is_zero() {
            acc = acc.add(&power.scale(&coef));
        }
    }
    Ok(LinMap::single(
        acc,
        Factor::ExpAd {
            x: x.clone(),
            t: t.clone(),
        },
    ))
}

/// `exp(t ad x) v` without forming the matrix.
pub fn exp_ad_apply(l: &LieAlg, x: &LieVec, t: &Scalar, v: &LieVec) -> Result<LieVec> {
    let dim = l.dim();
    let mut acc = v.clone();
    let mut term = v.clone();
    for r in 1..=dim + 1 {
        term = l.bracket(x, &term);
        if term.is_zero() {
            return Ok(acc);
        }
        if r > dim {
            break;
        }
        let c = t.scale(&num_rational::BigRational::new(1.into(), (r as i64).into()));
        term = term.scale(&c);
        acc = &acc + &term;
    }
    Err(Error::NotNilpotent)
}

/// `exp(t ad e_alpha) v` for a root index, the action of `x_alpha(t)`.
pub fn root_element_apply(l: &LieAlg, k: usize, t: &Scalar, v: &LieVec) -> LieVec {
    exp_ad_apply(l, &l.e_idx(k), t, v).expect("root vectors are ad-nilpotent")
}

/// Matrices of `Ad s_i = x_i(1) x_{-i}(-1) x_i(1)`, cached on the algebra.
pub fn simple_reflection_reps(l: &LieAlg) -> &[Matrix] {
    l.sdot.get_or_init(|| {
        let f = l.field();
        (0..l.rank())
            .map(|i| {
                let e = exp_ad(l, &l.e_simple(i), &f.one()).expect("nilpotent").matrix;
                let fm = exp_ad(l, &l.f_simple(i), &f.int(-1)).expect("nilpotent").matrix;
                e.mul(&fm).mul(&e)
            })
            .collect()
    })
}

/// `Ad w` for the product of simple representatives along the word.
pub fn weyl_rep(l: &LieAlg, w: &WeylWord) -> LinMap {
    weyl_rep_word(l, &w.word)
}

pub fn weyl_rep_word(l: &LieAlg, word: &[usize]) -> LinMap {
    let reps = simple_reflection_reps(l);
    let mut m = Matrix::identity(l.field(), l.dim());
    for &i in word {
        m = m.mul(&reps[i]);
    }
    LinMap::single(
        m,
        Factor::Weyl {
            word: word.to_vec(),
        },
    )
}

/// Applies `Ad w` to a vector through the cached simple representatives.
pub fn weyl_apply(l: &LieAlg, word: &[usize], v: &LieVec) -> LieVec {
    let reps = simple_reflection_reps(l);
    word.iter().rev().fold(v.clone(), |acc, &i| acc.apply(&reps[i]))
}

/// `Ad s_i v` as three root-group actions, without forming matrices.
pub fn sdot_apply(l: &LieAlg, i: usize, v: &LieVec) -> LieVec {
    let f = l.field();
    let (e, fi) = (l.e_simple(i), l.f_simple(i));
    let one = f.one();
    let step = |x: &LieVec, t: &Scalar, v: &LieVec| exp_ad_apply(l, x, t, v).expect("nilpotent");
    let v = step(&e, &one, v);
    let v = step(&fi, &f.int(-1), &v);
    step(&e, &one, &v)
}

/// `Ad w v` through `sdot_apply`, rightmost letter first.
pub fn weyl_apply_vec(l: &LieAlg, word: &[usize], v: &LieVec) -> LieVec {
    word.iter().rev().fold(v.clone(), |acc, &i| sdot_apply(l, i, &acc))
}

/// Torus element with `e_alpha -> prod values_i^{m_i} e_alpha`.
pub fn torus_aut(l: &LieAlg, values: &[Scalar]) -> Result<LinMap> {
    let n = l.rank();
    if values.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: values.len(),
        });
    }
    if let Some(i) = values.iter().position(Scalar::is_zero) {
        return Err(Error::ZeroValue(i + 1));
    }
    let f = l.field();
    let mut m = Matrix::identity(f, l.dim());
    for (k, r) in l.root_system().roots().iter().enumerate() {
        let mut c = f.one();
        for (v, &e) in values.iter().zip(&r.0) {
            if e != 0 {
                c = &c * &v.pow(e)?;
            }
        }
        let b = l.e_index(k);
        m.set(b, b, c);
    }
    Ok(LinMap::single(
        m,
        Factor::Torus {
            values: values.to_vec(),
        },
    ))
}

/// Integer eigenvalues of `ad h` with their eigenvectors, or an error when
/// `ad h` is not diagonalizable with integer spectrum.
pub fn integer_eigenspaces(l: &LieAlg, h: &LieVec) -> Result<Vec<(i64, Vec<Vec<Scalar>>)>> {
    let dim = l.dim();
    let f = l.field();
    if h.in_cartan() {
        let rs = l.root_system();
        let a = &rs.cartan().matrix;
        let mut spaces: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
        for i in 0..l.rank() {
            spaces.entry(0).or_default().push(l.basis(i).into_coords());
        }
        for (k, r) in rs.roots().iter().enumerate() {
            // alpha(h) = sum_i h_i <alpha, alpha_i>
            let mut w = f.zero();
            for (i, hi) in h.h_part().iter().enumerate() {
                let pair: i64 = (0..l.rank()).map(|j| r.0[j] * a[i][j]).sum();
                if pair != 0 {
                    w += &hi.scale_int(pair);
                }
            }
            let m = w.as_rational().filter(|q| q.is_integer()).ok_or(Error::NonIntegralSpectrum)?;
            let m: i64 = m.to_integer().try_into().map_err(|_| Error::NonIntegralSpectrum)?;
            spaces.entry(m).or_default().push(l.e_idx(k).into_coords());
        }
        return Ok(spaces.into_iter().collect());
    }
    let a = ad(l, h);
    let bound = 2 * dim as i64;
    let mut out = Vec::new();
    let mut total = 0;
    for m in -bound..=bound {
        let shifted = a.sub(&Matrix::identity(f, dim).scale(&f.int(m)));
        let ns = shifted.nullspace();
        if !ns.is_empty() {
            total += ns.len();
            out.push((m, ns));
            if total == dim {
                return Ok(out);
            }
        }
    }
    Err(Error::NonIntegralSpectrum)
}

/// Acts by `lambda^m` on the `m`-eigenspace of `ad h`.
pub fn grading_aut(l: &LieAlg, h: &LieVec, lambda: &Scalar) -> Result<LinMap> {
    if lambda.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let f = l.field();
    let dim = l.dim();
    let spaces = integer_eigenspaces(l, h)?;
    let factor = Factor::Grading {
        h: h.clone(),
        lambda: lambda.clone(),
    };
    if h.in_cartan() {
        let mut m = Matrix::identity(f, dim);
        for (w, vs) in &spaces {
            let c = lambda.pow(*w)?;
            for v in vs {
                let b = v.iter().position(|x| !x.is_zero()).expect("basis vector");
                m.set(b, b, c.clone());
            }
        }
        return Ok(LinMap::single(m, factor));
    }
    let mut cols = Vec::with_capacity(dim);
    let mut scaled = Vec::with_capacity(dim);
    for (w, vs) in &spaces {
        let c = lambda.pow(*w)?;
        for v in vs {
            cols.push(v.clone());
            scaled.push(v.iter().map(|x| x * &c).collect::<Vec<_>>());
        }
    }
    let p = Matrix::from_columns(f, dim, &cols);
    let q = Matrix::from_columns(f, dim, &scaled);
    let pinv = p.inverse().ok_or(Error::NonIntegralSpectrum)?;
    Ok(LinMap::single(q.mul(&pinv), factor))
}

/// Extends `e_{±alpha_i} -> s_i e_{±alpha_delta(i)}` to all of `g` through
/// iterated brackets of simple root vectors.
fn extend_from_simple(l: &LieAlg, delta: &[usize], signs: &[i64]) -> Result<Matrix> {
    let rs = l.root_system();
    let n = l.rank();
    let f = l.field();
    let dim = l.dim();
    let mut img: Vec<Option<LieVec>> = vec![None; dim];
    for i in 0..n {
        img[i] = Some(l.h(delta[i]));
        img[l.e_index(rs.simple_index(i))] = Some(l.e_simple(delta[i]).scale(&f.int(signs[i])));
        img[l.e_index(rs.neg_index(rs.simple_index(i)))] =
            Some(l.f_simple(delta[i]).scale(&f.int(signs[i])));
    }
    for xi in rs.positive_indices() {
        let root = rs.root(xi);
        if root.height() < 2 {
            continue;
        }
        let (i, beta) = (0..n)
            .find_map(|i| rs.index_of(&root.sub(&rs.simple_root(i))).map(|b| (i, b)))
            .ok_or(Error::ExtensionFailure)?;
        let ai = rs.simple_index(i);
        for (a, b, target) in [
            (ai, beta, xi),
            (rs.neg_index(ai), rs.neg_index(beta), rs.neg_index(xi)),
        ] {
            let c = l.constant(a, b).ok_or(Error::ExtensionFailure)?;
            let x = img[l.e_index(a)].as_ref().ok_or(Error::ExtensionFailure)?;
            let y = img[l.e_index(b)].as_ref().ok_or(Error::ExtensionFailure)?;
            let v = l.bracket(x, y).scale(&f.frac(1, c));
            img[l.e_index(target)] = Some(v);
        }
    }
    let cols: Vec<Vec<Scalar>> = img
        .into_iter()
        .map(|v| v.map(LieVec::into_coords).ok_or(Error::ExtensionFailure))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(f, dim, &cols))
}

/// The diagram automorphism `d_delta`.
pub fn graph_aut(l: &LieAlg, delta: &[usize]) -> Result<LinMap> {
    let rs = l.root_system();
    if !rs.is_diagram_symmetry(delta) {
        return Err(Error::NotASymmetry);
    }
    let n = l.rank();
    for mask in 0u32..(1 << n) {
        let signs: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let m = extend_from_simple(l, delta, &signs)?;
        let cand = LinMap::single(
            m,
            Factor::Graph {
                perm: delta.to_vec(),
            },
        );
        if is_automorphism(l, &cand.matrix) {
            if mask == 0 {
                return Ok(cand);
            }
            let tw: Vec<Scalar> = signs.iter().map(|&s| l.field().int(s)).collect();
            let t = torus_aut(l, &tw)?;
            // the twisted map equals d o t on simple generators
            return Ok(LinMap {
                matrix: cand.matrix,
                trace: vec![
                    Factor::Graph {
                        perm: delta.to_vec(),
                    },
                    t.trace[0].clone(),
                ],
            });
        }
    }
    Err(Error::ExtensionFailure)
}

/// `omega(h) = -h`, `omega(e_alpha) = -e_{-alpha}`.
pub fn chevalley_involution(l: &LieAlg) -> LinMap {
    let f = l.field();
    let dim = l.dim();
    let rs = l.root_system();
    let mut m = Matrix::zeros(f, dim, dim);
    for i in 0..l.rank() {
        m.set(i, i, f.int(-1));
    }
    for k in 0..rs.roots().len() {
        m.set(l.e_index(rs.neg_index(k)), l.e_index(k), f.int(-1));
    }
    LinMap::single(m, Factor::Involution)
}

/// `M` invertible and `M[b_a, b_b] = [M b_a, M b_b]` on all basis pairs.
pub fn is_automorphism(l: &LieAlg, m: &Matrix) -> bool {
    let dim = l.dim();
    if m.rows() != dim || m.cols() != dim || !m.is_invertible() {
        return false;
    }
    let cols: Vec<LieVec> = (0..dim)
        .map(|b| l.vec_from_coords(m.column(b)).expect("dimension"))
        .collect();
    let f = l.field();
    for a in 0..dim {
        for b in a + 1..dim {
            let lhs = l.bracket(&cols[a], &cols[b]);
            let mut rhs = l.zero();
            for &(r, k) in l.basis_bracket(a, b) {
                rhs = &rhs + &cols[r].scale(&f.int(k));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Rebuilds the matrix of a trace from its factors.
pub fn eval_trace(l: &LieAlg, trace: &[Factor]) -> Result<Matrix> {
    let mut m = Matrix::identity(l.field(), l.dim());
    for fct in trace {
        let fm = match fct {
            Factor::ExpAd { x, t } => exp_ad(l, x, t)?.matrix,
            Factor::Weyl { word } => weyl_rep_word(l, word).matrix,
            Factor::Torus { values } => torus_aut(l, values)?.matrix,
            Factor::Grading { h, lambda } => grading_aut(l, h, lambda)?.matrix,
            Factor::Graph { perm } => graph_aut(l, perm)?.matrix,
            Factor::Involution => chevalley_involution(l).matrix,
            Factor::Inverse(inner) => eval_trace(l, inner)?
                .inverse()
                .ok_or_else(|| Error::SolveFailure("singular factor".into()))?,
        };
        m = m.mul(&fm);
    }
    Ok(m)
}

/// The semilinear map `a_f` for the Galois automorphism `z -> z^k`.
pub fn semilinear_af(l: &LieAlg, k: i64, x: &LieVec) -> Result<LieVec> {
    let f = l.field();
    let coords = x
        .coords()
        .iter()
        .map(|c| f.galois_apply(k, c))
        .collect::<Result<Vec<_>>>()?;
    l.vec_from_coords(coords)
}

pub fn semilinear_af_subspace(l: &LieAlg, k: i64, s: &Subspace) -> Result<Subspace> {
    let f = l.field();
    // validate the index once so the closure below cannot fail
    f.galois_apply(k, &f.one())?;
    Ok(s.map_coefficients(|c| f.galois_apply(k, c).expect("validated index")))
}

/// A point of the variety of Borel nilradicals: `Ad(u w).n` with
/// `u = prod x_alpha(t_alpha)` over the inversion set of `w`.
#[derive(Clone, Debug)]
pub struct NilradicalDesc {
    pub w: WeylWord,
    /// Keyed by root index; keys must be exactly the inversion set of `w`.
    pub u_params: BTreeMap<usize, Scalar>,
}

impl NilradicalDesc {
    /// `u = 1`: every parameter zero.
    pub fn trivial(l: &LieAlg, w: WeylWord) -> NilradicalDesc {
        let u_params = l
            .root_system()
            .inversion_set(&w)
            .into_iter()
            .map(|k| (k, l.field().zero()))
            .collect();
        NilradicalDesc { w, u_params }
    }
}

/// The subspace `Ad(u w).n`, factors of `u` in ascending root order.
pub fn nilradical(l: &LieAlg, d: &NilradicalDesc) -> Result<Subspace> {
    let rs = l.root_system();
    let inv = rs.inversion_set(&d.w);
    if !d.u_params.keys().copied().eq(inv.iter().copied()) {
        return Err(Error::BadSupport);
    }
    let mut vs = Vec::new();
    for k in rs.positive_indices() {
        let mut v = weyl_apply(l, &d.w.word, &l.e_idx(k));
        for (&a, t) in d.u_params.iter().rev() {
            if !t.is_zero() {
                v = root_element_apply(l, a, t, &v);
            }
        }
        vs.push(v);
    }
    Ok(l.span(&vs))
}
