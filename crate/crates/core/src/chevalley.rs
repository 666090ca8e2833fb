//! The simple Lie algebra of a Cartan matrix in a Chevalley basis.
//!
//! Basis order: `h_1, ..., h_n` first, then `e_alpha` for every root in the
//! root-system order (negative roots first, by height). Structure constants
//! are fixed by signing every extraspecial pair positively.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde_json::json;
use sha2::{Digest, Sha256};

use crate::cyclofield::{CycloField, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rootsys::{CartanData, Root, RootSystem};

/// A sparse integer vector over the basis: `(basis index, coefficient)`.
type IntTerms = Vec<(usize, i64)>;

#[derive(Debug)]
pub struct LieAlg {
    rs: RootSystem,
    field: CycloField,
    /// `N_{a,b}` keyed by root indices, for every pair with `a + b` a root.
    nconst: HashMap<(usize, usize), i64>,
    /// `[b_a, b_b]` for basis indices, row-major `dim * dim`.
    table: Vec<IntTerms>,
    /// Integer coordinates of `h_alpha` over `h_1..h_n`, per root index.
    coroots: Vec<Vec<i64>>,
    pub(crate) sdot: OnceLock<Vec<Matrix>>,
}

impl LieAlg {
    /// Builds the algebra and verifies the Jacobi identity on all basis triples.
    pub fn build(cartan: CartanData, field: CycloField) -> Result<LieAlg> {
        let rs = RootSystem::new(cartan);
        let nconst = structure_constants(&rs)?;
        let alg = LieAlg::from_constants(rs, field, nconst);
        for (&(a, b), &n) in &alg.nconst {
            let (p, _) = alg.rs.alpha_chain(alg.rs.root(a), alg.rs.root(b))?;
            if n.abs() != p + 1 {
                return Err(Error::ConstructionFailure(format!(
                    "|N| = {} but p + 1 = {} for ({}, {})",
                    n.abs(),
                    p + 1,
                    alg.rs.root(a),
                    alg.rs.root(b)
                )));
            }
        }
        if !alg.jacobi_check() {
            return Err(Error::ConstructionFailure("Jacobi identity fails".into()));
        }
        Ok(alg)
    }

    /// Assembles the bracket table from given constants without validation.
    pub fn from_constants(
        rs: RootSystem,
        field: CycloField,
        nconst: HashMap<(usize, usize), i64>,
    ) -> LieAlg {
        let n = rs.rank();
        let coroots: Vec<Vec<i64>> = rs
            .roots()
            .iter()
            .map(|r| {
                let dr = rs.form(r, r) / 2;
                let d = &rs.cartan().d;
                (0..n).map(|k| r.0[k] * d[k] / dr).collect()
            })
            .collect();
        let mut alg = LieAlg {
            rs,
            field,
            nconst,
            table: Vec::new(),
            coroots,
            sdot: OnceLock::new(),
        };
        alg.rebuild_table();
        alg
    }

    fn rebuild_table(&mut self) {
        let n = self.rank();
        let dim = self.dim();
        let a = &self.rs.cartan().matrix;
        let mut table = vec![Vec::new(); dim * dim];
        for (k, r) in self.rs.roots().iter().enumerate() {
            for i in 0..n {
                let w: i64 = (0..n).map(|l| r.0[l] * a[i][l]).sum();
                if w != 0 {
                    table[i * dim + n + k] = vec![(n + k, w)];
                    table[(n + k) * dim + i] = vec![(n + k, -w)];
                }
            }
        }
        for k in 0..self.rs.roots().len() {
            let nk = self.rs.neg_index(k);
            table[(n + k) * dim + n + nk] = self.coroots[k]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect();
        }
        for (&(x, y), &c) in &self.nconst {
            let s = self
                .rs
                .index_of(&self.rs.root(x).add(self.rs.root(y)))
                .expect("constants are keyed by pairs summing to a root");
            table[(n + x) * dim + n + y] = vec![(n + s, c)];
        }
        self.table = table;
    }

    /// Overwrites `N_{a,b}` and `N_{b,a}` (root indices). Used for fault injection.
    pub fn set_constant(&mut self, a: usize, b: usize, value: i64) -> Result<()> {
        if !self.nconst.contains_key(&(a, b)) {
            return Err(Error::NotARoot(format!(
                "{} + {}",
                self.rs.root(a),
                self.rs.root(b)
            )));
        }
        self.nconst.insert((a, b), value);
        self.nconst.insert((b, a), -value);
        self.rebuild_table();
        Ok(())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan(&self) -> &CartanData {
        self.rs.cartan()
    }

    pub fn field(&self) -> CycloField {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.rs.roots().len()
    }

    /// Basis index of `e_alpha` for the root with index `k`.
    pub fn e_index(&self, k: usize) -> usize {
        self.rank() + k
    }

    /// Root index of a basis index, if it is a root vector.
    pub fn root_of_basis(&self, b: usize) -> Option<usize> {
        b.checked_sub(self.rank())
    }

    /// `N_{alpha,beta}` for root indices, or `None` when the sum is not a root.
    pub fn constant(&self, a: usize, b: usize) -> Option<i64> {
        self.nconst.get(&(a, b)).copied()
    }

    /// `N_{alpha,beta}` for roots.
    pub fn n_const(&self, alpha: &Root, beta: &Root) -> Result<Option<i64>> {
        let a = self.root_index(alpha)?;
        let b = self.root_index(beta)?;
        Ok(self.constant(a, b))
    }

    pub fn root_index(&self, r: &Root) -> Result<usize> {
        self.rs
            .index_of(r)
            .ok_or_else(|| Error::NotARoot(r.to_string()))
    }

    /// Integer bracket of two basis elements.
    pub fn basis_bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a * self.dim() + b]
    }

    /// Integer coordinates of `h_alpha` over `h_1..h_n`.
    pub fn coroot_coords(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    pub fn zero(&self) -> LieVec {
        LieVec::zero(self.field, self.rank(), self.dim())
    }

    pub fn basis(&self, b: usize) -> LieVec {
        let mut v = self.zero();
        v.coords[b] = self.field.one();
        v
    }

    /// `h_i`, zero-based `i`.
    pub fn h(&self, i: usize) -> LieVec {
        self.basis(i)
    }

    /// `e_alpha` for the root with index `k`.
    pub fn e_idx(&self, k: usize) -> LieVec {
        self.basis(self.e_index(k))
    }

    pub fn e(&self, r: &Root) -> Result<LieVec> {
        Ok(self.e_idx(self.root_index(r)?))
    }

    /// `e_{alpha_i}` for zero-based `i`.
    pub fn e_simple(&self, i: usize) -> LieVec {
        self.e_idx(self.rs.simple_index(i))
    }

    /// `e_{-alpha_i}` for zero-based `i`.
    pub fn f_simple(&self, i: usize) -> LieVec {
        self.e_idx(self.rs.neg_index(self.rs.simple_index(i)))
    }

    /// `h_beta = [e_beta, e_{-beta}]`.
    pub fn coroot(&self, r: &Root) -> Result<LieVec> {
        let k = self.root_index(r)?;
        Ok(self.coroot_idx(k))
    }

    pub fn coroot_idx(&self, k: usize) -> LieVec {
        let mut v = self.zero();
        for (i, &c) in self.coroots[k].iter().enumerate() {
            v.coords[i] = self.field.int(c);
        }
        v
    }

    /// Builds a vector from integer coordinates.
    pub fn vec_from_ints(&self, coords: &[i64]) -> Result<LieVec> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(LieVec {
            rank: self.rank(),
            coords: coords.iter().map(|&c| self.field.int(c)).collect(),
        })
    }

    pub fn vec_from_coords(&self, coords: Vec<Scalar>) -> Result<LieVec> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(LieVec {
            rank: self.rank(),
            coords,
        })
    }

    pub fn bracket(&self, x: &LieVec, y: &LieVec) -> LieVec {
        let dim = self.dim();
        let mut out = vec![self.field.zero(); dim];
        let ys: Vec<(usize, &Scalar)> = y
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (a, xa) in x.coords.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(b, yb) in &ys {
                let terms = &self.table[a * dim + b];
                if terms.is_empty() {
                    continue;
                }
                let c = xa * yb;
                for &(r, k) in terms {
                    out[r] += &c.scale_int(k);
                }
            }
        }
        LieVec {
            rank: self.rank(),
            coords: out,
        }
    }

    /// Bracket of a basis element with a vector, `[b_a, y]`.
    pub fn bracket_basis(&self, a: usize, y: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        let mut out = vec![self.field.zero(); dim];
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            for &(r, k) in &self.table[a * dim + b] {
                out[r] += &yb.scale_int(k);
            }
        }
        out
    }

    /// Jacobi identity on all basis triples, in integer arithmetic.
    pub fn jacobi_check(&self) -> bool {
        let dim = self.dim();
        let br = |a: usize, b: usize| &self.table[a * dim + b];
        for a in 0..dim {
            for b in 0..dim {
                let ab = br(a, b);
                let ba = br(b, a);
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(r, c) in ab.iter().chain(ba) {
                    *acc.entry(r).or_default() += c;
                }
                if acc.values().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    acc.clear();
                    // [[a,b],c] + [[b,c],a] + [[c,a],b]
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for &(r, k) in br(x, y) {
                            for &(s, l) in br(r, z) {
                                *acc.entry(s).or_default() += k * l;
                            }
                        }
                    }
                    if acc.values().any(|&v| v != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `h` as a subspace.
    pub fn cartan_subalgebra(&self) -> Subspace {
        self.span_basis((0..self.rank()).collect())
    }

    /// `n = span{e_alpha : alpha > 0}`.
    pub fn nplus(&self) -> Subspace {
        let idx = self
            .rs
            .positive_indices()
            .into_iter()
            .map(|k| self.e_index(k))
            .collect();
        self.span_basis(idx)
    }

    /// `n^- = span{e_alpha : alpha < 0}`.
    pub fn nminus(&self) -> Subspace {
        let idx = self
            .rs
            .positive_indices()
            .into_iter()
            .map(|k| self.e_index(self.rs.neg_index(k)))
            .collect();
        self.span_basis(idx)
    }

    /// `span{e_alpha : alpha in roots}` for root indices.
    pub fn root_span(&self, roots: &[usize]) -> Subspace {
        self.span_basis(roots.iter().map(|&k| self.e_index(k)).collect())
    }

    fn span_basis(&self, idx: Vec<usize>) -> Subspace {
        let vs = idx.into_iter().map(|b| self.basis(b).coords).collect();
        Subspace::span(self.field, self.dim(), vs)
    }

    pub fn span(&self, vs: &[LieVec]) -> Subspace {
        Subspace::span(
            self.field,
            self.dim(),
            vs.iter().map(|v| v.coords.clone()).collect(),
        )
    }

    pub fn line(&self, v: &LieVec) -> Subspace {
        self.span(std::slice::from_ref(v))
    }

    /// Name of a basis element: `h1`, `e(alpha1+alpha2)`.
    pub fn basis_name(&self, b: usize) -> String {
        match self.root_of_basis(b) {
            None => format!("h{}", b + 1),
            Some(k) => format!("e({})", self.rs.root(k)),
        }
    }

    pub fn format_vec(&self, v: &LieVec) -> String {
        let mut out = String::new();
        for (b, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = self.basis_name(b);
            let (neg, body) = scalar_term(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match body {
                None => out.push_str(&name),
                Some(s) => {
                    out.push_str(&s);
                    out.push('*');
                    out.push_str(&name);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Roots, structure constants and coroots as a JSON document.
    pub fn golden_json(&self) -> serde_json::Value {
        let c = self.cartan();
        let roots: Vec<Vec<i64>> = self.rs.roots().iter().map(|r| r.0.clone()).collect();
        let mut consts: Vec<(usize, usize, i64)> =
            self.nconst.iter().map(|(&(a, b), &n)| (a, b, n)).collect();
        consts.sort_unstable();
        let consts: Vec<serde_json::Value> = consts
            .into_iter()
            .map(|(a, b, n)| {
                json!({
                    "alpha": self.rs.root(a).0,
                    "beta": self.rs.root(b).0,
                    "n": n,
                })
            })
            .collect();
        json!({
            "type": c.typ.to_string(),
            "rank": c.rank,
            "cartan": c.matrix,
            "d": c.d,
            "dim": self.dim(),
            "roots": roots,
            "coroots": self.coroots,
            "structure_constants": consts,
        })
    }

    /// Pretty-printed golden JSON with a trailing newline.
    pub fn golden_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.golden_json()).expect("serializable");
        s.push('\n');
        s
    }

    /// Git-style blob digest (SHA-256 over `blob <len>\0<content>`) of the golden text.
    pub fn constants_digest(&self) -> String {
        blob_digest(self.golden_text().as_bytes())
    }
}

pub fn blob_digest(content: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", content.len()).as_bytes());
    h.update(content);
    hex::encode(h.finalize())
}

/// Splits a coefficient into sign and a printable magnitude (`None` for 1).
fn scalar_term(c: &Scalar) -> (bool, Option<String>) {
    if c.is_rational() {
        let q = c.as_rational().expect("rational");
        let neg = q < &num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -q.clone() } else { q.clone() };
        if num_traits::One::is_one(&mag) {
            (neg, None)
        } else {
            (neg, Some(mag.to_string()))
        }
    } else {
        let nz = c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
        if nz == 1 {
            let s = c.to_string();
            match s.strip_prefix('-') {
                Some(rest) => (true, Some(rest.to_string())),
                None => (false, Some(s)),
            }
        } else {
            (false, Some(format!("({c})")))
        }
    }
}

/// Structure constants on all pairs of roots summing to a root.
fn structure_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>> {
    let mut pos: HashMap<(usize, usize), i64> = HashMap::new();
    let sq = |r: &Root| rs.form(r, r);
    for xi_idx in rs.positive_indices() {
        let xi = rs.root(xi_idx);
        if xi.height() < 2 {
            continue;
        }
        let mut pairs: Vec<(usize, usize)> = rs
            .positive_indices()
            .into_iter()
            .filter(|&a| a < xi_idx)
            .filter_map(|a| rs.index_of(&xi.sub(rs.root(a))).map(|b| (a, b)))
            .filter(|&(a, b)| a < b)
            .collect();
        pairs.sort_unstable();
        let Some(&(a1, b1)) = pairs.first() else {
            return Err(Error::ConstructionFailure(format!("no pair sums to {xi}")));
        };
        let (p, _) = rs.alpha_chain(rs.root(a1), rs.root(b1))?;
        let n1 = p + 1;
        pos.insert((a1, b1), n1);
        pos.insert((b1, a1), -n1);
        let (ra1, rb1) = (rs.root(a1).clone(), rs.root(b1).clone());
        let neg_a1 = ra1.neg();
        let neg_b1 = rb1.neg();
        for &(a, b) in &pairs[1..] {
            let (ra, rb) = (rs.root(a), rs.root(b));
            // four-term relation with alpha + beta - alpha1 - beta1 = 0
            let mut num = 0i64;
            let mut den = 1i64;
            let mut add = |n: i64, d: i64| {
                num = num * d + n * den;
                den *= d;
            };
            let bma = rb.sub(&ra1);
            if rs.contains(&bma) {
                let t = mixed(rs, &pos, rb, &neg_a1)? * mixed(rs, &pos, ra, &neg_b1)?;
                add(t, sq(&bma));
            }
            let ama = ra.sub(&ra1);
            if rs.contains(&ama) {
                let t = mixed(rs, &pos, &neg_a1, ra)? * mixed(rs, &pos, rb, &neg_b1)?;
                add(t, sq(&ama));
            }
            let total_num = sq(xi) * num;
            let total_den = n1 * den;
            if total_num % total_den != 0 {
                return Err(Error::ConstructionFailure(format!(
                    "non-integral constant for ({ra}, {rb})"
                )));
            }
            let n = total_num / total_den;
            pos.insert((a, b), n);
            pos.insert((b, a), -n);
        }
    }
    let mut all = HashMap::new();
    let m = rs.roots().len();
    for a in 0..m {
        for b in 0..m {
            if rs.contains(&rs.root(a).add(rs.root(b))) {
                all.insert((a, b), mixed(rs, &pos, rs.root(a), rs.root(b))?);
            }
        }
    }
    Ok(all)
}

/// `N_{a,b}` for arbitrary roots, reduced to constants between positive roots.
fn mixed(rs: &RootSystem, pos: &HashMap<(usize, usize), i64>, a: &Root, b: &Root) -> Result<i64> {
    let c = a.add(b);
    let lookup = |x: &Root, y: &Root| -> Result<i64> {
        let (i, j) = (rs.index_of(x), rs.index_of(y));
        match (i, j) {
            (Some(i), Some(j)) => pos.get(&(i, j)).copied().ok_or_else(|| {
                Error::ConstructionFailure(format!("constant ({x}, {y}) requested too early"))
            }),
            _ => Err(Error::ConstructionFailure(format!("({x}, {y}) not roots"))),
        }
    };
    let sq = |r: &Root| rs.form(r, r);
    let ratio = |num: i64, den: i64, n: i64| -> Result<i64> {
        if (num * n) % den != 0 {
            return Err(Error::ConstructionFailure("non-integral mixed constant".into()));
        }
        Ok(num * n / den)
    };
    match (a.is_positive(), b.is_positive()) {
        (true, true) => lookup(a, b),
        (false, false) => Ok(-mixed(rs, pos, &a.neg(), &b.neg())?),
        (false, true) => Ok(-mixed(rs, pos, b, a)?),
        (true, false) => {
            if c.is_positive() {
                let n = mixed(rs, pos, &b.neg(), &c)?;
                ratio(-sq(&c), sq(a), n)
            } else {
                let n = mixed(rs, pos, &c.neg(), a)?;
                ratio(sq(&c), sq(b), n)
            }
        }
    }
}

/// A vector of `g` in Chevalley coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieVec {
    rank: usize,
    coords: Vec<Scalar>,
}

impl LieVec {
    pub fn zero(field: CycloField, rank: usize, dim: usize) -> LieVec {
        LieVec {
            rank,
            coords: vec![field.zero(); dim],
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn with_coords(&self, coords: Vec<Scalar>) -> LieVec {
        assert_eq!(coords.len(), self.coords.len(), "dimension mismatch");
        LieVec {
            rank: self.rank,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> CycloField {
        self.coords[0].field()
    }

    /// Coordinates over `h_1..h_n`.
    pub fn h_part(&self) -> &[Scalar] {
        &self.coords[..self.rank]
    }

    /// Coordinates over `e_alpha` in root order.
    pub fn e_part(&self) -> &[Scalar] {
        &self.coords[self.rank..]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// True when the vector lies in the Cartan subalgebra.
    pub fn in_cartan(&self) -> bool {
        self.e_part().iter().all(Scalar::is_zero)
    }

    /// Projection onto the Cartan subalgebra.
    pub fn cartan_part(&self) -> LieVec {
        let mut v = self.clone();
        let z = self.field().zero();
        for c in &mut v.coords[self.rank..] {
            *c = z.clone();
        }
        v
    }

    pub fn scale(&self, c: &Scalar) -> LieVec {
        LieVec {
            rank: self.rank,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn get(&self, b: usize) -> &Scalar {
        &self.coords[b]
    }

    pub fn set(&mut self, b: usize, v: Scalar) {
        self.coords[b] = v;
    }

    /// Applies a linear map given by its matrix.
    pub fn apply(&self, m: &Matrix) -> LieVec {
        LieVec {
            rank: self.rank,
            coords: m.mul_vec(&self.coords),
        }
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&b| !self.coords[b].is_zero())
            .collect()
    }
}

impl fmt::Debug for LieVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieVec{:?}", self.coords)
    }
}

impl Add<&LieVec> for &LieVec {
    type Output = LieVec;
    fn add(self, o: &LieVec) -> LieVec {
        LieVec {
            rank: self.rank,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&LieVec> for &LieVec {
    type Output = LieVec;
    fn sub(self, o: &LieVec) -> LieVec {
        LieVec {
            rank: self.rank,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &LieVec {
    type Output = LieVec;
    fn neg(self) -> LieVec {
        LieVec {
            rank: self.rank,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl Add for LieVec {
    type Output = LieVec;
    fn add(self, o: LieVec) -> LieVec {
        &self + &o
    }
}

impl Sub for LieVec {
    type Output = LieVec;
    fn sub(self, o: LieVec) -> LieVec {
        &self - &o
    }
}

impl Neg for LieVec {
    type Output = LieVec;
    fn neg(self) -> LieVec {
        -&self
    }
}
