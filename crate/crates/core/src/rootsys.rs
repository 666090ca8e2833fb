//! Cartan matrices, root systems and Weyl group combinatorics.
//!
//! Simple roots follow Bourbaki numbering; in `G2` the first simple root is
//! the short one. The Cartan matrix convention is
//! `a_ij = <alpha_j, alpha_i> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`,
//! with `(alpha_i, alpha_j) = d_i a_ij`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default guard on the Weyl group order for full enumeration.
pub const DEFAULT_MAX_WEYL: u128 = 1_000_000;
/// Default guard on `|Phi|` for exhaustive closed-subset search.
pub const DEFAULT_MAX_ROOTS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::InvalidType(format!("unknown type letter {other:?}"))),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A validated Cartan matrix of finite type with its symmetrizing vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub typ: CartanType,
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    /// Relatively prime positive integers with `diag(d) A` symmetric.
    pub d: Vec<i64>,
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.typ, self.rank)
    }
}

/// Cartan matrix of the given finite type.
pub fn cartan(typ: CartanType, rank: usize) -> Result<CartanData> {
    use CartanType::*;
    let valid = match typ {
        A => rank >= 1,
        B | C => rank >= 2,
        D => rank >= 4,
        E => (6..=8).contains(&rank),
        F => rank == 4,
        G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidType(format!("{typ}{rank} is not a finite type")));
    }
    let n = rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match typ {
        A | B | C => (0..n - 1).for_each(|i| edge(i, i + 1)),
        D => {
            (0..n - 2).for_each(|i| edge(i, i + 1));
            edge(n - 3, n - 1);
        }
        E => {
            edge(0, 2);
            edge(1, 3);
            (2..n - 1).for_each(|i| edge(i, i + 1));
        }
        F => (0..3).for_each(|i| edge(i, i + 1)),
        G => edge(0, 1),
    }
    match typ {
        B => m[n - 1][n - 2] = -2,
        C => m[n - 2][n - 1] = -2,
        F => m[2][1] = -2,
        G => m[0][1] = -3,
        _ => {}
    }
    CartanData::new(typ, m)
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Leading principal minors of an integer matrix, via fraction-free elimination.
fn leading_minors_positive(s: &[Vec<i64>]) -> bool {
    let n = s.len();
    let mut a: Vec<Vec<i128>> = s.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] <= 0 {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    true
}

impl CartanData {
    /// Validates a Cartan matrix and computes its symmetrizer.
    pub fn new(typ: CartanType, matrix: Vec<Vec<i64>>) -> Result<CartanData> {
        let n = matrix.len();
        let bad = |msg: &str| Err(Error::InvalidType(msg.to_string()));
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return bad("Cartan matrix must be square and nonempty");
        }
        for (i, row) in matrix.iter().enumerate() {
            if row[i] != 2 {
                return bad("diagonal entries must be 2");
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j && (a > 0 || (a == 0) != (matrix[j][i] == 0)) {
                    return bad("off-diagonal sign pattern is not a Cartan matrix");
                }
            }
        }
        // symmetrizer by propagation along the Dynkin graph
        let mut num = vec![0i64; n];
        let mut den = vec![0i64; n];
        num[0] = 1;
        den[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || matrix[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (nj, dj) = (num[i] * matrix[i][j], den[i] * matrix[j][i]);
                let g = nj.gcd(&dj);
                let (nj, dj) = (nj / g, dj / g);
                if den[j] == 0 {
                    num[j] = nj;
                    den[j] = dj;
                    queue.push_back(j);
                } else if num[j] * dj != nj * den[j] {
                    return bad("matrix is not symmetrizable");
                }
            }
        }
        if den.contains(&0) {
            return bad("Cartan matrix is decomposable");
        }
        let l = den.iter().fold(1i64, |acc, &x| acc.lcm(&x));
        let mut d: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).collect();
        if d.iter().any(|&x| x <= 0) {
            return bad("symmetrizer is not positive");
        }
        let g = gcd_all(&d);
        d.iter_mut().for_each(|x| *x /= g);
        let sym: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| d[i] * matrix[i][j]).collect())
            .collect();
        if !leading_minors_positive(&sym) {
            return bad("Cartan matrix is not of finite type");
        }
        Ok(CartanData {
            typ,
            rank: n,
            matrix,
            d,
        })
    }

    /// The invariant form `(a, b) = sum a_k b_l d_k a_kl` on root-lattice coordinates.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (k, &ak) in a.iter().enumerate() {
            if ak == 0 {
                continue;
            }
            for (l, &bl) in b.iter().enumerate() {
                s += ak * bl * self.d[k] * self.matrix[k][l];
            }
        }
        s
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let n = self.rank;
        match self.typ {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u128 << n) * fact(n),
            CartanType::D => (1u128 << (n - 1)) * fact(n),
            CartanType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1_152,
            CartanType::G => 12,
        }
    }
}

/// A root as an integer coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Root {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// Total order: by height, then with larger leading coefficients first, so
/// that `alpha_1 < alpha_2 < ... < alpha_n` among the simple roots.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `alpha1+alpha2`, `3alpha1+2alpha2`, `-alpha1-alpha2`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}alpha{}", k + 1)?;
            } else {
                write!(f, "{sign}{mag}alpha{}", k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An element of the Weyl group as a reduced word together with its matrix on
/// the root lattice (columns are images of simple roots).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylWord {
    /// Zero-based simple reflection indices; `[i, j]` means `s_i s_j`.
    pub word: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl WeylWord {
    pub fn identity(rank: usize) -> WeylWord {
        WeylWord {
            word: Vec::new(),
            matrix: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&r.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// One-based word, e.g. `s1 s2 s1`.
    pub fn display_word(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// The root system of a Cartan matrix with a fixed total order on roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanData,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    neg: Vec<usize>,
    simple: Vec<usize>,
}

impl RootSystem {
    pub fn new(cartan: CartanData) -> RootSystem {
        let pos = generate_positive(&cartan);
        let mut roots: Vec<Root> = pos.iter().map(Root::neg).collect();
        roots.extend(pos);
        roots.sort();
        let index: HashMap<Root, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let neg = roots.iter().map(|r| index[&r.neg()]).collect();
        let simple = (0..cartan.rank)
            .map(|i| index[&Root::simple(cartan.rank, i)])
            .collect();
        RootSystem {
            cartan,
            roots,
            index,
            neg,
            simple,
        }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// All roots in the fixed order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of `-roots[k]`.
    pub fn neg_index(&self, k: usize) -> usize {
        self.neg[k]
    }

    /// Index of the simple root `alpha_i` (zero-based `i`).
    pub fn simple_index(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Positive roots sorted by height, then coefficients.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&k| self.roots[k].is_positive()).collect()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn highest_root(&self) -> &Root {
        self.roots.last().expect("nonempty root system")
    }

    /// `(a, b)` for root-lattice vectors.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        self.cartan.form(&a.0, &b.0)
    }

    /// The integer `<beta, alpha> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> i64 {
        let num = 2 * self.form(beta, alpha);
        let den = self.form(alpha, alpha);
        debug_assert_eq!(num % den, 0, "pairing of lattice vector with root is integral");
        num / den
    }

    /// `s_alpha(beta) = beta - <beta, alpha> alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Root {
        beta.sub(&alpha.scale(self.pairing(beta, alpha)))
    }

    /// Largest `(p, q)` with `beta - p alpha, ..., beta + q alpha` all roots.
    pub fn alpha_chain(&self, alpha: &Root, beta: &Root) -> Result<(i64, i64)> {
        if !self.contains(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        if !self.contains(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        if *beta == *alpha || *beta == alpha.neg() {
            return Err(Error::DependentRoots);
        }
        let mut p = 0;
        while self.contains(&beta.sub(&alpha.scale(p + 1))) {
            p += 1;
        }
        let mut q = 0;
        while self.contains(&beta.add(&alpha.scale(q + 1))) {
            q += 1;
        }
        Ok((p, q))
    }

    /// Matrix of `s_i` on the root lattice.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
            .collect();
        // s_i(alpha_j) = alpha_j - a_ij alpha_i
        for (j, col_val) in self.cartan.matrix[i].iter().enumerate() {
            m[i][j] -= col_val;
        }
        m
    }

    /// Builds the element `s_{w[0]} s_{w[1]} ...`.
    pub fn weyl_word(&self, word: &[usize]) -> WeylWord {
        let mut w = WeylWord::identity(self.rank());
        for &i in word {
            w.matrix = mat_mul(&w.matrix, &self.simple_reflection_matrix(i));
        }
        w.word = word.to_vec();
        w
    }

    pub fn inverse(&self, w: &WeylWord) -> WeylWord {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.weyl_word(&rev)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: &WeylWord) -> usize {
        self.positive_roots()
            .iter()
            .filter(|r| !w.apply(r).is_positive())
            .count()
    }

    /// `{alpha > 0 : w^{-1} alpha < 0}` as root indices in order.
    pub fn inversion_set(&self, w: &WeylWord) -> Vec<usize> {
        let winv = self.inverse(w);
        self.positive_indices()
            .into_iter()
            .filter(|&k| !winv.apply(&self.roots[k]).is_positive())
            .collect()
    }

    /// All elements as shortlex-first reduced words, by breadth-first search.
    pub fn weyl_enumerate(&self, limit: u128) -> Result<Vec<WeylWord>> {
        let order = self.cartan.weyl_order();
        if order > limit {
            return Err(Error::WeylTooLarge { order, limit });
        }
        let n = self.rank();
        // w is determined by the image of the regular vector 2 rho
        let two_rho = self
            .positive_roots()
            .iter()
            .fold(Root(vec![0; n]), |acc, r| acc.add(r));
        let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|i| self.simple_reflection_matrix(i)).collect();
        let mut seen: HashSet<Root> = HashSet::new();
        let id = WeylWord::identity(n);
        seen.insert(id.apply(&two_rho));
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&w.matrix, g);
                let cand = WeylWord {
                    word: w.word.iter().copied().chain([i]).collect(),
                    matrix: m,
                };
                if seen.insert(cand.apply(&two_rho)) {
                    out.push(cand);
                }
            }
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }

    /// The longest element, by right descent until every simple root is sent
    /// negative.
    pub fn longest_element(&self) -> WeylWord {
        self.longest_element_of(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Longest element of the parabolic subgroup generated by `J`.
    pub fn longest_element_of(&self, j: &[usize]) -> WeylWord {
        let mut w = WeylWord::identity(self.rank());
        loop {
            let next = j
                .iter()
                .copied()
                .find(|&i| w.apply(&self.simple_root(i)).is_positive());
            match next {
                Some(i) => {
                    w.matrix = mat_mul(&w.matrix, &self.simple_reflection_matrix(i));
                    w.word.push(i);
                }
                None => return w,
            }
        }
    }

    /// The permutation `theta` of simple indices with `-w_0(alpha_i) = alpha_theta(i)`.
    pub fn opposite_involution(&self) -> Vec<usize> {
        let w0 = self.longest_element();
        (0..self.rank())
            .map(|i| {
                let img = w0.apply(&self.simple_root(i)).neg();
                (0..self.rank())
                    .find(|&j| img == self.simple_root(j))
                    .expect("-w0 permutes the simple roots")
            })
            .collect()
    }

    /// Roots supported on `J`.
    pub fn levi_roots(&self, j: &[usize]) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&k| {
                self.roots[k]
                    .0
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || j.contains(&i))
            })
            .collect()
    }

    /// `(dim P/R_uP, dim R_uP/(R_uP)')` for the standard parabolic of `J`:
    /// the Levi dimension `n + |Phi_J|` and the number of positive roots of
    /// `J`-level one.
    pub fn parabolic_dims(&self, j: &[usize]) -> (usize, usize) {
        let levi = self.rank() + self.levi_roots(j).len();
        let level_one = self
            .positive_roots()
            .iter()
            .filter(|r| {
                r.0.iter()
                    .enumerate()
                    .filter(|(i, _)| !j.contains(i))
                    .map(|(_, &c)| c)
                    .sum::<i64>()
                    == 1
            })
            .count();
        (levi, level_one)
    }

    pub fn is_distinguished(&self, j: &[usize]) -> bool {
        let (a, b) = self.parabolic_dims(j);
        a == b
    }

    /// Permutations of the simple indices preserving the Cartan matrix.
    pub fn diagram_symmetries(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let a = &self.cartan.matrix;
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(
            a: &[Vec<i64>],
            perm: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            let k = perm.len();
            let n = a.len();
            if k == n {
                out.push(perm.clone());
                return;
            }
            for c in 0..n {
                if used[c] {
                    continue;
                }
                if (0..k).all(|i| a[perm[i]][c] == a[i][k] && a[c][perm[i]] == a[k][i]) {
                    used[c] = true;
                    perm.push(c);
                    rec(a, perm, used, out);
                    perm.pop();
                    used[c] = false;
                }
            }
        }
        rec(a, &mut perm, &mut used, &mut out);
        out
    }

    pub fn is_diagram_symmetry(&self, delta: &[usize]) -> bool {
        let n = self.rank();
        if delta.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &d in delta {
            if d >= n || seen[d] {
                return false;
            }
            seen[d] = true;
        }
        let a = &self.cartan.matrix;
        (0..n).all(|i| (0..n).all(|j| a[delta[i]][delta[j]] == a[i][j]))
    }

    /// Exhaustive search over all `S` with `S` closed and `S` disjoint from
    /// `-S`. Returns the maximum size and all maximizers as sorted index lists.
    pub fn closed_subsets_max(&self, limit: usize) -> Result<(usize, Vec<Vec<usize>>)> {
        let total = self.roots.len();
        if total > limit || total > 40 {
            return Err(Error::TooLarge {
                roots: total,
                limit: limit.min(40),
            });
        }
        let pos = self.positive_indices();
        // sums[a] = (b, c) with roots[a] + roots[b] = roots[c]
        let sums: Vec<Vec<(usize, usize)>> = (0..total)
            .map(|a| {
                (0..total)
                    .filter_map(|b| {
                        self.index_of(&self.roots[a].add(&self.roots[b])).map(|c| (b, c))
                    })
                    .collect()
            })
            .collect();
        let is_closed = |mask: u64| {
            let mut m = mask;
            while m != 0 {
                let a = m.trailing_zeros() as usize;
                m &= m - 1;
                for &(b, c) in &sums[a] {
                    if mask >> b & 1 == 1 && mask >> c & 1 == 0 {
                        return false;
                    }
                }
            }
            true
        };
        let mut best = 0usize;
        let mut maximizers: Vec<u64> = Vec::new();
        // each positive root contributes: absent, itself, or its negative
        let k = pos.len();
        let mut digits = vec![0u8; k];
        loop {
            let mut mask = 0u64;
            let mut size = 0;
            for (t, &d) in digits.iter().enumerate() {
                match d {
                    1 => {
                        mask |= 1 << pos[t];
                        size += 1;
                    }
                    2 => {
                        mask |= 1 << self.neg[pos[t]];
                        size += 1;
                    }
                    _ => {}
                }
            }
            if size >= best && is_closed(mask) {
                if size > best {
                    best = size;
                    maximizers.clear();
                }
                maximizers.push(mask);
            }
            // increment base-3 counter
            let mut t = 0;
            while t < k && digits[t] == 2 {
                digits[t] = 0;
                t += 1;
            }
            if t == k {
                break;
            }
            digits[t] += 1;
        }
        let mut sets: Vec<Vec<usize>> = maximizers
            .into_iter()
            .map(|m| (0..total).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        sets.sort();
        Ok((best, sets))
    }
}

/// Positive roots by height induction: `beta + alpha_i` is a root iff the
/// `alpha_i`-string through `beta` extends upward (`q = p - <beta, alpha_i> > 0`).
fn generate_positive(c: &CartanData) -> Vec<Root> {
    let n = c.rank;
    let mut known: HashSet<Root> = HashSet::new();
    let mut layer: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let ai = Root::simple(n, i);
                if *beta == ai {
                    continue;
                }
                let mut p = 0;
                while known.contains(&beta.sub(&ai.scale(p + 1))) {
                    p += 1;
                }
                // <beta, alpha_i> = sum_k m_k a_ik
                let pair: i64 = (0..n).map(|k| beta.0[k] * c.matrix[i][k]).sum();
                if p - pair > 0 {
                    next.push(beta.add(&ai));
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    all.sort();
    all
}
