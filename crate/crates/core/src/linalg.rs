//! Dense exact matrices over the cyclotomic field and canonical subspaces.

use std::fmt;

use crate::cyclofield::{CycloField, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: CycloField,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a list of rows, in place. Returns pivot columns.
/// Zero rows are removed.
pub fn rref_rows(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                let t = &factor * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl Matrix {
    pub fn zeros(field: CycloField, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: CycloField, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: CycloField, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols,
            field,
            data,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: CycloField, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: CycloField, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.int(x)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> CycloField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// True when every entry is a (machine) integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.as_i64().is_some())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let support: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for (k, row_support) in support.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in row_support {
                    let t = a * other.get(k, j);
                    out.data[i * other.cols + j] += &t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            if !a.is_zero() {
                *a = &*a * c;
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -&*a;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form and pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        (Matrix::from_rows(self.field, self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace; one vector per free column, with that
    /// free variable set to 1 and the others to 0.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, fc);
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`, returning the solution with every free variable
    /// set to zero, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = rows[row][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv_rows = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, inv_rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// A subspace of `K^d`, stored as the reduced row echelon form of a basis.
/// The form is canonical, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: CycloField,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient)?;
        for r in &self.basis {
            let row: Vec<String> = r.iter().map(|s| s.to_string()).collect();
            write!(f, " [{}]", row.join(", "))?;
        }
        write!(f, " ]")
    }
}

impl Subspace {
    pub fn zero(field: CycloField, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: CycloField, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        Subspace::span(field, ambient, id.to_rows())
    }

    pub fn span(field: CycloField, ambient: usize, mut vectors: Vec<Vec<Scalar>>) -> Subspace {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let pivots = rref_rows(&mut vectors, ambient);
        Subspace {
            ambient,
            field,
            basis: vectors,
            pivots,
        }
    }

    /// The line spanned by one vector (zero subspace for the zero vector).
    pub fn line(field: CycloField, v: Vec<Scalar>) -> Subspace {
        let d = v.len();
        Subspace::span(field, d, vec![v])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> CycloField {
        self.field
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if r[pc].is_zero() {
                continue;
            }
            let c = r[pc].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&c * b);
                }
            }
        }
        r.iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, rows)
    }

    /// Intersection via the left nullspace of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        let k1 = self.dim();
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let m = Matrix::from_rows(self.field, self.ambient, stacked).transpose();
        let vectors = m
            .nullspace()
            .into_iter()
            .map(|coef| {
                let mut v = vec![self.field.zero(); self.ambient];
                for (c, row) in coef[..k1].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(row) {
                        if !b.is_zero() {
                            *x += &(c * b);
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.ambient, vectors)
    }

    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vectors = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field, m.rows(), vectors)
    }

    /// Applies a coefficient-wise map to every basis vector and re-spans.
    pub fn map_coefficients<F>(&self, mut f: F) -> Subspace
    where
        F: FnMut(&Scalar) -> Scalar,
    {
        let vectors = self
            .basis
            .iter()
            .map(|v| v.iter().map(&mut f).collect())
            .collect();
        Subspace::span(self.field, self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> CycloField {
        CycloField::default()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f().int(x)).collect()
    }

    #[test]
    fn inverse_and_product() {
        let m = Matrix::from_i64(f(), &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = Matrix::from_i64(f(), &[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = Matrix::from_i64(f(), &[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        let x = m.solve(&ints(&[6, 12])).unwrap();
        assert_eq!(x, ints(&[6, 0, 0]));
        assert!(m.solve(&ints(&[1, 0])).is_none());
    }

    #[test]
    fn subspace_algebra() {
        let a = Subspace::span(f(), 3, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let b = Subspace::span(f(), 3, vec![ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::span(f(), 3, vec![ints(&[0, 5, 0])]));
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.contains(&ints(&[3, -2, 0])));
        assert!(!a.contains(&ints(&[0, 0, 1])));
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(f(), 3, vec![ints(&[1, 1, 0]), ints(&[1, -1, 2])]);
        let b = Subspace::span(f(), 3, vec![ints(&[2, 0, 2]), ints(&[0, 2, -2])]);
        assert_eq!(a, b);
    }
}
