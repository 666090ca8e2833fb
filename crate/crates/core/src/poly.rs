//! Univariate polynomials over the cyclotomic field and characteristic
//! polynomials of matrices.

use crate::cyclofield::{CycloField, Scalar};
use crate::linalg::Matrix;

/// Coefficients low degree first; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: CycloField,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: CycloField, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: CycloField) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: CycloField) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    /// `x - c`.
    pub fn linear(c: &Scalar) -> Poly {
        let f = c.field();
        Poly::new(f, vec![-c, f.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in o.coeffs.iter().enumerate() {
            out[i] -= b;
        }
        Poly::new(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.scale_int(i as i64))
            .collect();
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().expect("nonzero").inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &inv;
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                r[k - dd + j] -= &t;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: the product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// Characteristic polynomial `det(x I - M)` via reduction to upper Hessenberg form.
pub fn charpoly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let f = m.field();
    let n = m.rows();
    let mut h = m.to_rows();
    for col in 0..n.saturating_sub(2) {
        let piv = (col + 1..n).find(|&i| !h[i][col].is_zero());
        let Some(p) = piv else { continue };
        if p != col + 1 {
            h.swap(p, col + 1);
            for row in h.iter_mut() {
                row.swap(p, col + 1);
            }
        }
        let inv = h[col + 1][col].inv().expect("pivot is nonzero");
        for k in col + 2..n {
            if h[k][col].is_zero() {
                continue;
            }
            let u = &h[k][col] * &inv;
            // row_k -= u row_{col+1}
            let pivot_row = h[col + 1].clone();
            for (x, y) in h[k].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&u * y);
                }
            }
            // col_{col+1} += u col_k
            for row in h.iter_mut() {
                if !row[k].is_zero() {
                    let t = &u * &row[k];
                    row[col + 1] += &t;
                }
            }
        }
    }
    let mut p: Vec<Poly> = vec![Poly::one(f)];
    for k in 1..=n {
        let mut pk = Poly::linear(&h[k - 1][k - 1]).mul(&p[k - 1]);
        let mut prod = f.one();
        for i in 1..k {
            prod = &prod * &h[k - i][k - i - 1];
            if prod.is_zero() {
                break;
            }
            let c = &h[k - 1 - i][k - 1] * &prod;
            if !c.is_zero() {
                pk = pk.sub(&p[k - 1 - i].scale(&c));
            }
        }
        p.push(pk);
    }
    p.pop().expect("nonempty")
}
