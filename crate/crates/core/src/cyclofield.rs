//! Exact arithmetic in the cyclotomic field `Q(z)`, `z` a primitive `N`-th
//! root of unity.
//!
//! Elements are stored as the unique residue modulo the `N`-th cyclotomic
//! polynomial, i.e. a vector of `phi(N)` rational coefficients over
//! `1, z, ..., z^(phi(N)-1)`. Equality is coefficient-wise.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default order of the root of unity adjoined to `Q`.
pub const DEFAULT_ORDER: u32 = 24;

/// Precomputed data for one field order.
#[derive(Debug)]
pub struct Cyclo {
    n: u32,
    phi: usize,
    /// Coefficients of the cyclotomic polynomial, low degree first.
    modulus: Vec<BigInt>,
    /// `powers[k]` is `z^k` reduced, for `0 <= k < n`.
    powers: Vec<Vec<BigInt>>,
}

static REGISTRY: OnceLock<Mutex<Vec<&'static Cyclo>>> = OnceLock::new();

/// Handle to an interned cyclotomic field. Cheap to copy.
#[derive(Clone, Copy)]
pub struct CycloField(&'static Cyclo);

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}
impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.n)
    }
}

impl Default for CycloField {
    fn default() -> Self {
        CycloField::new(DEFAULT_ORDER).expect("default order is valid")
    }
}

/// Integer polynomial `x^n - 1` divided by `Phi_d` for every proper divisor `d`.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

impl Cyclo {
    fn build(n: u32) -> Cyclo {
        let modulus = cyclotomic_poly(n);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by z and reduce the overflow term
            let top = cur[phi - 1].clone();
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..phi {
                    cur[j] -= &top * &modulus[j];
                }
            }
        }
        Cyclo { n, phi, modulus, powers }
    }
}

impl CycloField {
    /// Interned field of order `n`; `n` must be a positive multiple of 4.
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(4) {
            return Err(Error::InvalidFieldOrder(n));
        }
        let reg = REGISTRY.get_or_init(|| Mutex::new(Vec::new()));
        let mut reg = reg.lock().expect("field registry poisoned");
        if let Some(c) = reg.iter().find(|c| c.n == n) {
            return Ok(CycloField(c));
        }
        let leaked: &'static Cyclo = Box::leak(Box::new(Cyclo::build(n)));
        reg.push(leaked);
        Ok(CycloField(leaked))
    }

    pub fn order(&self) -> u32 {
        self.0.n
    }

    /// Degree of the field over `Q` (Euler's totient of the order).
    pub fn degree(&self) -> usize {
        self.0.phi
    }

    /// Coefficients of the cyclotomic polynomial, low degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: *self,
            coeffs: vec![BigRational::zero(); self.0.phi],
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        self.rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Embeds a rational number.
    pub fn rational(&self, q: BigRational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    /// `z^k`, any integer `k`.
    pub fn zeta_power(&self, k: i64) -> Scalar {
        let idx = k.rem_euclid(self.0.n as i64) as usize;
        Scalar {
            field: *self,
            coeffs: self.0.powers[idx]
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// A square root of `-1`, namely `z^(N/4)`.
    pub fn imag_unit(&self) -> Scalar {
        self.zeta_power(self.0.n as i64 / 4)
    }

    /// A primitive root of unity of the given order, if the field contains one.
    pub fn root_of_unity(&self, order: u32) -> Result<Scalar> {
        if order == 0 || !self.0.n.is_multiple_of(order) {
            return Err(Error::UnrepresentableScalar {
                n: self.0.n,
                what: format!("primitive root of unity of order {order}"),
            });
        }
        Ok(self.zeta_power((self.0.n / order) as i64))
    }

    /// Units modulo `N` in increasing order: the Galois group of the field.
    pub fn galois_indices(&self) -> Vec<i64> {
        let n = self.0.n as i64;
        (1..n).filter(|k| k.gcd(&n) == 1).collect()
    }

    /// Field automorphism `z -> z^k`.
    pub fn galois_apply(&self, k: i64, a: &Scalar) -> Result<Scalar> {
        let n = self.0.n as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, n: self.0.n });
        }
        self.check(a)?;
        let mut out = vec![BigRational::zero(); self.0.phi];
        for (j, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((j as i64) * k).rem_euclid(n) as usize;
            for (o, p) in out.iter_mut().zip(&self.0.powers[idx]) {
                if !p.is_zero() {
                    *o += c * BigRational::from_integer(p.clone());
                }
            }
        }
        Ok(Scalar { field: *self, coeffs: out })
    }

    /// Builds a scalar from coefficients over `1, z, z^2, ...`, reducing as needed.
    pub fn from_poly(&self, coeffs: &[BigRational]) -> Scalar {
        let mut out = self.zero();
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = self.zeta_power(j as i64);
            out += &z.scale(c);
        }
        out
    }

    fn check(&self, a: &Scalar) -> Result<()> {
        if a.field != *self {
            return Err(Error::FieldMismatch(self.0.n, a.field.0.n));
        }
        Ok(())
    }
}

/// An element of `Q(z)`.
#[derive(Clone)]
pub struct Scalar {
    field: CycloField,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl Scalar {
    pub fn field(&self) -> CycloField {
        self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// The integer value, if the element is a machine-sized integer.
    pub fn as_i64(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return self.field.zero();
        }
        Scalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        match k {
            0 => self.field.zero(),
            1 => self.clone(),
            -1 => -self,
            _ => self.scale(&BigRational::from_integer(BigInt::from(k))),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(self.field.rational(self.coeffs[0].recip()));
        }
        // extended Euclid in Q[x] against the cyclotomic polynomial
        let m: Vec<BigRational> = self
            .field
            .modulus()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        let (g, s) = ext_gcd(a, m);
        // g is a nonzero constant because the modulus is irreducible
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let s: Vec<BigRational> = s.into_iter().map(|c| c * &ginv).collect();
        Ok(self.field.from_poly(&s))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// `(a mod b, a div b)` for rational polynomials, `b` nonzero.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (r, vec![BigRational::zero()]);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() && !poly_is_zero(&r) {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[shift + j] -= t;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (r, trim(q))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Returns `(g, s)` with `s*a = g (mod m)`.
fn ext_gcd(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !poly_is_zero(&r1) {
        let (rem, q) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (trim(r0), s0)
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    assert!(a.field == b.field, "mixed cyclotomic field orders");
    if a.is_zero() || b.is_zero() {
        return a.field.zero();
    }
    if a.is_rational() {
        return b.scale(&a.coeffs[0]);
    }
    if b.is_rational() {
        return a.scale(&b.coeffs[0]);
    }
    let phi = a.field.degree();
    let mut wide = vec![BigRational::zero(); 2 * phi - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                wide[i + j] += x * y;
            }
        }
    }
    let mut out: Vec<BigRational> = wide[..phi].to_vec();
    let powers = &a.field.0.powers;
    for (k, c) in wide.iter().enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        for (o, p) in out.iter_mut().zip(&powers[k]) {
            if !p.is_zero() {
                *o += c * BigRational::from_integer(p.clone());
            }
        }
    }
    Scalar {
        field: a.field,
        coeffs: out,
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "mixed cyclotomic field orders");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "mixed cyclotomic field orders");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        mul_ref(self, rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as a polynomial in `z`, e.g. `1/2 - z + 3*z^5`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            let body = if j == 0 {
                fmt_rational(&abs)
            } else if abs.is_one() {
                mono
            } else {
                format!("{}*{}", fmt_rational(&abs), mono)
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f24() -> CycloField {
        CycloField::new(24).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(24), ints(&[1, 0, 0, 0, -1, 0, 0, 0, 1]));
        assert_eq!(f24().degree(), 8);
    }

    #[test]
    fn rational_embedding() {
        let f = f24();
        assert!(f.int(1).is_one());
        assert!(f.int(0).is_zero());
        let half = f.frac(1, 2);
        assert_eq!(half.coeffs()[0], BigRational::new(1.into(), 2.into()));
        assert!(half.coeffs()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn zeta_powers() {
        let f = f24();
        assert!(f.zeta_power(0).is_one());
        assert_eq!(f.zeta_power(12), f.int(-1));
        let i = f.zeta_power(6);
        assert_eq!(&i * &i, f.int(-1));
        assert_eq!(f.zeta_power(-1), f.zeta_power(23));
        assert_eq!(f.zeta_power(5) * f.zeta_power(7), f.zeta_power(12));
    }

    #[test]
    fn inverses() {
        let f = f24();
        let i = f.imag_unit();
        assert_eq!(i.inv().unwrap(), -&i);
        assert!((&i * &(-&i)).is_one());
        let a = f.frac(3, 7);
        assert!((&a * &a.inv().unwrap()).is_one());
        let z = f.zeta_power(1);
        assert!((&z + &(-&z)).is_zero());
        let w = &f.one() + &z;
        assert!((&w * &w.inv().unwrap()).is_one());
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn galois_action() {
        let f = f24();
        let i = f.imag_unit();
        assert_eq!(f.galois_apply(1, &i).unwrap(), i);
        let conj = f.galois_apply(23, &i).unwrap();
        assert_eq!(conj, -&i);
        assert_eq!(&conj * &conj, f.int(-1));
        assert!(matches!(f.galois_apply(2, &i), Err(Error::NotCoprime { .. })));
        assert_eq!(f.galois_indices(), vec![1, 5, 7, 11, 13, 17, 19, 23]);
    }

    #[test]
    fn field_order_must_be_multiple_of_four() {
        assert!(CycloField::new(6).is_err());
        assert!(CycloField::new(0).is_err());
        let f8 = CycloField::new(8).unwrap();
        assert_eq!(f8.degree(), 4);
        assert_eq!(f8.imag_unit().pow(2).unwrap(), f8.int(-1));
        assert!(f8.root_of_unity(3).is_err());
        assert!(f24().root_of_unity(3).is_ok());
    }

    #[test]
    fn display() {
        let f = f24();
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(f.frac(-1, 2).to_string(), "-1/2");
        let s = &f.frac(1, 2) - &f.zeta_power(1).scale_int(3);
        assert_eq!(s.to_string(), "1/2 - 3*z");
        assert_eq!(f.zeta_power(5).to_string(), "z^5");
    }
}
