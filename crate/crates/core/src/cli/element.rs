//! Grammar for algebra elements on the command line.
//!
//! ```text
//! sum     := ['+' | '-'] product (('+' | '-') product)*
//! product := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | atom
//! atom    := integer | '(' sum ')' | 'z' ['^' ['-'] integer] | 'zeta' ... | 'i'
//!          | 'h' integer | 'h' '(' root ')' | 'e' integer | 'e' '(' root ')'
//!          | 'f' integer | 'f' '(' root ')' | 'e' | 'f' | 'h'
//! root    := ['+' | '-'] rterm (('+' | '-') rterm)* | integer (',' integer)*
//! rterm   := [integer ['*']] 'alpha' integer
//! ```
//!
//! `z` is the primitive root of unity of the field, `i = z^(N/4)`. `e_k` and
//! `f_k` are `e_{alpha_k}` and `e_{-alpha_k}`, `h(root)` is the coroot. The
//! bare letters `e`, `f`, `h` are the rank-one shorthands. Positions in
//! errors are one-based character columns.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chevalley::{LieAlg, LieVec};
use crate::cyclofield::{CycloField, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::Root;

#[derive(Clone, Debug)]
enum Val {
    S(Scalar),
    V(LieVec),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    field: CycloField,
    alg: Option<&'a LieAlg>,
}

/// Parses an element of the algebra.
pub fn parse_element(l: &LieAlg, src: &str) -> Result<LieVec> {
    let mut p = Parser::new(src, l.field(), Some(l));
    let start = p.peek_pos();
    let v = p.sum()?;
    p.expect_end()?;
    match v {
        Val::V(v) => Ok(v),
        Val::S(s) if s.is_zero() => Ok(l.zero()),
        Val::S(_) => Err(p.err_at(start, "expected an algebra element, found a scalar")),
    }
}

/// Parses a field element such as `1/2 - 3*z` or `z^5`.
pub fn parse_scalar(field: CycloField, src: &str) -> Result<Scalar> {
    let mut p = Parser::new(src, field, None);
    let start = p.peek_pos();
    let v = p.sum()?;
    p.expect_end()?;
    match v {
        Val::S(s) => Ok(s),
        Val::V(_) => Err(p.err_at(start, "expected a scalar")),
    }
}

impl<'a> Parser<'a> {
    fn new(src: &str, field: CycloField, alg: Option<&'a LieAlg>) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            field,
            alg,
        }
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: pos + 1,
            msg: msg.into(),
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    /// Next character without skipping whitespace.
    fn raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.found();
            Err(self.err(format!("expected '{c}'{found}")))
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of input".into(),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn small_int(&mut self, what: &str) -> Result<i64> {
        self.skip_ws();
        let at = self.pos;
        let d = self.digits().ok_or_else(|| self.err(format!("expected {what}")))?;
        d.parse::<i64>().map_err(|_| self.err_at(at, format!("{what} out of range")))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.raw().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn sum(&mut self) -> Result<Val> {
        let mut acc = if self.eat('-') {
            neg(self.product()?)
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            let at = self.peek_pos();
            let sign = match self.peek() {
                Some('+') => 1,
                Some('-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.product()?;
            let rhs = if sign < 0 { neg(rhs) } else { rhs };
            acc = match (acc, rhs) {
                (Val::S(a), Val::S(b)) => Val::S(&a + &b),
                (Val::V(a), Val::V(b)) => Val::V(&a + &b),
                _ => return Err(self.err_at(at, "cannot add a scalar and an algebra element")),
            };
        }
    }

    fn product(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        loop {
            let at = self.peek_pos();
            let div = match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    false
                }
                Some('/') => {
                    self.pos += 1;
                    true
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => false,
                _ => return Ok(acc),
            };
            let rhs = self.unary()?;
            acc = match (acc, rhs, div) {
                (Val::S(a), Val::S(b), true) => {
                    Val::S(a.checked_div(&b).map_err(|_| self.err_at(at, "division by zero"))?)
                }
                (Val::V(a), Val::S(b), true) => {
                    let inv = b.inv().map_err(|_| self.err_at(at, "division by zero"))?;
                    Val::V(a.scale(&inv))
                }
                (_, Val::V(_), true) => {
                    return Err(self.err_at(at, "cannot divide by an algebra element"))
                }
                (Val::S(a), Val::S(b), false) => Val::S(&a * &b),
                (Val::S(a), Val::V(b), false) | (Val::V(b), Val::S(a), false) => {
                    Val::V(b.scale(&a))
                }
                (Val::V(_), Val::V(_), false) => {
                    return Err(self.err_at(at, "cannot multiply two algebra elements"))
                }
            };
        }
    }

    fn unary(&mut self) -> Result<Val> {
        if self.eat('-') {
            return Ok(neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Val> {
        let at = self.peek_pos();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                let n: BigInt = d.parse().expect("decimal digits");
                Ok(Val::S(self.field.rational(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                self.named(&name, at)
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }

    fn named(&mut self, name: &str, at: usize) -> Result<Val> {
        match name {
            "z" | "zeta" => {
                let k = if self.eat('^') {
                    let neg = self.eat('-');
                    let k = self.small_int("an exponent")?;
                    if neg {
                        -k
                    } else {
                        k
                    }
                } else {
                    1
                };
                Ok(Val::S(self.field.zeta_power(k)))
            }
            "i" => Ok(Val::S(self.field.imag_unit())),
            "h" | "e" | "f" => self.basis_atom(name, at),
            "alpha" => Err(self.err_at(at, "roots are only allowed inside e(...), f(...) or h(...)")),
            other => Err(self.err_at(at, format!("unknown identifier '{other}'"))),
        }
    }

    fn alg(&self, at: usize) -> Result<&'a LieAlg> {
        self.alg
            .ok_or_else(|| self.err_at(at, "algebra elements are not allowed here"))
    }

    fn basis_atom(&mut self, name: &str, at: usize) -> Result<Val> {
        let l = self.alg(at)?;
        let n = l.rank();
        let index = |p: &Self, k: i64| -> Result<usize> {
            if k >= 1 && (k as usize) <= n {
                Ok(k as usize - 1)
            } else {
                Err(p.err_at(at, format!("index {k} out of range 1..={n}")))
            }
        };
        if self.raw().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.small_int("an index")?;
            let i = index(self, k)?;
            return Ok(Val::V(match name {
                "h" => l.h(i),
                "e" => l.e_simple(i),
                _ => l.f_simple(i),
            }));
        }
        if self.raw() == Some('(') {
            self.pos += 1;
            let r = self.root(n)?;
            self.expect(')')?;
            let r = if name == "f" { r.neg() } else { r };
            let v = if name == "h" { l.coroot(&r) } else { l.e(&r) };
            return v
                .map(Val::V)
                .map_err(|_| self.err_at(at, format!("{r} is not a root")));
        }
        if n != 1 {
            return Err(self.err_at(at, format!("bare '{name}' needs rank 1; write {name}1 or {name}(...)")));
        }
        Ok(Val::V(match name {
            "h" => l.h(0),
            "e" => l.e_simple(0),
            _ => l.f_simple(0),
        }))
    }

    /// Root in `alpha` notation or as a coordinate tuple.
    fn root(&mut self, n: usize) -> Result<Root> {
        let start = self.peek_pos();
        let tuple = self.chars[start..]
            .iter()
            .take_while(|&&c| c != ')')
            .any(|&c| c == ',')
            || (n == 1 && !self.chars[start..].iter().take_while(|&&c| c != ')').any(|&c| c == 'a'));
        if tuple {
            let mut coords = Vec::new();
            loop {
                let neg = self.eat('-');
                let k = self.small_int("a root coordinate")?;
                coords.push(if neg { -k } else { k });
                if !self.eat(',') {
                    break;
                }
            }
            if coords.len() != n {
                return Err(self.err_at(start, format!("root needs {n} coordinates, got {}", coords.len())));
            }
            return Ok(Root(coords));
        }
        let mut coords = vec![0i64; n];
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            first = false;
            self.skip_ws();
            let mult = if self.raw().is_some_and(|c| c.is_ascii_digit()) {
                let m = self.small_int("a multiplicity")?;
                self.eat('*');
                m
            } else {
                1
            };
            let at = self.peek_pos();
            if self.ident() != "alpha" {
                return Err(self.err_at(at, "expected 'alpha'"));
            }
            let k = self.small_int("a simple root index")?;
            if k < 1 || k as usize > n {
                return Err(self.err_at(at, format!("simple root index {k} out of range 1..={n}")));
            }
            coords[k as usize - 1] += sign * mult;
        }
        Ok(Root(coords))
    }
}

fn neg(v: Val) -> Val {
    match v {
        Val::S(s) => Val::S(-&s),
        Val::V(v) => Val::V(-&v),
    }
}
