use serde_json::{json, Value};

use crate::autgrp::{
    chevalley_involution, eval_trace, grading_aut, is_automorphism, torus_aut, weyl_rep, LinMap,
};
use crate::chevalley::{LieAlg, LieVec};
use crate::decomp::{jacobson_morozov, jordan, root_values};
use crate::error::{Error, Result};

/// An automorphism `phi` with `phi(x) = -x`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub map: LinMap,
    pub target: LieVec,
}

impl Witness {
    /// Checks that the map is an automorphism, negates the target, and is the
    /// product of its trace.
    pub fn verify(&self, l: &LieAlg) -> Result<()> {
        if !is_automorphism(l, &self.map.matrix) {
            return Err(Error::SolveFailure("witness is not an automorphism".into()));
        }
        if self.map.apply(&self.target) != -&self.target {
            return Err(Error::SolveFailure("witness does not negate the target".into()));
        }
        if eval_trace(l, &self.map.trace)? != self.map.matrix {
            return Err(Error::SolveFailure("trace does not rebuild the map".into()));
        }
        Ok(())
    }

    pub fn to_json(&self, l: &LieAlg) -> Value {
        json!({
            "target": l.format_vec(&self.target),
            "trace": self.map.trace_json(l),
        })
    }

    /// Matrix entries as strings, row by row.
    pub fn matrix_json(&self) -> Value {
        let m = &self.map.matrix;
        Value::Array(
            (0..m.rows())
                .map(|i| Value::Array(m.row(i).iter().map(|c| json!(c.to_string())).collect()))
                .collect(),
        )
    }
}

/// Grading by the `h` of an sl2-triple at `lambda = i`; `e` has weight 2.
pub fn minus_witness_nilpotent(l: &LieAlg, e: &LieVec) -> Result<Witness> {
    let t = jacobson_morozov(l, e)?;
    let map = grading_aut(l, &t.h, &l.field().imag_unit())?;
    let w = Witness {
        map,
        target: e.clone(),
    };
    w.verify(l)?;
    Ok(w)
}

/// Witness for `x = s + sum_{j in J'} c_j e_{alpha_j}` with `s` in the Cartan
/// subalgebra and `alpha_j(s) = 0`: the composite `t o Ad w_0(J') o omega`.
pub fn minus_witness_normal_form(l: &LieAlg, x: &LieVec) -> Result<Witness> {
    let rs = l.root_system();
    let n = l.rank();
    let f = l.field();
    let s = x.cartan_part();
    let mut jp = Vec::new();
    let mut coef = vec![f.zero(); n];
    for (k, c) in x.e_part().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match (0..n).find(|&i| rs.simple_index(i) == k) {
            Some(i) => {
                jp.push(i);
                coef[i] = c.clone();
            }
            None => {
                return Err(Error::NotNormalForm(format!(
                    "component on e({}) is not a simple root vector",
                    rs.root(k)
                )))
            }
        }
    }
    let vals = root_values(l, &s);
    if let Some(&j) = jp.iter().find(|&&j| !vals[rs.simple_index(j)].is_zero()) {
        return Err(Error::NotNormalForm(format!("alpha{}(s) is nonzero", j + 1)));
    }
    let omega = chevalley_involution(l);
    let map = if jp.is_empty() {
        omega
    } else {
        let w0 = rs.longest_element_of(&jp);
        let inner = weyl_rep(l, &w0).compose(&omega);
        // e_{alpha_j} lands on a multiple of e_{alpha_theta(j)}
        let mut values = vec![f.one(); n];
        for &j in &jp {
            let img = inner.apply(&l.e_simple(j));
            let k = img
                .support()
                .into_iter()
                .next()
                .and_then(|b| l.root_of_basis(b))
                .and_then(|r| (0..n).find(|&i| rs.simple_index(i) == r))
                .ok_or_else(|| Error::SolveFailure("image of a simple root vector".into()))?;
            let landed = img.get(l.e_index(rs.simple_index(k))) * &coef[j];
            values[k] = (-&coef[k]).checked_div(&landed)?;
        }
        torus_aut(l, &values)?.compose(&inner)
    };
    let w = Witness {
        map,
        target: x.clone(),
    };
    w.verify(l)?;
    Ok(w)
}

/// Dispatches on the Jordan decomposition of `x`.
pub fn minus_witness(l: &LieAlg, x: &LieVec) -> Result<Witness> {
    if x.is_zero() {
        let w = Witness {
            map: LinMap::identity(l),
            target: x.clone(),
        };
        w.verify(l)?;
        return Ok(w);
    }
    let p = jordan(l, x)?;
    if p.s.is_zero() {
        return minus_witness_nilpotent(l, x);
    }
    if !p.s.in_cartan() {
        return Err(Error::NotNormalForm(
            "semisimple part is not in the Cartan subalgebra".into(),
        ));
    }
    minus_witness_normal_form(l, x)
}

/// `M o phi o M^{-1}`, a witness for `M x`.
pub fn conjugate_witness(l: &LieAlg, m: &LinMap, w: &Witness) -> Result<Witness> {
    let inv = m
        .inverse()
        .ok_or_else(|| Error::SolveFailure("singular conjugator".into()))?;
    let c = Witness {
        map: m.compose(&w.map).compose(&inv),
        target: m.apply(&w.target),
    };
    c.verify(l)?;
    Ok(c)
}
