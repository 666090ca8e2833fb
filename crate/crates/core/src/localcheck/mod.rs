//! Verification suites for the local-automorphism results and the witnesses
//! they produce.

mod campo;
mod closure;
mod corpus;
mod dkk;
mod opposite;
mod scalar;
mod structure;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::chevalley::LieAlg;
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::rootsys::{DEFAULT_MAX_ROOTS, DEFAULT_MAX_WEYL};

pub use campo::{campo_suite, chain_check, ChainCheck};
pub use closure::closure_suite;
pub use corpus::{inversa_corpus, inversa_corpus_suite, CorpusCase, MAX_CORPUS_RANK};
pub use dkk::dkk_suite;
pub use opposite::opposite_suite;
pub use scalar::{scalar_local_test, scalar_local_test_at, scalar_suite, scalar_test_set};
pub use structure::{chevalley_identity_check, structure_suite, weyl_action_check};
pub use witness::{
    conjugate_witness, minus_witness, minus_witness_nilpotent, minus_witness_normal_form,
    Witness,
};

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub input: Value,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> SuiteReport {
        let passed = cases.iter().filter(|c| c.pass).count();
        SuiteReport {
            suite: suite.to_string(),
            summary: Summary {
                total: cases.len(),
                passed,
            },
            cases,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

pub(crate) fn case(id: impl Into<String>, input: Value, pass: bool, detail: Value) -> CaseRecord {
    CaseRecord {
        id: id.into(),
        input,
        pass,
        detail,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Jacobi,
    Closure,
    Inversa,
    Scalari,
    Campo,
    Dkk,
    Opposite,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Jacobi,
        Suite::Closure,
        Suite::Inversa,
        Suite::Scalari,
        Suite::Campo,
        Suite::Dkk,
        Suite::Opposite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Closure => "closure",
            Suite::Inversa => "inversa",
            Suite::Scalari => "scalari",
            Suite::Campo => "campo",
            Suite::Dkk => "dkk",
            Suite::Opposite => "opposite",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "automorphism-closure" | "automorphism_closure" => "closure",
            "scalar" => "scalari",
            other => other,
        };
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == alias)
            .ok_or_else(|| Error::NotApplicable(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Sample scalars for the line identities of the campo suite.
    pub samples: Vec<Scalar>,
    pub max_weyl: u128,
    pub max_roots: usize,
    /// Number of sampled (automorphism, element) pairs in the closure suite.
    pub closure_samples: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(l: &LieAlg) -> SuiteConfig {
        let f = l.field();
        SuiteConfig {
            samples: vec![f.int(1), f.int(2), f.frac(1, 2), f.zeta_power(1)],
            max_weyl: DEFAULT_MAX_WEYL,
            max_roots: DEFAULT_MAX_ROOTS,
            closure_samples: 100,
            seed: 0x5eed,
        }
    }
}

/// Runs one suite. Errors mean the suite does not apply to this input.
pub fn run_suite(l: &LieAlg, suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Jacobi => structure_suite(l, cfg),
        Suite::Closure => closure_suite(l, cfg),
        Suite::Inversa => inversa_corpus_suite(l),
        Suite::Scalari => scalar_suite(l),
        Suite::Campo => campo_suite(l, cfg),
        Suite::Dkk => dkk_suite(l, cfg),
        Suite::Opposite => Ok(opposite_suite(l.root_system())),
    }
}
