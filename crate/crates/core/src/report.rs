//! Pass/fail reports with exact counterexample witnesses.

use std::fmt;

use crate::scalar::Scalar;

/// Counterexample for a failed check: the identity that failed, the basis
/// tuple (plus any auxiliary integer parameters such as affinization grades)
/// and the exact nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub indices: Vec<i64>,
    pub residual: Vec<Scalar>,
}

/// Outcome of a single check. `pass` is true exactly when no witness exists;
/// witnesses always carry a nonzero residual and are the lexicographically
/// first failing tuple, so failures are deterministic and diffable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            pass: true,
            witness: None,
        }
    }

    pub fn fail(identity: impl Into<String>, indices: Vec<i64>, residual: Vec<Scalar>) -> Self {
        debug_assert!(residual.iter().any(|s| !s.is_zero()));
        CheckReport {
            pass: false,
            witness: Some(Witness {
                identity: identity.into(),
                indices,
                residual,
            }),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass"),
            Some(w) => {
                let res: Vec<String> = w.residual.iter().map(|s| s.to_string()).collect();
                write!(
                    f,
                    "fail: {} at {:?} with residual [{}]",
                    w.identity,
                    w.indices,
                    res.join(", ")
                )
            }
        }
    }
}
