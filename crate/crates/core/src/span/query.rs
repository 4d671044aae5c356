use serde::{Deserialize, Serialize};

use super::bounds::Bound;
use crate::arith::require_prime;
use crate::character::CharKind;
use crate::error::{Error, Result};

/// One span-dimension question: D(n,k), E(n,k), B(p,n) or B(p,n,k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpanQuery {
    pub kind: CharKind,
    pub n: usize,
    pub k: u32,
    /// Present for Brauer characters in characteristic `p`.
    pub p: Option<u64>,
}

impl SpanQuery {
    pub fn sym(n: usize, k: u32) -> Self {
        SpanQuery {
            kind: CharKind::Sym,
            n,
            k,
            p: None,
        }
    }

    pub fn ext(n: usize, k: u32) -> Self {
        SpanQuery {
            kind: CharKind::Ext,
            n,
            k,
            p: None,
        }
    }

    pub fn brauer(p: u64, n: usize, k: u32) -> Self {
        SpanQuery {
            kind: CharKind::Sym,
            n,
            k,
            p: Some(p),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidInput("n must be >= 1".into()));
        }
        if self.k == 0 {
            return Err(Error::InvalidInput("k must be >= 1".into()));
        }
        if let Some(p) = self.p {
            require_prime(p)?;
            if self.kind == CharKind::Ext {
                return Err(Error::InvalidInput(
                    "exterior-power Brauer spans are not supported".into(),
                ));
            }
        }
        Ok(())
    }

    /// The smallest rank-faithful truncation order: deg(common denominator) - n
    /// for symmetric spans, n for exterior spans.
    pub fn default_truncation(&self) -> usize {
        match self.kind {
            CharKind::Ext => self.n,
            CharKind::Sym => sym_truncation(self.n, self.k),
        }
    }
}

/// k n(n+1)/2 - n.
pub fn sym_truncation(n: usize, k: u32) -> usize {
    k as usize * n * (n + 1) / 2 - n
}

/// The computed dimension together with every applicable bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    #[serde(flatten)]
    pub query: SpanQuery,
    pub dimension: usize,
    /// Exterior spans only: the dimension under the opposite sign convention.
    pub ext_paper_dimension: Option<usize>,
    pub num_classes: u64,
    pub truncation: usize,
    pub bounds: Vec<Bound>,
    pub elapsed_ms: u64,
}

impl DimensionReport {
    /// The first enforced bound that fails, if any.
    pub fn violation(&self) -> Option<&str> {
        self.bounds
            .iter()
            .find(|b| !b.informational && !b.satisfied)
            .map(|b| b.name.as_str())
    }

    pub fn bound(&self, name: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Copy with the timing field cleared, for comparisons.
    pub fn without_timing(&self) -> Self {
        DimensionReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}
