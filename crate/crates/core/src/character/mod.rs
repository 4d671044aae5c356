//! Character values of Sym^r V and Λ^r V through their generating functions,
//! with brute-force trace oracles.

mod gf;
mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use gf::{
    ext_gf_paper, ext_gf_true, ext_gf_with, sym_gf, Binomial, ExtConvention, ExtPolynomial,
    RationalFunction,
};
pub use oracle::{
    brute_force_ext_trace, brute_force_sym_trace, EXT_ORACLE_MAX_N, SYM_ORACLE_MAX_N,
    SYM_ORACLE_MAX_R,
};

use crate::algebra::TruncatedSeries;
use crate::combinatorics::ClassLabel;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharKind {
    Sym,
    Ext,
}

impl fmt::Display for CharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharKind::Sym => "sym",
            CharKind::Ext => "ext",
        })
    }
}

impl FromStr for CharKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sym" => Ok(CharKind::Sym),
            "ext" => Ok(CharKind::Ext),
            other => Err(Error::InvalidInput(format!("unknown kind `{other}`"))),
        }
    }
}

/// χ_0..χ_T (sym) or ψ_0..ψ_T (ext, true convention) on the class `c`.
pub fn char_values(c: &ClassLabel, kind: CharKind, order: usize) -> TruncatedSeries {
    match kind {
        CharKind::Sym => sym_gf(c).expand(order),
        CharKind::Ext => TruncatedSeries::new(ext_gf_true(c).coefficients(order)),
    }
}
