//! Optimal extendibility values on graphs.
//!
//! Closed forms live in [`closed_form`]; [`dual`] solves the
//! one-dimensional dual problems exactly through [`envelope`] over the
//! irrep-pair families of [`omega`]; [`states`] builds explicit global
//! states (primal certificates and lower bounds); [`oracle`] computes the
//! same quantities numerically from Hamiltonian spectra; and
//! [`brauer_states`] handles the two-parameter Brauer family.

pub mod brauer_states;
pub mod closed_form;
pub mod dual;
pub mod envelope;
pub mod omega;
pub mod oracle;
pub mod states;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Rational, Result};

pub use brauer_states::{brauer_is_separable, is_positive_brauer_prime, BrauerParams, Direction};
pub use closed_form::{
    asymptotic_limit, p_b_complete, p_iso, p_iso_bipartite, p_iso_prime, p_w_complete, value, Limit, LN_2,
};
pub use dual::{iso_dual_numeric, isotropic_dual_minimax, q0_dual_value};
pub use envelope::{minimize_max, AffineFn, EnvelopeMin};
pub use oracle::{conjecture_probe, cycle_werner_value, p_avg_numeric, ProbeReport, Which};
pub use states::{matching_lower_bound_state, reduced_state, werner_primal_certificate};

/// The two-qudit state family whose extendibility is optimized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateFamily {
    Werner,
    Brauer,
    Isotropic,
    IsotropicPrime,
}

impl StateFamily {
    pub const ALL: [StateFamily; 4] = [
        StateFamily::Werner,
        StateFamily::Brauer,
        StateFamily::Isotropic,
        StateFamily::IsotropicPrime,
    ];

    pub fn symbol(&self) -> &'static str {
        match self {
            StateFamily::Werner => "p_W",
            StateFamily::Brauer => "p_B",
            StateFamily::Isotropic => "p_I",
            StateFamily::IsotropicPrime => "p'_I",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateFamily::Werner => "werner",
            StateFamily::Brauer => "brauer",
            StateFamily::Isotropic => "isotropic",
            StateFamily::IsotropicPrime => "isotropic_prime",
        })
    }
}

impl FromStr for StateFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "werner" | "w" => Ok(StateFamily::Werner),
            "brauer" | "b" => Ok(StateFamily::Brauer),
            "isotropic" | "i" => Ok(StateFamily::Isotropic),
            "isotropic_prime" | "iprime" | "i'" => Ok(StateFamily::IsotropicPrime),
            other => Err(Error::Parse(format!("unknown state family `{other}`"))),
        }
    }
}

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    NumericOracle,
    MinimaxDual,
    PrimalCertificate,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::NumericOracle => "numeric_oracle",
            Method::MinimaxDual => "minimax_dual",
            Method::PrimalCertificate => "primal_certificate",
        })
    }
}

/// An exact optimal value with provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendibilityValue {
    pub value: Rational,
    pub family: StateFamily,
    /// Human-readable graph label, e.g. `K_5` or `K_{2,3}`.
    pub graph: String,
    pub n: usize,
    pub d: usize,
    pub method: Method,
    pub certificate: Option<String>,
}

impl ExtendibilityValue {
    pub fn as_f64(&self) -> f64 {
        crate::operator::to_f64(self.value)
    }
}

pub(crate) fn check_nd(n: usize, d: usize) -> Result<()> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidParameters(format!("need n ≥ 2 and d ≥ 2, got n = {n}, d = {d}")));
    }
    Ok(())
}

/// `|E(K_n)| = n(n − 1)/2`.
pub(crate) fn complete_edges(n: usize) -> i128 {
    (n * (n - 1) / 2) as i128
}
