//! The method core: Gosper summation, creative telescoping in the `k`
//! shift, certificate verification of the catalog identities, the
//! complementary-weight solver, and constant determination at special
//! parameter values.

mod certify;
mod complement;
mod gosper;
mod linalg;
mod zeilberger;

pub use certify::{certify, CertInput, WzProof};
pub use complement::find_complement;
pub use gosper::{gosper, GosperCert};
#[doc(hidden)]
pub fn decompose_debug(r: &crate::poly::RatFunc) -> gosper::Decomposition {
    gosper::decompose(r, crate::poly::Var::N)
}
pub use zeilberger::{zeilberger, Telescoper};

use thiserror::Error;

use crate::hyperterm::TermError;
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WzError {
    #[error("term has no hypergeometric antidifference")]
    NotGosperSummable,
    #[error("no telescoper up to order {0}")]
    NoTelescoperUpToOrder(usize),
    #[error("certificate verification failed (nonzero symbolic residual)")]
    CertificateFails,
    #[error("boundary term does not vanish")]
    BoundaryNonvanishing,
    #[error("no solution in the supported fields; elimination polynomial: {0}")]
    NoSolutionInSupportedFields(String),
    #[error("complement system is inconsistent")]
    SystemInconsistent,
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
