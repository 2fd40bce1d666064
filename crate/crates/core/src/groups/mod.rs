//! Grading groups and the presented-group toolkit.

mod coset;
mod finite;
mod hom;
mod identify;
mod presentation;
mod species;
mod tietze;
mod word;

pub use coset::{todd_coxeter, CosetTable};
pub use finite::FiniteGroup;
pub use hom::{enumerate_homs, GroupHom, HOM_ENUMERATION_LIMIT};
pub use identify::{identify, identify_with, Identification, IdentifyOptions, Verdict};
pub use presentation::{Abelianization, PresentedGroup};
pub use species::{Group, GroupElement};
pub use tietze::{tietze_simplify, TietzeBudget, TietzeOutcome};
pub use word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not a homomorphism: {0}")]
    NotAHom(String),
    #[error("homomorphisms are not composable")]
    NotComposable,
    #[error("budget exceeded: {0}")]
    Budget(String),
}
