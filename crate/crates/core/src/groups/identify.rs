use std::fmt;

use super::{todd_coxeter, tietze_simplify, CosetTable, PresentedGroup, TietzeBudget};

/// Isomorphism type certified for a presented group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    Free { rank: usize },
    Finite { order: usize },
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => write!(f, "trivial"),
            Verdict::Free { rank } => write!(f, "free of rank {rank}"),
            Verdict::Finite { order } => write!(f, "finite of order {order}"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentifyOptions {
    pub tietze: TietzeBudget,
    pub max_cosets: usize,
}

impl Default for IdentifyOptions {
    fn default() -> Self {
        IdentifyOptions {
            tietze: TietzeBudget::default(),
            max_cosets: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Identification {
    pub verdict: Verdict,
    pub simplified: PresentedGroup,
    /// The completed coset table of `simplified`, when enumeration finished.
    pub coset_table: Option<CosetTable>,
}

pub fn identify(p: &PresentedGroup) -> Identification {
    identify_with(p, IdentifyOptions::default())
}

/// Tietze simplification, then: no relators left means free (trivial on
/// zero generators); otherwise Todd–Coxeter; otherwise unknown.
pub fn identify_with(p: &PresentedGroup, options: IdentifyOptions) -> Identification {
    let simplified = tietze_simplify(p, options.tietze).presentation;
    if simplified.relators().is_empty() {
        let rank = simplified.generator_count();
        let verdict = if rank == 0 {
            Verdict::Trivial
        } else {
            Verdict::Free { rank }
        };
        return Identification {
            verdict,
            simplified,
            coset_table: None,
        };
    }
    match todd_coxeter(&simplified, options.max_cosets) {
        Ok(table) if table.verify(&simplified) => Identification {
            verdict: match table.order() {
                1 => Verdict::Trivial,
                order => Verdict::Finite { order },
            },
            simplified,
            coset_table: Some(table),
        },
        _ => Identification {
            verdict: Verdict::Unknown,
            simplified,
            coset_table: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Word;

    fn w(p: &[(usize, i64)]) -> Word {
        Word::from_powers(p)
    }

    #[test]
    fn verdicts() {
        assert_eq!(identify(&PresentedGroup::with_letters(0, vec![])).verdict, Verdict::Trivial);
        assert_eq!(identify(&PresentedGroup::with_letters(2, vec![])).verdict, Verdict::Free { rank: 2 });
        let s3 = PresentedGroup::with_letters(2, vec![w(&[(0, 2)]), w(&[(1, 2)]), w(&[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)])]);
        assert_eq!(identify(&s3).verdict, Verdict::Finite { order: 6 });
        let killed = PresentedGroup::with_letters(1, vec![w(&[(0, 3)]), w(&[(0, 2)])]);
        assert_eq!(identify(&killed).verdict, Verdict::Trivial);
    }

    #[test]
    fn infinite_with_relators_is_unknown() {
        let z2 = PresentedGroup::with_letters(2, vec![w(&[(0, 1), (1, 1), (0, -1), (1, -1)])]);
        let opts = IdentifyOptions { max_cosets: 500, ..IdentifyOptions::default() };
        assert_eq!(identify_with(&z2, opts).verdict, Verdict::Unknown);
    }

    #[test]
    fn display() {
        assert_eq!(Verdict::Free { rank: 1 }.to_string(), "free of rank 1");
        assert_eq!(Verdict::Finite { order: 6 }.to_string(), "finite of order 6");
    }
}
