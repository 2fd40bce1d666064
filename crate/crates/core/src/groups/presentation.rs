use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::Word;
use crate::linalg::{smith_normal_form, IntMatrix};

/// A finitely presented group `⟨generators | relators⟩`. Relators are kept
/// freely and cyclically reduced and empty relators are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedGroup {
    labels: Vec<String>,
    relators: Vec<Word>,
}

/// Invariants of the abelianization `Z^rank ⊕ ⊕ Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl PresentedGroup {
    pub fn new(labels: Vec<String>, relators: Vec<Word>) -> PresentedGroup {
        let n = labels.len();
        assert!(
            relators.iter().all(|r| r.max_generator().is_none_or(|g| g < n)),
            "relator mentions an undeclared generator"
        );
        PresentedGroup {
            labels,
            relators: relators
                .into_iter()
                .map(|r| r.cyclically_reduced())
                .filter(|r| !r.is_empty())
                .collect(),
        }
    }

    /// Generators named `a, b, c, ...` (or `g1, g2, ...` past 26).
    pub fn with_letters(generators: usize, relators: Vec<Word>) -> PresentedGroup {
        let labels = (0..generators)
            .map(|i| {
                if generators <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("g{}", i + 1)
                }
            })
            .collect();
        PresentedGroup::new(labels, relators)
    }

    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator exponent-sum matrix (one row per relator), reduced by Smith
    /// normal form.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.generator_count();
        let rows: Vec<Vec<BigInt>> = self
            .relators
            .iter()
            .map(|r| (0..n).map(|g| BigInt::from(r.exponent_sum(g))).collect())
            .collect();
        if rows.is_empty() || n == 0 {
            return Abelianization {
                free_rank: n,
                torsion: Vec::new(),
            };
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(rows));
        Abelianization {
            free_rank: n - snf.diagonal.len(),
            torsion: snf.diagonal.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    /// Renames generator `i` to generator `map[i]` of a presentation with
    /// `labels` as its generator names.
    pub fn relabel(&self, map: &[usize], labels: Vec<String>) -> PresentedGroup {
        assert_eq!(map.len(), self.generator_count());
        let relators = self
            .relators
            .iter()
            .map(|r| r.substitute(|g| Word::generator(map[g])))
            .collect();
        PresentedGroup::new(labels, relators)
    }

    /// Relators up to rotation and inversion, as a sorted multiset.
    pub fn canonical_relators(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.relators.iter().map(Word::cyclic_canonical).collect();
        v.sort();
        v
    }

    /// Whether renaming generator `i` to `map[i]` turns this presentation
    /// into `other`, comparing relators as multisets up to rotation and
    /// inversion.
    pub fn equal_under_relabeling(&self, other: &PresentedGroup, map: &[usize]) -> bool {
        if self.generator_count() != other.generator_count() || map.len() != self.generator_count() {
            return false;
        }
        let mut seen = vec![false; map.len()];
        for &m in map {
            if m >= seen.len() || std::mem::replace(&mut seen[m], true) {
                return false;
            }
        }
        self.relabel(map, other.labels.clone()).canonical_relators() == other.canonical_relators()
    }

    /// Total relator length.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display_with(&self.labels))
            .collect();
        write!(f, "< {} | {} >", self.labels.join(", "), rels.join(", "))
    }
}
