use std::collections::BTreeSet;

use super::{PresentedGroup, Word};

/// Limits for [`tietze_simplify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeBudget {
    /// Maximum number of generator eliminations.
    pub max_eliminations: usize,
    /// Eliminations stop once the total relator length would exceed this.
    pub max_total_length: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget {
            max_eliminations: 1_000,
            max_total_length: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TietzeOutcome {
    pub presentation: PresentedGroup,
    /// Set when the budget stopped simplification before a fixpoint.
    pub exhausted: bool,
}

/// Simplifies a presentation by Tietze moves until a fixpoint:
/// free and cyclic reduction, removal of relators that are trivial or
/// duplicates up to rotation and inversion, and elimination of a generator
/// occurring exactly once in some relator. The lowest eliminable generator
/// goes first, using its shortest defining relator.
pub fn tietze_simplify(p: &PresentedGroup, budget: TietzeBudget) -> TietzeOutcome {
    let mut labels = p.labels().to_vec();
    let mut relators = dedupe(p.relators().to_vec());
    let mut eliminations = 0;
    while let Some((g, r)) = find_elimination(labels.len(), &relators) {
        if eliminations >= budget.max_eliminations {
            return finish(labels, relators, true);
        }
        let replacement = solve_for(&relators[r], g);
        let rest: Vec<Word> = relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, w)| {
                w.substitute(|x| if x == g { replacement.clone() } else { Word::generator(x) })
                    .substitute(|x| Word::generator(if x > g { x - 1 } else { x }))
            })
            .collect();
        if rest.iter().map(Word::len).sum::<usize>() > budget.max_total_length {
            return finish(labels, relators, true);
        }
        labels.remove(g);
        relators = dedupe(rest);
        eliminations += 1;
    }
    finish(labels, relators, false)
}

fn finish(labels: Vec<String>, relators: Vec<Word>, exhausted: bool) -> TietzeOutcome {
    TietzeOutcome {
        presentation: PresentedGroup::new(labels, relators),
        exhausted,
    }
}

/// Cyclically reduces, drops empty relators and duplicates (up to rotation
/// and inversion), and orders relators by length, then canonical form.
fn dedupe(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<Word> = relators
        .into_iter()
        .map(|r| r.cyclically_reduced())
        .filter(|r| !r.is_empty())
        .filter(|r| seen.insert(r.cyclic_canonical()))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cyclic_canonical().cmp(&b.cyclic_canonical())));
    out
}

fn find_elimination(generators: usize, relators: &[Word]) -> Option<(usize, usize)> {
    (0..generators).find_map(|g| {
        relators
            .iter()
            .enumerate()
            .filter(|(_, r)| r.occurrences(g) == 1)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| (g, i))
    })
}

/// From a relator containing `g` exactly once, the word `w` (without `g`)
/// with `g = w` in the group.
fn solve_for(relator: &Word, g: usize) -> Word {
    let pos = relator
        .letters()
        .iter()
        .position(|l| l.generator == g)
        .expect("generator occurs");
    let rotated = relator.rotate(pos);
    // rotated = g^ε · rest = 1, so g^ε = rest⁻¹.
    let rest = Word::new(rotated.letters()[1..].iter().copied());
    if rotated.letters()[0].inverse {
        rest
    } else {
        rest.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[(usize, i64)]) -> Word {
        Word::from_powers(p)
    }

    #[test]
    fn m2_universal_presentation_collapses_to_one_generator() {
        // generators a, b, c; relators from the 2x2 matrix grading by Z
        let (a, b, c) = (0, 1, 2);
        let p = PresentedGroup::with_letters(
            3,
            vec![
                w(&[(c, 1), (c, 1), (c, -1)]),
                w(&[(c, 1), (a, 1), (a, -1)]),
                w(&[(a, 1), (c, 1), (a, -1)]),
                w(&[(c, 1), (b, 1), (b, -1)]),
                w(&[(b, 1), (c, 1), (b, -1)]),
                w(&[(a, 1), (b, 1), (c, -1)]),
                w(&[(b, 1), (a, 1), (c, -1)]),
            ],
        );
        let out = tietze_simplify(&p, TietzeBudget::default());
        assert!(!out.exhausted);
        assert_eq!(out.presentation.generator_count(), 1);
        assert!(out.presentation.relators().is_empty());
        assert_eq!(out.presentation.abelianization(), p.abelianization());
    }

    #[test]
    fn free_presentation_unchanged() {
        let p = PresentedGroup::with_letters(1, vec![]);
        assert_eq!(tietze_simplify(&p, TietzeBudget::default()).presentation, p);
    }

    #[test]
    fn trivial_generator_eliminated() {
        let p = PresentedGroup::with_letters(2, vec![w(&[(1, 1)])]);
        let out = tietze_simplify(&p, TietzeBudget::default()).presentation;
        assert_eq!(out.generator_count(), 1);
        assert_eq!(out.labels(), &["a".to_string()]);
        assert!(out.relators().is_empty());
    }

    #[test]
    fn preserves_abelianization() {
        let cases = vec![
            PresentedGroup::with_letters(2, vec![w(&[(0, 2)]), w(&[(1, 2)]), w(&[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)])]),
            PresentedGroup::with_letters(3, vec![w(&[(0, 1), (1, 1), (2, -1)]), w(&[(2, 6)]), w(&[(0, 3)])]),
            PresentedGroup::with_letters(2, vec![w(&[(0, 1), (1, 2), (0, -1), (1, -3)])]),
        ];
        for p in cases {
            let out = tietze_simplify(&p, TietzeBudget::default());
            assert_eq!(out.presentation.abelianization(), p.abelianization(), "{p}");
        }
    }

    #[test]
    fn budget_flag() {
        let p = PresentedGroup::with_letters(2, vec![w(&[(1, 1)])]);
        let out = tietze_simplify(&p, TietzeBudget { max_eliminations: 0, max_total_length: 10 });
        assert!(out.exhausted);
        assert_eq!(out.presentation.generator_count(), 2);
    }
}
