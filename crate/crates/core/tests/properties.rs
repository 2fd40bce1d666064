use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gradalg::catalog;
use gradalg::galg::{direct_sum, group_algebra, matrix_algebra_elementary, GradedAlgebra};
use gradalg::groups::{enumerate_homs, tietze_simplify, todd_coxeter, FiniteGroup, Group, GroupElement, GroupHom, PresentedGroup, TietzeBudget, Word};
use gradalg::linalg::{Field, Matrix};
use gradalg::morph::GradedMorphism;
use gradalg::sampling::{sample_graded_homs, HomSearch};
use gradalg::supportcat::TripleMorphism;
use gradalg::universal::{regrade_along, universal_group};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..7).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (1usize..4).prop_map(|n| FiniteGroup::symmetric(n).unwrap()),
        (1usize..4, 1usize..4).prop_map(|(a, b)| FiniteGroup::product(&FiniteGroup::cyclic(a).unwrap(), &FiniteGroup::cyclic(b).unwrap())),
        (2usize..5).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
    ]
}

fn word(gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, -3i64..=3), 0..6).prop_map(|p| Word::from_powers(&p))
}

/// A matrix algebra with an elementary grading by a random finite group.
fn elementary() -> impl Strategy<Value = GradedAlgebra> {
    (field(), small_group(), 1usize..4).prop_flat_map(|(f, g, n)| {
        let order = g.order();
        prop::collection::vec(0..order, n).prop_map(move |tuple| {
            let tuple: Vec<GroupElement> = tuple.into_iter().map(GroupElement::Finite).collect();
            matrix_algebra_elementary(f, Group::finite(g.clone()), &tuple).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_algebras_are_graded(f in field(), g in small_group()) {
        let a = group_algebra(f, &g);
        prop_assert!(a.verify_grading().is_ok());
        prop_assert_eq!(a.support().len(), g.order());
        prop_assert_eq!(a.pair_set().len(), g.order() * g.order());
    }

    #[test]
    fn elementary_gradings_are_graded(a in elementary()) {
        prop_assert!(a.verify_grading().is_ok());
        prop_assert!(a.is_unital());
    }

    #[test]
    fn universal_group_relators_hold_in_the_grading_group(a in elementary()) {
        let u = universal_group(&a);
        prop_assert_eq!(u.presentation.generator_count(), a.support().len());
        prop_assert_eq!(u.presentation.relators().len(), a.pair_set().len());
        prop_assert!(u.realization(a.group()).is_ok());
    }

    #[test]
    fn direct_sums_keep_the_universal_group(a in elementary(), n in 1usize..4) {
        let parts = vec![a.clone(); n];
        let s = direct_sum(&parts).unwrap();
        prop_assert!(s.verify_grading().is_ok());
        prop_assert_eq!(s.dim(), n * a.dim());
        prop_assert_eq!(universal_group(&s).presentation, universal_group(&a).presentation);
    }

    #[test]
    fn regrading_is_functorial(f in field(), g in small_group(), h in small_group(), seed in any::<u64>()) {
        let a = group_algebra(f, &g);
        let homs = enumerate_homs(&g, &h).unwrap();
        let i = (seed as usize) % homs.len();
        let phi = GroupHom::new(Group::finite(g.clone()), Group::finite(h.clone()), homs[i].images().to_vec()).unwrap();
        let chi = GroupHom::trivial(phi.codomain(), &Group::trivial());
        let twice = regrade_along(&regrade_along(&a, &phi).unwrap(), &chi).unwrap();
        let once = regrade_along(&a, &chi.after(&phi).unwrap()).unwrap();
        prop_assert_eq!(twice, once);
        prop_assert_eq!(regrade_along(&a, &GroupHom::identity(a.group())).unwrap(), a);
    }

    #[test]
    fn tietze_keeps_abelianization(gens in 1usize..4, rels in prop::collection::vec(word(3), 0..4)) {
        let rels: Vec<Word> = rels.into_iter().filter(|w| w.max_generator().is_none_or(|g| g < gens)).collect();
        let p = PresentedGroup::with_letters(gens, rels);
        let q = tietze_simplify(&p, TietzeBudget::default()).presentation;
        prop_assert_eq!(q.abelianization(), p.abelianization());
    }

    #[test]
    fn coset_tables_of_finite_groups(n in 1usize..13) {
        let p = PresentedGroup::with_letters(1, vec![Word::from_powers(&[(0, n as i64)])]);
        let t = todd_coxeter(&p, 1_000).unwrap();
        prop_assert!(t.verify(&p));
        prop_assert_eq!(t.order(), n);
    }

    #[test]
    fn words_reduce_freely(w in word(3)) {
        prop_assert_eq!(w.mul(&w.inverse()), Word::identity());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.cyclically_reduced().len() <= w.len());
    }

    #[test]
    fn kernel_and_rank_add_up(f in field(), rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-4i64..=4, 16)) {
        let data: Vec<Vec<_>> = (0..rows).map(|i| (0..cols).map(|j| f.from_i64(entries[i * cols + j])).collect()).collect();
        let m = Matrix::from_rows(f, data).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in kernel {
            prop_assert!(m.apply(&v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn sampled_morphisms_compose_into_graded_morphisms(seed in any::<u64>(), f in prop_oneof![Just(Field::Prime(2)), Just(Field::Prime(3))]) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let names = ["fz2", "fz4", "dual_numbers", "example_3_1", "m2_gamma1", "field"];
        let pick = |rng: &mut ChaCha8Rng| {
            use rand::Rng;
            catalog::algebra(names[rng.gen_range(0..names.len())], f).unwrap()
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let search = HomSearch::for_field(f, 4);
        for first in sample_graded_homs(&a, &b, &search, &mut rng) {
            for second in sample_graded_homs(&b, &c, &search, &mut rng) {
                let composite = second.after(&first).unwrap();
                prop_assert!(composite.is_graded());
                let lower = TripleMorphism::of_morphism(&composite).unwrap();
                let upper = TripleMorphism::of_morphism(&second).unwrap().after(&TripleMorphism::of_morphism(&first).unwrap()).unwrap();
                prop_assert!(lower.leq(&upper));
            }
        }
        let id = GradedMorphism::identity(&a);
        prop_assert_eq!(TripleMorphism::of_morphism(&id).unwrap(), TripleMorphism::identity(&gradalg::supportcat::SupportTriple::of_algebra(&a)));
    }
}
