use proptest::prelude::*;

use gradalg::galg::{direct_sum, group_algebra, matrix_algebra_elementary, GradedAlgebra};
use gradalg::groups::{FiniteGroup, Group, GroupElement, GroupHom, Word};
use gradalg::linalg::Field;
use gradalg::morph::GradedMorphism;
use gradalg_cli::format::{parse_algebra, parse_group_hom, parse_hom, render_algebra, render_group_hom, render_hom};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(7))]
}

fn degree(group: Group) -> BoxedStrategy<GroupElement> {
    match group {
        Group::Finite(g) => (0..g.order()).prop_map(GroupElement::Finite).boxed(),
        Group::FreeAbelian(k) => prop::collection::vec(-3i64..=3, k).prop_map(GroupElement::Abelian).boxed(),
        Group::Free(k) => prop::collection::vec((0..k, -2i64..=2), 0..4)
            .prop_map(|p| GroupElement::Word(Word::from_powers(&p)))
            .boxed(),
    }
}

fn group() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..6).prop_map(|n| Group::cyclic(n).unwrap()),
        (1usize..4).prop_map(|n| Group::symmetric(n).unwrap()),
        (2usize..4).prop_map(|n| Group::finite(FiniteGroup::dihedral(n).unwrap())),
        (1usize..3).prop_map(Group::FreeAbelian),
        (1usize..3).prop_map(Group::Free),
    ]
}

fn algebra() -> impl Strategy<Value = GradedAlgebra> {
    (field(), group(), 1usize..4, 1usize..3).prop_flat_map(|(f, g, n, copies)| {
        prop::collection::vec(degree(g.clone()), n).prop_map(move |tuple| {
            let m = matrix_algebra_elementary(f, g.clone(), &tuple).unwrap();
            if copies == 1 {
                m
            } else {
                direct_sum(&vec![m; copies]).unwrap()
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebras_round_trip(a in algebra()) {
        let text = render_algebra(&a);
        prop_assert_eq!(parse_algebra(&text).unwrap(), a);
        prop_assert_eq!(render_algebra(&parse_algebra(&text).unwrap()), text);
    }

    #[test]
    fn identity_homs_round_trip(a in algebra()) {
        let id = GradedMorphism::identity(&a);
        prop_assert_eq!(parse_hom(&render_hom(&id), None).unwrap(), id);
    }

    #[test]
    fn group_homs_round_trip(n in 1usize..7, m in 1usize..7, k in 0usize..7) {
        let (g, h) = (FiniteGroup::cyclic(n).unwrap(), FiniteGroup::cyclic(m).unwrap());
        let homs = gradalg::groups::enumerate_homs(&g, &h).unwrap();
        let phi = &homs[k % homs.len()];
        let phi = GroupHom::new(Group::finite(g), Group::finite(h), phi.images().to_vec()).unwrap();
        prop_assert_eq!(parse_group_hom(&render_group_hom(&phi)).unwrap(), phi);
    }

    #[test]
    fn group_algebras_round_trip(f in field(), a in 1usize..4, b in 1usize..4) {
        let g = FiniteGroup::product(&FiniteGroup::cyclic(a).unwrap(), &FiniteGroup::cyclic(b).unwrap());
        let fg = group_algebra(f, &g);
        prop_assert_eq!(parse_algebra(&render_algebra(&fg)).unwrap(), fg);
    }
}
