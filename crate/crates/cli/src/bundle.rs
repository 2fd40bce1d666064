//! The example documents shipped in `data/`, all over Q.

use gradalg::catalog;
use gradalg::groups::{Group, GroupElement, GroupHom};
use gradalg::linalg::{Field, Matrix};
use gradalg::morph::GradedMorphism;

use crate::format::{render_algebra, render_group_hom, render_hom};

/// `(file name, contents)` for every bundled document.
pub fn documents() -> Vec<(String, String)> {
    let q = Field::Rational;
    let mut out: Vec<(String, String)> = catalog::ALGEBRA_NAMES
        .iter()
        .map(|name| {
            let a = catalog::algebra(name, q).expect("catalog entry");
            (format!("{name}.json"), render_algebra(&a))
        })
        .collect();
    let (g1, g2) = (catalog::m2_gamma1(q), catalog::m2_gamma2_s3(q));
    let id = GradedMorphism::new(g1, g2, Matrix::identity(q, 4)).expect("identity is a homomorphism");
    let p54 = catalog::prop_5_4(q);
    let homs = [
        ("hom_m2_identity.json", id),
        ("hom_example_3_1_phi.json", catalog::example_3_1(q).1),
        ("hom_example_5_7_pi.json", catalog::example_5_7(q)),
        ("hom_augmentation_z2.json", catalog::augmentation(q, 2)),
        ("hom_prop_5_4_alpha.json", p54.alpha),
        ("hom_prop_5_4_beta.json", p54.beta),
    ];
    out.extend(homs.iter().map(|(n, h)| (n.to_string(), render_hom(h))));
    let z2 = Group::cyclic(2).expect("Z/2");
    let group_homs = [
        (
            "ghom_z_to_z2.json",
            GroupHom::new(Group::integers(), z2.clone(), vec![GroupElement::Finite(1)]).expect("hom"),
        ),
        ("ghom_z2_to_trivial.json", GroupHom::trivial(&z2, &Group::trivial())),
    ];
    out.extend(group_homs.iter().map(|(n, h)| (n.to_string(), render_group_hom(h))));
    out.sort();
    out
}
