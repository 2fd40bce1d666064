//! Small graded algebras and morphisms used throughout the examples,
//! tests and bundled documents.

use crate::galg::{group_algebra, matrix_algebra_elementary, quotient, GradedAlgebra, Products};
use crate::groups::{FiniteGroup, Group, GroupElement, Word};
use crate::linalg::{Field, Vector};
use crate::morph::GradedMorphism;

/// Names accepted by [`algebra`].
pub const ALGEBRA_NAMES: &[&str] = &[
    "m2_gamma1",
    "m2_gamma2_s3",
    "example_3_1",
    "example_5_7_A",
    "example_5_7_B",
    "prop_5_2_A",
    "prop_5_2_B",
    "prop_5_2_C",
    "prop_5_4_A",
    "prop_5_4_B",
    "prop_5_4_D",
    "prop_6_4_FGxH",
    "prop_6_4_FGxFH",
    "prop_6_5_A0",
    "prop_6_5_A1",
    "prop_6_5_A2",
    "prop_6_5_B",
    "prop_6_6_A",
    "prop_6_6_B",
    "field",
    "fz2",
    "fz3",
    "fz4",
    "fz2xz2",
    "fs3",
    "dual_numbers",
];

pub fn algebra(name: &str, field: Field) -> Option<GradedAlgebra> {
    let a = match name {
        "m2_gamma1" => m2_gamma1(field),
        "m2_gamma2_s3" => m2_gamma2_s3(field),
        "example_3_1" => example_3_1(field).0,
        "example_5_7_A" => example_5_7(field).domain().clone(),
        "example_5_7_B" => example_5_7(field).codomain().clone(),
        "prop_5_2_A" => prop_5_2(field).a,
        "prop_5_2_B" => prop_5_2(field).b,
        "prop_5_2_C" => prop_5_2(field).c,
        "prop_5_4_A" => prop_5_4(field).a,
        "prop_5_4_B" => prop_5_4(field).b,
        "prop_5_4_D" => prop_5_4(field).d,
        "prop_6_4_FGxH" => prop_6_4(field).group_algebra,
        "prop_6_4_FGxFH" => prop_6_4(field).componentwise,
        "prop_6_5_A0" => prop_6_5(field).a0,
        "prop_6_5_A1" => prop_6_5(field).a1,
        "prop_6_5_A2" => prop_6_5(field).a2,
        "prop_6_5_B" => prop_6_5(field).b,
        "prop_6_6_A" => prop_6_6(field).a,
        "prop_6_6_B" => prop_6_6(field).b,
        "field" => group_algebra(field, &cyclic(1)),
        "fz2" => group_algebra(field, &cyclic(2)),
        "fz3" => group_algebra(field, &cyclic(3)),
        "fz4" => group_algebra(field, &cyclic(4)),
        "fz2xz2" => group_algebra(field, &klein()),
        "fs3" => group_algebra(field, &FiniteGroup::symmetric(3).expect("S3")),
        "dual_numbers" => presented(field, Group::cyclic(2).expect("Z/2"), &[("1", fin(0)), ("t", fin(1))], &[]),
        _ => return None,
    };
    Some(a)
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).expect("positive order")
}

fn klein() -> FiniteGroup {
    FiniteGroup::product(&cyclic(2), &cyclic(2))
}

fn fin(i: usize) -> GroupElement {
    GroupElement::Finite(i)
}

fn free(letters: &[(usize, i64)]) -> GroupElement {
    GroupElement::Word(Word::from_powers(letters))
}

/// Builds an algebra from labelled homogeneous basis vectors and the
/// nonzero products `x·y = z` among them; every other product of basis
/// vectors is zero. A basis vector labelled `1` is the unit.
pub fn presented(field: Field, group: Group, basis: &[(&str, GroupElement)], products: &[(&str, &str, &str)]) -> GradedAlgebra {
    let index = |l: &str| basis.iter().position(|(m, _)| *m == l).expect("label in basis");
    let unit = basis.iter().position(|(l, _)| *l == "1");
    let mut table: Products = products
        .iter()
        .map(|(x, y, z)| (index(x), index(y), vec![(index(z), field.one())]))
        .collect();
    if let Some(u) = unit {
        for i in 0..basis.len() {
            table.push((u, i, vec![(i, field.one())]));
            if i != u {
                table.push((i, u, vec![(i, field.one())]));
            }
        }
    }
    let unit_vector = unit.map(|u| {
        let mut v = vec![field.zero(); basis.len()];
        v[u] = field.one();
        v
    });
    GradedAlgebra::new_verified(
        field,
        group,
        basis.iter().map(|(l, _)| l.to_string()).collect(),
        basis.iter().map(|(_, d)| d.clone()).collect(),
        table,
        unit_vector,
    )
    .expect("catalog algebra is a graded algebra")
}

/// Sends basis vector `i` of `domain` to `images[i]`, given by labels of
/// `codomain` (`"0"` for zero).
pub fn by_labels(domain: &GradedAlgebra, codomain: &GradedAlgebra, images: &[(&str, &str)]) -> GradedMorphism {
    let columns: Vec<Vector> = (0..domain.dim())
        .map(|i| {
            let target = images
                .iter()
                .find(|(l, _)| *l == domain.label(i))
                .map_or("0", |(_, t)| *t);
            if target == "0" {
                codomain.zero()
            } else {
                codomain.basis_vector(codomain.index_of(target).expect("label in codomain"))
            }
        })
        .collect();
    GradedMorphism::from_images(domain.clone(), codomain.clone(), &columns).expect("catalog morphism is a homomorphism")
}

/// `M₂(F)` with `deg e₁₂ = 1`, `deg e₂₁ = −1` over `Z`.
pub fn m2_gamma1(field: Field) -> GradedAlgebra {
    matrix_algebra_elementary(field, Group::integers(), &[GroupElement::int(1), GroupElement::int(0)]).expect("elementary grading")
}

/// `M₂(F)` with `deg e₁₂ = (132)`, `deg e₂₁ = (123)` in `S₃`.
pub fn m2_gamma2_s3(field: Field) -> GradedAlgebra {
    let s3 = FiniteGroup::symmetric(3).expect("S3");
    let c = s3.index_of_label("(132)").expect("3-cycle");
    let e = s3.identity();
    matrix_algebra_elementary(field, Group::finite(s3), &[fin(c), fin(e)]).expect("elementary grading")
}

/// `F1 ⊕ Fa ⊕ Fb` over `Z/2` with `a, b` odd and all products of `a, b`
/// zero, and `φ: 1 ↦ 1, a ↦ b, b ↦ 0`.
pub fn example_3_1(field: Field) -> (GradedAlgebra, GradedMorphism) {
    let a = presented(field, Group::cyclic(2).expect("Z/2"), &[("1", fin(0)), ("a", fin(1)), ("b", fin(1))], &[]);
    let phi = by_labels(&a, &a, &[("1", "1"), ("a", "b")]);
    (a, phi)
}

/// The projection `A → A/(a₁ + a₂ + a₃)` for `A = F1 ⊕ Fa₁ ⊕ Fa₂ ⊕ Fa₃`
/// over `Z/4`, the quotient being trivially graded.
pub fn example_5_7(field: Field) -> GradedMorphism {
    let a = presented(
        field,
        Group::cyclic(4).expect("Z/4"),
        &[("1", fin(0)), ("a1", fin(1)), ("a2", fin(2)), ("a3", fin(3))],
        &[],
    );
    let sum: Vector = vec![field.zero(), field.one(), field.one(), field.one()];
    let q = quotient(&a, &[sum]).expect("ideal");
    GradedMorphism::new(a, q.algebra, q.projection).expect("projection is a homomorphism")
}

/// The augmentation `FZ/n → F`.
pub fn augmentation(field: Field, n: usize) -> GradedMorphism {
    let a = group_algebra(field, &cyclic(n));
    let f = group_algebra(field, &cyclic(1));
    GradedMorphism::from_images(a, f, &vec![vec![field.one()]; n]).expect("augmentation is a homomorphism")
}

pub struct Prop52 {
    pub a: GradedAlgebra,
    pub b: GradedAlgebra,
    pub c: GradedAlgebra,
    pub alpha: GradedMorphism,
    pub beta: GradedMorphism,
}

/// `A = ⟨1, a, b, c, d, cd⟩` over `C₃`, `B = ⟨1, v⟩`, and `C` graded by the
/// free group on `X, Z` with the maps `α: A → C`, `β: B → C`.
pub fn prop_5_2(field: Field) -> Prop52 {
    let c3 = Group::cyclic(3).expect("C3");
    let a = presented(
        field,
        c3,
        &[("1", fin(0)), ("a", fin(1)), ("b", fin(2)), ("c", fin(1)), ("d", fin(2)), ("cd", fin(0))],
        &[("c", "d", "cd"), ("d", "c", "cd")],
    );
    let b = presented(field, Group::trivial(), &[("1", fin(0)), ("v", fin(0))], &[]);
    let one = free(&[]);
    let (x, z) = (free(&[(0, 1)]), free(&[(1, 1)]));
    let c = presented(
        field,
        Group::Free(2),
        &[
            ("1", one.clone()),
            ("x", x.clone()),
            ("y", one),
            ("z", z.clone()),
            ("xy", x.clone()),
            ("yz", z.clone()),
            ("zy", z.clone()),
            ("yx", x),
            ("xyz", free(&[(0, 1), (1, 1)])),
            ("zyx", free(&[(1, 1), (0, 1)])),
        ],
        &[
            ("x", "y", "xy"),
            ("y", "z", "yz"),
            ("z", "y", "zy"),
            ("y", "x", "yx"),
            ("xy", "z", "xyz"),
            ("x", "yz", "xyz"),
            ("zy", "x", "zyx"),
            ("z", "yx", "zyx"),
        ],
    );
    let alpha = by_labels(&a, &c, &[("1", "1"), ("a", "x"), ("b", "z")]);
    let beta = by_labels(&b, &c, &[("1", "1"), ("v", "y")]);
    Prop52 { a, b, c, alpha, beta }
}

pub struct Prop54 {
    pub a: GradedAlgebra,
    pub b: GradedAlgebra,
    pub d: GradedAlgebra,
    pub alpha: GradedMorphism,
    pub beta: GradedMorphism,
    pub phi: GradedMorphism,
    pub theta: GradedMorphism,
}

/// `B = ⟨1, a, b, c, d⟩` over the free group on `x, y` with square-zero
/// augmentation ideal, its subalgebras `A = ⟨1, a, b⟩`, `D = ⟨1, a⟩` and
/// the maps `α, β: A → B`, `φ: B → D`, `θ: B → A`.
pub fn prop_5_4(field: Field) -> Prop54 {
    let (one, x, y) = (free(&[]), free(&[(0, 1)]), free(&[(1, 1)]));
    let b = presented(
        field,
        Group::Free(2),
        &[("1", one.clone()), ("a", x.clone()), ("b", y.clone()), ("c", x.clone()), ("d", y.clone())],
        &[],
    );
    let a = presented(field, Group::Free(2), &[("1", one.clone()), ("a", x.clone()), ("b", y)], &[]);
    let d = presented(field, Group::Free(2), &[("1", one), ("a", x)], &[]);
    let alpha = by_labels(&a, &b, &[("1", "1"), ("a", "a"), ("b", "b")]);
    let beta = by_labels(&a, &b, &[("1", "1"), ("a", "b"), ("b", "a")]);
    let phi = by_labels(&b, &d, &[("1", "1"), ("a", "a"), ("b", "a"), ("c", "a"), ("d", "a")]);
    let theta = by_labels(&b, &a, &[("1", "1"), ("c", "a"), ("d", "b")]);
    Prop54 {
        a,
        b,
        d,
        alpha,
        beta,
        phi,
        theta,
    }
}

pub struct Prop64 {
    pub fg: GradedAlgebra,
    pub fh: GradedAlgebra,
    /// `F(G × H)`.
    pub group_algebra: GradedAlgebra,
    /// `FG × FH` with `(u_g, 0)` of degree `(g, 1)` and `(0, u_h)` of
    /// degree `(1, h)`.
    pub componentwise: GradedAlgebra,
    pub phi1: GradedMorphism,
    pub phi2: GradedMorphism,
    pub psi1: GradedMorphism,
    pub psi2: GradedMorphism,
}

/// The two cocones over `FZ/2` and `FZ/2`.
pub fn prop_6_4(field: Field) -> Prop64 {
    let (g, h) = (cyclic(2), cyclic(2));
    let gh = FiniteGroup::product(&g, &h);
    let (m, n) = (g.order(), h.order());
    let fg = group_algebra(field, &g);
    let fh = group_algebra(field, &h);
    let group_algebra_gh = group_algebra(field, &gh);
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for x in 0..m {
        labels.push(format!("(u_{},0)", g.label(x)));
        degrees.push(fin(x * n + h.identity()));
    }
    for y in 0..n {
        labels.push(format!("(0,u_{})", h.label(y)));
        degrees.push(fin(g.identity() * n + y));
    }
    let mut products: Products = Vec::new();
    for x in 0..m {
        for x2 in 0..m {
            products.push((x, x2, vec![(g.mul(x, x2), field.one())]));
        }
    }
    for y in 0..n {
        for y2 in 0..n {
            products.push((m + y, m + y2, vec![(m + h.mul(y, y2), field.one())]));
        }
    }
    let mut unit = vec![field.zero(); m + n];
    unit[g.identity()] = field.one();
    unit[m + h.identity()] = field.one();
    let componentwise =
        GradedAlgebra::new_verified(field, Group::finite(gh.clone()), labels, degrees, products, Some(unit)).expect("componentwise product");
    let emb = |dom: &GradedAlgebra, cod: &GradedAlgebra, f: &dyn Fn(usize) -> usize| {
        let cols: Vec<Vector> = (0..dom.dim()).map(|i| cod.basis_vector(f(i))).collect();
        GradedMorphism::from_images(dom.clone(), cod.clone(), &cols).expect("embedding")
    };
    let phi1 = emb(&fg, &group_algebra_gh, &|x| x * n + h.identity());
    let phi2 = emb(&fh, &group_algebra_gh, &|y| g.identity() * n + y);
    let psi1 = emb(&fg, &componentwise, &|x| x);
    let psi2 = emb(&fh, &componentwise, &|y| m + y);
    Prop64 {
        fg,
        fh,
        group_algebra: group_algebra_gh,
        componentwise,
        phi1,
        phi2,
        psi1,
        psi2,
    }
}

pub struct Prop65 {
    pub a1: GradedAlgebra,
    pub a2: GradedAlgebra,
    pub a0: GradedAlgebra,
    pub b: GradedAlgebra,
    pub phi1: GradedMorphism,
    pub phi2: GradedMorphism,
    pub psi1: GradedMorphism,
    pub psi2: GradedMorphism,
}

/// `A_j = ⟨1, a_j⟩` over `Z/2`, `A₀ = ⟨1, a₁, a₂⟩` over `Z/3` and
/// `B = ⟨1, b₁, b₂, b₁b₂⟩` over `Z/2 × Z/2`, with their embeddings.
pub fn prop_6_5(field: Field) -> Prop65 {
    let z2 = Group::cyclic(2).expect("Z/2");
    let a1 = presented(field, z2.clone(), &[("1", fin(0)), ("a1", fin(1))], &[]);
    let a2 = presented(field, z2, &[("1", fin(0)), ("a2", fin(1))], &[]);
    let a0 = presented(field, Group::cyclic(3).expect("Z/3"), &[("1", fin(0)), ("a1", fin(1)), ("a2", fin(2))], &[]);
    // (i, j) ∈ Z/2 × Z/2 has index 2i + j.
    let b = presented(
        field,
        Group::finite(klein()),
        &[("1", fin(0)), ("b1", fin(2)), ("b2", fin(1)), ("b1b2", fin(3))],
        &[("b1", "b2", "b1b2")],
    );
    let phi1 = by_labels(&a1, &a0, &[("1", "1"), ("a1", "a1")]);
    let phi2 = by_labels(&a2, &a0, &[("1", "1"), ("a2", "a2")]);
    let psi1 = by_labels(&a1, &b, &[("1", "1"), ("a1", "b1")]);
    let psi2 = by_labels(&a2, &b, &[("1", "1"), ("a2", "b2")]);
    Prop65 {
        a1,
        a2,
        a0,
        b,
        phi1,
        phi2,
        psi1,
        psi2,
    }
}

pub struct Prop66 {
    pub a: GradedAlgebra,
    pub b: GradedAlgebra,
    pub f: GradedMorphism,
    pub g: GradedMorphism,
}

/// Two distinct unital graded injective maps `⟨1, t⟩ → ⟨1, s, t⟩` into a
/// trivially graded algebra with all products of `s, t` zero.
pub fn prop_6_6(field: Field) -> Prop66 {
    let a = presented(field, Group::cyclic(2).expect("Z/2"), &[("1", fin(0)), ("t", fin(1))], &[]);
    let b = presented(field, Group::trivial(), &[("1", fin(0)), ("s", fin(0)), ("t", fin(0))], &[]);
    let f = by_labels(&a, &b, &[("1", "1"), ("t", "t")]);
    let g = by_labels(&a, &b, &[("1", "1"), ("t", "s")]);
    Prop66 { a, b, f, g }
}

pub struct UnitEmbedding {
    /// A unital algebra with the trivial grading.
    pub a: GradedAlgebra,
    /// A unital homomorphism `A → F` with nonzero kernel.
    pub phi: GradedMorphism,
    /// `F → F·1_A ⊂ A`.
    pub embedding: GradedMorphism,
}

/// `A` is the algebra of [`example_3_1`] regraded trivially; `φ` kills
/// `a, b`.
pub fn unit_embedding(field: Field) -> UnitEmbedding {
    let a = example_3_1(field).0.trivial_grading();
    let f = group_algebra(field, &cyclic(1));
    let phi = GradedMorphism::from_images(a.clone(), f.clone(), &[vec![field.one()], vec![field.zero()], vec![field.zero()]])
        .expect("augmentation");
    let embedding = GradedMorphism::from_images(f, a.clone(), &[a.unit().expect("unital").clone()]).expect("unit embedding");
    UnitEmbedding { a, phi, embedding }
}
