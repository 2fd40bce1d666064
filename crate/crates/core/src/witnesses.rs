//! Replays of the concrete counterexample constructions: each scenario
//! builds its algebras and morphisms and checks the facts stated about
//! them.

use std::collections::BTreeSet;
use std::fmt;

use crate::catalog;
use crate::galg::{direct_sum, GradedAlgebra, Homogeneity};
use crate::groups::{Group, GroupElement};
use crate::grpalg::exhaustive_homs;
use crate::linalg::{is_zero_vector, Field, Matrix, Scalar, Vector};
use crate::morph::{GradedMorphism, MonoMode, MonoVerdict};
use crate::supportcat::{oplax_defect, SupportTriple, TripleMorphism};
use crate::universal::free::{FreeGradedAlgebra, FreeMorphism, PointedGradedSet};
use crate::universal::universal_group;

/// Registered scenario names, in report order.
pub const SCENARIOS: &[&str] = &[
    "aug_counterexample",
    "example_3_1",
    "example_5_7",
    "prop_5_2",
    "prop_5_4",
    "prop_6_4",
    "prop_6_5",
    "prop_6_6",
    "prop_7_direct_sum",
    "prop_7_unit_embedding",
    "thm_5_1",
];

/// Fields every scenario is replayed over.
pub const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown scenario {0}")]
pub struct UnknownScenario(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub description: String,
    /// The step of the construction the assertion checks.
    pub claim: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub scenario: String,
    pub field: Field,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {} over {}", self.scenario, self.field)?;
        for a in &self.assertions {
            writeln!(f, "  [{}] {}", if a.passed { "ok" } else { "FAILED" }, a.description)?;
        }
        Ok(())
    }
}

struct Recorder(Vec<Assertion>);

impl Recorder {
    fn check(&mut self, passed: bool, claim: &'static str, description: impl Into<String>) {
        self.0.push(Assertion {
            description: description.into(),
            claim,
            passed,
        });
    }
}

pub fn run(name: &str, field: Field) -> Result<Report, UnknownScenario> {
    let mut r = Recorder(Vec::new());
    match name {
        "aug_counterexample" => aug_counterexample(field, &mut r),
        "example_3_1" => example_3_1(field, &mut r),
        "example_5_7" => example_5_7(field, &mut r),
        "prop_5_2" => prop_5_2(field, &mut r),
        "prop_5_4" => prop_5_4(field, &mut r),
        "prop_6_4" => prop_6_4(field, &mut r),
        "prop_6_5" => prop_6_5(field, &mut r),
        "prop_6_6" => prop_6_6(field, &mut r),
        "prop_7_direct_sum" => prop_7_direct_sum(field, &mut r),
        "prop_7_unit_embedding" => prop_7_unit_embedding(field, &mut r),
        "thm_5_1" => thm_5_1(field, &mut r),
        _ => return Err(UnknownScenario(name.to_string())),
    }
    Ok(Report {
        scenario: name.to_string(),
        field,
        assertions: r.0,
    })
}

/// Every scenario over every field, ordered by name then field.
pub fn run_all() -> Vec<Report> {
    SCENARIOS
        .iter()
        .flat_map(|name| FIELDS.iter().map(move |&f| run(name, f).expect("registered")))
        .collect()
}

fn vector_of(a: &GradedAlgebra, label: &str) -> Vector {
    a.basis_vector(a.index_of(label).expect("label"))
}

fn product_of(a: &GradedAlgebra, x: &str, y: &str) -> Vector {
    a.multiply(&vector_of(a, x), &vector_of(a, y))
}

fn degree_of(a: &GradedAlgebra, v: &[Scalar]) -> Option<GroupElement> {
    match a.homogeneity(v) {
        Homogeneity::Of(g) => Some(g),
        _ => None,
    }
}

fn thm_5_1(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "a product of A and B would force a^(g) and a^(t) into one component";
    let a = catalog::m2_gamma1(field);
    let b = catalog::algebra("fz2", field).expect("fz2");
    let (ag, at) = (vector_of(&a, "e12"), vector_of(&a, "e11"));
    let bh = vector_of(&b, "u_1");
    r.check(degree_of(&a, &ag) != degree_of(&a, &at), CLAIM, "a^(g) = e12 and a^(t) = e11 have distinct degrees");
    for unital in [false, true] {
        let mode = if unital { "unital" } else { "non-unital" };
        let gens = PointedGradedSet::new(Group::integers(), vec!["x".into(), "y".into()], vec![GroupElement::int(1); 2])
            .expect("generators");
        let d = FreeGradedAlgebra::new(gens, unital);
        r.check(d.word_degree(&[0]) == d.word_degree(&[1]), CLAIM, format!("{mode}: x and y lie in one component of D"));
        let alpha1 = FreeMorphism::new(d.clone(), a.clone(), vec![a.zero(), ag.clone()]).expect("α₁");
        let alpha2 = FreeMorphism::new(d.clone(), a.clone(), vec![a.zero(), at.clone()]).expect("α₂");
        let beta = FreeMorphism::new(d.clone(), b.clone(), vec![bh.clone(), bh.clone()]).expect("β");
        r.check(
            alpha1.is_graded(4) && alpha2.is_graded(4) && beta.is_graded(4),
            CLAIM,
            format!("{mode}: α₁, α₂, β are graded on words of length ≤ 4"),
        );
        let (y1, y2) = (alpha1.evaluate_word(&[1]), alpha2.evaluate_word(&[1]));
        r.check(
            degree_of(&a, &y1).is_some() && degree_of(&a, &y2).is_some() && degree_of(&a, &y1) != degree_of(&a, &y2),
            CLAIM,
            format!("{mode}: α₁(y) and α₂(y) are nonzero in distinct components of A"),
        );
        let (bx, by) = (beta.evaluate_word(&[0]), beta.evaluate_word(&[1]));
        r.check(bx == by && !is_zero_vector(&bx), CLAIM, format!("{mode}: β(x) = β(y) ≠ 0"));
        let c = FreeGradedAlgebra::polynomials(unital);
        let tau = vec![vec![(vec![0], field.one())]];
        let (t1, t2, tb) = (
            alpha1.pre_compose(c.clone(), &tau).expect("α₁τ"),
            alpha2.pre_compose(c.clone(), &tau).expect("α₂τ"),
            beta.pre_compose(c.clone(), &tau).expect("βτ"),
        );
        r.check(t1.images() == t2.images(), CLAIM, format!("{mode}: α₁τ = α₂τ"));
        let consistent = c.words(4).iter().all(|w| {
            let x_word = vec![0; w.len()];
            t1.evaluate_word(w) == alpha1.evaluate_word(&x_word) && tb.evaluate_word(w) == beta.evaluate_word(&x_word)
        });
        r.check(consistent, CLAIM, format!("{mode}: τ(x^k) = x^k evaluates consistently for k ≤ 4"));
    }
}

fn prop_5_2(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "xyz and zyx would share a component of a coproduct of A and B";
    let p = catalog::prop_5_2(field);
    r.check(p.a.verify_grading().is_ok(), CLAIM, "A is C₃-graded");
    r.check(p.c.verify_grading().is_ok(), CLAIM, "C is graded by the free group on X, Z");
    r.check(
        p.alpha.is_graded() && p.alpha.is_unital() && p.beta.is_graded() && p.beta.is_unital(),
        CLAIM,
        "α and β are unital graded homomorphisms",
    );
    let cd = product_of(&p.a, "c", "d");
    r.check(!is_zero_vector(&cd) && cd == product_of(&p.a, "d", "c"), CLAIM, "cd = dc ≠ 0 in A");
    let others = ["a", "b", "c", "d"]
        .iter()
        .flat_map(|x| ["a", "b", "c", "d"].map(move |y| (*x, y)))
        .filter(|p| *p != ("c", "d") && *p != ("d", "c"))
        .all(|(x, y)| is_zero_vector(&product_of(&p.a, x, y)));
    r.check(others, CLAIM, "every other product of a, b, c, d is zero");
    let word = |s: &[&str]| {
        s.iter()
            .map(|l| vector_of(&p.c, l))
            .reduce(|acc, v| p.c.multiply(&acc, &v))
            .expect("nonempty")
    };
    let (xyz, zyx) = (word(&["x", "y", "z"]), word(&["z", "y", "x"]));
    r.check(!is_zero_vector(&xyz), CLAIM, "xyz ≠ 0 in C");
    r.check(!is_zero_vector(&zyx), CLAIM, "zyx ≠ 0 in C");
    r.check(
        degree_of(&p.c, &xyz).is_some() && degree_of(&p.c, &xyz) != degree_of(&p.c, &zyx),
        CLAIM,
        "xyz and zyx belong to different homogeneous components of C",
    );
    let image = |x: &str, v: &str, y: &str| {
        let av = p.alpha.apply(&vector_of(&p.a, x));
        let bv = p.beta.apply(&vector_of(&p.b, v));
        p.c.multiply(&p.c.multiply(&av, &bv), &p.alpha.apply(&vector_of(&p.a, y)))
    };
    r.check(image("a", "v", "b") == xyz && image("b", "v", "a") == zyx, CLAIM, "α(a)β(v)α(b) = xyz and α(b)β(v)α(a) = zyx");
}

fn prop_5_4(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "a coequalizer γ would send a and b to one nonzero element of two components";
    let p = catalog::prop_5_4(field);
    r.check(p.b.verify_grading().is_ok(), CLAIM, "B is graded by the free group on x, y");
    let all = [&p.alpha, &p.beta, &p.phi, &p.theta];
    r.check(all.iter().all(|m| m.is_graded() && m.is_unital()), CLAIM, "α, β, φ, θ are unital graded homomorphisms");
    let on = |m: &GradedMorphism, x: &str, y: &str| m.apply(&vector_of(m.domain(), x)) == vector_of(m.codomain(), y);
    r.check(on(&p.alpha, "a", "a") && on(&p.alpha, "b", "b"), CLAIM, "α is the embedding A ⊂ B");
    r.check(on(&p.beta, "a", "b") && on(&p.beta, "b", "a"), CLAIM, "β(a) = b and β(b) = a");
    r.check(["a", "b", "c", "d"].iter().all(|x| on(&p.phi, x, "a")), CLAIM, "φ(a) = φ(b) = φ(c) = φ(d) = a");
    let theta_ab = ["a", "b"].iter().all(|x| is_zero_vector(&p.theta.apply(&vector_of(&p.b, x))));
    r.check(theta_ab && on(&p.theta, "c", "a") && on(&p.theta, "d", "b"), CLAIM, "θ(a) = θ(b) = 0, θ(c) = a, θ(d) = b");
    let coequalizes = |m: &GradedMorphism| m.after(&p.alpha).ok().map(|x| x.matrix().clone()) == m.after(&p.beta).ok().map(|x| x.matrix().clone());
    r.check(coequalizes(&p.phi) && coequalizes(&p.theta), CLAIM, "φα = φβ and θα = θβ");
    let (tc, td) = (p.theta.apply(&vector_of(&p.b, "c")), p.theta.apply(&vector_of(&p.b, "d")));
    r.check(
        degree_of(&p.a, &tc).is_some() && degree_of(&p.a, &td).is_some() && degree_of(&p.a, &tc) != degree_of(&p.a, &td),
        CLAIM,
        "θ(c) and θ(d) are nonzero in different components of A",
    );
}

fn example_3_1(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "L(φ²) ≺ L(φ)²";
    let (a, phi) = catalog::example_3_1(field);
    let (e, o) = (GroupElement::Finite(0), GroupElement::Finite(1));
    let t = SupportTriple::of_algebra(&a);
    let all: BTreeSet<_> = [&e, &o].iter().flat_map(|g| [&e, &o].map(|h| ((*g).clone(), h.clone()))).collect();
    let expected: BTreeSet<_> = all.iter().filter(|p| **p != (o.clone(), o.clone())).cloned().collect();
    r.check(t.pairs() == &expected, CLAIM, "L(A) has pair set (Z/2)² minus {(1̄, 1̄)}");
    let l = TripleMorphism::of_morphism(&phi).expect("L(φ)");
    r.check(l.r() == BTreeSet::from([e.clone(), o.clone()]) && l.q() == &expected, CLAIM, "L(φ) = (id, Z/2, (Z/2)² minus {(1̄, 1̄)})");
    let l_sq = l.after(&l).expect("composable");
    r.check(l_sq == l, CLAIM, "L(φ)² = L(φ)");
    let phi2 = phi.after(&phi).expect("φ²");
    let l2 = TripleMorphism::of_morphism(&phi2).expect("L(φ²)");
    r.check(
        l2.r() == BTreeSet::from([e.clone()]) && l2.q() == &BTreeSet::from([(e.clone(), e.clone())]),
        CLAIM,
        "L(φ²) = (id, {0̄}, {(0̄, 0̄)})",
    );
    r.check(l2.leq(&l_sq) && l2 != l_sq, CLAIM, "L(φ²) ≺ L(φ)² strictly");
    let defect = oplax_defect(&phi, &phi).ok().flatten();
    r.check(
        defect.is_some_and(|d| d.missing_r == BTreeSet::from([o])),
        CLAIM,
        "the defect report lists 1̄ missing from R",
    );
}

fn example_5_7(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "π is a monomorphism that is not injective";
    let pi = catalog::example_5_7(field);
    r.check(pi.codomain().is_trivially_graded(), CLAIM, "B = A/(a₁ + a₂ + a₃) is trivially graded");
    r.check(pi.is_graded() && pi.is_unital(), CLAIM, "π is a unital graded homomorphism");
    r.check(pi.mono_check() == Ok(MonoVerdict::Mono), CLAIM, "π passes the monomorphism criterion");
    r.check(pi.kernel().dim() == 1, CLAIM, "dim ker π = 1");
    r.check(!pi.is_injective(), CLAIM, "π is not injective");
}

fn aug_counterexample(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "the augmentation is graded injective but not a monomorphism";
    let aug = catalog::augmentation(field, 2);
    r.check(aug.is_graded_injective(), CLAIM, "aug: FZ/2 → F is graded injective");
    let (u0, u1) = (aug.domain().basis_vector(0), aug.domain().basis_vector(1));
    let collision = matches!(aug.mono_check(), Ok(MonoVerdict::Collision { a, b }) if a != b && aug.apply(&a) == aug.apply(&b));
    r.check(collision, CLAIM, "aug fails the monomorphism criterion with a verified collision");
    r.check(aug.apply(&u0) == aug.apply(&u1), CLAIM, "aug(u₀) = aug(u₁)");
    for mode in [MonoMode::Plain, MonoMode::Tilde] {
        let ok = aug
            .mono_refute(&u0, &u1, mode)
            .is_ok_and(|rf| rf.lambda != rf.mu && rf.lambda.post_compose(&aug).ok() == rf.mu.post_compose(&aug).ok());
        r.check(ok, CLAIM, format!("{mode:?}: λ(x) = u₀ and μ(x) = u₁ satisfy λ ≠ μ and aug∘λ = aug∘μ"));
    }
}

fn prop_6_4(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "i₁(u_g)i₂(u_h) is nonzero under φ and zero under ψ";
    let p = catalog::prop_6_4(field);
    r.check(p.componentwise.verify_grading().is_ok(), CLAIM, "FG × FH is G × H-graded with (u_g, 0) of degree (g, 1)");
    r.check(
        [&p.phi1, &p.phi2, &p.psi1, &p.psi2].iter().all(|m| m.is_graded_injective()),
        CLAIM,
        "φ₁, φ₂, ψ₁, ψ₂ are graded injective",
    );
    let mut nonzero = true;
    let mut zero = true;
    for g in 0..p.fg.dim() {
        for h in 0..p.fh.dim() {
            let (ug, uh) = (p.fg.basis_vector(g), p.fh.basis_vector(h));
            nonzero &= !is_zero_vector(&p.group_algebra.multiply(&p.phi1.apply(&ug), &p.phi2.apply(&uh)));
            zero &= is_zero_vector(&p.componentwise.multiply(&p.psi1.apply(&ug), &p.psi2.apply(&uh)));
        }
    }
    r.check(nonzero, CLAIM, "u_(g,1)·u_(1,h) = u_(g,h) ≠ 0 in F(G × H) for all g, h");
    r.check(zero, CLAIM, "(u_g, 0)·(0, u_h) = 0 in FG × FH for all g, h");
}

fn prop_6_5(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "i₁(a₁)i₂(a₂) would be both zero and nonzero";
    let p = catalog::prop_6_5(field);
    r.check(
        [&p.a1, &p.a2, &p.a0, &p.b].iter().all(|a| a.verify_grading().is_ok()),
        CLAIM,
        "A₁, A₂, A₀ and B are graded algebras",
    );
    r.check(
        [&p.phi1, &p.phi2, &p.psi1, &p.psi2].iter().all(|m| m.is_graded_injective() && m.is_unital()),
        CLAIM,
        "φ_j and ψ_j are unital graded injective",
    );
    let sq = |a: &GradedAlgebra, x: &str| is_zero_vector(&product_of(a, x, x));
    r.check(sq(&p.a1, "a1") && sq(&p.a2, "a2"), CLAIM, "a_i² = 0");
    r.check(
        is_zero_vector(&product_of(&p.a0, "a1", "a2")) && is_zero_vector(&product_of(&p.a0, "a2", "a1")),
        CLAIM,
        "a₁a₂ = a₂a₁ = 0 in A₀",
    );
    r.check(!is_zero_vector(&product_of(&p.b, "b1", "b2")), CLAIM, "b₁b₂ ≠ 0 in B");
    r.check(
        sq(&p.b, "b1") && sq(&p.b, "b2") && is_zero_vector(&product_of(&p.b, "b2", "b1")),
        CLAIM,
        "b₁² = b₂² = b₂b₁ = 0 in B",
    );
    let (a1, a2) = (vector_of(&p.a1, "a1"), vector_of(&p.a2, "a2"));
    r.check(
        is_zero_vector(&p.a0.multiply(&p.phi1.apply(&a1), &p.phi2.apply(&a2)))
            && !is_zero_vector(&p.b.multiply(&p.psi1.apply(&a1), &p.psi2.apply(&a2))),
        CLAIM,
        "φ₁(a₁)φ₂(a₂) = 0 while ψ₁(a₁)ψ₂(a₂) = b₁b₂ ≠ 0",
    );
}

fn prop_6_6(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "a graded injective h out of a trivially graded algebra is injective";
    let p = catalog::prop_6_6(field);
    r.check(p.b.is_trivially_graded(), CLAIM, "B is trivially graded");
    r.check(p.f != p.g, CLAIM, "f ≠ g");
    r.check(p.f.is_graded_injective() && p.g.is_graded_injective(), CLAIM, "f and g are graded injective");
    let mut candidates: Vec<GradedMorphism> = Vec::new();
    let small = [field.from_i64(-1), field.zero(), field.one()];
    for x in &small {
        for y in &small {
            for z in &small {
                for w in &small {
                    let mut m = Matrix::identity(field, 3);
                    m.set(1, 1, x.clone());
                    m.set(2, 1, y.clone());
                    m.set(1, 2, z.clone());
                    m.set(2, 2, w.clone());
                    candidates.extend(GradedMorphism::new(p.b.clone(), p.b.clone(), m));
                }
            }
        }
    }
    if field.size().is_some() {
        candidates.extend(exhaustive_homs(&p.b, &p.b).expect("small scan"));
    }
    let injective: Vec<&GradedMorphism> = candidates.iter().filter(|h| h.is_graded_injective()).collect();
    r.check(!injective.is_empty(), CLAIM, format!("{} graded injective candidates h: B → B", injective.len()));
    let separated = injective.iter().all(|h| h.after(&p.f).map(|x| x.matrix().clone()) != h.after(&p.g).map(|x| x.matrix().clone()));
    r.check(separated, CLAIM, "no graded injective candidate h satisfies hf = hg");
    r.check(
        injective.iter().all(|h| h.is_injective()),
        CLAIM,
        "every graded injective candidate is injective",
    );
}

fn prop_7_direct_sum(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "each copy retains its G-grading";
    let (a, _) = catalog::example_3_1(field);
    let copies = direct_sum(&[a.clone(), a.clone(), a.clone()]).expect("direct sum");
    r.check(copies.verify_grading().is_ok(), CLAIM, "A ⊕ A ⊕ A is graded");
    r.check(universal_group(&copies) == universal_group(&a), CLAIM, "the universal group presentation of A ⊕ A ⊕ A equals that of A");
    let embeddings: Vec<GradedMorphism> = (1..=3)
        .map(|k| {
            let cols: Vec<Vector> = a.labels().iter().map(|l| vector_of(&copies, &format!("{l}.{k}"))).collect();
            GradedMorphism::from_images(a.clone(), copies.clone(), &cols).expect("embedding")
        })
        .collect();
    r.check(embeddings.iter().all(|m| m.is_graded_injective()), CLAIM, "the three coordinate embeddings are graded injective");
    let distinct: BTreeSet<String> = embeddings.iter().map(|m| m.describe().join(";")).collect();
    r.check(distinct.len() == 3, CLAIM, "the three coordinate embeddings are pairwise distinct");
}

fn prop_7_unit_embedding(field: Field, r: &mut Recorder) {
    const CLAIM: &str = "the identity and φ followed by F·1_A → A are different maps";
    let u = catalog::unit_embedding(field);
    r.check(u.a.is_trivially_graded(), CLAIM, "A carries the trivial grading");
    r.check(u.phi.is_unital() && u.phi.kernel().dim() > 0, CLAIM, "φ: A → F is unital with ker φ ≠ 0");
    r.check(u.embedding.is_graded_injective() && u.embedding.is_unital(), CLAIM, "F·1_A → A is unital graded injective");
    let composite = u.embedding.after(&u.phi).expect("composable");
    let id = GradedMorphism::identity(&u.a);
    r.check(composite.is_graded() && composite.is_unital(), CLAIM, "the composite A → F → A is a unital graded homomorphism");
    r.check(composite != id, CLAIM, "the composite differs from id_A");
    let target = u.phi.codomain();
    r.check(target.dim() == 1 && target.is_unital() && target.group().is_trivial(), CLAIM, "the target of φ is F with the trivial grading");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_scenario_passes() {
        for report in run_all() {
            assert!(report.passed(), "{report}");
            assert!(!report.assertions.is_empty());
        }
    }

    #[test]
    fn unknown_scenario() {
        assert_eq!(run("unknown", Field::Rational), Err(UnknownScenario("unknown".into())));
    }

    #[test]
    fn reports_are_ordered() {
        let names: Vec<String> = run_all().into_iter().map(|r| r.scenario).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(names.len(), SCENARIOS.len() * FIELDS.len());
    }
}
