//! Biproducts, coproduct probes, and the lifting families.

use hopf_core::boson::{
    self, build_lifting, mu_zero_matches_biproduct, nichols_as_braided_hopf, primitivity_probes,
    radford_biproduct, unit_braided_hopf, verify_lifting,
};
use hopf_core::double::universe;
use hopf_core::hopf::AxiomScheme;
use hopf_core::presets::{self, PsiNorm};
use hopf_core::rep::SimpleId;
use hopf_core::scalar::FieldElement;

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

#[test]
fn exterior_character_biproduct_has_dim_32() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let r = nichols_as_braided_hopf(&u, SimpleId::Char(1, 0, 1)).unwrap();
    assert_eq!(r.total, 2);
    let bp = radford_biproduct(&r, &u.h.hopf);
    assert_eq!(bp.dim, 32);
    let rep = bp.verify_hopf_axioms(&AxiomScheme::Exhaustive);
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn polynomial_character_is_rejected() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    assert!(matches!(
        nichols_as_braided_hopf(&u, SimpleId::Char(0, 0, 0)),
        Err(boson::BosonError::NotFinite)
    ));
    // the tuples the printed exterior table wrongly includes are polynomial
    assert!(nichols_as_braided_hopf(&u, SimpleId::Char(1, 1, 0)).is_err());
    assert!(nichols_as_braided_hopf(&u, SimpleId::Char(1, 1, 1)).is_ok());
}

#[test]
fn projection_splits_inclusion() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let r = nichols_as_braided_hopf(&u, SimpleId::Char(1, 0, 1)).unwrap();
    let bp = radford_biproduct(&r, &u.h.hopf);
    let rep = boson::projection_inclusion_report(&r, &u.h.hopf, &bp);
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn trivial_biproduct_is_h_itself() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let r = unit_braided_hopf(&u);
    let bp = radford_biproduct(&r, &u.h.hopf);
    assert_eq!(bp.dim, 16);
    assert!(bp.same_structure(&u.h.hopf));
}

#[test]
fn family3_biproduct_dim_128_and_grading() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let p = (0u8, 1u8, 0u8, 0u8);
    let r = nichols_as_braided_hopf(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3)).unwrap();
    assert_eq!(r.dims, vec![1, 2, 2, 2, 1]);
    assert_eq!(r.total, 8);
    let bp = radford_biproduct(&r, &u.h.hopf);
    assert_eq!(bp.dim, 128);
    let gens = boson::biproduct_generators(&r, &u.h.hopf, &u.h);
    let rep = bp.verify_hopf_axioms(&AxiomScheme::GeneratorComplete {
        generators: gens,
        spot_checks: 2_000,
    });
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn probes_for_every_finite_family_member() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for p in presets::FAMILY3
        .iter()
        .chain(presets::FAMILY4.iter())
        .chain(presets::FAMILY5.iter())
        .chain(presets::FAMILY6.iter())
    {
        let rep = primitivity_probes(&u, *p);
        for c in &rep.checks {
            println!("{p:?} {:?} {} {}", c.status, c.name, c.detail);
        }
        assert!(
            rep.passed(),
            "{p:?} failures: {:?}",
            rep.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn lifting_builds_verify_and_degenerate_to_the_biproduct() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let p = (1u8, 3u8, 0u8, 1u8);
    // mu = 0: structure-constant identical to the biproduct
    let l0 = build_lifting(5, p, &fe(0)).unwrap();
    assert_eq!(l0.built.hopf.dim, 128);
    let rep = verify_lifting(&l0);
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
    let r = nichols_as_braided_hopf(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3)).unwrap();
    let bp = radford_biproduct(&r, &u.h.hopf);
    let cmp = mu_zero_matches_biproduct(&l0, &r, &bp, &u.h.hopf);
    assert!(cmp.passed(), "failures: {:?}", cmp.failures().collect::<Vec<_>>());
    // a nonzero parameter
    let l1 = build_lifting(5, p, &fe(1)).unwrap();
    let rep = verify_lifting(&l1);
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
    // family six at a sampled tuple
    let p6 = (3u8, 3u8, 1u8, 1u8);
    let l6 = build_lifting(6, p6, &fe(1)).unwrap();
    let rep = verify_lifting(&l6);
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
    // family/parameter mismatch is rejected
    assert!(build_lifting(5, p6, &fe(0)).is_err());
    assert!(build_lifting(4, p, &fe(0)).is_err());
}

#[test]
fn constructive_suite_smoke() {
    // the sequential reference suite over a single nonzero deformation
    // parameter; the acceptance tests cover the full grid in parallel
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let rep = boson::theorem_b_suite(&u, &[fe(1)]);
    assert!(
        rep.passed(),
        "failures: {:?}",
        rep.failures().collect::<Vec<_>>()
    );
}

#[test]
fn lifting_basis_is_free_over_h() {
    let l = build_lifting(5, (1, 1, 0, 0), &FieldElement::sqrt2()).unwrap();
    assert_eq!(l.built.hopf.dim, 128);
    // generators {1, x, y, x^2, xy, x^3, x^2y, x^3y} over each H-monomial
    let mut xy_patterns: Vec<(usize, usize)> = l
        .built
        .words
        .iter()
        .map(|w| {
            let xs = w.iter().filter(|&&g| g == 4).count();
            let ys = w.iter().filter(|&&g| g == 5).count();
            (xs, ys)
        })
        .collect();
    xy_patterns.sort();
    xy_patterns.dedup();
    assert_eq!(
        xy_patterns,
        vec![
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (2, 0),
            (2, 1),
            (3, 0),
            (3, 1)
        ]
    );
}
