//! Generic construction of the 256-dimensional double: axiom suite,
//! presentation relations, and the trace-form radical census.

use hopf_core::double::{universe, verify_presentation};
use hopf_core::hopf::AxiomScheme;
use hopf_core::presets::PsiNorm;

#[test]
fn double_builds_with_dim_256() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    assert_eq!(u.double.carrier.dim, 256);
}

#[test]
fn double_satisfies_the_printed_presentation() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let rep = verify_presentation(&u.double, &u.h, &u.a);
    for c in &rep.checks {
        println!("{:?} {}", c.status, c.name);
    }
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn double_passes_generator_complete_axioms() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let gens = u.double.generator_vectors(&u.h, &u.a);
    let scheme = AxiomScheme::GeneratorComplete {
        generators: gens,
        spot_checks: 100_000,
    };
    let rep = u.double.carrier.verify_hopf_axioms(&scheme);
    for c in &rep.checks {
        println!("{:?} {} {}", c.status, c.name, c.detail);
    }
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn double_radical_census() {
    // the exact trace-form computation pins the radical at 48, so the
    // semisimple quotient has dimension 208 = 16*1 + 48*4: sixteen
    // characters and forty-eight two-dimensional absolutely simple modules
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let rad = u.double.carrier.radical_dim();
    assert_eq!(rad, 48);
    assert_eq!(256 - rad, 208);
}
