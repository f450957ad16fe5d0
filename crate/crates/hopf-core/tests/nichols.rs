//! Quantum symmetrizers, graded dimensions, kernel relations, quotient
//! cross-checks and the computed finiteness classification.

use hopf_core::double::universe;
use hopf_core::linalg::Matrix;
use hopf_core::nichols::{
    self, all_permutations, braided_lift, check_relation_membership, classify,
    dual_infinite_certificate, eigenvalue_one_certificate, new_relations, nichols_dims,
    presented_quotient_dims, printed_relations, quantum_symmetrizer, reduced_word,
    reduced_word_alt, symmetrizer_bruteforce, BraidedVS, CertKind, Verdict,
};
use hopf_core::presets::{self, PsiNorm};
use hopf_core::rep::SimpleId;
use hopf_core::scalar::{XorShift64, FieldElement};
use hopf_core::yd;

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn braided(u: &hopf_core::double::Universe, id: SimpleId) -> BraidedVS {
    BraidedVS::from_simple(u, id).unwrap()
}

#[test]
fn symmetrizer_small_degrees() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let b = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    assert_eq!(quantum_symmetrizer(&b, 1, 8).unwrap(), Matrix::identity(2));
    let s2 = quantum_symmetrizer(&b, 2, 8).unwrap();
    assert_eq!(s2, Matrix::identity(4).add(&b.c));
    // sign braiding: both symmetrizers vanish
    let m = braided(&u, SimpleId::Char(1, 0, 1));
    assert!(quantum_symmetrizer(&m, 2, 8).unwrap().is_zero());
    assert!(quantum_symmetrizer(&m, 3, 8).unwrap().is_zero());
}

#[test]
fn coset_recursion_matches_bruteforce() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for id in [SimpleId::TwoDim(0, 1, 0, 0), SimpleId::TwoDim(1, 3, 0, 1)] {
        let b = braided(&u, id);
        for n in 2..=4 {
            assert_eq!(
                quantum_symmetrizer(&b, n, 8).unwrap(),
                symmetrizer_bruteforce(&b, n),
                "degree {n} at {id}"
            );
        }
    }
}

#[test]
fn matsumoto_well_definedness() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let b = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    for p in all_permutations(4) {
        let w1 = reduced_word(&p);
        let w2 = reduced_word_alt(&p);
        assert_eq!(w1.len(), w2.len(), "both words reduced for {p:?}");
        assert_eq!(
            braided_lift(&b, 4, &w1),
            braided_lift(&b, 4, &w2),
            "lifts differ for {p:?}"
        );
    }
    let mut rng = XorShift64::new(2024);
    let perms = all_permutations(5);
    for _ in 0..20 {
        let p = &perms[rng.below(perms.len() as u64) as usize];
        assert_eq!(
            braided_lift(&b, 5, &reduced_word(p)),
            braided_lift(&b, 5, &reduced_word_alt(p))
        );
    }
}

#[test]
fn braiding_rank_and_determinant_class() {
    // braidings of translated simples are invertible on V (x) V
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let b = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    assert_eq!(b.c.rank(), 4);
}

#[test]
fn finite_two_dim_profile() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let b = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    let rep = nichols_dims(&b, 6, Some(&u)).unwrap();
    assert_eq!(&rep.dims[..6], &[1, 2, 2, 2, 1, 0]);
    assert_eq!(rep.verdict, Verdict::Finite(8));
}

#[test]
fn character_dims() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    // braiding -1: exterior line
    let b = braided(&u, SimpleId::Char(1, 0, 1));
    let rep = nichols_dims(&b, 6, Some(&u)).unwrap();
    assert_eq!(&rep.dims[..3], &[1, 1, 0]);
    assert_eq!(rep.verdict, Verdict::Finite(2));
    // braiding +1: polynomial line with an eigenvalue-one certificate
    let b = braided(&u, SimpleId::Char(0, 0, 0));
    let rep = nichols_dims(&b, 6, Some(&u)).unwrap();
    assert!(rep.dims[1..].iter().all(|&d| d == 1));
    assert_eq!(
        rep.verdict,
        Verdict::InfiniteCertificate(CertKind::EigenvalueOne)
    );
}

#[test]
fn computed_exterior_character_set() {
    // first-principles table: j = 0 rows (1,0,1), (1,0,3); j = 1 rows
    // (0,1,k) for all k plus (1,1,1), (1,1,3)
    let mut expected = vec![
        (1, 0, 1),
        (1, 0, 3),
        (0, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
        (0, 1, 3),
        (1, 1, 1),
        (1, 1, 3),
    ];
    expected.sort();
    let mut got = nichols::computed_exterior_chars();
    got.sort();
    assert_eq!(got, expected);
    // the printed table lists (1,1,0), (1,1,2) instead of (0,1,1), (0,1,3);
    // both sets have eight members
    assert_eq!(presets::EXPECTED_EXTERIOR_CHARS.len(), 8);
}

#[test]
fn eigenvalue_certificates_for_family_one() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for p in presets::FAMILY1 {
        let b = braided(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3));
        let cert = eigenvalue_one_certificate(&b).unwrap_or_else(|| panic!("no certificate at {p:?}"));
        // v1 works in every case
        assert!(!cert[0].is_zero() || !cert[1].is_zero());
    }
    // a finite-type tuple has none
    let b = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    assert!(eigenvalue_one_certificate(&b).is_none());
    // the identity braiding has basis certificates
    let id = BraidedVS::new(2, Matrix::identity(4), None).unwrap();
    assert!(eigenvalue_one_certificate(&id).is_some());
}

#[test]
fn dual_route_certificates_for_family_two() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    assert_eq!(
        dual_infinite_certificate(&u, (1, 3, 1, 1)),
        Some((2, 1, 0, 0))
    );
    for p in presets::FAMILY2 {
        let q = dual_infinite_certificate(&u, p).unwrap_or_else(|| panic!("no dual route at {p:?}"));
        assert!(presets::FAMILY1.contains(&q), "dual {q:?} outside family 1");
    }
    // routing policy: not used for tuples with a direct certificate
    assert_eq!(dual_infinite_certificate(&u, (2, 1, 0, 0)), None);
    assert_eq!(dual_infinite_certificate(&u, (0, 1, 0, 0)), None);
}

#[test]
fn degree_six_rank_positive_for_infinite_families() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for p in presets::FAMILY1.iter().chain(presets::FAMILY2.iter()) {
        let b = braided(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3));
        let s6 = quantum_symmetrizer(&b, 6, 8).unwrap();
        assert!(s6.rank() > 0, "degree-6 rank vanished at {p:?}");
    }
}

#[test]
fn new_relations_profile_for_family_three() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let p = (0u8, 1u8, 0u8, 0u8);
    let b = braided(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3));
    let deg2 = new_relations(&b, 2, 8).unwrap();
    assert_eq!(deg2.len(), 2);
    // v1 (x) v1 and v1 (x) v2 - xi^j v2 (x) v1 lie in the span
    let mut span = hopf_core::linalg::Span::new(4);
    for r in &deg2 {
        span.insert(r);
    }
    let mut v11 = vec![fe(0); 4];
    v11[0] = fe(1);
    assert!(span.contains(&v11));
    let (_, l2, _, _) = presets::lambdas(p);
    let mut vrel = vec![fe(0); 4];
    vrel[1] = fe(1);
    vrel[2] = -&l2;
    assert!(span.contains(&vrel));
    assert_eq!(new_relations(&b, 3, 8).unwrap().len(), 0);
    let deg4 = new_relations(&b, 4, 8).unwrap();
    assert_eq!(deg4.len(), 1);
    // v2^4 generates it
    let mut v2222 = vec![fe(0); 16];
    v2222[15] = fe(1);
    assert!(check_relation_membership(&b, &v2222, 4, 8).unwrap());
}

#[test]
fn relation_membership_examples() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    // family five: v1^2 + 2 l4 v2^2
    let p5 = (1u8, 3u8, 0u8, 1u8);
    let b5 = braided(&u, SimpleId::TwoDim(p5.0, p5.1, p5.2, p5.3));
    let (_, _, _, l4) = presets::lambdas(p5);
    let mut r = vec![fe(0); 4];
    r[0] = fe(1);
    r[3] = &fe(2) * &l4;
    assert!(check_relation_membership(&b5, &r, 2, 8).unwrap());
    // family four: v1 v2 + xi^j v2 v1
    let p4 = (2u8, 1u8, 1u8, 0u8);
    let b4 = braided(&u, SimpleId::TwoDim(p4.0, p4.1, p4.2, p4.3));
    let (_, l2, _, _) = presets::lambdas(p4);
    let mut r = vec![fe(0); 4];
    r[1] = fe(1);
    r[2] = l2;
    assert!(check_relation_membership(&b4, &r, 2, 8).unwrap());
    // family three: v1 (x) v2 alone is not a relation
    let b3 = braided(&u, SimpleId::TwoDim(0, 1, 0, 0));
    let mut r = vec![fe(0); 4];
    r[1] = fe(1);
    assert!(!check_relation_membership(&b3, &r, 2, 8).unwrap());
}

#[test]
fn presented_quotients_cross_check() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    // free algebra on two generators
    assert_eq!(presented_quotient_dims(2, &[], 4), vec![1, 2, 4, 8, 16]);
    // every finite two-dimensional case: quotient dims equal symmetrizer
    // ranks degreewise
    for p in presets::FAMILY3
        .iter()
        .chain(presets::FAMILY4.iter())
        .chain(presets::FAMILY5.iter())
        .chain(presets::FAMILY6.iter())
    {
        let b = braided(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3));
        let rep = nichols_dims(&b, 6, Some(&u)).unwrap();
        let rels = printed_relations(*p).unwrap();
        // relations must be kernel members
        for (deg, r) in &rels {
            assert!(
                check_relation_membership(&b, r, *deg, 8).unwrap(),
                "printed relation fails membership at {p:?}"
            );
        }
        let q = presented_quotient_dims(2, &rels, 6);
        assert_eq!(&q[..rep.dims.len().min(7)], &rep.dims[..rep.dims.len().min(7)], "at {p:?}");
        assert_eq!(rep.verdict, Verdict::Finite(8), "at {p:?}");
        // palindromic graded dimensions
        let top = rep.dims.iter().rposition(|&d| d != 0).unwrap();
        for i in 0..=top {
            assert_eq!(rep.dims[i], rep.dims[top - i], "duality at {p:?}");
        }
    }
}

#[test]
fn duality_preserves_dims() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let h = &u.h.hopf;
    for p in presets::FAMILY3
        .iter()
        .chain(presets::FAMILY4.iter())
        .chain(presets::FAMILY5.iter())
        .chain(presets::FAMILY6.iter())
    {
        let y = yd::translated(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3)).unwrap();
        let b = BraidedVS::new(2, yd::braiding(&y), None).unwrap();
        let yd_dual = yd::dual_yd(h, &y);
        let bd = BraidedVS::new(2, yd::braiding(&yd_dual), None).unwrap();
        let r1 = nichols_dims(&b, 6, None).unwrap();
        let r2 = nichols_dims(&bd, 6, None).unwrap();
        assert_eq!(r1.dims, r2.dims, "dual dims differ at {p:?}");
    }
}

#[test]
fn direct_sums_of_exterior_characters() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let h = &u.h.hopf;
    let y = yd::translated(&u, SimpleId::Char(1, 0, 1)).unwrap();
    for copies in [2usize, 3] {
        let parts: Vec<_> = (0..copies).map(|_| y.clone()).collect();
        let sum = yd::direct_sum(h, &parts);
        let b = BraidedVS::new(copies, yd::braiding(&sum), None).unwrap();
        let rep = nichols_dims(&b, copies + 2, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Finite(1 << copies), "{copies} copies");
    }
}

#[test]
fn classification_of_all_simples() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for (i, j, k) in presets::all_char_params() {
        let v = classify(&u, SimpleId::Char(i, j, k));
        let finite = nichols::computed_exterior_chars().contains(&(i, j, k));
        if finite {
            assert_eq!(v, Verdict::Finite(2), "chi({i},{j},{k})");
        } else {
            assert_eq!(
                v,
                Verdict::InfiniteCertificate(CertKind::EigenvalueOne),
                "chi({i},{j},{k})"
            );
        }
    }
    for p in presets::all_two_dim_params() {
        let v = classify(&u, SimpleId::TwoDim(p.0, p.1, p.2, p.3));
        match presets::family_of(p).unwrap() {
            1 => assert_eq!(
                v,
                Verdict::InfiniteCertificate(CertKind::EigenvalueOne),
                "{p:?}"
            ),
            2 => assert!(
                matches!(v, Verdict::InfiniteCertificate(CertKind::DualRoute(_))),
                "{p:?}: {v:?}"
            ),
            _ => assert_eq!(v, Verdict::Finite(8), "{p:?}"),
        }
    }
}
