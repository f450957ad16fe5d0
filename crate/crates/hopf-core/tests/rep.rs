//! The simple modules of the double: relation checks, the full
//! structure-constant check against the generic double, simplicity,
//! pairwise intertwiners, duals, and the radical-certified census.

use hopf_core::double::universe;
use hopf_core::linalg::Matrix;
use hopf_core::presets::{self, PsiNorm};
use hopf_core::rep::{
    self, check_algebra_map, check_relations, dual_module, intertwiner_dim, is_simple,
    module_from_generators, one_dim_module, two_dim_from_lambdas, two_dim_module, AlgModule,
    ModuleError, SimpleId,
};
use hopf_core::scalar::FieldElement;

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn xi() -> FieldElement {
    FieldElement::xi()
}

#[test]
fn character_values() {
    let m = one_dim_module(1, 1, 1).unwrap();
    // d acts by (-1)(-1) xi = xi
    assert_eq!(*m.gens[6].get(0, 0), xi());
    // the trivial character matches the counit values
    let t = one_dim_module(0, 0, 0).unwrap();
    for (gi, g) in t.gens.iter().enumerate() {
        let expected = match presets::DOUBLE_GENS[gi] {
            "g" | "h" | "a" | "d" => fe(1),
            _ => fe(0),
        };
        assert_eq!(*g.get(0, 0), expected);
    }
}

#[test]
fn character_with_wrong_d_value_is_rejected() {
    // chi(d) must equal chi(g) chi(h) chi(a); flipping the sign breaks the
    // bx-relation
    let mut m = one_dim_module(1, 1, 1).unwrap();
    m.gens[6] = Matrix::from_rows(vec![vec![-xi()]]);
    match check_relations(&m) {
        Err(ModuleError::RelationViolated { relation }) => {
            assert!(relation.contains("bx"), "violated: {relation}");
        }
        other => panic!("expected violation, got {other:?}"),
    }
}

#[test]
fn two_dim_entries_match_the_displayed_matrices() {
    let m = two_dim_module((0, 1, 0, 0)).unwrap();
    // [b] = (0 1; 0 0) here since l4 = 1, [c] likewise
    assert_eq!(*m.gens[4].get(0, 1), fe(1));
    // x-entries: x2 = (sqrt2/2) xi (xi - 1), x3 = sqrt2 xi (xi + 1)
    let s2 = FieldElement::sqrt2();
    let x2 = &(&s2 * &FieldElement::from_ratio(1, 2)) * &(&xi() * &(&xi() - &fe(1)));
    let x3 = &s2 * &(&xi() * &(&xi() + &fe(1)));
    assert_eq!(*m.gens[2].get(0, 1), x2);
    assert_eq!(*m.gens[2].get(1, 0), x3);
    // x2 x3 = 1 - l2^2 (the x^2 = 1 - g^2 relation on the module)
    let l2 = xi();
    assert_eq!(&x2 * &x3, &fe(1) - &(&l2 * &l2));
    assert!(two_dim_module((0, 0, 0, 0)).is_err());
}

#[test]
fn all_48_satisfy_every_relation_and_are_simple() {
    for (id, m) in rep::simple_list() {
        assert!(check_relations(&m).is_ok(), "{id} violates a relation");
        assert!(is_simple(&m).unwrap(), "{id} is not simple");
        assert_eq!(intertwiner_dim(&m, &m), 1, "{id} endomorphisms");
    }
}

#[test]
fn full_algebra_map_check_on_a_sample() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for id in [
        SimpleId::Char(0, 0, 0),
        SimpleId::Char(1, 1, 3),
        SimpleId::TwoDim(0, 1, 0, 0),
        SimpleId::TwoDim(3, 3, 1, 1),
        SimpleId::TwoDim(2, 1, 1, 0),
    ] {
        let m = rep::module_of(id).unwrap();
        assert!(check_algebra_map(&m, &u), "{id} fails the algebra-map check");
    }
}

#[test]
fn non_simple_configurations() {
    // l2 = 1 with l2 l3 = -l4: the top-left line is invariant
    let m = two_dim_from_lambdas(&fe(1), &fe(1), &fe(1), &fe(-1));
    assert!(check_relations(&m).is_ok());
    assert!(!is_simple(&m).unwrap());
    // a direct sum of two characters
    let a = one_dim_module(0, 0, 0).unwrap();
    let b = one_dim_module(0, 0, 1).unwrap();
    let sum = AlgModule {
        dim: 2,
        gens: a
            .gens
            .iter()
            .zip(b.gens.iter())
            .map(|(x, y)| {
                Matrix::from_rows(vec![
                    vec![x.get(0, 0).clone(), fe(0)],
                    vec![fe(0), y.get(0, 0).clone()],
                ])
            })
            .collect(),
    };
    assert!(!is_simple(&sum).unwrap());
    // dimension cap
    let big = AlgModule {
        dim: 3,
        gens: vec![Matrix::identity(3); 7],
    };
    assert!(matches!(
        is_simple(&big),
        Err(ModuleError::UnsupportedDimension)
    ));
}

#[test]
fn pairwise_intertwiners_vanish() {
    let list = rep::simple_list();
    for (i, (id_a, ma)) in list.iter().enumerate() {
        for (id_b, mb) in list.iter().skip(i + 1) {
            assert_eq!(
                intertwiner_dim(ma, mb),
                0,
                "unexpected map {id_a} -> {id_b}"
            );
        }
    }
}

#[test]
fn dual_modules_match_the_index_formula() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    for p in presets::all_two_dim_params() {
        let m = two_dim_module(p).unwrap();
        let dual = dual_module(&m, &u);
        let q = presets::dual_params(p);
        let expected = two_dim_module(q).unwrap();
        assert_eq!(
            intertwiner_dim(&expected, &dual),
            1,
            "dual of V{p:?} is not V{q:?}"
        );
        // an explicit certifying intertwiner exists; its anti-diagonal
        // coefficient is the negative of the printed closed form, uniformly
        let (phi, matches_printed) =
            rep::dual_intertwiner(p, &u).expect("certifying intertwiner");
        assert_eq!(phi.rank(), 2);
        assert!(
            !matches_printed,
            "V{p:?}: coefficient unexpectedly matches the printed form"
        );
        // duality squares to the identity up to isomorphism
        let double_dual = dual_module(&dual, &u);
        assert_eq!(intertwiner_dim(&m, &double_dual), 1);
    }
    // dual of the trivial module is trivial
    let t = one_dim_module(0, 0, 0).unwrap();
    let td = dual_module(&t, &u);
    assert_eq!(intertwiner_dim(&t, &td), 1);
}

#[test]
fn module_from_generators_over_a() {
    let a = presets::build_a();
    let s2 = FieldElement::sqrt2();
    let rho1 = vec![
        Matrix::identity(2).scale(&xi()),
        Matrix::from_rows(vec![vec![fe(1), fe(0)], vec![fe(0), fe(-1)]]),
        Matrix::from_rows(vec![vec![fe(0), s2.clone()], vec![s2.clone(), fe(0)]]),
    ];
    assert!(module_from_generators(&a, &rho1).is_ok());
    // scaling x by 2 violates x^2 = 1 - g^2
    let mut bad = rho1.clone();
    bad[2] = bad[2].scale(&fe(2));
    assert!(matches!(
        module_from_generators(&a, &bad),
        Err(ModuleError::RelationViolated { .. })
    ));
    // the trivial module: counit values
    let trivial = vec![
        Matrix::identity(1),
        Matrix::identity(1),
        Matrix::zero(1, 1),
    ];
    assert!(module_from_generators(&a, &trivial).is_ok());
}

#[test]
fn census_extras_are_genuine_new_simples() {
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let extras = rep::census_extras();
    assert_eq!(extras.len(), 16);
    for (tag, m) in &extras {
        assert!(check_relations(m).is_ok(), "extra {tag:?} violates a relation");
        assert!(
            check_algebra_map(m, &u),
            "extra {tag:?} fails the full structure-constant check"
        );
        assert!(is_simple(m).unwrap(), "extra {tag:?} not simple");
        assert_eq!(intertwiner_dim(m, m), 1);
    }
    // pairwise distinct among themselves and from the printed list
    let list = rep::simple_list();
    for (i, (ta, ma)) in extras.iter().enumerate() {
        for (tb, mb) in extras.iter().skip(i + 1) {
            assert_eq!(intertwiner_dim(ma, mb), 0, "{ta:?} ~ {tb:?}");
        }
        for (id, mb) in &list {
            assert_eq!(intertwiner_dim(ma, mb), 0, "{ta:?} ~ {id}");
        }
    }
}

#[test]
fn census_is_complete_by_the_radical_certificate() {
    // 16 characters + 48 two-dimensional simples exhaust the semisimple
    // quotient: sum of squared dimensions = 16 + 48*4 = 208 = 256 - 48
    let u = universe(PsiNorm::Sqrt2).unwrap();
    let rad = u.double.carrier.radical_dim();
    let printed: usize = rep::simple_list().iter().map(|(id, _)| id.dim() * id.dim()).sum();
    let extras: usize = rep::census_extras().iter().map(|(_, m)| m.dim * m.dim).sum();
    assert_eq!(printed, 144);
    assert_eq!(extras, 64);
    assert_eq!(printed + extras, 256 - rad);
}

#[test]
fn spinning_fallback_detects_decomposables() {
    // block sum of two characters: basis seeds expose an invariant line
    let a = one_dim_module(0, 0, 0).unwrap();
    let b = one_dim_module(1, 0, 2).unwrap();
    let sum = AlgModule {
        dim: 2,
        gens: a
            .gens
            .iter()
            .zip(b.gens.iter())
            .map(|(x, y)| {
                Matrix::from_rows(vec![
                    vec![x.get(0, 0).clone(), fe(0)],
                    vec![fe(0), y.get(0, 0).clone()],
                ])
            })
            .collect(),
    };
    assert_eq!(rep::is_simple_spinning(&sum), Some(false));
    assert_eq!(rep::spin_submodule_dim(&sum, &[fe(1), fe(0)]), 1);
    // a simple module yields no witness from the seed set
    let v = two_dim_module((0, 1, 0, 0)).unwrap();
    assert_eq!(rep::is_simple_spinning(&v), None);
    assert_eq!(rep::spin_submodule_dim(&v, &[fe(1), fe(0)]), 2);
}

#[test]
fn h_antipode_value_report() {
    let rep = presets::h_antipode_report(&presets::build_h());
    assert!(rep.passed(), "failures: {:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn radical_dims_of_smaller_algebras() {
    assert_eq!(presets::group_algebra_cyclic(4).radical_dim(), 0);
    assert_eq!(presets::build_g().hopf.radical_dim(), 8);
}
