//! Concrete presentations: the pointed algebra `A` on generators `g, h, x`,
//! its undeformed companion `G`, the comatrix algebra `H` on `a, b, c, d`,
//! the two lifting families on `a..d, x, y`, plus the relation list of the
//! 256-dimensional double and the isomorphism `psi` onto the dual of `H`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::hopf::{sp_unit, FinHopf, Sparse};
use crate::linalg::Matrix;
use crate::presentation::{
    BuildError, BuiltHopf, GeneratorSpec, Poly, Presentation, Rule, Word,
};
use crate::scalar::{rat, FieldElement};

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn xi() -> FieldElement {
    FieldElement::xi()
}

fn xp(k: i64) -> FieldElement {
    FieldElement::xi_pow(k)
}

fn s2() -> FieldElement {
    FieldElement::sqrt2()
}

fn half() -> FieldElement {
    FieldElement::from_rational(rat(1, 2))
}

fn p1(w: &[u8]) -> Poly {
    vec![(fe(1), w.to_vec())]
}

fn pc(c: FieldElement, w: &[u8]) -> Poly {
    vec![(c, w.to_vec())]
}

/// Presentation of `A`: generators `g, h, x` with `x^2 = 1 - g^2`.
pub fn presentation_a() -> Presentation {
    presentation_a_like(true)
}

/// Presentation of `G`: same generators with `x^2 = 0`.
pub fn presentation_g() -> Presentation {
    presentation_a_like(false)
}

fn presentation_a_like(deformed: bool) -> Presentation {
    const G: u8 = 0;
    const H: u8 = 1;
    const X: u8 = 2;
    let xsq_rhs: Poly = if deformed {
        vec![(fe(1), vec![]), (fe(-1), vec![G, G])]
    } else {
        vec![]
    };
    let rules = vec![
        Rule { lhs: vec![H, G], rhs: p1(&[G, H]) },
        Rule { lhs: vec![X, G], rhs: p1(&[G, X]) },
        Rule { lhs: vec![X, H], rhs: pc(fe(-1), &[H, X]) },
        Rule { lhs: vec![G, G, G, G], rhs: p1(&[]) },
        Rule { lhs: vec![H, H], rhs: p1(&[]) },
        Rule { lhs: vec![X, X], rhs: xsq_rhs.clone() },
    ];
    let relations = vec![
        (p1(&[G, G, G, G]), p1(&[])),
        (p1(&[H, H]), p1(&[])),
        (p1(&[H, G]), p1(&[G, H])),
        (p1(&[H, X]), pc(fe(-1), &[X, H])),
        (p1(&[G, X]), p1(&[X, G])),
        (p1(&[X, X]), xsq_rhs),
    ];
    let gens = vec![
        GeneratorSpec {
            name: "g",
            comult: vec![(fe(1), vec![G], vec![G])],
            counit: fe(1),
            antipode: p1(&[G, G, G]),
        },
        GeneratorSpec {
            name: "h",
            comult: vec![(fe(1), vec![H], vec![H])],
            counit: fe(1),
            antipode: p1(&[H]),
        },
        GeneratorSpec {
            name: "x",
            comult: vec![(fe(1), vec![X], vec![]), (fe(1), vec![G, H], vec![X])],
            counit: fe(0),
            antipode: pc(fe(-1), &[G, G, G, H, X]),
        },
    ];
    Presentation {
        gens,
        rules,
        relations,
        max_basis: 64,
        step_bound: 100_000,
    }
}

const A_: u8 = 0;
const B_: u8 = 1;
const C_: u8 = 2;
const D_: u8 = 3;

fn h_rules() -> Vec<Rule> {
    vec![
        Rule { lhs: vec![A_, B_], rhs: pc(xi(), &[B_, A_]) },
        Rule { lhs: vec![A_, C_], rhs: pc(xi(), &[C_, A_]) },
        Rule { lhs: vec![A_, D_], rhs: p1(&[D_, A_]) },
        Rule { lhs: vec![C_, D_], rhs: p1(&[B_, A_]) },
        Rule { lhs: vec![B_, D_], rhs: p1(&[C_, A_]) },
        Rule { lhs: vec![D_, B_], rhs: pc(xp(3), &[C_, A_]) },
        Rule { lhs: vec![D_, C_], rhs: pc(xp(3), &[B_, A_]) },
        Rule { lhs: vec![D_, D_], rhs: p1(&[A_, A_]) },
        Rule { lhs: vec![B_, B_], rhs: vec![] },
        Rule { lhs: vec![C_, C_], rhs: vec![] },
        Rule { lhs: vec![B_, C_], rhs: vec![] },
        Rule { lhs: vec![C_, B_], rhs: vec![] },
        Rule { lhs: vec![A_, A_, A_, A_], rhs: p1(&[]) },
    ]
}

/// The printed relation list of `H`, used for module verification and for
/// the build-time closure check.
pub fn h_relations() -> Vec<(Poly, Poly)> {
    vec![
        (p1(&[A_, A_, A_, A_]), p1(&[])),
        (p1(&[B_, B_]), vec![]),
        (p1(&[C_, C_]), vec![]),
        (p1(&[D_, D_, D_, D_]), p1(&[])),
        (p1(&[A_, A_, D_, D_]), p1(&[])),
        (p1(&[A_, D_]), p1(&[D_, A_])),
        (p1(&[B_, C_]), vec![]),
        (p1(&[C_, B_]), vec![]),
        (p1(&[A_, B_]), pc(xi(), &[B_, A_])),
        (p1(&[A_, C_]), pc(xi(), &[C_, A_])),
        (p1(&[B_, D_]), pc(xi(), &[D_, B_])),
        (p1(&[C_, D_]), pc(xi(), &[D_, C_])),
        (p1(&[B_, D_]), p1(&[C_, A_])),
        (p1(&[B_, A_]), p1(&[C_, D_])),
    ]
}

fn h_generator_specs() -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec {
            name: "a",
            comult: vec![
                (fe(1), vec![A_], vec![A_]),
                (fe(1), vec![B_], vec![C_]),
            ],
            counit: fe(1),
            antipode: p1(&[A_, A_, A_]),
        },
        GeneratorSpec {
            name: "b",
            comult: vec![
                (fe(1), vec![A_], vec![B_]),
                (fe(1), vec![B_], vec![D_]),
            ],
            counit: fe(0),
            antipode: pc(xi(), &[C_, A_, A_]),
        },
        GeneratorSpec {
            name: "c",
            comult: vec![
                (fe(1), vec![C_], vec![A_]),
                (fe(1), vec![D_], vec![C_]),
            ],
            counit: fe(0),
            antipode: pc(xp(3), &[B_, A_, A_]),
        },
        GeneratorSpec {
            name: "d",
            comult: vec![
                (fe(1), vec![D_], vec![D_]),
                (fe(1), vec![C_], vec![B_]),
            ],
            counit: fe(1),
            antipode: p1(&[D_, D_, D_]),
        },
    ]
}

/// Presentation of the 16-dimensional comatrix Hopf algebra `H`.
pub fn presentation_h() -> Presentation {
    Presentation {
        gens: h_generator_specs(),
        rules: h_rules(),
        relations: h_relations(),
        max_basis: 64,
        step_bound: 100_000,
    }
}

pub fn build_a() -> BuiltHopf {
    presentation_a().build().expect("A builds")
}

pub fn build_g() -> BuiltHopf {
    presentation_g().build().expect("G builds")
}

pub fn build_h() -> BuiltHopf {
    presentation_h().build().expect("H builds")
}

/// Entrywise check of the antipode's generator values on `H`:
/// `S(a) = a^3`, `S(d) = d^3`, `S(b) = xi c a^2`, `S(c) = xi^3 b a^2`,
/// plus `S(1) = 1` and the anti-multiplicative expansion `S(ba) = ca`.
pub fn h_antipode_report(built: &BuiltHopf) -> crate::report::Report {
    let mut rep = crate::report::Report::new("antipode values of H");
    let h = &built.hopf;
    let s = |l: &str| h.antipode_basis(h.label_index(l).expect("label"));
    let eq = crate::hopf::sp_eq;
    rep.check("S(a) = a^3", eq(&s("a"), &h.basis("a3")), "");
    rep.check(
        "S(d) = d^3",
        eq(&s("d"), &built.eval_word(&[D_, D_, D_])),
        "",
    );
    rep.check(
        "S(b) = xi c a^2",
        eq(&s("b"), &crate::hopf::sp_scale(&h.basis("ca2"), &xi())),
        "",
    );
    rep.check(
        "S(c) = xi^3 b a^2",
        eq(&s("c"), &crate::hopf::sp_scale(&h.basis("ba2"), &xp(3))),
        "",
    );
    rep.check("S(1) = 1", eq(&s("1"), &h.unit), "");
    rep.check("S(ba) = S(a) S(b)", eq(&s("ba"), &h.basis("ca")), "");
    rep
}

/// Group algebra of the cyclic group of order `n`.
pub fn group_algebra_cyclic(n: usize) -> FinHopf {
    let mut mult = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = sp_unit((i + j) % n);
        }
    }
    let comult = (0..n)
        .map(|i| vec![(i as u32, i as u32, fe(1))])
        .collect();
    let mut antipode = Matrix::zero(n, n);
    for i in 0..n {
        antipode.set((n - i) % n, i, fe(1));
    }
    FinHopf {
        dim: n,
        labels: (0..n)
            .map(|i| if i == 0 { "1".into() } else { format!("g{i}") })
            .collect(),
        unit: sp_unit(0),
        mult,
        comult,
        counit: vec![fe(1); n],
        antipode,
    }
}

// ---------------------------------------------------------------------------
// parameter families for the two-dimensional simple modules
// ---------------------------------------------------------------------------

pub type Params = (u8, u8, u8, u8);

pub const FAMILY1: [Params; 8] = [
    (2, 1, 0, 0),
    (0, 1, 1, 0),
    (2, 3, 0, 0),
    (0, 3, 1, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 1),
    (0, 3, 0, 1),
    (0, 3, 1, 1),
];

pub const FAMILY2: [Params; 8] = [
    (1, 3, 1, 1),
    (3, 3, 0, 1),
    (1, 1, 1, 1),
    (3, 1, 0, 1),
    (3, 3, 1, 0),
    (3, 3, 0, 0),
    (3, 1, 1, 0),
    (3, 1, 0, 0),
];

pub const FAMILY3: [Params; 4] = [(0, 1, 0, 0), (0, 3, 0, 0), (2, 1, 0, 1), (2, 3, 0, 1)];

pub const FAMILY4: [Params; 4] = [(2, 1, 1, 0), (2, 1, 1, 1), (2, 3, 1, 0), (2, 3, 1, 1)];

pub const FAMILY5: [Params; 4] = [(1, 3, 0, 1), (1, 3, 0, 0), (1, 1, 0, 1), (1, 1, 0, 0)];

pub const FAMILY6: [Params; 4] = [(3, 3, 1, 1), (1, 3, 1, 0), (3, 1, 1, 1), (1, 1, 1, 0)];

/// Expected exterior-type character parameters `(i, j, k)`; a regression
/// table for the classification commands.
pub const EXPECTED_EXTERIOR_CHARS: [(u8, u8, u8); 8] = [
    (1, 0, 1),
    (1, 0, 3),
    (0, 1, 0),
    (0, 1, 2),
    (1, 1, 0),
    (1, 1, 1),
    (1, 1, 2),
    (1, 1, 3),
];

pub fn family_of(p: Params) -> Option<u8> {
    for (fam, set) in [
        (1u8, &FAMILY1[..]),
        (2, &FAMILY2[..]),
        (3, &FAMILY3[..]),
        (4, &FAMILY4[..]),
        (5, &FAMILY5[..]),
        (6, &FAMILY6[..]),
    ] {
        if set.contains(&p) {
            return Some(fam);
        }
    }
    None
}

pub fn all_two_dim_params() -> Vec<Params> {
    let mut out = Vec::new();
    for i in 0..4u8 {
        for j in [1u8, 3] {
            for k in 0..2u8 {
                for iota in 0..2u8 {
                    out.push((i, j, k, iota));
                }
            }
        }
    }
    out
}

pub fn all_char_params() -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for i in 0..2u8 {
        for j in 0..2u8 {
            for k in 0..4u8 {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Dual-module parameter map `(i,j,k,iota) -> (-i-1, -j, k+1, iota+1)` with
/// indices reduced mod their ranges.
pub fn dual_params(p: Params) -> Params {
    let (i, j, k, iota) = p;
    (
        ((-(i as i8) - 1).rem_euclid(4)) as u8,
        ((-(j as i8)).rem_euclid(4)) as u8,
        (k + 1) % 2,
        (iota + 1) % 2,
    )
}

pub fn lambdas(p: Params) -> (FieldElement, FieldElement, FieldElement, FieldElement) {
    let (i, j, k, iota) = p;
    (
        xp(i as i64),
        xp(j as i64),
        FieldElement::sign_pow(k as i64),
        FieldElement::sign_pow(iota as i64),
    )
}

// ---------------------------------------------------------------------------
// lifting presentations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    OutOfRange(&'static str),
}

const X_: u8 = 4;
const Y_: u8 = 5;

fn a_word(n: usize) -> Word {
    vec![A_; n]
}

fn word_then(prefix: u8, a_count: usize, tail: &[u8]) -> Word {
    let mut w = vec![prefix];
    w.extend(vec![A_; a_count]);
    w.extend_from_slice(tail);
    w
}

/// Presentation of the lifting `family(mu)` at the given parameter tuple.
/// Family 5 requires membership in [`FAMILY5`], family 6 in [`FAMILY6`];
/// `mu` is an arbitrary scalar.
pub fn lifting_presentation(
    family: u8,
    params: Params,
    mu: &FieldElement,
) -> Result<Presentation, ParamError> {
    let in_family = match family {
        5 => FAMILY5.contains(&params),
        6 => FAMILY6.contains(&params),
        _ => return Err(ParamError::OutOfRange("family must be 5 or 6")),
    };
    if !in_family {
        return Err(ParamError::OutOfRange("parameters outside the family"));
    }
    let (l1, l2, _l3, l4) = lambdas(params);
    let j = params.1 as usize;
    let jm1 = j - 1;
    let s3j = (3 * j) % 4;
    let s3jm1 = (3 * jm1) % 4;

    let mut rules = h_rules();
    let mut relations = h_relations();

    let neg = |e: &FieldElement| -e;
    let y_sq_rhs: Poly = vec![
        (&(&l4 * mu) * &half(), vec![]),
        (neg(&(&(&l4 * mu) * &half())), vec![A_, A_]),
        (neg(&(&l4 * &half())), vec![X_, X_]),
    ];

    let (xa_c, xc_c, ya_rule, yb_rule, yc_rule, yd_rule, yx_rule, omega): (
        FieldElement,
        FieldElement,
        Poly,
        Poly,
        Poly,
        Poly,
        Poly,
        FieldElement,
    );
    match family {
        5 => {
            // ax = -l4 xi xa, cx = xi xc
            xa_c = neg(&(&l4 * &xi()));
            xc_c = xi();
            // ay + l4 ya = l4 xc  => ya = -l4 ay + xc
            ya_rule = vec![(neg(&l4), vec![A_, Y_]), (fe(1), vec![X_, C_])];
            yb_rule = vec![(neg(&l4), vec![B_, Y_]), (fe(1), vec![X_, D_])];
            // cy + yc = xa => yc = -cy + xa
            yc_rule = vec![(fe(-1), vec![C_, Y_]), (fe(1), vec![X_, A_])];
            yd_rule = vec![(fe(-1), vec![D_, Y_]), (fe(1), vec![X_, B_])];
            // xy + l4 yx = mu ca: the coefficient the smash-coproduct
            // computation forces (the family's skew-primitive defect is the
            // constant -1; see the coproduct probes)
            omega = mu.clone();
            yx_rule = vec![
                (&l4 * &omega, vec![C_, A_]),
                (neg(&l4), vec![X_, Y_]),
            ];
        }
        _ => {
            // ax = -xi xa, cx = l1 xc
            xa_c = neg(&xi());
            xc_c = l1.clone();
            // ay + ya = l4 xc => ya = -ay + l4 xc
            ya_rule = vec![(fe(-1), vec![A_, Y_]), (l4.clone(), vec![X_, C_])];
            yb_rule = vec![(fe(-1), vec![B_, Y_]), (l4.clone(), vec![X_, D_])];
            // cy + l4 yc = xa => yc = l4 xa - l4 cy
            yc_rule = vec![(neg(&l4), vec![C_, Y_]), (l4.clone(), vec![X_, A_])];
            yd_rule = vec![(neg(&l4), vec![D_, Y_]), (l4.clone(), vec![X_, B_])];
            // xy + l4 yx = l4 mu ca => yx = mu ca - l4 xy
            omega = &l4 * mu;
            yx_rule = vec![(mu.clone(), vec![C_, A_]), (neg(&l4), vec![X_, Y_])];
        }
    }
    let xa_inv = xa_c.inverse().expect("unit coefficient");
    let xc_inv = xc_c.inverse().expect("unit coefficient");
    rules.extend(vec![
        Rule { lhs: vec![X_, A_], rhs: pc(xa_inv.clone(), &[A_, X_]) },
        Rule { lhs: vec![X_, B_], rhs: pc(xa_inv, &[B_, X_]) },
        Rule { lhs: vec![X_, C_], rhs: pc(xc_inv.clone(), &[C_, X_]) },
        Rule { lhs: vec![X_, D_], rhs: pc(xc_inv, &[D_, X_]) },
        Rule { lhs: vec![Y_, A_], rhs: ya_rule.clone() },
        Rule { lhs: vec![Y_, B_], rhs: yb_rule.clone() },
        Rule { lhs: vec![Y_, C_], rhs: yc_rule.clone() },
        Rule { lhs: vec![Y_, D_], rhs: yd_rule.clone() },
        Rule { lhs: vec![Y_, X_], rhs: yx_rule.clone() },
        Rule { lhs: vec![Y_, Y_], rhs: y_sq_rhs.clone() },
        Rule { lhs: vec![X_, X_, X_, X_], rhs: vec![] },
    ]);
    // printed relations, for the closure check
    relations.extend(vec![
        (p1(&[A_, X_]), pc(xa_c.clone(), &[X_, A_])),
        (p1(&[B_, X_]), pc(xa_c, &[X_, B_])),
        (p1(&[C_, X_]), pc(xc_c.clone(), &[X_, C_])),
        (p1(&[D_, X_]), pc(xc_c, &[X_, D_])),
        (p1(&[Y_, A_]), ya_rule),
        (p1(&[Y_, B_]), yb_rule),
        (p1(&[Y_, C_]), yc_rule),
        (p1(&[Y_, D_]), yd_rule),
        (p1(&[Y_, X_]), yx_rule),
        (p1(&[Y_, Y_]), y_sq_rhs),
        (p1(&[X_, X_, X_, X_]), vec![]),
        (
            vec![(fe(1), vec![X_, Y_]), (l4.clone(), vec![Y_, X_])],
            pc(omega, &[C_, A_]),
        ),
    ]);

    let mut gens = h_generator_specs();
    match family {
        5 => {
            gens.push(GeneratorSpec {
                name: "x",
                comult: vec![
                    (fe(1), vec![X_], vec![]),
                    (fe(1), a_word(j), vec![X_]),
                    (neg(&(&l2 + &l4)), word_then(B_, jm1, &[]), vec![Y_]),
                ],
                counit: fe(0),
                antipode: vec![
                    (fe(-1), {
                        let mut w = a_word(s3j);
                        w.push(X_);
                        w
                    }),
                    (&(&l2 + &l4) * &xi(), word_then_a(s3jm1, &[C_, A_, A_, Y_])),
                ],
            });
            // the coproduct coefficient on the c-term is (l2 - l4)/2, the
            // value the zero-parameter bosonization carries (the general
            // closed form specializes through l1^3 l1 = 1 here)
            gens.push(GeneratorSpec {
                name: "y",
                comult: vec![
                    (fe(1), vec![Y_], vec![]),
                    (fe(1), word_then(D_, jm1, &[]), vec![Y_]),
                    (
                        &(&l2 - &l4) * &half(),
                        word_then(C_, jm1, &[]),
                        vec![X_],
                    ),
                ],
                counit: fe(0),
                antipode: vec![
                    (fe(-1), word_then_a(s3jm1, &[D_, D_, D_, Y_])),
                    (
                        neg(&(&(&(&l2 - &l4) * &half()) * &xp(3))),
                        word_then_a(s3jm1, &[B_, A_, A_, X_]),
                    ),
                ],
            });
        }
        _ => {
            let l2l4 = &l2 * &l4;
            gens.push(GeneratorSpec {
                name: "x",
                comult: vec![
                    (fe(1), vec![X_], vec![]),
                    (fe(1), word_then(D_, jm1, &[]), vec![X_]),
                    (&l2l4 - &fe(1), word_then(C_, jm1, &[]), vec![Y_]),
                ],
                counit: fe(0),
                antipode: vec![
                    (fe(-1), word_then_a(s3jm1, &[D_, D_, D_, X_])),
                    (
                        neg(&(&(&l2l4 - &fe(1)) * &xp(3))),
                        word_then_a(s3jm1, &[B_, A_, A_, Y_]),
                    ),
                ],
            });
            gens.push(GeneratorSpec {
                name: "y",
                comult: vec![
                    (fe(1), vec![Y_], vec![]),
                    (fe(1), a_word(j), vec![Y_]),
                    (
                        neg(&(&(&l2l4 + &fe(1)) * &half())),
                        word_then(B_, jm1, &[]),
                        vec![X_],
                    ),
                ],
                counit: fe(0),
                antipode: vec![
                    (fe(-1), {
                        let mut w = a_word(s3j);
                        w.push(Y_);
                        w
                    }),
                    (
                        &(&(&l2l4 + &fe(1)) * &half()) * &xi(),
                        word_then_a(s3jm1, &[C_, A_, A_, X_]),
                    ),
                ],
            });
        }
    }

    Ok(Presentation {
        gens,
        rules,
        relations,
        max_basis: 512,
        step_bound: 5_000_000,
    })
}

fn word_then_a(a_count: usize, tail: &[u8]) -> Word {
    let mut w = vec![A_; a_count];
    w.extend_from_slice(tail);
    w
}

pub fn build_lifting_hopf(
    family: u8,
    params: Params,
    mu: &FieldElement,
) -> Result<BuiltHopf, LiftingError> {
    let pres = lifting_presentation(family, params, mu).map_err(LiftingError::Params)?;
    pres.build().map_err(LiftingError::Build)
}

#[derive(Debug)]
pub enum LiftingError {
    Params(ParamError),
    Build(BuildError),
}

// ---------------------------------------------------------------------------
// the double's generators and relation list
// ---------------------------------------------------------------------------

/// Generator symbols of the double, in order: `g, h, x` from the dual factor
/// and `a, b, c, d` from `H`.
pub const DOUBLE_GENS: [&str; 7] = ["g", "h", "x", "a", "b", "c", "d"];

pub const DG: u8 = 0;
pub const DH: u8 = 1;
pub const DX: u8 = 2;
pub const DA: u8 = 3;
pub const DB: u8 = 4;
pub const DC: u8 = 5;
pub const DD: u8 = 6;

pub struct DoubleRelation {
    pub name: String,
    pub lhs: Poly,
    pub rhs: Poly,
}

fn rel(name: &str, lhs: Poly, rhs: Poly) -> DoubleRelation {
    DoubleRelation {
        name: name.into(),
        lhs,
        rhs,
    }
}

/// The full relation list of the double on the seven generators: the `H`
/// relations, the dual-factor relations and the sixteen cross relations.
pub fn double_relations() -> Vec<DoubleRelation> {
    let s2xi = &s2() * &xi();
    let mut rels = vec![
        // H-factor
        rel("a^4 = 1", p1(&[DA; 4]), p1(&[])),
        rel("b^2 = 0", p1(&[DB, DB]), vec![]),
        rel("c^2 = 0", p1(&[DC, DC]), vec![]),
        rel("d^4 = 1", p1(&[DD; 4]), p1(&[])),
        rel("a^2 d^2 = 1", p1(&[DA, DA, DD, DD]), p1(&[])),
        rel("ad = da", p1(&[DA, DD]), p1(&[DD, DA])),
        rel("bc = 0", p1(&[DB, DC]), vec![]),
        rel("cb = 0", p1(&[DC, DB]), vec![]),
        rel("ab = xi ba", p1(&[DA, DB]), pc(xi(), &[DB, DA])),
        rel("ac = xi ca", p1(&[DA, DC]), pc(xi(), &[DC, DA])),
        rel("bd = xi db", p1(&[DB, DD]), pc(xi(), &[DD, DB])),
        rel("cd = xi dc", p1(&[DC, DD]), pc(xi(), &[DD, DC])),
        rel("bd = ca", p1(&[DB, DD]), p1(&[DC, DA])),
        rel("ba = cd", p1(&[DB, DA]), p1(&[DC, DD])),
        // dual factor
        rel("g^4 = 1", p1(&[DG; 4]), p1(&[])),
        rel("h^2 = 1", p1(&[DH, DH]), p1(&[])),
        rel("hg = gh", p1(&[DH, DG]), p1(&[DG, DH])),
        rel("hx = -xh", p1(&[DH, DX]), pc(fe(-1), &[DX, DH])),
        rel("gx = xg", p1(&[DG, DX]), p1(&[DX, DG])),
        rel(
            "x^2 = 1 - g^2",
            p1(&[DX, DX]),
            vec![(fe(1), vec![]), (fe(-1), vec![DG, DG])],
        ),
        // grouplike cross relations
        rel("ag = ga", p1(&[DA, DG]), p1(&[DG, DA])),
        rel("ah = ha", p1(&[DA, DH]), p1(&[DH, DA])),
        rel("dg = gd", p1(&[DD, DG]), p1(&[DG, DD])),
        rel("dh = hd", p1(&[DD, DH]), p1(&[DH, DD])),
        rel("bg = gb", p1(&[DB, DG]), p1(&[DG, DB])),
        rel("bh = -hb", p1(&[DB, DH]), pc(fe(-1), &[DH, DB])),
        rel("cg = gc", p1(&[DC, DG]), p1(&[DG, DC])),
        rel("ch = -hc", p1(&[DC, DH]), pc(fe(-1), &[DH, DC])),
    ];
    rels.push(rel(
        "ax + xi xa = sqrt2 xi (c - ghb)",
        vec![(fe(1), vec![DA, DX]), (xi(), vec![DX, DA])],
        vec![(s2xi.clone(), vec![DC]), (-&s2xi, vec![DG, DH, DB])],
    ));
    rels.push(rel(
        "dx - xi xd = sqrt2 xi (ghc - b)",
        vec![(fe(1), vec![DD, DX]), (-&xi(), vec![DX, DD])],
        vec![(s2xi.clone(), vec![DG, DH, DC]), (-&s2xi, vec![DB])],
    ));
    rels.push(rel(
        "bx + xi xb = sqrt2 xi (d - gha)",
        vec![(fe(1), vec![DB, DX]), (xi(), vec![DX, DB])],
        vec![(s2xi.clone(), vec![DD]), (-&s2xi, vec![DG, DH, DA])],
    ));
    rels.push(rel(
        "cx - xi xc = sqrt2 xi (ghd - a)",
        vec![(fe(1), vec![DC, DX]), (-&xi(), vec![DX, DC])],
        vec![(s2xi.clone(), vec![DG, DH, DD]), (-&s2xi, vec![DA])],
    ));
    rels
}

// ---------------------------------------------------------------------------
// psi: A -> H^* (dual basis coordinates)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiNorm {
    /// `psi(x) = sqrt2 * xtilde` — the normalization the double's cross
    /// relations are stated with.
    Sqrt2,
    /// `psi(x) = xtilde`, a diagnostic to localize normalization-sensitive
    /// discrepancies.
    Diagnostic,
}

/// Matrix of `psi` in dual-basis coordinates of `H`: column `alpha` holds
/// `psi(e_alpha)` for the basis monomial `e_alpha` of `A`, expressed over
/// the dual basis `{m^*}` of `H` (same index order as `H`'s basis).
pub fn psi_matrix(built_h: &BuiltHopf, built_a: &BuiltHopf, norm: PsiNorm) -> Matrix {
    let h = &built_h.hopf;
    let hd = h.dual_hopf();
    let idx = |label: &str| h.label_index(label).expect("H basis label");
    let a_pows = ["1", "a", "a2", "a3"];
    let da_pows = ["d", "da", "da2", "da3"];
    let ba_pows = ["b", "ba", "ba2", "ba3"];
    let ca_pows = ["c", "ca", "ca2", "ca3"];
    let mut g_t: Sparse = Vec::new();
    let mut h_t: Sparse = Vec::new();
    let mut x_t: Sparse = Vec::new();
    for i in 0..4usize {
        g_t.push((idx(a_pows[i]) as u32, xp(i as i64)));
        g_t.push((idx(da_pows[i]) as u32, xp(i as i64 + 1)));
        h_t.push((idx(a_pows[i]) as u32, fe(1)));
        h_t.push((idx(da_pows[i]) as u32, fe(-1)));
        let coeff = match norm {
            PsiNorm::Sqrt2 => s2(),
            PsiNorm::Diagnostic => fe(1),
        };
        x_t.push((idx(ba_pows[i]) as u32, coeff.clone()));
        x_t.push((idx(ca_pows[i]) as u32, coeff));
    }
    g_t.sort_by_key(|(i, _)| *i);
    h_t.sort_by_key(|(i, _)| *i);
    x_t.sort_by_key(|(i, _)| *i);
    let gen_images = [g_t, h_t, x_t];
    let mut m = Matrix::zero(h.dim, built_a.hopf.dim);
    for (col, word) in built_a.words.iter().enumerate() {
        let mut acc = hd.unit.clone();
        for &g in word {
            acc = hd.mul_sparse(&acc, &gen_images[g as usize]);
        }
        for (r, c) in acc {
            m.set(r as usize, col, c);
        }
    }
    m
}
