//! Finite-dimensional modules over the double: construction from generator
//! matrices, relation checking against the printed presentation, the full
//! structure-constant (algebra-map) check against the generic double,
//! simplicity, intertwiners, duals, and the simple-module census with its
//! trace-form completeness certificate.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::double::Universe;
use crate::hopf::Sparse;
use crate::linalg::Matrix;
use crate::presentation::{BuiltHopf, Poly};
use crate::presets::{self, Params};
use crate::scalar::FieldElement;

/// A left module over the double, stored as action matrices for the seven
/// generators in the order of [`presets::DOUBLE_GENS`].
#[derive(Clone)]
pub struct AlgModule {
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SimpleId {
    Char(u8, u8, u8),
    TwoDim(u8, u8, u8, u8),
}

impl core::fmt::Display for SimpleId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SimpleId::Char(i, j, k) => write!(f, "chi({i},{j},{k})"),
            SimpleId::TwoDim(i, j, k, l) => write!(f, "V({i},{j},{k},{l})"),
        }
    }
}

impl SimpleId {
    pub fn dim(&self) -> usize {
        match self {
            SimpleId::Char(..) => 1,
            SimpleId::TwoDim(..) => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    ParameterOutOfRange,
    RelationViolated { relation: alloc::string::String },
    UnsupportedDimension,
}

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn xp(k: i64) -> FieldElement {
    FieldElement::xi_pow(k)
}

fn diag(a: FieldElement, b: FieldElement) -> Matrix {
    Matrix::from_rows(vec![vec![a, fe(0)], vec![fe(0), b]])
}

fn scalar1(a: FieldElement) -> Matrix {
    Matrix::from_rows(vec![vec![a]])
}

/// The character module with `chi(g) = (-1)^i`, `chi(h) = (-1)^j`,
/// `chi(a) = xi^k`; the `d`-value is forced by the cross relations.
pub fn one_dim_module(i: u8, j: u8, k: u8) -> Result<AlgModule, ModuleError> {
    if i > 1 || j > 1 || k > 3 {
        return Err(ModuleError::ParameterOutOfRange);
    }
    let m = AlgModule {
        dim: 1,
        gens: vec![
            scalar1(FieldElement::sign_pow(i as i64)),
            scalar1(FieldElement::sign_pow(j as i64)),
            scalar1(fe(0)),
            scalar1(xp(k as i64)),
            scalar1(fe(0)),
            scalar1(fe(0)),
            scalar1(&FieldElement::sign_pow((i + j) as i64) * &xp(k as i64)),
        ],
    };
    check_relations(&m)?;
    Ok(m)
}

/// The two-dimensional module for eigenvalue data
/// `(l1, l2, l3, l4) = (xi^i, xi^j, (-1)^k, (-1)^iota)`; no membership or
/// relation check.
pub fn two_dim_from_lambdas(
    l1: &FieldElement,
    l2: &FieldElement,
    l3: &FieldElement,
    l4: &FieldElement,
) -> AlgModule {
    let xi = FieldElement::xi();
    let s2 = FieldElement::sqrt2();
    let half = FieldElement::from_ratio(1, 2);
    let l1c = l1.pow(3);
    let x2 = &(&(&s2 * &half) * &(&xi * &l1c)) * &(&(l2 * l3) - l4);
    let x3 = &(&s2 * &(&xi * l1)) * &(&(l2 * l3) + l4);
    AlgModule {
        dim: 2,
        gens: vec![
            diag(l2.clone(), l2.clone()),
            diag(l3.clone(), -l3),
            Matrix::from_rows(vec![vec![fe(0), x2], vec![x3, fe(0)]]),
            diag(-&(l4 * l1), &(&xi * l4) * l1),
            Matrix::from_rows(vec![vec![fe(0), l4.clone()], vec![fe(0), fe(0)]]),
            Matrix::from_rows(vec![vec![fe(0), fe(1)], vec![fe(0), fe(0)]]),
            diag(l1.clone(), &xi * l1),
        ],
    }
}

/// The simple two-dimensional module at a parameter tuple of the printed
/// family (`j` odd); relation-checked.
pub fn two_dim_module(p: Params) -> Result<AlgModule, ModuleError> {
    let (i, j, k, iota) = p;
    if i > 3 || (j != 1 && j != 3) || k > 1 || iota > 1 {
        return Err(ModuleError::ParameterOutOfRange);
    }
    let (l1, l2, l3, l4) = presets::lambdas(p);
    let m = two_dim_from_lambdas(&l1, &l2, &l3, &l4);
    check_relations(&m)?;
    Ok(m)
}

pub fn module_of(id: SimpleId) -> Result<AlgModule, ModuleError> {
    match id {
        SimpleId::Char(i, j, k) => one_dim_module(i, j, k),
        SimpleId::TwoDim(i, j, k, l) => two_dim_module((i, j, k, l)),
    }
}

fn eval_poly_matrices(gens: &[Matrix], dim: usize, p: &Poly) -> Matrix {
    let mut acc = Matrix::zero(dim, dim);
    for (c, w) in p {
        let mut m = Matrix::identity(dim);
        for &g in w {
            m = m.mul(&gens[g as usize]);
        }
        acc = acc.add(&m.scale(c));
    }
    acc
}

/// Every relation of the printed presentation as an exact matrix identity.
pub fn check_relations(m: &AlgModule) -> Result<(), ModuleError> {
    for r in presets::double_relations() {
        let lhs = eval_poly_matrices(&m.gens, m.dim, &r.lhs);
        let rhs = eval_poly_matrices(&m.gens, m.dim, &r.rhs);
        if lhs != rhs {
            return Err(ModuleError::RelationViolated { relation: r.name });
        }
    }
    Ok(())
}

/// Action of every basis element of the double, extended from the generator
/// matrices along the factorization of basis pairs into the two factors.
pub fn action_of_basis(m: &AlgModule, u: &Universe) -> Vec<Matrix> {
    let d = &u.double;
    let nh = d.h_dim;
    let g_m = &m.gens[0];
    let h_m = &m.gens[1];
    let x_m = &m.gens[2];
    // first-factor products reverse, so g^i h^j x^k acts as [x]^k [h]^j [g]^i
    let first: Vec<Matrix> = d
        .a_exponents
        .iter()
        .map(|&(i, j, k)| {
            let mut acc = Matrix::identity(m.dim);
            for _ in 0..k {
                acc = acc.mul(x_m);
            }
            for _ in 0..j {
                acc = acc.mul(h_m);
            }
            for _ in 0..i {
                acc = acc.mul(g_m);
            }
            acc
        })
        .collect();
    let second: Vec<Matrix> = u
        .h
        .words
        .iter()
        .map(|w| {
            let mut acc = Matrix::identity(m.dim);
            for &g in w {
                acc = acc.mul(&m.gens[3 + g as usize]);
            }
            acc
        })
        .collect();
    let mut out = Vec::with_capacity(d.carrier.dim);
    for alpha in 0..d.a_dim {
        for v in 0..nh {
            out.push(first[alpha].mul(&second[v]));
        }
    }
    out
}

/// Full structure-constant check: the extended action is an algebra map
/// from the generic double.
pub fn check_algebra_map(m: &AlgModule, u: &Universe) -> bool {
    let act = action_of_basis(m, u);
    let d = &u.double;
    let n = d.carrier.dim;
    if sparse_action(&act, &d.carrier.unit, m.dim) != Matrix::identity(m.dim) {
        return false;
    }
    for s in 0..n {
        for t in 0..n {
            let lhs = act[s].mul(&act[t]);
            let rhs = sparse_action(&act, d.carrier.mul_basis(s, t), m.dim);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn sparse_action(act: &[Matrix], v: &Sparse, dim: usize) -> Matrix {
    let mut acc = Matrix::zero(dim, dim);
    for (i, c) in v {
        acc = acc.add(&act[*i as usize].scale(c));
    }
    acc
}

/// A module assignment is accepted iff every relation of the presentation
/// holds for the generator matrices.
pub fn module_from_generators(
    built: &BuiltHopf,
    assignment: &[Matrix],
) -> Result<(), ModuleError> {
    let dim = assignment.first().map_or(0, Matrix::rows);
    if assignment.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(ModuleError::ParameterOutOfRange);
    }
    for (idx, (lhs, rhs)) in built.presentation.relations.iter().enumerate() {
        let l = eval_poly_matrices(assignment, dim, lhs);
        let r = eval_poly_matrices(assignment, dim, rhs);
        if l != r {
            return Err(ModuleError::RelationViolated {
                relation: format!("relation {idx}"),
            });
        }
    }
    Ok(())
}

/// Exact simplicity for dimensions 1 and 2: a two-dimensional module is
/// simple iff the generator matrices share no invariant line. Common lines
/// are intersected through the gcd of the per-generator eigenline
/// quadratics, with field square roots taken exactly.
pub fn is_simple(m: &AlgModule) -> Result<bool, ModuleError> {
    match m.dim {
        1 => Ok(true),
        2 => Ok(common_invariant_line(&m.gens).is_none()),
        _ => Err(ModuleError::UnsupportedDimension),
    }
}

fn common_invariant_line(gens: &[Matrix]) -> Option<(FieldElement, FieldElement)> {
    // candidate lines: span(0,1) checked directly, and span(1,t) where t is
    // a common root of q_M(t) = M10 + (M11 - M00) t - M01 t^2 over all
    // non-scalar generators
    let e2_invariant = gens.iter().all(|g| g.get(0, 1).is_zero());
    if e2_invariant {
        return Some((fe(0), fe(1)));
    }
    let mut g: Vec<FieldElement> = Vec::new();
    for m in gens {
        let q = vec![
            m.get(1, 0).clone(),
            m.get(1, 1) - m.get(0, 0),
            -m.get(0, 1),
        ];
        if q.iter().all(FieldElement::is_zero) {
            continue;
        }
        g = if g.is_empty() {
            crate::linalg::poly_trim(q)
        } else {
            crate::linalg::poly_gcd(&g, &crate::linalg::poly_trim(q))
        };
        if g.len() == 1 && !g[0].is_zero() {
            return None;
        }
    }
    if g.is_empty() {
        // every generator scalar: any line is invariant
        return Some((fe(1), fe(0)));
    }
    crate::linalg::poly_roots(&g).into_iter().next().map(|t| (fe(1), t))
}

/// Dimension of the submodule generated by a seed vector (spinning).
pub fn spin_submodule_dim(m: &AlgModule, seed: &[FieldElement]) -> usize {
    let mut span = crate::linalg::Span::new(m.dim);
    span.insert(seed);
    loop {
        let basis: Vec<Vec<FieldElement>> = span.basis().to_vec();
        let mut grew = false;
        for v in &basis {
            for g in &m.gens {
                if span.insert(&g.apply(v)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return span.dim();
        }
    }
}

/// Spinning fallback for higher dimensions: a sound non-simplicity witness
/// search over basis seeds and their pairwise sums. `Some(false)` when a
/// proper invariant subspace is found; `None` when the seed set is
/// inconclusive (no general simplicity certificate at these dimensions).
pub fn is_simple_spinning(m: &AlgModule) -> Option<bool> {
    if m.dim > 8 {
        return None;
    }
    let mut seeds: Vec<Vec<FieldElement>> = Vec::new();
    for i in 0..m.dim {
        let mut v = vec![FieldElement::zero(); m.dim];
        v[i] = fe(1);
        seeds.push(v);
    }
    for i in 0..m.dim {
        for j in (i + 1)..m.dim {
            let mut v = vec![FieldElement::zero(); m.dim];
            v[i] = fe(1);
            v[j] = fe(1);
            seeds.push(v);
        }
    }
    for s in &seeds {
        let d = spin_submodule_dim(m, s);
        if d > 0 && d < m.dim {
            return Some(false);
        }
    }
    None
}

/// Dimension of the space of module maps `m -> n`.
pub fn intertwiner_dim(m: &AlgModule, n: &AlgModule) -> usize {
    // unknowns T (n.dim x m.dim) with T rho_m(g) = rho_n(g) T
    let rows_per_gen = n.dim * m.dim;
    let mut sys = Matrix::zero(rows_per_gen * m.gens.len(), n.dim * m.dim);
    for (gi, (gm, gn)) in m.gens.iter().zip(n.gens.iter()).enumerate() {
        for r in 0..n.dim {
            for c in 0..m.dim {
                let row = gi * rows_per_gen + r * m.dim + c;
                for cp in 0..m.dim {
                    let v = gm.get(cp, c).clone();
                    if !v.is_zero() {
                        let col = r * m.dim + cp;
                        let cur = sys.get(row, col).clone();
                        sys.set(row, col, &cur + &v);
                    }
                }
                for rp in 0..n.dim {
                    let v = gn.get(r, rp).clone();
                    if !v.is_zero() {
                        let col = rp * m.dim + c;
                        let cur = sys.get(row, col).clone();
                        sys.set(row, col, &cur - &v);
                    }
                }
            }
        }
    }
    sys.kernel_basis().len()
}

/// Left dual module: a generator acts on the dual space through the
/// transpose of its antipode image's action.
pub fn dual_module(m: &AlgModule, u: &Universe) -> AlgModule {
    let act = action_of_basis(m, u);
    let d = &u.double;
    let gens = d.generator_vectors(&u.h, &u.a);
    let dual_gens = gens
        .iter()
        .map(|g| {
            let sg = d.carrier.antipode_sparse(g);
            sparse_action(&act, &sg, m.dim).transpose()
        })
        .collect();
    AlgModule {
        dim: m.dim,
        gens: dual_gens,
    }
}

/// Explicit intertwiner certifying `V(dual_params(p)) = V(p)^*`, normalized
/// to send the second basis vector to the first dual-basis functional. The
/// returned flag records whether its anti-diagonal coefficient equals the
/// printed closed form `xi l1^2 l4` (the computed value is its negative).
pub fn dual_intertwiner(p: Params, u: &Universe) -> Option<(Matrix, bool)> {
    let m = two_dim_module(p).ok()?;
    let dual = dual_module(&m, u);
    let expected = two_dim_module(presets::dual_params(p)).ok()?;
    let (l1, _, _, l4) = presets::lambdas(p);
    let printed = &(&FieldElement::xi() * &l1.pow(2)) * &l4;
    for kappa in [printed.clone(), -&printed] {
        let phi = Matrix::from_rows(vec![
            vec![fe(0), fe(1)],
            vec![kappa.clone(), fe(0)],
        ]);
        let ok = expected
            .gens
            .iter()
            .zip(dual.gens.iter())
            .all(|(ge, gd)| phi.mul(ge) == gd.mul(&phi));
        if ok {
            return Some((phi, kappa == printed));
        }
    }
    None
}

/// The printed list: sixteen characters and thirty-two two-dimensional
/// modules.
pub fn simple_list() -> Vec<(SimpleId, AlgModule)> {
    let mut out = Vec::new();
    for (i, j, k) in presets::all_char_params() {
        out.push((
            SimpleId::Char(i, j, k),
            one_dim_module(i, j, k).expect("character exists"),
        ));
    }
    for p in presets::all_two_dim_params() {
        out.push((
            SimpleId::TwoDim(p.0, p.1, p.2, p.3),
            two_dim_module(p).expect("module exists"),
        ));
    }
    out
}

/// The sixteen further two-dimensional simple modules uncovered by the
/// radical census: `l2 = +-1` with `l4 = l2 l3` forced by the relations.
/// Identified by exponents `(i, j, k)` with `l1 = xi^i`, `l2 = xi^j`
/// (`j` even), `l3 = (-1)^k`.
pub fn census_extras() -> Vec<((u8, u8, u8), AlgModule)> {
    let mut out = Vec::new();
    for i in 0..4u8 {
        for j in [0u8, 2] {
            for k in 0..2u8 {
                let l1 = xp(i as i64);
                let l2 = xp(j as i64);
                let l3 = FieldElement::sign_pow(k as i64);
                let l4 = &l2 * &l3;
                out.push(((i, j, k), two_dim_from_lambdas(&l1, &l2, &l3, &l4)));
            }
        }
    }
    out
}
