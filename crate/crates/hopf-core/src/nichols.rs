//! Nichols algebra computation for an exact braided vector space: quantum
//! symmetrizers via braided lifts of permutations, graded dimensions as
//! symmetrizer ranks, kernel relations, presented-quotient dimensions, and
//! the finiteness classification with explicit infinite-type certificates.

use alloc::vec;
use alloc::vec::Vec;

use crate::double::Universe;
use crate::linalg::{poly_gcd, poly_roots, poly_trim, Matrix, Span};
use crate::presets::{self, Params};
use crate::rep::SimpleId;
use crate::scalar::FieldElement;

/// A braided vector space: an invertible solution of the braid equation on
/// `V (x) V`.
#[derive(Clone)]
pub struct BraidedVS {
    pub dim: usize,
    pub c: Matrix,
    /// Parameter tuple when the braiding came from a translated simple
    /// module; enables the dual-route certificate.
    pub provenance: Option<SimpleId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    NotYangBaxter,
    NotInvertible,
    DimensionMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Finite(usize),
    InfiniteCertificate(CertKind),
    Unknown(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertKind {
    /// A vector `v` with `c(v (x) v) = v (x) v`.
    EigenvalueOne,
    /// The dual parameter tuple carries a direct eigenvalue-one certificate.
    DualRoute(Params),
}

pub struct NicholsReport {
    /// `dims[n]` is the rank of the degree-`n` symmetrizer (`dims[0] = 1`).
    pub dims: Vec<usize>,
    /// Kernel bases per degree (index aligned with `dims`).
    pub kernels: Vec<Vec<Vec<FieldElement>>>,
    pub verdict: Verdict,
}

impl BraidedVS {
    pub fn new(dim: usize, c: Matrix, provenance: Option<SimpleId>) -> Result<Self, BraidError> {
        if c.rows() != dim * dim || c.cols() != dim * dim {
            return Err(BraidError::DimensionMismatch);
        }
        if !crate::yd::verify_braid_equation(&c, dim) {
            return Err(BraidError::NotYangBaxter);
        }
        if c.rank() != dim * dim {
            return Err(BraidError::NotInvertible);
        }
        Ok(BraidedVS { dim, c, provenance })
    }

    pub fn from_simple(u: &Universe, id: SimpleId) -> Result<Self, BraidError> {
        let y = crate::yd::translated(u, id).map_err(|_| BraidError::NotYangBaxter)?;
        Self::new(y.dim, crate::yd::braiding(&y), Some(id))
    }
}

/// `c` acting on strands `(pos, pos+1)` of the `n`-fold tensor power,
/// zero-indexed.
pub fn braid_at(b: &BraidedVS, n: usize, pos: usize) -> Matrix {
    assert!(pos + 1 < n);
    let d = b.dim;
    let left = d.pow(pos as u32);
    let right = d.pow((n - pos - 2) as u32);
    Matrix::identity(left).kron(&b.c).kron(&Matrix::identity(right))
}

/// Braided lift of a permutation along the given reduced word (positions of
/// adjacent transpositions, zero-indexed, applied left to right).
pub fn braided_lift(b: &BraidedVS, n: usize, word: &[usize]) -> Matrix {
    let mut m = Matrix::identity(b.dim.pow(n as u32));
    for &pos in word {
        m = m.mul(&braid_at(b, n, pos));
    }
    m
}

/// A reduced word for a permutation (one-line, zero-indexed) by bubble
/// sort: each recorded position is a descent swap, so the word length is
/// the inversion number.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let n = p.len();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..n - 1 {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    word
}

/// A second reduced word using rightmost-descent selection, for the
/// well-definedness spot check.
pub fn reduced_word_alt(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let n = p.len();
    let mut word = Vec::new();
    loop {
        let mut found = None;
        for i in (0..n - 1).rev() {
            if p[i] > p[i + 1] {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                p.swap(i, i + 1);
                word.push(i);
            }
            None => break,
        }
    }
    word.reverse();
    word
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Brute-force symmetrizer: the sum of braided lifts over an explicit
/// enumeration with one reduced word each. Exponential; the oracle for the
/// coset-factorized route.
pub fn symmetrizer_bruteforce(b: &BraidedVS, n: usize) -> Matrix {
    let mut acc = Matrix::zero(b.dim.pow(n as u32), b.dim.pow(n as u32));
    for p in all_permutations(n) {
        acc = acc.add(&braided_lift(b, n, &reduced_word(&p)));
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeTooLarge(pub usize);

/// Quantum symmetrizer of degree `n`, assembled through the coset
/// factorization: every permutation splits uniquely as one moving the last
/// strand into place after a permutation of the first `n - 1`, with
/// lengths adding, so the full sum telescopes into the recursion
/// `S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ...)`.
pub fn quantum_symmetrizer(b: &BraidedVS, n: usize, cap: usize) -> Result<Matrix, DegreeTooLarge> {
    if n > cap {
        return Err(DegreeTooLarge(n));
    }
    assert!(n >= 1);
    let d = b.dim;
    let mut s = Matrix::identity(d);
    for m in 2..=n {
        let dim_m = d.pow(m as u32);
        let mut x = Matrix::identity(dim_m);
        let mut tail = Matrix::identity(dim_m);
        for k in (1..m).rev() {
            // tail accumulates c_{m-1} c_{m-2} ... c_k (one-indexed k)
            tail = tail.mul(&braid_at(b, m, k - 1));
            x = x.add(&tail);
        }
        s = s.kron(&Matrix::identity(d)).mul(&x);
    }
    Ok(s)
}

/// Graded dimensions as symmetrizer ranks, with the finiteness dichotomy.
/// A `Finite` verdict requires two consecutive zero ranks (the second is
/// computed past `maxdeg` if necessary, up to the hard cap).
pub fn nichols_dims(
    b: &BraidedVS,
    maxdeg: usize,
    u: Option<&Universe>,
) -> Result<NicholsReport, DegreeTooLarge> {
    let cap = maxdeg.max(8);
    let mut dims = vec![1usize];
    let mut kernels: Vec<Vec<Vec<FieldElement>>> = vec![Vec::new()];
    let mut first_zero: Option<usize> = None;
    let mut n = 1;
    while n <= maxdeg || (first_zero == Some(n - 1) && n <= cap) {
        let s = quantum_symmetrizer(b, n, cap)?;
        let rank = s.rank();
        dims.push(rank);
        kernels.push(s.kernel_basis());
        if rank == 0 {
            if let Some(z) = first_zero {
                if z == n - 1 {
                    // two consecutive zeros: finite
                    let total: usize = dims.iter().take(z + 1).sum();
                    return Ok(NicholsReport {
                        dims,
                        kernels,
                        verdict: Verdict::Finite(total),
                    });
                }
            } else {
                first_zero = Some(n);
            }
        } else {
            first_zero = None;
        }
        n += 1;
    }
    // no double zero: look for an infinite-type certificate. Second-family
    // tuples are routed through the dual even when a direct eigenvector
    // exists, matching the reporting policy of the classification table.
    if let (Some(universe), Some(SimpleId::TwoDim(i, j, k, l))) = (u, b.provenance) {
        if let Some(q) = dual_infinite_certificate(universe, (i, j, k, l)) {
            return Ok(NicholsReport {
                dims,
                kernels,
                verdict: Verdict::InfiniteCertificate(CertKind::DualRoute(q)),
            });
        }
    }
    if eigenvalue_one_certificate(b).is_some() {
        return Ok(NicholsReport {
            dims,
            kernels,
            verdict: Verdict::InfiniteCertificate(CertKind::EigenvalueOne),
        });
    }
    Ok(NicholsReport {
        dims,
        kernels,
        verdict: Verdict::Unknown(maxdeg),
    })
}

/// A nonzero `v` with `c(v (x) v) = v (x) v`, searched among basis vectors
/// and, for two-dimensional spaces, across all lines through the exact
/// quadratic sections of the symmetric-square locus.
pub fn eigenvalue_one_certificate(b: &BraidedVS) -> Option<Vec<FieldElement>> {
    let d = b.dim;
    let check = |v: &[FieldElement]| -> bool {
        let mut vv = vec![FieldElement::zero(); d * d];
        for (i, a) in v.iter().enumerate() {
            for (j, bb) in v.iter().enumerate() {
                vv[i * d + j] = a * bb;
            }
        }
        let image = b.c.apply(&vv);
        image == vv && v.iter().any(|x| !x.is_zero())
    };
    for i in 0..d {
        let mut v = vec![FieldElement::zero(); d];
        v[i] = FieldElement::one();
        if check(&v) {
            return Some(v);
        }
    }
    // pair sections: v = e_i + t e_j
    let cmi = {
        let mut m = b.c.clone();
        let id = Matrix::identity(d * d);
        m = m.sub(&id);
        m
    };
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            // (c - 1)(v (x) v) = w_ii + t (w_ij + w_ji) + t^2 w_jj = 0
            let col = |a: usize, bidx: usize| -> Vec<FieldElement> {
                let mut e = vec![FieldElement::zero(); d * d];
                e[a * d + bidx] = FieldElement::one();
                cmi.apply(&e)
            };
            let wii = col(i, i);
            let wjj = col(j, j);
            let wij = col(i, j);
            let wji = col(j, i);
            let mut g: Vec<FieldElement> = Vec::new();
            let mut inconsistent = false;
            for m in 0..d * d {
                let q = poly_trim(vec![
                    wii[m].clone(),
                    &wij[m] + &wji[m],
                    wjj[m].clone(),
                ]);
                if q.len() == 1 && q[0].is_zero() {
                    continue;
                }
                g = if g.is_empty() { q } else { poly_gcd(&g, &q) };
                if g.len() == 1 && !g[0].is_zero() {
                    inconsistent = true;
                    break;
                }
            }
            if inconsistent {
                continue;
            }
            if g.is_empty() {
                continue; // no constraint here beyond the basis cases
            }
            for t in poly_roots(&g) {
                if t.is_zero() {
                    continue;
                }
                let mut v = vec![FieldElement::zero(); d];
                v[i] = FieldElement::one();
                v[j] = t;
                if check(&v) {
                    return Some(v);
                }
            }
        }
    }
    None
}

/// For a second-family tuple, the dual parameter tuple, provided the dual's
/// braiding carries a direct eigenvalue-one certificate. Tuples with their
/// own direct certificate are not routed here.
pub fn dual_infinite_certificate(u: &Universe, p: Params) -> Option<Params> {
    if !presets::FAMILY2.contains(&p) {
        return None;
    }
    let q = presets::dual_params(p);
    let dual = BraidedVS::from_simple(u, SimpleId::TwoDim(q.0, q.1, q.2, q.3)).ok()?;
    eigenvalue_one_certificate(&dual).map(|_| q)
}

/// Basis of `ker S_n` modulo the degree-`n` slice of the two-sided ideal
/// generated by the lower-degree kernels.
pub fn new_relations(b: &BraidedVS, n: usize, cap: usize) -> Result<Vec<Vec<FieldElement>>, DegreeTooLarge> {
    assert!(n >= 2);
    let d = b.dim;
    let mut lower_kernels: Vec<Vec<Vec<FieldElement>>> = vec![Vec::new(); n];
    for m in 2..n {
        lower_kernels[m] = quantum_symmetrizer(b, m, cap)?.kernel_basis();
    }
    let mut ideal = Span::new(d.pow(n as u32));
    for m in 2..n {
        for r in &lower_kernels[m] {
            for left in 0..=(n - m) {
                let right = n - m - left;
                for lw in 0..d.pow(left as u32) {
                    for rw in 0..d.pow(right as u32) {
                        // e_lw (x) r (x) e_rw
                        let mut v = vec![FieldElement::zero(); d.pow(n as u32)];
                        let stride_mid = d.pow(right as u32);
                        for (mid, c) in r.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let idx = (lw * d.pow(m as u32) + mid) * stride_mid + rw;
                            v[idx] = c.clone();
                        }
                        ideal.insert(&v);
                    }
                }
            }
        }
    }
    let kernel = quantum_symmetrizer(b, n, cap)?.kernel_basis();
    let mut new = Vec::new();
    for v in kernel {
        if ideal.insert(&v) {
            new.push(v);
        }
    }
    Ok(new)
}

/// Whether a homogeneous degree-`n` tensor lies in the Nichols ideal slice.
pub fn check_relation_membership(
    b: &BraidedVS,
    rel: &[FieldElement],
    n: usize,
    cap: usize,
) -> Result<bool, DegreeTooLarge> {
    let s = quantum_symmetrizer(b, n, cap)?;
    Ok(s.apply(rel).iter().all(FieldElement::is_zero))
}

/// Degreewise dimensions of the quotient of the tensor algebra by the
/// two-sided ideal generated by the given homogeneous relations.
pub fn presented_quotient_dims(
    dim_v: usize,
    relations: &[(usize, Vec<FieldElement>)],
    maxdeg: usize,
) -> Vec<usize> {
    let mut dims = vec![1usize];
    for n in 1..=maxdeg {
        let ambient = dim_v.pow(n as u32);
        let mut ideal = Span::new(ambient);
        for (m, r) in relations {
            if *m > n {
                continue;
            }
            for left in 0..=(n - m) {
                let right = n - m - left;
                for lw in 0..dim_v.pow(left as u32) {
                    for rw in 0..dim_v.pow(right as u32) {
                        let mut v = vec![FieldElement::zero(); ambient];
                        let stride_mid = dim_v.pow(right as u32);
                        for (mid, c) in r.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let idx = (lw * dim_v.pow(*m as u32) + mid) * stride_mid + rw;
                            v[idx] = c.clone();
                        }
                        ideal.insert(&v);
                    }
                }
            }
        }
        dims.push(ambient - ideal.dim());
    }
    dims
}

/// Computed classification of one simple module's Nichols algebra.
pub fn classify(u: &Universe, id: SimpleId) -> Verdict {
    let b = BraidedVS::from_simple(u, id).expect("translated braiding");
    nichols_dims(&b, 6, Some(u))
        .expect("degree cap suffices")
        .verdict
}

/// Character parameters whose Nichols algebra is the two-dimensional
/// exterior line, as computed from first principles (braiding scalar -1).
pub fn computed_exterior_chars() -> Vec<(u8, u8, u8)> {
    presets::all_char_params()
        .into_iter()
        .filter(|&(i, j, k)| {
            crate::yd::derived_char_braiding(i, j, k) == -FieldElement::one()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// printed presentations of the finite Nichols algebras
// ---------------------------------------------------------------------------

/// Printed generators-and-relations presentation for a finite-type tuple,
/// as homogeneous tensors `(degree, coefficients)`; `v1 (x) v2` sits at
/// index `0 * 2 + 1`.
pub fn printed_relations(p: Params) -> Option<Vec<(usize, Vec<FieldElement>)>> {
    let fam = presets::family_of(p)?;
    let (_, l2, _, l4) = presets::lambdas(p);
    let fe = FieldElement::from_int;
    let mut rels = Vec::new();
    let e = |i: usize, j: usize, c: FieldElement| -> Vec<FieldElement> {
        let mut v = vec![fe(0); 4];
        v[i * 2 + j] = c;
        v
    };
    let add = |a: Vec<FieldElement>, b: Vec<FieldElement>| -> Vec<FieldElement> {
        a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
    };
    match fam {
        3 => {
            rels.push((2, e(0, 0, fe(1))));
            rels.push((2, add(e(0, 1, fe(1)), e(1, 0, -&l2))));
            let mut v24 = vec![fe(0); 16];
            v24[15] = fe(1);
            rels.push((4, v24));
        }
        4 => {
            rels.push((2, e(0, 0, fe(1))));
            rels.push((2, add(e(0, 1, fe(1)), e(1, 0, l2.clone()))));
            let mut v24 = vec![fe(0); 16];
            v24[15] = fe(1);
            rels.push((4, v24));
        }
        5 | 6 => {
            rels.push((2, add(e(0, 0, fe(1)), e(1, 1, &fe(2) * &l4))));
            rels.push((2, add(e(0, 1, fe(1)), e(1, 0, l4.clone()))));
            let mut v14 = vec![fe(0); 16];
            v14[0] = fe(1);
            rels.push((4, v14));
        }
        _ => return None,
    }
    Some(rels)
}
