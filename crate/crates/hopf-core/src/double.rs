//! The Drinfeld double of `H^cop`, built generically from structure
//! constants: the carrier is the tensor coalgebra of the (transported) dual
//! factor and `H^cop`, with the cross multiplication
//!
//! `(p (x) u)(q (x) v) = <q_(3), u_(1)> <q_(1), Sinv(u_(3))> p q_(2) (x) u_(2) v`
//!
//! where the `q`-legs carry the plain dual comultiplication. The first
//! factor is expressed in the basis of `A` through `psi`, so generators and
//! relations can be checked against the printed presentation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::hopf::{sp_from_map, sp_unit, sp_add_scaled, sp_eq, FinHopf, Sparse};
use crate::linalg::Matrix;
use crate::presentation::{BuiltHopf, Poly};
use crate::presets::{self, psi_matrix, PsiNorm};
use crate::report::Report;
use crate::scalar::FieldElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleError {
    AntipodeNotInvertible,
    PsiSingular,
}

/// The double as a structure-constant bundle plus the data needed to work
/// with its two factors.
pub struct Double {
    pub carrier: FinHopf,
    pub a_dim: usize,
    pub h_dim: usize,
    /// Exponents `(i, j, k)` of each `A`-basis monomial `g^i h^j x^k`.
    pub a_exponents: Vec<(u8, u8, u8)>,
}

/// Everything the later stages need, built once.
pub struct Universe {
    pub h: BuiltHopf,
    pub a: BuiltHopf,
    pub h_dual: FinHopf,
    pub psi: Matrix,
    pub psi_inv: Matrix,
    pub double: Double,
}

pub fn universe(norm: PsiNorm) -> Result<Universe, DoubleError> {
    let h = presets::build_h();
    let a = presets::build_a();
    let h_dual = h.hopf.dual_hopf();
    let psi = psi_matrix(&h, &a, norm);
    let psi_inv = psi.inverse().ok_or(DoubleError::PsiSingular)?;
    let double = drinfeld_double(&h, &a, &psi)?;
    Ok(Universe {
        h,
        a,
        h_dual,
        psi,
        psi_inv,
        double,
    })
}

impl Double {
    pub fn pair_index(&self, alpha: usize, u: usize) -> usize {
        alpha * self.h_dim + u
    }

    /// Embed a vector of the first factor (in `A` coordinates).
    pub fn embed_first(&self, v: &Sparse) -> Sparse {
        v.iter()
            .map(|(alpha, c)| (self.pair_index(*alpha as usize, self.h_unit_index()) as u32, c.clone()))
            .collect()
    }

    /// Embed a vector of the `H` factor.
    pub fn embed_second(&self, v: &Sparse) -> Sparse {
        v.iter()
            .map(|(u, c)| (self.pair_index(self.a_unit_index(), *u as usize) as u32, c.clone()))
            .collect()
    }

    fn a_unit_index(&self) -> usize {
        0
    }

    fn h_unit_index(&self) -> usize {
        0
    }

    /// Generator vectors in carrier coordinates, ordered as
    /// [`presets::DOUBLE_GENS`].
    pub fn generator_vectors(&self, built_h: &BuiltHopf, built_a: &BuiltHopf) -> Vec<Sparse> {
        let mut out = Vec::new();
        for g in 0..3u8 {
            let idx = built_a.index[&vec![g]];
            out.push(sp_unit(self.pair_index(idx, self.h_unit_index())));
        }
        for g in 0..4u8 {
            let idx = built_h.index[&vec![g]];
            out.push(sp_unit(self.pair_index(self.a_unit_index(), idx)));
        }
        out
    }

    /// Evaluate a polynomial over the seven generator symbols inside the
    /// carrier.
    pub fn eval_poly(&self, gens: &[Sparse], p: &Poly) -> Sparse {
        let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
        for (c, w) in p {
            let mut v = self.carrier.unit.clone();
            for &g in w {
                v = self.carrier.mul_sparse(&v, &gens[g as usize]);
            }
            sp_add_scaled(&mut acc, &v, c);
        }
        sp_from_map(acc)
    }
}

/// Build the double generically. `psi` maps `A`-basis monomials to dual
/// coordinates of `H` and must be a Hopf algebra isomorphism onto the dual;
/// the construction only uses it as an exact change of basis.
pub fn drinfeld_double(
    built_h: &BuiltHopf,
    built_a: &BuiltHopf,
    psi: &Matrix,
) -> Result<Double, DoubleError> {
    let h = &built_h.hopf;
    let a = &built_a.hopf;
    let nh = h.dim;
    let na = a.dim;
    let dim = na * nh;

    let s_h = &h.antipode;
    if s_h.inverse().is_none() {
        return Err(DoubleError::AntipodeNotInvertible);
    }

    // Delta^2 of A (plain) and of K = H^cop (flip of H's comultiplication)
    let d2_a: Vec<Vec<(u32, u32, u32, FieldElement)>> = (0..na)
        .map(|beta| {
            let mut out = Vec::new();
            for (j, k, c) in &a.comult[beta] {
                for (p, q, cc) in &a.comult[*j as usize] {
                    out.push((*p, *q, *k, c * cc));
                }
            }
            out
        })
        .collect();
    let d2_k: Vec<Vec<(u32, u32, u32, FieldElement)>> = (0..nh)
        .map(|u| {
            // Delta_K(u) = sum (k, j) over Delta_H(u) = sum (j, k)
            let dk: Vec<(u32, u32, FieldElement)> = h.comult[u]
                .iter()
                .map(|(j, k, c)| (*k, *j, c.clone()))
                .collect();
            let mut out = Vec::new();
            for (j, k, c) in &dk {
                // (Delta_K (x) id) Delta_K
                let dj: Vec<(u32, u32, FieldElement)> = h.comult[*j as usize]
                    .iter()
                    .map(|(p, q, cc)| (*q, *p, cc.clone()))
                    .collect();
                for (p, q, cc) in &dj {
                    out.push((*p, *q, *k, c * cc));
                }
            }
            out
        })
        .collect();

    // pairing tables: <psi(e_beta), e_u> and <psi(e_beta), S_H(e_u)>
    let psi_t = psi.transpose();
    let pair_eval = &psi_t; // pair_eval[beta][u] = psi[u][beta]
    let pair_s = psi_t.mul(s_h); // <psi(e_beta), S_H(e_u)>

    // multiplication table
    let mut mult: Vec<Sparse> = vec![Vec::new(); dim * dim];
    for alpha in 0..na {
        for u in 0..nh {
            let row_idx = alpha * nh + u;
            for beta in 0..na {
                for v in 0..nh {
                    let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
                    for (b1, b2, b3, cb) in &d2_a[beta] {
                        for (u1, u2, u3, cu) in &d2_k[u] {
                            let p1 = pair_eval.get(*b3 as usize, *u1 as usize);
                            if p1.is_zero() {
                                continue;
                            }
                            let p2 = pair_s.get(*b1 as usize, *u3 as usize);
                            if p2.is_zero() {
                                continue;
                            }
                            let w = &(&(cb * cu) * p1) * p2;
                            if w.is_zero() {
                                continue;
                            }
                            // first factor: mult_A(beta2, alpha); second:
                            // mult_H(u2, v)
                            let fa = a.mul_basis(*b2 as usize, alpha);
                            let fh = h.mul_basis(*u2 as usize, v);
                            for (ia, ca) in fa {
                                let wa = &w * ca;
                                if wa.is_zero() {
                                    continue;
                                }
                                for (ih, ch) in fh {
                                    let val = &wa * ch;
                                    if val.is_zero() {
                                        continue;
                                    }
                                    let idx = (*ia as usize * nh + *ih as usize) as u32;
                                    let e = acc.entry(idx).or_insert_with(FieldElement::zero);
                                    *e += &val;
                                }
                            }
                        }
                    }
                    mult[row_idx * dim + beta * nh + v] = sp_from_map(acc);
                }
            }
        }
    }

    // tensor coalgebra with the first factor's comultiplication flipped
    let mut comult: Vec<Vec<(u32, u32, FieldElement)>> = vec![Vec::new(); dim];
    for alpha in 0..na {
        for u in 0..nh {
            let mut entry = Vec::new();
            for (a1, a2, ca) in &a.comult[alpha] {
                for (j, k, ch) in &h.comult[u] {
                    // Delta_D = (alpha_(2) (x) u_(1)K) (x) (alpha_(1) (x) u_(2)K)
                    // with (u_(1)K, u_(2)K) = (k, j)
                    let left = (*a2 as usize * nh + *k as usize) as u32;
                    let right = (*a1 as usize * nh + *j as usize) as u32;
                    entry.push((left, right, ca * ch));
                }
            }
            comult[alpha * nh + u] = entry;
        }
    }

    let mut counit = vec![FieldElement::zero(); dim];
    for alpha in 0..na {
        for u in 0..nh {
            counit[alpha * nh + u] = &a.counit[alpha] * &h.counit[u];
        }
    }

    let labels: Vec<_> = (0..dim)
        .map(|idx| {
            let alpha = idx / nh;
            let u = idx % nh;
            format!("{}|{}", a.labels[alpha], h.labels[u])
        })
        .collect();

    let a_unit = single_index(&a.unit);
    let h_unit = single_index(&h.unit);
    let unit = sp_unit(a_unit * nh + h_unit);

    let mut carrier = FinHopf {
        dim,
        labels,
        unit,
        mult,
        comult,
        counit,
        antipode: Matrix::zero(dim, dim),
    };

    // antipode via the factor antipodes: S(p (x) u) = (1 (x) S_K u)(S' p (x) 1)
    // with S_K = S_H^{-1} (one twist) and S' = S_A (the first factor carries
    // both the opposite product and the opposite coproduct, so the two
    // antipode inversions cancel)
    let s_h_inv = s_h.inverse().expect("checked above");
    let s_a = &a.antipode;
    let mut antipode = Matrix::zero(dim, dim);
    for alpha in 0..na {
        // psi(S_A(e_alpha)) embedded in the first factor
        let mut first: Sparse = Vec::new();
        for r in 0..na {
            let c = s_a.get(r, alpha);
            if !c.is_zero() {
                first.push(((r * nh + h_unit) as u32, c.clone()));
            }
        }
        for u in 0..nh {
            let mut second: Sparse = Vec::new();
            for r in 0..nh {
                let c = s_h_inv.get(r, u);
                if !c.is_zero() {
                    second.push(((a_unit * nh + r) as u32, c.clone()));
                }
            }
            let col = carrier.mul_sparse(&second, &first);
            for (r, c) in col {
                antipode.set(r as usize, alpha * nh + u, c);
            }
        }
    }
    carrier.antipode = antipode;

    let a_exponents = built_a
        .words
        .iter()
        .map(|w| {
            let mut e = [0u8; 3];
            for &g in w {
                e[g as usize] += 1;
            }
            (e[0], e[1], e[2])
        })
        .collect();

    Ok(Double {
        carrier,
        a_dim: na,
        h_dim: nh,
        a_exponents,
    })
}

fn single_index(unit: &Sparse) -> usize {
    assert!(unit.len() == 1 && unit[0].1.is_one(), "unit must be a basis monomial");
    unit[0].0 as usize
}

/// Check every relation of the printed presentation inside the generic
/// double, plus the factor-embedding compatibilities.
pub fn verify_presentation(d: &Double, built_h: &BuiltHopf, built_a: &BuiltHopf) -> Report {
    let mut rep = Report::new("double presentation");
    let gens = d.generator_vectors(built_h, built_a);
    for r in presets::double_relations() {
        let lhs = d.eval_poly(&gens, &r.lhs);
        let rhs = d.eval_poly(&gens, &r.rhs);
        rep.check(r.name.clone(), sp_eq(&lhs, &rhs), "");
    }
    // the two factor embeddings respect the factor products
    let a = &built_a.hopf;
    let h = &built_h.hopf;
    let mut first_ok = true;
    'fa: for alpha in 0..a.dim {
        for beta in 0..a.dim {
            // first factor carries the opposite multiplication of A
            let expect = d.embed_first(a.mul_basis(beta, alpha));
            let got = d.carrier.mul_sparse(
                &d.embed_first(&sp_unit(alpha)),
                &d.embed_first(&sp_unit(beta)),
            );
            if !sp_eq(&expect, &got) {
                first_ok = false;
                break 'fa;
            }
        }
    }
    rep.check("first factor embeds the opposite algebra of A", first_ok, "");
    let mut second_ok = true;
    'fh: for u in 0..h.dim {
        for v in 0..h.dim {
            let expect = d.embed_second(h.mul_basis(u, v));
            let got = d.carrier.mul_sparse(
                &d.embed_second(&sp_unit(u)),
                &d.embed_second(&sp_unit(v)),
            );
            if !sp_eq(&expect, &got) {
                second_ok = false;
                break 'fh;
            }
        }
    }
    rep.check("second factor embeds H", second_ok, "");
    rep
}
