//! Presentation-to-basis rewriting engine: oriented relations reduce words
//! over the generators to normal form, the irreducible words form the basis,
//! and the Hopf structure is extended from generator data (comultiplication
//! and counit multiplicatively, antipode anti-multiplicatively).
//!
//! Confluence is not proven symbolically; it is certified a posteriori by
//! the exhaustive associativity test on the built algebra.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::hopf::{sp_from_map, sp_unit, FinHopf, Sparse, Tens};
use crate::linalg::Matrix;
use crate::scalar::FieldElement;

/// Word in generator indices.
pub type Word = Vec<u8>;

/// Linear combination of words.
pub type Poly = Vec<(FieldElement, Word)>;

pub fn word(gens: &[u8]) -> Word {
    gens.to_vec()
}

pub fn mono(c: FieldElement, w: &[u8]) -> Poly {
    vec![(c, w.to_vec())]
}

pub fn poly_one() -> Poly {
    vec![(FieldElement::one(), Vec::new())]
}

#[derive(Clone)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Poly,
}

#[derive(Clone)]
pub struct GeneratorSpec {
    pub name: &'static str,
    /// `Delta(g) = sum c * u (x) w` with `u`, `w` words.
    pub comult: Vec<(FieldElement, Word, Word)>,
    pub counit: FieldElement,
    /// `S(g)` as a linear combination of words.
    pub antipode: Poly,
}

#[derive(Clone)]
pub struct Presentation {
    pub gens: Vec<GeneratorSpec>,
    pub rules: Vec<Rule>,
    /// Full relation list `lhs = rhs` for module verification; may repeat
    /// the oriented rules and add redundant printed relations.
    pub relations: Vec<(Poly, Poly)>,
    pub max_basis: usize,
    pub step_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    NonTerminating { context: String },
    BasisOverflow { cap: usize },
    NotClosed { context: String },
    AntipodeSingular,
}

impl core::fmt::Display for BuildError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BuildError::NonTerminating { context } => {
                write!(f, "rewriting exceeded step bound: {context}")
            }
            BuildError::BasisOverflow { cap } => {
                write!(f, "basis enumeration exceeded cap {cap}")
            }
            BuildError::NotClosed { context } => {
                write!(f, "presentation inconsistent: {context}")
            }
            BuildError::AntipodeSingular => write!(f, "antipode matrix is singular"),
        }
    }
}

/// A presentation together with its built structure-constant bundle.
pub struct BuiltHopf {
    pub hopf: FinHopf,
    pub words: Vec<Word>,
    pub index: BTreeMap<Word, usize>,
    pub presentation: Presentation,
}

impl Presentation {
    fn find_match(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.len();
                if pos + l <= w.len() && w[pos..pos + l] == rule.lhs[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_match(w).is_none()
    }

    /// Reduce a word to a combination of irreducible words.
    pub fn reduce_word(&self, w: &Word) -> Result<BTreeMap<Word, FieldElement>, BuildError> {
        let mut out: BTreeMap<Word, FieldElement> = BTreeMap::new();
        let mut stack: Vec<(FieldElement, Word)> = vec![(FieldElement::one(), w.clone())];
        let mut steps = 0usize;
        while let Some((c, w)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match self.find_match(&w) {
                None => {
                    let e = out.entry(w).or_insert_with(FieldElement::zero);
                    *e += &c;
                }
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > self.step_bound {
                        return Err(BuildError::NonTerminating {
                            context: format!("word of length {}", w.len()),
                        });
                    }
                    let rule = &self.rules[ri];
                    for (rc, rw) in &rule.rhs {
                        let mut nw = Vec::with_capacity(w.len() + rw.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        stack.push((&c * rc, nw));
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn reduce_poly(&self, p: &Poly) -> Result<BTreeMap<Word, FieldElement>, BuildError> {
        let mut out: BTreeMap<Word, FieldElement> = BTreeMap::new();
        for (c, w) in p {
            for (rw, rc) in self.reduce_word(w)? {
                let e = out.entry(rw).or_insert_with(FieldElement::zero);
                *e += &(&rc * c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Breadth-first enumeration of irreducible words (prefix-closed).
    pub fn enumerate_basis(&self) -> Result<Vec<Word>, BuildError> {
        let mut basis: Vec<Word> = vec![Vec::new()];
        let mut queue: VecDeque<Word> = VecDeque::new();
        queue.push_back(Vec::new());
        while let Some(w) = queue.pop_front() {
            for g in 0..self.gens.len() as u8 {
                let mut w2 = w.clone();
                w2.push(g);
                if self.is_irreducible(&w2) {
                    basis.push(w2.clone());
                    queue.push_back(w2);
                    if basis.len() > self.max_basis {
                        return Err(BuildError::BasisOverflow { cap: self.max_basis });
                    }
                }
            }
        }
        Ok(basis)
    }

    pub fn label(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let g = w[i];
            let mut run = 1;
            while i + run < w.len() && w[i + run] == g {
                run += 1;
            }
            out.push_str(self.gens[g as usize].name);
            if run > 1 {
                out.push_str(&format!("{run}"));
            }
            i += run;
        }
        out
    }

    /// Build the structure-constant bundle. Errors signal either a
    /// non-terminating rule set or coalgebra data inconsistent with the
    /// relations.
    pub fn build(self) -> Result<BuiltHopf, BuildError> {
        let words = self.enumerate_basis()?;
        let dim = words.len();
        let index: BTreeMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let to_sparse = |m: &BTreeMap<Word, FieldElement>| -> Sparse {
            let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
            for (w, c) in m {
                let i = *index.get(w).expect("irreducible word must be a basis word");
                let e = acc.entry(i as u32).or_insert_with(FieldElement::zero);
                *e += c;
            }
            sp_from_map(acc)
        };

        // right multiplication by a generator, per basis word
        let ngen = self.gens.len();
        let mut rmul: Vec<Vec<Sparse>> = vec![Vec::with_capacity(dim); ngen];
        for g in 0..ngen {
            for w in &words {
                let mut w2 = w.clone();
                w2.push(g as u8);
                let red = self.reduce_word(&w2)?;
                rmul[g].push(to_sparse(&red));
            }
        }
        let apply_rgen = |v: &Sparse, g: usize| -> Sparse {
            let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
            for (i, c) in v {
                crate::hopf::sp_add_scaled(&mut acc, &rmul[g][*i as usize], c);
            }
            sp_from_map(acc)
        };
        let eval_word_from = |start: Sparse, w: &[u8]| -> Sparse {
            let mut acc = start;
            for &g in w {
                acc = apply_rgen(&acc, g as usize);
            }
            acc
        };
        let eval_word = |w: &[u8]| -> Sparse { eval_word_from(sp_unit(0), w) };
        let eval_poly = |p: &Poly| -> Sparse {
            let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
            for (c, w) in p {
                crate::hopf::sp_add_scaled(&mut acc, &eval_word(w), c);
            }
            sp_from_map(acc)
        };

        // unit is the empty word, enumerated first
        let unit = sp_unit(0);

        // full multiplication table via generator chains
        let mut mult: Vec<Sparse> = Vec::with_capacity(dim * dim);
        for u in 0..dim {
            for v in &words {
                mult.push(eval_word_from(sp_unit(u), v));
            }
        }

        // comultiplication: generator tensors, extended multiplicatively
        // along the prefix-closed word order
        let gen_delta: Vec<Tens> = self
            .gens
            .iter()
            .map(|g| {
                let mut t = Tens::new();
                for (c, u, w) in &g.comult {
                    let su = eval_word(u);
                    let sw = eval_word(w);
                    for (iu, cu) in &su {
                        for (iw, cw) in &sw {
                            let v = &(c * cu) * cw;
                            if v.is_zero() {
                                continue;
                            }
                            let e = t.entry((*iu, *iw)).or_insert_with(FieldElement::zero);
                            *e += &v;
                        }
                    }
                }
                crate::hopf::tens_normalize(&mut t);
                t
            })
            .collect();

        // a temporary bundle so tensor-square products use the mult table
        let half = FinHopf {
            dim,
            labels: words.iter().map(|w| self.label(w)).collect(),
            unit: unit.clone(),
            mult: mult.clone(),
            comult: vec![Vec::new(); dim],
            counit: vec![FieldElement::zero(); dim],
            antipode: Matrix::identity(dim),
        };

        let mut delta: Vec<Tens> = Vec::with_capacity(dim);
        for (i, w) in words.iter().enumerate() {
            if w.is_empty() {
                let mut t = Tens::new();
                t.insert((0, 0), FieldElement::one());
                delta.push(t);
                continue;
            }
            // parent prefix is a basis word enumerated earlier
            let parent = &w[..w.len() - 1];
            let pidx = *index.get(parent).expect("prefix-closed basis");
            debug_assert!(pidx < i);
            let g = *w.last().unwrap() as usize;
            let t = half.mul_tens(&delta[pidx], &gen_delta[g]);
            delta.push(t);
        }

        // counit multiplicatively
        let mut counit: Vec<FieldElement> = Vec::with_capacity(dim);
        for w in &words {
            let mut acc = FieldElement::one();
            for &g in w {
                acc = &acc * &self.gens[g as usize].counit;
            }
            counit.push(acc);
        }

        // antipode anti-multiplicatively
        let gen_antipode: Vec<Sparse> = self.gens.iter().map(|g| eval_poly(&g.antipode)).collect();
        let mut s_cols: Vec<Sparse> = Vec::with_capacity(dim);
        for (i, w) in words.iter().enumerate() {
            if w.is_empty() {
                s_cols.push(sp_unit(0));
                continue;
            }
            let parent = &w[..w.len() - 1];
            let pidx = *index.get(parent).expect("prefix-closed basis");
            debug_assert!(pidx < i);
            let g = *w.last().unwrap() as usize;
            // S(w g) = S(g) S(w)
            s_cols.push(half.mul_sparse(&gen_antipode[g], &s_cols[pidx]));
        }
        let mut antipode = Matrix::zero(dim, dim);
        for (i, col) in s_cols.iter().enumerate() {
            for (r, c) in col {
                antipode.set(*r as usize, i, c.clone());
            }
        }
        if antipode.inverse().is_none() {
            return Err(BuildError::AntipodeSingular);
        }

        let hopf = FinHopf {
            dim,
            labels: words.iter().map(|w| self.label(w)).collect(),
            unit,
            mult,
            comult: delta
                .iter()
                .map(|t| t.iter().map(|((a, b), c)| (*a, *b, c.clone())).collect())
                .collect(),
            counit,
            antipode,
        };

        // consistency of the coalgebra data with the relations: Delta, eps
        // must agree on both sides of every relation, otherwise the
        // multiplicative extension is not well defined.
        for (li, (lhs, rhs)) in self.relations.iter().enumerate() {
            let dl = delta_of_poly(&hopf, &gen_delta, lhs);
            let dr = delta_of_poly(&hopf, &gen_delta, rhs);
            if !crate::hopf::tens_eq(&dl, &dr) {
                return Err(BuildError::NotClosed {
                    context: format!("comultiplication differs across relation {li}"),
                });
            }
            let el = eps_of_poly(&self, lhs);
            let er = eps_of_poly(&self, rhs);
            if el != er {
                return Err(BuildError::NotClosed {
                    context: format!("counit differs across relation {li}"),
                });
            }
        }

        // key consistency probe across reduction strategies: the table entry
        // mult[u][v] was built by generator chains; compare with one-shot
        // reduction of the concatenated word on a sample
        for u in (0..dim).step_by((dim / 7).max(1)) {
            for v in (0..dim).step_by((dim / 5).max(1)) {
                let mut cat = words[u].clone();
                cat.extend_from_slice(&words[v]);
                let direct = to_sparse(&self.reduce_word(&cat)?);
                if !crate::hopf::sp_eq(&direct, &hopf.mult[u * dim + v]) {
                    return Err(BuildError::NotClosed {
                        context: format!(
                            "reduction strategies disagree at ({}, {})",
                            hopf.labels[u], hopf.labels[v]
                        ),
                    });
                }
            }
        }

        Ok(BuiltHopf {
            hopf,
            words,
            index,
            presentation: self,
        })
    }
}

// Delta of a polynomial evaluated multiplicatively from generator tensors,
// without consulting the built comult table (used for the closure check).
fn delta_of_poly(h: &FinHopf, gen_delta: &[Tens], p: &Poly) -> Tens {
    let mut acc = Tens::new();
    for (c, w) in p {
        let mut t = Tens::new();
        t.insert((0, 0), FieldElement::one());
        for &g in w {
            t = h.mul_tens(&t, &gen_delta[g as usize]);
        }
        crate::hopf::tens_add_scaled(&mut acc, &t, c);
    }
    crate::hopf::tens_normalize(&mut acc);
    acc
}

fn eps_of_poly(p: &Presentation, poly: &Poly) -> FieldElement {
    let mut acc = FieldElement::zero();
    for (c, w) in poly {
        let mut e = FieldElement::one();
        for &g in w {
            e = &e * &p.gens[g as usize].counit;
        }
        acc += &(&e * c);
    }
    acc
}

impl BuiltHopf {
    /// Evaluate a word in the algebra.
    pub fn eval_word(&self, w: &[u8]) -> Sparse {
        let mut acc = self.hopf.unit.clone();
        for &g in w {
            // generator g is the basis word [g] when irreducible; reduce via
            // the mult table against its basis expression
            let gw = self
                .index
                .get(&vec![g])
                .map(|&i| sp_unit(i))
                .unwrap_or_else(|| {
                    let red = self
                        .presentation
                        .reduce_word(&vec![g])
                        .expect("generator reduces");
                    let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
                    for (w, c) in red {
                        let i = *self.index.get(&w).expect("basis word");
                        let e = acc.entry(i as u32).or_insert_with(FieldElement::zero);
                        *e += &c;
                    }
                    sp_from_map(acc)
                });
            acc = self.hopf.mul_sparse(&acc, &gw);
        }
        acc
    }

    pub fn eval_poly(&self, p: &Poly) -> Sparse {
        let mut acc: BTreeMap<u32, FieldElement> = BTreeMap::new();
        for (c, w) in p {
            crate::hopf::sp_add_scaled(&mut acc, &self.eval_word(w), c);
        }
        sp_from_map(acc)
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.hopf.labels.iter().position(|l| l == label)
    }

    /// Generator basis vectors, for generator-complete verification schemes.
    pub fn generator_vectors(&self) -> Vec<Sparse> {
        (0..self.presentation.gens.len() as u8)
            .map(|g| self.eval_word(&[g]))
            .collect()
    }
}
