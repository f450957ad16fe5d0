//! Exact dense linear algebra over [`FieldElement`]: rank, kernels, solving
//! and Kronecker products. Rank uses fraction-free (Bareiss) elimination on
//! a denominator-cleared copy; kernels and solving use ordinary exact
//! elimination with eager canonicalization.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::scalar::{FieldElement, Rational};

/// Dense row-major matrix of field elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl core::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}{}", self.get(r, c), if c + 1 < self.cols { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * s;
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![FieldElement::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] += &(a * &v[c]);
            }
        }
        out
    }

    /// Kronecker product with row-major convention: index `(i1, i2)` of the
    /// product maps to `i1 * b.rows + i2` (left factor outermost). Used with
    /// this convention everywhere tensor powers appear.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * b.rows, self.cols * b.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..b.rows {
                    for c2 in 0..b.cols {
                        let v = b.get(r2, c2);
                        if v.is_zero() {
                            continue;
                        }
                        out.set(r1 * b.rows + r2, c1 * b.cols + c2, a * v);
                    }
                }
            }
        }
        out
    }

    /// Exact rank by fraction-free Bareiss elimination on a copy whose rows
    /// are scaled integral; pivoting only needs nonzero tests.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        for r in 0..m.rows {
            clear_row_denominators(&mut m, r);
        }
        let mut prev = FieldElement::one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // pick the pivot row with the fewest nonzero entries to limit fill
            let mut pivot = None;
            let mut best = usize::MAX;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    let nnz = m.row(r).iter().filter(|e| !e.is_zero()).count();
                    if nnz < best {
                        best = nnz;
                        pivot = Some(r);
                    }
                }
            }
            let Some(p) = pivot else { continue };
            if p != row {
                for c in 0..m.cols {
                    let idx_a = row * m.cols + c;
                    let idx_b = p * m.cols + c;
                    m.data.swap(idx_a, idx_b);
                }
            }
            let piv = m.get(row, col).clone();
            for r in (row + 1)..m.rows {
                if m.row(r).iter().all(FieldElement::is_zero) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let val = &(&piv * m.get(r, c)) - &(&factor * m.get(row, c));
                    let reduced = exact_div(&val, &prev);
                    m.set(r, c, reduced);
                }
            }
            prev = piv;
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Basis of the right null space `{v : m v = 0}`; empty iff full column
    /// rank.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let (ech, pivots) = self.echelonize();
        let pivot_cols: Vec<usize> = pivots.clone();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if !pivot_cols.contains(&c) {
                free_cols.push(c);
            }
        }
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![FieldElement::zero(); self.cols];
            v[fc] = FieldElement::one();
            // back-substitute: row i has pivot at pivot_cols[i] with entry 1
            for (i, &pc) in pivot_cols.iter().enumerate().rev() {
                let mut s = FieldElement::zero();
                for c in (pc + 1)..self.cols {
                    if !ech.get(i, c).is_zero() && !v[c].is_zero() {
                        s += &(ech.get(i, c) * &v[c]);
                    }
                }
                v[pc] = -s;
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution `X` of `self * X = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "rhs row mismatch");
        // eliminate on the augmented matrix
        let mut aug = Matrix::zero(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= aug.rows {
                break;
            }
            let Some(p) = (row..aug.rows).find(|&r| !aug.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..aug.cols {
                    let (ia, ib) = (row * aug.cols + c, p * aug.cols + c);
                    aug.data.swap(ia, ib);
                }
            }
            let inv = aug.get(row, col).inverse().expect("pivot nonzero");
            for c in 0..aug.cols {
                let v = aug.get(row, c) * &inv;
                aug.set(row, c, v);
            }
            for r in 0..aug.rows {
                if r == row || aug.get(r, col).is_zero() {
                    continue;
                }
                let f = aug.get(r, col).clone();
                for c in 0..aug.cols {
                    let v = aug.get(r, c) - &(&f * aug.get(row, c));
                    aug.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        // inconsistency: a zero row of the coefficient part with nonzero rhs
        for r in row..aug.rows {
            if (0..self.cols).all(|c| aug.get(r, c).is_zero())
                && (0..rhs.cols).any(|c| !aug.get(r, self.cols + c).is_zero())
            {
                return None;
            }
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, aug.get(i, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        if self.mul(&x) == Matrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Reduced row echelon form together with pivot columns; rows of the
    /// result are normalized to leading entry 1. Also used as the naive
    /// rational-elimination rank oracle.
    pub fn echelonize(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let (ia, ib) = (row * m.cols + c, p * m.cols + c);
                    m.data.swap(ia, ib);
                }
            }
            let inv = m.get(row, col).inverse().expect("pivot nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank_naive(&self) -> usize {
        self.echelonize().1.len()
    }
}

fn exact_div(a: &FieldElement, b: &FieldElement) -> FieldElement {
    if a.is_zero() {
        return FieldElement::zero();
    }
    if b.is_one() {
        return a.clone();
    }
    a * &b.inverse().expect("Bareiss divisor nonzero")
}

fn clear_row_denominators(m: &mut Matrix, r: usize) {
    let mut lcm = num_bigint::BigInt::one();
    for c in 0..m.cols() {
        for coeff in m.get(r, c).coeffs() {
            if !coeff.is_zero() {
                lcm = num_integer_lcm(&lcm, coeff.denom());
            }
        }
    }
    if lcm.is_one() {
        return;
    }
    let s = FieldElement::from_rational(Rational::from_integer(lcm));
    for c in 0..m.cols() {
        let v = m.get(r, c) * &s;
        m.set(r, c, v);
    }
}

fn num_integer_lcm(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    if a.is_zero() || b.is_zero() {
        return num_bigint::BigInt::zero();
    }
    let g = gcd_bigint(a.clone(), b.clone());
    (a / &g * b).abs()
}

fn gcd_bigint(mut a: num_bigint::BigInt, mut b: num_bigint::BigInt) -> num_bigint::BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Strip trailing zero coefficients (degree normalization).
pub fn poly_trim(mut p: Vec<FieldElement>) -> Vec<FieldElement> {
    while p.len() > 1 && p.last().is_some_and(FieldElement::is_zero) {
        p.pop();
    }
    p
}

/// Euclidean gcd of univariate polynomials over the field, coefficients in
/// ascending degree order.
pub fn poly_gcd(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_rem(&a, &b);
        a = b;
        b = poly_trim(r);
    }
    a
}

fn poly_rem(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if db == 0 {
        return vec![FieldElement::zero()];
    }
    let lead = b.last().unwrap().inverse().expect("nonzero leading");
    while poly_trim(r.clone()).len() > db {
        r = poly_trim(r);
        let dr = r.len() - 1;
        let coeff = &r[dr].clone() * &lead;
        if !coeff.is_zero() {
            for i in 0..=db {
                let delta = &coeff * &b[i];
                r[dr - db + i] -= &delta;
            }
        }
        r.pop();
    }
    poly_trim(r)
}

/// Roots in the field of a polynomial of degree at most two, using exact
/// field square roots for the quadratic case.
pub fn poly_roots(p: &[FieldElement]) -> Vec<FieldElement> {
    let p = poly_trim(p.to_vec());
    match p.len() {
        0 | 1 => Vec::new(),
        2 => {
            let inv = p[1].inverse().expect("nonzero leading");
            vec![-&(&p[0] * &inv)]
        }
        3 => {
            let four = FieldElement::from_int(4);
            let disc = &(&p[1] * &p[1]) - &(&(&p[2] * &p[0]) * &four);
            let Some(root) = disc.sqrt() else {
                return Vec::new();
            };
            let two = FieldElement::from_int(2);
            let inv = (&p[2] * &two).inverse().expect("nonzero leading");
            let neg_p1 = -&p[1];
            let mut out = vec![&(&neg_p1 + &root) * &inv];
            if !root.is_zero() {
                out.push(&(&neg_p1 - &root) * &inv);
            }
            out
        }
        _ => panic!("poly_roots only handles degree <= 2"),
    }
}

/// Incrementally built subspace with exact membership tests, used for
/// rank-extension arguments (subalgebra closures, new-relation extraction).
pub struct Span {
    dim_ambient: usize,
    // rows in reduced echelon form
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim_ambient: usize) -> Self {
        Span {
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; returns the residual.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim_ambient);
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in 0..self.dim_ambient {
                if !row[c].is_zero() {
                    let delta = &f * &row[c];
                    v[c] -= &delta;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Insert `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inverse().expect("nonzero");
        for c in 0..self.dim_ambient {
            r[c] = &r[c] * &inv;
        }
        // keep reduced form: eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in 0..self.dim_ambient {
                    let delta = &f * &r[c];
                    row[c] -= &delta;
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }
}
