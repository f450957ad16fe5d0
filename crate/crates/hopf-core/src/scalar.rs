//! Exact arithmetic in the cyclotomic field `Q(z)` with `z` a primitive
//! eighth root of unity (`z^4 = -1`).
//!
//! Every scalar used by the algebras in this crate lives here: `xi = z^2`
//! is a primitive fourth root of unity and `sqrt2 = z - z^3` squares to 2.
//! Elements are kept in the canonical basis `{1, z, z^2, z^3}` with reduced
//! rational coefficients, so equality is coefficient-wise.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced rational with positive denominator; `num-rational` maintains the
/// canonical form on every operation.
pub type Rational = BigRational;

/// Build a rational from a signed numerator and positive denominator.
///
/// Panics if `den == 0`; use [`FieldElement::parse`] for fallible input.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    BigRational::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    Parse(&'static str),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

/// Element `c0 + c1 z + c2 z^2 + c3 z^3` of `Q(z)`, `z^4 = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    c: [Rational; 4],
}

impl FieldElement {
    pub fn new(c: [Rational; 4]) -> Self {
        FieldElement { c }
    }

    pub fn zero() -> Self {
        FieldElement {
            c: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut e = Self::zero();
        e.c[0] = rat_int(n);
        e
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut e = Self::zero();
        e.c[0] = r;
        e
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// `z`, the fixed primitive eighth root of unity.
    pub fn zeta() -> Self {
        let mut e = Self::zero();
        e.c[1] = Rational::one();
        e
    }

    /// `xi = z^2`, the primitive fourth root of unity fixed throughout.
    pub fn xi() -> Self {
        let mut e = Self::zero();
        e.c[2] = Rational::one();
        e
    }

    /// `sqrt2 = z - z^3`.
    pub fn sqrt2() -> Self {
        let mut e = Self::zero();
        e.c[1] = Rational::one();
        e.c[3] = -Rational::one();
        e
    }

    /// `xi^k` for any integer `k` (period 4).
    pub fn xi_pow(k: i64) -> Self {
        Self::xi().pow(k.rem_euclid(4) as u32)
    }

    /// `(-1)^k`.
    pub fn sign_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Rational part when the element lies in `Q`, otherwise `None`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Galois conjugate `z -> z^k` for odd `k` in `{1,3,5,7}`.
    pub fn galois(&self, k: u8) -> Self {
        debug_assert!(k % 2 == 1 && k < 8);
        let mut out = Self::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let e = (i as u32 * k as u32) % 8;
            // z^e with e in 0..8: z^(e) = (-1)^(e/4) z^(e mod 4)
            let idx = (e % 4) as usize;
            if e >= 4 {
                out.c[idx] -= ci;
            } else {
                out.c[idx] += ci;
            }
        }
        out
    }

    /// Field norm down to `Q`: the product of all four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let p = &(&(self * &self.galois(3)) * &self.galois(5)) * &self.galois(7);
        debug_assert!(p.as_rational().is_some(), "norm must be rational");
        p.c[0].clone()
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero());
        let conj = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        Ok(conj.scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for ci in out.c.iter_mut() {
            *ci *= r;
        }
        out
    }

    /// Numerical image under `z -> exp(i pi / 4)` as `(re, im)`; a sanity
    /// oracle only, never used in exact paths.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        // z^0, z^1, z^2, z^3 as (re, im)
        let basis = [(1.0, 0.0), (h, h), (0.0, 1.0), (-h, h)];
        let mut re = 0.0;
        let mut im = 0.0;
        for (ci, (br, bi)) in self.c.iter().zip(basis.iter()) {
            let v = rational_to_f64(ci);
            re += v * br;
            im += v * bi;
        }
        (re, im)
    }

    /// Exact square root in the field, when one exists. Splits through the
    /// tower `Q(z) = Q(i)(z)`, `z^2 = i`: for `d = d0 + d1 z` with
    /// `d0, d1` in `Q(i)`, a root `u + v z` satisfies `u^2 + i v^2 = d0`
    /// and `2uv = d1`, which reduces to square roots in `Q(i)` and `Q`.
    pub fn sqrt(&self) -> Option<FieldElement> {
        // Gaussian components: d0 = c0 + c2 i, d1 = c1 + c3 i
        let d0 = (self.c[0].clone(), self.c[2].clone());
        let d1 = (self.c[1].clone(), self.c[3].clone());
        let from_parts = |u: &(Rational, Rational), v: &(Rational, Rational)| {
            FieldElement::new([u.0.clone(), v.0.clone(), u.1.clone(), v.1.clone()])
        };
        let zero = (Rational::zero(), Rational::zero());
        if d1.0.is_zero() && d1.1.is_zero() {
            if let Some(u) = sqrt_in_gauss(&d0) {
                return Some(from_parts(&u, &zero));
            }
            // s = v z with i v^2 = d0, i.e. v^2 = -i d0
            let m_i_d0 = (d0.1.clone(), -d0.0.clone());
            if let Some(v) = sqrt_in_gauss(&m_i_d0) {
                return Some(from_parts(&zero, &v));
            }
            return None;
        }
        // 4u^4 - 4 d0 u^2 + i d1^2 = 0  =>  u^2 = (d0 +- sqrt(d0^2 - i d1^2)) / 2
        let d0sq = gauss_mul(&d0, &d0);
        let d1sq = gauss_mul(&d1, &d1);
        let i_d1sq = (-d1sq.1.clone(), d1sq.0.clone());
        let disc = (&d0sq.0 - &i_d1sq.0, &d0sq.1 - &i_d1sq.1);
        let root = sqrt_in_gauss(&disc)?;
        for sign in [1i64, -1] {
            let s = rat_int(sign);
            let usq = (
                (&d0.0 + &(&root.0 * &s)) / rat_int(2),
                (&d0.1 + &(&root.1 * &s)) / rat_int(2),
            );
            if let Some(u) = sqrt_in_gauss(&usq) {
                if u.0.is_zero() && u.1.is_zero() {
                    continue;
                }
                // v = d1 / (2u)
                let two_u = (&u.0 * &rat_int(2), &u.1 * &rat_int(2));
                let v = gauss_div(&d1, &two_u);
                let cand = from_parts(&u, &v);
                if &cand * &cand == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Parse the textual literal format: terms `n`, `n/d`, optionally times
    /// one of `z`, `z2`, `z3`, `xi`, `sqrt2`, joined by `+`/`-`. `xi` is
    /// `z2` and `sqrt2` is `z - z3`; zero is `0`.
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        let mut out = Self::zero();
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty literal"));
        }
        let mut rest = s;
        let mut sign = 1i64;
        let mut first = true;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                if first {
                    return Err(ScalarError::Parse("empty literal"));
                }
                break;
            }
            if !first {
                if let Some(r) = rest.strip_prefix('+') {
                    sign = 1;
                    rest = r;
                } else if let Some(r) = rest.strip_prefix('-') {
                    sign = -1;
                    rest = r;
                } else {
                    return Err(ScalarError::Parse("expected + or - between terms"));
                }
                rest = rest.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            }
            let term_end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = rest[..term_end].trim();
            rest = &rest[term_end..];
            if term.is_empty() {
                return Err(ScalarError::Parse("empty term"));
            }
            let (coeff, atom) = split_term(term)?;
            let coeff = coeff * rat_int(sign);
            match atom {
                Atom::One => out.c[0] += coeff,
                Atom::Z => out.c[1] += coeff,
                Atom::Z2 => out.c[2] += coeff,
                Atom::Z3 => out.c[3] += coeff,
                Atom::Sqrt2 => {
                    out.c[1] += coeff.clone();
                    out.c[3] -= coeff;
                }
            }
            sign = 1;
            first = false;
        }
        Ok(out)
    }
}

enum Atom {
    One,
    Z,
    Z2,
    Z3,
    Sqrt2,
}

fn parse_atom(s: &str) -> Result<Atom, ScalarError> {
    match s {
        "z" => Ok(Atom::Z),
        "z2" => Ok(Atom::Z2),
        "z3" => Ok(Atom::Z3),
        "xi" => Ok(Atom::Z2),
        "sqrt2" => Ok(Atom::Sqrt2),
        _ => Err(ScalarError::Parse("unknown symbol")),
    }
}

fn split_term(term: &str) -> Result<(Rational, Atom), ScalarError> {
    if let Some((num, sym)) = term.split_once('*') {
        let coeff = parse_rational(num.trim())?;
        let atom = parse_atom(sym.trim())?;
        Ok((coeff, atom))
    } else if term.chars().next().is_some_and(|ch| ch.is_ascii_digit()) {
        Ok((parse_rational(term)?, Atom::One))
    } else {
        Ok((Rational::one(), parse_atom(term)?))
    }
}

fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s.trim(), None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ScalarError::Parse("bad numerator"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ScalarError::Parse("bad denominator"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

type Gauss = (Rational, Rational);

fn gauss_mul(a: &Gauss, b: &Gauss) -> Gauss {
    (&(&a.0 * &b.0) - &(&a.1 * &b.1), &(&a.0 * &b.1) + &(&a.1 * &b.0))
}

fn gauss_div(a: &Gauss, b: &Gauss) -> Gauss {
    let n = &(&b.0 * &b.0) + &(&b.1 * &b.1);
    let conj = (b.0.clone(), -b.1.clone());
    let p = gauss_mul(a, &conj);
    (&p.0 / &n, &p.1 / &n)
}

/// Exact square root of a rational, when it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Square root in the Gaussian field `Q(i)`, components as pairs.
fn sqrt_in_gauss(w: &Gauss) -> Option<Gauss> {
    let (a, b) = w;
    if b.is_zero() {
        if let Some(x) = rational_sqrt(a) {
            return Some((x, Rational::zero()));
        }
        let neg = -a.clone();
        if let Some(y) = rational_sqrt(&neg) {
            return Some((Rational::zero(), y));
        }
        return None;
    }
    // x^2 = (a + sqrt(a^2 + b^2)) / 2, y = b / (2x)
    let norm = &(a * a) + &(b * b);
    let root = rational_sqrt(&norm)?;
    for sign in [1i64, -1] {
        let xsq = (a + &(&root * &rat_int(sign))) / rat_int(2);
        if let Some(x) = rational_sqrt(&xsq) {
            if x.is_zero() {
                continue;
            }
            let y = b / &(&x * &rat_int(2));
            return Some((x, y));
        }
    }
    None
}

fn rational_to_f64(r: &Rational) -> f64 {
    // Good enough for a 1e-10 sanity oracle on small test values.
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let syms = ["", "z", "z2", "z3"];
        let mut first = true;
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let (mag, neg) = if ci.is_negative() {
                (-ci.clone(), true)
            } else {
                (ci.clone(), false)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                fmt_rational(&mag, f)?;
            } else if mag.is_one() {
                write!(f, "{}", syms[i])?;
            } else {
                fmt_rational(&mag, f)?;
                write!(f, "*{}", syms[i])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        out
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let mut out = self.clone();
        for a in out.c.iter_mut() {
            *a = -a.clone();
        }
        out
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let e = i + j;
                let idx = e % 4;
                if e >= 4 {
                    out.c[idx] -= prod;
                } else {
                    out.c[idx] += prod;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

/// Deterministic xorshift generator for randomized property checks; keeps the
/// core crate free of RNG dependencies.
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64 {
            state: seed.max(1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Small random rational with numerator in `-5..=5`, denominator in `1..=4`.
    pub fn small_rational(&mut self) -> Rational {
        let num = self.below(11) as i64 - 5;
        let den = self.below(4) as i64 + 1;
        rat(num, den)
    }

    pub fn small_field_element(&mut self) -> FieldElement {
        FieldElement::new([
            self.small_rational(),
            self.small_rational(),
            self.small_rational(),
            self.small_rational(),
        ])
    }
}

/// Sum of a list of elements, convenience for tests and assembly code.
pub fn sum(elems: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::zero();
    for e in elems {
        acc += e;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        FieldElement::parse(s).unwrap()
    }

    #[test]
    fn xi_is_primitive_fourth_root() {
        let xi = FieldElement::xi();
        assert_eq!(xi.pow(2), -FieldElement::one());
        assert_eq!(xi.pow(4), FieldElement::one());
        assert!(xi.pow(1) != FieldElement::one() && xi.pow(2) != FieldElement::one());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = FieldElement::sqrt2();
        assert_eq!(&s * &s, FieldElement::from_int(2));
    }

    #[test]
    fn add_examples() {
        let xi = FieldElement::xi();
        assert!((&xi + &(-&xi)).is_zero());
        let s = FieldElement::sqrt2();
        let double = &s + &s;
        assert_eq!(double.coeffs()[1], rat_int(2));
        assert_eq!(double.coeffs()[3], rat_int(-2));
        let e = &FieldElement::one() + &xi;
        assert_eq!(e.coeffs()[0], rat_int(1));
        assert_eq!(e.coeffs()[2], rat_int(1));
    }

    #[test]
    fn mul_examples() {
        let xi = FieldElement::xi();
        let s = FieldElement::sqrt2();
        assert_eq!(&xi * &xi, FieldElement::from_int(-1));
        assert_eq!(&s * &s, FieldElement::from_int(2));
        // xi * sqrt2 = z^3 + z, cross-checked numerically below
        let p = &xi * &s;
        assert_eq!(p.coeffs(), &[rat_int(0), rat_int(1), rat_int(0), rat_int(1)]);
        let (re, im) = p.to_complex_f64();
        let (er, ei) = {
            // i * sqrt(2) = sqrt(2) i
            (0.0, core::f64::consts::SQRT_2)
        };
        assert!((re - er).abs() < 1e-10 && (im - ei).abs() < 1e-10);
    }

    #[test]
    fn inverse_examples() {
        let xi = FieldElement::xi();
        assert_eq!(xi.inverse().unwrap(), -&xi);
        let s = FieldElement::sqrt2();
        assert_eq!(
            s.inverse().unwrap(),
            s.scale(&rat(1, 2))
        );
        let e = &FieldElement::one() + &xi;
        let inv = e.inverse().unwrap();
        let expected = (&FieldElement::one() - &xi).scale(&rat(1, 2));
        assert_eq!(inv, expected);
        assert!((&e * &inv).is_one());
        assert_eq!(
            FieldElement::zero().inverse(),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = XorShift64::new(0x5eed);
        for _ in 0..10_000 {
            let a = rng.small_field_element();
            let b = rng.small_field_element();
            let c = rng.small_field_element();
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }

    #[test]
    fn inverse_random() {
        let mut rng = XorShift64::new(0xabcdef);
        let mut checked = 0;
        while checked < 500 {
            let a = rng.small_field_element();
            if a.is_zero() {
                continue;
            }
            assert!((&a * &a.inverse().unwrap()).is_one());
            checked += 1;
        }
    }

    #[test]
    fn float_oracle_on_products() {
        let mut rng = XorShift64::new(7);
        for _ in 0..200 {
            let a = rng.small_field_element();
            let b = rng.small_field_element();
            let p = &a * &b;
            let (ar, ai) = a.to_complex_f64();
            let (br, bi) = b.to_complex_f64();
            let (pr, pi) = p.to_complex_f64();
            assert!((pr - (ar * br - ai * bi)).abs() < 1e-10);
            assert!((pi - (ar * bi + ai * br)).abs() < 1e-10);
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let cases = [
            "0",
            "1",
            "-1/2",
            "z",
            "-z3",
            "1/2 + 3*z - z2 + 7/5*z3",
            "2*z2",
        ];
        for s in cases {
            let e = fe(s);
            let printed = alloc::format!("{e}");
            assert_eq!(fe(&printed), e, "round trip through `{printed}`");
        }
        assert_eq!(fe("xi"), FieldElement::xi());
        assert_eq!(fe("sqrt2"), FieldElement::sqrt2());
        assert_eq!(fe("1/2*sqrt2"), FieldElement::sqrt2().scale(&rat(1, 2)));
        assert_eq!(fe("3 - xi"), &FieldElement::from_int(3) - &FieldElement::xi());
    }

    #[test]
    fn exact_square_roots() {
        let two = FieldElement::from_int(2);
        let r = two.sqrt().unwrap();
        assert_eq!(&r * &r, two);
        assert_eq!(FieldElement::xi().sqrt().map(|s| &s * &s), Some(FieldElement::xi()));
        assert!(FieldElement::from_int(3).sqrt().is_none());
        assert!(FieldElement::from_int(-4).sqrt().is_some()); // (2 xi)^2 = -4
        let mut rng = XorShift64::new(31);
        for _ in 0..200 {
            let a = rng.small_field_element();
            let sq = &a * &a;
            let s = sq.sqrt().expect("square has a root");
            assert_eq!(&s * &s, sq);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(FieldElement::parse("1/0").is_err());
        assert!(FieldElement::parse("").is_err());
        assert!(FieldElement::parse("q").is_err());
        assert!(FieldElement::parse("1 +").is_err());
    }
}
