use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
/// Coefficient `i` multiplies `q^i`; trailing zeros are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(alloc::vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = alloc::vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        IntPolynomial::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 + q)^e`.
    pub fn one_plus_q_pow(e: usize) -> Self {
        let base = IntPolynomial::from_i64s(&[1, 1]);
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Adds `c` to the coefficient of `q^k`.
    pub fn add_term(&mut self, k: usize, c: &BigInt) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Sum of coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// `q^n f(1/q)`: coefficient `k` of the result is coefficient `n - k`
    /// of `self`. Requires `degree <= n`.
    pub fn reverse_transform(&self, n: usize) -> Result<IntPolynomial> {
        match self.degree() {
            Some(d) if d > n => Err(invalid("degree exceeds the reversal length")),
            _ => Ok(IntPolynomial::from_coeffs((0..=n).map(|k| self.coeff(n - k)).collect())),
        }
    }

    /// Palindromic over the span from the valuation to the degree. The
    /// zero polynomial counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.valuation(), self.degree()) else {
            return true;
        };
        (lo..=hi).all(|k| self.coeffs[k] == self.coeffs[lo + hi - k])
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Human-readable form such as `q + 2q^2 - q^3`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add, IntPolynomial);
forward_owned!(Sub, sub, IntPolynomial);
forward_owned!(Mul, mul, IntPolynomial);

pub fn poly_add(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    f + g
}

pub fn poly_mul(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    f * g
}

pub fn poly_eval_at_one(f: &IntPolynomial) -> BigInt {
    f.eval_at_one()
}

/// Polynomial in `q` and `t`, stored sparsely by `(q-exponent, t-exponent)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPolynomial {
    pub fn zero() -> Self {
        BivarPolynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = BivarPolynomial::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, &c);
        }
        p
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, c: &BigInt) {
        let e = self.terms.entry((q_exp, t_exp)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    /// Sorted `(q-exponent, t-exponent, coefficient)` triples.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Specialization `t = 1`.
    pub fn at_t_one(&self) -> IntPolynomial {
        let mut p = IntPolynomial::zero();
        for (&(a, _), c) in &self.terms {
            p.add_term(a as usize, c);
        }
        p
    }

    pub fn add(&self, other: &BivarPolynomial) -> BivarPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl fmt::Debug for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() || (*a == 0 && *b == 0) {
                write!(f, "{c}")?;
            }
            match a {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{a}")?,
            }
            match b {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{b}")?,
            }
        }
        Ok(())
    }
}
