use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 x + ... + c_K x^K` with exact rational
/// coefficients. An EGF with terms `a_k` is stored as `c_k = a_k / k!`.
///
/// A series with no stored coefficients carries no information (it is what
/// differentiating an order-0 series produces).
#[derive(Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl RationalSeries {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        RationalSeries { coeffs }
    }

    /// The zero series known to order `order`.
    pub fn zero(order: usize) -> Self {
        RationalSeries { coeffs: alloc::vec![BigRational::zero(); order + 1] }
    }

    /// `x` to order `order`.
    pub fn x(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// A constant to order `order`.
    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `sum a_k x^k / k!`, truncated at the last supplied term.
    pub fn from_egf(terms: &[BigInt]) -> Self {
        RationalSeries {
            coeffs: terms
                .iter()
                .enumerate()
                .map(|(k, a)| BigRational::new(a.clone(), factorial(k)))
                .collect(),
        }
    }

    /// `a_k = k! c_k`; exact rationals are returned since a residual need
    /// not have integral EGF terms.
    pub fn egf_terms(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigRational::from_integer(factorial(k)))
            .collect()
    }

    /// Truncation order, `None` when no coefficient is known.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        RationalSeries { coeffs: self.coeffs.iter().take(order + 1).cloned().collect() }
    }

    fn common_len(&self, other: &Self) -> usize {
        self.coeffs.len().min(other.coeffs.len())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        RationalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        RationalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product, known to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(BigRational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &other.coeffs[k - i]
                })
            })
            .collect();
        RationalSeries { coeffs }
    }

    /// Term-wise derivative; the order drops by one.
    pub fn derive(&self) -> Self {
        RationalSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        }
    }

    /// `exp(f)` for `f(0) = 0`, from `k g_k = sum_{j=1}^{k} j f_j g_{k-j}`.
    /// A nonzero constant term would need `e^{f(0)}`, which is refused.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut g: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                g.push(BigRational::one());
                continue;
            }
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += BigRational::from_integer(BigInt::from(j)) * &self.coeffs[j] * &g[k - j];
            }
            g.push(acc / BigRational::from_integer(BigInt::from(k)));
        }
        Ok(RationalSeries { coeffs: g })
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub fn series_add(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    f.add(g)
}

pub fn series_mul(f: &RationalSeries, g: &RationalSeries) -> RationalSeries {
    f.mul(g)
}

pub fn series_derive(f: &RationalSeries) -> RationalSeries {
    f.derive()
}

pub fn series_exp(f: &RationalSeries) -> Result<RationalSeries> {
    f.exp()
}

/// `E' - (E^2 - E + 1)`, known to order `K - 1`.
pub fn ode_residual_quadratic(e: &RationalSeries) -> RationalSeries {
    let order = e.order().unwrap_or(0);
    let one = RationalSeries::constant(BigRational::one(), order);
    let rhs = e.mul(e).sub(e).add(&one);
    e.derive().sub(&rhs)
}

/// `E' - exp(E - x^2/2)`, known to order `K - 1`. Fails when the exponent
/// has a nonzero constant term.
pub fn ode_residual_exponential(e: &RationalSeries) -> Result<RationalSeries> {
    let exponent = exponential_ode_exponent(e);
    let rhs = exponent.exp()?;
    Ok(e.derive().sub(&rhs))
}

/// `E - x^2/2` at the order of `E`.
pub fn exponential_ode_exponent(e: &RationalSeries) -> RationalSeries {
    let order = e.order().unwrap_or(0);
    let mut half_x2 = RationalSeries::zero(order);
    if order >= 2 {
        half_x2.coeffs[2] = BigRational::new(BigInt::one(), BigInt::from(2));
    }
    e.sub(&half_x2)
}
