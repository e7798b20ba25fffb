//! Residual checks for two conjectured EGF differential equations over
//! fully bonded cyclic patterns of length 3.
//!
//! The boundary convention for the EGF is ambiguous, so every check is run
//! under three conventions and all residuals are reported.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{exponential_ode_exponent, ode_residual_exponential, ode_residual_quadratic, RationalSeries};
use crate::enumerate::Scanner;
use crate::error::{invalid, Error, Result};
use crate::pattern::{PatternSet, VincularPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjectureId {
    /// `E' = E^2 - E + 1` for `[(123)]`
    Egf123,
    /// `E' = exp(E - x^2/2)` for `[(213)]`
    Egf213,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 2] = [ConjectureId::Egf123, ConjectureId::Egf213];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::Egf123 => "egf-123",
            ConjectureId::Egf213 => "egf-213",
        }
    }

    pub fn pattern_set(self) -> PatternSet {
        let word = match self {
            ConjectureId::Egf123 => "123",
            ConjectureId::Egf213 => "213",
        };
        let p = VincularPattern::consecutive(word.parse().expect("word"), true);
        PatternSet::new([p]).expect("nonempty")
    }

    pub fn equation(self) -> &'static str {
        match self {
            ConjectureId::Egf123 => "E' = E^2 - E + 1",
            ConjectureId::Egf213 => "E' = exp(E - x^2/2)",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| invalid("unknown conjecture id (expected egf-123 or egf-213)"))
    }
}

/// How the counts `a_1, ..., a_K` become EGF coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    /// `a_0 = 1`, the empty permutation counted.
    Standard,
    /// `a_0 = 0`.
    NoEmpty,
    /// `b_n = a_{n+1}`; known to one order less.
    Shifted,
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::Standard, Convention::NoEmpty, Convention::Shifted];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Standard => "standard",
            Convention::NoEmpty => "no-empty",
            Convention::Shifted => "shifted",
        }
    }

    /// EGF terms built from `counts = [a_1, ..., a_K]`.
    pub fn egf_terms(self, counts: &[BigInt]) -> Vec<BigInt> {
        match self {
            Convention::Standard => core::iter::once(BigInt::from(1)).chain(counts.iter().cloned()).collect(),
            Convention::NoEmpty => core::iter::once(BigInt::zero()).chain(counts.iter().cloned()).collect(),
            Convention::Shifted => counts.to_vec(),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| invalid("unknown convention (expected standard, no-empty or shifted)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionRow {
    pub convention: Convention,
    pub series: RationalSeries,
    /// `Err` when the exponent has a nonzero constant term.
    pub residual: Result<RationalSeries>,
    /// `derive(exp F) = F' exp F` for the exponent `F` with its constant
    /// term dropped; guards the series arithmetic the residual uses.
    pub self_check: bool,
}

impl ConventionRow {
    pub fn vanishes(&self) -> bool {
        self.residual.as_ref().is_ok_and(RationalSeries::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub id: ConjectureId,
    pub order: usize,
    /// `a_1, ..., a_K` from vincular scans.
    pub counts: Vec<BigInt>,
    pub rows: Vec<ConventionRow>,
}

/// Scans `a_1..a_order`, then evaluates the residual under each convention.
pub fn conjecture_check(
    id: ConjectureId,
    order: usize,
    conventions: &[Convention],
    scanner: &Scanner,
) -> Result<ConjectureReport> {
    if order == 0 {
        return Err(invalid("order must be at least 1"));
    }
    let counts = scanner.count_class(&id.pattern_set(), 1..=order)?.values();
    let rows = conventions
        .iter()
        .map(|&c| residual_row(id, c, &counts))
        .collect();
    Ok(ConjectureReport { id, order, counts, rows })
}

/// The residual for one convention given already computed counts.
pub fn residual_row(id: ConjectureId, convention: Convention, counts: &[BigInt]) -> ConventionRow {
    let series = RationalSeries::from_egf(&convention.egf_terms(counts));
    let (residual, exponent) = match id {
        ConjectureId::Egf123 => (Ok(ode_residual_quadratic(&series)), series.clone()),
        ConjectureId::Egf213 => (ode_residual_exponential(&series), exponential_ode_exponent(&series)),
    };
    ConventionRow { convention, self_check: exp_product_rule(&exponent), series, residual }
}

/// `derive(exp F) == derive(F) * exp F` with the constant term of `F` zeroed.
pub fn exp_product_rule(f: &RationalSeries) -> bool {
    let mut coeffs = f.coeffs().to_vec();
    if let Some(c0) = coeffs.first_mut() {
        *c0 = Zero::zero();
    }
    let f = RationalSeries::from_coeffs(coeffs);
    let Ok(e) = f.exp() else { return false };
    e.derive() == f.derive().mul(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let sc = Scanner::default();
        let r = conjecture_check(ConjectureId::Egf123, 3, &Convention::ALL, &sc).unwrap();
        assert_eq!(r.counts, [1, 1, 1].map(BigInt::from));
        let r = conjecture_check(ConjectureId::Egf213, 3, &Convention::ALL, &sc).unwrap();
        assert_eq!(&r.counts[1..], &[BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn no_empty_constant_residual() {
        // exp(0) = 1 so the constant residual is a_1 - 1
        for a1 in [0i64, 1, 2, 5] {
            let counts = [a1, 1, 1].map(BigInt::from);
            let row = residual_row(ConjectureId::Egf213, Convention::NoEmpty, &counts);
            let res = row.residual.unwrap();
            assert_eq!(res.coeff(0), num_rational::BigRational::from_integer(BigInt::from(a1 - 1)));
        }
    }

    #[test]
    fn standard_convention_refused_for_exponential() {
        let row = residual_row(ConjectureId::Egf213, Convention::Standard, &[1, 1, 1].map(BigInt::from));
        assert_eq!(row.residual, Err(Error::NonzeroConstantTerm));
        assert!(!row.vanishes());
        assert!(row.self_check);
    }

    #[test]
    fn names_round_trip() {
        for id in ConjectureId::ALL {
            assert_eq!(id.name().parse::<ConjectureId>().unwrap(), id);
        }
        for c in Convention::ALL {
            assert_eq!(c.name().parse::<Convention>().unwrap(), c);
        }
    }
}
