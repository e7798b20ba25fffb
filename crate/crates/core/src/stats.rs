//! Permutation statistics and their distributions over avoidance classes.
//!
//! Positions are 1-based throughout. The distributions are always computed
//! by scanning the class; closed forms live in [`crate::formulas`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BivarPolynomial, IntPolynomial};
use crate::enumerate::Scanner;
use crate::error::{invalid, Error, Result};
use crate::pattern::PatternSet;
use crate::perm::{CyclicPerm, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatName {
    Des,
    Maj,
    Inv,
    Exc,
    Pk,
    Cdes,
    Cpk,
}

impl StatName {
    pub fn is_cyclic(self) -> bool {
        matches!(self, StatName::Cdes | StatName::Cpk)
    }

    pub fn name(self) -> &'static str {
        match self {
            StatName::Des => "des",
            StatName::Maj => "maj",
            StatName::Inv => "inv",
            StatName::Exc => "exc",
            StatName::Pk => "pk",
            StatName::Cdes => "cdes",
            StatName::Cpk => "cpk",
        }
    }

    /// Value on a linear permutation; `None` for the cyclic statistics.
    pub fn eval_linear(self, p: &Permutation) -> Option<usize> {
        Some(match self {
            StatName::Des => des(p),
            StatName::Maj => maj(p),
            StatName::Inv => inv(p),
            StatName::Exc => exc(p),
            StatName::Pk => pk(p),
            StatName::Cdes | StatName::Cpk => return None,
        })
    }

    /// Value on a cyclic permutation; `None` for the linear statistics.
    pub fn eval_cyclic(self, s: &CyclicPerm) -> Option<usize> {
        match self {
            StatName::Cdes => Some(cdes(s)),
            StatName::Cpk => Some(cpk(s)),
            _ => None,
        }
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "des" => StatName::Des,
            "maj" => StatName::Maj,
            "inv" => StatName::Inv,
            "exc" => StatName::Exc,
            "pk" => StatName::Pk,
            "cdes" => StatName::Cdes,
            "cpk" => StatName::Cpk,
            _ => return Err(invalid("unknown statistic")),
        })
    }
}

pub fn descent_set(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    (1..v.len()).filter(|&i| v[i - 1] > v[i]).collect()
}

pub fn des(p: &Permutation) -> usize {
    p.values().windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn maj(p: &Permutation) -> usize {
    descent_set(p).into_iter().sum()
}

pub fn inv(p: &Permutation) -> usize {
    let v = p.values();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
        .sum()
}

/// Excedances of `i -> p_i`.
pub fn exc(p: &Permutation) -> usize {
    p.values()
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count()
}

/// Interior positions `i` with `p_{i-1} < p_i > p_{i+1}`.
pub fn peak_set(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    (2..v.len())
        .filter(|&i| v[i - 2] < v[i - 1] && v[i - 1] > v[i])
        .collect()
}

pub fn pk(p: &Permutation) -> usize {
    peak_set(p).len()
}

/// Cyclic descents, indices modulo n.
pub fn cdes(s: &CyclicPerm) -> usize {
    let v = s.canon().values();
    let n = v.len();
    (0..n).filter(|&i| v[i] > v[(i + 1) % n]).count()
}

/// Cyclic peaks, indices modulo n. A single entry is not a peak; for n = 2
/// the larger entry is one.
pub fn cpk(s: &CyclicPerm) -> usize {
    let v = s.canon().values();
    let n = v.len();
    if n < 2 {
        return 0;
    }
    (0..n)
        .filter(|&i| v[(i + n - 1) % n] < v[i] && v[i] > v[(i + 1) % n])
        .count()
}

/// Compares `cdes[p]` with the excedance number of the function that sends
/// `p_i` to `p_{i-1}` (indices mod n).
pub fn cdes_as_excedance_check(p: &Permutation) -> bool {
    let v = p.values();
    let n = v.len();
    if n == 0 {
        return true;
    }
    let mut f = alloc::vec![0u8; n];
    for i in 0..n {
        f[v[i] as usize - 1] = v[(i + n - 1) % n];
    }
    let as_function = Permutation::new(f).expect("cycle is a permutation");
    let cyc = p.canonical().expect("n >= 1");
    cdes(&cyc) == exc(&as_function)
}

/// `sum_{sigma in Av_n(Pi)} q^{stat sigma}` for linear patterns.
pub fn stat_genfun_linear(set: &PatternSet, n: usize, stat: StatName, scanner: &Scanner) -> Result<IntPolynomial> {
    if stat.is_cyclic() {
        return Err(invalid("cyclic statistic on linear permutations"));
    }
    let mut out = IntPolynomial::zero();
    let one = BigInt::one();
    for p in scanner.enumerate_linear(set, n)? {
        out.add_term(stat.eval_linear(&p).expect("linear"), &one);
    }
    Ok(out)
}

/// `D_n([Pi]; q)`: the cyclic descent distribution over `Av_n[Pi]`.
pub fn cdes_genfun(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<IntPolynomial> {
    Ok(cdes_distribution(&scanner.enumerate_class(set, n)?))
}

/// Joint `(cdes, cpk)` distribution over `Av_n[Pi]`.
pub fn joint_cdes_cpk_genfun(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<BivarPolynomial> {
    Ok(joint_distribution(&scanner.enumerate_class(set, n)?))
}

/// Cyclic descent polynomial of an already enumerated class.
pub fn cdes_distribution(class: &[CyclicPerm]) -> IntPolynomial {
    let one = BigInt::one();
    let mut out = IntPolynomial::zero();
    for s in class {
        out.add_term(cdes(s), &one);
    }
    out
}

pub fn joint_distribution(class: &[CyclicPerm]) -> BivarPolynomial {
    let one = BigInt::one();
    let mut out = BivarPolynomial::zero();
    for s in class {
        out.add_term(cdes(s) as u32, cpk(s) as u32, &one);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(s: &str) -> CyclicPerm {
        p(s).canonical().unwrap()
    }

    #[test]
    fn linear_stats_of_42351() {
        let x = p("42351");
        assert_eq!(descent_set(&x), vec![1, 4]);
        assert_eq!(des(&x), 2);
        assert_eq!(maj(&x), 5);
        assert_eq!(inv(&x), 6);
        assert_eq!(exc(&x), 2);
        assert_eq!(peak_set(&x), vec![4]);
        assert_eq!(pk(&x), 1);
    }

    #[test]
    fn monotone_cases() {
        for n in 0..8 {
            let id = Permutation::identity(n);
            let dec = Permutation::decreasing(n);
            assert_eq!((des(&id), maj(&id), inv(&id)), (0, 0, 0));
            assert!(descent_set(&id).is_empty());
            assert_eq!(descent_set(&dec), (1..n).collect::<Vec<_>>());
            assert_eq!(inv(&dec), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn cyclic_stats() {
        assert_eq!(cdes(&c("23514")), 2);
        for n in 2..9 {
            assert_eq!(cdes(&CyclicPerm::identity(n)), 1);
            assert_eq!(cdes(&CyclicPerm::decreasing(n)), n - 1);
        }
        for n in 3..9 {
            assert_eq!(cpk(&CyclicPerm::identity(n)), 1);
        }
        assert_eq!(cpk(&c("42351")), 2);
        assert_eq!(cpk(&c("23514")), 2);
        assert_eq!(cpk(&c("1")), 0);
        assert_eq!(cpk(&c("12")), 1);
        assert_eq!(cdes(&c("1")), 0);
    }

    #[test]
    fn excedance_identity_examples() {
        assert!(cdes_as_excedance_check(&p("23514")));
        assert!(cdes_as_excedance_check(&Permutation::identity(6)));
    }

    #[test]
    fn stat_names_round_trip() {
        for s in [StatName::Des, StatName::Maj, StatName::Inv, StatName::Exc, StatName::Pk, StatName::Cdes, StatName::Cpk] {
            assert_eq!(s.name().parse::<StatName>().unwrap(), s);
        }
        assert!("foo".parse::<StatName>().is_err());
    }

    #[test]
    fn small_distributions() {
        let sc = Scanner::default();
        let one = PatternSet::linear([p("1")]).unwrap();
        assert!(stat_genfun_linear(&one, 3, StatName::Des, &sc).unwrap().is_zero());
        let inv21 = PatternSet::linear([p("21")]).unwrap();
        assert_eq!(stat_genfun_linear(&inv21, 5, StatName::Des, &sc).unwrap(), IntPolynomial::one());
        let single = PatternSet::cyclic([&c("1324")]).unwrap();
        assert_eq!(cdes_genfun(&single, 2, &sc).unwrap(), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(cdes_genfun(&single, 3, &sc).unwrap(), IntPolynomial::from_i64s(&[0, 1, 1]));
        let pair = PatternSet::cyclic(&[c("1234"), c("1342")]).unwrap();
        let j = joint_cdes_cpk_genfun(&pair, 3, &sc).unwrap();
        assert_eq!(j, BivarPolynomial::from_terms([((1, 1), BigInt::from(1)), ((2, 1), BigInt::from(1))]));
        assert_eq!(j.at_t_one(), cdes_genfun(&pair, 3, &sc).unwrap());
    }
}
