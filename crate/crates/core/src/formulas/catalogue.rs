//! Registry of closed-form counts and distributions for cyclic avoidance
//! classes of length-4 patterns (plus one bonded class and one linear
//! descent distribution).
//!
//! Each entry names one pattern set, any further sets asserted to share
//! the same value, the smallest `n` the formula is claimed for, and an
//! evaluator using exact integer arithmetic only.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::{binomial, catalan, fibonacci, pow2};
use crate::algebra::{BivarPolynomial, IntPolynomial};
use crate::pattern::{PatternSet, VincularPattern};
use crate::perm::{CyclicPerm, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaKind {
    /// `#Av_n[Pi]`
    Count,
    /// `D_n([Pi]; q)`
    CdesPoly,
    /// joint `(cdes, cpk)` distribution
    JointPoly,
    /// descent distribution over a linear class
    LinearDesPoly,
}

impl FormulaKind {
    pub fn name(self) -> &'static str {
        match self {
            FormulaKind::Count => "count",
            FormulaKind::CdesPoly => "cdes-poly",
            FormulaKind::JointPoly => "joint-poly",
            FormulaKind::LinearDesPoly => "des-poly",
        }
    }
}

/// A value produced either by a closed form or by a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaValue {
    Count(BigInt),
    Poly(IntPolynomial),
    Joint(BivarPolynomial),
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaValue::Count(c) => write!(f, "{c}"),
            FormulaValue::Poly(p) => write!(f, "{p}"),
            FormulaValue::Joint(p) => write!(f, "{p}"),
        }
    }
}

/// Which family of sets an entry belongs to, used to build suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Singles,
    Doubles,
    Triples,
    Quads,
    Genfuns,
    Vincular,
}

#[derive(Clone)]
pub struct FormulaEntry {
    pub id: &'static str,
    /// Human-readable statement of the closed form.
    pub citation: &'static str,
    pub kind: FormulaKind,
    pub family: Family,
    pub pattern_set: PatternSet,
    /// Further sets asserted to have the same value for every valid `n`.
    pub equivalents: Vec<PatternSet>,
    /// Smallest `n` the closed form is claimed for.
    pub min_n: usize,
    pub eval: fn(usize) -> FormulaValue,
}

impl FormulaEntry {
    /// The primary set followed by its asserted equivalents.
    pub fn all_sets(&self) -> impl Iterator<Item = &PatternSet> {
        core::iter::once(&self.pattern_set).chain(self.equivalents.iter())
    }

    pub fn evaluate(&self, n: usize) -> Option<FormulaValue> {
        (n >= self.min_n).then(|| (self.eval)(n))
    }
}

impl fmt::Debug for FormulaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormulaEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("pattern_set", &self.pattern_set)
            .field("equivalents", &self.equivalents)
            .field("min_n", &self.min_n)
            .finish()
    }
}

/// Builds a cyclic set from canonical spellings like `"1342"`.
pub fn cyclic_set(words: &[&str]) -> PatternSet {
    let classes: Vec<CyclicPerm> = words
        .iter()
        .map(|w| w.parse::<Permutation>().expect("valid word").canonical().expect("nonempty"))
        .collect();
    PatternSet::cyclic(&classes).expect("nonempty set")
}

fn sets(list: &[&[&str]]) -> Vec<PatternSet> {
    list.iter().map(|w| cyclic_set(w)).collect()
}

fn count(v: impl Into<BigInt>) -> FormulaValue {
    FormulaValue::Count(v.into())
}

fn int(n: usize) -> i64 {
    n as i64
}

/// Adds `c q^e` when `e` is a valid exponent; terms with negative exponent
/// must carry a zero coefficient.
fn push_term(p: &mut IntPolynomial, e: i64, c: &BigInt) {
    if e < 0 {
        debug_assert!(c.is_zero());
        return;
    }
    p.add_term(e as usize, c);
}

/// `q + q^2 + ... + q^{n-1}`, the expanded form of `q (1 - q^{n-1}) / (1 - q)`.
fn geometric_tail(n: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for k in 1..n {
        p.add_term(k, &BigInt::one());
    }
    p
}

fn count_1234(n: usize) -> FormulaValue {
    let n = int(n);
    count(pow2(n as usize) + 1 - BigInt::from(2 * n) - binomial(n, 3))
}

fn count_1243(n: usize) -> FormulaValue {
    count(pow2(n - 1) - BigInt::from(n) + 1)
}

fn count_1324(n: usize) -> FormulaValue {
    count(fibonacci(2 * n - 3))
}

fn twice_n_minus_2(n: usize) -> FormulaValue {
    count(2 * (int(n) - 2))
}

fn one_plus_choose(n: usize) -> FormulaValue {
    count(binomial(int(n) - 1, 2) + 1)
}

fn zero(_: usize) -> FormulaValue {
    count(0)
}

fn constant_1(_: usize) -> FormulaValue {
    count(1)
}

fn constant_2(_: usize) -> FormulaValue {
    count(2)
}

fn constant_3(_: usize) -> FormulaValue {
    count(3)
}

fn constant_4(_: usize) -> FormulaValue {
    count(4)
}

fn pow2_n_minus_2(n: usize) -> FormulaValue {
    count(pow2(n - 2))
}

fn n_minus_1(n: usize) -> FormulaValue {
    count(int(n) - 1)
}

fn catalan_shifted(n: usize) -> FormulaValue {
    count(catalan(n - 1))
}

fn cdes_1324(n: usize) -> FormulaValue {
    let n = int(n);
    let mut p = IntPolynomial::zero();
    for k in 1..n {
        push_term(&mut p, k, &binomial(n + k - 3, n - k - 1));
    }
    FormulaValue::Poly(p)
}

fn cdes_1342(n: usize) -> FormulaValue {
    let two_q = IntPolynomial::from_i64s(&[0, 2]);
    let p = &(&two_q * &IntPolynomial::one_plus_q_pow(n - 2)) - &geometric_tail(n);
    FormulaValue::Poly(p)
}

fn cdes_1432(n: usize) -> FormulaValue {
    let mut p = IntPolynomial::monomial(1, 1);
    p.add_term(2, &(pow2(n - 1) - BigInt::from(n)));
    let mut j = 3i64;
    while 2 * j - 1 <= int(n) {
        p.add_term(j as usize, &binomial(int(n), 2 * j - 1));
        j += 1;
    }
    FormulaValue::Poly(p)
}

fn cdes_pair_linear_top(n: usize) -> FormulaValue {
    let n = int(n);
    let mut p = IntPolynomial::zero();
    push_term(&mut p, n - 2, &BigInt::from(2 * n - 5));
    push_term(&mut p, n - 1, &BigInt::one());
    FormulaValue::Poly(p)
}

fn cdes_1234_1423(n: usize) -> FormulaValue {
    let n = int(n);
    let mut p = IntPolynomial::zero();
    push_term(&mut p, n - 1, &BigInt::one());
    push_term(&mut p, n - 2, &binomial(n - 1, 2));
    FormulaValue::Poly(p)
}

fn cdes_1324_1342(n: usize) -> FormulaValue {
    let mut p = IntPolynomial::monomial(1, 1);
    for k in 2..n {
        p.add_term(k, &BigInt::from(n - k));
    }
    FormulaValue::Poly(p)
}

fn cdes_1243_1342(n: usize) -> FormulaValue {
    let mut p = IntPolynomial::zero();
    for e in [1, 2, n - 1, n - 2] {
        p.add_term(e, &BigInt::one());
    }
    FormulaValue::Poly(p)
}

fn cdes_1324_1423(n: usize) -> FormulaValue {
    FormulaValue::Poly(&IntPolynomial::monomial(1, 1) * &IntPolynomial::one_plus_q_pow(n - 2))
}

fn cdes_triple_top(n: usize) -> FormulaValue {
    let n = int(n);
    let mut p = IntPolynomial::zero();
    push_term(&mut p, n - 2, &BigInt::from(n - 2));
    push_term(&mut p, n - 1, &BigInt::one());
    FormulaValue::Poly(p)
}

fn cdes_1324_1342_1423(n: usize) -> FormulaValue {
    FormulaValue::Poly(geometric_tail(n))
}

fn joint_1234_1342(n: usize) -> FormulaValue {
    let n32 = n as u32;
    FormulaValue::Joint(BivarPolynomial::from_terms([
        ((n32 - 2, 1), BigInt::one()),
        ((n32 - 2, 2), BigInt::from(2 * int(n) - 6)),
        ((n32 - 1, 1), BigInt::one()),
    ]))
}

fn des_213_231(n: usize) -> FormulaValue {
    FormulaValue::Poly(IntPolynomial::one_plus_q_pow(n - 1))
}

/// The bonded pattern `[13(24)]` and its three trivially equivalent
/// spellings.
pub fn catalan_patterns() -> [VincularPattern; 4] {
    let mk = |w: &str, bond: usize| {
        VincularPattern::new(w.parse().expect("word"), [bond], true).expect("bond in range")
    };
    [mk("1324", 3), mk("1423", 2), mk("1324", 1), mk("2314", 2)]
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    citation: &'static str,
    kind: FormulaKind,
    family: Family,
    set: &[&str],
    equivalents: &[&[&str]],
    min_n: usize,
    eval: fn(usize) -> FormulaValue,
) -> FormulaEntry {
    FormulaEntry {
        id,
        citation,
        kind,
        family,
        pattern_set: cyclic_set(set),
        equivalents: sets(equivalents),
        min_n,
        eval,
    }
}

/// Every registered closed form.
pub fn formula_catalogue() -> Vec<FormulaEntry> {
    use Family::*;
    use FormulaKind::*;
    let mut out = alloc::vec![
        // single patterns
        entry("count-1234", "#Av_n[1234] = 2^n + 1 - 2n - C(n,3)", Count, Singles,
            &["1234"], &[&["1432"]], 2, count_1234),
        entry("count-1243", "#Av_n[1243] = 2^(n-1) - n + 1", Count, Singles,
            &["1243"], &[&["1342"]], 2, count_1243),
        entry("count-1324", "#Av_n[1324] = F_(2n-3)", Count, Singles,
            &["1324"], &[&["1423"]], 2, count_1324),
        // pairs
        entry("count-1234-1342", "#Av_n([1234],[1342]) = 2(n-2)", Count, Doubles,
            &["1234", "1342"], &[&["1234", "1243"], &["1243", "1432"], &["1342", "1432"]], 3, twice_n_minus_2),
        entry("count-1234-1324", "#Av_n([1234],[1324]) = 2(n-2)", Count, Doubles,
            &["1234", "1324"], &[&["1423", "1432"]], 3, twice_n_minus_2),
        entry("count-1234-1423", "#Av_n([1234],[1423]) = 1 + C(n-1,2)", Count, Doubles,
            &["1234", "1423"], &[&["1324", "1432"]], 1, one_plus_choose),
        entry("count-1234-1432", "#Av_n([1234],[1432]) = 0", Count, Doubles,
            &["1234", "1432"], &[], 6, zero),
        entry("count-1324-1342", "#Av_n([1324],[1342]) = 1 + C(n-1,2)", Count, Doubles,
            &["1324", "1342"], &[&["1243", "1324"], &["1243", "1423"], &["1342", "1423"]], 1, one_plus_choose),
        entry("count-1243-1342", "#Av_n([1243],[1342]) = 4", Count, Doubles,
            &["1243", "1342"], &[], 4, constant_4),
        entry("count-1324-1423", "#Av_n([1324],[1423]) = 2^(n-2)", Count, Doubles,
            &["1324", "1423"], &[], 3, pow2_n_minus_2),
        // triples
        entry("count-1234-1324-1342", "#Av_n([1234],[1324],[1342]) = 3", Count, Triples,
            &["1234", "1324", "1342"],
            &[&["1234", "1243", "1324"], &["1243", "1423", "1432"], &["1342", "1423", "1432"]], 4, constant_3),
        entry("count-1234-1243-1342", "#Av_n([1234],[1243],[1342]) = 2", Count, Triples,
            &["1234", "1243", "1342"], &[&["1243", "1342", "1432"]], 5, constant_2),
        entry("count-1234-1342-1423", "#Av_n([1234],[1342],[1423]) = n - 1", Count, Triples,
            &["1234", "1342", "1423"],
            &[&["1234", "1243", "1423"], &["1243", "1324", "1432"], &["1324", "1342", "1432"]], 2, n_minus_1),
        entry("count-1234-1324-1423", "#Av_n([1234],[1324],[1423]) = n - 1", Count, Triples,
            &["1234", "1324", "1423"], &[&["1324", "1423", "1432"]], 2, n_minus_1),
        entry("count-1243-1324-1342", "#Av_n([1243],[1324],[1342]) = 3", Count, Triples,
            &["1243", "1324", "1342"], &[&["1243", "1342", "1423"]], 4, constant_3),
        entry("count-1324-1342-1423", "#Av_n([1324],[1342],[1423]) = n - 1", Count, Triples,
            &["1324", "1342", "1423"], &[&["1243", "1324", "1423"]], 2, n_minus_1),
        // four and five patterns, constant for n >= 5
        entry("count-quad-const-1", "#Av_n = 1 for two 4-pattern sets", Count, Quads,
            &["1234", "1243", "1324", "1342"], &[&["1243", "1342", "1423", "1432"]], 5, constant_1),
        entry("count-quad-const-2", "#Av_n = 2 for seven 4-pattern sets", Count, Quads,
            &["1234", "1243", "1324", "1423"],
            &[
                &["1234", "1243", "1342", "1423"],
                &["1234", "1324", "1342", "1423"],
                &["1243", "1324", "1342", "1423"],
                &["1243", "1324", "1342", "1432"],
                &["1243", "1324", "1423", "1432"],
                &["1324", "1342", "1423", "1432"],
            ], 5, constant_2),
        entry("count-quint-const-1", "#Av_n = 1 for two 5-pattern sets", Count, Quads,
            &["1234", "1243", "1324", "1342", "1423"], &[&["1243", "1324", "1342", "1423", "1432"]], 5, constant_1),
        // cyclic descent polynomials
        entry("cdes-1324", "D_n([1324]) = sum_{k=1}^{n-1} C(n+k-3, n-k-1) q^k", CdesPoly, Genfuns,
            &["1324"], &[], 2, cdes_1324),
        entry("cdes-1342", "D_n([1342]) = 2q(1+q)^(n-2) - (q + ... + q^(n-1))", CdesPoly, Genfuns,
            &["1342"], &[&["1243"]], 2, cdes_1342),
        entry("cdes-1432", "D_n([1432]) = q + (2^(n-1) - n) q^2 + sum_{j>=3} C(n, 2j-1) q^j", CdesPoly, Genfuns,
            &["1432"], &[], 2, cdes_1432),
        entry("cdes-1234-1342", "D_n([1234],[1342]) = (2n-5) q^(n-2) + q^(n-1)", CdesPoly, Genfuns,
            &["1234", "1342"], &[], 3, cdes_pair_linear_top),
        entry("cdes-1234-1324", "D_n([1234],[1324]) = (2n-5) q^(n-2) + q^(n-1)", CdesPoly, Genfuns,
            &["1234", "1324"], &[], 3, cdes_pair_linear_top),
        entry("cdes-1234-1423", "D_n([1234],[1423]) = q^(n-1) + C(n-1,2) q^(n-2)", CdesPoly, Genfuns,
            &["1234", "1423"], &[], 1, cdes_1234_1423),
        // claimed from n = 1, but at n = 1 the class is {[1]} with cdes 0
        entry("cdes-1324-1342", "D_n([1324],[1342]) = q + sum_{k=2}^{n-1} (n-k) q^k", CdesPoly, Genfuns,
            &["1324", "1342"], &[], 2, cdes_1324_1342),
        entry("cdes-1243-1342", "D_n([1243],[1342]) = q + q^2 + q^(n-1) + q^(n-2)", CdesPoly, Genfuns,
            &["1243", "1342"], &[], 4, cdes_1243_1342),
        entry("cdes-1324-1423", "D_n([1324],[1423]) = q (1+q)^(n-2)", CdesPoly, Genfuns,
            &["1324", "1423"], &[], 3, cdes_1324_1423),
        entry("cdes-1234-1342-1423", "D_n([1234],[1342],[1423]) = (n-2) q^(n-2) + q^(n-1)", CdesPoly, Genfuns,
            &["1234", "1342", "1423"], &[&["1234", "1324", "1423"]], 2, cdes_triple_top),
        entry("cdes-1324-1342-1423", "D_n([1324],[1342],[1423]) = q + q^2 + ... + q^(n-1)", CdesPoly, Genfuns,
            &["1324", "1342", "1423"], &[], 2, cdes_1324_1342_1423),
        entry("joint-1234-1342", "sum q^cdes t^cpk over Av_n([1234],[1342]) = q^(n-2) t + (2n-6) q^(n-2) t^2 + q^(n-1) t",
            JointPoly, Genfuns, &["1234", "1342"], &[], 3, joint_1234_1342),
    ];
    let [first, rest @ ..] = catalan_patterns();
    out.push(FormulaEntry {
        id: "count-13(24)",
        citation: "#Av_n[13(24)] = C_(n-1)",
        kind: Count,
        family: Vincular,
        pattern_set: PatternSet::new([first]).expect("nonempty"),
        equivalents: rest.into_iter().map(|p| PatternSet::new([p]).expect("nonempty")).collect(),
        min_n: 1,
        eval: catalan_shifted,
    });
    out.push(FormulaEntry {
        id: "des-213-231",
        citation: "sum q^des over Av_n(213,231) = (1+q)^(n-1)",
        kind: LinearDesPoly,
        family: Genfuns,
        pattern_set: PatternSet::linear(["213", "231"].map(|w| w.parse().expect("word"))).expect("nonempty"),
        equivalents: Vec::new(),
        min_n: 1,
        eval: des_213_231,
    });
    out
}

pub fn find_entry(id: &str) -> Option<FormulaEntry> {
    formula_catalogue().into_iter().find(|e| e.id == id)
}

/// Pairs of catalogue entries whose classes are Wilf equivalent without
/// being images of each other under reversal or complement.
pub const NONTRIVIAL_WILF_PAIRS: [(&str, &str); 5] = [
    ("count-1234-1324", "count-1234-1342"),
    ("count-1324-1342", "count-1234-1423"),
    ("count-1234-1324-1423", "count-1234-1342-1423"),
    ("count-1243-1324-1342", "count-1234-1324-1342"),
    ("count-1324-1342-1423", "count-1234-1342-1423"),
];

/// A short label for reports: the primary set of the entry.
pub fn describe(entry: &FormulaEntry) -> String {
    alloc::format!("{}", entry.pattern_set)
}
