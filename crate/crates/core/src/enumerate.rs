//! Brute-force avoidance classes over `[S_n]`, generating trees and Wilf
//! classification.
//!
//! A cyclic class is scanned through its canonical forms: `1` followed by a
//! permutation of `{2, ..., n}`, so `(n-1)!` candidates and no
//! deduplication. The candidates split into blocks by their second entry;
//! [`scan_block`] handles one block so callers can spread blocks over
//! threads and concatenate the results in block order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::error::{invalid, Error, Result};
use crate::pattern::{CompiledSet, PatternSet, VincularPattern};
use crate::perm::{next_permutation, CyclicPerm, Permutation, Symmetry};

/// Default length cap for scans.
pub const DEFAULT_CAP: usize = 9;
/// No scan may go beyond this length.
pub const HARD_CAP: usize = 12;

/// How a [`CountingTable`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Scan,
    Tree,
    Formula,
}

/// `#Av_n[Pi]` for a contiguous range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingTable {
    pub pattern_set: PatternSet,
    pub rows: BTreeMap<usize, BigInt>,
    pub method: Method,
}

impl CountingTable {
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.rows.get(&n)
    }

    pub fn values(&self) -> Vec<BigInt> {
        self.rows.values().cloned().collect()
    }
}

/// Scan settings: currently just the length cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scanner {
    cap: usize,
}

impl Default for Scanner {
    fn default() -> Self {
        Scanner { cap: DEFAULT_CAP }
    }
}

impl Scanner {
    pub fn new(cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::CapExceeded { requested: cap, cap: HARD_CAP });
        }
        Ok(Scanner { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded { requested: n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// `Av_n[Pi]` by canonical representative, sorted.
    pub fn enumerate_class(&self, set: &PatternSet, n: usize) -> Result<Vec<CyclicPerm>> {
        cyclic_only(set)?;
        if n == 0 {
            return Err(invalid("cyclic classes need n >= 1"));
        }
        self.check(n)?;
        let compiled = set.compile();
        Ok(blocks(n).flat_map(|b| scan_block(&compiled, n, b)).collect())
    }

    pub fn count_class(&self, set: &PatternSet, range: RangeInclusive<usize>) -> Result<CountingTable> {
        cyclic_only(set)?;
        self.check(*range.end())?;
        let compiled = set.compile();
        let mut rows = BTreeMap::new();
        for n in range {
            if n == 0 {
                return Err(invalid("cyclic classes need n >= 1"));
            }
            let count: usize = blocks(n).map(|b| count_block(&compiled, n, b)).sum();
            rows.insert(n, BigInt::from(count));
        }
        Ok(CountingTable { pattern_set: set.clone(), rows, method: Method::Scan })
    }

    /// `Av_n(Pi)` for a linear pattern set, in lexicographic order.
    pub fn enumerate_linear(&self, set: &PatternSet, n: usize) -> Result<Vec<Permutation>> {
        if set.is_cyclic() {
            return Err(invalid("expected linear patterns"));
        }
        self.check(n)?;
        let compiled = set.compile();
        Ok(crate::perm::all_permutations(n)
            .filter(|p| compiled.avoided_by(p.values()))
            .collect())
    }
}

fn cyclic_only(set: &PatternSet) -> Result<()> {
    if set.is_cyclic() {
        Ok(())
    } else {
        Err(invalid("expected cyclic patterns"))
    }
}

pub fn enumerate_class(set: &PatternSet, n: usize) -> Result<Vec<CyclicPerm>> {
    Scanner::default().enumerate_class(set, n)
}

pub fn count_class(set: &PatternSet, range: RangeInclusive<usize>) -> Result<CountingTable> {
    Scanner::default().count_class(set, range)
}

/// Block keys for length `n`: the possible second entries of a canonical
/// form (`1..=1` for `n = 1`, where the only block is `[1]`).
pub fn blocks(n: usize) -> RangeInclusive<u8> {
    if n <= 1 {
        1..=1
    } else {
        2..=n as u8
    }
}

/// Calls `f` on every canonical word of length `n` in block `second`, in
/// lexicographic order.
pub fn for_each_in_block(n: usize, second: u8, mut f: impl FnMut(&[u8])) {
    assert!((1..=crate::perm::MAX_LEN).contains(&n));
    if n == 1 {
        f(&[1]);
        return;
    }
    let mut word: Vec<u8> = Vec::with_capacity(n);
    word.push(1);
    word.push(second);
    word.extend((2..=n as u8).filter(|&v| v != second));
    loop {
        f(&word);
        if !next_permutation(&mut word[2..]) {
            break;
        }
    }
}

/// The members of `Av_n[Pi]` whose canonical form has `second` in
/// position two.
pub fn scan_block(set: &CompiledSet, n: usize, second: u8) -> Vec<CyclicPerm> {
    let mut out = Vec::new();
    for_each_in_block(n, second, |w| {
        if set.avoided_by(w) {
            out.push(CyclicPerm::from_canonical_unchecked(Permutation::from_vec_unchecked(w.to_vec())));
        }
    });
    out
}

pub fn count_block(set: &CompiledSet, n: usize, second: u8) -> usize {
    let mut count = 0;
    for_each_in_block(n, second, |w| {
        if set.avoided_by(w) {
            count += 1;
        }
    });
    count
}

/// For a list of cyclic patterns (at most 64), records which patterns each
/// class of length `n` contains. Counting any subset of the patterns is
/// then a pass over the masks.
#[derive(Debug, Clone)]
pub struct ContainmentProfile {
    pub n: usize,
    pub patterns: Vec<VincularPattern>,
    /// One mask per canonical class, in canonical order; bit `i` set when
    /// the class contains `patterns[i]`.
    pub masks: Vec<u64>,
}

impl ContainmentProfile {
    pub fn build(patterns: &[VincularPattern], n: usize) -> Result<Self> {
        let blocks: Vec<Vec<u64>> = blocks(n).map(|b| profile_block(patterns, n, b)).collect::<Result<_>>()?;
        Ok(ContainmentProfile::from_blocks(patterns, n, blocks))
    }

    /// Reassembles block results produced by [`profile_block`] in block order.
    pub fn from_blocks(patterns: &[VincularPattern], n: usize, blocks: Vec<Vec<u64>>) -> Self {
        ContainmentProfile {
            n,
            patterns: patterns.to_vec(),
            masks: blocks.into_iter().flatten().collect(),
        }
    }

    /// Bit mask for a set whose members all appear in `patterns`.
    pub fn mask_of(&self, set: &PatternSet) -> Result<u64> {
        let mut mask = 0u64;
        for p in set.patterns() {
            let i = self
                .patterns
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| invalid("pattern missing from profile"))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn count_avoiders(&self, mask: u64) -> usize {
        self.masks.iter().filter(|&&m| m & mask == 0).count()
    }
}

/// Containment masks for one block; see [`ContainmentProfile`].
pub fn profile_block(patterns: &[VincularPattern], n: usize, second: u8) -> Result<Vec<u64>> {
    if patterns.len() > 64 {
        return Err(invalid("at most 64 patterns per profile"));
    }
    let set = PatternSet::new(patterns.iter().cloned())?;
    cyclic_only(&set)?;
    // compile each pattern alone so bit positions follow `patterns`
    let singles: Vec<CompiledSet> = patterns
        .iter()
        .map(|p| PatternSet::new([p.clone()]).map(|s| s.compile()))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for_each_in_block(n, second, |w| {
        let mut mask = 0u64;
        for (i, c) in singles.iter().enumerate() {
            if c.contains_pattern(0, w) {
                mask |= 1 << i;
            }
        }
        out.push(mask);
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Generating trees

/// The sites of `sigma` (1-based, site `i` follows the i-th entry of the
/// canonical form, site `n` wraps) where inserting `n + 1` stays inside
/// `Av[Pi]`.
pub fn active_sites(sigma: &CyclicPerm, set: &PatternSet) -> Vec<usize> {
    active_sites_compiled(sigma, &set.compile())
}

fn active_sites_compiled(sigma: &CyclicPerm, set: &CompiledSet) -> Vec<usize> {
    let n = sigma.len();
    let mut word = Vec::with_capacity(n + 1);
    (1..=n)
        .filter(|&site| {
            word.clear();
            word.extend_from_slice(&sigma.canon().values()[..site]);
            word.push(n as u8 + 1);
            word.extend_from_slice(&sigma.canon().values()[site..]);
            set.avoided_by(&word)
        })
        .collect()
}

/// Children of `sigma` in the generating tree, in site order.
pub fn children(sigma: &CyclicPerm, set: &PatternSet) -> Vec<CyclicPerm> {
    children_compiled(sigma, &set.compile())
}

fn children_compiled(sigma: &CyclicPerm, set: &CompiledSet) -> Vec<CyclicPerm> {
    let n = sigma.len();
    active_sites_compiled(sigma, set)
        .into_iter()
        .map(|site| {
            let child = sigma.canon().insert_value(site, n as u8 + 1);
            CyclicPerm::from_canonical_unchecked(child)
        })
        .collect()
}

/// The root `[12]`.
pub fn tree_root() -> CyclicPerm {
    CyclicPerm::identity(2)
}

/// Per-level degree histograms of `T[Pi]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeLevels {
    /// level -> (degree -> number of nodes)
    pub levels: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl TreeLevels {
    pub fn node_count(&self, level: usize) -> usize {
        self.levels.get(&level).map_or(0, |h| h.values().sum())
    }

    /// The degree multiset at `level`, ascending.
    pub fn degrees(&self, level: usize) -> Vec<usize> {
        self.levels
            .get(&level)
            .map(|h| h.iter().flat_map(|(&d, &c)| core::iter::repeat_n(d, c)).collect())
            .unwrap_or_default()
    }
}

/// Walks `T[Pi]` depth first from `[12]` through `max_level`.
pub fn build_tree_levels(set: &PatternSet, max_level: usize) -> Result<TreeLevels> {
    cyclic_only(set)?;
    if !set.is_classical() {
        return Err(invalid("generating trees need classical patterns"));
    }
    let compiled = set.compile();
    let mut out = TreeLevels::default();
    let root = tree_root();
    if max_level < 2 || !compiled.avoided_by(root.canon().values()) {
        return Ok(out);
    }
    let mut stack = alloc::vec![root];
    while let Some(node) = stack.pop() {
        let level = node.len();
        let kids = children_compiled(&node, &compiled);
        *out.levels.entry(level).or_default().entry(kids.len()).or_default() += 1;
        if level < max_level {
            stack.extend(kids);
        }
    }
    Ok(out)
}

/// A production-rule label: the root, a degree, or a named characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Root,
    Degree(usize),
    Char(char),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Root => f.write_str("(*)"),
            Label::Degree(d) => write!(f, "({d})"),
            Label::Char(c) => write!(f, "({c})"),
        }
    }
}

/// A named node shape used as a label in place of a degree.
#[derive(Clone, Copy)]
pub struct Characteristic {
    pub label: char,
    pub matches: fn(&CyclicPerm) -> bool,
}

impl fmt::Debug for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Characteristic({})", self.label)
    }
}

/// Production rules `(label) -> (child labels)`.
///
/// A node is labelled by the first characteristic it matches, otherwise by
/// its degree. The root uses the `(*)` rule when one is given and is
/// classified like any other node otherwise.
#[derive(Debug, Clone, Default)]
pub struct ProductionRuleSet {
    pub rules: BTreeMap<Label, Vec<Label>>,
    pub characteristics: Vec<Characteristic>,
}

impl ProductionRuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rule(mut self, from: Label, to: &[Label]) -> Self {
        let mut to = to.to_vec();
        to.sort();
        self.rules.insert(from, to);
        self
    }

    pub fn characteristic(mut self, label: char, matches: fn(&CyclicPerm) -> bool) -> Self {
        self.characteristics.push(Characteristic { label, matches });
        self
    }

    fn classify(&self, node: &CyclicPerm, degree: usize) -> Label {
        self.characteristics
            .iter()
            .find(|c| (c.matches)(node))
            .map_or(Label::Degree(degree), |c| Label::Char(c.label))
    }

    /// Labels produced by some rule but lacking a rule of their own.
    pub fn dangling_labels(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self
            .rules
            .values()
            .flatten()
            .filter(|l| !self.rules.contains_key(l))
            .copied()
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Why rule verification stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleFailure {
    /// A node's children do not carry the labels its rule promises.
    Mismatch {
        node: CyclicPerm,
        label: Label,
        expected: Vec<Label>,
        actual: Vec<Label>,
    },
    /// A node was given a label that has no rule.
    MissingRule { node: CyclicPerm, label: Label },
}

impl fmt::Display for RuleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, ls: &[Label]| -> fmt::Result {
            for l in ls {
                write!(f, "{l}")?;
            }
            Ok(())
        };
        match self {
            RuleFailure::Mismatch { node, label, expected, actual } => {
                write!(f, "node {node} labelled {label}: rule gives ")?;
                join(f, expected)?;
                f.write_str(", children are ")?;
                join(f, actual)
            }
            RuleFailure::MissingRule { node, label } => {
                write!(f, "node {node} labelled {label} has no rule")
            }
        }
    }
}

/// Outcome of [`verify_production_rules`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleReport {
    pub max_level: usize,
    pub nodes_checked: usize,
    pub failure: Option<RuleFailure>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the rules at every node of levels `2..=max_level`, stopping at
/// the first node whose children disagree (or whose label has no rule).
/// Children's degrees look one level further, at `max_level + 1`.
pub fn verify_production_rules(
    set: &PatternSet,
    rules: &ProductionRuleSet,
    max_level: usize,
) -> Result<RuleReport> {
    cyclic_only(set)?;
    let compiled = set.compile();
    let root = tree_root();
    let mut report = RuleReport { max_level, nodes_checked: 0, failure: None };
    if max_level < 2 || !compiled.avoided_by(root.canon().values()) {
        return Ok(report);
    }
    let mut stack = alloc::vec![root];
    while let Some(node) = stack.pop() {
        let kids = children_compiled(&node, &compiled);
        let label = if node.len() == 2 && rules.rules.contains_key(&Label::Root) {
            Label::Root
        } else {
            rules.classify(&node, kids.len())
        };
        let Some(expected) = rules.rules.get(&label) else {
            report.failure = Some(RuleFailure::MissingRule { node, label });
            return Ok(report);
        };
        let mut actual: Vec<Label> = kids
            .iter()
            .map(|k| rules.classify(k, active_sites_compiled(k, &compiled).len()))
            .collect();
        actual.sort();
        report.nodes_checked += 1;
        if &actual != expected {
            report.failure = Some(RuleFailure::Mismatch {
                node,
                label,
                expected: expected.clone(),
                actual,
            });
            return Ok(report);
        }
        if node.len() < max_level {
            stack.extend(kids);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Wilf classification

/// One Wilf class: sets sharing a counting vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfClass {
    /// `#Av_n` for `n` in the classification range.
    pub counts: Vec<BigInt>,
    pub members: Vec<PatternSet>,
    /// Members grouped by trivial equivalence (reversal / complement /
    /// reverse complement images of each other).
    pub orbits: Vec<Vec<PatternSet>>,
}

impl WilfClass {
    /// More than one symmetry orbit in the class.
    pub fn is_nontrivial(&self) -> bool {
        self.orbits.len() > 1
    }

    pub fn contains(&self, set: &PatternSet) -> bool {
        self.members.contains(set)
    }
}

/// Groups sets by their counting vectors over `range`. Classes come out
/// ordered by counting vector, members sorted.
pub fn wilf_classify(sets: &[PatternSet], range: RangeInclusive<usize>, scanner: &Scanner) -> Result<Vec<WilfClass>> {
    let mut vectors = Vec::with_capacity(sets.len());
    if sets.iter().all(|s| s.is_cyclic()) {
        // share one containment profile per length across all sets
        let mut patterns: Vec<VincularPattern> = sets.iter().flat_map(|s| s.patterns().iter().cloned()).collect();
        patterns.sort();
        patterns.dedup();
        if patterns.len() <= 64 {
            scanner.check(*range.end())?;
            let profiles: Vec<ContainmentProfile> = range
                .clone()
                .map(|n| ContainmentProfile::build(&patterns, n))
                .collect::<Result<_>>()?;
            for s in sets {
                let v: Vec<BigInt> = profiles
                    .iter()
                    .map(|p| p.mask_of(s).map(|m| BigInt::from(p.count_avoiders(m))))
                    .collect::<Result<_>>()?;
                vectors.push(v);
            }
            return Ok(group_by_vector(sets, vectors));
        }
    }
    for s in sets {
        vectors.push(scanner.count_class(s, range.clone())?.values());
    }
    Ok(group_by_vector(sets, vectors))
}

/// Groups precomputed counting vectors into [`WilfClass`]es.
pub fn group_by_vector(sets: &[PatternSet], vectors: Vec<Vec<BigInt>>) -> Vec<WilfClass> {
    let mut groups: BTreeMap<Vec<BigInt>, Vec<PatternSet>> = BTreeMap::new();
    for (s, v) in sets.iter().zip(vectors) {
        groups.entry(v).or_default().push(s.clone());
    }
    groups
        .into_iter()
        .map(|(counts, mut members)| {
            members.sort();
            members.dedup();
            let mut by_key: BTreeMap<PatternSet, Vec<PatternSet>> = BTreeMap::new();
            for m in &members {
                by_key.entry(m.symmetry_class_key()).or_default().push(m.clone());
            }
            WilfClass { counts, members, orbits: by_key.into_values().collect() }
        })
        .collect()
}

/// Whether two sets are images of each other under a cylinder symmetry.
pub fn trivially_equivalent(a: &PatternSet, b: &PatternSet) -> bool {
    Symmetry::ALL.iter().any(|&s| &a.apply(s) == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::avoids;
    use alloc::vec;

    fn c(s: &str) -> CyclicPerm {
        s.parse::<Permutation>().unwrap().canonical().unwrap()
    }

    fn set(ps: &[&str]) -> PatternSet {
        let cs: Vec<CyclicPerm> = ps.iter().map(|s| c(s)).collect();
        PatternSet::cyclic(&cs).unwrap()
    }

    #[test]
    fn blocks_cover_all_classes() {
        for n in 1..=6 {
            let mut all = Vec::new();
            for b in blocks(n) {
                for_each_in_block(n, b, |w| all.push(w.to_vec()));
            }
            let expect: Vec<Vec<u8>> = crate::perm::all_cyclic(n).map(|x| x.canon().values().to_vec()).collect();
            assert_eq!(all, expect);
        }
    }

    #[test]
    fn class_examples() {
        assert_eq!(enumerate_class(&set(&["1234"]), 3).unwrap(), vec![c("123"), c("132")]);
        assert!(enumerate_class(&set(&["1234", "1432"]), 6).unwrap().is_empty());
        assert_eq!(enumerate_class(&set(&["1243", "1342"]), 5).unwrap().len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let s = Scanner::new(6).unwrap();
        assert_eq!(
            s.enumerate_class(&set(&["1234"]), 7),
            Err(Error::CapExceeded { requested: 7, cap: 6 })
        );
        assert!(Scanner::new(13).is_err());
    }

    #[test]
    fn scan_matches_generic_avoidance() {
        let s = set(&["1324", "1423"]);
        for n in 1..=7 {
            let expect: Vec<_> = crate::perm::all_cyclic(n).filter(|x| avoids(x, &s)).collect();
            assert_eq!(enumerate_class(&s, n).unwrap(), expect);
        }
    }

    #[test]
    fn sites_of_root() {
        let s = set(&["1234", "1342"]);
        assert_eq!(active_sites(&tree_root(), &s), vec![1, 2]);
    }

    #[test]
    fn site_before_maximum_is_active() {
        let s = set(&["1234", "1342"]);
        for n in 3..=7 {
            for sigma in enumerate_class(&s, n).unwrap() {
                let w = sigma.canon().values();
                let pos = w.iter().position(|&x| x as usize == n).unwrap();
                assert!(active_sites(&sigma, &s).contains(&pos), "{sigma:?}");
            }
        }
    }

    #[test]
    fn tree_level_five_of_first_doubleton() {
        let t = build_tree_levels(&set(&["1234", "1342"]), 5).unwrap();
        assert_eq!(t.degrees(5), vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(t.degrees(2), vec![2]);
    }

    #[test]
    fn wrong_rule_is_caught() {
        let s = set(&["1234", "1342"]);
        let bad = ProductionRuleSet::new()
            .rule(Label::Root, &[Label::Degree(2), Label::Degree(2)])
            .rule(Label::Degree(1), &[Label::Degree(1)])
            .rule(Label::Degree(2), &[Label::Degree(2), Label::Degree(2)]);
        let r = verify_production_rules(&s, &bad, 9).unwrap();
        match r.failure {
            Some(RuleFailure::Mismatch { node, .. }) => assert!(node.len() <= 4),
            other => panic!("expected a mismatch, got {other:?}"),
        }
    }

    #[test]
    fn missing_rule_is_reported() {
        let s = set(&["1234", "1342"]);
        let partial = ProductionRuleSet::new().rule(Label::Root, &[Label::Degree(2), Label::Degree(2)]);
        let r = verify_production_rules(&s, &partial, 6).unwrap();
        assert!(matches!(r.failure, Some(RuleFailure::MissingRule { label: Label::Degree(2), .. })));
        assert_eq!(partial.dangling_labels(), vec![Label::Degree(2)]);
    }

    #[test]
    fn profile_counts_agree_with_direct_counts() {
        let pats: Vec<VincularPattern> = ["1234", "1243", "1324"].iter().map(|s| VincularPattern::cyclic(&c(s))).collect();
        let prof = ContainmentProfile::build(&pats, 7).unwrap();
        let s = set(&["1234", "1324"]);
        let direct = count_class(&s, 7..=7).unwrap();
        assert_eq!(BigInt::from(prof.count_avoiders(prof.mask_of(&s).unwrap())), direct.rows[&7]);
    }

    #[test]
    fn singleton_classification() {
        let sets: Vec<PatternSet> = crate::perm::all_cyclic(4).map(|x| PatternSet::cyclic([&x]).unwrap()).collect();
        let classes = wilf_classify(&sets, 1..=8, &Scanner::default()).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|k| k.members.len() == 2 && !k.is_nontrivial()));
    }
}
