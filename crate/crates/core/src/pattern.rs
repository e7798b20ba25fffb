//! Containment and avoidance for classical, cyclic and vincular patterns.
//!
//! All matching runs through [`Matcher`], a backtracking search over
//! pattern positions. Each pattern position carries the positions of its
//! nearest smaller and larger predecessors (by value), so a candidate entry
//! of the text is accepted in O(1). Bonded positions pin the next index.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};
use crate::perm::{write_word, CyclicPerm, Permutation, Symmetry};

/// A pattern with adjacency bonds. Bond `i` (1-based) means entries `i` and
/// `i + 1` of the pattern must sit in adjacent positions of any copy.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VincularPattern {
    base: Permutation,
    bonds: Vec<usize>,
    cyclic: bool,
}

impl VincularPattern {
    pub fn new(base: Permutation, bonds: impl IntoIterator<Item = usize>, cyclic: bool) -> Result<Self> {
        let mut bonds: Vec<usize> = bonds.into_iter().collect();
        bonds.sort_unstable();
        bonds.dedup();
        if bonds.iter().any(|&b| b == 0 || b >= base.len()) {
            return Err(invalid("bond positions must lie in [1, |pattern| - 1]"));
        }
        Ok(VincularPattern { base, bonds, cyclic })
    }

    /// A linear pattern without bonds.
    pub fn classical(base: Permutation) -> Self {
        VincularPattern { base, bonds: Vec::new(), cyclic: false }
    }

    /// A cyclic pattern without bonds, stored by its canonical rotation.
    pub fn cyclic(base: &CyclicPerm) -> Self {
        VincularPattern { base: base.canon().clone(), bonds: Vec::new(), cyclic: true }
    }

    /// Every pair of neighbouring entries bonded.
    pub fn consecutive(base: Permutation, cyclic: bool) -> Self {
        let bonds = (1..base.len()).collect();
        VincularPattern { base, bonds, cyclic }
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn bonds(&self) -> &[usize] {
        &self.bonds
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn is_classical(&self) -> bool {
        self.bonds.is_empty()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// Image under a symmetry. Reversal mirrors bond positions; classical
    /// cyclic patterns are re-canonicalized, bonded ones keep the image
    /// representative as written.
    pub fn apply(&self, sym: Symmetry) -> VincularPattern {
        let n = self.base.len();
        let (base, bonds): (Permutation, Vec<usize>) = match sym {
            Symmetry::Identity => (self.base.clone(), self.bonds.clone()),
            Symmetry::Complement => (self.base.complement(), self.bonds.clone()),
            Symmetry::Reversal => (self.base.reversal(), self.bonds.iter().map(|&b| n - b).collect()),
            Symmetry::ReverseComplement => (
                self.base.reverse_complement(),
                self.bonds.iter().map(|&b| n - b).collect(),
            ),
        };
        let base = if self.cyclic && bonds.is_empty() && n > 0 {
            base.canonical().expect("n >= 1").canon().clone()
        } else {
            base
        };
        VincularPattern::new(base, bonds, self.cyclic).expect("bonds stay in range")
    }

    pub fn matcher(&self) -> Matcher {
        Matcher::new(&self.base, &self.bonds)
    }
}

/// Prints in the pattern grammar: digits, parenthesized bonded runs,
/// brackets for cyclic patterns.
impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic {
            f.write_str("[")?;
        }
        if self.bonds.is_empty() {
            write_word(f, self.base.values())?;
        } else {
            let v = self.base.values();
            let bonded = |i: usize| self.bonds.binary_search(&(i + 1)).is_ok();
            let mut i = 0;
            while i < v.len() {
                if bonded(i) {
                    let start = i;
                    while i < v.len() && bonded(i) {
                        i += 1;
                    }
                    f.write_str("(")?;
                    for x in &v[start..=i] {
                        write!(f, "{x}")?;
                    }
                    f.write_str(")")?;
                } else {
                    write!(f, "{}", v[i])?;
                }
                i += 1;
            }
        }
        if self.cyclic {
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nonempty, deduplicated set of patterns sharing one cyclic flag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSet {
    patterns: Vec<VincularPattern>,
    cyclic: bool,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = VincularPattern>) -> Result<Self> {
        let mut patterns: Vec<VincularPattern> = patterns.into_iter().collect();
        let cyclic = match patterns.first() {
            Some(p) => p.cyclic,
            None => return Err(invalid("a pattern set must be nonempty")),
        };
        if patterns.iter().any(|p| p.cyclic != cyclic) {
            return Err(invalid("cannot mix cyclic and linear patterns"));
        }
        patterns.sort();
        patterns.dedup();
        Ok(PatternSet { patterns, cyclic })
    }

    /// Classical cyclic patterns.
    pub fn cyclic<'a>(classes: impl IntoIterator<Item = &'a CyclicPerm>) -> Result<Self> {
        PatternSet::new(classes.into_iter().map(VincularPattern::cyclic))
    }

    /// Classical linear patterns.
    pub fn linear(perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        PatternSet::new(perms.into_iter().map(VincularPattern::classical))
    }

    pub fn patterns(&self) -> &[VincularPattern] {
        &self.patterns
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn is_classical(&self) -> bool {
        self.patterns.iter().all(VincularPattern::is_classical)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn max_pattern_len(&self) -> usize {
        self.patterns.iter().map(VincularPattern::len).max().unwrap_or(0)
    }

    pub fn apply(&self, sym: Symmetry) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(|p| p.apply(sym))).expect("nonempty")
    }

    /// The smallest image of this set under the cylinder symmetries; equal
    /// for two sets exactly when they are trivially equivalent.
    pub fn symmetry_class_key(&self) -> PatternSet {
        Symmetry::ALL
            .iter()
            .map(|&s| self.apply(s))
            .min()
            .expect("four images")
    }

    pub fn compile(&self) -> CompiledSet {
        CompiledSet::new(self)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

const NONE: u8 = u8::MAX;

/// A pattern preprocessed for repeated linear matching.
#[derive(Debug, Clone)]
pub struct Matcher {
    values: Vec<u8>,
    /// For position j: earlier position holding the largest smaller value.
    below: Vec<u8>,
    /// For position j: earlier position holding the smallest larger value.
    above: Vec<u8>,
    /// `bonded[j]`: position j+1 must directly follow position j.
    bonded: Vec<bool>,
}

impl Matcher {
    pub fn new(pattern: &Permutation, bonds: &[usize]) -> Self {
        let values = pattern.values().to_vec();
        let k = values.len();
        let mut below = alloc::vec![NONE; k];
        let mut above = alloc::vec![NONE; k];
        for j in 0..k {
            let x = values[j];
            for i in 0..j {
                let y = values[i];
                if y < x && (below[j] == NONE || y > values[below[j] as usize]) {
                    below[j] = i as u8;
                }
                if y > x && (above[j] == NONE || y < values[above[j] as usize]) {
                    above[j] = i as u8;
                }
            }
        }
        let mut bonded = alloc::vec![false; k];
        for &b in bonds {
            bonded[b - 1] = true;
        }
        Matcher { values, below, above, bonded }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether `text` has a bond-respecting copy of the pattern.
    pub fn matches(&self, text: &[u8]) -> bool {
        let k = self.values.len();
        if k == 0 {
            return true;
        }
        if k > text.len() {
            return false;
        }
        let mut idx = [0usize; 32];
        if k <= idx.len() {
            self.search(text, 0, 0, &mut idx[..k], &mut |_| true)
        } else {
            let mut idx = alloc::vec![0usize; k];
            self.search(text, 0, 0, &mut idx, &mut |_| true)
        }
    }

    /// Every copy, as increasing 0-based index tuples in lexicographic order.
    pub fn occurrences(&self, text: &[u8]) -> Vec<Vec<usize>> {
        let k = self.values.len();
        let mut out = Vec::new();
        if k > text.len() {
            return out;
        }
        let mut idx = alloc::vec![0usize; k];
        self.search(text, 0, 0, &mut idx, &mut |found| {
            out.push(found.to_vec());
            false
        });
        out
    }

    /// Depth-first search; `on_match` returns true to stop.
    fn search(
        &self,
        text: &[u8],
        j: usize,
        from: usize,
        idx: &mut [usize],
        on_match: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = self.values.len();
        if j == k {
            return on_match(idx);
        }
        let lo = match self.below[j] {
            NONE => 0,
            p => text[idx[p as usize]],
        };
        let hi = match self.above[j] {
            NONE => u8::MAX,
            p => text[idx[p as usize]],
        };
        let last = text.len() - (k - j);
        let pinned = j > 0 && self.bonded[j - 1];
        let end = if pinned { from } else { last };
        if from > last {
            return false;
        }
        for i in from..=end {
            let x = text[i];
            if x > lo && x < hi {
                idx[j] = i;
                if self.search(text, j + 1, i + 1, idx, on_match) {
                    return true;
                }
            }
        }
        false
    }
}

/// Classical linear containment.
pub fn contains_linear(text: &Permutation, pattern: &Permutation) -> bool {
    Matcher::new(pattern, &[]).matches(text.values())
}

/// Classical cyclic containment: some rotation of `text` contains the
/// pattern, equivalently `text`'s canonical form contains some rotation
/// of the pattern.
pub fn contains_cyclic(text: &CyclicPerm, pattern: &CyclicPerm) -> bool {
    pattern
        .members()
        .iter()
        .any(|rot| Matcher::new(rot, &[]).matches(text.canon().values()))
}

/// Linear vincular containment. The pattern's cyclic flag is ignored.
pub fn contains_vincular_linear(text: &Permutation, pattern: &VincularPattern) -> bool {
    pattern.matcher().matches(text.values())
}

/// Cyclic vincular containment: some rotation of `text` contains the
/// pattern exactly as written (the pattern is never rotated).
pub fn contains_vincular_cyclic(text: &CyclicPerm, pattern: &VincularPattern) -> bool {
    let m = pattern.matcher();
    any_rotation_matches(&m, text.canon().values())
}

fn any_rotation_matches(m: &Matcher, word: &[u8]) -> bool {
    let n = word.len();
    if n == 0 {
        return m.is_empty();
    }
    let mut doubled = [0u8; 2 * 32];
    if 2 * n <= doubled.len() {
        doubled[..n].copy_from_slice(word);
        doubled[n..2 * n].copy_from_slice(word);
        (0..n).any(|s| m.matches(&doubled[s..s + n]))
    } else {
        let mut doubled = word.to_vec();
        doubled.extend_from_slice(word);
        (0..n).any(|s| m.matches(&doubled[s..s + n]))
    }
}

/// All bond-respecting copies of `pattern` in `text` (0-based indices).
pub fn occurrences(text: &Permutation, pattern: &VincularPattern) -> Vec<Vec<usize>> {
    pattern.matcher().occurrences(text.values())
}

/// A pattern set with every matcher built once, for scanning many texts.
#[derive(Debug, Clone)]
pub struct CompiledSet {
    cyclic: bool,
    /// One entry per pattern. Classical cyclic patterns expand to all
    /// rotations, matched against the canonical text; bonded cyclic
    /// patterns keep one matcher tried against every rotation of the text.
    groups: Vec<Group>,
}

#[derive(Debug, Clone)]
enum Group {
    AnyOf(Vec<Matcher>),
    EveryRotation(Matcher),
}

impl CompiledSet {
    pub fn new(set: &PatternSet) -> Self {
        let groups = set
            .patterns()
            .iter()
            .map(|p| {
                if set.is_cyclic() && p.is_classical() && !p.is_empty() {
                    Group::AnyOf(p.base().rotations().iter().map(|r| Matcher::new(r, &[])).collect())
                } else if set.is_cyclic() {
                    Group::EveryRotation(p.matcher())
                } else {
                    Group::AnyOf(alloc::vec![p.matcher()])
                }
            })
            .collect();
        CompiledSet { cyclic: set.is_cyclic(), groups }
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    /// Whether the word (a canonical representative when the set is
    /// cyclic) contains pattern number `i`.
    pub fn contains_pattern(&self, i: usize, word: &[u8]) -> bool {
        match &self.groups[i] {
            Group::AnyOf(ms) => ms.iter().any(|m| m.matches(word)),
            Group::EveryRotation(m) => any_rotation_matches(m, word),
        }
    }

    /// Whether the word avoids every pattern of the set.
    pub fn avoided_by(&self, word: &[u8]) -> bool {
        (0..self.groups.len()).all(|i| !self.contains_pattern(i, word))
    }
}

/// `[sigma]` avoids every member of a cyclic pattern set.
pub fn avoids(text: &CyclicPerm, set: &PatternSet) -> bool {
    debug_assert!(set.is_cyclic());
    set.patterns().iter().all(|p| {
        if p.is_classical() {
            !contains_cyclic(text, &CyclicPerm::from_canonical_unchecked(p.base().clone()))
        } else {
            !contains_vincular_cyclic(text, p)
        }
    })
}

/// `sigma` avoids every member of a linear pattern set.
pub fn avoids_linear(text: &Permutation, set: &PatternSet) -> bool {
    set.patterns().iter().all(|p| !contains_vincular_linear(text, p))
}

/// Structural test for membership in `Av_n[1342]`: writing the canonical
/// form as `1 rho n tau`, require that rho and tau avoid 213 and 231, that
/// max rho < min tau, and that rho has no descent while tau has an ascent.
pub fn is_1342_avoider_characterized(sigma: &CyclicPerm) -> bool {
    let w = sigma.canon().values();
    let n = w.len() as u8;
    if n <= 2 {
        return true;
    }
    let top = w.iter().position(|&x| x == n).expect("n occurs");
    let rho = &w[1..top];
    let tau = &w[top + 1..];
    let avoids_213_231 = |s: &[u8]| {
        // both 213 and 231 start with an entry followed by a smaller and a larger one
        for i in 0..s.len() {
            let later = &s[i + 1..];
            let has_smaller = later.iter().any(|&y| y < s[i]);
            let has_larger = later.iter().any(|&y| y > s[i]);
            if has_smaller && has_larger {
                return false;
            }
        }
        true
    };
    if !avoids_213_231(rho) || !avoids_213_231(tau) {
        return false;
    }
    if let (Some(&max_rho), Some(&min_tau)) = (rho.iter().max(), tau.iter().min()) {
        if max_rho > min_tau {
            return false;
        }
    }
    let rho_has_descent = rho.windows(2).any(|p| p[0] > p[1]);
    let tau_has_ascent = tau.windows(2).any(|p| p[0] < p[1]);
    !(rho_has_descent && tau_has_ascent)
}
