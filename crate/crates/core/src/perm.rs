//! Linear and cyclic permutations, the three symmetries that act on the
//! cylinder, and the constructive builders (inflation, shuffles, arithmetic
//! decreasing runs).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest length a [`Permutation`] can carry; entries are stored as `u8`.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A permutation of `[n]` in one-line notation.
///
/// Entries are 1-based. The empty permutation is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Checks that `values` is a permutation of `1..=len`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(invalid("permutation longer than 255"));
        }
        let mut seen = [false; MAX_LEN + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(invalid("values are not a permutation of [n]"));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees `values` is a permutation of `[n]`.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    /// The increasing permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation((1..=n as u8).collect())
    }

    /// The decreasing permutation `n ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }

    /// All `n` rotations, starting with `self`.
    pub fn rotations(&self) -> Vec<Permutation> {
        let n = self.len();
        if n == 0 {
            return alloc::vec![self.clone()];
        }
        (0..n).map(|k| self.rotate_left(k)).collect()
    }

    /// The rotation `p_{k+1} ... p_n p_1 ... p_k`.
    pub fn rotate_left(&self, k: usize) -> Permutation {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Permutation(v)
    }

    pub fn reversal(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let top = self.len() as u8 + 1;
        Permutation(self.0.iter().map(|&v| top - v).collect())
    }

    pub fn reverse_complement(&self) -> Permutation {
        let top = self.len() as u8 + 1;
        Permutation(self.0.iter().rev().map(|&v| top - v).collect())
    }

    /// The cyclic class of `self`. Fails on the empty permutation.
    pub fn canonical(&self) -> Result<CyclicPerm> {
        CyclicPerm::from_linear(self)
    }

    /// Inserts `value` at index `at`, bumping every entry `>= value` by one.
    pub fn insert_value(&self, at: usize, value: u8) -> Permutation {
        let mut v: Vec<u8> = self
            .0
            .iter()
            .map(|&x| if x >= value { x + 1 } else { x })
            .collect();
        v.insert(at, value);
        Permutation(v)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Digits run together when every entry is below 10, comma separated
/// otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[u8]) -> fmt::Result {
    let compact = word.iter().all(|&v| v < 10);
    for (i, v) in word.iter().enumerate() {
        if i > 0 && !compact {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Accepts `"42351"` (single digits) or `"1,12,7,2"` (comma separated).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| invalid("bad entry")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| invalid("expected digits"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// The order-isomorphic permutation of `[|seq|]`.
pub fn standardize<T: Ord>(seq: &[T]) -> Result<Permutation> {
    if seq.len() > MAX_LEN {
        return Err(invalid("sequence longer than 255"));
    }
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if idx.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return Err(invalid("duplicate entries"));
    }
    let mut out = alloc::vec![0u8; seq.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u8 + 1;
    }
    Ok(Permutation(out))
}

/// A cyclic permutation `[pi]`, stored as the rotation that starts with 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPerm(Permutation);

impl CyclicPerm {
    pub fn from_linear(p: &Permutation) -> Result<Self> {
        let pos = p
            .values()
            .iter()
            .position(|&v| v == 1)
            .ok_or_else(|| invalid("cyclic permutations need n >= 1"))?;
        Ok(CyclicPerm(p.rotate_left(pos)))
    }

    /// Wraps a representative that already begins with 1.
    pub fn from_canonical(p: Permutation) -> Result<Self> {
        match p.values().first() {
            Some(1) => Ok(CyclicPerm(p)),
            _ => Err(invalid("canonical representative must start with 1")),
        }
    }

    pub(crate) fn from_canonical_unchecked(p: Permutation) -> Self {
        debug_assert_eq!(p.values().first(), Some(&1));
        CyclicPerm(p)
    }

    pub fn canon(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every member of the class, beginning with the canonical rotation.
    pub fn members(&self) -> Vec<Permutation> {
        self.0.rotations()
    }

    pub fn reversal(&self) -> CyclicPerm {
        CyclicPerm::from_linear(&self.0.reversal()).expect("n >= 1")
    }

    pub fn complement(&self) -> CyclicPerm {
        CyclicPerm::from_linear(&self.0.complement()).expect("n >= 1")
    }

    pub fn reverse_complement(&self) -> CyclicPerm {
        CyclicPerm::from_linear(&self.0.reverse_complement()).expect("n >= 1")
    }

    /// Applies one of the cylinder symmetries.
    pub fn apply(&self, sym: Symmetry) -> CyclicPerm {
        match sym {
            Symmetry::Identity => self.clone(),
            Symmetry::Reversal => self.reversal(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse_complement(),
        }
    }

    /// The increasing class `[12...n]`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        CyclicPerm(Permutation::identity(n))
    }

    /// The decreasing class `[n...21]`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1);
        CyclicPerm::from_linear(&Permutation::decreasing(n)).expect("n >= 1")
    }
}

impl fmt::Debug for CyclicPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl fmt::Display for CyclicPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// The symmetries of the square that preserve the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    Identity,
    Reversal,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Reversal,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    /// Reversal and complement swap cyclic descents with cyclic ascents.
    pub fn flips_descents(self) -> bool {
        matches!(self, Symmetry::Reversal | Symmetry::Complement)
    }
}

/// Parameters of the run `s+(n-1)d, ..., s+d, s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecreasingSpec {
    pub len: u32,
    pub diff: u32,
    pub smallest: u32,
}

impl DecreasingSpec {
    pub fn new(len: u32, diff: u32, smallest: u32) -> Self {
        DecreasingSpec { len, diff, smallest }
    }
}

pub fn arithmetic_decreasing(spec: DecreasingSpec) -> Vec<u32> {
    (0..spec.len)
        .rev()
        .map(|k| spec.smallest + k * spec.diff)
        .collect()
}

/// Replaces point `i` of `p`'s diagram by a block order-isomorphic to
/// `parts[i]`; blocks are stacked vertically in the order given by `p`.
pub fn inflate(p: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    if parts.len() != p.len() {
        return Err(invalid("inflation needs one block per entry"));
    }
    let total: usize = parts.iter().map(Permutation::len).sum();
    if total > MAX_LEN {
        return Err(invalid("inflation longer than 255"));
    }
    // offset[v] = number of values in blocks whose p-value is below v
    let mut sizes_by_value = alloc::vec![0usize; p.len() + 1];
    for (i, &v) in p.values().iter().enumerate() {
        sizes_by_value[v as usize] = parts[i].len();
    }
    let mut offset = alloc::vec![0usize; p.len() + 1];
    for v in 1..=p.len() {
        offset[v] = if v == 1 { 0 } else { offset[v - 1] + sizes_by_value[v - 1] };
    }
    let mut out = Vec::with_capacity(total);
    for (i, &v) in p.values().iter().enumerate() {
        let base = offset[v as usize];
        out.extend(parts[i].values().iter().map(|&x| (base + x as usize) as u8));
    }
    Ok(Permutation(out))
}

/// All interleavings of two value-disjoint sequences that keep both as
/// subsequences, in lexicographic order.
pub fn shuffle_set<T: Ord + Clone>(left: &[T], right: &[T]) -> Result<Vec<Vec<T>>> {
    let values: BTreeSet<&T> = left.iter().collect();
    if values.len() != left.len() {
        return Err(invalid("shuffle operand has repeated values"));
    }
    let mut all = values;
    for x in right {
        if !all.insert(x) {
            return Err(invalid("shuffle operands share a value"));
        }
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(left.len() + right.len());
    shuffle_rec(left, right, &mut buf, &mut out);
    out.sort();
    Ok(out)
}

fn shuffle_rec<T: Clone>(left: &[T], right: &[T], buf: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if left.is_empty() || right.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(left);
        w.extend_from_slice(right);
        out.push(w);
        return;
    }
    buf.push(left[0].clone());
    shuffle_rec(&left[1..], right, buf, out);
    buf.pop();
    buf.push(right[0].clone());
    shuffle_rec(left, &right[1..], buf, out);
    buf.pop();
}

/// Rearranges `v` into the next permutation in lexicographic order;
/// returns false (leaving `v` sorted ascending) after the last one.
pub fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every element of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Vec<u8>> = Some((1..=n as u8).collect());
    core::iter::from_fn(move || {
        let v = cur.take()?;
        let mut next = v.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(Permutation(v))
    })
}

/// Every cyclic class of length `n >= 1`, sorted by canonical form.
pub fn all_cyclic(n: usize) -> impl Iterator<Item = CyclicPerm> {
    assert!(n >= 1);
    all_permutations(n - 1).map(|tail| {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(1);
        v.extend(tail.values().iter().map(|&x| x + 1));
        CyclicPerm(Permutation(v))
    })
}
