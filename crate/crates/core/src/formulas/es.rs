//! The cyclic Erdős–Szekeres bound: every `[sigma]` of length `mn + 2`
//! contains `[iota_{m+2}]` or `[delta_{n+2}]`, and the bound is tight.

use alloc::vec::Vec;

use crate::enumerate::Scanner;
use crate::error::{invalid, Result};
use crate::pattern::contains_cyclic;
use crate::perm::{all_cyclic, arithmetic_decreasing, CyclicPerm, DecreasingSpec, Permutation, MAX_LEN};

/// A length `mn + 1` class avoiding both `[iota_{m+2}]` and `[delta_{n+2}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsInstance {
    pub m: usize,
    pub n: usize,
    pub extremal: CyclicPerm,
}

/// `1` followed by the interleaved decreasing runs
/// `delta(n, m, 2), delta(n, m, 3), ..., delta(n, m, m + 1)`.
/// With `m = 0` or `n = 0` this is just `[1]`.
pub fn es_construct(m: usize, n: usize) -> Result<EsInstance> {
    let len = m.checked_mul(n).and_then(|x| x.checked_add(1));
    if len.is_none_or(|l| l > MAX_LEN) {
        return Err(invalid("mn + 1 exceeds 255"));
    }
    let mut word: Vec<u8> = alloc::vec![1];
    for s in 2..=m + 1 {
        let run = arithmetic_decreasing(DecreasingSpec::new(n as u32, m as u32, s as u32));
        word.extend(run.into_iter().map(|v| v as u8));
    }
    let canon = Permutation::new(word)?;
    let extremal = CyclicPerm::from_canonical(canon)?;
    Ok(EsInstance { m, n, extremal })
}

/// The construction avoids both monotone patterns.
pub fn es_verify_extremal(inst: &EsInstance) -> bool {
    let up = CyclicPerm::identity(inst.m + 2);
    let down = CyclicPerm::decreasing(inst.n + 2);
    !contains_cyclic(&inst.extremal, &up) && !contains_cyclic(&inst.extremal, &down)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsContainment {
    pub m: usize,
    pub n: usize,
    pub checked: usize,
    /// A class of length `mn + 2` avoiding both, if one exists.
    pub counterexample: Option<CyclicPerm>,
}

impl EsContainment {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Scans all of `[S_{mn+2}]` for a class avoiding both monotone patterns.
pub fn es_verify_containment(m: usize, n: usize, scanner: &Scanner) -> Result<EsContainment> {
    let len = m.checked_mul(n).and_then(|x| x.checked_add(2)).ok_or_else(|| invalid("mn + 2 overflows"))?;
    scanner.check(len)?;
    let up = CyclicPerm::identity(m + 2);
    let down = CyclicPerm::decreasing(n + 2);
    let mut checked = 0;
    for sigma in all_cyclic(len) {
        checked += 1;
        if !contains_cyclic(&sigma, &up) && !contains_cyclic(&sigma, &down) {
            return Ok(EsContainment { m, n, checked, counterexample: Some(sigma) });
        }
    }
    Ok(EsContainment { m, n, checked, counterexample: None })
}
