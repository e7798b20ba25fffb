//! Block-parallel versions of the core scans. Blocks are processed on the
//! current rayon pool and concatenated in block order, so results match
//! the sequential scans exactly.

use std::ops::RangeInclusive;

use cycperm_core::enumerate::{blocks, count_block, profile_block, scan_block, ContainmentProfile, Scanner};
use cycperm_core::{CyclicPerm, PatternSet, VincularPattern};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::CliError;

fn cyclic_n(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<(), CliError> {
    if !set.is_cyclic() {
        return Err(CliError::Usage("expected cyclic patterns in brackets".into()));
    }
    if n == 0 {
        return Err(CliError::Usage("lengths start at 1".into()));
    }
    scanner.check(n)?;
    Ok(())
}

pub fn count(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<BigInt, CliError> {
    cyclic_n(set, n, scanner)?;
    let compiled = set.compile();
    let total: usize = blocks(n).into_par_iter().map(|b| count_block(&compiled, n, b)).sum();
    Ok(BigInt::from(total))
}

pub fn count_range(set: &PatternSet, range: RangeInclusive<usize>, scanner: &Scanner) -> Result<Vec<(usize, BigInt)>, CliError> {
    range.map(|n| Ok((n, count(set, n, scanner)?))).collect()
}

pub fn enumerate(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<Vec<CyclicPerm>, CliError> {
    cyclic_n(set, n, scanner)?;
    let compiled = set.compile();
    let parts: Vec<Vec<CyclicPerm>> = blocks(n).into_par_iter().map(|b| scan_block(&compiled, n, b)).collect();
    Ok(parts.concat())
}

pub fn profile(patterns: &[VincularPattern], n: usize, scanner: &Scanner) -> Result<ContainmentProfile, CliError> {
    if n == 0 {
        return Err(CliError::Usage("lengths start at 1".into()));
    }
    scanner.check(n)?;
    let parts = blocks(n)
        .into_par_iter()
        .map(|b| profile_block(patterns, n, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ContainmentProfile::from_blocks(patterns, n, parts))
}
