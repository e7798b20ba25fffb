//! Checking catalogue entries against brute-force scans.

use alloc::vec::Vec;

use super::catalogue::{FormulaEntry, FormulaKind, FormulaValue};
use crate::enumerate::Scanner;
use crate::error::{invalid, Result};
use crate::pattern::PatternSet;
use crate::perm::Symmetry;
use crate::stats::{cdes_genfun, joint_cdes_cpk_genfun, stat_genfun_linear, StatName};

/// One `(set, n)` comparison. Below the entry's floor only the scan is
/// reported and `expected` / `pass` are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub set: PatternSet,
    pub n: usize,
    pub expected: Option<FormulaValue>,
    pub actual: FormulaValue,
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    pub entry_id: &'static str,
    pub rows: Vec<VerifyRow>,
}

impl FormulaReport {
    /// Every judged row agrees and at least one row was judged.
    pub fn passed(&self) -> bool {
        let judged: Vec<bool> = self.rows.iter().filter_map(|r| r.pass).collect();
        !judged.is_empty() && judged.into_iter().all(|p| p)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| r.pass == Some(false))
    }
}

/// The scanned value an entry of the given kind is compared against.
pub fn scan_value(kind: FormulaKind, set: &PatternSet, n: usize, scanner: &Scanner) -> Result<FormulaValue> {
    Ok(match kind {
        FormulaKind::Count => {
            let table = scanner.count_class(set, n..=n)?;
            FormulaValue::Count(table.get(n).cloned().expect("row present"))
        }
        FormulaKind::CdesPoly => FormulaValue::Poly(cdes_genfun(set, n, scanner)?),
        FormulaKind::JointPoly => FormulaValue::Joint(joint_cdes_cpk_genfun(set, n, scanner)?),
        FormulaKind::LinearDesPoly => FormulaValue::Poly(stat_genfun_linear(set, n, StatName::Des, scanner)?),
    })
}

/// Compares the closed form with scans of the entry's set and all its
/// asserted equivalents for `1 <= n <= max_n`.
pub fn verify_formula(entry: &FormulaEntry, max_n: usize, scanner: &Scanner) -> Result<FormulaReport> {
    scanner.check(max_n)?;
    let mut rows = Vec::new();
    for set in entry.all_sets() {
        for n in 1..=max_n {
            let actual = scan_value(entry.kind, set, n, scanner)?;
            let expected = entry.evaluate(n);
            let pass = expected.as_ref().map(|e| *e == actual);
            rows.push(VerifyRow { set: set.clone(), n, expected, actual, pass });
        }
    }
    Ok(FormulaReport { entry_id: entry.id, rows })
}

/// How `D_n` moves under the three non-trivial symmetries of one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportCheck {
    pub set: PatternSet,
    pub n: usize,
    pub reversal: bool,
    pub complement: bool,
    pub reverse_complement: bool,
}

impl TransportCheck {
    pub fn passed(&self) -> bool {
        self.reversal && self.complement && self.reverse_complement
    }
}

/// Checks `D_n(image) = q^n D_n(1/q)` for reversal and complement and
/// `D_n(image) = D_n` for reverse-complement, each side scanned separately.
/// Needs `n >= 2`: the single class `[1]` has no cyclic descent either way.
pub fn transport_check(set: &PatternSet, n: usize, scanner: &Scanner) -> Result<TransportCheck> {
    if !set.is_classical() {
        return Err(invalid("transport is checked for classical patterns"));
    }
    if n < 2 {
        return Err(invalid("transport needs n >= 2"));
    }
    let base = cdes_genfun(set, n, scanner)?;
    let flipped = base.reverse_transform(n)?;
    let check = |sym: Symmetry| -> Result<bool> {
        let image = cdes_genfun(&set.apply(sym), n, scanner)?;
        Ok(if sym.flips_descents() { image == flipped } else { image == base })
    };
    Ok(TransportCheck {
        set: set.clone(),
        n,
        reversal: check(Symmetry::Reversal)?,
        complement: check(Symmetry::Complement)?,
        reverse_complement: check(Symmetry::ReverseComplement)?,
    })
}
