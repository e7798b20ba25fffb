//! Closed-form results for cyclic avoidance classes and the harness that
//! checks them against scans.

mod catalogue;
mod conjecture;
mod es;
mod numbers;
mod rules;
mod verify;

pub use catalogue::{
    catalan_patterns, cyclic_set, describe, find_entry, formula_catalogue, Family, FormulaEntry, FormulaKind,
    FormulaValue, NONTRIVIAL_WILF_PAIRS,
};
pub use conjecture::{
    conjecture_check, exp_product_rule, residual_row, ConjectureId, ConjectureReport, Convention, ConventionRow,
};
pub use es::{es_construct, es_verify_containment, es_verify_extremal, EsContainment, EsInstance};
pub use numbers::{binomial, catalan, fibonacci, pow2};
pub use rules::{registered_rules, rules_for, RegisteredRules};
pub use verify::{scan_value, transport_check, verify_formula, FormulaReport, TransportCheck, VerifyRow};
