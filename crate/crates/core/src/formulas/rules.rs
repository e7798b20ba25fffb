//! Production rules describing the generating trees of some classes.

use alloc::vec::Vec;

use super::catalogue::cyclic_set;
use crate::enumerate::{Label, ProductionRuleSet};
use crate::pattern::PatternSet;
use crate::perm::CyclicPerm;

#[derive(Debug, Clone)]
pub struct RegisteredRules {
    pub id: &'static str,
    pub pattern_set: PatternSet,
    pub rules: ProductionRuleSet,
}

/// Canonical form `1, n, n-1, ..., 2`.
fn is_decreasing_class(s: &CyclicPerm) -> bool {
    *s == CyclicPerm::decreasing(s.len())
}

/// Canonical form `1, n-1, n, n-2, n-3, ..., 2`.
fn is_swapped_top(s: &CyclicPerm) -> bool {
    let v = s.canon().values();
    let n = v.len();
    if n < 3 {
        return false;
    }
    let n8 = n as u8;
    let mut expect: Vec<u8> = alloc::vec![1, n8 - 1, n8];
    expect.extend((2..n8 - 1).rev());
    v == &expect[..]
}

fn degree_tree_rules() -> ProductionRuleSet {
    use Label::*;
    ProductionRuleSet::new()
        .rule(Root, &[Degree(1), Degree(2)])
        .rule(Degree(1), &[Degree(1)])
        .rule(Degree(2), &[Degree(1), Degree(2)])
}

pub fn registered_rules() -> Vec<RegisteredRules> {
    use Label::*;
    alloc::vec![
        RegisteredRules {
            id: "tree-1234-1342",
            pattern_set: cyclic_set(&["1234", "1342"]),
            rules: ProductionRuleSet::new()
                .rule(Root, &[Degree(2), Degree(2)])
                .rule(Degree(1), &[Degree(1)])
                .rule(Degree(2), &[Degree(1), Degree(2)]),
        },
        RegisteredRules {
            // the root [12] is itself the decreasing class, so no (*) rule
            id: "tree-1234-1324",
            pattern_set: cyclic_set(&["1234", "1324"]),
            rules: ProductionRuleSet::new()
                .characteristic('D', is_decreasing_class)
                .characteristic('E', is_swapped_top)
                .rule(Degree(1), &[Degree(1)])
                .rule(Char('D'), &[Char('D'), Char('E')])
                .rule(Char('E'), &[Degree(1), Degree(1)]),
        },
        RegisteredRules {
            id: "tree-1234-1342-1423",
            pattern_set: cyclic_set(&["1234", "1342", "1423"]),
            rules: degree_tree_rules(),
        },
        RegisteredRules {
            id: "tree-1234-1324-1423",
            pattern_set: cyclic_set(&["1234", "1324", "1423"]),
            rules: degree_tree_rules(),
        },
    ]
}

pub fn rules_for(set: &PatternSet) -> Option<RegisteredRules> {
    registered_rules().into_iter().find(|r| &r.pattern_set == set)
}
