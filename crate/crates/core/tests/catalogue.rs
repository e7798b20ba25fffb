use cycperm_core::enumerate::{verify_production_rules, Scanner};
use cycperm_core::formulas::{
    formula_catalogue, registered_rules, transport_check, verify_formula, FormulaKind, FormulaValue,
    NONTRIVIAL_WILF_PAIRS,
};
use cycperm_core::enumerate::trivially_equivalent;
use cycperm_core::formulas::find_entry;
use cycperm_core::stats::cdes_genfun;

fn max_n(kind: FormulaKind) -> usize {
    match kind {
        FormulaKind::Count => 9,
        _ => 8,
    }
}

#[test]
fn every_entry_matches_its_scan() {
    let sc = Scanner::default();
    let mut bad = Vec::new();
    for e in formula_catalogue() {
        let report = verify_formula(&e, max_n(e.kind), &sc).unwrap();
        if !report.passed() {
            for r in report.failures() {
                bad.push(format!("{} {} n={}: expected {} got {}", e.id, r.set, r.n, r.expected.as_ref().unwrap(), r.actual));
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn catalogue_ids_are_unique_and_cited() {
    let cat = formula_catalogue();
    let mut ids: Vec<_> = cat.iter().map(|e| e.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), cat.len());
    assert!(cat.iter().all(|e| !e.citation.is_empty()));
}

#[test]
fn rows_below_the_floor_are_unjudged() {
    let e = find_entry("count-1234-1432").unwrap();
    let report = verify_formula(&e, 6, &Scanner::default()).unwrap();
    for r in &report.rows {
        assert_eq!(r.pass.is_none(), r.n < 6);
    }
    // [S_5] still has an avoider of both monotone patterns
    let r5 = report.rows.iter().find(|r| r.n == 5).unwrap();
    assert_ne!(r5.actual, FormulaValue::Count(0.into()));
}

#[test]
fn nontrivial_pairs_share_counts_but_not_orbits() {
    let sc = Scanner::default();
    for (a, b) in NONTRIVIAL_WILF_PAIRS {
        let (ea, eb) = (find_entry(a).unwrap(), find_entry(b).unwrap());
        assert!(!trivially_equivalent(&ea.pattern_set, &eb.pattern_set), "{a} {b}");
        let ca = sc.count_class(&ea.pattern_set, 1..=9).unwrap().values();
        let cb = sc.count_class(&eb.pattern_set, 1..=9).unwrap().values();
        assert_eq!(ca, cb, "{a} {b}");
    }
}

#[test]
fn descent_transport_under_symmetries() {
    let sc = Scanner::default();
    for e in formula_catalogue() {
        if !e.pattern_set.is_cyclic() || !e.pattern_set.is_classical() {
            continue;
        }
        assert!(transport_check(&e.pattern_set, 1, &sc).is_err());
        for n in 2..=8 {
            let t = transport_check(&e.pattern_set, n, &sc).unwrap();
            assert!(t.passed(), "{} n={n}: {t:?}", e.id);
        }
    }
}

#[test]
fn single_1342_descent_polynomial_is_symmetric() {
    let e = find_entry("cdes-1342").unwrap();
    for n in 2..=8 {
        assert!(cdes_genfun(&e.pattern_set, n, &Scanner::default()).unwrap().is_symmetric());
    }
}

#[test]
fn registered_trees_hold_to_level_nine() {
    for r in registered_rules() {
        let report = verify_production_rules(&r.pattern_set, &r.rules, 9).unwrap();
        assert!(report.passed(), "{}: {}", r.id, report.failure.unwrap());
    }
}
