//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! All comparisons are exact (tolerance 0).

use std::process::ExitCode;
use std::time::Instant;

use cycperm_core::algebra::IntPolynomial;
use cycperm_core::enumerate::{build_tree_levels, trivially_equivalent, verify_production_rules, Scanner};
use cycperm_core::formulas::{
    conjecture_check, cyclic_set, es_construct, es_verify_containment, es_verify_extremal, find_entry,
    formula_catalogue, registered_rules, transport_check, verify_formula, ConjectureId, Convention, Family,
    FormulaEntry, FormulaKind,
};
use cycperm_core::pattern::{avoids, is_1342_avoider_characterized};
use cycperm_core::perm::{all_cyclic, all_permutations};
use cycperm_core::stats::{cdes_as_excedance_check, cdes_genfun, stat_genfun_linear, StatName};
use cycperm_core::{Error, PatternSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Scanner) -> Outcome);

fn entries(family: Family, kind: FormulaKind) -> Vec<FormulaEntry> {
    formula_catalogue()
        .into_iter()
        .filter(|e| e.family == family && e.kind == kind)
        .collect()
}

/// Every listed entry (with its equivalents) matches its scan up to `max_n`.
fn check_entries(list: &[FormulaEntry], max_n: usize, sc: &Scanner) -> Result<usize, String> {
    let mut judged = 0;
    for e in list {
        let report = verify_formula(e, max_n, sc).map_err(|x| x.to_string())?;
        if let Some(r) = report.failures().next() {
            return Err(format!("{} {} n={}: expected {} got {}", e.id, r.set, r.n, r.expected.as_ref().unwrap(), r.actual));
        }
        judged += report.rows.iter().filter(|r| r.pass.is_some()).count();
    }
    Ok(judged)
}

fn singles(sc: &Scanner) -> Outcome {
    let list = entries(Family::Singles, FormulaKind::Count);
    let judged = check_entries(&list, 9, sc)?;
    for e in &list {
        for other in &e.equivalents {
            if !trivially_equivalent(&e.pattern_set, other) {
                return Err(format!("{} and {} are not symmetry images", e.pattern_set, other));
            }
        }
    }
    let covered: usize = list.iter().map(|e| 1 + e.equivalents.len()).sum();
    if covered != 6 {
        return Err(format!("{covered} singletons registered, expected 6"));
    }
    Ok(format!("6 singletons, {judged} exact comparisons, 2 <= n <= 9"))
}

fn doubles(sc: &Scanner) -> Outcome {
    let list = entries(Family::Doubles, FormulaKind::Count);
    let judged = check_entries(&list, 9, sc)?;
    let mut sets: Vec<PatternSet> = list.iter().flat_map(|e| e.all_sets().cloned()).collect();
    sets.sort();
    sets.dedup();
    if sets.len() != 15 {
        return Err(format!("{} doubletons registered, expected 15", sets.len()));
    }
    let zero = find_entry("count-1234-1432").unwrap();
    let four = find_entry("count-1243-1342").unwrap();
    if zero.min_n != 6 || four.min_n != 4 {
        return Err("floors of the constant doubletons changed".into());
    }
    Ok(format!("15 doubletons, {judged} exact comparisons, n <= 9"))
}

fn triples_quads(sc: &Scanner) -> Outcome {
    let mut list = entries(Family::Triples, FormulaKind::Count);
    list.extend(entries(Family::Quads, FormulaKind::Count));
    let judged = check_entries(&list, 9, sc)?;
    let sets: usize = list.iter().map(|e| 1 + e.equivalents.len()).sum();
    Ok(format!("{sets} sets of 3-5 patterns, {judged} exact comparisons, n <= 9"))
}

fn descent_polys(sc: &Scanner) -> Outcome {
    let list = entries(Family::Genfuns, FormulaKind::CdesPoly);
    let judged = check_entries(&list, 8, sc)?;
    let single = cyclic_set(&["1342"]);
    for n in 2..=8 {
        let p = cdes_genfun(&single, n, sc).map_err(|e| e.to_string())?;
        if !p.is_symmetric() {
            return Err(format!("D_{n}([1342]) = {p} is not symmetric"));
        }
    }
    let mut sets: Vec<PatternSet> = formula_catalogue()
        .iter()
        .flat_map(|e| e.all_sets().cloned().collect::<Vec<_>>())
        .filter(|s| s.is_cyclic() && s.is_classical())
        .collect();
    sets.sort();
    sets.dedup();
    for s in &sets {
        for n in 2..=8 {
            let t = transport_check(s, n, sc).map_err(|e| e.to_string())?;
            if !t.passed() {
                return Err(format!("transport fails for {s} at n={n}: {t:?}"));
            }
        }
    }
    Ok(format!(
        "{} polynomials, {judged} coefficientwise comparisons, symmetry n=2..8, transport for {} sets n=2..8",
        list.len(),
        sets.len()
    ))
}

fn joint(sc: &Scanner) -> Outcome {
    let list = entries(Family::Genfuns, FormulaKind::JointPoly);
    if list.is_empty() {
        return Err("no joint entry".into());
    }
    let judged = check_entries(&list, 8, sc)?;
    Ok(format!("{judged} bivariate comparisons, 3 <= n <= 8"))
}

fn erdos_szekeres(sc: &Scanner) -> Outcome {
    let mut scans = 0;
    for m in 1..=6 {
        for n in 1..=6 {
            if m * n + 2 > 8 {
                continue;
            }
            let c = es_verify_containment(m, n, sc).map_err(|e| e.to_string())?;
            if let Some(x) = c.counterexample {
                return Err(format!("{x} avoids both monotone patterns (m={m}, n={n})"));
            }
            scans += 1;
        }
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let inst = es_construct(m, n).map_err(|e| e.to_string())?;
            if inst.extremal.len() != m * n + 1 || !es_verify_extremal(&inst) {
                return Err(format!("construction fails for m={m}, n={n}: {}", inst.extremal));
            }
        }
    }
    Ok(format!("{scans} exhaustive containment scans (mn+2 <= 8), 16 extremal constructions (m,n <= 4)"))
}

fn vincular_catalan(sc: &Scanner) -> Outcome {
    let list = entries(Family::Vincular, FormulaKind::Count);
    let judged = check_entries(&list, 9, sc)?;
    let e = &list[0];
    let vectors: Vec<_> = e
        .all_sets()
        .map(|s| sc.count_class(s, 1..=9).map(|t| t.values()))
        .collect::<Result<_, Error>>()
        .map_err(|x| x.to_string())?;
    if e.equivalents.len() != 3 || vectors.windows(2).any(|w| w[0] != w[1]) {
        return Err("spellings disagree".into());
    }
    Ok(format!("4 spellings, {judged} exact comparisons, 1 <= n <= 9"))
}

fn trees(sc: &Scanner) -> Outcome {
    let rules = registered_rules();
    for r in &rules {
        let report = verify_production_rules(&r.pattern_set, &r.rules, 9).map_err(|e| e.to_string())?;
        if let Some(f) = report.failure {
            return Err(format!("{}: {f}", r.id));
        }
        let levels = build_tree_levels(&r.pattern_set, 9).map_err(|e| e.to_string())?;
        for n in 2..=9 {
            let scanned = sc.count_class(&r.pattern_set, n..=n).map_err(|e| e.to_string())?;
            if scanned.get(n).unwrap() != &levels.node_count(n).into() {
                return Err(format!("{}: level {n} has {} nodes", r.id, levels.node_count(n)));
            }
        }
    }
    Ok(format!("{} rule systems to level 9, level sizes equal scans", rules.len()))
}

fn conjecture(sc: &Scanner) -> Outcome {
    let mut rows = 0;
    for id in ConjectureId::ALL {
        let r = conjecture_check(id, 9, &Convention::ALL, sc).map_err(|e| e.to_string())?;
        if r.counts.len() != 9 {
            return Err(format!("{id}: {} counts", r.counts.len()));
        }
        for row in &r.rows {
            match &row.residual {
                Ok(_) | Err(Error::NonzeroConstantTerm) => {}
                Err(e) => return Err(format!("{id} {}: {e}", row.convention)),
            }
            if !row.self_check {
                return Err(format!("{id} {}: product-rule self-check failed", row.convention));
            }
            rows += 1;
        }
    }
    Ok(format!("a_1..a_9 scanned for 2 equations, {rows} exact residual rows, self-checks hold"))
}

fn cross_oracles(sc: &Scanner) -> Outcome {
    let single = cyclic_set(&["1342"]);
    for n in 1..=8 {
        for s in all_cyclic(n) {
            if avoids(&s, &single) != is_1342_avoider_characterized(&s) {
                return Err(format!("characterization disagrees on {s}"));
            }
        }
    }
    for n in 1..=7 {
        if let Some(p) = all_permutations(n).find(|p| !cdes_as_excedance_check(p)) {
            return Err(format!("excedance identity fails on {p}"));
        }
    }
    let linear = PatternSet::linear(["213", "231"].map(|w| w.parse().unwrap())).unwrap();
    for n in 1..=9 {
        let p = stat_genfun_linear(&linear, n, StatName::Des, sc).map_err(|e| e.to_string())?;
        if p != IntPolynomial::one_plus_q_pow(n - 1) {
            return Err(format!("des over Av_{n}(213,231) = {p}"));
        }
    }
    Ok("[1342] characterization n <= 8, excedance identity n <= 7, (1+q)^(n-1) n <= 9".into())
}

fn main() -> ExitCode {
    let sc = Scanner::default();
    let criteria: [Criterion; 10] = [
        ("singleton counts", singles),
        ("doubleton counts", doubles),
        ("triples, quadruples, quintuples", triples_quads),
        ("cyclic descent polynomials", descent_polys),
        ("joint cdes/cpk polynomial", joint),
        ("cyclic Erdos-Szekeres", erdos_szekeres),
        ("bonded pattern Catalan counts", vincular_catalan),
        ("generating trees", trees),
        ("EGF conjecture checker", conjecture),
        ("cross-oracle invariants", cross_oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&sc);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS [{:>2}] {name}: {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
