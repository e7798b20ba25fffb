//! One function per subcommand. Each returns a [`Report`]; the exit code
//! follows from `report.pass` (`Some(false)` means 1).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cycperm_core::enumerate::{
    build_tree_levels, group_by_vector, verify_production_rules, Scanner, WilfClass,
};
use cycperm_core::formulas::{
    conjecture_check, es_construct, es_verify_extremal, find_entry, formula_catalogue, registered_rules,
    rules_for, transport_check, verify_formula, Family, FormulaEntry, FormulaKind, FormulaValue, VerifyRow,
};
use cycperm_core::formulas::{ConjectureId, Convention};
use cycperm_core::stats::{cdes_distribution, joint_distribution, StatName};
use cycperm_core::{CyclicPerm, PatternSet, VincularPattern};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::parallel;
use crate::report::{big, bigs, object, Report};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_range(min_n: usize, max_n: usize, cfg: &RunConfig) -> Result<(), CliError> {
    if min_n == 0 || min_n > max_n {
        return Err(usage(format!("need 1 <= min-n <= max-n, got {min_n}..{max_n}")));
    }
    cfg.scanner().check(max_n)?;
    Ok(())
}

// ---------------------------------------------------------------------------

pub fn count(set: &PatternSet, min_n: usize, max_n: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    check_range(min_n, max_n, cfg)?;
    let rows = cfg.pool()?.install(|| parallel::count_range(set, min_n..=max_n, &cfg.scanner()))?;
    let mut r = Report::new("count", "rows");
    r.input("patterns", set.to_string());
    r.input("min_n", min_n);
    r.input("max_n", max_n);
    for (n, c) in &rows {
        r.body.push(object([("n", (*n).into()), ("count", big(c))]));
        writeln!(r.text, "{n}\t{c}").unwrap();
    }
    Ok(r)
}

// ---------------------------------------------------------------------------

/// `--stat` values: a statistic name or `joint` for `(cdes, cpk)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenfunStat {
    Single(StatName),
    Joint,
}

impl std::str::FromStr for GenfunStat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "joint" {
            return Ok(GenfunStat::Joint);
        }
        s.parse::<StatName>()
            .map(GenfunStat::Single)
            .map_err(|_| usage(format!("unknown statistic {s:?} (des, maj, inv, exc, pk, cdes, cpk or joint)")))
    }
}

impl std::fmt::Display for GenfunStat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenfunStat::Single(s) => write!(f, "{s}"),
            GenfunStat::Joint => f.write_str("joint"),
        }
    }
}

pub fn genfun(set: &PatternSet, stat: GenfunStat, n: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    let scanner = cfg.scanner();
    let mut r = Report::new("genfun", "coeffs");
    r.input("patterns", set.to_string());
    r.input("stat", stat.to_string());
    r.input("n", n);
    let cyclic_stat = matches!(stat, GenfunStat::Joint) || matches!(stat, GenfunStat::Single(s) if s.is_cyclic());
    if cyclic_stat != set.is_cyclic() {
        return Err(usage(format!(
            "statistic {stat} needs {} patterns",
            if cyclic_stat { "cyclic" } else { "linear" }
        )));
    }
    match stat {
        GenfunStat::Joint => {
            let class = cfg.pool()?.install(|| parallel::enumerate(set, n, &scanner))?;
            let poly = joint_distribution(&class);
            for (q, t, c) in poly.terms() {
                r.body.push(Value::Array(vec![q.into(), t.into(), big(c)]));
            }
            writeln!(r.text, "{poly}").unwrap();
        }
        GenfunStat::Single(s) => {
            let poly = if s.is_cyclic() {
                let class = cfg.pool()?.install(|| parallel::enumerate(set, n, &scanner))?;
                if s == StatName::Cdes {
                    cdes_distribution(&class)
                } else {
                    let mut p = cycperm_core::algebra::IntPolynomial::zero();
                    for c in &class {
                        p.add_term(s.eval_cyclic(c).expect("cyclic"), &BigInt::from(1));
                    }
                    p
                }
            } else {
                cycperm_core::stats::stat_genfun_linear(set, n, s, &scanner)?
            };
            r.body = poly.coeffs().iter().map(big).collect();
            writeln!(r.text, "{poly}").unwrap();
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Singles,
    Doubles,
    Triples,
    Quads,
    Genfuns,
    Es,
    Vincular,
    Trees,
    All,
}

impl std::str::FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "singles" => Suite::Singles,
            "doubles" => Suite::Doubles,
            "triples" => Suite::Triples,
            "quads" => Suite::Quads,
            "genfuns" => Suite::Genfuns,
            "es" => Suite::Es,
            "vincular" => Suite::Vincular,
            "trees" => Suite::Trees,
            "all" => Suite::All,
            _ => return Err(usage(format!("unknown suite {s:?}"))),
        })
    }
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Singles => "singles",
            Suite::Doubles => "doubles",
            Suite::Triples => "triples",
            Suite::Quads => "quads",
            Suite::Genfuns => "genfuns",
            Suite::Es => "es",
            Suite::Vincular => "vincular",
            Suite::Trees => "trees",
            Suite::All => "all",
        }
    }

    fn families(self) -> &'static [Family] {
        match self {
            Suite::Singles => &[Family::Singles],
            Suite::Doubles => &[Family::Doubles],
            Suite::Triples => &[Family::Triples],
            Suite::Quads => &[Family::Quads],
            Suite::Genfuns => &[Family::Genfuns],
            Suite::Vincular => &[Family::Vincular],
            Suite::Es | Suite::Trees => &[],
            Suite::All => &[
                Family::Singles,
                Family::Doubles,
                Family::Triples,
                Family::Quads,
                Family::Genfuns,
                Family::Vincular,
            ],
        }
    }
}

fn value_json(v: &FormulaValue) -> Value {
    match v {
        FormulaValue::Count(c) => big(c),
        FormulaValue::Poly(p) => bigs(p.coeffs()),
        FormulaValue::Joint(p) => {
            Value::Array(p.terms().map(|(q, t, c)| Value::Array(vec![q.into(), t.into(), big(c)])).collect())
        }
    }
}

/// One line of a verification report. Every row has the same keys.
#[derive(Clone)]
struct Check {
    entry_id: String,
    set: String,
    n: usize,
    expected: Value,
    actual: Value,
    pass: Option<bool>,
    detail: String,
}

impl Check {
    fn from_row(id: &str, row: &VerifyRow) -> Self {
        Check {
            entry_id: id.to_string(),
            set: row.set.to_string(),
            n: row.n,
            expected: row.expected.as_ref().map_or(Value::Null, value_json),
            actual: value_json(&row.actual),
            pass: row.pass,
            detail: match &row.expected {
                Some(e) if row.pass == Some(false) => format!("expected {e}, scanned {}", row.actual),
                Some(_) => String::new(),
                None => "below the stated range; scan only".into(),
            },
        }
    }

    fn to_json(&self) -> Value {
        object([
            ("entry_id", self.entry_id.clone().into()),
            ("set", self.set.clone().into()),
            ("n", self.n.into()),
            ("expected", self.expected.clone()),
            ("actual", self.actual.clone()),
            ("pass", self.pass.map_or(Value::Null, Value::Bool)),
            ("detail", self.detail.clone().into()),
        ])
    }
}

fn entry_checks(entry: &FormulaEntry, max_n: usize, scanner: &Scanner) -> Result<Vec<Check>, CliError> {
    // polynomial entries stop at 8
    let top = match entry.kind {
        FormulaKind::Count => max_n,
        _ => max_n.min(8),
    };
    let report = verify_formula(entry, top, scanner)?;
    Ok(report.rows.iter().map(|row| Check::from_row(entry.id, row)).collect())
}

fn transport_checks(max_n: usize, scanner: &Scanner) -> Result<Vec<Check>, CliError> {
    let mut sets: Vec<PatternSet> = formula_catalogue()
        .into_iter()
        .flat_map(|e| e.all_sets().cloned().collect::<Vec<_>>())
        .filter(|s| s.is_cyclic() && s.is_classical())
        .collect();
    sets.sort();
    sets.dedup();
    let per_set: Vec<Vec<Check>> = sets
        .par_iter()
        .map(|s| {
            (2..=max_n.min(8))
                .map(|n| {
                    let t = transport_check(s, n, scanner)?;
                    let mut broken = Vec::new();
                    if !t.reversal {
                        broken.push("reversal");
                    }
                    if !t.complement {
                        broken.push("complement");
                    }
                    if !t.reverse_complement {
                        broken.push("reverse-complement");
                    }
                    Ok(Check {
                        entry_id: "transport".into(),
                        set: s.to_string(),
                        n,
                        expected: true.into(),
                        actual: t.passed().into(),
                        pass: Some(t.passed()),
                        detail: broken.join(","),
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(per_set.concat())
}

fn symmetry_checks(max_n: usize, scanner: &Scanner) -> Result<Vec<Check>, CliError> {
    let entry = find_entry("cdes-1342").expect("registered");
    (2..=max_n.min(8))
        .map(|n| {
            let p = cycperm_core::stats::cdes_genfun(&entry.pattern_set, n, scanner)?;
            let ok = p.is_symmetric();
            Ok(Check {
                entry_id: "symmetric-cdes-1342".into(),
                set: entry.pattern_set.to_string(),
                n,
                expected: true.into(),
                actual: ok.into(),
                pass: Some(ok),
                detail: if ok { String::new() } else { format!("{p} is not symmetric") },
            })
        })
        .collect()
}

fn monotone_pair(m: usize, n: usize) -> PatternSet {
    PatternSet::cyclic(&[CyclicPerm::identity(m + 2), CyclicPerm::decreasing(n + 2)]).expect("nonempty")
}

fn es_checks(max_n: usize, scanner: &Scanner) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in 1..=4 {
            let inst = es_construct(m, n)?;
            let ok = es_verify_extremal(&inst);
            out.push(Check {
                entry_id: "es-extremal".into(),
                set: monotone_pair(m, n).to_string(),
                n: m * n + 1,
                expected: true.into(),
                actual: ok.into(),
                pass: Some(ok),
                detail: inst.extremal.to_string(),
            });
        }
    }
    for m in 1..max_n {
        for n in 1..max_n {
            if m * n + 2 > max_n {
                continue;
            }
            let set = monotone_pair(m, n);
            let len = m * n + 2;
            let class = parallel::enumerate(&set, len, scanner)?;
            out.push(Check {
                entry_id: "es-containment".into(),
                set: set.to_string(),
                n: len,
                expected: 0.into(),
                actual: class.len().into(),
                pass: Some(class.is_empty()),
                detail: class.first().map_or(String::new(), |c| format!("avoids both: {c}")),
            });
        }
    }
    Ok(out)
}

fn tree_checks(max_n: usize) -> Result<Vec<Check>, CliError> {
    registered_rules()
        .par_iter()
        .map(|r| {
            let report = verify_production_rules(&r.pattern_set, &r.rules, max_n)?;
            Ok(Check {
                entry_id: r.id.into(),
                set: r.pattern_set.to_string(),
                n: max_n,
                expected: true.into(),
                actual: report.passed().into(),
                pass: Some(report.passed()),
                detail: report.failure.map_or(String::new(), |f| f.to_string()),
            })
        })
        .collect()
}

pub fn verify(suite: Suite, max_n: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    let scanner = cfg.scanner();
    scanner.check(max_n)?;
    if max_n == 0 {
        return Err(usage("max-n must be at least 1"));
    }
    let families = suite.families();
    let entries: Vec<FormulaEntry> = formula_catalogue()
        .into_iter()
        .filter(|e| families.contains(&e.family))
        .collect();
    let checks: Vec<Check> = cfg.pool()?.install(|| -> Result<Vec<Check>, CliError> {
        let per_entry: Vec<Vec<Check>> = entries
            .par_iter()
            .map(|e| entry_checks(e, max_n, &scanner))
            .collect::<Result<_, _>>()?;
        let mut all = per_entry.concat();
        if matches!(suite, Suite::Genfuns | Suite::All) {
            all.extend(transport_checks(max_n, &scanner)?);
            all.extend(symmetry_checks(max_n, &scanner)?);
        }
        if matches!(suite, Suite::Es | Suite::All) {
            all.extend(es_checks(max_n, &scanner)?);
        }
        if matches!(suite, Suite::Trees | Suite::All) {
            all.extend(tree_checks(max_n)?);
        }
        Ok(all)
    })?;

    let mut r = Report::new("verify", "rows");
    r.input("suite", suite.name());
    r.input("max_n", max_n);
    let judged = checks.iter().filter(|c| c.pass.is_some()).count();
    let failed: Vec<&Check> = checks.iter().filter(|c| c.pass == Some(false)).collect();
    r.pass = Some(failed.is_empty() && judged > 0);
    r.body = checks.iter().map(Check::to_json).collect();
    writeln!(r.text, "suite {}: {} checks, {} failed", suite.name(), judged, failed.len()).unwrap();
    for c in failed {
        writeln!(r.text, "FAIL {} {} n={}: {}", c.entry_id, c.set, c.n, c.detail).unwrap();
    }
    writeln!(r.text, "{}", if r.pass == Some(true) { "PASS" } else { "FAIL" }).unwrap();
    Ok(r)
}

// ---------------------------------------------------------------------------

/// All `k`-subsets of the classical cyclic patterns of the given length.
pub fn candidate_sets(length: usize, set_size: usize, include_monotone_pair: bool) -> Result<Vec<PatternSet>, CliError> {
    if length != 4 {
        return Err(usage("only pattern length 4 is supported"));
    }
    if !(1..=5).contains(&set_size) {
        return Err(usage("set size must be between 1 and 5"));
    }
    let classes: Vec<CyclicPerm> = cycperm_core::perm::all_cyclic(length).collect();
    let up = CyclicPerm::identity(length);
    let down = CyclicPerm::decreasing(length);
    let mut out = Vec::new();
    let k = classes.len();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize != set_size {
            continue;
        }
        let chosen: Vec<&CyclicPerm> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &classes[i]).collect();
        let both = chosen.contains(&&up) && chosen.contains(&&down);
        if both && set_size >= 3 && !include_monotone_pair {
            continue;
        }
        out.push(PatternSet::cyclic(chosen)?);
    }
    out.sort();
    Ok(out)
}

pub fn wilf(
    length: usize,
    set_size: usize,
    min_n: usize,
    max_n: usize,
    include_monotone_pair: bool,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    check_range(min_n, max_n, cfg)?;
    let sets = candidate_sets(length, set_size, include_monotone_pair)?;
    let scanner = cfg.scanner();
    let patterns: Vec<VincularPattern> = cycperm_core::perm::all_cyclic(length).map(|c| VincularPattern::cyclic(&c)).collect();
    let profiles = cfg.pool()?.install(|| {
        (min_n..=max_n).map(|n| parallel::profile(&patterns, n, &scanner)).collect::<Result<Vec<_>, _>>()
    })?;
    let vectors: Vec<Vec<BigInt>> = sets
        .iter()
        .map(|s| {
            profiles
                .iter()
                .map(|p| Ok(BigInt::from(p.count_avoiders(p.mask_of(s)?))))
                .collect::<Result<_, CliError>>()
        })
        .collect::<Result<_, _>>()?;
    let classes: Vec<WilfClass> = group_by_vector(&sets, vectors);

    let mut r = Report::new("wilf", "classes");
    r.input("length", length);
    r.input("set_size", set_size);
    r.input("min_n", min_n);
    r.input("max_n", max_n);
    r.input("include_monotone_pair", include_monotone_pair);
    for c in &classes {
        let orbits = Value::Array(
            c.orbits
                .iter()
                .map(|o| Value::Array(o.iter().map(|s| s.to_string().into()).collect()))
                .collect(),
        );
        r.body.push(object([
            ("counts", bigs(&c.counts)),
            ("members", Value::Array(c.members.iter().map(|s| s.to_string().into()).collect())),
            ("orbits", orbits),
            ("nontrivial", c.is_nontrivial().into()),
        ]));
        let counts: Vec<String> = c.counts.iter().map(ToString::to_string).collect();
        let orbits: Vec<String> = c
            .orbits
            .iter()
            .map(|o| o.iter().map(|s| format!("{{{s}}}")).collect::<Vec<_>>().join(" "))
            .collect();
        writeln!(
            r.text,
            "{} [{}] {}",
            if c.is_nontrivial() { "nontrivial" } else { "trivial   " },
            counts.join(","),
            orbits.join(" | ")
        )
        .unwrap();
    }
    Ok(r)
}

// ---------------------------------------------------------------------------

pub fn tree(set: &PatternSet, levels: usize, check_rules: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    if !set.is_cyclic() {
        return Err(usage("generating trees need cyclic patterns"));
    }
    if levels < 2 {
        return Err(usage("levels start at 2 (the root [12])"));
    }
    // the deepest level holds classes of that length
    cfg.scanner().check(levels)?;
    let registered = if check_rules {
        Some(rules_for(set).ok_or_else(|| usage(format!("no production rules registered for {set}")))?)
    } else {
        None
    };
    let tree = build_tree_levels(set, levels)?;
    let mut r = Report::new("tree", "rows");
    r.input("patterns", set.to_string());
    r.input("levels", levels);
    r.input("rules", check_rules);
    for level in 2..=levels {
        let degrees: BTreeMap<usize, usize> = tree.levels.get(&level).cloned().unwrap_or_default();
        let pairs = Value::Array(degrees.iter().map(|(d, c)| Value::Array(vec![(*d).into(), (*c).into()])).collect());
        r.body.push(object([
            ("level", level.into()),
            ("nodes", tree.node_count(level).into()),
            ("degrees", pairs),
        ]));
        let ds: Vec<String> = degrees.iter().map(|(d, c)| format!("{d}x{c}")).collect();
        writeln!(r.text, "level {level}: {} nodes, degrees {}", tree.node_count(level), ds.join(" ")).unwrap();
    }
    let mut detail = Value::Null;
    if let Some(reg) = registered {
        let report = verify_production_rules(set, &reg.rules, levels)?;
        r.pass = Some(report.passed());
        writeln!(r.text, "rules {}: checked {} nodes", reg.id, report.nodes_checked).unwrap();
        match &report.failure {
            Some(f) => {
                writeln!(r.text, "FAIL {f}").unwrap();
                detail = f.to_string().into();
            }
            None => writeln!(r.text, "PASS").unwrap(),
        }
    }
    r.extra.push(("detail", detail));
    Ok(r)
}

// ---------------------------------------------------------------------------

pub fn es(m: usize, n: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    let inst = es_construct(m, n)?;
    let extremal_ok = es_verify_extremal(&inst);
    let mut r = Report::new("es", "rows");
    r.input("m", m);
    r.input("n", n);
    r.body.push(object([
        ("check", "extremal".into()),
        ("length", (m * n + 1).into()),
        ("permutation", inst.extremal.to_string().into()),
        ("pass", extremal_ok.into()),
    ]));
    writeln!(r.text, "extremal {}: {}", inst.extremal, if extremal_ok { "avoids both" } else { "FAIL" }).unwrap();
    let len = m * n + 2;
    let scanner = cfg.scanner();
    let mut pass = extremal_ok;
    if scanner.check(len).is_ok() {
        let set = monotone_pair(m, n);
        let class = cfg.pool()?.install(|| parallel::enumerate(&set, len, &scanner))?;
        let ok = class.is_empty();
        pass &= ok;
        r.body.push(object([
            ("check", "containment".into()),
            ("length", len.into()),
            ("permutation", class.first().map_or(Value::Null, |c| c.to_string().into())),
            ("pass", ok.into()),
        ]));
        match class.first() {
            None => writeln!(r.text, "containment at length {len}: every class contains one").unwrap(),
            Some(c) => writeln!(r.text, "containment at length {len}: FAIL, {c} avoids both").unwrap(),
        }
    } else {
        r.body.push(object([
            ("check", "containment".into()),
            ("length", len.into()),
            ("permutation", Value::Null),
            ("pass", Value::Null),
        ]));
        writeln!(r.text, "containment at length {len}: skipped, above the cap {}", scanner.cap()).unwrap();
    }
    r.pass = Some(pass);
    Ok(r)
}

// ---------------------------------------------------------------------------

fn rationals(s: &cycperm_core::algebra::RationalSeries) -> Value {
    Value::Array(s.coeffs().iter().map(|c| c.to_string().into()).collect())
}

pub fn conjecture(id: ConjectureId, order: usize, conventions: &[Convention], cfg: &RunConfig) -> Result<Report, CliError> {
    let scanner = cfg.scanner();
    let report = cfg.pool()?.install(|| conjecture_check(id, order, conventions, &scanner))?;
    let mut r = Report::new("conjecture", "rows");
    r.input("id", id.name());
    r.input("order", order);
    r.input("equation", id.equation());
    writeln!(r.text, "{} ({}), counts a_1..a_{order}: {}", id, id.equation(), report.counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")).unwrap();
    for row in &report.rows {
        let (residual, error) = match &row.residual {
            Ok(s) => (rationals(s), Value::Null),
            Err(e) => (Value::Null, e.to_string().into()),
        };
        r.body.push(object([
            ("convention", row.convention.name().into()),
            ("series", rationals(&row.series)),
            ("residual", residual),
            ("error", error),
            ("vanishes", row.vanishes().into()),
            ("self_check", row.self_check.into()),
        ]));
        let status = match &row.residual {
            Ok(s) => format!("residual {s:?}{}", if row.vanishes() { " (vanishes)" } else { "" }),
            Err(e) => format!("convention violation: {e}"),
        };
        writeln!(r.text, "{:<9} {status}; self-check {}", row.convention.name(), if row.self_check { "ok" } else { "FAILED" }).unwrap();
    }
    r.extra.push(("counts", bigs(&report.counts)));
    Ok(r)
}
