//! The scans and matchers compared with deliberately naive oracles.

use cycperm_core::algebra::IntPolynomial;
use cycperm_core::enumerate::{
    build_tree_levels, children, enumerate_class, wilf_classify, ContainmentProfile, Scanner,
};
use cycperm_core::formulas::{conjecture_check, ConjectureId, Convention};
use cycperm_core::pattern::{avoids, is_1342_avoider_characterized, VincularPattern};
use cycperm_core::perm::{all_cyclic, all_permutations, standardize};
use cycperm_core::stats::{cdes_as_excedance_check, des, stat_genfun_linear, StatName};
use cycperm_core::{CyclicPerm, PatternSet, Permutation};

/// Every k-subset of positions, standardized and compared.
fn naive_contains(text: &[u8], pattern: &[u8]) -> bool {
    let (n, k) = (text.len(), pattern.len());
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<u8> = idx.iter().map(|&i| text[i]).collect();
        if standardize(&sub).unwrap().values() == pattern {
            return true;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Cyclic containment straight from the definition: some rotation of the
/// text contains some rotation of the pattern.
fn naive_contains_cyclic(text: &CyclicPerm, pattern: &CyclicPerm) -> bool {
    text.members().iter().any(|t| {
        pattern.members().iter().any(|p| naive_contains(t.values(), p.values()))
    })
}

fn naive_avoiders(words: &[&str], n: usize) -> Vec<CyclicPerm> {
    let pats: Vec<CyclicPerm> = words.iter().map(|w| w.parse::<Permutation>().unwrap().canonical().unwrap()).collect();
    all_cyclic(n)
        .filter(|s| pats.iter().all(|p| !naive_contains_cyclic(s, p)))
        .collect()
}

fn set(words: &[&str]) -> PatternSet {
    let pats: Vec<CyclicPerm> = words.iter().map(|w| w.parse::<Permutation>().unwrap().canonical().unwrap()).collect();
    PatternSet::cyclic(&pats).unwrap()
}

const LENGTH_FOUR: [&str; 6] = ["1234", "1243", "1324", "1342", "1423", "1432"];

#[test]
fn scans_agree_with_naive_containment() {
    for n in 1..=7 {
        for w in LENGTH_FOUR {
            assert_eq!(enumerate_class(&set(&[w]), n).unwrap(), naive_avoiders(&[w], n), "{w} n={n}");
        }
        for pair in [["1234", "1342"], ["1324", "1423"], ["1243", "1342"], ["1234", "1432"]] {
            assert_eq!(enumerate_class(&set(&pair), n).unwrap(), naive_avoiders(&pair, n), "{pair:?} n={n}");
        }
    }
}

#[test]
fn profile_counts_agree_with_naive_containment() {
    let pats: Vec<VincularPattern> = LENGTH_FOUR
        .iter()
        .map(|w| VincularPattern::cyclic(&w.parse::<Permutation>().unwrap().canonical().unwrap()))
        .collect();
    for n in 4..=7 {
        let profile = ContainmentProfile::build(&pats, n).unwrap();
        for (i, a) in LENGTH_FOUR.iter().enumerate() {
            for b in &LENGTH_FOUR[i..] {
                let s = set(&[a, b]);
                let naive = naive_avoiders(&[a, b], n).len();
                assert_eq!(profile.count_avoiders(profile.mask_of(&s).unwrap()), naive);
            }
        }
    }
}

/// The bonded pattern `[13(24)]`: a rotation of the text has positions
/// `i < j < j+1 < l` whose values are order-isomorphic to 1324.
fn naive_catalan_avoider(s: &CyclicPerm) -> bool {
    !s.members().iter().any(|t| {
        let v = t.values();
        let n = v.len();
        (0..n).any(|i| {
            (i + 1..n.saturating_sub(1)).any(|j| {
                (j + 2..n).any(|l| {
                    standardize(&[v[i], v[j], v[j + 1], v[l]]).unwrap().values() == [1, 3, 2, 4]
                })
            })
        })
    })
}

#[test]
fn bonded_scan_agrees_with_windows() {
    let bonded = PatternSet::new([VincularPattern::new("1324".parse().unwrap(), [2], true).unwrap()]).unwrap();
    for n in 1..=8 {
        let naive: Vec<_> = all_cyclic(n).filter(naive_catalan_avoider).collect();
        assert_eq!(enumerate_class(&bonded, n).unwrap(), naive, "n={n}");
    }
}

/// Fully bonded cyclic length-3 patterns: look at every cyclic window.
fn naive_consecutive_count(n: usize, shape: [u8; 3]) -> usize {
    all_cyclic(n)
        .filter(|s| {
            let v = s.canon().values();
            n < 3 || !(0..n).any(|i| {
                standardize(&[v[i], v[(i + 1) % n], v[(i + 2) % n]]).unwrap().values() == shape
            })
        })
        .count()
}

#[test]
fn conjecture_counts_agree_with_windows() {
    let sc = Scanner::default();
    let r = conjecture_check(ConjectureId::Egf123, 8, &Convention::ALL, &sc).unwrap();
    let r2 = conjecture_check(ConjectureId::Egf213, 8, &Convention::ALL, &sc).unwrap();
    for n in 1..=8 {
        assert_eq!(r.counts[n - 1], naive_consecutive_count(n, [1, 2, 3]).into(), "123 n={n}");
        assert_eq!(r2.counts[n - 1], naive_consecutive_count(n, [2, 1, 3]).into(), "213 n={n}");
    }
    for row in r.rows.iter().chain(&r2.rows) {
        assert!(row.self_check, "{:?}", row.convention);
    }
}

#[test]
fn characterization_of_1342_avoiders() {
    let s = set(&["1342"]);
    for n in 1..=8 {
        for sigma in all_cyclic(n) {
            assert_eq!(avoids(&sigma, &s), is_1342_avoider_characterized(&sigma), "{sigma}");
        }
    }
}

#[test]
fn cyclic_descents_as_excedances() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            assert!(cdes_as_excedance_check(&p), "{p}");
        }
    }
}

#[test]
fn descents_over_213_231_avoiders() {
    let pats = PatternSet::linear(["213", "231"].map(|w| w.parse().unwrap())).unwrap();
    for n in 1..=9 {
        let mut naive = IntPolynomial::zero();
        for p in all_permutations(n) {
            if !naive_contains(p.values(), &[2, 1, 3]) && !naive_contains(p.values(), &[2, 3, 1]) {
                naive.add_term(des(&p), &1.into());
            }
        }
        assert_eq!(stat_genfun_linear(&pats, n, StatName::Des, &Scanner::default()).unwrap(), naive);
        assert_eq!(naive, IntPolynomial::one_plus_q_pow(n - 1));
    }
}

#[test]
fn tree_levels_are_the_classes() {
    // each class of length n appears exactly once at level n
    let s = set(&["1324"]);
    let levels = build_tree_levels(&s, 8).unwrap();
    for n in 2..=8 {
        assert_eq!(levels.node_count(n), enumerate_class(&s, n).unwrap().len(), "n={n}");
    }
    let mut seen: Vec<CyclicPerm> = children(&CyclicPerm::identity(3), &s);
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), children(&CyclicPerm::identity(3), &s).len());
}

#[test]
fn singletons_of_length_four_fall_into_three_classes() {
    let sets: Vec<PatternSet> = LENGTH_FOUR.iter().map(|w| set(&[w])).collect();
    let classes = wilf_classify(&sets, 1..=8, &Scanner::default()).unwrap();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|c| !c.is_nontrivial() && c.members.len() == 2));
}
