use cycperm_core::algebra::{IntPolynomial, RationalSeries};
use cycperm_core::formulas::exp_product_rule;
use cycperm_core::pattern::{avoids, contains_cyclic, contains_linear, contains_vincular_linear, VincularPattern};
use cycperm_core::perm::{inflate, shuffle_set, standardize};
use cycperm_core::stats::{cdes, cpk};
use cycperm_core::{CyclicPerm, PatternSet, Permutation, Symmetry};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn cyc(max: usize) -> impl Strategy<Value = CyclicPerm> {
    perm(max).prop_map(|p| p.canonical().unwrap())
}

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn symmetries_are_involutions(p in perm(9)) {
        prop_assert_eq!(p.reversal().reversal(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.reverse_complement(), p.complement().reversal());
    }

    #[test]
    fn canonical_form_ignores_rotation(p in perm(9), k in 0usize..9) {
        prop_assert_eq!(p.rotate_left(k).canonical().unwrap(), p.canonical().unwrap());
        prop_assert_eq!(p.canonical().unwrap().canon().values()[0], 1);
    }

    #[test]
    fn standardize_is_idempotent(v in prop::collection::hash_set(0u32..1000, 1..10)) {
        let v: Vec<u32> = v.into_iter().collect();
        let s = standardize(&v).unwrap();
        prop_assert_eq!(standardize(s.values()).unwrap(), s);
    }

    #[test]
    fn shuffle_count_is_binomial(a in 0usize..5, b in 0usize..5) {
        let left: Vec<u32> = (0..a as u32).collect();
        let right: Vec<u32> = (10..10 + b as u32).collect();
        let all = shuffle_set(&left, &right).unwrap();
        prop_assert_eq!(all.len() as u64, choose((a + b) as u64, a as u64));
    }

    #[test]
    fn inflation_length_and_blocks(p in perm(4), parts in prop::collection::vec(perm(3), 4)) {
        let parts = &parts[..p.len()];
        let q = inflate(&p, parts).unwrap();
        prop_assert_eq!(q.len(), parts.iter().map(Permutation::len).sum::<usize>());
        // the first block keeps its shape
        let first = &q.values()[..parts[0].len()];
        prop_assert_eq!(standardize(first).unwrap(), parts[0].clone());
    }

    #[test]
    fn containment_transported_by_symmetry(s in cyc(8), t in cyc(4)) {
        let base = contains_cyclic(&s, &t);
        for sym in Symmetry::ALL {
            prop_assert_eq!(contains_cyclic(&s.apply(sym), &t.apply(sym)), base);
        }
    }

    #[test]
    fn avoidance_transported_by_symmetry(s in cyc(8), a in cyc(4), b in cyc(4)) {
        let set = PatternSet::cyclic([&a, &b]).unwrap();
        for sym in Symmetry::ALL {
            prop_assert_eq!(avoids(&s.apply(sym), &set.apply(sym)), avoids(&s, &set));
        }
    }

    #[test]
    fn cyclic_containment_is_linear_containment_of_some_rotation(s in cyc(8), t in cyc(4)) {
        let direct = t.members().iter().any(|r| contains_linear(s.canon(), r));
        prop_assert_eq!(contains_cyclic(&s, &t), direct);
    }

    #[test]
    fn unbonded_vincular_is_classical(text in perm(8), pat in perm(4)) {
        let v = VincularPattern::classical(pat.clone());
        prop_assert_eq!(contains_vincular_linear(&text, &v), contains_linear(&text, &pat));
    }

    #[test]
    fn bonds_only_make_containment_harder(text in perm(8), pat in perm(4), bond in 1usize..4) {
        prop_assume!(bond < pat.len());
        let v = VincularPattern::new(pat.clone(), [bond], false).unwrap();
        if contains_vincular_linear(&text, &v) {
            prop_assert!(contains_linear(&text, &pat));
        }
    }

    #[test]
    fn containment_is_monotone(text in perm(8), k in 0usize..8) {
        // deleting the entry at k keeps every pattern of the smaller word
        prop_assume!(k < text.len());
        let mut v = text.values().to_vec();
        v.remove(k);
        let smaller = standardize(&v).unwrap();
        prop_assert!(contains_linear(&text, &smaller));
    }

    #[test]
    fn cyclic_stats_ignore_rotation(p in perm(9), k in 0usize..9) {
        let a = p.canonical().unwrap();
        let b = p.rotate_left(k).canonical().unwrap();
        prop_assert_eq!(cdes(&a), cdes(&b));
        prop_assert_eq!(cpk(&a), cpk(&b));
    }

    #[test]
    fn flips_swap_descents_and_ascents(s in cyc(9)) {
        let n = s.len();
        prop_assume!(n >= 2);
        prop_assert_eq!(cdes(&s.reversal()), n - cdes(&s));
        prop_assert_eq!(cdes(&s.complement()), n - cdes(&s));
        prop_assert_eq!(cdes(&s.reverse_complement()), cdes(&s));
    }

    #[test]
    fn polynomial_ring_identities(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn reverse_transform_is_multiplicative(f in poly(), g in poly(), m in 5usize..8, n in 5usize..8) {
        let lhs = (&f * &g).reverse_transform(m + n).unwrap();
        let rhs = &f.reverse_transform(m).unwrap() * &g.reverse_transform(n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_satisfies_product_rule(c in prop::collection::vec((-5i64..5, 1i64..4), 1..7)) {
        let coeffs: Vec<BigRational> = c.iter().map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect();
        prop_assert!(exp_product_rule(&RationalSeries::from_coeffs(coeffs)));
    }

    #[test]
    fn series_product_commutes(a in prop::collection::vec(-9i64..9, 1..7), b in prop::collection::vec(-9i64..9, 1..7)) {
        let f = RationalSeries::from_egf(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let g = RationalSeries::from_egf(&b.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).sub(&g), f.truncate(g.order().unwrap()));
    }
}
