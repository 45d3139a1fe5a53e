use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use singcay::algebraic::QuadSum;
use singcay::cayley::{
    adjacency_matrix, build_connecting, integer_rank, spectrum, transitive_lift_spectrum,
};
use singcay::characters::{character_value, mn_value, mn_value_in_order, GroupTable};
use singcay::groups::{classes, group_order};
use singcay::partition::{partition_count, partitions_of};
use singcay::{AlgebraicValue, CharacterLabel, ClassLabel, Config, GroupKind, Half, Partition};

fn partition_of_size(n: u32) -> impl Strategy<Value = Partition> {
    (0..partition_count(n) as usize).prop_map(move |k| partitions_of(n).nth(k).unwrap())
}

fn sized_pair() -> impl Strategy<Value = (Partition, Vec<u32>)> {
    (1u32..=12).prop_flat_map(|n| {
        (
            partition_of_size(n),
            partition_of_size(n).prop_flat_map(|t| Just(t.parts().to_vec()).prop_shuffle()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mn_independent_of_rim_order((lambda, order) in sized_pair()) {
        let ty = Partition::from_multiset(order.clone()).unwrap();
        prop_assert_eq!(mn_value(&lambda, &ty).unwrap(), mn_value_in_order(&lambda, &order).unwrap());
    }

    #[test]
    fn core_is_unique(parts in prop::collection::vec(1u32..=9, 0..=7), p in 2u32..=7) {
        let lambda = Partition::from_multiset(parts).unwrap();
        let (c, w) = lambda.p_core_and_weight(p);
        let (c2, w2) = lambda.p_core_by_abacus(p);
        prop_assert_eq!(&c, &c2);
        prop_assert_eq!(w, w2);
        prop_assert!(c.is_p_core(p));
        prop_assert_eq!(c.size() + p * w, lambda.size());
        prop_assert_eq!(c.p_core_and_weight(p), (c.clone(), 0));
    }

    #[test]
    fn conjugate_values_are_signed(lambda in (1u32..=11).prop_flat_map(partition_of_size), k in 0usize..40) {
        let n = lambda.size();
        let ty = partitions_of(n).nth(k % partition_count(n) as usize).unwrap();
        let sign = if singcay::labels::is_even_type(&ty) { 1 } else { -1 };
        prop_assert_eq!(
            mn_value(&lambda.transpose(), &ty).unwrap(),
            mn_value(&lambda, &ty).unwrap() * sign
        );
    }

    #[test]
    fn spectrum_invariants(n in 3u32..=9, alt in any::<bool>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3)) {
        let cfg = Config::default();
        let g = if alt { GroupKind::Alt } else { GroupKind::Sym };
        let pool: Vec<ClassLabel> = classes(n, g).into_iter().filter(|c| !c.is_identity()).collect();
        let seeds: Vec<ClassLabel> = picks.iter().map(|i| i.get(&pool).clone()).collect();
        let spec = build_connecting(g, n, &seeds).unwrap();
        let entries = spectrum(&spec, &cfg).unwrap();
        let total: BigInt = entries.iter().map(|e| e.multiplicity.clone()).sum();
        prop_assert_eq!(total, group_order(n, g));
        let mut trace = QuadSum::new();
        for e in &entries {
            trace.add_scaled(&e.eigenvalue, &BigRational::from_integer(e.multiplicity.clone()));
        }
        prop_assert!(trace.is_zero());
        prop_assert_eq!(&entries[0].eigenvalue, &AlgebraicValue::from_int(spec.total_size.clone()));
    }
}

#[test]
fn burnside_sums() {
    let cfg = Config::default();
    for n in 1..=11 {
        for g in [GroupKind::Sym, GroupKind::Alt] {
            let table = GroupTable::cached(g, n, &cfg).unwrap();
            let s: BigInt = table.degrees.iter().map(|d| d * d).sum();
            assert_eq!(s, group_order(n, g), "{g}_{n}");
            assert_eq!(table.characters.len(), table.classes.len(), "{g}_{n}");
        }
    }
}

#[test]
fn alternating_restriction_is_clifford() {
    for n in 2..=11 {
        for lambda in partitions_of(n) {
            if lambda.transpose() > lambda {
                continue;
            }
            for c in classes(n, GroupKind::Alt) {
                let full = mn_value(&lambda, &c.cycle_type).unwrap();
                let sum = if lambda.is_symmetric() {
                    let p = CharacterLabel::alt(lambda.clone(), Half::Plus).unwrap();
                    let m = CharacterLabel::alt(lambda.clone(), Half::Minus).unwrap();
                    let mut q = QuadSum::new();
                    q.add_value(&character_value(&p, &c).unwrap());
                    q.add_value(&character_value(&m, &c).unwrap());
                    q.to_value().unwrap()
                } else {
                    let chi = CharacterLabel::alt(lambda.clone(), Half::Whole).unwrap();
                    character_value(&chi, &c).unwrap()
                };
                assert_eq!(sum, AlgebraicValue::from_int(full), "{lambda} on {c}");
            }
        }
    }
}

#[test]
fn alternating_tables_orthonormal() {
    let cfg = Config::default();
    for n in 2..=10 {
        assert!(GroupTable::cached(GroupKind::Alt, n, &cfg).unwrap().rows_orthonormal().unwrap(), "A_{n}");
    }
}

fn kron_ones(a: &[Vec<u8>], c: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    (0..m * c)
        .map(|i| (0..m * c).map(|j| BigInt::from(a[i / c][j / c])).collect())
        .collect()
}

#[test]
fn lift_matches_kronecker_product() {
    let cfg = Config::default();
    let cases = [
        (GroupKind::Sym, 3, "(2,1)"),
        (GroupKind::Sym, 3, "(3)"),
        (GroupKind::Alt, 4, "(2,2)"),
        (GroupKind::Alt, 4, "(3,1)+"),
        (GroupKind::Sym, 4, "(4)"),
    ];
    for (g, n, cls) in cases {
        let c0 = ClassLabel::parse_in(cls, g).unwrap();
        let spec = build_connecting(g, n, &[c0]).unwrap();
        let a = adjacency_matrix(&spec, &cfg).unwrap();
        let base: Vec<AlgebraicValue> = spectrum(&spec, &cfg)
            .unwrap()
            .into_iter()
            .flat_map(|e| {
                let k: usize = e.multiplicity.try_into().unwrap();
                std::iter::repeat(e.eigenvalue).take(k)
            })
            .collect();
        for c in 1..=3u32 {
            let lifted = transitive_lift_spectrum(&base, c, base.len() as u32).unwrap();
            let zeros = lifted
                .iter()
                .find(|e| e.eigenvalue.is_zero())
                .map_or(BigInt::zero(), |e| e.multiplicity.clone());
            let k = kron_ones(&a, c as usize);
            let rank = integer_rank(&k);
            assert_eq!(zeros, BigInt::from(k.len() - rank), "{g}_{n} {cls} c={c}");
            let mut sq = QuadSum::new();
            for e in &lifted {
                let v2 = e.eigenvalue.checked_mul(&e.eigenvalue).unwrap();
                sq.add_scaled(&v2, &BigRational::from_integer(e.multiplicity.clone()));
            }
            let ones: usize = k.iter().flatten().filter(|x| !x.is_zero()).count();
            assert_eq!(sq.to_value().unwrap(), AlgebraicValue::from_int(ones as i64), "trace of square");
        }
    }
}
