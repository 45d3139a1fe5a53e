//! Irreducible character values of S_n and A_n.
//!
//! S_n values come from the Murnaghan–Nakayama recursion: strip the longest
//! remaining cycle as a rim hook in every possible way, signed by leg length.
//! Results are memoized per thread on `(diagram, remaining cycles)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebraic::{AlgebraicValue, QuadSum};
use crate::config::Config;
use crate::error::{check_bound, contract, Result};
use crate::groups::{self, class_size, factorial, group_order};
use crate::labels::{CharacterLabel, ClassLabel, GroupKind, Half};
use crate::partition::{partitions_of, Partition};

const MEMO_CAPACITY: usize = 4_000_000;

struct MnMemo {
    n: u32,
    map: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

thread_local! {
    static MEMO: RefCell<MnMemo> = RefCell::new(MnMemo { n: 0, map: HashMap::new() });
}

/// χ_λ evaluated on the class of `cycle_type`, for λ and the type both of size n.
pub fn mn_value(lambda: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    if cycle_type.size() != n {
        return Err(contract(format!(
            "character {lambda} has size {n} but class {cycle_type} has size {}",
            cycle_type.size()
        )));
    }
    Ok(MEMO.with(|memo| {
        let mut memo = memo.borrow_mut();
        if memo.n != n || memo.map.len() > MEMO_CAPACITY {
            memo.map.clear();
            memo.n = n;
        }
        mn_memo(lambda.parts(), cycle_type.parts(), &mut memo.map)
    }))
}

fn mn_memo(lambda: &[u32], cycles: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    match cycles.first() {
        None => return BigInt::one(),
        // Only fixed points left: the value is the degree.
        Some(1) => return hook_degree(lambda),
        Some(_) => {}
    }
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let shape = Partition::from_parts_unchecked(lambda.to_vec());
    let mut total = BigInt::zero();
    for rim in shape.rims(cycles[0]) {
        let v = mn_memo(rim.result.parts(), &cycles[1..], memo);
        if rim.leg_length % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Unmemoized Murnaghan–Nakayama, stripping cycles in exactly the given order.
///
/// The result does not depend on the order; this exists so that claim can be tested.
pub fn mn_value_in_order(lambda: &Partition, cycles: &[u32]) -> Result<BigInt> {
    if cycles.iter().sum::<u32>() != lambda.size() {
        return Err(contract("cycle lengths must sum to the diagram size"));
    }
    fn go(lambda: &Partition, cycles: &[u32]) -> BigInt {
        let Some((&m, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        lambda
            .rims(m)
            .into_iter()
            .map(|r| {
                let v = go(&r.result, rest);
                if r.leg_length % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
    Ok(go(lambda, cycles))
}

fn hook_degree(lambda: &[u32]) -> BigInt {
    let shape = Partition::from_parts_unchecked(lambda.to_vec());
    let hooks: BigInt = shape
        .hook_multiset()
        .into_iter()
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(shape.size()) / hooks
}

/// `n! / ∏ hook lengths`.
pub fn degree(lambda: &Partition) -> BigInt {
    let d = hook_degree(lambda.parts());
    debug_assert!(lambda.size() > 10 || mn_value_in_order(lambda, &vec![1; lambda.size() as usize]).ok() == Some(d.clone()));
    d
}

/// Degree of an S_n or A_n character.
pub fn character_degree(chi: &CharacterLabel) -> BigInt {
    let d = degree(&chi.lambda);
    if chi.split.is_split() {
        d / 2
    } else {
        d
    }
}

/// Full character table of S_n with rows and columns in [`partitions_of`] order.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: u32,
    pub characters: Vec<Partition>,
    pub classes: Vec<Partition>,
    #[serde(serialize_with = "serialize_int_rows")]
    pub values: Vec<Vec<BigInt>>,
}

fn serialize_int_rows<S: serde::Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    text.serialize(s)
}

pub fn sn_character_table(n: u32, cfg: &Config) -> Result<CharacterTable> {
    check_bound("character table size", n as u64, cfg.max_table_n as u64)?;
    let labels: Vec<Partition> = partitions_of(n).collect();
    let row = |lambda: &Partition| -> Vec<BigInt> {
        labels
            .iter()
            .map(|t| mn_value(lambda, t).expect("sizes agree"))
            .collect()
    };
    #[cfg(feature = "parallel")]
    let values: Vec<Vec<BigInt>> = {
        use rayon::prelude::*;
        labels.par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let values: Vec<Vec<BigInt>> = labels.iter().map(row).collect();
    let table = CharacterTable {
        n,
        characters: labels.clone(),
        classes: labels,
        values,
    };
    debug_assert!(table.rows_orthonormal());
    Ok(table)
}

impl CharacterTable {
    pub fn class_sizes(&self) -> Vec<BigInt> {
        self.classes
            .iter()
            .map(|t| class_size(t, GroupKind::Sym).expect("S_n class"))
            .collect()
    }

    /// `Σ_c |c| χ(c) ψ(c) = n! [χ = ψ]` for every pair of rows.
    pub fn rows_orthonormal(&self) -> bool {
        let sizes = self.class_sizes();
        let order = factorial(self.n);
        self.values.iter().enumerate().all(|(i, r)| {
            self.values.iter().enumerate().all(|(j, s)| {
                let dot: BigInt = r
                    .iter()
                    .zip(s)
                    .zip(&sizes)
                    .map(|((a, b), c)| a * b * c)
                    .sum();
                dot == if i == j { order.clone() } else { BigInt::zero() }
            })
        })
    }

    /// `Σ_χ χ(c) χ(c') = |C(c)| [c = c']` for every pair of columns.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.classes.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let dot: BigInt = self.values.iter().map(|row| &row[a] * &row[b]).sum();
                let expected = if a == b {
                    groups::centralizer_order(&self.classes[a])
                } else {
                    BigInt::zero()
                };
                dot == expected
            })
        })
    }
}

/// Value of an A_n character on an A_n class.
///
/// Non-split characters restrict from S_n. A split pair `λ±` agrees with `χ_λ/2`
/// off the class whose cycle type is the principal hook lengths `h_1 > ... > h_d`
/// of λ; there the values are `(ε ± √(ε h_1⋯h_d))/2` with `ε = (-1)^{(n-d)/2}`,
/// `+` when the character half and the class half agree.
pub fn an_value(chi: &CharacterLabel, cls: &ClassLabel) -> Result<AlgebraicValue> {
    if chi.group != GroupKind::Alt || cls.group != GroupKind::Alt {
        return Err(contract(format!("an_value needs A_n labels, got {chi} on {cls}")));
    }
    chi.validate()?;
    cls.validate()?;
    let full = mn_value(&chi.lambda, &cls.cycle_type)?;
    if !chi.split.is_split() {
        return Ok(AlgebraicValue::from_int(full));
    }
    let hooks = chi.lambda.principal_hook_lengths();
    if cls.cycle_type.parts() != hooks.as_slice() {
        return Ok(AlgebraicValue::rational(BigRational::new(full, BigInt::from(2))));
    }
    let n = chi.n() as usize;
    let d = hooks.len();
    let eps: i64 = if ((n - d) / 2) % 2 == 0 { 1 } else { -1 };
    debug_assert_eq!(full, BigInt::from(eps));
    let product: i64 = hooks.iter().map(|&h| h as i64).product();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sign = if chi.split == cls.split { 1 } else { -1 };
    Ok(AlgebraicValue::quadratic(
        BigRational::from_integer(BigInt::from(eps)) * &half,
        BigRational::from_integer(BigInt::from(sign)) * half,
        eps * product,
    ))
}

/// Value of any S_n or A_n character on a class of the same group.
pub fn character_value(chi: &CharacterLabel, cls: &ClassLabel) -> Result<AlgebraicValue> {
    match (chi.group, cls.group) {
        (GroupKind::Sym, GroupKind::Sym) => {
            chi.validate()?;
            cls.validate()?;
            Ok(AlgebraicValue::from_int(mn_value(&chi.lambda, &cls.cycle_type)?))
        }
        (GroupKind::Alt, GroupKind::Alt) => an_value(chi, cls),
        _ => Err(contract(format!("group mismatch: {chi} on {cls}"))),
    }
}

/// Character table of S_n or A_n over exact algebraic values.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub group: GroupKind,
    pub n: u32,
    pub characters: Vec<CharacterLabel>,
    pub classes: Vec<ClassLabel>,
    pub class_sizes: Vec<BigInt>,
    pub degrees: Vec<BigInt>,
    pub values: Vec<Vec<AlgebraicValue>>,
}

impl GroupTable {
    pub fn new(group: GroupKind, n: u32, cfg: &Config) -> Result<Self> {
        check_bound("character table size", n as u64, cfg.max_table_n as u64)?;
        let characters = groups::characters(n, group);
        let classes = groups::classes(n, group);
        let class_sizes = classes
            .iter()
            .map(|c| class_size(&c.cycle_type, group))
            .collect::<Result<Vec<_>>>()?;
        let degrees = characters.iter().map(character_degree).collect();
        let row = |chi: &CharacterLabel| -> Vec<AlgebraicValue> {
            classes
                .iter()
                .map(|c| character_value(chi, c).expect("labels are consistent"))
                .collect()
        };
        #[cfg(feature = "parallel")]
        let values = {
            use rayon::prelude::*;
            characters.par_iter().map(row).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let values = characters.iter().map(row).collect();
        Ok(GroupTable {
            group,
            n,
            characters,
            classes,
            class_sizes,
            degrees,
            values,
        })
    }

    /// Like [`GroupTable::new`], but shared process-wide per `(group, n)`.
    pub fn cached(group: GroupKind, n: u32, cfg: &Config) -> Result<Arc<GroupTable>> {
        static CACHE: OnceLock<Mutex<HashMap<(GroupKind, u32), Arc<GroupTable>>>> = OnceLock::new();
        check_bound("character table size", n as u64, cfg.max_table_n as u64)?;
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("table cache poisoned").get(&(group, n)) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(GroupTable::new(group, n, cfg)?);
        cache
            .lock()
            .expect("table cache poisoned")
            .entry((group, n))
            .or_insert_with(|| Arc::clone(&table));
        Ok(table)
    }

    pub fn class_index(&self, cls: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| c == cls)
    }

    pub fn character_index(&self, chi: &CharacterLabel) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }

    pub fn value(&self, chi: usize, cls: usize) -> &AlgebraicValue {
        &self.values[chi][cls]
    }

    /// `Σ_c |c| χ(c) conj(ψ(c)) = |G| [χ = ψ]` for every pair, exactly.
    pub fn rows_orthonormal(&self) -> Result<bool> {
        let order = group_order(self.n, self.group);
        for (i, r) in self.values.iter().enumerate() {
            for (j, s) in self.values.iter().enumerate() {
                let mut sum = QuadSum::new();
                for ((a, b), size) in r.iter().zip(s).zip(&self.class_sizes) {
                    let prod = a.checked_mul(&b.conj())?;
                    sum.add_scaled(&prod, &BigRational::from_integer(size.clone()));
                }
                let expected = if i == j { order.clone() } else { BigInt::zero() };
                sum.add_value(&AlgebraicValue::from_int(-expected));
                if !sum.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Indices of classes on which character `chi` vanishes.
    pub fn zero_classes(&self, chi: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.values[chi][c].is_zero())
            .collect()
    }
}

/// The restriction of a symmetric-diagram character splits into `λ+` and `λ-`.
pub fn split_pair(lambda: &Partition) -> Result<(CharacterLabel, CharacterLabel)> {
    Ok((
        CharacterLabel::alt(lambda.clone(), Half::Plus)?,
        CharacterLabel::alt(lambda.clone(), Half::Minus)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn murnaghan_nakayama_examples() {
        for n in 1..=8 {
            for t in partitions_of(n) {
                assert_eq!(mn_value(&Partition::row(n), &t).unwrap(), BigInt::one());
                let fixed = t.multiplicity(1) as i64;
                let std = Partition::new(vec![n - 1, 1]);
                if let Ok(std) = std {
                    if n >= 2 {
                        assert_eq!(mn_value(&std, &t).unwrap(), BigInt::from(fixed - 1));
                    }
                }
            }
        }
        assert_eq!(mn_value(&p(&[4, 1]), &p(&[3, 1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(mn_value(&p(&[3, 2]), &p(&[5])).unwrap(), BigInt::zero());
        assert!(mn_value(&p(&[3, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&Partition::row(7)), BigInt::one());
        assert_eq!(degree(&p(&[2, 1])), BigInt::from(2));
        for n in 2..12 {
            assert_eq!(degree(&p(&[n - 1, 1])), BigInt::from(n - 1));
        }
        for n in 1..=9 {
            for l in partitions_of(n) {
                assert_eq!(degree(&l), degree(&l.transpose()));
                assert_eq!(degree(&l), mn_value(&l, &Partition::column(n)).unwrap());
            }
        }
    }

    #[test]
    fn s3_table() {
        let t = sn_character_table(3, &Config::default()).unwrap();
        assert_eq!(t.characters, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(t.values[0], ints(&[1, 1, 1]));
        assert_eq!(t.values[1], ints(&[-1, 0, 2]));
        assert_eq!(t.values[2], ints(&[1, -1, 1]));
        assert!(t.rows_orthonormal());
        assert!(t.columns_orthogonal());
        assert!(sn_character_table(15, &Config::default()).is_err());
    }

    #[test]
    fn a3_split_values_are_cube_roots_of_unity() {
        let (plus, minus) = split_pair(&p(&[2, 1])).unwrap();
        let c_plus = ClassLabel::alt(p(&[3]), Half::Plus).unwrap();
        let v = an_value(&plus, &c_plus).unwrap();
        assert_eq!(v.to_string(), "-1/2+1/2*sqrt(-3)");
        let w = an_value(&minus, &c_plus).unwrap();
        assert_eq!(w, v.galois_conj());
        let cube = v.checked_mul(&v).unwrap().checked_mul(&v).unwrap();
        assert_eq!(cube, AlgebraicValue::from_int(1));
    }

    #[test]
    fn a5_table() {
        let t = GroupTable::new(GroupKind::Alt, 5, &Config::default()).unwrap();
        assert_eq!(t.characters.len(), 5);
        assert_eq!(t.classes.len(), 5);
        let degs: Vec<i64> = t.degrees.iter().map(|d| d.try_into().unwrap()).collect();
        assert_eq!(degs, vec![1, 4, 5, 3, 3]);
        assert!(t.rows_orthonormal().unwrap());
        let four = t.character_index(&CharacterLabel::alt(p(&[4, 1]), Half::Whole).unwrap()).unwrap();
        let c5 = t.class_index(&ClassLabel::alt(p(&[5]), Half::Plus).unwrap()).unwrap();
        assert_eq!(t.value(four, c5), &AlgebraicValue::from_int(-1));
        let golden = an_value(
            &CharacterLabel::alt(p(&[3, 1, 1]), Half::Plus).unwrap(),
            &ClassLabel::alt(p(&[5]), Half::Plus).unwrap(),
        )
        .unwrap();
        assert_eq!(golden.to_string(), "1/2+1/2*sqrt(5)");
    }

    #[test]
    fn symmetric_character_off_principal_class_is_half() {
        let chi = CharacterLabel::alt(p(&[3, 1, 1]), Half::Minus).unwrap();
        let cls = ClassLabel::alt(p(&[3, 1, 1]), Half::Whole).unwrap();
        let full = mn_value(&p(&[3, 1, 1]), &p(&[3, 1, 1])).unwrap();
        assert_eq!(
            an_value(&chi, &cls).unwrap(),
            AlgebraicValue::rational(BigRational::new(full, BigInt::from(2)))
        );
        assert!(an_value(&CharacterLabel::sym(p(&[3, 1, 1])), &cls).is_err());
    }
}
