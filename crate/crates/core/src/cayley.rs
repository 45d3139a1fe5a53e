//! Cayley graphs `Cay(G, H)` for `G ∈ {S_n, A_n}` and `H` a union of conjugacy classes.
//!
//! The adjacency operator `v ↦ Σ_{h∈H} h·v` is central in the group algebra, so it acts
//! on the `χ`-isotypic part of the regular module as the scalar
//! `θ_χ = Σ_{h∈H} χ(h) / χ(1)` with multiplicity `χ(1)²`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::algebraic::{AlgebraicValue, QuadSum};
use crate::characters::{character_degree, character_value, GroupTable};
use crate::config::Config;
use crate::error::{check_bound, contract, Result};
use crate::groups::{brute_conjugacy_oracle, class_size, group_order, is_real, Perm};
use crate::labels::{CharacterLabel, ClassLabel, GroupKind};

/// The class of `g^{-1}` given the class of `g`.
pub fn inverse_class(cls: &ClassLabel) -> ClassLabel {
    let mut out = cls.clone();
    if cls.split.is_split() && !is_real(cls) {
        out.split = cls.split.swapped();
    }
    out
}

/// An inverse-closed union of non-identity classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectingSetSpec {
    pub group: GroupKind,
    pub n: u32,
    pub classes: BTreeSet<ClassLabel>,
    #[serde(serialize_with = "as_string")]
    pub total_size: BigInt,
    pub generates: bool,
}

fn as_string<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn build_connecting(
    group: GroupKind,
    n: u32,
    seed_classes: &[ClassLabel],
) -> Result<ConnectingSetSpec> {
    if seed_classes.is_empty() {
        return Err(contract("connecting set needs at least one class"));
    }
    let mut classes = BTreeSet::new();
    for c in seed_classes {
        c.validate()?;
        if c.group != group || c.n() != n {
            return Err(contract(format!("class {c} does not belong to {group}_{n}")));
        }
        if c.is_identity() {
            return Err(contract("the identity class cannot be in a connecting set"));
        }
        classes.insert(inverse_class(c));
        classes.insert(c.clone());
    }
    let total_size = classes
        .iter()
        .map(|c| class_size(&c.cycle_type, group))
        .sum::<Result<BigInt>>()?;
    let generates = if n >= 5 {
        match group {
            GroupKind::Alt => true,
            GroupKind::Sym => classes.iter().any(|c| !crate::labels::is_even_type(&c.cycle_type)),
        }
    } else {
        generates_by_closure(group, n, &classes)?
    };
    Ok(ConnectingSetSpec {
        group,
        n,
        classes,
        total_size,
        generates,
    })
}

fn class_elements(n: u32, classes: &BTreeSet<ClassLabel>) -> Result<Vec<Perm>> {
    let oracle = brute_conjugacy_oracle(n)?;
    let mut out = Vec::new();
    for c in classes {
        let explicit = oracle
            .find(c)
            .ok_or_else(|| contract(format!("class {c} not found by the oracle")))?;
        out.extend(explicit.elements.iter().cloned());
    }
    Ok(out)
}

fn generates_by_closure(group: GroupKind, n: u32, classes: &BTreeSet<ClassLabel>) -> Result<bool> {
    let gens = class_elements(n, classes)?;
    let mut seen = HashSet::from([Perm::identity(n)]);
    let mut queue = VecDeque::from([Perm::identity(n)]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(BigInt::from(seen.len()) == group_order(n, group))
}

impl ConnectingSetSpec {
    /// The same set under the opposite `+`/`−` labeling of split classes.
    pub fn with_swapped_halves(&self) -> ConnectingSetSpec {
        let classes = self
            .classes
            .iter()
            .map(|c| ClassLabel {
                split: c.split.swapped(),
                ..c.clone()
            })
            .collect();
        ConnectingSetSpec {
            classes,
            ..self.clone()
        }
    }
}

/// `θ_χ = Σ_c |c|·χ(c) / χ(1)`.
pub fn eigenvalue_for(chi: &CharacterLabel, spec: &ConnectingSetSpec) -> Result<AlgebraicValue> {
    if chi.group != spec.group || chi.n() != spec.n {
        return Err(contract(format!(
            "character {chi} is not a character of {}_{}",
            spec.group, spec.n
        )));
    }
    let mut sum = QuadSum::new();
    for c in &spec.classes {
        let size = BigRational::from_integer(class_size(&c.cycle_type, spec.group)?);
        sum.add_scaled(&character_value(chi, c)?, &size);
    }
    let inv_degree = BigRational::new(BigInt::one(), character_degree(chi));
    let theta = sum
        .to_value()
        .ok_or_else(|| contract("eigenvalue mixes several radicands"))?;
    Ok(theta.scale(&inv_degree))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub eigenvalue: AlgebraicValue,
    pub multiplicity: BigInt,
}

impl Serialize for SpectrumEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut obj = self.eigenvalue.to_json();
        obj["mult"] = serde_json::Value::String(self.multiplicity.to_string());
        obj.serialize(s)
    }
}

fn merge(pairs: impl IntoIterator<Item = (AlgebraicValue, BigInt)>) -> Vec<SpectrumEntry> {
    let mut map: BTreeMap<AlgebraicValue, BigInt> = BTreeMap::new();
    for (v, m) in pairs {
        *map.entry(v).or_insert_with(BigInt::zero) += m;
    }
    map.into_iter()
        .rev()
        .filter(|(_, m)| !m.is_zero())
        .map(|(eigenvalue, multiplicity)| SpectrumEntry {
            eigenvalue,
            multiplicity,
        })
        .collect()
}

/// `θ_χ` for every irreducible character, in table order.
pub fn character_eigenvalues(
    spec: &ConnectingSetSpec,
    cfg: &Config,
) -> Result<Vec<(CharacterLabel, AlgebraicValue)>> {
    let table = GroupTable::cached(spec.group, spec.n, cfg)?;
    let idx = spec
        .classes
        .iter()
        .map(|c| {
            table
                .class_index(c)
                .ok_or_else(|| contract(format!("class {c} missing from the table")))
        })
        .collect::<Result<Vec<_>>>()?;
    let theta = |i: usize| -> Result<(CharacterLabel, AlgebraicValue)> {
        let mut sum = QuadSum::new();
        for &j in &idx {
            sum.add_scaled(table.value(i, j), &BigRational::from_integer(table.class_sizes[j].clone()));
        }
        let v = sum
            .to_value()
            .ok_or_else(|| contract("eigenvalue mixes several radicands"))?;
        let inv_degree = BigRational::new(BigInt::one(), table.degrees[i].clone());
        Ok((table.characters[i].clone(), v.scale(&inv_degree)))
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..table.characters.len()).into_par_iter().map(theta).collect()
    }
    #[cfg(not(feature = "parallel"))]
    (0..table.characters.len()).map(theta).collect()
}

pub fn spectrum(spec: &ConnectingSetSpec, cfg: &Config) -> Result<Vec<SpectrumEntry>> {
    let thetas = character_eigenvalues(spec, cfg)?;
    Ok(merge(thetas.into_iter().map(|(chi, v)| {
        let d = character_degree(&chi);
        (v, &d * &d)
    })))
}

/// Singular iff some `θ_χ` vanishes; the first such `χ` is returned as a certificate.
pub fn is_singular(spec: &ConnectingSetSpec, cfg: &Config) -> Result<(bool, Option<CharacterLabel>)> {
    let cert = character_eigenvalues(spec, cfg)?
        .into_iter()
        .find(|(_, v)| v.is_zero())
        .map(|(chi, _)| chi);
    Ok((cert.is_some(), cert))
}

pub fn nullity(spec: &ConnectingSetSpec, cfg: &Config) -> Result<BigInt> {
    Ok(character_eigenvalues(spec, cfg)?
        .iter()
        .filter(|(_, v)| v.is_zero())
        .map(|(chi, _)| {
            let d = character_degree(chi);
            &d * &d
        })
        .sum())
}

/// The 0/1 matrix with `A[u][v] = 1` iff `v = h·u` for some `h ∈ H`, rows and columns
/// indexed by the elements of `G` in lexicographic order.
pub fn adjacency_matrix(spec: &ConnectingSetSpec, cfg: &Config) -> Result<Vec<Vec<u8>>> {
    let order = group_order(spec.n, spec.group);
    check_bound(
        "oracle group order",
        order.to_u64().unwrap_or(u64::MAX),
        cfg.max_oracle_group_order,
    )?;
    let elements = crate::groups::all_elements(spec.n, spec.group);
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let h = class_elements(spec.n, &spec.classes)?;
    let mut a = vec![vec![0u8; elements.len()]; elements.len()];
    for (i, u) in elements.iter().enumerate() {
        for x in &h {
            a[i][index[&x.compose(u)]] = 1;
        }
    }
    Ok(a)
}

/// Exact rank by fraction-free (Bareiss) row echelon elimination.
pub fn integer_rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                row[j] = q;
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

/// Rank over `F_p`, used only as a consistency check on [`integer_rank`].
pub fn modular_rank(matrix: &[Vec<u8>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as u64 % p).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let scale = inv(m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j] * scale % p;
        }
        for i in r + 1..rows {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

const CHECK_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

/// `|G| − rank(A)` from the explicit adjacency matrix.
pub fn brute_force_nullity(spec: &ConnectingSetSpec, cfg: &Config) -> Result<u64> {
    let a = adjacency_matrix(spec, cfg)?;
    let exact: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rank = integer_rank(&exact);
    for p in CHECK_PRIMES {
        debug_assert!(modular_rank(&a, p) <= rank);
    }
    Ok((a.len() - rank) as u64)
}

/// Spectrum of the lexicographic product `Γ[c·K_1]`: each `λ_i` becomes `c·λ_i`, plus
/// `n(c−1)` zeros.
pub fn transitive_lift_spectrum(base: &[AlgebraicValue], c: u32, n: u32) -> Result<Vec<SpectrumEntry>> {
    if base.len() != n as usize {
        return Err(contract(format!(
            "{} base eigenvalues given for {n} vertices",
            base.len()
        )));
    }
    if c == 0 {
        return Err(contract("lift factor must be positive"));
    }
    let factor = BigRational::from_integer(BigInt::from(c));
    let zeros = BigInt::from(n) * BigInt::from(c - 1);
    Ok(merge(
        base.iter()
            .map(|v| (v.scale(&factor), BigInt::one()))
            .chain(std::iter::once((AlgebraicValue::zero(), zeros))),
    ))
}

/// Full verdict for one connecting set.
#[derive(Clone, Debug, Serialize)]
pub struct CayleyVerdict {
    pub group: GroupKind,
    pub n: u32,
    pub classes: BTreeSet<ClassLabel>,
    pub generates: bool,
    pub singular: bool,
    pub certificate: Option<CharacterLabel>,
    #[serde(serialize_with = "as_string")]
    pub nullity: BigInt,
    pub spectrum: Vec<SpectrumEntry>,
}

pub fn verdict(spec: &ConnectingSetSpec, cfg: &Config) -> Result<CayleyVerdict> {
    let (singular, certificate) = is_singular(spec, cfg)?;
    Ok(CayleyVerdict {
        group: spec.group,
        n: spec.n,
        classes: spec.classes.clone(),
        generates: spec.generates,
        singular,
        certificate,
        nullity: nullity(spec, cfg)?,
        spectrum: spectrum(spec, cfg)?,
    })
}

impl CayleyVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::Half;
    use crate::partition::Partition;

    fn t(v: &[u32]) -> Partition {
        Partition::from_multiset(v.to_vec()).unwrap()
    }

    fn sym(v: &[u32]) -> ClassLabel {
        ClassLabel::sym(t(v))
    }

    fn alt(v: &[u32], h: Half) -> ClassLabel {
        ClassLabel::alt(t(v), h).unwrap()
    }

    #[test]
    fn inverse_classes() {
        assert_eq!(inverse_class(&alt(&[7], Half::Plus)), alt(&[7], Half::Minus));
        assert_eq!(inverse_class(&alt(&[5], Half::Plus)), alt(&[5], Half::Plus));
        assert_eq!(inverse_class(&sym(&[3, 2])), sym(&[3, 2]));
    }

    #[test]
    fn connecting_sets() {
        let s = build_connecting(GroupKind::Alt, 5, &[alt(&[5], Half::Plus)]).unwrap();
        assert_eq!(s.classes.len(), 1);
        assert_eq!(s.total_size, BigInt::from(12));
        let s = build_connecting(GroupKind::Alt, 7, &[alt(&[7], Half::Plus)]).unwrap();
        assert_eq!(s.classes.len(), 2);
        assert!(build_connecting(GroupKind::Sym, 4, &[sym(&[2, 1, 1])]).unwrap().generates);
        let k = ClassLabel::alt(t(&[2, 2]), Half::Whole).unwrap();
        assert!(!build_connecting(GroupKind::Alt, 4, &[k]).unwrap().generates);
        assert!(!build_connecting(GroupKind::Sym, 6, &[sym(&[3, 1, 1, 1])]).unwrap().generates);
        assert!(build_connecting(GroupKind::Sym, 3, &[sym(&[1, 1, 1])]).is_err());
        assert!(build_connecting(GroupKind::Sym, 3, &[]).is_err());
    }

    #[test]
    fn s3_transpositions() {
        let cfg = Config::default();
        let s = build_connecting(GroupKind::Sym, 3, &[sym(&[2, 1])]).unwrap();
        let spec = spectrum(&s, &cfg).unwrap();
        let pairs: Vec<(String, BigInt)> = spec
            .iter()
            .map(|e| (e.eigenvalue.to_string(), e.multiplicity.clone()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                ("3".to_string(), BigInt::from(1)),
                ("0".to_string(), BigInt::from(4)),
                ("-3".to_string(), BigInt::from(1)),
            ]
        );
        let (sing, cert) = is_singular(&s, &cfg).unwrap();
        assert!(sing);
        assert_eq!(cert.unwrap().to_string(), "[2,1]");
        assert_eq!(nullity(&s, &cfg).unwrap(), BigInt::from(4));
        assert_eq!(brute_force_nullity(&s, &cfg).unwrap(), 4);
    }

    #[test]
    fn complete_graph() {
        let cfg = Config::default();
        let all: Vec<ClassLabel> = crate::groups::classes(4, GroupKind::Sym)
            .into_iter()
            .filter(|c| !c.is_identity())
            .collect();
        let s = build_connecting(GroupKind::Sym, 4, &all).unwrap();
        assert_eq!(nullity(&s, &cfg).unwrap(), BigInt::zero());
        assert_eq!(brute_force_nullity(&s, &cfg).unwrap(), 0);
        let spec = spectrum(&s, &cfg).unwrap();
        assert_eq!(spec[0].eigenvalue, AlgebraicValue::from_int(23));
        assert_eq!(spec[1].eigenvalue, AlgebraicValue::from_int(-1));
        assert_eq!(spec[1].multiplicity, BigInt::from(23));
    }

    #[test]
    fn a5_five_cycles() {
        let cfg = Config::default();
        let s = build_connecting(
            GroupKind::Alt,
            5,
            &[alt(&[5], Half::Plus), alt(&[5], Half::Minus)],
        )
        .unwrap();
        let chi = CharacterLabel::alt(t(&[4, 1]), Half::Whole).unwrap();
        assert_eq!(eigenvalue_for(&chi, &s).unwrap(), AlgebraicValue::from_int(-6));
        let triv = CharacterLabel::alt(t(&[5]), Half::Whole).unwrap();
        assert_eq!(eigenvalue_for(&triv, &s).unwrap(), AlgebraicValue::from_int(24));
        assert_eq!(
            nullity(&s, &cfg).unwrap(),
            BigInt::from(brute_force_nullity(&s, &cfg).unwrap())
        );
        let total: BigInt = spectrum(&s, &cfg).unwrap().iter().map(|e| e.multiplicity.clone()).sum();
        assert_eq!(total, BigInt::from(60));
    }

    #[test]
    fn sign_character_on_odd_class() {
        let s = build_connecting(GroupKind::Sym, 5, &[sym(&[2, 1, 1, 1])]).unwrap();
        let sign = CharacterLabel::sym(t(&[1, 1, 1, 1, 1]));
        assert_eq!(eigenvalue_for(&sign, &s).unwrap(), AlgebraicValue::from_int(-10));
    }

    #[test]
    fn split_convention_independence() {
        let cfg = Config::default();
        for n in 5..=9 {
            for c in crate::groups::classes(n, GroupKind::Alt) {
                if c.split != Half::Plus {
                    continue;
                }
                let s = build_connecting(GroupKind::Alt, n, &[c]).unwrap();
                let w = s.with_swapped_halves();
                assert_eq!(spectrum(&s, &cfg).unwrap(), spectrum(&w, &cfg).unwrap());
                assert_eq!(is_singular(&s, &cfg).unwrap().0, is_singular(&w, &cfg).unwrap().0);
            }
        }
    }

    #[test]
    fn lifts() {
        let base: Vec<AlgebraicValue> = [2, 0, -2].into_iter().map(AlgebraicValue::from_int).collect();
        let lifted = transitive_lift_spectrum(&base, 2, 3).unwrap();
        let pairs: Vec<(String, u32)> = lifted
            .iter()
            .map(|e| (e.eigenvalue.to_string(), e.multiplicity.to_u32().unwrap()))
            .collect();
        assert_eq!(pairs, vec![("4".into(), 1), ("0".into(), 4), ("-4".into(), 1)]);
        let same = transitive_lift_spectrum(&base, 1, 3).unwrap();
        assert_eq!(same.len(), 3);
        assert!(transitive_lift_spectrum(&base, 2, 4).is_err());
    }

    #[test]
    fn bareiss_rank() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(integer_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(&m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])), 3);
        assert_eq!(integer_rank(&m(&[&[0, 0, 1], &[0, 0, 2], &[0, 1, 0]])), 2);
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(modular_rank(&[vec![1, 1], vec![1, 1]], 7), 1);
    }

    #[test]
    fn verdict_json_shape() {
        let cfg = Config::default();
        let s = build_connecting(GroupKind::Sym, 3, &[sym(&[2, 1])]).unwrap();
        let v = verdict(&s, &cfg).unwrap().to_json();
        assert_eq!(v["group"], "S");
        assert_eq!(v["classes"][0], "(2,1)");
        assert_eq!(v["certificate"], "[2,1]");
        assert_eq!(v["nullity"], "4");
        assert_eq!(v["spectrum"][1]["mult"], "4");
        assert_eq!(v["spectrum"][0]["a_num"], "3");
    }
}
