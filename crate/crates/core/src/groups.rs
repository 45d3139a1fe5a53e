//! Conjugacy-class combinatorics of S_n and A_n.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::config::{Config, MAX_ORACLE_DEGREE};
use crate::error::{check_bound, contract, Error, Result};
use crate::labels::{class_splits, is_even_type, CharacterLabel, ClassLabel, GroupKind, Half};
use crate::partition::{partitions_of, Partition};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Order of `G` as an exact integer.
pub fn group_order(n: u32, group: GroupKind) -> BigInt {
    let full = factorial(n);
    match group {
        GroupKind::Alt if n >= 2 => full / 2,
        _ => full,
    }
}

/// Exponent of `p` in `n!` (Legendre).
pub fn factorial_p_exponent(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = p;
    while q <= n {
        e += n / q;
        q *= p;
    }
    e
}

/// `∏ c^{m_c} m_c!`, the order of the centralizer in S_n.
pub fn centralizer_order(cycle_type: &Partition) -> BigInt {
    let mut out = BigInt::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let c = parts[i];
        let mult = parts[i..].iter().take_while(|&&x| x == c).count();
        out *= BigInt::from(c).pow(mult as u32) * factorial(mult as u32);
        i += mult;
    }
    out
}

/// Size of the class with this cycle type; for A_n, the size of one half when
/// the class splits.
pub fn class_size(cycle_type: &Partition, group: GroupKind) -> Result<BigInt> {
    let n = cycle_type.size();
    let sym = factorial(n) / centralizer_order(cycle_type);
    match group {
        GroupKind::Sym => Ok(sym),
        GroupKind::Alt if !is_even_type(cycle_type) => Err(contract(format!(
            "cycle type {cycle_type} is odd and does not lie in A_{n}"
        ))),
        GroupKind::Alt if class_splits(cycle_type) => Ok(sym / 2),
        GroupKind::Alt => Ok(sym),
    }
}

/// Element order: lcm of the cycle lengths.
pub fn element_order(cycle_type: &Partition) -> u128 {
    cycle_type
        .parts()
        .iter()
        .fold(1u128, |acc, &c| acc.lcm(&(c as u128)))
}

/// Number of moved points.
pub fn support(cycle_type: &Partition) -> u32 {
    cycle_type.size() - cycle_type.multiplicity(1) as u32
}

/// Total length of cycles whose length is divisible by `p`: the support of the
/// p-part of the element.
pub fn p_part_support(cycle_type: &Partition, p: u32) -> u32 {
    cycle_type.parts().iter().filter(|&&c| c % p == 0).sum()
}

/// Realness in A_n: some even cycle, or a repeated odd cycle length (fixed points
/// count), or distinct odd lengths with an even number of them ≡ 3 (mod 4).
pub fn is_real_in_an(cycle_type: &Partition) -> bool {
    let parts = cycle_type.parts();
    if parts.iter().any(|c| c % 2 == 0) {
        return true;
    }
    if parts.windows(2).any(|w| w[0] == w[1]) {
        return true;
    }
    parts.iter().filter(|&&c| c % 4 == 3).count() % 2 == 0
}

pub fn is_real(label: &ClassLabel) -> bool {
    match label.group {
        GroupKind::Sym => true,
        GroupKind::Alt => is_real_in_an(&label.cycle_type),
    }
}

/// All conjugacy classes of `G`, in the order of [`partitions_of`] with `+` before `-`.
pub fn classes(n: u32, group: GroupKind) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for t in partitions_of(n) {
        match group {
            GroupKind::Sym => out.push(ClassLabel::sym(t)),
            GroupKind::Alt if !is_even_type(&t) => {}
            GroupKind::Alt if class_splits(&t) => {
                out.push(ClassLabel::alt(t.clone(), Half::Plus).expect("valid"));
                out.push(ClassLabel::alt(t, Half::Minus).expect("valid"));
            }
            GroupKind::Alt => out.push(ClassLabel {
                cycle_type: t,
                split: Half::Whole,
                group: GroupKind::Alt,
            }),
        }
    }
    out
}

/// All irreducible characters of `G`, in the order of [`partitions_of`].
pub fn characters(n: u32, group: GroupKind) -> Vec<CharacterLabel> {
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        match group {
            GroupKind::Sym => out.push(CharacterLabel::sym(lambda)),
            GroupKind::Alt => {
                let conj = lambda.transpose();
                if conj > lambda {
                    continue;
                }
                if conj == lambda && n >= 2 {
                    out.push(CharacterLabel::alt(lambda.clone(), Half::Plus).expect("valid"));
                    out.push(CharacterLabel::alt(lambda, Half::Minus).expect("valid"));
                } else {
                    out.push(CharacterLabel {
                        lambda,
                        split: Half::Whole,
                        group: GroupKind::Alt,
                    });
                }
            }
        }
    }
    out
}

fn types_in(n: u32, group: GroupKind, cfg: &Config) -> Result<impl Iterator<Item = Partition>> {
    check_bound("partition enumeration size", n as u64, cfg.max_core_enum_n as u64)?;
    Ok(partitions_of(n).filter(move |t| group == GroupKind::Sym || is_even_type(t)))
}

/// ω(G): the set of element orders.
pub fn element_orders(n: u32, group: GroupKind, cfg: &Config) -> Result<BTreeSet<u128>> {
    Ok(types_in(n, group, cfg)?.map(|t| element_order(&t)).collect())
}

pub fn is_2_3_number(mut m: u128) -> bool {
    if m == 0 {
        return false;
    }
    while m % 2 == 0 {
        m /= 2;
    }
    while m % 3 == 0 {
        m /= 3;
    }
    m == 1
}

/// Element orders of the form `2^a 3^b`.
pub fn omega23(n: u32, group: GroupKind, cfg: &Config) -> Result<BTreeSet<u128>> {
    Ok(element_orders(n, group, cfg)?
        .into_iter()
        .filter(|&m| is_2_3_number(m))
        .collect())
}

/// Cycle types of order `m` whose support is maximal among elements of order `m`.
pub fn max_support_types(n: u32, group: GroupKind, m: u128, cfg: &Config) -> Result<Vec<Partition>> {
    let of_order: Vec<Partition> = types_in(n, group, cfg)?
        .filter(|t| element_order(t) == m)
        .collect();
    let best = of_order
        .iter()
        .map(support)
        .max()
        .ok_or_else(|| Error::EmptyDomain(format!("no element of order {m} in {group}_{n}")))?;
    Ok(of_order.into_iter().filter(|t| support(t) == best).collect())
}

/// Even cycle types of order `2^a 3^b` such that neither `2|g|` nor `3|g|` is an
/// element order of A_n. Each has support at least `n/2`.
pub fn e6_candidates(n: u32, cfg: &Config) -> Result<Vec<Partition>> {
    if n < 3 {
        return Err(contract(format!("e6 candidates need n >= 3, got {n}")));
    }
    let omega = element_orders(n, GroupKind::Alt, cfg)?;
    let out: Vec<Partition> = types_in(n, GroupKind::Alt, cfg)?
        .filter(|t| {
            let m = element_order(t);
            is_2_3_number(m) && !omega.contains(&(2 * m)) && !omega.contains(&(3 * m))
        })
        .collect();
    for t in &out {
        assert!(2 * support(t) >= n, "support of {t} below n/2");
    }
    Ok(out)
}

/// A permutation of `{0, ..., n-1}` in image form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: u32) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_multiset(lengths).expect("cycle lengths are positive")
    }

    pub fn is_even(&self) -> bool {
        is_even_type(&self.cycle_type())
    }

    /// The permutation `(0 1 .. c_1-1)(c_1 .. c_1+c_2-1)...` filling cycles with
    /// ascending points. Its A_n class is the `+` half of a split class.
    pub fn canonical_representative(cycle_type: &Partition) -> Perm {
        let n = cycle_type.size() as usize;
        let mut img = vec![0u8; n];
        let mut start = 0usize;
        for &c in cycle_type.parts() {
            let c = c as usize;
            for k in 0..c {
                img[start + k] = (start + (k + 1) % c) as u8;
            }
            start += c;
        }
        Perm(img)
    }

    /// Cycle through the listed points: `points[0] -> points[1] -> ... -> points[0]`.
    pub fn cycle(n: u32, points: &[u8]) -> Perm {
        let mut p = Perm::identity(n);
        for (i, &x) in points.iter().enumerate() {
            p.0[x as usize] = points[(i + 1) % points.len()];
        }
        p
    }
}

/// Every element of `G`, in lexicographic order of image vectors.
pub fn all_elements(n: u32, group: GroupKind) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        let p = Perm(current.clone());
        if group == GroupKind::Sym || p.is_even() {
            out.push(p);
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Generators of `G` as a permutation group.
pub fn generators(n: u32, group: GroupKind) -> Vec<Perm> {
    let all: Vec<u8> = (0..n as u8).collect();
    match group {
        GroupKind::Sym if n >= 2 => vec![Perm::cycle(n, &[0, 1]), Perm::cycle(n, &all)],
        GroupKind::Alt if n >= 3 => {
            let long = if n % 2 == 1 { &all[..] } else { &all[1..] };
            vec![Perm::cycle(n, &[0, 1, 2]), Perm::cycle(n, long)]
        }
        _ => vec![Perm::identity(n)],
    }
}

/// One explicitly materialized conjugacy class.
#[derive(Clone, Debug, Serialize)]
pub struct ExplicitClass {
    pub label: ClassLabel,
    #[serde(skip)]
    pub elements: Vec<Perm>,
    pub size: usize,
}

/// Conjugacy classes of S_n and A_n computed by conjugation orbits.
#[derive(Clone, Debug)]
pub struct ConjugacyOracle {
    pub n: u32,
    pub sym: Vec<ExplicitClass>,
    pub alt: Vec<ExplicitClass>,
}

impl ConjugacyOracle {
    pub fn classes(&self, group: GroupKind) -> &[ExplicitClass] {
        match group {
            GroupKind::Sym => &self.sym,
            GroupKind::Alt => &self.alt,
        }
    }

    pub fn find(&self, label: &ClassLabel) -> Option<&ExplicitClass> {
        self.classes(label.group).iter().find(|c| c.label == *label)
    }

    /// An A_n class is real iff it contains the inverse of one of its elements.
    pub fn is_real(&self, class: &ExplicitClass) -> bool {
        let set: HashSet<&Perm> = class.elements.iter().collect();
        set.contains(&class.elements[0].inverse())
    }
}

/// Materializes S_n (n ≤ 8) and splits it into conjugacy classes of both groups.
pub fn brute_conjugacy_oracle(n: u32) -> Result<ConjugacyOracle> {
    check_bound("oracle degree", n as u64, MAX_ORACLE_DEGREE as u64)?;
    Ok(ConjugacyOracle {
        n,
        sym: orbit_classes(n, GroupKind::Sym),
        alt: orbit_classes(n, GroupKind::Alt),
    })
}

fn orbit_classes(n: u32, group: GroupKind) -> Vec<ExplicitClass> {
    let elements = all_elements(n, group);
    let gens = generators(n, group);
    let mut seen: HashMap<Perm, bool> = elements.iter().map(|p| (p.clone(), false)).collect();
    let mut out = Vec::new();
    for start in &elements {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        *seen.get_mut(start).expect("element") = true;
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.conjugate_by(g);
                let flag = seen.get_mut(&y).expect("closed under conjugation");
                if !*flag {
                    *flag = true;
                    orbit.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let cycle_type = start.cycle_type();
        let split = if group == GroupKind::Alt && class_splits(&cycle_type) {
            let rep = Perm::canonical_representative(&cycle_type);
            if orbit.contains(&rep) {
                Half::Plus
            } else {
                Half::Minus
            }
        } else {
            Half::Whole
        };
        orbit.sort();
        out.push(ExplicitClass {
            label: ClassLabel {
                cycle_type,
                split,
                group,
            },
            size: orbit.len(),
            elements: orbit,
        });
    }
    out.sort_by(|a, b| {
        b.label
            .cycle_type
            .cmp(&a.label.cycle_type)
            .then(a.label.split.cmp(&b.label.split))
    });
    out
}
