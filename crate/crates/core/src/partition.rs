//! Partitions and Young diagrams.
//!
//! A [`Partition`] is stored as its list of parts. Hook and rim computations go
//! through beta-numbers (first-column hook lengths): removing an `m`-rim moves one
//! bead from position `x` to the empty position `x - m`, and the leg length of the
//! removed rim is the number of beads strictly between the two positions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_bound, contract, Error, Result};

/// Weakly decreasing list of positive integers.
///
/// Doubles as a Young diagram (character label) and a cycle type (class label).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Result of stripping one rim hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimRemoval {
    pub result: Partition,
    pub leg_length: u32,
}

/// The two families of 3-cores `C_{r,s}` and `C^-_{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreVariant {
    Plain,
    Minus,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(contract(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(contract(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of positive integers into a partition.
    pub fn from_multiset(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `[n]`, the single-row diagram.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `[1^n]`, the single-column diagram (identity cycle type).
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// The triangle `[k, k-1, ..., 1]`.
    pub fn staircase(k: u32) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows (parts).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of `value` among the parts.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Column lengths.
    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose() == *self
    }

    /// Hook length of every box, row by row.
    pub fn hook_grid(&self) -> Vec<Vec<u32>> {
        let cols = self.transpose();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| {
                        let arm = row - j as u32 - 1;
                        let leg = cols.parts[j] - i as u32 - 1;
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect()
    }

    /// One hook length per box, sorted in decreasing order.
    pub fn hook_multiset(&self) -> Vec<u32> {
        let mut hooks: Vec<u32> = self.hook_grid().into_iter().flatten().collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// Hook lengths on the main diagonal, strictly decreasing.
    pub fn principal_hook_lengths(&self) -> Vec<u32> {
        let cols = self.transpose();
        (0..self.parts.len())
            .take_while(|&i| self.parts[i] as usize > i)
            .map(|i| (self.parts[i] - i as u32 - 1) + (cols.parts[i] - i as u32 - 1) + 1)
            .collect()
    }

    /// Beta-numbers with exactly as many beads as rows, in decreasing order.
    pub fn beta_numbers(&self) -> Vec<u32> {
        let k = self.parts.len() as u32;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + k - 1 - i as u32)
            .collect()
    }

    /// Inverse of [`Partition::beta_numbers`] for any set of distinct beads.
    pub fn from_beta_numbers(beads: &[u32]) -> Partition {
        let mut sorted = beads.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let k = sorted.len() as u32;
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Every way to strip an `m`-rim, topmost hand first.
    pub fn rims(&self, m: u32) -> Vec<RimRemoval> {
        if m == 0 {
            return Vec::new();
        }
        let beads = self.beta_numbers();
        let mut out = Vec::new();
        for (idx, &x) in beads.iter().enumerate() {
            if x < m {
                continue;
            }
            let target = x - m;
            if beads.contains(&target) {
                continue;
            }
            let leg_length = beads.iter().filter(|&&y| y > target && y < x).count() as u32;
            let mut moved = beads.clone();
            moved[idx] = target;
            out.push(RimRemoval {
                result: Partition::from_beta_numbers(&moved),
                leg_length,
            });
        }
        out
    }

    /// True iff no hook length is divisible by `p`.
    pub fn is_p_core(&self, p: u32) -> bool {
        self.rims(p).is_empty()
    }

    /// The p-core reached by repeatedly removing p-rims, and the number of removals.
    pub fn p_core_and_weight(&self, p: u32) -> (Partition, u32) {
        let forward = strip_rims(self, p, RimOrder::First);
        debug_assert_eq!(forward, strip_rims(self, p, RimOrder::Last));
        forward
    }

    /// Same as [`Partition::p_core_and_weight`] but sliding beads up the abacus.
    pub fn p_core_by_abacus(&self, p: u32) -> (Partition, u32) {
        let beads = self.beta_numbers();
        let k = beads.len() as u32;
        let mut per_runner = vec![0u32; p as usize];
        let mut weight = 0;
        for &b in &beads {
            per_runner[(b % p) as usize] += 1;
        }
        // Each bead's level minus its final level counts the p-rims passed over.
        let mut level_count = vec![0u32; p as usize];
        let mut sorted = beads.clone();
        sorted.sort_unstable();
        for &b in &sorted {
            let r = (b % p) as usize;
            weight += b / p - level_count[r];
            level_count[r] += 1;
        }
        let core_beads: Vec<u32> = (0..p)
            .flat_map(|r| (0..per_runner[r as usize]).map(move |lvl| r + lvl * p))
            .collect();
        debug_assert_eq!(core_beads.len() as u32, k);
        (Partition::from_beta_numbers(&core_beads), weight)
    }

    /// The largest hook length (0 for the empty diagram).
    pub fn max_hook(&self) -> u32 {
        match (self.parts.first(), self.parts.len()) {
            (Some(&first), len) => first + len as u32 - 1,
            (None, _) => 0,
        }
    }
}

#[derive(Clone, Copy)]
enum RimOrder {
    First,
    Last,
}

fn strip_rims(lambda: &Partition, p: u32, order: RimOrder) -> (Partition, u32) {
    let mut current = lambda.clone();
    let mut weight = 0;
    loop {
        let mut rims = current.rims(p);
        let next = match order {
            RimOrder::First => rims.drain(..).next(),
            RimOrder::Last => rims.pop(),
        };
        match next {
            Some(r) => {
                current = r.result;
                weight += 1;
            }
            None => return (current, weight),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts, '[', ']')
    }
}

pub(crate) fn write_list(
    f: &mut fmt::Formatter<'_>,
    parts: &[u32],
    open: char,
    close: char,
) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "{close}")
}

/// Parses a comma list between the given delimiters, e.g. `[4,1]` or `(3,1,1)`.
pub(crate) fn parse_list(s: &str, open: char, close: char) -> Result<Vec<u32>> {
    let inner = s
        .trim()
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected {open}...{close}, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad part `{t}`: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[4,1]` as written; parts must already be weakly decreasing.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s, '[', ']')?).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Nearly square diagram `[m^q, r]` with `m` minimal such that `m^2 > n`,
/// `q = n / m` and `r = n mod m`. All hook lengths are at most `2m - 1`.
pub fn near_square(n: u32) -> Partition {
    let mut m = 1u32;
    while m * m <= n {
        m += 1;
    }
    let mut parts = vec![m; (n / m) as usize];
    if n % m != 0 {
        parts.push(n % m);
    }
    let y = Partition::from_parts_unchecked(parts);
    debug_assert!(y.max_hook() < 2 * m);
    y
}

/// The 3-core families `C_{r,s}` (plain) and `C^-_{r,s}` (minus).
///
/// Plain: `[r+2s, r+2s-2, ..., r+2, r, r, r-1, r-1, ..., 1, 1]`.
/// Minus: `[r+1+2s, r-1+2s, ..., r+1, r, r, r-1, r-1, ..., 1, 1]`.
pub fn three_core_family(r: u32, s: u32, variant: CoreVariant) -> Result<Partition> {
    let mut parts: Vec<u32> = match variant {
        CoreVariant::Plain => {
            if r == 0 && s == 0 {
                return Err(contract("C_{0,0} is not defined (need r + s > 0)"));
            }
            (1..=s).rev().map(|i| r + 2 * i).collect()
        }
        CoreVariant::Minus => (0..=s).rev().map(|i| r + 1 + 2 * i).collect(),
    };
    for v in (1..=r).rev() {
        parts.push(v);
        parts.push(v);
    }
    Partition::new(parts)
}

/// Closed-form size of [`three_core_family`].
pub fn three_core_family_size(r: u32, s: u32, variant: CoreVariant) -> u32 {
    match variant {
        CoreVariant::Plain => r * s + r * (r + 1) + s * (s + 1),
        CoreVariant::Minus => (r + 1) * (s + 1) + r * (r + 1) + s * (s + 1),
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`partitions_of`].
pub struct PartitionsOf {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Pull off trailing ones, then decrement the last part larger than one.
        let mut spill = 0u32;
        while succ.last() == Some(&1) {
            succ.pop();
            spill += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            spill += 1;
            while spill > 0 {
                let take = spill.min(cap);
                succ.push(take);
                spill -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            counts[total] += counts[total - part];
        }
    }
    counts[n]
}

/// All p-cores of size `n`, found by filtering [`partitions_of`].
pub fn enumerate_p_cores(n: u32, p: u32, max_n: u32) -> Result<Vec<Partition>> {
    check_bound("core enumeration size", n as u64, max_n as u64)?;
    Ok(partitions_of(n).filter(|l| l.is_p_core(p)).collect())
}

/// All p-cores with at most `max_size` boxes, built directly on a p-runner abacus.
///
/// A p-core is determined by how many beads sit on each runner relative to a
/// balanced abacus: an integer vector `(c_0, ..., c_{p-1})` summing to zero.
/// Output is sorted by size, then by parts.
pub fn p_cores_up_to(max_size: u32, p: u32) -> Vec<Partition> {
    assert!(p >= 2, "p must be at least 2");
    // size >= (p/2) S - ((p-1)/2) sqrt(p S) with S the sum of squared charges,
    // so charges beyond `bound` can only produce cores larger than `max_size`.
    let pf = p as f64;
    let mut bound = 1i64;
    loop {
        let s = (bound * bound) as f64;
        if pf / 2.0 * s - (pf - 1.0) / 2.0 * (pf * s).sqrt() > max_size as f64 {
            break;
        }
        bound += 1;
    }
    let mut found = BTreeSet::new();
    let mut charges = vec![0i64; p as usize];
    collect_cores(&mut charges, 0, bound, p, max_size, &mut found);
    let mut cores: Vec<Partition> = found.into_iter().collect();
    cores.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    cores
}

fn collect_cores(
    charges: &mut [i64],
    idx: usize,
    bound: i64,
    p: u32,
    max_size: u32,
    found: &mut BTreeSet<Partition>,
) {
    let last = charges.len() - 1;
    if idx == last {
        let rest: i64 = -charges[..last].iter().sum::<i64>();
        if rest.abs() > bound {
            return;
        }
        charges[last] = rest;
        let core = core_from_charges(charges, p);
        if core.size() <= max_size {
            found.insert(core);
        }
        return;
    }
    for c in -bound..=bound {
        charges[idx] = c;
        collect_cores(charges, idx + 1, bound, p, max_size, found);
    }
}

fn core_from_charges(charges: &[i64], p: u32) -> Partition {
    let base = charges.iter().map(|c| -c).max().unwrap_or(0).max(0);
    let beads: Vec<u32> = charges
        .iter()
        .enumerate()
        .flat_map(|(runner, &c)| {
            (0..(base + c)).map(move |lvl| runner as u32 + lvl as u32 * p)
        })
        .collect();
    Partition::from_beta_numbers(&beads)
}

/// Number of p-cores of each size `0..=max_size`, read off the generating
/// function `prod_{k>=1} (1 - q^{pk})^p / (1 - q^k)`.
pub fn p_core_counts(max_size: u32, p: u32) -> Vec<BigInt> {
    let len = max_size as usize + 1;
    let mut series = vec![BigInt::zero(); len];
    series[0] = BigInt::one();
    let p = p as usize;
    let mut k = 1;
    while p * k < len {
        for _ in 0..p {
            for i in (p * k..len).rev() {
                let lower = series[i - p * k].clone();
                series[i] -= lower;
            }
        }
        k += 1;
    }
    for k in 1..len {
        for i in k..len {
            let lower = series[i - k].clone();
            series[i] += lower;
        }
    }
    series
}

/// Sizes `k <= max_size` for which a p-core with `k` boxes exists.
pub fn p_core_sizes(max_size: u32, p: u32) -> BTreeSet<u32> {
    p_core_counts(max_size, p)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_positive())
        .map(|(k, _)| k as u32)
        .collect()
}

/// Some p-core with exactly `size` boxes, if one exists and can be found
/// within the enumeration bound (`p <= 3` uses the abacus and is unbounded).
pub fn find_p_core(size: u32, p: u32, max_n: u32) -> Option<Partition> {
    if p <= 3 {
        return p_cores_up_to(size, p).into_iter().find(|c| c.size() == size);
    }
    if !p_core_sizes(size, p).contains(&size) {
        return None;
    }
    enumerate_p_cores(size, p, max_n).ok()?.into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_invalid_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
        assert_eq!(Partition::from_multiset(vec![1, 3, 1]).unwrap(), part(&[3, 1, 1]));
    }

    #[test]
    fn hook_multisets() {
        assert_eq!(part(&[5]).hook_multiset(), vec![5, 4, 3, 2, 1]);
        assert_eq!(part(&[2, 1]).hook_multiset(), vec![3, 1, 1]);
        assert_eq!(part(&[3, 2]).hook_multiset(), vec![4, 3, 2, 1, 1]);
    }

    #[test]
    fn rim_removal_examples() {
        let single = part(&[6]).rims(6);
        assert_eq!(
            single,
            vec![RimRemoval {
                result: Partition::empty(),
                leg_length: 0
            }]
        );
        let two_two: BTreeSet<(Vec<u32>, u32)> = part(&[2, 2])
            .rims(2)
            .into_iter()
            .map(|r| (r.result.into_parts(), r.leg_length))
            .collect();
        let expected: BTreeSet<(Vec<u32>, u32)> =
            [(vec![2], 0), (vec![1, 1], 1)].into_iter().collect();
        assert_eq!(two_two, expected);
        assert!(part(&[3, 2]).rims(5).is_empty());
    }

    #[test]
    fn transpose_and_symmetry() {
        assert_eq!(part(&[3, 2]).transpose(), part(&[2, 2, 1]));
        assert!(part(&[2, 1]).is_symmetric());
        for n in 2..8 {
            assert!(!Partition::row(n).is_symmetric());
        }
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn cores_and_weights() {
        for p in [2, 3, 5, 7] {
            assert_eq!(Partition::row(p).p_core_and_weight(p), (Partition::empty(), 1));
            assert!(!Partition::row(p).is_p_core(p));
        }
        assert_eq!(part(&[4, 2]).p_core_and_weight(2), (Partition::empty(), 3));
        assert_eq!(part(&[7, 5, 3, 1]).p_core_and_weight(3), (part(&[7, 5, 3, 1]), 0));
        assert!(Partition::staircase(6).is_p_core(2));
        assert!(part(&[8, 6, 4, 2]).is_p_core(3));
    }

    #[test]
    fn abacus_core_matches_rim_stripping() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                for p in [2, 3, 5] {
                    assert_eq!(lambda.p_core_by_abacus(p), lambda.p_core_and_weight(p), "{lambda} p={p}");
                }
            }
        }
    }

    #[test]
    fn principal_hooks() {
        assert_eq!(part(&[2, 1]).principal_hook_lengths(), vec![3]);
        assert_eq!(part(&[3, 1, 1]).principal_hook_lengths(), vec![5]);
        assert_eq!(part(&[2, 2]).principal_hook_lengths(), vec![3, 1]);
    }

    #[test]
    fn near_square_shapes() {
        assert_eq!(near_square(9), part(&[4, 4, 1]));
        assert_eq!(near_square(19), part(&[5, 5, 5, 4]));
        assert_eq!(near_square(1), part(&[1]));
        for n in 1..=1000u32 {
            let y = near_square(n);
            assert_eq!(y.size(), n);
            assert!(y.max_hook() as f64 <= 2.0 * (n as f64).sqrt() + 2.0, "n={n}");
        }
    }

    #[test]
    fn three_core_examples() {
        assert_eq!(
            three_core_family(2, 3, CoreVariant::Minus).unwrap(),
            part(&[9, 7, 5, 3, 2, 2, 1, 1])
        );
        assert_eq!(
            three_core_family(2, 3, CoreVariant::Plain).unwrap(),
            part(&[8, 6, 4, 2, 2, 1, 1])
        );
        assert_eq!(three_core_family(0, 4, CoreVariant::Plain).unwrap(), part(&[8, 6, 4, 2]));
        assert_eq!(three_core_family(0, 3, CoreVariant::Minus).unwrap(), part(&[7, 5, 3, 1]));
        assert_eq!(three_core_family(0, 0, CoreVariant::Minus).unwrap(), part(&[1]));
        assert!(three_core_family(0, 0, CoreVariant::Plain).is_err());
        for s in 1..10 {
            assert_eq!(three_core_family(0, s, CoreVariant::Plain).unwrap().size(), s * (s + 1));
        }
    }

    #[test]
    fn partition_generation_order_and_count() {
        let four: Vec<Vec<u32>> = partitions_of(4).map(Partition::into_parts).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions_of(0).count(), 1);
        for n in 0..=20 {
            assert_eq!(partitions_of(n).count() as u64, partition_count(n));
        }
    }

    #[test]
    fn p_core_enumeration() {
        assert_eq!(enumerate_p_cores(0, 3, 70).unwrap(), vec![Partition::empty()]);
        // Partitions of 4 with no hook of length 3.
        assert_eq!(enumerate_p_cores(4, 3, 70).unwrap(), vec![part(&[3, 1]), part(&[2, 1, 1])]);
        for n in 0..=30u32 {
            let triangular = (0..10).any(|k| k * (k + 1) / 2 == n);
            assert_eq!(!enumerate_p_cores(n, 2, 70).unwrap().is_empty(), triangular, "n={n}");
        }
        assert!(matches!(enumerate_p_cores(71, 3, 70), Err(Error::Resource { .. })));
    }

    #[test]
    fn abacus_enumeration_matches_filtering() {
        for p in [2, 3, 5] {
            let by_abacus = p_cores_up_to(22, p);
            let mut by_filter: Vec<Partition> = (0..=22)
                .flat_map(|n| enumerate_p_cores(n, p, 70).unwrap())
                .collect();
            by_filter.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
            assert_eq!(by_abacus, by_filter, "p={p}");
        }
    }

    #[test]
    fn generating_function_counts_cores() {
        for p in [2, 3, 5, 7] {
            let counts = p_core_counts(20, p);
            for n in 0..=20 {
                let direct = enumerate_p_cores(n, p, 70).unwrap().len();
                assert_eq!(counts[n as usize], BigInt::from(direct), "p={p} n={n}");
            }
        }
        let sizes = p_core_sizes(100, 2);
        let triangular: BTreeSet<u32> = (0..15).map(|k| k * (k + 1) / 2).filter(|&t| t <= 100).collect();
        assert_eq!(sizes, triangular);
        assert_eq!(p_core_sizes(200, 3), p_cores_up_to(200, 3).iter().map(Partition::size).collect());
    }

    #[test]
    fn finds_cores() {
        assert_eq!(find_p_core(6, 2, 70), Some(Partition::staircase(3)));
        assert_eq!(find_p_core(7, 2, 70), None);
        let c = find_p_core(31, 5, 70).unwrap();
        assert!(c.is_p_core(5) && c.size() == 31);
    }

    #[test]
    fn display_and_parse() {
        let l: Partition = "[4,1]".parse().unwrap();
        assert_eq!(l, part(&[4, 1]));
        assert_eq!(l.to_string(), "[4,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,4]".parse::<Partition>().is_err());
        assert!("(4,1)".parse::<Partition>().is_err());
    }
}
