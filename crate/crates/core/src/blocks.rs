//! p-blocks of S_n and A_n described by core, weight and defect-group support.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::character_degree;
use crate::config::Config;
use crate::error::{check_bound, contract, Error, Result};
use crate::groups::{self, factorial_p_exponent, group_order};
use crate::labels::GroupKind;
use crate::partition::{enumerate_p_cores, p_core_sizes, p_cores_up_to, Partition};

/// A p-block of S_n. The defect group is a Sylow p-subgroup of S_{pb} and is
/// described only by its support `p·b` and its order exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockDescriptor {
    pub p: u32,
    pub core: Partition,
    pub weight: u32,
    pub defect_support: u32,
    pub defect: u64,
}

impl BlockDescriptor {
    pub fn new(core: Partition, weight: u32, p: u32) -> Result<Self> {
        require_prime(p)?;
        if !core.is_p_core(p) {
            return Err(contract(format!("{core} is not a {p}-core")));
        }
        let support = p * weight;
        Ok(BlockDescriptor {
            p,
            core,
            weight,
            defect_support: support,
            defect: factorial_p_exponent(support as u64, p as u64),
        })
    }

    pub fn n(&self) -> u32 {
        self.core.size() + self.defect_support
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn require_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(contract(format!("{p} is not prime")))
    }
}

pub fn block_of(lambda: &Partition, p: u32) -> Result<BlockDescriptor> {
    require_prime(p)?;
    let (core, weight) = lambda.p_core_and_weight(p);
    BlockDescriptor::new(core, weight, p)
}

/// Which sizes `0..=max_n` admit a p-core, computed once and reused for many `n`.
#[derive(Clone, Debug)]
pub struct CoreSizes {
    p: u32,
    sizes: BTreeSet<u32>,
    max_n: u32,
}

impl CoreSizes {
    pub fn new(max_n: u32, p: u32) -> Result<Self> {
        require_prime(p)?;
        Ok(CoreSizes {
            p,
            sizes: p_core_sizes(max_n, p),
            max_n,
        })
    }

    pub fn has_core(&self, size: u32) -> bool {
        assert!(size <= self.max_n, "size {size} beyond table limit {}", self.max_n);
        self.sizes.contains(&size)
    }

    pub fn defect_supports(&self, n: u32) -> Vec<u32> {
        (0..=n / self.p)
            .map(|b| b * self.p)
            .filter(|&d| self.has_core(n - d))
            .collect()
    }

    pub fn min_defect_support(&self, n: u32) -> u32 {
        (0..=n / self.p)
            .map(|b| b * self.p)
            .find(|&d| self.has_core(n - d))
            .expect("the empty partition is a core of size n mod p plus a multiple of p")
    }

    pub fn min_defect(&self, n: u32) -> u64 {
        factorial_p_exponent(self.min_defect_support(n) as u64, self.p as u64)
    }
}

/// `{p·b : a p-core of size n - p·b exists}`, ascending.
pub fn defect_supports(n: u32, p: u32) -> Result<Vec<u32>> {
    Ok(CoreSizes::new(n, p)?.defect_supports(n))
}

pub fn min_defect_support(n: u32, p: u32) -> Result<u32> {
    Ok(CoreSizes::new(n, p)?.min_defect_support(n))
}

/// Defect of the block of smallest defect group.
pub fn min_defect(n: u32, p: u32) -> Result<u64> {
    Ok(CoreSizes::new(n, p)?.min_defect(n))
}

/// Every p-block of S_n, one per p-core of size `n - p·b`.
pub fn blocks_of_sn(n: u32, p: u32, cfg: &Config) -> Result<Vec<BlockDescriptor>> {
    require_prime(p)?;
    let cores = if p <= 3 {
        p_cores_up_to(n, p)
    } else {
        check_bound("core enumeration size", n as u64, cfg.max_core_enum_n as u64)?;
        (0..=n / p)
            .map(|b| enumerate_p_cores(n - b * p, p, cfg.max_core_enum_n))
            .collect::<Result<Vec<_>>>()?
            .concat()
    };
    let mut out: Vec<BlockDescriptor> = cores
        .into_iter()
        .filter(|c| (n - c.size()) % p == 0)
        .map(|c| {
            let w = (n - c.size()) / p;
            BlockDescriptor::new(c, w, p).expect("enumerated cores are cores")
        })
        .collect();
    out.sort_by(|a, b| a.weight.cmp(&b.weight).then_with(|| b.core.cmp(&a.core)));
    Ok(out)
}

pub fn is_triangular(m: u32) -> bool {
    let m = m as u64;
    let k = (((8 * m + 1) as f64).sqrt() as u64).saturating_sub(1) / 2;
    (k.saturating_sub(1)..=k + 1).any(|k| k * (k + 1) / 2 == m)
}

/// Whether `G` has a p-block of defect 0.
pub fn has_defect0(n: u32, p: u32, group: GroupKind) -> Result<bool> {
    require_prime(p)?;
    Ok(match (group, p) {
        (GroupKind::Alt, 2) => is_triangular(n) || (n >= 2 && is_triangular(n - 2)),
        _ => p_core_sizes(n, p).contains(&n),
    })
}

/// Defect-0 existence read off character degrees: some irreducible character of
/// `G` has degree divisible by the full p-part of `|G|`.
pub fn has_defect0_by_degrees(n: u32, p: u32, group: GroupKind, cfg: &Config) -> Result<bool> {
    require_prime(p)?;
    check_bound("character table size", n as u64, cfg.max_table_n as u64)?;
    let order = group_order(n, group);
    let p_big = BigInt::from(p);
    let mut p_part = BigInt::from(1);
    let mut rest = order;
    while rest.is_multiple_of(&p_big) {
        rest /= &p_big;
        p_part *= &p_big;
    }
    Ok(groups::characters(n, group)
        .iter()
        .any(|chi| (character_degree(chi) % &p_part).is_zero()))
}

/// Predicts that S_n (and A_n) has no 3-block of defect 0: write `3n+1 = m²r`
/// with `r` squarefree; the prediction holds iff a prime `q ≡ 2 (mod 3)` divides `r`.
pub fn go1_3_criterion(n: u32) -> bool {
    let mut x = 3 * n as u64 + 1;
    let mut q = 2u64;
    while q * q <= x {
        let mut e = 0;
        while x % q == 0 {
            x /= q;
            e += 1;
        }
        if e % 2 == 1 && q % 3 == 2 {
            return true;
        }
        q += 1;
    }
    x > 1 && x % 3 == 2
}

/// The diagram `[l_1 + b·p, l_2, ...]`, which has p-core `core` and weight `b`.
pub fn diagram_with_core(core: &Partition, b: u32, p: u32) -> Result<Partition> {
    require_prime(p)?;
    if !core.is_p_core(p) {
        return Err(contract(format!("{core} is not a {p}-core")));
    }
    let mut parts = core.parts().to_vec();
    match parts.first_mut() {
        Some(first) => *first += b * p,
        None if b > 0 => parts.push(b * p),
        None => {}
    }
    let out = Partition::new(parts)?;
    debug_assert_eq!(out.p_core_and_weight(p), (core.clone(), b));
    Ok(out)
}

/// A non-symmetric diagram in the block of `(core, b)`, for `b > 0`: extend the
/// first row, or the first column if that is symmetric.
pub fn nonsymmetric_diagram_with_core(core: &Partition, b: u32, p: u32) -> Result<Partition> {
    if b == 0 {
        return Err(contract("a weight-0 block holds only its core"));
    }
    let by_row = diagram_with_core(core, b, p)?;
    if !by_row.is_symmetric() {
        return Ok(by_row);
    }
    let by_col = diagram_with_core(&core.transpose(), b, p)?.transpose();
    if !by_col.is_symmetric() {
        debug_assert_eq!(by_col.p_core_and_weight(p), (core.clone(), b));
        return Ok(by_col);
    }
    Err(Error::EmptyDomain(format!(
        "no non-symmetric extension of {core} by {b} {p}-hooks"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: u32,
    pub t: u32,
    pub n_minus_t: u32,
}

pub const TABLE1_NS: [u32; 17] = [14, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 27, 29, 30, 31, 32, 33];

/// `t` is the largest triangular number `≤ n` with `n - t` even; `n - t` is the
/// minimal 2-defect support.
pub fn table1() -> Vec<Table1Row> {
    let sizes = CoreSizes::new(*TABLE1_NS.last().unwrap(), 2).expect("2 is prime");
    TABLE1_NS
        .iter()
        .map(|&n| {
            let d = sizes.min_defect_support(n);
            let t = n - d;
            debug_assert!(is_triangular(t));
            Table1Row { n, t, n_minus_t: d }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub n: u32,
    pub n_minus_core: u32,
    pub core: u32,
}

pub const TABLE2_NS: [u32; 18] = [7, 11, 13, 15, 18, 19, 23, 27, 28, 29, 31, 35, 38, 39, 43, 45, 47, 48];

/// `|C|` is the largest 3-core size `≤ n` with `|C| ≡ n (mod 3)`.
pub fn table2() -> Vec<Table2Row> {
    table2_rows(&TABLE2_NS)
}

/// The row for `n = 51`, given separately after the table.
pub fn table2_note() -> Table2Row {
    table2_rows(&[51])[0]
}

fn table2_rows(ns: &[u32]) -> Vec<Table2Row> {
    let max = ns.iter().copied().max().unwrap_or(0);
    let sizes = CoreSizes::new(max, 3).expect("3 is prime");
    ns.iter()
        .map(|&n| {
            let d = sizes.min_defect_support(n);
            Table2Row {
                n,
                n_minus_core: d,
                core: n - d,
            }
        })
        .collect()
}

pub fn table1_csv() -> String {
    let mut out = String::from("n,t,n-t\n");
    for r in table1() {
        writeln!(out, "{},{},{}", r.n, r.t, r.n_minus_t).unwrap();
    }
    out
}

pub fn table2_csv(include_note: bool) -> String {
    let mut out = String::from("n,n-|C|,|C|\n");
    let mut rows = table2();
    if include_note {
        rows.push(table2_note());
    }
    for r in rows {
        writeln!(out, "{},{},{}", r.n, r.n_minus_core, r.core).unwrap();
    }
    out
}
