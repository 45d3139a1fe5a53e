//! Vanishing-element certificates and a battery of executable vanishing checks.
//!
//! A class is *vanishing* if some irreducible character is exactly zero on it.
//! Certificates come from a direct evaluation or from block theory: a character
//! in a block whose defect group support is smaller than the p-part support of
//! the element vanishes there.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebraic::AlgebraicValue;
use crate::blocks::{self, BlockDescriptor};
use crate::characters::{character_value, mn_value, GroupTable};
use crate::config::Config;
use crate::error::{check_bound, contract, Error, Result};
use crate::groups::{self, element_order, element_orders, is_2_3_number, p_part_support, support};
use crate::labels::{is_even_type, CharacterLabel, ClassLabel, GroupKind, Half};
use crate::partition::{find_p_core, near_square, partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    DirectZero,
    DefectExclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishCertificate {
    pub kind: CertificateKind,
    pub character: Option<CharacterLabel>,
    pub block: Option<BlockDescriptor>,
    /// Exact value of `character` on the class, when it was evaluated.
    pub value_checked: Option<AlgebraicValue>,
}

impl VanishCertificate {
    fn direct(character: CharacterLabel) -> Self {
        VanishCertificate {
            kind: CertificateKind::DirectZero,
            character: Some(character),
            block: None,
            value_checked: Some(AlgebraicValue::zero()),
        }
    }

    /// Re-evaluates the named character on `cls` and checks the certificate's claims.
    pub fn confirm(&self, cls: &ClassLabel) -> Result<bool> {
        if let Some(block) = &self.block {
            if p_part_support(&cls.cycle_type, block.p) <= block.defect_support {
                return Ok(false);
            }
            if let Some(chi) = &self.character {
                if chi.lambda.p_core_and_weight(block.p) != (block.core.clone(), block.weight) {
                    return Ok(false);
                }
            }
        }
        match &self.character {
            Some(chi) => Ok(character_value(chi, cls)?.is_zero()),
            None => Ok(self.kind == CertificateKind::DefectExclusion),
        }
    }
}

/// Outcome of a vanishing query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Vanishing {
    Vanishing { certificate: VanishCertificate },
    /// Every irreducible character was evaluated and none is zero.
    NonVanishing,
    /// Beyond the exhaustive range and no block-theoretic certificate applies.
    Unknown,
}

impl Vanishing {
    pub fn certificate(&self) -> Option<&VanishCertificate> {
        match self {
            Vanishing::Vanishing { certificate } => Some(certificate),
            _ => None,
        }
    }
}

fn prime_factors(mut m: u128) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2u128;
    while q * q <= m {
        if m % q == 0 {
            out.push(q as u32);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m as u32);
    }
    out
}

/// A block of minimal defect-group support with one character in it that stays
/// irreducible on A_n, provided the p-part support of `cycle_type` exceeds that
/// support. The character vanishes on the class in S_n and in A_n.
pub fn jk1_certificate(
    cycle_type: &Partition,
    p: u32,
    n: u32,
    group: GroupKind,
    cfg: &Config,
) -> Result<Option<(BlockDescriptor, CharacterLabel)>> {
    if cycle_type.size() != n {
        return Err(contract(format!("{cycle_type} is not a cycle type of {n}")));
    }
    if !blocks::is_prime(p) {
        return Err(contract(format!("{p} is not prime")));
    }
    let min_support = blocks::min_defect_support(n, p)?;
    if p_part_support(cycle_type, p) <= min_support {
        return Ok(None);
    }
    let weight = min_support / p;
    let Some(core) = find_p_core(n - min_support, p, cfg.max_core_enum_n) else {
        return Ok(None);
    };
    let block = BlockDescriptor::new(core, weight, p)?;
    let lambda = if weight == 0 {
        block.core.clone()
    } else {
        blocks::nonsymmetric_diagram_with_core(&block.core, weight, p)?
    };
    let character = match group {
        GroupKind::Sym => CharacterLabel::sym(lambda),
        GroupKind::Alt if lambda.is_symmetric() => CharacterLabel::alt(lambda, Half::Plus)?,
        GroupKind::Alt => CharacterLabel::alt(lambda, Half::Whole)?,
    };
    Ok(Some((block, character)))
}

fn defect_certificate(cls: &ClassLabel, cfg: &Config) -> Result<Option<VanishCertificate>> {
    let n = cls.n();
    for p in prime_factors(element_order(&cls.cycle_type)) {
        if let Some((block, chi)) = jk1_certificate(&cls.cycle_type, p, n, cls.group, cfg)? {
            let value_checked = if n <= cfg.max_table_n {
                let v = character_value(&chi, cls)?;
                assert!(v.is_zero(), "{chi} does not vanish on {cls}");
                Some(v)
            } else {
                None
            };
            return Ok(Some(VanishCertificate {
                kind: CertificateKind::DefectExclusion,
                character: Some(chi),
                block: Some(block),
                value_checked,
            }));
        }
    }
    Ok(None)
}

/// Characters in search order: integer-valued ones first, and for an odd class
/// of S_n the symmetric diagrams first.
fn search_order(group: GroupKind, cls: &ClassLabel) -> Vec<CharacterLabel> {
    let mut chars = groups::characters(cls.n(), group);
    match group {
        GroupKind::Alt => chars.sort_by_key(|c| c.split.is_split()),
        GroupKind::Sym if !is_even_type(&cls.cycle_type) => {
            chars.sort_by_key(|c| !c.lambda.is_symmetric())
        }
        GroupKind::Sym => {}
    }
    chars
}

/// Decides whether `cls` is vanishing in `group` of degree `n`.
pub fn vanishing_certificate(group: GroupKind, n: u32, cls: &ClassLabel, cfg: &Config) -> Result<Vanishing> {
    if cls.group != group || cls.n() != n {
        return Err(contract(format!("class {cls} is not a class of {group}_{n}")));
    }
    cls.validate()?;
    if n <= cfg.max_table_n {
        for chi in search_order(group, cls) {
            if character_value(&chi, cls)?.is_zero() {
                return Ok(Vanishing::Vanishing {
                    certificate: VanishCertificate::direct(chi),
                });
            }
        }
        return Ok(Vanishing::NonVanishing);
    }
    Ok(match defect_certificate(cls, cfg)? {
        Some(certificate) => Vanishing::Vanishing { certificate },
        None => Vanishing::Unknown,
    })
}

/// Every class (identity included) on which no irreducible character vanishes.
pub fn nonvanishing_classes(group: GroupKind, n: u32, cfg: &Config) -> Result<Vec<ClassLabel>> {
    check_bound("non-vanishing search size", n as u64, 13.min(cfg.max_table_n) as u64)?;
    let table = GroupTable::cached(group, n, cfg)?;
    let mut zero = vec![false; table.classes.len()];
    for chi in 0..table.characters.len() {
        for c in table.zero_classes(chi) {
            zero[c] = true;
        }
    }
    Ok(table
        .classes
        .iter()
        .zip(zero)
        .filter(|(_, z)| !z)
        .map(|(c, _)| c.clone())
        .collect())
}

/// The element with `a_i` cycles of length `p^i`, where `n = Σ a_i p^i` in base `p`.
pub fn mno_element(n: u32, p: u32) -> Result<Partition> {
    if !blocks::is_prime(p) {
        return Err(contract(format!("{p} is not prime")));
    }
    let mut parts = Vec::new();
    let (mut rest, mut power) = (n, 1u32);
    while rest > 0 {
        let digit = rest % p;
        parts.extend(std::iter::repeat(power).take(digit as usize));
        rest /= p;
        power *= p;
    }
    parts.reverse();
    Partition::new(parts)
}

/// Every S_n character of degree divisible by `p` vanishes on [`mno_element`].
pub fn mno_check(n: u32, p: u32, cfg: &Config) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("ma1_p{p}"), n);
    if !(1..=12.min(cfg.max_table_n)).contains(&n) {
        return Ok(report.out_of_range());
    }
    let h = mno_element(n, p)?;
    let cls = ClassLabel::sym(h.clone());
    for lambda in partitions_of(n) {
        if !(crate::characters::degree(&lambda) % p).is_zero() {
            continue;
        }
        let chi = CharacterLabel::sym(lambda.clone());
        let v = mn_value(&lambda, &h)?;
        if v.is_zero() {
            report.pass(GroupKind::Sym, cls.clone(), VanishCertificate::direct(chi));
        } else {
            report.fail(GroupKind::Sym, cls.clone(), format!("{chi} takes value {v}"));
        }
    }
    Ok(report.finish(&[]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    OutOfRange,
    /// Failures occurred, all at degrees the statement excludes and matching the
    /// documented exceptional classes.
    KnownException,
}

impl CheckStatus {
    pub fn is_ok(self) -> bool {
        matches!(self, CheckStatus::Pass | CheckStatus::KnownException | CheckStatus::OutOfRange)
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::OutOfRange => "out_of_range",
            CheckStatus::KnownException => "known_exception",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub group: GroupKind,
    pub class: ClassLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<VanishCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub n: u32,
    pub status: CheckStatus,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(check_id: impl Into<String>, n: u32) -> Self {
        CheckReport {
            check_id: check_id.into(),
            n,
            status: CheckStatus::Pass,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn out_of_range(mut self) -> Self {
        self.status = CheckStatus::OutOfRange;
        self
    }

    fn pass(&mut self, group: GroupKind, class: ClassLabel, cert: VanishCertificate) {
        self.witnesses.push(Witness {
            group,
            class,
            certificate: Some(cert),
            counterexample: None,
        });
    }

    fn fail(&mut self, group: GroupKind, class: ClassLabel, why: String) {
        self.witnesses.push(Witness {
            group,
            class,
            certificate: None,
            counterexample: Some(why),
        });
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.counterexample.is_some())
    }

    /// Sets the status: counterexamples are tolerated only if `excused` accepts them.
    fn finish(mut self, excused: &[&dyn Fn(&[&Witness]) -> bool]) -> Self {
        let bad: Vec<&Witness> = self.counterexamples().collect();
        self.status = if bad.is_empty() {
            CheckStatus::Pass
        } else if excused.iter().any(|f| f(&bad)) {
            CheckStatus::KnownException
        } else {
            CheckStatus::Fail
        };
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Identifiers of the check battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Nr5,
    N44,
    K9,
    Nr4a,
    Sd9,
    Ma1,
    Ma2,
    Ma3,
    Tc1S,
    TwoThreeA,
    TwoThreeB,
    Mt2,
    Pp7,
    Pp7At18,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::Nr5,
        CheckId::N44,
        CheckId::K9,
        CheckId::Nr4a,
        CheckId::Sd9,
        CheckId::Ma1,
        CheckId::Ma2,
        CheckId::Ma3,
        CheckId::Tc1S,
        CheckId::TwoThreeA,
        CheckId::TwoThreeB,
        CheckId::Mt2,
        CheckId::Pp7,
        CheckId::Pp7At18,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Nr5 => "nr5",
            CheckId::N44 => "n44",
            CheckId::K9 => "k9",
            CheckId::Nr4a => "nr4a",
            CheckId::Sd9 => "sd9",
            CheckId::Ma1 => "ma1",
            CheckId::Ma2 => "ma2",
            CheckId::Ma3 => "ma3",
            CheckId::Tc1S => "tc1_S",
            CheckId::TwoThreeA => "23a",
            CheckId::TwoThreeB => "23b",
            CheckId::Mt2 => "mt2",
            CheckId::Pp7 => "pp7",
            CheckId::Pp7At18 => "pp7_18",
        }
    }

    /// Degrees at which the check runs; outside them it reports `out_of_range`.
    pub fn range(self) -> std::ops::RangeInclusive<u32> {
        match self {
            CheckId::Nr5 => 7..=14,
            CheckId::N44 => 7..=12,
            CheckId::K9 => 4..=14,
            CheckId::Nr4a => 4..=14,
            CheckId::Sd9 => 3..=14,
            CheckId::Ma1 => 1..=12,
            CheckId::Ma2 | CheckId::Ma3 => 5..=12,
            CheckId::Tc1S | CheckId::TwoThreeA => 5..=12,
            CheckId::TwoThreeB => 14..=14,
            CheckId::Mt2 | CheckId::Pp7 => 5..=13,
            CheckId::Pp7At18 => 18..=18,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

pub fn run_check(check_id: &str, n: u32, cfg: &Config) -> Result<CheckReport> {
    run(check_id.parse()?, n, cfg)
}

pub fn run(id: CheckId, n: u32, cfg: &Config) -> Result<CheckReport> {
    let report = CheckReport::new(id.name(), n);
    let in_table = id == CheckId::Pp7At18 || n <= cfg.max_table_n;
    if !id.range().contains(&n) || !in_table {
        return Ok(report.out_of_range());
    }
    match id {
        CheckId::Nr5 => check_nr5(report, n),
        CheckId::N44 => check_n44(report, n),
        CheckId::K9 => check_k9(report, n),
        CheckId::Nr4a => check_nr4a(report, n, cfg),
        CheckId::Sd9 => check_sd9(report, n),
        CheckId::Ma1 => check_ma1(report, n, cfg),
        CheckId::Ma2 => check_common_zero_on_order(report, n, 2, cfg),
        CheckId::Ma3 => check_common_zero_on_order(report, n, 3, cfg),
        CheckId::Tc1S => check_tc1(report, n, cfg),
        CheckId::TwoThreeA => check_23a(report, n, cfg),
        CheckId::TwoThreeB => check_23b(report, n, cfg),
        CheckId::Mt2 => check_mt2(report, n, cfg),
        CheckId::Pp7 => check_pp7(report, n, cfg),
        CheckId::Pp7At18 => check_pp7_18(report, n),
    }
}

fn sym_types(n: u32) -> impl Iterator<Item = Partition> {
    partitions_of(n)
}

/// Checks that a single S_n character vanishes on every type selected by `hyp`.
fn fixed_sym_character(
    mut report: CheckReport,
    lambda: &Partition,
    n: u32,
    hyp: impl Fn(&Partition) -> bool,
) -> Result<CheckReport> {
    let chi = CharacterLabel::sym(lambda.clone());
    for t in sym_types(n).filter(|t| hyp(t)) {
        let v = mn_value(lambda, &t)?;
        if v.is_zero() {
            report.pass(GroupKind::Sym, ClassLabel::sym(t), VanishCertificate::direct(chi.clone()));
        } else {
            report.fail(GroupKind::Sym, ClassLabel::sym(t), format!("{chi} takes value {v}"));
        }
    }
    Ok(report.finish(&[]))
}

fn fixed_points(t: &Partition) -> usize {
    t.multiplicity(1)
}

fn check_nr5(report: CheckReport, n: u32) -> Result<CheckReport> {
    let lambda = Partition::new(vec![n - 4, 3, 1])?;
    fixed_sym_character(report, &lambda, n, |t| {
        fixed_points(t) <= 1 && t.parts().iter().all(|&c| c != 2 && c != 4)
    })
}

fn check_k9(mut report: CheckReport, n: u32) -> Result<CheckReport> {
    let lambda = Partition::new(vec![n - 1, 1])?;
    let chi = CharacterLabel::sym(lambda.clone());
    for t in sym_types(n) {
        let zero = mn_value(&lambda, &t)?.is_zero();
        let one_fixed = fixed_points(&t) == 1;
        let cls = ClassLabel::sym(t);
        match (zero, one_fixed) {
            (true, true) => report.pass(GroupKind::Sym, cls, VanishCertificate::direct(chi.clone())),
            (false, false) => {}
            (true, false) => report.fail(GroupKind::Sym, cls, format!("{chi} vanishes without one fixed point")),
            (false, true) => report.fail(GroupKind::Sym, cls, format!("{chi} is nonzero")),
        }
    }
    Ok(report.finish(&[]))
}

fn exceeds_two_sqrt_plus_two(c: u32, n: u32) -> bool {
    c > 2 && ((c - 2) as u64).pow(2) > 4 * n as u64
}

fn check_n44(mut report: CheckReport, n: u32) -> Result<CheckReport> {
    let lambda = near_square(n);
    let hyp = |t: &Partition| t.parts().first().is_some_and(|&c| exceeds_two_sqrt_plus_two(c, n));
    for group in [GroupKind::Sym, GroupKind::Alt] {
        let chi = label_for(&lambda, group)?;
        for cls in groups::classes(n, group).into_iter().filter(|c| hyp(&c.cycle_type)) {
            record_value(&mut report, group, cls, &chi)?;
        }
    }
    Ok(report.finish(&[]))
}

/// The S_n or A_n character named by `lambda` (the `+` half if it splits).
fn label_for(lambda: &Partition, group: GroupKind) -> Result<CharacterLabel> {
    Ok(match group {
        GroupKind::Sym => CharacterLabel::sym(lambda.clone()),
        GroupKind::Alt if lambda.is_symmetric() && lambda.size() >= 2 => {
            CharacterLabel::alt(lambda.clone(), Half::Plus)?
        }
        GroupKind::Alt => CharacterLabel::alt(lambda.clone(), Half::Whole)?,
    })
}

fn record_value(report: &mut CheckReport, group: GroupKind, cls: ClassLabel, chi: &CharacterLabel) -> Result<()> {
    let v = character_value(chi, &cls)?;
    if v.is_zero() {
        report.pass(group, cls, VanishCertificate::direct(chi.clone()));
    } else {
        report.fail(group, cls, format!("{chi} takes value {v}"));
    }
    Ok(())
}

/// Finds one character of `group` vanishing on all of `classes`, recording it
/// as the certificate for each class, or a counterexample if none exists.
fn common_zero(report: &mut CheckReport, table: &GroupTable, classes: &[ClassLabel]) {
    let idx: Vec<usize> = classes
        .iter()
        .map(|c| table.class_index(c).expect("class of this group"))
        .collect();
    let found = (0..table.characters.len())
        .find(|&chi| idx.iter().all(|&c| table.value(chi, c).is_zero()));
    for cls in classes {
        match found {
            Some(chi) => report.pass(table.group, cls.clone(), VanishCertificate::direct(table.characters[chi].clone())),
            None => report.fail(table.group, cls.clone(), "no single character vanishes on the whole set".into()),
        }
    }
}

fn check_nr4a(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    let table = GroupTable::cached(GroupKind::Alt, n, cfg)?;
    let nonreal: Vec<ClassLabel> = table.classes.iter().filter(|c| !groups::is_real(c)).cloned().collect();
    common_zero(&mut report, &table, &nonreal);
    Ok(report.finish(&[]))
}

fn check_sd9(report: CheckReport, n: u32) -> Result<CheckReport> {
    let lambda = partitions_of(n)
        .find(Partition::is_symmetric)
        .ok_or_else(|| Error::EmptyDomain(format!("no symmetric diagram of size {n}")))?;
    fixed_sym_character(report, &lambda, n, |t| !is_even_type(t))
}

fn check_ma1(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    for p in [2, 3] {
        let sub = mno_check(n, p, cfg)?;
        report.witnesses.extend(sub.witnesses);
    }
    Ok(report.finish(&[]))
}

fn p_power_exponent(m: u128, p: u128) -> Option<u32> {
    let (mut m, mut e) = (m, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some(e)
}

/// For `p ∈ {2, 3}`: one A_n character vanishes on every element of the largest
/// p-power order. The p = 3 statement excludes n = 7.
fn check_common_zero_on_order(mut report: CheckReport, n: u32, p: u128, cfg: &Config) -> Result<CheckReport> {
    let table = GroupTable::cached(GroupKind::Alt, n, cfg)?;
    let e = table
        .classes
        .iter()
        .map(|c| element_order(&c.cycle_type))
        .filter(|&m| p_power_exponent(m, p).is_some())
        .max()
        .unwrap_or(1);
    let of_order: Vec<ClassLabel> = table
        .classes
        .iter()
        .filter(|c| element_order(&c.cycle_type) == e)
        .cloned()
        .collect();
    common_zero(&mut report, &table, &of_order);
    let excused = |_: &[&Witness]| p == 3 && n == 7;
    Ok(report.finish(&[&excused]))
}

fn exhaustive_each(report: &mut CheckReport, table: &GroupTable, classes: &[ClassLabel]) {
    for cls in classes {
        let c = table.class_index(cls).expect("class of this group");
        let zero = (0..table.characters.len()).find(|&chi| table.value(chi, c).is_zero());
        match zero {
            Some(chi) => report.pass(table.group, cls.clone(), VanishCertificate::direct(table.characters[chi].clone())),
            None => report.fail(table.group, cls.clone(), "no irreducible character vanishes".into()),
        }
    }
}

fn check_tc1(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    for group in [GroupKind::Sym, GroupKind::Alt] {
        let table = GroupTable::cached(group, n, cfg)?;
        let hyp: Vec<ClassLabel> = table
            .classes
            .iter()
            .filter(|c| prime_factors(element_order(&c.cycle_type)).iter().any(|&q| q > 3))
            .cloned()
            .collect();
        exhaustive_each(&mut report, &table, &hyp);
    }
    prefer_defect_certificates(&mut report, cfg)?;
    Ok(report.finish(&[]))
}

/// Replaces direct certificates by block-theoretic ones when one applies.
fn prefer_defect_certificates(report: &mut CheckReport, cfg: &Config) -> Result<()> {
    for w in report.witnesses.iter_mut().filter(|w| w.certificate.is_some()) {
        if let Some(cert) = defect_certificate(&w.class, cfg)? {
            w.certificate = Some(cert);
        }
    }
    Ok(())
}

fn check_23a(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    let bound = blocks::min_defect_support(n, 2)? + blocks::min_defect_support(n, 3)?;
    for group in [GroupKind::Sym, GroupKind::Alt] {
        let table = GroupTable::cached(group, n, cfg)?;
        let hyp: Vec<ClassLabel> = table
            .classes
            .iter()
            .filter(|c| is_2_3_number(element_order(&c.cycle_type)) && support(&c.cycle_type) > bound)
            .cloned()
            .collect();
        exhaustive_each(&mut report, &table, &hyp);
    }
    prefer_defect_certificates(&mut report, cfg)?;
    Ok(report.finish(&[]))
}

fn check_23b(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    let two_bound = |s: u32| (s as u64).pow(2) > 9 * (2 * n as u64 - 20);
    let three_bound = |s: u32| s > 4 && ((s - 4) as u64).pow(2) > 4 * n as u64;
    for group in [GroupKind::Sym, GroupKind::Alt] {
        let table = GroupTable::cached(group, n, cfg)?;
        let hyp: Vec<ClassLabel> = table
            .classes
            .iter()
            .filter(|c| {
                let t = &c.cycle_type;
                is_2_3_number(element_order(t))
                    && (two_bound(p_part_support(t, 2)) || three_bound(p_part_support(t, 3)))
            })
            .cloned()
            .collect();
        exhaustive_each(&mut report, &table, &hyp);
    }
    prefer_defect_certificates(&mut report, cfg)?;
    Ok(report.finish(&[]))
}

/// Non-identity classes whose support is maximal among elements of the same order.
pub fn max_support_classes(table: &GroupTable) -> Vec<ClassLabel> {
    let orders: BTreeSet<u128> = table.classes.iter().map(|c| element_order(&c.cycle_type)).collect();
    let mut out = Vec::new();
    for m in orders.into_iter().filter(|&m| m > 1) {
        let of_order: Vec<&ClassLabel> = table
            .classes
            .iter()
            .filter(|c| element_order(&c.cycle_type) == m)
            .collect();
        let best = of_order.iter().map(|c| support(&c.cycle_type)).max().unwrap_or(0);
        out.extend(of_order.into_iter().filter(|c| support(&c.cycle_type) == best).cloned());
    }
    out
}

fn types_of(witnesses: &[&Witness], group: GroupKind) -> BTreeSet<Vec<u32>> {
    witnesses
        .iter()
        .filter(|w| w.group == group)
        .map(|w| w.class.cycle_type.parts().to_vec())
        .collect()
}

fn check_mt2(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    for group in [GroupKind::Sym, GroupKind::Alt] {
        let table = GroupTable::cached(group, n, cfg)?;
        let hyp = max_support_classes(&table);
        exhaustive_each(&mut report, &table, &hyp);
    }
    // Excluded degrees, each with the A_n classes that must be among the exceptions.
    let named: &[Vec<u32>] = match n {
        7 => &[vec![3, 2, 2], vec![2, 2, 1, 1, 1]],
        11 => &[vec![2, 2, 2, 2, 1, 1, 1]],
        _ => &[],
    };
    let bad: Vec<Witness> = report.counterexamples().cloned().collect();
    let alt = types_of(&bad.iter().collect::<Vec<_>>(), GroupKind::Alt);
    for extra in alt.iter().filter(|t| !named.contains(t)) {
        if !named.is_empty() {
            report.notes.push(format!(
                "A_{n} class {} of maximal support is also non-vanishing",
                ClassLabel::alt(Partition::from_parts_unchecked(extra.clone()), Half::Whole)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|_| format!("{extra:?}"))
            ));
        }
    }
    let excused = |bad: &[&Witness]| {
        let alt = types_of(bad, GroupKind::Alt);
        !named.is_empty() && named.iter().all(|t| alt.contains(t))
    };
    Ok(report.finish(&[&excused]))
}

fn check_pp7(mut report: CheckReport, n: u32, cfg: &Config) -> Result<CheckReport> {
    let table = GroupTable::cached(GroupKind::Alt, n, cfg)?;
    let omega = element_orders(n, GroupKind::Alt, cfg)?;
    let hyp: Vec<ClassLabel> = table
        .classes
        .iter()
        .filter(|c| {
            let m = element_order(&c.cycle_type);
            !omega.contains(&(2 * m)) && !omega.contains(&(3 * m))
        })
        .cloned()
        .collect();
    exhaustive_each(&mut report, &table, &hyp);
    let excused = |_: &[&Witness]| n == 7;
    Ok(report.finish(&[&excused]))
}

/// At n = 18 the diagram [12,2,2,1,1] has a single 8-rim, leaving the 3-core
/// [4,2,2,1,1]; so it vanishes on every type with an 8-cycle whose remaining
/// cycles have order divisible by 3.
fn check_pp7_18(report: CheckReport, n: u32) -> Result<CheckReport> {
    let lambda = Partition::new(vec![12, 2, 2, 1, 1])?;
    let rims = lambda.rims(8);
    assert_eq!(rims.len(), 1);
    assert!(rims[0].result.is_p_core(3));
    fixed_sym_character(report, &lambda, n, |t| {
        let parts = t.parts();
        let Some(pos) = parts.iter().position(|&c| c == 8) else {
            return false;
        };
        let mut rest = parts.to_vec();
        rest.remove(pos);
        let rest = Partition::from_parts_unchecked(rest);
        element_order(&rest) % 3 == 0
    })
}

/// Runs every check at every degree of its default range, ordered by check then `n`.
pub fn run_all(cfg: &Config) -> Result<Vec<CheckReport>> {
    let jobs: Vec<(CheckId, u32)> = CheckId::ALL
        .into_iter()
        .flat_map(|id| id.range().map(move |n| (id, n)))
        .collect();
    run_jobs(&jobs, cfg)
}

pub fn run_jobs(jobs: &[(CheckId, u32)], cfg: &Config) -> Result<Vec<CheckReport>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.par_iter().map(|&(id, n)| run(id, n, cfg)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(|&(id, n)| run(id, n, cfg)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> Partition {
        Partition::from_multiset(v.to_vec()).unwrap()
    }

    #[test]
    fn mno_elements() {
        assert_eq!(mno_element(10, 3).unwrap(), t(&[9, 1]));
        assert_eq!(mno_element(2, 3).unwrap(), t(&[1, 1]));
        assert_eq!(mno_element(7, 2).unwrap(), t(&[4, 2, 1]));
        let cfg = Config::default();
        assert_eq!(mno_check(10, 2, &cfg).unwrap().status, CheckStatus::Pass);
        assert_eq!(mno_check(2, 3, &cfg).unwrap().witnesses.len(), 0);
    }

    #[test]
    fn certificates() {
        let cfg = Config::default();
        let c5 = ClassLabel::alt(t(&[5]), Half::Plus).unwrap();
        let v = vanishing_certificate(GroupKind::Alt, 5, &c5, &cfg).unwrap();
        let cert = v.certificate().unwrap();
        assert!(cert.confirm(&c5).unwrap());
        let odd = ClassLabel::sym(t(&[2, 1, 1, 1]));
        let v = vanishing_certificate(GroupKind::Sym, 5, &odd, &cfg).unwrap();
        assert!(v.certificate().unwrap().character.as_ref().unwrap().lambda.is_symmetric());
        let inv = ClassLabel::alt(t(&[2, 2, 1, 1, 1]), Half::Whole).unwrap();
        assert_eq!(vanishing_certificate(GroupKind::Alt, 7, &inv, &cfg).unwrap(), Vanishing::NonVanishing);
    }

    #[test]
    fn beyond_tables_only_block_certificates() {
        let cfg = Config::default();
        let cls = ClassLabel::sym(t(&[8, 4, 2, 2, 2, 2, 1, 1, 1]));
        let v = vanishing_certificate(GroupKind::Sym, 23, &cls, &cfg).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.kind, CertificateKind::DefectExclusion);
        assert_eq!(cert.block.as_ref().unwrap().defect_support, 2);
        assert!(cert.value_checked.is_none());
        assert!(cert.confirm(&cls).unwrap());
        let fixed = ClassLabel::sym(t(&[vec![2], vec![1; 21]].concat()));
        assert_eq!(vanishing_certificate(GroupKind::Sym, 23, &fixed, &cfg).unwrap(), Vanishing::Unknown);
    }

    #[test]
    fn jk1_examples() {
        let cfg = Config::default();
        assert!(jk1_certificate(&t(&[2, 1, 1, 1, 1]), 2, 6, GroupKind::Sym, &cfg)
            .unwrap()
            .is_some());
        let none = jk1_certificate(&t(&[vec![2], vec![1; 12]].concat()), 2, 14, GroupKind::Sym, &cfg);
        assert!(none.unwrap().is_none());
    }

    #[test]
    fn check_ids_parse() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!(matches!(run_check("nope", 5, &Config::default()), Err(Error::UnknownCheck(_))));
        assert_eq!(run_check("nr5", 5, &Config::default()).unwrap().status, CheckStatus::OutOfRange);
    }
}
