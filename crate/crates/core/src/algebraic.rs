//! Exact numbers of the form `a + b·√(±m)` with rational `a`, `b` and squarefree `m`.
//!
//! Split characters of A_n take values `(ε ± √(ε·h_1⋯h_d))/2`, which are complex
//! when the radicand is negative. The radicand sign is kept as a flag so the
//! value stays exact and zero-testing never touches floating point.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{contract, Result};

/// `a + b·√m` when `imaginary` is false, `a + b·i·√m` when it is true.
///
/// Canonical form: `b == 0` iff `m == 0`, and then `imaginary` is false;
/// `m == 1` only occurs together with `imaginary` (the value `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicValue {
    a: BigRational,
    b: BigRational,
    m: u64,
    imaginary: bool,
}

impl AlgebraicValue {
    pub fn zero() -> Self {
        AlgebraicValue::rational(BigRational::zero())
    }

    pub fn rational(a: BigRational) -> Self {
        AlgebraicValue {
            a,
            b: BigRational::zero(),
            m: 0,
            imaginary: false,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        AlgebraicValue::rational(BigRational::from_integer(v.into()))
    }

    /// `a + b·√radicand` for any integer radicand; square factors are pulled into `b`.
    pub fn quadratic(a: BigRational, b: BigRational, radicand: i64) -> Self {
        if b.is_zero() || radicand == 0 {
            return AlgebraicValue::rational(a);
        }
        let (square_root, free) = split_square(radicand.unsigned_abs());
        let b = b * BigRational::from_integer(BigInt::from(square_root));
        let imaginary = radicand < 0;
        if free == 1 && !imaginary {
            return AlgebraicValue::rational(a + b);
        }
        AlgebraicValue {
            a,
            b,
            m: free,
            imaginary,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_coefficient(&self) -> &BigRational {
        &self.b
    }

    /// Squarefree part of the radicand (0 for rational values).
    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_imaginary(&self) -> bool {
        self.imaginary
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    fn radical_key(&self) -> Option<(u64, bool)> {
        (!self.b.is_zero()).then_some((self.m, self.imaginary))
    }

    fn compatible(&self, other: &Self) -> Result<Option<(u64, bool)>> {
        match (self.radical_key(), other.radical_key()) {
            (None, k) | (k, None) => Ok(k),
            (Some(x), Some(y)) if x == y => Ok(Some(x)),
            _ => Err(contract(format!(
                "cannot combine {self} and {other}: different radicands"
            ))),
        }
    }

    fn with_key(a: BigRational, b: BigRational, key: Option<(u64, bool)>) -> Self {
        match key {
            Some((m, imaginary)) if !b.is_zero() => AlgebraicValue { a, b, m, imaginary },
            _ => AlgebraicValue::rational(a),
        }
    }

    /// Sum of two values sharing a radicand (or where one is rational).
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let key = self.compatible(other)?;
        Ok(Self::with_key(
            &self.a + &other.a,
            &self.b + &other.b,
            key,
        ))
    }

    /// Product of two values sharing a radicand (or where one is rational).
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let key = self.compatible(other)?;
        let square = match key {
            Some((m, imaginary)) => {
                let m = BigRational::from_integer(BigInt::from(m));
                if imaginary {
                    -m
                } else {
                    m
                }
            }
            None => BigRational::zero(),
        };
        let a = &self.a * &other.a + &self.b * &other.b * square;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::with_key(a, b, key))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::with_key(&self.a * factor, &self.b * factor, self.radical_key())
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        if self.imaginary {
            Self::with_key(self.a.clone(), -&self.b, self.radical_key())
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b·√(±m)`.
    pub fn galois_conj(&self) -> Self {
        Self::with_key(self.a.clone(), -&self.b, self.radical_key())
    }

    /// Approximate `(re, im)`, for display and plotting only.
    pub fn to_f64(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let root = (self.m as f64).sqrt();
        if self.imaginary {
            (a, b * root)
        } else {
            (a + b * root, 0.0)
        }
    }
}

impl Neg for &AlgebraicValue {
    type Output = AlgebraicValue;

    fn neg(self) -> AlgebraicValue {
        AlgebraicValue::with_key(-&self.a, -&self.b, self.radical_key())
    }
}

impl From<i64> for AlgebraicValue {
    fn from(v: i64) -> Self {
        AlgebraicValue::from_int(v)
    }
}

impl From<BigInt> for AlgebraicValue {
    fn from(v: BigInt) -> Self {
        AlgebraicValue::from_int(v)
    }
}

/// Total order used only to make spectra deterministic: numeric on the real
/// approximation, then structurally.
impl Ord for AlgebraicValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let (x, y) = (self.to_f64(), other.to_f64());
        x.0.total_cmp(&y.0)
            .then(x.1.total_cmp(&y.1))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.m.cmp(&other.m))
            .then_with(|| self.imaginary.cmp(&other.imaginary))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for AlgebraicValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn split_square(mut v: u64) -> (u64, u64) {
    let mut root = 1u64;
    let mut free = 1u64;
    let mut q = 2u64;
    while q * q <= v {
        while v % (q * q) == 0 {
            v /= q * q;
            root *= q;
        }
        if v % q == 0 {
            v /= q;
            free *= q;
        }
        q += 1;
    }
    (root, free * v)
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let root = if self.imaginary {
            format!("sqrt(-{})", self.m)
        } else {
            format!("sqrt({})", self.m)
        };
        let coeff = if self.b.abs().is_one() {
            root
        } else {
            format!("{}*{}", fmt_rational(&self.b.abs()), root)
        };
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}")
        } else {
            write!(f, "{}{sign}{coeff}", fmt_rational(&self.a))
        }
    }
}

#[derive(Serialize)]
struct AlgebraicJson {
    a_num: String,
    a_den: String,
    b_num: String,
    b_den: String,
    m: u64,
    imaginary: bool,
}

impl AlgebraicValue {
    fn json_fields(&self) -> AlgebraicJson {
        AlgebraicJson {
            a_num: self.a.numer().to_string(),
            a_den: self.a.denom().to_string(),
            b_num: self.b.numer().to_string(),
            b_den: self.b.denom().to_string(),
            m: self.m,
            imaginary: self.imaginary,
        }
    }

    /// The exact JSON object `{a_num, a_den, b_num, b_den, m, imaginary}`.
    /// Integers are decimal strings so that no precision is lost.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_fields()).expect("plain struct serializes")
    }
}

impl Serialize for AlgebraicValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_fields().serialize(serializer)
    }
}

/// Exact sum of values with arbitrary radicands.
///
/// `1` and the `√(±m)` for distinct squarefree `m` are linearly independent over
/// the rationals, so the sum is zero iff every coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadSum {
    rational: BigRational,
    radicals: BTreeMap<(u64, bool), BigRational>,
}

impl QuadSum {
    pub fn new() -> Self {
        QuadSum::default()
    }

    pub fn add_value(&mut self, v: &AlgebraicValue) {
        self.rational += &v.a;
        if let Some(key) = v.radical_key() {
            let slot = self.radicals.entry(key).or_insert_with(BigRational::zero);
            *slot += &v.b;
        }
    }

    pub fn add_scaled(&mut self, v: &AlgebraicValue, factor: &BigRational) {
        self.add_value(&v.scale(factor));
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radicals.values().all(Zero::is_zero)
    }

    /// Collapses to a single value when at most one radicand survives.
    pub fn to_value(&self) -> Option<AlgebraicValue> {
        let mut live = self.radicals.iter().filter(|(_, c)| !c.is_zero());
        match (live.next(), live.next()) {
            (None, _) => Some(AlgebraicValue::rational(self.rational.clone())),
            (Some((&(m, imaginary), b)), None) => Some(AlgebraicValue {
                a: self.rational.clone(),
                b: b.clone(),
                m,
                imaginary,
            }),
            _ => None,
        }
    }
}

impl Add<&AlgebraicValue> for QuadSum {
    type Output = QuadSum;

    fn add(mut self, rhs: &AlgebraicValue) -> QuadSum {
        self.add_value(rhs);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_forms() {
        let v = AlgebraicValue::quadratic(q(1, 2), q(1, 2), 20);
        assert_eq!(v.radicand(), 5);
        assert_eq!(v.irrational_coefficient(), &q(1, 1));
        let folded = AlgebraicValue::quadratic(q(1, 1), q(3, 1), 4);
        assert_eq!(folded, AlgebraicValue::from_int(7));
        assert!(folded.is_rational());
        let zero_b = AlgebraicValue::quadratic(q(2, 1), q(0, 1), 5);
        assert_eq!(zero_b.radicand(), 0);
        let i = AlgebraicValue::quadratic(q(0, 1), q(1, 1), -1);
        assert!(i.is_imaginary() && i.radicand() == 1);
    }

    #[test]
    fn conjugate_pairs_sum_to_rationals() {
        let w = AlgebraicValue::quadratic(q(-1, 2), q(1, 2), -3);
        let w_bar = w.galois_conj();
        assert_eq!(w.conj(), w_bar);
        let s = w.checked_add(&w_bar).unwrap();
        assert_eq!(s, AlgebraicValue::from_int(-1));
        // A primitive cube root of unity has norm 1.
        assert_eq!(w.checked_mul(&w.conj()).unwrap(), AlgebraicValue::from_int(1));
        let golden = AlgebraicValue::quadratic(q(1, 2), q(1, 2), 5);
        let g2 = golden.checked_mul(&golden).unwrap();
        assert_eq!(g2, golden.checked_add(&AlgebraicValue::from_int(1)).unwrap());
    }

    #[test]
    fn incompatible_radicands_are_rejected() {
        let a = AlgebraicValue::quadratic(q(0, 1), q(1, 1), 2);
        let b = AlgebraicValue::quadratic(q(0, 1), q(1, 1), 3);
        assert!(a.checked_add(&b).is_err());
        let mut sum = QuadSum::new();
        sum.add_value(&a);
        sum.add_value(&b);
        assert!(!sum.is_zero());
        assert!(sum.to_value().is_none());
        sum.add_value(&(-&a));
        sum.add_value(&(-&b));
        assert!(sum.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(AlgebraicValue::quadratic(q(1, 2), q(1, 2), 5).to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(AlgebraicValue::quadratic(q(-1, 2), q(-1, 2), -3).to_string(), "-1/2-1/2*sqrt(-3)");
        assert_eq!(AlgebraicValue::quadratic(q(0, 1), q(-1, 1), 7).to_string(), "-sqrt(7)");
        assert_eq!(AlgebraicValue::from_int(-6).to_string(), "-6");
    }

    #[test]
    fn json_shape() {
        let v = AlgebraicValue::quadratic(q(1, 2), q(-3, 2), -15);
        let j = v.to_json();
        assert_eq!(j["a_num"], "1");
        assert_eq!(j["b_num"], "-3");
        assert_eq!(j["b_den"], "2");
        assert_eq!(j["m"], 15);
        assert_eq!(j["imaginary"], true);
    }
}
