//! Labels for irreducible characters and conjugacy classes of S_n and A_n.
//!
//! Textual forms: characters are `[4,1]` or `[3,1,1]+`, classes are `(3,1,1)` or
//! `(5)-`. A trailing sign names one half of a split character or class.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{contract, Error, Result};
use crate::partition::{parse_list, write_list, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Sym,
    Alt,
}

impl GroupKind {
    pub fn symbol(self) -> &'static str {
        match self {
            GroupKind::Sym => "S",
            GroupKind::Alt => "A",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "Sym" | "sym" | "s" => Ok(GroupKind::Sym),
            "A" | "Alt" | "alt" | "a" => Ok(GroupKind::Alt),
            other => Err(Error::Parse(format!("unknown group `{other}` (use S or A)"))),
        }
    }
}

impl Serialize for GroupKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// Which half of a split character or class, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Whole,
    Plus,
    Minus,
}

impl Half {
    pub fn is_split(self) -> bool {
        self != Half::Whole
    }

    pub fn swapped(self) -> Half {
        match self {
            Half::Whole => Half::Whole,
            Half::Plus => Half::Minus,
            Half::Minus => Half::Plus,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Half::Whole => "",
            Half::Plus => "+",
            Half::Minus => "-",
        }
    }

    fn strip(s: &str) -> (&str, Half) {
        let s = s.trim();
        if let Some(rest) = s.strip_suffix('+') {
            (rest, Half::Plus)
        } else if let Some(rest) = s.strip_suffix('-') {
            (rest, Half::Minus)
        } else {
            (s, Half::Whole)
        }
    }
}

/// Names an irreducible character of S_n or A_n.
///
/// For A_n the partition is the larger of `{λ, λ'}` in lexicographic order, since
/// `λ` and its transpose restrict to the same character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterLabel {
    pub lambda: Partition,
    pub split: Half,
    pub group: GroupKind,
}

impl CharacterLabel {
    pub fn sym(lambda: Partition) -> Self {
        CharacterLabel {
            lambda,
            split: Half::Whole,
            group: GroupKind::Sym,
        }
    }

    /// A_n character; `split` must be set exactly when `lambda` is symmetric.
    pub fn alt(lambda: Partition, split: Half) -> Result<Self> {
        if character_splits(&lambda) != split.is_split() {
            return Err(contract(format!(
                "A_n character {lambda}{}: split half required iff the diagram is symmetric",
                split.suffix()
            )));
        }
        let conj = lambda.transpose();
        let lambda = if conj > lambda { conj } else { lambda };
        Ok(CharacterLabel {
            lambda,
            split,
            group: GroupKind::Alt,
        })
    }

    pub fn validate(&self) -> Result<()> {
        match self.group {
            GroupKind::Sym if self.split.is_split() => {
                Err(contract(format!("S_n character {self} cannot be split")))
            }
            GroupKind::Alt if self.split.is_split() != character_splits(&self.lambda) => Err(
                contract(format!("A_n character {self}: split iff symmetric diagram")),
            ),
            _ => Ok(()),
        }
    }

    pub fn n(&self) -> u32 {
        self.lambda.size()
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lambda, self.split.suffix())
    }
}

/// Parses `[3,1,1]+`; the group is A when a half is given, S otherwise.
impl FromStr for CharacterLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, split) = Half::strip(s);
        let lambda: Partition = body.parse()?;
        let label = CharacterLabel {
            lambda,
            split,
            group: if split.is_split() {
                GroupKind::Alt
            } else {
                GroupKind::Sym
            },
        };
        label.validate().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(label)
    }
}

impl Serialize for CharacterLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Names a conjugacy class of S_n or A_n by cycle type (fixed points included as 1s).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub cycle_type: Partition,
    pub split: Half,
    pub group: GroupKind,
}

/// True iff the permutations of this cycle type are even.
pub fn is_even_type(cycle_type: &Partition) -> bool {
    cycle_type.parts().iter().filter(|&&c| c % 2 == 0).count() % 2 == 0
}

/// An S_n class splits into two A_n classes iff its parts are distinct and odd
/// (and n ≥ 2, since A_1 = S_1).
pub fn class_splits(cycle_type: &Partition) -> bool {
    let parts = cycle_type.parts();
    cycle_type.size() >= 2
        && parts.iter().all(|c| c % 2 == 1)
        && parts.windows(2).all(|w| w[0] != w[1])
}

/// An S_n character restricts reducibly to A_n iff its diagram is symmetric and n ≥ 2.
pub fn character_splits(lambda: &Partition) -> bool {
    lambda.size() >= 2 && lambda.is_symmetric()
}

impl ClassLabel {
    pub fn sym(cycle_type: Partition) -> Self {
        ClassLabel {
            cycle_type,
            split: Half::Whole,
            group: GroupKind::Sym,
        }
    }

    pub fn alt(cycle_type: Partition, split: Half) -> Result<Self> {
        let label = ClassLabel {
            cycle_type,
            split,
            group: GroupKind::Alt,
        };
        label.validate()?;
        Ok(label)
    }

    pub fn validate(&self) -> Result<()> {
        match self.group {
            GroupKind::Sym if self.split.is_split() => {
                Err(contract(format!("S_n class {self} cannot be split")))
            }
            GroupKind::Alt if !is_even_type(&self.cycle_type) => {
                Err(contract(format!("class {self} is odd, not contained in A_n")))
            }
            GroupKind::Alt if self.split.is_split() != class_splits(&self.cycle_type) => Err(
                contract(format!(
                    "A_n class {self}: a half is required iff parts are distinct and odd"
                )),
            ),
            _ => Ok(()),
        }
    }

    pub fn n(&self) -> u32 {
        self.cycle_type.size()
    }

    pub fn is_identity(&self) -> bool {
        self.cycle_type.parts().iter().all(|&c| c == 1)
    }

    /// Parses `(5)+` for the given group. A missing half on a class that splits
    /// in A_n is an error.
    pub fn parse_in(s: &str, group: GroupKind) -> Result<Self> {
        let (body, split) = Half::strip(s);
        let cycle_type = Partition::from_multiset(parse_list(body, '(', ')')?)
            .map_err(|e| Error::Parse(e.to_string()))?;
        let label = ClassLabel {
            cycle_type,
            split,
            group,
        };
        label.validate().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(label)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.cycle_type.parts(), '(', ')')?;
        f.write_str(self.split.suffix())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_criteria() {
        let t = |v: &[u32]| Partition::from_multiset(v.to_vec()).unwrap();
        assert!(class_splits(&t(&[7])));
        assert!(!class_splits(&t(&[3, 3])));
        assert!(class_splits(&t(&[5, 3, 1])));
        assert!(!class_splits(&t(&[3, 1, 1])));
        assert!(!character_splits(&Partition::row(5)));
        assert!(character_splits(&t(&[3, 1, 1])));
    }

    #[test]
    fn class_label_round_trip() {
        let c = ClassLabel::parse_in("(5)+", GroupKind::Alt).unwrap();
        assert_eq!(c.to_string(), "(5)+");
        let c = ClassLabel::parse_in("(1,3,1)", GroupKind::Sym).unwrap();
        assert_eq!(c.to_string(), "(3,1,1)");
        assert!(ClassLabel::parse_in("(5)", GroupKind::Alt).is_err());
        assert!(ClassLabel::parse_in("(2,1)", GroupKind::Alt).is_err());
        assert!(ClassLabel::parse_in("(3,3)+", GroupKind::Alt).is_err());
    }

    #[test]
    fn character_label_round_trip() {
        let c: CharacterLabel = "[3,1,1]+".parse().unwrap();
        assert_eq!(c.group, GroupKind::Alt);
        assert_eq!(c.to_string(), "[3,1,1]+");
        assert!("[4,1]+".parse::<CharacterLabel>().is_err());
        let a = CharacterLabel::alt("[2,1,1,1]".parse().unwrap(), Half::Whole).unwrap();
        assert_eq!(a.lambda, "[4,1]".parse().unwrap());
        assert!(CharacterLabel::alt("[2,1]".parse().unwrap(), Half::Whole).is_err());
    }
}
