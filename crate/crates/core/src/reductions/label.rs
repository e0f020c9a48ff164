use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// One qubit party; `A` is qubit 0 (most significant in composite indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Party(u8);

impl Party {
    pub const A: Party = Party(0);
    pub const B: Party = Party(1);
    pub const C: Party = Party(2);
    pub const D: Party = Party(3);

    pub fn new(index: usize) -> Result<Self> {
        if index < 4 {
            Ok(Party(index as u8))
        } else {
            Err(Error::BadSubset(format!(
                "party index {index} outside A..D"
            )))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        (b'A' + self.0) as char
    }

    fn from_letter(ch: char) -> Option<Self> {
        let up = ch.to_ascii_uppercase();
        ('A'..='D').contains(&up).then(|| Party(up as u8 - b'A'))
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReductionKind {
    /// Ordinary partial trace down to two parties.
    PairTrace,
    /// One party against a paired group of two (three live parties).
    OneVsTwo,
    /// One party against a paired group of three.
    OneVsThree,
    /// Two paired groups of two.
    TwoVsTwo,
}

/// Names one bipartite qubit reduction of an `n_parties` system.
///
/// Each side is a group led by its first party; the remaining members of a
/// group are folded onto the leader through the bit-flip pairing pattern.
/// Parties on neither side are traced out. Labels are always built in
/// canonical form, so two labels are equal iff they name the same reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionLabel {
    kind: ReductionKind,
    n_parties: usize,
    x: Vec<Party>,
    y: Vec<Party>,
}

impl ReductionLabel {
    /// `rho_(a,b)`: trace out everything else.
    pub fn pair(a: Party, b: Party, n_parties: usize) -> Result<Self> {
        check_parties(&[a, b], n_parties)?;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(Self {
            kind: ReductionKind::PairTrace,
            n_parties,
            x: vec![lo],
            y: vec![hi],
        })
    }

    /// `x` against all remaining parties except `traced`.
    ///
    /// The live parties are taken in cyclic order starting after `x`; the
    /// first of them leads the group. For three live parties `A, B, C` this
    /// yields `(A,BC)`, `(B,CA)` and `(C,AB)`.
    pub fn one_vs_rest(x: Party, traced: Option<Party>, n_parties: usize) -> Result<Self> {
        let mut live: Vec<Party> = (0..n_parties)
            .map(|i| Party(i as u8))
            .filter(|p| Some(*p) != traced)
            .collect();
        check_parties(&[x], n_parties)?;
        if let Some(t) = traced {
            check_parties(&[t], n_parties)?;
            if t == x {
                return Err(Error::BadSubset(format!(
                    "{x} cannot be both kept and traced"
                )));
            }
        }
        let kind = match live.len() {
            3 => ReductionKind::OneVsTwo,
            4 => ReductionKind::OneVsThree,
            m => {
                return Err(Error::BadSubset(format!(
                    "one-vs-rest split needs 3 or 4 live parties, got {m}"
                )))
            }
        };
        let pos = live.iter().position(|p| *p == x).expect("x is live");
        live.rotate_left(pos);
        Ok(Self {
            kind,
            n_parties,
            x: vec![x],
            y: live[1..].to_vec(),
        })
    }

    /// `(A partner, rest)` on four parties.
    pub fn two_vs_two(partner_of_a: Party) -> Result<Self> {
        if partner_of_a == Party::A || partner_of_a.index() >= 4 {
            return Err(Error::BadSubset(format!(
                "partner of A must be one of B, C, D, got {partner_of_a}"
            )));
        }
        let y: Vec<Party> = (1..4)
            .map(|i| Party(i as u8))
            .filter(|p| *p != partner_of_a)
            .collect();
        Ok(Self {
            kind: ReductionKind::TwoVsTwo,
            n_parties: 4,
            x: vec![Party::A, partner_of_a],
            y,
        })
    }

    pub fn kind(&self) -> ReductionKind {
        self.kind
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    /// Group mapped onto the first output qubit, leader first.
    pub fn x_group(&self) -> &[Party] {
        &self.x
    }

    /// Group mapped onto the second output qubit, leader first.
    pub fn y_group(&self) -> &[Party] {
        &self.y
    }

    pub fn traced(&self) -> Vec<Party> {
        (0..self.n_parties)
            .map(|i| Party(i as u8))
            .filter(|p| !self.x.contains(p) && !self.y.contains(p))
            .collect()
    }

    /// Every reduction of a 3- or 4-party system in report order: pair
    /// traces, then one-vs-two and one-vs-three splits, then two-vs-two,
    /// each block sorted by its printed name.
    pub fn all(n_parties: usize) -> Result<Vec<Self>> {
        if !(3..=4).contains(&n_parties) {
            return Err(Error::WrongArity {
                expected: 3,
                got: n_parties,
            });
        }
        let parties: Vec<Party> = (0..n_parties).map(|i| Party(i as u8)).collect();
        let mut out = Vec::new();
        for (i, &a) in parties.iter().enumerate() {
            for &b in &parties[i + 1..] {
                out.push(Self::pair(a, b, n_parties)?);
            }
        }
        let mut splits = Vec::new();
        if n_parties == 3 {
            for &x in &parties {
                splits.push(Self::one_vs_rest(x, None, 3)?);
            }
        } else {
            for &t in &parties {
                for &x in parties.iter().filter(|p| **p != t) {
                    splits.push(Self::one_vs_rest(x, Some(t), 4)?);
                }
            }
            for &x in &parties {
                splits.push(Self::one_vs_rest(x, None, 4)?);
            }
            for partner in [Party::B, Party::C, Party::D] {
                splits.push(Self::two_vs_two(partner)?);
            }
        }
        splits.sort_by_key(|l| (l.kind, l.to_string()));
        out.extend(splits);
        Ok(out)
    }

    /// Parses labels such as `"A,BC"`, `"b,ca"`, `"(AB,CD)"` or `"CD,AB"`.
    ///
    /// Matching is by the party sets on each side, so group order within a
    /// side and the order of the sides do not matter.
    pub fn parse(text: &str, n_parties: usize) -> Result<Self> {
        let all = Self::all(n_parties)?;
        let bad = || Error::BadLabel {
            label: text.to_string(),
            valid: all
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        };
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let mut sides = cleaned.split(',');
        let (Some(left), Some(right), None) = (sides.next(), sides.next(), sides.next()) else {
            return Err(bad());
        };
        let to_set = |s: &str| -> Option<Vec<Party>> {
            let mut v = s
                .chars()
                .map(Party::from_letter)
                .collect::<Option<Vec<_>>>()?;
            v.sort();
            let len = v.len();
            v.dedup();
            (len > 0 && v.len() == len).then_some(v)
        };
        let (Some(l), Some(r)) = (to_set(left), to_set(right)) else {
            return Err(bad());
        };
        all.iter()
            .find(|lab| {
                let (mut x, mut y) = (lab.x.clone(), lab.y.clone());
                x.sort();
                y.sort();
                (x == l && y == r) || (x == r && y == l)
            })
            .cloned()
            .ok_or_else(bad)
    }
}

fn check_parties(ps: &[Party], n_parties: usize) -> Result<()> {
    if !(2..=4).contains(&n_parties) {
        return Err(Error::BadSubset(format!(
            "{n_parties} parties not supported"
        )));
    }
    for (i, p) in ps.iter().enumerate() {
        if p.index() >= n_parties || ps[..i].contains(p) {
            return Err(Error::BadSubset(format!(
                "party {p} invalid or repeated for {n_parties} parties"
            )));
        }
    }
    Ok(())
}

impl fmt::Display for ReductionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.x {
            write!(f, "{p}")?;
        }
        write!(f, ",")?;
        for p in &self.y {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Serialized as its printed name, e.g. `"B,CA"`.
impl Serialize for ReductionLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        ReductionLabel::all(n)
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect()
    }

    #[test]
    fn tripartite_order() {
        assert_eq!(names(3), ["A,B", "A,C", "B,C", "A,BC", "B,CA", "C,AB"]);
    }

    #[test]
    fn quadripartite_has_25_distinct() {
        let all = ReductionLabel::all(4).unwrap();
        assert_eq!(all.len(), 25);
        let mut s = names(4);
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 25);
        let count = |k| all.iter().filter(|l| l.kind() == k).count();
        assert_eq!(count(ReductionKind::PairTrace), 6);
        assert_eq!(count(ReductionKind::OneVsTwo), 12);
        assert_eq!(count(ReductionKind::OneVsThree), 4);
        assert_eq!(count(ReductionKind::TwoVsTwo), 3);
        let n = names(4);
        for expected in [
            "B,DA", "D,AB", "C,DB", "D,BC", "A,BCD", "B,CDA", "AB,CD", "AC,BD", "AD,BC",
        ] {
            assert!(n.contains(&expected.to_string()), "{expected}");
        }
    }

    #[test]
    fn parse_is_case_and_order_insensitive() {
        let bca = ReductionLabel::one_vs_rest(Party::B, None, 3).unwrap();
        for s in ["B,CA", "b,ac", " (B, CA) ", "CA,B"] {
            assert_eq!(ReductionLabel::parse(s, 3).unwrap(), bca, "{s}");
        }
        let acbd = ReductionLabel::two_vs_two(Party::C).unwrap();
        assert_eq!(ReductionLabel::parse("BD,AC", 4).unwrap(), acbd);
        assert_eq!(ReductionLabel::parse("b,a", 3).unwrap().to_string(), "A,B");
    }

    #[test]
    fn parse_rejects_and_lists_valid() {
        for s in ["A", "A,A", "A,BD", "A,B,C", "", "AB,C,", "X,Y"] {
            match ReductionLabel::parse(s, 3) {
                Err(Error::BadLabel { valid, .. }) => assert!(valid.contains("C,AB")),
                other => panic!("{s}: {other:?}"),
            }
        }
    }
}
