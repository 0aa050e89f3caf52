//! Labels of irreducible characters: partitions (type A), ordered
//! bipartitions (type B), unordered bipartitions with a split tag (type D),
//! and `(d, e)` pairs for the exceptional types.
//!
//! String grammar: partitions are comma-separated parts (`4,1,1`), the empty
//! partition is `-`, bipartitions are `alpha|beta`, split type-D labels take
//! a trailing `+` or `-`, exceptional labels are `d,e` followed by an
//! optional `'` or `''`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::tables;
use crate::weyl::{Family, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("cannot parse label {0:?}")]
    Parse(String),
    #[error("{label} does not label an irreducible character of type {weyl_type}")]
    NotForType { label: String, weyl_type: WeylType },
}

/// A partition, stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(k, 1^(n-k))` as a partition of `n`.
    pub fn hook(n: u32, k: u32) -> Self {
        assert!(1 <= k && k <= n, "hook arm {k} out of range for {n}");
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, (n - k) as usize));
        Self(parts)
    }

    /// The conjugate partition.
    pub fn conjugate(&self) -> Self {
        let Some(&first) = self.0.first() else {
            return Self::empty();
        };
        Self(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Order used for type-D canonical pairs: smaller size first, then
    /// lexicographic on parts.
    fn d_order(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All partitions of `n`, from `(n)` down to `(1^n)` in reverse
/// lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// If `lambda = (k, 1, ..., 1)` is a hook, returns its arm length `k`.
pub fn hook_decompose(lambda: &Partition) -> Option<u32> {
    let (&first, rest) = lambda.parts().split_first()?;
    rest.iter().all(|&p| p == 1).then_some(first)
}

/// Split tag for a type-D label `{alpha, alpha}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Split {
    None,
    Plus,
    Minus,
}

/// Prime mark on an exceptional label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prime {
    None,
    Prime,
    DoublePrime,
}

impl Prime {
    fn suffix(self) -> &'static str {
        match self {
            Prime::None => "",
            Prime::Prime => "'",
            Prime::DoublePrime => "''",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    TypeA(Partition),
    TypeB {
        alpha: Partition,
        beta: Partition,
    },
    /// Unordered pair, stored with the smaller partition first.
    TypeD {
        first: Partition,
        second: Partition,
        split: Split,
    },
    Exc {
        d: u32,
        e: u32,
        prime: Prime,
    },
}

impl CharLabel {
    pub fn type_b(alpha: Partition, beta: Partition) -> Self {
        CharLabel::TypeB { alpha, beta }
    }

    /// Canonicalizes the unordered pair. A split tag is only accepted for
    /// equal partitions, and equal partitions require one.
    pub fn type_d(p: Partition, q: Partition, split: Split) -> Option<Self> {
        let (first, second) = if p.d_order(&q) == Ordering::Greater {
            (q, p)
        } else {
            (p, q)
        };
        if (first == second) == (split == Split::None) {
            return None;
        }
        Some(CharLabel::TypeD {
            first,
            second,
            split,
        })
    }

    pub fn exc(d: u32, e: u32, prime: Prime) -> Self {
        CharLabel::Exc { d, e, prime }
    }

    /// Whether this label names an irreducible character of `W(t)`.
    pub fn is_valid_for(&self, t: WeylType) -> bool {
        let n = t.rank() as u32;
        match (self, t.family()) {
            (CharLabel::TypeA(p), Family::A) => p.size() == n + 1,
            (CharLabel::TypeB { alpha, beta }, Family::B) => alpha.size() + beta.size() == n,
            (
                CharLabel::TypeD {
                    first,
                    second,
                    split,
                },
                Family::D,
            ) => {
                first.size() + second.size() == n
                    && first.d_order(second) != Ordering::Greater
                    && (first == second) != (*split == Split::None)
            }
            (CharLabel::Exc { d, e, prime }, f) if f.is_exceptional() => {
                tables::exceptional_labels(f).contains(&(*d, *e, *prime))
            }
            _ => false,
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::TypeA(p) => write!(f, "{p}"),
            CharLabel::TypeB { alpha, beta } => write!(f, "{alpha}|{beta}"),
            CharLabel::TypeD {
                first,
                second,
                split,
            } => {
                write!(f, "{first}|{second}")?;
                match split {
                    Split::None => Ok(()),
                    Split::Plus => f.write_str("+"),
                    Split::Minus => f.write_str("-"),
                }
            }
            CharLabel::Exc { d, e, prime } => write!(f, "{d},{e}{}", prime.suffix()),
        }
    }
}

fn parse_partition(s: &str) -> Option<Partition> {
    let s = s.trim();
    if s == "-" {
        return Some(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().ok().filter(|&x| x > 0))
        .collect::<Option<Vec<u32>>>()?;
    Some(Partition::new(parts))
}

/// Splits `alpha|beta[+-]` into its two partitions and split tag.
fn parse_bipartition(s: &str) -> Option<(Partition, Partition, Split)> {
    let (a, b) = s.split_once('|')?;
    let b = b.trim();
    let (b, split) = if b == "-" {
        (b, Split::None)
    } else if let Some(rest) = b.strip_suffix('+') {
        (rest, Split::Plus)
    } else if let Some(rest) = b.strip_suffix('-').or_else(|| b.strip_suffix('\u{2212}')) {
        (rest, Split::Minus)
    } else {
        (b, Split::None)
    };
    Some((parse_partition(a)?, parse_partition(b)?, split))
}

fn parse_exceptional(s: &str) -> Option<CharLabel> {
    let s = s.trim();
    let (body, prime) = if let Some(b) = s.strip_suffix("''").or_else(|| s.strip_suffix('"')) {
        (b, Prime::DoublePrime)
    } else if let Some(b) = s.strip_suffix('\'') {
        (b, Prime::Prime)
    } else {
        (s, Prime::None)
    };
    let body = body
        .trim()
        .trim_start_matches(['(', 'φ'])
        .trim_end_matches(')');
    let (d, e) = body.split_once(',')?;
    Some(CharLabel::exc(
        d.trim().parse().ok()?,
        e.trim().parse().ok()?,
        prime,
    ))
}

/// Parses a label string for type `t`.
///
/// Returns [`LabelError::Parse`] for malformed input and
/// [`LabelError::NotForType`] for well-formed labels that do not name a
/// character of `W(t)`.
pub fn parse_label(t: WeylType, s: &str) -> Result<CharLabel, LabelError> {
    let parse_err = || LabelError::Parse(s.to_string());
    let label = match t.family() {
        Family::A => CharLabel::TypeA(parse_partition(s).ok_or_else(parse_err)?),
        Family::B => {
            let (alpha, beta, split) = parse_bipartition(s).ok_or_else(parse_err)?;
            if split != Split::None {
                return Err(LabelError::NotForType {
                    label: s.to_string(),
                    weyl_type: t,
                });
            }
            CharLabel::type_b(alpha, beta)
        }
        Family::D => {
            let (p, q, split) = parse_bipartition(s).ok_or_else(parse_err)?;
            CharLabel::type_d(p, q, split).ok_or_else(|| LabelError::NotForType {
                label: s.to_string(),
                weyl_type: t,
            })?
        }
        _ => parse_exceptional(s).ok_or_else(parse_err)?,
    };
    if label.is_valid_for(t) {
        Ok(label)
    } else {
        Err(LabelError::NotForType {
            label: label.to_string(),
            weyl_type: t,
        })
    }
}

/// Every irreducible-character label of `W(t)`, without duplicates.
pub fn enumerate_labels(t: WeylType) -> Vec<CharLabel> {
    let n = t.rank() as u32;
    match t.family() {
        Family::A => partitions(n + 1)
            .into_iter()
            .map(CharLabel::TypeA)
            .collect(),
        Family::B => (0..=n)
            .rev()
            .flat_map(|k| {
                let betas = partitions(n - k);
                partitions(k).into_iter().flat_map(move |alpha| {
                    betas
                        .clone()
                        .into_iter()
                        .map(move |beta| CharLabel::type_b(alpha.clone(), beta))
                })
            })
            .collect(),
        Family::D => {
            let mut out = Vec::new();
            for k in 0..=n / 2 {
                for p in partitions(k) {
                    for q in partitions(n - k) {
                        match p.d_order(&q) {
                            Ordering::Less => out.push(CharLabel::TypeD {
                                first: p.clone(),
                                second: q,
                                split: Split::None,
                            }),
                            Ordering::Equal => {
                                for split in [Split::Plus, Split::Minus] {
                                    out.push(CharLabel::TypeD {
                                        first: p.clone(),
                                        second: q.clone(),
                                        split,
                                    });
                                }
                            }
                            Ordering::Greater => {}
                        }
                    }
                }
            }
            out
        }
        f => tables::exceptional_labels(f)
            .iter()
            .map(|&(d, e, prime)| CharLabel::exc(d, e, prime))
            .collect(),
    }
}

pub fn label_count(t: WeylType) -> usize {
    enumerate_labels(t).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn ty(s: &str) -> WeylType {
        s.parse().unwrap()
    }

    fn count_partitions(n: u32) -> usize {
        // p(n) via the pentagonal-number-free recurrence on largest part
        fn q(n: i64, k: i64) -> usize {
            if n == 0 {
                return 1;
            }
            if n < 0 || k == 0 {
                return 0;
            }
            q(n - k, k) + q(n, k - 1)
        }
        q(i64::from(n), i64::from(n))
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        for n in 0..12 {
            assert_eq!(partitions(n).len(), count_partitions(n), "n={n}");
        }
    }

    #[test]
    fn type_a_labels() {
        let labels: Vec<String> = enumerate_labels(ty("A2"))
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(labels, ["3", "2,1", "1,1,1"]);
        assert_eq!(label_count(ty("A3")), 5);
    }

    #[test]
    fn type_b_labels() {
        let labels: Vec<String> = enumerate_labels(ty("B2"))
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(labels, ["2|-", "1,1|-", "1|1", "-|2", "-|1,1"]);
        // sum_k p(k) p(n-k)
        for n in 2..9u32 {
            let expected: usize = (0..=n)
                .map(|k| count_partitions(k) * count_partitions(n - k))
                .sum();
            assert_eq!(label_count(WeylType::b(n as usize).unwrap()), expected);
        }
    }

    #[test]
    fn type_d_labels() {
        assert_eq!(label_count(ty("D4")), 13);
        for n in 4..10u32 {
            let ordered: usize = (0..=n)
                .map(|k| count_partitions(k) * count_partitions(n - k))
                .sum();
            let diagonal = if n % 2 == 0 {
                count_partitions(n / 2)
            } else {
                0
            };
            let expected = (ordered - diagonal) / 2 + 2 * diagonal;
            let labels = enumerate_labels(WeylType::d(n as usize).unwrap());
            assert_eq!(labels.len(), expected, "D{n}");
            let distinct: HashSet<_> = labels.iter().collect();
            assert_eq!(distinct.len(), labels.len());
        }
    }

    #[test]
    fn exceptional_labels() {
        let g2: Vec<String> = enumerate_labels(ty("G2"))
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(g2, ["1,0", "1,6", "1,3'", "1,3''", "2,1", "2,2"]);
        assert_eq!(label_count(ty("F4")), 25);
        assert_eq!(label_count(ty("E6")), 25);
        assert_eq!(label_count(ty("E7")), 60);
        assert_eq!(label_count(ty("E8")), 112);
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_decompose(&p(&[4])), Some(4));
        assert_eq!(hook_decompose(&p(&[2, 1, 1])), Some(2));
        assert_eq!(hook_decompose(&p(&[1, 1, 1])), Some(1));
        assert_eq!(hook_decompose(&p(&[2, 2])), None);
        assert_eq!(hook_decompose(&Partition::empty()), None);
        assert_eq!(Partition::hook(5, 2), p(&[2, 1, 1, 1]));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn parsing() {
        assert_eq!(
            parse_label(ty("A3"), "2,2").unwrap(),
            CharLabel::TypeA(p(&[2, 2]))
        );
        assert_eq!(
            parse_label(ty("A3"), "1,1,2").unwrap(),
            CharLabel::TypeA(p(&[2, 1, 1]))
        );
        assert!(matches!(
            parse_label(ty("A3"), "2,1"),
            Err(LabelError::NotForType { .. })
        ));
        assert!(matches!(
            parse_label(ty("A3"), "x"),
            Err(LabelError::Parse(_))
        ));
        assert!(matches!(
            parse_label(ty("A3"), "2,0,2"),
            Err(LabelError::Parse(_))
        ));

        assert_eq!(
            parse_label(ty("B4"), "-|1,1,2").unwrap(),
            CharLabel::type_b(Partition::empty(), p(&[2, 1, 1]))
        );
        assert!(matches!(
            parse_label(ty("B4"), "2|2+"),
            Err(LabelError::NotForType { .. })
        ));
        assert!(matches!(
            parse_label(ty("B4"), "4"),
            Err(LabelError::Parse(_))
        ));

        let d = parse_label(ty("D4"), "1,2|1").unwrap();
        assert_eq!(d, parse_label(ty("D4"), "1|2,1").unwrap());
        assert_eq!(d.to_string(), "1|2,1");
        assert_eq!(parse_label(ty("D4"), "2|2+").unwrap().to_string(), "2|2+");
        assert_eq!(
            parse_label(ty("D4"), "2|2\u{2212}").unwrap().to_string(),
            "2|2-"
        );
        assert!(matches!(
            parse_label(ty("D4"), "2|2"),
            Err(LabelError::NotForType { .. })
        ));
        assert!(matches!(
            parse_label(ty("D4"), "1|2,1+"),
            Err(LabelError::NotForType { .. })
        ));
        assert_eq!(parse_label(ty("D4"), "-|4").unwrap().to_string(), "-|4");
        assert_eq!(parse_label(ty("D4"), "4|-").unwrap().to_string(), "-|4");

        assert_eq!(
            parse_label(ty("E8"), "4096,12").unwrap(),
            CharLabel::exc(4096, 12, Prime::None)
        );
        assert_eq!(
            parse_label(ty("G2"), "1,3''").unwrap(),
            CharLabel::exc(1, 3, Prime::DoublePrime)
        );
        assert_eq!(
            parse_label(ty("G2"), "(1,3)'").unwrap(),
            CharLabel::exc(1, 3, Prime::Prime)
        );
        assert!(matches!(
            parse_label(ty("G2"), "1,3"),
            Err(LabelError::NotForType { .. })
        ));
        assert!(matches!(
            parse_label(ty("E8"), "4096"),
            Err(LabelError::Parse(_))
        ));
    }

    #[test]
    fn every_enumerated_label_round_trips_through_its_string() {
        for t in WeylType::all_up_to_rank(8) {
            for label in enumerate_labels(t) {
                assert!(label.is_valid_for(t), "{t} {label}");
                assert_eq!(parse_label(t, &label.to_string()).unwrap(), label, "{t}");
            }
        }
    }

    proptest! {
        #[test]
        fn hook_iff_at_most_one_part_above_one(parts in prop::collection::vec(1u32..6, 1..7)) {
            let lambda = Partition::new(parts);
            let big = lambda.parts().iter().filter(|&&x| x > 1).count();
            prop_assert_eq!(hook_decompose(&lambda).is_some(), big <= 1);
        }
    }
}
