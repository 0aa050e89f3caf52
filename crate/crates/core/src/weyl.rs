//! Irreducible Weyl groups realized on their root systems.
//!
//! Simple roots follow the Bourbaki numbering. A group element is stored as
//! the permutation it induces on the full root list, which is exact and
//! hashable; no real matrices are involved.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Enumeration of the whole group is refused above this many elements.
pub const MAX_ENUMERATION: u128 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse Weyl type {0:?} (expected e.g. A4, B5, D6, G2, F4, E6, E7, E8)")]
    Parse(String),
    #[error("generator {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("ordering is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("scale exceeded: |W({0})| = {1} is too large to enumerate")]
    ScaleExceeded(WeylType, u128),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        !matches!(self, Family::A | Family::B | Family::D)
    }

    fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::G2 => "G",
            Family::F4 => "F",
            Family::E6 | Family::E7 | Family::E8 => "E",
        };
        f.write_str(s)
    }
}

/// An irreducible Weyl type such as `A4`, `D6` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylType {
    family: Family,
    rank: usize,
}

impl WeylType {
    pub fn new(family: Family, rank: usize) -> Result<Self, WeylError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            f => f.fixed_rank() == Some(rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(WeylError::InvalidRank { family, rank })
        }
    }

    pub fn a(rank: usize) -> Result<Self, WeylError> {
        Self::new(Family::A, rank)
    }

    pub fn b(rank: usize) -> Result<Self, WeylError> {
        Self::new(Family::B, rank)
    }

    pub fn d(rank: usize) -> Result<Self, WeylError> {
        Self::new(Family::D, rank)
    }

    /// The five exceptional types, in increasing rank.
    pub fn exceptional() -> [WeylType; 5] {
        [
            (Family::G2, 2),
            (Family::F4, 4),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
        ]
        .map(|(family, rank)| WeylType { family, rank })
    }

    /// Every type of rank at most `max_rank`, classical families first.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<WeylType> {
        let mut out = Vec::new();
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::D, 4)] {
            for rank in lo..=max_rank {
                out.push(WeylType { family, rank });
            }
        }
        out.extend(
            Self::exceptional()
                .into_iter()
                .filter(|t| t.rank <= max_rank),
        );
        out
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        self.family.is_exceptional()
    }

    /// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` in Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        match self.family {
            Family::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_n is short
                link(n - 1, n, -1, -2);
            }
            Family::D => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n, -1, -1);
            }
            Family::G2 => link(1, 2, -3, -1),
            Family::F4 => {
                link(1, 2, -1, -1);
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            Family::E6 | Family::E7 | Family::E8 => {
                link(1, 3, -1, -1);
                link(2, 4, -1, -1);
                (3..n).for_each(|i| link(i, i + 1, -1, -1));
            }
        }
        a
    }

    /// Orders `m_ij` of the products `s_i s_j`.
    pub fn coxeter_matrix(self) -> Vec<Vec<u32>> {
        let a = self.cartan_matrix();
        let n = self.rank;
        let mut m = vec![vec![1; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[i][j] = match a[i][j] * a[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        p => unreachable!("not a crystallographic Cartan product: {p}"),
                    };
                }
            }
        }
        m
    }

    pub fn coxeter_number(self) -> u32 {
        let n = self.rank as u32;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n,
            Family::D => 2 * n - 2,
            Family::G2 => 6,
            Family::F4 | Family::E6 => 12,
            Family::E7 => 18,
            Family::E8 => 30,
        }
    }

    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }

    pub fn group_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::G2 => 12,
            Family::F4 => 1152,
            Family::E6 => 51_840,
            Family::E7 => 2_903_040,
            Family::E8 => 696_729_600,
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for WeylType {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || WeylError::Parse(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(err)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        let family = match (letter, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('D', _) => Family::D,
            ('G', 2) => Family::G2,
            ('F', 4) => Family::F4,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            _ => return Err(err()),
        };
        Self::new(family, rank)
    }
}

/// A word in the simple reflections; letters are 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A group element, as the permutation it induces on the root list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement(Vec<u16>);

impl WeylElement {
    fn identity(size: usize) -> Self {
        Self((0..size as u16).collect())
    }

    /// `self * other`, i.e. first apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn image(&self, root: usize) -> usize {
        self.0[root] as usize
    }
}

/// Roots of an irreducible Weyl type together with the generator actions.
///
/// Roots `0..N` are positive (sorted by height), and root `i + N` is the
/// negative of root `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    weyl_type: WeylType,
    roots: Vec<Vec<i32>>,
    positive: usize,
    reflections: Vec<WeylElement>,
}

impl RootSystem {
    pub fn new(t: WeylType) -> Self {
        let cartan = t.cartan_matrix();
        let n = t.rank();
        let reflect = |beta: &[i32], i: usize| -> Vec<i32> {
            let pairing: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };

        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let img = reflect(&beta, i);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }

        let mut positive: Vec<Vec<i32>> = seen
            .iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positive.len();
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()),
        );
        debug_assert_eq!(roots.len(), seen.len());

        let index: std::collections::HashMap<&[i32], usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.as_slice(), i))
            .collect();
        let reflections = (0..n)
            .map(|i| {
                WeylElement(
                    roots
                        .iter()
                        .map(|r| index[reflect(r, i).as_slice()] as u16)
                        .collect(),
                )
            })
            .collect();

        Self {
            weyl_type: t,
            roots,
            positive: npos,
            reflections,
        }
    }

    pub fn weyl_type(&self) -> WeylType {
        self.weyl_type
    }

    pub fn rank(&self) -> usize {
        self.weyl_type.rank()
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.positive
    }

    /// Action of the simple reflection `s_i` (1-based).
    pub fn reflection(&self, i: usize) -> Result<&WeylElement, WeylError> {
        self.check_letter(i)?;
        Ok(&self.reflections[i - 1])
    }

    fn check_letter(&self, letter: usize) -> Result<(), WeylError> {
        if letter == 0 || letter > self.rank() {
            return Err(WeylError::LetterOutOfRange {
                letter,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.roots.len())
    }

    /// The element `s_{i_1} s_{i_2} ... s_{i_k}` named by a word.
    pub fn element(&self, w: &WeylWord) -> Result<WeylElement, WeylError> {
        let mut acc = self.identity();
        for &letter in w.letters() {
            self.check_letter(letter)?;
            acc = acc.compose(&self.reflections[letter - 1]);
        }
        Ok(acc)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        (0..self.positive)
            .filter(|&r| !self.is_positive(w.image(r)))
            .count()
    }

    pub fn word_length(&self, w: &WeylWord) -> Result<usize, WeylError> {
        Ok(self.length(&self.element(w)?))
    }

    pub fn order(&self, w: &WeylElement) -> usize {
        let mut k = 1;
        let mut p = w.clone();
        while !p.is_identity() {
            p = p.compose(w);
            k += 1;
        }
        k
    }

    pub fn element_order(&self, w: &WeylWord) -> Result<usize, WeylError> {
        Ok(self.order(&self.element(w)?))
    }

    /// All elements of `W`, by breadth-first search from the identity.
    pub fn enumerate(&self) -> Result<Vec<WeylElement>, WeylError> {
        let t = self.weyl_type;
        if t.group_order() > MAX_ENUMERATION {
            return Err(WeylError::ScaleExceeded(t, t.group_order()));
        }
        let id = self.identity();
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &self.reflections {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }
}

/// The Coxeter word listing each generator once, in the given order.
pub fn coxeter_element(t: WeylType, ordering: &[usize]) -> Result<WeylWord, WeylError> {
    let n = t.rank();
    let mut seen = vec![false; n + 1];
    if ordering.len() != n {
        return Err(WeylError::NotAPermutation(n));
    }
    for &i in ordering {
        if i == 0 || i > n || seen[i] {
            return Err(WeylError::NotAPermutation(n));
        }
        seen[i] = true;
    }
    Ok(WeylWord(ordering.to_vec()))
}

/// The Coxeter word `s_1 s_2 ... s_n`.
pub fn standard_coxeter_word(t: WeylType) -> WeylWord {
    WeylWord((1..=t.rank()).collect())
}

/// All permutations of `1..=n` in lexicographic order.
pub fn orderings(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Brute-force check that the Coxeter elements of all `rank!` generator
/// orderings lie in a single conjugacy class.
pub fn coxeter_conjugacy_check(t: WeylType) -> Result<bool, WeylError> {
    let sys = RootSystem::new(t);
    let group = sys.enumerate()?;
    let first = sys.element(&standard_coxeter_word(t))?;
    let class: HashSet<WeylElement> = group
        .iter()
        .map(|g| g.compose(&first).compose(&g.inverse()))
        .collect();
    for ord in orderings(t.rank()) {
        let c = sys.element(&coxeter_element(t, &ord)?)?;
        if !class.contains(&c) {
            return Ok(false);
        }
    }
    Ok(true)
}
