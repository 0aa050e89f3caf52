//! The non-abelian Fourier pairing on `M(G)` for small finite groups.
//!
//! Groups are read from a line-oriented text format:
//!
//! ```text
//! # comment
//! name Z2
//! order 2
//! identity 0
//! table
//! 0 1
//! 1 0
//! class 0
//! char 1 1
//! char 1 -1
//! class 1
//! ...
//! ```
//!
//! Row `a` of the table lists the products `a*b` for `b = 0..order`. Each
//! `class <x>` block names one conjugacy class representative and lists the
//! irreducible characters of its centralizer, one `char` line each. Values
//! are given on the centralizer elements in increasing index order and use
//! the [`Cyclo`] grammar (`-1/2`, `E(3)^2`, `i`, ...).

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::{Cyclo, CycloError};

#[derive(Debug, Error)]
pub enum FourierError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("not a group: {0}")]
    InvalidGroup(String),
    #[error("bad centralizer characters: {0}")]
    InvalidCharacters(String),
    #[error("no class [{x}, {sigma}] in this group")]
    UnknownClass { x: usize, sigma: usize },
}

#[derive(Debug, Clone)]
struct Centralizer {
    rep: usize,
    /// Sorted element indices of `C(rep)`.
    elements: Vec<usize>,
    chars: Vec<Vec<Cyclo>>,
}

impl Centralizer {
    fn value(&self, sigma: usize, z: usize) -> Option<&Cyclo> {
        let pos = self.elements.binary_search(&z).ok()?;
        Some(&self.chars[sigma][pos])
    }
}

#[derive(Debug, Clone)]
pub struct GroupData {
    name: String,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    classes: Vec<Centralizer>,
}

/// A representative `[x, sigma]` of a point of `M(G)`: `x` is one of the
/// fixture's class representatives and `sigma` indexes its centralizer
/// characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MClass {
    pub x: usize,
    pub sigma: usize,
}

impl fmt::Display for MClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.sigma)
    }
}

/// A pair `(x, sigma)` with `x` arbitrary, `sigma` given by its values on
/// the sorted elements of `C(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pair {
    pub x: usize,
    pub centralizer: Vec<usize>,
    pub values: Vec<Cyclo>,
}

impl Pair {
    fn value(&self, z: usize) -> &Cyclo {
        let pos = self
            .centralizer
            .binary_search(&z)
            .expect("element commutes with x");
        &self.values[pos]
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> FourierError {
    FourierError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_index(line: usize, s: Option<&str>, what: &str) -> Result<usize, FourierError> {
    s.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad {what}")))
}

impl GroupData {
    pub fn parse(text: &str) -> Result<Self, FourierError> {
        let mut name = String::new();
        let mut order: Option<usize> = None;
        let mut identity: Option<usize> = None;
        let mut table: Vec<Vec<usize>> = Vec::new();
        let mut in_table = false;
        let mut raw_classes: Vec<(usize, Vec<Vec<Cyclo>>)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().unwrap_or_default();
            if in_table && head.chars().all(|c| c.is_ascii_digit()) {
                let row = content
                    .split_whitespace()
                    .map(|w| {
                        w.parse::<usize>()
                            .map_err(|_| parse_err(line, "bad table entry"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                table.push(row);
                continue;
            }
            in_table = false;
            match head {
                "name" => name = words.collect::<Vec<_>>().join(" "),
                "order" => order = Some(parse_index(line, words.next(), "order")?),
                "identity" => identity = Some(parse_index(line, words.next(), "identity")?),
                "table" => {
                    if !table.is_empty() {
                        return Err(parse_err(line, "second table"));
                    }
                    in_table = true;
                }
                "class" => raw_classes.push((
                    parse_index(line, words.next(), "class representative")?,
                    Vec::new(),
                )),
                "char" => {
                    let (_, chars) = raw_classes
                        .last_mut()
                        .ok_or_else(|| parse_err(line, "char before any class"))?;
                    let values = words
                        .map(|w| {
                            w.parse::<Cyclo>()
                                .map_err(|e: CycloError| parse_err(line, e.to_string()))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    chars.push(values);
                }
                other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
            }
        }

        let order = order.ok_or_else(|| parse_err(0, "missing order"))?;
        let identity = identity.ok_or_else(|| parse_err(0, "missing identity"))?;
        Self::from_parts(name, order, identity, table, raw_classes)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, FourierError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| FourierError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn from_parts(
        name: String,
        order: usize,
        identity: usize,
        mult: Vec<Vec<usize>>,
        raw_classes: Vec<(usize, Vec<Vec<Cyclo>>)>,
    ) -> Result<Self, FourierError> {
        let bad = |m: String| FourierError::InvalidGroup(m);
        if order == 0 {
            return Err(bad("order must be positive".into()));
        }
        if mult.len() != order || mult.iter().any(|r| r.len() != order) {
            return Err(bad(format!("table must be {order}x{order}")));
        }
        if mult.iter().flatten().any(|&e| e >= order) {
            return Err(bad("table entry out of range".into()));
        }
        if identity >= order {
            return Err(bad("identity out of range".into()));
        }
        if (0..order).any(|a| mult[identity][a] != a || mult[a][identity] != a) {
            return Err(bad(format!("{identity} is not an identity")));
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| mult[a][b] == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
            if mult[b][a] != identity {
                return Err(bad(format!("element {a} has no two-sided inverse")));
            }
            inverse[a] = b;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mult[a][b];
                for c in 0..order {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return Err(bad(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }

        let mut g = GroupData {
            name,
            mult,
            identity,
            inverse,
            classes: Vec::new(),
        };

        let mut covered = vec![false; order];
        for (rep, chars) in raw_classes {
            if rep >= order {
                return Err(bad(format!("class representative {rep} out of range")));
            }
            for y in g.conjugacy_class(rep) {
                if covered[y] {
                    return Err(bad(format!("class of {rep} listed twice")));
                }
                covered[y] = true;
            }
            let elements = g.centralizer(rep);
            g.classes.push(Centralizer {
                rep,
                elements,
                chars,
            });
        }
        if let Some(missing) = covered.iter().position(|&c| !c) {
            return Err(bad(format!(
                "no class representative for element {missing}"
            )));
        }
        g.check_characters()?;
        Ok(g)
    }

    fn check_characters(&self) -> Result<(), FourierError> {
        let bad = |m: String| FourierError::InvalidCharacters(m);
        for c in &self.classes {
            let n = c.elements.len();
            let class_count = self.class_count_within(&c.elements);
            if c.chars.len() != class_count {
                return Err(bad(format!(
                    "C({}) has {class_count} classes but {} characters",
                    c.rep,
                    c.chars.len()
                )));
            }
            for (s, chi) in c.chars.iter().enumerate() {
                if chi.len() != n {
                    return Err(bad(format!(
                        "character {s} of C({}) needs {n} values, got {}",
                        c.rep,
                        chi.len()
                    )));
                }
                for &a in &c.elements {
                    for &z in &c.elements {
                        let conj = self.conjugate(a, z);
                        if c.value(s, conj) != c.value(s, z) {
                            return Err(bad(format!(
                                "character {s} of C({}) is not a class function",
                                c.rep
                            )));
                        }
                    }
                }
            }
            let size = BigRational::from_integer(BigInt::from(n));
            for (s, chi) in c.chars.iter().enumerate() {
                for (t, psi) in c.chars.iter().enumerate() {
                    let inner: Cyclo = chi.iter().zip(psi).map(|(a, b)| a * &b.conj()).sum();
                    let inner = inner.div_rational(&size).expect("nonzero order");
                    let want = Cyclo::integer(i64::from(s == t));
                    if inner != want {
                        return Err(bad(format!(
                            "characters {s} and {t} of C({}) are not orthonormal",
                            c.rep
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `h z h^-1`.
    pub fn conjugate(&self, h: usize, z: usize) -> usize {
        self.mul(self.mul(h, z), self.inverse(h))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&z| self.commute(x, z)).collect()
    }

    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.order()).map(|h| self.conjugate(h, x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn class_count_within(&self, sub: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for &z in sub {
            if seen[z] {
                continue;
            }
            count += 1;
            for &h in sub {
                seen[self.conjugate(h, z)] = true;
            }
        }
        count
    }

    pub fn class_representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.rep).collect()
    }

    fn class_of_rep(&self, x: usize) -> Option<&Centralizer> {
        self.classes.iter().find(|c| c.rep == x)
    }

    fn lookup(&self, c: MClass) -> Result<&Centralizer, FourierError> {
        self.class_of_rep(c.x)
            .filter(|cent| c.sigma < cent.chars.len())
            .ok_or(FourierError::UnknownClass {
                x: c.x,
                sigma: c.sigma,
            })
    }

    /// The pair behind a class representative.
    pub fn pair(&self, c: MClass) -> Result<Pair, FourierError> {
        let cent = self.lookup(c)?;
        Ok(Pair {
            x: c.x,
            centralizer: cent.elements.clone(),
            values: cent.chars[c.sigma].clone(),
        })
    }

    /// `h . (x, sigma) = (h x h^-1, sigma(h^-1 _ h))`.
    pub fn conjugate_pair(&self, p: &Pair, h: usize) -> Pair {
        let x = self.conjugate(h, p.x);
        let centralizer = self.centralizer(x);
        let hinv = self.inverse(h);
        let values = centralizer
            .iter()
            .map(|&z| p.value(self.conjugate(hinv, z)).clone())
            .collect();
        Pair {
            x,
            centralizer,
            values,
        }
    }

    /// The Fourier coefficient of two arbitrary pairs.
    pub fn pair_pairing(&self, c: &Pair, d: &Pair) -> Cyclo {
        let (x, y) = (c.x, d.x);
        let mut total = Cyclo::zero();
        for g in 0..self.order() {
            let gyg = self.conjugate(g, y);
            if !self.commute(x, gyg) {
                continue;
            }
            let gxg = self.conjugate(self.inverse(g), x);
            total = &total + &(c.value(gyg) * &d.value(gxg).conj());
        }
        let denom =
            BigRational::from_integer(BigInt::from(c.centralizer.len() * d.centralizer.len()));
        total.div_rational(&denom).expect("nonzero order")
    }
}

/// Representatives of `M(G)`, ordered by the fixture's class blocks and then
/// by character index.
pub fn m_gamma(g: &GroupData) -> Vec<MClass> {
    g.classes
        .iter()
        .flat_map(|c| (0..c.chars.len()).map(move |sigma| MClass { x: c.rep, sigma }))
        .collect()
}

pub fn pairing(c: MClass, d: MClass, g: &GroupData) -> Result<Cyclo, FourierError> {
    Ok(g.pair_pairing(&g.pair(c)?, &g.pair(d)?))
}

pub fn fourier_matrix(g: &GroupData) -> Vec<Vec<Cyclo>> {
    let pairs: Vec<Pair> = m_gamma(g)
        .into_iter()
        .map(|c| g.pair(c).expect("class from m_gamma"))
        .collect();
    pairs
        .iter()
        .map(|c| pairs.iter().map(|d| g.pair_pairing(c, d)).collect())
        .collect()
}

/// `sigma(x) / sigma(1)`, times `i` for an exceptional family when `x != 1`.
pub fn omega(c: MClass, g: &GroupData, exceptional: bool) -> Result<Cyclo, FourierError> {
    let cent = g.lookup(c)?;
    let at_x = cent.value(c.sigma, c.x).expect("x is central in C(x)");
    let degree = cent
        .value(c.sigma, g.identity)
        .and_then(Cyclo::as_rational)
        .cloned()
        .ok_or_else(|| FourierError::InvalidCharacters("degree is not rational".into()))?;
    let ratio = at_x
        .div_rational(&degree)
        .map_err(|_| FourierError::InvalidCharacters("character of degree 0".into()))?;
    Ok(if exceptional && c.x != g.identity {
        &Cyclo::i() * &ratio
    } else {
        ratio
    })
}

pub fn matrix_mul(a: &[Vec<Cyclo>], b: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn is_identity_matrix(m: &[Vec<Cyclo>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, v)| *v == Cyclo::integer(i64::from(i == j)))
    })
}

pub fn trivial() -> GroupData {
    GroupData::parse(include_str!("../fixtures/trivial.grp")).expect("bundled fixture")
}

pub fn cyclic2() -> GroupData {
    GroupData::parse(include_str!("../fixtures/z2.grp")).expect("bundled fixture")
}

pub fn klein4() -> GroupData {
    GroupData::parse(include_str!("../fixtures/klein4.grp")).expect("bundled fixture")
}

pub fn symmetric3() -> GroupData {
    GroupData::parse(include_str!("../fixtures/s3.grp")).expect("bundled fixture")
}

/// Looks up a bundled fixture by name.
pub fn bundled(name: &str) -> Option<GroupData> {
    match name.to_ascii_lowercase().as_str() {
        "trivial" | "1" => Some(trivial()),
        "z2" | "c2" | "cyclic2" => Some(cyclic2()),
        "klein4" | "z2xz2" | "v4" => Some(klein4()),
        "s3" | "symmetric3" => Some(symmetric3()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::d_family_fourier;

    fn half(n: i64) -> Cyclo {
        Cyclo::rational(BigRational::new(n.into(), 2.into()))
    }

    fn conj_transpose(m: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
        (0..m.len())
            .map(|i| (0..m.len()).map(|j| m[j][i].conj()).collect())
            .collect()
    }

    #[test]
    fn sizes() {
        assert_eq!(m_gamma(&trivial()).len(), 1);
        assert_eq!(m_gamma(&cyclic2()).len(), 4);
        assert_eq!(m_gamma(&klein4()).len(), 16);
        assert_eq!(m_gamma(&symmetric3()).len(), 8);
    }

    #[test]
    fn trivial_group() {
        assert_eq!(fourier_matrix(&trivial()), vec![vec![Cyclo::one()]]);
    }

    #[test]
    fn z2_entries() {
        let g = cyclic2();
        let c = |x, sigma| MClass { x, sigma };
        assert_eq!(pairing(c(0, 0), c(0, 0), &g).unwrap(), half(1));
        assert_eq!(pairing(c(0, 1), c(1, 0), &g).unwrap(), half(-1));
    }

    #[test]
    fn z2_matches_family_matrix() {
        let m = fourier_matrix(&cyclic2());
        let f = d_family_fourier();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[i][j], Cyclo::rational(f[i][j].clone()), "({i},{j})");
            }
        }
        assert!(is_identity_matrix(&matrix_mul(&m, &m)));
    }

    #[test]
    fn rational_fixtures_are_symmetric_involutions() {
        for g in [trivial(), cyclic2(), klein4()] {
            let m = fourier_matrix(&g);
            assert!(is_identity_matrix(&matrix_mul(&m, &m)), "{}", g.name());
            for (i, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, m[j][i]);
                }
            }
        }
    }

    #[test]
    fn s3_is_unitary() {
        let m = fourier_matrix(&symmetric3());
        assert!(is_identity_matrix(&matrix_mul(&m, &conj_transpose(&m))));
        let sq = matrix_mul(&m, &m);
        assert!(is_identity_matrix(&matrix_mul(&sq, &sq)));
        // (1/6)(1*1) from the trivial pair with itself
        assert_eq!(
            m[0][0],
            Cyclo::rational(BigRational::new(1.into(), 6.into()))
        );
    }

    #[test]
    fn representative_invariance() {
        for g in [cyclic2(), klein4(), symmetric3()] {
            let classes = m_gamma(&g);
            for &c in &classes {
                let pc = g.pair(c).unwrap();
                for &d in &classes {
                    let pd = g.pair(d).unwrap();
                    let base = g.pair_pairing(&pc, &pd);
                    for h in 0..g.order() {
                        let moved = g.conjugate_pair(&pc, h);
                        assert_eq!(g.pair_pairing(&moved, &pd), base);
                        let moved_d = g.conjugate_pair(&pd, h);
                        assert_eq!(g.pair_pairing(&pc, &moved_d), base);
                    }
                }
            }
        }
    }

    #[test]
    fn omega_values() {
        let g = cyclic2();
        let eps_x = MClass { x: 1, sigma: 1 };
        assert_eq!(
            omega(MClass { x: 0, sigma: 1 }, &g, true).unwrap(),
            Cyclo::one()
        );
        assert_eq!(omega(eps_x, &g, false).unwrap(), Cyclo::integer(-1));
        assert_eq!(omega(eps_x, &g, true).unwrap(), -&Cyclo::i());
        let s3 = symmetric3();
        assert_eq!(
            omega(MClass { x: 4, sigma: 1 }, &s3, false).unwrap(),
            Cyclo::root_of_unity(3, 1).unwrap()
        );
        assert!(omega(MClass { x: 1, sigma: 5 }, &g, false).is_err());
    }

    #[test]
    fn rejects_bad_fixtures() {
        let not_assoc = "order 3\nidentity 0\ntable\n0 1 2\n1 0 1\n2 2 0\nclass 0\nchar 1 1 1\n";
        assert!(matches!(
            GroupData::parse(not_assoc),
            Err(FourierError::InvalidGroup(_))
        ));
        let few_chars = "order 2\nidentity 0\ntable\n0 1\n1 0\nclass 0\nchar 1 1\nclass 1\nchar 1 1\nchar 1 -1\n";
        assert!(matches!(
            GroupData::parse(few_chars),
            Err(FourierError::InvalidCharacters(_))
        ));
        let not_orth = "order 2\nidentity 0\ntable\n0 1\n1 0\nclass 0\nchar 1 1\nchar 1 1\nclass 1\nchar 1 1\nchar 1 -1\n";
        assert!(matches!(
            GroupData::parse(not_orth),
            Err(FourierError::InvalidCharacters(_))
        ));
        let missing = "order 2\nidentity 0\ntable\n0 1\n1 0\nclass 0\nchar 1 1\nchar 1 -1\n";
        assert!(matches!(
            GroupData::parse(missing),
            Err(FourierError::InvalidGroup(_))
        ));
        match GroupData::parse("order 1\nidentity 0\ntable\n0\nbogus\n") {
            Err(FourierError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }
}
