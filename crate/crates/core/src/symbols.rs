//! Symbols for the four-element type-D families containing the characters
//! `{(1), (k, 1^(n-k-1))}` and `{(-), (k, 2, 1^(n-k-2))}`.
//!
//! With `m = n - k` and `2 <= k <= n - 2` the family is `{X1, X2, X3, X4}`,
//! where `X1` is the special symbol. Only `X3` and `X4` are constituents
//! of the Deligne-Lusztig character of a Coxeter element; they contribute
//! with cohomological degrees `n + k` and `n + k - 2`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::labels::{CharLabel, Partition, Split};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("need n >= 4 and {lo} <= k <= n - 2, got n = {n}, k = {k}")]
    OutOfRange { n: u32, k: u32, lo: u32 },
    #[error("family size needs |Z| >= 2, got {0}")]
    SmallZ(usize),
    #[error("Fourier sum {0} is not an integer")]
    NonIntegral(BigRational),
}

/// A two-row symbol with strictly increasing rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Symbol {
    /// Returns `None` unless both rows are strictly increasing.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Option<Self> {
        let increasing = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
        (increasing(&top) && increasing(&bottom)).then_some(Self { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// All entries with multiplicity, sorted.
    pub fn entries(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", row(&self.top), row(&self.bottom))
    }
}

/// Entries appearing in exactly one row.
pub fn z_set(x: &Symbol) -> BTreeSet<u32> {
    let top: BTreeSet<u32> = x.top.iter().copied().collect();
    let bottom: BTreeSet<u32> = x.bottom.iter().copied().collect();
    top.symmetric_difference(&bottom).copied().collect()
}

/// Rows of equal length interleaving as `a1 <= b1 <= a2 <= b2 <= ...`.
pub fn is_special(x: &Symbol) -> bool {
    if x.top.len() != x.bottom.len() {
        return false;
    }
    let merged: Vec<u32> = x
        .top
        .iter()
        .zip(&x.bottom)
        .flat_map(|(&a, &b)| [a, b])
        .collect();
    merged.windows(2).all(|w| w[0] <= w[1])
}

/// Number of unipotent characters in the family of a special symbol:
/// `2^(|Z| - 2)`.
pub fn family_size(x: &Symbol) -> Result<u64, SymbolError> {
    let z = z_set(x).len();
    if z < 2 {
        return Err(SymbolError::SmallZ(z));
    }
    Ok(1u64 << (z - 2))
}

/// Position of a symbol in the family quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Member {
    X1,
    X2,
    X3,
    X4,
}

impl Member {
    pub const ALL: [Member; 4] = [Member::X1, Member::X2, Member::X3, Member::X4];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.index() + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DFamily {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    pub symbols: [Symbol; 4],
    pub fourier: [[BigRational; 4]; 4],
}

impl DFamily {
    pub fn symbol(&self, which: Member) -> &Symbol {
        &self.symbols[which.index()]
    }

    pub fn fourier_entry(&self, row: Member, col: Member) -> &BigRational {
        &self.fourier[row.index()][col.index()]
    }
}

/// The family Fourier matrix, rows and columns in the order X1..X4.
pub fn d_family_fourier() -> [[BigRational; 4]; 4] {
    const SIGNS: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
    SIGNS.map(|row| row.map(|s| BigRational::new(BigInt::from(s), BigInt::from(2))))
}

fn check_range(n: u32, k: u32, lo: u32) -> Result<(), SymbolError> {
    if n < 4 || k < lo || k + 2 > n {
        return Err(SymbolError::OutOfRange { n, k, lo });
    }
    Ok(())
}

/// The special symbol attached to `{(1), (k, 1^(n-k-1))}` for
/// `1 <= k <= n - 2`:
/// `(0, 1, ..., m-2, m ; 1, 2, ..., m-1, n-1)` with `m = n - k`.
pub fn x1_symbol(n: u32, k: u32) -> Result<Symbol, SymbolError> {
    check_range(n, k, 1)?;
    let m = n - k;
    let top = (0..=m - 2).chain([m]).collect();
    let bottom = (1..=m - 1).chain([n - 1]).collect();
    Ok(Symbol::new(top, bottom).expect("rows are increasing"))
}

pub fn d_family_symbols(n: u32, k: u32) -> Result<DFamily, SymbolError> {
    check_range(n, k, 2)?;
    let m = n - k;
    let sym =
        |top: Vec<u32>, bottom: Vec<u32>| Symbol::new(top, bottom).expect("rows are increasing");
    let x1 = x1_symbol(n, k)?;
    let x2 = sym(
        (0..=m - 1).collect(),
        (1..=m - 2).chain([m, n - 1]).collect(),
    );
    let x3 = sym((0..=m - 2).chain([n - 1]).collect(), (1..=m).collect());
    let x4 = sym((0..=m).chain([n - 1]).collect(), (1..=m - 2).collect());
    Ok(DFamily {
        n,
        k,
        m,
        symbols: [x1, x2, x3, x4],
        fourier: d_family_fourier(),
    })
}

/// The character labels carried by `X1` and `X2`.
pub fn d_family_labels(n: u32, k: u32) -> Result<(CharLabel, CharLabel), SymbolError> {
    check_range(n, k, 2)?;
    let x1 = CharLabel::type_d(
        Partition::new(vec![1]),
        Partition::hook(n - 1, k),
        Split::None,
    );
    let mut two_hook = vec![k, 2];
    two_hook.extend(std::iter::repeat_n(1, (n - k - 2) as usize));
    let x2 = CharLabel::type_d(Partition::empty(), Partition::new(two_hook), Split::None);
    Ok((
        x1.expect("distinct partitions"),
        x2.expect("distinct partitions"),
    ))
}

/// Cohomological degree of the Coxeter-variety eigenspace carrying each
/// family member; `None` for members absent from it.
fn cohomology_degree(n: u32, k: u32, which: Member) -> Option<u32> {
    match which {
        Member::X3 => Some(n + k),
        Member::X4 => Some(n + k - 2),
        _ => None,
    }
}

/// `eps = sum_j (-1)^(i_j) * F[which][j]` over the members `j` that occur
/// in the cohomology of the Coxeter variety.
pub fn d_epsilon_via_fourier(n: u32, k: u32, which: Member) -> Result<i32, SymbolError> {
    let family = d_family_symbols(n, k)?;
    let mut total = BigRational::zero();
    for j in Member::ALL {
        if let Some(deg) = cohomology_degree(n, k, j) {
            let sign = if deg % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            total += sign * family.fourier_entry(which, j);
        }
    }
    if !total.is_integer() {
        return Err(SymbolError::NonIntegral(total));
    }
    Ok(total.to_integer().to_i32().expect("small integer"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn symbols_for_n5_k2() {
        let fam = d_family_symbols(5, 2).unwrap();
        assert_eq!(fam.m, 3);
        assert_eq!(fam.symbol(Member::X1), &s(&[0, 1, 3], &[1, 2, 4]));
        assert_eq!(fam.symbol(Member::X2), &s(&[0, 1, 2], &[1, 3, 4]));
        assert_eq!(fam.symbol(Member::X3), &s(&[0, 1, 4], &[1, 2, 3]));
        assert_eq!(fam.symbol(Member::X4), &s(&[0, 1, 2, 3, 4], &[1]));
    }

    #[test]
    fn symbols_for_n6_k3() {
        let fam = d_family_symbols(6, 3).unwrap();
        assert_eq!(fam.symbol(Member::X1), &s(&[0, 1, 3], &[1, 2, 5]));
    }

    #[test]
    fn smallest_m() {
        // k = n - 2, m = 2
        let fam = d_family_symbols(4, 2).unwrap();
        assert_eq!(fam.symbol(Member::X1), &s(&[0, 2], &[1, 3]));
        assert_eq!(fam.symbol(Member::X4), &s(&[0, 1, 2, 3], &[]));
        assert!(is_special(fam.symbol(Member::X1)));
    }

    #[test]
    fn range_checks() {
        assert!(d_family_symbols(4, 1).is_err());
        assert!(d_family_symbols(5, 4).is_err());
        assert!(d_family_symbols(3, 1).is_err());
        assert!(x1_symbol(6, 1).is_ok());
        assert!(x1_symbol(6, 5).is_err());
    }

    #[test]
    fn z_sets() {
        let x1 = d_family_symbols(5, 2).unwrap().symbol(Member::X1).clone();
        assert_eq!(z_set(&x1), BTreeSet::from([0, 2, 3, 4]));
        for n in 4..10 {
            assert_eq!(
                z_set(&x1_symbol(n, 1).unwrap()),
                BTreeSet::from([0, n - 2]),
                "n={n}"
            );
        }
        assert!(z_set(&s(&[0, 2], &[0, 2])).is_empty());
    }

    #[test]
    fn speciality() {
        let fam = d_family_symbols(5, 2).unwrap();
        assert!(is_special(fam.symbol(Member::X1)));
        assert!(!is_special(fam.symbol(Member::X3)));
        assert!(!is_special(fam.symbol(Member::X4)));
        assert!(is_special(&s(&[0], &[0])));
    }

    #[test]
    fn family_sizes() {
        let x1 = d_family_symbols(5, 2).unwrap().symbol(Member::X1).clone();
        assert_eq!(family_size(&x1).unwrap(), 4);
        assert_eq!(family_size(&x1_symbol(7, 1).unwrap()).unwrap(), 1);
        assert_eq!(family_size(&s(&[0, 2, 4], &[1, 3, 5])).unwrap(), 16);
        assert_eq!(family_size(&s(&[1], &[1])), Err(SymbolError::SmallZ(0)));
    }

    #[test]
    fn members_share_entries() {
        for n in 4..=12 {
            for k in 2..=n - 2 {
                let fam = d_family_symbols(n, k).unwrap();
                let e = fam.symbols[0].entries();
                for x in &fam.symbols[1..] {
                    assert_eq!(x.entries(), e, "n={n} k={k}");
                }
                assert!(is_special(&fam.symbols[0]));
                assert_eq!(family_size(&fam.symbols[0]).unwrap(), 4);
                assert!(fam.symbols[1..].iter().all(|x| !is_special(x)));
            }
        }
    }

    #[test]
    fn fourier_epsilons() {
        assert_eq!(d_epsilon_via_fourier(5, 2, Member::X1).unwrap(), -1);
        assert_eq!(d_epsilon_via_fourier(5, 2, Member::X2).unwrap(), 1);
        assert_eq!(d_epsilon_via_fourier(6, 2, Member::X1).unwrap(), 1);
        assert!(d_epsilon_via_fourier(5, 1, Member::X1).is_err());
    }

    #[test]
    fn fourier_matrix_is_an_involution() {
        let f = d_family_fourier();
        for i in 0..4 {
            for j in 0..4 {
                let entry: BigRational = (0..4).map(|l| &f[i][l] * &f[l][j]).sum();
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(entry, expected);
            }
        }
    }

    #[test]
    fn family_labels() {
        let (x1, x2) = d_family_labels(5, 2).unwrap();
        assert_eq!(x1.to_string(), "1|2,1,1");
        assert_eq!(x2.to_string(), "-|2,2,1");
    }
}
