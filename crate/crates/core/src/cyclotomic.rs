//! Exact numbers in the cyclotomic field `Q(zeta_12)`.
//!
//! This field holds every value the shipped group fixtures need: rationals,
//! cube roots of unity and `i`. Elements are stored in the power basis
//! `1, z, z^2, z^3` with `z^4 = z^2 - 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub const CONDUCTOR: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("cannot parse cyclotomic value {0:?}")]
    Parse(String),
    #[error("E({0}) is not in Q(E(12))")]
    Conductor(u32),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo([BigRational; 4]);

impl Cyclo {
    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| BigRational::zero()))
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(r: BigRational) -> Self {
        let mut c = Self::zero();
        c.0[0] = r;
        c
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `z^k` with `z = E(12)`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(i64::from(CONDUCTOR));
        let z = {
            let mut c = Self::zero();
            c.0[1] = BigRational::one();
            c
        };
        (0..k).fold(Self::one(), |acc, _| &acc * &z)
    }

    /// `E(n)^k = exp(2 pi i k / n)` for `n` dividing 12.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, CycloError> {
        if n == 0 || !CONDUCTOR.is_multiple_of(n) {
            return Err(CycloError::Conductor(n));
        }
        Ok(Self::zeta_pow(i64::from(CONDUCTOR / n) * k))
    }

    pub fn i() -> Self {
        Self::zeta_pow(3)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.0[1..].iter().all(Zero::is_zero).then_some(&self.0[0])
    }

    /// `(re, im)` when the value lies in `Q(i)`.
    pub fn to_re_im(&self) -> Option<(BigRational, BigRational)> {
        (self.0[1].is_zero() && self.0[2].is_zero()).then(|| (self.0[0].clone(), self.0[3].clone()))
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (j, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(-(j as i64)).scale(c);
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self(std::array::from_fn(|j| &self.0[j] * r))
    }

    pub fn div_rational(&self, r: &BigRational) -> Result<Self, CycloError> {
        if r.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        Ok(self.scale(&r.recip()))
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        Cyclo(std::array::from_fn(|j| &self.0[j] + &rhs.0[j]))
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        Cyclo(std::array::from_fn(|j| &self.0[j] - &rhs.0[j]))
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let mut prod: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        // z^d = z^(d-2) - z^(d-4)
        for d in (4..7).rev() {
            let c = std::mem::take(&mut prod[d]);
            prod[d - 2] += &c;
            prod[d - 4] -= c;
        }
        Cyclo(std::array::from_fn(|j| prod[j].clone()))
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo(std::array::from_fn(|j| -&self.0[j]))
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Self {
        iter.fold(Cyclo::zero(), |a, b| &a + &b)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

impl Cyclo {
    /// `(r, j)` with `self = r * z^j`, preferring `r > 0`, except that
    /// `-i` is reported as `(-r, 3)`.
    fn as_scaled_root(&self) -> Option<(BigRational, i64)> {
        let (r, j) = (0..12).find_map(|j| {
            let r = (self * &Self::zeta_pow(-j)).as_rational()?.clone();
            (r > BigRational::zero()).then_some((r, j))
        })?;
        Some(if j == 9 { (-r, 3) } else { (r, j) })
    }
}

fn root_name(j: i64) -> String {
    if j == 3 {
        return "i".to_string();
    }
    let g = num_integer::gcd(j, i64::from(CONDUCTOR));
    let (n, k) = (i64::from(CONDUCTOR) / g, j / g);
    if k == 1 {
        format!("E({n})")
    } else {
        format!("E({n})^{k}")
    }
}

impl fmt::Display for Cyclo {
    /// Rationals print as themselves, rational multiples of a root of unity
    /// as `-1/2*E(3)` or `i`, anything else as a sum over the power basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        if let Some((r, j)) = self.as_scaled_root() {
            let root = root_name(j);
            return if r.is_one() {
                f.write_str(&root)
            } else if (-&r).is_one() {
                write!(f, "-{root}")
            } else {
                write!(f, "{r}*{root}")
            };
        }
        let mut first = true;
        for (j, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < BigRational::zero();
            let abs = if negative { -c } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match (j, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => f.write_str(&root_name(j as i64))?,
                (_, false) => write!(f, "{abs}*{}", root_name(j as i64))?,
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// `E(n)`, `E(n)^k` or `i`.
fn parse_root(s: &str) -> Result<Option<Cyclo>, CycloError> {
    if s == "i" {
        return Ok(Some(Cyclo::i()));
    }
    let Some(rest) = s.strip_prefix("E(") else {
        return Ok(None);
    };
    let Some((n, tail)) = rest.split_once(')') else {
        return Ok(None);
    };
    let Ok(n) = n.parse::<u32>() else {
        return Ok(None);
    };
    let k = match tail.strip_prefix('^') {
        Some(k) => match k.parse::<i64>() {
            Ok(k) => k,
            Err(_) => return Ok(None),
        },
        None if tail.is_empty() => 1,
        None => return Ok(None),
    };
    Cyclo::root_of_unity(n, k).map(Some)
}

fn parse_term(s: &str) -> Result<Option<Cyclo>, CycloError> {
    if let Some((coef, root)) = s.split_once('*') {
        let (Some(c), Some(r)) = (parse_rational(coef), parse_root(root)?) else {
            return Ok(None);
        };
        return Ok(Some(r.scale(&c)));
    }
    if let Some(r) = parse_root(s)? {
        return Ok(Some(r));
    }
    Ok(parse_rational(s).map(Cyclo::rational))
}

impl FromStr for Cyclo {
    type Err = CycloError;

    /// Sums of terms like `-1/2`, `E(3)`, `2*E(4)^3` or `i`, without spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CycloError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        let mut total = Cyclo::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut depth = 0;
        for idx in 0..=bytes.len() {
            let at_end = idx == bytes.len();
            if !at_end {
                match bytes[idx] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    _ => {}
                }
            }
            let boundary = at_end
                || (idx > start
                    && depth == 0
                    && matches!(bytes[idx], b'+' | b'-')
                    && bytes[idx - 1] != b'^');
            if !boundary {
                continue;
            }
            let token = &s[start..idx];
            let (negative, body) = match token.as_bytes().first() {
                Some(b'-') => (true, &token[1..]),
                Some(b'+') => (false, &token[1..]),
                _ => (false, token),
            };
            let term = parse_term(body)?.ok_or_else(err)?;
            total = if negative {
                &total - &term
            } else {
                &total + &term
            };
            start = idx;
        }
        Ok(total)
    }
}
