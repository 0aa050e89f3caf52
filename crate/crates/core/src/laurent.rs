//! Exact arithmetic in `Z[v, v^-1]` with `v = u^(1/2)`, and in its field of
//! fractions.
//!
//! Exponents are always counted in powers of `v`, so `u^(7/2)` is the
//! monomial `v^7`. Coefficients are arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("cannot specialize v to 0: negative powers are not evaluable")]
    ZeroSpecialization,
    #[error("denominator vanishes at the specialization point")]
    PoleAtSpecialization,
    #[error("division by zero")]
    DivisionByZero,
}

/// A Laurent polynomial in `v = u^(1/2)` with integer coefficients.
///
/// Stored sparsely; no stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentHalf {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// The indeterminate `v = u^(1/2)`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// The Hecke parameter `u = v^2`.
    pub fn u() -> Self {
        Self::monomial(1, 2)
    }

    /// `u^k` for any integer `k`.
    pub fn u_pow(k: i64) -> Self {
        Self::monomial(1, 2 * k)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Returns `(c, e)` if the polynomial is the single term `c * v^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Substitutes `v := val` exactly.
    pub fn specialize(&self, val: &BigRational) -> Result<BigRational, LaurentError> {
        if val.is_zero() {
            return Err(LaurentError::ZeroSpecialization);
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let pow = if e >= 0 {
                num_traits::pow(val.clone(), e as usize)
            } else {
                num_traits::pow(val.recip(), (-e) as usize)
            };
            acc += pow * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Dense coefficient vector of `self * v^(-min_exp)`, lowest degree first.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.coeffs {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_dense(shift: i64, dense: &[BigInt]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }
}

impl fmt::Debug for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf({self})")
    }
}

/// Renders `u^k` for even `v`-exponents `2k` and `u^(k/2)` for odd ones.
fn fmt_u_power(exp: i64) -> String {
    match exp {
        0 => String::new(),
        2 => "u".to_string(),
        e if e % 2 == 0 => format!("u^{}", e / 2),
        e => format!("u^({e}/2)"),
    }
}

impl fmt::Display for LaurentHalf {
    /// Terms are written from the highest power down, e.g. `2u - 1` or
    /// `-u^(7/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = fmt_u_power(e);
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{abs}{power}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentHalf> for &'a LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        LaurentHalf {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty { (&self).$m(rhs) }
        }
    )*
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { -&self }
        }
    };
}

forward_owned!(LaurentHalf, Add add, Sub sub, Mul mul);

// Dense integer polynomial helpers used for fraction reduction.

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn dense_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(p);
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` non-zero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor over `Z[x]`, with positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let cont = dense_content(a).gcd(&dense_content(b));
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
        trim(&mut y);
    }
    if x.is_empty() {
        return vec![cont];
    }
    let mut g: Vec<BigInt> = x.iter().map(|c| c * &cont).collect();
    if g.last().is_some_and(|c| c.is_negative()) {
        for c in g.iter_mut() {
            *c = -&*c;
        }
    }
    g
}

/// Exact quotient `a / b` over `Z[x]`; `b` must divide `a`.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (coef, rem) = r[dr].div_rem(&b[db]);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &coef * bc;
        }
        q[off] = coef;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// An element of the fraction field of `Z[v, v^-1]`.
///
/// Kept in a canonical form: numerator and denominator share no common
/// factor, the denominator has no `v`-power factor and a positive leading
/// coefficient. Equality is still decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFun {
    num: LaurentHalf,
    den: LaurentHalf,
}

impl RatFun {
    pub fn new(num: LaurentHalf, den: LaurentHalf) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        Self::from(LaurentHalf::zero())
    }

    pub fn one() -> Self {
        Self::from(LaurentHalf::one())
    }

    pub fn num(&self) -> &LaurentHalf {
        &self.num
    }

    pub fn den(&self) -> &LaurentHalf {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(num: LaurentHalf, den: LaurentHalf) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: LaurentHalf::one(),
            };
        }
        let (num_shift, num_dense) = num.to_dense();
        let (den_shift, den_dense) = den.to_dense();
        let g = poly_gcd(&num_dense, &den_dense);
        let mut n = exact_div(&num_dense, &g);
        let mut d = exact_div(&den_dense, &g);
        if d.last().is_some_and(|c| c.is_negative()) {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c = -&*c;
            }
        }
        Self {
            num: LaurentHalf::from_dense(num_shift - den_shift, &n),
            den: LaurentHalf::from_dense(0, &d),
        }
    }

    /// The fraction as a Laurent polynomial, if its denominator cancels.
    pub fn as_laurent(&self) -> Option<&LaurentHalf> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, LaurentError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn specialize(&self, val: &BigRational) -> Result<BigRational, LaurentError> {
        let d = self.den.specialize(val)?;
        if d.is_zero() {
            return Err(LaurentError::PoleAtSpecialization);
        }
        Ok(self.num.specialize(val)? / d)
    }
}

impl From<LaurentHalf> for RatFun {
    fn from(p: LaurentHalf) -> Self {
        Self {
            num: p,
            den: LaurentHalf::one(),
        }
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        Self::from(LaurentHalf::constant(c))
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun {}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from(&self.num * &rhs.num);
        }
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFun, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lh(terms: &[(i64, i64)]) -> LaurentHalf {
        LaurentHalf::from_terms(terms.iter().copied())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        let v = LaurentHalf::v();
        assert_eq!(&(&v * &v) + &LaurentHalf::one(), lh(&[(2, 1), (0, 1)]));
        let a = &v - &LaurentHalf::one();
        let b = &v + &LaurentHalf::one();
        assert_eq!(a * b, lh(&[(2, 1), (0, -1)]));
        let u = LaurentHalf::u();
        let u_minus_1 = &u - &LaurentHalf::one();
        assert_eq!(u + u_minus_1, lh(&[(2, 2), (0, -1)]));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let p = lh(&[(3, 2), (3, -2), (1, 5)]);
        assert_eq!(p.num_terms(), 1);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).num_terms(), 0);
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(lh(&[(6, -1)]).specialize(&rat(1, 1)).unwrap(), rat(-1, 1));
        assert_eq!(
            lh(&[(2, 1), (-2, 1)]).specialize(&rat(2, 1)).unwrap(),
            rat(17, 4)
        );
        assert_eq!(
            lh(&[(2, 1), (0, -1)]).specialize(&rat(1, 1)).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            lh(&[(1, 1)]).specialize(&rat(0, 1)),
            Err(LaurentError::ZeroSpecialization)
        );
    }

    #[test]
    fn formatting() {
        assert_eq!(LaurentHalf::monomial(1, 4).to_string(), "u^2");
        assert_eq!(LaurentHalf::monomial(-1, 7).to_string(), "-u^(7/2)");
        assert_eq!(LaurentHalf::zero().to_string(), "0");
        assert_eq!(LaurentHalf::monomial(-1, 2).to_string(), "-u");
        assert_eq!(LaurentHalf::constant(1).to_string(), "1");
        assert_eq!(lh(&[(2, 2), (0, -1)]).to_string(), "2u - 1");
        assert_eq!(lh(&[(-2, 1)]).to_string(), "u^-1");
        assert_eq!(lh(&[(-1, 3)]).to_string(), "3u^(-1/2)");
    }

    #[test]
    fn ratfun_examples() {
        let u_minus_1 = RatFun::from(lh(&[(2, 1), (0, -1)]));
        let inv = u_minus_1.inv().unwrap();
        assert_eq!(&inv * &u_minus_1, RatFun::one());
        assert!((&inv * &u_minus_1).as_laurent().unwrap().is_one());

        let half = RatFun::new(LaurentHalf::one(), LaurentHalf::constant(2)).unwrap();
        let sum = &half + &half;
        assert_eq!(sum, RatFun::one());
        assert!(sum.as_laurent().unwrap().is_one());

        let vinv = RatFun::from(LaurentHalf::v()).inv().unwrap();
        assert_eq!(vinv.as_laurent(), Some(&LaurentHalf::monomial(1, -1)));

        assert_eq!(
            RatFun::zero().inv().unwrap_err(),
            LaurentError::DivisionByZero
        );
    }

    #[test]
    fn ratfun_canonical_form_reduces_common_factors() {
        // (u^2 - 1) / (2u - 2) = (u + 1) / 2
        let f = RatFun::new(lh(&[(4, 1), (0, -1)]), lh(&[(2, 2), (0, -2)])).unwrap();
        assert_eq!(f.num(), &lh(&[(2, 1), (0, 1)]));
        assert_eq!(f.den(), &LaurentHalf::constant(2));
        // v^3 / (-v^5) = -v^-2
        let g = RatFun::new(lh(&[(3, 1)]), lh(&[(5, -1)])).unwrap();
        assert_eq!(g.as_laurent(), Some(&lh(&[(-2, -1)])));
    }

    #[test]
    fn ratfun_specialization() {
        // (u - 1)/(u^3 - 1) at v = 1 is 1/3 once reduced.
        let f = RatFun::new(lh(&[(2, 1), (0, -1)]), lh(&[(6, 1), (0, -1)])).unwrap();
        assert_eq!(f.specialize(&rat(1, 1)).unwrap(), rat(1, 3));
        let g = RatFun::new(LaurentHalf::one(), lh(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(
            g.specialize(&rat(1, 1)),
            Err(LaurentError::PoleAtSpecialization)
        );
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentHalf> {
        prop::collection::vec((-6i64..=6, -20i64..=20), 0..5).prop_map(LaurentHalf::from_terms)
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (arb_laurent(), arb_laurent())
            .prop_filter("non-zero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFun::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn laurent_ring_axioms(p in arb_laurent(), q in arb_laurent(), r in arb_laurent()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn specialization_is_a_ring_homomorphism(
            p in arb_laurent(),
            q in arb_laurent(),
            n in -5i64..=5,
            d in 1i64..=4,
        ) {
            prop_assume!(n != 0);
            let val = rat(n, d);
            let lhs = (&p * &q).specialize(&val).unwrap();
            let rhs = p.specialize(&val).unwrap() * q.specialize(&val).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&p + &q).specialize(&val).unwrap();
            let rhs = p.specialize(&val).unwrap() + q.specialize(&val).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ratfun_field_laws(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            if !a.is_zero() {
                let one = &a * &a.inv().unwrap();
                prop_assert!(one.as_laurent().is_some_and(|p| p.is_one()));
            }
            // Canonical form makes equal fractions structurally equal.
            let x = &(&a * &b) + &c;
            let y = &c + &(&b * &a);
            prop_assert_eq!(x.num(), y.num());
            prop_assert_eq!(x.den(), y.den());
        }
    }
}
