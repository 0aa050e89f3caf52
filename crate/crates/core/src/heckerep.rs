//! Explicit matrix representations of one-parameter Hecke algebras, used as
//! an independent check on the closed-form Coxeter values.
//!
//! Type A uses the seminormal form on standard tableaux. Type B reuses a
//! type-A representation of the first `n - 1` generators and lets the last
//! (short-root) generator act by a scalar.
//!
//! Matrices act on column vectors: `T v_t = sum_s M[s][t] v_s`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coxvalues::cox_value;
use crate::labels::{partitions, CharLabel, Partition};
use crate::laurent::{LaurentError, LaurentHalf, RatFun};
use crate::weyl::{standard_coxeter_word, Family, WeylType, WeylWord};

/// Largest rank the oracle sweeps cover.
pub const ORACLE_MAX_RANK: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("{0} is not a partition of a positive integer")]
    BadShape(Partition),
    #[error("generator {0} is out of range 1..={1}")]
    LetterOutOfRange(usize, usize),
    #[error("relation check failed: {0}")]
    Relation(String),
    #[error("trace {0} is not a Laurent polynomial")]
    NonPolynomialTrace(RatFun),
    #[error("no oracle representation for {0}")]
    Unsupported(WeylType),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Clone, PartialEq)]
pub struct RfMatrix {
    rows: Vec<Vec<RatFun>>,
}

impl RfMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            rows: vec![vec![RatFun::zero(); dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, RatFun::one())
    }

    pub fn scalar(dim: usize, c: RatFun) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i][i] = c.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.rows[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    pub fn trace(&self) -> RatFun {
        (0..self.dim()).fold(RatFun::zero(), |acc, i| &acc + &self.rows[i][i])
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(RatFun::is_zero)
    }

    pub fn specialize(&self, val: &BigRational) -> Result<Vec<Vec<BigRational>>, LaurentError> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.specialize(val)).collect())
            .collect()
    }
}

impl fmt::Debug for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(
                self.rows
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
            )
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct HeckeRep {
    rank: usize,
    dim: usize,
    gens: Vec<RfMatrix>,
    coxeter: Vec<Vec<u32>>,
}

impl HeckeRep {
    /// Builds and verifies a representation.
    pub fn new(gens: Vec<RfMatrix>, coxeter: Vec<Vec<u32>>) -> Result<Self, HeckeError> {
        let rank = gens.len();
        let dim = gens.first().map_or(1, RfMatrix::dim);
        let rep = Self {
            rank,
            dim,
            gens,
            coxeter,
        };
        rep.verify()?;
        Ok(rep)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator(&self, i: usize) -> Result<&RfMatrix, HeckeError> {
        if i == 0 || i > self.rank {
            return Err(HeckeError::LetterOutOfRange(i, self.rank));
        }
        Ok(&self.gens[i - 1])
    }

    /// Checks `(T - u)(T + 1) = 0` for every generator and the braid relation
    /// of length `m_ij` for every pair.
    pub fn verify(&self) -> Result<(), HeckeError> {
        if self.coxeter.len() != self.rank || self.gens.iter().any(|g| g.dim() != self.dim) {
            return Err(HeckeError::Relation("shape mismatch".into()));
        }
        let u = RatFun::from(LaurentHalf::u());
        let minus_u = RfMatrix::scalar(self.dim, -&u);
        let one = RfMatrix::identity(self.dim);
        for (i, t) in self.gens.iter().enumerate() {
            if !t.add(&minus_u).mul(&t.add(&one)).is_zero() {
                return Err(HeckeError::Relation(format!(
                    "quadratic relation for T{}",
                    i + 1
                )));
            }
        }
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let m = self.coxeter[i][j] as usize;
                let alt = |a: usize, b: usize| {
                    (0..m).fold(RfMatrix::identity(self.dim), |acc, k| {
                        acc.mul(&self.gens[if k % 2 == 0 { a } else { b }])
                    })
                };
                if alt(i, j) != alt(j, i) {
                    return Err(HeckeError::Relation(format!(
                        "braid relation of length {m} for T{} and T{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every generator specializes to an involution at `v = 1`.
    pub fn specializes_to_involutions(&self) -> Result<bool, HeckeError> {
        let one = BigRational::one();
        for g in &self.gens {
            let m = g.specialize(&one)?;
            let n = m.len();
            for i in 0..n {
                for j in 0..n {
                    let s: BigRational = (0..n).map(|k| &m[i][k] * &m[k][j]).sum();
                    if s != BigRational::from_integer(BigInt::from(i32::from(i == j))) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A standard tableau, stored as the (row, column) cell of each entry.
pub type Tableau = Vec<(usize, usize)>;

/// Standard tableaux of shape `lambda` in a fixed deterministic order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(
        shape: &[u32],
        filled: &mut Vec<u32>,
        current: &mut Tableau,
        out: &mut Vec<Tableau>,
        total: usize,
    ) {
        if current.len() == total {
            out.push(current.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                current.push((r, c as usize));
                rec(shape, filled, current, out, total);
                current.pop();
                filled[r] -= 1;
            }
        }
    }
    let shape = lambda.parts();
    let mut out = Vec::new();
    rec(
        shape,
        &mut vec![0; shape.len()],
        &mut Vec::new(),
        &mut out,
        lambda.size() as usize,
    );
    out
}

fn content((r, c): (usize, usize)) -> i64 {
    c as i64 - r as i64
}

fn u_pow_minus_one(r: i64) -> LaurentHalf {
    &LaurentHalf::u_pow(r) - &LaurentHalf::one()
}

/// `(u - 1) u^r / (u^r - 1)`.
fn diagonal(r: i64) -> RatFun {
    let num = &(&LaurentHalf::u() - &LaurentHalf::one()) * &LaurentHalf::u_pow(r);
    RatFun::new(num, u_pow_minus_one(r)).expect("r != 0")
}

/// `u - (u - 1)^2 u^r / (u^r - 1)^2`.
fn off_diagonal(r: i64) -> RatFun {
    let um1 = &LaurentHalf::u() - &LaurentHalf::one();
    let den = u_pow_minus_one(r);
    let frac = RatFun::new(&(&um1 * &um1) * &LaurentHalf::u_pow(r), &den * &den).expect("r != 0");
    &RatFun::from(LaurentHalf::u()) - &frac
}

/// The seminormal representation of the type `A_n` Hecke algebra attached
/// to `lambda`, a partition of `n + 1`.
pub fn seminormal_rep(lambda: &Partition, n: usize) -> Result<HeckeRep, HeckeError> {
    if n == 0 || lambda.size() as usize != n + 1 {
        return Err(HeckeError::BadShape(lambda.clone()));
    }
    let tableaux = standard_tableaux(lambda);
    let index: HashMap<&Tableau, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let dim = tableaux.len();
    let u = RatFun::from(LaurentHalf::u());
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = RfMatrix::zero(dim);
        for (col, t) in tableaux.iter().enumerate() {
            let (a, b) = (t[i], t[i + 1]);
            if a.0 == b.0 {
                m.rows[col][col] = u.clone();
            } else if a.1 == b.1 {
                m.rows[col][col] = -&RatFun::one();
            } else {
                let r = content(b) - content(a);
                m.rows[col][col] = diagonal(r);
                let mut swapped = t.clone();
                swapped.swap(i, i + 1);
                let row = index[&swapped];
                m.rows[row][col] = if b.0 > a.0 {
                    RatFun::one()
                } else {
                    off_diagonal(r)
                };
            }
        }
        gens.push(m);
    }
    HeckeRep::new(gens, WeylType::a(n).expect("n >= 1").coxeter_matrix())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TScalar {
    U,
    MinusOne,
}

/// Extends a type `A_{n-1}` representation to type `B_n` by letting the
/// extra generator act as a scalar.
pub fn bn_extend(rep_a: &HeckeRep, t_scalar: TScalar) -> Result<HeckeRep, HeckeError> {
    let n = rep_a.rank() + 1;
    let t = WeylType::b(n).map_err(|_| HeckeError::Relation(format!("B{n} is not a type")))?;
    let c = match t_scalar {
        TScalar::U => RatFun::from(LaurentHalf::u()),
        TScalar::MinusOne => -&RatFun::one(),
    };
    let mut gens = rep_a.gens.clone();
    gens.push(RfMatrix::scalar(rep_a.dim(), c));
    HeckeRep::new(gens, t.coxeter_matrix())
}

/// Trace of `T_{w_1} ... T_{w_k}`.
pub fn trace_word(rep: &HeckeRep, w: &WeylWord) -> Result<LaurentHalf, HeckeError> {
    let mut acc = RfMatrix::identity(rep.dim());
    for &i in w.letters() {
        acc = acc.mul(rep.generator(i)?);
    }
    let tr = acc.trace();
    tr.as_laurent()
        .cloned()
        .ok_or(HeckeError::NonPolynomialTrace(tr))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleRow {
    pub label: CharLabel,
    pub oracle: LaurentHalf,
    pub closed_form: LaurentHalf,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub weyl_type: WeylType,
    pub rows: Vec<OracleRow>,
    pub pass: bool,
}

/// Compares representation traces on the standard Coxeter word with the
/// closed forms. Type A covers every label; type B covers the labels
/// `(alpha, -)` and `(-, alpha)`.
pub fn oracle_compare(t: WeylType) -> Result<OracleReport, HeckeError> {
    let n = t.rank();
    if n > ORACLE_MAX_RANK || !matches!(t.family(), Family::A | Family::B) {
        return Err(HeckeError::Unsupported(t));
    }
    let word = standard_coxeter_word(t);
    let mut rows = Vec::new();
    let mut push = |label: CharLabel, rep: &HeckeRep| -> Result<(), HeckeError> {
        let oracle = trace_word(rep, &word)?;
        let closed_form = cox_value(t, &label)
            .expect("label belongs to the type")
            .to_laurent();
        let equal = oracle == closed_form;
        rows.push(OracleRow {
            label,
            oracle,
            closed_form,
            equal,
        });
        Ok(())
    };
    match t.family() {
        Family::A => {
            for lambda in partitions(n as u32 + 1) {
                let rep = seminormal_rep(&lambda, n)?;
                push(CharLabel::TypeA(lambda), &rep)?;
            }
        }
        _ => {
            for alpha in partitions(n as u32) {
                let rep_a = seminormal_rep(&alpha, n - 1)?;
                let plus = bn_extend(&rep_a, TScalar::U)?;
                push(CharLabel::type_b(Partition::empty(), alpha.clone()), &plus)?;
                let minus = bn_extend(&rep_a, TScalar::MinusOne)?;
                push(CharLabel::type_b(alpha, Partition::empty()), &minus)?;
            }
        }
    }
    let pass = rows.iter().all(|r| r.equal);
    Ok(OracleReport {
        weyl_type: t,
        rows,
        pass,
    })
}

/// `sum over lambda of trace(T_c)^2` at `v = 1` for type `A_n`.
pub fn specialized_square_sum(n: usize) -> Result<BigRational, HeckeError> {
    let t = WeylType::a(n).map_err(|_| HeckeError::BadShape(Partition::empty()))?;
    let word = standard_coxeter_word(t);
    let mut total = BigRational::zero();
    for lambda in partitions(n as u32 + 1) {
        let tr = trace_word(&seminormal_rep(&lambda, n)?, &word)?.specialize(&BigRational::one())?;
        total += &tr * &tr;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{coxeter_element, orderings};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[3, 2, 1])).len(), 16);
        assert_eq!(standard_tableaux(&p(&[3, 3])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[4])).len(), 1);
    }

    #[test]
    fn one_dimensional() {
        let idx = seminormal_rep(&p(&[2]), 1).unwrap();
        assert_eq!(idx.dim(), 1);
        assert_eq!(
            *idx.generator(1).unwrap().get(0, 0),
            RatFun::from(LaurentHalf::u())
        );
        let sgn = seminormal_rep(&p(&[1, 1]), 1).unwrap();
        assert_eq!(*sgn.generator(1).unwrap().get(0, 0), RatFun::from(-1));
    }

    #[test]
    fn two_one_trace() {
        let rep = seminormal_rep(&p(&[2, 1]), 2).unwrap();
        let minus_u = -&LaurentHalf::u();
        assert_eq!(trace_word(&rep, &WeylWord(vec![1, 2])).unwrap(), minus_u);
        assert_eq!(trace_word(&rep, &WeylWord(vec![2, 1])).unwrap(), minus_u);
        assert_eq!(
            trace_word(&rep, &WeylWord::identity()).unwrap(),
            LaurentHalf::constant(2)
        );
    }

    #[test]
    fn bad_input() {
        assert!(seminormal_rep(&p(&[2, 1]), 3).is_err());
        let rep = seminormal_rep(&p(&[2, 1]), 2).unwrap();
        assert_eq!(
            trace_word(&rep, &WeylWord(vec![3])),
            Err(HeckeError::LetterOutOfRange(3, 2))
        );
        assert!(matches!(
            oracle_compare(WeylType::d(4).unwrap()),
            Err(HeckeError::Unsupported(_))
        ));
        assert!(oracle_compare(WeylType::a(6).unwrap()).is_err());
    }

    #[test]
    fn broken_rep_is_rejected() {
        let u = RatFun::from(LaurentHalf::u());
        let gens = vec![
            RfMatrix::scalar(1, u.clone()),
            RfMatrix::scalar(1, -&RatFun::one()),
        ];
        assert!(HeckeRep::new(gens, WeylType::a(2).unwrap().coxeter_matrix()).is_err());
        let gens = vec![RfMatrix::scalar(1, RatFun::from(2))];
        assert!(HeckeRep::new(gens, WeylType::a(1).unwrap().coxeter_matrix()).is_err());
    }

    #[test]
    fn involutions_at_one() {
        for lambda in partitions(5) {
            assert!(seminormal_rep(&lambda, 4)
                .unwrap()
                .specializes_to_involutions()
                .unwrap());
        }
    }

    #[test]
    fn ordering_invariance() {
        for n in 1..=4 {
            let t = WeylType::a(n).unwrap();
            for lambda in partitions(n as u32 + 1) {
                let rep = seminormal_rep(&lambda, n).unwrap();
                let base = trace_word(&rep, &standard_coxeter_word(t)).unwrap();
                for ord in orderings(n) {
                    let w = coxeter_element(t, &ord).unwrap();
                    assert_eq!(trace_word(&rep, &w).unwrap(), base, "{lambda} {ord:?}");
                }
            }
        }
    }

    #[test]
    fn b_extension_anchors() {
        for n in 2..=4 {
            let word = standard_coxeter_word(WeylType::b(n).unwrap());
            let triv = seminormal_rep(&p(&[n as u32]), n - 1).unwrap();
            let rep = bn_extend(&triv, TScalar::U).unwrap();
            assert_eq!(
                trace_word(&rep, &word).unwrap(),
                LaurentHalf::u_pow(n as i64)
            );
            let sgn = seminormal_rep(&Partition::hook(n as u32, 1), n - 1).unwrap();
            let rep = bn_extend(&sgn, TScalar::MinusOne).unwrap();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                trace_word(&rep, &word).unwrap(),
                LaurentHalf::constant(sign)
            );
        }
        let rep = bn_extend(&seminormal_rep(&p(&[2, 1]), 2).unwrap(), TScalar::U).unwrap();
        let word = standard_coxeter_word(WeylType::b(3).unwrap());
        assert_eq!(trace_word(&rep, &word).unwrap(), -&LaurentHalf::u_pow(2));
    }

    #[test]
    fn oracle_small_ranks() {
        let a1 = oracle_compare(WeylType::a(1).unwrap()).unwrap();
        assert!(a1.pass);
        assert_eq!(a1.rows.len(), 2);
        let a4 = oracle_compare(WeylType::a(4).unwrap()).unwrap();
        assert!(a4.pass);
        assert_eq!(a4.rows.len(), 7);
        let b3 = oracle_compare(WeylType::b(3).unwrap()).unwrap();
        assert!(b3.pass);
        assert_eq!(b3.rows.len(), 6);
    }

    #[test]
    fn square_sum_is_coxeter_number() {
        for n in 1..=4 {
            assert_eq!(
                specialized_square_sum(n).unwrap(),
                BigRational::from_integer(BigInt::from(n + 1))
            );
        }
    }
}
