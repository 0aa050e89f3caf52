//! Character values on the basis element `T_w` of a Coxeter element `w`.
//!
//! Every value has the shape `eps * v^vexp` with `eps` in `{-1, 0, 1}`.
//! Classical types are evaluated from closed formulas on the labels,
//! exceptional types from embedded tables.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::labels::{enumerate_labels, hook_decompose, CharLabel, Partition, Split};
use crate::laurent::LaurentHalf;
use crate::tables;
use crate::weyl::{Family, WeylType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("{label} is not a character label for type {weyl_type}")]
    LabelMismatch { label: String, weyl_type: WeylType },
    #[error("no eigenvalue stratum of type {weyl_type} has a = {a}")]
    NoStratum { weyl_type: WeylType, a: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse value {0:?}")]
pub struct ParseValueError(String);

/// `epsilon * v^vexp` where `v = u^(1/2)`. `vexp` is 0 whenever
/// `epsilon` is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoxValue {
    epsilon: i8,
    vexp: u32,
}

impl CoxValue {
    pub const ZERO: CoxValue = CoxValue {
        epsilon: 0,
        vexp: 0,
    };

    pub fn new(epsilon: i8, vexp: u32) -> Self {
        assert!((-1..=1).contains(&epsilon), "epsilon must be -1, 0 or 1");
        if epsilon == 0 {
            Self::ZERO
        } else {
            Self { epsilon, vexp }
        }
    }

    /// `(-1)^parity * u^k`.
    fn signed_u_power(parity: u32, k: u32) -> Self {
        Self::new(if parity.is_multiple_of(2) { 1 } else { -1 }, 2 * k)
    }

    pub fn epsilon(self) -> i8 {
        self.epsilon
    }

    pub fn vexp(self) -> u32 {
        self.vexp
    }

    pub fn is_zero(self) -> bool {
        self.epsilon == 0
    }

    pub fn to_laurent(self) -> LaurentHalf {
        LaurentHalf::monomial(i64::from(self.epsilon), i64::from(self.vexp))
    }
}

impl fmt::Display for CoxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl FromStr for CoxValue {
    type Err = ParseValueError;

    /// Inverse of the `Display` rendering: `0`, `1`, `-u`, `u^3`, `-u^(7/2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseValueError(s.to_string());
        let t = s.trim();
        if t == "0" {
            return Ok(Self::ZERO);
        }
        let (epsilon, body) = match t.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, t),
        };
        let vexp = match body {
            "1" => 0,
            "u" => 2,
            _ => {
                let pow = body.strip_prefix("u^").ok_or_else(err)?;
                if let Some(half) = pow.strip_prefix('(').and_then(|p| p.strip_suffix("/2)")) {
                    let k: u32 = half.parse().map_err(|_| err())?;
                    if k.is_multiple_of(2) {
                        return Err(err());
                    }
                    k
                } else {
                    let k: u32 = pow.parse().map_err(|_| err())?;
                    if k < 2 {
                        return Err(err());
                    }
                    2 * k
                }
            }
        };
        Ok(Self::new(epsilon, vexp))
    }
}

fn mismatch(t: WeylType, label: &CharLabel) -> CoxError {
    CoxError::LabelMismatch {
        label: label.to_string(),
        weyl_type: t,
    }
}

/// Type `A_n`, label `lambda` of `n + 1`: non-zero exactly on hooks
/// `(k, 1^(n+1-k))`, where the value is `(-1)^(n+1+k) u^(k-1)`.
fn value_a(n: u32, lambda: &Partition) -> CoxValue {
    match hook_decompose(lambda) {
        Some(k) => CoxValue::signed_u_power(n + 1 + k, k - 1),
        None => CoxValue::ZERO,
    }
}

/// Type `B_n`: `(hook_k, -) -> (-1)^(n+k+1) u^(k-1)` and
/// `(-, hook_k) -> (-1)^(n+k) u^k`.
fn value_b(n: u32, alpha: &Partition, beta: &Partition) -> CoxValue {
    match (alpha.is_empty(), beta.is_empty()) {
        (false, true) => match hook_decompose(alpha) {
            Some(k) => CoxValue::signed_u_power(n + k + 1, k - 1),
            None => CoxValue::ZERO,
        },
        (true, false) => match hook_decompose(beta) {
            Some(k) => CoxValue::signed_u_power(n + k, k),
            None => CoxValue::ZERO,
        },
        _ => CoxValue::ZERO,
    }
}

/// `(k, 2, 1^(n-k-2))` with `k >= 2`: returns `k`.
fn two_hook_arm(n: u32, beta: &Partition) -> Option<u32> {
    let parts = beta.parts();
    if parts.len() < 2 || beta.size() != n {
        return None;
    }
    let (k, second) = (parts[0], parts[1]);
    (k >= 2 && second == 2 && parts[2..].iter().all(|&p| p == 1)).then_some(k)
}

/// Type `D_n`, unordered pair `{alpha, beta}`.
fn value_d(n: u32, first: &Partition, second: &Partition, split: Split) -> CoxValue {
    if split != Split::None {
        return CoxValue::ZERO;
    }
    let one = Partition::new(vec![1]);
    for (a, b) in [(first, second), (second, first)] {
        if *a == one && b.size() == n - 1 {
            if let Some(k) = hook_decompose(b) {
                return CoxValue::signed_u_power(n + k, k);
            }
        }
        if a.is_empty() {
            if b.parts().iter().all(|&p| p == 1) {
                return CoxValue::signed_u_power(n, 0);
            }
            if b.parts() == [n] {
                return CoxValue::signed_u_power(0, n);
            }
            if let Some(k) = two_hook_arm(n, b) {
                return CoxValue::signed_u_power(n + k + 1, k);
            }
        }
    }
    CoxValue::ZERO
}

fn value_exceptional(f: Family, d: u32, e: u32, prime: crate::labels::Prime) -> CoxValue {
    tables::exceptional_values(f)
        .iter()
        .find(|&&(dd, ee, pp, _, _)| (dd, ee, pp) == (d, e, prime))
        .map_or(CoxValue::ZERO, |&(_, _, _, eps, vexp)| {
            CoxValue::new(eps, vexp)
        })
}

/// The value of the character labelled `label` on `T_w`, `w` a Coxeter
/// element of `W(t)`.
pub fn cox_value(t: WeylType, label: &CharLabel) -> Result<CoxValue, CoxError> {
    if !label.is_valid_for(t) {
        return Err(mismatch(t, label));
    }
    let n = t.rank() as u32;
    Ok(match label {
        CharLabel::TypeA(lambda) => value_a(n, lambda),
        CharLabel::TypeB { alpha, beta } => value_b(n, alpha, beta),
        CharLabel::TypeD {
            first,
            second,
            split,
        } => value_d(n, first, second, *split),
        CharLabel::Exc { d, e, prime } => value_exceptional(t.family(), *d, *e, *prime),
    })
}

/// One row per label, in [`enumerate_labels`] order.
pub fn cox_table(t: WeylType) -> Vec<(CharLabel, CoxValue)> {
    enumerate_labels(t)
        .into_iter()
        .map(|label| {
            let value = cox_value(t, &label).expect("enumerated labels are valid");
            (label, value)
        })
        .collect()
}

/// Rows `(vexp, a)` pairing the absolute value `(q^(1/2))^vexp` of a
/// Frobenius eigenvalue with the exact power `q^a` dividing the degree of
/// the corresponding unipotent character. Sorted by increasing `vexp`.
pub fn exponent_table(t: WeylType) -> Vec<(u32, u32)> {
    let n = t.rank() as u32;
    match t.family() {
        Family::A => (0..=n)
            .map(|i| (2 * i, (n - i) * (n - i + 1) / 2))
            .collect(),
        Family::B => (0..=n).map(|i| (2 * i, (n - i) * (n - i))).collect(),
        Family::D => (0..=n)
            .map(|i| {
                let a = match i {
                    0 => n * (n - 1),
                    i if i == n => 0,
                    i => (n - i) * (n - i - 1) + 1,
                };
                (2 * i, a)
            })
            .collect(),
        f => tables::exceptional_exponents(f).to_vec(),
    }
}

/// The exponent `m` of `v` determined by the invariant `a`.
pub fn m_from_a(t: WeylType, a: u32) -> Result<u32, CoxError> {
    exponent_table(t)
        .into_iter()
        .find(|&(_, aa)| aa == a)
        .map(|(vexp, _)| vexp)
        .ok_or(CoxError::NoStratum { weyl_type: t, a })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonSum {
    pub sum: u32,
    pub coxeter_number: u32,
    pub ok: bool,
}

/// Compares the sum of `eps^2` over all characters with the Coxeter number.
pub fn epsilon_sum_check(t: WeylType) -> EpsilonSum {
    let sum = cox_table(t)
        .iter()
        .map(|(_, v)| (v.epsilon() as i32 * v.epsilon() as i32) as u32)
        .sum();
    let h = t.coxeter_number();
    EpsilonSum {
        sum,
        coxeter_number: h,
        ok: sum == h,
    }
}
