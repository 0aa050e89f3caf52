//! The `verify` suites. Each produces one line per check.

use clap::ValueEnum;
use coxchar_core::fourier::{cyclic2, is_identity_matrix, matrix_mul};
use coxchar_core::heckerep::{specialized_square_sum, ORACLE_MAX_RANK};
use coxchar_core::symbols::{d_family_fourier, d_family_labels};
use coxchar_core::{
    bn_extend, cox_value, d_epsilon_via_fourier, epsilon_sum_check, fourier_matrix, oracle_compare,
    seminormal_rep, Cyclo, Family, Member, TScalar, WeylType,
};
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Sum of squared signs equals the Coxeter number
    Orthogonality,
    /// Representation traces against the closed forms (types A and B)
    Oracle,
    /// Type-D family signs via symbols and the Fourier matrix
    Dfamily,
    /// Fourier matrix of Z/2 against the embedded family matrix
    Fourier,
    /// Quadratic and braid relations of the oracle representations
    Relations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum OracleFamily {
    A,
    B,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub lines: Vec<(bool, String)>,
}

impl Report {
    fn check(&mut self, ok: bool, msg: String) {
        self.lines.push((ok, msg));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(ok, _)| *ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (ok, msg) in &self.lines {
            out.push_str(if *ok { "PASS " } else { "FAIL " });
            out.push_str(msg);
            out.push('\n');
        }
        let good = self.lines.iter().filter(|(ok, _)| *ok).count();
        out.push_str(&format!("{good}/{} checks passed\n", self.lines.len()));
        out
    }
}

pub struct Options {
    pub max_rank: usize,
    pub family: Option<OracleFamily>,
    pub rank: Option<usize>,
}

pub fn run(suite: Suite, opts: &Options) -> Result<Report, String> {
    let mut report = Report::default();
    match suite {
        Suite::Orthogonality => orthogonality(opts, &mut report),
        Suite::Oracle => oracle(opts, &mut report)?,
        Suite::Dfamily => dfamily(opts, &mut report),
        Suite::Fourier => fourier(&mut report),
        Suite::Relations => relations(opts, &mut report)?,
    }
    Ok(report)
}

fn orthogonality(opts: &Options, report: &mut Report) {
    for t in WeylType::all_up_to_rank(opts.max_rank) {
        let s = epsilon_sum_check(t);
        report.check(
            s.ok,
            format!("{t}: sum of eps^2 = {}, h = {}", s.sum, s.coxeter_number),
        );
    }
}

fn oracle_types(opts: &Options) -> Result<Vec<WeylType>, String> {
    let families: Vec<Family> = match opts.family {
        Some(OracleFamily::A) => vec![Family::A],
        Some(OracleFamily::B) => vec![Family::B],
        None => vec![Family::A, Family::B],
    };
    let max = opts.max_rank.min(ORACLE_MAX_RANK);
    let mut out = Vec::new();
    for f in families {
        match opts.rank {
            Some(r) => {
                if r > ORACLE_MAX_RANK {
                    return Err(format!("oracle ranks go up to {ORACLE_MAX_RANK}"));
                }
                out.push(WeylType::new(f, r).map_err(|e| e.to_string())?);
            }
            None => out.extend((1..=max).filter_map(|r| WeylType::new(f, r).ok())),
        }
    }
    Ok(out)
}

fn oracle(opts: &Options, report: &mut Report) -> Result<(), String> {
    for t in oracle_types(opts)? {
        let r = oracle_compare(t).map_err(|e| e.to_string())?;
        for row in &r.rows {
            report.check(
                row.equal,
                format!(
                    "{t} {}: trace {}, closed form {}",
                    row.label, row.oracle, row.closed_form
                ),
            );
        }
    }
    Ok(())
}

fn dfamily(opts: &Options, report: &mut Report) {
    let max_n = opts.max_rank.clamp(4, 10) as u32;
    for n in 4..=max_n {
        for k in 2..=n - 2 {
            let (l1, l2) = d_family_labels(n, k).expect("k in range");
            let t = WeylType::d(n as usize).expect("n >= 4");
            for (which, label) in [(Member::X1, l1), (Member::X2, l2)] {
                let via = d_epsilon_via_fourier(n, k, which).expect("k in range");
                let closed = cox_value(t, &label).expect("D label").epsilon();
                report.check(
                    via == i32::from(closed),
                    format!(
                        "D{n} k={k} {which} {label}: Fourier eps {via}, closed form eps {closed}"
                    ),
                );
            }
        }
    }
}

fn fourier(report: &mut Report) {
    let m = fourier_matrix(&cyclic2());
    let f = d_family_fourier();
    let equal =
        m.len() == 4 && (0..4).all(|i| (0..4).all(|j| m[i][j] == Cyclo::rational(f[i][j].clone())));
    report.check(
        equal,
        "Z/2 Fourier matrix equals the type-D family matrix".to_string(),
    );
    report.check(
        is_identity_matrix(&matrix_mul(&m, &m)),
        "Z/2 Fourier matrix squares to the identity".to_string(),
    );
}

fn relations(opts: &Options, report: &mut Report) -> Result<(), String> {
    for t in oracle_types(opts)? {
        let n = t.rank();
        match t.family() {
            Family::A => {
                for lambda in coxchar_core::labels::partitions(n as u32 + 1) {
                    let built = seminormal_rep(&lambda, n);
                    let inv = built
                        .as_ref()
                        .ok()
                        .and_then(|r| r.specializes_to_involutions().ok());
                    report.check(
                        built.is_ok() && inv == Some(true),
                        format!("{t} ({lambda}): relations hold, involutions at v = 1"),
                    );
                }
                let s = specialized_square_sum(n).map_err(|e| e.to_string())?;
                let s = s.to_integer().to_u64().unwrap_or(u64::MAX);
                report.check(
                    s == n as u64 + 1,
                    format!("{t}: sum of squared traces at v = 1 is {s}, h = {}", n + 1),
                );
            }
            _ => {
                for alpha in coxchar_core::labels::partitions(n as u32) {
                    let rep_a = seminormal_rep(&alpha, n - 1).map_err(|e| e.to_string())?;
                    for (scalar, name) in [(TScalar::U, "u"), (TScalar::MinusOne, "-1")] {
                        let ok = bn_extend(&rep_a, scalar).is_ok();
                        report.check(
                            ok,
                            format!("{t} from ({alpha}) with T_t = {name}: relations hold"),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}
