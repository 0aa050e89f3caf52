//! Character values of generic Iwahori-Hecke algebras on Coxeter elements.
//!
//! For every finite Weyl group `W` and every irreducible character `phi`,
//! the value of the corresponding Hecke algebra character on `T_w`, with
//! `w` a Coxeter element, is either zero or a signed power of `u^(1/2)`.
//! This crate computes those values exactly, from closed forms for the
//! classical types and embedded tables for the exceptional ones, and ships
//! the machinery used to check them: root systems, explicit Hecke algebra
//! representations, type-D family symbols and the non-abelian Fourier
//! pairing on small groups.
//!
//! ```
//! use coxchar_core::{cox_value, parse_label, WeylType};
//!
//! let t: WeylType = "A3".parse().unwrap();
//! let label = parse_label(t, "2,1,1").unwrap();
//! assert_eq!(cox_value(t, &label).unwrap().to_string(), "u");
//! ```

pub mod coxvalues;
pub mod cyclotomic;
pub mod fourier;
pub mod heckerep;
pub mod labels;
pub mod laurent;
pub mod symbols;
mod tables;
pub mod weyl;

pub use coxvalues::{
    cox_table, cox_value, epsilon_sum_check, exponent_table, m_from_a, CoxError, CoxValue,
    EpsilonSum,
};
pub use cyclotomic::Cyclo;
pub use fourier::{fourier_matrix, m_gamma, omega, pairing, FourierError, GroupData, MClass};
pub use heckerep::{
    bn_extend, oracle_compare, seminormal_rep, trace_word, HeckeError, HeckeRep, TScalar,
};
pub use labels::{
    enumerate_labels, label_count, parse_label, CharLabel, LabelError, Partition, Prime, Split,
};
pub use laurent::{LaurentError, LaurentHalf, RatFun};
pub use symbols::{d_epsilon_via_fourier, d_family_symbols, DFamily, Member, Symbol, SymbolError};
pub use weyl::{Family, RootSystem, WeylElement, WeylError, WeylType, WeylWord};
