//! Finite bounded posets with a unary operation `'`, their generalized
//! Sasaki operations
//!
//! ```text
//! x ⊙ y = Min U(x, y') ∧ y        x → y = x' ∨ Max L(x, y)
//! ```
//!
//! and decision procedures for orthogonality, orthomodularity and the
//! adjointness of `⊙` and `→`.
//!
//! ```
//! use orthoposet::{fixtures, is_adjoint_pair, Property};
//!
//! let m3 = fixtures::m3();
//! assert!(Property::Orthogonal.check(&m3).unwrap().holds);
//! assert!(is_adjoint_pair(&m3).unwrap().is_adjoint());
//! ```

pub mod adjoint;
pub mod enumeration;
pub mod fixtures;
pub mod io;
pub mod poset;
pub mod properties;
pub mod sasaki;
pub mod subset;
pub mod verify;

pub use adjoint::{
    check_a1, check_a2, check_condition, check_modular_corollary, check_section4_lemma,
    find_o6_subalgebra, is_adjoint_pair, AdjointError, AdjointReport, Condition, SasakiTables, O6,
};
pub use enumeration::{
    canonical_form, canonical_form_op, count_posets, enumerate_posets, enumerate_unary_ops, search,
    CanonicalKey, EnumerationError, Flag, SearchGoal, UnaryFilter,
};
pub use io::{parse_poset, PosetDocument};
pub use poset::{OpPoset, Poset, PosetError};
pub use properties::{Property, PropertyReport, Witness};
pub use sasaki::{arrow, odot, op_tables, OpKind, OpTable, SasakiError};
pub use subset::Subset;
