//! Finite limits and colimits computed compositionally.
//!
//! Diagrams of finite sets with discrete boundaries form a well-supported
//! compact closed category whose arrows can be written as expressions over a
//! handful of structural constants. Taking colimits turns such an expression
//! into an expression over cospans of finite sets, and taking limits into
//! one over spans. This crate implements both algebras, the compiler from
//! diagrams to expressions, and an application to regular languages.

pub mod check;
pub mod cospan;
pub mod dcospan;
pub mod diagram;
pub mod error;
pub mod expr;
pub mod finset;
pub mod gen;
pub mod io;
pub mod kleene;
pub mod monoidal;
pub mod nested;
pub mod oracle;
pub mod union_find;

pub use cospan::{Arrow, Constant, Cospan, Direction, Mode, Span, StructuralKind, Wscc};
pub use diagram::{Cocone, Cone, LabeledDiagram};
pub use error::{Error, Result};
pub use finset::FinFn;
