//! A string-rewriting workbench for finitely presented monoids with zero.
//!
//! Presentations are oriented into rewriting systems under a shortlex
//! order, checked for completeness by critical-pair analysis, and then used
//! to decide the word problem, enumerate normal forms, build two-sided unit
//! witnesses, probe congruences on bounded balls and measure derivation
//! areas.

pub mod analysis;
pub mod catalog;
pub mod completion;
pub mod error;
pub mod matcher;
pub mod presentation;
pub mod system;
pub mod word;

pub use error::{Error, Result};
pub use presentation::{Presentation, Relation};
pub use system::{check_termination, orient, RewritingSystem, Rule, Step, Strategy};
pub use word::{Alphabet, Element, Letter, ShortlexOrder, Word};
