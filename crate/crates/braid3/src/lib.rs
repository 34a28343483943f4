//! Exact computation in the 3-strand braid group.
//!
//! The crate provides, over exact integer and Laurent-polynomial arithmetic:
//!
//! - braid words and the Artin action on the rank-3 free group ([`word`],
//!   [`artin`]), which doubles as an independent word-problem oracle;
//! - the reduced Burau representation, its mod-p reductions and its t = −1
//!   integral specialization, cross-derived via Fox calculus ([`laurent`],
//!   [`matrix`], [`burau`]);
//! - PSL(2, Z) free-product normal forms with linear-time conjugacy and the
//!   continued-fraction invariant ([`modular`], [`pi`]);
//! - word and conjugacy problems for braids with verified witnesses
//!   ([`conjugacy`]);
//! - crossing data and the Moody polynomial of pure braids ([`moody`]).
//!
//! All values are immutable and all operations are pure functions, so
//! concurrent use needs no coordination.

pub mod artin;
pub mod burau;
pub mod conjugacy;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod modular;
pub mod moody;
pub mod pi;
pub mod word;

pub use error::Error;
pub use word::{BraidWord, Letter, Perm3};
