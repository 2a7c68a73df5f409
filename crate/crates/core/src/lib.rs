//! Bijections between words with odd, distinct Lyndon factors and words with
//! even Lyndon factors, the necklace encodings of permutations with restricted
//! descent and ascent sets, and exhaustive verification of the resulting
//! counting identities.

pub mod bijection;
pub mod error;
pub mod harness;
pub mod lyndon;
pub mod necklace;
pub mod perms;
pub mod series;
pub mod words;

pub use error::{Error, Result};
