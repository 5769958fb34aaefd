//! The user guide, compiled here so its examples run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/weights.md")]
pub mod weights {}
#[doc = include_str!("../../../book/src/cls.md")]
pub mod cls {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/rank_varieties.md")]
pub mod rank_varieties {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
