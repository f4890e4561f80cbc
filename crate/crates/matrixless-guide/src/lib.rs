//! mdBook cannot run a book's code blocks as tests, so this crate
//! includes each chapter as a doc comment: `cargo test --doc` then
//! compiles and executes every snippet. One module per chapter keeps
//! failures attributable to their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/symbols.md")]
pub mod symbols {}

#[doc = include_str!("../../../book/src/precision.md")]
pub mod precision {}

#[doc = include_str!("../../../book/src/eigensolver.md")]
pub mod eigensolver {}

#[doc = include_str!("../../../book/src/expansion.md")]
pub mod expansion {}

#[doc = include_str!("../../../book/src/recovery.md")]
pub mod recovery {}

#[doc = include_str!("../../../book/src/prediction.md")]
pub mod prediction {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/formats.md")]
pub mod formats {}
