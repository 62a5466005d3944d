//! Doc-test shim for the guide under `book/`.
//!
//! mdbook renders the chapters but does not run their snippets against the
//! workspace crates. Including each chapter as module documentation makes
//! `cargo test -p semiphoton-book --doc` compile and execute every fenced
//! Rust block, so the book cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/constants.md")]
pub mod constants {}

#[doc = include_str!("../../../book/src/dirac-operators.md")]
pub mod dirac_operators {}

#[doc = include_str!("../../../book/src/electromagnetic-form.md")]
pub mod electromagnetic_form {}

#[doc = include_str!("../../../book/src/ring-waves.md")]
pub mod ring_waves {}

#[doc = include_str!("../../../book/src/torus-model.md")]
pub mod torus_model {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
