//! Runs the code listings of the guide in `book/` as doctests, so the guide
//! cannot drift from the library. One module per chapter keeps failures
//! traceable to their source file.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/conventions.md")]
pub mod conventions {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/root-systems.md")]
pub mod root_systems {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/flags.md")]
pub mod flags {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/toric-fibers.md")]
pub mod toric_fibers {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/twists.md")]
pub mod twists {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/criterion.md")]
pub mod criterion {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/input-format.md")]
pub mod input_format {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
