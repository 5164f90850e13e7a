//! Group subshifts of finite type over ℤ.
//!
//! Alphabets are finite groups ([`alphabet::Alphabet`]); shifts are cut out by
//! a subgroup of allowed windows ([`shiftspace::GroupSFT`]) and mapped by
//! sliding homomorphisms ([`ca::GroupCA`]).

pub mod alphabet;
pub mod blocks;
pub mod ca;
pub mod catalog;
pub mod chains;
pub mod cli;
pub mod error;
pub mod periodic;
pub mod shiftspace;

pub use error::{Error, Result};
