//! Bijective Burrows-Wheeler transform (BBWT) construction in linear time.
//!
//! The forward transform factorizes the input into Lyndon words, collapses
//! repeated factors, and sorts every conjugate of every distinct factor in
//! ω-order with a circular variant of induced suffix sorting (SAIS). The
//! resulting circular suffix array is then read back into the BBWT.
//!
//! ```
//! let out = bbwt_core::transform::bbwt(b"cbbcacbbcadacbadacba");
//! assert_eq!(out.output, b"abddbcccccbbbaaabcaa");
//! assert_eq!(bbwt_core::transform::inverse_bbwt(&out.output), b"cbbcacbbcadacbadacba");
//! ```
//!
//! Positions are 0-based throughout the library. Types that are shown to
//! people (traces, CLI listings) offer `*_one_based` accessors.

pub mod csais;
mod error;
pub mod lyndon;
pub mod oracle;
pub mod orders;
pub mod trace;
pub mod transform;

pub use error::{Error, Result};

use std::fmt::Debug;

/// A character of a text at some recursion level: a byte at the top level,
/// a dense integer rank below it.
pub trait Symbol: Copy + Ord + Debug {
    /// Position of this symbol in a dense alphabet `0..sigma`.
    fn index(self) -> usize;
}

impl Symbol for u8 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl Symbol for u16 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl Symbol for u32 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl Symbol for usize {
    #[inline]
    fn index(self) -> usize {
        self
    }
}
