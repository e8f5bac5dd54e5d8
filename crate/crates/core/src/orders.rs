//! The three string orders the construction relies on, and conjugate helpers.
//!
//! * lexicographic order (`lex_compare`), where a proper prefix is smaller;
//! * ω-order (`omega_compare`), comparing the infinite powers `u^ω` and `v^ω`;
//! * LMS order (`lms_compare`), comparing typed substrings by character and
//!   then by suffix type, with L sorting before S.

use std::cmp::Ordering;
use std::fmt;

/// Suffix (or inf-suffix) type of a text position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuffixType {
    L,
    S,
    /// Leftmost S: an S position whose predecessor is L, or a factor start.
    SStar,
}

impl SuffixType {
    /// `L` or `S`; `SStar` counts as `S`.
    #[inline]
    pub fn is_s(self) -> bool {
        !matches!(self, SuffixType::L)
    }

    fn class(self) -> u8 {
        self.is_s() as u8
    }
}

impl fmt::Display for SuffixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuffixType::L => "L",
            SuffixType::S => "S",
            SuffixType::SStar => "S*",
        })
    }
}

/// A character together with the type of the suffix starting there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypedSymbol<T> {
    pub symbol: T,
    pub ty: SuffixType,
}

impl<T> TypedSymbol<T> {
    pub fn new(symbol: T, ty: SuffixType) -> Self {
        Self { symbol, ty }
    }
}

pub fn lex_compare<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    u.cmp(v)
}

/// Compare `u^ω` with `v^ω`.
///
/// Two infinite powers that agree on their first `|u| + |v|` characters are
/// equal, so at most that many characters are inspected.
///
/// Panics if either word is empty.
pub fn omega_compare<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    assert!(!u.is_empty() && !v.is_empty(), "omega order is undefined for the empty word");
    let (mut i, mut j) = (0, 0);
    for _ in 0..u.len() + v.len() {
        match u[i].cmp(&v[j]) {
            Ordering::Equal => {}
            other => return other,
        }
        i += 1;
        if i == u.len() {
            i = 0;
        }
        j += 1;
        if j == v.len() {
            j = 0;
        }
    }
    Ordering::Equal
}

/// Compare two typed substrings in LMS order.
///
/// At the first position where either the characters or the type classes
/// differ, the smaller character wins; on equal characters an L position is
/// smaller than an S (or S*) position. If one input is a proper prefix of the
/// other, the shorter one is smaller.
pub fn lms_compare<T: Ord>(u: &[TypedSymbol<T>], v: &[TypedSymbol<T>]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        let ord = a.symbol.cmp(&b.symbol).then(a.ty.class().cmp(&b.ty.class()));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    u.len().cmp(&v.len())
}

/// Start of a lexicographically least rotation of `u` (the first one when
/// `u` is a power). Linear time: Duval's factorization run over `u·u`.
pub fn least_rotation<T: Ord>(u: &[T]) -> usize {
    let n = u.len();
    let (mut i, mut best) = (0, 0);
    while i < n {
        best = i;
        let (mut j, mut k) = (i + 1, i);
        while j < 2 * n {
            match u[k % n].cmp(&u[j % n]) {
                Ordering::Less => k = i,
                Ordering::Equal => k += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    best
}

/// Rotation `r` such that `u[r..] ++ u[..r]` is the Lyndon conjugate of `u`.
pub fn min_conjugate<T: Ord>(u: &[T]) -> crate::Result<usize> {
    if u.is_empty() || !is_primitive(u) {
        return Err(crate::Error::NonPrimitive);
    }
    Ok(least_rotation(u))
}

/// Whether `u` is not of the form `w^k` with `k >= 2`, decided from the
/// smallest period given by the KMP border of `u`.
pub fn is_primitive<T: Eq>(u: &[T]) -> bool {
    let n = u.len();
    if n <= 1 {
        return true;
    }
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut b = border[i - 1];
        while b > 0 && u[i] != u[b] {
            b = border[b - 1];
        }
        if u[i] == u[b] {
            b += 1;
        }
        border[i] = b;
    }
    let period = n - border[n - 1];
    period == n || !n.is_multiple_of(period)
}

/// The `r`-th rotation `u[r..] ++ u[..r]`.
pub fn rotate<T: Clone>(u: &[T], r: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(u.len());
    out.extend_from_slice(&u[r..]);
    out.extend_from_slice(&u[..r]);
    out
}
