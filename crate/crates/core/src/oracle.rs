//! Brute-force references for differential testing.
//!
//! Nothing here touches [`crate::csais`]; the oracles are built only from the
//! Lyndon factorization and the plain string orders, and run in roughly
//! `O(n² log n)` time.

use std::cmp::Ordering;

use crate::csais::CircularSuffixArray;
use crate::lyndon::{duval_factorize, ComposedFactorization};
use crate::orders::{lex_compare, omega_compare, rotate};
use crate::{Error, Result};

/// Sort every conjugate of every factor of `R` by ω-order.
pub fn naive_csa<T: Ord + Clone>(cf: &ComposedFactorization<T>) -> Result<CircularSuffixArray> {
    let text = cf.reduced_text();
    let mut conjugates: Vec<(usize, Vec<T>)> = Vec::with_capacity(text.len());
    for span in cf.spans() {
        let factor = &text[span.range()];
        for r in 0..factor.len() {
            conjugates.push((span.start + r, rotate(factor, r)));
        }
    }
    conjugates.sort_by(|a, b| omega_compare(&a.1, &b.1));
    if let Some(w) = conjugates.windows(2).find(|w| omega_compare(&w[0].1, &w[1].1) == Ordering::Equal) {
        return Err(Error::DuplicateConjugate { first: w[0].0, second: w[1].0 });
    }
    Ok(CircularSuffixArray::new(conjugates.into_iter().map(|(p, _)| p).collect()))
}

/// Last characters of all conjugates of all Lyndon factors (repeats kept),
/// sorted by ω-order.
pub fn naive_bbwt<T: Ord + Clone>(text: &[T]) -> Vec<T> {
    let f = duval_factorize(text);
    let words: Vec<&[T]> = f.factors(text).collect();
    naive_conjugate_sort(&words)
}

/// Extended BWT straight from its definition: every conjugate of every word,
/// ω-sorted, last characters.
pub fn naive_ebwt<T: Ord + Clone>(words: &[&[T]]) -> Vec<T> {
    naive_conjugate_sort(words)
}

fn naive_conjugate_sort<T: Ord + Clone>(words: &[&[T]]) -> Vec<T> {
    let mut conjugates: Vec<Vec<T>> = Vec::new();
    for w in words {
        for r in 0..w.len() {
            conjugates.push(rotate(w, r));
        }
    }
    conjugates.sort_by(|a, b| omega_compare(a, b));
    conjugates.into_iter().map(|c| c.last().unwrap().clone()).collect()
}

/// Suffix array by comparison sort; a proper prefix sorts first.
pub fn naive_sa<T: Ord>(text: &[T]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..text.len()).collect();
    sa.sort_by(|&a, &b| lex_compare(&text[a..], &text[b..]));
    sa
}

/// `BWT[i] = T[SA[i] - 1]`, wrapping to the last character when `SA[i]` is
/// the first position.
pub fn naive_bwt<T: Ord + Clone>(text: &[T]) -> Vec<T> {
    let n = text.len();
    naive_sa(text).into_iter().map(|i| text[(i + n - 1) % n].clone()).collect()
}
