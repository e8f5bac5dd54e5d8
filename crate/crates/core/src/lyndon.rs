//! Lyndon factorization (Duval) and its composed form.
//!
//! Every string factors uniquely into a lexicographically non-increasing
//! sequence of Lyndon words. Equal factors are always adjacent, so collapsing
//! runs of them into `(factor, multiplicity)` pairs yields the composed
//! factorization, whose distinct factors concatenate to the reduced text `R`.

use std::cmp::Ordering;
use std::ops::Range;

/// A half-open, 0-based span `start..end` of a text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorSpan {
    pub start: usize,
    pub end: usize,
}

impl FactorSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start < end, "empty factor span {start}..{end}");
        Self { start, end }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    #[inline]
    pub fn range(&self) -> Range<usize> {
        self.start..self.end
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.start <= i && i < self.end
    }

    /// First position, counting from 1.
    pub fn begin_one_based(&self) -> usize {
        self.start + 1
    }

    /// Last position (inclusive), counting from 1.
    pub fn end_one_based(&self) -> usize {
        self.end
    }
}

/// Lyndon factors of a text, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    spans: Vec<FactorSpan>,
    text_len: usize,
}

impl LyndonFactorization {
    pub fn spans(&self) -> &[FactorSpan] {
        &self.spans
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// Borrow each factor out of `text`.
    pub fn factors<'a, T>(&'a self, text: &'a [T]) -> impl Iterator<Item = &'a [T]> + 'a {
        assert_eq!(text.len(), self.text_len, "factorization belongs to another text");
        self.spans.iter().map(move |s| &text[s.range()])
    }
}

/// Duval's algorithm.
pub fn duval_factorize<T: Ord>(text: &[T]) -> LyndonFactorization {
    duval(text, &mut 0)
}

/// Duval's algorithm, also returning the number of symbol comparisons made.
pub fn duval_factorize_counted<T: Ord>(text: &[T]) -> (LyndonFactorization, usize) {
    let mut comparisons = 0;
    let f = duval(text, &mut comparisons);
    (f, comparisons)
}

fn duval<T: Ord>(s: &[T], comparisons: &mut usize) -> LyndonFactorization {
    let mut spans = Vec::new();
    duval_runs(s, comparisons, |start, period, count| {
        spans.extend((0..count).map(|k| FactorSpan::new(start + k * period, start + (k + 1) * period)));
    });
    LyndonFactorization { spans, text_len: s.len() }
}

/// Duval's algorithm reporting each maximal run of equal factors as
/// `(start, factor length, count)`.
fn duval_runs<T: Ord>(s: &[T], comparisons: &mut usize, mut run: impl FnMut(usize, usize, usize)) {
    let n = s.len();
    let mut i = 0;
    while i < n {
        // s[i..j] is a prefix of (s[i..i+p])^k with period p = j - k.
        let (mut j, mut k) = (i + 1, i);
        while j < n {
            *comparisons += 1;
            match s[k].cmp(&s[j]) {
                Ordering::Less => k = i,
                Ordering::Equal => k += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        let period = j - k;
        let count = (k - i) / period + 1;
        run(i, period, count);
        i += count * period;
    }
}

/// The composed Lyndon factorization `T = T_1^τ_1 ⋯ T_t^τ_t` together with
/// the reduced text `R = T_1 ⋯ T_t`.
///
/// Spans index into `R`. A position-to-factor table makes [`factor_of`],
/// [`cyclic_next`] and [`cyclic_prev`] constant time.
///
/// [`factor_of`]: ComposedFactorization::factor_of
/// [`cyclic_next`]: ComposedFactorization::cyclic_next
/// [`cyclic_prev`]: ComposedFactorization::cyclic_prev
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedFactorization<T> {
    reduced: Vec<T>,
    spans: Vec<FactorSpan>,
    multiplicities: Vec<usize>,
    origin_len: usize,
    owner: Vec<u32>,
}

/// Collapse runs of equal adjacent factors.
pub fn compose<T: Ord + Clone>(f: &LyndonFactorization, text: &[T]) -> ComposedFactorization<T> {
    assert_eq!(text.len(), f.text_len, "factorization belongs to another text");
    let mut reduced = Vec::new();
    let mut spans: Vec<FactorSpan> = Vec::new();
    let mut multiplicities = Vec::new();
    let mut last: Option<&[T]> = None;
    for factor in f.factors(text) {
        if last == Some(factor) {
            *multiplicities.last_mut().unwrap() += 1;
            continue;
        }
        let start = reduced.len();
        reduced.extend_from_slice(factor);
        spans.push(FactorSpan::new(start, reduced.len()));
        multiplicities.push(1);
        last = Some(factor);
    }
    ComposedFactorization::from_parts(reduced, spans, multiplicities, text.len())
}

impl<T: Ord + Clone> ComposedFactorization<T> {
    /// Factorize and compose in one go.
    pub fn of(text: &[T]) -> Self {
        let mut reduced = Vec::new();
        let mut spans = Vec::new();
        let mut multiplicities = Vec::new();
        // A run produced by Duval's loop is always maximal.
        duval_runs(text, &mut 0, |start, period, count| {
            let at = reduced.len();
            reduced.extend_from_slice(&text[start..start + period]);
            spans.push(FactorSpan::new(at, at + period));
            multiplicities.push(count);
        });
        Self::from_parts(reduced, spans, multiplicities, text.len())
    }
}

impl<T> ComposedFactorization<T> {
    pub(crate) fn from_parts(
        reduced: Vec<T>,
        spans: Vec<FactorSpan>,
        multiplicities: Vec<usize>,
        origin_len: usize,
    ) -> Self {
        assert!(u32::try_from(spans.len()).is_ok(), "more than 2^32 distinct Lyndon factors");
        let mut owner = vec![0u32; reduced.len()];
        for (x, span) in spans.iter().enumerate() {
            owner[span.range()].fill(x as u32);
        }
        Self { reduced, spans, multiplicities, origin_len, owner }
    }

    /// The reduced text `R`.
    pub fn reduced_text(&self) -> &[T] {
        &self.reduced
    }

    pub fn spans(&self) -> &[FactorSpan] {
        &self.spans
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn origin_len(&self) -> usize {
        self.origin_len
    }

    /// Number of distinct factors `t`.
    pub fn factor_count(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty()
    }

    /// Index of the factor containing position `i` of `R`, with its span.
    ///
    /// Panics if `i` is out of range.
    #[inline]
    pub fn factor_of(&self, i: usize) -> (usize, FactorSpan) {
        let x = self.owner[i] as usize;
        (x, self.spans[x])
    }

    /// The position after `i` inside its factor, wrapping to the factor start.
    #[inline]
    pub fn cyclic_next(&self, i: usize) -> usize {
        let (_, span) = self.factor_of(i);
        if i + 1 == span.end {
            span.start
        } else {
            i + 1
        }
    }

    /// The position before `i` inside its factor, wrapping to the factor end.
    #[inline]
    pub fn cyclic_prev(&self, i: usize) -> usize {
        let (_, span) = self.factor_of(i);
        if i == span.start {
            span.end - 1
        } else {
            i - 1
        }
    }

    pub fn factor(&self, x: usize) -> &[T] {
        &self.reduced[self.spans[x].range()]
    }

    /// Span of the `x`-th composed factor's whole run inside the original text.
    pub fn origin_spans(&self) -> Vec<FactorSpan> {
        let mut at = 0;
        self.spans
            .iter()
            .zip(&self.multiplicities)
            .map(|(s, &tau)| {
                let run = FactorSpan::new(at, at + s.len() * tau);
                at = run.end;
                run
            })
            .collect()
    }
}

impl<T: Clone> ComposedFactorization<T> {
    /// Repeat each factor of `R` by its multiplicity, recovering the text.
    pub fn expand(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.origin_len);
        for (span, &tau) in self.spans.iter().zip(&self.multiplicities) {
            for _ in 0..tau {
                out.extend_from_slice(&self.reduced[span.range()]);
            }
        }
        out
    }
}

/// Whether `w` is a Lyndon word: nonempty and strictly smaller than each of
/// its proper suffixes. Quadratic; meant for checks.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &[u8] = b"cbbcacbbcadacbadacba";

    fn factors_of(text: &[u8]) -> Vec<&[u8]> {
        duval_factorize(text).spans().iter().map(|s| &text[s.range()]).collect()
    }

    /// Every factorization of `text` into Lyndon words that is non-increasing.
    fn brute_force_factorizations(text: &[u8]) -> Vec<Vec<&[u8]>> {
        fn go<'a>(rest: &'a [u8], acc: &mut Vec<&'a [u8]>, out: &mut Vec<Vec<&'a [u8]>>) {
            if rest.is_empty() {
                out.push(acc.clone());
                return;
            }
            for cut in 1..=rest.len() {
                let head = &rest[..cut];
                if !is_lyndon(head) || acc.last().is_some_and(|&prev| prev < head) {
                    continue;
                }
                acc.push(head);
                go(&rest[cut..], acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(text, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn running_example_factors() {
        let want: Vec<&[u8]> = vec![b"c", b"bbc", b"acbbcad", b"acbad", b"acb", b"a"];
        assert_eq!(factors_of(RUNNING), want);
    }

    #[test]
    fn empty_text() {
        let f = duval_factorize::<u8>(&[]);
        assert!(f.is_empty());
        let cf = compose(&f, &[] as &[u8]);
        assert!(cf.is_empty());
        assert_eq!(cf.expand(), Vec::<u8>::new());
    }

    #[test]
    fn banana_matches_brute_force() {
        let all = brute_force_factorizations(b"banana");
        assert_eq!(all.len(), 1, "Lyndon factorization must be unique");
        let want: Vec<&[u8]> = vec![b"b", b"an", b"an", b"a"];
        assert_eq!(all[0], want);
        assert_eq!(factors_of(b"banana"), want);
    }

    #[test]
    fn duval_agrees_with_brute_force_exhaustively() {
        for len in 0..=9u32 {
            for code in 0..3usize.pow(len) {
                let mut c = code;
                let text: Vec<u8> = (0..len)
                    .map(|_| {
                        let ch = b'a' + (c % 3) as u8;
                        c /= 3;
                        ch
                    })
                    .collect();
                let brute = brute_force_factorizations(&text);
                assert_eq!(brute.len(), 1);
                assert_eq!(factors_of(&text), brute[0], "text {:?}", text);
            }
        }
    }

    #[test]
    fn compose_running_example_is_identity() {
        let cf = ComposedFactorization::of(RUNNING);
        assert_eq!(cf.reduced_text(), RUNNING);
        assert!(cf.multiplicities().iter().all(|&t| t == 1));
        assert_eq!(cf.factor_count(), 6);
    }

    #[test]
    fn compose_collapses_runs() {
        let cf = ComposedFactorization::of(b"aaa");
        assert_eq!(cf.reduced_text(), b"a");
        assert_eq!(cf.multiplicities(), &[3]);
        assert_eq!(cf.expand(), b"aaa");

        let cf = ComposedFactorization::of(b"banana");
        assert_eq!(cf.reduced_text(), b"bana");
        assert_eq!(cf.multiplicities(), &[1, 2, 1]);
        let factors: Vec<&[u8]> = (0..cf.factor_count()).map(|x| cf.factor(x)).collect();
        assert_eq!(factors, vec![&b"b"[..], b"an", b"a"]);
        assert_eq!(cf.expand(), b"banana");
        let runs: Vec<(usize, usize)> =
            cf.origin_spans().iter().map(|s| (s.begin_one_based(), s.end_one_based())).collect();
        assert_eq!(runs, vec![(1, 1), (2, 5), (6, 6)]);
    }

    #[test]
    fn factor_lookup() {
        let cf = ComposedFactorization::of(RUNNING);
        // 1-based position 6 lies in the third factor, spanning 5..=11.
        let (x, span) = cf.factor_of(5);
        assert_eq!((x + 1, span.begin_one_based(), span.end_one_based()), (3, 5, 11));
        let (x, span) = cf.factor_of(0);
        assert_eq!((x + 1, span.begin_one_based(), span.end_one_based()), (1, 1, 1));

        let bana = ComposedFactorization::of(b"banana");
        let (x, span) = bana.factor_of(2);
        assert_eq!((x + 1, span.begin_one_based(), span.end_one_based()), (2, 2, 3));
    }

    #[test]
    fn cyclic_neighbours_wrap_inside_factors() {
        let cf = ComposedFactorization::of(RUNNING);
        assert_eq!(cf.cyclic_next(10) + 1, 5);
        assert_eq!(cf.cyclic_prev(16) + 1, 19);
        assert_eq!(cf.cyclic_next(0), 0);
        assert_eq!(cf.cyclic_prev(0), 0);
        assert_eq!(cf.cyclic_next(5), 6);
        assert_eq!(cf.cyclic_prev(6), 5);
    }

    #[test]
    #[should_panic]
    fn factor_of_out_of_range_panics() {
        ComposedFactorization::of(b"ab").factor_of(2);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn factorization_invariants(text in proptest::collection::vec(0u8..4, 0..64)) {
                let (f, comparisons) = duval_factorize_counted(&text);
                let factors: Vec<&[u8]> = f.factors(&text).collect();
                prop_assert_eq!(factors.concat(), text.clone());
                for w in &factors {
                    prop_assert!(is_lyndon(w));
                }
                for pair in factors.windows(2) {
                    prop_assert!(pair[0] >= pair[1]);
                }
                prop_assert!(comparisons <= 2 * text.len());
            }

            #[test]
            fn compose_then_expand_is_identity(text in proptest::collection::vec(0u8..3, 0..64)) {
                let cf = ComposedFactorization::of(&text);
                prop_assert_eq!(cf.expand(), text.clone());
                let total: usize = cf.spans().iter().zip(cf.multiplicities()).map(|(s, t)| s.len() * t).sum();
                prop_assert_eq!(total, text.len());
                for x in 1..cf.factor_count() {
                    prop_assert!(cf.factor(x - 1) > cf.factor(x));
                }
            }
        }
    }
}
