//! Circular suffix array construction by induced sorting.
//!
//! The elements being sorted are *inf-suffixes*: the infinite string that
//! starts at a position of `R`, runs to the end of its Lyndon factor and then
//! cycles through that factor forever. Sorting them lexicographically sorts
//! the conjugates of the factors in ω-order, which is exactly the circular
//! suffix array `SA∘`.
//!
//! The algorithm follows SAIS with three changes:
//!
//! * types compare each position with its *cyclic* successor, and every
//!   factor start is S*;
//! * the last LMS inf-substring of a factor is closed by that factor's own
//!   first character, so LMS inf-substrings never cross factor borders;
//! * factors of length one are left out of the recursion. The inf-suffix
//!   `c^ω` of such a factor precedes every other S-type inf-suffix starting
//!   with `c`, which fixes its position when it is merged back.
//!
//! Induction steps move to the end of the factor instead of one position to
//! the left when they hit a factor start.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::lyndon::{ComposedFactorization, FactorSpan};
use crate::orders::{lms_compare, TypedSymbol};
use crate::Symbol;

pub use crate::orders::SuffixType;

const EMPTY: u32 = u32::MAX;

const S_CLASS: u8 = 1;
const SSTAR: u8 = 2;
const BEGIN: u8 = 4;
const END: u8 = 8;
const UNIT: u8 = BEGIN | END;

/// How many entries ahead of the scan the induction passes prefetch.
const PREFETCH: usize = 32;

#[inline(always)]
fn prefetch(v: &[u32], i: Option<u32>) {
    #[cfg(target_arch = "x86_64")]
    if let Some(i) = i.filter(|&i| i != EMPTY) {
        use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        // SAFETY: a prefetch is only a hint and never faults, even for
        // addresses outside `v`; SSE is part of the x86_64 baseline.
        unsafe { _mm_prefetch::<_MM_HINT_T0>(v.as_ptr().wrapping_add(i as usize) as *const i8) };
    }
    #[cfg(not(target_arch = "x86_64"))]
    let _ = (v, i);
}

/// Inf-suffix type of every position of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeArray {
    types: Vec<SuffixType>,
}

impl TypeArray {
    pub fn as_slice(&self) -> &[SuffixType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn get(&self, i: usize) -> SuffixType {
        self.types[i]
    }
}

impl fmt::Display for TypeArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.types.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The segment of a factor between one S* position and the next, inclusive.
///
/// The segment starting at a factor's last S* position runs to the factor
/// end and is closed by the factor's first character (`wraps`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmsInfSubstring<T> {
    pub factor: usize,
    pub start: usize,
    /// Last position taken from `R` before the wrap character, or the closing
    /// S* position when the substring does not wrap.
    pub end: usize,
    pub wraps: bool,
    pub content: Vec<TypedSymbol<T>>,
}

impl<T: Copy> LmsInfSubstring<T> {
    /// Substrings of length-one factors, `cc` for a factor `c`.
    pub fn is_unit_factor(&self) -> bool {
        self.wraps && self.start == self.end
    }

    pub fn symbols(&self) -> Vec<T> {
        self.content.iter().map(|t| t.symbol).collect()
    }
}

/// LMS-order ranks of LMS inf-substrings. Unit-factor substrings get none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmsRanking {
    pub ranks: Vec<Option<u32>>,
    pub name_count: usize,
    pub all_distinct: bool,
}

/// One level of recursion: the rank text of the kept factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedProblem<T> {
    /// One rank per LMS inf-substring of every factor longer than one.
    pub text: Vec<u32>,
    /// Factor spans over `text`, one per kept factor, in order.
    pub spans: Vec<FactorSpan>,
    /// `(character, factor index)` of every factor of length one.
    pub omitted: Vec<(T, usize)>,
    /// Position in `R` of the S* inf-suffix behind each rank.
    pub back_map: Vec<usize>,
    pub alphabet: usize,
}

/// Positions of `R` ordered by the ω-order of the conjugates starting there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularSuffixArray {
    entries: Vec<usize>,
}

impl CircularSuffixArray {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.entries
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.entries.iter().map(|&i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Sizes seen at one recursion level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStats {
    pub text_len: usize,
    pub factors: usize,
    pub unit_factors: usize,
    pub reduced_len: usize,
    pub names: usize,
    /// Whether the rank strings of the kept factors are pairwise distinct.
    pub reduced_factors_distinct: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionStats {
    pub levels: Vec<LevelStats>,
}

/// A bucket of `SA∘`: all inf-suffixes with one first character and class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucketRange {
    pub symbol: usize,
    pub ty: SuffixType,
    pub start: usize,
    pub end: usize,
}

/// Intermediate rows of the final induction, laid out like `SA∘`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionTrace {
    /// The sorted S* entries, placed at the front of their S-buckets.
    pub sstar: Vec<Option<usize>>,
    /// Entries filled in by the left-to-right pass.
    pub l_induced: Vec<Option<usize>>,
    /// Entries of type S that are not S*, filled in by the right-to-left pass.
    pub s_induced: Vec<Option<usize>>,
}

/// Per-level working state: the text with its factor cycles and types.
struct Level<'a, S> {
    text: &'a [S],
    flags: Vec<u8>,
    /// Factor end for a factor start and vice versa.
    link: Vec<u32>,
    /// Per position: symbol of the cyclic predecessor, whether it is S,
    /// and whether the position starts a factor, packed as
    /// `sym << 2 | s << 1 | begin`. One read serves an induction step.
    pred: Vec<u32>,
    sigma: usize,
}

struct Buckets {
    l_start: Vec<usize>,
    s_start: Vec<usize>,
    end: Vec<usize>,
}

impl<'a, S: Symbol> Level<'a, S> {
    /// `bounds` holds every factor start followed by `text.len()`.
    fn classify(text: &'a [S], bounds: &[usize], sigma: usize) -> Self {
        let n = text.len();
        let mut flags = vec![0u8; n];
        let mut link = vec![0u32; n];
        for w in bounds.windows(2) {
            let (b, e) = (w[0], w[1]);
            if e - b == 1 {
                flags[b] = S_CLASS | SSTAR | UNIT;
                link[b] = b as u32;
                continue;
            }
            link[b] = (e - 1) as u32;
            link[e - 1] = b as u32;
            // The last symbol of a Lyndon word exceeds its first: type L.
            flags[e - 1] = END;
            for i in (b..e - 1).rev() {
                let s = match text[i].cmp(&text[i + 1]) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => flags[i + 1] & S_CLASS != 0,
                };
                flags[i] = s as u8;
            }
            debug_assert!(flags[b] & S_CLASS != 0, "factor {b}..{e} is not a Lyndon word");
            flags[b] |= BEGIN | SSTAR;
            for i in b + 1..e {
                if flags[i] & S_CLASS != 0 && flags[i - 1] & S_CLASS == 0 {
                    flags[i] |= SSTAR;
                }
            }
        }
        Self::finish(text, flags, link, sigma)
    }

    fn from_types(text: &'a [S], bounds: &[usize], types: &TypeArray, sigma: usize) -> Self {
        assert_eq!(types.len(), text.len(), "type array belongs to another text");
        let n = text.len();
        let mut flags = vec![0u8; n];
        let mut link = vec![0u32; n];
        for w in bounds.windows(2) {
            let (b, e) = (w[0], w[1]);
            link[b] = (e - 1) as u32;
            link[e - 1] = b as u32;
            flags[b] |= BEGIN;
            flags[e - 1] |= END;
        }
        for (f, t) in flags.iter_mut().zip(types.as_slice()) {
            *f |= match t {
                SuffixType::L => 0,
                SuffixType::S => S_CLASS,
                SuffixType::SStar => S_CLASS | SSTAR,
            };
        }
        Self::finish(text, flags, link, sigma)
    }

    fn finish(text: &'a [S], flags: Vec<u8>, link: Vec<u32>, sigma: usize) -> Self {
        assert!(sigma <= 1 << 30, "alphabet too large");
        let mut level = Self { text, flags, link, pred: Vec::new(), sigma };
        level.pred = (0..text.len())
            .map(|i| {
                let p = level.prev(i);
                let begin = level.flags[i] & BEGIN != 0;
                (level.sym(p) as u32) << 2 | (level.is_s(p) as u32) << 1 | begin as u32
            })
            .collect();
        level
    }

    #[inline]
    fn len(&self) -> usize {
        self.text.len()
    }

    #[inline]
    fn is_s(&self, i: usize) -> bool {
        self.flags[i] & S_CLASS != 0
    }

    #[inline]
    fn is_sstar(&self, i: usize) -> bool {
        self.flags[i] & SSTAR != 0
    }

    #[inline]
    fn is_unit(&self, i: usize) -> bool {
        self.flags[i] & UNIT == UNIT
    }

    #[inline]
    fn next(&self, i: usize) -> usize {
        if self.flags[i] & END != 0 {
            self.link[i] as usize
        } else {
            i + 1
        }
    }

    #[inline]
    fn prev(&self, i: usize) -> usize {
        if self.flags[i] & BEGIN != 0 {
            self.link[i] as usize
        } else {
            i - 1
        }
    }

    #[inline]
    fn sym(&self, i: usize) -> usize {
        self.text[i].index()
    }

    fn types(&self) -> TypeArray {
        let types = (0..self.len())
            .map(|i| match (self.is_s(i), self.is_sstar(i)) {
                (false, _) => SuffixType::L,
                (true, false) => SuffixType::S,
                (true, true) => SuffixType::SStar,
            })
            .collect();
        TypeArray { types }
    }

    fn buckets(&self) -> Buckets {
        // L and S counts of a symbol share a cache line.
        let mut count = vec![[0u32; 2]; self.sigma];
        for i in 0..self.len() {
            count[self.sym(i)][self.is_s(i) as usize] += 1;
        }
        let mut l_start = Vec::with_capacity(self.sigma);
        let mut s_start = Vec::with_capacity(self.sigma);
        let mut end = Vec::with_capacity(self.sigma);
        let mut at = 0;
        for [l, s] in count {
            l_start.push(at);
            at += l as usize;
            s_start.push(at);
            at += s as usize;
            end.push(at);
        }
        Buckets { l_start, s_start, end }
    }

    #[inline]
    fn pred_pos(&self, i: usize, info: u32) -> usize {
        if info & 1 != 0 {
            self.link[i] as usize
        } else {
            i - 1
        }
    }

    /// Left-to-right pass: every L inf-suffix is placed from its successor.
    fn induce_l(&self, sa: &mut [u32], b: &Buckets) {
        let mut head = b.l_start.clone();
        for k in 0..sa.len() {
            prefetch(&self.pred, sa.get(k + PREFETCH).copied());
            let i = sa[k];
            if i == EMPTY {
                continue;
            }
            let info = self.pred[i as usize];
            if info & 2 == 0 {
                let c = (info >> 2) as usize;
                sa[head[c]] = self.pred_pos(i as usize, info) as u32;
                head[c] += 1;
            }
        }
    }

    /// Right-to-left pass: every S inf-suffix except unit factors is placed
    /// from its successor. A unit factor is its own predecessor and keeps
    /// the first slot of its S-bucket.
    fn induce_s(&self, sa: &mut [u32], b: &Buckets) {
        let mut tail = b.end.clone();
        for k in (0..sa.len()).rev() {
            prefetch(&self.pred, k.checked_sub(PREFETCH).map(|k| sa[k]));
            let i = sa[k];
            if i == EMPTY {
                continue;
            }
            let info = self.pred[i as usize];
            if info & 2 != 0 {
                let p = self.pred_pos(i as usize, info);
                if p != i as usize {
                    let c = (info >> 2) as usize;
                    tail[c] -= 1;
                    sa[tail[c]] = p as u32;
                }
            }
        }
    }

    /// Whether the LMS inf-substrings at S* positions `a` and `b` agree in
    /// every character and type class.
    fn lms_equal(&self, a: usize, b: usize) -> bool {
        let (mut x, mut y) = (a, b);
        loop {
            if self.text[x] != self.text[y] || self.is_s(x) != self.is_s(y) {
                return false;
            }
            x = self.next(x);
            y = self.next(y);
            let (ex, ey) = (self.is_sstar(x), self.is_sstar(y));
            if ex || ey {
                return ex && ey && self.text[x] == self.text[y];
            }
        }
    }

    /// Sort the S* positions of factors longer than one by their LMS
    /// inf-substrings (induced sorting) and name them densely.
    fn name_lms(&self, sa: &mut [u32], b: &Buckets) -> (Names, usize) {
        sa.fill(EMPTY);
        let mut tail = b.end.clone();
        for i in 0..self.len() {
            if self.is_sstar(i) && !self.is_unit(i) {
                let c = self.sym(i);
                tail[c] -= 1;
                sa[tail[c]] = i as u32;
            }
        }
        self.induce_l(sa, b);
        self.induce_s(sa, b);

        // Named positions are never adjacent and never last in the text, so
        // with `m` of them compacted to the front, the name of `p` fits at
        // `m + p / 2`.
        let mut m = 0;
        for k in 0..sa.len() {
            let p = sa[k];
            if p != EMPTY && self.is_sstar(p as usize) && !self.is_unit(p as usize) {
                sa[m] = p;
                m += 1;
            }
        }
        sa[m..].fill(EMPTY);
        let mut name = 0u32;
        for j in 0..m {
            let p = sa[j] as usize;
            if j > 0 && !self.lms_equal(sa[j - 1] as usize, p) {
                name += 1;
            }
            sa[m + p / 2] = name;
        }
        let count = if m == 0 { 0 } else { name as usize + 1 };
        (Names { offset: m }, count)
    }

    /// Place sorted S* entries at the front of their S-buckets, then run both
    /// induction passes.
    fn induce_from_sstar(&self, sa: &mut [u32], b: &Buckets, sorted_sstar: &[u32]) {
        sa.fill(EMPTY);
        let mut head = b.s_start.clone();
        for &p in sorted_sstar {
            let c = self.sym(p as usize);
            sa[head[c]] = p;
            head[c] += 1;
        }
        self.induce_l(sa, b);
        self.induce_s(sa, b);
    }
}

/// Where [`Level::name_lms`] left the names inside the suffix array.
struct Names {
    offset: usize,
}

impl Names {
    #[inline]
    fn get(&self, sa: &[u32], p: usize) -> u32 {
        sa[self.offset + p / 2]
    }
}

/// Insert unit factors into the order of the other S* positions: each goes
/// right before the first entry whose inf-suffix starts with its character.
fn merge_unit_factors<S: Symbol>(text: &[S], kept: &[u32], units: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(kept.len() + units.len());
    let mut j = 0;
    for &u in units {
        while j < kept.len() && text[kept[j] as usize] < text[u as usize] {
            out.push(kept[j]);
            j += 1;
        }
        out.push(u);
    }
    out.extend_from_slice(&kept[j..]);
    out
}

/// Unit-factor positions sorted by character, by one bucket pass.
fn sorted_units<S: Symbol>(level: &Level<'_, S>, bounds: &[usize]) -> Vec<u32> {
    let mut by_symbol = vec![EMPTY; level.sigma];
    let mut count = 0;
    for w in bounds.windows(2) {
        if w[1] - w[0] == 1 {
            let c = level.sym(w[0]);
            assert_eq!(by_symbol[c], EMPTY, "repeated unit factor: factors must be distinct");
            by_symbol[c] = w[0] as u32;
            count += 1;
        }
    }
    if count == 0 {
        return Vec::new();
    }
    by_symbol.into_iter().filter(|&p| p != EMPTY).collect()
}

/// Sorted S* positions of one level; recurses on the rank text when the
/// LMS inf-substring names are not yet unique.
fn sorted_sstar_level<S: Symbol>(
    level: &Level<'_, S>,
    bounds: &[usize],
    buckets: &Buckets,
    sa: &mut [u32],
    mut stats: Option<&mut ConstructionStats>,
) -> Vec<u32> {
    let (names, name_count) = level.name_lms(sa, buckets);

    let mut rtext: Vec<u32> = Vec::new();
    let mut rbounds = vec![0usize];
    let mut back = Vec::new();
    let mut unit_factors = 0;
    for w in bounds.windows(2) {
        if w[1] - w[0] == 1 {
            unit_factors += 1;
            continue;
        }
        for i in w[0]..w[1] {
            if level.is_sstar(i) {
                rtext.push(names.get(sa, i));
                back.push(i as u32);
            }
        }
        rbounds.push(rtext.len());
    }

    if let Some(st) = stats.as_deref_mut() {
        let mut seen = HashSet::new();
        let distinct = rbounds.windows(2).all(|w| seen.insert(&rtext[w[0]..w[1]]));
        st.levels.push(LevelStats {
            text_len: level.len(),
            factors: bounds.len() - 1,
            unit_factors,
            reduced_len: rtext.len(),
            names: name_count,
            reduced_factors_distinct: distinct,
        });
    }

    let kept: Vec<u32> = if name_count == rtext.len() {
        let mut order = vec![0u32; name_count];
        for (r, &p) in back.iter().enumerate() {
            order[rtext[r] as usize] = p;
        }
        order
    } else {
        let sub = csa_level(&rtext, &rbounds, name_count, stats);
        sub.into_iter().map(|r| back[r as usize]).collect()
    };

    let units = sorted_units(level, bounds);
    merge_unit_factors(level.text, &kept, &units)
}

/// Circular suffix array of a text made of distinct Lyndon factors whose
/// starts (plus the text length) are `bounds`. Symbols must be `< sigma`.
fn csa_level<S: Symbol>(text: &[S], bounds: &[usize], sigma: usize, stats: Option<&mut ConstructionStats>) -> Vec<u32> {
    if text.is_empty() {
        return Vec::new();
    }
    assert!(text.len() < EMPTY as usize, "text longer than 2^32 - 1");
    let level = Level::classify(text, bounds, sigma);
    let buckets = level.buckets();
    let mut sa = vec![EMPTY; text.len()];
    let sorted = sorted_sstar_level(&level, bounds, &buckets, &mut sa, stats);
    level.induce_from_sstar(&mut sa, &buckets, &sorted);
    sa
}

/// Circular suffix array of a rank text whose factors are distinct Lyndon
/// words. Used by the classical suffix array baseline.
pub(crate) fn csa_of_lyndon_factors(text: &[u32], bounds: &[usize], sigma: usize) -> Vec<u32> {
    csa_level(text, bounds, sigma, None)
}

fn widen(v: Vec<u32>) -> Vec<usize> {
    v.into_iter().map(|i| i as usize).collect()
}

fn bounds_of<T>(cf: &ComposedFactorization<T>) -> Vec<usize> {
    let mut bounds: Vec<usize> = cf.spans().iter().map(|s| s.start).collect();
    bounds.push(cf.reduced_text().len());
    bounds
}

fn alphabet_of<T: Symbol>(text: &[T]) -> usize {
    text.iter().map(|c| c.index() + 1).max().unwrap_or(0)
}

/// Inf-suffix types of `R`, scanning each factor right to left from its
/// last position.
pub fn classify_inf_types<T: Symbol>(cf: &ComposedFactorization<T>) -> TypeArray {
    let text = cf.reduced_text();
    Level::classify(text, &bounds_of(cf), alphabet_of(text)).types()
}

/// Carve every factor into LMS inf-substrings, in text order.
pub fn lms_inf_substrings<T: Symbol>(cf: &ComposedFactorization<T>, types: &TypeArray) -> Vec<LmsInfSubstring<T>> {
    let text = cf.reduced_text();
    let typed = |i: usize| TypedSymbol::new(text[i], types.get(i));
    let mut out = Vec::new();
    for (x, span) in cf.spans().iter().enumerate() {
        let stars: Vec<usize> = span.range().filter(|&i| types.get(i) == SuffixType::SStar).collect();
        for (k, &start) in stars.iter().enumerate() {
            let (end, wraps) = match stars.get(k + 1) {
                Some(&next) => (next, false),
                None => (span.end - 1, true),
            };
            let mut content: Vec<TypedSymbol<T>> = (start..=end).map(typed).collect();
            if wraps {
                content.push(typed(span.start));
            }
            out.push(LmsInfSubstring { factor: x, start, end, wraps, content });
        }
    }
    out
}

/// Dense LMS-order ranks of the substrings of factors longer than one,
/// by comparison sort with [`lms_compare`].
pub fn rank_lms<T: Symbol>(substrings: &[LmsInfSubstring<T>]) -> LmsRanking {
    let mut kept: Vec<usize> = (0..substrings.len()).filter(|&k| !substrings[k].is_unit_factor()).collect();
    kept.sort_by(|&a, &b| lms_compare(&substrings[a].content, &substrings[b].content));
    let mut ranks = vec![None; substrings.len()];
    let mut name = 0u32;
    for (j, &k) in kept.iter().enumerate() {
        if j > 0 && lms_compare(&substrings[kept[j - 1]].content, &substrings[k].content) != Ordering::Equal {
            name += 1;
        }
        ranks[k] = Some(name);
    }
    let name_count = if kept.is_empty() { 0 } else { name as usize + 1 };
    LmsRanking { ranks, name_count, all_distinct: name_count == kept.len() }
}

/// Replace LMS inf-substrings by their ranks, dropping unit factors.
pub fn build_reduced<T: Symbol>(
    cf: &ComposedFactorization<T>,
    substrings: &[LmsInfSubstring<T>],
    ranking: &LmsRanking,
) -> ReducedProblem<T> {
    assert_eq!(substrings.len(), ranking.ranks.len(), "ranking belongs to other substrings");
    let text = cf.reduced_text();
    let mut rtext = Vec::new();
    let mut spans = Vec::new();
    let mut back_map = Vec::new();
    let mut omitted = Vec::new();
    let mut k = 0;
    for (x, span) in cf.spans().iter().enumerate() {
        if span.len() == 1 {
            omitted.push((text[span.start], x));
            k += 1;
            continue;
        }
        let begin = rtext.len();
        while k < substrings.len() && substrings[k].factor == x {
            rtext.push(ranking.ranks[k].expect("kept substring without a rank"));
            back_map.push(substrings[k].start);
            k += 1;
        }
        spans.push(FactorSpan::new(begin, rtext.len()));
    }
    ReducedProblem { text: rtext, spans, omitted, back_map, alphabet: ranking.name_count }
}

impl<T> ReducedProblem<T> {
    pub fn factors(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.spans.iter().map(|s| &self.text[s.range()])
    }
}

/// S* positions of `R` sorted by their inf-suffixes, unit factors included.
pub fn solve_sstar_order<T: Symbol>(cf: &ComposedFactorization<T>, types: &TypeArray) -> Vec<usize> {
    let text = cf.reduced_text();
    if text.is_empty() {
        return Vec::new();
    }
    let bounds = bounds_of(cf);
    let level = Level::from_types(text, &bounds, types, alphabet_of(text));
    let buckets = level.buckets();
    let mut sa = vec![EMPTY; text.len()];
    widen(sorted_sstar_level(&level, &bounds, &buckets, &mut sa, None))
}

/// Buckets of `SA∘` by first character, L-bucket before S-bucket; empty
/// buckets are left out.
pub fn bucket_layout<T: Symbol>(cf: &ComposedFactorization<T>, types: &TypeArray) -> Vec<BucketRange> {
    let text = cf.reduced_text();
    let bounds = bounds_of(cf);
    let level = Level::from_types(text, &bounds, types, alphabet_of(text));
    let b = level.buckets();
    let mut out = Vec::new();
    for c in 0..level.sigma {
        if b.l_start[c] < b.s_start[c] {
            out.push(BucketRange { symbol: c, ty: SuffixType::L, start: b.l_start[c], end: b.s_start[c] });
        }
        if b.s_start[c] < b.end[c] {
            out.push(BucketRange { symbol: c, ty: SuffixType::S, start: b.s_start[c], end: b.end[c] });
        }
    }
    out
}

/// Induce the full `SA∘` from the sorted S* positions.
pub fn induce<T: Symbol>(
    cf: &ComposedFactorization<T>,
    types: &TypeArray,
    sstar_order: &[usize],
) -> CircularSuffixArray {
    induce_traced(cf, types, sstar_order).0
}

/// [`induce`], also returning the rows of each induction step.
pub fn induce_traced<T: Symbol>(
    cf: &ComposedFactorization<T>,
    types: &TypeArray,
    sstar_order: &[usize],
) -> (CircularSuffixArray, InductionTrace) {
    let text = cf.reduced_text();
    let n = text.len();
    let bounds = bounds_of(cf);
    let level = Level::from_types(text, &bounds, types, alphabet_of(text));
    let buckets = level.buckets();

    let mut sstar = vec![None; n];
    let mut head = buckets.s_start.clone();
    for &p in sstar_order {
        let c = level.sym(p);
        sstar[head[c]] = Some(p);
        head[c] += 1;
    }

    let mut sa = vec![EMPTY; n];
    let narrow: Vec<u32> = sstar_order.iter().map(|&p| p as u32).collect();
    level.induce_from_sstar(&mut sa, &buckets, &narrow);
    let sa = widen(sa);
    let row = |keep: &dyn Fn(usize) -> bool| -> Vec<Option<usize>> {
        sa.iter().map(|&i| (i != EMPTY as usize && keep(i)).then_some(i)).collect()
    };
    let l_induced = row(&|i| !level.is_s(i));
    let s_induced = row(&|i| level.is_s(i) && !level.is_sstar(i));
    debug_assert!(sa.iter().all(|&i| i != EMPTY as usize));
    (CircularSuffixArray::new(sa), InductionTrace { sstar, l_induced, s_induced })
}

/// `SA∘` of the reduced text `R`.
pub fn circular_suffix_array<T: Symbol>(cf: &ComposedFactorization<T>) -> CircularSuffixArray {
    let text = cf.reduced_text();
    CircularSuffixArray::new(widen(csa_level(text, &bounds_of(cf), alphabet_of(text), None)))
}

/// [`circular_suffix_array`] with per-level recursion statistics.
pub fn circular_suffix_array_with_stats<T: Symbol>(
    cf: &ComposedFactorization<T>,
) -> (CircularSuffixArray, ConstructionStats) {
    let text = cf.reduced_text();
    let mut stats = ConstructionStats::default();
    let sa = csa_level(text, &bounds_of(cf), alphabet_of(text), Some(&mut stats));
    (CircularSuffixArray::new(widen(sa)), stats)
}
