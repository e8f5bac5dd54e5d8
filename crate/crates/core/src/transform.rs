//! Byte-level transforms: BBWT and its inverse, the extended BWT, the
//! classical BWT baselines and the BBWT iteration order.

use crate::csais::{circular_suffix_array, csa_of_lyndon_factors, CircularSuffixArray};
use crate::lyndon::ComposedFactorization;
use crate::orders::{is_primitive, least_rotation, rotate};
use crate::{Error, Result};

/// Sentinel byte standing in for `$` in [`bwt_dollar`].
pub const SENTINEL: u8 = 0;

/// Where one output byte came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProvenanceEntry {
    /// Position in `R` of the emitted character (0-based).
    pub source: usize,
    /// Multiplicity of the factor owning `source`.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub output: Vec<u8>,
    pub provenance: Option<Vec<ProvenanceEntry>>,
}

/// Bijective BWT of `text`.
pub fn bbwt(text: &[u8]) -> TransformResult {
    let cf = ComposedFactorization::of(text);
    let sa = circular_suffix_array(&cf);
    TransformResult { output: emit(&cf, &sa, None), provenance: None }
}

/// [`bbwt`], recording the source of every output byte.
pub fn bbwt_with_provenance(text: &[u8]) -> TransformResult {
    let cf = ComposedFactorization::of(text);
    let sa = circular_suffix_array(&cf);
    let mut provenance = Vec::with_capacity(text.len());
    let output = emit(&cf, &sa, Some(&mut provenance));
    TransformResult { output, provenance: Some(provenance) }
}

/// Read the BBWT off `SA∘`: for each entry, the cyclically preceding
/// character, repeated by the multiplicity of its factor.
pub fn bbwt_from_csa(cf: &ComposedFactorization<u8>, sa: &CircularSuffixArray) -> Vec<u8> {
    emit(cf, sa, None)
}

fn emit(
    cf: &ComposedFactorization<u8>,
    sa: &CircularSuffixArray,
    mut provenance: Option<&mut Vec<ProvenanceEntry>>,
) -> Vec<u8> {
    let r = cf.reduced_text();
    let taus = cf.multiplicities();
    let mut out = Vec::with_capacity(cf.origin_len());
    if provenance.is_none() && taus.iter().all(|&t| t == 1) {
        // Factor starts in a bitset keep the common case to one random read.
        let mut starts = vec![0u64; r.len().div_ceil(64)];
        for s in cf.spans() {
            starts[s.start / 64] |= 1 << (s.start % 64);
        }
        out.extend(sa.entries().iter().map(|&i| {
            let j = if starts[i / 64] >> (i % 64) & 1 == 1 { cf.factor_of(i).1.end - 1 } else { i - 1 };
            r[j]
        }));
        return out;
    }
    for &i in sa.entries() {
        let (x, span) = cf.factor_of(i);
        let j = if i == span.start { span.end - 1 } else { i - 1 };
        let tau = taus[x];
        out.extend(std::iter::repeat_n(r[j], tau));
        if let Some(p) = provenance.as_deref_mut() {
            p.extend(std::iter::repeat_n(ProvenanceEntry { source: j, multiplicity: tau }, tau));
        }
    }
    out
}

/// Invert the BBWT.
///
/// The stable standard permutation of `b` splits into cycles; each cycle
/// spells one Lyndon factor up to rotation. Rotating every cycle word to its
/// least conjugate and concatenating them in non-increasing order restores
/// the text. Every byte string is the BBWT of exactly one string, so this is
/// total.
pub fn inverse_bbwt(b: &[u8]) -> Vec<u8> {
    let n = b.len();
    let mut next = [0usize; 256];
    for &c in b {
        next[c as usize] += 1;
    }
    let mut sum = 0;
    for slot in next.iter_mut() {
        let count = *slot;
        *slot = sum;
        sum += count;
    }
    // first[k]: first character of the k-th sorted row; succ[k]: the row
    // holding the same conjugate rotated left by one.
    let mut first = vec![0u8; n];
    let mut succ = vec![0usize; n];
    for (i, &c) in b.iter().enumerate() {
        let k = next[c as usize];
        next[c as usize] += 1;
        first[k] = c;
        succ[k] = i;
    }

    let mut seen = vec![false; n];
    let mut words: Vec<Vec<u8>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            word.push(first[k]);
            k = succ[k];
        }
        let r = least_rotation(&word);
        words.push(if r == 0 { word } else { rotate(&word, r) });
    }
    words.sort_unstable_by(|a, b| b.cmp(a));
    words.concat()
}

/// Suffix array of `text`, a proper prefix sorting first.
///
/// Computed as the circular suffix array of the single Lyndon word `$T`
/// (every byte shifted up by one, `$` = 0): its rotations other than `$T`
/// itself are ordered exactly like the suffixes of `T`.
pub fn suffix_array(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut ranks = Vec::with_capacity(n + 1);
    ranks.push(0u32);
    ranks.extend(text.iter().map(|&c| c as u32 + 1));
    let csa = csa_of_lyndon_factors(&ranks, &[0, n + 1], 257);
    debug_assert_eq!(csa[0], 0);
    csa[1..].iter().map(|&p| p as usize - 1).collect()
}

/// Traditional BWT without a terminator: `T[SA[i] - 1]`, wrapping to the last
/// character for the suffix starting at position 0. Not invertible in general.
pub fn bwt_baseline(text: &[u8]) -> Vec<u8> {
    let n = text.len();
    suffix_array(text).into_iter().map(|i| text[(i + n - 1) % n]).collect()
}

/// BWT of `T$`, with [`SENTINEL`] as `$`.
pub fn bwt_dollar(text: &[u8]) -> Result<Vec<u8>> {
    if let Some(position) = text.iter().position(|&c| c == SENTINEL) {
        return Err(Error::SentinelPresent { position });
    }
    let n = text.len();
    let mut out = Vec::with_capacity(n + 1);
    // The row starting with `$` comes first and is preceded by T[n-1].
    out.push(text.last().copied().unwrap_or(SENTINEL));
    out.extend(suffix_array(text).into_iter().map(|i| if i == 0 { SENTINEL } else { text[i - 1] }));
    Ok(out)
}

/// Extended BWT of a multiset of primitive words, through the BBWT of their
/// Lyndon conjugates concatenated in non-increasing order.
pub fn ebwt<S: AsRef<[u8]>>(strings: &[S]) -> Result<Vec<u8>> {
    let mut lyndon: Vec<Vec<u8>> = Vec::with_capacity(strings.len());
    for (index, s) in strings.iter().enumerate() {
        let s = s.as_ref();
        if s.is_empty() {
            return Err(Error::EmptyString { index });
        }
        if !is_primitive(s) {
            return Err(Error::NonPrimitiveInput { index });
        }
        lyndon.push(rotate(s, least_rotation(s)));
    }
    lyndon.sort_unstable_by(|a, b| b.cmp(a));
    Ok(bbwt(&lyndon.concat()).output)
}

/// Smallest `k` in `1..=max_k` with `BBWT^k(text) == text`.
pub fn bbwt_order(text: &[u8], max_k: u64) -> Result<u64> {
    let mut current = text.to_vec();
    for k in 1..=max_k {
        current = bbwt(&current).output;
        if current == text {
            return Ok(k);
        }
    }
    Err(Error::NotFoundWithin { max_k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_bbwt, naive_ebwt, naive_sa};

    const RUNNING: &[u8] = b"cbbcacbbcadacbadacba";

    #[test]
    fn forward_examples() {
        assert_eq!(bbwt(RUNNING).output, b"abddbcccccbbbaaabcaa");
        assert_eq!(bbwt(b"a").output, b"a");
        assert_eq!(bbwt(b"banana").output, naive_bbwt(b"banana"));
        assert_eq!(bbwt(b"banana").output, b"annbaa");
        assert_eq!(bbwt(b"").output, b"");
    }

    #[test]
    fn provenance_tracks_factor_multiplicity() {
        let res = bbwt_with_provenance(b"banana");
        let prov = res.provenance.unwrap();
        assert_eq!(prov.len(), 6);
        // R = "bana", SA∘ = [4, 2, 1, 3] (1-based): conjugates a, an, b, na.
        let sources: Vec<usize> = prov.iter().map(|p| p.source + 1).collect();
        assert_eq!(sources, [4, 3, 3, 1, 2, 2]);
        let taus: Vec<usize> = prov.iter().map(|p| p.multiplicity).collect();
        assert_eq!(taus, [1, 2, 2, 1, 2, 2]);
        assert!(bbwt(b"banana").provenance.is_none());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_bbwt(b"abddbcccccbbbaaabcaa"), RUNNING);
        assert_eq!(inverse_bbwt(b"a"), b"a");
        assert_eq!(inverse_bbwt(b"annbaa"), b"banana");
        assert_eq!(inverse_bbwt(b""), b"");
    }

    #[test]
    fn baseline_running_example() {
        let sa: Vec<usize> = suffix_array(RUNNING).iter().map(|i| i + 1).collect();
        assert_eq!(sa, [20, 17, 12, 5, 15, 10, 19, 14, 2, 7, 3, 8, 4, 9, 18, 13, 1, 6, 16, 11]);
        assert_eq!(bwt_baseline(RUNNING), b"bddcbcccccbbbbaaaaaa");
        let dollar: Vec<u8> = bwt_dollar(RUNNING).unwrap().iter().map(|&c| if c == 0 { b'$' } else { c }).collect();
        assert_eq!(dollar, b"abddcbcccccbbbbaa$aaa");
        assert_eq!(bwt_baseline(b"a"), b"a");
        assert_eq!(bwt_dollar(b"ab").unwrap(), b"b\0a");
    }

    #[test]
    fn sentinel_is_rejected() {
        assert_eq!(bwt_dollar(b"ab\0c"), Err(Error::SentinelPresent { position: 2 }));
    }

    #[test]
    fn ebwt_examples() {
        assert_eq!(ebwt(&[b"a"]).unwrap(), b"a");
        let words: [&[u8]; 2] = [b"ab", b"b"];
        assert_eq!(naive_ebwt(&words), b"bab");
        assert_eq!(ebwt(&words).unwrap(), b"bab");
        assert_eq!(ebwt(&[b"ba", b"cb"]).unwrap(), ebwt(&[b"ab", b"bc"]).unwrap());
        assert_eq!(ebwt(&[&b"ab"[..], b"abab"]), Err(Error::NonPrimitiveInput { index: 1 }));
        assert_eq!(ebwt(&[&b"ab"[..], b""]), Err(Error::EmptyString { index: 1 }));
        assert_eq!(ebwt::<&[u8]>(&[]).unwrap(), b"");
    }

    #[test]
    fn order_examples() {
        assert_eq!(bbwt_order(b"a", 10), Ok(1));
        // Direct iteration with the oracle.
        for text in [&b"ab"[..], b"banana", b"abcab", b"bbaab"] {
            let mut cur = naive_bbwt(text);
            let mut k = 1;
            while cur != text {
                cur = naive_bbwt(&cur);
                k += 1;
            }
            assert_eq!(bbwt_order(text, 1_000_000), Ok(k), "{text:?}");
            if k > 1 {
                assert_eq!(bbwt_order(text, k - 1), Err(Error::NotFoundWithin { max_k: k - 1 }));
            }
        }
        assert_eq!(bbwt_order(b"ba", 0), Err(Error::NotFoundWithin { max_k: 0 }));
    }

    #[test]
    fn running_example_order_exceeds_a_million() {
        assert_eq!(bbwt_order(RUNNING, 1_000_000), Err(Error::NotFoundWithin { max_k: 1_000_000 }));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trips(text in proptest::collection::vec(any::<u8>(), 0..300)) {
                let out = bbwt(&text).output;
                prop_assert_eq!(inverse_bbwt(&out), text.clone());
                let mut a = out.clone();
                a.sort_unstable();
                let mut b = text.clone();
                b.sort_unstable();
                prop_assert_eq!(a, b);
            }

            #[test]
            fn inverse_then_forward_is_identity(b in proptest::collection::vec(0u8..4, 0..200)) {
                prop_assert_eq!(bbwt(&inverse_bbwt(&b)).output, b);
            }

            #[test]
            fn baseline_matches_naive(text in proptest::collection::vec(0u8..4, 0..120)) {
                prop_assert_eq!(suffix_array(&text), naive_sa(&text));
            }
        }
    }
}
