//! Step-by-step tables of one construction, as tab-separated text.
//!
//! Sections start with a `# name` line. Positions are 1-based and empty
//! cells are empty fields. LMS ranks print as letters `A`, `B`, ... while
//! they fit, as decimal numbers otherwise. Bytes outside printable ASCII
//! print as `\xHH`.

use std::fmt::Write;

use crate::csais::{bucket_layout, classify_inf_types, induce_traced, lms_inf_substrings, rank_lms, solve_sstar_order};
use crate::lyndon::ComposedFactorization;

fn byte(c: u8) -> String {
    if c.is_ascii_graphic() {
        (c as char).to_string()
    } else {
        format!("\\x{c:02x}")
    }
}

fn bytes(s: &[u8]) -> String {
    s.iter().map(|&c| byte(c)).collect()
}

fn rank_name(r: u32) -> String {
    if r < 26 {
        ((b'A' + r as u8) as char).to_string()
    } else {
        r.to_string()
    }
}

fn row<I: IntoIterator<Item = String>>(out: &mut String, label: &str, cells: I) {
    out.push_str(label);
    for c in cells {
        out.push('\t');
        out.push_str(&c);
    }
    out.push('\n');
}

fn cells(r: &[Option<usize>]) -> impl Iterator<Item = String> + '_ {
    r.iter().map(|e| e.map(|i| (i + 1).to_string()).unwrap_or_default())
}

/// Render every stage of the construction for `text`.
pub fn trace_tsv(text: &[u8]) -> String {
    let cf = ComposedFactorization::of(text);
    let r = cf.reduced_text();
    let n = r.len();
    let mut out = String::new();

    out.push_str("# factorization\n");
    row(&mut out, "factor", ["start", "end", "multiplicity", "content"].map(String::from));
    for (x, run) in cf.origin_spans().iter().enumerate() {
        row(
            &mut out,
            &(x + 1).to_string(),
            [
                run.begin_one_based().to_string(),
                run.end_one_based().to_string(),
                cf.multiplicities()[x].to_string(),
                bytes(cf.factor(x)),
            ],
        );
    }

    let types = classify_inf_types(&cf);
    out.push_str("# types\n");
    row(&mut out, "position", (1..=n).map(|i| i.to_string()));
    row(&mut out, "character", r.iter().map(|&c| byte(c)));
    row(&mut out, "type", types.as_slice().iter().map(|t| t.to_string()));

    let subs = lms_inf_substrings(&cf, &types);
    let ranking = rank_lms(&subs);
    out.push_str("# lms_inf_substrings\n");
    row(&mut out, "start", ["end", "wrap", "content", "rank"].map(String::from));
    for (s, rank) in subs.iter().zip(&ranking.ranks) {
        let wrap = if s.wraps { (cf.spans()[s.factor].start + 1).to_string() } else { "-".into() };
        row(
            &mut out,
            &(s.start + 1).to_string(),
            [(s.end + 1).to_string(), wrap, bytes(&s.symbols()), rank.map_or_else(|| "-".to_string(), rank_name)],
        );
    }

    let order = solve_sstar_order(&cf, &types);
    out.push_str("# sstar_order\n");
    row(&mut out, "position", order.iter().map(|i| (i + 1).to_string()));

    out.push_str("# buckets\n");
    row(&mut out, "character", ["type", "start", "end"].map(String::from));
    for b in bucket_layout(&cf, &types) {
        row(&mut out, &byte(b.symbol as u8), [b.ty.to_string(), (b.start + 1).to_string(), b.end.to_string()]);
    }

    let (sa, steps) = induce_traced(&cf, &types, &order);
    out.push_str("# induction\n");
    row(&mut out, "index", (1..=n).map(|i| i.to_string()));
    row(&mut out, "sstar", cells(&steps.sstar));
    row(&mut out, "l", cells(&steps.l_induced));
    row(&mut out, "s", cells(&steps.s_induced));
    row(&mut out, "sa", sa.entries().iter().map(|i| (i + 1).to_string()));
    let prev: Vec<usize> = sa.entries().iter().map(|&i| cf.cyclic_prev(i)).collect();
    row(&mut out, "sa_minus_1", prev.iter().map(|i| (i + 1).to_string()));
    row(
        &mut out,
        "bbwt",
        prev.iter().map(|&j| {
            let tau = cf.multiplicities()[cf.factor_of(j).0];
            bytes(&vec![r[j]; tau])
        }),
    );

    let _ = writeln!(out, "# output\nbbwt\t{}", bytes(&crate::transform::bbwt_from_csa(&cf, &sa)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_are_present_in_order() {
        let t = trace_tsv(b"cbbcacbbcadacbadacba");
        let sections: Vec<&str> = t.lines().filter(|l| l.starts_with("# ")).collect();
        assert_eq!(
            sections,
            [
                "# factorization",
                "# types",
                "# lms_inf_substrings",
                "# sstar_order",
                "# buckets",
                "# induction",
                "# output"
            ]
        );
        assert!(t.ends_with("bbwt\tabddbcccccbbbaaabcaa\n"));
    }

    #[test]
    fn repeated_factors_show_multiplicity() {
        let t = trace_tsv(b"banana");
        assert!(t.contains("2\t2\t5\t2\tan\n"));
        assert!(t.contains("bbwt\ta\tnn\tb\taa\n"));
    }

    #[test]
    fn empty_text_has_empty_sections() {
        let t = trace_tsv(b"");
        assert!(t.contains("# induction\nindex\nsstar\n"));
        assert!(t.ends_with("bbwt\t\n"));
    }

    #[test]
    fn unprintable_bytes_are_escaped() {
        assert_eq!(bytes(b"a\tb\xff"), "a\\x09b\\xff");
    }
}
