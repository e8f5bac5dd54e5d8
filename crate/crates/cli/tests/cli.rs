use std::io::Write;
use std::process::{Command, Stdio};

use bbwt_cli::{bench, generate, run_with, BenchConfig, Pattern};
use proptest::prelude::*;

const RUNNING: &[u8] = b"cbbcacbbcadacbadacba";

struct Outcome {
    status: i32,
    stdout: Vec<u8>,
    stderr: String,
}

fn bbwt(args: &[&str], input: &[u8]) -> Outcome {
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bbwt").chain(args.iter().copied());
    let status = run_with(argv, &mut &input[..], &mut stdout, &mut stderr, false);
    Outcome { status, stdout, stderr: String::from_utf8(stderr).unwrap() }
}

fn ok(args: &[&str], input: &[u8]) -> Vec<u8> {
    let o = bbwt(args, input);
    assert_eq!(o.status, 0, "{args:?}: {}", o.stderr);
    assert!(o.stderr.is_empty());
    o.stdout
}

fn fails(args: &[&str], input: &[u8]) -> String {
    let o = bbwt(args, input);
    assert_ne!(o.status, 0, "{args:?} succeeded");
    assert_eq!(o.stderr.lines().count(), 1, "{:?}", o.stderr);
    o.stderr
}

#[test]
fn encode_running_example() {
    assert_eq!(ok(&["encode"], RUNNING), b"abddbcccccbbbaaabcaa");
    assert_eq!(ok(&["encode", "--oracle"], RUNNING), b"abddbcccccbbbaaabcaa");
}

#[test]
fn encode_empty_input() {
    assert_eq!(ok(&["encode"], b""), b"");
    assert_eq!(ok(&["decode"], b""), b"");
}

#[test]
fn csa_running_example() {
    let expected = "20\n17\n12\n5\n15\n10\n19\n14\n7\n2\n8\n3\n9\n18\n13\n6\n4\n1\n16\n11\n";
    assert_eq!(String::from_utf8(ok(&["csa"], RUNNING)).unwrap(), expected);
    assert_eq!(String::from_utf8(ok(&["csa", "--oracle"], RUNNING)).unwrap(), expected);

    let binary = ok(&["csa", "--binary"], RUNNING);
    let words: Vec<u64> = binary.chunks(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
    assert_eq!(words, [20, 17, 12, 5, 15, 10, 19, 14, 7, 2, 8, 3, 9, 18, 13, 6, 4, 1, 16, 11]);
}

#[test]
fn factorize_lists_runs_over_the_input() {
    assert_eq!(ok(&["factorize"], RUNNING), b"1\t1\t1\n2\t4\t1\n5\t11\t1\n12\t16\t1\n17\t19\t1\n20\t20\t1\n");
    assert_eq!(ok(&["factorize"], b"banana"), b"1\t1\t1\n2\t5\t2\n6\t6\t1\n");
}

#[test]
fn trace_matches_golden_file() {
    let golden = include_str!("golden/trace_running_example.tsv");
    assert_eq!(String::from_utf8(ok(&["trace"], RUNNING)).unwrap(), golden);
}

#[test]
fn bwt_variants() {
    assert_eq!(ok(&["bwt"], b"banana"), b"nnbaaa");
    assert_eq!(ok(&["bwt", "--dollar"], b"banana"), b"annb\0aa");
    let err = fails(&["bwt", "--dollar"], b"ba\0na");
    assert!(err.contains("2"), "{err}");
}

#[test]
fn ebwt_separators_and_errors() {
    assert_eq!(ok(&["ebwt"], b"ab\0ba\0"), b"bbaa");
    assert_eq!(ok(&["ebwt", "--sep", ","], b"ab,ba"), b"bbaa");
    assert_eq!(ok(&["ebwt", "--sep", "0x0a"], b"ab\nba\n"), b"bbaa");
    let err = fails(&["ebwt", "--sep", ","], b"a,abab,b");
    assert!(err.contains("#1"), "{err}");
    assert!(fails(&["ebwt", "--sep", "300"], b"").contains("not a byte"));
}

#[test]
fn order_reports_cap() {
    assert_eq!(ok(&["order"], b"ab"), b"2\n");
    assert_eq!(ok(&["order", "--max-k", "1"], b"ab"), b">1\n");
}

#[test]
fn bad_usage_is_one_line() {
    assert_eq!(bbwt(&["frobnicate"], b"").status, 2);
    fails(&["frobnicate"], b"");
    fails(&["encode", "--bogus"], b"");
    fails(&["bench", "--alphabet", "3"], b"");
    fails(&["bench", "--repetitions", "0"], b"");
    let err = fails(&["encode", "/definitely/not/here"], b"");
    assert!(err.starts_with("bbwt: error: cannot read '/definitely/not/here'"), "{err}");
}

#[test]
fn color_touches_diagnostics_only() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run_with(["bbwt", "encode"], &mut &b"ba"[..], &mut out, &mut err, true), 0);
    assert_eq!(out, b"ab");
    assert!(err.is_empty());
    run_with(["bbwt", "nope"], &mut &b""[..], &mut out, &mut err, true);
    assert!(String::from_utf8(err).unwrap().starts_with("\x1b[1;31m"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("bbwt-cli-test-{}", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["encode", "-o", p], RUNNING), b"");
    assert_eq!(std::fs::read(&path).unwrap(), b"abddbcccccbbbaaabcaa");
    assert_eq!(ok(&["decode", p], b""), RUNNING);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bench_inputs_are_reproducible() {
    for pattern in [Pattern::Random, Pattern::Unary, Pattern::Alternating, Pattern::Decreasing] {
        for alphabet in [2, 4, 16, 256] {
            let a = generate(pattern, alphabet, 5000, 42);
            assert_eq!(a, generate(pattern, alphabet, 5000, 42));
            assert_eq!(a.len(), 5000);
        }
    }
    assert_ne!(generate(Pattern::Random, 256, 64, 1), generate(Pattern::Random, 256, 64, 2));
    assert_eq!(generate(Pattern::Decreasing, 4, 6, 0), b"dcbadc");
    assert_eq!(generate(Pattern::Alternating, 16, 5, 0), b"ababa");
    assert!(generate(Pattern::Random, 4, 1000, 7).iter().all(|c| (b'a'..=b'd').contains(c)));
}

#[test]
fn bench_csv_shape() {
    let config = BenchConfig { sizes: vec![100, 200], seed: 9, alphabet: 16, pattern: Pattern::Random, repetitions: 3 };
    let mut out = Vec::new();
    bench(&config, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "size,pattern,alphabet,rep,nanoseconds,bytes_per_second");
    assert_eq!(lines.len(), 1 + 2 * 4);
    let keys: Vec<String> = lines[1..].iter().map(|l| l.split(',').take(4).collect::<Vec<_>>().join(",")).collect();
    assert_eq!(keys[3], "100,random,16,median");
    assert_eq!(keys[4], "200,random,16,1");
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f.len(), 6);
        assert!(f[4].parse::<u64>().unwrap() > 0);
    }
}

#[test]
fn pipe_round_trip_through_the_binary() {
    let exe = env!("CARGO_BIN_EXE_bbwt");
    let input: Vec<u8> = (0..=255u8).chain(b"\n\r\0mississippi\n".iter().copied()).collect();
    let run = |args: &[&str], data: &[u8]| {
        let mut child = Command::new(exe)
            .args(args)
            .env("BBWT_COLOR", "1")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(data).unwrap();
        child.wait_with_output().unwrap()
    };
    let enc = run(&["encode"], &input);
    assert!(enc.status.success());
    let dec = run(&["decode"], &enc.stdout);
    assert_eq!(dec.stdout, input);

    let bad = run(&["ebwt"], b"aa");
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
    assert_eq!(String::from_utf8_lossy(&bad.stderr).lines().count(), 1);
}

proptest! {
    #[test]
    fn encode_decode_is_identity(data in proptest::collection::vec(any::<u8>(), 0..300)) {
        let enc = ok(&["encode"], &data);
        prop_assert_eq!(ok(&["decode"], &enc), data);
    }
}
