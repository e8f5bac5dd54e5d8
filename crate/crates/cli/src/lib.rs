//! The `bbwt` command: transforms, inspection tables and a benchmark harness.
//!
//! [`run`] takes the argument vector and the three standard streams so the
//! whole command can be driven in-process.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use bbwt_core::lyndon::ComposedFactorization;
use bbwt_core::{csais, oracle, trace, transform};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Parser, Debug)]
#[command(name = "bbwt", version, about = "Bijective Burrows-Wheeler transform")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Input file; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bijective BWT of the input bytes.
    Encode {
        #[command(flatten)]
        io: Io,
        /// Use the brute-force conjugate sort.
        #[arg(long)]
        oracle: bool,
    },
    /// Invert a bijective BWT.
    Decode {
        #[command(flatten)]
        io: Io,
    },
    /// Composed Lyndon factorization: start, end, multiplicity per line.
    Factorize {
        #[command(flatten)]
        io: Io,
    },
    /// Circular suffix array of the distinct Lyndon factors, 1-based.
    Csa {
        #[command(flatten)]
        io: Io,
        /// Emit 64-bit little-endian integers instead of decimal lines.
        #[arg(long)]
        binary: bool,
        #[arg(long)]
        oracle: bool,
    },
    /// Classical BWT of the input.
    Bwt {
        #[command(flatten)]
        io: Io,
        /// BWT of `T$` with byte 0 as `$`.
        #[arg(long)]
        dollar: bool,
    },
    /// Extended BWT of separator-delimited strings.
    Ebwt {
        #[command(flatten)]
        io: Io,
        /// Separator byte: a number (`0`, `0x0a`) or a single character.
        #[arg(long, default_value = "0", value_parser = parse_byte)]
        sep: u8,
    },
    /// Smallest k with BBWT^k(T) = T.
    Order {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1_000_000)]
        max_k: u64,
    },
    /// Tab-separated tables of every construction stage.
    Trace {
        #[command(flatten)]
        io: Io,
    },
    /// Time the forward transform on generated inputs and print CSV.
    Bench {
        /// Comma-separated input lengths.
        #[arg(long, value_delimiter = ',', default_value = "65536,131072,262144")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 256, value_parser = parse_alphabet)]
        alphabet: u16,
        #[arg(long, value_enum, default_value_t = Pattern::Random)]
        pattern: Pattern,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
}

fn parse_byte(s: &str) -> Result<u8, String> {
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u8::from_str_radix(hex, 16).ok()
    } else if s.len() == 1 && !s.as_bytes()[0].is_ascii_digit() {
        Some(s.as_bytes()[0])
    } else {
        s.parse().ok()
    };
    parsed.ok_or_else(|| format!("'{s}' is not a byte"))
}

fn parse_alphabet(s: &str) -> Result<u16, String> {
    match s.parse() {
        Ok(a @ (2 | 4 | 16 | 256)) => Ok(a),
        _ => Err(format!("alphabet must be one of 2, 4, 16, 256, got '{s}'")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pattern {
    Random,
    Unary,
    Alternating,
    Decreasing,
}

impl Pattern {
    fn name(self) -> &'static str {
        match self {
            Pattern::Random => "random",
            Pattern::Unary => "unary",
            Pattern::Alternating => "alternating",
            Pattern::Decreasing => "decreasing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub alphabet: u16,
    pub pattern: Pattern,
    pub repetitions: usize,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            bail!("sizes must be a nonempty list of positive lengths");
        }
        if self.repetitions == 0 {
            bail!("repetitions must be at least 1");
        }
        if ![2, 4, 16, 256].contains(&self.alphabet) {
            bail!("alphabet must be one of 2, 4, 16, 256");
        }
        Ok(())
    }
}

/// Generated benchmark input. Symbol `k` is byte `k` for the 256-letter
/// alphabet and `b'a' + k` otherwise.
pub fn generate(pattern: Pattern, alphabet: u16, size: usize, seed: u64) -> Vec<u8> {
    let sigma = alphabet as usize;
    let letter = |k: usize| if sigma == 256 { k as u8 } else { b'a' + k as u8 };
    match pattern {
        Pattern::Random => {
            let mut rng = SplitMix64::seed_from_u64(seed);
            (0..size).map(|_| letter((rng.next_u64() % sigma as u64) as usize)).collect()
        }
        Pattern::Unary => vec![letter(0); size],
        Pattern::Alternating => (0..size).map(|i| letter(i % 2)).collect(),
        Pattern::Decreasing => (0..size).map(|i| letter(sigma - 1 - i % sigma)).collect(),
    }
}

/// Time `repetitions` forward transforms per size. Each size yields one row
/// per repetition and a final `median` row.
pub fn bench(config: &BenchConfig, out: &mut dyn Write) -> Result<()> {
    config.validate()?;
    writeln!(out, "size,pattern,alphabet,rep,nanoseconds,bytes_per_second")?;
    for &size in &config.sizes {
        let input = generate(config.pattern, config.alphabet, size, config.seed);
        let mut times = Vec::with_capacity(config.repetitions);
        for rep in 1..=config.repetitions {
            let start = Instant::now();
            let output = transform::bbwt(&input).output;
            let ns = start.elapsed().as_nanos().max(1);
            std::hint::black_box(output);
            times.push(ns);
            bench_row(out, config, size, &rep.to_string(), ns)?;
        }
        times.sort_unstable();
        bench_row(out, config, size, "median", times[times.len() / 2])?;
    }
    Ok(())
}

fn bench_row(out: &mut dyn Write, c: &BenchConfig, size: usize, rep: &str, ns: u128) -> Result<()> {
    let rate = size as u128 * 1_000_000_000 / ns;
    writeln!(out, "{size},{},{},{rep},{ns},{rate}", c.pattern.name(), c.alphabet)?;
    Ok(())
}

fn read_input(io: &Io, stdin: &mut dyn Read) -> Result<Vec<u8>> {
    match &io.input {
        Some(p) if p.as_os_str() != "-" => fs::read(p).with_context(|| format!("cannot read '{}'", p.display())),
        _ => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf).context("cannot read stdin")?;
            Ok(buf)
        }
    }
}

fn write_output(io: &Io, stdout: &mut dyn Write, data: &[u8]) -> Result<()> {
    match &io.output {
        Some(p) => fs::write(p, data).with_context(|| format!("cannot write '{}'", p.display())),
        None => stdout.write_all(data).context("cannot write stdout"),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Encode { io, oracle } => {
            let text = read_input(&io, stdin)?;
            let out = if oracle { oracle::naive_bbwt(&text) } else { transform::bbwt(&text).output };
            write_output(&io, stdout, &out)
        }
        Command::Decode { io } => {
            let b = read_input(&io, stdin)?;
            write_output(&io, stdout, &transform::inverse_bbwt(&b))
        }
        Command::Factorize { io } => {
            let text = read_input(&io, stdin)?;
            let cf = ComposedFactorization::of(&text);
            let mut s = String::new();
            for (run, tau) in cf.origin_spans().iter().zip(cf.multiplicities()) {
                s += &format!("{}\t{}\t{}\n", run.begin_one_based(), run.end_one_based(), tau);
            }
            write_output(&io, stdout, s.as_bytes())
        }
        Command::Csa { io, binary, oracle } => {
            let text = read_input(&io, stdin)?;
            let cf = ComposedFactorization::of(&text);
            let sa = if oracle { oracle::naive_csa(&cf)? } else { csais::circular_suffix_array(&cf) };
            let out: Vec<u8> = if binary {
                sa.one_based().iter().flat_map(|&i| (i as u64).to_le_bytes()).collect()
            } else {
                sa.one_based().iter().map(|i| format!("{i}\n")).collect::<String>().into_bytes()
            };
            write_output(&io, stdout, &out)
        }
        Command::Bwt { io, dollar } => {
            let text = read_input(&io, stdin)?;
            let out = if dollar { transform::bwt_dollar(&text)? } else { transform::bwt_baseline(&text) };
            write_output(&io, stdout, &out)
        }
        Command::Ebwt { io, sep } => {
            let data = read_input(&io, stdin)?;
            let body = data.strip_suffix(&[sep]).unwrap_or(&data);
            let words: Vec<&[u8]> = if body.is_empty() { vec![] } else { body.split(|&c| c == sep).collect() };
            write_output(&io, stdout, &transform::ebwt(&words)?)
        }
        Command::Order { io, max_k } => {
            let text = read_input(&io, stdin)?;
            let line = match transform::bbwt_order(&text, max_k) {
                Ok(k) => format!("{k}\n"),
                Err(bbwt_core::Error::NotFoundWithin { max_k }) => format!(">{max_k}\n"),
                Err(e) => return Err(e.into()),
            };
            write_output(&io, stdout, line.as_bytes())
        }
        Command::Trace { io } => {
            let text = read_input(&io, stdin)?;
            write_output(&io, stdout, trace::trace_tsv(&text).as_bytes())
        }
        Command::Bench { sizes, seed, alphabet, pattern, repetitions } => {
            bench(&BenchConfig { sizes, seed, alphabet, pattern, repetitions }, stdout)
        }
    }
}

fn diagnostic(stderr: &mut dyn Write, color: bool, message: &str) {
    let message = message.lines().next().unwrap_or("").trim();
    let message = message.strip_prefix("error: ").unwrap_or(message);
    let _ = if color {
        writeln!(stderr, "\x1b[1;31mbbwt: error:\x1b[0m {message}")
    } else {
        writeln!(stderr, "bbwt: error: {message}")
    };
}

/// Run the command with coloring taken from `BBWT_COLOR` (`1` enables it).
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let color = std::env::var("BBWT_COLOR").is_ok_and(|v| v == "1");
    run_with(argv, stdin, stdout, stderr, color)
}

/// Run the command; returns the process exit status.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            diagnostic(stderr, color, &e.to_string());
            return 2;
        }
    };
    match execute(cli, stdin, stdout).and_then(|()| stdout.flush().map_err(Into::into)) {
        Ok(()) => 0,
        Err(e) => {
            diagnostic(stderr, color, &format!("{e:#}"));
            1
        }
    }
}
