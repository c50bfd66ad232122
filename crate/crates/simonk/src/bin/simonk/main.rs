//! `simonk`: max k, decision, Simon-Tree rendering and timing from the
//! command line.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};
use simonk::tree::export_dot;
use simonk::workload::{near_identical_pair, rng, uniform_word};
use simonk::{max_sim_k, sim_k, solve, MaxK, Side, SimonTree, Tokenization};

use input::{read_texts, Encoded};

pub enum Failure {
    Usage(String),
    Io(String),
}

#[derive(Parser)]
#[command(name = "simonk", version, about = "Simon's congruence of two words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InputArgs {
    /// Whitespace-separated tokens are letters (default: every character)
    #[arg(long)]
    tokens: bool,
    /// Read the words from this file, one per line
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl InputArgs {
    fn mode(&self) -> Tokenization {
        if self.tokens {
            Tokenization::Tokens
        } else {
            Tokenization::Chars
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Largest k with S ~k T ("inf" if the words are equal)
    Maxk {
        /// Also print a shortest word that is a subsequence of exactly one input
        #[arg(long)]
        distinguish: bool,
        /// One JSON record with k, distinguisher and input digests
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        input: InputArgs,
        /// The two words; read from --file or stdin (two lines) if absent
        words: Vec<String>,
    },
    /// Exit 0 if S ~k T, 1 otherwise
    Check {
        #[arg(short)]
        k: u32,
        #[command(flatten)]
        input: InputArgs,
        words: Vec<String>,
    },
    /// Simon-Tree of a word as DOT
    Tree {
        /// Keep the end-marker block `$`
        #[arg(long)]
        end_marker: bool,
        #[command(flatten)]
        input: InputArgs,
        word: Vec<String>,
    },
    /// Time max k on generated pairs
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// A random word and a copy with a few edits
    Near,
    /// Two independent random words
    Uniform,
}

#[derive(Args)]
struct BenchArgs {
    /// Word lengths, ascending
    #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 1_000_000])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 26)]
    alphabet: u32,
    #[arg(long, default_value_t = 3)]
    reps: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Near)]
    mode: Mode,
    /// Edits per pair in near mode
    #[arg(long, default_value_t = 8)]
    edits: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct MaxKRecord {
    k: Option<u32>,
    equal: bool,
    distinguisher: Option<String>,
    side: Option<&'static str>,
    s_len: usize,
    t_len: usize,
    s_sha256: String,
    t_sha256: String,
}

#[derive(Serialize)]
struct BenchRecord {
    size: usize,
    reps: u32,
    mean_ms: f64,
    ns_per_symbol: f64,
    k: String,
}

fn digest(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::S => "s",
        Side::T => "t",
    }
}

fn cmd_maxk(
    distinguish: bool,
    json: bool,
    input: &InputArgs,
    words: &[String],
) -> Result<ExitCode, Failure> {
    let texts = read_texts(words, input.file.as_deref(), 2)?.0;
    let enc = Encoded::new(&texts[0], &texts[1], input.mode());
    if !distinguish && !json {
        println!("k={}", max_sim_k(&enc.s, &enc.t));
        return Ok(ExitCode::SUCCESS);
    }
    let res = solve(&enc.s, &enc.t);
    let word = res
        .distinguisher
        .as_ref()
        .map(|d| (enc.render(&d.word), side_name(d.side)));
    if json {
        let record = MaxKRecord {
            k: match res.k {
                MaxK::Finite(k) => Some(k),
                MaxK::Equal => None,
            },
            equal: res.k == MaxK::Equal,
            distinguisher: word.as_ref().map(|w| w.0.clone()),
            side: word.as_ref().map(|w| w.1),
            s_len: enc.s.len(),
            t_len: enc.t.len(),
            s_sha256: digest(&texts[0]),
            t_sha256: digest(&texts[1]),
        };
        println!("{}", serde_json::to_string(&record).expect("plain record"));
    } else {
        println!("k={}", res.k);
        match word {
            Some((w, side)) => println!("distinguisher={w} in={side}"),
            None => println!("distinguisher=none"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(k: u32, input: &InputArgs, words: &[String]) -> Result<ExitCode, Failure> {
    let texts = read_texts(words, input.file.as_deref(), 2)?.0;
    let enc = Encoded::new(&texts[0], &texts[1], input.mode());
    let yes = sim_k(&enc.s, &enc.t, k);
    println!("{yes}");
    Ok(if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_tree(end_marker: bool, input: &InputArgs, word: &[String]) -> Result<ExitCode, Failure> {
    let texts = read_texts(word, input.file.as_deref(), 1)?.0;
    let enc = Encoded::new(&texts[0], "", input.mode());
    let tree = if end_marker {
        SimonTree::build_with_end_marker(&enc.s)
    } else {
        SimonTree::build(&enc.s)
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    print!("{}", export_dot(&tree, &enc.s, &enc.map));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(b: &BenchArgs) -> Result<ExitCode, Failure> {
    if b.sizes.is_empty() || b.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage(
            "--sizes must be non-empty and strictly ascending".into(),
        ));
    }
    if b.alphabet == 0 || b.reps == 0 {
        return Err(Failure::Usage(
            "--alphabet and --reps must be positive".into(),
        ));
    }
    if !b.json {
        println!(
            "{:>10} {:>5} {:>10} {:>10}  k",
            "size", "reps", "mean_ms", "ns/symbol"
        );
    }
    let mut per_symbol = Vec::new();
    for &n in &b.sizes {
        let mut r = rng(b.seed ^ (n as u64).rotate_left(32));
        let (s, t) = match b.mode {
            Mode::Near => near_identical_pair(&mut r, n, b.alphabet, b.edits),
            Mode::Uniform => (
                uniform_word(&mut r, n, b.alphabet),
                uniform_word(&mut r, n, b.alphabet),
            ),
        };
        let mut total = 0.0;
        let mut k = MaxK::Equal;
        for _ in 0..b.reps {
            let start = Instant::now();
            k = max_sim_k(&s, &t);
            total += start.elapsed().as_secs_f64();
        }
        let mean = total / b.reps as f64;
        let ns = mean * 1e9 / n.max(1) as f64;
        per_symbol.push(ns);
        let rec = BenchRecord {
            size: n,
            reps: b.reps,
            mean_ms: mean * 1e3,
            ns_per_symbol: ns,
            k: k.to_string(),
        };
        if b.json {
            println!("{}", serde_json::to_string(&rec).expect("plain record"));
        } else {
            println!(
                "{:>10} {:>5} {:>10.2} {:>10.1}  {}",
                rec.size, rec.reps, rec.mean_ms, rec.ns_per_symbol, rec.k
            );
        }
    }
    if !b.json && per_symbol.len() > 1 {
        println!(
            "time/n ratio, largest vs smallest size: {:.2}",
            per_symbol[per_symbol.len() - 1] / per_symbol[0]
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Maxk {
            distinguish,
            json,
            input,
            words,
        } => cmd_maxk(*distinguish, *json, input, words),
        Cmd::Check { k, input, words } => cmd_check(*k, input, words),
        Cmd::Tree {
            end_marker,
            input,
            word,
        } => cmd_tree(*end_marker, input, word),
        Cmd::Bench(b) => cmd_bench(b),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("simonk: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("simonk: {msg}");
            ExitCode::from(3)
        }
    }
}
