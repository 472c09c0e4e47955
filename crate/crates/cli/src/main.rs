use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use goldman::harness::{self, Check, SweepConfig};
use goldman::{algebra, io, pairing, topology, Alphabet, CyclicWord, Error, FormalSum, TensorSum, Word};

/// Goldman bracket, Turaev cobracket and self-intersection numbers of cyclic words.
///
/// Words use `a`–`z` for generators and `A`–`Z` for their inverses, or the
/// indexed form `a1.a2.A1` for any number of generators. `1` is the empty word.
#[derive(Parser, Debug)]
#[command(name = "goldman", version)]
struct Cli {
    /// Number of generators; inferred from the words when omitted.
    #[arg(long, global = true)]
    alphabet: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Free reduction of a linear word.
    Reduce { word: String },
    /// Canonical form of the cyclic word.
    Canon { word: String },
    /// Classes of R(V, W) for cyclically reduced V and W.
    Classes { v: String, w: String },
    /// [V^p, W^q].
    Bracket {
        v: String,
        w: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        q: i64,
    },
    /// Turaev cobracket of V.
    Cobracket { v: String },
    /// Minimal number of self-intersections.
    Selfint { v: String },
    /// Whether the class has an embedded representative.
    Simple { v: String },
    /// Checks M([V^p, V^q]) = 2pq·s(V).
    Counting {
        v: String,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Runs verification sweeps; exits 1 if a gating check fails.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Comma-separated subset of the checks; all by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Exponent pairs for the counting check, e.g. `1:3,2:3`.
        #[arg(long, value_delimiter = ',')]
        pairs: Vec<String>,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "GOLDMAN_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Length bound for antisymmetry and power-form checks.
        #[arg(long)]
        pair_len: Option<usize>,
        /// Length bound for class-constancy and alphabet-rotation checks.
        #[arg(long)]
        class_len: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check or internal consistency test failed: exit 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) | Error::Overflow => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn parse_words(texts: &[&str], q: Option<u16>) -> Result<(Alphabet, Vec<Word>), Failure> {
    let words = texts
        .iter()
        .map(|t| t.parse::<Word>())
        .collect::<Result<Vec<_>, _>>()?;
    let alphabet = match q {
        Some(q) => Alphabet::new(q)?,
        None => Alphabet::covering(&words),
    };
    for (text, word) in texts.iter().zip(&words) {
        alphabet
            .check(word)
            .map_err(|e| Failure::Usage(format!("word `{text}`: {e}")))?;
    }
    Ok((alphabet, words))
}

fn parse_cyclic(texts: &[&str], q: Option<u16>) -> Result<(Alphabet, Vec<CyclicWord>), Failure> {
    let (alphabet, words) = parse_words(texts, q)?;
    Ok((alphabet, words.iter().map(CyclicWord::from_word).collect()))
}

fn sum_text(sum: &FormalSum) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let lines: Vec<String> = sum.iter().map(|(w, c)| format!("{c} {w}")).collect();
    lines.join("\n")
}

fn tensor_text(sum: &TensorSum) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let lines: Vec<String> = sum.iter().map(|((l, r), c)| format!("{c} {l} {r}")).collect();
    lines.join("\n")
}

fn word_json(word: impl std::fmt::Display) -> String {
    serde_json::json!({ "word": word.to_string() }).to_string()
}

fn parse_pair(text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("malformed exponent pair `{text}`: expected P:Q"));
    let (p, q) = text.split_once(':').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn run(cli: Cli) -> Outcome {
    let json = cli.format == Format::Json;
    let q = cli.alphabet;
    let out = match cli.command {
        Command::Reduce { word } => {
            let (_, w) = parse_words(&[&word], q)?;
            let r = w[0].free_reduce();
            if json { word_json(r) } else { r.to_string() }
        }
        Command::Canon { word } => {
            let (_, w) = parse_cyclic(&[&word], q)?;
            if json { word_json(&w[0]) } else { w[0].to_string() }
        }
        Command::Classes { v, w } => {
            let (a, ws) = parse_words(&[&v, &w], q)?;
            let classes = pairing::classes(&a, &ws[0], &ws[1])?;
            if json {
                io::classes_json(&classes)
            } else {
                let lines: Vec<String> = classes
                    .iter()
                    .map(|c| {
                        let extremal = c.extremal.map_or("-".into(), |(i, j)| format!("({i},{j})"));
                        let members: Vec<String> = c.members.iter().map(|(i, j)| format!("({i},{j})")).collect();
                        format!(
                            "{:?} c={} extremal={} sign={} {}",
                            c.shape,
                            c.negative_length,
                            extremal,
                            c.sign.value(),
                            members.join(" ")
                        )
                    })
                    .collect();
                lines.join("\n")
            }
        }
        Command::Bracket { v, w, p, q: l } => {
            let (a, ws) = parse_cyclic(&[&v, &w], q)?;
            let sum = algebra::bracket(&a, &ws[0].pow(p), &ws[1].pow(l))?;
            if json { io::formal_sum_json(&sum) } else { sum_text(&sum) }
        }
        Command::Cobracket { v } => {
            let (a, ws) = parse_cyclic(&[&v], q)?;
            let sum = algebra::cobracket(&a, &ws[0])?;
            if json { io::tensor_sum_json(&sum) } else { tensor_text(&sum) }
        }
        Command::Selfint { v } => {
            let (a, ws) = parse_cyclic(&[&v], q)?;
            let s = topology::self_intersection(&a, &ws[0])?;
            if json { serde_json::json!({ "self_intersection": s }).to_string() } else { s.to_string() }
        }
        Command::Simple { v } => {
            let (a, ws) = parse_cyclic(&[&v], q)?;
            let simple = topology::is_simple(&a, &ws[0])?;
            if json { serde_json::json!({ "simple": simple }).to_string() } else { simple.to_string() }
        }
        Command::Counting { v, p, q: l } => {
            let (a, ws) = parse_cyclic(&[&v], q)?;
            let report = topology::verify_counting(&a, &ws[0], p, l)?;
            let text = if json {
                serde_json::to_string(&report).expect("report serializes")
            } else {
                format!(
                    "M = {}, 2pq·s = {}: {}",
                    report.manhattan,
                    report.expected,
                    if report.pass { "pass" } else { "FAIL" }
                )
            };
            return Ok((text, report.pass));
        }
        Command::Verify {
            max_len,
            checks,
            pairs,
            jobs,
            pair_len,
            class_len,
            seed,
        } => {
            let alphabet = Alphabet::new(q.unwrap_or(2))?;
            let mut cfg = SweepConfig::new(alphabet, max_len).with_workers(jobs);
            if !checks.is_empty() {
                cfg.checks = checks
                    .iter()
                    .map(|c| c.trim().parse::<Check>())
                    .collect::<Result<_, _>>()?;
            }
            if !pairs.is_empty() {
                cfg.exponent_pairs = pairs.iter().map(|p| parse_pair(p)).collect::<Result<_, _>>()?;
            }
            cfg.pair_len = pair_len.unwrap_or(cfg.pair_len);
            cfg.class_len = class_len.unwrap_or(cfg.class_len);
            cfg.seed = seed.unwrap_or(cfg.seed);
            let report = harness::run(&cfg)?;
            eprintln!("wall time: {:.3}s", report.wall_time.as_secs_f64());
            let text = if json { report.to_json() } else { report.to_string() };
            return Ok((text, !report.gating_failed()));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, pass)) => {
            println!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("goldman: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("goldman: {msg}");
            ExitCode::from(1)
        }
    }
}
