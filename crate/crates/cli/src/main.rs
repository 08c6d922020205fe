use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lyruns::harness::{density_search, verify, Check, CorpusSpec, Mode, VerificationReport};
use lyruns::pipeline::{self, Stage};
use lyruns::{generate, LyndonArray, Order, SuffixContext, Text, TwoPeriodIndex};

mod render;

#[derive(Parser)]
#[command(
    name = "lyruns",
    version,
    about = "Runs, Lyndon arrays and Lyndon trees of byte strings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all runs.
    Runs {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = RunsFormat::Json)]
        format: RunsFormat,
    },
    /// Print the longest Lyndon word ending at each position.
    Lyndon {
        #[command(flatten)]
        input: Input,
        /// 0 for ascending symbol order, 1 for descending; both if omitted.
        #[arg(long, value_parser = parse_order)]
        order: Option<Order>,
        /// Print the Lyndon factorization instead.
        #[arg(long)]
        factorize: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Print the Lyndon tree of `#w$`.
    Tree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_order, default_value = "0")]
        order: Order,
        /// Graphviz output instead of nested JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Answer 2-period queries, one `i j` pair per line.
    Period {
        #[command(flatten)]
        input: Input,
        /// Query file; `-` reads standard input.
        #[arg(long)]
        queries: PathBuf,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Check the algorithms against brute force over a corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated checks; all when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Largest length for the tree, 2-period and Lyndon checks.
        #[arg(long, default_value_t = lyruns::harness::DEFAULT_GATE)]
        gate: usize,
    },
    /// Largest run count and exponent sum per length over a corpus.
    Density {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Time each pipeline stage on a generated input.
    Bench {
        #[arg(long, value_enum, default_value_t = Kind::Random)]
        kind: Kind,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also build and annotate both Lyndon trees.
        #[arg(long)]
        trees: bool,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline input string.
    #[arg(long)]
    text: Option<String>,
    /// File read as raw bytes.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value = "exhaustive")]
    mode: Mode,
    #[arg(long, default_value_t = 2)]
    sigma: u32,
    #[arg(long, default_value_t = 1)]
    min_len: usize,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of strings accepted.
    #[arg(long, default_value_t = lyruns::harness::DEFAULT_BUDGET)]
    budget: u128,
    /// One string per line, for `--mode file`; a tab and a run count may
    /// follow each string.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RunsFormat {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Fibonacci,
    ThueMorse,
    Unary,
}

fn parse_order(s: &str) -> Result<Order, String> {
    match s {
        "0" => Ok(Order::Ascending),
        "1" => Ok(Order::Descending),
        _ => Err(format!("order must be 0 or 1, got `{s}`")),
    }
}

/// A failure reported with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Runs { input, format } => {
            let (_, text) = input.load()?;
            let runs = lyruns::compute_all_runs(&text)?;
            match format {
                RunsFormat::Json => render::runs_json(&mut out, &runs)?,
                RunsFormat::Tsv => render::runs_tsv(&mut out, &runs)?,
            }
            ExitCode::SUCCESS
        }
        Command::Lyndon {
            input,
            order,
            factorize,
            format,
        } => {
            let (bytes, text) = input.load()?;
            if factorize {
                let order = order.unwrap_or(Order::Ascending);
                let factors = render::factorization(&bytes, &text, order);
                match format {
                    TextFormat::Text => writeln!(out, "{factors}")?,
                    TextFormat::Json => {
                        let list: Vec<&str> = factors.split('|').collect();
                        writeln!(out, "{}", serde_json::json!({ "factors": list }))?
                    }
                }
            } else {
                let arr = LyndonArray::compute(&SuffixContext::build(&text)?);
                match format {
                    TextFormat::Text => render::lyndon_text(&mut out, &arr, order)?,
                    TextFormat::Json => render::lyndon_json(&mut out, &arr, order)?,
                }
            }
            ExitCode::SUCCESS
        }
        Command::Tree { input, order, dot } => {
            let (_, text) = input.load()?;
            let index = TwoPeriodIndex::build(&text)?;
            let tree = index.tree(order);
            let rendered = if dot {
                tree.to_dot(Some(index.runs()))
            } else {
                tree.to_json(Some(index.runs())) + "\n"
            };
            out.write_all(rendered.as_bytes())?;
            ExitCode::SUCCESS
        }
        Command::Period {
            input,
            queries,
            format,
        } => {
            let (_, text) = input.load()?;
            let raw = if queries.as_os_str() == "-" {
                io::read_to_string(io::stdin())?
            } else {
                fs::read_to_string(&queries)
                    .map_err(|e| Failure(format!("cannot read {}: {e}", queries.display())))?
            };
            let parsed = parse_queries(&raw, text.len())?;
            let index = TwoPeriodIndex::build(&text)?;
            for (i, j) in parsed {
                let p = index.query(i, j)?.map(|(p, _)| p);
                match format {
                    TextFormat::Text => match p {
                        Some(p) => writeln!(out, "{i} {j} {p}")?,
                        None => writeln!(out, "{i} {j} -")?,
                    },
                    TextFormat::Json => writeln!(
                        out,
                        "{}",
                        serde_json::json!({ "i": i, "j": j, "period": p })
                    )?,
                }
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            corpus,
            checks,
            gate,
        } => {
            let mut spec = corpus.spec()?;
            spec.gate = gate;
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
            };
            let report = verify(&spec, &checks)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            verdict(&report)
        }
        Command::Density { corpus } => {
            let report = density_search(&corpus.spec()?)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            ExitCode::SUCCESS
        }
        Command::Bench {
            kind,
            size,
            sigma,
            seed,
            trees,
            repeat,
        } => {
            if size == 0 {
                return Err(Failure("size must be positive".into()));
            }
            if sigma == 0 {
                return Err(Failure("sigma must be positive".into()));
            }
            let text = match kind {
                Kind::Random => generate::random(size, sigma, seed),
                Kind::Fibonacci => generate::fibonacci(size),
                Kind::ThueMorse => generate::thue_morse(size),
                Kind::Unary => generate::unary(size),
            };
            bench(&mut out, &text, trees, repeat.max(1))?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

impl Input {
    fn load(&self) -> Result<(Vec<u8>, Text), Failure> {
        let bytes = match (&self.text, &self.input) {
            (Some(t), _) => t.clone().into_bytes(),
            (None, Some(path)) => fs::read(path)
                .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?,
            (None, None) => unreachable!("clap requires one input"),
        };
        if bytes.is_empty() {
            return Err(Failure("empty input".into()));
        }
        let text = Text::from_bytes(&bytes);
        Ok((bytes, text))
    }
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec, Failure> {
        let mut spec = match self.mode {
            Mode::File => {
                let path = self
                    .corpus
                    .as_ref()
                    .ok_or_else(|| Failure("--mode file needs --corpus".into()))?;
                let raw = fs::read(path)
                    .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
                let (texts, expected) = parse_corpus(&raw)?;
                CorpusSpec::file_with_expected(texts, expected)
            }
            Mode::Exhaustive => CorpusSpec::exhaustive(self.sigma, self.min_len, self.max_len),
            Mode::Random => CorpusSpec::random(
                self.sigma,
                self.min_len,
                self.max_len,
                self.trials,
                self.seed,
            ),
        };
        spec.seed = self.seed;
        spec.budget = self.budget;
        Ok(spec)
    }
}

/// One string per line, optionally followed by a tab and its run count.
fn parse_corpus(raw: &[u8]) -> Result<(Vec<Text>, Vec<Option<usize>>), Failure> {
    let mut texts = Vec::new();
    let mut expected = Vec::new();
    for (k, line) in raw.split(|&b| b == b'\n').enumerate() {
        if line.is_empty() {
            continue;
        }
        let (word, count) = match line.iter().position(|&b| b == b'\t') {
            None => (line, None),
            Some(tab) => {
                let field = String::from_utf8_lossy(&line[tab + 1..]).trim().to_string();
                let count = field.parse::<usize>().map_err(|_| {
                    Failure(format!("corpus line {}: bad run count `{field}`", k + 1))
                })?;
                (&line[..tab], Some(count))
            }
        };
        if word.is_empty() {
            return Err(Failure(format!("corpus line {}: empty string", k + 1)));
        }
        texts.push(Text::from_bytes(word));
        expected.push(count);
    }
    Ok((texts, expected))
}

/// Exit status of a verification run.
fn verdict(report: &VerificationReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Parses `i j` lines; blank lines and `#` comments are skipped.
fn parse_queries(raw: &str, n: usize) -> Result<Vec<(usize, usize)>, Failure> {
    let mut queries = Vec::new();
    for (k, line) in raw.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |why: &str| Failure(format!("query line {}: {why}: `{line}`", k + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [i, j] = fields[..] else {
            return Err(bad("expected two positions"));
        };
        let (Ok(i), Ok(j)) = (i.parse::<usize>(), j.parse::<usize>()) else {
            return Err(bad("positions must be non-negative integers"));
        };
        if i == 0 || i > j || j > n {
            return Err(bad(&format!("interval outside 1..={n}")));
        }
        queries.push((i, j));
    }
    Ok(queries)
}

fn bench(out: &mut impl Write, text: &Text, trees: bool, repeat: usize) -> Result<(), Failure> {
    let mut best: Option<pipeline::PipelineReport> = None;
    for _ in 0..repeat {
        let r = pipeline::run(text, trees)?;
        if best.as_ref().is_none_or(|b| r.total() < b.total()) {
            best = Some(r);
        }
    }
    let r = best.expect("at least one repetition");
    let ms = |d: Duration| d.as_secs_f64() * 1e3;
    writeln!(out, "n\t{}", r.n)?;
    writeln!(out, "runs\t{}", r.runs.len())?;
    writeln!(out, "pops\t{}\t{}", r.pops[0], r.pops[1])?;
    writeln!(out, "stage\tms")?;
    for stage in [Stage::Suffix, Stage::Lyndon, Stage::Runs, Stage::Trees] {
        if let Some(d) = r.stage(stage) {
            writeln!(out, "{}\t{:.1}", stage.name(), ms(d))?;
        }
    }
    writeln!(out, "total\t{:.1}", ms(r.total()))?;
    Ok(())
}
