mod output;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use dcomplexity::census::{frequency_table_cached, MAX_CENSUS_K};
use dcomplexity::constructor::{
    construct_with_complexity, labelings, search, Construction, SearchMode, SearchRequest,
};
use dcomplexity::dsubstring::{complexity_automaton, complexity_substrings, enumerate_d_substrings};
use dcomplexity::sequences::table1;
use dcomplexity::word::{BigCount, Gap, Word};
use output::{Format, Report};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NO_RESULT: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "dcx",
    about = "d-complexity of strings: gap-bounded distinct subsequence counting and analysis",
    version
)]
struct Cli {
    /// Suppress the header line (timestamped provenance comment)
    #[arg(long, global = true)]
    no_header: bool,

    /// Worker threads for census and search (default: all available)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Automaton,
    Oracle,
    Suffix,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the d-complexity of a word
    Complexity {
        /// The word, as ASCII letters
        #[arg(long)]
        word: String,
        /// Gap parameter
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Counting method; auto picks suffix for d=1 and automaton otherwise
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the N(k,d) grid
    Table {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Construct a nontrivial word with a given 1-complexity
    Construct {
        #[arg(long)]
        complexity: u64,
        /// Restrict to two-letter words
        #[arg(long)]
        binary: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Search for canonical words of a given complexity
    Search {
        #[arg(long)]
        complexity: u64,
        /// Fixed length; omit to search for a minimal-length word
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, default_value_t = 4)]
        alphabet: usize,
        /// Emit every canonical witness instead of the first
        #[arg(long)]
        all: bool,
        /// Also print the number of labeled words over the alphabet
        #[arg(long)]
        count_labelings: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Frequency of each complexity over all k-length words on k letters
    Freq {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run a verification suite against the reference data
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        #[arg(long)]
        kmax: Option<usize>,
    },
}

fn cache_dir() -> PathBuf {
    std::env::var_os("SC_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".sc-cache"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // ignore failure: the global pool may already be initialized
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                dcomplexity::Error::CapacityExceeded(_)
                | dcomplexity::Error::InvalidWord(_)
                | dcomplexity::Error::DomainError(_)
                | dcomplexity::Error::DNotSupported => EXIT_USAGE,
                _ => EXIT_NO_RESULT,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> dcomplexity::Result<u8> {
    match &cli.command {
        Command::Complexity {
            word,
            d,
            method,
            format,
        } => cmd_complexity(cli, word, *d, *method, *format),
        Command::Table { kmax, dmax, format } => cmd_table(cli, *kmax, *dmax, *format),
        Command::Construct {
            complexity,
            binary,
            format,
        } => cmd_construct(cli, *complexity, *binary, *format),
        Command::Search {
            complexity,
            length,
            alphabet,
            all,
            count_labelings,
            format,
        } => cmd_search(cli, *complexity, *length, *alphabet, *all, *count_labelings, *format),
        Command::Freq { k, format } => cmd_freq(cli, *k, *format),
        Command::Verify { suite, kmax } => Ok(verify::run(*suite, *kmax)),
    }
}

fn cmd_complexity(
    cli: &Cli,
    word: &str,
    d: usize,
    method: Method,
    format: Format,
) -> dcomplexity::Result<u8> {
    let w = Word::from_text(word)?;
    let gap = Gap::new(d)?;
    let method = match method {
        Method::Auto if d == 1 => Method::Suffix,
        Method::Auto => Method::Automaton,
        m => m,
    };
    let (value, method_name) = match method {
        Method::Suffix => {
            if d != 1 {
                return Err(dcomplexity::Error::DomainError(
                    "the suffix method only applies to d = 1".into(),
                ));
            }
            (complexity_substrings(&w), "suffix")
        }
        Method::Automaton => (complexity_automaton(&w, gap), "automaton"),
        Method::Oracle => {
            if w.len() > 20 {
                return Err(dcomplexity::Error::CapacityExceeded(
                    "the oracle method is limited to words of length <= 20".into(),
                ));
            }
            let set = enumerate_d_substrings(&w, gap, None)?;
            (BigCount::from(set.len()), "oracle")
        }
        Method::Auto => unreachable!(),
    };
    let mut report = Report::new("complexity", cli.no_header);
    report.param("word", word);
    report.param("d", d);
    report.param("method", method_name);
    report.result_row(vec!["complexity".into()], vec![vec![value.to_string()]]);
    report.print(format);
    Ok(EXIT_OK)
}

pub(crate) fn render_table_grid(grid: &[Vec<BigCount>]) -> (Vec<String>, Vec<Vec<String>>) {
    let d_max = grid.first().map_or(0, |row| row.len());
    let mut header = vec!["k\\d".to_string()];
    header.extend((1..=d_max).map(|d| d.to_string()));
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut cells = vec![(i + 1).to_string()];
            cells.extend(row.iter().map(|v| v.to_string()));
            cells
        })
        .collect();
    (header, rows)
}

fn cmd_table(cli: &Cli, kmax: usize, dmax: usize, format: Format) -> dcomplexity::Result<u8> {
    if kmax == 0 || dmax == 0 {
        return Err(dcomplexity::Error::DomainError(
            "kmax and dmax must be >= 1".into(),
        ));
    }
    let grid = table1(kmax, dmax)?;
    let (header, rows) = render_table_grid(&grid);
    let mut report = Report::new("table", cli.no_header);
    report.param("kmax", kmax);
    report.param("dmax", dmax);
    report.result_row(header, rows);
    report.print(format);
    Ok(EXIT_OK)
}

fn cmd_construct(cli: &Cli, complexity: u64, binary: bool, format: Format) -> dcomplexity::Result<u8> {
    if complexity == 0 {
        return Err(dcomplexity::Error::DomainError(
            "complexity must be >= 1".into(),
        ));
    }
    let target = BigCount::from(complexity);
    let mut report = Report::new("construct", cli.no_header);
    report.param("complexity", complexity);
    report.param("binary", binary);
    match construct_with_complexity(&target, binary)? {
        Construction::Recipe(recipe) => {
            report.result_row(
                vec!["word".into(), "complexity".into()],
                vec![vec![
                    recipe.word().to_letters()?,
                    recipe.claimed_complexity().to_string(),
                ]],
            );
        }
        Construction::Impossible => {
            report.result_row(vec!["word".into()], vec![vec!["IMPOSSIBLE".into()]]);
        }
    }
    report.print(format);
    Ok(EXIT_OK)
}

fn cmd_search(
    cli: &Cli,
    complexity: u64,
    length: Option<usize>,
    alphabet: usize,
    all: bool,
    count_labelings: bool,
    format: Format,
) -> dcomplexity::Result<u8> {
    let req = SearchRequest {
        target: BigCount::from(complexity),
        length,
        alphabet_size: alphabet,
        mode: if all { SearchMode::AllCanonical } else { SearchMode::First },
    };
    let found = search(&req)?;
    let mut report = Report::new("search", cli.no_header);
    report.param("complexity", complexity);
    if let Some(k) = length {
        report.param("length", k);
    }
    report.param("alphabet", alphabet);
    let header = if count_labelings {
        vec!["word".into(), "labelings".into()]
    } else {
        vec!["word".into()]
    };
    let mut rows = Vec::new();
    for p in &found {
        let mut row = vec![p.to_letters()?];
        if count_labelings {
            row.push(labelings(p, alphabet).to_string());
        }
        rows.push(row);
    }
    if count_labelings {
        let total: BigCount = found.iter().map(|p| labelings(p, alphabet)).sum();
        rows.push(vec!["total".into(), total.to_string()]);
    }
    let empty = found.is_empty();
    report.result_row(header, rows);
    report.print(format);
    Ok(if empty { EXIT_NO_RESULT } else { EXIT_OK })
}

fn cmd_freq(cli: &Cli, k: usize, format: Format) -> dcomplexity::Result<u8> {
    if k == 0 || k > MAX_CENSUS_K {
        return Err(dcomplexity::Error::CapacityExceeded(format!(
            "freq supports 1 <= k <= {MAX_CENSUS_K}"
        )));
    }
    let table = frequency_table_cached(k, &cache_dir())?;
    let mut report = Report::new("freq", cli.no_header);
    report.param("k", k);
    let header = vec!["complexity".into(), "frequency".into()];
    let rows: Vec<Vec<String>> = (k..=table.max_possible())
        .map(|c| vec![c.to_string(), table.frequency(c).to_string()])
        .collect();
    report.result_row(header, rows);
    report.print(format);
    Ok(EXIT_OK)
}
