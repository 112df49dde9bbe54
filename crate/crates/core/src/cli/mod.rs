//! Command-line surface: classify, pinv, verify, gen, and bench.
//!
//! Exit codes: 0 on success, 1 on validation or verification failure,
//! 2 on usage errors.

pub mod bench;
pub mod gen;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exact::{format_rational, rational, RationalMatrix};
use crate::graph::{parse_graph, Graph, UnicyclicDecomposition};
use crate::matrices::IncidenceMatrix;
use crate::oracle::check_penrose;
use crate::pinv::{combinatorial_pinv, predicted_hm, predicted_mh, qplus_splus, CombinatorialPinv};

use bench::BenchConfig;
use gen::{generate_unicyclic, sample_cycle_length, CycleParity, GenSpec};

#[derive(Parser)]
#[command(
    name = "unipinv",
    version,
    about = "Exact Moore-Penrose inverses of unicyclic graph incidence matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an edge-list graph (Tree, OddUnicyclic, EvenUnicyclic, Other)
    Classify {
        /// Edge-list file path, or `-` for stdin
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Compute the exact pseudoinverse H of the incidence matrix
    Pinv {
        /// Edge-list file path, or `-` for stdin
        #[arg(long, default_value = "-")]
        input: String,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Matrices to emit (repeatable); defaults to `h`
        #[arg(long, value_enum)]
        emit: Vec<Emit>,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the pseudoinverse: Penrose axioms, predicted products, fingerprints
    Verify {
        /// Edge-list file path, or `-` for stdin
        #[arg(long, default_value = "-")]
        input: String,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded random unicyclic graph as an edge-list document
    Gen {
        /// Total vertex count
        #[arg(long)]
        n: usize,
        /// Cycle length; sampled from the seed when omitted
        #[arg(long)]
        cycle: Option<usize>,
        /// Cycle parity constraint
        #[arg(long, value_enum, default_value_t = ParityArg::Any)]
        parity: ParityArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write output to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the combinatorial construction against the exact oracle
    Bench {
        /// Graph size; repeatable, at least 4
        #[arg(long = "n", required = true)]
        sizes: Vec<usize>,
        /// Seeds per size (medians are reported over these)
        #[arg(long, default_value_t = 5)]
        seeds: usize,
        /// Base seed; cell seeds count up from here
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cycle length for generated graphs (default 4)
        #[arg(long)]
        cycle: Option<usize>,
        /// Skip the oracle above this size
        #[arg(long = "oracle-cap", default_value_t = 64)]
        oracle_cap: usize,
        /// Write the CSV to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    /// The pseudoinverse H (edges by vertices)
    H,
    /// The product M*H (vertices by vertices)
    Mh,
    /// The product H*M (edges by edges)
    Hm,
    /// Pseudoinverse of the signless Laplacian Q = M*M^T
    Qplus,
    /// Pseudoinverse of the signless edge Laplacian S = M^T*M
    Splus,
}

impl Emit {
    fn key(self) -> &'static str {
        match self {
            Emit::H => "h",
            Emit::Mh => "mh",
            Emit::Hm => "hm",
            Emit::Qplus => "qplus",
            Emit::Splus => "splus",
        }
    }

    /// Row/column label prefixes: `e` for edge-indexed, `v` for
    /// vertex-indexed axes.
    fn label_prefixes(self) -> (char, char) {
        match self {
            Emit::H => ('e', 'v'),
            Emit::Mh => ('v', 'v'),
            Emit::Hm => ('e', 'e'),
            Emit::Qplus => ('v', 'v'),
            Emit::Splus => ('e', 'e'),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Any,
}

impl From<ParityArg> for CycleParity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => CycleParity::Even,
            ParityArg::Odd => CycleParity::Odd,
            ParityArg::Any => CycleParity::Any,
        }
    }
}

enum CmdError {
    /// Bad input data or a failed verification: exit code 1.
    Validation(String),
    /// Bad flag combination: exit code 2.
    Usage(String),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            CmdError::Validation(_) => 1,
            CmdError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Validation(msg) | CmdError::Usage(msg) => msg,
        }
    }
}

fn read_input(path: &str) -> Result<String, CmdError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CmdError::Validation(format!("failed to read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CmdError::Validation(format!("failed to read {path}: {e}")))
    }
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), CmdError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| CmdError::Validation(format!("failed to write {}: {e}", path.display()))),
    }
}

fn load_graph(path: &str) -> Result<Graph, CmdError> {
    parse_graph(&read_input(path)?).map_err(|e| CmdError::Validation(e.to_string()))
}

fn require_unicyclic(graph: &Graph) -> Result<UnicyclicDecomposition, CmdError> {
    let class = graph.classify();
    if !class.is_unicyclic() {
        return Err(CmdError::Validation(format!(
            "input is {class}; the closed-form pseudoinverse is defined for unicyclic graphs \
             only (trees have a non-square incidence matrix)"
        )));
    }
    Ok(graph.decompose().expect("unicyclic by classification"))
}

fn cmd_classify(input: &str) -> Result<String, CmdError> {
    let graph = load_graph(input)?;
    let class = graph.classify();
    let mut line = format!(
        "{class} n={} m={}",
        graph.vertex_count(),
        graph.edge_count()
    );
    if class.is_unicyclic() {
        let cycle = graph.find_cycle().expect("unicyclic by classification");
        write!(line, " |C|={}", cycle.len()).unwrap();
    }
    line.push('\n');
    Ok(line)
}

/// Computes the matrices requested by `--emit` in declaration order.
fn emitted_matrices(
    decomposition: &UnicyclicDecomposition,
    pinv: &CombinatorialPinv,
    emits: &[Emit],
) -> Vec<(Emit, RationalMatrix)> {
    let m = IncidenceMatrix::from_graph(decomposition.graph());
    emits
        .iter()
        .map(|&target| {
            let matrix = match target {
                Emit::H => pinv.h().clone(),
                Emit::Mh => m.as_matrix().mul(pinv.h()),
                Emit::Hm => pinv.h().mul(m.as_matrix()),
                Emit::Qplus => qplus_splus(pinv).0,
                Emit::Splus => qplus_splus(pinv).1,
            };
            (target, matrix)
        })
        .collect()
}

fn labeled_csv(matrix: &RationalMatrix, prefixes: (char, char)) -> String {
    let (row_prefix, col_prefix) = prefixes;
    let mut out = String::new();
    let header: Vec<String> = (1..=matrix.cols())
        .map(|c| format!("{col_prefix}{c}"))
        .collect();
    out.push_str(&format!(",{}\n", header.join(",")));
    for r in 0..matrix.rows() {
        let cells: Vec<String> = (0..matrix.cols())
            .map(|c| format_rational(matrix.get(r, c)))
            .collect();
        out.push_str(&format!("{row_prefix}{},{}\n", r + 1, cells.join(",")));
    }
    out
}

fn cmd_pinv(input: &str, format: Format, emits: &[Emit]) -> Result<String, CmdError> {
    let graph = load_graph(input)?;
    let decomposition = require_unicyclic(&graph)?;
    let pinv = combinatorial_pinv(&decomposition);
    let emits = if emits.is_empty() {
        vec![Emit::H]
    } else {
        emits.to_vec()
    };
    let matrices = emitted_matrices(&decomposition, &pinv, &emits);

    match format {
        Format::Json => {
            let mut object = json!({
                "class": pinv.class().to_string(),
                "formula": pinv.formula().to_string(),
                "n": graph.vertex_count(),
                "m": graph.edge_count(),
                "cycle_length": decomposition.cycle().len(),
            });
            for (target, matrix) in &matrices {
                object[target.key()] = matrix.to_json();
            }
            Ok(format!("{object}\n"))
        }
        Format::Csv => {
            let mut out = format!(
                "# class={} formula={} n={} m={} cycle_length={}\n",
                pinv.class(),
                pinv.formula(),
                graph.vertex_count(),
                graph.edge_count(),
                decomposition.cycle().len()
            );
            for (target, matrix) in &matrices {
                out.push_str(&format!("# {}\n", target.key()));
                out.push_str(&labeled_csv(matrix, target.label_prefixes()));
            }
            Ok(out)
        }
    }
}

/// Pendant fingerprint: `h[i][j] = (n-1)/n` exactly at pendant-edge/
/// pendant-vertex positions and nowhere else. Only meaningful for the
/// even-cycle formula.
fn pendant_fingerprint_holds(graph: &Graph, h: &RationalMatrix) -> bool {
    let n = graph.vertex_count() as i64;
    let fingerprint = rational(n - 1, n);
    h.iter().all(|(e, j, value)| {
        let (u, v) = graph.endpoints(e);
        let is_pendant_position = (j == u || j == v) && graph.degree(j) == 1;
        (*value == fingerprint) == is_pendant_position
    })
}

/// Cycle-edge fingerprint: the diagonal of `H*M` is `(|C|-1)/|C|` exactly on
/// cycle edges and 1 elsewhere.
fn cycle_fingerprint_holds(d: &UnicyclicDecomposition, hm: &RationalMatrix) -> bool {
    let c = d.cycle().len() as i64;
    let on_cycle = rational(c - 1, c);
    (0..hm.rows()).all(|i| {
        let expected = if d.is_cycle_edge(i) {
            on_cycle.clone()
        } else {
            rational(1, 1)
        };
        hm.get(i, i) == &expected
    })
}

fn cmd_verify(input: &str) -> Result<(String, bool), CmdError> {
    let graph = load_graph(input)?;
    let decomposition = require_unicyclic(&graph)?;
    let pinv = combinatorial_pinv(&decomposition);
    let m = IncidenceMatrix::from_graph(&graph);

    let report = check_penrose(m.as_matrix(), pinv.h());
    let mh = m.as_matrix().mul(pinv.h());
    let hm = pinv.h().mul(m.as_matrix());
    let mh_ok = mh == predicted_mh(&decomposition);
    let hm_ok = hm == predicted_hm(&decomposition);

    let even = decomposition.cycle().is_even();
    let pendant_ok = even.then(|| pendant_fingerprint_holds(&graph, pinv.h()));
    let cycle_ok = even.then(|| cycle_fingerprint_holds(&decomposition, &hm));

    let mut out = format!("{}\n", report.to_json());
    let line = |name: &str, pass: bool| format!("{name}: {}\n", if pass { "pass" } else { "fail" });
    out.push_str(&line("mh matches predicted", mh_ok));
    out.push_str(&line("hm matches predicted", hm_ok));
    if let (Some(p), Some(c)) = (pendant_ok, cycle_ok) {
        out.push_str(&line("pendant fingerprint", p));
        out.push_str(&line("cycle-edge fingerprint", c));
    }
    let all = report.all_pass()
        && mh_ok
        && hm_ok
        && pendant_ok.unwrap_or(true)
        && cycle_ok.unwrap_or(true);
    out.push_str(&line("verdict", all));
    Ok((out, all))
}

fn cmd_gen(
    n: usize,
    cycle: Option<usize>,
    parity: CycleParity,
    seed: u64,
) -> Result<String, CmdError> {
    let usage = |e: gen::GenError| CmdError::Usage(e.to_string());
    let cycle_length = match cycle {
        Some(c) => c,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample_cycle_length(n, parity, &mut rng).map_err(usage)?
        }
    };
    let spec = GenSpec {
        n,
        cycle_length,
        parity,
        seed,
    };
    let graph = generate_unicyclic(&spec).map_err(usage)?;
    Ok(graph.to_edge_list())
}

fn cmd_bench(config: &BenchConfig) -> Result<(String, String), CmdError> {
    let records = bench::run(config).map_err(|e| CmdError::Usage(e.to_string()))?;
    let csv = bench::to_csv(&records);
    let mut summary = String::new();
    for s in bench::summarize(&records) {
        let oracle = s
            .median_oracle_ms
            .map(|v| format!("{v:.3}"))
            .unwrap_or_else(|| "skipped".to_owned());
        summary.push_str(&format!(
            "n={} median_combinatorial_ms={:.3} median_oracle_ms={} all_verified={}\n",
            s.n, s.median_combinatorial_ms, oracle, s.all_verified
        ));
    }
    Ok((csv, summary))
}

fn dispatch(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Classify { input } => {
            print!("{}", cmd_classify(&input)?);
            Ok(())
        }
        Command::Pinv {
            input,
            format,
            emit,
            out,
        } => {
            let output = cmd_pinv(&input, format, &emit)?;
            write_output(out.as_ref(), &output)
        }
        Command::Verify { input, out } => {
            let (output, all_pass) = cmd_verify(&input)?;
            write_output(out.as_ref(), &output)?;
            if all_pass {
                Ok(())
            } else {
                Err(CmdError::Validation("verification failed".to_owned()))
            }
        }
        Command::Gen {
            n,
            cycle,
            parity,
            seed,
            out,
        } => {
            let output = cmd_gen(n, cycle, parity.into(), seed)?;
            write_output(out.as_ref(), &output)
        }
        Command::Bench {
            sizes,
            seeds,
            seed,
            cycle,
            oracle_cap,
            out,
        } => {
            let config = BenchConfig {
                sizes,
                seeds_per_size: seeds,
                base_seed: seed,
                cycle_length: cycle,
                oracle_cap,
            };
            let (csv, summary) = cmd_bench(&config)?;
            write_output(out.as_ref(), &csv)?;
            eprint!("{summary}");
            Ok(())
        }
    }
}

/// Parses arguments and runs the selected command, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests print to stdout and exit 0; real
            // usage errors go to stderr and exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
