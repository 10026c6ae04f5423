//! `tripart`: command-line access to triangular partition recognition,
//! lattice operations, balanced words and counting engines.

mod commands;
mod emit;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "tripart",
    version,
    about = "Triangular partitions: recognition, lattice, words and counting"
)]
#[command(
    after_help = "Partitions are written largest part first, comma separated, with optional \
multiplicities: \"8,6,5,3,1\", \"5^3,2,1\". The empty partition is \"\".\n\
Exit status: 0 on success, 1 on domain errors, 2 on usage or parse errors."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recognize a partition and report its removable and addable cells as JSON.
    Check { partition: String },
    /// Count triangular partitions of every n up to N.
    Count(CountArgs),
    /// Removable/addable class counts for n = 1..N as CSV.
    Classes(ClassesArgs),
    /// Triangular partitions inside the l x l square for l = 0..L as CSV.
    Square {
        #[arg(long, value_name = "L")]
        max_l: usize,
        /// Also count through the subpartition recurrence on the staircase.
        #[arg(long)]
        cross_check: bool,
    },
    /// Closed-form counts for l x (l-1) and l x (l-2) boxes as JSON.
    Rect {
        #[arg(long, value_name = "L")]
        l: usize,
    },
    /// Counts against the coprime-pair bounds as CSV, for plotting.
    Bench {
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, value_name = "T")]
        threads: Option<usize>,
    },
    /// Operations in the lattice of triangular partitions.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Count triangular Young tableaux.
    Tableaux(TableauxArgs),
    /// Balanced binary words.
    #[command(subcommand)]
    Balanced(BalancedCommand),
    /// Encode a wide triangular partition as a word or a (m, d, w) triple.
    #[command(subcommand)]
    Encode(EncodeCommand),
    /// Decode a word or a (m, d, w) triple into a partition.
    #[command(subcommand)]
    Decode(DecodeCommand),
    /// Basic partition utilities.
    #[command(subcommand)]
    Partition(PartitionCommand),
    /// Convex hull chains and slope data.
    #[command(subcommand)]
    Hull(HullCommand),
    /// Removable cells by a chosen method.
    Removable {
        partition: String,
        #[arg(long, value_enum, default_value_t = RemovableMethod::Hull)]
        method: RemovableMethod,
    },
    /// The bijection to quadruples (a, b, d, e).
    #[command(subcommand)]
    Phi(PhiCommand),
    /// Lattice points in the two triangles attached to (d, e, l).
    Triangle { d: i64, e: i64, l: i64 },
    /// Euler's totient of 1..=LIMIT as CSV.
    Totient {
        #[arg(long)]
        limit: usize,
    },
    /// Ordered coprime pairs (a, b) with ab < M.
    Pp { m: u64 },
    /// Size of the partition with parameters (a, b, k, m, i, j).
    Ndelta {
        a: i64,
        b: i64,
        k: i64,
        m: i64,
        i: i64,
        j: i64,
    },
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    #[arg(long, value_enum, default_value_t = CountMethod::Dfs)]
    pub method: CountMethod,
    /// `delta2` counts partitions with two removable cells (generating function only).
    #[arg(long, value_enum, default_value_t = Series::Delta)]
    pub series: Series,
    /// Worker threads for the dfs engine; defaults to $TRIPART_THREADS or the core count.
    #[arg(long, value_name = "T")]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ClassesArgs {
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// `derive` uses the generating-function identities, `direct` classifies every partition.
    #[arg(long, value_enum, default_value_t = ClassMethod::Derive)]
    pub method: ClassMethod,
    #[arg(long, value_name = "T")]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TableauxArgs {
    /// Two-row shape (t1, t2), counted by the closed form.
    #[arg(long, num_args = 2, value_names = ["T1", "T2"], conflicts_with = "shape")]
    pub two_row: Option<Vec<i64>>,
    /// Any triangular shape, counted by walking saturated chains.
    #[arg(long, required_unless_present = "two_row")]
    pub shape: Option<String>,
    /// Count the two-row shape by walking chains instead.
    #[arg(long, requires = "two_row")]
    pub brute: bool,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    Join {
        p: String,
        q: String,
    },
    Meet {
        p: String,
        q: String,
    },
    /// Möbius function on the interval [p, q].
    Mobius {
        p: String,
        q: String,
        /// Sum over the enumerated interval instead of the closed form.
        #[arg(long)]
        reference: bool,
    },
    /// Partitions covered by and covering p.
    Covers {
        p: String,
    },
    /// Number of triangular partitions contained in p.
    Subcount {
        p: String,
        #[arg(long, default_value_t = tripart::lattice::DEFAULT_MEMO_CAP)]
        memo_cap: usize,
    },
    /// Cells on the segment joining the removable cells.
    Diagonal {
        p: String,
    },
    /// The partition with its diagonal removed.
    Interior {
        p: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BalancedCommand {
    Check {
        word: String,
        /// Use the quadratic definition instead of the hull reduction.
        #[arg(long)]
        naive: bool,
    },
    /// Number of balanced words of each length 1..=L as CSV.
    Count {
        #[arg(long, value_name = "L")]
        max_len: usize,
        /// Enumerate the words instead of using the totient formula.
        #[arg(long)]
        brute: bool,
        /// Include the row for the empty word.
        #[arg(long)]
        include_empty: bool,
    },
    /// All balanced words of length LEN, one per line.
    List {
        #[arg(long)]
        len: usize,
    },
    /// The mechanical word with slope ALPHA and intercept BETA.
    Mechanical {
        alpha: String,
        beta: String,
        len: usize,
    },
    /// Append a letter, reporting null if the result is unbalanced.
    Extend { word: String, bit: u8 },
}

#[derive(Subcommand, Debug)]
pub enum EncodeCommand {
    Omega { partition: String },
    Chi { partition: String },
}

#[derive(Subcommand, Debug)]
pub enum DecodeCommand {
    Omega { word: String },
    Chi { m: i64, d: i64, word: String },
}

#[derive(Subcommand, Debug)]
pub enum PartitionCommand {
    Conjugate {
        p: String,
    },
    /// Outer corners of the diagram, or of its complement with --complement.
    Corners {
        p: String,
        #[arg(long)]
        complement: bool,
    },
    /// Whether INNER fits inside OUTER.
    Contains {
        outer: String,
        inner: String,
    },
    Staircase {
        k: i64,
    },
    /// The largest triangular partition in an h x l box.
    Bounding {
        h: i64,
        l: i64,
    },
    /// Arm and leg of the cell (x, y).
    Armleg {
        p: String,
        x: i64,
        y: i64,
    },
    /// Wide and tall flags.
    Classify {
        p: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum HullCommand {
    /// Vertices of the hull chain of the diagram or its complement.
    Chain {
        p: String,
        #[arg(long)]
        complement: bool,
    },
    /// Chain vertex minimizing the dot product with (NX, NY).
    Extreme {
        p: String,
        #[arg(allow_negative_numbers = true)]
        nx: i64,
        #[arg(allow_negative_numbers = true)]
        ny: i64,
        #[arg(long)]
        complement: bool,
    },
    /// The slope interval from arms and legs.
    Slope { p: String },
    /// Triangularity from the slope interval alone.
    Reference { p: String },
}

#[derive(Subcommand, Debug)]
pub enum PhiCommand {
    Map { p: String },
    Inv { a: i64, b: i64, d: i64, e: i64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Dfs,
    Gf,
    Brute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    Delta,
    Delta2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMethod {
    Derive,
    Direct,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovableMethod {
    Hull,
    Extremes,
    Reduction,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
