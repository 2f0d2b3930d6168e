//! `rook`: enumeration, arithmetic and structural checks for rook monoid
//! algebras.
//!
//! Exit status: 0 when every requested assertion holds, 1 when one fails,
//! 2 on usage errors, 3 when a size cap refuses the computation.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rook_algebra::algebra::{
    antisymmetrizer_y, quasi_idempotent_e, symmetrizer_x, AlgebraElement, DiagramIndex, VertexSubset,
};
use rook_algebra::diagram::{enumerate, enumerate_rank_class};
use rook_algebra::ideals::{
    check_annihilator, check_block_decomposition, check_injectivity, check_quasi_idempotent_action, check_y_action,
};
use rook_algebra::report::{Report, Sampling};
use rook_algebra::specht::{partitions_up_to, specht_dimension, Partition, Tableau};
use rook_algebra::tensor::{annihilator_basis, phi_matrix, SizeCaps, DEFAULT_MAX_CELLS};
use rook_algebra::verify::{verify_all, verify_presentation};
use rook_algebra::{Error, RookDiagram};

#[derive(Parser, Debug)]
#[command(name = "rook", version, about = "Exact computations in rook monoid algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format; csv is only available for tabular output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Refuse tensor computations whose matrix dimension exceeds this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: u128,

    /// Disable sampling fallbacks in the checkers.
    #[arg(long, global = true)]
    exhaustive: bool,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = Sampling::default().seed)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// The symmetrizer X_S.
    X,
    /// The anti-symmetrizer Y_S.
    Y,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Filling {
    /// Entries 1..r along successive rows.
    Row,
    /// Entries 1..r down successive columns.
    Col,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the diagrams of R_n (or one rank class) in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Number of isolated vertices per row.
        #[arg(long)]
        rank_class: Option<usize>,
    },
    /// Multiply diagrams left to right.
    Mul {
        #[arg(long)]
        n: usize,
        /// Image list such as 0,2; repeat the flag for each factor.
        #[arg(long = "diagram", required = true, num_args = 1)]
        diagrams: Vec<String>,
    },
    /// The quadruple (d1, d2, r, sigma) of a diagram.
    Factorize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
    },
    /// Length and sign of a diagram.
    Sign {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
    },
    /// The symmetrizer or anti-symmetrizer on a vertex subset.
    Symmetrizer {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::X)]
        kind: Kind,
        /// Comma-separated vertices; defaults to 1..n.
        #[arg(long)]
        subset: Option<String>,
    },
    /// The quasi-idempotent e(t) of a canonical tableau.
    EElement {
        #[arg(long)]
        n: usize,
        /// Partition such as 2,1; the empty partition is 0 or empty.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Filling::Row)]
        tableau: Filling,
    },
    /// Specht module dimensions for every partition of r <= n.
    SpechtDims {
        #[arg(long)]
        n: usize,
        /// Only partitions of this r.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Check the defining relations of R_n.
    VerifyPresentation {
        #[arg(long)]
        n: usize,
    },
    /// Check the decomposition of FR_n into the blocks I(λ).
    VerifyBlocks {
        #[arg(long)]
        n: usize,
    },
    /// Check that e(t) kills R^μ exactly when μ differs from the shape of t.
    #[command(name = "verify-lemma-3-10")]
    VerifyQuasiIdempotentAction {
        #[arg(long)]
        n: usize,
    },
    /// Annihilator of U^n for m < n, injectivity of the action for m >= n.
    VerifySchurWeyl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check Y_(m+1) acts as zero and rescales e(t_λ) by (m+1)!.
    #[command(name = "verify-lemma-4-4")]
    VerifyYAction {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run every check for n <= N and m <= M.
    VerifyAll {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The matrix of the action, one column per diagram, as triplets.
    PhiMatrix {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// A basis of the annihilator of U^n as algebra elements.
    Annihilator {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeCap { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a command produced: text to emit and whether its assertions held.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn data(value: &impl Serialize) -> Self {
        Output { text: serde_json::to_string(value).expect("serializable"), passed: true }
    }

    fn report(value: &impl Serialize, passed: bool) -> Self {
        Output { text: serde_json::to_string_pretty(value).expect("serializable"), passed }
    }

    fn from_report(r: Report) -> Self {
        let passed = r.passed();
        Output::report(&r, passed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| emit(&cli, out)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("refused: {msg} (raise --max-cells to override)");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, out: Output) -> Result<bool, Failure> {
    let mut text = out.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Failure::Io)?,
        None => std::io::stdout().write_all(text.as_bytes()).map_err(Failure::Io)?,
    }
    Ok(out.passed)
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("{what}: cannot parse {t:?} in {s:?}"))))
        .collect()
}

fn parse_diagram(n: usize, s: &str) -> Result<RookDiagram, Failure> {
    let img = parse_list(s, "--diagram")?;
    if img.len() != n {
        return Err(usage(format!("--diagram {s} has {} entries but --n is {n}", img.len())));
    }
    Ok(RookDiagram::new(&img)?)
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    match s.trim() {
        "0" | "empty" | "" => Ok(Partition::empty()),
        t => Ok(Partition::new(parse_list(t, "--lambda")?)?),
    }
}

fn require_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    Ok(())
}

fn json_only(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Csv {
        return Err(usage("csv output is only available for specht-dims"));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let caps = SizeCaps { max_cells: cli.max_cells };
    let sampling = Sampling { exhaustive: cli.exhaustive, seed: cli.seed, ..Sampling::default() };
    if !matches!(cli.command, Command::SpechtDims { .. }) {
        json_only(cli)?;
    }
    match &cli.command {
        Command::Enumerate { n, rank_class } => {
            require_n(*n)?;
            let list = match rank_class {
                Some(r) if r > n => return Err(usage(format!("--rank-class {r} exceeds --n {n}"))),
                Some(r) => enumerate_rank_class(*n, *r),
                None => enumerate(*n),
            };
            Ok(Output::data(&list))
        }
        Command::Mul { n, diagrams } => {
            require_n(*n)?;
            let mut acc = RookDiagram::identity(*n);
            for s in diagrams {
                acc = acc.multiply(&parse_diagram(*n, s)?)?;
            }
            Ok(Output::data(&acc))
        }
        Command::Factorize { n, diagram } => {
            require_n(*n)?;
            Ok(Output::data(&parse_diagram(*n, diagram)?.factorize()))
        }
        Command::Sign { n, diagram } => {
            require_n(*n)?;
            let d = parse_diagram(*n, diagram)?;
            Ok(Output::data(&serde_json::json!({ "diagram": d, "length": d.length(), "sign": d.sign() })))
        }
        Command::Symmetrizer { n, kind, subset } => {
            require_n(*n)?;
            let s = match subset {
                Some(list) => VertexSubset::new(*n, parse_list(list, "--subset")?)?,
                None => VertexSubset::initial(*n, *n)?,
            };
            let elem = match kind {
                Kind::X => symmetrizer_x(&s)?,
                Kind::Y => antisymmetrizer_y(&s)?,
            };
            Ok(Output::data(&elem))
        }
        Command::EElement { n, lambda, tableau } => {
            require_n(*n)?;
            let shape = parse_partition(lambda)?;
            let t = match tableau {
                Filling::Row => Tableau::canonical_row(&shape, *n)?,
                Filling::Col => Tableau::canonical_col(&shape, *n)?,
            };
            Ok(Output::data(&quasi_idempotent_e(&t)?))
        }
        Command::SpechtDims { n, r } => {
            require_n(*n)?;
            specht_dims(cli.format, *n, *r)
        }
        Command::VerifyPresentation { n } => {
            if *n < 2 {
                return Err(usage("verify-presentation needs --n >= 2"));
            }
            Ok(Output::from_report(verify_presentation(*n)?))
        }
        Command::VerifyBlocks { n } => {
            require_n(*n)?;
            Ok(Output::from_report(check_block_decomposition(*n, sampling)?))
        }
        Command::VerifyQuasiIdempotentAction { n } => {
            require_n(*n)?;
            Ok(Output::from_report(check_quasi_idempotent_action(*n, sampling)?))
        }
        Command::VerifySchurWeyl { m, n } => {
            require_n(*n)?;
            if *m == 0 {
                return Err(usage("--m must be at least 1"));
            }
            let report =
                if m < n { check_annihilator(*m, *n, caps, sampling)? } else { check_injectivity(*m, *n, caps)? };
            Ok(Output::from_report(report))
        }
        Command::VerifyYAction { m, n } => {
            if *m == 0 || m + 1 > *n {
                return Err(usage("verify-lemma-4-4 needs 1 <= m and m + 1 <= n"));
            }
            Ok(Output::from_report(check_y_action(*m, *n, caps)?))
        }
        Command::VerifyAll { n, m } => {
            require_n(*n)?;
            let agg = verify_all(*n, *m, caps, sampling)?;
            let passed = agg.passed();
            Ok(Output::report(&agg, passed))
        }
        Command::PhiMatrix { m, n } => {
            require_n(*n)?;
            Ok(Output { text: phi_matrix(*m, *n, caps)?.to_triplet_text(), passed: true })
        }
        Command::Annihilator { m, n } => {
            require_n(*n)?;
            let index = DiagramIndex::new(*n);
            let basis = annihilator_basis(*m, *n, caps)?;
            let elems = basis.rows().map(|v| AlgebraElement::from_vector(&index, v)).collect::<Result<Vec<_>, _>>()?;
            Ok(Output::data(&elems))
        }
    }
}

fn specht_dims(format: Format, n: usize, r: Option<usize>) -> Result<Output, Failure> {
    if let Some(r) = r.filter(|&r| r > n) {
        return Err(usage(format!("--r {r} exceeds --n {n}")));
    }
    let mut rows = Vec::new();
    for shape in partitions_up_to(n).into_iter().filter(|p| r.is_none_or(|r| p.size() == r)) {
        let dim = specht_dimension(&shape, n)?;
        rows.push((shape, dim));
    }
    let text = match format {
        Format::Json => {
            let table: Vec<_> = rows
                .iter()
                .map(|(shape, dim)| {
                    serde_json::json!({ "lambda": shape, "r": shape.size(), "dim": dim, "dim_squared": dim * dim })
                })
                .collect();
            serde_json::to_string(&serde_json::json!({ "n": n, "rows": table })).expect("serializable")
        }
        Format::Csv => {
            let mut out = String::from("lambda,r,dim,dim_squared\n");
            for (shape, dim) in &rows {
                let parts: Vec<String> = shape.parts().iter().map(usize::to_string).collect();
                let label = if parts.is_empty() { "empty".to_string() } else { parts.join(" ") };
                writeln!(out, "{label},{},{dim},{}", shape.size(), dim * dim).expect("string write");
            }
            out
        }
    };
    Ok(Output { text, passed: true })
}
