//! `zeromargin` — exact orthogonal bases for zero-margin matrix spaces,
//! square predicates, and fixed-margin table walks, from the command
//! line.
//!
//! Every number printed is an exact rational in canonical string form;
//! the binary never touches floating point. Exit codes: 0 on success,
//! 1 on validation or argument errors, 2 when a resource guard trips.

mod document;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use document::{
    dotted, element_to_csv_record, matrix_to_csv, parse_matrix_text, MatrixDocument,
    TensorDocument,
};
use zeromargin::{
    basis_dway, basis_vmn, classify, connectivity_check, enumerate_latin, enumerate_tables,
    expand, magic_basis, markov_walk, parse_rational, rational_to_string, sign_class_census,
    sudoku_basis, symmetrized_basis, u_set, CentroClass, ContingencyTable, Error, Marginals,
    OrthogonalBasis, RationalMatrix, SquareKind, TransposeClass,
};

#[derive(Parser)]
#[command(
    name = "zeromargin",
    version,
    about = "Exact orthogonal bases for zero-margin matrix spaces",
    after_help = "Matrices are read as JSON documents ({rows, cols, entries: [\"1\", \"-1/2\", ...]}) \
or as CSV grids (one row per line). All output is exact; no floats anywhere."
)]
struct Cli {
    /// Output encoding (`tree` and `verify` always print text).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the result to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating vectors for zero-sum n-vectors.
    Uset {
        /// Vector length (n >= 2).
        n: usize,
    },

    /// Print the labeled binary tree behind the generating set, as
    /// indented text.
    Tree {
        /// Vector length (n >= 2).
        n: usize,
    },

    /// Print an orthogonal basis for the zero-margin matrix space, or
    /// for a d-way array space with `--dway`.
    Basis {
        /// Row count (omit when using --dway).
        #[arg(required_unless_present = "dway", conflicts_with = "dway")]
        m: Option<usize>,
        /// Column count (omit when using --dway).
        #[arg(required_unless_present = "dway", conflicts_with = "dway")]
        n: Option<usize>,
        /// Axis lengths of a d-way array space, e.g. --dway 3 4 5.
        #[arg(long, num_args = 2.., value_name = "LEN")]
        dway: Option<Vec<usize>>,
    },

    /// Print an orthogonal basis for the zero-margin space with both
    /// diagonal sums zero (magic-square differences).
    MagicBasis {
        /// Side length (n >= 3).
        n: usize,
    },

    /// Print an orthogonal basis for the zero-margin space with all
    /// block sums zero (sudoku differences). Takes the block side, so 3
    /// gives the 9x9 space.
    SudokuBasis {
        /// Block side length (board side is its square).
        n: usize,
    },

    /// Print the square-space basis split into symmetric and
    /// skew-symmetric parts under transposition.
    SymmBasis {
        /// Side length (n >= 2).
        n: usize,
    },

    /// Expand a matrix in one of the orthogonal bases and print its
    /// exact coordinates.
    Expand {
        /// Basis family to expand in.
        #[arg(long, value_enum)]
        basis: BasisKind,
        /// Matrix file (JSON document or CSV grid).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },

    /// Enumerate all latin squares of the given order (2..=5).
    Enumerate {
        /// Square order.
        n: usize,
    },

    /// Group all latin squares of the given order by the entrywise
    /// absolute values of their basis coordinates.
    Census {
        /// Square order (2..=5).
        n: usize,
    },

    /// Test whether a matrix is a square of the given kind.
    Check {
        /// Square kind to test for.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Matrix file (JSON document or CSV grid).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Required line sum for the semimagic and magic kinds.
        #[arg(long, value_name = "RATIONAL")]
        sum: Option<String>,
    },

    /// Classify a matrix under half-turn rotation and transposition.
    Classify {
        /// Matrix file (JSON document or CSV grid).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },

    /// Run a seeded lazy random walk over the integer tables with the
    /// given margins and print the final table.
    Sample {
        /// Row sums, e.g. --rows 3 2.
        #[arg(long, num_args = 1.., value_name = "COUNT", required = true)]
        rows: Vec<u64>,
        /// Column sums, e.g. --cols 2 2 1.
        #[arg(long, num_args = 1.., value_name = "COUNT", required = true)]
        cols: Vec<u64>,
        /// Number of proposed moves.
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        /// Seed for the deterministic generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Enumerate all integer tables with the given margins and report
    /// whether single rectangle moves connect them.
    Connectivity {
        /// Row sums.
        #[arg(long, num_args = 1.., value_name = "COUNT", required = true)]
        rows: Vec<u64>,
        /// Column sums.
        #[arg(long, num_args = 1.., value_name = "COUNT", required = true)]
        cols: Vec<u64>,
    },

    /// Run every module's invariant suite at default sizes and print a
    /// report.
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisKind {
    /// Zero row and column sums.
    Vmn,
    /// Zero margins and zero diagonal sums.
    Magic,
    /// Zero margins and zero block sums.
    Sudoku,
    /// Zero margins, split by transposition symmetry.
    Symm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Latin,
    Sudoku,
    NormalMagic,
    Semimagic,
    Magic,
    ZeroedLatin,
    ZeroedSudoku,
}

enum CliError {
    /// Bad arguments or bad input data: exit 1.
    Validation(String),
    /// A size guard refused the computation: exit 2.
    Resource(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard(_) => CliError::Resource(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let format = cli.format;
    let output = cli.output.clone();
    match run(cli) {
        Ok(payload) => match write_out(output.as_deref(), &payload) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("zeromargin: {msg}");
                ExitCode::from(1)
            }
        },
        Err(CliError::Validation(msg)) => {
            eprintln!("zeromargin: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Resource(msg)) => {
            eprintln!("zeromargin: {msg}");
            let _ = format;
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&std::path::Path>, payload: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, payload).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Uset { n } => cmd_uset(n, format),
        Command::Tree { n } => cmd_tree(n),
        Command::Basis { m, n, dway } => match dway {
            Some(dims) => cmd_basis_dway(&dims, format),
            None => cmd_basis(m.unwrap(), n.unwrap(), format),
        },
        Command::MagicBasis { n } => {
            let basis = magic_basis(n)?;
            Ok(render_basis("magic", &basis, format))
        }
        Command::SudokuBasis { n } => {
            let basis = sudoku_basis(n)?;
            Ok(render_basis("sudoku", &basis, format))
        }
        Command::SymmBasis { n } => {
            let basis = symmetrized_basis(n)?;
            Ok(render_basis("symmetrized", &basis, format))
        }
        Command::Expand { basis, input } => cmd_expand(basis, &input, format),
        Command::Enumerate { n } => cmd_enumerate(n, format),
        Command::Census { n } => cmd_census(n, format),
        Command::Check { kind, input, sum } => cmd_check(kind, &input, sum.as_deref(), format),
        Command::Classify { input } => cmd_classify(&input, format),
        Command::Sample {
            rows,
            cols,
            steps,
            seed,
        } => cmd_sample(&rows, &cols, steps, seed, format),
        Command::Connectivity { rows, cols } => cmd_connectivity(&rows, &cols, format),
        Command::Verify => cmd_verify(),
    }
}

fn read_matrix(path: &std::path::Path) -> Result<RationalMatrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_matrix_text(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn cmd_uset(n: usize, format: Format) -> Result<String, CliError> {
    let set = u_set(n)?;
    let vectors: Vec<Vec<i64>> = set
        .iter()
        .map(|b| {
            b.vector
                .entries()
                .iter()
                .map(|v| i64::try_from(v).expect("generator entries are small"))
                .collect()
        })
        .collect();
    match format {
        Format::Json => Ok(to_json(&vectors)),
        Format::Csv => {
            let mut out = String::new();
            for v in &vectors {
                let line: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_tree(n: usize) -> Result<String, CliError> {
    let tree = zeromargin::build_tree(n)?;
    Ok(tree.render_text())
}

#[derive(Serialize)]
struct BasisPayload {
    space: String,
    rows: usize,
    cols: usize,
    dimension: usize,
    elements: Vec<MatrixDocument>,
}

fn render_basis(space: &str, basis: &OrthogonalBasis, format: Format) -> String {
    let elements: Vec<MatrixDocument> = basis
        .elements()
        .iter()
        .map(MatrixDocument::from_element)
        .collect();
    match format {
        Format::Json => {
            let (rows, cols) = basis.shape();
            to_json(&BasisPayload {
                space: space.to_string(),
                rows,
                cols,
                dimension: basis.len(),
                elements,
            })
        }
        Format::Csv => {
            let mut out = String::new();
            for doc in &elements {
                out.push_str(&element_to_csv_record(doc));
                out.push('\n');
            }
            out
        }
    }
}

fn cmd_basis(m: usize, n: usize, format: Format) -> Result<String, CliError> {
    let basis = basis_vmn(m, n)?;
    Ok(render_basis("vmn", &basis, format))
}

fn cmd_basis_dway(dims: &[usize], format: Format) -> Result<String, CliError> {
    let basis = basis_dway(dims)?;
    let elements: Vec<TensorDocument> = basis
        .elements()
        .iter()
        .map(TensorDocument::from_element)
        .collect();
    match format {
        Format::Json => Ok(to_json(&json!({
            "space": "dway",
            "dims": basis.dims(),
            "dimension": basis.len(),
            "elements": elements,
        }))),
        Format::Csv => {
            let mut out = String::new();
            for e in &elements {
                let mut fields = vec![
                    "outer".to_string(),
                    dotted(&e.index),
                    e.squared_norm.clone(),
                    dotted(&e.dims),
                ];
                fields.extend(e.entries.iter().cloned());
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn basis_for_shape(kind: BasisKind, shape: (usize, usize)) -> Result<OrthogonalBasis, CliError> {
    let (rows, cols) = shape;
    let square = |what: &str| -> Result<usize, CliError> {
        if rows == cols {
            Ok(rows)
        } else {
            Err(CliError::Validation(format!(
                "{what} expansion needs a square matrix, got {rows}x{cols}"
            )))
        }
    };
    match kind {
        BasisKind::Vmn => Ok(basis_vmn(rows, cols)?),
        BasisKind::Magic => Ok(magic_basis(square("magic")?)?),
        BasisKind::Symm => Ok(symmetrized_basis(square("symmetric/skew")?)?),
        BasisKind::Sudoku => {
            let side = square("sudoku")?;
            let blocks = zeromargin::BlockStructure::for_side(side)?;
            Ok(sudoku_basis(blocks.block_side())?)
        }
    }
}

fn cmd_expand(kind: BasisKind, input: &std::path::Path, format: Format) -> Result<String, CliError> {
    let matrix = read_matrix(input)?;
    let basis = basis_for_shape(kind, matrix.shape())?;
    let coords = expand(&matrix, &basis)?;
    let space = match kind {
        BasisKind::Vmn => "vmn",
        BasisKind::Magic => "magic",
        BasisKind::Sudoku => "sudoku",
        BasisKind::Symm => "symmetrized",
    };
    match format {
        Format::Json => {
            let coordinates: Vec<serde_json::Value> = basis
                .elements()
                .iter()
                .zip(&coords.coefficients)
                .map(|(e, c)| {
                    json!({
                        "tag": e.tag,
                        "index": e.index,
                        "coefficient": rational_to_string(c),
                    })
                })
                .collect();
            Ok(to_json(&json!({
                "space": space,
                "coordinates": coordinates,
                "residual_is_zero": coords.residual_is_zero,
            })))
        }
        Format::Csv => {
            let mut out = String::new();
            for (e, c) in basis.elements().iter().zip(&coords.coefficients) {
                out.push_str(&format!(
                    "{},{},{}\n",
                    e.tag,
                    dotted(&e.index),
                    rational_to_string(c)
                ));
            }
            out.push_str(&format!("residual_is_zero,{}\n", coords.residual_is_zero));
            Ok(out)
        }
    }
}

fn cmd_enumerate(n: usize, format: Format) -> Result<String, CliError> {
    let squares = enumerate_latin(n)?;
    match format {
        Format::Json => {
            let grids: Vec<Vec<Vec<u8>>> = squares
                .iter()
                .map(|s| {
                    (0..s.order())
                        .map(|r| (0..s.order()).map(|c| s.get(r, c)).collect())
                        .collect()
                })
                .collect();
            Ok(to_json(&json!({
                "order": n,
                "count": squares.len(),
                "squares": grids,
            })))
        }
        Format::Csv => {
            let mut out = String::new();
            for s in &squares {
                let cells: Vec<String> = (0..n * n)
                    .map(|k| s.get(k / n, k % n).to_string())
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_census(n: usize, format: Format) -> Result<String, CliError> {
    let classes = sign_class_census(n)?;
    match format {
        Format::Json => {
            let rendered: Vec<serde_json::Value> = classes
                .iter()
                .map(|c| {
                    json!({
                        "signature": c.signature.iter().map(rational_to_string).collect::<Vec<_>>(),
                        "size": c.members.len(),
                        "members": c.members,
                    })
                })
                .collect();
            Ok(to_json(&json!({
                "order": n,
                "classes": rendered.len(),
                "census": rendered,
            })))
        }
        Format::Csv => {
            // CSV keeps one record per class: the signature entries,
            // then the class size. Member lists live in the JSON form.
            let mut out = String::new();
            for c in &classes {
                let mut fields: Vec<String> =
                    c.signature.iter().map(rational_to_string).collect();
                fields.push(c.members.len().to_string());
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn square_kind(kind: KindArg, sum: Option<&str>) -> Result<SquareKind, CliError> {
    let line_sum = |what: &str| -> Result<zeromargin::Rational, CliError> {
        let text = sum.ok_or_else(|| {
            CliError::Validation(format!("--kind {what} needs --sum <RATIONAL>"))
        })?;
        Ok(parse_rational(text)?)
    };
    Ok(match kind {
        KindArg::Latin => SquareKind::Latin,
        KindArg::Sudoku => SquareKind::Sudoku,
        KindArg::NormalMagic => SquareKind::NormalMagic,
        KindArg::Semimagic => SquareKind::Semimagic(line_sum("semimagic")?),
        KindArg::Magic => SquareKind::Magic(line_sum("magic")?),
        KindArg::ZeroedLatin => SquareKind::ZeroedLatin,
        KindArg::ZeroedSudoku => SquareKind::ZeroedSudoku,
    })
}

fn cmd_check(
    kind: KindArg,
    input: &std::path::Path,
    sum: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let matrix = read_matrix(input)?;
    let (rows, cols) = matrix.shape();
    if rows != cols {
        return Err(CliError::Validation(format!(
            "square check needs a square matrix, got {rows}x{cols}"
        )));
    }
    let kind_value = square_kind(kind, sum)?;
    let valid = zeromargin::matches_kind(&matrix, &kind_value)?;
    let name = kind
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    match format {
        Format::Json => Ok(to_json(&json!({ "kind": name, "valid": valid }))),
        Format::Csv => Ok(format!("{name},{valid}\n")),
    }
}

fn cmd_classify(input: &std::path::Path, format: Format) -> Result<String, CliError> {
    let matrix = read_matrix(input)?;
    let class = classify(&matrix);
    let centro = match class.centro {
        CentroClass::Centrosymmetric => "centrosymmetric",
        CentroClass::SkewCentrosymmetric => "skew-centrosymmetric",
        CentroClass::Neither => "neither",
    };
    let transpose = match class.transpose {
        TransposeClass::Symmetric => "symmetric",
        TransposeClass::SkewSymmetric => "skew-symmetric",
        TransposeClass::Neither => "neither",
    };
    match format {
        Format::Json => Ok(to_json(&json!({
            "half_turn": centro,
            "transpose": transpose,
        }))),
        Format::Csv => Ok(format!("{centro},{transpose}\n")),
    }
}

fn cmd_sample(
    rows: &[u64],
    cols: &[u64],
    steps: u64,
    seed: u64,
    format: Format,
) -> Result<String, CliError> {
    let marginals = Marginals::from_counts(rows, cols)?;
    let start = ContingencyTable::northwest(&marginals)?;
    let table = markov_walk(&start, steps, seed);
    match format {
        Format::Json => Ok(to_json(&json!({
            "rows": rows,
            "cols": cols,
            "steps": steps,
            "seed": seed,
            "table": MatrixDocument::from_matrix(&table.to_matrix()),
        }))),
        Format::Csv => Ok(matrix_to_csv(&table.to_matrix())),
    }
}

fn cmd_connectivity(rows: &[u64], cols: &[u64], format: Format) -> Result<String, CliError> {
    let marginals = Marginals::from_counts(rows, cols)?;
    let tables = enumerate_tables(&marginals)?;
    let connected = connectivity_check(&marginals)?;
    match format {
        Format::Json => Ok(to_json(&json!({
            "connected": connected,
            "tables": tables.len(),
        }))),
        Format::Csv => Ok(format!("connected,{connected}\ntables,{}\n", tables.len())),
    }
}

fn cmd_verify() -> Result<String, CliError> {
    let (report, ok) = verify::run();
    if ok {
        Ok(report)
    } else {
        // Print the full report on stderr so the failure detail is not
        // lost, then exit 1.
        Err(CliError::Validation(format!("\n{report}")))
    }
}
