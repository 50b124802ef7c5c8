//! `nilp2`: symbol tables, orbit counts, the Springer cardinality check,
//! the brute-force orbit oracle and module synthesis from the command line.
//!
//! Exit codes: 0 verified, 1 mismatch found, 2 invalid input, 3 capacity
//! exceeded.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilp2_core::census::{
    springer_cardinality_check, weyl_irrep_count, CountRow, GroupFamily, LieType,
};
use nilp2_core::formmodule::{
    blocks_for_symbol, enumerate_symbols, module_from_symbol, ModuleError, Symbol,
};
use nilp2_core::orbitoracle::{
    census_compare, GroupKind, Oracle, OracleConfig, OracleError, DEFAULT_CAP_BITS,
};
use nilp2_core::{FieldSpec, ModulusTable, QuadSpace, SpaceKind};

#[derive(Parser, Debug)]
#[command(
    name = "nilp2",
    version,
    about = "Nilpotent orbits in orthogonal Lie algebras over fields of characteristic 2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountFormat {
    Text,
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the valid symbols of dimension N with splitting data.
    Symbols {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Closed-form orbit count and its symbol-by-symbol recomputation.
    Count {
        #[arg(long, value_parser = parse_family)]
        family: GroupFamily,
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: CountFormat,
    },
    /// Number of irreducible representations of the Weyl group.
    Weyl {
        #[arg(long = "type", value_parser = parse_type)]
        ty: LieType,
        #[arg(long)]
        rank: u32,
    },
    /// Compare the Weyl-group side with the orbit/local-system side.
    SpringerCheck {
        #[arg(long = "type", value_parser = parse_type)]
        ty: LieType,
        #[arg(long)]
        rank: u32,
    },
    /// Brute-force orbit census of the nilpotent cone over F_q.
    Oracle {
        #[arg(long, value_parser = parse_kind)]
        kind: SpaceKind,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, value_parser = parse_group, default_value = "O")]
        group: GroupKind,
        /// log2 of the largest o(V)(F_q) that may be scanned.
        #[arg(long, default_value_t = DEFAULT_CAP_BITS)]
        cap: u32,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Synthesize a module with the given symbol and print its matrices.
    Build {
        #[arg(long)]
        symbol: String,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// One 0/1 digit per toggle position; all zeros when omitted.
        #[arg(long)]
        mask: Option<String>,
    },
}

fn parse_family(s: &str) -> Result<GroupFamily, String> {
    s.parse()
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<SpaceKind, String> {
    s.parse()
        .map_err(|_| format!("unknown kind {s:?}, expected odd, plus or minus"))
}

fn parse_group(s: &str) -> Result<GroupKind, String> {
    s.parse()
}

/// A failed run: exit code and message for stderr.
struct Failure {
    code: u8,
    message: String,
}

const MISMATCH: u8 = 1;
const INVALID: u8 = 2;
const CAPACITY: u8 = 3;

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: INVALID,
        message: message.to_string(),
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::Capacity { .. } | OracleError::Unsupported(_) => CAPACITY,
            _ => INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ModuleError> for Failure {
    fn from(e: ModuleError) -> Self {
        let code = if matches!(e, ModuleError::RoundTrip { .. }) {
            MISMATCH
        } else {
            INVALID
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: MISMATCH,
            message: e.to_string(),
        }
    }
}

fn field(q: u32) -> Result<FieldSpec, Failure> {
    let table = ModulusTable::from_env().map_err(invalid)?;
    table.field_with_order(q).map_err(invalid)
}

fn symbols(out: &mut impl Write, dim: u32, format: Format) -> Result<u8, Failure> {
    if dim == 0 {
        return Err(invalid("--dim must be positive"));
    }
    let list = enumerate_symbols(dim, dim % 2 == 1).map_err(invalid)?;
    if let Format::Tsv = format {
        writeln!(out, "symbol\tpartition\tn1\tn2\todd\tplus\tminus")?;
    }
    for s in &list {
        let (n1, n2) = s.splitting_counts().map_err(invalid)?;
        let c = s.fq_orbit_counts().map_err(invalid)?;
        match format {
            Format::Tsv => writeln!(
                out,
                "{s}\t{}\t{n1}\t{n2}\t{}\t{}\t{}",
                s.partition(),
                c.odd,
                c.plus,
                c.minus
            )?,
            Format::Json => {
                let row = json!({
                    "symbol": s.to_string(),
                    "partition": s.partition().parts(),
                    "n1": n1,
                    "n2": n2,
                    "orbits": {"odd": c.odd, "plus": c.plus, "minus": c.minus},
                });
                writeln!(out, "{row}")?
            }
        }
    }
    Ok(0)
}

fn count(
    out: &mut impl Write,
    family: GroupFamily,
    rank: u32,
    format: CountFormat,
) -> Result<u8, Failure> {
    if rank == 0 {
        return Err(invalid("--rank must be at least 1"));
    }
    let row = CountRow::compute(family, rank).map_err(invalid)?;
    match format {
        CountFormat::Text => {
            writeln!(out, "{}", row.formula)?;
            writeln!(
                out,
                "symbol_census={} agreement={}",
                row.symbols,
                row.agree()
            )?;
        }
        CountFormat::Tsv => write!(
            out,
            "{}",
            nilp2_core::census::rows_to_tsv(std::slice::from_ref(&row))
        )?,
        CountFormat::Json => writeln!(out, "{}", row.to_json())?,
    }
    Ok(if row.agree() { 0 } else { MISMATCH })
}

fn oracle(
    out: &mut impl Write,
    kind: SpaceKind,
    dim: usize,
    q: u32,
    group: GroupKind,
    cap: u32,
    workers: usize,
) -> Result<u8, Failure> {
    if !kind.admits_dim(dim) {
        return Err(invalid(format!(
            "a {kind} space cannot have dimension {dim}"
        )));
    }
    let field = field(q)?;
    let space = QuadSpace::standard(kind, dim, field).map_err(invalid)?;
    let config = OracleConfig {
        cap_bits: cap,
        workers: workers.max(1),
        ..OracleConfig::default()
    };
    let census = Oracle::new(space, config)?.census(group)?;
    let verdict = census_compare(&census);
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&census.to_json(&verdict)).expect("json")
    )?;
    Ok(if verdict.pass() { 0 } else { MISMATCH })
}

fn build(out: &mut impl Write, symbol: &str, q: u32, mask: Option<&str>) -> Result<u8, Failure> {
    let s: Symbol = symbol.parse().map_err(invalid)?;
    s.validate().map_err(invalid)?;
    let field = field(q)?;
    let positions = s.toggle_positions(!s.is_defective());
    let mask: Vec<bool> = match mask {
        None => vec![false; positions.len()],
        Some(m) => m
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(invalid(format!(
                    "mask must be a string of 0 and 1, got {m:?}"
                ))),
            })
            .collect::<Result<_, _>>()?,
    };
    let blocks = blocks_for_symbol(&s, &mask)?;
    let module = module_from_symbol(&s, field, &mask)?;
    let (kind, standard_t) = module.to_standard()?;
    let round_trip = module.symbol()? == s;
    let doc: Value = json!({
        "symbol": s.to_string(),
        "q": field.order(),
        "field": field.to_string(),
        "mask": mask.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>(),
        "blocks": blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "kind": kind.to_string(),
        "coefficients": module.space().upper().to_json(),
        "T": module.endomorphism().to_json(),
        "standard_T": standard_t.to_json(),
        "round_trip": round_trip,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(if round_trip { 0 } else { MISMATCH })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Symbols { dim, format } => symbols(out, dim, format),
        Command::Count {
            family,
            rank,
            format,
        } => count(out, family, rank, format),
        Command::Weyl { ty, rank } => {
            if rank == 0 {
                return Err(invalid("--rank must be at least 1"));
            }
            writeln!(out, "{}", weyl_irrep_count(ty, rank))?;
            Ok(0)
        }
        Command::SpringerCheck { ty, rank } => {
            if rank == 0 {
                return Err(invalid("--rank must be at least 1"));
            }
            let v = springer_cardinality_check(ty, rank).map_err(invalid)?;
            writeln!(out, "{}", v.to_json())?;
            Ok(if v.pass() { 0 } else { MISMATCH })
        }
        Command::Oracle {
            kind,
            dim,
            q,
            group,
            cap,
            workers,
        } => oracle(out, kind, dim, q, group, cap, workers),
        Command::Build { symbol, q, mask } => build(out, &symbol, q, mask.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
