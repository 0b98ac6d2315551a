//! Command-line front end.
//!
//! Exit status is 0 on success, 1 on bad input and 2 when a census finds a
//! disagreement.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::blocks::{block_partition, BlockReport};
use crate::census::{build_corpus, builtin_corpus, find_builtin, run_census};
use crate::chartab::{character_table, CharacterTable};
use crate::cyclic::{dade_k, solve_dade};
use crate::grp::{
    is_prime, local_data, parse_group, sylow, sylow_outer_index, Group, GroupError, IsoType,
};
use crate::parts::{count_with_core, e_core, k_olsson, sym_principal_block_size, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "smallblocks",
    version,
    about = "Character tables and p-blocks of small permutation groups"
)]
struct Cli {
    /// List the builtin group names and exit.
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Builtin group name (see --list).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Group file: a `degree N` line followed by one generator per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the exact character table.
    Chartab {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the p-block partition and the principal block summary.
    Blocks {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'p', value_name = "PRIME")]
        p: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the Sylow type, N/C and fixed-point-freeness at p.
    Local {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'p', value_name = "PRIME")]
        p: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Partition counts.
    Partitions {
        #[command(subcommand)]
        op: PartsOp,
    },
    /// Dade's count f + (|P|-1)/f, or with --solve the admissible f for a target count.
    Dade {
        /// Order of the cyclic Sylow subgroup.
        p_order: u64,
        /// Inertial index f.
        #[arg(required_unless_present = "solve")]
        f: Option<u64>,
        /// Print every f giving this many characters instead.
        #[arg(long, value_name = "K", conflicts_with = "f")]
        solve: Option<u64>,
    },
    /// Run the theorem census over the builtin corpus and any group files.
    Census {
        /// Extra group files to include.
        #[arg(long, value_name = "PATH")]
        file: Vec<PathBuf>,
        /// Skip the builtin corpus.
        #[arg(long)]
        no_builtin: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum PartsOp {
    /// Number of E-tuples of partitions of total size M.
    Kcount { e: u32, m: u32 },
    /// The E-core of a partition given as comma-separated parts.
    Core { e: u32, partition: String },
    /// Number of partitions of N with E-core MU.
    Count {
        n: u32,
        e: u32,
        /// Comma-separated parts; empty for the empty partition.
        #[arg(default_value = "")]
        mu: String,
    },
    /// Size of the principal P-block of Sym(N).
    SymB0 { n: u32, p: u32 },
}

struct Failure(i32, String);

impl Failure {
    fn input(msg: impl Into<String>) -> Self {
        Failure(EXIT_INPUT, msg.into())
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::input(e.to_string())
}

/// Runs one invocation, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cli: Cli) -> Result<(i32, String), Failure> {
    if cli.list {
        let mut s = String::new();
        for e in builtin_corpus() {
            let _ = writeln!(s, "{:<14} {}", e.name, e.description);
        }
        return Ok((EXIT_OK, s));
    }
    let Some(command) = cli.command else {
        return Err(Failure::input("no subcommand given; try --help"));
    };
    match command {
        Command::Chartab { source, format } => {
            let g = load(&source)?;
            let t = character_table(&g).map_err(input_err)?;
            Ok((EXIT_OK, render(format, &t.to_report(), || table_text(&t))))
        }
        Command::Blocks { source, p, format } => {
            check_prime(p)?;
            let g = load(&source)?;
            let report = blocks_report(&source_name(&source), &g, p)?;
            Ok((EXIT_OK, render(format, &report, || blocks_text(&report))))
        }
        Command::Local { source, p, format } => {
            check_prime(p)?;
            let g = load(&source)?;
            let report = local_report(&source_name(&source), &g, p)?;
            Ok((EXIT_OK, render(format, &report, || local_text(&report))))
        }
        Command::Partitions { op } => partitions(op).map(|s| (EXIT_OK, s)),
        Command::Dade { p_order, f, solve } => {
            if let Some(k) = solve {
                let fs = solve_dade(k, p_order).map_err(input_err)?;
                let list: Vec<String> = fs.iter().map(u64::to_string).collect();
                Ok((EXIT_OK, format!("{{{}}}\n", list.join(", "))))
            } else {
                let k = dade_k(p_order, f.expect("required by the parser")).map_err(input_err)?;
                Ok((EXIT_OK, format!("{k}\n")))
            }
        }
        Command::Census {
            file,
            no_builtin,
            format,
        } => {
            let mut groups = if no_builtin {
                Vec::new()
            } else {
                build_corpus(&builtin_corpus()).map_err(input_err)?
            };
            for path in &file {
                groups.push((path.display().to_string(), read_group(path)?));
            }
            let report = run_census(&groups).map_err(input_err)?;
            let code = if report.all_agree() {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            };
            Ok((code, render(format, &report, || format!("{report}\n"))))
        }
    }
}

fn check_prime(p: u64) -> Result<(), Failure> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Failure::input(format!("-p: {p} is not prime")))
    }
}

fn read_group(path: &PathBuf) -> Result<Group, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("--file {}: {e}", path.display())))?;
    parse_group(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<Group, Failure> {
    match (&source.builtin, &source.file) {
        (Some(name), _) => find_builtin(name)
            .and_then(|e| e.build())
            .map_err(|e| Failure::input(format!("--builtin: {e}"))),
        (None, Some(path)) => read_group(path),
        (None, None) => Err(Failure::input("one of --builtin or --file is required")),
    }
}

fn source_name(source: &Source) -> String {
    match (&source.builtin, &source.file) {
        (Some(name), _) => name.clone(),
        (None, Some(path)) => path.display().to_string(),
        (None, None) => String::new(),
    }
}

/// JSON with object keys in sorted order, so that parsing and re-serializing
/// a report reproduces it byte for byte.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_canonical_json(value),
        Format::Text => text(),
    }
}

fn table_text(t: &CharacterTable) -> String {
    let c = t.classes();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "order {}  classes {}  conductor {}  dixon prime {}",
        t.group_order(),
        t.len(),
        t.exponent(),
        t.dixon_prime()
    );
    for i in 0..c.len() {
        let _ = writeln!(
            s,
            "  K{i:<3} size {:<6} order {:<4} {}",
            c.sizes()[i],
            c.orders()[i],
            c.reps()[i]
        );
    }
    for (chi, row) in t.chars().iter().enumerate() {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "chi{chi:<3} {}", vals.join("  "));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryReport {
    pub kb0: usize,
    pub k0b0: usize,
    pub defect: u32,
    pub sylow_iso: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksOutput {
    pub group: String,
    pub order: u64,
    pub p: u64,
    pub principal: SummaryReport,
    pub partition: BlockReport,
}

fn blocks_report(name: &str, g: &Group, p: u64) -> Result<BlocksOutput, Failure> {
    let t = character_table(g).map_err(input_err)?;
    let b = block_partition(&t, p).map_err(input_err)?;
    Ok(BlocksOutput {
        group: name.to_string(),
        order: g.order(),
        p,
        principal: SummaryReport {
            kb0: b.k_b0(),
            k0b0: b.k0_b0(),
            defect: b.defects[b.principal_index],
            sylow_iso: IsoType::of(&sylow(g, p)).to_string(),
        },
        partition: b.to_report(),
    })
}

fn blocks_text(r: &BlocksOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (order {}) at p={}", r.group, r.order, r.p);
    let _ = writeln!(
        s,
        "principal block: kB0={} k0B0={} defect={} P={}",
        r.principal.kb0, r.principal.k0b0, r.principal.defect, r.principal.sylow_iso
    );
    for (i, b) in r.partition.blocks.iter().enumerate() {
        let chars: Vec<String> = b
            .chars
            .iter()
            .zip(&b.degrees)
            .zip(&b.heights)
            .map(|((c, d), h)| format!("chi{c}(deg {d}, h {h})"))
            .collect();
        let _ = writeln!(
            s,
            "B{i}{} defect {} k={}: {}",
            if b.principal { "*" } else { "" },
            b.defect,
            b.chars.len(),
            chars.join(" ")
        );
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalOutput {
    pub group: String,
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_iso: String,
    pub abelian: bool,
    /// `|N_G(P) : P·C_G(P)|`.
    pub outer_index: u64,
    /// `N_G(P)/C_G(P)`, for abelian `P`.
    pub local_iso: Option<String>,
    pub inertial_index: Option<u64>,
    pub fixed_point_free: Option<bool>,
}

fn local_report(name: &str, g: &Group, p: u64) -> Result<LocalOutput, Failure> {
    let s = sylow(g, p);
    let local = match local_data(g, p) {
        Ok(l) => Some(l),
        Err(GroupError::NonabelianSylow { .. }) => None,
        Err(e) => return Err(input_err(e)),
    };
    Ok(LocalOutput {
        group: name.to_string(),
        p,
        sylow_order: s.order(),
        sylow_iso: IsoType::of(&s).to_string(),
        abelian: s.is_abelian(),
        outer_index: sylow_outer_index(g, p),
        local_iso: local.as_ref().map(|l| l.iso.to_string()),
        inertial_index: local.as_ref().map(|l| l.inertial_index()),
        fixed_point_free: local.as_ref().map(|l| l.fixed_point_free),
    })
}

fn local_text(r: &LocalOutput) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    format!(
        "{} at p={}\nP: {} (order {}, {})\n|N:PC|: {}\nN/C: {}\n|N:C|: {}\nfixed-point-free: {}\n",
        r.group,
        r.p,
        r.sylow_iso,
        r.sylow_order,
        if r.abelian { "abelian" } else { "nonabelian" },
        r.outer_index,
        opt(r.local_iso.clone()),
        opt(r.inertial_index.map(|x| x.to_string())),
        opt(r.fixed_point_free.map(|x| x.to_string())),
    )
}

fn partitions(op: PartsOp) -> Result<String, Failure> {
    let parse = |s: &str| s.parse::<Partition>().map_err(input_err);
    Ok(match op {
        PartsOp::Kcount { e, m } => format!("{}\n", k_olsson(e, m).map_err(input_err)?),
        PartsOp::Core { e, partition } => {
            format!("{}\n", e_core(&parse(&partition)?, e).map_err(input_err)?)
        }
        PartsOp::Count { n, e, mu } => format!(
            "{}\n",
            count_with_core(n, e, &parse(&mu)?).map_err(input_err)?
        ),
        PartsOp::SymB0 { n, p } => {
            if !is_prime(p as u64) {
                return Err(Failure::input(format!("{p} is not prime")));
            }
            format!("{}\n", sym_principal_block_size(n, p).map_err(input_err)?)
        }
    })
}
