use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crystab::branching::branch_decompose;
use crystab::crystal::to_dot;
use crystab::graded::{graded_multiplicity, o4_tables, so4_table};
use crystab::lr::{
    lowest_companions, lr_coefficient, rational_lowest_companions, LrQuery, Variant,
};
use crystab::oracle::{verify_all, Level};
use crystab::shapes::{Partition, RationalShape, Shape};
use crystab::tableaux::{enumerate_ssyt, m_polynomial, Pair, Tableau};
use crystab::{Error, QPoly};

/// A shape as typed on the command line: `3,2,1` or `3,2|1@5`. Only the
/// syntax is checked here; validity is checked against the other flags.
#[derive(Clone, Debug)]
enum ShapeArg {
    Parts(Vec<usize>),
    Rational {
        plus: Vec<usize>,
        minus: Vec<usize>,
        n: usize,
    },
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad part `{t}`"))
        })
        .collect()
}

fn parse_shape(s: &str) -> Result<ShapeArg, String> {
    match s.split_once('|') {
        None => parse_list(s).map(ShapeArg::Parts),
        Some((plus, rest)) => {
            let (minus, n) = rest
                .split_once('@')
                .ok_or("rational shapes are written plus|minus@n")?;
            let n = n.trim().parse().map_err(|_| format!("bad rank `{n}`"))?;
            Ok(ShapeArg::Rational {
                plus: parse_list(plus)?,
                minus: parse_list(minus)?,
                n,
            })
        }
    }
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn padded(parts: &[usize], n: usize) -> Result<Partition, Error> {
    let len = parts.iter().filter(|&&x| x > 0).count();
    if parts.len() > n && parts[n..].iter().any(|&x| x > 0) {
        return Err(Error::TooLong { len, n });
    }
    let mut v: Vec<usize> = parts.iter().copied().take(n).collect();
    v.resize(n, 0);
    Partition::new(v)
}

impl ShapeArg {
    fn partition(&self, n: usize) -> Result<Partition, Error> {
        match self {
            ShapeArg::Parts(p) => padded(p, n),
            ShapeArg::Rational { .. } => Err(Error::IncompatibleShape("a polynomial shape".into())),
        }
    }

    fn rational(&self, n: usize) -> Result<RationalShape, Error> {
        match self {
            ShapeArg::Parts(p) => Ok(RationalShape::polynomial(padded(p, n)?)),
            ShapeArg::Rational { plus, minus, n: m } => {
                if *m != n {
                    return Err(Error::RankMismatch(n, *m));
                }
                RationalShape::new(padded(plus, n)?, padded(minus, n)?)
            }
        }
    }

    fn is_rational(&self) -> bool {
        matches!(self, ShapeArg::Rational { .. })
    }

    /// The label of an irreducible for the pair's K.
    fn label(&self, pair: Pair) -> Result<Shape, Error> {
        let shape: Shape = match self {
            ShapeArg::Parts(p) => padded(p, pair.alphabet())?.into(),
            ShapeArg::Rational { n, .. } => self.rational(*n)?.into(),
        };
        pair.normalize(&shape)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    #[value(name = "O4")]
    O4,
    #[value(name = "O4bar")]
    O4Bar,
    #[value(name = "SO4")]
    So4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Parser)]
#[command(
    name = "crystab",
    version,
    about = "Crystal-tableau branching rules and graded multiplicities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^λ_{μν} (or its O/Sp modification).
    Lr {
        #[arg(long, value_parser = parse_shape)]
        lambda: ShapeArg,
        #[arg(long, value_parser = parse_shape)]
        mu: ShapeArg,
        #[arg(long, value_parser = parse_shape)]
        nu: ShapeArg,
        /// Ambient length of the shapes (2n for Sp_2n).
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_variant, default_value = "GL")]
        variant: Variant,
        /// Also print the lowest companion tableaux.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Restriction of π^λ_GL to O_n or Sp_2n.
    Branch {
        #[arg(long, value_parser = parse_shape)]
        lambda: ShapeArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded multiplicity m^{ν,0}(q) of a K-type in the harmonics.
    Graded {
        #[arg(long, value_parser = parse_shape)]
        nu: ShapeArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// M-polynomial of a K-type: M-weights of its K-tableaux with counts.
    Mpoly {
        #[arg(long, value_parser = parse_shape)]
        lambda: ShapeArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The O4 and SO4 graded multiplicity tables.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the cross-module verification suites and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
    },
    /// Crystal graph of B^λ_n in DOT.
    Graph {
        #[arg(long, value_parser = parse_shape)]
        shape: ShapeArg,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Serialize, Deserialize)]
struct LrOutput {
    lambda: String,
    mu: String,
    nu: String,
    n: usize,
    variant: String,
    coefficient: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    tableaux: Option<Vec<Tableau>>,
}

#[derive(Serialize, Deserialize)]
struct BranchRow {
    nu: Partition,
    multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
struct BranchOutput {
    lambda: Partition,
    pair: Pair,
    decomposition: Vec<BranchRow>,
}

#[derive(Serialize, Deserialize)]
struct GradedOutput {
    nu: String,
    pair: Pair,
    polynomial: String,
    coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MpolyRow {
    delta: Vec<i64>,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct MpolyOutput {
    lambda: String,
    pair: Pair,
    terms: Vec<MpolyRow>,
}

#[derive(Serialize, Deserialize)]
struct TableOutput {
    kind: String,
    entries: Vec<Vec<Option<String>>>,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output") + "\n"
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_lr(
    lambda: ShapeArg,
    mu: ShapeArg,
    nu: ShapeArg,
    n: usize,
    variant: Variant,
    list: bool,
    format: Format,
) -> Result<String, Error> {
    let rational = [&lambda, &mu, &nu].iter().any(|s| s.is_rational());
    let (names, tabs) = if rational {
        if variant != Variant::GL {
            return Err(Error::IncompatibleShape(format!(
                "rational shapes with variant {variant}"
            )));
        }
        let (l, m, v) = (lambda.rational(n)?, mu.rational(n)?, nu.rational(n)?);
        let tabs = rational_lowest_companions(&l, &m, &v)?;
        ([l.to_string(), m.to_string(), v.to_string()], tabs)
    } else {
        let q = LrQuery::new(
            lambda.partition(n)?,
            mu.partition(n)?,
            nu.partition(n)?,
            variant,
        )?;
        let c = lr_coefficient(&q)?;
        let tabs = lowest_companions(&q)?;
        debug_assert_eq!(c, tabs.len());
        (
            [q.lambda.to_string(), q.mu.to_string(), q.nu.to_string()],
            tabs,
        )
    };
    let [lambda, mu, nu] = names;
    let out = LrOutput {
        lambda,
        mu,
        nu,
        n,
        variant: variant.to_string(),
        coefficient: tabs.len(),
        tableaux: list.then_some(tabs),
    };
    Ok(match format {
        Format::Json => json(&out),
        _ => {
            let mut s = format!("{}\n", out.coefficient);
            for t in out.tableaux.iter().flatten() {
                let _ = writeln!(s, "\n{t}");
            }
            s
        }
    })
}

fn cmd_branch(lambda: ShapeArg, pair: Pair, format: Format) -> Result<String, Error> {
    let lambda = lambda.partition(pair.alphabet())?;
    let d = branch_decompose(&lambda, pair)?;
    let out = BranchOutput {
        lambda,
        pair,
        decomposition: d
            .into_iter()
            .rev()
            .map(|(nu, multiplicity)| BranchRow { nu, multiplicity })
            .collect(),
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut s = String::from("nu,multiplicity\n");
            for r in &out.decomposition {
                let _ = writeln!(s, "\"{}\",{}", r.nu, r.multiplicity);
            }
            s
        }
        Format::Text => out
            .decomposition
            .iter()
            .map(|r| format!("{} {}\n", r.nu, r.multiplicity))
            .collect(),
    })
}

fn cmd_graded(nu: ShapeArg, pair: Pair, format: Format) -> Result<String, Error> {
    let label = nu.label(pair)?;
    let poly: QPoly = graded_multiplicity(&label, pair)?;
    let out = GradedOutput {
        nu: label.to_string(),
        pair,
        polynomial: poly.to_string(),
        coeffs: poly.coeffs().to_vec(),
    };
    Ok(match format {
        Format::Json => json(&out),
        _ => format!("{}\n", out.polynomial),
    })
}

fn cmd_mpoly(lambda: ShapeArg, pair: Pair, format: Format) -> Result<String, Error> {
    let label = lambda.label(pair)?;
    let terms = m_polynomial(&label, pair)?
        .into_iter()
        .rev()
        .map(|(delta, count)| MpolyRow {
            delta: delta.vector,
            count,
        })
        .collect();
    let out = MpolyOutput {
        lambda: label.to_string(),
        pair,
        terms,
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut s = String::from("delta,count\n");
            for r in &out.terms {
                let _ = writeln!(s, "\"{}\",{}", join(&r.delta), r.count);
            }
            s
        }
        Format::Text => out
            .terms
            .iter()
            .map(|r| format!("{} {}\n", join(&r.delta), r.count))
            .collect(),
    })
}

fn cmd_table(kind: TableKind, rows: usize, cols: usize, format: Format) -> Result<String, Error> {
    let show = |p: &QPoly| p.to_string();
    let entries: Vec<Vec<Option<String>>> = match kind {
        TableKind::O4 | TableKind::O4Bar => {
            let (first, second) = o4_tables(rows, cols)?;
            let t = if kind == TableKind::O4 { first } else { second };
            t.iter()
                .map(|r| r.iter().map(|e| e.as_ref().map(show)).collect())
                .collect()
        }
        TableKind::So4 => so4_table(rows, cols)?
            .iter()
            .map(|r| r.iter().map(|e| Some(show(e))).collect())
            .collect(),
    };
    let name = match kind {
        TableKind::O4 => "O4",
        TableKind::O4Bar => "O4bar",
        TableKind::So4 => "SO4",
    };
    let cell = |e: &Option<String>| e.clone().unwrap_or_else(|| "-".into());
    Ok(match format {
        Format::Json => json(&TableOutput {
            kind: name.into(),
            entries,
        }),
        Format::Csv => {
            let mut s: String = std::iter::once(String::new())
                .chain((0..cols).map(|j| j.to_string()))
                .collect::<Vec<_>>()
                .join(",");
            s.push('\n');
            for (i, r) in entries.iter().enumerate() {
                let line: Vec<String> = std::iter::once(i.to_string())
                    .chain(r.iter().map(cell))
                    .collect();
                let _ = writeln!(s, "{}", line.join(","));
            }
            s
        }
        Format::Text => {
            let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new())
                .chain((0..cols).map(|j| j.to_string()))
                .collect()];
            for (i, r) in entries.iter().enumerate() {
                grid.push(
                    std::iter::once(i.to_string())
                        .chain(r.iter().map(cell))
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..=cols)
                .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for r in &grid {
                let line: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                let _ = writeln!(s, "{}", line.join(" | ").trim_end());
            }
            s
        }
    })
}

fn cmd_graph(shape: ShapeArg, n: usize) -> Result<String, Error> {
    let shape: Shape = match &shape {
        ShapeArg::Parts(p) => padded(p, n)?.into(),
        ShapeArg::Rational { .. } => shape.rational(n)?.into(),
    };
    Ok(to_dot(&enumerate_ssyt(&shape)))
}

fn run(command: Command) -> Result<(String, bool), Error> {
    let text = match command {
        Command::Lr {
            lambda,
            mu,
            nu,
            n,
            variant,
            list,
            format,
        } => cmd_lr(lambda, mu, nu, n, variant, list, format)?,
        Command::Branch {
            lambda,
            pair,
            format,
        } => cmd_branch(lambda, pair, format)?,
        Command::Graded { nu, pair, format } => cmd_graded(nu, pair, format)?,
        Command::Mpoly {
            lambda,
            pair,
            format,
        } => cmd_mpoly(lambda, pair, format)?,
        Command::Table {
            kind,
            rows,
            cols,
            format,
        } => cmd_table(kind, rows, cols, format)?,
        Command::Graph { shape, n } => cmd_graph(shape, n)?,
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let report = verify_all(level);
            return Ok((json(&report), report.passed));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
