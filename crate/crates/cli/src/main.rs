//! `bitab`: command-line access to the bitableau library.
//!
//! Exit status is 0 on success, 1 on a usage or input error and 2 when a
//! verification finds a mismatch.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bitableau::bitableau::{enumerate_bitableaux, Bitableau, Pair};
use bitableau::completion::{
    census_mismatches, enumerate_completions, highest_weight_census, operators_from_fn, skeleton,
    top_op_column, top_op_row,
};
use bitableau::crystal::{CrystalVertex, GraphFormat};
use bitableau::glm_crystal::{count_d, full_crystal, Convention};
use bitableau::insertion::{brsk, jdt_product, rsk, rsk_bitableau, Biword};
use bitableau::kronecker::{compare_with_oracle, is_kronecker_tableau, kronecker_tableaux};
use bitableau::partition::{enumerate_partitions, Partition};
use bitableau::symfunc::{kronecker_coefficient, monomial_coefficient_d, DOracle};
use bitableau::tableau::Ssyt;
use bitableau::word::{bitableau_reading_word, Direction, ReadingMethod};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bitab",
    version,
    about = "Bitableaux, their crystals and Kronecker coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bitableaux of a shape over [n] x [m].
    Enumerate {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The a- and b-weights of a bitableau.
    Weights(TableauInput),
    /// A reading word of a bitableau.
    Word {
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        input: TableauInput,
    },
    /// RSK of a one-row bitableau (`--tableau`) or a biword (`--biword`).
    Rsk {
        #[command(flatten)]
        input: TableauInput,
        /// Biword as {"top":[..],"bottom":[..],"flavor":"lexicographic"}.
        #[arg(long, conflicts_with_all = ["tableau", "input"])]
        biword: Option<String>,
    },
    /// Burge insertion of a one-column bitableau.
    Brsk(TableauInput),
    /// Jeu de taquin product of two tableaux given as JSON rows.
    Jdt {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// The full gl_m crystal on bitableaux of a shape.
    Crystal {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Conv::W)]
        conv: Conv,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Kronecker coefficient g(lam, mu, nu).
    G(Triple),
    /// Coefficient of m_mu in s_lam * s_nu.
    D {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = Via::Crystal)]
        via: Via,
    },
    /// Crystal count against the oracle for every triple of size k.
    VerifyThm2 {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Conv::W)]
        conv: Conv,
    },
    /// Kronecker tableaux of one weight (`--lam --p --nu`), or the count
    /// table against g for every triple of size `--k`.
    KronTableaux {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_partition, requires_all = ["p", "nu"], conflicts_with = "k")]
        lam: Option<Partition>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_parser = parse_partition)]
        nu: Option<Partition>,
    },
    /// Forced part of every commuting top operator on B_lam(2, 2).
    Skeleton {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Every commuting top operator on B_lam(2, 2) as edge lists.
    Completions {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Doubly highest weights of each completion (or of the transported row
    /// or column structure) against g.
    Census {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_enum)]
        transport: Option<Transport>,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
}

#[derive(Args)]
struct TableauInput {
    /// Bitableau as JSON: rows of [top, bottom] pairs, or the full object.
    #[arg(long)]
    tableau: Option<String>,
    /// Read the tableau JSON from a file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Expected shape, checked against the tableau.
    #[arg(long, value_parser = parse_partition)]
    shape: Option<Partition>,
    /// Top bound; defaults to the largest top entry.
    #[arg(long)]
    n: Option<u32>,
    /// Bottom bound; defaults to the largest bottom entry.
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Args)]
struct Triple {
    #[arg(long, value_parser = parse_partition)]
    lam: Partition,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Row,
    W,
    #[value(name = "w_prime", alias = "w'")]
    WPrime,
    U,
    #[value(name = "u_prime", alias = "u'")]
    UPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conv {
    W,
    #[value(name = "w_prime", alias = "w'")]
    WPrime,
}

impl From<Conv> for Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::W => Convention::W,
            Conv::WPrime => Convention::WPrime,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Crystal,
    Characters,
    SchurExpansion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Transport {
    Row,
    Column,
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let parts: Vec<usize> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()?
    };
    if parts.contains(&0) {
        return Err(format!("{s}: parts must be positive"));
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

impl TableauInput {
    fn read(&self) -> Result<Bitableau> {
        let text = match (&self.tableau, &self.input) {
            (Some(t), None) => t.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            (Some(_), Some(_)) => bail!("give either --tableau or --in, not both"),
            (None, None) => bail!("missing --tableau or --in"),
        };
        let value: serde_json::Value =
            serde_json::from_str(&text).context("tableau is not valid JSON")?;
        let t = if value.is_object() {
            serde_json::from_value::<Bitableau>(value).context("invalid bitableau")?
        } else {
            let rows: Vec<Vec<Pair>> =
                serde_json::from_value(value).context("expected rows of [top, bottom] pairs")?;
            let n = rows.iter().flatten().map(|p| p.top).max().unwrap_or(1);
            let m = rows.iter().flatten().map(|p| p.bottom).max().unwrap_or(1);
            Bitableau::new(rows, n, m)?
        };
        let t = t.with_dims(self.n.unwrap_or(t.n()), self.m.unwrap_or(t.m()))?;
        if let Some(shape) = &self.shape {
            if t.shape() != shape {
                bail!(
                    "--shape {shape} does not match the tableau's shape {}",
                    t.shape()
                );
            }
        }
        Ok(t)
    }
}

fn parse_rows(s: &str, flag: &str) -> Result<Ssyt> {
    let rows: Vec<Vec<u32>> =
        serde_json::from_str(s).with_context(|| format!("{flag}: expected JSON rows"))?;
    Ok(Ssyt::from_rows(rows)?)
}

fn csv_partition(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
    format!("\"{}\"", parts.join(","))
}

fn csv_weight(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(usize::to_string).collect();
    format!("\"{}\"", parts.join(","))
}

enum Status {
    Ok,
    Mismatch,
}

fn run(cli: Cli, out: &mut String) -> Result<Status> {
    match cli.command {
        Command::Enumerate {
            shape,
            n,
            m,
            format,
        } => {
            let all = enumerate_bitableaux(&shape, n, m);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&all)?)?,
                Format::Csv => {
                    writeln!(out, "index,tableau,a,b")?;
                    for (i, t) in all.iter().enumerate() {
                        writeln!(
                            out,
                            "{i},{t},{},{}",
                            csv_weight(&t.a_weight().0),
                            csv_weight(&t.b_weight().0)
                        )?;
                    }
                }
                Format::Dot => bail!("--format dot is not available for enumerate"),
            }
        }
        Command::Weights(input) => {
            let t = input.read()?;
            writeln!(
                out,
                "{}",
                serde_json::json!({"a": t.a_weight(), "b": t.b_weight()})
            )?;
        }
        Command::Word { method, input } => {
            let t = input.read()?;
            let method = match method {
                Method::Row => ReadingMethod::Row,
                Method::W => ReadingMethod::W,
                Method::WPrime => ReadingMethod::WPrime,
                Method::U => ReadingMethod::U,
                Method::UPrime => ReadingMethod::UPrime,
            };
            let word = bitableau_reading_word(&t, method)?;
            let sep = if word.letters().iter().any(|&x| x > 9) {
                ","
            } else {
                ""
            };
            let letters: Vec<String> = word.letters().iter().map(u32::to_string).collect();
            writeln!(out, "{}", letters.join(sep))?;
        }
        Command::Rsk { input, biword } => {
            let pair = match biword {
                Some(text) => {
                    rsk(&serde_json::from_str::<Biword>(&text).context("invalid biword")?)?
                }
                None => {
                    let t = input.read()?;
                    if t.shape().len() > 1 {
                        bail!("rsk takes a one-row bitableau, got shape {}", t.shape());
                    }
                    rsk_bitableau(&t)
                }
            };
            writeln!(out, "{}", serde_json::to_string(&pair)?)?;
        }
        Command::Brsk(input) => {
            writeln!(out, "{}", serde_json::to_string(&brsk(&input.read()?)?)?)?
        }
        Command::Jdt { left, right } => {
            let product = jdt_product(
                &parse_rows(&left, "--left")?,
                &parse_rows(&right, "--right")?,
            );
            writeln!(out, "{}", serde_json::to_string(product.rows())?)?;
        }
        Command::Crystal {
            shape,
            n,
            m,
            conv,
            format,
            cap,
        } => {
            let g = full_crystal(&shape, n, m, conv.into(), cap)?;
            let format = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
                Format::Csv => bail!("--format csv is not available for crystal"),
            };
            out.push_str(&g.export(format));
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
        Command::G(Triple { lam, mu, nu }) => {
            writeln!(out, "{}", kronecker_coefficient(&lam, &mu, &nu)?)?
        }
        Command::D {
            triple: Triple { lam, mu, nu },
            via,
        } => {
            let d = match via {
                Via::Crystal => count_d(&lam, &mu, &nu, Convention::W)?,
                Via::Characters => monomial_coefficient_d(&lam, &mu, &nu, DOracle::Characters)?,
                Via::SchurExpansion => {
                    monomial_coefficient_d(&lam, &mu, &nu, DOracle::SchurExpansion)?
                }
            };
            writeln!(out, "{d}")?;
        }
        Command::VerifyThm2 { k, conv } => {
            let parts = enumerate_partitions(k, None);
            let mut triples = 0;
            let mut bad = 0;
            writeln!(out, "lam,mu,nu,crystal,oracle")?;
            for lam in &parts {
                for mu in &parts {
                    for nu in &parts {
                        let count = count_d(lam, mu, nu, conv.into())?;
                        let oracle = monomial_coefficient_d(lam, mu, nu, DOracle::Characters)?;
                        writeln!(
                            out,
                            "{},{},{},{count},{oracle}",
                            csv_partition(lam),
                            csv_partition(mu),
                            csv_partition(nu)
                        )?;
                        triples += 1;
                        if count != oracle {
                            bad += 1;
                        }
                    }
                }
            }
            if bad > 0 {
                writeln!(out, "MISMATCH k={k} triples={triples} failures={bad}")?;
                return Ok(Status::Mismatch);
            }
            writeln!(out, "OK k={k} triples={triples}")?;
        }
        Command::KronTableaux { k, lam, p, nu } => {
            match (k, lam, p, nu) {
                (Some(k), None, _, _) => {
                    let rows = compare_with_oracle(k)?;
                    writeln!(out, "lam,p,nu,count,g,regime")?;
                    let mut bad = 0;
                    for r in &rows {
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            csv_partition(&r.lam),
                            r.p,
                            csv_partition(&r.nu),
                            r.count,
                            r.g,
                            r.regime
                        )?;
                        if !r.holds() {
                            bad += 1;
                        }
                    }
                    if bad > 0 {
                        writeln!(out, "MISMATCH k={k} triples={} failures={bad}", rows.len())?;
                        return Ok(Status::Mismatch);
                    }
                    writeln!(out, "OK k={k} triples={}", rows.len())?;
                }
                (None, Some(lam), Some(p), Some(nu)) => {
                    let list = kronecker_tableaux(&lam, p, &nu)?;
                    let verdicts: Vec<_> = list
                    .iter()
                    .map(|t| Ok(serde_json::json!({"tableau": t, "verdict": is_kronecker_tableau(t)?})))
                    .collect::<Result<_>>()?;
                    writeln!(out, "{}", serde_json::to_string(&verdicts)?)?;
                }
                _ => bail!("give --k, or all of --lam, --p and --nu"),
            }
        }
        Command::Skeleton { shape, format, cap } => {
            let s = skeleton(&shape, cap)?;
            match format {
                Format::Dot => out.push_str(&s.to_dot()),
                Format::Json => {
                    let g = &s.search.bottom;
                    let label = |v: &usize| g.vertex(*v).label();
                    let slots: Vec<_> = s
                        .free_slots
                        .iter()
                        .map(|((a, b), ids)| serde_json::json!({"a": a, "b": b, "vertices": ids.iter().map(label).collect::<Vec<_>>()}))
                        .collect();
                    let json = serde_json::json!({
                        "vertices": g.vertices().iter().map(Bitableau::label).collect::<Vec<_>>(),
                        "forced": s.forced.edges(),
                        "placed": s.placed,
                        "free_slots": slots,
                        "completions": s.search.completions.len(),
                    });
                    writeln!(out, "{}", serde_json::to_string(&json)?)?;
                }
                Format::Csv => bail!("--format csv is not available for skeleton"),
            }
        }
        Command::Completions { shape, cap } => {
            let search = enumerate_completions(&shape, cap)?;
            let edges: Vec<Vec<(usize, usize)>> =
                search.completions.iter().map(|c| c.edges()).collect();
            let json = serde_json::json!({
                "vertices": search.bottom.vertices().iter().map(Bitableau::label).collect::<Vec<_>>(),
                "completions": edges,
            });
            writeln!(out, "{}", serde_json::to_string(&json)?)?;
        }
        Command::Census {
            shape,
            transport,
            n,
            m,
            cap,
        } => {
            let structures = match transport {
                None => {
                    if (n, m) != (2, 2) {
                        bail!("the completion search needs --n 2 --m 2");
                    }
                    let search = enumerate_completions(&shape, cap)?;
                    let bottom = search.bottom;
                    search
                        .completions
                        .into_iter()
                        .map(|c| (bottom.clone(), vec![c]))
                        .collect::<Vec<_>>()
                }
                Some(kind) => {
                    let column = matches!(kind, Transport::Column);
                    let fits = if column {
                        shape.part(0) <= 1
                    } else {
                        shape.len() <= 1
                    };
                    if !fits {
                        bail!("--transport needs a one-row or one-column shape, got {shape}");
                    }
                    let g = full_crystal(&shape, n, m, Convention::W, cap)?;
                    let tops = operators_from_fn(&g, n, |t, i| {
                        if column {
                            top_op_column(t, i, Direction::Lower)
                        } else {
                            top_op_row(t, i, Direction::Lower)
                        }
                    })?;
                    vec![(g, tops)]
                }
            };
            writeln!(out, "structure,a,b,count")?;
            let mut bad = 0;
            let mut rows = 0;
            for (idx, (bottom, tops)) in structures.iter().enumerate() {
                let census = highest_weight_census(bottom, tops);
                for ((a, b), count) in &census {
                    writeln!(
                        out,
                        "{idx},{},{},{count}",
                        csv_weight(&a.0),
                        csv_weight(&b.0)
                    )?;
                    rows += 1;
                }
                bad += census_mismatches(&shape, n as usize, m as usize, &census)?.len();
            }
            if bad > 0 {
                writeln!(
                    out,
                    "MISMATCH k={} triples={rows} failures={bad}",
                    shape.size()
                )?;
                return Ok(Status::Mismatch);
            }
            writeln!(out, "OK k={} triples={rows}", shape.size())?;
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let status = run(cli, &mut out);
    print!("{out}");
    match status {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
