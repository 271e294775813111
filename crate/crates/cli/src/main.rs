use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stabletwist_core::acceptance::run_all;
use stabletwist_core::cache::Cache;
use stabletwist_core::mcg::generator_series;
use stabletwist_core::stablecohom::{
    build_table, dim_schur, dim_schur_checked, stable_range, CoefficientTag, GroupFamily, Method, Statement,
};
use stabletwist_core::symfunc::{nu, nu_infinity, plethysm_h_h, StableSource};
use stabletwist_core::{Partition, SurfaceVariant};

#[derive(Parser)]
#[command(name = "stabletwist", version, about = "Stable twisted cohomology of Aut(F_n), Out(F_n) and mapping class groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Aut,
    Out,
}

impl From<Group> for GroupFamily {
    fn from(g: Group) -> Self {
        match g {
            Group::Aut => GroupFamily::AutF,
            Group::Out => GroupFamily::OutF,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Closed,
    Boundary,
}

impl From<Variant> for SurfaceVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Closed => SurfaceVariant::Closed,
            Variant::Boundary => SurfaceVariant::OneBoundary,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Characters,
    Plethysm,
}

#[derive(Subcommand)]
enum Command {
    /// Stable dimensions of H^|λ|(G; S_λ(H)) for all |λ| ≤ max weight.
    Table {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        max_weight: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stable dimension of H^|λ|(G; S_λ(H)) for one partition.
    Dim {
        #[arg(long, value_enum)]
        group: Group,
        /// Partition such as "[2,1,1]" or "(2 1^2)".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        /// Compute by both methods and confirm they agree.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "characters", conflicts_with = "check")]
        method: MethodArg,
    },
    /// Schur expansion of the plethysm Sym^k ∘ Sym^l.
    Plethysm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// ν^{k,l}(μ), or the stable value ν^∞(μ) when k and l are omitted.
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        l: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generator degrees of H^*(Γ; S_λ(H)) over the stable cohomology ring.
    Mcg {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the acceptance checks.
    Selftest,
}

#[derive(Serialize)]
struct CoefficientRow<'a> {
    partition: &'a Partition,
    coefficient: u64,
}

fn run(command: Command, out: &mut impl Write) -> anyhow::Result<bool> {
    match command {
        Command::Table {
            group,
            max_weight,
            format,
        } => {
            let table = build_table(group.into(), max_weight)?;
            match format {
                Format::Text => write!(out, "{}", table.to_text())?,
                Format::Csv => write!(out, "{}", table.to_csv())?,
                Format::Json => writeln!(out, "{}", table.to_json())?,
            }
        }
        Command::Dim {
            group,
            lambda,
            check,
            method,
        } => {
            let group = GroupFamily::from(group);
            let range = stable_range(group, &CoefficientTag::SchurOfH(lambda.clone()), Statement::DiagonalIdentified)?;
            let dimension = if check {
                dim_schur_checked(group, &lambda)?
            } else {
                let method = match method {
                    MethodArg::Characters => Method::Characters,
                    MethodArg::Plethysm => Method::Plethysm,
                };
                dim_schur(group, &lambda, method)?
            };
            writeln!(out, "# dim H^{}({group}; S_{lambda}(H)), stable for {range}", lambda.weight())?;
            writeln!(out, "{dimension}")?;
            if check {
                writeln!(out, "# methods agree: characters = plethysm = {dimension}")?;
            }
        }
        Command::Plethysm { k, l, format } => {
            let counts = plethysm_h_h(k, l)?.to_counts()?;
            match format {
                Format::Text => {
                    for (lambda, c) in &counts {
                        writeln!(out, "{lambda}: {c}")?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "partition,coefficient")?;
                    for (lambda, c) in &counts {
                        writeln!(out, "\"{lambda}\",{c}")?;
                    }
                }
                Format::Json => {
                    let rows: Vec<CoefficientRow> = counts
                        .iter()
                        .map(|(partition, &coefficient)| CoefficientRow { partition, coefficient })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string(&rows)?)?;
                }
            }
        }
        Command::Nu { mu, k, l, format } => {
            let (value, source) = match (k, l) {
                (Some(k), Some(l)) => (nu(k, l, &mu)?, None),
                _ => {
                    let s = nu_infinity(&mu)?;
                    (s.value, Some(s.source))
                }
            };
            match format {
                Format::Text => {
                    match source {
                        Some(StableSource::Witness { k, l }) => writeln!(out, "# ν^∞({mu}) evaluated at (k, l) = ({k}, {l})")?,
                        Some(StableSource::StableIdentity) => writeln!(out, "# ν^∞({mu}) from Sym^*(Sym^≥2 V)")?,
                        None => {}
                    }
                    writeln!(out, "{value}")?;
                }
                Format::Csv => {
                    writeln!(out, "mu,value")?;
                    writeln!(out, "\"{mu}\",{value}")?;
                }
                Format::Json => {
                    let json = match source {
                        Some(source) => serde_json::json!({ "mu": mu, "value": value, "source": source }),
                        None => serde_json::json!({ "mu": mu, "k": k, "l": l, "value": value }),
                    };
                    writeln!(out, "{json}")?;
                }
            }
        }
        Command::Mcg {
            variant,
            lambda,
            max_degree,
            format,
        } => {
            let series = generator_series(variant.into(), &lambda, max_degree)?;
            match format {
                Format::Text => {
                    for (d, m) in series.iter() {
                        writeln!(out, "{d}: {m}")?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "degree,multiplicity")?;
                    for (d, m) in series.iter() {
                        writeln!(out, "{d},{m}")?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string(&series)?)?,
            }
        }
        Command::Selftest => {
            let reports = run_all();
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} of {} criteria passed", reports.len() - failed, reports.len())?;
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = Cache::from_env();
    let result = (|| -> anyhow::Result<bool> {
        if let Some(cache) = &cache {
            cache
                .load()
                .with_context(|| format!("loading cache from {}", cache.dir().display()))?;
        }
        let mut out = io::BufWriter::new(io::stdout().lock());
        let ok = run(cli.command, &mut out)?;
        out.flush()?;
        if !ok {
            bail!("selftest failed");
        }
        if let Some(cache) = &cache {
            cache
                .store()
                .with_context(|| format!("writing cache to {}", cache.dir().display()))?;
        }
        Ok(true)
    })();
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
