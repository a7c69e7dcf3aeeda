//! Command-line driver.
//!
//! Exit codes: 0 on success, 1 when a check fails or a computation errors,
//! 2 when an upstream artifact is missing from the catalog, 64 on bad usage.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::artifact::{ArtifactRecord, Kind};
use crate::catalog::{Catalog, CatalogError};
use crate::dot::DotGraph;
use crate::payload;
use crate::stages::{self, Output, StageError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_MISSING: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "qgraph", version, about = "Quantum graphs and quantum symmetries from affine su(N) modular data")]
pub struct Cli {
    /// Catalog root; defaults to $QGRAPH_CATALOG, then ./qgraph-catalog.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrable weights and conformal dimensions.
    Alcove {
        #[arg(long, default_value = "A3")]
        algebra: String,
        #[arg(long)]
        level: u32,
    },
    /// Fusion matrices from the truncated recursion (A3 only).
    Fusion {
        #[arg(long, default_value = "A3")]
        algebra: String,
        #[arg(long)]
        level: u32,
    },
    /// Kac–Peterson s and t matrices.
    Modular {
        #[arg(long, default_value = "A3")]
        algebra: String,
        #[arg(long)]
        level: u32,
    },
    /// Conformal embeddings G_k ⊂ K_1 by central charge.
    EmbedScan {
        /// G, as `SU(4)` or `A3`.
        #[arg(long)]
        group: String,
        /// Rank bound of the built-in catalog of K groups.
        #[arg(long, default_value_t = 40)]
        max_rank: u32,
        #[arg(long, default_value_t = 100_000)]
        k_max: u32,
        /// JSON list of `{name, dim, dual_coxeter}` replacing the built-in catalog.
        #[arg(long)]
        groups: Option<PathBuf>,
    },
    /// Modular invariant of an exceptional SU(4) graph.
    Invariant {
        #[arg(long, default_value = "e4")]
        fixture: String,
    },
    /// Solve the modular splitting equation.
    Split {
        /// Hash of an `invariant` artifact; recomputes `e4` when absent.
        #[arg(long)]
        invariant: Option<String>,
    },
    /// Chiral generators of the Ocneanu graph.
    Ocneanu {
        /// Hash of a `toric-family` artifact; recomputes upstream when absent.
        #[arg(long)]
        toric: Option<String>,
    },
    /// Graph algebra of E4 and its realization E4 ⊗_J E4.
    Realize {
        /// Hash of an `oc-graph` artifact; recomputes upstream when absent.
        #[arg(long)]
        oc_graph: Option<String>,
    },
    /// Run every acceptance check and print one line per criterion.
    Verify {
        #[arg(long, default_value = "e4")]
        fixture: String,
    },
    /// Write a catalog artifact as JSON or DOT.
    Export {
        #[arg(long)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Artifact hash or unique prefix; latest of `kind` when absent.
        #[arg(long)]
        hash: Option<String>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

impl clap::ValueEnum for Kind {
    fn value_variants<'a>() -> &'a [Self] {
        &Kind::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Missing(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Missing(_) => EXIT_MISSING,
            Failure::Check(_) => EXIT_CHECK,
        }
    }
}

impl From<StageError> for Failure {
    fn from(e: StageError) -> Self {
        match e {
            StageError::Usage(m) => Failure::Usage(m),
            e => Failure::Check(e.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Missing(_) | CatalogError::Ambiguous(_) => Failure::Missing(e.to_string()),
            e => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

struct Session<'a> {
    catalog: Catalog,
    out: &'a mut dyn Write,
}

impl Session<'_> {
    fn store(&mut self, o: &Output) -> Result<ArtifactRecord, Failure> {
        self.catalog.put(&o.record, &o.summary)?;
        writeln!(self.out, "{} {} {}", o.record.kind, o.record.hash, o.summary)?;
        Ok(o.record.clone())
    }

    fn invariant(&mut self, hash: Option<&str>) -> Result<ArtifactRecord, Failure> {
        match hash {
            Some(h) => Ok(self.catalog.get(h)?),
            None => self.store(&stages::invariant("e4")?),
        }
    }

    fn toric(&mut self, hash: Option<&str>) -> Result<ArtifactRecord, Failure> {
        match hash {
            Some(h) => Ok(self.catalog.get(h)?),
            None => {
                let inv = self.invariant(None)?;
                self.store(&stages::split(&inv)?)
            }
        }
    }

    fn oc_graph(&mut self, hash: Option<&str>) -> Result<ArtifactRecord, Failure> {
        match hash {
            Some(h) => Ok(self.catalog.get(h)?),
            None => {
                let toric = self.toric(None)?;
                self.store(&stages::ocneanu(&toric)?)
            }
        }
    }

    fn run(&mut self, command: Command) -> Result<(), Failure> {
        match command {
            Command::Alcove { algebra, level } => {
                self.store(&stages::alcove(&algebra, level)?)?;
            }
            Command::Fusion { algebra, level } => {
                self.store(&stages::fusion(&algebra, level)?)?;
            }
            Command::Modular { algebra, level } => {
                self.store(&stages::modular(&algebra, level)?)?;
            }
            Command::EmbedScan { group, max_rank, k_max, groups } => {
                let records: Option<Vec<payload::GroupRecord>> = match groups {
                    Some(path) => {
                        let text = fs::read_to_string(&path)
                            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                        Some(
                            serde_json::from_str(&text)
                                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                        )
                    }
                    None => None,
                };
                self.store(&stages::embed_scan(&group, max_rank, k_max, records.as_deref())?)?;
            }
            Command::Invariant { fixture } => {
                self.store(&stages::invariant(&fixture)?)?;
            }
            Command::Split { invariant } => {
                let inv = self.invariant(invariant.as_deref())?;
                self.store(&stages::split(&inv)?)?;
            }
            Command::Ocneanu { toric } => {
                let t = self.toric(toric.as_deref())?;
                self.store(&stages::ocneanu(&t)?)?;
            }
            Command::Realize { oc_graph } => {
                let g = self.oc_graph(oc_graph.as_deref())?;
                for o in stages::realize(&g)? {
                    self.store(&o)?;
                }
            }
            Command::Verify { fixture } => {
                if !fixture.eq_ignore_ascii_case("e4") {
                    return Err(Failure::Usage(format!("no acceptance suite for fixture `{fixture}`")));
                }
                let criteria = qgraph_core::audit::run_all().map_err(|e| Failure::Check(e.to_string()))?;
                for c in &criteria {
                    writeln!(self.out, "{c}")?;
                }
                let failed: Vec<u8> = criteria.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
                if !failed.is_empty() {
                    return Err(Failure::Check(format!("criteria {failed:?} failed")));
                }
            }
            Command::Export { kind, format, hash, out } => {
                let record = match hash {
                    Some(h) => self.catalog.get(&h)?,
                    None => self.catalog.latest(kind)?,
                };
                if record.kind != kind {
                    return Err(Failure::Usage(format!("artifact {} is a {}, not a {kind}", record.hash, record.kind)));
                }
                let text = match format {
                    Format::Json => record.to_canonical(),
                    Format::Dot => dot_for(&record)?,
                };
                match out {
                    Some(path) => fs::write(path, text)?,
                    None => self.out.write_all(text.as_bytes())?,
                }
            }
        }
        Ok(())
    }
}

/// DOT text for the graph-like kinds.
fn dot_for(record: &ArtifactRecord) -> Result<String, Failure> {
    let bad = |e: crate::artifact::ArtifactError| Failure::Check(e.to_string());
    let graph = match record.kind {
        Kind::GraphAlgebra => DotGraph::from_algebra(&record.decode(Kind::GraphAlgebra).map_err(bad)?),
        Kind::OcGraph => DotGraph::from_oc(&record.decode(Kind::OcGraph).map_err(bad)?),
        k => return Err(Failure::Usage(format!("no DOT rendering for {k}; use graph-algebra or oc-graph"))),
    };
    Ok(graph.render())
}

/// Runs the CLI on `args` (program name first), writing reports to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut session = Session { catalog: Catalog::locate(cli.catalog.as_deref()), out };
    match session.run(cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Missing(m) | Failure::Check(m) => m,
            };
            let _ = writeln!(err, "qgraph: {msg}");
            f.code()
        }
    }
}
