// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 when `verify` or
//! `maximal` finds counterexamples.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use matchext_core::extremal::{
    build_extremal, enumerate_family, enumerate_family_classes, exceptional_specs,
};
use matchext_core::graph6;
use matchext_core::indices::zeroth_order_randic;
use matchext_core::properties::is_maximal_non_p;
use matchext_core::thresholds::{closed_branches, corollary_check, exact_threshold};
use matchext_core::{Alpha, CoreError, ExtremalSpec, Graph, PropertyKind, TheoremId};

use crate::harness::{
    enumerate_bipartite, enumerate_graphs, verify_characterization, verify_monotonicity,
    verify_theorem, GraphClassFilter, HarnessError, Source,
};
use crate::io::{read_graph6, StreamError};
use crate::report::{Verdict, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLES: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "matchext",
    version,
    about = "Zeroth-order general Randic index thresholds for matching extendability"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeroth-order general Randic index of each input graph.
    Index {
        #[arg(long, value_parser = parse_alphas, allow_hyphen_values = true)]
        alpha: AlphaList,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Whether each input graph has a property.
    Check {
        #[arg(long, value_parser = parse_property)]
        property: PropertyKind,
        /// Test for a maximal graph lacking the property instead.
        #[arg(long)]
        maximal: bool,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Members of the family of maximal graphs lacking a property, as graph6.
    Construct {
        #[arg(long, value_parser = parse_property, required_unless_present_any = ["hub", "biclique"])]
        property: Option<PropertyKind>,
        #[arg(long, required_unless_present_any = ["hub", "biclique"])]
        order: Option<usize>,
        /// Only the graphs exempted by the threshold theorem.
        #[arg(long, conflicts_with = "compositions")]
        exceptional: bool,
        /// One member per ordered composition of clique sizes.
        #[arg(long)]
        compositions: bool,
        /// Single hub-join member: hub size.
        #[arg(long, requires = "halves", conflicts_with_all = ["property", "biclique"])]
        hub: Option<usize>,
        /// Single hub-join member: clique half-sizes.
        #[arg(long, value_delimiter = ',', requires = "hub")]
        halves: Vec<usize>,
        /// Single biclique-deleted member: N,S,T.
        #[arg(long, value_parser = parse_triple, conflicts_with = "property")]
        biclique: Option<(usize, usize, usize)>,
    },
    /// Exact and closed-form thresholds of a theorem.
    Threshold {
        #[arg(long, value_parser = parse_property)]
        property: PropertyKind,
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_alphas, allow_hyphen_values = true)]
        alpha: AlphaList,
        /// Audit each closed-form branch against its family member instead.
        #[arg(long)]
        branches: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive verification of a threshold theorem, or of edge
    /// monotonicity with `--theorem mono`.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremArg,
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_alphas, allow_hyphen_values = true)]
        alpha: AlphaList,
        /// graph6 stream to scan instead of the built-in generator (`-` for stdin).
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<NonZeroUsize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Compares exhaustively found maximal graphs lacking a property with
    /// the characterizing family.
    Maximal {
        #[arg(long, value_parser = parse_property)]
        property: PropertyKind,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lists graphs of one order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        perfect_matching: bool,
        /// Connected balanced bipartite graphs only.
        #[arg(long)]
        bipartite: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// One headerless graph6 token.
    #[arg(long)]
    g6: Option<String>,
    /// graph6 lines (`-` for stdin).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremArg {
    Property(PropertyKind),
    Monotonicity,
}

/// Comma-separated exponents; negative values are accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaList(pub Vec<Alpha>);

fn parse_alphas(s: &str) -> Result<AlphaList, String> {
    s.split(',')
        .map(|t| {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| format!("`{t}` is not a decimal number"))?;
            Alpha::new(v).map_err(|_| format!("alpha must be finite and non-zero, got `{t}`"))
        })
        .collect::<Result<_, _>>()
        .map(AlphaList)
}

fn parse_property(s: &str) -> Result<PropertyKind, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremArg, String> {
    if s == "mono" {
        Ok(TheoremArg::Monotonicity)
    } else {
        parse_property(s).map(TheoremArg::Property)
    }
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize), String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad integer `{t}`")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err("expected N,S,T".into()),
    }
}

/// Failure of a command after argument parsing.
#[derive(Debug)]
pub enum RunError {
    Domain(String),
    Io(std::io::Error),
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        RunError::Domain(e.to_string())
    }
}

impl From<HarnessError> for RunError {
    fn from(e: HarnessError) -> Self {
        RunError::Domain(e.to_string())
    }
}

impl From<StreamError> for RunError {
    fn from(e: StreamError) -> Self {
        RunError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run(
    args: Vec<OsString>,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(RunError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn read_graphs(input: &GraphInput, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, RunError> {
    if let Some(token) = &input.g6 {
        return Ok(vec![graph6::decode(token).map_err(CoreError::from)?]);
    }
    let path = input.file.as_ref().expect("clap enforces one graph source");
    read_file(path, stdin)
}

fn read_file(path: &PathBuf, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, RunError> {
    if path.as_os_str() == "-" {
        Ok(read_graph6(stdin)?)
    } else {
        let f =
            File::open(path).map_err(|e| RunError::Domain(format!("{}: {e}", path.display())))?;
        Ok(read_graph6(BufReader::new(f))?)
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn execute(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    match command {
        Command::Index {
            alpha,
            input,
            format,
        } => {
            let alphas = alpha.0;
            let graphs = read_graphs(&input, stdin)?;
            #[derive(Serialize)]
            struct Row {
                graph6: String,
                alpha: f64,
                index: f64,
            }
            let mut rows = Vec::new();
            for g in &graphs {
                for &a in &alphas {
                    rows.push(Row {
                        graph6: graph6::encode(g),
                        alpha: a.value(),
                        index: zeroth_order_randic(g, a)?,
                    });
                }
            }
            match format {
                Format::Json => writeln!(out, "{}", json(&rows))?,
                Format::Csv => {
                    writeln!(out, "graph6,alpha,index")?;
                    for r in &rows {
                        writeln!(out, "{},{},{}", r.graph6, r.alpha, r.index)?;
                    }
                }
                Format::Text => {
                    for chunk in rows.chunks(alphas.len()) {
                        let line: Vec<String> = chunk.iter().map(|r| r.index.to_string()).collect();
                        writeln!(out, "{}", line.join(" "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            property,
            maximal,
            input,
        } => {
            for g in read_graphs(&input, stdin)? {
                let answer = if maximal {
                    let b = if property.is_bipartite() {
                        Some(g.bipartition().filter(|b| b.is_balanced()).ok_or_else(|| {
                            RunError::Domain(format!(
                                "{} is not balanced bipartite",
                                graph6::encode(&g)
                            ))
                        })?)
                    } else {
                        None
                    };
                    is_maximal_non_p(&g, property, b.as_ref())?
                } else {
                    property.holds(&g)
                };
                writeln!(out, "{answer}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            property,
            order,
            exceptional,
            compositions,
            hub,
            halves,
            biclique,
        } => {
            let specs = if let Some(hub) = hub {
                vec![ExtremalSpec::HubJoinOddCliques { hub, halves }]
            } else if let Some((n, s, t)) = biclique {
                vec![ExtremalSpec::BipartiteDeleted { n, s, t }]
            } else {
                let (property, order) = (property.expect("clap"), order.expect("clap"));
                if exceptional {
                    exceptional_specs(TheoremId::from_property(property, order)?)?
                } else if compositions {
                    enumerate_family(property, order)?
                } else {
                    enumerate_family_classes(property, order)?
                }
            };
            for spec in &specs {
                writeln!(out, "{}", graph6::encode(&build_extremal(spec)?.graph))?;
            }
            Ok(EXIT_OK)
        }
        Command::Threshold {
            property,
            order,
            alpha,
            branches,
            format,
        } => {
            let t = TheoremId::from_property(property, order)?;
            let alphas = alpha.0;
            if branches {
                #[derive(Serialize)]
                struct Audit {
                    alpha: f64,
                    branches: Vec<matchext_core::thresholds::Branch>,
                }
                let mut audits = Vec::new();
                for &a in &alphas {
                    audits.push(Audit {
                        alpha: a.value(),
                        branches: closed_branches(t, a)?,
                    });
                }
                let corollary = corollary_check(t)?;
                match format {
                    Format::Json => {
                        #[derive(Serialize)]
                        struct Out<'a> {
                            theorem: TheoremId,
                            audits: &'a [Audit],
                            corollary: Option<matchext_core::thresholds::CorollaryCheck>,
                        }
                        writeln!(
                            out,
                            "{}",
                            json(&Out {
                                theorem: t,
                                audits: &audits,
                                corollary
                            })
                        )?;
                    }
                    Format::Csv | Format::Text => {
                        writeln!(out, "alpha,branch,printed,member_value,discrepancy")?;
                        for audit in &audits {
                            for b in &audit.branches {
                                let f =
                                    |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
                                writeln!(
                                    out,
                                    "{},{},{},{},{}",
                                    audit.alpha,
                                    b.name,
                                    b.printed,
                                    f(b.member_value),
                                    f(b.discrepancy)
                                )?;
                            }
                        }
                        if let Some(c) = corollary {
                            writeln!(
                                out,
                                "corollary edge bound {} vs exact {}: discrepancy {}",
                                c.edge_bound, c.exact_edges, c.discrepancy
                            )?;
                        }
                    }
                }
                return Ok(EXIT_OK);
            }
            let reports = alphas
                .iter()
                .map(|&a| exact_threshold(t, a))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                Format::Json if reports.len() == 1 => writeln!(out, "{}", json(&reports[0]))?,
                Format::Json => writeln!(out, "{}", json(&reports))?,
                Format::Csv | Format::Text => {
                    writeln!(out, "alpha,closed_form,exact,discrepancy,argmax_spec")?;
                    for (a, r) in alphas.iter().zip(&reports) {
                        let f = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
                        let spec = serde_json::to_string(&r.argmax_spec).expect("serializable");
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            a.value(),
                            f(r.closed_form),
                            r.exact,
                            f(r.discrepancy),
                            csv_quote(&spec)
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            order,
            alpha,
            file,
            jobs,
            format,
            timing,
        } => {
            let alphas = alpha.0;
            let graphs = file.as_ref().map(|f| read_file(f, stdin)).transpose()?;
            let start = Instant::now();
            let threads = jobs.map_or_else(rayon::current_num_threads, NonZeroUsize::get);
            let mut report =
                pool(threads).install(|| -> Result<VerificationReport, RunError> {
                    Ok(match theorem {
                        TheoremArg::Monotonicity => {
                            if graphs.is_some() {
                                return Err(RunError::Domain(
                                    "monotonicity runs use the built-in generator".into(),
                                ));
                            }
                            verify_monotonicity(&alphas, order)?
                        }
                        TheoremArg::Property(p) => {
                            let t = TheoremId::from_property(p, order)?;
                            let source = graphs.map_or(Source::BuiltIn, Source::Graphs);
                            verify_theorem(t, &alphas, source)?
                        }
                    })
                })?;
            if timing {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            emit(&report, format, out)?;
            Ok(exit_for(report.verdict))
        }
        Command::Maximal {
            property,
            order,
            format,
        } => {
            let report = pool(1).install(|| verify_characterization(property, order))?;
            emit(&report, format, out)?;
            Ok(exit_for(report.verdict))
        }
        Command::Enumerate {
            order,
            connected,
            perfect_matching,
            bipartite,
            count,
        } => {
            let graphs = pool(1).install(|| -> Result<Vec<Graph>, HarnessError> {
                if bipartite {
                    if order % 2 != 0 {
                        return Ok(Vec::new());
                    }
                    let gs: Vec<Graph> = enumerate_bipartite(order / 2)?
                        .into_iter()
                        .map(|(g, _)| g)
                        .collect();
                    let filter = GraphClassFilter {
                        perfect_matching,
                        ..GraphClassFilter::order(order)
                    };
                    Ok(gs.into_iter().filter(|g| filter.accepts(g)).collect())
                } else {
                    let filter = GraphClassFilter {
                        connected,
                        perfect_matching,
                        ..GraphClassFilter::order(order)
                    };
                    enumerate_graphs(&filter)
                }
            })?;
            if count {
                writeln!(out, "{}", graphs.len())?;
            } else {
                for g in &graphs {
                    writeln!(out, "{}", graph6::encode(g))?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn exit_for(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Fails => EXIT_COUNTEREXAMPLES,
        Verdict::Holds | Verdict::Vacuous => EXIT_OK,
    }
}

fn emit(report: &VerificationReport, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Csv => write!(out, "{}", report.to_csv()),
        Format::Text => write!(out, "{}", report.to_text()),
    }
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}
