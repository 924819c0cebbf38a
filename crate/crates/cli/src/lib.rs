//! `immerse`: format conversion, analysis, constructions, certificate
//! verification, immersion oracles and the counterexample hunt.
//!
//! Artifacts go to standard output (or `--output`), diagnostics to standard
//! error. Exit status is 0 on success, 1 on any domain or usage error and 2
//! when a work budget runs out.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use immerse_core::constructions::{
    complement_has_induced_c4, construct_c4free_complement_immersion, construct_dense56_immersion,
    construct_multipartite_immersion, construct_third_immersion, is_k_s_dense, ConstructionError,
    ThirdOptions,
};
use immerse_core::graph::{
    named, parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6,
};
use immerse_core::immersion::{
    immersion_oracle_lifts, immersion_oracle_paths, max_clique_immersion, OracleError,
};
use immerse_core::lab::{read_graph6_stream, search_harness, GraphSource, HarnessConfig};
use immerse_core::solvers::{chromatic_number, clique_number, independence_number};
use immerse_core::{verify_certificate, Budget, Graph, ImmersionCertificate};

#[derive(Parser, Debug)]
#[command(
    name = "immerse",
    version,
    about = "Complete-graph immersions in dense graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Re-encode a graph as graph6 or as an edge list.
    Convert {
        #[command(flatten)]
        io: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        to: Format,
    },
    /// Report basic invariants and the construction predicates.
    Analyze {
        #[command(flatten)]
        io: GraphInput,
        #[command(flatten)]
        common: Common,
    },
    /// Build and verify a strong clique immersion certificate.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Class sizes for `multipartite`, comma separated.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[command(flatten)]
        io: GraphInput,
        #[command(flatten)]
        common: Common,
    },
    /// Check a certificate file against the host it names.
    Verify {
        /// Certificate file; standard input when absent or `-`.
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive immersion searches.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        /// Pattern graph in graph6 (`paths`, `lifts`).
        #[arg(long, conflicts_with = "clique")]
        pattern: Option<String>,
        /// Use K_t as the pattern.
        #[arg(long)]
        clique: Option<usize>,
        #[command(flatten)]
        io: GraphInput,
        #[command(flatten)]
        common: Common,
    },
    /// Run the property battery and the half-clique check over many graphs.
    Hunt {
        #[arg(long, value_enum, default_value_t = HuntSource::Enumerate)]
        source: HuntSource,
        /// Vertex count for `enumerate` and `random`.
        #[arg(short, long)]
        n: Option<usize>,
        /// Number of random graphs.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// graph6 stream for `stream`; standard input when absent or `-`.
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Evaluate every battery condition instead of stopping at the first failure.
        #[arg(long)]
        full: bool,
        /// Run the half-clique check only on battery survivors.
        #[arg(long)]
        survivors_only: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Input file; standard input when absent or `-`.
    #[arg(short, long, conflicts_with = "graph")]
    input: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(short, long)]
    graph: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Input format; detected from the text when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct Common {
    /// Node limit per solver call.
    #[arg(long, default_value_t = Budget::default().0, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Multipartite,
    Dense56,
    C4free,
    Third,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Paths,
    Lifts,
    Maxclique,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HuntSource {
    Enumerate,
    Random,
    Stream,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Certificate(String),
    Construction(String),
    Invalid(String),
    Budget(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Budget(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Certificate(m) => write!(f, "certificate error: {m}"),
            Failure::Construction(m) => write!(f, "construction error: {m}"),
            Failure::Invalid(m) => write!(f, "{m}"),
            Failure::Budget(m) => write!(f, "budget exceeded: {m}"),
            Failure::Io(m) => write!(f, "output error: {m}"),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::BudgetExceeded => Failure::Budget("construction".into()),
            ConstructionError::Falsification(d) => Failure::Construction(format!(
                "falsified: {}",
                serde_json::to_string(&d).expect("diagnostic serializes")
            )),
            other => Failure::Construction(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded => Failure::Budget("oracle".into()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_text(&mut self, path: Option<&PathBuf>) -> Result<String, Failure> {
        match path {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display()))),
            _ => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    fn read_graph(&mut self, input: &GraphInput) -> Result<Graph, Failure> {
        let text = match &input.graph {
            Some(g6) => g6.clone(),
            None => self.read_text(input.input.as_ref())?,
        };
        let format = input.format.unwrap_or_else(|| detect_format(&text));
        match format {
            Format::Graph6 => {
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .unwrap_or("");
                let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
                parse_graph6(line).map_err(|e| Failure::Input(e.to_string()))
            }
            Format::Edgelist => parse_edge_list(&text).map_err(|e| Failure::Input(e.to_string())),
        }
    }

    fn emit(&mut self, output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
        match output {
            Some(p) if p.as_os_str() != "-" => fs::write(p, text)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
            _ => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(e.to_string())),
        }
    }
}

fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        Format::Edgelist
    } else {
        Format::Graph6
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn budget_of(common: &Common) -> Budget {
    Budget::nodes(common.budget)
}

/// Parses `argv` (program name first) and runs the command. Returns the
/// process exit status.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "{}", Failure::Usage(line.to_string()));
            return 1;
        }
    };
    let mut io = Io { stdin, out };
    match execute(cli.command, &mut io, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            f.code()
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Convert { io: input, to } => {
            let g = io.read_graph(&input)?;
            let text = match to {
                Format::Graph6 => {
                    serialize_graph6(&g).map_err(|e| Failure::Input(e.to_string()))?
                }
                Format::Edgelist => serialize_edge_list(&g),
            };
            io.emit(input.output.as_ref(), &with_newline(text))
        }
        Command::Analyze { io: input, common } => {
            let g = io.read_graph(&input)?;
            let text = analyze(&g, budget_of(&common), common.json)?;
            io.emit(input.output.as_ref(), &text)
        }
        Command::Construct {
            kind,
            sizes,
            io: input,
            common,
        } => {
            let budget = budget_of(&common);
            let (host, certificate, name) = match kind {
                ConstructKind::Multipartite => {
                    if sizes.is_empty() {
                        return Err(Failure::Usage("multipartite needs --sizes".into()));
                    }
                    let (g, c) = construct_multipartite_immersion(&sizes)?;
                    (g, c.certificate, "multipartite")
                }
                ConstructKind::Dense56 => {
                    let g = io.read_graph(&input)?;
                    let c = construct_dense56_immersion(&g, budget)?;
                    (g, c.certificate, "dense56")
                }
                ConstructKind::C4free => {
                    let g = io.read_graph(&input)?;
                    let c = construct_c4free_complement_immersion(&g, budget)?;
                    (g, c.certificate, "c4free")
                }
                ConstructKind::Third => {
                    let g = io.read_graph(&input)?;
                    let seed = (common.seed != 0).then_some(common.seed);
                    let outcome = construct_third_immersion(&g, &ThirdOptions { seed })?;
                    (g, outcome.into_certificate().normalized(), "third")
                }
            };
            let verdict = verify_certificate(&host, &certificate);
            assert!(
                verdict.strong,
                "{name} emitted an unverifiable certificate: {:?}",
                verdict.violation
            );
            let _ = writeln!(err, "{} ({name})", verdict.summary(&certificate));
            let json = certificate
                .to_json(&host)
                .map_err(|e| Failure::Input(e.to_string()))?;
            io.emit(input.output.as_ref(), &with_newline(json))
        }
        Command::Verify { input, json } => {
            let text = io.read_text(input.as_ref())?;
            let (host, certificate) = ImmersionCertificate::from_json(&text)
                .map_err(|e| Failure::Certificate(e.to_string()))?;
            let verdict = verify_certificate(&host, &certificate);
            let summary = verdict.summary(&certificate);
            let text = if json {
                with_newline(serde_json::to_string_pretty(&verdict).expect("verdict serializes"))
            } else {
                format!("{summary}\n")
            };
            io.emit(None, &text)?;
            if verdict.valid {
                Ok(())
            } else {
                Err(Failure::Invalid(summary))
            }
        }
        Command::Oracle {
            kind,
            pattern,
            clique,
            io: input,
            common,
        } => {
            let g = io.read_graph(&input)?;
            let budget = budget_of(&common);
            let pattern = match (pattern, clique) {
                (Some(p), _) => {
                    Some(parse_graph6(&p).map_err(|e| Failure::Input(format!("pattern: {e}")))?)
                }
                (None, Some(t)) => Some(named::complete(t)),
                (None, None) => None,
            };
            let text = match kind {
                OracleKind::Paths => {
                    let h = pattern.ok_or_else(|| {
                        Failure::Usage("paths needs --pattern or --clique".into())
                    })?;
                    match immersion_oracle_paths(&g, &h, budget)? {
                        Some(cert) => cert
                            .to_json(&g)
                            .map_err(|e| Failure::Input(e.to_string()))?,
                        None => "none".to_string(),
                    }
                }
                OracleKind::Lifts => {
                    let h = pattern.ok_or_else(|| {
                        Failure::Usage("lifts needs --pattern or --clique".into())
                    })?;
                    immersion_oracle_lifts(&g, &h, budget)?.to_string()
                }
                OracleKind::Maxclique => {
                    let r = max_clique_immersion(&g, budget);
                    if common.json {
                        serde_json::to_string_pretty(&r).expect("result serializes")
                    } else {
                        format!(
                            "t {}\ndefinitive {}\nsource {}",
                            r.t, r.definitive, r.source
                        )
                    }
                }
            };
            io.emit(input.output.as_ref(), &with_newline(text))
        }
        Command::Hunt {
            source,
            n,
            count,
            input,
            output,
            workers,
            full,
            survivors_only,
            common,
        } => {
            let need_n =
                || n.ok_or_else(|| Failure::Usage("--n is required for this source".into()));
            let graph_source = match source {
                HuntSource::Enumerate => GraphSource::Enumerate { n: need_n()? },
                HuntSource::Random => GraphSource::Random {
                    n: need_n()?,
                    count,
                },
                HuntSource::Stream => {
                    let text = io.read_text(input.as_ref())?;
                    GraphSource::Stream(
                        read_graph6_stream(text.as_bytes())
                            .map_err(|e| Failure::Input(e.to_string()))?,
                    )
                }
            };
            let config = HarnessConfig {
                budget: budget_of(&common),
                seed: common.seed,
                workers,
                full_battery: full,
                check_all: !survivors_only,
            };
            let report =
                search_harness(graph_source, &config).map_err(|e| Failure::Input(e.to_string()))?;
            let mut text = if common.json {
                with_newline(report.to_json())
            } else {
                report.summary_table()
            };
            if !common.json {
                for s in &report.survivors {
                    text.push_str(&format!("{}\n", s.graph6));
                }
            }
            io.emit(output.as_ref(), &text)
        }
    }
}

fn analyze(g: &Graph, budget: Budget, json: bool) -> Result<String, Failure> {
    let exceeded = |what: &str| Failure::Budget(what.to_string());
    let (alpha, _) = independence_number(g, budget).map_err(|_| exceeded("independence number"))?;
    let (omega, _) = clique_number(g, budget).map_err(|_| exceeded("clique number"))?;
    let (chi, _) = chromatic_number(g, budget).map_err(|_| exceeded("chromatic number"))?;
    let dense = is_k_s_dense(g, 5, 6);
    let c4 = complement_has_induced_c4(g);
    let fields = serde_json::json!({
        "graph6": serialize_graph6(g).unwrap_or_default(),
        "n": g.n(),
        "m": g.edge_count(),
        "alpha": alpha,
        "omega": omega,
        "chi": chi,
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "diameter": g.diameter(),
        "connected": g.is_connected(),
        "dense_5_6": dense.dense,
        "dense_5_6_violation": dense.violating_set,
        "complement_induced_c4": c4,
    });
    if json {
        return Ok(with_newline(
            serde_json::to_string_pretty(&fields).expect("serializes"),
        ));
    }
    let opt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
    let set = |v: Option<Vec<usize>>| {
        v.map_or("none".to_string(), |s| {
            s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        })
    };
    Ok(format!(
        "n {}\nm {}\nalpha {alpha}\nomega {omega}\nchi {chi}\nmin_degree {}\nmax_degree {}\ndiameter {}\nconnected {}\ndense_5_6 {}\ncomplement_induced_c4 {}\n",
        g.n(),
        g.edge_count(),
        opt(g.min_degree()),
        opt(g.max_degree()),
        opt(g.diameter()),
        g.is_connected(),
        dense.dense,
        set(c4.map(|w| w.to_vec())),
    ))
}
