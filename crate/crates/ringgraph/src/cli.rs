//! Command line front end: `compute` renders a graph for one ring, `verify`
//! runs prediction suites, `info` prints ring facts. Exit codes: 2 for
//! parse/usage errors, 3 when a ring exceeds the order limit, 4 when a
//! unital graph is requested for a ring without identity, 1 for a failed
//! verification.

use crate::cache::{cache_key, Cache, CacheEntry};
use crate::descriptor::RingDescriptor;
use crate::lambda::{commuting_graph, compressed_graph};
use crate::rings::{center, FiniteRing, RingError, DEFAULT_MAX_ORDER};
use crate::verify::{run_verification, suite_cases};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "ringgraph", about = "Commuting graphs of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// compressed commuting graph
    Lambda,
    /// unital compressed commuting graph
    Lambda1,
    /// classical commuting graph on non-central elements
    Gamma,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Lambda => "lambda",
            Kind::Lambda1 => "lambda1",
            Kind::Gamma => "gamma",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graph and emit it as JSON or DOT
    Compute {
        /// ring descriptor, e.g. gf:2^6, m2:gf:3^1, prod:(gf:2^1,gf:3^1)
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value = "lambda1")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// write the graph here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
        /// skip the result cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Check computed graphs against the closed-form predictions
    Verify {
        /// suite name (table1, fields, products, polyquot, m2, all) or
        /// explicit ring descriptors
        #[arg(required = true)]
        cases: Vec<String>,
        /// also check graph isomorphism against the predicted structure
        #[arg(long)]
        structure: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
        /// print the report as JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Print order, characteristic, unitality and center size of a ring
    Info {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
    },
}

fn ring_error_code(e: &RingError) -> i32 {
    match e {
        RingError::TooLarge { .. } => 3,
        RingError::NotUnital => 4,
        _ => 2,
    }
}

fn parse_descriptor(s: &str) -> Result<RingDescriptor, i32> {
    s.parse().map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn build_ring(desc: &RingDescriptor, max_order: u64) -> Result<FiniteRing, i32> {
    desc.build(max_order).map_err(|e| {
        eprintln!("error: {e}");
        ring_error_code(&e)
    })
}

fn render_compute(ring: &FiniteRing, kind: Kind, format: Format) -> Result<(String, String), i32> {
    match kind {
        Kind::Lambda | Kind::Lambda1 => {
            let unital = kind == Kind::Lambda1;
            let c = compressed_graph(ring, unital).map_err(|e| {
                eprintln!("error: {e}");
                ring_error_code(&e)
            })?;
            let labels = c.labels();
            let output = match format {
                Format::Json => {
                    serde_json::to_string(&c.weighted.to_json(Some(&labels))).expect("serializes")
                }
                Format::Dot => c.graph().to_dot(Some(&labels)),
            };
            let mut weights = c.weights().to_vec();
            weights.sort_unstable_by(|a, b| b.cmp(a));
            let weights: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
            let key = if unital { "v1" } else { "v" };
            let summary =
                format!("{key}={} weights=[{}]", c.vertex_count(), weights.join(","));
            Ok((output, summary))
        }
        Kind::Gamma => {
            let gamma = commuting_graph(ring);
            let labels: Vec<String> = gamma.vertices.iter().map(|v| v.to_string()).collect();
            let output = match format {
                Format::Json => {
                    serde_json::to_string(&gamma.graph.to_json(None, Some(&labels)))
                        .expect("serializes")
                }
                Format::Dot => gamma.graph.to_dot(Some(&labels)),
            };
            let summary = format!(
                "v={} edges={}",
                gamma.graph.vertex_count(),
                gamma.graph.edge_count()
            );
            Ok((output, summary))
        }
    }
}

fn cmd_compute(
    ring: &str,
    kind: Kind,
    format: Format,
    output: Option<PathBuf>,
    max_order: u64,
    no_cache: bool,
) -> i32 {
    let desc = match parse_descriptor(ring) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let canonical = desc.to_string();
    let key = cache_key(&canonical, kind.name(), format.name());
    let cache = Cache::from_env();
    let cached = if no_cache { None } else { cache.get(&key) };
    let (entry, hit) = match cached {
        Some(entry) => (entry, true),
        None => {
            let built = match build_ring(&desc, max_order) {
                Ok(r) => r,
                Err(code) => return code,
            };
            let (out, summary) = match render_compute(&built, kind, format) {
                Ok(pair) => pair,
                Err(code) => return code,
            };
            let entry = CacheEntry { key: key.clone(), summary, output: out };
            if !no_cache {
                if let Err(e) = cache.put(&entry) {
                    eprintln!("warning: cache write failed: {e}");
                }
            }
            (entry, false)
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, entry.output.as_bytes()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => println!("{}", entry.output.trim_end()),
    }
    println!("{} cache={}", entry.summary, if hit { "hit" } else { "miss" });
    0
}

fn cmd_verify(cases: &[String], structure: bool, max_order: u64, json: bool) -> i32 {
    let resolved = if cases.len() == 1 && suite_cases(&cases[0], max_order).is_some() {
        suite_cases(&cases[0], max_order).expect("just checked")
    } else if cases.len() == 1 && cases[0].parse::<RingDescriptor>().is_err() {
        eprintln!("error: unknown suite {:?}", cases[0]);
        return 2;
    } else {
        let mut list = Vec::new();
        for c in cases {
            let desc = match parse_descriptor(c) {
                Ok(d) => d,
                Err(code) => return code,
            };
            list.push((desc.clone(), true));
            list.push((desc, false));
        }
        list
    };
    let report = run_verification(&resolved, structure, max_order);
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializes"));
    } else {
        print!("{}", report.render());
    }
    if report.pass {
        0
    } else {
        1
    }
}

fn cmd_info(ring: &str, max_order: u64) -> i32 {
    let desc = match parse_descriptor(ring) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let built = match build_ring(&desc, max_order) {
        Ok(r) => r,
        Err(code) => return code,
    };
    println!(
        "ring={} order={} characteristic={} unital={} center={}",
        built.descriptor(),
        built.order(),
        built.characteristic(),
        built.is_unital(),
        center(&built).len()
    );
    0
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's help/version on stdout with status 0
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Compute { ring, kind, format, output, max_order, no_cache } => {
            cmd_compute(&ring, kind, format, output, max_order, no_cache)
        }
        Command::Verify { cases, structure, max_order, json } => {
            cmd_verify(&cases, structure, max_order, json)
        }
        Command::Info { ring, max_order } => cmd_info(&ring, max_order),
    }
}
