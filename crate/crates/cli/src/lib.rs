//! Library side of the `bei` command-line tool.
//!
//! [`main_with_args`] does everything the binary does (argument parsing,
//! reading the input, running the command) and returns the exit code together
//! with the bytes destined for standard output and standard error, so the
//! whole tool can be exercised in-process.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use bei_core::cutsets::{self, CutSetRecord};
use bei_core::enumerate::{random_closed, FacetSequenceSpec};
use bei_core::oracle::{oracle_classify_facets, Caps, OracleReport};
use bei_core::{classifier, recognize, Classification, Error, Graph, IntervalFacets};

pub const SCHEMA: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_CLOSED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "bei", version, about = "Binomial edge ideals of closed graphs")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Decide closedness and print the canonical closed labeling.
    Recognize(Common),
    /// Print the interval facets of the canonical closed labeling.
    Facets(Common),
    /// List cut sets with component counts and prime dimensions.
    Cutsets(Common),
    /// Cohen-Macaulay type verdicts from the facet combinatorics.
    Classify(Common),
    /// Verdicts from the Stanley-Reisner complex of the initial ideal.
    Oracle(Common),
    /// Compare classify and oracle, on one input or on every connected
    /// closed graph with `--n` vertices.
    Verify(Common),
    /// List connected closed graphs on `--n` vertices, or one pseudorandom
    /// one when `--seed` is given.
    Enumerate(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Input file (edge list or facet text); `-` reads standard input.
    #[arg(long, value_name = "PATH")]
    input: Option<String>,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain text output (facet text where it applies).
    #[arg(long, alias = "facet-text")]
    text: bool,
    /// Number of vertices for `enumerate` and the `verify` sweep.
    #[arg(long, value_name = "K")]
    n: Option<usize>,
    /// Seed for one pseudorandom graph in `enumerate`.
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    /// Bias of the pseudorandom generator, in [0, 1].
    #[arg(long, default_value_t = 0.5)]
    bias: f64,
    /// Only indecomposable graphs.
    #[arg(long)]
    indecomposable: bool,
    /// Oracle cap on polynomial variables (2n).
    #[arg(long, value_name = "V", default_value_t = Caps::default().max_vars)]
    max_vars: usize,
    /// Oracle cap on faces per homology computation.
    #[arg(long, value_name = "F", default_value_t = Caps::default().max_faces)]
    max_faces: usize,
    /// Extra fields (the Goodarzi verdict next to Duval's).
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Recognize,
    Facets,
    Cutsets,
    Classify,
    Oracle,
    Verify,
    Enumerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
}

/// A fully parsed invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<InputSource>,
    pub mode: OutputMode,
    pub caps: Caps,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub bias: f64,
    pub indecomposable: bool,
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: None,
            mode: OutputMode::Json,
            caps: Caps::default(),
            n: None,
            seed: None,
            bias: 0.5,
            indecomposable: false,
            verbose: false,
        }
    }
}

/// Exit code and captured output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Replaceable pieces of the pipeline (tests swap in a broken classifier to
/// check that `verify` notices).
#[derive(Clone, Copy)]
pub struct Hooks {
    pub classify: fn(&IntervalFacets) -> Classification,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks {
            classify: classifier::classify_facets,
        }
    }
}

/// Parses command-line arguments (including the program name).
pub fn parse_args<I, T>(args: I) -> Result<RunConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                code: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            },
            _ => {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("bad arguments");
                diagnostic(EXIT_INPUT, "usage", first.trim_start_matches("error: "))
            }
        }
    })?;
    let (command, c) = match cli.command {
        CommandArgs::Recognize(c) => (Command::Recognize, c),
        CommandArgs::Facets(c) => (Command::Facets, c),
        CommandArgs::Cutsets(c) => (Command::Cutsets, c),
        CommandArgs::Classify(c) => (Command::Classify, c),
        CommandArgs::Oracle(c) => (Command::Oracle, c),
        CommandArgs::Verify(c) => (Command::Verify, c),
        CommandArgs::Enumerate(c) => (Command::Enumerate, c),
    };
    if c.max_vars == 0 || c.max_faces == 0 {
        return Err(diagnostic(EXIT_INPUT, "usage", "caps must be positive"));
    }
    Ok(RunConfig {
        command,
        input: c.input.map(|p| {
            if p == "-" {
                InputSource::Stdin
            } else {
                InputSource::Path(PathBuf::from(p))
            }
        }),
        mode: if c.text { OutputMode::Text } else { OutputMode::Json },
        caps: Caps {
            max_vars: c.max_vars,
            max_faces: c.max_faces,
        },
        n: c.n,
        seed: c.seed,
        bias: c.bias,
        indecomposable: c.indecomposable,
        verbose: c.verbose,
    })
}

/// Everything the binary does, with `stdin` standing in for standard input.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match parse_args(args) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let input = match &config.input {
        None => Vec::new(),
        Some(InputSource::Stdin) => {
            let mut buf = Vec::new();
            if let Err(e) = stdin.read_to_end(&mut buf) {
                return diagnostic(EXIT_INPUT, "io", &format!("cannot read standard input: {e}"));
            }
            buf
        }
        Some(InputSource::Path(p)) => match std::fs::read(p) {
            Ok(b) => b,
            Err(e) => return diagnostic(EXIT_INPUT, "io", &format!("cannot read {}: {e}", p.display())),
        },
    };
    run(&config, &input)
}

/// Runs one command on already loaded input bytes.
pub fn run(config: &RunConfig, input: &[u8]) -> Outcome {
    run_with(config, input, Hooks::default())
}

pub fn run_with(config: &RunConfig, input: &[u8], hooks: Hooks) -> Outcome {
    let result = match config.command {
        Command::Enumerate => cmd_enumerate(config),
        Command::Verify if config.input.is_none() && config.n.is_some() => cmd_verify_sweep(config, hooks),
        _ => parse_input(config, input).and_then(|parsed| match config.command {
            Command::Recognize => cmd_recognize(config, &parsed),
            Command::Facets => cmd_facets(config, &parsed),
            Command::Cutsets => cmd_cutsets(config, &parsed),
            Command::Classify => cmd_classify(config, &parsed, hooks),
            Command::Oracle => cmd_oracle(config, &parsed),
            Command::Verify => cmd_verify_one(config, &parsed, hooks),
            Command::Enumerate => unreachable!(),
        }),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Diagnostic<'a> {
    schema: &'static str,
    error: &'a str,
    exit: i32,
    message: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<[usize; 3]>,
}

/// Single-line JSON diagnostic on the error stream.
fn diagnostic(code: i32, kind: &str, message: &str) -> Outcome {
    diagnostic_with(code, kind, message, None)
}

fn diagnostic_with(code: i32, kind: &str, message: &str, obstruction: Option<[usize; 3]>) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: to_json(&Diagnostic {
            schema: SCHEMA,
            error: kind,
            exit: code,
            message: &message.replace('\n', " "),
            obstruction,
        }),
    }
}

fn from_error(e: &Error) -> Outcome {
    let (code, kind) = match e {
        Error::Input(_) | Error::Precondition(_) => (EXIT_INPUT, "input"),
        Error::NotClosed(_) | Error::NotClosedLabeling { .. } => (EXIT_NOT_CLOSED, "not_closed"),
        Error::Resource { .. } => (EXIT_RESOURCE, "resource"),
    };
    let obstruction = match e {
        Error::NotClosedLabeling { u, v, w } => Some([*u, *v, *w]),
        _ => None,
    };
    diagnostic_with(code, kind, &e.to_string(), obstruction)
}

/// Parsed input: a plain graph, or a closed graph given by facets (whose
/// labeling is taken as is).
enum Parsed {
    Graph(Graph),
    Facets(IntervalFacets),
}

fn parse_input(config: &RunConfig, input: &[u8]) -> Result<Parsed, Outcome> {
    if config.input.is_none() {
        return Err(diagnostic(EXIT_INPUT, "usage", "this command needs --input PATH (or - for standard input)"));
    }
    let text = std::str::from_utf8(input).map_err(|_| diagnostic(EXIT_INPUT, "input", "input is not UTF-8"))?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if header.split_whitespace().next() == Some("closed") {
        IntervalFacets::parse_facet_text(text)
            .map(Parsed::Facets)
            .map_err(|e| from_error(&e))
    } else {
        Graph::parse_edge_list(text)
            .map(Parsed::Graph)
            .map_err(|e| from_error(&e))
    }
}

/// Closed labeling and facets; the labeling is the identity for facet input.
fn closed_of(parsed: &Parsed) -> Result<(Vec<usize>, IntervalFacets), Outcome> {
    match parsed {
        Parsed::Facets(f) => Ok(((1..=f.n()).collect(), f.clone())),
        Parsed::Graph(g) => match recognize(g) {
            Ok(form) => Ok((form.labeling.permutation, form.facets)),
            Err(ob) => Err(diagnostic_with(
                EXIT_NOT_CLOSED,
                "not_closed",
                &format!("graph is not closed: {ob}"),
                Some([ob.u, ob.v, ob.w]),
            )),
        },
    }
}

#[derive(Serialize)]
struct RecognizeOut<'a> {
    schema: &'static str,
    closed: bool,
    n: usize,
    labeling: &'a [usize],
    facets: &'a [(usize, usize)],
    facet_text: String,
}

fn cmd_recognize(config: &RunConfig, parsed: &Parsed) -> CmdResult {
    let (labeling, f) = closed_of(parsed)?;
    match config.mode {
        OutputMode::Text => {
            let mut s = format!("closed labeling (old -> new): {labeling:?}\n");
            s.push_str(&f.to_facet_text());
            ok(s)
        }
        OutputMode::Json => ok(to_json(&RecognizeOut {
            schema: SCHEMA,
            closed: true,
            n: f.n(),
            labeling: &labeling,
            facets: f.facets(),
            facet_text: f.to_facet_text(),
        })),
    }
}

#[derive(Serialize)]
struct FacetsOut<'a> {
    schema: &'static str,
    n: usize,
    facets: &'a [(usize, usize)],
}

fn cmd_facets(config: &RunConfig, parsed: &Parsed) -> CmdResult {
    let (_, f) = closed_of(parsed)?;
    match config.mode {
        OutputMode::Text => ok(f.to_facet_text()),
        OutputMode::Json => ok(to_json(&FacetsOut {
            schema: SCHEMA,
            n: f.n(),
            facets: f.facets(),
        })),
    }
}

#[derive(Serialize)]
struct CutSetOut {
    #[serde(rename = "W")]
    w: Vec<usize>,
    c: usize,
    dim: usize,
}

#[derive(Serialize)]
struct CutsetsOut {
    schema: &'static str,
    n: usize,
    method: &'static str,
    cutsets: Vec<CutSetOut>,
    krull_dim: usize,
    unmixed: bool,
}

fn cmd_cutsets(config: &RunConfig, parsed: &Parsed) -> CmdResult {
    // closed graphs use the interval structure, mapped back to the caller's labels
    let (n, method, records): (usize, &'static str, Vec<CutSetRecord>) = match parsed {
        Parsed::Facets(f) => (f.n(), "structural", cutsets::cutsets_closed(f).map_err(|e| from_error(&e))?),
        Parsed::Graph(g) => match recognize(g) {
            Ok(form) => {
                let inverse = form.labeling.inverse();
                let mut recs = cutsets::cutsets_closed(&form.facets).map_err(|e| from_error(&e))?;
                for r in &mut recs {
                    r.w = r.w.iter().map(|&v| inverse[v - 1]).collect();
                    r.w.sort_unstable();
                }
                recs.sort_by(|a, b| a.w.cmp(&b.w));
                (g.n(), "structural", recs)
            }
            Err(_) => (g.n(), "bruteforce", cutsets::cutsets_bruteforce(g).map_err(|e| from_error(&e))?),
        },
    };
    let krull_dim = cutsets::krull_dimension(&records, n).map_err(|e| from_error(&e))?;
    let unmixed = cutsets::is_unmixed(&records);
    match config.mode {
        OutputMode::Text => {
            let mut s = String::new();
            for r in &records {
                s.push_str(&format!("W={:?} c={} dim={}\n", r.w, r.c, r.dim));
            }
            s.push_str(&format!("krull_dim={krull_dim} unmixed={unmixed}\n"));
            ok(s)
        }
        OutputMode::Json => ok(to_json(&CutsetsOut {
            schema: SCHEMA,
            n,
            method,
            cutsets: records
                .into_iter()
                .map(|r| CutSetOut {
                    w: r.w,
                    c: r.c,
                    dim: r.dim,
                })
                .collect(),
            krull_dim,
            unmixed,
        })),
    }
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    schema: &'static str,
    closed: bool,
    labeling: &'a [usize],
    facets: &'a IntervalFacets,
    blocks: &'a [bei_core::Segment],
    components: usize,
    unmixed: bool,
    cm: bool,
    scm: bool,
    scm_witness_k: &'a [Option<usize>],
    almost_cm: bool,
    approx_cm: bool,
    dim: usize,
}

fn classify_parsed(parsed: &Parsed, hooks: Hooks) -> Result<(Vec<usize>, Classification), Outcome> {
    let (labeling, f) = closed_of(parsed)?;
    Ok((labeling, (hooks.classify)(&f)))
}

fn cmd_classify(config: &RunConfig, parsed: &Parsed, hooks: Hooks) -> CmdResult {
    let (labeling, c) = classify_parsed(parsed, hooks)?;
    match config.mode {
        OutputMode::Text => ok(format!(
            "{}cm={} scm={} almost_cm={} approx_cm={} unmixed={} dim={}\n",
            c.facets.to_facet_text(),
            c.cm,
            c.scm,
            c.almost_cm,
            c.approx_cm,
            c.unmixed,
            c.krull_dim
        )),
        OutputMode::Json => ok(to_json(&ClassifyOut {
            schema: SCHEMA,
            closed: true,
            labeling: &labeling,
            facets: &c.facets,
            blocks: &c.blocks,
            components: c.components,
            unmixed: c.unmixed,
            cm: c.cm,
            scm: c.scm,
            scm_witness_k: &c.scm_witness_k_per_block,
            almost_cm: c.almost_cm,
            approx_cm: c.approx_cm,
            dim: c.krull_dim,
        })),
    }
}

#[derive(Serialize)]
struct OracleOut {
    schema: &'static str,
    dim: usize,
    depth: usize,
    cm: bool,
    scm: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    scm_goodarzi: Option<bool>,
    almost_cm: bool,
    approx_cm: bool,
    method: &'static str,
    certification: &'static str,
    coefficients: &'static str,
}

fn oracle_out(r: &OracleReport, verbose: bool) -> OracleOut {
    OracleOut {
        schema: SCHEMA,
        dim: r.dim_quotient,
        depth: r.depth,
        cm: r.cm,
        scm: r.scm,
        scm_goodarzi: verbose.then_some(r.scm_goodarzi),
        almost_cm: r.almost_cm,
        approx_cm: r.approx_cm,
        method: "squarefree-degeneration",
        certification: "certified-via-degeneration",
        coefficients: "rationals",
    }
}

fn cmd_oracle(config: &RunConfig, parsed: &Parsed) -> CmdResult {
    let (_, f) = closed_of(parsed)?;
    let r = oracle_classify_facets(&f, config.caps).map_err(|e| from_error(&e))?;
    match config.mode {
        OutputMode::Text => ok(format!(
            "dim={} depth={} cm={} scm={} almost_cm={} approx_cm={}\n",
            r.dim_quotient, r.depth, r.cm, r.scm, r.almost_cm, r.approx_cm
        )),
        OutputMode::Json => ok(to_json(&oracle_out(&r, config.verbose))),
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub facets: Vec<(usize, usize)>,
    pub field: &'static str,
    pub classifier: String,
    pub oracle: String,
}

/// Fields on which classifier and oracle disagree.
fn compare(f: &IntervalFacets, c: &Classification, r: &OracleReport) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    let mut check = |field: &'static str, a: String, b: String| {
        if a != b {
            out.push(Discrepancy {
                facets: f.facets().to_vec(),
                field,
                classifier: a,
                oracle: b,
            });
        }
    };
    check("dim", c.krull_dim.to_string(), r.dim_quotient.to_string());
    check("cm", c.cm.to_string(), r.cm.to_string());
    check("scm", c.scm.to_string(), r.scm.to_string());
    check("scm_goodarzi", c.scm.to_string(), r.scm_goodarzi.to_string());
    check("almost_cm", c.almost_cm.to_string(), r.almost_cm.to_string());
    check("approx_cm", c.approx_cm.to_string(), r.approx_cm.to_string());
    // two cliques [1, b] and [a, n]: depth n + a - b + 1
    if let [(1, b), (a, n)] = *f.facets() {
        if a <= b {
            check("depth", (n + a - b + 1).to_string(), r.depth.to_string());
        }
    }
    out
}

#[derive(Serialize)]
struct VerifyOut {
    schema: &'static str,
    agree: bool,
    checked: usize,
    fields: [&'static str; 7],
    discrepancies: Vec<Discrepancy>,
}

const VERIFY_FIELDS: [&str; 7] = ["dim", "cm", "scm", "scm_goodarzi", "almost_cm", "approx_cm", "depth"];

fn verify_outcome(config: &RunConfig, checked: usize, discrepancies: Vec<Discrepancy>) -> CmdResult {
    let agree = discrepancies.is_empty();
    let stdout = match config.mode {
        OutputMode::Text => {
            let mut s = format!("checked={checked} agree={agree}\n");
            for d in &discrepancies {
                s.push_str(&format!(
                    "mismatch {:?} {}: classifier={} oracle={}\n",
                    d.facets, d.field, d.classifier, d.oracle
                ));
            }
            s
        }
        OutputMode::Json => to_json(&VerifyOut {
            schema: SCHEMA,
            agree,
            checked,
            fields: VERIFY_FIELDS,
            discrepancies: discrepancies.clone(),
        }),
    };
    if agree {
        ok(stdout)
    } else {
        let first = &discrepancies[0];
        let mut o = diagnostic(
            EXIT_MISMATCH,
            "mismatch",
            &format!(
                "{} disagreement(s); first: {:?} field {} classifier={} oracle={}",
                discrepancies.len(),
                first.facets,
                first.field,
                first.classifier,
                first.oracle
            ),
        );
        o.stdout = stdout;
        Err(o)
    }
}

fn cmd_verify_one(config: &RunConfig, parsed: &Parsed, hooks: Hooks) -> CmdResult {
    let (_, f) = closed_of(parsed)?;
    let c = (hooks.classify)(&f);
    let r = oracle_classify_facets(&f, config.caps).map_err(|e| from_error(&e))?;
    verify_outcome(config, 1, compare(&f, &c, &r))
}

fn cmd_verify_sweep(config: &RunConfig, hooks: Hooks) -> CmdResult {
    let n = config.n.expect("checked by caller");
    if n == 0 {
        return Err(diagnostic(EXIT_INPUT, "usage", "--n must be at least 1"));
    }
    let spec = FacetSequenceSpec {
        indecomposable_only: config.indecomposable,
        ..FacetSequenceSpec::new(n)
    };
    let mut checked = 0;
    let mut discrepancies = Vec::new();
    for f in spec.stream() {
        let c = (hooks.classify)(&f);
        let r = oracle_classify_facets(&f, config.caps).map_err(|e| from_error(&e))?;
        discrepancies.extend(compare(&f, &c, &r));
        checked += 1;
    }
    verify_outcome(config, checked, discrepancies)
}

#[derive(Serialize)]
struct EnumerateOut {
    schema: &'static str,
    n: usize,
    indecomposable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    count: usize,
    graphs: Vec<Vec<(usize, usize)>>,
}

fn cmd_enumerate(config: &RunConfig) -> CmdResult {
    let n = config
        .n
        .ok_or_else(|| diagnostic(EXIT_INPUT, "usage", "enumerate needs --n K"))?;
    if n == 0 {
        return Err(diagnostic(EXIT_INPUT, "usage", "--n must be at least 1"));
    }
    let graphs: Vec<IntervalFacets> = match config.seed {
        Some(seed) => vec![random_closed(n, seed, config.bias)],
        None => {
            let spec = FacetSequenceSpec {
                indecomposable_only: config.indecomposable,
                ..FacetSequenceSpec::new(n)
            };
            spec.stream().collect()
        }
    };
    match config.mode {
        OutputMode::Text => ok(graphs.iter().map(|f| f.to_facet_text()).collect::<Vec<_>>().join("\n")),
        OutputMode::Json => ok(to_json(&EnumerateOut {
            schema: SCHEMA,
            n,
            indecomposable: config.indecomposable,
            seed: config.seed,
            count: graphs.len(),
            graphs: graphs.iter().map(|f| f.facets().to_vec()).collect(),
        })),
    }
}
