use std::path::{Path, PathBuf};
use std::process::ExitCode;

use binedge::admissible::{basis_stats, groebner_basis};
use binedge::betti::{beta13_of_star, verify_tree_basis_size, verify_basis_size_formula};
use binedge::buchberger::{admissible_polynomials, edge_generators, reduced_groebner_with, Strategy, DEFAULT_STEP_GUARD};
use binedge::caterpillar::{
    two_phase_labeling, bridge_labeling, compose_t1_b_t2, sweep_labeling, Variant,
};
use binedge::closedness::{
    closure_number, cycle_closure_formula, cycle_labeling, is_closed_labeling, is_weakly_closed,
    is_weakly_closed_labeling, m_of_labeling, tree_is_3closed,
};
use binedge::corpus;
use binedge::io::{parse_graph, Format};
use binedge::primes::{caterpillar_minimal_primes, krull_dimension, minimal_primes};
use binedge::verify::{run_all, run_check, CheckResult, VerifyConfig};
use binedge::{Error, Graph, Labeling};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "binedge", version, about = "Binomial edge ideals of graphs: bases, closure numbers, primes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file (JSON or edge list), a bundled instance name such as
    /// `fig2.json`, or inline JSON.
    #[arg(long, short)]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
    /// Relabel the graph first: comma-separated new labels of vertices 1..n.
    #[arg(long)]
    labeling: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Machine-readable JSON report.
    #[arg(long)]
    json: bool,
    /// Indented JSON (implies --json).
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Json,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Sweep,
    #[value(alias = "alg1")]
    TwoPhase,
    Bridge,
    T1bt2,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    PathStart,
    LeafStart,
    AssignN,
}

#[derive(Subcommand)]
enum Command {
    /// Structure summary, basis statistics and closedness of the given labeling.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// The reduced Gröbner basis from admissible paths.
    Groebner {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Print the expanded binomials.
        #[arg(long)]
        expanded: bool,
        /// Cross-check against the Buchberger engine.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_STEP_GUARD)]
        step_guard: usize,
    },
    /// Exact closure number over all labelings.
    Mclosed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = binedge::closedness::DEFAULT_MAX_N)]
        max_n: usize,
        /// Disable the symmetry pruning of the first label.
        #[arg(long)]
        no_prune: bool,
    },
    /// Whether the current labeling is closed.
    ClosedCheck {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Whether some labeling is weakly closed.
    WeaklyClosed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = binedge::closedness::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Whether a tree has a labeling with d(i, i+1) <= 2.
    Tree3 {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Caterpillar labelings.
    Label {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, value_enum, default_value_t = Algo::Sweep)]
        algo: Algo,
        /// Start vertex for two-phase.
        #[arg(long)]
        start: Option<usize>,
        #[arg(long, value_enum, default_value_t = VariantArg::PathStart)]
        variant: VariantArg,
        /// Bridge edge `u,v` for the bridge algorithm.
        #[arg(long)]
        bridge: Option<String>,
        /// Middle caterpillar for t1bt2.
        #[arg(long)]
        middle: Option<String>,
        /// Right caterpillar for t1bt2.
        #[arg(long)]
        right: Option<String>,
        /// Joins `u,p,q,w` for t1bt2.
        #[arg(long)]
        joins: Option<String>,
    },
    /// The cycle labeling attaining the closure number of C_n.
    CycleLabel {
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal prime components.
    Primes {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = binedge::primes::DEFAULT_MAX_N)]
        max_n: usize,
        /// Use the central-path rule for caterpillars.
        #[arg(long)]
        caterpillar: bool,
    },
    /// Krull dimension of R / J_G.
    Dim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = binedge::primes::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// beta_{1,3} of the star transform and the basis-size identities.
    Betti {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Check |G| = n - 1 + beta_{1,3} (trees).
        #[arg(long, alias = "cor37")]
        tree: bool,
        /// Check |G| = |E| + beta_{1,3} - 2 K_3 (basis degree <= 3).
        #[arg(long)]
        general: bool,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        out: Output,
        /// Every check.
        #[arg(long)]
        all: bool,
        /// Only the Buchberger oracle check.
        #[arg(long)]
        oracle: bool,
        /// Single check by number (1..=12).
        #[arg(long)]
        check: Option<u8>,
        /// Caps the exhaustive corpus sizes.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Usage(String),
    Verification(Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<Report, Failure>;

struct Report {
    command: &'static str,
    guards: Value,
    result: Value,
    human: String,
}

impl Report {
    fn new(command: &'static str, result: Value, human: String) -> Self {
        Report {
            command,
            guards: json!({}),
            result,
            human,
        }
    }

    fn guards(mut self, guards: Value) -> Self {
        self.guards = guards;
        self
    }

    fn envelope(&self) -> Value {
        json!({
            "tool": "binedge",
            "version": VERSION,
            "command": self.command,
            "guards": self.guards,
            "result": self.result,
        })
    }
}

fn load(spec: &str, format: FormatArg) -> Result<Graph, Failure> {
    let format = match format {
        FormatArg::Auto => Format::Auto,
        FormatArg::Json => Format::Json,
        FormatArg::Edges => Format::Edges,
    };
    let trimmed = spec.trim_start();
    if trimmed.starts_with('{') {
        return Ok(parse_graph(spec, format)?);
    }
    let path = PathBuf::from(spec);
    if path.exists() {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Io(format!("{spec}: {e}")))?;
        return Ok(parse_graph(&text, format)?);
    }
    let name = Path::new(spec).file_name().and_then(|s| s.to_str()).unwrap_or(spec);
    corpus::bundled(name).ok_or_else(|| Failure::Io(format!("{spec}: no such file or bundled instance")))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad {what}: {text}"))))
        .collect()
}

fn graph_of(input: &Input) -> Result<Graph, Failure> {
    let g = load(&input.input, input.format)?;
    match &input.labeling {
        None => Ok(g),
        Some(text) => {
            let lab = Labeling::new(parse_list(text, "labeling")?)?;
            Ok(g.relabel(&lab)?)
        }
    }
}

fn set_text(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn labels_text(lab: &Labeling) -> String {
    lab.as_slice()
        .iter()
        .enumerate()
        .map(|(k, l)| format!("{}->{l}", k + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(input: &Input) -> Outcome {
    let g = graph_of(input)?;
    let class = g.classify();
    let basis = groebner_basis(&g);
    let stats = basis_stats(&basis);
    let closed = is_closed_labeling(&g);
    let weakly = is_weakly_closed_labeling(&g);
    let mut human = format!(
        "n = {}, edges = {}, connected = {}, tree = {}, path = {}, cycle = {}, caterpillar = {}, triangles = {}\n",
        class.n, class.edges, class.is_connected, class.is_tree, class.is_path, class.is_cycle, class.is_caterpillar, class.triangles
    );
    human += &format!("basis size = {}, max degree = {}\n", stats.size, stats.max_degree);
    human += &format!("closed labeling = {closed}, weakly closed labeling = {weakly}");
    Ok(Report::new(
        "analyze",
        json!({ "classification": class, "basis": stats, "closed_labeling": closed, "weakly_closed_labeling": weakly }),
        human,
    ))
}

fn groebner(input: &Input, expanded: bool, oracle: bool, step_guard: usize) -> Outcome {
    let g = graph_of(input)?;
    let basis = groebner_basis(&g);
    let stats = basis_stats(&basis);
    let texts: Vec<String> = basis
        .iter()
        .map(|e| if expanded { e.expanded_text() } else { e.to_string() })
        .collect();
    let mut human = texts.join("\n");
    if !human.is_empty() {
        human.push('\n');
    }
    human += &format!("size = {}, max degree = {}", stats.size, stats.max_degree);
    let mut result = json!({ "elements": basis, "text": texts, "stats": stats });
    if oracle {
        let run = reduced_groebner_with(&edge_generators(&g), step_guard, Strategy::Normal)?;
        let matches = run.basis == admissible_polynomials(&g);
        result["oracle"] = json!({
            "matches": matches,
            "steps": run.steps,
            "non_unit_binomials": run.non_unit_binomials,
            "text": run.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        });
        human += &format!("\noracle: {} ({} S-pair reductions)", if matches { "agrees" } else { "DISAGREES" }, run.steps);
        if !matches {
            let report = Report::new("groebner", result, human).guards(json!({ "step_guard": step_guard }));
            return Err(Failure::Verification(report.envelope(), report.human));
        }
    }
    Ok(Report::new("groebner", result, human).guards(json!({ "step_guard": step_guard })))
}

fn mclosed(input: &Input, max_n: usize, prune: bool) -> Outcome {
    let g = graph_of(input)?;
    let r = closure_number(&g, max_n, prune)?;
    let human = format!(
        "m = {}\nwitness: {}\nsearched {} partial labelings",
        r.m,
        labels_text(&r.witness),
        r.searched
    );
    Ok(Report::new("mclosed", json!(r), human).guards(json!({ "max_n": max_n })))
}

fn closed_check(input: &Input) -> Outcome {
    let g = graph_of(input)?;
    let closed = is_closed_labeling(&g);
    let m = m_of_labeling(&g)?;
    let human = format!("closed = {closed}\nmax admissible degree = {m}");
    Ok(Report::new("closed-check", json!({ "closed": closed, "m": m }), human))
}

fn weakly_closed(input: &Input, max_n: usize) -> Outcome {
    let g = graph_of(input)?;
    let r = is_weakly_closed(&g, max_n)?;
    let mut human = format!("weakly closed = {}", r.answer);
    if let Some(w) = &r.witness {
        human += &format!("\nwitness: {}", labels_text(w));
    }
    Ok(Report::new("weakly-closed", json!(r), human).guards(json!({ "max_n": max_n })))
}

fn tree3(input: &Input) -> Outcome {
    let g = graph_of(input)?;
    let r = tree_is_3closed(&g)?;
    let mut human = format!("3-closed = {}", r.answer);
    if let Some(w) = &r.witness {
        human += &format!("\nwitness: {}", labels_text(w));
    }
    Ok(Report::new("tree3", json!(r), human))
}

fn need<'a>(o: Option<&'a str>, flag: &str) -> Result<&'a str, Failure> {
    o.ok_or_else(|| Failure::Usage(format!("{flag} is required for t1bt2")))
}

fn pair(text: &str) -> Result<(usize, usize), Failure> {
    match parse_list(text, "vertex pair")?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(Failure::Usage(format!("expected two vertices: {text}"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn label(
    input: &Input,
    algo: Algo,
    start: Option<usize>,
    variant: VariantArg,
    bridge: Option<&str>,
    middle: Option<&str>,
    right: Option<&str>,
    joins: Option<&str>,
) -> Outcome {
    let g = graph_of(input)?;
    let (graph, lab, extra) = match algo {
        Algo::Sweep => (g.clone(), sweep_labeling(&g)?, json!({})),
        Algo::TwoPhase => {
            let start = start.ok_or_else(|| Failure::Usage("--start is required for two-phase".into()))?;
            let variant = match variant {
                VariantArg::PathStart => Variant::PathStart,
                VariantArg::LeafStart => Variant::LeafStart,
                VariantArg::AssignN => Variant::AssignN,
            };
            (g.clone(), two_phase_labeling(&g, start, variant)?, json!({ "start": start, "variant": variant }))
        }
        Algo::Bridge => {
            let e = pair(bridge.ok_or_else(|| Failure::Usage("--bridge u,v is required".into()))?)?;
            (g.clone(), bridge_labeling(&g, e)?, json!({ "bridge": [e.0, e.1] }))
        }
        Algo::T1bt2 => {
            let b = load(need(middle, "--middle")?, input.format)?;
            let t2 = load(need(right, "--right")?, input.format)?;
            let j = parse_list(need(joins, "--joins")?, "joins")?;
            let [u, p, q, w] = j[..] else {
                return Err(Failure::Usage("--joins takes u,p,q,w".into()));
            };
            let c = compose_t1_b_t2(&g, &b, &t2, [(u, p), (q, w)])?;
            let extra = json!({ "edges": c.graph.edges(), "n": c.graph.n(), "reassigned": c.reassigned });
            (c.graph, c.labeling, extra)
        }
    };
    let relabeled = graph.relabel(&lab)?;
    let m = m_of_labeling(&relabeled)?;
    let within_two = relabeled.consecutive_labels_within_two();
    let human = format!(
        "{}\nd(i, i+1) <= 2 for all i: {within_two}\nmax admissible degree = {m}",
        serde_json::to_string(&lab).expect("labeling serializes")
    );
    Ok(Report::new(
        "label",
        json!({ "labeling": lab, "max_admissible_degree": m, "consecutive_within_two": within_two, "details": extra }),
        human,
    ))
}

fn cycle_label(n: usize) -> Outcome {
    let lab = cycle_labeling(n)?;
    let c = Graph::cycle(n)?;
    let m = m_of_labeling(&c.relabel(&lab)?)?;
    let human = format!(
        "{}\nmax admissible degree = {m} (closure number {})",
        serde_json::to_string(&lab).expect("labeling serializes"),
        cycle_closure_formula(n)
    );
    Ok(Report::new(
        "cycle-label",
        json!({ "n": n, "labeling": lab, "max_admissible_degree": m, "closure_number": cycle_closure_formula(n) }),
        human,
    ))
}

fn primes(input: &Input, max_n: usize, caterpillar: bool) -> Outcome {
    let g = graph_of(input)?;
    let list = if caterpillar {
        caterpillar_minimal_primes(&g)?
    } else {
        minimal_primes(&g, max_n)?
    };
    let human = list.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
    let sets: Vec<String> = list.iter().map(|p| set_text(&p.s)).collect();
    Ok(Report::new("primes", json!({ "count": list.len(), "primes": list, "cut_sets": sets }), human)
        .guards(json!({ "max_n": max_n })))
}

fn dim(input: &Input, max_n: usize) -> Outcome {
    let g = graph_of(input)?;
    let r = krull_dimension(&g, max_n)?;
    let human = format!("{}\nwitness: {}", r.dim, r.witness);
    Ok(Report::new("dim", json!(r), human).guards(json!({ "max_n": max_n })))
}

fn betti(input: &Input, tree: bool, general: bool) -> Outcome {
    let g = graph_of(input)?;
    let cert = beta13_of_star(&g);
    let mut human = format!("beta_13 = {}", cert.beta13);
    let mut result = json!({ "certificate": cert });
    let mut failed = false;
    for (flag, name, check) in [
        (tree, "tree", verify_tree_basis_size as fn(&Graph) -> binedge::Result<_>),
        (general, "general", verify_basis_size_formula),
    ] {
        if flag {
            let r = check(&g)?;
            human += &format!("\n{name}: |G| = {} vs {} -> {}", r.lhs, r.rhs, if r.equal { "equal" } else { "DIFFERENT" });
            failed |= !r.equal;
            result[name] = json!(r);
        }
    }
    let report = Report::new("betti", result, human);
    if failed {
        return Err(Failure::Verification(report.envelope(), report.human));
    }
    Ok(report)
}

fn verify_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = match (r.passed, r.complete()) {
            (true, true) => "PASS",
            (true, false) => "PASS (partial)",
            _ => "FAIL",
        };
        out += &format!("{:>2}  {:<48} {:<15} {:>8} cases {:>7} ms\n", r.id, r.title, status, r.cases, r.elapsed_ms);
        for f in &r.failures {
            out += &format!("      failure: {f}\n");
        }
        for s in &r.skipped {
            out += &format!("      skipped: {s}\n");
        }
    }
    out.trim_end().to_string()
}

fn verify(all: bool, oracle: bool, check: Option<u8>, max_n: Option<usize>, seed: u64) -> Outcome {
    let cfg = VerifyConfig {
        seed,
        max_n,
        ..Default::default()
    };
    let results = match (all, oracle, check) {
        (true, false, None) => run_all(&cfg),
        (false, true, None) => vec![run_check(6, &cfg).unwrap()],
        (false, false, Some(id)) => {
            vec![run_check(id, &cfg).ok_or_else(|| Failure::Usage(format!("no check numbered {id}")))?]
        }
        (false, false, None) => return Err(Failure::Usage("choose --all, --oracle or --check N".into())),
        _ => return Err(Failure::Usage("--all, --oracle and --check are exclusive".into())),
    };
    let passed = results.iter().all(|r| r.passed);
    let complete = results.iter().all(CheckResult::complete);
    let report = Report::new(
        "verify",
        json!({ "config": cfg, "passed": passed, "complete": complete, "checks": results }),
        verify_table(&results),
    )
    .guards(json!({ "max_n": max_n, "seed": seed }));
    if passed {
        Ok(report)
    } else {
        Err(Failure::Verification(report.envelope(), report.human))
    }
}

fn dispatch(cmd: Command) -> (Output, Outcome) {
    match cmd {
        Command::Analyze { input, out } => (out, analyze(&input)),
        Command::Groebner { input, out, expanded, oracle, step_guard } => (out, groebner(&input, expanded, oracle, step_guard)),
        Command::Mclosed { input, out, max_n, no_prune } => (out, mclosed(&input, max_n, !no_prune)),
        Command::ClosedCheck { input, out } => (out, closed_check(&input)),
        Command::WeaklyClosed { input, out, max_n } => (out, weakly_closed(&input, max_n)),
        Command::Tree3 { input, out } => (out, tree3(&input)),
        Command::Label { input, out, algo, start, variant, bridge, middle, right, joins } => (
            out,
            label(&input, algo, start, variant, bridge.as_deref(), middle.as_deref(), right.as_deref(), joins.as_deref()),
        ),
        Command::CycleLabel { n, out } => (out, cycle_label(n)),
        Command::Primes { input, out, max_n, caterpillar } => (out, primes(&input, max_n, caterpillar)),
        Command::Dim { input, out, max_n } => (out, dim(&input, max_n)),
        Command::Betti { input, out, tree, general } => (out, betti(&input, tree, general)),
        Command::Verify { out, all, oracle, check, max_n, seed } => (out, verify(all, oracle, check, max_n, seed)),
    }
}

fn emit(out: Output, value: &Value, human: &str) {
    if out.pretty {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else if out.json {
        println!("{}", serde_json::to_string(value).expect("report serializes"));
    } else {
        println!("{human}");
    }
}

fn emit_error(out: Output, kind: &str, message: &str) {
    if out.json || out.pretty {
        let v = json!({ "tool": "binedge", "version": VERSION, "error": { "kind": kind, "message": message } });
        println!("{v}");
    }
    eprintln!("error: {message}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (out, outcome) = dispatch(cli.command);
    match outcome {
        Ok(report) => {
            emit(out, &report.envelope(), &report.human);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(value, human)) => {
            emit(out, &value, &human);
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            let (kind, code) = if e.is_parse() {
                ("parse", 65)
            } else if e.is_guard() {
                ("guard", 2)
            } else {
                ("domain", 1)
            };
            emit_error(out, kind, &e.to_string());
            ExitCode::from(code)
        }
        Err(Failure::Io(msg)) => {
            emit_error(out, "io", &msg);
            ExitCode::from(66)
        }
        Err(Failure::Usage(msg)) => {
            emit_error(out, "usage", &msg);
            ExitCode::from(64)
        }
    }
}
