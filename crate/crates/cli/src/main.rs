//! `lcord`: command-line front end for the legendre-cordial library.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or invalid input,
//! 3 hypothesis or admission failure, 4 search found nothing,
//! 5 search budget exhausted, 6 internal consistency failure.
//! Errors are written to stderr as `{"error": kind, "message": text}`.

mod args;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use args::{BudgetArgs, Cli, Command, ConstructArgs, Format, SearchArgs, SearchMode};
use clap::error::ErrorKind;
use clap::Parser;
use legendre_cordial::constructors::RecipeFile;
use legendre_cordial::labeling::{induced_tally, is_cordial, LabelingFile, VerificationReport};
use legendre_cordial::products::Operation;
use legendre_cordial::search::{
    find_base_labelings, search_labeling, BaseSearch, Budget, Mode, Objective, Outcome, SearchReport, SearchSpec,
};
use legendre_cordial::{Construction, ConstructionRecipe, Error, Family, Graph, Labeling, LegendreContext};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Io,
    Usage,
    Hypothesis,
    SearchNone,
    BudgetExhausted,
    Internal,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Io => "io",
            Kind::Usage => "usage",
            Kind::Hypothesis => "hypothesis",
            Kind::SearchNone => "search-none",
            Kind::BudgetExhausted => "budget-exhausted",
            Kind::Internal => "internal",
        }
    }

    fn code(self) -> u8 {
        match self {
            Kind::Io => 1,
            Kind::Usage => 2,
            Kind::Hypothesis => 3,
            Kind::SearchNone => 4,
            Kind::BudgetExhausted => 5,
            Kind::Internal => 6,
        }
    }
}

#[derive(Debug)]
struct Failure {
    kind: Kind,
    message: String,
}

impl Failure {
    fn new(kind: Kind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Disconnected | Error::ConnectivityViolation { .. } | Error::HypothesisViolation { .. } => {
                Kind::Hypothesis
            }
            Error::PredictionMismatch { .. } => Kind::Internal,
            _ => Kind::Usage,
        };
        Failure::new(kind, e.to_string())
    }
}

type CmdResult = Result<Emitted, Failure>;

/// Rendered output plus the exit status it carries.
struct Emitted {
    text: String,
    status: Option<Failure>,
}

impl Emitted {
    fn ok(text: String) -> Self {
        Self { text, status: None }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::new(Kind::Usage, e.render().to_string().trim_end())),
    };
    match run(&cli).and_then(|emitted| {
        write_output(cli.out.as_deref(), &emitted.text)?;
        Ok(emitted.status)
    }) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(status)) | Err(status) => report(status),
    }
}

fn report(f: Failure) -> ExitCode {
    let body = serde_json::json!({ "error": f.kind.name(), "message": f.message });
    eprintln!("{body}");
    ExitCode::from(f.kind.code())
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(Kind::Io, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Gen { family } => {
            let g = family.parse::<Family>()?.build()?;
            render_graph(&g, cli.format, None)
        }
        Command::Op { op, g1, g2 } => cmd_op(*op, &load_graph(g1)?, &load_graph(g2)?, cli.format),
        Command::Construct(args) => cmd_construct(args, cli.format),
        Command::Verify { graph, labeling, p } => cmd_verify(graph, labeling, *p, cli.format),
        Command::Search(args) => cmd_search(args, cli.format),
        Command::Legendre { a, p, p_flag } => {
            let p = p.or(*p_flag).expect("enforced by clap");
            let ctx = LegendreContext::new(p)?;
            let symbol = ctx.symbol(*a);
            match cli.format {
                Format::Json => Ok(Emitted::ok(symbol.to_string())),
                Format::Table => Ok(Emitted::ok(format!("({a}/{p}) = {symbol}"))),
                Format::Dot => Err(no_dot("legendre")),
            }
        }
    }
}

fn no_dot(what: &str) -> Failure {
    Failure::new(Kind::Usage, format!("{what} has no DOT output"))
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(Kind::Io, format!("{path}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::new(Kind::Usage, format!("{path}: {e}")))
}

/// A graph argument: an existing file is read as graph JSON, anything else
/// is parsed as a family spec.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).is_file() {
        return parse_json(arg, &read_file(arg)?);
    }
    if arg.contains(':') {
        return Ok(arg.parse::<Family>()?.build()?);
    }
    Err(Failure::new(
        Kind::Io,
        format!("{arg}: no such file, and not a family spec"),
    ))
}

/// A labeling argument: inline `2,1,3`, or a file holding a JSON array or a
/// `{"p", "assign"}` labeling file. Returns the recorded prime if any.
fn load_labeling(arg: &str) -> Result<(Labeling, Option<u64>), Failure> {
    let inline = arg
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>();
    if let (Ok(assign), false) = (&inline, Path::new(arg).is_file()) {
        return Ok((Labeling::new(assign.clone())?, None));
    }
    let text = read_file(arg)?;
    let value: Value = parse_json(arg, &text)?;
    if value.is_array() {
        Ok((parse_json(arg, &text)?, None))
    } else {
        let file: LabelingFile = parse_json(arg, &text)?;
        Ok((file.assign, Some(file.p)))
    }
}

fn budget(args: &BudgetArgs) -> Result<Budget, Failure> {
    let max_time = match args.budget_seconds {
        None => None,
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::new(Kind::Usage, format!("invalid --budget-seconds {s}"))),
    };
    Ok(Budget {
        max_nodes: args.budget_nodes,
        max_time,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialisable")
}

fn graph_table(g: &Graph) -> String {
    let mut s = format!(
        "order {}  size {}  connected {}\n",
        g.order(),
        g.size(),
        g.is_connected()
    );
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} -- {}", g.name(u), g.name(v));
    }
    s
}

fn render_graph(g: &Graph, format: Format, extra: Option<Value>) -> CmdResult {
    Ok(Emitted::ok(match format {
        Format::Json => {
            let mut value = serde_json::to_value(g).expect("serialisable");
            if let (Value::Object(map), Some(Value::Object(more))) = (&mut value, extra) {
                map.extend(more);
            }
            json(&value)
        }
        Format::Dot => g.to_dot(),
        Format::Table => graph_table(g),
    }))
}

fn cmd_op(op: Operation, g1: &Graph, g2: &Graph, format: Format) -> CmdResult {
    let g = op.apply(g1, g2)?;
    let connected = g.is_connected();
    let mut header = serde_json::json!({
        "operation": op.to_string(),
        "vertex_map": op.vertex_map(g1, g2).describe(),
        "connected": connected,
    });
    if !connected {
        header["warning"] = Value::from("product is disconnected");
    }
    if format == Format::Table {
        let mut text = format!("{op}: {}\n", header["vertex_map"].as_str().unwrap_or_default());
        if !connected {
            text.push_str("warning: product is disconnected\n");
        }
        text.push_str(&graph_table(&g));
        return Ok(Emitted::ok(text));
    }
    render_graph(&g, format, Some(header))
}

fn cmd_construct(args: &ConstructArgs, format: Format) -> CmdResult {
    let mut recipe = match &args.recipe {
        Some(path) => {
            let path = path.to_string_lossy();
            let file: RecipeFile = parse_json(&path, &read_file(&path)?)?;
            file.resolve()?
        }
        None => {
            let theorem = args.theorem.expect("enforced by clap");
            let p = args.p.expect("enforced by clap");
            let g1 = load_graph(args.g1.as_deref().expect("enforced by clap"))?;
            let mut recipe = ConstructionRecipe::new(theorem, p, g1);
            if let Some(g2) = &args.g2 {
                recipe = recipe.with_g2(load_graph(g2)?);
            }
            if let Some(l) = &args.lab_g1 {
                recipe = recipe.with_lab_g1(load_labeling(l)?.0);
            }
            if let Some(l) = &args.lab_g2 {
                recipe = recipe.with_lab_g2(load_labeling(l)?.0);
            }
            recipe
        }
    };
    LegendreContext::new(recipe.p)?;

    let t = recipe.theorem;
    let missing = (t.needs_lab_g1() && recipe.lab_g1.is_none()) || (t.needs_lab_g2() && recipe.lab_g2.is_none());
    if missing && (!t.needs_second_factor() || recipe.g2.is_some()) {
        let found = find_base_labelings(t, &recipe.g1, recipe.g2.as_ref(), recipe.p, budget(&args.budget)?)?;
        match found {
            BaseSearch::Found { recipe: searched, .. } => {
                recipe.lab_g1 = recipe.lab_g1.or(searched.lab_g1);
                recipe.lab_g2 = recipe.lab_g2.or(searched.lab_g2);
            }
            BaseSearch::None { nodes } => {
                return Err(Failure::new(
                    Kind::SearchNone,
                    format!("{t}: no base labelings satisfy the balance condition ({nodes} nodes searched)"),
                ))
            }
            BaseSearch::Exhausted { nodes } => {
                return Err(Failure::new(
                    Kind::BudgetExhausted,
                    format!("{t}: base labeling search exhausted its budget after {nodes} nodes"),
                ))
            }
        }
    }

    let c = recipe.construct()?;
    Ok(Emitted::ok(match format {
        Format::Json => json(&c),
        Format::Dot => c.labeling.to_dot(&c.graph, &LegendreContext::new(c.p)?),
        Format::Table => construction_table(&c),
    }))
}

fn construction_table(c: &Construction) -> String {
    let mut s = format!(
        "{} mod {}: order {}  size {}\npredicted e0 {}  e1 {}\nverified  e0 {}  e1 {}\n",
        c.theorem,
        c.p,
        c.graph.order(),
        c.graph.size(),
        c.predicted.e0,
        c.predicted.e1,
        c.verified.e0,
        c.verified.e1
    );
    for h in &c.hypotheses {
        let _ = writeln!(
            s,
            "[{}] {} ({} vs {})",
            if h.satisfied { "ok" } else { "no" },
            h.condition,
            h.lhs,
            h.rhs
        );
    }
    s.push_str("labels:");
    for v in 0..c.graph.order() {
        let _ = write!(s, " {}", c.labeling.label(v));
    }
    s
}

fn cmd_verify(graph: &str, labeling: &str, p: Option<u64>, format: Format) -> CmdResult {
    let g = load_graph(graph)?;
    let (lab, recorded) = load_labeling(labeling)?;
    let p = p
        .or(recorded)
        .ok_or_else(|| Failure::new(Kind::Usage, "no prime given: pass --p or use a labeling file"))?;
    let ctx = LegendreContext::new(p)?;
    lab.check_graph(&g)?;
    is_cordial(&g, &lab, &ctx)?;
    let report = VerificationReport::from(induced_tally(&g, &lab, &ctx)?);
    Ok(Emitted::ok(match format {
        Format::Json => json(&report),
        Format::Dot => lab.to_dot(&g, &ctx),
        Format::Table => format!("e0 {}  e1 {}  cordial {}", report.e0, report.e1, report.cordial),
    }))
}

fn parse_objective(s: &str) -> Result<Objective, Failure> {
    let bad = || {
        Failure::new(
            Kind::Usage,
            format!("invalid objective {s:?}; expected cordial, diff:D, near:D or range:LO:HI"),
        )
    };
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["cordial"] => Ok(Objective::Cordial),
        ["diff", d] => Ok(Objective::Difference(num(d)?)),
        ["near", d] => Ok(Objective::DifferenceSet(num(d)?)),
        ["range", lo, hi] => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(bad());
            }
            Ok(Objective::Range { lo, hi })
        }
        _ => Err(bad()),
    }
}

fn cmd_search(args: &SearchArgs, format: Format) -> CmdResult {
    let g = load_graph(&args.graph)?;
    LegendreContext::new(args.p)?;
    let mode = match args.mode {
        SearchMode::First => Mode::FindFirst,
        SearchMode::Count => Mode::CountAll,
        SearchMode::None => Mode::ProveNone,
    };
    if args.jobs == 0 {
        return Err(Failure::new(Kind::Usage, "--jobs must be at least 1"));
    }
    let mut spec = SearchSpec::new(g.clone(), args.p, parse_objective(&args.objective)?)
        .mode(mode)
        .jobs(args.jobs)
        .budget(budget(&args.budget)?);
    if let Some(c) = args.ceiling {
        spec = spec.ceiling(c);
    }
    let report = search_labeling(&spec)?;
    let status = search_status(&report, mode);
    let text = match format {
        Format::Json => json(&report),
        Format::Dot => match &report.labeling {
            Some(lab) => lab.to_dot(&g, &LegendreContext::new(args.p)?),
            None => g.to_dot(),
        },
        Format::Table => {
            let mut s = format!("outcome {:?}  nodes {}", report.outcome, report.nodes).to_lowercase();
            if let Some(c) = report.count {
                let _ = write!(s, "  count {c}");
            }
            if let Some(lab) = &report.labeling {
                let _ = write!(s, "\nlabels: {:?}", lab.as_slice());
            }
            s
        }
    };
    Ok(Emitted { text, status })
}

fn search_status(report: &SearchReport, mode: Mode) -> Option<Failure> {
    match report.outcome {
        Outcome::Exhausted => Some(Failure::new(
            Kind::BudgetExhausted,
            format!("search budget exhausted after {} nodes", report.nodes),
        )),
        Outcome::None if mode != Mode::CountAll => Some(Failure::new(
            Kind::SearchNone,
            format!("no labeling meets the objective ({} nodes searched)", report.nodes),
        )),
        _ => None,
    }
}
