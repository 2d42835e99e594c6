//! Exhaustive backtracking over vertex labelings.
//!
//! The search fixes vertices in order of decreasing degree and tries labels
//! in ascending order. After each assignment the edges whose endpoints are
//! both labelled are scored, and the branch is cut when the remaining edges
//! cannot bring `|rho| - |eta|` back into the objective window even if they
//! all came out the same way.
//!
//! Node budgets count assignments, so results and node counts are
//! reproducible for a fixed spec when run on one worker. With several
//! workers the top-level choice (the label of the first vertex) is split
//! between them; find-first still reports the solution of the lowest
//! top-level branch, which is the one a single worker would find.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::constructors::{ConstructionRecipe, Theorem};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{edge_label, Labeling};
use crate::numtheory::LegendreContext;

pub const DEFAULT_CEILING: usize = 12;
/// Hard limit on the ceiling (labels in use are tracked in a `u64` mask).
pub const MAX_CEILING: usize = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Target on `|rho| - |eta|` (equivalently `e1 - e0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// `|e0 - e1| <= 1`.
    Cordial,
    /// Exactly `d`.
    Difference(i64),
    /// One of `d - 1, d, d + 1`.
    DifferenceSet(i64),
    Range {
        lo: i64,
        hi: i64,
    },
}

impl Objective {
    pub fn window(&self) -> (i64, i64) {
        match *self {
            Objective::Cordial => (-1, 1),
            Objective::Difference(d) => (d, d),
            Objective::DifferenceSet(d) => (d - 1, d + 1),
            Objective::Range { lo, hi } => (lo, hi),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    FindFirst,
    CountAll,
    ProveNone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    /// Secondary kill switch; node counts are the reproducible limit.
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_time: None,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            max_time: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_nodes == 0 {
            return Err(Error::InvalidBudget("node limit must be positive".into()));
        }
        if self.max_time == Some(Duration::ZERO) {
            return Err(Error::InvalidBudget("time limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub graph: Graph,
    pub p: u64,
    pub objective: Objective,
    pub budget: Budget,
    pub mode: Mode,
    pub jobs: usize,
    pub ceiling: usize,
    /// Partial-tally pruning; off only for cross-checking.
    pub pruning: bool,
}

impl SearchSpec {
    pub fn new(graph: Graph, p: u64, objective: Objective) -> Self {
        Self {
            graph,
            p,
            objective,
            budget: Budget::default(),
            mode: Mode::FindFirst,
            jobs: 1,
            ceiling: DEFAULT_CEILING,
            pruning: true,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn ceiling(mut self, ceiling: usize) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn pruning(mut self, pruning: bool) -> Self {
        self.pruning = pruning;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Found,
    None,
    Exhausted,
}

/// Search report, serialised as
/// `{"outcome": "found|none|exhausted", "nodes": N, "labeling": [...]?, "count": C?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Labeling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
}

fn check_searchable(graph: &Graph, ceiling: usize) -> Result<()> {
    let ceiling = ceiling.min(MAX_CEILING);
    if graph.order() > ceiling {
        return Err(Error::SearchCeiling {
            order: graph.order(),
            ceiling,
        });
    }
    Ok(())
}

/// Precomputed search tables for one graph, prime and window.
struct Engine {
    n: usize,
    /// Vertex fixed at each depth.
    vertex_at: Vec<usize>,
    /// For each depth, the earlier depths adjacent to it.
    back: Vec<Vec<usize>>,
    /// Score of an edge with the given label sum: +1 residue, -1 otherwise.
    score: Vec<i64>,
    total_edges: usize,
    lo: i64,
    hi: i64,
    pruning: bool,
}

/// Shared stop and accounting state.
struct Control<'a> {
    nodes: &'a AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: &'a AtomicBool,
    /// Branches above this index may stop early.
    best_branch: &'a AtomicUsize,
    branch: usize,
}

impl Control<'_> {
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        if n.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted.store(true, Ordering::Relaxed);
                    return false;
                }
            }
        }
        !self.exhausted.load(Ordering::Relaxed) && self.best_branch.load(Ordering::Relaxed) >= self.branch
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    /// The leaf handler asked to stop.
    Done,
    /// Budget, deadline, or a better branch already finished.
    Abort,
}

impl Engine {
    fn new(graph: &Graph, ctx: &LegendreContext, window: (i64, i64), pruning: bool) -> Self {
        let n = graph.order();
        let degrees = graph.degrees();
        let mut vertex_at: Vec<usize> = (0..n).collect();
        vertex_at.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let mut depth_of = vec![0; n];
        for (d, &v) in vertex_at.iter().enumerate() {
            depth_of[v] = d;
        }
        let mut back = vec![Vec::new(); n];
        for (u, v) in graph.edges() {
            let (du, dv) = (depth_of[u], depth_of[v]);
            back[du.max(dv)].push(du.min(dv));
        }
        let score = (0..=2 * n as u64)
            .map(|s| if edge_label(s, ctx) == 1 { 1 } else { -1 })
            .collect();
        Self {
            n,
            vertex_at,
            back,
            score,
            total_edges: graph.size(),
            lo: window.0,
            hi: window.1,
            pruning,
        }
    }

    /// Explores the subtree where depth 0 takes `first`. `on_leaf` sees the
    /// final difference and labels by depth, for every leaf inside the
    /// window.
    fn run_branch(&self, first: u64, ctl: &Control, on_leaf: &mut dyn FnMut(i64, &[u64]) -> bool) -> Flow {
        let mut labels = vec![0u64; self.n];
        self.descend(0, first, 0, 0, 0, &mut labels, ctl, on_leaf)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        depth: usize,
        value: u64,
        used: u64,
        diff: i64,
        decided: usize,
        labels: &mut [u64],
        ctl: &Control,
        on_leaf: &mut dyn FnMut(i64, &[u64]) -> bool,
    ) -> Flow {
        if !ctl.tick() {
            return Flow::Abort;
        }
        labels[depth] = value;
        let mut diff = diff;
        for &d in &self.back[depth] {
            diff += self.score[(value + labels[d]) as usize];
        }
        let decided = decided + self.back[depth].len();
        let remaining = (self.total_edges - decided) as i64;
        if self.pruning && (diff + remaining < self.lo || diff - remaining > self.hi) {
            return Flow::Continue;
        }
        if depth + 1 == self.n {
            if (self.lo..=self.hi).contains(&diff) && on_leaf(diff, labels) {
                return Flow::Done;
            }
            return Flow::Continue;
        }
        let used = used | (1 << (value - 1));
        for next in 1..=self.n as u64 {
            if used & (1 << (next - 1)) != 0 {
                continue;
            }
            match self.descend(depth + 1, next, used, diff, decided, labels, ctl, on_leaf) {
                Flow::Continue => {}
                stop => return stop,
            }
        }
        Flow::Continue
    }

    fn to_labeling(&self, by_depth: &[u64]) -> Labeling {
        let mut assign = vec![0; self.n];
        for (d, &v) in self.vertex_at.iter().enumerate() {
            assign[v] = by_depth[d];
        }
        Labeling::new(assign).expect("search assigns a permutation")
    }
}

#[derive(Debug, Clone)]
enum BranchResult {
    Pending,
    Found(Labeling),
    Counted(u64),
    Aborted,
}

/// Runs a labeling search.
///
/// Budget exhaustion is reported as [`Outcome::Exhausted`], never as
/// [`Outcome::None`]; `None` means the whole space was enumerated.
pub fn search_labeling(spec: &SearchSpec) -> Result<SearchReport> {
    let ctx = LegendreContext::new(spec.p)?;
    check_searchable(&spec.graph, spec.ceiling)?;
    spec.budget.validate()?;
    if spec.jobs == 0 {
        return Err(Error::InvalidBudget("at least one worker is required".into()));
    }
    let engine = Engine::new(&spec.graph, &ctx, spec.objective.window(), spec.pruning);
    let n = engine.n;
    let counting = spec.mode == Mode::CountAll;

    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let best_branch = AtomicUsize::new(usize::MAX);
    let next_branch = AtomicUsize::new(0);
    let results = Mutex::new(vec![BranchResult::Pending; n]);
    let deadline = spec.budget.max_time.map(|t| Instant::now() + t);

    let worker = || loop {
        let branch = next_branch.fetch_add(1, Ordering::Relaxed);
        if branch >= n {
            break;
        }
        if branch > best_branch.load(Ordering::Relaxed) || exhausted.load(Ordering::Relaxed) {
            results.lock().unwrap()[branch] = BranchResult::Aborted;
            continue;
        }
        let ctl = Control {
            nodes: &nodes,
            max_nodes: spec.budget.max_nodes,
            deadline,
            exhausted: &exhausted,
            best_branch: if counting { &IGNORE_BEST } else { &best_branch },
            branch,
        };
        let mut count = 0u64;
        let mut found = None;
        let flow = engine.run_branch(branch as u64 + 1, &ctl, &mut |_, labels| {
            if counting {
                count += 1;
                false
            } else {
                found = Some(engine.to_labeling(labels));
                true
            }
        });
        let result = match (flow, found) {
            (Flow::Abort, _) => BranchResult::Aborted,
            (_, Some(lab)) => {
                best_branch.fetch_min(branch, Ordering::Relaxed);
                BranchResult::Found(lab)
            }
            (_, None) => BranchResult::Counted(count),
        };
        results.lock().unwrap()[branch] = result;
    };

    let jobs = spec.jobs.min(n);
    if jobs <= 1 {
        worker();
    } else {
        thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(worker);
            }
        });
    }

    let nodes = nodes.load(Ordering::Relaxed);
    let results = results.into_inner().unwrap();
    let mut total = 0u64;
    for result in results {
        match result {
            BranchResult::Found(lab) => {
                return Ok(SearchReport {
                    outcome: Outcome::Found,
                    nodes,
                    labeling: Some(lab),
                    count: None,
                })
            }
            BranchResult::Counted(c) => total += c,
            BranchResult::Aborted | BranchResult::Pending => {
                return Ok(SearchReport {
                    outcome: Outcome::Exhausted,
                    nodes,
                    labeling: None,
                    count: None,
                })
            }
        }
    }
    let outcome = if counting && total > 0 {
        Outcome::Found
    } else {
        Outcome::None
    };
    Ok(SearchReport {
        outcome,
        nodes,
        labeling: None,
        count: counting.then_some(total),
    })
}

static IGNORE_BEST: AtomicUsize = AtomicUsize::new(usize::MAX);

/// Every achievable `|rho| - |eta|` with the first labeling (in search
/// order) that achieves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spectrum {
    Complete {
        witnesses: BTreeMap<i64, Labeling>,
        nodes: u64,
    },
    Exhausted {
        nodes: u64,
    },
}

/// Enumerates all labelings of `graph` (no pruning) and records one witness
/// per achievable difference.
pub fn difference_spectrum(graph: &Graph, p: u64, budget: Budget, ceiling: usize) -> Result<Spectrum> {
    let ctx = LegendreContext::new(p)?;
    check_searchable(graph, ceiling)?;
    budget.validate()?;
    let m = graph.size() as i64;
    let engine = Engine::new(graph, &ctx, (-m, m), false);
    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let best = AtomicUsize::new(usize::MAX);
    let deadline = budget.max_time.map(|t| Instant::now() + t);
    let mut witnesses = BTreeMap::new();
    for first in 1..=engine.n as u64 {
        let ctl = Control {
            nodes: &nodes,
            max_nodes: budget.max_nodes,
            deadline,
            exhausted: &exhausted,
            best_branch: &best,
            branch: 0,
        };
        let flow = engine.run_branch(first, &ctl, &mut |diff, labels| {
            witnesses.entry(diff).or_insert_with(|| engine.to_labeling(labels));
            false
        });
        if flow == Flow::Abort {
            return Ok(Spectrum::Exhausted {
                nodes: nodes.load(Ordering::Relaxed),
            });
        }
    }
    Ok(Spectrum::Complete {
        witnesses,
        nodes: nodes.load(Ordering::Relaxed),
    })
}

/// Outcome of [`find_base_labelings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSearch {
    Found { recipe: ConstructionRecipe, nodes: u64 },
    None { nodes: u64 },
    Exhausted { nodes: u64 },
}

impl BaseSearch {
    pub fn nodes(&self) -> u64 {
        match self {
            BaseSearch::Found { nodes, .. } | BaseSearch::None { nodes } | BaseSearch::Exhausted { nodes } => *nodes,
        }
    }
}

/// Searches for base labelings meeting a construction's balance condition.
///
/// Structural gates are evaluated first; a failing gate is returned as the
/// corresponding error and no search is run. When both factors carry a base
/// labeling, every achievable difference of `g2` is enumerated and `g1` is
/// searched against the window each one leaves.
pub fn find_base_labelings(
    theorem: Theorem,
    g1: &Graph,
    g2: Option<&Graph>,
    p: u64,
    budget: Budget,
) -> Result<BaseSearch> {
    find_base_labelings_with_ceiling(theorem, g1, g2, p, budget, DEFAULT_CEILING)
}

pub fn find_base_labelings_with_ceiling(
    theorem: Theorem,
    g1: &Graph,
    g2: Option<&Graph>,
    p: u64,
    budget: Budget,
    ceiling: usize,
) -> Result<BaseSearch> {
    LegendreContext::new(p)?;
    budget.validate()?;
    let mut recipe = ConstructionRecipe::new(theorem, p, g1.clone());
    recipe.g2 = g2.cloned();
    for gate in recipe.structural_hypotheses()? {
        if !gate.satisfied {
            return Err(gate.into_error(theorem));
        }
    }
    let Some(window) = recipe.balance_window()? else {
        return Ok(BaseSearch::Found { recipe, nodes: 0 });
    };

    let deadline = budget.max_time.map(|t| Instant::now() + t);
    let mut used = 0u64;
    let remaining = |used: u64| -> Option<Budget> {
        let max_time = match deadline {
            Some(d) => Some(d.checked_duration_since(Instant::now())?),
            None => None,
        };
        (used < budget.max_nodes).then(|| Budget {
            max_nodes: budget.max_nodes - used,
            max_time: max_time.filter(|t| !t.is_zero()),
        })
    };
    let run = |g: &Graph, lo: i64, hi: i64, b: Budget| {
        search_labeling(
            &SearchSpec::new(g.clone(), p, Objective::Range { lo, hi })
                .budget(b)
                .ceiling(ceiling),
        )
    };

    match (window.coeff1, window.coeff2) {
        (1, 0) => {
            let report = run(g1, window.lo, window.hi, budget)?;
            Ok(match report.outcome {
                Outcome::Found => BaseSearch::Found {
                    recipe: recipe.with_lab_g1(report.labeling.expect("found")),
                    nodes: report.nodes,
                },
                Outcome::None => BaseSearch::None { nodes: report.nodes },
                Outcome::Exhausted => BaseSearch::Exhausted { nodes: report.nodes },
            })
        }
        (0, 1) => {
            let g2 = g2.expect("checked by structural gates");
            let report = run(g2, window.lo, window.hi, budget)?;
            Ok(match report.outcome {
                Outcome::Found => BaseSearch::Found {
                    recipe: recipe.with_lab_g2(report.labeling.expect("found")),
                    nodes: report.nodes,
                },
                Outcome::None => BaseSearch::None { nodes: report.nodes },
                Outcome::Exhausted => BaseSearch::Exhausted { nodes: report.nodes },
            })
        }
        (1, c2) => {
            let g2 = g2.expect("checked by structural gates");
            let witnesses = match difference_spectrum(g2, p, budget, ceiling)? {
                Spectrum::Complete { witnesses, nodes } => {
                    used += nodes;
                    witnesses
                }
                Spectrum::Exhausted { nodes } => return Ok(BaseSearch::Exhausted { nodes }),
            };
            let mut exhausted = false;
            for (d2, lab2) in witnesses {
                let Some(b) = remaining(used) else {
                    return Ok(BaseSearch::Exhausted { nodes: used });
                };
                let report = run(g1, window.lo - c2 * d2, window.hi - c2 * d2, b)?;
                used += report.nodes;
                match report.outcome {
                    Outcome::Found => {
                        return Ok(BaseSearch::Found {
                            recipe: recipe.with_lab_g1(report.labeling.expect("found")).with_lab_g2(lab2),
                            nodes: used,
                        })
                    }
                    Outcome::None => {}
                    Outcome::Exhausted => exhausted = true,
                }
            }
            Ok(if exhausted {
                BaseSearch::Exhausted { nodes: used }
            } else {
                BaseSearch::None { nodes: used }
            })
        }
        other => unreachable!("unexpected balance coefficients {other:?}"),
    }
}
