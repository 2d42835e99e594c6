//! Vertex labelings and the edge labels they induce modulo an odd prime.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::{LegendreContext, ResidueClass};

/// A bijection from vertices `0..n` onto `{1, ..., n}`, stored densely by
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Labeling {
    assign: Vec<u64>,
}

impl TryFrom<Vec<u64>> for Labeling {
    type Error = Error;

    fn try_from(assign: Vec<u64>) -> Result<Self> {
        Labeling::new(assign)
    }
}

impl From<Labeling> for Vec<u64> {
    fn from(lab: Labeling) -> Self {
        lab.assign
    }
}

impl Labeling {
    /// Checks that `assign` is a permutation of `1..=assign.len()`.
    pub fn new(assign: Vec<u64>) -> Result<Self> {
        let n = assign.len();
        if n == 0 {
            return Err(Error::InvalidLabeling("empty labeling".into()));
        }
        let mut seen = vec![false; n];
        for (v, &label) in assign.iter().enumerate() {
            if label == 0 || label > n as u64 {
                return Err(Error::InvalidLabeling(format!(
                    "vertex {v} has label {label}, outside 1..={n}"
                )));
            }
            let slot = &mut seen[label as usize - 1];
            if *slot {
                return Err(Error::InvalidLabeling(format!("label {label} used twice")));
            }
            *slot = true;
        }
        Ok(Self { assign })
    }

    /// Builds a labeling and checks it against `graph`'s order.
    pub fn for_graph(graph: &Graph, assign: Vec<u64>) -> Result<Self> {
        let lab = Self::new(assign)?;
        lab.check_graph(graph)?;
        Ok(lab)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n as u64).collect())
    }

    pub fn check_graph(&self, graph: &Graph) -> Result<()> {
        if self.assign.len() != graph.order() {
            return Err(Error::LabelingOrderMismatch {
                labels: self.assign.len(),
                order: graph.order(),
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.assign[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.assign
    }

    /// Colours edges by induced label in a Graphviz rendering.
    pub fn to_dot(&self, graph: &Graph, ctx: &LegendreContext) -> String {
        let named = graph.clone().with_names(
            (0..graph.order())
                .map(|v| format!("{} / {}", graph.name(v), self.assign[v]))
                .collect(),
        );
        let named = named.expect("one name per vertex");
        named.to_dot_with(|u, v| {
            let label = edge_label(self.assign[u] + self.assign[v], ctx);
            let colour = if label == 1 { "blue" } else { "red" };
            Some(format!("color={colour}, label=\"{label}\""))
        })
    }
}

/// Induced label of an edge whose endpoint labels sum to `sum`: 1 when the
/// sum is a quadratic residue mod p, 0 when it is a nonresidue or divisible
/// by p.
pub fn edge_label(sum: u64, ctx: &LegendreContext) -> u8 {
    match ctx.class_of_unsigned(sum) {
        ResidueClass::Residue => 1,
        ResidueClass::Zero | ResidueClass::NonResidue => 0,
    }
}

/// Counts of induced edge labels.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeTally {
    pub e0: u64,
    pub e1: u64,
}

impl EdgeTally {
    pub fn new(e0: u64, e1: u64) -> Self {
        Self { e0, e1 }
    }

    /// `e0 - e1`.
    pub fn difference(&self) -> i64 {
        self.e0 as i64 - self.e1 as i64
    }

    pub fn is_balanced(&self) -> bool {
        self.difference().abs() <= 1
    }

    pub fn total(&self) -> u64 {
        self.e0 + self.e1
    }
}

/// The JSON verification report: `{"e0", "e1", "cordial"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub e0: u64,
    pub e1: u64,
    pub cordial: bool,
}

impl From<EdgeTally> for VerificationReport {
    fn from(t: EdgeTally) -> Self {
        Self {
            e0: t.e0,
            e1: t.e1,
            cordial: t.is_balanced(),
        }
    }
}

/// A labeling file: `{"p": p, "assign": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub p: u64,
    pub assign: Labeling,
}

pub fn induced_tally(graph: &Graph, lab: &Labeling, ctx: &LegendreContext) -> Result<EdgeTally> {
    lab.check_graph(graph)?;
    let mut tally = EdgeTally::default();
    for (u, v) in graph.edges() {
        match edge_label(lab.label(u) + lab.label(v), ctx) {
            0 => tally.e0 += 1,
            _ => tally.e1 += 1,
        }
    }
    Ok(tally)
}

/// `|e0 - e1| <= 1`. Fails with [`Error::Disconnected`] for disconnected
/// graphs.
pub fn is_cordial(graph: &Graph, lab: &Labeling, ctx: &LegendreContext) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(induced_tally(graph, lab, ctx)?.is_balanced())
}

/// Edges split by induced label: `rho` (label 1) and `eta` (label 0).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoEta {
    pub rho: Vec<(usize, usize)>,
    pub eta: Vec<(usize, usize)>,
}

impl RhoEta {
    /// `|rho| - |eta|`, the quantity the construction hypotheses constrain.
    pub fn excess(&self) -> i64 {
        self.rho.len() as i64 - self.eta.len() as i64
    }
}

pub fn rho_eta(graph: &Graph, lab: &Labeling, ctx: &LegendreContext) -> Result<RhoEta> {
    lab.check_graph(graph)?;
    let mut split = RhoEta::default();
    for (u, v) in graph.edges() {
        match edge_label(lab.label(u) + lab.label(v), ctx) {
            0 => split.eta.push((u, v)),
            _ => split.rho.push((u, v)),
        }
    }
    Ok(split)
}
