//! Explicit Legendre cordial labelings of composite graphs.
//!
//! Each [`Theorem`] names one construction. A [`ConstructionRecipe`] holds
//! its inputs; [`ConstructionRecipe::construct`] evaluates every gate,
//! builds the composite graph, lays out the labels, predicts `(e0, e1)` in
//! closed form and checks the prediction against a direct tally.
//!
//! The strong-product construction reads its size condition as applying to
//! the second factor (`|E(G2)| = |V(G2)| - 1`, a tree): that is the reading
//! under which the edge count of the composite matches the closed form.

pub mod layout;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{make_path, Graph, GraphSource};
use crate::labeling::{induced_tally, rho_eta, EdgeTally, Labeling, RhoEta};
use crate::numtheory::{two_symbol_rule, LegendreContext};
use crate::products;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `G o P_{p-1}` for `p = ±3 (mod 8)` and `|E(G)|` within one of `|V(G)|`.
    CoronaPath,
    /// `K_p x G` for connected bipartite `G`.
    KpTensor,
    Join,
    Corona,
    #[serde(alias = "lexicographic")]
    Lex,
    #[serde(alias = "cartesian")]
    Cart,
    Tensor,
    Strong,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::CoronaPath,
        Theorem::KpTensor,
        Theorem::Join,
        Theorem::Corona,
        Theorem::Lex,
        Theorem::Cart,
        Theorem::Tensor,
        Theorem::Strong,
    ];

    pub fn needs_second_factor(self) -> bool {
        !matches!(self, Theorem::CoronaPath | Theorem::KpTensor)
    }

    pub fn needs_lab_g1(self) -> bool {
        matches!(
            self,
            Theorem::Join | Theorem::Corona | Theorem::Cart | Theorem::Tensor | Theorem::Strong
        )
    }

    pub fn needs_lab_g2(self) -> bool {
        matches!(self, Theorem::Join | Theorem::Corona | Theorem::Lex)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::CoronaPath => "corona-path",
            Theorem::KpTensor => "kp-tensor",
            Theorem::Join => "join",
            Theorem::Corona => "corona",
            Theorem::Lex => "lex",
            Theorem::Cart => "cart",
            Theorem::Tensor => "tensor",
            Theorem::Strong => "strong",
        })
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corona-path" => Ok(Theorem::CoronaPath),
            "kp-tensor" => Ok(Theorem::KpTensor),
            "join" => Ok(Theorem::Join),
            "corona" => Ok(Theorem::Corona),
            "lex" | "lexicographic" => Ok(Theorem::Lex),
            "cart" | "cartesian" => Ok(Theorem::Cart),
            "tensor" => Ok(Theorem::Tensor),
            "strong" => Ok(Theorem::Strong),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// What failing a gate means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateKind {
    /// A factor must be connected.
    Admission,
    /// Order, size, bipartiteness and prime-class conditions.
    Structure,
    /// The composite must come out connected.
    Connectivity,
    /// The rho/eta equation on the base labelings.
    Balance,
}

/// One evaluated gate. `lhs` and `rhs` are the two sides of the condition
/// as integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub kind: GateKind,
    pub condition: String,
    pub lhs: i64,
    pub rhs: i64,
    pub satisfied: bool,
}

impl Hypothesis {
    fn new(kind: GateKind, condition: impl Into<String>, lhs: i64, rhs: i64, satisfied: bool) -> Self {
        Self {
            kind,
            condition: condition.into(),
            lhs,
            rhs,
            satisfied,
        }
    }

    fn equal(kind: GateKind, condition: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self::new(kind, condition, lhs, rhs, lhs == rhs)
    }

    fn within_one(kind: GateKind, condition: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Self::new(kind, condition, lhs, rhs, (lhs - rhs).abs() <= 1)
    }

    fn connected(name: &str, g: &Graph) -> Self {
        let components = g.components().into_iter().max().map_or(0, |c| c + 1);
        Self::equal(
            GateKind::Admission,
            format!("{name} is connected (component count)"),
            components as i64,
            1,
        )
    }

    pub(crate) fn into_error(self, theorem: Theorem) -> Error {
        match self.kind {
            GateKind::Admission => Error::Disconnected,
            GateKind::Connectivity => Error::ConnectivityViolation {
                theorem,
                condition: self.condition,
            },
            GateKind::Structure | GateKind::Balance => Error::HypothesisViolation {
                theorem,
                condition: self.condition,
                lhs: self.lhs,
                rhs: self.rhs,
            },
        }
    }
}

/// Inputs of one construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub theorem: Theorem,
    pub p: u64,
    pub g1: Graph,
    pub g2: Option<Graph>,
    pub lab_g1: Option<Labeling>,
    pub lab_g2: Option<Labeling>,
}

/// Recipe as read from JSON; graphs may be family specs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecipeFile {
    pub theorem: Theorem,
    pub p: u64,
    #[serde(alias = "g")]
    pub g1: GraphSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<GraphSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lab_g1: Option<Labeling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lab_g2: Option<Labeling>,
}

impl RecipeFile {
    pub fn resolve(self) -> Result<ConstructionRecipe> {
        Ok(ConstructionRecipe {
            theorem: self.theorem,
            p: self.p,
            g1: self.g1.resolve()?,
            g2: self.g2.map(GraphSource::resolve).transpose()?,
            lab_g1: self.lab_g1,
            lab_g2: self.lab_g2,
        })
    }
}

/// Result of a successful construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub theorem: Theorem,
    pub p: u64,
    pub graph: Graph,
    pub labeling: Labeling,
    pub predicted: PredictedTally,
    pub verified: EdgeTally,
    pub hypotheses: Vec<Hypothesis>,
}

/// `(e0, e1)` from a construction's closed forms.
pub type PredictedTally = EdgeTally;

fn multiple_of_p(name: &str, order: usize, p: u64) -> Hypothesis {
    Hypothesis::equal(
        GateKind::Structure,
        format!("order of {name} is a multiple of p (order mod p)"),
        (order as u64 % p) as i64,
        0,
    )
}

impl ConstructionRecipe {
    pub fn new(theorem: Theorem, p: u64, g1: Graph) -> Self {
        Self {
            theorem,
            p,
            g1,
            g2: None,
            lab_g1: None,
            lab_g2: None,
        }
    }

    pub fn with_g2(mut self, g2: Graph) -> Self {
        self.g2 = Some(g2);
        self
    }

    pub fn with_lab_g1(mut self, lab: Labeling) -> Self {
        self.lab_g1 = Some(lab);
        self
    }

    pub fn with_lab_g2(mut self, lab: Labeling) -> Self {
        self.lab_g2 = Some(lab);
        self
    }

    fn second(&self) -> Result<&Graph> {
        self.g2.as_ref().ok_or(Error::MissingInput {
            theorem: self.theorem,
            what: "second factor g2",
        })
    }

    fn base(&self, lab: &Option<Labeling>, g: &Graph, what: &'static str) -> Result<Labeling> {
        let lab = lab.clone().ok_or(Error::MissingInput {
            theorem: self.theorem,
            what,
        })?;
        lab.check_graph(g)?;
        Ok(lab)
    }

    /// Every gate that does not depend on base labelings, in evaluation
    /// order.
    pub fn structural_hypotheses(&self) -> Result<Vec<Hypothesis>> {
        let p = self.p;
        let g1 = &self.g1;
        let n1 = g1.order() as i64;
        let mut gates = Vec::new();
        match self.theorem {
            Theorem::CoronaPath => {
                gates.push(Hypothesis::connected("g", g1));
                gates.push(Hypothesis::new(
                    GateKind::Structure,
                    "order of g is at least 2",
                    n1,
                    2,
                    n1 >= 2,
                ));
                gates.push(Hypothesis::within_one(
                    GateKind::Structure,
                    "size of g is within one of its order",
                    g1.size() as i64,
                    n1,
                ));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "(2/p) = -1, i.e. p = ±3 (mod 8)",
                    two_symbol_rule(p) as i64,
                    -1,
                ));
            }
            Theorem::KpTensor => {
                gates.push(Hypothesis::connected("g", g1));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "g is bipartite with two non-empty sides",
                    g1.bipartition().is_some() as i64,
                    1,
                ));
            }
            Theorem::Join => {
                self.second()?;
                gates.push(multiple_of_p("g1", g1.order(), p));
            }
            Theorem::Corona => {
                let g2 = self.second()?;
                gates.push(Hypothesis::connected("g1", g1));
                gates.push(multiple_of_p("g2", g2.order(), p));
            }
            Theorem::Lex => {
                let g2 = self.second()?;
                gates.push(Hypothesis::connected("g1", g1));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "size of g1 equals its order",
                    g1.size() as i64,
                    n1,
                ));
                gates.push(multiple_of_p("g2", g2.order(), p));
            }
            Theorem::Cart => {
                let g2 = self.second()?;
                gates.push(Hypothesis::connected("g1", g1));
                gates.push(Hypothesis::connected("g2", g2));
                gates.push(multiple_of_p("g1", g1.order(), p));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "size of g2 is a multiple of its order (size mod order)",
                    (g2.size() % g2.order()) as i64,
                    0,
                ));
            }
            Theorem::Tensor => {
                let g2 = self.second()?;
                gates.push(Hypothesis::connected("g1", g1));
                gates.push(Hypothesis::connected("g2", g2));
                gates.push(multiple_of_p("g1", g1.order(), p));
                gates.push(Hypothesis::equal(
                    GateKind::Connectivity,
                    "g1 or g2 contains an odd cycle",
                    (g1.has_odd_cycle() || g2.has_odd_cycle()) as i64,
                    1,
                ));
            }
            Theorem::Strong => {
                let g2 = self.second()?;
                gates.push(Hypothesis::connected("g1", g1));
                gates.push(Hypothesis::connected("g2", g2));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "order of g1 equals 3p",
                    n1,
                    3 * p as i64,
                ));
                gates.push(Hypothesis::equal(
                    GateKind::Structure,
                    "g2 is a tree (size = order - 1)",
                    g2.size() as i64,
                    g2.order() as i64 - 1,
                ));
            }
        }
        Ok(gates)
    }

    /// The balance condition on base-labeling statistics `(rho1, eta1)` and
    /// `(rho2, eta2)`, expressed as a window `lo..=hi` on
    /// `coeff1*(rho1-eta1) + coeff2*(rho2-eta2)`.
    ///
    /// Returns `None` for constructions without a balance condition.
    pub fn balance_window(&self) -> Result<Option<BalanceWindow>> {
        let p = self.p as i64;
        let n1 = self.g1.order() as i64;
        Ok(match self.theorem {
            Theorem::CoronaPath | Theorem::KpTensor => None,
            Theorem::Join => {
                let nm = n1 / p * self.second()?.order() as i64;
                Some(BalanceWindow::new(1, 1, nm - 1, nm + 1))
            }
            Theorem::Corona => {
                let nm = n1 * (self.second()?.order() as i64 / p);
                Some(BalanceWindow::new(1, n1, nm - 1, nm + 1))
            }
            Theorem::Lex => {
                let m = self.second()?.order() as i64 / p;
                Some(BalanceWindow::new(0, 1, m * m * p, m * m * p))
            }
            Theorem::Cart => {
                let g2 = self.second()?;
                let mk = n1 / p * (g2.size() / g2.order()) as i64;
                Some(BalanceWindow::new(1, 0, mk, mk))
            }
            Theorem::Tensor => Some(BalanceWindow::new(1, 0, 0, 0)),
            Theorem::Strong => Some(BalanceWindow::new(1, 0, 1, 1)),
        })
    }

    fn balance_hypothesis(&self, s1: &RhoEta, s2: &RhoEta) -> Result<Option<Hypothesis>> {
        let Some(w) = self.balance_window()? else {
            return Ok(None);
        };
        let (r1, e1) = (s1.rho.len() as i64, s1.eta.len() as i64);
        let (r2, e2) = (s2.rho.len() as i64, s2.eta.len() as i64);
        let (lhs, rhs, condition) = match self.theorem {
            Theorem::Join => (
                r1 + r2,
                e1 + e2 + w.lo + 1,
                "|rho1| + |rho2| = |eta1| + |eta2| + nm (±1)",
            ),
            Theorem::Corona => {
                let n = w.coeff2;
                (
                    r1 + n * r2,
                    e1 + n * e2 + w.lo + 1,
                    "|rho1| + n|rho2| = |eta1| + n|eta2| + nm (±1)",
                )
            }
            Theorem::Lex => (r2, e2 + w.lo, "|rho2| = |eta2| + m^2 p"),
            Theorem::Cart => (r1, e1 + w.lo, "|rho1| = |eta1| + mk"),
            Theorem::Tensor => (r1, e1, "|rho1| = |eta1|"),
            Theorem::Strong => (r1, e1 + 1, "|rho1| = |eta1| + 1"),
            Theorem::CoronaPath | Theorem::KpTensor => unreachable!(),
        };
        let satisfied = w.contains(w.coeff1 * s1.excess() + w.coeff2 * s2.excess());
        Ok(Some(Hypothesis::new(GateKind::Balance, condition, lhs, rhs, satisfied)))
    }

    fn base_statistics(&self, ctx: &LegendreContext) -> Result<(Option<Labeling>, Option<Labeling>, RhoEta, RhoEta)> {
        let t = self.theorem;
        let lab1 = if t.needs_lab_g1() {
            Some(self.base(&self.lab_g1, &self.g1, "base labeling lab_g1")?)
        } else {
            None
        };
        let lab2 = if t.needs_lab_g2() {
            Some(self.base(&self.lab_g2, self.second()?, "base labeling lab_g2")?)
        } else {
            None
        };
        let s1 = match &lab1 {
            Some(l) => rho_eta(&self.g1, l, ctx)?,
            None => RhoEta::default(),
        };
        let s2 = match &lab2 {
            Some(l) => rho_eta(self.second()?, l, ctx)?,
            None => RhoEta::default(),
        };
        Ok((lab1, lab2, s1, s2))
    }

    /// All gates including the balance condition.
    pub fn hypotheses(&self) -> Result<Vec<Hypothesis>> {
        let ctx = LegendreContext::new(self.p)?;
        let mut gates = self.structural_hypotheses()?;
        let (_, _, s1, s2) = self.base_statistics(&ctx)?;
        gates.extend(self.balance_hypothesis(&s1, &s2)?);
        Ok(gates)
    }

    /// Runs the gates and, if all pass, builds and verifies the labeling.
    pub fn construct(&self) -> Result<Construction> {
        let ctx = LegendreContext::new(self.p)?;
        let theorem = self.theorem;
        let mut gates = self.structural_hypotheses()?;
        if let Some(failed) = gates.iter().find(|h| !h.satisfied) {
            return Err(failed.clone().into_error(theorem));
        }
        let (lab1, lab2, s1, s2) = self.base_statistics(&ctx)?;
        if let Some(balance) = self.balance_hypothesis(&s1, &s2)? {
            if !balance.satisfied {
                return Err(balance.into_error(theorem));
            }
            gates.push(balance);
        }

        let (graph, labels, predicted) = self.build(&ctx, lab1.as_ref(), lab2.as_ref(), &s1, &s2)?;
        let labeling = Labeling::for_graph(&graph, labels)?;
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let verified = induced_tally(&graph, &labeling, &ctx)?;
        if verified != predicted {
            return Err(Error::PredictionMismatch {
                theorem,
                pe0: predicted.e0,
                pe1: predicted.e1,
                ve0: verified.e0,
                ve1: verified.e1,
            });
        }
        Ok(Construction {
            theorem,
            p: self.p,
            graph,
            labeling,
            predicted,
            verified,
            hypotheses: gates,
        })
    }

    fn build(
        &self,
        ctx: &LegendreContext,
        lab1: Option<&Labeling>,
        lab2: Option<&Labeling>,
        s1: &RhoEta,
        s2: &RhoEta,
    ) -> Result<(Graph, Vec<u64>, PredictedTally)> {
        let p = ctx.p();
        let half = (p - 1) / 2;
        let g1 = &self.g1;
        let (rho1, eta1) = (s1.rho.len() as u64, s1.eta.len() as u64);
        let (rho2, eta2) = (s2.rho.len() as u64, s2.eta.len() as u64);
        let lab1 = || lab1.expect("checked by base_statistics");
        let lab2 = || lab2.expect("checked by base_statistics");

        Ok(match self.theorem {
            Theorem::CoronaPath => {
                let n = g1.order() as u64;
                let q = g1.size() as u64;
                let path = make_path((p - 1) as usize)?;
                let graph = products::corona(g1, &path)?;
                let labels = layout::corona_path(g1.order(), p);
                let predicted = EdgeTally::new(n * (p - 3) / 2 + n * half + n, n * half + n * (p - 3) / 2 + q);
                (graph, labels, predicted)
            }
            Theorem::KpTensor => {
                let sides = g1.bipartition().expect("checked by structural gate");
                let kp = crate::graph::make_complete(p as usize)?;
                let graph = products::tensor(&kp, g1)?;
                let labels = layout::complete_tensor(p, g1.order(), &sides);
                let m = g1.size() as u64;
                let each = m * p * half;
                (graph, labels, EdgeTally::new(each, each))
            }
            Theorem::Join => {
                let g2 = self.second()?;
                let nm = g1.order() as u64 / p * g2.order() as u64;
                let graph = products::join(g1, g2)?;
                let labels = layout::join(lab1(), lab2());
                let predicted = EdgeTally::new(eta1 + eta2 + nm * half + nm, rho1 + rho2 + nm * half);
                (graph, labels, predicted)
            }
            Theorem::Corona => {
                let g2 = self.second()?;
                let n = g1.order() as u64;
                let nm = n * (g2.order() as u64 / p);
                let graph = products::corona(g1, g2)?;
                let labels = layout::corona(lab1(), lab2());
                let predicted = EdgeTally::new(eta1 + n * eta2 + nm * half + nm, rho1 + n * rho2 + nm * half);
                (graph, labels, predicted)
            }
            Theorem::Lex => {
                let g2 = self.second()?;
                let n = g1.order() as u64;
                let m = g2.order() as u64 / p;
                let cross = n * m * m * p;
                let graph = products::lexicographic(g1, g2)?;
                let labels = layout::lexicographic(g1.order(), lab2());
                let predicted = EdgeTally::new(n * eta2 + cross * half + cross, n * rho2 + cross * half);
                (graph, labels, predicted)
            }
            Theorem::Cart => {
                let g2 = self.second()?;
                let n = g2.order() as u64;
                let m = g1.order() as u64 / p;
                let k = g2.size() as u64 / n;
                let nmk = n * m * k;
                let graph = products::cartesian(g1, g2)?;
                let labels = layout::blocks_by_second(lab1(), g2.order());
                let predicted = EdgeTally::new(n * eta1 + nmk * half + nmk, n * rho1 + nmk * half);
                (graph, labels, predicted)
            }
            Theorem::Tensor => {
                let g2 = self.second()?;
                let q = g2.size() as u64;
                let graph = products::tensor(g1, g2)?;
                let labels = layout::blocks_by_second(lab1(), g2.order());
                (graph, labels, EdgeTally::new(2 * eta1 * q, 2 * rho1 * q))
            }
            Theorem::Strong => {
                let g2 = self.second()?;
                let n = g2.order() as u64;
                let graph = products::strong(g1, g2)?;
                let labels = layout::blocks_by_second(lab1(), g2.order());
                let predicted = EdgeTally::new(
                    n * eta1 + 3 * half * (n - 1) + 3 * (n - 1) + 2 * eta1 * (n - 1),
                    n * rho1 + 3 * half * (n - 1) + 2 * rho1 * (n - 1),
                );
                (graph, labels, predicted)
            }
        })
    }
}

/// Window `lo..=hi` on `coeff1 * excess1 + coeff2 * excess2`, where
/// `excess = |rho| - |eta|` of each base labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceWindow {
    pub coeff1: i64,
    pub coeff2: i64,
    pub lo: i64,
    pub hi: i64,
}

impl BalanceWindow {
    fn new(coeff1: i64, coeff2: i64, lo: i64, hi: i64) -> Self {
        Self { coeff1, coeff2, lo, hi }
    }

    pub fn contains(&self, value: i64) -> bool {
        (self.lo..=self.hi).contains(&value)
    }
}

pub fn construct_corona_path(g: &Graph, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::CoronaPath, p, g.clone()).construct()
}

pub fn construct_tensor_kp(g: &Graph, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::KpTensor, p, g.clone()).construct()
}

pub fn construct_join(g1: &Graph, lab_g1: &Labeling, g2: &Graph, lab_g2: &Labeling, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Join, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g1(lab_g1.clone())
        .with_lab_g2(lab_g2.clone())
        .construct()
}

pub fn construct_corona(g1: &Graph, lab_g1: &Labeling, g2: &Graph, lab_g2: &Labeling, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Corona, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g1(lab_g1.clone())
        .with_lab_g2(lab_g2.clone())
        .construct()
}

pub fn construct_lexicographic(g1: &Graph, g2: &Graph, lab_g2: &Labeling, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Lex, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g2(lab_g2.clone())
        .construct()
}

pub fn construct_cartesian(g1: &Graph, lab_g1: &Labeling, g2: &Graph, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Cart, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g1(lab_g1.clone())
        .construct()
}

pub fn construct_tensor(g1: &Graph, lab_g1: &Labeling, g2: &Graph, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Tensor, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g1(lab_g1.clone())
        .construct()
}

pub fn construct_strong(g1: &Graph, lab_g1: &Labeling, g2: &Graph, p: u64) -> Result<Construction> {
    ConstructionRecipe::new(Theorem::Strong, p, g1.clone())
        .with_g2(g2.clone())
        .with_lab_g1(lab_g1.clone())
        .construct()
}
