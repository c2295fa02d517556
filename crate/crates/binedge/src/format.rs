//! JSON documents read and written by the command line tool.

use std::path::Path;

use binedge_core::binomial::WitnessReport;
use binedge_core::graph::Graph;
use binedge_core::homology::BettiTable;
use binedge_core::poly::{Field, Ideal, MonomialOrder};
use binedge_core::primes::{CutSetFamily, PrimeSupport};
use serde::{Deserialize, Serialize};

use crate::text::{format_polynomial, parse_polynomial, Coefficient};
use crate::CliError;

/// `{"n": 4, "edges": [[1, 2], [2, 3]]}` with 1-based endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc { n: g.n(), edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect() }
    }

    /// Canonicalizes; loops, repeated edges and bad endpoints are errors.
    pub fn to_graph(&self) -> Result<Graph, CliError> {
        Ok(Graph::new(self.n, self.edges.iter().map(|&[a, b]| (a, b)))?)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let doc: GraphDoc = serde_json::from_str(&text)?;
    doc.to_graph()
}

/// A graph named by how it was obtained, with its edges for completeness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub name: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDescriptor {
    pub fn new(name: impl Into<String>, g: &Graph) -> Self {
        let GraphDoc { n, edges } = GraphDoc::from_graph(g);
        GraphDescriptor { name: name.into(), n, edges }
    }
}

/// One entry of a serialized cut set family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSetDoc {
    pub t: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub dim: usize,
    pub height: usize,
}

impl CutSetDoc {
    pub fn new(p: &PrimeSupport, n: usize) -> Self {
        CutSetDoc {
            t: p.t.to_vec(),
            components: p.comps.iter().map(|c| c.to_vec()).collect(),
            dim: p.dimension(n),
            height: p.height(n),
        }
    }
}

pub fn cutset_docs(fam: &CutSetFamily, n: usize) -> Vec<CutSetDoc> {
    fam.iter().map(|p| CutSetDoc::new(p, n)).collect()
}

pub fn order_from_name(name: &str) -> Result<MonomialOrder, CliError> {
    match name {
        "lex" => Ok(MonomialOrder::LEX),
        "degrevlex" => Ok(MonomialOrder::DEGREVLEX),
        other => Err(CliError::Usage(format!("unknown monomial order {other:?}; use lex or degrevlex"))),
    }
}

/// An ideal with its generators in the polynomial text format, tagged with
/// field and order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub field: String,
    pub order: String,
    /// Vertex count; the ring has `2n` variables.
    pub n: usize,
    pub gens: Vec<String>,
}

impl IdealDoc {
    pub fn from_ideal<F: Field>(i: &Ideal<F>) -> Self {
        let n = i.nvars() / 2;
        IdealDoc {
            field: F::label(i.params()),
            order: i.order().name().into(),
            n,
            gens: i.gens().iter().map(|g| format_polynomial(g, n)).collect(),
        }
    }

    pub fn to_ideal<F: Coefficient>(&self, params: F::Params) -> Result<Ideal<F>, CliError> {
        if self.field != F::label(params) {
            return Err(CliError::Usage(format!("ideal is over {}, expected {}", self.field, F::label(params))));
        }
        let order = order_from_name(&self.order)?;
        let gens = self.gens.iter().map(|s| parse_polynomial(s, self.n, order, params)).collect::<Result<_, _>>()?;
        Ok(Ideal::new(2 * self.n, order, params, gens)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDoc {
    pub t: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimesReport {
    pub graph: GraphDescriptor,
    pub field: String,
    pub order: String,
    pub primes: Vec<PrimeDoc>,
}

/// Aggregated invariants of one graph. Optional fields are present only when
/// they were computed in the run that produced the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph: GraphDescriptor,
    pub field: String,
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_c: Option<usize>,
    pub krull_dim: usize,
    pub height: usize,
    pub bigheight: usize,
    pub cutset_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_number: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalV {
    pub t: Vec<usize>,
    pub v: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub t: Vec<usize>,
    pub f: String,
    pub degree: u32,
    pub verified: bool,
    pub not_in_j: bool,
}

impl WitnessDoc {
    pub fn new<F: Field>(w: &WitnessReport<F>, n: usize) -> Self {
        WitnessDoc {
            t: w.t.to_vec(),
            f: format_polynomial(&w.f, n),
            degree: w.degree,
            verified: w.verified,
            not_in_j: w.not_in_j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VNumberReport {
    pub graph: GraphDescriptor,
    pub field: String,
    pub order: String,
    pub per_prime: Vec<LocalV>,
    pub v: u32,
    pub witnesses: Vec<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    /// Ring variables of the multidegree, as `x3`, `y1`, ...
    pub sigma: Vec<String>,
    pub value: usize,
}

pub fn betti_entries(t: &BettiTable, n: usize) -> Vec<BettiEntry> {
    t.iter().map(|(i, s, value)| BettiEntry { i, sigma: sigma_names(s, n), value }).collect()
}

/// Names of the variables in a multidegree mask (bit `k` is slot `k + 1`).
pub fn sigma_names(mask: u32, n: usize) -> Vec<String> {
    (0..32)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| {
            let slot = k + 1;
            if slot <= n {
                format!("x{slot}")
            } else {
                format!("y{}", slot - n)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdDoc {
    pub pd: usize,
    pub bigheight: usize,
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<BettiEntry>>,
    pub method: String,
    pub field: String,
    pub order: String,
}

pub const PD_METHOD: &str = "hochster-lex";

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}
