//! The `binedge` command line.
//!
//! [`run`] does all the work and returns the exit code and the text for both
//! streams, so the binary is a thin wrapper and tests can drive the tool
//! in-process.

use std::path::PathBuf;
use std::time::Duration;

use binedge_core::binomial::{crown_witness, verify_colon_witness, GraphIdealContext};
use binedge_core::graph::{connected_domination_number, vertex_connectivity, CrownBipartition, Family, Graph};
use binedge_core::poly::{Field, MonomialOrder};
use binedge_core::primes::{enumerate_cutsets, heights_of, krull_dimension};
use binedge_core::{Error, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::compute::{graded_betti, local_v_numbers, projective_dimension, with_pool};
use crate::format::{
    betti_entries, cutset_docs, order_from_name, read_graph, to_json, GraphDescriptor, GraphDoc, InvariantReport,
    LocalV, PdDoc, PrimeDoc, PrimesReport, VNumberReport, WitnessDoc, PD_METHOD,
};
use crate::suite::{self, SuiteConfig};
use crate::table::Table;
use crate::text::format_polynomial;
use crate::{with_field, CliError, FieldChoice};

#[derive(Debug, Parser)]
#[command(name = "binedge", version, about = "Binomial edge ideals of finite simple graphs")]
struct Cli {
    /// Coefficient field: `q` or `gf:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: FieldChoice,
    /// Monomial order: `lex` or `degrevlex`.
    #[arg(long, global = true, default_value = "lex", value_parser = order_from_name)]
    order: MonomialOrder,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// S-pair cap of a single Buchberger run.
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    /// Face cap of a single restricted complex.
    #[arg(long, global = true)]
    max_faces: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graph utilities.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Connectivity, domination and dimension invariants.
    Invariants {
        #[command(flatten)]
        source: GraphSource,
        /// Also compute the projective dimension.
        #[arg(long)]
        pd: bool,
        /// Also compute the v-number.
        #[arg(long)]
        vnumber: bool,
    },
    /// Cut sets with the cut point property.
    Cutsets {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Generators of the minimal primes.
    Primes {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Local v-numbers at every minimal prime and the v-number.
    Vnumber {
        #[command(flatten)]
        source: GraphSource,
        /// Verify the degree four colon witnesses of a crown graph.
        #[arg(long)]
        witnesses: bool,
    },
    /// Projective dimension through the lex initial ideal.
    Pd {
        #[command(flatten)]
        source: GraphSource,
        /// Include the multigraded Betti numbers of the initial ideal.
        #[arg(long)]
        betti: bool,
        /// Scan every squarefree multidegree instead of the lcm lattice.
        #[arg(long, requires = "betti")]
        exhaustive: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteName::Paper)]
        suite: SuiteName,
        /// Largest family parameter or vertex count exercised.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Run only these criteria.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u32).range(1..=14))]
        criteria: Vec<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Print a family member as a graph document.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Paper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Crown,
    Cycle,
    Path,
    Complete,
    Multipartite,
    Empty,
    Wheel,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes of a complete multipartite graph.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
}

#[derive(Debug, Args)]
struct GraphSource {
    /// Graph document to read.
    #[arg(long, conflicts_with_all = ["family", "n", "parts"], required_unless_present = "family")]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', requires = "family")]
    parts: Vec<usize>,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut session = Session { cli: &cli, stderr: String::new(), failed: false };
    match with_pool(cli.jobs, || session.dispatch()) {
        Ok(stdout) => Outcome { code: i32::from(session.failed), stdout, stderr: session.stderr },
        Err(e) => {
            session.stderr.push_str(&format!("error: {e}\n"));
            Outcome { code: e.exit_code(), stdout: String::new(), stderr: session.stderr }
        }
    }
}

struct Session<'a> {
    cli: &'a Cli,
    stderr: String,
    /// Set by `verify` when a criterion fails.
    failed: bool,
}

type Out = Result<String, CliError>;

impl Session<'_> {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(p) = self.cli.max_pairs {
            l.max_pairs = p;
        }
        if let Some(f) = self.cli.max_faces {
            l.max_faces = f;
        }
        l
    }

    fn warn(&mut self, msg: impl AsRef<str>) {
        self.stderr.push_str("warning: ");
        self.stderr.push_str(msg.as_ref());
        self.stderr.push('\n');
    }

    fn json(&self) -> bool {
        self.cli.format == OutputFormat::Json
    }

    fn dispatch(&mut self) -> Out {
        let field = self.cli.field;
        match &self.cli.command {
            Command::Graph { command: GraphCommand::Gen { family } } => {
                let fam = family_of(family.family, family.n, &family.parts)?;
                let g = self.generate(&fam)?;
                Ok(self.emit(&GraphDoc::from_graph(&g), || {
                    let mut t = Table::new(["u", "v"]);
                    for (a, b) in g.edges() {
                        t.row([a, b]);
                    }
                    t
                }))
            }
            Command::Invariants { source, pd, vnumber } => {
                let (name, g) = self.load(source)?;
                with_field!(field, F, params => self.invariants::<F>(name, g, params, *pd, *vnumber))
            }
            Command::Cutsets { source } => {
                let (_, g) = self.load(source)?;
                let docs = cutset_docs(&enumerate_cutsets(&g, &self.limits())?, g.n());
                Ok(self.emit(&docs, || {
                    let mut t = Table::new(["T", "components", "dim", "height"]);
                    for d in &docs {
                        let comps: Vec<String> = d.components.iter().map(|c| set_text(c)).collect();
                        t.row([set_text(&d.t), comps.join(" "), d.dim.to_string(), d.height.to_string()]);
                    }
                    t
                }))
            }
            Command::Primes { source } => {
                let (name, g) = self.load(source)?;
                with_field!(field, F, params => self.primes::<F>(name, g, params))
            }
            Command::Vnumber { source, witnesses } => {
                let witness_n = match (&source.family, *witnesses) {
                    (Some(FamilyName::Crown), true) => source.n,
                    (_, true) => {
                        self.warn("--witnesses applies to generated crown graphs only");
                        None
                    }
                    _ => None,
                };
                let (name, g) = self.load(source)?;
                with_field!(field, F, params => self.vnumber::<F>(name, g, params, witness_n))
            }
            Command::Pd { source, betti, exhaustive } => {
                let (_, g) = self.load(source)?;
                with_field!(field, F, params => self.pd::<F>(g, params, *betti, *exhaustive))
            }
            Command::Verify { suite: SuiteName::Paper, max_n, criteria } => self.verify(*max_n, criteria),
        }
    }

    fn generate(&mut self, fam: &Family) -> Result<Graph, CliError> {
        if let Some(c) = fam.caveat() {
            self.warn(c);
        }
        Ok(fam.generate()?)
    }

    fn load(&mut self, source: &GraphSource) -> Result<(String, Graph), CliError> {
        match (&source.graph, source.family) {
            (Some(path), _) => Ok((path.display().to_string(), read_graph(path)?)),
            (None, Some(name)) => {
                let fam = family_of(name, source.n, &source.parts)?;
                let g = self.generate(&fam)?;
                Ok((fam.to_string(), g))
            }
            (None, None) => Err(CliError::Usage("give --graph or --family".into())),
        }
    }

    fn emit<T: Serialize>(&self, doc: &T, table: impl FnOnce() -> Table) -> String {
        if self.json() {
            to_json(doc) + "\n"
        } else {
            table().render()
        }
    }

    fn context<F: Field>(&self, g: Graph, params: F::Params) -> Result<GraphIdealContext<F>, CliError> {
        Ok(GraphIdealContext::new(g, self.cli.order, params)?)
    }

    /// `Ok(None)` for invariants undefined on this graph, with a note.
    fn optional<T>(&mut self, what: &str, r: Result<T, Error>) -> Result<Option<T>, CliError> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ (Error::Domain(_) | Error::Precondition(_))) => {
                self.warn(format!("{what} omitted: {e}"));
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }

    fn invariants<F: Field>(&mut self, name: String, g: Graph, params: F::Params, pd: bool, vnumber: bool) -> Out {
        let limits = self.limits();
        let fam = enumerate_cutsets(&g, &limits)?;
        let h = heights_of(&g, &fam);
        let kappa = self.optional("kappa", vertex_connectivity(&g))?;
        let gamma_c = self.optional("gamma_c", connected_domination_number(&g))?;
        let krull_dim = krull_dimension(&g, &limits)?;
        let (pd, v_number) = if pd || vnumber {
            let ctx = self.context::<F>(g.clone(), params)?;
            let pd =
                if pd { Some(projective_dimension(&ctx, self.cli.field.rank_field(), &limits)?.0.pd) } else { None };
            let v = if vnumber {
                let r = local_v_numbers(&ctx, &limits).map(|all| all.into_iter().map(|(_, v)| v).min().unwrap_or(0));
                self.optional("v_number", r)?
            } else {
                None
            };
            (pd, v)
        } else {
            (None, None)
        };
        let report = InvariantReport {
            graph: GraphDescriptor::new(name, &g),
            field: self.cli.field.label(),
            order: self.cli.order.name().into(),
            kappa,
            gamma_c,
            krull_dim,
            height: h.height,
            bigheight: h.bigheight,
            cutset_count: fam.len(),
            pd,
            v_number,
        };
        Ok(self.emit(&report, || {
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            Table::pairs([
                ("graph", report.graph.name.clone()),
                ("kappa", opt(report.kappa)),
                ("gamma_c", opt(report.gamma_c)),
                ("krull_dim", report.krull_dim.to_string()),
                ("height", report.height.to_string()),
                ("bigheight", report.bigheight.to_string()),
                ("cutset_count", report.cutset_count.to_string()),
                ("pd", opt(report.pd)),
                ("v_number", opt(report.v_number.map(|v| v as usize))),
            ])
        }))
    }

    fn primes<F: Field>(&mut self, name: String, g: Graph, params: F::Params) -> Out {
        let ctx = self.context::<F>(g.clone(), params)?;
        let fam = enumerate_cutsets(&g, &self.limits())?;
        let primes = fam
            .iter()
            .map(|p| {
                let ideal = ctx.minimal_prime_ideal(p.t)?;
                Ok(PrimeDoc {
                    t: p.t.to_vec(),
                    components: p.comps.iter().map(|c| c.to_vec()).collect(),
                    gens: ideal.gens().iter().map(|f| format_polynomial(f, g.n())).collect(),
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let report = PrimesReport {
            graph: GraphDescriptor::new(name, &g),
            field: self.cli.field.label(),
            order: self.cli.order.name().into(),
            primes,
        };
        Ok(self.emit(&report, || {
            let mut t = Table::new(["T", "generators"]);
            for p in &report.primes {
                t.row([set_text(&p.t), p.gens.join(", ")]);
            }
            t
        }))
    }

    fn vnumber<F: Field>(&mut self, name: String, g: Graph, params: F::Params, crown_n: Option<usize>) -> Out {
        let limits = self.limits();
        let ctx = self.context::<F>(g.clone(), params)?;
        let per_prime = local_v_numbers(&ctx, &limits)?;
        let v = per_prime.iter().map(|&(_, v)| v).min().expect("the empty set is a cut set");
        let witnesses = match crown_n {
            Some(n) if n >= 3 => {
                let CrownBipartition { x, y } = CrownBipartition::new(n)?;
                let sets: Vec<_> = per_prime
                    .iter()
                    .map(|&(t, _)| t)
                    .filter(|t| !t.is_empty() && !(n == 3 && (*t == x || *t == y)))
                    .collect();
                sets.par_iter()
                    .map(|&t| {
                        Ok(WitnessDoc::new(&verify_colon_witness(&ctx, t, &crown_witness(&ctx, t)?, &limits)?, n))
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            }
            Some(_) => {
                self.warn("witnesses need a crown with n >= 3");
                Vec::new()
            }
            None => Vec::new(),
        };
        let report = VNumberReport {
            graph: GraphDescriptor::new(name, &g),
            field: self.cli.field.label(),
            order: self.cli.order.name().into(),
            per_prime: per_prime.iter().map(|&(t, v)| LocalV { t: t.to_vec(), v }).collect(),
            v,
            witnesses,
        };
        Ok(self.emit(&report, || {
            let mut t = Table::new(["T", "local v", "witness", "verified"]);
            for lv in &report.per_prime {
                let w = report.witnesses.iter().find(|w| w.t == lv.t);
                t.row([
                    set_text(&lv.t),
                    lv.v.to_string(),
                    w.map_or(String::new(), |w| w.f.clone()),
                    w.map_or(String::new(), |w| w.verified.to_string()),
                ]);
            }
            t.row(["v", &report.v.to_string(), "", ""]);
            t
        }))
    }

    fn pd<F: Field>(&mut self, g: Graph, params: F::Params, betti: bool, exhaustive: bool) -> Out {
        let limits = self.limits();
        if self.cli.order != MonomialOrder::LEX {
            self.warn("pd always uses the lex initial ideal; --order is ignored");
        }
        let ctx = GraphIdealContext::<F>::new(g.clone(), MonomialOrder::LEX, params)?;
        let rank = self.cli.field.rank_field();
        let (report, mi) = projective_dimension(&ctx, rank, &limits)?;
        let betti =
            if betti { Some(betti_entries(&graded_betti(&mi, rank, exhaustive, &limits)?, g.n())) } else { None };
        let doc = PdDoc {
            pd: report.pd,
            bigheight: report.bigheight,
            equal: report.equal,
            betti,
            method: PD_METHOD.into(),
            field: self.cli.field.label(),
            order: MonomialOrder::LEX.name().into(),
        };
        Ok(self.emit(&doc, || {
            let mut t = Table::pairs([
                ("pd", doc.pd.to_string()),
                ("bigheight", doc.bigheight.to_string()),
                ("equal", doc.equal.to_string()),
            ]);
            for b in doc.betti.iter().flatten() {
                t.row([format!("beta_{} [{}]", b.i, b.sigma.join(" ")), b.value.to_string()]);
            }
            t
        }))
    }

    fn verify(&mut self, max_n: usize, only: &[u32]) -> Out {
        let cfg = SuiteConfig { max_n, field: self.cli.field, limits: self.limits() };
        let ids: Vec<u32> =
            suite::CRITERIA.iter().map(|c| c.0).filter(|id| only.is_empty() || only.contains(id)).collect();
        let mut docs = Vec::new();
        let mut lines = String::new();
        for id in ids {
            let r = suite::run(id, &cfg);
            self.failed |= !r.passed();
            lines.push_str(&format!("{r}\n"));
            docs.push(CriterionDoc {
                id: r.id,
                title: r.title.into(),
                field: r.field.label(),
                status: format!("{:?}", r.status).to_lowercase(),
                cases: r.cases,
                elapsed_ms: millis(r.elapsed),
                budget_ms: millis(r.budget),
                detail: r.detail,
            });
        }
        Ok(if self.json() { to_json(&docs) + "\n" } else { lines })
    }
}

#[derive(Debug, Serialize)]
struct CriterionDoc {
    id: u32,
    title: String,
    field: String,
    status: String,
    cases: usize,
    elapsed_ms: u128,
    budget_ms: u128,
    detail: String,
}

fn millis(d: Duration) -> u128 {
    d.as_millis()
}

fn set_text(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn family_of(name: FamilyName, n: Option<usize>, parts: &[usize]) -> Result<Family, CliError> {
    if name == FamilyName::Multipartite {
        if parts.is_empty() {
            return Err(CliError::Usage("multipartite needs --parts".into()));
        }
        return Ok(Family::CompleteMultipartite(parts.to_vec()));
    }
    let n = n.ok_or_else(|| CliError::Usage("--n is required for this family".into()))?;
    Ok(match name {
        FamilyName::Crown => Family::Crown(n),
        FamilyName::Cycle => Family::Cycle(n),
        FamilyName::Path => Family::Path(n),
        FamilyName::Complete => Family::Complete(n),
        FamilyName::Empty => Family::Empty(n),
        FamilyName::Wheel => Family::Wheel(n),
        FamilyName::Multipartite => unreachable!(),
    })
}
