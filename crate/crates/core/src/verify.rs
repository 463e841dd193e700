//! Corpus verification: every connected `G` up to a given order against a
//! list of `H`, each product solved exactly and compared with the bounds,
//! case values, constructions and projection properties.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{projection_property, CaseTag, CertifyOptions};
use crate::constructions::path_upper_bound;
use crate::error::{Error, Result};
use crate::graph::{enumerate_connected_graphs, to_graph6, Graph, SOLVER_CAP};
use crate::products::lexicographic;
use crate::solvers::Solver;

/// Upper limit on labelings enumerated for one projection check.
pub const LEMMA_ENUM_CAP: usize = 500_000;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub ng_max: usize,
    pub h_list: Vec<(String, Graph)>,
    /// Largest product order that is solved.
    pub product_cap: usize,
    /// Largest product order whose minimum 2-RDFs are enumerated.
    pub lemma_cap: usize,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    pub node_limit: u64,
}

impl VerifyConfig {
    pub fn new(ng_max: usize, h_list: Vec<(String, Graph)>, product_cap: usize) -> Self {
        Self { ng_max, h_list, product_cap, lemma_cap: 14, workers: 0, node_limit: crate::solvers::DEFAULT_NODE_LIMIT }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub g: String,
    pub h: String,
    pub check: &'static str,
    pub detail: String,
}

/// Exact value against the path tiling bound, for path `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub h: String,
    pub exact: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub tasks: usize,
    /// Number of times each check ran.
    pub checks: BTreeMap<&'static str, usize>,
    /// Certificates issued, by case.
    pub cases: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    pub conjecture: Vec<ConjectureRow>,
    /// Tasks abandoned because a search ran out of budget.
    pub incomplete: Vec<String>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn total_checks(&self) -> usize {
        self.checks.values().sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.incomplete.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tasks {}", self.tasks);
        for (name, count) in &self.checks {
            let _ = writeln!(out, "check {name} {count}");
        }
        for (case, count) in &self.cases {
            let _ = writeln!(out, "case {case} {count}");
        }
        for row in &self.conjecture {
            let verdict = if row.exact == row.bound { "equal" } else { "below" };
            let _ = writeln!(out, "conjecture P_{} {} exact {} bound {} {verdict}", row.n, row.h, row.exact, row.bound);
        }
        for v in &self.violations {
            let _ = writeln!(out, "violation {} G={} H={} {}", v.check, v.g, v.h, v.detail);
        }
        for t in &self.incomplete {
            let _ = writeln!(out, "incomplete {t}");
        }
        let _ = writeln!(out, "{} violations", self.violations.len());
        out
    }

    fn absorb(&mut self, part: TaskOutcome) {
        self.tasks += 1;
        for (name, count) in part.checks {
            *self.checks.entry(name).or_default() += count;
        }
        if let Some(case) = part.case {
            *self.cases.entry(case.to_string()).or_default() += 1;
        }
        self.violations.extend(part.violations);
        self.conjecture.extend(part.conjecture);
        self.incomplete.extend(part.incomplete);
    }
}

#[derive(Default)]
struct TaskOutcome {
    checks: BTreeMap<&'static str, usize>,
    case: Option<CaseTag>,
    violations: Vec<Violation>,
    conjecture: Vec<ConjectureRow>,
    incomplete: Option<String>,
}

struct Task<'a> {
    g: Graph,
    h_name: &'a str,
    h: &'a Graph,
}

impl TaskOutcome {
    fn check(&mut self, task: &Task<'_>, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checks.entry(name).or_default() += 1;
        if !ok {
            self.violations.push(Violation {
                g: to_graph6(&task.g),
                h: task.h_name.to_string(),
                check: name,
                detail: detail(),
            });
        }
    }
}

pub fn verify_corpus(config: &VerifyConfig) -> Result<Report> {
    if config.ng_max == 0 {
        return Err(Error::TooSmall { what: "largest order of G", min: 1, got: 0 });
    }
    if config.product_cap > SOLVER_CAP {
        return Err(Error::TooLarge { what: "product cap", max: SOLVER_CAP, got: config.product_cap });
    }
    let start = Instant::now();
    let mut tasks = Vec::new();
    for n in 1..=config.ng_max {
        for g in enumerate_connected_graphs(n)? {
            for (name, h) in &config.h_list {
                if n * h.n() <= config.product_cap {
                    tasks.push(Task { g: g.clone(), h_name: name, h });
                }
            }
        }
    }
    let solver = Solver::with_node_limit(config.node_limit);
    let run = || -> Vec<TaskOutcome> { tasks.par_iter().map(|t| run_task(&solver, config, t)).collect() };
    let outcomes = if config.workers > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(config.workers).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    } else {
        run()
    };
    let mut report = Report::default();
    for o in outcomes {
        report.absorb(o);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn run_task(solver: &Solver, config: &VerifyConfig, task: &Task<'_>) -> TaskOutcome {
    let mut out = TaskOutcome::default();
    if let Err(e) = check_task(solver, config, task, &mut out) {
        let label = format!("G={} H={}: {e}", to_graph6(&task.g), task.h_name);
        match e {
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => out.incomplete = Some(label),
            other => out.check(task, "error", false, || other.to_string()),
        }
    }
    out
}

fn check_task(solver: &Solver, config: &VerifyConfig, task: &Task<'_>, out: &mut TaskOutcome) -> Result<()> {
    let (g, h) = (&task.g, task.h);
    let (product, index) = lexicographic(g, h);
    let exact = solver.min_rainbow(&product, 2)?;
    let rd = exact.value;
    let g_nontrivial = g.n() >= 2;
    let h_nontrivial = h.n() >= 2 && h.is_connected();

    if 2 * product.n() <= SOLVER_CAP {
        let via = solver.min_rainbow_via_cartesian(&product, 2)?.value;
        out.check(task, "rainbow_equals_cartesian_domination", via == rd, || format!("direct {rd}, via G□K_2 {via}"));
    }
    let (lo, hi) = solver.general_bounds(&product, 2)?;
    out.check(task, "general_bounds", lo <= rd && rd <= hi, || format!("{rd} outside [{lo}, {hi}]"));

    let gamma = solver.min_dominating_set(g)?.value;
    if h_nontrivial {
        out.check(task, "lower_2gamma", rd >= 2 * gamma, || format!("{rd} < 2γ(G) = {}", 2 * gamma));
    }
    if g_nontrivial {
        let f = solver.total_dom_labeling(g, h, 2)?;
        let gt = solver.min_total_dominating_set(g)?.value;
        out.check(task, "upper_2gammat", rd <= 2 * gt && f.weight() == 2 * gt, || {
            format!("{rd} vs 2γt(G) = {}, labeling weight {}", 2 * gt, f.weight())
        });
    }
    if h.universal_vertex().is_some() {
        let f = solver.universal_vertex_labeling(g, h, 2)?;
        out.check(task, "upper_2gamma_universal", rd <= f.weight() && f.weight() == 2 * gamma, || {
            format!("{rd} vs universal-vertex labeling of weight {}", f.weight())
        });
    }
    if h.n() >= 2 {
        let rd_h = solver.min_rainbow(h, 2)?.value;
        let couple = solver.min_couple_cost(g, 2, rd_h)?;
        let f = solver.couple_labeling(g, h, 2, &couple.witness)?;
        let ok = f.weight() == couple.value && rd <= couple.value && f.is_k_rainbow_dominating(&product);
        out.check(task, "couple_labeling", ok, || format!("{rd} vs couple optimum {} (labeling {})", couple.value, f.weight()));
    }

    let opts = CertifyOptions { exact_budget: None, strict: true };
    if h.is_connected() {
        let cert = solver.certify_rd_lex(g, h, opts)?;
        out.case = Some(cert.case);
        let ok = match cert.value() {
            Some(v) => v == rd,
            None => cert.lo <= rd && rd <= cert.hi,
        };
        out.check(task, "certificate", ok, || format!("{cert} but exact {rd}"));

        if g.is_path() && g.n() >= 2 && solver.classify_h(h)?.tag == CaseTag::RdH3Pair {
            out.conjecture.push(ConjectureRow { n: g.n(), h: task.h_name.to_string(), exact: rd, bound: path_upper_bound(g.n())? });
        }
    }

    if g_nontrivial && h_nontrivial && product.n() <= config.lemma_cap {
        let all = solver.enumerate_min_2rdfs(&product, LEMMA_ENUM_CAP)?;
        let props: Vec<(bool, bool)> =
            all.iter().map(|f| projection_property(g, &index, f)).collect::<Result<_>>()?;
        if h.n() >= 3 {
            let bad = props.iter().position(|&(a, b)| !(a && b));
            out.check(task, "projection_all_minimum", bad.is_none(), || {
                format!("minimum 2-RDF #{} of {} fails", bad.unwrap_or(0), all.len())
            });
        } else {
            out.check(task, "projection_some_minimum", props.iter().any(|&(a, b)| a && b), || {
                format!("none of {} minimum 2-RDFs has both projections dominating", all.len())
            });
        }
    }
    Ok(())
}
