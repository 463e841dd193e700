//! Certificates for γr2(G ∘ H).
//!
//! Each connected component of `G` is classified by the behaviour of `H`
//! and certified separately; the results add up. Every certificate carries
//! a labeling of the product that validates with weight equal to the upper
//! end, and a lower-bound parameter computed from `G` whose hypotheses are
//! re-checked rather than assumed.

use std::fmt;

use serde::Serialize;

use crate::constructions::{path_pattern_labeling, path_upper_bound};
use crate::couples::DominatingCouple;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, SOLVER_CAP};
use crate::labeling::{check_k, RainbowLabeling};
use crate::products::{lexicographic, ProductIndex};
use crate::solvers::{PairWitness, Solver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    TrivialH,
    TrivialG,
    GammaEqGammaT,
    RdH2,
    RdH4Plus,
    RdH3NoPair,
    RdH3Pair,
    ComponentSum,
    /// `H` is disconnected; the value comes from an exact solve alone.
    ComponentSumNa,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::ComponentSumNa => f.write_str("ComponentSum-NA"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

/// The quantity that supplies the lower end of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LowerBound {
    /// γ(G) with a minimum dominating set; the bound is `2γ(G)`.
    Gamma { value: usize, witness: VertexSet },
    /// γt(G) with a minimum total dominating set; the bound is `2γt(G)`.
    GammaT { value: usize, witness: VertexSet },
    /// The optimum of `2|A| + 3|B|` over dominating couples.
    Couple { value: usize, witness: DominatingCouple },
    /// An exact optimum of a smaller graph, or of the product itself.
    Exact { value: usize },
    /// Sum over the components of `G`.
    Sum { value: usize },
}

impl LowerBound {
    pub fn bound(&self) -> usize {
        match self {
            LowerBound::Gamma { value, .. } | LowerBound::GammaT { value, .. } => 2 * value,
            LowerBound::Couple { value, .. } | LowerBound::Exact { value } | LowerBound::Sum { value } => *value,
        }
    }
}

/// The exact value obtained by solving an interval case outright.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refinement {
    pub value: usize,
    pub witness: RainbowLabeling,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub lo: usize,
    pub hi: usize,
    pub case: CaseTag,
    /// A 2-RDF of `G ∘ H` of weight `hi`.
    pub upper: RainbowLabeling,
    pub lower: LowerBound,
    pub citations: Vec<&'static str>,
    pub refined: Option<Refinement>,
    /// Per-component certificates when `G` is disconnected.
    pub components: Vec<Certificate>,
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi || self.refined.is_some()
    }

    pub fn value(&self) -> Option<usize> {
        if self.lo == self.hi {
            Some(self.lo)
        } else {
            self.refined.as_ref().map(|r| r.value)
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "exact {}, case {}", self.lo, self.case)
        } else if let Some(r) = &self.refined {
            write!(f, "interval [{},{}]; refined exact {}, case {}", self.lo, self.hi, r.value, self.case)
        } else {
            write!(f, "interval [{},{}], case {}", self.lo, self.hi, self.case)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Node budget for solving interval cases outright; `None` skips it.
    pub exact_budget: Option<u64>,
    /// Reject a disconnected `H` instead of falling back to an exact solve.
    pub strict: bool,
}

pub const DEFAULT_EXACT_BUDGET: u64 = 2_000_000;

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { exact_budget: Some(DEFAULT_EXACT_BUDGET), strict: false }
    }
}

/// What `H` contributes to the case split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HClass {
    pub tag: CaseTag,
    /// γr2(H).
    pub rd: usize,
    pub gamma: usize,
    pub pair: Option<PairWitness>,
}

pub const CITE_TRIVIAL_H: &str = "G ∘ K_1 is G";
pub const CITE_TRIVIAL_G: &str = "K_1 ∘ H is H";
pub const CITE_LOWER: &str = "γr2(G ∘ H) ≥ 2γ(G) for connected G and nontrivial connected H";
pub const CITE_RD2: &str = "γr2(G ∘ H) = 2γ(G) when γr2(H) = 2 and G is nontrivial and connected";
pub const CITE_RD4: &str = "γr2(G ∘ H) = 2γt(G) when γr2(H) ≥ 4 and G, H are nontrivial and connected";
pub const CITE_NO_PAIR: &str =
    "γr2(G ∘ H) = min 2|A| + 3|B| over dominating couples when γr2(H) = 3 and no minimum 2-RDF of H uses {1,2}";
pub const CITE_TOTAL_UPPER: &str = "γr2(G ∘ H) ≤ 2γt(G)";
pub const CITE_GAMMA_EQ: &str = "γr2(G ∘ H) = 2γ(G) when γ(G) = γt(G) and G, H are nontrivial and connected";
pub const CITE_COUPLE_UPPER: &str = "γrk(G ∘ H) ≤ k|A| + γrk(H)|B| for every dominating couple (A, B)";
pub const CITE_PATH_UPPER: &str = "γr2(P_n ∘ H) ≤ 6⌊n/7⌋ + r (+1 when r ∈ {1,2}) via path tiles";
pub const CITE_COMPONENTS: &str = "γr2 adds over components, and G ∘ H splits along the components of G";

/// `[min{n, γ + k − 2}, kγ]`, the range of γrk(G).
pub fn general_bounds(g: &Graph, k: usize) -> Result<(usize, usize)> {
    Solver::default().general_bounds(g, k)
}

pub fn classify_h(h: &Graph) -> Result<HClass> {
    Solver::default().classify_h(h)
}

pub fn certify_rd_lex(g: &Graph, h: &Graph) -> Result<Certificate> {
    Solver::default().certify_rd_lex(g, h, CertifyOptions::default())
}

/// Whether `π_G(V_1 ∪ V_12)` and `π_G(V_2 ∪ V_12)` dominate `G`.
pub fn projection_property(g: &Graph, index: &ProductIndex, f: &RainbowLabeling) -> Result<(bool, bool)> {
    if index.n_g() != g.n() || index.order() != f.n() {
        return Err(Error::OrderMismatch { expected: index.order(), got: f.n() });
    }
    let project = |color: usize| index.project_g(&f.vertices_with(color));
    Ok((g.is_dominating_set(&project(1)), g.is_dominating_set(&project(2))))
}

fn relabel(total: &mut RainbowLabeling, index: &ProductIndex, vertices: &[usize], part: &RainbowLabeling) -> Result<()> {
    let sub = ProductIndex::new(vertices.len(), index.n_h());
    for x in 0..part.n() {
        let (g, h) = sub.decode(x);
        total.set(index.encode(vertices[g], h), part.get(x))?;
    }
    Ok(())
}

impl Solver {
    pub fn general_bounds(&self, g: &Graph, k: usize) -> Result<(usize, usize)> {
        check_k(k)?;
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        let gamma = self.min_dominating_set(g)?.value;
        Ok((g.n().min(gamma + k - 2), k * gamma))
    }

    pub fn classify_h(&self, h: &Graph) -> Result<HClass> {
        if h.n() == 0 {
            return Err(Error::TooSmall { what: "order of H", min: 1, got: 0 });
        }
        if !h.is_connected() {
            return Err(Error::Disconnected);
        }
        let rd = self.min_rainbow(h, 2)?.value;
        let gamma = self.min_dominating_set(h)?.value;
        let pair = if rd == 3 { self.pair_witness(h)? } else { None };
        let tag = match (h.n(), rd, &pair) {
            (1, ..) => CaseTag::TrivialH,
            (_, 2, _) => CaseTag::RdH2,
            (_, 3, None) => CaseTag::RdH3NoPair,
            (_, 3, Some(_)) => CaseTag::RdH3Pair,
            _ => CaseTag::RdH4Plus,
        };
        Ok(HClass { tag, rd, gamma, pair })
    }

    pub fn certify_rd_lex(&self, g: &Graph, h: &Graph, opts: CertifyOptions) -> Result<Certificate> {
        if h.n() == 0 {
            return Err(Error::TooSmall { what: "order of H", min: 1, got: 0 });
        }
        if !h.is_connected() {
            if opts.strict {
                return Err(Error::DisconnectedH);
            }
            return self.exact_certificate(g, h, opts);
        }
        let class = self.classify_h(h)?;
        let comps = g.components();
        if comps.len() == 1 {
            return self.certify_connected(g, h, &class, opts);
        }
        let (_, index) = lexicographic(g, h);
        let mut upper = RainbowLabeling::new(2, index.order())?;
        let mut parts = Vec::with_capacity(comps.len());
        for comp in &comps {
            let vertices = comp.to_vec();
            let part = self.certify_connected(&g.induced_subgraph(&vertices), h, &class, opts)?;
            relabel(&mut upper, &index, &vertices, &part.upper)?;
            parts.push(part);
        }
        let lo = parts.iter().map(|c| c.lo).sum();
        let hi = parts.iter().map(|c| c.hi).sum();
        let refined = if lo != hi && parts.iter().all(Certificate::is_exact) {
            let mut witness = RainbowLabeling::new(2, index.order())?;
            let mut value = 0;
            let mut nodes_explored = 0;
            for (comp, part) in comps.iter().zip(&parts) {
                let (f, nodes) = match &part.refined {
                    Some(r) => (&r.witness, r.nodes_explored),
                    None => (&part.upper, 0),
                };
                relabel(&mut witness, &index, &comp.to_vec(), f)?;
                value += f.weight();
                nodes_explored += nodes;
            }
            Some(Refinement { value, witness, nodes_explored })
        } else {
            None
        };
        let mut citations = vec![CITE_COMPONENTS];
        for part in &parts {
            for c in &part.citations {
                if !citations.contains(c) {
                    citations.push(c);
                }
            }
        }
        let cert = Certificate {
            lo,
            hi,
            case: CaseTag::ComponentSum,
            upper,
            lower: LowerBound::Sum { value: lo },
            citations,
            refined,
            components: parts,
        };
        self.check_certificate(g, h, &cert)?;
        Ok(cert)
    }

    fn exact_certificate(&self, g: &Graph, h: &Graph, opts: CertifyOptions) -> Result<Certificate> {
        let (product, _) = lexicographic(g, h);
        let solver = opts.exact_budget.map_or(*self, Solver::with_node_limit);
        let sol = solver.min_rainbow(&product, 2)?;
        Ok(Certificate {
            lo: sol.value,
            hi: sol.value,
            case: CaseTag::ComponentSumNa,
            upper: sol.witness,
            lower: LowerBound::Exact { value: sol.value },
            citations: vec![],
            refined: None,
            components: vec![],
        })
    }

    fn certify_connected(&self, g: &Graph, h: &Graph, class: &HClass, opts: CertifyOptions) -> Result<Certificate> {
        let exact = |case, upper: RainbowLabeling, lower: LowerBound, citations| {
            let value = upper.weight();
            Certificate { lo: value, hi: value, case, upper, lower, citations, refined: None, components: vec![] }
        };
        if h.n() == 1 {
            let sol = self.min_rainbow(g, 2)?;
            let lower = LowerBound::Exact { value: sol.value };
            let cert = exact(CaseTag::TrivialH, sol.witness, lower, vec![CITE_TRIVIAL_H]);
            return self.checked(g, h, cert);
        }
        if g.n() == 1 {
            let sol = self.min_rainbow(h, 2)?;
            let lower = LowerBound::Exact { value: sol.value };
            let cert = exact(CaseTag::TrivialG, sol.witness, lower, vec![CITE_TRIVIAL_G]);
            return self.checked(g, h, cert);
        }
        // from here on G and H are nontrivial and connected
        let cert = match class.tag {
            CaseTag::RdH2 => {
                let d = self.min_dominating_set(g)?;
                let couple = DominatingCouple::new(VertexSet::new(g.n()), d.witness.clone())?;
                let upper = self.couple_labeling(g, h, 2, &couple)?;
                let lower = LowerBound::Gamma { value: d.value, witness: d.witness };
                exact(CaseTag::RdH2, upper, lower, vec![CITE_RD2, CITE_COUPLE_UPPER, CITE_LOWER])
            }
            CaseTag::RdH4Plus => {
                let t = self.min_total_dominating_set(g)?;
                let upper = self.total_dom_labeling(g, h, 2)?;
                let lower = LowerBound::GammaT { value: t.value, witness: t.witness };
                exact(CaseTag::RdH4Plus, upper, lower, vec![CITE_RD4, CITE_TOTAL_UPPER])
            }
            CaseTag::RdH3NoPair => {
                let c = self.min_couple_cost(g, 2, 3)?;
                let upper = self.couple_labeling(g, h, 2, &c.witness)?;
                let lower = LowerBound::Couple { value: c.value, witness: c.witness };
                exact(CaseTag::RdH3NoPair, upper, lower, vec![CITE_NO_PAIR, CITE_COUPLE_UPPER])
            }
            CaseTag::RdH3Pair => self.certify_pair_case(g, h, class, opts)?,
            CaseTag::TrivialH | CaseTag::TrivialG | CaseTag::GammaEqGammaT | CaseTag::ComponentSum | CaseTag::ComponentSumNa => {
                unreachable!("classify_h only returns H-cases")
            }
        };
        self.checked(g, h, cert)
    }

    fn certify_pair_case(&self, g: &Graph, h: &Graph, class: &HClass, opts: CertifyOptions) -> Result<Certificate> {
        let d = self.min_dominating_set(g)?;
        let t = self.min_total_dominating_set(g)?;
        let lower = LowerBound::Gamma { value: d.value, witness: d.witness };
        if d.value == t.value {
            let upper = self.total_dom_labeling(g, h, 2)?;
            let value = upper.weight();
            return Ok(Certificate {
                lo: value,
                hi: value,
                case: CaseTag::GammaEqGammaT,
                upper,
                lower,
                citations: vec![CITE_GAMMA_EQ, CITE_TOTAL_UPPER, CITE_LOWER],
                refined: None,
                components: vec![],
            });
        }
        let c = self.min_couple_cost(g, 2, 3)?;
        let mut upper = self.couple_labeling(g, h, 2, &c.witness)?;
        let mut citations = vec![CITE_LOWER, CITE_COUPLE_UPPER];
        if g.is_path() && path_upper_bound(g.n())? < c.value {
            let pair = class.pair.as_ref().ok_or(Error::NoPairWitness)?;
            let v = pair.v.ok_or(Error::NoPairWitness)?;
            upper = path_labeling_on(g, h, pair.u, v)?;
            citations.push(CITE_PATH_UPPER);
        }
        let lo = 2 * d.value;
        let hi = upper.weight();
        let refined = if lo < hi { self.refine(g, h, opts)? } else { None };
        Ok(Certificate { lo, hi, case: CaseTag::RdH3Pair, upper, lower, citations, refined, components: vec![] })
    }

    fn refine(&self, g: &Graph, h: &Graph, opts: CertifyOptions) -> Result<Option<Refinement>> {
        let Some(budget) = opts.exact_budget else {
            return Ok(None);
        };
        if g.n() * h.n() > SOLVER_CAP {
            return Ok(None);
        }
        let (product, _) = lexicographic(g, h);
        match Solver::with_node_limit(budget).min_rainbow(&product, 2) {
            Ok(sol) => Ok(Some(Refinement { value: sol.value, witness: sol.witness, nodes_explored: sol.nodes_explored })),
            Err(Error::BudgetExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn checked(&self, g: &Graph, h: &Graph, cert: Certificate) -> Result<Certificate> {
        self.check_certificate(g, h, &cert)?;
        Ok(cert)
    }

    /// Re-validates the witnesses of a certificate.
    fn check_certificate(&self, g: &Graph, h: &Graph, cert: &Certificate) -> Result<()> {
        let (product, _) = lexicographic(g, h);
        let fail = |msg: String| Err(Error::WitnessInvalid(msg));
        if cert.lo > cert.hi {
            return fail(format!("empty interval [{}, {}]", cert.lo, cert.hi));
        }
        cert.upper.validate(&product)?;
        if cert.upper.weight() != cert.hi {
            return fail(format!("upper witness weighs {} but hi = {}", cert.upper.weight(), cert.hi));
        }
        if cert.lower.bound() != cert.lo {
            return fail(format!("lower parameter gives {} but lo = {}", cert.lower.bound(), cert.lo));
        }
        match &cert.lower {
            LowerBound::Gamma { witness, value } if !g.is_dominating_set(witness) || witness.len() != *value => {
                return fail("lower-bound dominating set".into());
            }
            LowerBound::GammaT { witness, value } if !g.is_total_dominating_set(witness) || witness.len() != *value => {
                return fail("lower-bound total dominating set".into());
            }
            LowerBound::Couple { witness, value }
                if !crate::couples::is_dominating_couple(g, &witness.a, &witness.b)? || witness.cost(2, 3) != *value =>
            {
                return fail("lower-bound couple".into());
            }
            _ => {}
        }
        if let Some(r) = &cert.refined {
            r.witness.validate(&product)?;
            if r.witness.weight() != r.value || r.value < cert.lo || r.value > cert.hi {
                return fail(format!("refined value {} outside [{}, {}]", r.value, cert.lo, cert.hi));
            }
        }
        Ok(())
    }
}

/// The path tiling placed on `G ≅ P_n`, whose vertex order may differ from `gen_path`.
fn path_labeling_on(g: &Graph, h: &Graph, u: usize, v: usize) -> Result<RainbowLabeling> {
    let order = path_order(g).ok_or(Error::WitnessInvalid("graph is not a path".into()))?;
    let tiled = path_pattern_labeling(g.n(), h, u, v)?;
    let (product, index) = lexicographic(g, h);
    let mut f = RainbowLabeling::new(2, product.n())?;
    relabel(&mut f, &index, &order, &tiled)?;
    f.validate(&product)?;
    Ok(f)
}

/// Vertices of a path graph from one end to the other.
fn path_order(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_path() {
        return None;
    }
    let start = (0..g.n()).find(|&v| g.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).find(|&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}
