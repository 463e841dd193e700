//! Exact k-rainbow domination on graphs and lexicographic products.
//!
//! The crate computes γ, γt and γrk with witnesses, optimises dominating
//! couples, builds explicit rainbow labelings of `G ∘ H`, and assembles
//! certificates for γr2(G ∘ H) that carry machine-checkable witnesses.

pub mod certify;
pub mod constructions;
pub mod couples;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod products;
pub mod solvers;
pub mod verify;

pub use certify::{CaseTag, Certificate, CertifyOptions};
pub use couples::DominatingCouple;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use labeling::{ColorSet, RainbowLabeling};
pub use products::{cartesian, lexicographic, ProductIndex};
pub use solvers::{PairWitness, SolveResult, Solver, SolverConfig};
pub use verify::{verify_corpus, Report, VerifyConfig};
