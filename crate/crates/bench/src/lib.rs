//! Fixture graphs shared by the benchmarks.

use rainbow_core::graph::{gen_cycle, gen_double_c4, gen_path};
use rainbow_core::{lexicographic, Graph};

/// `(name, G, H)` pairs whose lexicographic products are solved exactly.
pub fn lex_fixtures() -> Vec<(&'static str, Graph, Graph)> {
    let p = |n| gen_path(n).expect("path order at least 1");
    vec![
        ("P5∘P4", p(5), p(4)),
        ("P3∘double_c4", p(3), gen_double_c4()),
        ("C5∘P3", gen_cycle(5).expect("cycle order at least 3"), p(3)),
    ]
}

/// The lexicographic products of [`lex_fixtures`].
pub fn lex_products() -> Vec<(&'static str, Graph)> {
    lex_fixtures().into_iter().map(|(name, g, h)| (name, lexicographic(&g, &h).0)).collect()
}
