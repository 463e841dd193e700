//! Explicit rainbow labelings of lexicographic products.
//!
//! Path products `P_n ∘ H` are labelled by concatenating two-row tiles.
//! Row one of a tile lands on the `u`-layer and row two on the `v`-layer,
//! where `u, v` come from a weight-3 2-RDF of `H` with `f(u) = {1,2}`,
//! `f(v) = {1}`. Digits: 0 = ∅, 1 = {1}, 2 = {2}, 3 = {1,2}.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{gen_glued_paths, gen_path, Graph};
use crate::labeling::{ColorSet, RainbowLabeling};
use crate::products::lexicographic;
use crate::solvers::Solver;

const TILE_TABLE: [(&str, &str); 7] = [
    ("30", "10"),
    ("030", "010"),
    ("0330", "0000"),
    ("02120", "01010"),
    ("030030", "010010"),
    ("0210210", "0100020"),
    ("02102130", "01000200"),
];

/// Glued family: the centre column, then each arm outward from the centre.
const GLUED_CENTRE: (&str, &str) = ("2", "1");
const GLUED_ARM: (&str, &str) = ("10210", "00020");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTile {
    pub length: usize,
    pub u_row: Vec<u8>,
    pub v_row: Vec<u8>,
}

fn digit_label(d: u8) -> ColorSet {
    ColorSet::from_bits(d)
}

fn parse_row(row: &str) -> Vec<u8> {
    row.bytes().map(|b| b - b'0').collect()
}

impl PatternTile {
    fn parse(u_row: &str, v_row: &str) -> Self {
        debug_assert_eq!(u_row.len(), v_row.len());
        Self { length: u_row.len(), u_row: parse_row(u_row), v_row: parse_row(v_row) }
    }

    pub fn weight(&self) -> usize {
        self.u_row.iter().chain(&self.v_row).map(|&d| digit_label(d).len()).sum()
    }
}

/// The tiles `R_2 ..= R_8`, keyed by length.
pub fn tiles() -> BTreeMap<usize, PatternTile> {
    TILE_TABLE
        .iter()
        .map(|&(u, v)| {
            let tile = PatternTile::parse(u, v);
            (tile.length, tile)
        })
        .collect()
}

/// Weight of the tiled labeling of `P_n ∘ H`: `6t + r`, plus one when `r ∈ {1, 2}`.
pub fn path_upper_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::TooSmall { what: "path order", min: 2, got: n });
    }
    let (t, r) = (n / 7, n % 7);
    Ok(6 * t + r + usize::from(matches!(r, 1 | 2)))
}

/// Tile lengths covering `n` path vertices, left to right.
pub fn path_tiling(n: usize) -> Result<Vec<usize>> {
    path_upper_bound(n)?;
    let (t, r) = (n / 7, n % 7);
    Ok(match (n, r) {
        (..=8, _) => vec![n],
        (_, 0) => vec![7; t],
        (_, 1) => {
            let mut seq = vec![7; t - 1];
            seq.push(8);
            seq
        }
        _ => {
            let mut seq = vec![7; t];
            seq.push(r);
            seq
        }
    })
}

/// Checks that `{1,2}` on `u` and `{1}` on `v` is a 2-RDF of `H`.
fn check_pair(h: &Graph, u: usize, v: usize) -> Result<()> {
    if u >= h.n() || v >= h.n() || u == v {
        return Err(Error::NoPairWitness);
    }
    let mut f = RainbowLabeling::new(2, h.n())?;
    f.set(u, ColorSet::full(2))?;
    f.set(v, ColorSet::singleton(1))?;
    if f.is_k_rainbow_dominating(h) {
        Ok(())
    } else {
        Err(Error::NoPairWitness)
    }
}

/// Writes `columns` (pairs of u/v digits) onto the layers above successive `G`-vertices.
fn place_columns(
    n_g: usize,
    h: &Graph,
    u: usize,
    v: usize,
    columns: impl IntoIterator<Item = (usize, u8, u8)>,
) -> Result<RainbowLabeling> {
    let mut f = RainbowLabeling::new(2, n_g * h.n())?;
    for (g, du, dv) in columns {
        f.set(g * h.n() + u, digit_label(du))?;
        f.set(g * h.n() + v, digit_label(dv))?;
    }
    Ok(f)
}

fn validated(f: RainbowLabeling, product: &Graph, what: &str) -> Result<RainbowLabeling> {
    f.validate(product).map_err(|e| Error::WitnessInvalid(format!("{what}: {e}")))?;
    Ok(f)
}

/// The tiled 2-RDF of `P_n ∘ H` of weight [`path_upper_bound`]`(n)`.
pub fn path_pattern_labeling(n: usize, h: &Graph, u: usize, v: usize) -> Result<RainbowLabeling> {
    let lengths = path_tiling(n)?;
    check_pair(h, u, v)?;
    let table = tiles();
    let columns = lengths
        .iter()
        .flat_map(|len| {
            let tile = &table[len];
            tile.u_row.iter().copied().zip(tile.v_row.iter().copied())
        })
        .enumerate()
        .map(|(g, (du, dv))| (g, du, dv));
    let f = place_columns(n, h, u, v, columns)?;
    let (product, _) = lexicographic(&gen_path(n)?, h);
    validated(f, &product, "path tiling")
}

/// The 2-RDF of `gen_glued_paths(m, p2) ∘ H` of weight `4m + 2`.
pub fn glued_family_labeling(m: usize, p2: usize, h: &Graph, u: usize, v: usize) -> Result<RainbowLabeling> {
    let g = gen_glued_paths(m, p2)?;
    check_pair(h, u, v)?;
    let centre = PatternTile::parse(GLUED_CENTRE.0, GLUED_CENTRE.1);
    let arm = PatternTile::parse(GLUED_ARM.0, GLUED_ARM.1);
    let mut columns = vec![(0, centre.u_row[0], centre.v_row[0])];
    for a in 0..m {
        for j in 0..arm.length {
            columns.push((1 + 5 * a + j, arm.u_row[j], arm.v_row[j]));
        }
    }
    let f = place_columns(g.n(), h, u, v, columns)?;
    let (product, _) = lexicographic(&g, h);
    validated(f, &product, "glued family")
}

impl Solver {
    /// `[k]` on `(d, 0)` for a minimum total dominating set `D` of `G`.
    pub fn total_dom_labeling(&self, g: &Graph, h: &Graph, k: usize) -> Result<RainbowLabeling> {
        let d = self.min_total_dominating_set(g)?.witness;
        layer_labeling(g, h, k, d.iter(), 0, "total domination")
    }

    /// `[k]` on `(d, w)` for a minimum dominating set `D` of `G` and a universal vertex `w` of `H`.
    pub fn universal_vertex_labeling(&self, g: &Graph, h: &Graph, k: usize) -> Result<RainbowLabeling> {
        let w = h.universal_vertex().ok_or(Error::NoUniversalVertex)?;
        let d = self.min_dominating_set(g)?.witness;
        layer_labeling(g, h, k, d.iter(), w, "universal vertex")
    }
}

fn layer_labeling(
    g: &Graph,
    h: &Graph,
    k: usize,
    vertices: impl Iterator<Item = usize>,
    at: usize,
    what: &str,
) -> Result<RainbowLabeling> {
    if h.n() == 0 {
        return Err(Error::TooSmall { what: "order of H", min: 1, got: 0 });
    }
    let (product, index) = lexicographic(g, h);
    let mut f = RainbowLabeling::new(k, product.n())?;
    for x in vertices {
        f.set(index.encode(x, at), ColorSet::full(k))?;
    }
    validated(f, &product, what)
}

pub fn total_dom_labeling(g: &Graph, h: &Graph, k: usize) -> Result<RainbowLabeling> {
    Solver::default().total_dom_labeling(g, h, k)
}

pub fn universal_vertex_labeling(g: &Graph, h: &Graph, k: usize) -> Result<RainbowLabeling> {
    Solver::default().universal_vertex_labeling(g, h, k)
}
