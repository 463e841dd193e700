//! k-rainbow labelings `f: V(G) → 2^[k]`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{gen_complete, Graph, VertexSet};
use crate::products::{cartesian, ProductIndex};

pub const MAX_K: usize = 8;

pub(crate) fn check_k(k: usize) -> Result<()> {
    if (1..=MAX_K).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidK(k))
    }
}

/// A subset of `[k] = {1, …, k}`; colour `c` is bit `c - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u8) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// `[k]`.
    pub fn full(k: usize) -> Self {
        debug_assert!(k <= MAX_K);
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub fn singleton(color: usize) -> Self {
        debug_assert!((1..=MAX_K).contains(&color));
        ColorSet(1 << (color - 1))
    }

    pub fn from_colors<I: IntoIterator<Item = usize>>(colors: I) -> Self {
        colors.into_iter().fold(ColorSet::EMPTY, |s, c| s.union(ColorSet::singleton(c)))
    }

    pub fn contains(self, color: usize) -> bool {
        (1..=MAX_K).contains(&color) && self.0 >> (color - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn colors(self) -> impl Iterator<Item = usize> {
        (1..=MAX_K).filter(move |&c| self.contains(c))
    }

    /// Whether every colour lies in `[k]`.
    pub fn within(self, k: usize) -> bool {
        self.0 & !ColorSet::full(k).0 == 0
    }

    /// Exchanges colours 1 and 2.
    pub fn swap_first_two(self) -> ColorSet {
        let low = self.0 & 0b11;
        let swapped = ((low & 1) << 1) | ((low >> 1) & 1);
        ColorSet((self.0 & !0b11) | swapped)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        write!(f, "{{")?;
        for (i, c) in self.colors().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A labeling of the vertices `0..n` by subsets of `[k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RainbowLabeling {
    k: usize,
    labels: Vec<ColorSet>,
}

impl RainbowLabeling {
    /// The all-empty labeling.
    pub fn new(k: usize, n: usize) -> Result<Self> {
        check_k(k)?;
        Ok(Self { k, labels: vec![ColorSet::EMPTY; n] })
    }

    pub fn from_labels(k: usize, labels: Vec<ColorSet>) -> Result<Self> {
        check_k(k)?;
        if let Some(v) = labels.iter().position(|l| !l.within(k)) {
            return Err(Error::MalformedLabeling(format!("label of vertex {v} uses a colour above k = {k}")));
        }
        Ok(Self { k, labels })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.labels[v]
    }

    pub fn labels(&self) -> &[ColorSet] {
        &self.labels
    }

    pub fn set(&mut self, v: usize, label: ColorSet) -> Result<()> {
        if v >= self.n() {
            return Err(Error::IndexOutOfRange { index: v, n: self.n() });
        }
        if !label.within(self.k) {
            return Err(Error::MalformedLabeling(format!("label {label} exceeds k = {}", self.k)));
        }
        self.labels[v] = label;
        Ok(())
    }

    /// ‖f‖ = Σ |f(v)|.
    pub fn weight(&self) -> usize {
        self.labels.iter().map(|l| l.len()).sum()
    }

    /// The union of all labels.
    pub fn colors_used(&self) -> ColorSet {
        self.labels.iter().fold(ColorSet::EMPTY, |a, &l| a.union(l))
    }

    /// First vertex (in index order) that is labelled ∅ and does not see all
    /// `k` colours in its open neighbourhood.
    pub fn first_violation(&self, g: &Graph) -> Option<usize> {
        let full = ColorSet::full(self.k);
        (0..g.n().min(self.n())).find(|&v| {
            self.labels[v].is_empty()
                && g.neighbors(v).fold(ColorSet::EMPTY, |acc, u| acc.union(self.labels[u])) != full
        })
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n() {
            return Err(Error::OrderMismatch { expected: g.n(), got: self.n() });
        }
        match self.first_violation(g) {
            Some(v) => Err(Error::NotValidRdf(v)),
            None => Ok(()),
        }
    }

    pub fn is_k_rainbow_dominating(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// The partition `V_A = {x : f(x) = A}` keyed by label; empty classes are omitted.
    pub fn induced_partition(&self) -> BTreeMap<ColorSet, VertexSet> {
        let n = self.n();
        let mut out: BTreeMap<ColorSet, VertexSet> = BTreeMap::new();
        for (v, &l) in self.labels.iter().enumerate() {
            out.entry(l).or_insert_with(|| VertexSet::new(n)).insert(v).expect("in range");
        }
        out
    }

    /// Vertices whose label contains `color`.
    pub fn vertices_with(&self, color: usize) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.labels[v].contains(color)))
            .expect("in range")
    }

    /// `Σ_h |f(g, h)|`, the weight carried by the H-layer above `g`.
    pub fn layer_contribution(&self, index: &ProductIndex, g: usize) -> Result<usize> {
        if self.n() != index.order() {
            return Err(Error::OrderMismatch { expected: index.order(), got: self.n() });
        }
        if g >= index.n_g() {
            return Err(Error::IndexOutOfRange { index: g, n: index.n_g() });
        }
        Ok((0..index.n_h()).map(|h| self.labels[index.encode(g, h)].len()).sum())
    }

    /// One line per vertex: `v: {i,j}` or `v: -`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{v}: {l}");
        }
        out
    }

    /// Parses the line format written by [`RainbowLabeling::to_text`]. Every
    /// vertex `0..n` must appear exactly once; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        check_k(k)?;
        let bad = |msg: String| Error::MalformedLabeling(msg);
        let mut entries: BTreeMap<usize, ColorSet> = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (v, label) = line.split_once(':').ok_or_else(|| bad(format!("missing `:` in `{line}`")))?;
            let v: usize = v.trim().parse().map_err(|_| bad(format!("bad vertex in `{line}`")))?;
            let label = label.trim();
            let set = if label == "-" || label == "{}" {
                ColorSet::EMPTY
            } else {
                let inner = label
                    .strip_prefix('{')
                    .and_then(|s| s.strip_suffix('}'))
                    .ok_or_else(|| bad(format!("bad label `{label}`")))?;
                let mut set = ColorSet::EMPTY;
                for c in inner.split(',') {
                    let c: usize = c.trim().parse().map_err(|_| bad(format!("bad colour in `{label}`")))?;
                    if !(1..=k).contains(&c) {
                        return Err(bad(format!("colour {c} outside 1..={k}")));
                    }
                    set = set.union(ColorSet::singleton(c));
                }
                set
            };
            if entries.insert(v, set).is_some() {
                return Err(bad(format!("vertex {v} listed twice")));
            }
        }
        let n = entries.len();
        if let Some((&v, _)) = entries.iter().next_back() {
            if v + 1 != n {
                return Err(bad(format!("vertices must be 0..{n} without gaps")));
            }
        }
        Self::from_labels(k, entries.into_values().collect())
    }
}

impl fmt::Debug for RainbowLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} [", self.k)?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for RainbowLabeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels.iter().map(|l| l.to_string()))
    }
}

/// `D_f = {(v, i) : i ∈ f(v)}` as a vertex set of `G □ K_k` (index `v * k + i - 1`).
pub fn rdf_to_dominating_set(g: &Graph, f: &RainbowLabeling) -> Result<VertexSet> {
    f.validate(g)?;
    let index = ProductIndex::new(g.n(), f.k());
    let mut d = VertexSet::new(index.order());
    for v in 0..g.n() {
        for c in f.get(v).colors() {
            d.insert(index.encode(v, c - 1))?;
        }
    }
    Ok(d)
}

/// Inverse of [`rdf_to_dominating_set`]: `f(v) = {i : (v, i) ∈ D}`.
pub fn dominating_set_to_rdf(g: &Graph, k: usize, d: &VertexSet) -> Result<RainbowLabeling> {
    check_k(k)?;
    let (product, index) = cartesian(g, &gen_complete(k)?);
    if d.universe() != product.n() {
        return Err(Error::OrderMismatch { expected: product.n(), got: d.universe() });
    }
    if let Some(v) = product.closed_neighborhood_of(d).first_missing() {
        return Err(Error::NotDominating(v));
    }
    let mut f = RainbowLabeling::new(k, g.n())?;
    for x in d.iter() {
        let (v, i) = index.decode(x);
        f.labels[v] = f.labels[v].union(ColorSet::singleton(i + 1));
    }
    Ok(f)
}
