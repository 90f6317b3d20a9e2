//! Exact extremal numbers by branch-and-bound over the lex-ordered list of
//! candidate edges, with an optional symmetry reduction on the first
//! included edge.

use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};
use crate::hypergraph::{all_r_sets, binom, Cgh, Edge};
use crate::patterns::{
    contains_disjoint_segments, contains_stack, contains_tight_path, contains_zigzag, StackMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternPredicate {
    TightPath(usize),
    Zigzag(usize),
    Stack(usize),
    DisjointSegments(usize),
}

impl PatternPredicate {
    pub fn k(&self) -> usize {
        match *self {
            PatternPredicate::TightPath(k)
            | PatternPredicate::Zigzag(k)
            | PatternPredicate::Stack(k)
            | PatternPredicate::DisjointSegments(k) => k,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PatternPredicate::TightPath(_) => "tight-path",
            PatternPredicate::Zigzag(_) => "zigzag",
            PatternPredicate::Stack(_) => "stack",
            PatternPredicate::DisjointSegments(_) => "disjoint-segments",
        }
    }

    pub fn occurs_in(&self, h: &Cgh) -> Result<bool> {
        match *self {
            PatternPredicate::TightPath(k) => Ok(contains_tight_path(h, k)),
            PatternPredicate::Zigzag(k) => contains_zigzag(h, k),
            PatternPredicate::Stack(k) => contains_stack(h, k, StackMode::Exhaustive),
            PatternPredicate::DisjointSegments(k) => contains_disjoint_segments(h, k),
        }
    }

    /// Zigzags, stacks and crossing-free matchings depend on the convex
    /// order, so only the dihedral group preserves them. Tight paths are
    /// order-free and admit the full symmetric group.
    pub fn order_free(&self) -> bool {
        matches!(self, PatternPredicate::TightPath(_))
    }
}

/// Which group the first-edge orbit reduction uses. `Full` (the symmetric
/// group) is only sound for patterns invariant under arbitrary relabeling,
/// i.e. tight paths; `Dihedral` (rotations and reflections of the cycle) is
/// sound for every convex pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryMode {
    Off,
    Dihedral,
    Full,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Maximum number of search-tree nodes before giving up on exactness.
    pub node_budget: Option<u64>,
    /// Restrict the lex-least included edge to its orbit representative.
    pub symmetry: SymmetryMode,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: None, symmetry: SymmetryMode::Dihedral }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub r: usize,
    pub pattern: String,
    pub k: usize,
    pub max_edges: usize,
    pub witness: Vec<Edge>,
    pub nodes_explored: u64,
    /// False when the node budget ran out; `max_edges` is then only a
    /// lower bound.
    pub exact: bool,
}

/// Orbit of an r-set under the dihedral group of the n-cycle.
fn dihedral_orbit(n: usize, e: &Edge) -> Vec<Edge> {
    let mut orbit = Vec::with_capacity(2 * n);
    for a in 0..n {
        let mut rot: Edge = e.iter().map(|&v| (v + a) % n).collect();
        rot.sort_unstable();
        let mut refl: Edge = e.iter().map(|&v| (n + a - v) % n).collect();
        refl.sort_unstable();
        orbit.push(rot);
        orbit.push(refl);
    }
    orbit
}

fn is_orbit_min(n: usize, e: &Edge, mode: SymmetryMode) -> bool {
    match mode {
        SymmetryMode::Off => true,
        // symmetric group: the unique orbit representative is {0, ..., r-1}
        SymmetryMode::Full => e.iter().copied().eq(0..e.len()),
        SymmetryMode::Dihedral => dihedral_orbit(n, e).iter().all(|f| e <= f),
    }
}

struct Searcher<'a> {
    candidates: &'a [Edge],
    pattern: PatternPredicate,
    config: &'a SearchConfig,
    upper_bound: Option<usize>,
    best: Vec<Edge>,
    nodes: u64,
    exact: bool,
}

impl Searcher<'_> {
    fn run(&mut self, current: &mut Cgh, index: usize, chosen: &mut Vec<Edge>) -> Result<()> {
        self.nodes += 1;
        if let Some(budget) = self.config.node_budget {
            if self.nodes > budget {
                self.exact = false;
                return Ok(());
            }
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if let Some(ub) = self.upper_bound {
            if self.best.len() >= ub {
                return Ok(());
            }
        }
        if index == self.candidates.len()
            || chosen.len() + (self.candidates.len() - index) <= self.best.len()
        {
            return Ok(());
        }
        let edge = &self.candidates[index];
        let admissible =
            !chosen.is_empty() || is_orbit_min(current.n(), edge, self.config.symmetry);
        if admissible {
            current.insert_edge(edge.clone())?;
            if !self.pattern.occurs_in(current)? {
                chosen.push(edge.clone());
                self.run(current, index + 1, chosen)?;
                chosen.pop();
            }
            current.remove_edge(edge);
        }
        self.run(current, index + 1, chosen)
    }
}

/// The largest number of edges of an r-uniform cgh on n vertices containing
/// no copy of the pattern.
pub fn max_edges_avoiding(
    n: usize,
    r: usize,
    pattern: PatternPredicate,
    config: &SearchConfig,
) -> Result<ExtremalResult> {
    if n < r || r < 2 {
        return Err(CghError::InvalidParam(format!("need n >= r >= 2, got n={n}, r={r}")));
    }
    if config.symmetry == SymmetryMode::Full && !pattern.order_free() {
        return Err(CghError::InvalidParam(format!(
            "full symmetric-group reduction is unsound for the order-sensitive {} pattern",
            pattern.name()
        )));
    }
    let candidates = all_r_sets(n, r);
    let upper_bound = match pattern {
        PatternPredicate::TightPath(k) => {
            let ub = (k as i128 - 1) * binom(n, r - 1);
            usize::try_from(ub.max(0)).ok().map(|u| u.min(candidates.len()))
        }
        _ => None,
    };
    let mut searcher = Searcher {
        candidates: &candidates,
        pattern,
        config,
        upper_bound,
        best: Vec::new(),
        nodes: 0,
        exact: true,
    };
    let mut current = Cgh::new(n, r)?;
    searcher.run(&mut current, 0, &mut Vec::new())?;
    Ok(ExtremalResult {
        n,
        r,
        pattern: pattern.name().to_string(),
        k: pattern.k(),
        max_edges: searcher.best.len(),
        witness: searcher.best,
        nodes_explored: searcher.nodes,
        exact: searcher.exact,
    })
}

/// CSV table of extremal numbers alongside the bound formulas; bound
/// columns are filled for tight paths and left empty otherwise.
pub fn extremal_table(
    rows: &[(usize, usize, PatternPredicate)],
    config: &SearchConfig,
) -> Result<String> {
    let mut out = String::from("n,r,k,pattern,max_edges,exact,bound_thm2,bound_conj1,bound_trivial\n");
    for &(n, r, pattern) in rows {
        let res = max_edges_avoiding(n, r, pattern, config)?;
        let bounds = if pattern.order_free() {
            let b = crate::verify::bound_values(n, r, pattern.k())?;
            format!("{},{},{}", b.thm2, b.conj1, b.trivial)
        } else {
            ",,".to_string()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            n, r, res.k, res.pattern, res.max_edges, res.exact, bounds
        ));
    }
    Ok(out)
}
