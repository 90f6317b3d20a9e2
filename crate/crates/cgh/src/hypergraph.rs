//! The r-uniform hypergraph container on a cyclic ground set, with shadow,
//! link and neighborhood, plus the plain-text interchange format.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};
use crate::ground::CyclicGround;

pub type Edge = Vec<usize>;

/// An r-uniform convex geometric hypergraph. Edges are stored as sorted
/// ascending r-tuples; traversal orders live in pattern types, never here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cgh {
    ground: CyclicGround,
    r: usize,
    edges: BTreeSet<Edge>,
}

impl Cgh {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(CghError::InvalidParam(format!("uniformity must be >= 2, got {r}")));
        }
        Ok(Cgh { ground: CyclicGround::new(n)?, r, edges: BTreeSet::new() })
    }

    pub fn from_edges<I>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut h = Cgh::new(n, r)?;
        for e in edges {
            h.insert_edge(e)?;
        }
        Ok(h)
    }

    pub fn ground(&self) -> &CyclicGround {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Sorts and validates the edge, then inserts it. Duplicates are ignored.
    pub fn insert_edge(&mut self, mut e: Edge) -> Result<()> {
        if e.len() != self.r {
            return Err(CghError::BadEdge(e.clone(), format!("expected {} vertices", self.r)));
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(CghError::BadEdge(e.clone(), "repeated vertex".into()));
        }
        if let Some(&v) = e.last() {
            self.ground.check_vertex(v)?;
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: &[usize]) -> bool {
        self.edges.remove(e)
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        debug_assert!(e.windows(2).all(|w| w[0] < w[1]));
        self.edges.contains(e)
    }

    /// Membership test for an unsorted candidate edge.
    pub fn contains_edge_unsorted(&self, e: &[usize]) -> bool {
        let mut s = e.to_vec();
        s.sort_unstable();
        self.edges.contains(&s)
    }

    /// The shadow `∂H`: all distinct (r−1)-sets obtained by deleting one
    /// vertex from an edge.
    pub fn shadow(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            for i in 0..e.len() {
                let mut f = e.clone();
                f.remove(i);
                out.insert(f);
            }
        }
        out
    }

    /// The link `H_v = { e ∖ {v} : v ∈ e ∈ H }`.
    pub fn link(&self, v: usize) -> Result<BTreeSet<Edge>> {
        self.ground.check_vertex(v)?;
        let mut out = BTreeSet::new();
        for e in &self.edges {
            if let Ok(i) = e.binary_search(&v) {
                let mut f = e.clone();
                f.remove(i);
                out.insert(f);
            }
        }
        Ok(out)
    }

    /// All vertices sharing an edge with `v`.
    pub fn neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.ground.check_vertex(v)?;
        let mut out = BTreeSet::new();
        for e in &self.edges {
            if e.binary_search(&v).is_ok() {
                out.extend(e.iter().copied().filter(|&w| w != v));
            }
        }
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// Canonical text serialization: header `n r m`, then one sorted edge
    /// per line, edges in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.n(), self.r, self.edges.len());
        for e in &self.edges {
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", words.join(" "));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| CghError::Parse { line: 1, col: 1, msg: "empty file".into() })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 3 {
            return Err(CghError::Parse {
                line: 1,
                col: 1,
                msg: format!("header must be 'n r m', got {head:?}"),
            });
        }
        let parse_num = |tok: &str, line: usize, col: usize| -> Result<usize> {
            tok.parse().map_err(|_| CghError::Parse {
                line,
                col,
                msg: format!("expected an integer, got '{tok}'"),
            })
        };
        let n = parse_num(head[0], 1, 1)?;
        let r = parse_num(head[1], 1, 2)?;
        let m = parse_num(head[2], 1, 3)?;
        let mut h = Cgh::new(n, r)?;
        let mut count = 0usize;
        for (idx, raw) in lines {
            let line_no = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let mut e = Vec::with_capacity(r);
            for (col, tok) in raw.split_whitespace().enumerate() {
                e.push(parse_num(tok, line_no, col + 1)?);
            }
            h.insert_edge(e).map_err(|err| CghError::Parse {
                line: line_no,
                col: 1,
                msg: err.to_string(),
            })?;
            count += 1;
        }
        if count != m || h.len() != m {
            return Err(CghError::Parse {
                line: 1,
                col: 3,
                msg: format!("header claims {m} edges, found {count} ({} distinct)", h.len()),
            });
        }
        Ok(h)
    }
}

/// All r-subsets of `0..n` as sorted tuples, in lexicographic order.
pub fn all_r_sets(n: usize, r: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Edge = (0..r).collect();
    loop {
        out.push(cur.clone());
        // next combination
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - r {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The complete r-graph on `n` vertices.
pub fn complete(n: usize, r: usize) -> Result<Cgh> {
    Cgh::from_edges(n, r, all_r_sets(n, r))
}

/// Binomial coefficient as i128; panics on overflow (desk scale only).
pub fn binom(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Derives a per-instance RNG stream from a master seed and instance index,
/// so harness runs are reproducible and schedule-independent.
pub fn instance_rng(master_seed: u64, index: u64) -> ChaCha12Rng {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&index.to_le_bytes());
    seed[16..24].copy_from_slice(&0x9e37_79b9_7f4a_7c15u64.to_le_bytes());
    ChaCha12Rng::from_seed(seed)
}

/// Random cgh: every r-set of `0..n` is included independently with
/// probability `p`, iterating r-sets in lexicographic order.
pub fn random_cgh(n: usize, r: usize, p: f64, seed: u64) -> Result<Cgh> {
    random_cgh_with(n, r, p, &mut instance_rng(seed, 0))
}

pub fn random_cgh_with(n: usize, r: usize, p: f64, rng: &mut impl Rng) -> Result<Cgh> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CghError::InvalidParam(format!("probability {p} outside [0,1]")));
    }
    let mut h = Cgh::new(n, r)?;
    for e in all_r_sets(n, r) {
        if rng.random::<f64>() < p {
            h.insert_edge(e)?;
        }
    }
    Ok(h)
}

/// All 2-graphs on `n` vertices, for exhaustive small-scale sweeps.
/// Emits every subset of the C(n,2) possible edges; 2^15 graphs at n = 6.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Cgh> {
    let pairs = all_r_sets(n, 2);
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<Edge> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        Cgh::from_edges(n, 2, edges).expect("valid edges")
    })
}

/// Checks that a candidate edge list covers pairwise-distinct vertices.
pub fn pairwise_disjoint(edges: &[&Edge]) -> bool {
    let mut seen = HashSet::new();
    for e in edges {
        for &v in e.iter() {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    true
}
