//! Generators for the extremal constructions, each paired with its exact
//! edge count and the pattern it is claimed to avoid.

use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};
use crate::hypergraph::{all_r_sets, binom, Cgh, Edge};
use crate::Rat;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub cgh: Cgh,
    pub edge_count: usize,
    /// Coefficient of C(n, r-1) in the predicted leading term.
    pub predicted_leading_term: Rat,
    /// The named pattern this construction must avoid.
    pub claim: String,
    pub notes: Vec<String>,
}

impl ConstructionReport {
    fn new(cgh: Cgh, coeff: Rat, claim: impl Into<String>) -> Self {
        let edge_count = cgh.len();
        ConstructionReport {
            cgh,
            edge_count,
            predicted_leading_term: coeff,
            claim: claim.into(),
            notes: Vec::new(),
        }
    }
}

/// How the adjacent-pair index `h` of the middle layers is read: with the
/// wraparound pair `(v_{r-1}, v_0)` included (one reading of the index range on an
/// r-tuple) or without it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairIndexMode {
    Cyclic,
    Adjacent,
}

/// All r-sets whose pairwise cyclic distances are at most k−1 (k odd).
/// Avoids k-stacks: the middle edge of a stack has all pairs at distance ≥ k.
pub fn short_pairs_construction(n: usize, r: usize, k: usize) -> Result<ConstructionReport> {
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if k.is_multiple_of(2) || k < 3 {
        return Err(CghError::InvalidParam(format!(
            "short-pairs construction requires odd k >= 3, got {k}"
        )));
    }
    if n <= 2 * (k - 1) {
        return Err(CghError::InvalidParam(format!(
            "need n > 2(k-1) = {}, got {n}",
            2 * (k - 1)
        )));
    }
    let mut h = Cgh::new(n, r)?;
    let ground = *h.ground();
    for e in all_r_sets(n, r) {
        let ok = e
            .iter()
            .enumerate()
            .all(|(i, &u)| e[i + 1..].iter().all(|&v| ground.ell(u, v).unwrap() < k));
        if ok {
            h.insert_edge(e)?;
        }
    }
    let coeff = Rat::new((k as i128 - 1) * (r as i128 - 1), 1);
    Ok(ConstructionReport::new(h, coeff, format!("stack({k})")))
}

/// Membership predicate of H(n, r, k), used as the independent cross-check
/// against the constructive generator.
pub fn stack_free_member(n: usize, r: usize, k: usize, mode: PairIndexMode, e: &[usize]) -> bool {
    let ground = crate::ground::CyclicGround::new(n).expect("n >= 1");
    if e[0] == 0 {
        return true; // H_0
    }
    let pair_count = match mode {
        PairIndexMode::Cyclic => r,
        PairIndexMode::Adjacent => r - 1,
    };
    // H_j, 1 <= j <= k-2: some adjacent pair at distance exactly j
    for h in 0..pair_count {
        let d = ground.ell(e[h], e[(h + 1) % r]).unwrap();
        if (1..=k.saturating_sub(2)).contains(&d) {
            return true;
        }
    }
    // H_{k-1}: some pair (v_{2h-1}, v_{2h}) at distance k-1 or k
    if k >= 2 {
        for h in 1..r / 2 {
            let d = ground.ell(e[2 * h - 1], e[2 * h]).unwrap();
            if d == k - 1 || d == k {
                return true;
            }
        }
    }
    false
}

/// The layered construction H(n, r, k) = H_0 ∪ ... ∪ H_{k-1}, built part by
/// part (pair placement plus fill-in), independently of `stack_free_member`.
pub fn stack_free_construction(
    n: usize,
    r: usize,
    k: usize,
    mode: PairIndexMode,
) -> Result<ConstructionReport> {
    if !r.is_multiple_of(2) || r < 2 {
        return Err(CghError::OddUniformity(r));
    }
    if k == 0 {
        return Err(CghError::InvalidParam("k must be >= 1".into()));
    }
    if n < r + k {
        return Err(CghError::InvalidParam(format!("need n >= r + k = {}, got {n}", r + k)));
    }
    let mut h = Cgh::new(n, r)?;
    let ground = *h.ground();
    // H_0: all edges through vertex 0
    for rest in all_r_sets(n - 1, r - 1) {
        let mut e: Edge = rest.iter().map(|&v| v + 1).collect();
        e.insert(0, 0);
        h.insert_edge(e)?;
    }
    // middle layers and H_{k-1}: place a constrained pair, fill the rest,
    // then keep the tuple iff the pair landed at a valid position
    if k >= 2 {
        let position_of = |e: &Edge, x: usize| e.iter().position(|&v| v == x).expect("member");
        for a in 1..n {
            for b in a + 1..n {
                let d = ground.ell(a, b).unwrap();
                let mid = d >= 1 && d <= k.saturating_sub(2);
                let last = d == k - 1 || d == k;
                if !mid && !last {
                    continue;
                }
                let others: Vec<usize> = (1..n).filter(|&v| v != a && v != b).collect();
                for fill in all_r_sets(others.len(), r - 2) {
                    let mut e: Edge = fill.iter().map(|&i| others[i]).collect();
                    e.push(a);
                    e.push(b);
                    e.sort_unstable();
                    let (pa, pb) = (position_of(&e, a), position_of(&e, b));
                    let adjacent_at = |lo: usize, hi: usize| -> Option<usize> {
                        if hi == lo + 1 {
                            Some(lo)
                        } else if lo == 0 && hi == r - 1 && mode == PairIndexMode::Cyclic {
                            Some(r - 1)
                        } else {
                            None
                        }
                    };
                    let slot = adjacent_at(pa.min(pb), pa.max(pb));
                    let in_mid = mid && slot.is_some();
                    let in_last = last
                        && matches!(slot, Some(s) if s % 2 == 1 && s < r - 2);
                    if in_mid || in_last {
                        h.insert_edge(e)?;
                    }
                }
            }
        }
    }
    let coeff = Rat::new((k as i128 - 1) * (r as i128 - 1), 1);
    let mut report = ConstructionReport::new(h, coeff, format!("stack({k})"));
    if k == 1 {
        report.notes.push(
            "k = 1 is degenerate: any nonempty hypergraph contains a 1-stack".into(),
        );
    }
    Ok(report)
}

/// Disjoint cliques of order k on consecutive segments (r = 2); the last
/// clique is truncated when k does not divide n. Avoids k-zigzags.
pub fn clique_union(n: usize, k: usize) -> Result<ConstructionReport> {
    if k < 2 {
        return Err(CghError::InvalidParam(format!("clique order must be >= 2, got {k}")));
    }
    let mut h = Cgh::new(n, 2)?;
    let mut start = 0;
    while start < n {
        let end = (start + k).min(n);
        for a in start..end {
            for b in a + 1..end {
                h.insert_edge(vec![a, b])?;
            }
        }
        start = end;
    }
    let coeff = Rat::new(k as i128 - 1, 2);
    let mut report = ConstructionReport::new(h, coeff, format!("zigzag({k})"));
    if !n.is_multiple_of(k) {
        report.notes.push(format!("last clique truncated to {} vertices", n % k));
    }
    Ok(report)
}

/// The partitioned construction G = ∪ G_i of the concluding remarks:
/// classes B_i of size n/s, transversal prefixes A_i of size (k-1)/r, and
/// G_i the r-sets with one vertex in A_i, one in B_i∖A_i, two in each other
/// B_j∖A_j. Avoids tight k-paths.
pub fn partitioned_construction(n: usize, r: usize, k: usize) -> Result<ConstructionReport> {
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    let s = r / 2;
    if !n.is_multiple_of(s) {
        return Err(CghError::InvalidParam(format!("s = r/2 = {s} must divide n = {n}")));
    }
    if k < 1 || !(k - 1).is_multiple_of(r) {
        return Err(CghError::InvalidParam(format!("r = {r} must divide k-1 = {}", k - 1)));
    }
    let block = n / s;
    let a_size = (k - 1) / r;
    if a_size > block {
        return Err(CghError::InvalidParam(format!(
            "transversal size (k-1)/r = {a_size} exceeds class size n/s = {block}"
        )));
    }
    // class of v; A_i is the first a_size vertices of B_i
    let class_of = |v: usize| v / block;
    let in_transversal = |v: usize| v % block < a_size;
    let mut h = Cgh::new(n, r)?;
    for e in all_r_sets(n, r) {
        let mut per_class = vec![(0usize, 0usize); s]; // (in A_i, in B_i \ A_i)
        for &v in &e {
            let c = class_of(v);
            if in_transversal(v) {
                per_class[c].0 += 1;
            } else {
                per_class[c].1 += 1;
            }
        }
        let member = (0..s).any(|i| {
            per_class[i] == (1, 1)
                && (0..s).all(|j| j == i || per_class[j] == (0, 2))
        });
        if member {
            h.insert_edge(e)?;
        }
    }
    // leading term 2^{s-1}(k-1)(n/r)^{r-1}; as a coefficient of C(n, r-1)
    // this is 2^{s-1}(k-1)(r-1)!/r^{r-1} in the limit
    let fact: i128 = (1..=r as i128 - 1).product();
    let coeff = Rat::new((1i128 << (s - 1)) * (k as i128 - 1) * fact, (r as i128).pow(r as u32 - 1));
    let mut report = ConstructionReport::new(h, coeff, format!("tight_path({k})"));
    let mut pow_frac = Rat::new(n as i128, r as i128);
    let mut pow_binom = Rat::new(binom(n, r), 1);
    let base_frac = pow_frac;
    let base_binom = pow_binom;
    for _ in 1..r - 1 {
        pow_frac *= base_frac;
        pow_binom *= base_binom;
    }
    let scale = Rat::new((1i128 << (s - 1)) * (k as i128 - 1), 1);
    report.notes.push(format!(
        "count {} vs candidate leading terms: 2^(s-1)(k-1)(n/r)^(r-1) = {}, 2^(s-1)(k-1)C(n,r)^(r-1) = {}",
        report.edge_count,
        scale * pow_frac,
        scale * pow_binom,
    ));
    Ok(report)
}

/// Lift an odd-uniformity hypergraph to uniformity r+1 by joining every edge
/// with every vertex of a fresh set X of size `x_count`.
pub fn lift_odd(h: &Cgh, x_count: usize) -> Result<Cgh> {
    if h.r().is_multiple_of(2) {
        return Err(CghError::EvenUniformity(h.r()));
    }
    if x_count == 0 {
        return Err(CghError::InvalidParam("x_count must be >= 1".into()));
    }
    let n = h.n();
    let mut lifted = Cgh::new(n + x_count, h.r() + 1)?;
    for e in h.edges() {
        for x in n..n + x_count {
            let mut up = e.clone();
            up.push(x);
            lifted.insert_edge(up)?;
        }
    }
    Ok(lifted)
}

/// The canonical k-stack M_k^r embedded on the first k·r vertices of Ω_n:
/// r consecutive blocks of k vertices; edge i takes position i of each even
/// block and position k−1−i of each odd block.
pub fn stack_witness(n: usize, r: usize, k: usize) -> Result<Cgh> {
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if k == 0 {
        return Err(CghError::InvalidParam("k must be >= 1".into()));
    }
    if n < k * r {
        return Err(CghError::InvalidParam(format!("need n >= k*r = {}, got {n}", k * r)));
    }
    let mut h = Cgh::new(n, r)?;
    for i in 0..k {
        let e: Edge = (0..r)
            .map(|j| j * k + if j % 2 == 0 { i } else { k - 1 - i })
            .collect();
        h.insert_edge(e)?;
    }
    Ok(h)
}
