//! Good paths: the color-regular analogue of zigzags used by the
//! random-coloring reduction, with their own end-extension machinery.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};
use crate::hypergraph::{Cgh, Edge};
use crate::patterns::{is_tight_path, End};

/// An s-coloring of the ground set with s = r/2. Each class inherits the
/// cyclic order of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    classes: Vec<usize>,
    s: usize,
    #[serde(skip)]
    members: Vec<Vec<usize>>,
    #[serde(skip)]
    pos_in_class: Vec<usize>,
}

impl Coloring {
    pub fn new(classes: Vec<usize>, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(CghError::BadColoring { s, msg: "need at least one class".into() });
        }
        if let Some(&bad) = classes.iter().find(|&&c| c >= s) {
            return Err(CghError::BadColoring { s, msg: format!("class {bad} out of range") });
        }
        let mut members = vec![Vec::new(); s];
        let mut pos_in_class = vec![0; classes.len()];
        for (v, &c) in classes.iter().enumerate() {
            pos_in_class[v] = members[c].len();
            members[c].push(v);
        }
        Ok(Coloring { classes, s, members, pos_in_class })
    }

    /// The trivial 1-coloring (everything in class 0).
    pub fn trivial(n: usize) -> Self {
        Coloring::new(vec![0; n], 1).expect("trivial coloring is valid")
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    /// Members of class i in cyclic (ascending) order.
    pub fn class_members(&self, i: usize) -> &[usize] {
        &self.members[i]
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.members[i].len()
    }

    fn pos(&self, v: usize) -> usize {
        self.pos_in_class[v]
    }

    /// `h(j) = ⌊j/2⌋ mod s`: the class hosting path positions j with
    /// j ≡ 2i or 2i+1 (mod r).
    pub fn h(&self, j: usize) -> usize {
        (j / 2) % self.s
    }

    pub fn is_class_regular(&self, e: &Edge) -> bool {
        let mut count = vec![0usize; self.s];
        for &v in e {
            count[self.classes[v]] += 1;
        }
        count.iter().all(|&c| c == 2)
    }
}

fn check_coloring(h: &Cgh, coloring: &Coloring) -> Result<()> {
    let r = h.r();
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if coloring.s != r / 2 {
        return Err(CghError::BadColoring {
            s: coloring.s,
            msg: format!("need s = r/2 = {} classes", r / 2),
        });
    }
    if coloring.classes.len() != h.n() {
        return Err(CghError::BadColoring {
            s: coloring.s,
            msg: format!("coloring covers {} vertices, ground has {}", coloring.classes.len(), h.n()),
        });
    }
    Ok(())
}

fn check_class_regular(h: &Cgh, coloring: &Coloring) -> Result<()> {
    check_coloring(h, coloring)?;
    for e in h.edges() {
        if !coloring.is_class_regular(e) {
            return Err(CghError::NotColorRegular(e.clone()));
        }
    }
    Ok(())
}

/// A sequence of class positions is in cyclic order iff going around the
/// class circle once visits them in order: exactly one wrap.
fn in_cyclic_order(positions: &[usize]) -> bool {
    let m = positions.len();
    if m <= 1 {
        return true;
    }
    let descents = (0..m)
        .filter(|&t| positions[t] >= positions[(t + 1) % m])
        .count();
    descents <= 1
}

/// Good-path recognition per the two conditions: class placement by pairs,
/// and the within-class zigzag order.
pub fn is_good_path(h: &Cgh, coloring: &Coloring, seq: &[usize]) -> Result<bool> {
    check_coloring(h, coloring)?;
    if !is_tight_path(h, seq)? {
        return Err(CghError::NotTightPath);
    }
    let r = h.r();
    let s = coloring.s;
    for (j, &v) in seq.iter().enumerate() {
        if coloring.class_of(v) != coloring.h(j % r) {
            return Ok(false);
        }
    }
    for i in 0..s {
        let j = 2 * i;
        // evens ascending, then odds descending: v_j ≺ v_{j+r} ≺ ... ≺ v_{j+1+r} ≺ v_{j+1}
        let mut chain: Vec<usize> = seq.iter().copied().skip(j).step_by(r).collect();
        let odds: Vec<usize> = seq.iter().copied().skip(j + 1).step_by(r).collect();
        chain.extend(odds.into_iter().rev());
        let positions: Vec<usize> = chain.iter().map(|&v| coloring.pos(v)).collect();
        if !in_cyclic_order(&positions) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The extension set of a good-path end, taken inside the class
/// `B_{h(k-1)}` with the in-class cyclic interval.
pub fn good_extension_set(g: &Cgh, coloring: &Coloring, end: &End) -> Vec<usize> {
    let r = g.r();
    let i = coloring.h(end.k - 1); // class of v_{k-1}
    let (from, to) = if end.k % 2 == 1 {
        (end.vs[0], end.vs[1])
    } else {
        (end.vs[r - 1], end.vs[0])
    };
    let m = coloring.class_size(i);
    debug_assert!(coloring.class_of(from) == i && coloring.class_of(to) == i);
    let (pf, pt) = (coloring.pos(from), coloring.pos(to));
    let len = (pt + m - pf) % m + 1;
    let mut out = Vec::new();
    let mut cand: Edge = end.vs[1..].to_vec();
    cand.push(0);
    for t in 0..len {
        let v = coloring.class_members(i)[(pf + t) % m];
        if end.vs.contains(&v) {
            continue;
        }
        *cand.last_mut().expect("nonempty") = v;
        if g.contains_edge_unsorted(&cand) {
            out.push(v);
        }
    }
    out
}

/// `S_k(G)` for good paths. Base case: each edge yields 2^s ends, one per
/// labeling of its class pairs; extension mirrors the zigzag recurrence
/// inside the designated class.
pub fn enumerate_good_ends(g: &Cgh, coloring: &Coloring, k: usize) -> Result<BTreeSet<End>> {
    check_class_regular(g, coloring)?;
    if k == 0 {
        return Err(CghError::InvalidParam("path length k must be >= 1".into()));
    }
    let r = g.r();
    let s = coloring.s;
    let mut current: BTreeSet<End> = BTreeSet::new();
    for e in g.edges() {
        let mut pairs: Vec<[usize; 2]> = vec![[0, 0]; s];
        let mut seen = vec![0usize; s];
        for &v in e {
            let c = coloring.class_of(v);
            pairs[c][seen[c]] = v;
            seen[c] += 1;
        }
        for mask in 0..(1u32 << s) {
            let mut vs = vec![0usize; r];
            for (c, pair) in pairs.iter().enumerate() {
                let flip = (mask >> c & 1) == 1;
                vs[2 * c] = pair[flip as usize];
                vs[2 * c + 1] = pair[!flip as usize];
            }
            current.insert(End { vs, k: 1 });
        }
    }
    for step in 1..k {
        let mut next = BTreeSet::new();
        for end in &current {
            for v in good_extension_set(g, coloring, end) {
                let mut vs = end.vs[1..].to_vec();
                vs.push(v);
                next.insert(End { vs, k: step + 1 });
            }
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    Ok(current)
}

/// `T_k(G)`: good-path ends with empty extension set.
pub fn stuck_good_ends(g: &Cgh, coloring: &Coloring, k: usize) -> Result<BTreeSet<End>> {
    Ok(enumerate_good_ends(g, coloring, k)?
        .into_iter()
        .filter(|end| good_extension_set(g, coloring, end).is_empty())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::random_cgh;
    use crate::patterns::enumerate_ends;

    #[test]
    fn trivial_coloring_degenerates_to_zigzags() {
        for seed in 0..40u64 {
            let g = random_cgh(8, 2, 0.35, seed).unwrap();
            let coloring = Coloring::trivial(8);
            for k in 1..=4 {
                assert_eq!(
                    enumerate_good_ends(&g, &coloring, k).unwrap(),
                    enumerate_ends(&g, k).unwrap(),
                    "seed {seed} k {k}"
                );
            }
        }
    }

    #[test]
    fn base_case_count() {
        // r = 4, s = 2: alternating coloring, edges with 2 vertices per class
        let n = 8;
        let classes: Vec<usize> = (0..n).map(|v| v % 2).collect();
        let coloring = Coloring::new(classes, 2).unwrap();
        let mut g = Cgh::new(n, 4).unwrap();
        for e in crate::hypergraph::all_r_sets(n, 4) {
            if coloring.is_class_regular(&e) {
                g.insert_edge(e).unwrap();
            }
        }
        let s1 = enumerate_good_ends(&g, &coloring, 1).unwrap();
        assert_eq!(s1.len(), 4 * g.len()); // 2^s = 4
    }

    #[test]
    fn class_violation_rejected() {
        let coloring = Coloring::new(vec![0, 0, 0, 0, 1, 1, 1, 1], 2).unwrap();
        let g = Cgh::from_edges(8, 4, vec![vec![0, 1, 2, 4]]).unwrap();
        assert!(matches!(
            enumerate_good_ends(&g, &coloring, 1),
            Err(CghError::NotColorRegular(_))
        ));
    }

    #[test]
    fn good_path_conditions() {
        let n = 8;
        let classes = vec![0, 0, 0, 0, 1, 1, 1, 1];
        let coloring = Coloring::new(classes, 2).unwrap();
        let g = Cgh::from_edges(
            n,
            4,
            vec![vec![0, 3, 4, 5], vec![1, 3, 4, 5], vec![0, 1, 4, 5], vec![1, 2, 4, 5]],
        )
        .unwrap();
        // class-0 chain v_0 ≺ v_4 ≺ v_1 holds as 0 ≺ 1 ≺ 3
        assert!(is_good_path(&g, &coloring, &[0, 3, 4, 5, 1]).unwrap());
        // class-0 chain 0 ≺ 2 ≺ 1 is not in cyclic order
        assert!(!is_good_path(&g, &coloring, &[0, 1, 4, 5, 2]).unwrap());
        // v_2 must lie in B_1
        assert!(matches!(
            is_good_path(&g, &coloring, &[0, 1, 2, 4, 5]),
            Err(CghError::NotTightPath)
        ));
    }

    #[test]
    fn stuck_subset_of_ends() {
        let classes: Vec<usize> = (0..10).map(|v| v % 2).collect();
        let coloring = Coloring::new(classes, 2).unwrap();
        for seed in 0..20u64 {
            let h = random_cgh(10, 4, 0.25, seed).unwrap();
            let g = Cgh::from_edges(
                10,
                4,
                h.edges().filter(|e| coloring.is_class_regular(e)).cloned().collect::<Vec<_>>(),
            )
            .unwrap();
            for k in 1..=3 {
                let s = enumerate_good_ends(&g, &coloring, k).unwrap();
                let t = stuck_good_ends(&g, &coloring, k).unwrap();
                assert!(t.is_subset(&s));
            }
        }
    }
}
