//! Ordered pattern machinery: tight paths, zigzags and their ends,
//! the extension sets S_k / T_k, stacks, disjoint segments, and graph peeling.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};
use crate::hypergraph::{Cgh, Edge};

/// The ordered last edge `(v_{k-1}, ..., v_{k+r-2})` of a k-zigzag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct End {
    pub vs: Vec<usize>,
    pub k: usize,
}

/// A certified zigzag: the vertex sequence plus the minimal disjoint
/// segments `I_0 ≺ I_1 ≺ ... ≺ I_{r-1}` that witness the pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub seq: Vec<usize>,
    pub segments: Vec<(usize, usize)>,
}

fn check_distinct(seq: &[usize]) -> Result<()> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CghError::RepeatedVertices);
    }
    Ok(())
}

/// True iff every r-window of `seq` is an edge of `H`.
pub fn is_tight_path(h: &Cgh, seq: &[usize]) -> Result<bool> {
    let r = h.r();
    if seq.len() < r {
        return Err(CghError::InvalidParam(format!(
            "sequence of length {} is shorter than uniformity {r}",
            seq.len()
        )));
    }
    check_distinct(seq)?;
    for v in seq {
        h.ground().check_vertex(*v)?;
    }
    Ok(seq.windows(r).all(|w| h.contains_edge_unsorted(w)))
}

/// Zigzag recognition per the disjoint-segment definition. Returns the
/// witness with minimal segments if `seq` is a zigzag, `None` otherwise.
///
/// The segment decomposition may start at any rotation of the cyclic order;
/// all n origins are tried.
pub fn is_zigzag(h: &Cgh, seq: &[usize]) -> Result<Option<PathWitness>> {
    let r = h.r();
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if !is_tight_path(h, seq)? {
        return Err(CghError::NotTightPath);
    }
    Ok(zigzag_witness(h.n(), r, seq))
}

/// The combinatorial core of zigzag recognition: does the sequence admit the
/// segment decomposition? Host edges are not consulted here.
pub(crate) fn zigzag_witness(n: usize, r: usize, seq: &[usize]) -> Option<PathWitness> {
    debug_assert!(r.is_multiple_of(2) && seq.len() >= r);
    // classes[j] = vertices with index ≡ j (mod r), in increasing index order
    let classes: Vec<Vec<usize>> = (0..r)
        .map(|j| seq.iter().copied().skip(j).step_by(r).collect())
        .collect();
    'origin: for o in 0..n {
        let pos = |x: usize| (x + n - o) % n;
        let mut prev_max = None;
        let mut segs = Vec::with_capacity(r);
        for (j, class) in classes.iter().enumerate() {
            let ps: Vec<usize> = class.iter().map(|&x| pos(x)).collect();
            let monotone = if j % 2 == 0 {
                ps.windows(2).all(|w| w[0] < w[1])
            } else {
                ps.windows(2).all(|w| w[0] > w[1])
            };
            if !monotone {
                continue 'origin;
            }
            let lo = *ps.iter().min().expect("nonempty class");
            let hi = *ps.iter().max().expect("nonempty class");
            if let Some(pm) = prev_max {
                if lo <= pm {
                    continue 'origin;
                }
            }
            prev_max = Some(hi);
            segs.push(((lo + o) % n, (hi + o) % n));
        }
        return Some(PathWitness { seq: seq.to_vec(), segments: segs });
    }
    None
}

/// `I(v_k)`: the designated extension interval of an end, as (start, end)
/// of a clockwise segment.
pub fn interval_of_end(end: &End) -> (usize, usize) {
    let r = end.vs.len();
    if end.k % 2 == 1 {
        (end.vs[0], end.vs[1])
    } else {
        (end.vs[r - 1], end.vs[0])
    }
}

/// `X(v_k)`: vertices of the interval completing a new edge with the last
/// r−1 vertices of the end. Vertices equal to an entry of the end are
/// excluded (paths have distinct vertices).
pub fn extension_set(h: &Cgh, end: &End) -> Vec<usize> {
    let n = h.n();
    let (a, b) = interval_of_end(end);
    let len = (b + n - a) % n + 1;
    let mut out = Vec::new();
    let mut cand: Edge = end.vs[1..].to_vec();
    cand.push(0);
    for i in 0..len {
        let v = (a + i) % n;
        if end.vs.contains(&v) {
            continue;
        }
        *cand.last_mut().expect("nonempty") = v;
        if h.contains_edge_unsorted(&cand) {
            out.push(v);
        }
    }
    out
}

/// `S_k(H)`: the set of ends of k-zigzags, computed by the extension
/// recurrence. `S_1` is the r cyclic rotations of each edge; `S_{k+1}` is
/// obtained by extending every end of `S_k` through its extension set.
pub fn enumerate_ends(h: &Cgh, k: usize) -> Result<BTreeSet<End>> {
    let r = h.r();
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if k == 0 {
        return Err(CghError::InvalidParam("zigzag length k must be >= 1".into()));
    }
    let mut current: BTreeSet<End> = h
        .edges()
        .flat_map(|e| {
            (0..r).map(move |t| {
                let mut vs = e[t..].to_vec();
                vs.extend_from_slice(&e[..t]);
                End { vs, k: 1 }
            })
        })
        .collect();
    for step in 1..k {
        let mut next = BTreeSet::new();
        for end in &current {
            for v in extension_set(h, end) {
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

/// `T_k(H)`: the ends of k-zigzags with empty extension set.
pub fn stuck_ends(h: &Cgh, k: usize) -> Result<BTreeSet<End>> {
    Ok(enumerate_ends(h, k)?
        .into_iter()
        .filter(|end| extension_set(h, end).is_empty())
        .collect())
}

/// The injection `f`: extend a non-stuck end by the extension vertex closest
/// to `v_{k-1}` inside the interval, shifting the window by one.
pub fn extend_f(h: &Cgh, end: &End) -> Result<End> {
    let n = h.n();
    let xs = extension_set(h, end);
    if xs.is_empty() {
        return Err(CghError::StuckEnd);
    }
    let anchor = end.vs[0];
    // distance to v_{k-1} measured along the interval orientation
    let dist = |v: usize| -> usize {
        if end.k % 2 == 1 {
            (v + n - anchor) % n
        } else {
            (anchor + n - v) % n
        }
    };
    let mut best = xs[0];
    for &v in &xs[1..] {
        let (dv, db) = (dist(v), dist(best));
        assert_ne!(dv, db, "distinct interval vertices cannot tie");
        if dv < db {
            best = v;
        }
    }
    let mut vs = end.vs[1..].to_vec();
    vs.push(best);
    Ok(End { vs, k: end.k + 1 })
}

/// The injection `g`: project a stuck end to the ordered shadow element
/// obtained by dropping `v_{k-1}`.
pub fn project_g(end: &End) -> Vec<usize> {
    end.vs[1..].to_vec()
}

/// True iff `H` contains a k-zigzag.
pub fn contains_zigzag(h: &Cgh, k: usize) -> Result<bool> {
    Ok(!enumerate_ends(h, k)?.is_empty())
}

/// True iff `H` contains a tight k-path (abstract; the cyclic order plays
/// no role). DFS over ordered first windows, extending to the right.
pub fn contains_tight_path(h: &Cgh, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let r = h.r();
    for e in h.edges() {
        let mut perm: Vec<usize> = e.clone();
        if permutations_any(&mut perm, 0, &mut |w| extend_right(h, &mut w.to_vec(), k - 1, r)) {
            return true;
        }
    }
    false
}

fn permutations_any(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == items.len() {
        return f(items);
    }
    for i in at..items.len() {
        items.swap(at, i);
        if permutations_any(items, at + 1, f) {
            items.swap(at, i);
            return true;
        }
        items.swap(at, i);
    }
    false
}

fn extend_right(h: &Cgh, seq: &mut Vec<usize>, remaining: usize, r: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    for v in 0..h.n() {
        if seq.contains(&v) {
            continue;
        }
        let mut window: Edge = seq[seq.len() - (r - 1)..].to_vec();
        window.push(v);
        if h.contains_edge_unsorted(&window) {
            seq.push(v);
            if extend_right(h, seq, remaining - 1, r) {
                return true;
            }
            seq.pop();
        }
    }
    false
}

/// Exhaustive/sampled k-stack detection. A stack is k pairwise disjoint
/// edges arranged as every r-th edge of a zigzag path.
#[derive(Clone, Copy, Debug)]
pub enum StackMode {
    Exhaustive,
    Sampled { budget: u64, seed: u64 },
}

pub fn contains_stack(h: &Cgh, k: usize, mode: StackMode) -> Result<bool> {
    let r = h.r();
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    if k == 0 {
        return Err(CghError::InvalidParam("stack size k must be >= 1".into()));
    }
    let edges: Vec<&Edge> = h.edges().collect();
    match mode {
        StackMode::Exhaustive => {
            let mut chosen: Vec<usize> = Vec::with_capacity(k);
            Ok(stack_search(h, &edges, &mut chosen, 0, k))
        }
        StackMode::Sampled { budget, seed } => {
            if budget == 0 {
                return Err(CghError::InvalidParam("sampled mode needs budget > 0".into()));
            }
            if edges.len() < k {
                return Ok(false);
            }
            let mut rng = crate::hypergraph::instance_rng(seed, 0);
            for _ in 0..budget {
                let mut idx: Vec<usize> = Vec::with_capacity(k);
                while idx.len() < k {
                    let cand = rng.random_range(0..edges.len());
                    if !idx.contains(&cand) {
                        idx.push(cand);
                    }
                }
                let tuple: Vec<&Edge> = idx.iter().map(|&i| edges[i]).collect();
                if crate::hypergraph::pairwise_disjoint(&tuple) && is_stack_arrangement(h.n(), &tuple) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

fn stack_search(h: &Cgh, edges: &[&Edge], chosen: &mut Vec<usize>, from: usize, k: usize) -> bool {
    if chosen.len() == k {
        let tuple: Vec<&Edge> = chosen.iter().map(|&i| edges[i]).collect();
        return is_stack_arrangement(h.n(), &tuple);
    }
    for i in from..edges.len() {
        let ok = chosen.iter().all(|&j| disjoint_sorted(edges[j], edges[i]));
        if ok {
            chosen.push(i);
            if stack_search(h, edges, chosen, i + 1, k) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn disjoint_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Decides whether k pairwise disjoint r-edges can be ordered as a stack:
/// for some rotation cut, the kr vertices split into r consecutive blocks of
/// k, and the edge occupying position p of every even block occupies position
/// k−1−p of every odd block.
pub(crate) fn is_stack_arrangement(n: usize, edges: &[&Edge]) -> bool {
    let k = edges.len();
    let r = edges[0].len();
    let kr = k * r;
    // (vertex, owner) sorted by ground position
    let mut verts: Vec<(usize, usize)> = Vec::with_capacity(kr);
    for (owner, e) in edges.iter().enumerate() {
        verts.extend(e.iter().map(|&v| (v, owner)));
    }
    verts.sort_unstable();
    debug_assert!(verts.len() == kr && verts.iter().all(|&(v, _)| v < n));
    'cut: for cut in 0..kr {
        let owner_at = |t: usize| verts[(cut + t) % kr].1;
        // labels from block 0
        let mut label = vec![usize::MAX; k];
        for p in 0..k {
            let o = owner_at(p);
            if label[o] != usize::MAX {
                continue 'cut;
            }
            label[o] = p;
        }
        for j in 1..r {
            for p in 0..k {
                let o = owner_at(j * k + p);
                let want = if j % 2 == 0 { p } else { k - 1 - p };
                if label[o] != want {
                    continue 'cut;
                }
            }
        }
        return true;
    }
    false
}

/// True iff the cgg contains k pairwise vertex-disjoint, non-crossing chords.
pub fn contains_disjoint_segments(g: &Cgh, k: usize) -> Result<bool> {
    if g.r() != 2 {
        return Err(CghError::WrongUniformity { expected: 2, got: g.r() });
    }
    if k == 0 {
        return Ok(true);
    }
    let edges: Vec<&Edge> = g.edges().collect();
    let n = g.n();
    let compatible = |a: &Edge, b: &Edge| -> bool {
        disjoint_sorted(a, b) && !chords_cross(n, (a[0], a[1]), (b[0], b[1]))
    };
    fn search(
        edges: &[&Edge],
        compatible: &impl Fn(&Edge, &Edge) -> bool,
        chosen: &mut Vec<usize>,
        from: usize,
        k: usize,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in from..edges.len() {
            if edges.len() - i < k - chosen.len() {
                break;
            }
            if chosen.iter().all(|&j| compatible(edges[j], edges[i])) {
                chosen.push(i);
                if search(edges, compatible, chosen, i + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(search(&edges, &compatible, &mut Vec::new(), 0, k))
}

/// Two chords cross iff their endpoint pairs interleave around the circle.
pub fn chords_cross(n: usize, a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |u: usize, w: usize, v: usize| {
        // strict interior of clockwise (u, v)
        let d = (v + n - u) % n;
        let dw = (w + n - u) % n;
        0 < dw && dw < d
    };
    inside(a.0, b.0, a.1) != inside(a.0, b.1, a.1)
}

/// One peeling step of the odd-length zigzag argument: `E` collects, for each
/// vertex with a neighbor, the chord to its first clockwise neighbor;
/// `F = G ∖ E`.
pub fn peel_graph(g: &Cgh) -> Result<(Cgh, Cgh)> {
    if g.r() != 2 {
        return Err(CghError::WrongUniformity { expected: 2, got: g.r() });
    }
    let n = g.n();
    let mut first_edges: BTreeSet<Edge> = BTreeSet::new();
    for v in 0..n {
        for step in 1..n {
            let w = (v + step) % n;
            let mut e = vec![v, w];
            e.sort_unstable();
            if g.contains_edge(&e) {
                first_edges.insert(e);
                break;
            }
        }
    }
    let e_graph = Cgh::from_edges(n, 2, first_edges.iter().cloned())?;
    let f_edges: Vec<Edge> = g.edges().filter(|e| !first_edges.contains(*e)).cloned().collect();
    let f_graph = Cgh::from_edges(n, 2, f_edges)?;
    Ok((e_graph, f_graph))
}

/// Brute-force oracle for S_k: enumerate every tight-path vertex sequence by
/// DFS and keep the final r-window of each sequence certified by `is_zigzag`.
/// Test-grade, factorial cost; retained to validate the extension recurrence.
pub fn enumerate_ends_oracle(h: &Cgh, k: usize) -> Result<BTreeSet<End>> {
    let r = h.r();
    if !r.is_multiple_of(2) {
        return Err(CghError::OddUniformity(r));
    }
    let target = k + r - 1;
    let mut out = BTreeSet::new();
    for e in h.edges() {
        let mut perm: Vec<usize> = e.clone();
        collect_paths(h, &mut perm, 0, target, &mut |seq| {
            if zigzag_witness(h.n(), r, seq).is_some() {
                out.insert(End { vs: seq[seq.len() - r..].to_vec(), k });
            }
        });
    }
    Ok(out)
}

fn collect_paths(
    h: &Cgh,
    window: &mut Vec<usize>,
    at: usize,
    target: usize,
    sink: &mut impl FnMut(&[usize]),
) {
    // enumerate all orderings of the starting edge, then extend right
    if at == window.len() {
        let mut seq = window.clone();
        grow(h, &mut seq, target, sink);
        return;
    }
    for i in at..window.len() {
        window.swap(at, i);
        collect_paths(h, window, at + 1, target, sink);
        window.swap(at, i);
    }
}

fn grow(h: &Cgh, seq: &mut Vec<usize>, target: usize, sink: &mut impl FnMut(&[usize])) {
    if seq.len() == target {
        sink(seq);
        return;
    }
    let r = h.r();
    for v in 0..h.n() {
        if seq.contains(&v) {
            continue;
        }
        let mut window: Edge = seq[seq.len() - (r - 1)..].to_vec();
        window.push(v);
        if h.contains_edge_unsorted(&window) {
            seq.push(v);
            grow(h, seq, target, sink);
            seq.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::complete;

    #[test]
    fn tight_path_examples() {
        let k5 = complete(5, 3).unwrap();
        assert!(is_tight_path(&k5, &[0, 1, 2, 3, 4]).unwrap());
        let single = Cgh::from_edges(5, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(is_tight_path(&single, &[0, 1, 2]).unwrap());
        let h = Cgh::from_edges(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(!is_tight_path(&h, &[0, 1, 2, 3]).unwrap());
        assert!(is_tight_path(&h, &[0, 1, 1]).is_err());
        assert!(is_tight_path(&h, &[0, 1]).is_err());
    }

    #[test]
    fn zigzag_alternating_order() {
        // v_0..v_6 placed so the circle reads v_0 v_2 v_4 v_6 v_5 v_3 v_1
        let g = complete(7, 2).unwrap();
        let seq = [0, 6, 1, 5, 2, 4, 3];
        let w = is_zigzag(&g, &seq).unwrap().expect("alternating ordering is a zigzag");
        assert_eq!(w.seq, seq);
        assert_eq!(w.segments.len(), 2);
    }

    #[test]
    fn zigzag_single_edge() {
        let g = Cgh::from_edges(5, 2, vec![vec![1, 3]]).unwrap();
        assert!(is_zigzag(&g, &[1, 3]).unwrap().is_some());
        assert!(is_zigzag(&g, &[3, 1]).unwrap().is_some());
    }

    #[test]
    fn zigzag_odd_uniformity_rejected() {
        let h = complete(5, 3).unwrap();
        assert!(matches!(is_zigzag(&h, &[0, 1, 2]), Err(CghError::OddUniformity(3))));
    }

    #[test]
    fn s1_has_r_ends_per_edge() {
        for (n, r, p, seed) in [(8, 2, 0.4, 1u64), (9, 4, 0.2, 2)] {
            let h = crate::hypergraph::random_cgh(n, r, p, seed).unwrap();
            assert_eq!(enumerate_ends(&h, 1).unwrap().len(), r * h.len());
        }
    }

    #[test]
    fn empty_host_has_no_ends() {
        let h = Cgh::new(8, 4).unwrap();
        for k in 1..4 {
            assert!(enumerate_ends(&h, k).unwrap().is_empty());
        }
    }

    #[test]
    fn interval_branches() {
        let odd = End { vs: vec![2, 5], k: 1 };
        assert_eq!(interval_of_end(&odd), (2, 5));
        let even = End { vs: vec![5, 2], k: 2 };
        assert_eq!(interval_of_end(&even), (2, 5));
        let big = End { vs: vec![4, 5, 6, 7], k: 5 };
        assert_eq!(interval_of_end(&big), (4, 5));
    }

    #[test]
    fn extension_set_complete_graph() {
        let g = complete(5, 2).unwrap();
        let end = End { vs: vec![0, 2], k: 1 };
        assert_eq!(extension_set(&g, &end), vec![1]);
    }

    #[test]
    fn single_edge_ends_stuck() {
        let g = Cgh::from_edges(6, 2, vec![vec![0, 3]]).unwrap();
        assert_eq!(stuck_ends(&g, 1).unwrap().len(), 2);
    }

    #[test]
    fn complete_graph_zigzag_rich() {
        let g = complete(7, 2).unwrap();
        for k in 1..4 {
            // some ends are stuck (e.g. adjacent pairs leave an empty
            // interval), but never all of them
            let stuck = stuck_ends(&g, k).unwrap().len();
            assert!(stuck < enumerate_ends(&g, k).unwrap().len(), "k = {k}");
            assert!(contains_zigzag(&g, k).unwrap());
        }
        // at k = 1 the stuck ends are exactly the n adjacent pairs (u, u+1)
        assert_eq!(stuck_ends(&g, 1).unwrap().len(), 7);
    }

    #[test]
    fn extend_f_picks_nearest() {
        let g = Cgh::from_edges(8, 2, vec![vec![0, 3], vec![1, 3], vec![2, 3]]).unwrap();
        // end (0,3), k=1 odd: X = {1,2}, nearest to 0 is 1
        let end = End { vs: vec![0, 3], k: 1 };
        assert_eq!(extension_set(&g, &end), vec![1, 2]);
        assert_eq!(extend_f(&g, &end).unwrap(), End { vs: vec![3, 1], k: 2 });
        let stuck = End { vs: vec![2, 3], k: 1 };
        assert!(matches!(extend_f(&g, &stuck), Err(CghError::StuckEnd)));
    }

    #[test]
    fn project_drops_first() {
        let end = End { vs: vec![4, 1, 2, 3], k: 3 };
        assert_eq!(project_g(&end), vec![1, 2, 3]);
    }

    #[test]
    fn tight_path_detector() {
        let k5 = complete(5, 3).unwrap();
        assert!(contains_tight_path(&k5, 3));
        assert!(!contains_tight_path(&k5, 4)); // needs 6 vertices
        let h = Cgh::from_edges(6, 3, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        assert!(contains_tight_path(&h, 3));
        assert!(!contains_tight_path(&h, 4));
    }

    #[test]
    fn disjoint_segment_patterns() {
        let side = Cgh::from_edges(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(contains_disjoint_segments(&side, 2).unwrap());
        let crossing = Cgh::from_edges(4, 2, vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert!(!contains_disjoint_segments(&crossing, 2).unwrap());
        let nested = Cgh::from_edges(6, 2, vec![vec![0, 5], vec![1, 4], vec![2, 3]]).unwrap();
        assert!(contains_disjoint_segments(&nested, 3).unwrap());
    }

    #[test]
    fn peel_star() {
        let star = Cgh::from_edges(5, 2, (1..5).map(|i| vec![0, i]).collect::<Vec<_>>()).unwrap();
        let (e, f) = peel_graph(&star).unwrap();
        assert_eq!(e.len(), 4);
        assert!(f.is_empty());
        let empty = Cgh::new(5, 2).unwrap();
        let (e2, f2) = peel_graph(&empty).unwrap();
        assert!(e2.is_empty() && f2.is_empty());
    }

    #[test]
    fn peel_e_at_most_n() {
        for seed in 0..30u64 {
            let g = crate::hypergraph::random_cgh(9, 2, 0.4, seed).unwrap();
            let (e, f) = peel_graph(&g).unwrap();
            assert!(e.len() <= 9);
            assert_eq!(e.len() + f.len(), g.len());
        }
    }

    #[test]
    fn oracle_matches_dp_on_small_cases() {
        for seed in 0..20u64 {
            let h = crate::hypergraph::random_cgh(7, 2, 0.35, seed).unwrap();
            for k in 1..=3 {
                assert_eq!(
                    enumerate_ends(&h, k).unwrap(),
                    enumerate_ends_oracle(&h, k).unwrap(),
                    "seed {seed} k {k}"
                );
            }
        }
    }

    #[test]
    fn zigzag_monotone_in_k() {
        for seed in 0..20u64 {
            let h = crate::hypergraph::random_cgh(8, 2, 0.4, seed).unwrap();
            for k in 2..=4 {
                if contains_zigzag(&h, k).unwrap() {
                    assert!(contains_zigzag(&h, k - 1).unwrap());
                }
            }
        }
    }
}
