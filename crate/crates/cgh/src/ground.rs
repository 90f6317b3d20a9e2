//! Cyclic ground set: vertices `0..n` in clockwise order, segments and distances.

use serde::{Deserialize, Serialize};

use crate::error::{CghError, Result};

/// The vertex set `Ω_n`: integers `0..n` in clockwise cyclic order.
/// The successor of `n-1` is `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicGround {
    n: usize,
}

/// A clockwise segment `[u, v]` of the ground set, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub u: usize,
    pub v: usize,
}

impl CyclicGround {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CghError::InvalidParam("ground set must have n >= 1".into()));
        }
        Ok(CyclicGround { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(CghError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Clockwise distance from `u` to `v`: number of steps forward.
    #[inline]
    pub fn cw_dist(&self, u: usize, v: usize) -> usize {
        (v + self.n - u) % self.n
    }

    /// True iff `w ∈ [u, v]`, the clockwise segment from `u` to `v`, endpoints included.
    pub fn in_segment(&self, u: usize, w: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        self.check_vertex(v)?;
        Ok(self.cw_dist(u, w) <= self.cw_dist(u, v))
    }

    /// `ℓ(u, v)`: the number of sides in a shortest segment between `u` and `v`.
    pub fn ell(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.cw_dist(u, v).min(self.cw_dist(v, u)))
    }

    /// Number of vertices in the clockwise segment `[u, v]`, endpoints included.
    pub fn segment_len(&self, seg: Segment) -> usize {
        self.cw_dist(seg.u, seg.v) + 1
    }

    /// Vertices of `[u, v]` in clockwise order.
    pub fn segment_vertices(&self, seg: Segment) -> Vec<usize> {
        let len = self.segment_len(seg);
        (0..len).map(|i| (seg.u + i) % self.n).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn in_segment_endpoints_and_wraparound() {
        let g = CyclicGround::new(8).unwrap();
        assert!(g.in_segment(2, 2, 5).unwrap());
        assert!(g.in_segment(6, 0, 2).unwrap());
        // [2,5] = {2,3,4,5}
        assert!(!g.in_segment(2, 6, 5).unwrap());
        assert_eq!(g.segment_vertices(Segment { u: 2, v: 5 }), vec![2, 3, 4, 5]);
    }

    #[test]
    fn ell_values() {
        let g6 = CyclicGround::new(6).unwrap();
        assert_eq!(g6.ell(0, 3).unwrap(), 3);
        assert_eq!(g6.ell(0, 0).unwrap(), 0);
        let g10 = CyclicGround::new(10).unwrap();
        assert_eq!(g10.ell(8, 1).unwrap(), 3);
    }

    #[test]
    fn out_of_range_rejected() {
        let g = CyclicGround::new(5).unwrap();
        assert!(g.ell(0, 5).is_err());
        assert!(g.in_segment(5, 0, 1).is_err());
    }

    #[test]
    fn singleton_segment() {
        let g = CyclicGround::new(7).unwrap();
        assert_eq!(g.segment_len(Segment { u: 3, v: 3 }), 1);
        assert_eq!(g.segment_vertices(Segment { u: 3, v: 3 }), vec![3]);
    }

    proptest! {
        #[test]
        fn ell_symmetric_and_bounded(n in 1usize..40, a in 0usize..40, b in 0usize..40) {
            let g = CyclicGround::new(n).unwrap();
            let (u, v) = (a % n, b % n);
            let d = g.ell(u, v).unwrap();
            prop_assert_eq!(d, g.ell(v, u).unwrap());
            prop_assert!(d <= n / 2);
        }

        #[test]
        fn ell_triangle_inequality(n in 1usize..40, a in 0usize..40, b in 0usize..40, c in 0usize..40) {
            let g = CyclicGround::new(n).unwrap();
            let (u, v, w) = (a % n, b % n, c % n);
            prop_assert!(g.ell(u, w).unwrap() <= g.ell(u, v).unwrap() + g.ell(v, w).unwrap());
        }

        #[test]
        fn segment_complement_counts(n in 2usize..40, a in 0usize..40, b in 0usize..40) {
            let g = CyclicGround::new(n).unwrap();
            let (u, v) = (a % n, b % n);
            prop_assume!(u != v);
            let fwd = g.segment_len(Segment { u, v });
            let bwd = g.segment_len(Segment { u: v, v: u });
            // endpoints counted twice
            prop_assert_eq!(fwd + bwd, n + 2);
        }
    }
}
