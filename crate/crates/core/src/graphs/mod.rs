//! Labeled simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` word of neighbor bits, so cut sizes, common
//! neighborhoods and triangle parities reduce to popcounts. Vertices are
//! 0-based in memory and 1-based in every text format.

mod canonical;
mod mw;
mod staircase;
mod text;

pub use canonical::{bits_to_hex, canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use mw::{mw_certificate, MwCertificate};
pub use staircase::{staircase, staircase_recognize};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Bit `v` set means vertex `v` (0-based) is in the set.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

/// Largest `n` accepted by the exhaustive cut scan.
pub const MAX_CUT_SCAN_VERTICES: usize = 32;

/// Index of the pair `{i, j}` in colexicographic order of 2-subsets:
/// `{0,1}, {0,2}, {1,2}, {0,3}, …`.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Edge and non-edge counts across the cut `(S, [n] ∖ S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    /// 1-based members of `S`.
    pub cut_set: Vec<usize>,
    pub edges_across: usize,
    pub non_edges_across: usize,
    pub perfect: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutVerdict {
    Ok,
    Violated(CutReport),
}

impl CutVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, CutVerdict::Ok)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Infeasible {
                what: "vertex count",
                got: n,
                cap: MAX_VERTICES,
                reason: "neighbor sets are single 64-bit words",
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: u.max(v) + 1,
                    max: n,
                });
            }
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {}", u + 1)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a bit mask over pairs in colex order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let mut m = mask;
        while m != 0 {
            let idx = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = pair_from_index(idx);
            if j >= n {
                return Err(Error::Dimension(format!("pair index {idx} beyond n = {n}")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Colex pair mask; requires `n ≤ 11` so that all pairs fit one word.
    pub fn pair_mask(&self) -> u64 {
        assert!(self.n * self.n.saturating_sub(1) / 2 <= 64);
        self.edges().fold(0, |m, (u, v)| m | 1u64 << pair_index(u, v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            std::iter::from_fn(move || {
                (higher != 0).then(|| {
                    let v = higher.trailing_zeros() as usize;
                    higher &= higher - 1;
                    (u, v)
                })
            })
        })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// `E(S, [n] ∖ S)`.
    pub fn edges_across(&self, s: VertexSet) -> usize {
        let s = s & self.all_vertices();
        let outside = !s & self.all_vertices();
        let mut m = s;
        let mut total = 0;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            total += (self.adj[v] & outside).count_ones() as usize;
        }
        total
    }

    /// `NE(S, [n] ∖ S)`.
    pub fn non_edges_across(&self, s: VertexSet) -> usize {
        let k = (s & self.all_vertices()).count_ones() as usize;
        k * (self.n - k) - self.edges_across(s)
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        let mut m = s;
        let mut total = 0;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            total += (self.adj[v] & s).count_ones() as usize;
        }
        total / 2
    }

    pub fn cut_report(&self, s: VertexSet) -> CutReport {
        let s = s & self.all_vertices();
        let e = self.edges_across(s);
        let ne = self.non_edges_across(s);
        CutReport {
            cut_set: (0..self.n).filter(|&v| s >> v & 1 == 1).map(|v| v + 1).collect(),
            edges_across: e,
            non_edges_across: ne,
            perfect: e == ne,
        }
    }

    /// Checks every proper cut for `E(S, S̄) ≤ NE(S, S̄)`.
    ///
    /// Cuts are enumerated once each (vertex 1 always on the `S` side) in
    /// Gray-code order, so each step updates the edge count in O(1). A
    /// violation is reported on its smaller side; among all violations the
    /// witness with the fewest vertices, then the smallest bitmask, wins.
    pub fn is_cut_minimal(&self) -> Result<CutVerdict> {
        let n = self.n;
        if n > MAX_CUT_SCAN_VERTICES {
            return Err(Error::Infeasible {
                what: "vertex count",
                got: n,
                cap: MAX_CUT_SCAN_VERTICES,
                reason: "the cut scan enumerates 2^(n-1) cuts",
            });
        }
        if n < 2 {
            return Ok(CutVerdict::Ok);
        }
        let free = n - 1;
        let total: u64 = 1 << free;
        let chunks: u64 = if n >= 20 { 64 } else { 1 };
        let per = total / chunks;
        let best = (0..chunks)
            .into_par_iter()
            .filter_map(|c| self.scan_cuts(c * per, (c + 1) * per))
            .min();
        Ok(match best {
            None => CutVerdict::Ok,
            Some((_, s)) => CutVerdict::Violated(self.cut_report(s)),
        })
    }

    /// Scans Gray-code ranks `lo..hi`; cut `S = {0} ∪ (gray(i) << 1)`.
    /// Returns the best violating witness as `(size, mask)`.
    fn scan_cuts(&self, lo: u64, hi: u64) -> Option<(u32, u64)> {
        let n = self.n as u64;
        let all = self.all_vertices();
        let mut s = 1 | ((lo ^ (lo >> 1)) << 1);
        let mut e = self.edges_across(s) as u64;
        let mut best: Option<(u32, u64)> = None;
        let mut i = lo;
        loop {
            // s is always a proper cut here except when it is everything
            let k = s.count_ones() as u64;
            if k < n && 2 * e > k * (n - k) {
                let comp = all & !s;
                let w = if (s.count_ones(), s) <= (comp.count_ones(), comp) {
                    (s.count_ones(), s)
                } else {
                    (comp.count_ones(), comp)
                };
                if best.is_none_or(|b| w < b) {
                    best = Some(w);
                }
            }
            i += 1;
            if i >= hi {
                break;
            }
            let v = i.trailing_zeros() as usize + 1;
            let nb = self.adj[v];
            let deg = nb.count_ones() as u64;
            if s >> v & 1 == 0 {
                let inside = (nb & s).count_ones() as u64;
                e = e + deg - 2 * inside;
                s |= 1 << v;
            } else {
                s &= !(1 << v);
                let inside = (nb & s).count_ones() as u64;
                e = e + 2 * inside - deg;
            }
        }
        best
    }

    /// `Σ_e t(e)` as `(ones, threes)`: incidences of an edge with an outside
    /// vertex adjacent to neither endpoint (weight 1) and to both (weight 1/3).
    pub fn tau_counts(&self) -> (u64, u64) {
        let all = self.all_vertices();
        let mut ones = 0u64;
        let mut threes = 0u64;
        for (v, w) in self.edges() {
            let others = all & !(1 << v) & !(1 << w);
            ones += (!self.adj[v] & !self.adj[w] & others).count_ones() as u64;
            threes += (self.adj[v] & self.adj[w]).count_ones() as u64;
        }
        (ones, threes)
    }

    /// Number of vertex triples spanning an odd number of edges.
    pub fn count_odd_triangles(&self) -> u64 {
        let mut total = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let later = self.all_vertices() & !full_mask(j + 1);
                let differ = self.adj[i] ^ self.adj[j];
                // odd iff e_ij + e_ik + e_jk is odd
                let odd = if self.has_edge(i, j) { !differ } else { differ };
                total += (odd & later).count_ones() as u64;
            }
        }
        total
    }

    /// `h(G) = Σ_e t(e) / |E|`, from the per-edge τ weights.
    pub fn h_by_tau(&self) -> Result<Rational> {
        let m = self.edge_count() as i128;
        if m == 0 {
            return Err(Error::Edgeless);
        }
        let (ones, threes) = self.tau_counts();
        Rational::new(3 * ones as i128 + threes as i128, 3 * m)
    }

    /// `h(G) = |T(G)| / |E|`, from the odd-triangle count.
    pub fn h_by_odd_triangles(&self) -> Result<Rational> {
        let m = self.edge_count() as i128;
        if m == 0 {
            return Err(Error::Edgeless);
        }
        Rational::new(self.count_odd_triangles() as i128, m)
    }

    /// The expansion functional `h(G)`. Both formulas are evaluated and must
    /// agree.
    pub fn h(&self) -> Result<Rational> {
        let a = self.h_by_tau()?;
        debug_assert_eq!(Ok(a), self.h_by_odd_triangles());
        Ok(a)
    }

    /// The blowup `cG` on `V × [c]`; clone `i` of vertex `v` is `v·c + i`.
    pub fn blowup(&self, c: usize) -> Result<Graph> {
        if c == 0 {
            return Err(Error::Precondition {
                what: "blowup factor",
                got: 0,
                min: 1,
            });
        }
        if self.n * c > MAX_VERTICES {
            return Err(Error::Infeasible {
                what: "blown-up vertex count",
                got: self.n * c,
                cap: MAX_VERTICES,
                reason: "neighbor sets are single 64-bit words",
            });
        }
        let fiber = full_mask(c);
        let mut g = Graph::empty(self.n * c)?;
        for v in 0..self.n {
            let mut wide = 0u64;
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                wide |= fiber << (w * c);
            }
            for i in 0..c {
                g.adj[v * c + i] = wide;
            }
        }
        Ok(g)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// 2-colorability, by breadth-first coloring of each component.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// One side of a proper 2-coloring, if any. Each component's lowest
    /// vertex is put on the returned side.
    pub fn two_coloring(&self) -> Option<VertexSet> {
        let mut seen = 0u64;
        let mut side = 0u64;
        for root in 0..self.n {
            if seen >> root & 1 == 1 {
                continue;
            }
            let mut frontier = 1u64 << root;
            let mut on_side = true;
            seen |= frontier;
            while frontier != 0 {
                if on_side {
                    side |= frontier;
                }
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    if self.adj[v] & frontier != 0 {
                        return None;
                    }
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= frontier;
                on_side = !on_side;
            }
        }
        Some(side)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, {:?})", self.n, edges)
    }
}

#[cfg(test)]
mod tests;
