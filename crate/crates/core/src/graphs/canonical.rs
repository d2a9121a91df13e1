//! Canonical forms for small graphs.
//!
//! The vertex set is first split into an ordered partition by iterated
//! degree refinement (an isomorphism invariant). The canonical code is the
//! lexicographically smallest colex adjacency bit string over all labelings
//! that place the cells in order. Labelings are built position by position,
//! so a prefix already larger than the incumbent is cut off, and among
//! unused twins (vertices with the same neighborhood apart from each other)
//! only one is tried per position.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_CANONICAL_VERTICES: usize = 10;

/// Equal forms ⟺ isomorphic graphs (for graphs with the same `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    /// Colex adjacency bits of the canonical labeling, pair `{0,1}` in the
    /// most significant of the `n(n−1)/2` low bits.
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonically labeled representative.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let len = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n).expect("n is small");
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (len - 1 - idx) & 1 == 1 {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }

    /// Lowercase hex of the row-major upper-triangular adjacency bits of the
    /// canonical representative, padded with zero bits to whole nibbles.
    pub fn to_hex(&self) -> String {
        let g = self.graph();
        let n = self.n();
        let bits: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| g.has_edge(i, j))
            .collect();
        bits_to_hex(&bits)
    }
}

/// Packs bits MSB-first into lowercase hex nibbles.
pub fn bits_to_hex(bits: &[bool]) -> String {
    let mut out = String::with_capacity(bits.len().div_ceil(4));
    for chunk in bits.chunks(4) {
        let mut nib = 0u8;
        for k in 0..4 {
            nib = nib << 1 | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        let _ = write!(out, "{nib:x}");
    }
    out
}

/// Ordered cells of the stable refinement of the degree partition.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    let mut sig: Vec<(usize, Vec<usize>, usize)> =
        (0..n).map(|v| (g.degree(v), Vec::new(), v)).collect();
    let mut ncells = 0;
    loop {
        sig.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for k in 0..n {
            if k == 0 || (sig[k].0, &sig[k].1) != (sig[k - 1].0, &sig[k - 1].1) {
                cells.push(Vec::new());
            }
            cells.last_mut().unwrap().push(sig[k].2);
        }
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        if cells.len() == ncells {
            return cells;
        }
        ncells = cells.len();
        sig = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; ncells];
                let mut nb = g.neighbors(v);
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    counts[cell_of[w]] += 1;
                }
                (cell_of[v], counts, v)
            })
            .collect();
    }
}

struct Search<'a> {
    g: &'a Graph,
    len: usize,
    cell_at: Vec<u64>,
    perm: Vec<usize>,
    best: u64,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = !(1u64 << u | 1u64 << v);
        self.g.neighbors(u) & strip == self.g.neighbors(v) & strip
    }

    fn go(&mut self, pos: usize, used: u64, code: u64) {
        let n = self.g.n();
        if pos == n {
            if code < self.best {
                self.best = code;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        let prefix_len = (pos + 1) * pos / 2;
        let mut tried: Vec<usize> = Vec::new();
        let mut cand = self.cell_at[pos] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let nb = self.g.neighbors(v);
            let mut col = 0u64;
            for &w in &self.perm[..pos] {
                col = col << 1 | (nb >> w & 1);
            }
            let next = code << pos | col;
            if next > self.best >> (self.len - prefix_len) {
                continue;
            }
            self.perm.push(v);
            self.go(pos + 1, used | 1 << v, next);
            self.perm.pop();
        }
    }
}

/// Canonical labeling: `perm[p]` is the vertex placed at position `p`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::Infeasible {
            what: "vertex count",
            got: n,
            cap: MAX_CANONICAL_VERTICES,
            reason: "canonical forms search vertex permutations exhaustively",
        });
    }
    let cells = refine(g);
    let mut cell_at = Vec::with_capacity(n);
    for cell in &cells {
        let mask = cell.iter().fold(0u64, |m, &v| m | 1 << v);
        cell_at.extend(std::iter::repeat_n(mask, cell.len()));
    }
    let len = n * n.saturating_sub(1) / 2;
    let mut s = Search {
        g,
        len,
        cell_at,
        perm: Vec::with_capacity(n),
        // all ones: only the complete graph reaches it, and then the
        // identity labeling is already canonical
        best: if len == 0 { 0 } else { u64::MAX >> (64 - len) },
        best_perm: (0..n).collect(),
    };
    s.go(0, 0, 0);
    Ok((
        CanonicalForm {
            n: n as u8,
            code: s.best,
        },
        s.best_perm,
    ))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(f, _)| f)
}
