//! The simplicial complex `CM(n)`: vertices are the pairs of `[n]`, and a
//! set of pairs is a face when the graph it spans is cut-minimal.
//!
//! Faces are `u32` pair masks in the bit layout of
//! [`crate::graphs::pair_index`].

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2;
use crate::graphs::Graph;

pub const MAX_CM_VERTICES: usize = 7;
pub const MAX_BETTI_VERTICES: usize = 6;

pub type Face = u32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub n: usize,
    pub f_vector: Vec<usize>,
    /// `-1` for the empty complex.
    pub dim: i64,
    pub num_maximal_faces_by_dim: Vec<usize>,
    pub pure: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_gf2: Option<Vec<usize>>,
}

impl ComplexSummary {
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.f_vector)
    }
}

pub fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

fn check(n: usize, cap: usize, reason: &'static str) -> Result<()> {
    if n > cap {
        return Err(Error::Infeasible {
            what: "n",
            got: n,
            cap,
            reason,
        });
    }
    Ok(())
}

fn is_face(n: usize, f: Face) -> bool {
    Graph::from_pair_mask(n, f as u64)
        .and_then(|g| g.is_cut_minimal())
        .map(|v| v.is_ok())
        .unwrap_or(false)
}

/// All nonempty faces of `CM(n)`, one sorted layer per cardinality:
/// `layers[d]` holds the faces of dimension `d`.
///
/// A set is extended only by pairs above its largest, and is checked only
/// when every subset one smaller is already a face.
pub fn enumerate_faces(n: usize) -> Result<Vec<Vec<Face>>> {
    check(n, MAX_CM_VERTICES, "faces are subsets of the C(n,2) ≤ 21 pairs")?;
    let pairs = n * n.saturating_sub(1) / 2;
    let mut layers: Vec<Vec<Face>> = Vec::new();
    let mut cur: Vec<Face> = (0..pairs).map(|p| 1 << p).filter(|&f| is_face(n, f)).collect();
    while !cur.is_empty() {
        let next: Vec<Face> = cur
            .par_iter()
            .flat_map_iter(|&f| {
                let top = 32 - f.leading_zeros() as usize;
                let cur = &cur;
                (top..pairs).filter_map(move |p| {
                    let g = f | 1 << p;
                    let mut rest = f;
                    while rest != 0 {
                        let b = rest & rest.wrapping_neg();
                        rest ^= b;
                        if cur.binary_search(&(g ^ b)).is_err() {
                            return None;
                        }
                    }
                    is_face(n, g).then_some(g)
                })
            })
            .collect();
        let mut next = next;
        next.sort_unstable();
        layers.push(std::mem::replace(&mut cur, next));
    }
    Ok(layers)
}

/// Counts of maximal faces by dimension.
pub fn maximal_faces(n: usize) -> Result<Vec<usize>> {
    Ok(maximal_counts(&enumerate_faces(n)?))
}

fn maximal_counts(layers: &[Vec<Face>]) -> Vec<usize> {
    let mut counts = Vec::with_capacity(layers.len());
    for (d, layer) in layers.iter().enumerate() {
        let mut covered = vec![false; layer.len()];
        if let Some(up) = layers.get(d + 1) {
            for &g in up {
                let mut rest = g;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    if let Ok(i) = layer.binary_search(&(g ^ b)) {
                        covered[i] = true;
                    }
                }
            }
        }
        counts.push(covered.iter().filter(|&&c| !c).count());
    }
    counts
}

/// Ranks of the boundary maps `∂_d` for `d = 1 ..= dim`, over GF(2).
fn boundary_ranks(layers: &[Vec<Face>]) -> Vec<usize> {
    (1..layers.len())
        .map(|d| {
            let lower = &layers[d - 1];
            let index: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let cols = layers[d].iter().map(|&g| {
                let mut col = FixedBitSet::with_capacity(lower.len());
                let mut rest = g;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    col.insert(index[&(g ^ b)]);
                }
                col
            });
            gf2::rank(lower.len(), cols)
        })
        .collect()
}

fn betti_from(layers: &[Vec<Face>]) -> Vec<usize> {
    let ranks = boundary_ranks(layers);
    let rank = |d: usize| if d == 0 { 0 } else { ranks.get(d - 1).copied().unwrap_or(0) };
    (0..layers.len())
        .map(|d| layers[d].len() - rank(d) - rank(d + 1))
        .collect()
}

/// GF(2) Betti numbers `b_0, …, b_dim` (unreduced).
pub fn betti_gf2(n: usize) -> Result<Vec<usize>> {
    check(n, MAX_BETTI_VERTICES, "boundary matrices grow too large")?;
    Ok(betti_from(&enumerate_faces(n)?))
}

pub fn f_vector(n: usize) -> Result<ComplexSummary> {
    summary(n, false)
}

pub fn summary(n: usize, with_betti: bool) -> Result<ComplexSummary> {
    if with_betti {
        check(n, MAX_BETTI_VERTICES, "boundary matrices grow too large")?;
    }
    let layers = enumerate_faces(n)?;
    let f_vector: Vec<usize> = layers.iter().map(Vec::len).collect();
    let maximal = maximal_counts(&layers);
    let pure = maximal.iter().rev().skip(1).all(|&m| m == 0);
    Ok(ComplexSummary {
        n,
        dim: f_vector.len() as i64 - 1,
        pure,
        num_maximal_faces_by_dim: maximal,
        betti_gf2: with_betti.then(|| betti_from(&layers)),
        f_vector,
    })
}
