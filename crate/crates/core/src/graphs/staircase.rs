use super::{Graph, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::canonical::{canonical_form, MAX_CANONICAL_VERTICES};
use crate::partitions::Partition;

/// The staircase graph `G_n(λ)`.
///
/// Vertices are numbered `v_1..v_{λ_1}`, then `w_1..w_t`, then the isolated
/// `u`'s; `v_i ~ w_j` iff `λ_j ≥ i`.
pub fn staircase(n: usize, lambda: &Partition) -> Result<Graph> {
    if n < lambda.box_size() {
        return Err(Error::Precondition {
            what: "n",
            got: n as i64,
            min: lambda.box_size() as i64,
        });
    }
    let l = lambda.largest();
    let mut g = Graph::empty(n)?;
    for (j0, &row) in lambda.parts().iter().enumerate() {
        for i0 in 0..row {
            g.add_edge(i0, l + j0);
        }
    }
    Ok(g)
}

fn members(s: VertexSet) -> Vec<usize> {
    (0..64).filter(|&v| s >> v & 1 == 1).collect()
}

/// Recovers `λ` with `G ≅ G_n(λ)`, if there is one.
///
/// After dropping isolated vertices the graph must be bipartite and, with
/// both sides sorted by decreasing degree, its biadjacency matrix must be a
/// Ferrers diagram. Of `λ` and `λ*` the lexicographically larger is returned.
pub fn staircase_recognize(g: &Graph) -> Option<Partition> {
    if g.edge_count() == 0 {
        return None;
    }
    let active = g.all_vertices() & !g.isolated_vertices();
    let side = g.two_coloring()?;
    let sort_by_degree = |s: VertexSet| {
        let mut v = members(s);
        v.sort_by_key(|&x| std::cmp::Reverse(g.degree(x)));
        v
    };
    let rows = sort_by_degree(side & active);
    let cols = sort_by_degree(!side & active);
    // row r must be adjacent to exactly the first deg(r) columns
    let mut prefix = vec![0u64; cols.len() + 1];
    for (k, &c) in cols.iter().enumerate() {
        prefix[k + 1] = prefix[k] | 1 << c;
    }
    for &r in &rows {
        if g.neighbors(r) != prefix[g.degree(r)] {
            return None;
        }
    }
    let lambda = Partition::new(rows.iter().map(|&r| g.degree(r)).collect()).ok()?;
    let conj = lambda.conjugate();
    let lambda = if conj.parts() > lambda.parts() { conj } else { lambda };
    if g.n() <= MAX_CANONICAL_VERTICES {
        let rebuilt = staircase(g.n(), &lambda).ok()?;
        debug_assert_eq!(canonical_form(&rebuilt).ok(), canonical_form(g).ok());
    }
    Some(lambda)
}
