//! Exhaustive search over cut-minimal graphs up to isomorphism, giving
//! `h(n)` exactly for `n ≤ 8`, and the table of known bounds on `h(n)`.
//!
//! Cut-minimal graphs are closed under edge deletion, so every class with
//! `m + 1` edges arises from a class with `m` edges by adding one edge.
//! The search walks edge counts level by level, extends each canonical
//! representative by every admissible non-edge, and deduplicates the next
//! level by canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, mw_certificate, staircase_recognize, CanonicalForm, Graph, VertexSet};
use crate::partitions::{pow2_family, Partition};
use crate::rational::Rational;

pub const MAX_SEARCH_VERTICES: usize = 8;
pub const MAX_TABLE_N: usize = 512;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::Infeasible {
            what: "n",
            got: n,
            cap: MAX_SEARCH_VERTICES,
            reason: "exhaustive search over isomorphism classes",
        });
    }
    if n < 2 {
        return Err(Error::Precondition {
            what: "n",
            got: n as i64,
            min: 2,
        });
    }
    Ok(())
}

/// Whether `g + uv` is still cut-minimal, given that `g` is. Only cuts
/// separating `u` from `v` gain an edge.
fn extension_ok(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.n();
    let bound = (n - 1) / 2;
    if g.degree(u) + 1 > bound || g.degree(v) + 1 > bound {
        return false;
    }
    let others: VertexSet = g.all_vertices() & !(1 << u) & !(1 << v);
    let mut sub: VertexSet = 0;
    loop {
        let s = sub | 1 << u;
        let size = s.count_ones() as usize;
        if 2 * (g.edges_across(s) + 1) > size * (n - size) {
            return false;
        }
        sub = sub.wrapping_sub(others) & others;
        if sub == 0 {
            return true;
        }
    }
}

fn children(form: &CanonicalForm) -> Vec<CanonicalForm> {
    let g = form.graph();
    let n = g.n();
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && extension_ok(&g, u, v) {
                let mut h = g.clone();
                h.add_edge(u, v);
                out.push(canonical_form(&h).expect("n ≤ 8"));
            }
        }
    }
    out
}

/// One canonical representative per isomorphism class of cut-minimal graphs
/// on `[n]` with at least one edge, grouped by edge count: `levels[m]`
/// holds the classes with `m + 1` edges, sorted.
pub fn enumerate_cut_minimal(n: usize) -> Result<Vec<Vec<CanonicalForm>>> {
    check_n(n)?;
    let mut levels = Vec::new();
    if n < 3 {
        return Ok(levels);
    }
    let mut edge = Graph::empty(n)?;
    edge.add_edge(0, 1);
    let mut cur = vec![canonical_form(&edge)?];
    while !cur.is_empty() {
        let next: BTreeSet<CanonicalForm> = cur
            .par_iter()
            .map(children)
            .fold(BTreeSet::new, |mut acc, v| {
                acc.extend(v);
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        levels.push(std::mem::replace(&mut cur, next.into_iter().collect()));
    }
    Ok(levels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphFlags {
    /// Canonical form as hex.
    pub form: String,
    /// 1-based edges of the canonical representative.
    pub edges: Vec<(usize, usize)>,
    pub h: Rational,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub staircase: Option<Partition>,
}

impl GraphFlags {
    pub fn of(form: &CanonicalForm) -> Result<GraphFlags> {
        let g = form.graph();
        Ok(GraphFlags {
            form: form.to_hex(),
            edges: g.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
            h: g.h()?,
            triangle_free: g.is_triangle_free(),
            bipartite: g.is_bipartite(),
            staircase: staircase_recognize(&g),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub isomorphism_classes_visited: usize,
    /// Class counts by edge count, starting at one edge.
    pub classes_by_edge_count: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub h_value: Rational,
    pub cheeger_graphs: Vec<GraphFlags>,
    pub stats: SearchStats,
}

/// `h(n)`: the least `h(G)` over cut-minimal graphs with at least one edge,
/// with every minimizer up to isomorphism, sorted by canonical form.
pub fn cheeger_number(n: usize) -> Result<SearchReport> {
    check_n(n)?;
    let levels = enumerate_cut_minimal(n)?;
    if levels.is_empty() {
        return Err(Error::Edgeless);
    }
    let all: Vec<CanonicalForm> = levels.iter().flatten().copied().collect();
    let hs: Vec<Rational> = all.par_iter().map(|f| f.graph().h()).collect::<Result<_>>()?;
    let h_value = *hs.iter().min().expect("nonempty");
    let mut cheeger: Vec<&CanonicalForm> = all.iter().zip(&hs).filter(|(_, &h)| h == h_value).map(|(f, _)| f).collect();
    cheeger.sort_unstable();
    Ok(SearchReport {
        n,
        h_value,
        cheeger_graphs: cheeger.into_iter().map(GraphFlags::of).collect::<Result<_>>()?,
        stats: SearchStats {
            isomorphism_classes_visited: all.len(),
            classes_by_edge_count: levels.iter().map(Vec::len).collect(),
            wall_time_ms: None,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub h_value: Rational,
    pub all_triangle_free: bool,
    pub all_bipartite: bool,
    pub all_staircase: bool,
    /// Cheeger graphs with no staircase labeling, as canonical hex.
    pub staircase_exceptions: Vec<String>,
    pub graphs: Vec<GraphFlags>,
}

pub fn conjecture_report(n: usize) -> Result<ConjectureReport> {
    Ok(conjectures_of(&cheeger_number(n)?))
}

pub fn conjectures_of(r: &SearchReport) -> ConjectureReport {
    let g = &r.cheeger_graphs;
    ConjectureReport {
        n: r.n,
        h_value: r.h_value,
        all_triangle_free: g.iter().all(|f| f.triangle_free),
        all_bipartite: g.iter().all(|f| f.bipartite),
        all_staircase: g.iter().all(|f| f.staircase.is_some()),
        staircase_exceptions: g.iter().filter(|f| f.staircase.is_none()).map(|f| f.form.clone()).collect(),
        graphs: g.clone(),
    }
}

/// Meshulam–Wallach counts for every cut-minimal class: returns the number of
/// classes checked, or the first class where `min_v M_v < |E|` or
/// `M ≠ 3|T|`.
pub fn mw_sweep(n: usize) -> Result<std::result::Result<usize, CanonicalForm>> {
    let levels = enumerate_cut_minimal(n)?;
    let all: Vec<CanonicalForm> = levels.into_iter().flatten().collect();
    let bad = all.par_iter().find_first(|f| {
        let g = f.graph();
        let c = mw_certificate(&g);
        c.min_m_v() < g.edge_count() || c.m_total as u64 != 3 * g.count_odd_triangles()
    });
    Ok(match bad {
        Some(f) => Err(*f),
        None => Ok(all.len()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
    pub source: &'static str,
}

pub const SOURCE_SEARCH: &str = "exhaustive search";
pub const SOURCE_ODD_FACTOR: &str = "blown-up corner staircase";
pub const SOURCE_POW2: &str = "power-of-two staircase family";

/// Known bounds on `h(n)` for `3 ≤ n ≤ n_max`. Rows with `n ≤ 8` take the
/// values in `exact_small`, indexed by `n`; pass `None` to run the search.
pub fn h_table(n_max: usize, exact_small: Option<&[Rational]>) -> Result<Vec<TableRow>> {
    if n_max > MAX_TABLE_N {
        return Err(Error::Infeasible {
            what: "n_max",
            got: n_max,
            cap: MAX_TABLE_N,
            reason: "rows beyond this are not tabulated",
        });
    }
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let lower = Rational::from_int(n as i128).checked_div(Rational::from_int(3))?;
        let odd = n >> n.trailing_zeros();
        let (upper, exact, source) = if n <= MAX_SEARCH_VERTICES {
            let h = match exact_small {
                Some(v) => v[n],
                None => cheeger_number(n)?.h_value,
            };
            (h, Some(h), SOURCE_SEARCH)
        } else if odd > 1 {
            (lower, Some(lower), SOURCE_ODD_FACTOR)
        } else {
            let upper = pow2_family(n / 4)?.h();
            (upper, None, SOURCE_POW2)
        };
        rows.push(TableRow {
            n,
            lower,
            upper,
            exact,
            source,
        });
    }
    Ok(rows)
}
