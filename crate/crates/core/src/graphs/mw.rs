use serde::Serialize;

use super::Graph;

/// Per-vertex counts from the Meshulam–Wallach lower-bound argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MwCertificate {
    pub m_total: usize,
    pub m_v: Vec<usize>,
    /// Every non-isolated vertex's neighborhood cut is perfect.
    pub sharp: bool,
}

impl MwCertificate {
    pub fn min_m_v(&self) -> usize {
        self.m_v.iter().copied().min().unwrap_or(0)
    }
}

/// `M_v = E(A,A) + E(B,B) + NE(A,B)` with `A` the neighbors of `v` and `B`
/// the remaining vertices other than `v`: the pairs `{w,u}` whose triangle
/// with `v` carries an odd number of edges.
pub fn mw_certificate(g: &Graph) -> MwCertificate {
    let all = g.all_vertices();
    let mut m_v = Vec::with_capacity(g.n());
    let mut sharp = true;
    for v in 0..g.n() {
        let a = g.neighbors(v);
        let b = all & !a & !(1 << v);
        let e_ab = {
            let mut m = a;
            let mut t = 0;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                t += (g.neighbors(x) & b).count_ones() as usize;
            }
            t
        };
        let ne_ab = a.count_ones() as usize * b.count_ones() as usize - e_ab;
        m_v.push(g.edges_within(a) + g.edges_within(b) + ne_ab);
        if a != 0 {
            sharp &= g.edges_across(a) == g.non_edges_across(a);
        }
    }
    MwCertificate {
        m_total: m_v.iter().sum(),
        m_v,
        sharp,
    }
}
