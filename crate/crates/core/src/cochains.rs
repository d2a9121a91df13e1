//! GF(2) cochains of the full simplex `Δ^[n]` and brute-force Cheeger
//! constants.
//!
//! A `k`-cochain is a set of `(k+1)`-subsets of `[n]`, stored as a bit
//! vector indexed by the colexicographic rank of the subset. For 2-subsets
//! this is the same order as [`crate::graphs::pair_index`], so a 1-cochain
//! and a graph share one bit layout.
//!
//! The complex may be augmented: a single `(−1)`-simplex (the empty set)
//! whose coboundary is the all-ones 0-cochain. This only changes anything
//! for `k = 0`.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{Basis, WordBasis};
use crate::graphs::{bits_to_hex, canonical_form, pair_index, CanonicalForm, Graph};
use crate::rational::Rational;

/// Upper bound on cochain vector length.
pub const MAX_COCHAIN_LEN: usize = 1 << 24;

/// Upper bound on the number of generators enumerated by brute force.
pub const MAX_BRUTE_FORCE_GENERATORS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Augmentation {
    #[default]
    Augmented,
    Plain,
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(r).unwrap_or(usize::MAX)
}

/// Colex rank of a subset: `Σ_i C(s_i, i+1)` over its sorted elements.
pub fn simplex_rank(mut mask: u64) -> usize {
    let mut r = 0;
    let mut i = 1;
    while mask != 0 {
        let s = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        r += binomial(s, i);
        i += 1;
    }
    r
}

/// All `size`-subsets of `[n]` in colex order (increasing as integers).
pub fn simplices(n: usize, size: usize) -> Vec<u64> {
    if size > n {
        return Vec::new();
    }
    if size == 0 {
        return vec![0];
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::with_capacity(binomial(n, size));
    let mut s: u64 = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    loop {
        out.push(s);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            break;
        }
    }
    out
}

/// Number of `k`-simplices (`(k+1)`-subsets).
fn dim_len(n: usize, k: i32) -> usize {
    if k < -1 {
        0
    } else {
        binomial(n, (k + 1) as usize)
    }
}

fn check_len(n: usize, k: i32) -> Result<usize> {
    let len = dim_len(n, k);
    if len > MAX_COCHAIN_LEN {
        return Err(Error::Infeasible {
            what: "cochain length",
            got: len,
            cap: MAX_COCHAIN_LEN,
            reason: "cochains are dense bit vectors",
        });
    }
    Ok(len)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    n: usize,
    k: i32,
    support: FixedBitSet,
}

impl Cochain {
    pub fn zero(n: usize, k: i32) -> Result<Cochain> {
        if n > 64 || k < -1 || k >= n as i32 {
            return Err(Error::Dimension(format!("no {k}-simplices in Δ^[{n}]")));
        }
        let len = check_len(n, k)?;
        Ok(Cochain {
            n,
            k,
            support: FixedBitSet::with_capacity(len),
        })
    }

    /// The cochain supported on the given vertex subsets, each of size `k+1`.
    pub fn from_simplices(n: usize, k: i32, simplices: &[u64]) -> Result<Cochain> {
        let mut c = Cochain::zero(n, k)?;
        for &s in simplices {
            if s.count_ones() as i32 != k + 1 || (n < 64 && s >> n != 0) {
                return Err(Error::Dimension(format!("{s:#b} is not a {k}-simplex of Δ^[{n}]")));
            }
            c.support.toggle(simplex_rank(s));
        }
        Ok(c)
    }

    fn from_word(n: usize, k: i32, word: u64) -> Cochain {
        let mut c = Cochain::zero(n, k).expect("checked by caller");
        let mut w = word;
        while w != 0 {
            c.support.insert(w.trailing_zeros() as usize);
            w &= w - 1;
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn support(&self) -> &FixedBitSet {
        &self.support
    }

    /// `‖c‖`, the number of simplices in the support.
    pub fn norm(&self) -> usize {
        self.support.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_clear()
    }

    /// Support simplices as vertex masks, in colex order.
    pub fn simplices(&self) -> Vec<u64> {
        let all = simplices(self.n, (self.k + 1) as usize);
        self.support.ones().map(|i| all[i]).collect()
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if (self.n, self.k) != (other.n, other.k) {
            return Err(Error::Dimension("adding cochains of different shape".into()));
        }
        let mut c = self.clone();
        c.support.symmetric_difference_with(&other.support);
        Ok(c)
    }

    /// Support bits in colex order, MSB-first, as lowercase hex.
    pub fn to_hex(&self) -> String {
        let bits: Vec<bool> = (0..self.support.len()).map(|i| self.support[i]).collect();
        bits_to_hex(&bits)
    }

    pub fn from_hex(n: usize, k: i32, hex: &str) -> Result<Cochain> {
        let mut c = Cochain::zero(n, k)?;
        let len = c.support.len();
        let digits: Vec<u32> = hex
            .trim()
            .chars()
            .map(|ch| ch.to_digit(16).ok_or_else(|| Error::Parse(format!("bad hex digit {ch:?}"))))
            .collect::<Result<_>>()?;
        if digits.len() != len.div_ceil(4) {
            return Err(Error::Parse(format!(
                "expected {} hex digits for {len} simplices, got {}",
                len.div_ceil(4),
                digits.len()
            )));
        }
        for (pos, d) in digits.iter().enumerate() {
            for b in 0..4 {
                if d >> (3 - b) & 1 == 1 {
                    let idx = pos * 4 + b;
                    if idx >= len {
                        return Err(Error::Parse("nonzero padding bits".into()));
                    }
                    c.support.insert(idx);
                }
            }
        }
        Ok(c)
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cochain(n={}, k={}, {:?})", self.n, self.k, self.simplices())
    }
}

impl Serialize for Cochain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cochain", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("support", &self.to_hex())?;
        st.end()
    }
}

/// `∂*c`: a `(k+1)`-simplex is in the support iff an odd number of its
/// `k`-faces are.
pub fn coboundary(c: &Cochain) -> Result<Cochain> {
    if c.k > c.n as i32 - 2 {
        return Err(Error::Dimension(format!(
            "no coboundary of a {}-cochain in Δ^[{}]",
            c.k, c.n
        )));
    }
    let mut out = Cochain::zero(c.n, c.k + 1)?;
    let all = if c.n == 64 { u64::MAX } else { (1u64 << c.n) - 1 };
    for s in c.simplices() {
        let mut outside = all & !s;
        while outside != 0 {
            let v = outside.trailing_zeros();
            outside &= outside - 1;
            out.support.toggle(simplex_rank(s | 1 << v));
        }
    }
    Ok(out)
}

/// Coboundaries of the `(k−1)`-simplices, i.e. generators of `im ∂*` in
/// dimension `k`.
fn lower_generators(n: usize, k: i32, aug: Augmentation) -> Result<Vec<Cochain>> {
    let lower = match (k, aug) {
        (k, _) if k >= 1 => simplices(n, k as usize),
        (0, Augmentation::Augmented) => vec![0],
        _ => Vec::new(),
    };
    lower
        .into_iter()
        .map(|s| coboundary(&Cochain::from_simplices(n, k - 1, &[s])?))
        .collect()
}

/// A minimizing lower cochain `d` and the resulting cosystolic norm.
#[derive(Debug, Clone)]
pub struct CosystolicNorm {
    pub norm: usize,
    pub witness: Option<Cochain>,
}

/// `min_d ‖c + ∂*d‖` by enumerating every lower cochain `d`.
///
/// For `k = 1` the lower cochains are vertex sets and `S`, `[n] ∖ S` give
/// the same coboundary, so only sets avoiding the last vertex are tried.
/// Ties go to the numerically smallest `d`.
pub fn cosystolic_norm(c: &Cochain, aug: Augmentation) -> Result<CosystolicNorm> {
    let gens = lower_generators(c.n, c.k, aug)?;
    let free = if c.k == 1 { gens.len().saturating_sub(1) } else { gens.len() };
    if free > MAX_BRUTE_FORCE_GENERATORS {
        return Err(Error::Infeasible {
            what: "lower generators",
            got: free,
            cap: MAX_BRUTE_FORCE_GENERATORS,
            reason: "the cosystolic norm enumerates every lower cochain",
        });
    }
    let mut cur = c.support.clone();
    let mut d: u64 = 0;
    let mut best = (cur.count_ones(..), 0u64);
    for i in 1u64..1 << free {
        let j = i.trailing_zeros() as usize;
        cur.symmetric_difference_with(&gens[j].support);
        d ^= 1 << j;
        let cand = (cur.count_ones(..), d);
        if cand < best {
            best = cand;
        }
    }
    let witness = match c.k {
        k if k >= 1 || (k == 0 && aug == Augmentation::Augmented) => {
            let lower = if k >= 1 { simplices(c.n, k as usize) } else { vec![0] };
            let picked: Vec<u64> = (0..free).filter(|&j| best.1 >> j & 1 == 1).map(|j| lower[j]).collect();
            Some(Cochain::from_simplices(c.n, k - 1, &picked)?)
        }
        _ => None,
    };
    Ok(CosystolicNorm {
        norm: best.0,
        witness,
    })
}

/// Whether `c = ∂*d` for some `d`, by a GF(2) solve against the
/// coboundary generators.
pub fn is_coboundary(c: &Cochain, aug: Augmentation) -> Result<bool> {
    let gens = lower_generators(c.n, c.k, aug)?;
    let mut basis = Basis::new(c.support.len());
    for g in &gens {
        basis.insert(&g.support);
    }
    Ok(basis.contains(&c.support))
}

/// `‖∂*c‖ / ‖c‖_csy`.
pub fn expansion(c: &Cochain, aug: Augmentation) -> Result<Rational> {
    if is_coboundary(c, aug)? {
        return Err(Error::Coboundary);
    }
    let csy = cosystolic_norm(c, aug)?.norm;
    Rational::new(coboundary(c)?.norm() as i128, csy as i128)
}

/// Expansion statistics over every nonzero cosystole of a dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosystoleSummary {
    pub nonzero_cosystoles: usize,
    pub min_expansion: Rational,
    pub max_expansion: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheegerConstant {
    pub n: usize,
    pub k: i32,
    pub augmented: bool,
    pub h: Rational,
    /// Cheeger cosystoles; for `k = 1` one per isomorphism class of graphs.
    pub minimizers: Vec<Cochain>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graph_classes: Vec<String>,
    pub cosystoles: CosystoleSummary,
}

/// `h_k(Δ^[n])` by enumerating all `2^C(n,k+1)` cochains.
///
/// Expansion is constant on cosets of `im ∂*`, so every cochain is mapped
/// to linear quotient coordinates; the minimum weight in a coset is its
/// cosystolic norm, and `h_k` is the least ratio over nonzero cosets. A
/// second pass collects all cosystoles for the minimizer list and the
/// summary.
pub fn cheeger_constant(n: usize, k: i32, aug: Augmentation) -> Result<CheegerConstant> {
    if n < 2 || k < 0 || k > n as i32 - 2 {
        return Err(Error::Dimension(format!("need 0 ≤ k ≤ n − 2, got n = {n}, k = {k}")));
    }
    let m = dim_len(n, k);
    if m > MAX_BRUTE_FORCE_GENERATORS {
        return Err(Error::Infeasible {
            what: "number of k-simplices",
            got: m,
            cap: MAX_BRUTE_FORCE_GENERATORS,
            reason: "every cochain of dimension k is enumerated",
        });
    }
    let word = |c: &Cochain| c.support.ones().fold(0u64, |w, i| w | 1 << i);
    let mut basis = WordBasis::new(m);
    for g in lower_generators(n, k, aug)? {
        basis.insert(word(&g));
    }
    let q = m - basis.rank();
    let unit: Vec<u64> = (0..m).map(|i| basis.quotient_index(1 << i)).collect();
    let upper_of_unit: Vec<FixedBitSet> = (0..m)
        .map(|i| coboundary(&Cochain::from_word(n, k, 1 << i)).map(|c| c.support))
        .collect::<Result<_>>()?;

    // pass 1: minimum weight per coset and a smallest minimizer
    let cosets = 1usize << q;
    let mut min_w = vec![u8::MAX; cosets];
    let mut rep = vec![0u64; cosets];
    let gray_walk = |mut visit: Box<dyn FnMut(u64, u64) + '_>| {
        let (mut c, mut syn) = (0u64, 0u64);
        visit(c, syn);
        for i in 1u64..1 << m {
            let j = i.trailing_zeros() as usize;
            c ^= 1 << j;
            syn ^= unit[j];
            visit(c, syn);
        }
    };
    gray_walk(Box::new(|c, syn| {
        let w = c.count_ones() as u8;
        let s = syn as usize;
        if (w, c) < (min_w[s], rep[s]) || min_w[s] == u8::MAX {
            min_w[s] = w;
            rep[s] = c;
        }
    }));

    let cob_norm = |c: u64| {
        let mut acc = FixedBitSet::with_capacity(upper_of_unit[0].len());
        let mut w = c;
        while w != 0 {
            acc.symmetric_difference_with(&upper_of_unit[w.trailing_zeros() as usize]);
            w &= w - 1;
        }
        acc.count_ones(..) as i128
    };
    let coset_cob: Vec<i128> = rep.iter().map(|&c| cob_norm(c)).collect();
    let h = (1..cosets)
        .map(|s| Rational::new(coset_cob[s], min_w[s] as i128))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Dimension("every cochain is a coboundary".into()))?;

    // pass 2: all cosystoles
    let mut minimizers = Vec::new();
    let mut nonzero = 0usize;
    let mut lo = h;
    let mut hi = h;
    gray_walk(Box::new(|c, syn| {
        let s = syn as usize;
        if s == 0 || c.count_ones() as u8 != min_w[s] {
            return;
        }
        nonzero += 1;
        let e = Rational::new(coset_cob[s], min_w[s] as i128).expect("positive weight");
        lo = lo.min(e);
        hi = hi.max(e);
        if e == h {
            minimizers.push(c);
        }
    }));
    minimizers.sort_unstable();

    let mut graph_classes = Vec::new();
    let minimizers = if k == 1 {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut kept = Vec::new();
        for &c in &minimizers {
            let g = Graph::from_pair_mask(n, c)?;
            if seen.insert(canonical_form(&g)?) {
                kept.push(Cochain::from_word(n, k, c));
            }
        }
        graph_classes = seen.iter().map(|f| f.to_hex()).collect();
        kept
    } else {
        minimizers.into_iter().map(|c| Cochain::from_word(n, k, c)).collect()
    };

    Ok(CheegerConstant {
        n,
        k,
        augmented: aug == Augmentation::Augmented,
        h,
        minimizers,
        graph_classes,
        cosystoles: CosystoleSummary {
            nonzero_cosystoles: nonzero,
            min_expansion: lo,
            max_expansion: hi,
        },
    })
}

/// The 1-cochain whose support is the edge set.
pub fn graph_to_cochain(g: &Graph) -> Result<Cochain> {
    let mut c = Cochain::zero(g.n(), 1)?;
    for (u, v) in g.edges() {
        c.support.insert(pair_index(u, v));
    }
    Ok(c)
}

pub fn cochain_to_graph(c: &Cochain) -> Result<Graph> {
    if c.k != 1 {
        return Err(Error::Dimension(format!("expected a 1-cochain, got k = {}", c.k)));
    }
    let edges: Vec<(usize, usize)> = c
        .simplices()
        .into_iter()
        .map(|s| {
            let u = s.trailing_zeros() as usize;
            let v = 63 - s.leading_zeros() as usize;
            (u, v)
        })
        .collect();
    Graph::from_edges(c.n, &edges)
}
