//! Integer partitions and the Ferrers-diagram calculus behind staircase
//! graphs: conjugation, depth, blowups, row/column cut counts, legality
//! with respect to a vertex count, the minimal legal vertex count and the
//! expansion value of a partition.
//!
//! Indices follow the usual convention: rows and columns are 1-based and
//! `λ_q = 0` for `q > t`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonempty weakly decreasing tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `λ_i`, 1-based, reading 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        let mut mu = vec![0usize; m];
        for &p in &self.parts {
            for slot in mu.iter_mut().take(p) {
                *slot += 1;
            }
        }
        Partition { parts: mu }
    }

    /// `λ_1 + t`, the side length of the bounding box.
    pub fn box_size(&self) -> usize {
        self.largest() + self.len()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `|λ²| = (Σ λ_i² + Σ μ_j²) / 2`; always integral.
    pub fn sq_weight(&self) -> usize {
        let rows: usize = self.parts.iter().map(|p| p * p).sum();
        let cols: usize = self.conjugate().parts.iter().map(|p| p * p).sum();
        debug_assert!((rows + cols).is_multiple_of(2));
        (rows + cols) / 2
    }

    /// `min_{0≤k≤t} (k + λ_{k+1})`: the fewest rows and columns covering
    /// the diagram.
    pub fn depth(&self) -> usize {
        (0..=self.len())
            .map(|k| k + self.part(k + 1))
            .min()
            .expect("range is nonempty")
    }

    /// Largest `d` such that the diagram of `cor(d)` sits inside this one.
    pub fn depth_by_embedding(&self) -> usize {
        let fits = |d: usize| (1..=d).all(|i| self.part(i) + i > d);
        let mut d = 0;
        while fits(d + 1) {
            d += 1;
        }
        d
    }

    /// The partition `cλ`: every part multiplied by `c` and repeated `c` times.
    pub fn blowup(&self, c: usize) -> Result<Partition> {
        if c == 0 {
            return Err(Error::Precondition {
                what: "blowup factor",
                got: 0,
                min: 1,
            });
        }
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| std::iter::repeat_n(c * p, c))
            .collect();
        Ok(Partition { parts })
    }

    /// Number of boxes lying in a row of `rows` or a column of `cols` but
    /// not in both.
    pub fn b_cut(&self, rows: &[usize], cols: &[usize]) -> Result<usize> {
        let rows = self.checked_indices(rows, self.len(), "row")?;
        let cols = self.checked_indices(cols, self.largest(), "column")?;
        let conj = self.conjugate();
        let row_sum: usize = rows.iter().map(|&i| self.part(i)).sum();
        let col_sum: usize = cols.iter().map(|&j| conj.part(j)).sum();
        let both = rows
            .iter()
            .map(|&i| cols.iter().filter(|&&j| self.part(i) >= j).count())
            .sum::<usize>();
        Ok(row_sum + col_sum - 2 * both)
    }

    fn checked_indices(&self, idx: &[usize], max: usize, what: &'static str) -> Result<Vec<usize>> {
        let mut v = idx.to_vec();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > max) {
            return Err(Error::IndexOutOfRange {
                what,
                index: bad,
                max,
            });
        }
        Ok(v)
    }

    fn require_box(&self, n: usize) -> Result<()> {
        if n < self.box_size() {
            return Err(Error::Precondition {
                what: "n",
                got: n as i64,
                min: self.box_size() as i64,
            });
        }
        Ok(())
    }

    /// Legality with respect to `n`: prefix row sums, prefix column sums and
    /// the depth cover all respect the cut bound. Requires `n ≥ box(λ)`.
    pub fn is_legal(&self, n: usize) -> Result<bool> {
        self.require_box(n)?;
        let prefixes_ok = |p: &Partition| {
            let mut s = 0;
            p.parts.iter().enumerate().all(|(k0, &x)| {
                s += x;
                let k = k0 + 1;
                2 * s <= k * (n - k)
            })
        };
        let d = self.depth();
        Ok(prefixes_ok(self) && prefixes_ok(&self.conjugate()) && 2 * self.weight() <= d * (n - d))
    }

    /// The stronger diagnostic variant of condition (3), checked for every
    /// split `k` rows / `λ_{k+1}` columns with `1 ≤ k < t`. Not part of
    /// [`Partition::is_legal`].
    pub fn is_strongly_legal(&self, n: usize) -> Result<bool> {
        if !self.is_legal(n)? {
            return Ok(false);
        }
        let w = self.weight();
        Ok((1..self.len()).all(|k| {
            let c = self.part(k + 1);
            let cover = k + c;
            cover > n || 2 * (w - k * c) <= cover * (n - cover)
        }))
    }

    /// `max_k (k + ⌈2(λ_1+…+λ_k)/k⌉)`.
    pub fn n_r(&self) -> usize {
        let mut s = 0;
        self.parts
            .iter()
            .enumerate()
            .map(|(k0, &x)| {
                s += x;
                let k = k0 + 1;
                k + (2 * s).div_ceil(k)
            })
            .max()
            .expect("nonempty")
    }

    /// `depth + ⌈2|λ| / depth⌉`.
    pub fn n_d(&self) -> usize {
        let d = self.depth();
        d + (2 * self.weight()).div_ceil(d)
    }

    /// The least `n` for which the partition is legal.
    pub fn n_min(&self) -> usize {
        self.n_r().max(self.conjugate().n_r()).max(self.n_d())
    }

    /// `h(λ) = N(λ) − 2|λ²|/|λ|`, the expansion of `G_{N(λ)}(λ)`.
    pub fn h(&self) -> Rational {
        let n = self.n_min() as i128;
        let w = self.weight() as i128;
        let sq = self.sq_weight() as i128;
        // N - 2 sq / w = (N w - 2 sq) / w
        Rational::new(n * w - 2 * sq, w).expect("weight is positive")
    }

    /// `h(λ) − N(λ)/3`.
    pub fn deficiency(&self) -> Rational {
        let n = self.n_min() as i128;
        let w = self.weight() as i128;
        let sq = self.sq_weight() as i128;
        // (N w - 2 sq)/w - N/3 = (2 N w - 6 sq) / (3 w)
        Rational::new(2 * n * w - 6 * sq, 3 * w).expect("weight is positive")
    }

    /// All partitions of `m`, in reverse lexicographic order starting at `(m)`.
    pub fn all_of(m: usize) -> PartitionsOf {
        PartitionsOf {
            next: (m > 0).then(|| vec![m]),
        }
    }

    /// All partitions with weight in `1..=max_weight`.
    pub fn all_up_to(max_weight: usize) -> impl Iterator<Item = Partition> {
        (1..=max_weight).flat_map(Partition::all_of)
    }
}

/// The staircase `cor(t) = (t, t−1, …, 1)`.
pub fn cor(t: usize) -> Result<Partition> {
    if t == 0 {
        return Err(Error::Precondition {
            what: "t",
            got: 0,
            min: 1,
        });
    }
    Ok(Partition {
        parts: (1..=t).rev().collect(),
    })
}

/// `((2t−1)^(2), (2t−3)^(2), …, 3^(2), 1)`, the partition whose staircase
/// graph on `4t` vertices gives the upper bound at powers of two.
pub fn pow2_family(t: usize) -> Result<Partition> {
    if t < 2 {
        return Err(Error::Precondition {
            what: "t",
            got: t as i64,
            min: 2,
        });
    }
    let mut parts = Vec::with_capacity(2 * t - 1);
    for k in (1..t).rev() {
        parts.push(2 * k + 1);
        parts.push(2 * k + 1);
    }
    parts.push(1);
    Ok(Partition { parts })
}

/// Iterator over the partitions of a fixed integer.
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: decrement the rightmost part > 1, refill greedily
        if let Some(pos) = cur.iter().rposition(|&p| p > 1) {
            let mut succ = cur[..pos].to_vec();
            let v = cur[pos] - 1;
            let mut rest = cur[pos..].iter().sum::<usize>();
            while rest > 0 {
                let p = v.min(rest);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: cur })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `a^k` repeats `a` k times (`3^2,1` = `3,3,1`).
    fn from_str(s: &str) -> Result<Self> {
        let num = |x: &str| {
            x.trim()
                .trim_matches(|c| c == '{' || c == '}' || c == '(' || c == ')')
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition entry {x:?} in {s:?}")))
        };
        let mut parts = Vec::new();
        for item in s.trim().trim_matches(|c| c == '(' || c == ')').split(',') {
            match item.split_once('^') {
                Some((base, exp)) => {
                    let b = num(base)?;
                    parts.extend(std::iter::repeat_n(b, num(exp)?));
                }
                None => parts.push(num(item)?),
            }
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_is_validated() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("3^2,2^3,1").parts(), &[3, 3, 2, 2, 2, 1]);
        assert_eq!(p("3^{(2)},1").parts(), &[3, 3, 1]);
        assert_eq!(p("3,3,1").to_string(), "3,3,1");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,3,2,2,2,1").conjugate(), p("6,5,2"));
        assert_eq!(p("1").conjugate(), p("1"));
        assert_eq!(cor(4).unwrap().conjugate(), cor(4).unwrap());
    }

    #[test]
    fn box_and_weights() {
        assert_eq!(p("3,3,2,2,2,1").box_size(), 9);
        assert_eq!(p("1").box_size(), 2);
        for t in 1..=20 {
            let c = cor(t).unwrap();
            assert_eq!(c.box_size(), 2 * t);
            assert_eq!(c.weight(), t * (t + 1) / 2);
            assert_eq!(c.sq_weight(), t * (t + 1) * (2 * t + 1) / 6);
        }
        assert_eq!(p("3,3,1").weight(), 7);
        assert_eq!(p("3,3,1").sq_weight(), 18);
    }

    #[test]
    fn depth_examples() {
        for t in 1..=12 {
            assert_eq!(cor(t).unwrap().depth(), t);
        }
        assert_eq!(p("3,3,2,2,2,1").depth(), 3);
        assert_eq!(p("1").depth(), 1);
        assert_eq!(p("3,3,2,2,2,1").depth_by_embedding(), 3);
    }

    #[test]
    fn cor_examples() {
        assert_eq!(cor(1).unwrap(), p("1"));
        assert_eq!(cor(3).unwrap(), p("3,2,1"));
        assert_eq!(cor(5).unwrap(), p("5,4,3,2,1"));
        assert!(cor(0).is_err());
    }

    #[test]
    fn blowup_examples() {
        assert_eq!(p("1").blowup(2).unwrap(), p("2,2"));
        assert_eq!(cor(2).unwrap().blowup(3).unwrap(), p("6,6,6,3,3,3"));
        assert!(p("1").blowup(0).is_err());
    }

    #[test]
    fn b_cut_examples() {
        let l = p("3,3,1");
        assert_eq!(l.b_cut(&[1], &[]).unwrap(), 3);
        assert_eq!(l.b_cut(&[1], &[1]).unwrap(), 4);
        assert_eq!(l.b_cut(&[1, 2, 3], &[1, 2, 3]).unwrap(), 0);
        assert!(matches!(l.b_cut(&[4], &[]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(l.b_cut(&[], &[0]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn legality_examples() {
        let l = p("3,3,1");
        assert!(l.is_legal(8).unwrap());
        assert!(!l.is_legal(7).unwrap());
        assert!(matches!(l.is_legal(5), Err(Error::Precondition { .. })));
        for t in 1..=15 {
            assert!(cor(t).unwrap().is_legal(2 * t + 1).unwrap());
        }
    }

    #[test]
    fn n_min_examples() {
        assert_eq!(p("3,3,1").n_min(), 8);
        assert_eq!(p("6,5,2").n_min(), 13);
        assert_eq!(p("1").n_min(), 3);
        assert_eq!(p("1").n_r(), 3);
        assert_eq!(p("1").n_d(), 3);
        for t in 1..=15 {
            assert_eq!(cor(t).unwrap().n_min(), 2 * t + 1);
        }
    }

    #[test]
    fn h_and_deficiency_examples() {
        assert_eq!(p("3,3,1").h(), ratio(20, 7));
        assert_eq!(p("1").h(), Rational::ONE);
        for t in 1..=15 {
            let c = cor(t).unwrap();
            assert_eq!(c.h(), ratio(2 * t as i128 + 1, 3));
            assert_eq!(c.deficiency(), Rational::ZERO);
        }
    }

    #[test]
    fn pow2_family_examples() {
        assert_eq!(pow2_family(2).unwrap(), p("3,3,1"));
        let l4 = pow2_family(4).unwrap();
        assert_eq!(l4, p("7,7,5,5,3,3,1"));
        assert_eq!(l4.deficiency(), ratio(8, 93));
        assert_eq!(pow2_family(8).unwrap().deficiency(), ratio(16, 381));
        assert!(pow2_family(1).is_err());
    }

    #[test]
    fn pow2_family_closed_forms() {
        for t in 2..=40usize {
            let l = pow2_family(t).unwrap();
            let mut conj = vec![2 * t - 1];
            for k in (2..=2 * t - 2).rev().step_by(2) {
                conj.push(k);
                conj.push(k);
            }
            assert_eq!(l.conjugate().parts(), &conj[..], "t={t}");
            assert_eq!(l.weight(), 2 * t * t - 1);
            assert_eq!(3 * l.sq_weight(), t * (8 * t * t - 5));
            assert_eq!(l.n_min(), 4 * t);
            assert_eq!(l.n_d(), 4 * t);
            assert_eq!(l.n_r(), 4 * t);
            assert_eq!(l.conjugate().n_r(), 4 * t);
        }
    }

    #[test]
    fn strong_legality_implies_legality() {
        for l in Partition::all_up_to(12) {
            for n in l.box_size()..l.box_size() + 12 {
                if l.is_strongly_legal(n).unwrap() {
                    assert!(l.is_legal(n).unwrap());
                }
            }
        }
        assert!(cor(3).unwrap().is_strongly_legal(7).unwrap());
    }

    #[test]
    fn partition_counts() {
        // p(m) for m = 1..=12
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (m, &e) in (1..=12).zip(expected.iter()) {
            let all: Vec<_> = Partition::all_of(m).collect();
            assert_eq!(all.len(), e, "m={m}");
            assert!(all.iter().all(|l| l.weight() == m));
        }
        assert_eq!(Partition::all_of(0).count(), 0);
    }
}
