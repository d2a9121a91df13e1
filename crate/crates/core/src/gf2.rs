//! Linear algebra over GF(2): incremental echelon bases for rank, span
//! membership and quotient coordinates.

use fixedbitset::FixedBitSet;

/// Echelon basis of a subspace of `GF(2)^len`, vectors stored as bitsets.
///
/// Each stored vector has a distinct pivot, its lowest set bit.
#[derive(Debug, Clone)]
pub struct Basis {
    len: usize,
    rows: Vec<FixedBitSet>,
    pivot_row: Vec<Option<usize>>,
}

impl Basis {
    pub fn new(len: usize) -> Self {
        Basis {
            len,
            rows: Vec::new(),
            pivot_row: vec![None; len],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &FixedBitSet) -> FixedBitSet {
        let mut v = v.clone();
        let mut from = 0;
        while let Some(p) = v.ones().find(|&p| p >= from) {
            match self.pivot_row[p] {
                Some(r) => v.symmetric_difference_with(&self.rows[r]),
                None => from = p + 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &FixedBitSet) -> bool {
        self.reduce(v).is_clear()
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &FixedBitSet) -> bool {
        assert_eq!(v.len(), self.len);
        let mut v = v.clone();
        loop {
            let Some(p) = v.minimum() else { return false };
            match self.pivot_row[p] {
                Some(r) => v.symmetric_difference_with(&self.rows[r]),
                None => {
                    self.pivot_row[p] = Some(self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
    }
}

/// Rank of the matrix whose columns are `cols`.
pub fn rank(len: usize, cols: impl IntoIterator<Item = FixedBitSet>) -> usize {
    let mut b = Basis::new(len);
    for c in cols {
        b.insert(&c);
    }
    b.rank()
}

/// Fully reduced basis of a subspace of `GF(2)^m` for `m ≤ 64`, with
/// vectors packed in a `u64`. Gives linear coordinates on the quotient.
#[derive(Debug, Clone)]
pub struct WordBasis {
    m: usize,
    /// (pivot bit, vector); no vector has another's pivot set.
    rows: Vec<(u32, u64)>,
}

impl WordBasis {
    pub fn new(m: usize) -> Self {
        assert!(m <= 64);
        WordBasis { m, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: u64) -> u64 {
        for &(p, r) in &self.rows {
            if v >> p & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = v.trailing_zeros();
        for (_, r) in self.rows.iter_mut() {
            if *r >> p & 1 == 1 {
                *r ^= v;
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Mask of the pivot positions.
    pub fn pivots(&self) -> u64 {
        self.rows.iter().fold(0, |m, &(p, _)| m | 1 << p)
    }

    /// Coordinates of `v` modulo the span: the reduced vector with pivot
    /// positions squeezed out, as an integer below `2^(m − rank)`.
    pub fn quotient_index(&self, v: u64) -> u64 {
        let r = self.reduce(v);
        let free = !self.pivots() & if self.m == 64 { u64::MAX } else { (1 << self.m) - 1 };
        let mut out = 0u64;
        let mut k = 0;
        let mut f = free;
        while f != 0 {
            let b = f.trailing_zeros();
            f &= f - 1;
            out |= (r >> b & 1) << k;
            k += 1;
        }
        out
    }
}
