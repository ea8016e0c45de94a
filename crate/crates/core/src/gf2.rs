//! Dense vectors and matrices over the two-element field.
//!
//! Every complex in this crate is tiny (a handful of generators), so the
//! representation favours clarity: rows are bit-packed in `u64` words and
//! all eliminations are plain Gaussian reduction.

use std::fmt;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, pos: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(pos, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, o) in out.data.iter_mut().zip(&other.data) {
            r.xor_assign(o);
        }
        out
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.data[r].iter_ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len());
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = false;
            for c in self.data[r].iter_ones() {
                acc ^= v.get(c);
            }
            out.set(r, acc);
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].iter_ones() {
                out.set(c, r, true);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = RowBasis::new(self.cols);
        for r in &self.data {
            basis.insert(r.clone());
        }
        basis.dim()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for c in 0..m.cols {
            let Some(r) = (next_row..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.data.swap(next_row, r);
            let pivot_row = m.data[next_row].clone();
            for (i, row) in m.data.iter_mut().enumerate() {
                if i != next_row && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the right kernel: vectors `v` with `M v = 0`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (rref, pivots) = self.rref();
        let mut kernel = Vec::new();
        for j in 0..self.cols {
            if pivots.contains(&j) {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(j, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rref.get(i, j) {
                    v.set(p, true);
                }
            }
            kernel.push(v);
        }
        kernel
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            writeln!(f, "{r:?}")?;
        }
        Ok(())
    }
}

/// A row space kept in reduced echelon form, used for span, membership and
/// quotient computations.
#[derive(Clone, Debug)]
pub struct RowBasis {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(len: usize) -> Self {
        RowBasis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    /// Inserts `v` if independent of the span; returns whether it was added.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                for row in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

fn xor_combo(dst: &mut [bool], src: &[bool]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Expresses `target` as a combination of `vectors`; returns the coefficient
/// mask, or `None` when `target` is outside the span.
pub fn express_in(vectors: &[BitVec], target: &BitVec) -> Option<Vec<bool>> {
    let n = vectors.len();
    // Stored vectors are kept mutually reduced, so one pass per lookup works.
    let mut stored: Vec<(BitVec, Vec<bool>, usize)> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        let mut combo = vec![false; n];
        combo[i] = true;
        for (sv, sc, p) in &stored {
            if w.get(*p) {
                w.xor_assign(sv);
                xor_combo(&mut combo, sc);
            }
        }
        if let Some(p) = w.first_one() {
            for (sv, sc, _) in stored.iter_mut() {
                if sv.get(p) {
                    sv.xor_assign(&w);
                    xor_combo(sc, &combo);
                }
            }
            stored.push((w, combo, p));
        }
    }
    let mut w = target.clone();
    let mut combo = vec![false; n];
    for (sv, sc, p) in &stored {
        if w.get(*p) {
            w.xor_assign(sv);
            xor_combo(&mut combo, sc);
        }
    }
    w.is_zero().then_some(combo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        // 2x3 matrix [[1,1,0],[0,1,1]]: rank 2, kernel spanned by (1,1,1).
        let mut m = BitMatrix::zeros(2, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).is_zero());
        assert_eq!(ker[0].count_ones(), 3);
    }

    #[test]
    fn mul_identity() {
        let m = BitMatrix::identity(4);
        let mut a = BitMatrix::zeros(4, 4);
        a.set(1, 2, true);
        a.set(3, 0, true);
        assert_eq!(m.mul(&a), a);
        assert_eq!(a.mul(&m), a);
    }

    #[test]
    fn row_basis_quotient() {
        let mut b = RowBasis::new(3);
        assert!(b.insert(BitVec::from_bools(&[true, true, false])));
        assert!(!b.insert(BitVec::from_bools(&[true, true, false])));
        assert!(b.insert(BitVec::from_bools(&[false, false, true])));
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&BitVec::from_bools(&[true, true, true])));
        assert!(!b.contains(&BitVec::from_bools(&[true, false, false])));
    }

    #[test]
    fn express_combination() {
        let v1 = BitVec::from_bools(&[true, false, true]);
        let v2 = BitVec::from_bools(&[false, true, true]);
        let target = BitVec::from_bools(&[true, true, false]);
        let combo = express_in(&[v1.clone(), v2.clone()], &target).unwrap();
        assert_eq!(combo, vec![true, true]);
        let outside = BitVec::from_bools(&[true, false, false]);
        assert!(express_in(&[v1, v2], &outside).is_none());
    }

    #[test]
    fn kernel_of_zero_and_full() {
        let z = BitMatrix::zeros(2, 3);
        assert_eq!(z.kernel_basis().len(), 3);
        let id = BitMatrix::identity(3);
        assert!(id.kernel_basis().is_empty());
    }
}
