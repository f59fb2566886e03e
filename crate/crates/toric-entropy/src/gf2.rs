//! Word-packed linear algebra over GF(2).
//!
//! Everything downstream (star matrices, region restrictions, group
//! enumeration) reduces to three kernels: Gaussian-elimination rank,
//! column restriction, and row-space enumeration in Gray-code order.

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Default cap on row-space enumeration, in bits (2^24 = 16M elements).
pub const DEFAULT_ENUM_LIMIT: u32 = 24;

/// A fixed-length bit vector packed into 64-bit words.
///
/// Bits past `len` are kept zero, so word-wise equality and hashing are
/// well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn from_bits(len: usize, bits: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &b in bits {
            v.set(b, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, bit: usize) -> bool {
        debug_assert!(bit < self.len);
        self.words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, bit: usize, value: bool) {
        assert!(bit < self.len, "bit {bit} out of range for length {}", self.len);
        let mask = 1u64 << (bit % WORD_BITS);
        if value {
            self.words[bit / WORD_BITS] |= mask;
        } else {
            self.words[bit / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of `|self ∩ other|`; true when the overlap is odd.
    pub fn odd_overlap(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Number of bits set in `self ∩ other`.
    pub fn overlap(&self, other: &BitVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True when every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Bitwise complement within the vector's length.
    pub fn complement(&self) -> BitVector {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    /// Keeps only the bits selected by `mask`, compacted into a vector of
    /// length `mask.count_ones()` in ascending bit order.
    pub fn restrict(&self, mask: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, mask.len);
        let mut out = BitVector::zeros(mask.count_ones());
        for (i, bit) in mask.iter_ones().enumerate() {
            if self.get(bit) {
                out.set(i, true);
            }
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVector[{}; {:?}]", self.len, self.iter_ones().collect::<Vec<_>>())
    }
}

/// A binary matrix stored as a list of equal-length rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    n_cols: usize,
}

impl BitMatrix {
    pub fn new(n_cols: usize) -> Self {
        Self { rows: Vec::new(), n_cols }
    }

    pub fn from_rows(n_cols: usize, rows: Vec<BitVector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), n_cols, "row length must equal n_cols");
        }
        Self { rows, n_cols }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVector::from_bits(n, &[i])).collect();
        Self { rows, n_cols: n }
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.n_cols);
        self.rows.push(row);
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Row-space dimension over GF(2).
    ///
    /// Works on a private copy; pivot columns are visited in ascending
    /// order, which keeps fill-in local for banded incidence matrices.
    pub fn rank(&self) -> usize {
        elimination(self.flat_copy(), self.rows.len(), self.n_cols).0
    }

    /// The submatrix keeping the columns whose bit is set in `mask`,
    /// compacted in ascending column order.
    pub fn column_submatrix(&self, mask: &BitVector) -> Result<BitMatrix> {
        if mask.len() != self.n_cols {
            return Err(Error::Argument(format!(
                "column mask length {} does not match n_cols {}",
                mask.len(),
                self.n_cols
            )));
        }
        let rows = self.rows.iter().map(|r| r.restrict(mask)).collect();
        Ok(BitMatrix {
            rows,
            n_cols: mask.count_ones(),
        })
    }

    /// A reduced basis of the row space (the nonzero rows after
    /// elimination).
    pub fn row_basis(&self) -> Vec<BitVector> {
        let n_rows = self.rows.len();
        let (rank, buf) = elimination(self.flat_copy(), n_rows, self.n_cols);
        let words = self.n_cols.div_ceil(WORD_BITS).max(1);
        (0..rank)
            .map(|i| BitVector {
                words: buf[i * words..(i + 1) * words].to_vec(),
                len: self.n_cols,
            })
            .collect()
    }

    /// Streams all `2^rank` elements of the row space in Gray-code order
    /// (successive elements differ by one basis XOR), starting from zero.
    pub fn enumerate_rowspace(&self, limit_bits: u32) -> Result<RowSpaceIter> {
        let basis = self.row_basis();
        if basis.len() > limit_bits as usize {
            return Err(Error::ResourceLimit(format!(
                "row space has 2^{} elements, enumeration limit is 2^{limit_bits}",
                basis.len()
            )));
        }
        Ok(RowSpaceIter {
            current: BitVector::zeros(self.n_cols),
            basis,
            index: 0,
        })
    }

    fn flat_copy(&self) -> Vec<u64> {
        let words = self.n_cols.div_ceil(WORD_BITS).max(1);
        let mut buf = vec![0u64; self.rows.len() * words];
        for (i, r) in self.rows.iter().enumerate() {
            buf[i * words..i * words + r.words.len()].copy_from_slice(r.words());
        }
        buf
    }
}

/// In-place elimination on a flat row-major word buffer. Returns the rank
/// and the buffer in echelon order (pivot rows first).
fn elimination(mut buf: Vec<u64>, n_rows: usize, n_cols: usize) -> (usize, Vec<u64>) {
    let words = n_cols.div_ceil(WORD_BITS).max(1);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let (w, b) = (col / WORD_BITS, col % WORD_BITS);
        let Some(pivot) = (rank..n_rows).find(|&r| buf[r * words + w] >> b & 1 == 1) else {
            continue;
        };
        if pivot != rank {
            for k in 0..words {
                buf.swap(rank * words + k, pivot * words + k);
            }
        }
        eliminate_below(&mut buf, words, rank, w, b, n_rows);
        rank += 1;
    }
    (rank, buf)
}

#[cfg(feature = "parallel")]
fn eliminate_below(buf: &mut [u64], words: usize, rank: usize, w: usize, b: usize, n_rows: usize) {
    use rayon::prelude::*;
    // Parallelism only pays off on wide matrices with many rows left.
    let remaining = n_rows - rank - 1;
    if words >= 16 && remaining >= 256 {
        let (pivot_rows, rest) = buf.split_at_mut((rank + 1) * words);
        let pivot = &pivot_rows[rank * words..(rank + 1) * words];
        rest.par_chunks_mut(words).for_each(|row| {
            if row[w] >> b & 1 == 1 {
                for (r, p) in row.iter_mut().zip(pivot) {
                    *r ^= p;
                }
            }
        });
    } else {
        eliminate_below_seq(buf, words, rank, w, b, n_rows);
    }
}

#[cfg(not(feature = "parallel"))]
fn eliminate_below(buf: &mut [u64], words: usize, rank: usize, w: usize, b: usize, n_rows: usize) {
    eliminate_below_seq(buf, words, rank, w, b, n_rows);
}

fn eliminate_below_seq(
    buf: &mut [u64],
    words: usize,
    rank: usize,
    w: usize,
    b: usize,
    n_rows: usize,
) {
    let (pivot_rows, rest) = buf.split_at_mut((rank + 1) * words);
    let pivot = &pivot_rows[rank * words..(rank + 1) * words];
    for row in rest.chunks_mut(words).take(n_rows - rank - 1) {
        if row[w] >> b & 1 == 1 {
            for (r, p) in row.iter_mut().zip(pivot) {
                *r ^= p;
            }
        }
    }
}

/// Gray-code iterator over a row space; yields `2^basis.len()` vectors.
pub struct RowSpaceIter {
    basis: Vec<BitVector>,
    current: BitVector,
    index: u64,
}

impl RowSpaceIter {
    pub fn count_hint(&self) -> u64 {
        1u64 << self.basis.len()
    }
}

impl Iterator for RowSpaceIter {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        let total = 1u64 << self.basis.len();
        if self.index == total {
            return None;
        }
        if self.index > 0 {
            // Gray code: element i differs from i-1 in bit trailing_zeros(i).
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (1u64 << self.basis.len()) - self.index;
        (left as usize, Some(left as usize))
    }
}
