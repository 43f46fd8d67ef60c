//! Packed GF(2) elimination kernels.
//!
//! Rows are stored as `u64` words, bit `c` of a row in word `c / 64`.
//! These back the p = 2 paths of [`crate::field`] and the inner loop of the
//! interleaving solver, where the same small systems get solved millions of
//! times.

use crate::field::AffineSolution;

/// A bit-packed matrix with one extra augmented column slot.
#[derive(Debug, Clone)]
pub(crate) struct BitRows {
    pub rows: usize,
    pub cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitRows {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row.max(1)],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.words[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.words[r * self.words_per_row + c / 64];
        if v {
            *w |= 1u64 << (c % 64);
        } else {
            *w &= !(1u64 << (c % 64));
        }
    }

    #[inline]
    fn xor_rows(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words_per_row, src * self.words_per_row);
        if d == s {
            return;
        }
        for k in 0..self.words_per_row {
            let v = self.words[s + k];
            self.words[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.words.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    /// In-place RREF over the first `limit` columns. Returns pivot columns.
    pub fn rref(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..limit {
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, pr);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }
}

pub(crate) fn rank(
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> bool,
) -> usize {
    let mut m = BitRows::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if entry(r, c) {
                m.set(r, c, true);
            }
        }
    }
    m.rref(cols).len()
}

/// Solves `A·x = b` over GF(2); mirrors the generic `solve_affine` contract.
pub(crate) fn solve_affine(
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> bool,
    rhs: impl Fn(usize) -> bool,
) -> Option<AffineSolution> {
    let mut m = BitRows::zeros(rows, cols + 1);
    for r in 0..rows {
        for c in 0..cols {
            if entry(r, c) {
                m.set(r, c, true);
            }
        }
        if rhs(r) {
            m.set(r, cols, true);
        }
    }
    let pivots = m.rref(cols);
    for r in pivots.len()..rows {
        if m.get(r, cols) {
            return None;
        }
    }
    let mut particular = vec![0u32; cols];
    for (i, &pc) in pivots.iter().enumerate() {
        if m.get(i, cols) {
            particular[pc] = 1;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &pc in &pivots {
        is_pivot[pc] = true;
    }
    let mut basis = Vec::new();
    for fc in 0..cols {
        if is_pivot[fc] {
            continue;
        }
        let mut v = vec![0u32; cols];
        v[fc] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            if m.get(i, fc) {
                v[pc] = 1;
            }
        }
        basis.push(v);
    }
    Some(AffineSolution {
        particular,
        nullspace_basis: basis,
    })
}

/// Augmented bit-system solver used by the interleaving search inner loop.
///
/// The system has `rows` equations over `n_vars` variables; each row is
/// `n_vars` coefficient bits plus the rhs bit at position `n_vars`. Returns
/// one solution (free variables zero) or `None`.
pub(crate) fn solve_augmented_rows(rows: &mut [Vec<u64>], n_vars: usize) -> Option<Vec<u32>> {
    let n_rows = rows.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..n_vars {
        let (w, b) = (c / 64, c % 64);
        let Some(pr) = (r..n_rows).find(|&i| rows[i][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(r, pr);
        for i in 0..n_rows {
            if i != r && rows[i][w] >> b & 1 == 1 {
                let (head, tail) = rows.split_at_mut(r.max(i));
                let (dst, src) = if i > r {
                    (&mut tail[0], &head[r])
                } else {
                    (&mut head[i], &tail[0])
                };
                for k in 0..dst.len() {
                    dst[k] ^= src[k];
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == n_rows {
            break;
        }
    }
    let (rw, rb) = (n_vars / 64, n_vars % 64);
    for row in rows.iter().skip(pivots.len()) {
        let coeffs_zero = {
            let mut all_zero = true;
            for c in 0..n_vars {
                if row[c / 64] >> (c % 64) & 1 == 1 {
                    all_zero = false;
                    break;
                }
            }
            all_zero
        };
        if coeffs_zero && row[rw] >> rb & 1 == 1 {
            return None;
        }
    }
    let mut x = vec![0u32; n_vars];
    for (i, &pc) in pivots.iter().enumerate() {
        if rows[i][rw] >> rb & 1 == 1 {
            x[pc] = 1;
        }
    }
    Some(x)
}
