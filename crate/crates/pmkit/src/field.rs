//! Exact linear algebra over prime fields GF(p).
//!
//! Everything downstream (modules, hom spaces, the interleaving solver, the
//! reductions) runs on this substrate: dense row-major matrices with entries
//! kept as canonical residues in `[0, p)`, exact Gaussian elimination for
//! rank / inversion / affine solving, and a deterministic lexicographic
//! enumerator for coefficient vectors.
//!
//! Matrices are tiny throughout (at most a few dozen rows), so the dense
//! representation is deliberate. Elimination routines switch to packed
//! bitset rows when `p = 2`, which is the hot case.

use crate::gf2;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("entry {value} is not a canonical residue mod {p}")]
    EntryOutOfRange { value: u32, p: u32 },
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("dimension mismatch: {left_rows}x{left_cols} incompatible with {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector length {got} does not match {expected} rows")]
    BadVectorLength { expected: usize, got: usize },
    #[error("enumerating {count} vectors exceeds the cap of {cap}")]
    EnumerationCapExceeded { count: u128, cap: u64 },
}

/// The prime field GF(p). Elements are canonical residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + (self.p - b) as u64;
        (s % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse of a nonzero residue.
    ///
    /// # Panics
    /// Panics if `a == 0`.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        // Fermat: a^(p-2) mod p.
        let mut base = a as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        let p = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    fn check_residue(&self, v: u32) -> Result<(), FieldError> {
        if v >= self.p {
            return Err(FieldError::EntryOutOfRange { value: v, p: self.p });
        }
        Ok(())
    }
}

/// A dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FieldMatrix {
    pub fn new(
        field: PrimeField,
        rows: usize,
        cols: usize,
        entries: Vec<u32>,
    ) -> Result<Self, FieldError> {
        if entries.len() != rows * cols {
            return Err(FieldError::BadEntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for &e in &entries {
            field.check_residue(e)?;
        }
        Ok(Self {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows.
    ///
    /// # Panics
    /// Panics if the rows are ragged or entries are not canonical residues.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            entries.extend_from_slice(row);
        }
        Self::new(field, n_rows, n_cols, entries).expect("invalid entries")
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert!(v < self.field.p);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e == u32::from(i % (self.cols + 1) == 0) || self.cols == 0)
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn add(&self, other: &FieldMatrix) -> Result<FieldMatrix, FieldError> {
        self.check_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(FieldError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(FieldMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, k: u32) -> FieldMatrix {
        let entries = self.entries.iter().map(|&a| self.field.mul(a, k)).collect();
        FieldMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    fn check_same_field(&self, other: &FieldMatrix) -> Result<(), FieldError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch(self.field.p, other.field.p));
        }
        Ok(())
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Result<Vec<u32>, FieldError> {
        if v.len() != self.cols {
            return Err(FieldError::BadVectorLength {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = self.field;
        let mut out = vec![0u32; self.rows];
        for r in 0..self.rows {
            let mut acc = 0u64;
            for c in 0..self.cols {
                acc += self.get(r, c) as u64 * v[c] as u64;
            }
            out[r] = (acc % f.p as u64) as u32;
        }
        Ok(out)
    }
}

/// Exact product over GF(p). Errors on shape or field mismatch.
pub fn mat_mul(a: &FieldMatrix, b: &FieldMatrix) -> Result<FieldMatrix, FieldError> {
    a.check_same_field(b)?;
    if a.cols != b.rows {
        return Err(FieldError::DimensionMismatch {
            left_rows: a.rows,
            left_cols: a.cols,
            right_rows: b.rows,
            right_cols: b.cols,
        });
    }
    let p = a.field.p as u64;
    let mut out = FieldMatrix::zeros(a.field, a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let ark = a.get(r, k) as u64;
            if ark == 0 {
                continue;
            }
            for c in 0..b.cols {
                let cur = out.get(r, c) as u64;
                out.set(r, c, ((cur + ark * b.get(k, c) as u64) % p) as u32);
            }
        }
    }
    Ok(out)
}

/// Rank via exact Gaussian elimination.
pub fn mat_rank(a: &FieldMatrix) -> usize {
    if a.rows == 0 || a.cols == 0 {
        return 0;
    }
    if a.field.p == 2 {
        return gf2::rank(a.rows, a.cols, |r, c| a.get(r, c) == 1);
    }
    let mut work = a.clone();
    let (pivots, _) = rref_in_place(&mut work, None);
    pivots.len()
}

/// Two-sided inverse when the matrix is invertible, `None` otherwise.
/// Errors on non-square input.
pub fn mat_inverse(a: &FieldMatrix) -> Result<Option<FieldMatrix>, FieldError> {
    if a.rows != a.cols {
        return Err(FieldError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(Some(a.clone()));
    }
    // Eliminate on [A | I].
    let mut work = FieldMatrix::zeros(a.field, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            work.set(r, c, a.get(r, c));
        }
        work.set(r, n + r, 1);
    }
    let (pivots, _) = rref_in_place(&mut work, Some(n));
    if pivots.len() < n {
        return Ok(None);
    }
    let mut inv = FieldMatrix::zeros(a.field, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, work.get(r, n + c));
        }
    }
    Ok(Some(inv))
}

/// Solution of an affine system `a · x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    /// The unique solution with all free coordinates set to zero.
    pub particular: Vec<u32>,
    /// Basis of the homogeneous solution space, ordered by free column.
    pub nullspace_basis: Vec<Vec<u32>>,
}

/// Solves `a · x = b`. Returns `None` iff the system is inconsistent;
/// otherwise the solution set is `particular + span(nullspace_basis)`.
pub fn solve_affine(a: &FieldMatrix, b: &[u32]) -> Result<Option<AffineSolution>, FieldError> {
    if b.len() != a.rows {
        return Err(FieldError::BadVectorLength {
            expected: a.rows,
            got: b.len(),
        });
    }
    for &v in b {
        a.field.check_residue(v)?;
    }
    if a.field.p == 2 {
        return Ok(gf2::solve_affine(
            a.rows,
            a.cols,
            |r, c| a.get(r, c) == 1,
            |r| b[r] == 1,
        ));
    }
    // Eliminate on [A | b].
    let mut work = FieldMatrix::zeros(a.field, a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            work.set(r, c, a.get(r, c));
        }
        work.set(r, a.cols, b[r]);
    }
    let (pivots, rank) = rref_in_place(&mut work, Some(a.cols));
    for r in rank..a.rows {
        if work.get(r, a.cols) != 0 {
            return Ok(None);
        }
    }
    let f = a.field;
    let mut particular = vec![0u32; a.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = work.get(i, a.cols);
    }
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; a.cols];
        for &pc in &pivots {
            s[pc] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for fc in 0..a.cols {
        if pivot_set[fc] {
            continue;
        }
        let mut v = vec![0u32; a.cols];
        v[fc] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(work.get(i, fc));
        }
        basis.push(v);
    }
    Ok(Some(AffineSolution {
        particular,
        nullspace_basis: basis,
    }))
}

/// Reduced row echelon form in place over the first `limit` columns
/// (all columns when `None`). Returns the pivot columns and the rank.
fn rref_in_place(m: &mut FieldMatrix, limit: Option<usize>) -> (Vec<usize>, usize) {
    let f = m.field;
    let cols = limit.unwrap_or(m.cols);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..m.cols {
                let (a, b) = (m.get(r, k), m.get(pr, k));
                m.set(r, k, b);
                m.set(pr, k, a);
            }
        }
        let inv = f.inv(m.get(r, c));
        if inv != 1 {
            for k in 0..m.cols {
                m.set(r, k, f.mul(m.get(r, k), inv));
            }
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c);
            if factor == 0 {
                continue;
            }
            for k in 0..m.cols {
                let v = f.sub(m.get(i, k), f.mul(factor, m.get(r, k)));
                m.set(i, k, v);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.rows {
            break;
        }
    }
    (pivots, r)
}

/// Deterministic lexicographic stream of all `p^k` coefficient vectors.
pub struct VectorEnumerator {
    p: u32,
    k: usize,
    total: u64,
    next: u64,
}

impl VectorEnumerator {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for VectorEnumerator {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.next >= self.total {
            return None;
        }
        let v = index_to_vector(self.p, self.k, self.next);
        self.next += 1;
        Some(v)
    }
}

/// Decodes enumeration index `i` into its base-`p` coefficient vector,
/// first coordinate most significant (lexicographic order).
pub fn index_to_vector(p: u32, k: usize, i: u64) -> Vec<u32> {
    let mut v = vec![0u32; k];
    let mut rest = i;
    for slot in (0..k).rev() {
        v[slot] = (rest % p as u64) as u32;
        rest /= p as u64;
    }
    debug_assert_eq!(rest, 0);
    v
}

/// Number of vectors in GF(p)^k, or `None` on overflow past the cap domain.
pub fn vector_count(p: u32, k: usize) -> u128 {
    (p as u128).pow(k as u32)
}

/// All `p^k` vectors in lexicographic order, capped.
pub fn enumerate_vectors(
    field: PrimeField,
    k: usize,
    cap: u64,
) -> Result<VectorEnumerator, FieldError> {
    let count = vector_count(field.p, k);
    if count > cap as u128 {
        return Err(FieldError::EnumerationCapExceeded { count, cap });
    }
    Ok(VectorEnumerator {
        p: field.p,
        k,
        total: count as u64,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn primality_is_checked() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(13).is_ok());
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(PrimeField::new(0), Err(FieldError::NotPrime(0)));
    }

    #[test]
    fn identity_times_m_is_m() {
        let f = gf(2);
        let m = FieldMatrix::from_rows(f, &[vec![1, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let id = FieldMatrix::identity(f, 3);
        assert_eq!(mat_mul(&id, &m).unwrap(), m);
        assert_eq!(mat_mul(&m, &id).unwrap(), m);
    }

    #[test]
    fn example_matrix_times_its_inverse_mod_2() {
        // M from the worked 3x3 constrained-invertibility example; its integer
        // inverse has -1 entries, which reduce to 1 mod 2.
        let f = gf(2);
        let m = FieldMatrix::from_rows(f, &[vec![1, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let m_inv = FieldMatrix::from_rows(f, &[vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(mat_mul(&m, &m_inv).unwrap(), FieldMatrix::identity(f, 3));
        assert_eq!(mat_mul(&m_inv, &m).unwrap(), FieldMatrix::identity(f, 3));
        assert_eq!(mat_inverse(&m).unwrap(), Some(m_inv));
        assert_eq!(mat_rank(&m), 3);
    }

    #[test]
    fn random_products_match_schoolbook_oracle_gf3() {
        let f = gf(3);
        // Small deterministic LCG so the case set is fixed.
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 3) as u32
        };
        for _ in 0..50 {
            let a = FieldMatrix::new(f, 3, 3, (0..9).map(|_| next()).collect()).unwrap();
            let b = FieldMatrix::new(f, 3, 3, (0..9).map(|_| next()).collect()).unwrap();
            let prod = mat_mul(&a, &b).unwrap();
            for r in 0..3 {
                for c in 0..3 {
                    let mut acc = 0u32;
                    for k in 0..3 {
                        acc = (acc + a.get(r, k) * b.get(k, c)) % 3;
                    }
                    assert_eq!(prod.get(r, c), acc);
                }
            }
        }
    }

    #[test]
    fn rank_of_zero_matrix_is_zero() {
        assert_eq!(mat_rank(&FieldMatrix::zeros(gf(2), 2, 3)), 0);
    }

    #[test]
    fn rank_matches_row_space_enumeration_gf2() {
        let f = gf(2);
        let mut state = 7u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) & 1) as u32
        };
        for _ in 0..40 {
            let a = FieldMatrix::new(f, 4, 4, (0..16).map(|_| next()).collect()).unwrap();
            // Row space size by enumerating all row combinations.
            let mut span = std::collections::BTreeSet::new();
            for mask in 0..16u32 {
                let mut v = [0u32; 4];
                for r in 0..4 {
                    if mask >> r & 1 == 1 {
                        for c in 0..4 {
                            v[c] ^= a.get(r, c);
                        }
                    }
                }
                span.insert(v);
            }
            let log2 = span.len().trailing_zeros() as usize;
            assert_eq!(1usize << log2, span.len(), "row span size must be a power of 2");
            assert_eq!(mat_rank(&a), log2);
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        for p in [2u32, 3, 5] {
            let f = gf(p);
            let mut state = p as u64 * 1234567;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % p as u64) as u32
            };
            for _ in 0..30 {
                let a = FieldMatrix::new(f, 3, 5, (0..15).map(|_| next()).collect()).unwrap();
                assert_eq!(mat_rank(&a), mat_rank(&a.transpose()));
            }
        }
    }

    #[test]
    fn inverse_of_identity_and_singular() {
        let f = gf(2);
        for n in 0..5 {
            let id = FieldMatrix::identity(f, n);
            assert_eq!(mat_inverse(&id).unwrap(), Some(id.clone()));
        }
        let sing = FieldMatrix::from_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(mat_inverse(&sing).unwrap(), None);
        let rect = FieldMatrix::zeros(f, 2, 3);
        assert!(matches!(mat_inverse(&rect), Err(FieldError::NotSquare { .. })));
    }

    #[test]
    fn inverse_present_iff_full_rank_and_products_are_identity() {
        for p in [2u32, 3] {
            let f = gf(p);
            let mut state = 99 + p as u64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % p as u64) as u32
            };
            for _ in 0..60 {
                let a = FieldMatrix::new(f, 4, 4, (0..16).map(|_| next()).collect()).unwrap();
                let inv = mat_inverse(&a).unwrap();
                assert_eq!(inv.is_some(), mat_rank(&a) == 4);
                if let Some(inv) = inv {
                    assert!(mat_mul(&a, &inv).unwrap().is_identity());
                    assert!(mat_mul(&inv, &a).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn solve_affine_identity_and_zero() {
        let f = gf(3);
        let id = FieldMatrix::identity(f, 3);
        let sol = solve_affine(&id, &[1, 2, 0]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![1, 2, 0]);
        assert!(sol.nullspace_basis.is_empty());

        let zero = FieldMatrix::zeros(f, 2, 2);
        let sol = solve_affine(&zero, &[0, 0]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![0, 0]);
        assert_eq!(sol.nullspace_basis.len(), 2);
        assert!(solve_affine(&zero, &[1, 0]).unwrap().is_none());
    }

    #[test]
    fn solve_affine_solution_set_matches_exhaustive_check() {
        for p in [2u32, 3] {
            let f = gf(p);
            let mut state = 5 + p as u64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % p as u64) as u32
            };
            for _ in 0..40 {
                let rows = 3;
                let cols = 4;
                let a = FieldMatrix::new(f, rows, cols, (0..rows * cols).map(|_| next()).collect())
                    .unwrap();
                let b: Vec<u32> = (0..rows).map(|_| next()).collect();
                let solved = solve_affine(&a, &b).unwrap();
                // Exhaust all p^cols candidates.
                let mut solutions = Vec::new();
                for x in enumerate_vectors(f, cols, 1 << 20).unwrap() {
                    if a.apply(&x).unwrap() == b {
                        solutions.push(x);
                    }
                }
                match solved {
                    None => assert!(solutions.is_empty()),
                    Some(sol) => {
                        assert!(solutions.contains(&sol.particular));
                        let expected = (p as usize).pow(sol.nullspace_basis.len() as u32);
                        assert_eq!(solutions.len(), expected);
                        // Every basis vector solves the homogeneous system.
                        for v in &sol.nullspace_basis {
                            assert!(a.apply(v).unwrap().iter().all(|&e| e == 0));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn solution_count_is_p_to_the_nullity() {
        // cols <= 6, exhaustive cardinality check.
        let f = gf(2);
        let a = FieldMatrix::from_rows(
            f,
            &[vec![1, 0, 1, 0, 1, 0], vec![0, 1, 1, 0, 0, 1], vec![1, 1, 0, 0, 1, 1]],
        );
        let b = vec![1, 0, 1];
        let sol = solve_affine(&a, &b).unwrap().unwrap();
        let mut count = 0usize;
        for x in enumerate_vectors(f, 6, 1 << 20).unwrap() {
            if a.apply(&x).unwrap() == b {
                count += 1;
            }
        }
        assert_eq!(count, 1 << sol.nullspace_basis.len());
        assert_eq!(count, 1 << (6 - mat_rank(&a)));
    }

    #[test]
    fn enumeration_order_and_bounds() {
        let f = gf(2);
        let vs: Vec<_> = enumerate_vectors(f, 0, 10).unwrap().collect();
        assert_eq!(vs, vec![Vec::<u32>::new()]);

        let vs: Vec<_> = enumerate_vectors(f, 2, 10).unwrap().collect();
        assert_eq!(vs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);

        let f3 = gf(3);
        let vs: Vec<_> = enumerate_vectors(f3, 2, 10).unwrap().collect();
        assert_eq!(vs.len(), 9);
        let set: std::collections::BTreeSet<_> = vs.iter().cloned().collect();
        assert_eq!(set.len(), 9, "no duplicates");

        assert!(matches!(
            enumerate_vectors(f, 40, 1 << 20),
            Err(FieldError::EnumerationCapExceeded { .. })
        ));
    }
}
