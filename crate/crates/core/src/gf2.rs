//! Dense matrices over GF(2) with at most 128 columns.
//!
//! Rows are packed into `u128` words, column `j` at bit `j`. This covers every
//! matrix the library needs: coordinate matrices of up to 127 field elements,
//! basis conversion matrices, and the code transformation `A` with its left
//! inverse.

use std::fmt;

/// An `nrows × ncols` matrix over GF(2), `ncols <= 128`.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u128>,
    ncols: usize,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.ncols)?;
        for r in &self.rows {
            for j in 0..self.ncols {
                write!(f, "{}", (r >> j) & 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn col_mask(ncols: usize) -> u128 {
    if ncols == 128 {
        u128::MAX
    } else {
        (1u128 << ncols) - 1
    }
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        assert!(ncols <= 128, "at most 128 columns");
        Self {
            rows: vec![0; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, r) in m.rows.iter_mut().enumerate() {
            *r = 1u128 << i;
        }
        m
    }

    /// Builds a matrix from packed rows; bits at or above `ncols` are rejected.
    pub fn from_rows(rows: Vec<u128>, ncols: usize) -> Self {
        assert!(ncols <= 128, "at most 128 columns");
        let mask = col_mask(ncols);
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row has bits beyond column {ncols}"
        );
        Self { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> u128 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1u128 << j;
        } else {
            self.rows[i] &= !(1u128 << j);
        }
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        assert!(self.nrows() <= 128, "transpose needs at most 128 rows");
        let mut t = BitMatrix::zeros(self.ncols, self.nrows());
        for (i, &r) in self.rows.iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                t.rows[j] |= 1u128 << i;
                bits &= bits - 1;
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        let rows = self.rows.iter().map(|&r| other.left_mul_row(r)).collect();
        BitMatrix {
            rows,
            ncols: other.ncols,
        }
    }

    /// Row vector times matrix: XOR of the rows selected by the bits of `v`.
    pub fn left_mul_row(&self, v: u128) -> u128 {
        let mut acc = 0u128;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= self.rows[i];
            bits &= bits - 1;
        }
        acc
    }

    /// Matrix times column vector; bit `i` of the result is `<row_i, v>`.
    pub fn mul_col(&self, v: u128) -> u128 {
        self.rows
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &r)| acc | (((r & v).count_ones() as u128 & 1) << i))
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.rows)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.nrows();
        assert_eq!(n, self.ncols, "inverse of a non-square matrix");
        let mut a = self.rows.clone();
        let mut inv = BitMatrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| (a[r] >> col) & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix { rows: inv, ncols: n })
    }

    /// Selects a set of `ncols` linearly independent rows (smallest indices
    /// first). Returns `None` when the column rank is deficient.
    pub fn independent_rows(&self) -> Option<Vec<usize>> {
        let mut basis: Vec<(u32, u128)> = Vec::with_capacity(self.ncols);
        let mut chosen = Vec::with_capacity(self.ncols);
        for (i, &r) in self.rows.iter().enumerate() {
            let reduced = reduce_against(&basis, r);
            if reduced != 0 {
                insert_reduced(&mut basis, reduced);
                chosen.push(i);
                if chosen.len() == self.ncols {
                    return Some(chosen);
                }
            }
        }
        None
    }

    /// A left inverse `L` (`ncols × nrows`) with `L · self = I`, for a matrix of
    /// full column rank.
    ///
    /// `L` only reads the rows returned by [`BitMatrix::independent_rows`]; the
    /// remaining columns of `L` are zero. Returns the inverse together with
    /// that row selection.
    pub fn left_inverse(&self) -> Option<(BitMatrix, Vec<usize>)> {
        let n = self.ncols;
        let sel = self.independent_rows()?;
        let sub = BitMatrix::from_rows(sel.iter().map(|&i| self.rows[i]).collect(), n);
        let sub_inv = sub.inverse()?;
        // L[:, sel[c]] = sub_inv[:, c]
        let mut l = BitMatrix::zeros(n, self.nrows());
        for r in 0..n {
            let mut bits = sub_inv.rows[r];
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                l.rows[r] |= 1u128 << sel[c];
                bits &= bits - 1;
            }
        }
        Some((l, sel))
    }
}

fn reduce_against(basis: &[(u32, u128)], mut v: u128) -> u128 {
    for &(lead, b) in basis {
        if (v >> lead) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

fn insert_reduced(basis: &mut Vec<(u32, u128)>, v: u128) {
    let lead = 127 - v.leading_zeros();
    basis.push((lead, v));
}

/// GF(2)-rank of a list of packed row vectors.
pub fn rank_of_rows(rows: &[u128]) -> usize {
    let mut basis: Vec<(u32, u128)> = Vec::new();
    for &r in rows {
        let reduced = reduce_against(&basis, r);
        if reduced != 0 {
            insert_reduced(&mut basis, reduced);
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> BitMatrix {
        let rows = (0..r).map(|_| rng.gen::<u128>() & col_mask(c)).collect();
        BitMatrix::from_rows(rows, c)
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(127).rank(), 127);
        assert_eq!(BitMatrix::zeros(5, 9).rank(), 0);
        assert_eq!(rank_of_rows(&[3, 5, 6]), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut found = 0;
        while found < 10 {
            let m = random_matrix(&mut rng, 127, 127);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), BitMatrix::identity(127));
                assert_eq!(inv.mul(&m), BitMatrix::identity(127));
                found += 1;
            } else {
                assert!(m.rank() < 127);
            }
        }
    }

    #[test]
    fn left_inverse_of_tall_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 127, 113);
        assert_eq!(a.rank(), 113);
        let (l, sel) = a.left_inverse().unwrap();
        assert_eq!(sel.len(), 113);
        assert_eq!(l.mul(&a), BitMatrix::identity(113));
        // columns outside the selection are never read
        let outside: u128 = (0..127).filter(|i| !sel.contains(i)).map(|i| 1u128 << i).sum();
        assert!(l.rows().iter().all(|r| r & outside == 0));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = BitMatrix::from_rows(vec![1, 2, 3], 3);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn transpose_and_products_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = random_matrix(&mut rng, 20, 30);
        let v: u128 = rng.gen::<u128>() & col_mask(30);
        let col = a.mul_col(v);
        assert_eq!(a.transpose().left_mul_row(v) & col_mask(20), col);
        assert_eq!(a.transpose().transpose(), a);
    }
}
