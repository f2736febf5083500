use std::fmt;
use std::ops::{Index, IndexMut};

use super::Rat;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals. Zero-sized shapes are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Output of [`Mat::rref_with_kernel`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
    /// Columns form a basis of the right null space.
    pub kernel: Mat,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Rows of integers, convenient in tests.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect())
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn column(v: &[Rat]) -> Mat {
        Mat { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rat> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape());
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `self += c * rhs`.
    pub fn add_scaled(&mut self, c: &Rat, rhs: &Mat) {
        assert_eq!(self.shape(), rhs.shape());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn hstack(blocks: &[&Mat]) -> Mat {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Mat]) -> Mat {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out[(r, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat { rows: rows.len(), cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            if !inv.is_one() {
                for c in col..self.cols {
                    let v = &self[(row, c)] * &inv;
                    self[(row, c)] = v;
                }
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let f = self[(r, col)].clone();
                for c in col..self.cols {
                    if self[(row, c)].is_zero() {
                        continue;
                    }
                    let t = &f * &self[(row, c)];
                    self[(r, c)] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p = m.eliminate();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rref_with_kernel(&self) -> Rref {
        let (reduced, pivots) = self.rref();
        let kernel = kernel_from_rref(&reduced, &pivots);
        Rref { reduced, pivots, kernel }
    }

    /// Columns spanning the right null space.
    pub fn kernel(&self) -> Mat {
        self.rref_with_kernel().kernel
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Mat::hstack(&[self, &Mat::identity(n)]);
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(red.block(0, n, n, n))
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        if self.rows != b.rows {
            return Err(Error::Input(format!(
                "solve: {}x{} system with {}-row right-hand side",
                self.rows, self.cols, b.rows
            )));
        }
        let n = self.cols;
        let aug = Mat::hstack(&[self, b]);
        let (red, piv) = aug.rref();
        if piv.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Mat::zeros(n, b.cols);
        for (r, &p) in piv.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = red[(r, n + c)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn power(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }
}

fn kernel_from_rref(red: &Mat, pivots: &[usize]) -> Mat {
    let n = red.cols;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut k = Mat::zeros(n, free.len());
    for (j, &f) in free.iter().enumerate() {
        k[(f, j)] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            let v = &red[(r, f)];
            if !v.is_zero() {
                k[(p, j)] = -v;
            }
        }
    }
    k
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mat(rng: &mut ChaCha8Rng, r: usize, c: usize, rank_cap: usize) -> Mat {
        // Product of random r x k and k x c factors has rank <= k.
        let k = rank_cap.max(1);
        let mut a = Mat::zeros(r, k);
        let mut b = Mat::zeros(k, c);
        for i in 0..r {
            for j in 0..k {
                a[(i, j)] = Rat::from_int(rng.gen_range(-3..=3));
            }
        }
        for i in 0..k {
            for j in 0..c {
                b[(i, j)] = Rat::from_int(rng.gen_range(-3..=3));
            }
        }
        a.mul(&b)
    }

    /// Rank by column elimination on the transpose, independent of the
    /// row-reduction routine under test.
    fn rank_by_columns(m: &Mat) -> usize {
        let mut cols: Vec<Vec<Rat>> = (0..m.cols()).map(|c| m.col(c)).collect();
        let mut rank = 0;
        for r in 0..m.rows() {
            let Some(p) = (rank..cols.len()).find(|&j| !cols[j][r].is_zero()) else { continue };
            cols.swap(rank, p);
            let pivot = cols[rank].clone();
            for j in 0..cols.len() {
                if j != rank && !cols[j][r].is_zero() {
                    let f = &cols[j][r] / &pivot[r];
                    for i in 0..m.rows() {
                        let t = &f * &pivot[i];
                        cols[j][i] -= &t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let r = Mat::identity(2).rref_with_kernel();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.kernel.cols(), 0);
    }

    #[test]
    fn proportional_rows() {
        let r = Mat::from_ints(&[&[1, 2], &[2, 4]]).rref_with_kernel();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.kernel, Mat::from_ints(&[&[-2], &[1]]));
    }

    #[test]
    fn empty_shapes() {
        let m = Mat::zeros(0, 3);
        let r = m.rref_with_kernel();
        assert_eq!(r.rank(), 0);
        assert_eq!(r.kernel.cols(), 3);
        let z = Mat::zeros(2, 0);
        assert_eq!(z.kernel().shape(), (0, 0));
        assert_eq!(z.solve(&Mat::zeros(2, 1)).unwrap(), Some(Mat::zeros(0, 1)));
    }

    #[test]
    fn random_kernels() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..40 {
            let m = random_mat(&mut rng, 6, 9, trial % 7);
            let r = m.rref_with_kernel();
            assert!(m.mul(&r.kernel).is_zero());
            assert_eq!(r.rank() + r.kernel.cols(), 9);
            assert_eq!(r.rank(), rank_by_columns(&m));
            assert_eq!(r.reduced.rref().0, r.reduced);
        }
    }

    #[test]
    fn solve_cases() {
        let b = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(Mat::identity(2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Mat::zeros(2, 2).solve(&Mat::from_ints(&[&[1], &[0]])).unwrap(), None);
        assert!(Mat::identity(2).solve(&Mat::zeros(3, 1)).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..30 {
            let a = random_mat(&mut rng, 5, 7, trial % 6);
            let x0 = random_mat(&mut rng, 7, 2, 2);
            let b = a.mul(&x0);
            let x = a.solve(&b).unwrap().expect("consistent by construction");
            assert_eq!(a.mul(&x), b);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Mat::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
