//! Exact linear algebra over the rationals.

mod mat;
mod rat;

pub use mat::{Mat, Rref};
pub use rat::{ParseRatError, Rat};

/// Incrementally maintained subspace of `Q^n`, kept in fully reduced echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a [Rat]>>(ambient: usize, vs: I) -> Subspace {
        let mut s = Subspace::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
}

/// Coordinates with respect to a fixed, linearly independent family of vectors.
#[derive(Debug, Clone)]
pub struct Coordinates {
    ambient: usize,
    k: usize,
    /// Row operations bringing the basis matrix to reduced echelon form.
    transform: Mat,
}

impl Coordinates {
    /// Panics if `basis` is linearly dependent.
    pub fn new(ambient: usize, basis: &[Vec<Rat>]) -> Coordinates {
        let k = basis.len();
        let mut b = Mat::zeros(ambient, k);
        for (j, v) in basis.iter().enumerate() {
            assert_eq!(v.len(), ambient);
            for (i, x) in v.iter().enumerate() {
                b[(i, j)] = x.clone();
            }
        }
        let aug = Mat::hstack(&[&b, &Mat::identity(ambient)]);
        let (red, piv) = aug.rref();
        assert!(
            piv.len() >= k && piv[..k].iter().enumerate().all(|(i, &p)| i == p),
            "coordinate basis is linearly dependent"
        );
        Coordinates { ambient, k, transform: red.block(0, k, ambient, ambient) }
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// Coordinates of `v`, or `None` if it lies outside the span.
    pub fn of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient);
        let y = self.transform.mul_vec(v);
        if y[self.k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(y[..self.k].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn subspace_membership() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&v(&[1, 2, 3])));
        assert!(!s.insert(&v(&[2, 4, 6])));
        assert!(s.insert(&v(&[0, 1, 1])));
        assert!(s.contains(&v(&[1, 3, 4])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn coordinates_recover_combination() {
        let basis = vec![v(&[1, 0, 1, 0]), v(&[0, 1, 1, 2]), v(&[1, 1, 0, 0])];
        let c = Coordinates::new(4, &basis);
        let w: Vec<Rat> = (0..4)
            .map(|i| {
                let x = &(&basis[0][i] * &Rat::from_int(3)) - &basis[2][i];
                &x + &(&basis[1][i] * &Rat::new(1, 2))
            })
            .collect();
        assert_eq!(c.of(&w).unwrap(), vec![Rat::from_int(3), Rat::new(1, 2), Rat::from_int(-1)]);
        assert!(c.of(&v(&[0, 0, 0, 1])).is_none());
    }
}
