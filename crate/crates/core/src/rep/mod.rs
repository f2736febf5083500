//! Finite-dimensional right modules over presented algebras, stored as
//! contravariant quiver representations: an arrow `a: i -> j` carries a matrix
//! `V_j -> V_i` of shape `dims[i] × dims[j]`.

mod algebra;
mod approx;
mod complex;
mod decompose;
mod hom;
mod json;
mod resolve;
mod tau;

pub use algebra::{Algebra, Element};
pub use approx::Approximation;
pub use complex::RepComplex;
pub use decompose::Summand;
pub use json::{rep_from_json, rep_to_json};
pub use resolve::{InjectiveResolution, ProjectiveResolution};

use crate::linalg::{Mat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    /// One matrix per arrow, `dims[source] × dims[target]`.
    pub maps: Vec<Mat>,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn dim_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// Offsets of each vertex space inside the total space `⊕ V_v`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }
}

/// Per-vertex matrices `f_v: X_v -> Y_v` (shape `dim Y_v × dim X_v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Mat>,
}

impl Morphism {
    pub fn zero(x: &Rep, y: &Rep) -> Morphism {
        Morphism { maps: x.dims.iter().zip(&y.dims).map(|(&a, &b)| Mat::zeros(b, a)).collect() }
    }

    pub fn identity(x: &Rep) -> Morphism {
        Morphism { maps: x.dims.iter().map(|&d| Mat::identity(d)).collect() }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Morphism {
        Morphism { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.is_invertible())
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let maps = self.maps.iter().map(|m| if m.rows() == 0 && m.cols() == 0 { Some(m.clone()) } else { m.inverse() });
        Some(Morphism { maps: maps.collect::<Option<Vec<_>>>()? })
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Mat::rank).sum()
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Rat> {
        self.maps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    /// Total linear map `⊕ X_v -> ⊕ Y_v`.
    pub fn total(&self) -> Mat {
        Mat::block_diag(&self.maps.iter().collect::<Vec<_>>())
    }

    pub fn linear_combination(coeffs: &[Rat], basis: &[Morphism], x: &Rep, y: &Rep) -> Morphism {
        let mut out = Morphism::zero(x, y);
        for (c, f) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                for (o, m) in out.maps.iter_mut().zip(&f.maps) {
                    o.add_scaled(c, m);
                }
            }
        }
        out
    }
}

/// A direct sum with its structure maps.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub rep: Rep,
    pub parts: Vec<Vec<usize>>,
    /// offsets[k][v]: start of summand `k` inside the vertex space `v`.
    offsets: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn new(parts: &[&Rep], num_arrows: usize, num_vertices: usize) -> DirectSum {
        let mut dims = vec![0; num_vertices];
        let mut offsets = Vec::new();
        for p in parts {
            offsets.push(dims.clone());
            for (d, x) in dims.iter_mut().zip(&p.dims) {
                *d += x;
            }
        }
        let maps = (0..num_arrows)
            .map(|a| Mat::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        DirectSum { rep: Rep { dims, maps }, parts: parts.iter().map(|p| p.dims.clone()).collect(), offsets }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn inclusion(&self, k: usize) -> Morphism {
        Morphism {
            maps: (0..self.rep.dims.len())
                .map(|v| {
                    let mut m = Mat::zeros(self.rep.dims[v], self.parts[k][v]);
                    m.set_block(self.offsets[k][v], 0, &Mat::identity(self.parts[k][v]));
                    m
                })
                .collect(),
        }
    }

    pub fn projection(&self, k: usize) -> Morphism {
        Morphism {
            maps: (0..self.rep.dims.len())
                .map(|v| {
                    let mut m = Mat::zeros(self.parts[k][v], self.rep.dims[v]);
                    m.set_block(0, self.offsets[k][v], &Mat::identity(self.parts[k][v]));
                    m
                })
                .collect(),
        }
    }

    /// Map out of the sum with components `fs[k]: part k -> Y`.
    pub fn copair(&self, fs: &[Morphism], y_dims: &[usize]) -> Morphism {
        Morphism {
            maps: (0..self.rep.dims.len())
                .map(|v| {
                    let mut m = Mat::zeros(y_dims[v], self.rep.dims[v]);
                    for (k, f) in fs.iter().enumerate() {
                        m.set_block(0, self.offsets[k][v], &f.maps[v]);
                    }
                    m
                })
                .collect(),
        }
    }

    /// Map into the sum with components `fs[k]: X -> part k`.
    pub fn pair(&self, fs: &[Morphism], x_dims: &[usize]) -> Morphism {
        Morphism {
            maps: (0..self.rep.dims.len())
                .map(|v| {
                    let mut m = Mat::zeros(self.rep.dims[v], x_dims[v]);
                    for (k, f) in fs.iter().enumerate() {
                        m.set_block(self.offsets[k][v], 0, &f.maps[v]);
                    }
                    m
                })
                .collect(),
        }
    }

    /// Component `part i -> part j` of an endomorphism-like map between sums.
    pub fn block(f: &Morphism, source: &DirectSum, i: usize, target: &DirectSum, j: usize) -> Morphism {
        target.projection(j).after(f).after(&source.inclusion(i))
    }
}
