use super::{Morphism, Rep};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat};
use crate::quiver::{Path, PathVector, Presentation, Quiver, QuotientBasis, Sparse};

/// An element of `e_s A e_t`, i.e. a combination of standard words `s -> t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub source: usize,
    pub target: usize,
    pub coeffs: Sparse,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| c.is_zero())
    }
}

/// A finite-dimensional algebra `kQ/I` with its standard modules.
#[derive(Debug, Clone)]
pub struct Algebra {
    qb: QuotientBasis,
    /// Position of each standard word among the words with the same ends.
    local: Vec<usize>,
    /// `(prefix word, last arrow)` for each nontrivial standard word.
    prefix: Vec<Option<(usize, usize)>>,
    projectives: Vec<Rep>,
    injectives: Vec<Rep>,
}

impl Algebra {
    pub fn new(p: &Presentation) -> Result<Algebra> {
        Ok(Algebra::from_basis(QuotientBasis::new(p)?))
    }

    pub fn from_basis(qb: QuotientBasis) -> Algebra {
        let q = qb.quiver().clone();
        let n = q.num_vertices();
        let mut local = vec![0; qb.dim()];
        for s in 0..n {
            for t in 0..n {
                for (k, w) in qb.words_between(s, t).into_iter().enumerate() {
                    local[w] = k;
                }
            }
        }
        let prefix = qb
            .words()
            .iter()
            .map(|w| {
                (!w.is_trivial()).then(|| {
                    let pre = w.subpath(&q, 0, w.len() - 1);
                    (qb.index_of(&pre).expect("prefixes of standard words are standard"), *w.arrows.last().unwrap())
                })
            })
            .collect();
        let mut alg = Algebra { qb, local, prefix, projectives: Vec::new(), injectives: Vec::new() };
        alg.projectives = (0..n).map(|v| alg.build_projective(v)).collect();
        alg.injectives = (0..n).map(|v| alg.build_injective(v)).collect();
        alg
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.qb
    }

    pub fn quiver(&self) -> &Quiver {
        self.qb.quiver()
    }

    pub fn presentation(&self) -> &Presentation {
        self.qb.presentation()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver().num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver().num_arrows()
    }

    pub fn dim(&self) -> usize {
        self.qb.dim()
    }

    /// No relations survive reduction, i.e. the algebra is a path algebra.
    pub fn is_hereditary(&self) -> bool {
        self.qb.groebner_basis().is_empty() && self.quiver().is_acyclic()
    }

    /// Position of word `w` within the basis of `e_s A e_t`.
    pub fn local_index(&self, w: usize) -> usize {
        self.local[w]
    }

    pub fn zero_rep(&self) -> Rep {
        Rep {
            dims: vec![0; self.num_vertices()],
            maps: self.quiver().arrows().iter().map(|_| Mat::zeros(0, 0)).collect(),
        }
    }

    pub fn simple(&self, v: usize) -> Rep {
        let mut dims = vec![0; self.num_vertices()];
        dims[v] = 1;
        self.rep_with_zero_maps(dims)
    }

    pub fn rep_with_zero_maps(&self, dims: Vec<usize>) -> Rep {
        let maps = self.quiver().arrows().iter().map(|a| Mat::zeros(dims[a.source], dims[a.target])).collect();
        Rep { dims, maps }
    }

    /// `P_v = e_v`-column of `A`: words ending at `v`, arrows acting by left multiplication.
    pub fn projective(&self, v: usize) -> &Rep {
        &self.projectives[v]
    }

    /// `I_v = D(e_v A)`: duals of words starting at `v`.
    pub fn injective(&self, v: usize) -> &Rep {
        &self.injectives[v]
    }

    fn build_projective(&self, v: usize) -> Rep {
        let n = self.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| self.qb.words_between(j, v).len()).collect();
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Mat::zeros(dims[arr.source], dims[arr.target]);
                for (col, p) in self.qb.words_between(arr.target, v).into_iter().enumerate() {
                    for (w, c) in self.qb.left_arrow(a, p) {
                        m[(self.local[*w], col)] = c.clone();
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    fn build_injective(&self, v: usize) -> Rep {
        let n = self.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| self.qb.words_between(v, j).len()).collect();
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Mat::zeros(dims[arr.source], dims[arr.target]);
                for (row, p) in self.qb.words_between(v, arr.source).into_iter().enumerate() {
                    for (w, c) in self.qb.right_arrow(p, a) {
                        m[(row, self.local[*w])] = c.clone();
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn path_matrix(&self, x: &Rep, p: &Path) -> Mat {
        let mut m = Mat::identity(x.dims[p.source]);
        for &a in &p.arrows {
            m = m.mul(&x.maps[a]);
        }
        m
    }

    /// `X_w: X_t -> X_s` for every standard word `w: s -> t`.
    pub fn word_matrices(&self, x: &Rep) -> Vec<Mat> {
        let mut out: Vec<Mat> = Vec::with_capacity(self.dim());
        for (w, word) in self.qb.words().iter().enumerate() {
            let m = match self.prefix[w] {
                None => Mat::identity(x.dims[word.source]),
                Some((pre, a)) => out[pre].mul(&x.maps[a]),
            };
            out.push(m);
        }
        out
    }

    /// Action of an element `s -> t` as a map `X_t -> X_s`.
    pub fn element_matrix(&self, x: &Rep, e: &Element) -> Mat {
        let mut m = Mat::zeros(x.dims[e.source], x.dims[e.target]);
        for (w, c) in &e.coeffs {
            m.add_scaled(c, &self.path_matrix(x, self.qb.word(*w)));
        }
        m
    }

    pub fn path_vector_matrix(&self, x: &Rep, v: &PathVector) -> Mat {
        let mut m = Mat::zeros(x.dims[v.source], x.dims[v.target]);
        for (p, c) in v.terms() {
            m.add_scaled(c, &self.path_matrix(x, p));
        }
        m
    }

    /// Checks shapes and that every relation acts as zero.
    pub fn check(&self, x: &Rep) -> Result<()> {
        let q = self.quiver();
        if x.dims.len() != q.num_vertices() || x.maps.len() != q.num_arrows() {
            return Err(Error::Validation(format!(
                "representation has {} spaces and {} maps, quiver has {} vertices and {} arrows",
                x.dims.len(),
                x.maps.len(),
                q.num_vertices(),
                q.num_arrows()
            )));
        }
        for (a, arr) in q.arrows().iter().enumerate() {
            let want = (x.dims[arr.source], x.dims[arr.target]);
            if x.maps[a].shape() != want {
                return Err(Error::Validation(format!(
                    "map of arrow `{}` has shape {:?}, expected {:?}",
                    arr.name,
                    x.maps[a].shape(),
                    want
                )));
            }
        }
        for r in &self.presentation().relations {
            if !self.path_vector_matrix(x, r).is_zero() {
                return Err(Error::Validation(format!("relation {} does not vanish", r.render(q))));
            }
        }
        Ok(())
    }

    pub fn check_morphism(&self, x: &Rep, y: &Rep, f: &Morphism) -> bool {
        f.maps.len() == x.dims.len()
            && f.maps.iter().enumerate().all(|(v, m)| m.shape() == (y.dims[v], x.dims[v]))
            && self.quiver().arrows().iter().enumerate().all(|(a, arr)| {
                f.maps[arr.source].mul(&x.maps[a]) == y.maps[a].mul(&f.maps[arr.target])
            })
    }

    pub fn element(&self, source: usize, target: usize, coeffs: Sparse) -> Element {
        Element { source, target, coeffs }
    }

    pub fn word_element(&self, w: usize) -> Element {
        let p = self.qb.word(w);
        Element { source: p.source, target: p.target, coeffs: vec![(w, Rat::one())] }
    }

    /// `P_s -> P_t` given by left multiplication with `x: s -> t`.
    pub fn projective_map(&self, x: &Element) -> Morphism {
        let maps = (0..self.num_vertices())
            .map(|j| {
                let src = self.qb.words_between(j, x.source);
                let mut m = Mat::zeros(self.projectives[x.target].dims[j], src.len());
                for (col, &p) in src.iter().enumerate() {
                    for (w, c) in &x.coeffs {
                        for (r, d) in self.qb.multiply(p, *w) {
                            m[(self.local[r], col)] += &(c * &d);
                        }
                    }
                }
                m
            })
            .collect();
        Morphism { maps }
    }

    /// `I_s -> I_t`, `φ ↦ φ(x · -)`, the image of [`Self::projective_map`] under the Nakayama functor.
    pub fn injective_map(&self, x: &Element) -> Morphism {
        let maps = (0..self.num_vertices())
            .map(|j| {
                let tgt = self.qb.words_between(x.target, j);
                let mut m = Mat::zeros(tgt.len(), self.injectives[x.source].dims[j]);
                for (row, &a) in tgt.iter().enumerate() {
                    for (w, c) in &x.coeffs {
                        for (r, d) in self.qb.multiply(*w, a) {
                            m[(row, self.local[r])] += &(c * &d);
                        }
                    }
                }
                m
            })
            .collect();
        Morphism { maps }
    }

    /// Inverse of [`Self::projective_map`]: the image of the generator `e_s`.
    pub fn element_of_projective_map(&self, f: &Morphism, s: usize, t: usize) -> Element {
        let col = f.maps[s].col(self.local[s]);
        let words = self.qb.words_between(s, t);
        Element { source: s, target: t, coeffs: words.into_iter().zip(col).filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Inverse of [`Self::injective_map`].
    pub fn element_of_injective_map(&self, f: &Morphism, s: usize, t: usize) -> Element {
        let row = f.maps[t].row(self.local[t]).to_vec();
        let words = self.qb.words_between(s, t);
        Element { source: s, target: t, coeffs: words.into_iter().zip(row).filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// The map `P_v -> X` sending `e_v` to `x ∈ X_v`.
    pub fn from_projective(&self, v: usize, x_vec: &[Rat], x: &Rep, mats: &[Mat]) -> Morphism {
        let maps = (0..self.num_vertices())
            .map(|j| {
                let words = self.qb.words_between(j, v);
                let mut m = Mat::zeros(x.dims[j], words.len());
                for (col, &p) in words.iter().enumerate() {
                    let img = mats[p].mul_vec(x_vec);
                    for (r, c) in img.into_iter().enumerate() {
                        m[(r, col)] = c;
                    }
                }
                m
            })
            .collect();
        Morphism { maps }
    }

    /// The map `X -> I_v` attached to a functional `ψ` on `X_v`.
    pub fn to_injective(&self, v: usize, psi: &[Rat], x: &Rep, mats: &[Mat]) -> Morphism {
        let psi_row = Mat::from_vec(1, psi.len(), psi.to_vec());
        let maps = (0..self.num_vertices())
            .map(|j| {
                let words = self.qb.words_between(v, j);
                let mut m = Mat::zeros(words.len(), x.dims[j]);
                for (row, &p) in words.iter().enumerate() {
                    m.set_block(row, 0, &psi_row.mul(&mats[p]));
                }
                m
            })
            .collect();
        Morphism { maps }
    }

    /// Which indecomposable projective `X` is isomorphic to, if any.
    pub fn projective_vertex(&self, x: &Rep) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| self.projectives[v].dims == x.dims && self.is_isomorphic(x, &self.projectives[v]))
    }

    pub fn injective_vertex(&self, x: &Rep) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| self.injectives[v].dims == x.dims && self.is_isomorphic(x, &self.injectives[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn auslander() -> Algebra {
        Algebra::new(&fixtures::example_auslander()).unwrap()
    }

    #[test]
    fn standard_modules_are_modules() {
        let alg = auslander();
        for v in 0..6 {
            alg.check(alg.projective(v)).unwrap();
            alg.check(alg.injective(v)).unwrap();
            alg.check(&alg.simple(v)).unwrap();
        }
    }

    #[test]
    fn standard_module_dimensions() {
        let alg = auslander();
        let p: Vec<usize> = (0..6).map(|v| alg.projective(v).dim()).collect();
        let i: Vec<usize> = (0..6).map(|v| alg.injective(v).dim()).collect();
        assert_eq!(p, vec![1, 2, 2, 5, 6, 10]);
        assert_eq!(i, vec![4, 9, 6, 4, 2, 1]);
    }

    #[test]
    fn element_maps_round_trip() {
        let alg = auslander();
        let qb = alg.basis();
        for w in 0..qb.dim() {
            let e = alg.word_element(w);
            let f = alg.projective_map(&e);
            assert!(alg.check_morphism(alg.projective(e.source), alg.projective(e.target), &f));
            assert_eq!(alg.element_of_projective_map(&f, e.source, e.target), e);
            let g = alg.injective_map(&e);
            assert!(alg.check_morphism(alg.injective(e.source), alg.injective(e.target), &g));
            assert_eq!(alg.element_of_injective_map(&g, e.source, e.target), e);
        }
    }

    #[test]
    fn bad_representation_is_rejected() {
        let alg = Algebra::new(&fixtures::three_cycle()).unwrap();
        let mut x = alg.rep_with_zero_maps(vec![1, 1, 1]);
        x.maps = vec![Mat::from_ints(&[&[1]]); 3];
        assert!(matches!(alg.check(&x), Err(Error::Validation(_))));
    }
}
