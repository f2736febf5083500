use super::{Algebra, DirectSum, Morphism, Rep};
use crate::linalg::{Mat, Rat, Subspace};

/// Basis of the column space of `m`, as the columns of a matrix.
pub(crate) fn column_space(m: &Mat) -> Mat {
    let (_, piv) = m.rref();
    m.select_cols(&piv)
}

/// Completes the columns of `b` (independent) to a basis with standard vectors;
/// returns the added columns.
pub(crate) fn complement(b: &Mat) -> Mat {
    let n = b.rows();
    let mut s = Subspace::new(n);
    for c in 0..b.cols() {
        s.insert(&b.col(c));
    }
    let mut extra = Vec::new();
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        if s.insert(&e) {
            extra.push(i);
        }
    }
    Mat::identity(n).select_cols(&extra)
}

impl Algebra {
    /// Basis of `Hom(X, Y)`.
    pub fn hom_basis(&self, x: &Rep, y: &Rep) -> Vec<Morphism> {
        let n = self.num_vertices();
        let mut off = Vec::with_capacity(n);
        let mut unknowns = 0;
        for v in 0..n {
            off.push(unknowns);
            unknowns += x.dims[v] * y.dims[v];
        }
        if unknowns == 0 {
            return Vec::new();
        }
        let arrows = self.quiver().arrows();
        let rows: usize = arrows.iter().map(|a| y.dims[a.source] * x.dims[a.target]).sum();
        let mut sys = Mat::zeros(rows, unknowns);
        let mut r0 = 0;
        for (a, arr) in arrows.iter().enumerate() {
            let (i, j) = (arr.source, arr.target);
            let (xa, ya) = (&x.maps[a], &y.maps[a]);
            // f_i X_a - Y_a f_j = 0, entry (r, c) with r in Y_i, c in X_j
            for r in 0..y.dims[i] {
                for c in 0..x.dims[j] {
                    let row = r0 + r * x.dims[j] + c;
                    for k in 0..x.dims[i] {
                        let v = &xa[(k, c)];
                        if !v.is_zero() {
                            sys[(row, off[i] + r * x.dims[i] + k)] += v;
                        }
                    }
                    for k in 0..y.dims[j] {
                        let v = &ya[(r, k)];
                        if !v.is_zero() {
                            sys[(row, off[j] + k * x.dims[j] + c)] -= v;
                        }
                    }
                }
            }
            r0 += y.dims[i] * x.dims[j];
        }
        let ker = sys.kernel();
        (0..ker.cols())
            .map(|k| Morphism {
                maps: (0..n)
                    .map(|v| {
                        let data = (0..x.dims[v] * y.dims[v]).map(|t| ker[(off[v] + t, k)].clone()).collect();
                        Mat::from_vec(y.dims[v], x.dims[v], data)
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn hom_dim(&self, x: &Rep, y: &Rep) -> usize {
        self.hom_basis(x, y).len()
    }

    /// Submodule spanned by the columns of `basis[v]` in each `X_v` (assumed
    /// independent and closed under the arrow maps), with its inclusion.
    pub fn submodule(&self, x: &Rep, basis: Vec<Mat>) -> (Rep, Morphism) {
        let dims: Vec<usize> = basis.iter().map(Mat::cols).collect();
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let rhs = x.maps[a].mul(&basis[arr.target]);
                basis[arr.source].solve(&rhs).expect("shapes agree").expect("subspace is a submodule")
            })
            .collect();
        (Rep { dims, maps }, Morphism { maps: basis })
    }

    /// Quotient of `Y` by a submodule with column bases `sub[v]`, with the projection.
    pub fn quotient(&self, y: &Rep, sub: &[Mat]) -> (Rep, Morphism) {
        let (q, proj, _) = self.quotient_split(y, sub);
        (q, proj)
    }

    /// Like [`Algebra::quotient`], also returning a linear section of the
    /// projection at each vertex (not a module map in general).
    pub fn quotient_split(&self, y: &Rep, sub: &[Mat]) -> (Rep, Morphism, Vec<Mat>) {
        let mut proj = Vec::new();
        let mut sect = Vec::new();
        for (v, b) in sub.iter().enumerate() {
            let c = complement(b);
            let t = Mat::hstack(&[b, &c]);
            let inv = if y.dims[v] == 0 { t.clone() } else { t.inverse().expect("basis") };
            proj.push(inv.block(b.cols(), 0, c.cols(), y.dims[v]));
            sect.push(c);
        }
        let dims: Vec<usize> = sect.iter().map(Mat::cols).collect();
        let maps = self
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| proj[arr.source].mul(&y.maps[a]).mul(&sect[arr.target]))
            .collect();
        (Rep { dims, maps }, Morphism { maps: proj }, sect)
    }

    pub fn kernel(&self, x: &Rep, f: &Morphism) -> (Rep, Morphism) {
        let basis = f.maps.iter().map(Mat::kernel).collect();
        self.submodule(x, basis)
    }

    pub fn image(&self, y: &Rep, f: &Morphism) -> (Rep, Morphism) {
        let basis = f.maps.iter().map(column_space).collect();
        self.submodule(y, basis)
    }

    pub fn cokernel(&self, y: &Rep, f: &Morphism) -> (Rep, Morphism) {
        let basis: Vec<Mat> = f.maps.iter().map(column_space).collect();
        self.quotient(y, &basis)
    }

    /// Factors `f: Z -> X` through a monomorphism `i: W -> X`, if possible.
    pub fn factor_through_mono(&self, f: &Morphism, i: &Morphism) -> Option<Morphism> {
        let maps = f.maps.iter().zip(&i.maps).map(|(fv, iv)| iv.solve(fv).ok().flatten());
        Some(Morphism { maps: maps.collect::<Option<Vec<_>>>()? })
    }

    /// Factors `f: X -> Z` through an epimorphism `p: X -> W` with `f` vanishing on its kernel.
    pub fn factor_through_epi(&self, f: &Morphism, p: &Morphism) -> Option<Morphism> {
        let maps = f.maps.iter().zip(&p.maps).map(|(fv, pv)| {
            let g = pv.transpose().solve(&fv.transpose()).ok().flatten()?;
            Some(g.transpose())
        });
        Some(Morphism { maps: maps.collect::<Option<Vec<_>>>()? })
    }

    pub fn direct_sum(&self, parts: &[&Rep]) -> DirectSum {
        DirectSum::new(parts, self.num_arrows(), self.num_vertices())
    }

    pub fn is_injective_map(f: &Morphism) -> bool {
        f.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective_map(f: &Morphism) -> bool {
        f.maps.iter().all(|m| m.rank() == m.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hom_between_projectives_matches_words() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        let c = alg.basis().cartan_matrix();
        for u in 0..6 {
            for v in 0..6 {
                let h = alg.hom_basis(alg.projective(u), alg.projective(v));
                assert_eq!(Rat::from_int(h.len() as i64), c[(u, v)]);
                for f in &h {
                    assert!(alg.check_morphism(alg.projective(u), alg.projective(v), f));
                }
            }
        }
    }

    #[test]
    fn kernel_and_cokernel_of_arrow_map() {
        let alg = Algebra::new(&crate::quiver::Presentation::path_algebra(fixtures::a3())).unwrap();
        // P_1 -> P_2 from the arrow a: 1 -> 2 is injective with cokernel S_2.
        let a = alg.word_element(alg.basis().index_of(&crate::quiver::Path::arrow(alg.quiver(), 0)).unwrap());
        let f = alg.projective_map(&a);
        let (k, _) = alg.kernel(alg.projective(0), &f);
        assert!(k.is_zero());
        let (c, p) = alg.cokernel(alg.projective(1), &f);
        assert_eq!(c.dims, vec![0, 1, 0]);
        alg.check(&c).unwrap();
        assert!(alg.check_morphism(alg.projective(1), &c, &p));
        let (im, i) = alg.image(alg.projective(1), &f);
        assert_eq!(im.dims, alg.projective(0).dims);
        assert!(alg.check_morphism(&im, alg.projective(1), &i));
    }
}
