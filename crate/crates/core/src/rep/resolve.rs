use super::hom::complement;
use super::{Algebra, DirectSum, Element, Morphism, Rep};
use crate::linalg::{Mat, Subspace};

/// Minimal projective resolution `... -> P_1 -> P_0 -> X -> 0`.
#[derive(Debug, Clone)]
pub struct ProjectiveResolution {
    /// Vertices of the indecomposable summands of each `P_k`.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<DirectSum>,
    pub augmentation: Morphism,
    /// `differentials[k]: P_{k+1} -> P_k`.
    pub differentials: Vec<Morphism>,
    /// Whether the resolution reached zero within the requested length.
    pub complete: bool,
}

impl ProjectiveResolution {
    /// Projective dimension, if the resolution is complete.
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }
}

/// Minimal injective coresolution `0 -> X -> I^0 -> I^1 -> ...`.
#[derive(Debug, Clone)]
pub struct InjectiveResolution {
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<DirectSum>,
    pub coaugmentation: Morphism,
    /// `differentials[k]: I^k -> I^{k+1}`.
    pub differentials: Vec<Morphism>,
    pub complete: bool,
}

impl InjectiveResolution {
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }
}

impl Algebra {
    /// Column bases of `rad X = X · rad A`.
    pub fn radical_basis(&self, x: &Rep) -> Vec<Mat> {
        (0..self.num_vertices())
            .map(|v| {
                let mut s = Subspace::new(x.dims[v]);
                for a in self.quiver().arrows_from(v) {
                    let m = &x.maps[a];
                    for c in 0..m.cols() {
                        s.insert(&m.col(c));
                    }
                }
                basis_matrix(x.dims[v], s.basis())
            })
            .collect()
    }

    pub fn radical(&self, x: &Rep) -> (Rep, Morphism) {
        self.submodule(x, self.radical_basis(x))
    }

    pub fn top(&self, x: &Rep) -> (Rep, Morphism) {
        self.quotient(x, &self.radical_basis(x))
    }

    /// Column bases of the socle: vectors killed by every arrow.
    pub fn socle_basis(&self, x: &Rep) -> Vec<Mat> {
        (0..self.num_vertices())
            .map(|v| {
                let outgoing: Vec<&Mat> = self.quiver().arrows_into(v).map(|a| &x.maps[a]).collect();
                if outgoing.is_empty() {
                    Mat::identity(x.dims[v])
                } else {
                    Mat::vstack(&outgoing).kernel()
                }
            })
            .collect()
    }

    pub fn socle(&self, x: &Rep) -> (Rep, Morphism) {
        self.submodule(x, self.socle_basis(x))
    }

    pub fn top_dims(&self, x: &Rep) -> Vec<usize> {
        self.radical_basis(x).iter().zip(&x.dims).map(|(b, d)| d - b.cols()).collect()
    }

    pub fn socle_dims(&self, x: &Rep) -> Vec<usize> {
        self.socle_basis(x).iter().map(Mat::cols).collect()
    }

    /// Projective cover `⊕ P_v -> X`.
    pub fn projective_cover(&self, x: &Rep) -> (DirectSum, Vec<usize>, Morphism) {
        let mats = self.word_matrices(x);
        let rad = self.radical_basis(x);
        let mut verts = Vec::new();
        let mut comps = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            let c = complement(r);
            for k in 0..c.cols() {
                verts.push(v);
                comps.push(self.from_projective(v, &c.col(k), x, &mats));
            }
        }
        let parts: Vec<&Rep> = verts.iter().map(|&v| self.projective(v)).collect();
        let sum = self.direct_sum(&parts);
        let map = sum.copair(&comps, &x.dims);
        (sum, verts, map)
    }

    /// Injective envelope `X -> ⊕ I_v`.
    pub fn injective_envelope(&self, x: &Rep) -> (DirectSum, Vec<usize>, Morphism) {
        let mats = self.word_matrices(x);
        let soc = self.socle_basis(x);
        let mut verts = Vec::new();
        let mut comps = Vec::new();
        for (v, s) in soc.iter().enumerate() {
            if s.cols() == 0 {
                continue;
            }
            let t = Mat::hstack(&[s, &complement(s)]);
            let inv = t.inverse().expect("completed basis");
            for k in 0..s.cols() {
                verts.push(v);
                comps.push(self.to_injective(v, inv.row(k), x, &mats));
            }
        }
        let parts: Vec<&Rep> = verts.iter().map(|&v| self.injective(v)).collect();
        let sum = self.direct_sum(&parts);
        let map = sum.pair(&comps, &x.dims);
        (sum, verts, map)
    }

    /// Minimal projective resolution with at most `max_len + 1` terms.
    pub fn projective_resolution(&self, x: &Rep, max_len: usize) -> ProjectiveResolution {
        let (p0, v0, eps) = self.projective_cover(x);
        let mut res = ProjectiveResolution {
            terms: vec![v0],
            modules: vec![p0.clone()],
            augmentation: eps.clone(),
            differentials: Vec::new(),
            complete: false,
        };
        let (mut k, mut incl) = self.kernel(&p0.rep, &eps);
        loop {
            if k.is_zero() {
                res.complete = true;
                return res;
            }
            if res.terms.len() > max_len {
                return res;
            }
            let (p, verts, cover) = self.projective_cover(&k);
            res.differentials.push(incl.after(&cover));
            let (k2, i2) = self.kernel(&p.rep, &cover);
            res.terms.push(verts);
            res.modules.push(p);
            k = k2;
            incl = i2;
        }
    }

    /// Minimal injective coresolution with at most `max_len + 1` terms.
    pub fn injective_resolution(&self, x: &Rep, max_len: usize) -> InjectiveResolution {
        let (i0, v0, eta) = self.injective_envelope(x);
        let mut res = InjectiveResolution {
            terms: vec![v0],
            modules: vec![i0.clone()],
            coaugmentation: eta.clone(),
            differentials: Vec::new(),
            complete: false,
        };
        let (mut c, mut proj) = self.cokernel(&i0.rep, &eta);
        loop {
            if c.is_zero() {
                res.complete = true;
                return res;
            }
            if res.terms.len() > max_len {
                return res;
            }
            let (i, verts, env) = self.injective_envelope(&c);
            res.differentials.push(env.after(&proj));
            let (c2, p2) = self.cokernel(&i.rep, &env);
            res.terms.push(verts);
            res.modules.push(i);
            c = c2;
            proj = p2;
        }
    }

    /// Matrix of elements describing a map between sums of indecomposable
    /// projectives: entry `(i, j)` is the element for `P_{source[j]} -> P_{target[i]}`.
    pub fn projective_matrix(
        &self,
        f: &Morphism,
        source: &DirectSum,
        source_verts: &[usize],
        target: &DirectSum,
        target_verts: &[usize],
    ) -> Vec<Vec<Element>> {
        target_verts
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                source_verts
                    .iter()
                    .enumerate()
                    .map(|(j, &w)| self.element_of_projective_map(&DirectSum::block(f, source, j, target, i), w, u))
                    .collect()
            })
            .collect()
    }

    pub fn injective_matrix(
        &self,
        f: &Morphism,
        source: &DirectSum,
        source_verts: &[usize],
        target: &DirectSum,
        target_verts: &[usize],
    ) -> Vec<Vec<Element>> {
        target_verts
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                source_verts
                    .iter()
                    .enumerate()
                    .map(|(j, &w)| self.element_of_injective_map(&DirectSum::block(f, source, j, target, i), w, u))
                    .collect()
            })
            .collect()
    }

    /// Dimensions of `Ext^k(X, Y)` for `k = 0..=max_k`.
    pub fn ext_dims(&self, x: &Rep, y: &Rep, max_k: usize) -> Vec<usize> {
        let res = self.projective_resolution(x, max_k + 1);
        // C^k = Hom(P_k, Y) = ⊕ Y_u over the summands P_u of P_k
        let cdim = |k: usize| -> usize { res.terms.get(k).map_or(0, |t| t.iter().map(|&u| y.dims[u]).sum()) };
        let delta_rank = |k: usize| -> usize {
            // δ^k: C^k -> C^{k+1}
            let Some(d) = res.differentials.get(k) else { return 0 };
            let (src, tgt) = (&res.terms[k + 1], &res.terms[k]);
            let elems = self.projective_matrix(d, &res.modules[k + 1], src, &res.modules[k], tgt);
            let mut m = Mat::zeros(cdim(k + 1), cdim(k));
            let mut r0 = 0;
            for (j, &w) in src.iter().enumerate() {
                let mut c0 = 0;
                for (i, &u) in tgt.iter().enumerate() {
                    m.set_block(r0, c0, &self.element_matrix(y, &elems[i][j]));
                    c0 += y.dims[u];
                }
                r0 += y.dims[w];
            }
            m.rank()
        };
        (0..=max_k)
            .map(|k| {
                let before = if k == 0 { 0 } else { delta_rank(k - 1) };
                cdim(k) - delta_rank(k) - before
            })
            .collect()
    }

    pub fn ext_dim(&self, k: usize, x: &Rep, y: &Rep) -> usize {
        self.ext_dims(x, y, k)[k]
    }

    pub fn projective_dimension(&self, x: &Rep, cap: usize) -> Option<usize> {
        self.projective_resolution(x, cap).length()
    }

    pub fn injective_dimension(&self, x: &Rep, cap: usize) -> Option<usize> {
        self.injective_resolution(x, cap).length()
    }

    /// Maximum projective dimension of the simples; `None` if some exceeds `cap`.
    pub fn global_dimension(&self, cap: usize) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.num_vertices() {
            best = best.max(self.projective_dimension(&self.simple(v), cap)?);
        }
        Some(best)
    }

    pub fn is_projective(&self, x: &Rep) -> bool {
        let (p, _, _) = self.projective_cover(x);
        p.rep.dims == x.dims
    }

    pub fn is_injective(&self, x: &Rep) -> bool {
        let (i, _, _) = self.injective_envelope(x);
        i.rep.dims == x.dims
    }
}

fn basis_matrix(n: usize, vs: &[Vec<crate::linalg::Rat>]) -> Mat {
    let mut m = Mat::zeros(n, vs.len());
    for (j, v) in vs.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::Presentation;

    #[test]
    fn auslander_example_has_global_dimension_two() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        assert_eq!(alg.global_dimension(10), Some(2));
    }

    #[test]
    fn three_cycle_has_global_dimension_two() {
        let alg = Algebra::new(&fixtures::three_cycle()).unwrap();
        assert_eq!(alg.global_dimension(10), Some(2));
    }

    #[test]
    fn covers_and_envelopes_of_standard_modules() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        for v in 0..6 {
            assert!(alg.is_projective(alg.projective(v)));
            assert!(alg.is_injective(alg.injective(v)));
            assert_eq!(alg.top_dims(alg.projective(v)), alg.simple(v).dims);
            assert_eq!(alg.socle_dims(alg.injective(v)), alg.simple(v).dims);
            let (_, _, eps) = alg.projective_cover(&alg.simple(v));
            assert!(Algebra::is_surjective_map(&eps));
            let (_, _, eta) = alg.injective_envelope(&alg.simple(v));
            assert!(Algebra::is_injective_map(&eta));
        }
    }

    #[test]
    fn ext_on_a2() {
        // Right modules: the nonsplit extension of simples is P_2 with top S_2.
        let alg = Algebra::new(&Presentation::path_algebra(fixtures::a2())).unwrap();
        let (s1, s2) = (alg.simple(0), alg.simple(1));
        assert_eq!(alg.ext_dims(&s2, &s1, 2), vec![0, 1, 0]);
        assert_eq!(alg.ext_dims(&s1, &s2, 2), vec![0, 0, 0]);
        assert_eq!(alg.ext_dims(&s1, &s1, 1), vec![1, 0]);
    }

    #[test]
    fn resolution_of_simple_is_exact() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        for v in 0..6 {
            let s = alg.simple(v);
            let res = alg.projective_resolution(&s, 5);
            assert!(res.complete);
            for w in res.differentials.windows(2) {
                assert!(w[0].after(&w[1]).is_zero());
            }
            if let Some(d0) = res.differentials.first() {
                assert!(res.augmentation.after(d0).is_zero());
            }
            let inj = alg.injective_resolution(&s, 5);
            assert!(inj.complete);
            assert!(inj.length().unwrap() <= 2);
        }
    }
}
