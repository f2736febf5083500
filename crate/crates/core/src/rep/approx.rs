use super::{Algebra, DirectSum, Morphism, Rep};
use crate::linalg::Subspace;

/// A minimal right `add(T)`-approximation `E -> X`.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub source: DirectSum,
    /// Index into the class of each summand of `E`.
    pub parts: Vec<usize>,
    pub map: Morphism,
}

impl Algebra {
    /// Minimal right approximation of `X` by sums of the (indecomposable,
    /// pairwise non-isomorphic) modules in `class`.
    ///
    /// Starts from `⊕_k T_k ⊗ Hom(T_k, X)` and drops summands while every
    /// `Hom(T_j, -)` stays surjective; with local endomorphism rings the result
    /// has no summand that can be dropped, i.e. it is right minimal.
    pub fn minimal_right_approximation(&self, class: &[Rep], x: &Rep) -> Approximation {
        self.minimal_right_approximation_ordered(class, x, false)
    }

    /// As [`Self::minimal_right_approximation`]; summands are tried for deletion
    /// by class index then copy index, or in the opposite order if `reverse`.
    pub fn minimal_right_approximation_ordered(&self, class: &[Rep], x: &Rep, reverse: bool) -> Approximation {
        let homs: Vec<Vec<Morphism>> = class.iter().map(|t| self.hom_basis(t, x)).collect();
        let between: Vec<Vec<Vec<Morphism>>> =
            class.iter().map(|tj| class.iter().map(|tk| self.hom_basis(tj, tk)).collect()).collect();
        let summands: Vec<(usize, &Morphism)> =
            homs.iter().enumerate().flat_map(|(k, hs)| hs.iter().map(move |h| (k, h))).collect();
        // contributions[s][j]: the maps T_j -> X factoring through summand s
        let contributions: Vec<Vec<Vec<Vec<crate::linalg::Rat>>>> = summands
            .iter()
            .map(|&(k, h)| (0..class.len()).map(|j| between[j][k].iter().map(|u| h.after(u).flatten()).collect()).collect())
            .collect();
        let enough = |keep: &[bool]| {
            (0..class.len()).all(|j| {
                let ambient: usize = class[j].dims.iter().zip(&x.dims).map(|(a, b)| a * b).sum();
                let mut s = Subspace::new(ambient);
                for (idx, c) in contributions.iter().enumerate() {
                    if keep[idx] {
                        for v in &c[j] {
                            s.insert(v);
                        }
                    }
                }
                s.dim() == homs[j].len()
            })
        };
        let mut keep = vec![true; summands.len()];
        let order: Vec<usize> =
            if reverse { (0..summands.len()).rev().collect() } else { (0..summands.len()).collect() };
        for idx in order {
            keep[idx] = false;
            if !enough(&keep) {
                keep[idx] = true;
            }
        }
        let kept: Vec<(usize, &Morphism)> = summands.iter().zip(&keep).filter(|(_, &k)| k).map(|(s, _)| *s).collect();
        let parts: Vec<usize> = kept.iter().map(|(k, _)| *k).collect();
        let reps: Vec<&Rep> = parts.iter().map(|&k| &class[k]).collect();
        let source = self.direct_sum(&reps);
        let comps: Vec<Morphism> = kept.iter().map(|(_, h)| (*h).clone()).collect();
        let map = source.copair(&comps, &x.dims);
        Approximation { source, parts, map }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::Presentation;

    #[test]
    fn projective_class_gives_projective_cover() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        let class: Vec<Rep> = (0..6).map(|v| alg.projective(v).clone()).collect();
        for v in 0..6 {
            let i = alg.injective(v).clone();
            let appr = alg.minimal_right_approximation(&class, &i);
            let (cover, verts, _) = alg.projective_cover(&i);
            let mut got = appr.parts.clone();
            got.sort();
            assert_eq!(got, verts);
            assert_eq!(appr.source.rep.dims, cover.rep.dims);
            assert!(Algebra::is_surjective_map(&appr.map));
        }
    }

    #[test]
    fn approximation_of_simple_by_other_simple_is_zero() {
        let alg = Algebra::new(&Presentation::path_algebra(fixtures::a2())).unwrap();
        let appr = alg.minimal_right_approximation(&[alg.simple(0)], &alg.simple(1));
        assert!(appr.source.is_empty());
    }
}
