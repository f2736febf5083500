use super::{Algebra, DirectSum, Element, Morphism, Rep};

impl Algebra {
    pub(crate) fn assemble(
        &self,
        source: &DirectSum,
        target: &DirectSum,
        elems: &[Vec<Element>],
        make: impl Fn(&Element) -> Morphism,
    ) -> Morphism {
        let mut out = Morphism::zero(&source.rep, &target.rep);
        for (i, row) in elems.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    out = out.add(&target.inclusion(i).after(&make(e)).after(&source.projection(j)));
                }
            }
        }
        out
    }

    /// `τX = D Tr X`, computed as the kernel of `ν(p_1)` for a minimal
    /// projective presentation `P_1 -> P_0 -> X`. Projective summands of `X`
    /// contribute nothing.
    pub fn tau(&self, x: &Rep) -> Rep {
        let res = self.projective_resolution(x, 1);
        let Some(d) = res.differentials.first() else {
            return self.zero_rep();
        };
        let (p1, p0) = (&res.modules[1], &res.modules[0]);
        let elems = self.projective_matrix(d, p1, &res.terms[1], p0, &res.terms[0]);
        let i1 = self.injective_sum(&res.terms[1]);
        let i0 = self.injective_sum(&res.terms[0]);
        let nu = self.assemble(&i1, &i0, &elems, |e| self.injective_map(e));
        self.kernel(&i1.rep, &nu).0
    }

    /// `τ⁻X = Tr D X`, the cokernel of `ν⁻(i^0)` for a minimal injective
    /// copresentation `X -> I^0 -> I^1`.
    pub fn tau_inverse(&self, x: &Rep) -> Rep {
        let res = self.injective_resolution(x, 1);
        let Some(d) = res.differentials.first() else {
            return self.zero_rep();
        };
        let (i0, i1) = (&res.modules[0], &res.modules[1]);
        let elems = self.injective_matrix(d, i0, &res.terms[0], i1, &res.terms[1]);
        let p0 = self.projective_sum(&res.terms[0]);
        let p1 = self.projective_sum(&res.terms[1]);
        let nu = self.assemble(&p0, &p1, &elems, |e| self.projective_map(e));
        self.cokernel(&p1.rep, &nu).0
    }

    pub fn projective_sum(&self, verts: &[usize]) -> DirectSum {
        self.direct_sum(&verts.iter().map(|&v| self.projective(v)).collect::<Vec<_>>())
    }

    pub fn injective_sum(&self, verts: &[usize]) -> DirectSum {
        self.direct_sum(&verts.iter().map(|&v| self.injective(v)).collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::Presentation;

    #[test]
    fn tau_on_a2() {
        let alg = Algebra::new(&Presentation::path_algebra(fixtures::a2())).unwrap();
        // With right modules over 1 -> 2, P_1 = S_1 is simple projective and τ(S_2) = S_1.
        assert!(alg.is_isomorphic(&alg.tau(&alg.simple(1)), &alg.simple(0)));
        assert!(alg.tau(&alg.simple(0)).is_zero());
        assert!(alg.is_isomorphic(&alg.tau_inverse(&alg.simple(0)), &alg.simple(1)));
        assert!(alg.tau_inverse(&alg.simple(1)).is_zero());
    }

    #[test]
    fn tau_and_inverse_on_a3() {
        let alg = Algebra::new(&Presentation::path_algebra(fixtures::a3())).unwrap();
        for v in 0..3 {
            let i = alg.injective(v).clone();
            let t = alg.tau(&i);
            if !t.is_zero() {
                assert!(alg.is_isomorphic(&alg.tau_inverse(&t), &i));
            }
        }
        let dims: usize = (0..3).map(|v| alg.tau(alg.injective(v)).dim()).sum();
        // τ I_1, τ I_2, τ I_3 for the A3 path algebra: two nonzero modules.
        assert!(dims > 0);
    }
}
