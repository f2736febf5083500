use super::{Algebra, Morphism, Rep};

/// A bounded complex `C_0 -> C_1 -> ...` with `differentials[k]: C_k -> C_{k+1}`.
#[derive(Debug, Clone)]
pub struct RepComplex {
    pub objects: Vec<Rep>,
    pub differentials: Vec<Morphism>,
}

impl RepComplex {
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].after(&w[0]).is_zero())
    }
}

impl Algebra {
    /// `H^k = ker d_k / im d_{k-1}`.
    pub fn homology(&self, c: &RepComplex, k: usize) -> Rep {
        let obj = &c.objects[k];
        let (ker, incl) = match c.differentials.get(k) {
            Some(d) => self.kernel(obj, d),
            None => (obj.clone(), Morphism::identity(obj)),
        };
        match k.checked_sub(1).and_then(|j| c.differentials.get(j)) {
            None => ker,
            Some(d) => {
                let g = self.factor_through_mono(d, &incl).expect("image lies in the kernel");
                self.cokernel(&ker, &g).0
            }
        }
    }

    pub fn is_acyclic_except(&self, c: &RepComplex, k: usize) -> bool {
        (0..c.objects.len()).filter(|&j| j != k).all(|j| self.homology(c, j).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn resolution_complex_has_homology_only_at_the_end() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        let s = alg.simple(5);
        let res = alg.projective_resolution(&s, 4);
        // P_n -> ... -> P_0 written cohomologically
        let n = res.modules.len();
        let objects: Vec<Rep> = res.modules.iter().rev().map(|m| m.rep.clone()).collect();
        let differentials: Vec<Morphism> = res.differentials.iter().rev().cloned().collect();
        let c = RepComplex { objects, differentials };
        assert!(c.is_complex());
        assert!(alg.is_acyclic_except(&c, n - 1));
        assert!(alg.is_isomorphic(&alg.homology(&c, n - 1), &s));
    }
}
