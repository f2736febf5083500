use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::column_space;
use super::{Algebra, Morphism, Rep};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat, Subspace};

/// An indecomposable direct summand with its structure maps.
#[derive(Debug, Clone)]
pub struct Summand {
    pub rep: Rep,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

fn power(f: &Morphism, n: u32) -> Morphism {
    Morphism { maps: f.maps.iter().map(|m| m.power(n)).collect() }
}

fn scalar(x: &Rep, c: &Rat) -> Morphism {
    Morphism { maps: x.dims.iter().map(|&d| Mat::scalar(d, c)).collect() }
}

/// Rational roots of a polynomial given by coefficients `c_0, c_1, ...`.
fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let lcm = coeffs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(&c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() < 2 {
        return roots;
    }
    if ints[0].is_zero() {
        roots.push(Rat::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints.last().unwrap().abs().to_u64()) else {
        return roots;
    };
    if a0 > 1_000_000 || an > 1_000_000 {
        return roots;
    }
    let divisors = |n: u64| (1..=n).filter(move |d| n % d == 0);
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let r = Rat::new(sign * p as i64, q as i64);
                let val = ints.iter().rev().fold(Rat::zero(), |acc, c| &(&acc * &r) + &Rat::from_bigint(c.clone()));
                if val.is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Minimal polynomial of `f` (coefficients from the constant term up, monic).
fn minimal_polynomial(x: &Rep, f: &Morphism) -> Vec<Rat> {
    let n = x.dim();
    let mut space = Subspace::new(x.dims.iter().map(|d| d * d).sum());
    let mut powers = vec![Morphism::identity(x)];
    space.insert(&powers[0].flatten());
    for _ in 0..=n {
        let next = f.after(powers.last().unwrap());
        if space.contains(&next.flatten()) {
            // solve next = Σ c_k f^k
            let cols: Vec<Vec<Rat>> = powers.iter().map(Morphism::flatten).collect();
            let mut a = Mat::zeros(cols[0].len(), cols.len());
            for (j, c) in cols.iter().enumerate() {
                for (i, v) in c.iter().enumerate() {
                    a[(i, j)] = v.clone();
                }
            }
            let sol = a.solve(&Mat::column(&next.flatten())).unwrap().unwrap();
            let mut poly: Vec<Rat> = (0..cols.len()).map(|k| -&sol[(k, 0)]).collect();
            poly.push(Rat::one());
            return poly;
        }
        space.insert(&next.flatten());
        powers.push(next);
    }
    unreachable!("minimal polynomial has degree at most the dimension")
}

impl Algebra {
    pub fn endomorphism_basis(&self, x: &Rep) -> Vec<Morphism> {
        self.hom_basis(x, x)
    }

    /// Dimension of `End(X) / rad End(X)`, via the trace form.
    pub fn semisimple_rank(&self, endo: &[Morphism]) -> usize {
        let k = endo.len();
        let totals: Vec<Mat> = endo.iter().map(Morphism::total).collect();
        let mut g = Mat::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = totals[i].mul(&totals[j]).trace();
                g[(i, j)] = t.clone();
                g[(j, i)] = t;
            }
        }
        g.rank()
    }

    fn splitter(&self, x: &Rep, endo: &[Morphism]) -> Option<Morphism> {
        let n = x.dims.iter().copied().max().unwrap_or(0) as u32;
        let useful = |f: &Morphism| !f.is_iso() && !power(f, n).is_zero();
        for f in endo {
            if useful(f) {
                return Some(f.clone());
            }
        }
        for f in endo {
            for lam in rational_roots(&minimal_polynomial(x, f)) {
                let g = f.sub(&scalar(x, &lam));
                if useful(&g) {
                    return Some(g);
                }
            }
        }
        for (i, f) in endo.iter().enumerate() {
            for g in &endo[i + 1..] {
                for h in [f.add(g), f.after(g), g.after(f)] {
                    if useful(&h) {
                        return Some(h);
                    }
                }
            }
        }
        None
    }

    /// Splits `X` into indecomposable summands. Fails with
    /// [`Error::FieldExtensionRequired`] if the endomorphism ring modulo its
    /// radical has no rational idempotents to split with.
    pub fn decompose(&self, x: &Rep) -> Result<Vec<Summand>> {
        if x.is_zero() {
            return Ok(Vec::new());
        }
        let endo = self.endomorphism_basis(x);
        if endo.len() == 1 {
            return Ok(vec![Summand { rep: x.clone(), inclusion: Morphism::identity(x), projection: Morphism::identity(x) }]);
        }
        let Some(f) = self.splitter(x, &endo) else {
            if self.semisimple_rank(&endo) == 1 {
                return Ok(vec![Summand {
                    rep: x.clone(),
                    inclusion: Morphism::identity(x),
                    projection: Morphism::identity(x),
                }]);
            }
            return Err(Error::FieldExtensionRequired(format!(
                "module with dimension vector {:?} does not split over the rationals",
                x.dims
            )));
        };
        let n = x.dims.iter().copied().max().unwrap_or(0) as u32;
        let fit = power(&f, n);
        let ker: Vec<Mat> = fit.maps.iter().map(Mat::kernel).collect();
        let img: Vec<Mat> = fit.maps.iter().map(column_space).collect();
        let mut proj_u = Vec::new();
        let mut proj_v = Vec::new();
        for (k, i) in ker.iter().zip(&img) {
            let t = Mat::hstack(&[k, i]);
            let inv = if t.rows() == 0 { t.clone() } else { t.inverse().expect("Fitting decomposition") };
            proj_u.push(inv.block(0, 0, k.cols(), t.cols()));
            proj_v.push(inv.block(k.cols(), 0, i.cols(), t.cols()));
        }
        let mut out = Vec::new();
        for (basis, proj) in [(ker, proj_u), (img, proj_v)] {
            let (sub, incl) = self.submodule(x, basis);
            let proj = Morphism { maps: proj };
            for s in self.decompose(&sub)? {
                out.push(Summand {
                    inclusion: incl.after(&s.inclusion),
                    projection: s.projection.after(&proj),
                    rep: s.rep,
                });
            }
        }
        Ok(out)
    }

    pub fn is_indecomposable(&self, x: &Rep) -> Result<bool> {
        Ok(!x.is_zero() && self.decompose(x)?.len() == 1)
    }

    /// An isomorphism `X -> Y`, found as a random combination of a basis of
    /// `Hom(X, Y)`. Isomorphisms form a Zariski-open subset, so a miss after
    /// several draws from a large range means none exists except with negligible probability;
    /// any returned map is checked exactly.
    pub fn find_isomorphism(&self, x: &Rep, y: &Rep) -> Option<Morphism> {
        if x.dims != y.dims {
            return None;
        }
        if x.is_zero() {
            return Some(Morphism::identity(x));
        }
        let basis = self.hom_basis(x, y);
        if basis.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..4 {
            let coeffs: Vec<Rat> = basis.iter().map(|_| Rat::from_int(rng.gen_range(-1_000_000..=1_000_000))).collect();
            let f = Morphism::linear_combination(&coeffs, &basis, x, y);
            if f.is_iso() {
                return Some(f);
            }
        }
        None
    }

    pub fn is_isomorphic(&self, x: &Rep, y: &Rep) -> bool {
        self.find_isomorphism(x, y).is_some()
    }

    /// Number of summands of `X` isomorphic to the indecomposable `Z`:
    /// the rank of the composition pairing `Hom(Z, X) × Hom(X, Z) -> End(Z) / rad`.
    pub fn multiplicity(&self, z: &Rep, x: &Rep) -> usize {
        let into = self.hom_basis(z, x);
        let out = self.hom_basis(x, z);
        if into.is_empty() || out.is_empty() {
            return 0;
        }
        // End(Z) is local: the pairing modulo the radical is the matrix of
        // scalars `g∘f ≡ c·1`, read off via traces.
        let d = Rat::from_int(z.dim() as i64);
        let mut m = Mat::zeros(out.len(), into.len());
        for (i, g) in out.iter().enumerate() {
            for (j, f) in into.iter().enumerate() {
                m[(i, j)] = &g.after(f).total().trace() / &d;
            }
        }
        m.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::Presentation;

    #[test]
    fn roots_of_small_polynomials() {
        // (x - 1)(2x + 3) = 2x^2 + x - 3
        let r = rational_roots(&[Rat::from_int(-3), Rat::from_int(1), Rat::from_int(2)]);
        assert!(r.contains(&Rat::one()) && r.contains(&Rat::new(-3, 2)) && r.len() == 2);
        // x^2 + 1 has none
        assert!(rational_roots(&[Rat::one(), Rat::zero(), Rat::one()]).is_empty());
    }

    #[test]
    fn projective_sum_splits() {
        let alg = Algebra::new(&fixtures::example_auslander()).unwrap();
        let sum = alg.direct_sum(&[alg.projective(3), alg.projective(1), alg.projective(3)]);
        let parts = alg.decompose(&sum.rep).unwrap();
        assert_eq!(parts.len(), 3);
        let mut dims: Vec<usize> = parts.iter().map(|s| s.rep.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 5, 5]);
        for s in &parts {
            assert!(alg.check_morphism(&s.rep, &sum.rep, &s.inclusion));
            assert!(s.projection.after(&s.inclusion).is_iso());
        }
        assert_eq!(alg.multiplicity(alg.projective(3), &sum.rep), 2);
        assert_eq!(alg.multiplicity(alg.projective(1), &sum.rep), 1);
        assert_eq!(alg.multiplicity(alg.projective(0), &sum.rep), 0);
    }

    #[test]
    fn isomorphism_detection() {
        let alg = Algebra::new(&Presentation::path_algebra(fixtures::a2())).unwrap();
        let p2 = alg.projective(1).clone();
        let i1 = alg.injective(0).clone();
        assert!(alg.is_isomorphic(&p2, &i1));
        let semi = alg.direct_sum(&[&alg.simple(0), &alg.simple(1)]).rep;
        assert!(!alg.is_isomorphic(&p2, &semi));
        assert_eq!(alg.decompose(&semi).unwrap().len(), 2);
        assert!(alg.is_indecomposable(&p2).unwrap());
    }
}
