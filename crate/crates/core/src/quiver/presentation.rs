use super::{Path, PathVector, Quiver};
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// An algebra `kQ/I` given by a quiver and generators of `I`, optionally
/// with a nonnegative grading on arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<PathVector>,
    pub degrees: Option<Vec<u32>>,
}

impl Presentation {
    /// Checks that every relation is a nonzero parallel combination of paths of
    /// length at least two.
    pub fn new(quiver: Quiver, relations: Vec<PathVector>) -> Result<Presentation> {
        for r in &relations {
            if r.is_zero() {
                return Err(Error::Validation("zero relation".into()));
            }
            if r.min_len() < 2 {
                return Err(Error::Validation(format!(
                    "relation `{}` has a term of length < 2",
                    r.render(&quiver)
                )));
            }
        }
        Ok(Presentation { quiver, relations, degrees: None })
    }

    pub fn path_algebra(quiver: Quiver) -> Presentation {
        Presentation { quiver, relations: Vec::new(), degrees: None }
    }

    /// Attaches an arrow grading; every relation must be homogeneous.
    pub fn with_degrees(mut self, degrees: Vec<u32>) -> Result<Presentation> {
        if degrees.len() != self.quiver.num_arrows() {
            return Err(Error::Input("one degree per arrow required".into()));
        }
        for r in &self.relations {
            if r.homogeneous_degree(&degrees).is_none() {
                return Err(Error::Contract(format!(
                    "relation `{}` is not homogeneous",
                    r.render(&self.quiver)
                )));
            }
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn render_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(&self.quiver)).collect()
    }

    /// Reversed arrows and reversed relation paths.
    pub fn opposite(&self) -> Presentation {
        Presentation {
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(PathVector::reversed).collect(),
            degrees: self.degrees.clone(),
        }
    }

    /// Preprojective presentation of an acyclic quiver: the double quiver with
    /// `a*` reversing each `a`, and per vertex the component of `Σ aa* − a*a`.
    pub fn preprojective(q: &Quiver) -> Result<Presentation> {
        if q.has_loops() {
            return Err(Error::Input("preprojective presentation: quiver has loops".into()));
        }
        if !q.is_acyclic() {
            return Err(Error::Input("preprojective presentation: quiver has an oriented cycle".into()));
        }
        let mut d = q.clone();
        let n = q.num_arrows();
        for a in 0..n {
            let ar = q.arrow(a).clone();
            let name = format!("{}*", ar.name);
            d.add_arrow_idx(&name, ar.target, ar.source)?;
        }
        let mut relations = Vec::new();
        for v in 0..q.num_vertices() {
            let mut r = PathVector::zero(v, v);
            for a in 0..n {
                let ar = q.arrow(a);
                // aa*: a* first, then a; lives at the target of a.
                if ar.target == v {
                    r.add_term(&Rat::one(), Path::from_arrows(&d, &[n + a, a])?);
                }
                if ar.source == v {
                    r.add_term(&Rat::from_int(-1), Path::from_arrows(&d, &[a, n + a])?);
                }
            }
            if !r.is_zero() {
                relations.push(r);
            }
        }
        Presentation::new(d, relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preprojective_small_cases() {
        let one = Quiver::from_parts(&[1], &[]).unwrap();
        assert!(Presentation::preprojective(&one).unwrap().relations.is_empty());

        let a2 = Quiver::from_parts(&[1, 2], &[("a", 1, 2)]).unwrap();
        let p = Presentation::preprojective(&a2).unwrap();
        assert_eq!(p.quiver.num_arrows(), 2);
        assert_eq!(p.render_relations(), vec!["-a*·a", "a·a*"]);

        let q = Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3), ("c", 1, 3)]).unwrap();
        let p = Presentation::preprojective(&q).unwrap();
        assert_eq!((p.quiver.num_arrows(), p.relations.len()), (6, 3));
    }

    #[test]
    fn inhomogeneous_relation_is_a_contract_violation() {
        let q = Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3), ("c", 2, 3)]).unwrap();
        let mut r = PathVector::from_path(Path::from_arrows(&q, &[0, 1]).unwrap());
        r.add_term(&Rat::one(), Path::from_arrows(&q, &[0, 2]).unwrap());
        let p = Presentation::new(q, vec![r]).unwrap();
        assert!(matches!(p.clone().with_degrees(vec![0, 1, 0]), Err(Error::Contract(_))));
        assert!(p.with_degrees(vec![0, 1, 1]).is_ok());
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("c", 2, 3)]).unwrap();
        let r = PathVector::from_path(Path::from_arrows(&q, &[0, 1]).unwrap());
        let p = Presentation::new(q, vec![r]).unwrap();
        assert_eq!(p.opposite().opposite(), p);
        assert_eq!(p.opposite().render_relations(), vec!["ac"]);
    }
}
