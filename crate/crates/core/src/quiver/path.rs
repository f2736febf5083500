use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::Quiver;
use crate::error::{Error, Result};
use crate::linalg::Rat;

/// A path stored in traversal order: `arrows[0]` leaves `source`, the last arrow
/// enters `target`. A trivial path has no arrows and `source == target`.
///
/// Ordering is the monomial order: length first, then lexicographic on arrow
/// indices, then source vertex (only relevant for trivial paths).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        let ar = q.arrow(a);
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    /// Path from a traversal-order arrow sequence; checks composability.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Input("empty arrow sequence; use a trivial path".into()));
        };
        let mut at = q.arrow(first).target;
        for &a in &arrows[1..] {
            let ar = q.arrow(a);
            if ar.source != at {
                return Err(Error::Validation(format!(
                    "arrow `{}` does not start at vertex {}",
                    ar.name,
                    q.vertex_name(at)
                )));
            }
            at = ar.target;
        }
        Ok(Path { source: q.arrow(first).source, target: at, arrows: arrows.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        !self.arrows.is_empty() && self.source == self.target
    }

    /// `self` followed by `other`, if the endpoints match.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// Subpath of arrows `[from, to)`; empty ranges give the trivial path at the
    /// corresponding vertex.
    pub fn subpath(&self, q: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from == 0 {
                self.source
            } else {
                q.arrow(self.arrows[from - 1]).target
            };
            return Path::trivial(v);
        }
        Path {
            source: q.arrow(self.arrows[from]).source,
            target: q.arrow(self.arrows[to - 1]).target,
            arrows: self.arrows[from..to].to_vec(),
        }
    }

    /// Right-to-left rendering (`ca` is `a` followed by `c`); `e<id>` for trivial paths.
    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertex_name(self.source));
        }
        let single = self.arrows.iter().all(|&a| q.arrow(a).name.chars().count() == 1);
        let names: Vec<&str> = self.arrows.iter().rev().map(|&a| q.arrow(a).name.as_str()).collect();
        if single {
            names.concat()
        } else {
            names.join("·")
        }
    }

    /// Reversed path in the opposite quiver (same arrow indices).
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Position of `pat` as a contiguous subword, scanning from the left.
    pub fn find(&self, pat: &[usize]) -> Option<usize> {
        if pat.is_empty() || pat.len() > self.arrows.len() {
            return None;
        }
        (0..=self.arrows.len() - pat.len()).find(|&i| &self.arrows[i..i + pat.len()] == pat)
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Linear combination of parallel paths with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathVector {
    pub source: usize,
    pub target: usize,
    terms: BTreeMap<Path, Rat>,
}

impl PathVector {
    pub fn zero(source: usize, target: usize) -> PathVector {
        PathVector { source, target, terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path) -> PathVector {
        let mut v = PathVector::zero(p.source, p.target);
        v.terms.insert(p, Rat::one());
        v
    }

    /// Builds from `(coefficient, path)` pairs; the paths must be parallel.
    pub fn from_terms(terms: Vec<(Rat, Path)>) -> Result<PathVector> {
        let Some((_, p0)) = terms.first() else {
            return Err(Error::Input("empty path vector needs explicit endpoints".into()));
        };
        let mut v = PathVector::zero(p0.source, p0.target);
        for (c, p) in terms {
            if p.source != v.source || p.target != v.target {
                return Err(Error::Validation("terms of a path vector must be parallel".into()));
            }
            v.add_term(&c, p);
        }
        Ok(v)
    }

    pub fn add_term(&mut self, c: &Rat, p: Path) {
        debug_assert!(p.source == self.source && p.target == self.target);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &PathVector) {
        for (p, x) in &other.terms {
            self.add_term(&(c * x), p.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> PathVector {
        let mut v = PathVector::zero(self.source, self.target);
        v.add_scaled(c, self);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Path) -> Rat {
        self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<(&Path, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient scaled to one.
    pub fn monic(&self) -> PathVector {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// `left · self · right` in traversal order (`left` first).
    pub fn sandwich(&self, left: &Path, right: &Path) -> PathVector {
        assert_eq!(left.target, self.source);
        assert_eq!(self.target, right.source);
        let mut v = PathVector::zero(left.source, right.target);
        for (p, c) in &self.terms {
            let mut arrows = left.arrows.clone();
            arrows.extend_from_slice(&p.arrows);
            arrows.extend_from_slice(&right.arrows);
            v.add_term(c, Path { source: left.source, target: right.target, arrows });
        }
        v
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.terms.keys().map(Path::len).min().unwrap_or(0)
    }

    /// Degree of each term under an arrow grading; `None` for inhomogeneous vectors.
    pub fn homogeneous_degree(&self, degrees: &[u32]) -> Option<Option<u32>> {
        let mut deg = None;
        for p in self.terms.keys() {
            let d: u32 = p.arrows.iter().map(|&a| degrees[a]).sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    pub fn reversed(&self) -> PathVector {
        let mut v = PathVector::zero(self.target, self.source);
        for (p, c) in &self.terms {
            v.terms.insert(p.reversed(), c.clone());
        }
        v
    }

    /// Renders as `c₁·p₁ + c₂·p₂ ...` with paths right-to-left, largest term first.
    pub fn render(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&format!("{a}*"));
            }
            out.push_str(&p.render(q));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("c", 2, 3), ("x", 1, 3)]).unwrap()
    }

    #[test]
    fn composition_renders_right_to_left() {
        let q = a3();
        let p = Path::from_arrows(&q, &[0, 1]).unwrap();
        assert_eq!(p.render(&q), "ca");
        assert_eq!((p.source, p.target), (0, 2));
        assert!(Path::from_arrows(&q, &[1, 0]).is_err());
    }

    #[test]
    fn order_is_length_then_lex() {
        let q = a3();
        let long = Path::from_arrows(&q, &[0, 1]).unwrap();
        let short = Path::arrow(&q, 2);
        assert!(short < long);
        assert!(Path::trivial(2) < short);
    }

    #[test]
    fn cancellation_drops_terms() {
        let q = a3();
        let mut v = PathVector::from_path(Path::from_arrows(&q, &[0, 1]).unwrap());
        v.add_term(&Rat::from_int(-2), Path::arrow(&q, 2));
        assert_eq!(v.render(&q), "ca - 2*x");
        v.add_term(&Rat::from_int(-1), Path::from_arrows(&q, &[0, 1]).unwrap());
        assert_eq!(v.num_terms(), 1);
        assert_eq!(v.leading().unwrap().0, &Path::arrow(&q, 2));
    }
}
