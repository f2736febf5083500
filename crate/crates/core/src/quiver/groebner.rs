use std::collections::{BTreeSet, HashMap, HashSet};

use super::{extract_relations, Path, PathEvaluator, PathVector, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat};

pub const DEFAULT_LENGTH_CAP: usize = 64;

/// Sparse vector over the standard-word basis.
pub type Sparse = Vec<(usize, Rat)>;

/// Gröbner basis of a presentation together with the standard words that
/// form a basis of the quotient.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    presentation: Presentation,
    groebner: Vec<PathVector>,
    tips: HashMap<Vec<usize>, usize>,
    max_tip: usize,
    words: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `left[a][u]` = normal form of `a` followed by word `u`.
    left: Vec<HashMap<usize, Sparse>>,
    /// `right[a][u]` = normal form of word `u` followed by `a`.
    right: Vec<HashMap<usize, Sparse>>,
}

fn add_sparse(acc: &mut HashMap<usize, Rat>, c: &Rat, v: &Sparse) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Rat::zero);
        *e += &(c * x);
    }
}

fn finish(acc: HashMap<usize, Rat>) -> Sparse {
    let mut v: Sparse = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

struct Rewriter<'a> {
    gb: &'a [PathVector],
    tips: &'a HashMap<Vec<usize>, usize>,
    max_tip: usize,
}

impl Rewriter<'_> {
    /// Finds a tip occurring in `p`; returns (gb index, start position).
    fn divisor(&self, p: &Path) -> Option<(usize, usize)> {
        let n = p.arrows.len();
        for start in 0..n {
            for len in 1..=self.max_tip.min(n - start) {
                if let Some(&g) = self.tips.get(&p.arrows[start..start + len]) {
                    return Some((g, start));
                }
            }
        }
        None
    }

    fn reduce(&self, q: &Quiver, v: &PathVector) -> PathVector {
        let mut v = v.clone();
        let mut done = PathVector::zero(v.source, v.target);
        while let Some((p, c)) = v.leading().map(|(p, c)| (p.clone(), c.clone())) {
            match self.divisor(&p) {
                None => {
                    done.add_term(&c, p.clone());
                    v.add_term(&-&c, p);
                }
                Some((g, start)) => {
                    let len = self.gb[g].leading().unwrap().0.len();
                    let left = p.subpath(q, 0, start);
                    let right = p.subpath(q, start + len, p.len());
                    v.add_scaled(&-&c, &self.gb[g].sandwich(&left, &right));
                }
            }
        }
        done
    }
}

fn tip_table(gb: &[PathVector]) -> (HashMap<Vec<usize>, usize>, usize) {
    let mut tips = HashMap::new();
    let mut max = 0;
    for (i, g) in gb.iter().enumerate() {
        let t = g.leading().unwrap().0;
        max = max.max(t.len());
        tips.insert(t.arrows.clone(), i);
    }
    (tips, max)
}

/// Reduced Gröbner basis: monic, no tip divisible by another, all other terms standard.
fn interreduce(q: &Quiver, mut gb: Vec<PathVector>) -> Vec<PathVector> {
    gb.retain(|g| !g.is_zero());
    gb = gb.into_iter().map(|g| g.monic()).collect();
    loop {
        gb.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
        gb.dedup();
        let mut changed = false;
        let mut i = 0;
        while i < gb.len() {
            let others: Vec<PathVector> = gb.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            let (tips, max_tip) = tip_table(&others);
            let rw = Rewriter { gb: &others, tips: &tips, max_tip };
            let r = rw.reduce(q, &gb[i]);
            if r != gb[i] {
                changed = true;
                if r.is_zero() {
                    gb.remove(i);
                    continue;
                }
                gb[i] = r.monic();
            }
            i += 1;
        }
        if !changed {
            return gb;
        }
    }
}

/// Overlap obstructions `(i, j, k)`: the last `k` arrows of tip `i` equal the
/// first `k` arrows of tip `j`, with neither tip contained in the other.
fn overlaps(gb: &[PathVector]) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, gi) in gb.iter().enumerate() {
        let ti = &gi.leading().unwrap().0.arrows;
        for (j, gj) in gb.iter().enumerate() {
            let tj = &gj.leading().unwrap().0.arrows;
            for k in 1..ti.len().min(tj.len()) {
                if ti[ti.len() - k..] == tj[..k] {
                    out.push((ti.len() + tj.len() - k, i, j, k));
                }
            }
        }
    }
    out.sort();
    out
}

impl QuotientBasis {
    pub fn new(p: &Presentation) -> Result<QuotientBasis> {
        QuotientBasis::with_cap(p, DEFAULT_LENGTH_CAP)
    }

    /// Runs Buchberger's procedure under the length-then-lexicographic order and
    /// enumerates standard words. Fails with [`Error::CapExceeded`] if no length
    /// level up to `cap` is empty.
    pub fn with_cap(p: &Presentation, cap: usize) -> Result<QuotientBasis> {
        let q = &p.quiver;
        let mut gb = interreduce(q, p.relations.clone());
        let mut seen: HashSet<(PathVector, PathVector, usize)> = HashSet::new();
        loop {
            let pending = overlaps(&gb)
                .into_iter()
                .find(|&(_, i, j, k)| !seen.contains(&(gb[i].clone(), gb[j].clone(), k)));
            let Some((len, i, j, k)) = pending else { break };
            if len > cap {
                return Err(Error::CapExceeded { cap });
            }
            seen.insert((gb[i].clone(), gb[j].clone(), k));
            let ti = gb[i].leading().unwrap().0.clone();
            let tj = gb[j].leading().unwrap().0.clone();
            let left = ti.subpath(q, 0, ti.len() - k);
            let right = tj.subpath(q, k, tj.len());
            let mut s = gb[i].sandwich(&Path::trivial(ti.source), &right);
            s.add_scaled(&Rat::from_int(-1), &gb[j].sandwich(&left, &Path::trivial(tj.target)));
            let (tips, max_tip) = tip_table(&gb);
            let r = Rewriter { gb: &gb, tips: &tips, max_tip }.reduce(q, &s);
            if !r.is_zero() {
                gb.push(r);
                gb = interreduce(q, gb);
            }
        }
        let (tips, max_tip) = tip_table(&gb);

        // Standard words, level by level; a word is standard iff its prefix is
        // and no tip is a suffix of it.
        let mut words: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
        let mut level: Vec<Path> = words.clone();
        let mut length = 0;
        while !level.is_empty() {
            if length >= cap {
                return Err(Error::CapExceeded { cap });
            }
            let mut next = Vec::new();
            for w in &level {
                for a in q.arrows_from(w.target) {
                    let mut arrows = w.arrows.clone();
                    arrows.push(a);
                    let n = arrows.len();
                    let reducible = (1..=max_tip.min(n)).any(|l| tips.contains_key(&arrows[n - l..]));
                    if !reducible {
                        next.push(Path { source: w.source, target: q.arrow(a).target, arrows });
                    }
                }
            }
            next.sort();
            words.extend(next.iter().cloned());
            level = next;
            length += 1;
        }
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut qb = QuotientBasis {
            presentation: p.clone(),
            groebner: gb,
            tips,
            max_tip,
            words,
            index,
            left: Vec::new(),
            right: Vec::new(),
        };
        qb.build_tables();
        Ok(qb)
    }

    fn build_tables(&mut self) {
        let q = &self.presentation.quiver;
        let na = q.num_arrows();
        let mut left = vec![HashMap::new(); na];
        let mut right = vec![HashMap::new(); na];
        for (u, w) in self.words.iter().enumerate() {
            for a in q.arrows_into(w.source) {
                let p = Path::arrow(q, a).then(w).unwrap();
                left[a].insert(u, self.sparse_of(&PathVector::from_path(p)));
            }
            for a in q.arrows_from(w.target) {
                let p = w.then(&Path::arrow(q, a)).unwrap();
                right[a].insert(u, self.sparse_of(&PathVector::from_path(p)));
            }
        }
        self.left = left;
        self.right = right;
    }

    fn rewriter(&self) -> Rewriter<'_> {
        Rewriter { gb: &self.groebner, tips: &self.tips, max_tip: self.max_tip }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn groebner_basis(&self) -> &[PathVector] {
        &self.groebner
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Path] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Path {
        &self.words[i]
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of standard words from `s` to `t`, in monomial order.
    pub fn words_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.words.len()).filter(|&i| self.words[i].source == s && self.words[i].target == t).collect()
    }

    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Normal form (combination of standard words).
    pub fn reduce(&self, v: &PathVector) -> PathVector {
        self.rewriter().reduce(&self.presentation.quiver, v)
    }

    pub fn reduce_path(&self, p: &Path) -> PathVector {
        self.reduce(&PathVector::from_path(p.clone()))
    }

    pub fn is_zero_in_quotient(&self, v: &PathVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the standard-word basis.
    pub fn sparse_of(&self, v: &PathVector) -> Sparse {
        let r = self.reduce(v);
        r.terms().map(|(p, c)| (self.index[p], c.clone())).collect()
    }

    pub fn to_path_vector(&self, v: &Sparse, source: usize, target: usize) -> PathVector {
        let mut out = PathVector::zero(source, target);
        for (i, c) in v {
            out.add_term(c, self.words[*i].clone());
        }
        out
    }

    /// Normal form of `a` followed by standard word `u`.
    pub fn left_arrow(&self, a: usize, u: usize) -> &Sparse {
        &self.left[a][&u]
    }

    /// Normal form of standard word `u` followed by `a`.
    pub fn right_arrow(&self, u: usize, a: usize) -> &Sparse {
        &self.right[a][&u]
    }

    /// Product `u` followed by `v` of two standard words (zero if not composable).
    pub fn multiply(&self, u: usize, v: usize) -> Sparse {
        let (wu, wv) = (&self.words[u], &self.words[v]);
        if wu.target != wv.source {
            return Vec::new();
        }
        let mut cur: Sparse = vec![(u, Rat::one())];
        for &a in &wv.arrows {
            let mut acc = HashMap::new();
            for (i, c) in &cur {
                add_sparse(&mut acc, c, self.right_arrow(*i, a));
            }
            cur = finish(acc);
        }
        cur
    }

    /// Entry `(i, j)` counts standard words from `i` to `j`, so column `j` is the
    /// dimension vector of the indecomposable projective right module at `j`.
    pub fn cartan_matrix(&self) -> Mat {
        let n = self.presentation.quiver.num_vertices();
        let mut c = Mat::zeros(n, n);
        for w in &self.words {
            c[(w.source, w.target)] += &Rat::one();
        }
        c
    }

    pub fn word_degree(&self, u: usize) -> Option<u32> {
        let d = self.presentation.degrees.as_ref()?;
        Some(self.words[u].arrows.iter().map(|&a| d[a]).sum())
    }

    /// Standard words of degree `d` under the presentation's grading.
    pub fn homogeneous_component(&self, d: u32) -> Result<Vec<usize>> {
        let Some(degrees) = &self.presentation.degrees else {
            return Err(Error::Contract("presentation carries no grading".into()));
        };
        for r in &self.presentation.relations {
            if r.homogeneous_degree(degrees).is_none() {
                return Err(Error::Contract(format!(
                    "relation `{}` is not homogeneous",
                    r.render(&self.presentation.quiver)
                )));
            }
        }
        Ok((0..self.words.len()).filter(|&u| self.word_degree(u) == Some(d)).collect())
    }

    /// Presentation of the degree-zero subalgebra: the degree-zero arrows with
    /// the kernel of `kQ_0 -> B_0` as relations.
    pub fn degree_zero_presentation(&self) -> Result<Presentation> {
        self.homogeneous_component(0)?;
        let degrees = self.presentation.degrees.as_ref().unwrap();
        let q = &self.presentation.quiver;
        let keep: Vec<usize> = (0..q.num_arrows()).filter(|&a| degrees[a] == 0).collect();
        let sub = q.arrow_subquiver(&keep);
        struct Ev<'a> {
            qb: &'a QuotientBasis,
            keep: &'a [usize],
        }
        impl PathEvaluator for Ev<'_> {
            fn unit(&self, v: usize) -> Vec<Rat> {
                let mut x = vec![Rat::zero(); self.qb.dim()];
                x[v] = Rat::one();
                x
            }
            fn extend(&self, _s: usize, x: &[Rat], a: usize) -> Vec<Rat> {
                let mut out = vec![Rat::zero(); self.qb.dim()];
                for (u, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (w, y) in self.qb.right_arrow(u, self.keep[a]) {
                        out[*w] += &(c * y);
                    }
                }
                out
            }
        }
        let cap = self.max_word_len() + 2;
        let mut p = extract_relations(&sub, &Ev { qb: self, keep: &keep }, cap)?;
        p.degrees = Some(vec![0; keep.len()]);
        Ok(p)
    }

    /// Checks that every subpath of a standard word is standard.
    pub fn subword_closed(&self) -> bool {
        let q = &self.presentation.quiver;
        self.words.iter().all(|w| {
            (0..=w.len()).all(|i| (i..=w.len()).all(|j| self.index.contains_key(&w.subpath(q, i, j))))
        })
    }

    /// Spot check of associativity on all composable triples of words of length ≤ `max_len`.
    pub fn check_associativity(&self, max_len: usize) -> bool {
        let small: Vec<usize> = (0..self.words.len()).filter(|&u| self.words[u].len() <= max_len).collect();
        let mul = |x: &Sparse, v: usize| -> Sparse {
            let mut acc = HashMap::new();
            for (i, c) in x {
                add_sparse(&mut acc, c, &self.multiply(*i, v));
            }
            finish(acc)
        };
        for &u in &small {
            for &v in &small {
                if self.words[u].target != self.words[v].source {
                    continue;
                }
                for &w in &small {
                    if self.words[v].target != self.words[w].source {
                        continue;
                    }
                    let lhs = mul(&self.multiply(u, v), w);
                    let vw = self.multiply(v, w);
                    let mut acc = HashMap::new();
                    for (i, c) in &vw {
                        // u·(basis word i)
                        add_sparse(&mut acc, c, &self.multiply(u, *i));
                    }
                    if lhs != finish(acc) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Set of lengths of standard words, for diagnostics.
    pub fn lengths(&self) -> BTreeSet<usize> {
        self.words.iter().map(Path::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_algebra_of_a2() {
        let q = Quiver::from_parts(&[1, 2], &[("a", 1, 2)]).unwrap();
        let qb = QuotientBasis::new(&Presentation::path_algebra(q)).unwrap();
        assert_eq!(qb.dim(), 3);
        assert_eq!(qb.cartan_matrix(), Mat::from_ints(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn loop_exceeds_cap() {
        let q = Quiver::from_parts(&[1], &[("x", 1, 1)]).unwrap();
        let err = QuotientBasis::with_cap(&Presentation::path_algebra(q), 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 10 }));
    }

    #[test]
    fn loop_with_nilpotency_relation() {
        let q = Quiver::from_parts(&[1], &[("x", 1, 1)]).unwrap();
        let r = PathVector::from_path(Path::from_arrows(&q, &[0, 0, 0]).unwrap());
        let qb = QuotientBasis::new(&Presentation::new(q, vec![r]).unwrap()).unwrap();
        assert_eq!(qb.dim(), 3);
        assert!(qb.check_associativity(2));
    }

    #[test]
    fn overlap_produces_new_basis_element() {
        // Two loops with xy = yx, x² = 0, y² = 0.
        let q = Quiver::from_parts(&[1], &[("x", 1, 1), ("y", 1, 1)]).unwrap();
        let p = |a: &[usize]| Path::from_arrows(&q, a).unwrap();
        let mut comm = PathVector::from_path(p(&[0, 1]));
        comm.add_term(&Rat::from_int(-1), p(&[1, 0]));
        let rels = vec![comm, PathVector::from_path(p(&[0, 0])), PathVector::from_path(p(&[1, 1]))];
        let qb = QuotientBasis::new(&Presentation::new(q.clone(), rels).unwrap()).unwrap();
        // exterior-like algebra k[x,y]/(x²,y²): 1, x, y, xy
        assert_eq!(qb.dim(), 4);
        assert!(qb.subword_closed());
        assert!(qb.check_associativity(2));
    }
}
