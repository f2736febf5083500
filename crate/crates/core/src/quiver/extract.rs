use std::collections::BTreeMap;

use super::{Path, PathVector, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat, Subspace};

/// Evaluates paths of a quiver inside some finite-dimensional algebra. The value
/// of a path from `s` to `t` is a vector whose length depends only on `(s, t)`.
pub trait PathEvaluator {
    fn unit(&self, v: usize) -> Vec<Rat>;
    /// Value of `p` followed by arrow `a`, where `x` is the value of `p` and `p` starts at `s`.
    fn extend(&self, s: usize, x: &[Rat], a: usize) -> Vec<Rat>;
}

struct Entry {
    path: Path,
    value: Vec<Rat>,
}

/// Minimal generators of the kernel of `kQ -> B` determined by `ev`.
///
/// All paths up to the first length `N` at which every path evaluates to zero
/// are enumerated; per vertex pair the kernel `K` of the evaluation is computed
/// and generators are chosen as a complement of `rad·K + K·rad` (truncated at
/// length `N`). Fails with [`Error::CapExceeded`] if `N` exceeds `cap`.
pub fn extract_relations(q: &Quiver, ev: &dyn PathEvaluator, cap: usize) -> Result<Presentation> {
    let mut all: Vec<Entry> = (0..q.num_vertices())
        .map(|v| Entry { path: Path::trivial(v), value: ev.unit(v) })
        .collect();
    let mut level: Vec<usize> = (0..all.len()).collect();
    let mut n = 0;
    loop {
        if level.iter().all(|&i| all[i].value.iter().all(Rat::is_zero)) && n > 0 {
            break;
        }
        if n >= cap {
            return Err(Error::CapExceeded { cap });
        }
        let mut next = Vec::new();
        for &i in &level {
            let nonzero = all[i].value.iter().any(|x| !x.is_zero());
            for a in q.arrows_from(all[i].path.target) {
                let path = all[i].path.then(&Path::arrow(q, a)).unwrap();
                let value = if nonzero {
                    ev.extend(path.source, &all[i].value, a)
                } else {
                    // zero stays zero; length of the zero vector is recomputed lazily
                    Vec::new()
                };
                next.push(all.len());
                all.push(Entry { path, value });
            }
        }
        level = next;
        n += 1;
        if level.is_empty() {
            break;
        }
    }
    let max_len = n;

    // Group by vertex pair; paths in monomial order.
    let mut pairs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in all.iter().enumerate() {
        pairs.entry((e.path.source, e.path.target)).or_default().push(i);
    }
    for ids in pairs.values_mut() {
        ids.sort_by(|&x, &y| all[x].path.cmp(&all[y].path));
    }

    // Kernel per pair as path vectors.
    let mut kernels: BTreeMap<(usize, usize), Vec<PathVector>> = BTreeMap::new();
    for (&(s, t), ids) in &pairs {
        let width = ids.iter().map(|&i| all[i].value.len()).max().unwrap_or(0);
        let mut m = Mat::zeros(width, ids.len());
        for (c, &i) in ids.iter().enumerate() {
            for (r, x) in all[i].value.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        let k = m.kernel();
        let mut vs = Vec::new();
        for col in 0..k.cols() {
            let mut v = PathVector::zero(s, t);
            for (r, &i) in ids.iter().enumerate() {
                v.add_term(&k[(r, col)], all[i].path.clone());
            }
            vs.push(v);
        }
        // Smallest leading terms first.
        vs.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
        kernels.insert((s, t), vs);
    }

    let mut relations = Vec::new();
    for (&(s, t), ids) in &pairs {
        let pos: BTreeMap<&Path, usize> = ids.iter().enumerate().map(|(c, &i)| (&all[i].path, c)).collect();
        let coords = |v: &PathVector| -> Option<Vec<Rat>> {
            let mut x = vec![Rat::zero(); ids.len()];
            let mut any = false;
            for (p, c) in v.terms() {
                if p.len() > max_len {
                    continue;
                }
                x[pos[p]] = c.clone();
                any = true;
            }
            any.then_some(x)
        };
        let mut span = Subspace::new(ids.len());
        // rad·K: arrow a: s -> s', then k in K(s', t).
        for a in q.arrows_from(s) {
            let s2 = q.arrow(a).target;
            for k in kernels.get(&(s2, t)).into_iter().flatten() {
                let v = k.sandwich(&Path::arrow(q, a), &Path::trivial(t));
                if let Some(x) = coords(&v) {
                    span.insert(&x);
                }
            }
        }
        // K·rad: k in K(s, t'), then arrow a: t' -> t.
        for a in q.arrows_into(t) {
            let t2 = q.arrow(a).source;
            for k in kernels.get(&(s, t2)).into_iter().flatten() {
                let v = k.sandwich(&Path::trivial(s), &Path::arrow(q, a));
                if let Some(x) = coords(&v) {
                    span.insert(&x);
                }
            }
        }
        for k in &kernels[&(s, t)] {
            let x = coords(k).expect("kernel vectors are nonzero");
            if span.insert(&x) {
                let mut g = PathVector::zero(s, t);
                for (c, &i) in ids.iter().enumerate() {
                    g.add_term(&x[c], all[i].path.clone());
                }
                relations.push(g.monic());
            }
        }
    }
    Presentation::new(q.clone(), relations)
}
