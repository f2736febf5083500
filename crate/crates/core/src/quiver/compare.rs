use std::collections::BTreeMap;

use super::{Path, PathVector, Presentation, QuotientBasis};
use crate::error::Result;
use crate::linalg::{Mat, Rat};

/// Arrow correspondence and scalars with `r`-arrow `a ↦ scalars[a] · arrow_map[a]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rescaling {
    pub arrow_map: Vec<usize>,
    pub scalars: Vec<Rat>,
}

const MAX_CANDIDATES: usize = 720;

/// Looks for a rescaling of the arrows of `r` carrying its relation ideal onto
/// that of `p`. Vertices are identified by index and arrows by their ends.
///
/// Scalars are found by propagating the ratios forced by each relation; the
/// answer is then checked exactly (ideal inclusion plus equal dimensions), so
/// `Some` is always correct.
pub fn match_up_to_rescaling(p: &Presentation, r: &Presentation) -> Result<Option<Rescaling>> {
    let (qp, qr) = (&p.quiver, &r.quiver);
    if qp.num_vertices() != qr.num_vertices() || qp.num_arrows() != qr.num_arrows() {
        return Ok(None);
    }
    let bp = QuotientBasis::new(p)?;
    let br = QuotientBasis::new(r)?;
    if bp.dim() != br.dim() {
        return Ok(None);
    }
    // parallel classes of r and their counterparts in p
    let mut classes: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (a, arr) in qr.arrows().iter().enumerate() {
        classes.entry((arr.source, arr.target)).or_default().0.push(a);
    }
    for (a, arr) in qp.arrows().iter().enumerate() {
        classes.entry((arr.source, arr.target)).or_default().1.push(a);
    }
    if classes.values().any(|(x, y)| x.len() != y.len()) {
        return Ok(None);
    }
    let mut candidates: Vec<Vec<usize>> = vec![vec![usize::MAX; qr.num_arrows()]];
    for (ra, pa) in classes.values() {
        let mut next = Vec::new();
        for base in &candidates {
            for perm in permutations(pa) {
                let mut c = base.clone();
                for (x, y) in ra.iter().zip(perm) {
                    c[*x] = y;
                }
                next.push(c);
            }
        }
        candidates = next;
        if candidates.len() > MAX_CANDIDATES {
            return Ok(None);
        }
    }
    for arrow_map in candidates {
        if let Some(scalars) = solve_scalars(&bp, r, &arrow_map) {
            let m = Rescaling { arrow_map, scalars };
            if maps_into(&bp, r, &m) {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn image_path(bp: &QuotientBasis, path: &Path, arrow_map: &[usize]) -> Path {
    let arrows: Vec<usize> = path.arrows.iter().map(|&a| arrow_map[a]).collect();
    if arrows.is_empty() {
        path.clone()
    } else {
        Path::from_arrows(bp.quiver(), &arrows).expect("ends are preserved")
    }
}

/// Applies the rescaling to a relation of `r`.
pub fn rescale(bp: &QuotientBasis, v: &PathVector, m: &Rescaling) -> PathVector {
    let mut out = PathVector::zero(v.source, v.target);
    for (path, c) in v.terms() {
        let lam = path.arrows.iter().fold(Rat::one(), |acc, &a| &acc * &m.scalars[a]);
        out.add_term(&(c * &lam), image_path(bp, path, &m.arrow_map));
    }
    out
}

fn maps_into(bp: &QuotientBasis, r: &Presentation, m: &Rescaling) -> bool {
    r.relations.iter().all(|rel| bp.is_zero_in_quotient(&rescale(bp, rel, m)))
}

/// Exponent vector of a path over the arrows of `r`.
fn exponents(path: &Path, n: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    for &a in &path.arrows {
        e[a] += 1;
    }
    e
}

fn solve_scalars(bp: &QuotientBasis, r: &Presentation, arrow_map: &[usize]) -> Option<Vec<Rat>> {
    let n = arrow_map.len();
    // constraints λ^e = ρ
    let mut constraints: Vec<(Vec<i64>, Rat)> = Vec::new();
    for rel in &r.relations {
        let terms: Vec<(&Path, &Rat)> = rel.terms().collect();
        let images: Vec<Vec<(usize, Rat)>> =
            terms.iter().map(|(path, c)| scaled(bp.sparse_of(&PathVector::from_path(image_path(bp, path, arrow_map))), c)).collect();
        let mut rows: Vec<usize> = images.iter().flatten().map(|(i, _)| *i).collect();
        rows.sort_unstable();
        rows.dedup();
        if rows.is_empty() {
            continue;
        }
        let mut b = Mat::zeros(rows.len(), terms.len());
        for (col, img) in images.iter().enumerate() {
            for (i, c) in img {
                b[(rows.binary_search(i).unwrap(), col)] = c.clone();
            }
        }
        let k = b.kernel();
        if k.cols() == 0 {
            return None;
        }
        if k.cols() > 1 {
            continue;
        }
        let mu = k.col(0);
        if mu.iter().any(Rat::is_zero) {
            return None;
        }
        let e0 = exponents(terms[0].0, n);
        for (t, (path, _)) in terms.iter().enumerate().skip(1) {
            let e: Vec<i64> = exponents(path, n).iter().zip(&e0).map(|(x, y)| x - y).collect();
            if e.iter().any(|&x| x != 0) {
                constraints.push((e, &mu[t] / &mu[0]));
            }
        }
    }
    let mut lam: Vec<Option<Rat>> = vec![None; n];
    loop {
        let mut progress = false;
        for (e, rho) in &constraints {
            let unknown: Vec<usize> = (0..n).filter(|&a| e[a] != 0 && lam[a].is_none()).collect();
            if unknown.len() != 1 || e[unknown[0]].abs() != 1 {
                continue;
            }
            let a = unknown[0];
            let known = (0..n)
                .filter(|&b| b != a && e[b] != 0)
                .fold(Rat::one(), |acc, b| &acc * &power(lam[b].as_ref().unwrap(), e[b]));
            let v = rho / &known;
            lam[a] = Some(if e[a] == 1 { v } else { v.recip() });
            progress = true;
        }
        if progress {
            continue;
        }
        let open = constraints.iter().find_map(|(e, _)| (0..n).find(|&a| e[a] != 0 && lam[a].is_none()));
        match open {
            Some(a) => lam[a] = Some(Rat::one()),
            None => break,
        }
    }
    Some(lam.into_iter().map(|x| x.unwrap_or_else(Rat::one)).collect())
}

fn scaled(v: Vec<(usize, Rat)>, c: &Rat) -> Vec<(usize, Rat)> {
    v.into_iter().map(|(i, x)| (i, &x * c)).collect()
}

fn power(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        x.pow(e as u32)
    } else {
        x.recip().pow((-e) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rescaled_relations_match() {
        let a = fixtures::example_auslander();
        // he + 2gd, fb - ec, ca: substitute d ↦ -d/2
        let b = fixtures::presentation(
            &[1, 2, 3, 4, 5, 6],
            &[
                ("a", 1, 2),
                ("b", 2, 4),
                ("c", 2, 3),
                ("d", 3, 4),
                ("e", 3, 5),
                ("f", 4, 5),
                ("g", 4, 6),
                ("h", 5, 6),
            ],
            &[&[(1, "he"), (2, "gd")], &[(1, "fb"), (-1, "ec")], &[(3, "ca")]],
        )
        .unwrap();
        let m = match_up_to_rescaling(&a, &b).unwrap().expect("rescaling exists");
        let bp = QuotientBasis::new(&a).unwrap();
        for rel in &b.relations {
            assert!(bp.is_zero_in_quotient(&rescale(&bp, rel, &m)));
        }
        assert!(match_up_to_rescaling(&b, &a).unwrap().is_some());
    }

    #[test]
    fn different_ideals_do_not_match() {
        let a = fixtures::example_auslander();
        let b = fixtures::presentation(
            &[1, 2, 3, 4, 5, 6],
            &[
                ("a", 1, 2),
                ("b", 2, 4),
                ("c", 2, 3),
                ("d", 3, 4),
                ("e", 3, 5),
                ("f", 4, 5),
                ("g", 4, 6),
                ("h", 5, 6),
            ],
            &[&[(1, "he")], &[(1, "gd")], &[(1, "fb"), (-1, "ec")], &[(1, "ca")]],
        )
        .unwrap();
        assert!(match_up_to_rescaling(&a, &b).unwrap().is_none());
    }
}
