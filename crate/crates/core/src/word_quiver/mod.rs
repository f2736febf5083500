//! The quiver `Q_w` of a reduced expression, its truncation, the potential
//! `W_w`, the Jacobian presentation and the presentation `kR_{w'}/J_{w'}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::{is_reduced, SupportData};
use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::quiver::{Path, PathVector, Presentation, Quiver, QuotientBasis, DEFAULT_LENGTH_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArrowKind {
    Left,
    Q,
    QStar,
}

/// Provenance of a `Q`- or `Q*`-arrow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Placement {
    /// Index of the underlying arrow of the base quiver.
    pub base_arrow: usize,
    /// Position of the next vertex of the source's type, or `None` when the
    /// end of the word was used instead.
    pub next_same_type: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct WordQuiver {
    /// Vertex ids are word positions `1..=l(w)`.
    pub quiver: Quiver,
    /// Letter (vertex id of the base quiver) at each vertex index.
    pub letters: Vec<i64>,
    pub kinds: Vec<ArrowKind>,
    pub placements: Vec<Option<Placement>>,
    /// Positions removed by truncation.
    pub removed: Vec<usize>,
}

impl WordQuiver {
    pub fn position(&self, v: usize) -> usize {
        self.quiver.vertex_id(v) as usize
    }

    pub fn arrows_of_kind(&self, k: ArrowKind) -> Vec<usize> {
        (0..self.kinds.len()).filter(|&a| self.kinds[a] == k).collect()
    }

    /// Grading with `Q*`-arrows in degree one.
    pub fn degrees(&self) -> Vec<u32> {
        self.kinds.iter().map(|&k| u32::from(k == ArrowKind::QStar)).collect()
    }

    /// Whether some arrow relied on the end of the word in place of a next vertex.
    pub fn used_end_of_word(&self) -> bool {
        self.placements.iter().flatten().any(|p| p.next_same_type.is_none())
    }

    /// Renames arrows (by current name); names not in `map` are kept.
    pub fn rename_arrows(&self, map: &BTreeMap<String, String>) -> Result<WordQuiver> {
        let mut q = Quiver::new();
        for v in self.quiver.vertices() {
            q.add_vertex(v.id, v.label.clone())?;
        }
        for a in self.quiver.arrows() {
            let name = map.get(&a.name).cloned().unwrap_or_else(|| a.name.clone());
            q.add_arrow_idx(&name, a.source, a.target)?;
        }
        Ok(WordQuiver { quiver: q, ..self.clone() })
    }
}

/// Applies the placement rules literally to the positions of `letters`.
pub fn build_word_quiver(q: &Quiver, letters: &[i64]) -> Result<WordQuiver> {
    if !is_reduced(q, letters)? {
        return Err(Error::Precondition("word is not reduced".into()));
    }
    let l = letters.len();
    let mut wq = Quiver::new();
    for p in 1..=l {
        wq.add_vertex(p as i64, None)?;
    }
    let mut kinds = Vec::new();
    let mut placements = Vec::new();
    // Arrows going to the left: s -> t for consecutive positions t < s of equal type.
    for s in 0..l {
        if let Some(t) = (0..s).rev().find(|&t| letters[t] == letters[s]) {
            wq.add_arrow_idx(&format!("l_{}_{}", s + 1, t + 1), s, t)?;
            kinds.push(ArrowKind::Left);
            placements.push(None);
        }
    }
    // For an arrow i -> j, from a position t of type `from` to the last position of
    // type `to` before the next position of type `from`.
    let mut place = |from: i64, to: i64, base: usize, star: bool| -> Result<()> {
        for t in 0..l {
            if letters[t] != from {
                continue;
            }
            let next = (t + 1..l).find(|&x| letters[x] == from);
            let end = next.unwrap_or(l);
            if let Some(s) = (t + 1..end).rev().find(|&x| letters[x] == to) {
                let name = &q.arrow(base).name;
                let name = if star {
                    format!("{name}*_{}_{}", t + 1, s + 1)
                } else {
                    format!("{name}_{}_{}", t + 1, s + 1)
                };
                wq.add_arrow_idx(&name, t, s)?;
                kinds.push(if star { ArrowKind::QStar } else { ArrowKind::Q });
                placements.push(Some(Placement { base_arrow: base, next_same_type: next.map(|x| x + 1) }));
            }
        }
        Ok(())
    };
    for (b, a) in q.arrows().iter().enumerate() {
        let (i, j) = (q.vertex_id(a.source), q.vertex_id(a.target));
        place(i, j, b, false)?;
        place(j, i, b, true)?;
    }
    Ok(WordQuiver { quiver: wq, letters: letters.to_vec(), kinds, placements, removed: Vec::new() })
}

/// Removes the last occurrence of every letter together with incident arrows.
pub fn truncate(wq: &WordQuiver) -> WordQuiver {
    let n = wq.quiver.num_vertices();
    let last: Vec<usize> = (0..n).filter(|&v| (v + 1..n).all(|u| wq.letters[u] != wq.letters[v])).collect();
    let keep: Vec<usize> = (0..n).filter(|v| !last.contains(v)).collect();
    let (sub, _) = wq.quiver.full_subquiver(&keep);
    let kept_arrows: Vec<usize> = (0..wq.quiver.num_arrows())
        .filter(|&a| !last.contains(&wq.quiver.arrow(a).source) && !last.contains(&wq.quiver.arrow(a).target))
        .collect();
    let mut removed = wq.removed.clone();
    removed.extend(last.iter().map(|&v| wq.position(v)));
    removed.sort_unstable();
    WordQuiver {
        quiver: sub,
        letters: keep.iter().map(|&v| wq.letters[v]).collect(),
        kinds: kept_arrows.iter().map(|&a| wq.kinds[a]).collect(),
        placements: kept_arrows.iter().map(|&a| wq.placements[a].clone()).collect(),
        removed,
    }
}

/// Formal combination of cycles, each stored in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    pub terms: Vec<(Rat, Path)>,
}

impl Potential {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !c.abs().is_one() {
                out.push_str(&format!("{}*", c.abs()));
            }
            out.push_str(&p.render(q));
        }
        out
    }

    /// Term cycles as right-to-left strings, each brought to its
    /// lexicographically least rotation, with signs.
    pub fn normalized_terms(&self, q: &Quiver) -> Vec<(Rat, Vec<String>)> {
        let mut out: Vec<(Rat, Vec<String>)> = self
            .terms
            .iter()
            .map(|(c, p)| {
                let names: Vec<String> = p.arrows.iter().rev().map(|&a| q.arrow(a).name.clone()).collect();
                let best = (0..names.len())
                    .map(|r| {
                        let mut v = names.clone();
                        v.rotate_left(r);
                        v
                    })
                    .min()
                    .unwrap();
                (c.clone(), best)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }
}

/// Left arrows from position index `from` down to `to` (`to ≤ from`, same type),
/// in traversal order.
fn left_path(wq: &WordQuiver, from: usize, to: usize) -> Option<Vec<usize>> {
    let q = &wq.quiver;
    let mut at = from;
    let mut arrows = Vec::new();
    while at != to {
        let a = q.arrows_from(at).find(|&a| wq.kinds[a] == ArrowKind::Left)?;
        arrows.push(a);
        at = q.arrow(a).target;
        if wq.position(at) < wq.position(to) {
            return None;
        }
    }
    Some(arrows)
}

/// `W = Σ_a a a* p − Σ_{a*} a* a p` over the truncated quiver.
pub fn build_potential(wq: &WordQuiver) -> Result<Potential> {
    let q = &wq.quiver;
    let mut terms = Vec::new();
    let base = |a: usize| wq.placements[a].as_ref().map(|p| p.base_arrow);
    for a in wq.arrows_of_kind(ArrowKind::Q) {
        let (t, s) = (q.arrow(a).source, q.arrow(a).target);
        // a*: r -> t of the same base arrow, with r of the type of s and r ≤ s.
        let cands: Vec<(usize, Vec<usize>)> = wq
            .arrows_of_kind(ArrowKind::QStar)
            .into_iter()
            .filter(|&b| base(b) == base(a) && q.arrow(b).target == t)
            .filter(|&b| wq.letters[q.arrow(b).source] == wq.letters[s])
            .filter_map(|b| left_path(wq, s, q.arrow(b).source).map(|p| (b, p)))
            .collect();
        if cands.len() > 1 {
            return Err(Error::Construction(format!("arrow {} has several matching Q*-arrows", q.arrow(a).name)));
        }
        if let Some((b, p)) = cands.into_iter().next() {
            let mut cyc = p;
            cyc.extend([b, a]);
            terms.push((Rat::one(), Path::from_arrows(q, &cyc)?));
        }
    }
    for b in wq.arrows_of_kind(ArrowKind::QStar) {
        let (t, r) = (q.arrow(b).source, q.arrow(b).target);
        // a: s -> t of the same base arrow, with s of the type of r and s ≤ r.
        let cands: Vec<(usize, Vec<usize>)> = wq
            .arrows_of_kind(ArrowKind::Q)
            .into_iter()
            .filter(|&a| base(a) == base(b) && q.arrow(a).target == t)
            .filter(|&a| wq.letters[q.arrow(a).source] == wq.letters[r])
            .filter_map(|a| left_path(wq, r, q.arrow(a).source).map(|p| (a, p)))
            .collect();
        if cands.len() > 1 {
            return Err(Error::Construction(format!("arrow {} has several matching Q-arrows", q.arrow(b).name)));
        }
        if let Some((a, p)) = cands.into_iter().next() {
            let mut cyc = p;
            cyc.extend([a, b]);
            terms.push((Rat::from_int(-1), Path::from_arrows(q, &cyc)?));
        }
    }
    let degrees = wq.degrees();
    for (_, p) in &terms {
        let d: u32 = p.arrows.iter().map(|&a| degrees[a]).sum();
        if d != 1 {
            return Err(Error::Construction(format!("potential term {} has degree {d}", p.render(q))));
        }
    }
    Ok(Potential { terms })
}

/// `∂_a W`: for each occurrence of `a` in a cycle, the rest of the cycle
/// starting right after `a`.
pub fn cyclic_derivative(q: &Quiver, w: &Potential, a: usize) -> PathVector {
    let ar = q.arrow(a);
    let mut out = PathVector::zero(ar.target, ar.source);
    for (c, p) in &w.terms {
        for k in 0..p.arrows.len() {
            if p.arrows[k] != a {
                continue;
            }
            let mut rest = p.arrows[k + 1..].to_vec();
            rest.extend_from_slice(&p.arrows[..k]);
            let path = if rest.is_empty() { Path::trivial(ar.target) } else { Path::from_arrows(q, &rest).unwrap() };
            out.add_term(c, path);
        }
    }
    out
}

/// `kQ̄_w / ⟨∂_a W⟩` graded by `Q*`-arrows.
pub fn jacobian_presentation(wq: &WordQuiver, w: &Potential) -> Result<Presentation> {
    let q = &wq.quiver;
    let degrees = wq.degrees();
    let mut rels = Vec::new();
    for a in 0..q.num_arrows() {
        let r = cyclic_derivative(q, w, a);
        if r.is_zero() {
            continue;
        }
        match r.homogeneous_degree(&degrees) {
            Some(Some(d)) if d + degrees[a] == 1 => rels.push(r),
            _ => {
                return Err(Error::Construction(format!(
                    "derivative by {} is not homogeneous of the expected degree",
                    q.arrow(a).name
                )))
            }
        }
    }
    Presentation::new(q.clone(), rels)?.with_degrees(degrees)
}

/// Dictionary between vertices of `R_{w'}` and pairs `(i, t)`.
#[derive(Debug, Clone)]
pub struct GammaPresentation {
    pub presentation: Presentation,
    /// Pair at each vertex index (same order as the support data).
    pub pairs: Vec<(i64, usize)>,
    /// For each arrow: `Some(i)` for `q^i_t`, or the base arrow for `a_t`.
    pub arrow_info: Vec<GammaArrow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaArrow {
    /// `q^i_t : (i,t) -> (i,t+1)`.
    Up { i: i64, t: usize },
    /// `a_t : (i,t) -> (j,t)` for base arrow index `a`.
    Level { a: usize, t: usize },
}

/// `kR_{w'}/J_{w'}`, the algebra Γ.
pub fn build_gamma_presentation(sd: &SupportData) -> Result<GammaPresentation> {
    if sd.m < 1 {
        return Err(Error::Precondition("the construction needs m ≥ 1 (w must not be a subword of c)".into()));
    }
    let w = &sd.word;
    let q1 = &sd.q1;
    let mut r = Quiver::new();
    for (k, &(i, t)) in sd.pairs.iter().enumerate() {
        r.add_vertex(k as i64 + 1, Some(format!("({i},{t})")))?;
    }
    let v = |i: i64, t: usize| sd.pair_index(i, t);
    let mut info = Vec::new();
    let mut up: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    let mut level: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(i, t) in &sd.pairs {
        if let Some(target) = v(i, t + 1) {
            let id = r.add_arrow_idx(&format!("q{i}_{t}"), v(i, t).unwrap(), target)?;
            up.insert((i, t), id);
            info.push(GammaArrow::Up { i, t });
        }
    }
    for t in (1..=sd.m).rev() {
        for (a, ar) in q1.arrows().iter().enumerate() {
            let (i, j) = (q1.vertex_id(ar.source), q1.vertex_id(ar.target));
            if w.contains(i, t) && w.contains(j, t) {
                let id = r.add_arrow_idx(&format!("{}_{t}", ar.name), v(i, t).unwrap(), v(j, t).unwrap())?;
                level.insert((a, t), id);
                info.push(GammaArrow::Level { a, t });
            }
        }
    }
    let mut rels = Vec::new();
    for (&(a, t), &at) in &level {
        let ar = q1.arrow(a);
        let (i, j) = (q1.vertex_id(ar.source), q1.vertex_id(ar.target));
        let Some(&qj) = up.get(&(j, t)) else { continue };
        let mut rel = PathVector::from_path(Path::from_arrows(&r, &[at, qj])?);
        if let (Some(&qi), Some(&at1)) = (up.get(&(i, t)), level.get(&(a, t + 1))) {
            rel.add_term(&Rat::from_int(-1), Path::from_arrows(&r, &[qi, at1])?);
        } else if w.contains(i, t + 1) {
            continue;
        }
        rels.push(rel);
    }
    Ok(GammaPresentation {
        presentation: Presentation::new(r, rels)?,
        pairs: sd.pairs.clone(),
        arrow_info: info,
    })
}

/// Outcome of the three checks relating the degree-zero part of the Jacobian
/// algebra to `kR_{w'}/J_{w'}`.
#[derive(Debug, Clone, Serialize)]
pub struct Iso1Report {
    pub subquiver_matches: bool,
    pub relations_match: bool,
    pub dim_degree_zero: usize,
    pub dim_gamma: usize,
    pub dims_match: bool,
    pub end_of_word_rule_used: bool,
    pub notes: Vec<String>,
}

impl Iso1Report {
    pub fn passed(&self) -> bool {
        self.subquiver_matches && self.relations_match && self.dims_match
    }
}

/// Word-quiver data for a valid sortable word: `Q̄_w`, `W_w` and the graded
/// Jacobian presentation.
#[derive(Debug, Clone)]
pub struct JacobianData {
    pub full: WordQuiver,
    pub truncated: WordQuiver,
    pub potential: Potential,
    pub presentation: Presentation,
}

pub fn jacobian_data(q: &Quiver, sd: &SupportData) -> Result<JacobianData> {
    let full = build_word_quiver(q, &sd.word.flatten())?;
    let truncated = truncate(&full);
    let potential = build_potential(&truncated)?;
    let presentation = jacobian_presentation(&truncated, &potential)?;
    Ok(JacobianData { full, truncated, potential, presentation })
}

/// Maps each degree-zero arrow of `Q̄_w` to the corresponding arrow of `R_{w'}`,
/// reading positions as pairs `(i, t)`.
fn degree_zero_arrow_map(
    sd: &SupportData,
    wq: &WordQuiver,
    gamma: &GammaPresentation,
    notes: &mut Vec<String>,
) -> Option<BTreeMap<usize, usize>> {
    let q = &wq.quiver;
    let r = &gamma.presentation.quiver;
    // position -> gamma vertex index
    let mut vmap = BTreeMap::new();
    for (k, &(i, t)) in sd.pairs.iter().enumerate() {
        vmap.insert(sd.position(i, t), k);
    }
    let mut amap = BTreeMap::new();
    let mut ok = true;
    for a in 0..q.num_arrows() {
        if wq.kinds[a] == ArrowKind::QStar {
            continue;
        }
        let (s, t) = (vmap.get(&wq.position(q.arrow(a).source)), vmap.get(&wq.position(q.arrow(a).target)));
        let (Some(&s), Some(&t)) = (s, t) else {
            notes.push(format!("arrow {} has an endpoint outside w'", q.arrow(a).name));
            ok = false;
            continue;
        };
        let cands: Vec<usize> = r
            .arrows_between(s, t)
            .into_iter()
            .filter(|&b| match (gamma.arrow_info[b], wq.kinds[a]) {
                (GammaArrow::Up { .. }, ArrowKind::Left) => true,
                (GammaArrow::Level { a: base, .. }, ArrowKind::Q) => {
                    wq.placements[a].as_ref().map(|p| p.base_arrow) == Some(sd_base_index(sd, base))
                }
                _ => false,
            })
            .collect();
        if cands.len() != 1 {
            notes.push(format!("arrow {} has {} counterparts in R_w'", q.arrow(a).name, cands.len()));
            ok = false;
            continue;
        }
        amap.insert(a, cands[0]);
    }
    let images: std::collections::BTreeSet<usize> = amap.values().copied().collect();
    if images.len() != amap.len() || images.len() != r.num_arrows() {
        notes.push("degree-zero arrows are not in bijection with the arrows of R_w'".into());
        ok = false;
    }
    ok.then_some(amap)
}

/// Base quiver arrow index of an arrow of `Q^(1)` (the subquiver keeps arrow order
/// among arrows with both ends in the support).
fn sd_base_index(sd: &SupportData, a1: usize) -> usize {
    sd.q1_arrow_base[a1]
}

/// Runs the three checks of the correspondence between `Jac(Q̄_w, W_w)_0` and Γ.
pub fn verify_lemma_iso1(q: &Quiver, sd: &SupportData) -> Result<Iso1Report> {
    verify_lemma_iso1_capped(q, sd, DEFAULT_LENGTH_CAP)
}

/// As [`verify_lemma_iso1`] with an explicit length cap for the Gröbner computations.
pub fn verify_lemma_iso1_capped(q: &Quiver, sd: &SupportData, cap: usize) -> Result<Iso1Report> {
    let jd = jacobian_data(q, sd)?;
    let gamma = build_gamma_presentation(sd)?;
    let wq = &jd.truncated;
    let mut notes = Vec::new();
    let amap = degree_zero_arrow_map(sd, wq, &gamma, &mut notes);
    let subquiver_matches = amap.is_some();

    let mut relations_match = false;
    if let Some(amap) = &amap {
        let r = &gamma.presentation.quiver;
        let mut mapped = Vec::new();
        for b in wq.arrows_of_kind(ArrowKind::QStar) {
            let d = cyclic_derivative(&wq.quiver, &jd.potential, b);
            if d.is_zero() {
                continue;
            }
            let mut terms = Vec::new();
            for (p, c) in d.terms() {
                let arrows: Option<Vec<usize>> = p.arrows.iter().map(|x| amap.get(x).copied()).collect();
                if let Some(path) = arrows.and_then(|xs| Path::from_arrows(r, &xs).ok()) {
                    terms.push((c.clone(), path));
                }
            }
            if terms.len() == d.num_terms() {
                mapped.push(PathVector::from_terms(terms)?);
            } else {
                notes.push(format!("derivative by {} does not map into R_w'", wq.quiver.arrow(b).name));
            }
        }
        let gens = &gamma.presentation.relations;
        let proportional = |x: &PathVector, y: &PathVector| {
            x.num_terms() == y.num_terms() && {
                let (p0, c0) = x.leading().unwrap();
                let ratio = &y.coefficient(p0) / c0;
                !ratio.is_zero() && x.terms().all(|(p, c)| y.coefficient(p) == &ratio * c)
            }
        };
        relations_match = mapped.len() == gens.len()
            && mapped.iter().all(|x| gens.iter().filter(|y| proportional(x, y)).count() == 1)
            && gens.iter().all(|y| mapped.iter().filter(|x| proportional(x, y)).count() == 1);
        if !relations_match {
            notes.push("derivatives by Q*-arrows do not match the generators of J_w' up to scaling".into());
        }
    }

    let jac = QuotientBasis::with_cap(&jd.presentation, cap)?;
    let dim_degree_zero = jac.homogeneous_component(0)?.len();
    let dim_gamma = QuotientBasis::with_cap(&gamma.presentation, cap)?.dim();
    Ok(Iso1Report {
        subquiver_matches,
        relations_match,
        dim_degree_zero,
        dim_gamma,
        dims_match: dim_degree_zero == dim_gamma,
        end_of_word_rule_used: jd.full.used_end_of_word(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{validate_cocsortable, SortableWord};
    use crate::fixtures;

    fn example() -> (Quiver, SupportData) {
        let q = fixtures::example_quiver();
        let sd = validate_cocsortable(&q, &fixtures::example_word()).unwrap();
        (q, sd)
    }

    #[test]
    fn example_truncated_quiver_and_potential() {
        let (q, sd) = example();
        let jd = jacobian_data(&q, &sd).unwrap();
        assert_eq!(jd.full.quiver.num_vertices(), 9);
        let wq = jd.truncated.rename_arrows(&fixtures::example_word_quiver_names()).unwrap();
        assert_eq!(wq.quiver.num_vertices(), 6);
        assert_eq!(wq.quiver.num_arrows(), 11);
        let mut names: Vec<&str> = wq.quiver.arrows().iter().map(|a| a.name.as_str()).collect();
        names.sort_unstable();
        assert_eq!(names, vec!["a", "b", "c", "d", "e", "f", "g", "h", "p", "q", "r"]);
        let mut qstar: Vec<String> =
            wq.arrows_of_kind(ArrowKind::QStar).iter().map(|&a| wq.quiver.arrow(a).name.clone()).collect();
        qstar.sort();
        assert_eq!(qstar, vec!["a", "b", "d", "e"]);

        let w = build_potential(&wq).unwrap();
        let got = w.normalized_terms(&wq.quiver);
        // least rotations of caq, fbp, ecp, gdr, her
        let expected: Vec<(Rat, Vec<String>)> = vec![(1, "aqc"), (1, "bpf"), (-1, "cpe"), (1, "drg"), (1, "erh")]
            .into_iter()
            .map(|(c, s)| (Rat::from_int(c), s.chars().map(String::from).collect()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn derivatives() {
        let (q, sd) = example();
        let jd = jacobian_data(&q, &sd).unwrap();
        let wq = jd.truncated.rename_arrows(&fixtures::example_word_quiver_names()).unwrap();
        let w = build_potential(&wq).unwrap();
        let d = |n: &str| cyclic_derivative(&wq.quiver, &w, wq.quiver.arrow_by_name(n).unwrap()).render(&wq.quiver);
        assert_eq!(d("q"), "ca");
        assert_eq!(d("r"), "gd + he");
        assert_eq!(d("p"), "-ec + fb");
        assert_eq!(d("e"), "rh - cp");
        let p = jacobian_presentation(&wq, &w).unwrap();
        assert_eq!(p.relations.len(), 11);
    }

    #[test]
    fn gamma_presentation_of_example() {
        let (_, sd) = example();
        let g = build_gamma_presentation(&sd).unwrap();
        assert_eq!(g.presentation.quiver.num_vertices(), 6);
        assert_eq!(g.presentation.quiver.num_arrows(), 7);
        let mut rels = g.presentation.render_relations();
        rels.sort();
        assert_eq!(rels, vec!["q2_1·x_1", "q3_1·y_1 - y_2·q2_1", "q3_1·z_1", "q3_2·y_2"]);
    }

    #[test]
    fn lemma_iso1_on_example() {
        let (q, sd) = example();
        let rep = verify_lemma_iso1(&q, &sd).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn small_words() {
        let q = fixtures::a2();
        assert_eq!(build_word_quiver(&q, &[1]).unwrap().quiver.num_arrows(), 0);
        let wq = build_word_quiver(&q, &[2, 1, 2]).unwrap();
        assert_eq!(wq.quiver.num_vertices(), 3);
        assert_eq!(wq.arrows_of_kind(ArrowKind::Left).len(), 1);
        assert_eq!(truncate(&wq).quiver.num_vertices(), 1);
        let c = build_word_quiver(&q, &[1, 2]).unwrap();
        assert_eq!(truncate(&c).quiver.num_vertices(), 0);

        let sd = validate_cocsortable(&q, &SortableWord::parse("2 | 1 2").unwrap()).unwrap();
        let g = build_gamma_presentation(&sd).unwrap();
        assert!(g.presentation.relations.is_empty());
        assert!(verify_lemma_iso1(&q, &sd).unwrap().passed());
        let sd0 = validate_cocsortable(&q, &SortableWord::parse("1 2").unwrap()).unwrap();
        assert!(matches!(build_gamma_presentation(&sd0), Err(Error::Precondition(_))));
    }
}
