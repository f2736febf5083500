use serde::Serialize;

use super::{arrow_map_of_injectives, induced_morphism, TiltingModule};
use crate::error::{Error, Result};
use crate::linalg::{Coordinates, Rat, Subspace};
use crate::quiver::{extract_relations, PathEvaluator, Presentation, QuotientBasis, Quiver};
use crate::rep::{Algebra, Morphism, Rep};
use crate::torsion::{radical_maps, AuslanderData};
use crate::word_quiver::{GammaArrow, GammaPresentation};

/// `End(⊕ X_u)` for pairwise non-isomorphic indecomposables `X_u`, with a
/// path `u -> v` standing for a map `X_u -> X_v`.
#[derive(Debug, Clone)]
pub struct EndomorphismData {
    pub labels: Vec<(i64, usize)>,
    pub modules: Vec<Rep>,
    pub homs: Vec<Vec<Vec<Morphism>>>,
    coords: Vec<Vec<Coordinates>>,
    pub arrow_maps: Vec<Morphism>,
    pub presentation: Presentation,
    pub algebra: Algebra,
    pub global_dimension: Option<usize>,
}

impl EndomorphismData {
    pub fn num_vertices(&self) -> usize {
        self.modules.len()
    }

    pub fn dim(&self) -> usize {
        self.homs.iter().flatten().map(Vec::len).sum()
    }

    pub fn coords(&self, u: usize, v: usize, f: &Morphism) -> Vec<Rat> {
        self.coords[u][v].of(&f.flatten()).expect("map lies in the Hom space")
    }

    fn from_coords(&self, u: usize, v: usize, c: &[Rat]) -> Morphism {
        Morphism::linear_combination(c, &self.homs[u][v], &self.modules[u], &self.modules[v])
    }
}

struct Evaluator<'a> {
    data: &'a EndomorphismData,
    ends: Vec<(usize, usize)>,
}

impl PathEvaluator for Evaluator<'_> {
    fn unit(&self, v: usize) -> Vec<Rat> {
        self.data.coords(v, v, &Morphism::identity(&self.data.modules[v]))
    }

    fn extend(&self, s: usize, x: &[Rat], a: usize) -> Vec<Rat> {
        let (u, v) = self.ends[a];
        let f = self.data.from_coords(s, u, x);
        self.data.coords(s, v, &self.data.arrow_maps[a].after(&f))
    }
}

/// Basic presentation of `End(⊕ modules)` over `alg`: arrows are a complement
/// of `rad²` in `rad` between each pair of summands.
pub fn endomorphism_data(alg: &Algebra, modules: Vec<Rep>, labels: Vec<(i64, usize)>) -> Result<EndomorphismData> {
    let n = modules.len();
    let homs: Vec<Vec<Vec<Morphism>>> =
        (0..n).map(|u| (0..n).map(|v| alg.hom_basis(&modules[u], &modules[v])).collect()).collect();
    let coords = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let ambient: usize = modules[u].dims.iter().zip(&modules[v].dims).map(|(a, b)| a * b).sum();
                    let basis: Vec<Vec<Rat>> = homs[u][v].iter().map(Morphism::flatten).collect();
                    Coordinates::new(ambient, &basis)
                })
                .collect()
        })
        .collect();
    let mut data = EndomorphismData {
        labels,
        modules,
        homs,
        coords,
        arrow_maps: Vec::new(),
        presentation: Presentation::path_algebra(Quiver::new()),
        algebra: Algebra::new(&Presentation::path_algebra(Quiver::new()))?,
        global_dimension: None,
    };
    let rad: Vec<Vec<Vec<Morphism>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        radical_maps(alg, &data.modules[u], &data.modules[v])
                    } else {
                        data.homs[u][v].clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut q = Quiver::new();
    for (k, &(i, t)) in data.labels.iter().enumerate() {
        q.add_vertex(k as i64 + 1, Some(format!("({i},{t})")))?;
    }
    let mut ends = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let mut span = Subspace::new(data.homs[u][v].len());
            for w in 0..n {
                for f in &rad[u][w] {
                    for g in &rad[w][v] {
                        span.insert(&data.coords(u, v, &g.after(f)));
                    }
                }
            }
            let mut k = 0;
            for f in &rad[u][v] {
                if span.insert(&data.coords(u, v, f)) {
                    k += 1;
                    q.add_arrow_idx(&format!("a{}_{}_{k}", u + 1, v + 1), u, v)?;
                    data.arrow_maps.push(f.clone());
                    ends.push((u, v));
                }
            }
        }
    }
    let ev = Evaluator { data: &data, ends };
    let presentation = extract_relations(&q, &ev, n + 1)?;
    let algebra = Algebra::new(&presentation)?;
    if algebra.dim() != data.dim() {
        return Err(Error::Pipeline(format!(
            "presentation has dimension {}, the endomorphism algebra {}",
            algebra.dim(),
            data.dim()
        )));
    }
    data.global_dimension = algebra.global_dimension(4);
    data.presentation = presentation;
    data.algebra = algebra;
    Ok(data)
}

/// `End_A(M)` with vertex `k` standing for the summand `𝕊^{-t+1} P_(i,t)` of the `k`-th pair.
pub fn endomorphism_presentation(ad: &AuslanderData, m: &TiltingModule) -> Result<EndomorphismData> {
    endomorphism_data(&ad.algebra, m.summands.iter().map(|s| s.rep.clone()).collect(), m.pairs.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    Up,
    Level,
}

/// The image under `G` of an arrow of `R_{w'}`.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorInfo {
    pub arrow: String,
    pub kind: GeneratorKind,
    pub source: (i64, usize),
    pub target: (i64, usize),
    pub size: usize,
    pub nonzero: bool,
    /// Whether the map of injectives defining the square factors through the
    /// lower row's subcategory.
    pub homotopic_to_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub generators: Vec<GeneratorInfo>,
    pub relations_checked: usize,
    pub relations_hold: bool,
    /// Dimension of the subalgebra of `End_A(M)` generated by the images.
    pub generated_dim: usize,
    /// Whether the images of the standard words of Γ are linearly independent.
    pub images_independent: bool,
    pub dim_gamma: usize,
    pub dim_end: usize,
    /// Maps `(i,t) -> (j,s)` with `s < t` vanish and summands have trivial endomorphisms.
    pub small_sizes_trivial: bool,
    pub verdict: bool,
}

/// Defines `G: kR_{w'}/J_{w'} -> End_A(M)` on arrows, checks the relations, and
/// checks that `G` maps the standard-word basis of Γ bijectively onto a basis.
pub fn build_g_and_verify(
    ad: &AuslanderData,
    m: &TiltingModule,
    gamma: &GammaPresentation,
    end: &EndomorphismData,
) -> Result<IsoReport> {
    let tf = &ad.family;
    let r = &gamma.presentation.quiver;
    let n = m.len();
    if gamma.pairs != m.pairs {
        return Err(Error::Contract("Γ and M list the pairs in different orders".into()));
    }
    let mut generators = Vec::new();
    let mut images = Vec::new();
    for (b, info) in gamma.arrow_info.iter().enumerate() {
        let (u, v) = (r.arrow(b).source, r.arrow(b).target);
        let (fu, fv) = (&m.summands[u], &m.summands[v]);
        let (kind, alpha) = match *info {
            GammaArrow::Up { .. } => (GeneratorKind::Up, Morphism::identity(&tf.modules[fu.member])),
            GammaArrow::Level { a, .. } => (GeneratorKind::Level, arrow_map_of_injectives(&tf.algebra, a)),
        };
        let g = induced_morphism(ad, fu, fv, &alpha).ok_or_else(|| {
            Error::TheoremViolation(format!("square for {} does not induce a map", r.arrow(b).name))
        })?;
        let s = m.pairs[v].1;
        let through = tf.subcategory(s - 1);
        let trivial = ad.factoring_maps(fu.member, fv.member, &through).contains(&ad.hom_coords(fu.member, fv.member, &alpha));
        let length = usize::from(kind == GeneratorKind::Level);
        generators.push(GeneratorInfo {
            arrow: r.arrow(b).name.clone(),
            kind,
            source: m.pairs[u],
            target: m.pairs[v],
            size: s + length - m.pairs[u].1,
            nonzero: !g.is_zero(),
            homotopic_to_zero: trivial,
        });
        images.push(g);
    }

    let eval = |path: &crate::quiver::Path| -> Morphism {
        let mut f = Morphism::identity(&m.summands[path.source].rep);
        for &a in &path.arrows {
            f = images[a].after(&f);
        }
        f
    };

    let mut relations_hold = true;
    for rel in &gamma.presentation.relations {
        let mut acc = Morphism::zero(&m.summands[rel.source].rep, &m.summands[rel.target].rep);
        for (path, c) in rel.terms() {
            acc = acc.add(&eval(path).scale(c));
        }
        relations_hold &= acc.is_zero();
    }

    let qb = QuotientBasis::new(&gamma.presentation)?;
    let mut generated_dim = 0;
    let mut images_independent = true;
    for u in 0..n {
        for v in 0..n {
            let mut span = Subspace::new(end.homs[u][v].len());
            for w in qb.words_between(u, v) {
                let c = end.coords(u, v, &eval(qb.word(w)));
                images_independent &= span.insert(&c);
            }
            generated_dim += span.dim();
        }
    }

    let mut small_sizes_trivial = true;
    for u in 0..n {
        for v in 0..n {
            let (t, s) = (m.pairs[u].1, m.pairs[v].1);
            if s < t {
                small_sizes_trivial &= end.homs[u][v].is_empty();
            }
        }
        small_sizes_trivial &= end.homs[u][u].len() == 1;
    }

    let dim_end = end.dim();
    let verdict = relations_hold
        && images_independent
        && generated_dim == dim_end
        && qb.dim() == dim_end
        && generators.iter().all(|g| g.nonzero && !g.homotopic_to_zero && g.size == 1);
    Ok(IsoReport {
        generators,
        relations_checked: gamma.presentation.relations.len(),
        relations_hold,
        generated_dim,
        images_independent,
        dim_gamma: qb.dim(),
        dim_end,
        small_sizes_trivial,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{validate_cocsortable, SortableWord};
    use crate::fixtures;
    use crate::quiver::match_up_to_rescaling;
    use crate::tilting::build_tilting_module;
    use crate::torsion::{auslander_algebra, build_torsion_family};
    use crate::word_quiver::build_gamma_presentation;

    fn run(q: &Quiver, w: &str) -> (AuslanderData, TiltingModule, GammaPresentation, EndomorphismData) {
        let sd = validate_cocsortable(q, &SortableWord::parse(w).unwrap()).unwrap();
        let ad = auslander_algebra(&build_torsion_family(&sd).unwrap()).unwrap();
        let m = build_tilting_module(&ad).unwrap();
        let gamma = build_gamma_presentation(&sd).unwrap();
        let end = endomorphism_presentation(&ad, &m).unwrap();
        (ad, m, gamma, end)
    }

    #[test]
    fn example_endomorphism_algebra() {
        let (ad, m, gamma, end) = run(&fixtures::example_quiver(), fixtures::EXAMPLE_WORD);
        assert_eq!(end.presentation.quiver.num_vertices(), 6);
        assert_eq!(end.presentation.quiver.num_arrows(), 7);
        assert!(end.global_dimension.is_some_and(|d| d <= 2));
        assert!(match_up_to_rescaling(&end.presentation, &fixtures::example_endomorphism()).unwrap().is_some());
        let rep = build_g_and_verify(&ad, &m, &gamma, &end).unwrap();
        assert!(rep.verdict, "{rep:?}");
        assert_eq!(rep.generators.len(), 7);
        assert!(rep.small_sizes_trivial);
        assert_eq!(rep.dim_gamma, rep.dim_end);
    }

    #[test]
    fn m_one_endomorphisms_are_a() {
        let (ad, m, gamma, end) = run(&fixtures::a3(), "2 3 | 1 2 3");
        assert_eq!(end.dim(), ad.algebra.dim());
        assert!(match_up_to_rescaling(&end.presentation, &ad.presentation).unwrap().is_some());
        assert!(build_g_and_verify(&ad, &m, &gamma, &end).unwrap().verdict);
    }
}
