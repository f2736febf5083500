use serde::Serialize;

use super::{radical_maps, TorsionFamily};
use crate::error::{Error, Result};
use crate::linalg::{Coordinates, Mat, Rat, Subspace};
use crate::quiver::{extract_relations, PathEvaluator, Presentation, Quiver};
use crate::rep::{Algebra, Morphism, Rep};

/// Arrow of the Auslander–Reiten quiver of the family with its multiplicity
/// `dim rad(X, Y) / rad²(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
}

/// `A = End(⊕ T_(i,t))` with vertex `k` standing for the `k`-th pair. A path
/// `u -> v` corresponds to a map `T_u -> T_v`; arrows are irreducible maps.
#[derive(Debug, Clone)]
pub struct AuslanderData {
    pub family: TorsionFamily,
    pub pairs: Vec<(i64, usize)>,
    pub members: Vec<Rep>,
    /// `homs[u][v]`: basis of `Hom(T_u, T_v)` over `kQ^(1)`.
    pub homs: Vec<Vec<Vec<Morphism>>>,
    coords: Vec<Vec<Coordinates>>,
    pub ar_arrows: Vec<ArArrow>,
    /// The map realizing each arrow of `presentation`.
    pub arrow_maps: Vec<Morphism>,
    /// Whether the arrow was read off the cokernel of a source map (mesh arrow).
    pub mesh_arrow: Vec<bool>,
    pub presentation: Presentation,
    pub algebra: Algebra,
    pub global_dimension: usize,
}

impl AuslanderData {
    pub fn num_vertices(&self) -> usize {
        self.members.len()
    }

    /// Coordinates of `f: T_u -> T_v` in the chosen basis.
    pub fn hom_coords(&self, u: usize, v: usize, f: &Morphism) -> Vec<Rat> {
        self.coords[u][v].of(&f.flatten()).expect("map lies in the Hom space")
    }

    pub fn hom_from_coords(&self, u: usize, v: usize, c: &[Rat]) -> Morphism {
        Morphism::linear_combination(c, &self.homs[u][v], &self.members[u], &self.members[v])
    }

    /// The representable `𝓜(−, T_x)` as an `A`-module, i.e. the projective at `x`.
    pub fn yoneda(&self, x: usize) -> Rep {
        let q = self.presentation.quiver.clone();
        let dims: Vec<usize> = (0..self.num_vertices()).map(|u| self.homs[u][x].len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let (u, v) = (arr.source, arr.target);
                let mut m = Mat::zeros(dims[u], dims[v]);
                for (col, f) in self.homs[v][x].iter().enumerate() {
                    let c = self.hom_coords(u, x, &f.after(&self.arrow_maps[a]));
                    for (row, val) in c.into_iter().enumerate() {
                        m[(row, col)] = val;
                    }
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    /// Coordinates (in `homs[u][x]`) spanning the maps `T_u -> T_x` that factor
    /// through `add` of the members in `through`.
    pub fn factoring_maps(&self, u: usize, x: usize, through: &[usize]) -> Subspace {
        let mut s = Subspace::new(self.homs[u][x].len());
        for &z in through {
            for f in &self.homs[u][z] {
                for g in &self.homs[z][x] {
                    s.insert(&self.hom_coords(u, x, &g.after(f)));
                }
            }
        }
        s
    }

    /// The map `𝓜(−, T_x) -> 𝓜(−, T_y)` given by composing with `alpha: T_x -> T_y`.
    pub fn yoneda_map(&self, x: usize, y: usize, alpha: &Morphism) -> Morphism {
        let maps = (0..self.num_vertices())
            .map(|u| {
                let mut m = Mat::zeros(self.homs[u][y].len(), self.homs[u][x].len());
                for (col, f) in self.homs[u][x].iter().enumerate() {
                    for (row, val) in self.hom_coords(u, y, &alpha.after(f)).into_iter().enumerate() {
                        m[(row, col)] = val;
                    }
                }
                m
            })
            .collect();
        Morphism { maps }
    }

    /// Total dimension of the endomorphism algebra.
    pub fn hom_dimension(&self) -> usize {
        self.homs.iter().flatten().map(Vec::len).sum()
    }
}

struct HomEvaluator<'a> {
    data: &'a AuslanderData,
    arrows: &'a [(usize, usize)],
}

impl PathEvaluator for HomEvaluator<'_> {
    fn unit(&self, v: usize) -> Vec<Rat> {
        self.data.hom_coords(v, v, &Morphism::identity(&self.data.members[v]))
    }

    fn extend(&self, s: usize, x: &[Rat], a: usize) -> Vec<Rat> {
        let (u, v) = self.arrows[a];
        let f = self.data.hom_from_coords(s, u, x);
        self.data.hom_coords(s, v, &self.data.arrow_maps[a].after(&f))
    }
}

/// Builds `A` from a certified family.
///
/// Arrows are irreducible maps chosen along a topological order of the
/// AR quiver: arrows into a module that ends a stored sequence are the
/// components of the cokernel of the source map assembled from the arrows
/// out of its translate, so the mesh relations hold on the nose; other arrows
/// are any complement of `rad²` in `rad`.
pub fn auslander_algebra(tf: &TorsionFamily) -> Result<AuslanderData> {
    let alg = &tf.algebra;
    let n = tf.len();
    let members = tf.modules.clone();
    let homs: Vec<Vec<Vec<Morphism>>> =
        (0..n).map(|u| (0..n).map(|v| alg.hom_basis(&members[u], &members[v])).collect()).collect();
    let coords: Vec<Vec<Coordinates>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let ambient: usize = members[u].dims.iter().zip(&members[v].dims).map(|(a, b)| a * b).sum();
                    let basis: Vec<Vec<Rat>> = homs[u][v].iter().map(Morphism::flatten).collect();
                    Coordinates::new(ambient, &basis)
                })
                .collect()
        })
        .collect();
    let mut data = AuslanderData {
        family: tf.clone(),
        pairs: tf.pairs().to_vec(),
        members,
        homs,
        coords,
        ar_arrows: Vec::new(),
        arrow_maps: Vec::new(),
        mesh_arrow: Vec::new(),
        presentation: Presentation::path_algebra(Quiver::new()),
        algebra: Algebra::new(&Presentation::path_algebra(Quiver::new()))?,
        global_dimension: 0,
    };

    // radical and its square, in Hom coordinates
    let rad: Vec<Vec<Vec<Morphism>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if u == v { radical_maps(alg, &data.members[u], &data.members[v]) } else { data.homs[u][v].clone() })
                .collect()
        })
        .collect();
    let mut rad2: Vec<Vec<Subspace>> = (0..n).map(|u| (0..n).map(|v| Subspace::new(data.homs[u][v].len())).collect()).collect();
    for u in 0..n {
        for w in 0..n {
            for v in 0..n {
                for f in &rad[u][w] {
                    for g in &rad[w][v] {
                        let c = data.hom_coords(u, v, &g.after(f));
                        rad2[u][v].insert(&c);
                    }
                }
            }
        }
    }
    let irr: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|v| rad[u][v].len() - rad2[u][v].dim()).collect()).collect();
    for u in 0..n {
        for v in 0..n {
            if irr[u][v] > 0 {
                data.ar_arrows.push(ArArrow { source: u, target: v, multiplicity: irr[u][v] });
            }
        }
    }

    let order = topological_order(&irr).ok_or_else(|| Error::Pipeline("AR quiver of the family has a cycle".into()))?;
    // chosen arrows: (source, target, map, from mesh)
    let mut chosen: Vec<(usize, usize, Morphism, bool)> = Vec::new();
    for &x in &order {
        let (i, s) = data.pairs[x];
        let translate = tf.index(i, s + 1);
        let incoming: usize = (0..n).map(|u| irr[u][x]).sum();
        match translate {
            Some(y) => {
                let out: Vec<&(usize, usize, Morphism, bool)> = chosen.iter().filter(|c| c.0 == y).collect();
                let expected: usize = irr[y].iter().sum();
                if out.len() != expected {
                    return Err(Error::Pipeline(format!("arrows out of T_({i},{}) not yet chosen", s + 1)));
                }
                let targets: Vec<&Rep> = out.iter().map(|c| &data.members[c.1]).collect();
                let e = alg.direct_sum(&targets);
                let comps: Vec<Morphism> = out.iter().map(|c| c.2.clone()).collect();
                let source_map = e.pair(&comps, &data.members[y].dims);
                let (coker, proj) = alg.cokernel(&e.rep, &source_map);
                let phi = alg.find_isomorphism(&coker, &data.members[x]).ok_or_else(|| {
                    Error::Pipeline(format!("cokernel of the source map at T_({i},{}) is not T_({i},{s})", s + 1))
                })?;
                if out.len() != incoming {
                    return Err(Error::Pipeline(format!("mesh ending at T_({i},{s}) has the wrong middle term")));
                }
                let new: Vec<(usize, usize, Morphism, bool)> = out
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (c.1, x, phi.after(&proj).after(&e.inclusion(k)), true))
                    .collect();
                chosen.extend(new);
            }
            None => {
                for u in 0..n {
                    if irr[u][x] == 0 {
                        continue;
                    }
                    let mut span = rad2[u][x].clone();
                    for f in &rad[u][x] {
                        if span.insert(&data.hom_coords(u, x, f)) {
                            chosen.push((u, x, f.clone(), false));
                        }
                    }
                }
            }
        }
    }
    chosen.sort_by_key(|c| (c.0, c.1));

    let mut q = Quiver::new();
    for (k, &(i, t)) in data.pairs.iter().enumerate() {
        q.add_vertex(k as i64 + 1, Some(format!("({i},{t})")))?;
    }
    let mut ends = Vec::new();
    for (idx, c) in chosen.iter().enumerate() {
        let parallel = chosen.iter().filter(|d| d.0 == c.0 && d.1 == c.1).count();
        let name = if parallel == 1 {
            format!("a{}_{}", c.0 + 1, c.1 + 1)
        } else {
            let k = chosen[..idx].iter().filter(|d| d.0 == c.0 && d.1 == c.1).count();
            format!("a{}_{}_{}", c.0 + 1, c.1 + 1, k + 1)
        };
        q.add_arrow_idx(&name, c.0, c.1)?;
        ends.push((c.0, c.1));
    }
    data.arrow_maps = chosen.iter().map(|c| c.2.clone()).collect();
    data.mesh_arrow = chosen.iter().map(|c| c.3).collect();
    let ev = HomEvaluator { data: &data, arrows: &ends };
    let presentation = extract_relations(&q, &ev, n + 1)?;
    let algebra = Algebra::new(&presentation)?;
    if algebra.dim() != data.hom_dimension() {
        return Err(Error::Pipeline(format!(
            "presentation of A has dimension {}, the endomorphism algebra {}",
            algebra.dim(),
            data.hom_dimension()
        )));
    }
    let gl = algebra.global_dimension(3).unwrap_or(usize::MAX);
    if gl > 2 {
        return Err(Error::TheoremViolation(format!("global dimension of A exceeds 2 (found {gl})")));
    }
    data.presentation = presentation;
    data.algebra = algebra;
    data.global_dimension = gl;
    Ok(data)
}

fn topological_order(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| (0..n).filter(|&u| adj[u][v] > 0).count()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut out = Vec::new();
    while let Some(u) = ready.first().copied() {
        ready.remove(0);
        out.push(u);
        for v in 0..n {
            if adj[u][v] > 0 {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                    ready.sort();
                }
            }
        }
    }
    (out.len() == n).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{validate_cocsortable, SortableWord};
    use crate::fixtures;
    use crate::torsion::build_torsion_family;

    fn example() -> AuslanderData {
        let sd = validate_cocsortable(&fixtures::example_quiver(), &fixtures::example_word()).unwrap();
        auslander_algebra(&build_torsion_family(&sd).unwrap()).unwrap()
    }

    #[test]
    fn example_auslander_algebra() {
        let a = example();
        assert_eq!(a.presentation.quiver.num_vertices(), 6);
        assert_eq!(a.presentation.quiver.num_arrows(), 8);
        assert_eq!(a.algebra.dim(), 26);
        assert_eq!(a.global_dimension, 2);
        assert_eq!(a.presentation.relations.len(), 3);
        assert!(a.presentation.relations.iter().all(|r| r.min_len() == 2 && r.max_len() == 2));
        let p: Vec<usize> = (0..6).map(|v| a.algebra.projective(v).dim()).collect();
        assert_eq!(p, vec![1, 2, 2, 5, 6, 10]);
        let i: Vec<usize> = (0..6).map(|v| a.algebra.injective(v).dim()).collect();
        assert_eq!(i, vec![4, 9, 6, 4, 2, 1]);
        let m = crate::quiver::match_up_to_rescaling(&a.presentation, &fixtures::example_auslander()).unwrap();
        assert!(m.is_some());
    }

    #[test]
    fn yoneda_modules_are_the_projectives() {
        let a = example();
        for x in 0..6 {
            let y = a.yoneda(x);
            a.algebra.check(&y).unwrap();
            assert!(a.algebra.is_isomorphic(&y, a.algebra.projective(x)));
        }
    }

    #[test]
    fn m_one_on_a3_is_the_path_algebra() {
        let sd = validate_cocsortable(&fixtures::a3(), &SortableWord::parse("2 3 | 1 2 3").unwrap()).unwrap();
        let a = auslander_algebra(&build_torsion_family(&sd).unwrap()).unwrap();
        assert_eq!(a.algebra.dim(), 3);
        assert!(a.presentation.relations.is_empty());
        assert_eq!(a.global_dimension, 1);
    }

    #[test]
    fn single_vertex_gives_the_field() {
        let sd = validate_cocsortable(&fixtures::a2(), &SortableWord::parse("2 | 1 2").unwrap()).unwrap();
        let a = auslander_algebra(&build_torsion_family(&sd).unwrap()).unwrap();
        assert_eq!(a.num_vertices(), 1);
        assert_eq!(a.presentation.quiver.num_arrows(), 0);
        assert_eq!(a.algebra.dim(), 1);
        assert_eq!(a.global_dimension, 0);
    }
}
