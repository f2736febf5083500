//! Quivers, paths, presentations `kQ/I` and their quotient bases.

mod compare;
mod extract;
mod format;
mod groebner;
mod path;
mod presentation;

pub use compare::{match_up_to_rescaling, rescale, Rescaling};
pub use extract::{extract_relations, PathEvaluator};
pub use format::{parse_quiver, presentation_from_json, presentation_to_json, quiver_to_text};
pub use groebner::{QuotientBasis, Sparse, DEFAULT_LENGTH_CAP};
pub use path::{Path, PathVector};
pub use presentation::Presentation;

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Vertex {
    pub id: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    /// Index into [`Quiver::vertices`].
    pub source: usize,
    pub target: usize,
}

/// Finite directed multigraph. Vertices and arrows are addressed by index;
/// the user-facing vertex ids and arrow names are kept alongside.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    /// Quiver with vertices `ids` and arrows `(name, source id, target id)`.
    pub fn from_parts(ids: &[i64], arrows: &[(&str, i64, i64)]) -> Result<Quiver> {
        let mut q = Quiver::new();
        for &id in ids {
            q.add_vertex(id, None)?;
        }
        for &(name, s, t) in arrows {
            q.add_arrow(name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, id: i64, label: Option<String>) -> Result<usize> {
        if self.vertices.iter().any(|v| v.id == id) {
            return Err(Error::Validation(format!("duplicate vertex id {id}")));
        }
        self.vertices.push(Vertex { id, label });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source_id: i64, target_id: i64) -> Result<usize> {
        let s = self
            .index_of(source_id)
            .ok_or_else(|| Error::Validation(format!("arrow {name}: undeclared vertex {source_id}")))?;
        let t = self
            .index_of(target_id)
            .ok_or_else(|| Error::Validation(format!("arrow {name}: undeclared vertex {target_id}")))?;
        self.add_arrow_idx(name, s, t)
    }

    pub fn add_arrow_idx(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Validation(format!("duplicate arrow name {name}")));
        }
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::Validation(format!("invalid arrow name `{name}`")));
        }
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_id(&self, v: usize) -> i64 {
        self.vertices[v].id
    }

    pub fn index_of(&self, id: i64) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let vx = &self.vertices[v];
        match &vx.label {
            Some(l) => l.clone(),
            None => vx.id.to_string(),
        }
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    pub fn arrows_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == s && self.arrows[a].target == t).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    /// A topological order of the vertex indices, or `None` if there is an oriented cycle.
    /// Ties are broken by the original vertex order.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut done = vec![false; n];
        while order.len() < n {
            let next = (0..n).find(|&v| !done[v] && indeg[v] == 0)?;
            done[next] = true;
            order.push(next);
            for a in &self.arrows {
                if a.source == next {
                    indeg[a.target] -= 1;
                }
            }
        }
        Some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Reversed quiver; arrow names unchanged.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Full subquiver on the given vertex indices (in the given order), with
    /// the index map old -> new.
    pub fn full_subquiver(&self, keep: &[usize]) -> (Quiver, HashMap<usize, usize>) {
        let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut q = Quiver::new();
        for &v in keep {
            q.vertices.push(self.vertices[v].clone());
        }
        for a in &self.arrows {
            if let (Some(&s), Some(&t)) = (map.get(&a.source), map.get(&a.target)) {
                q.arrows.push(Arrow { name: a.name.clone(), source: s, target: t });
            }
        }
        (q, map)
    }

    /// Subquiver on all vertices keeping only the selected arrows.
    pub fn arrow_subquiver(&self, keep: &[usize]) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: keep.iter().map(|&a| self.arrows[a].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undeclared_endpoint_rejected() {
        let mut q = Quiver::new();
        q.add_vertex(1, None).unwrap();
        assert!(matches!(q.add_arrow("a", 1, 2), Err(Error::Validation(_))));
    }

    #[test]
    fn topological_order_detects_cycles() {
        let q = Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3), ("c", 3, 1)]).unwrap();
        assert!(q.topological_order().is_none());
        let q = Quiver::from_parts(&[3, 1, 2], &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        let ord: Vec<i64> = q.topological_order().unwrap().into_iter().map(|v| q.vertex_id(v)).collect();
        assert_eq!(ord, vec![1, 2, 3]);
    }

    #[test]
    fn parallel_arrows_and_loops_representable() {
        let q = Quiver::from_parts(&[1, 2], &[("a", 1, 2), ("b", 1, 2), ("l", 1, 1)]).unwrap();
        assert_eq!(q.arrows_between(0, 1).len(), 2);
        assert!(q.has_loops());
    }
}
