//! Graphviz output for word quivers, presentations and the AR quiver of a
//! torsion family.

use std::fmt::Write;

use crate::quiver::Presentation;
use crate::torsion::AuslanderData;
use crate::word_quiver::{ArrowKind, WordQuiver};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `Q_w` or `Q̄_w`. Vertices are word positions labelled `k:i`; `Q*`-arrows
/// (degree one) are dashed, the rest solid.
pub fn word_quiver_dot(wq: &WordQuiver, name: &str) -> String {
    let q = &wq.quiver;
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=RL;").unwrap();
    for v in 0..q.num_vertices() {
        let label = format!("{}:{}", wq.position(v), wq.letters[v]);
        writeln!(out, "  v{} [label={}];", wq.position(v), quote(&label)).unwrap();
    }
    for (a, arr) in q.arrows().iter().enumerate() {
        let style = match wq.kinds[a] {
            ArrowKind::QStar => "dashed",
            ArrowKind::Left | ArrowKind::Q => "solid",
        };
        writeln!(
            out,
            "  v{} -> v{} [label={}, style={style}];",
            wq.position(arr.source),
            wq.position(arr.target),
            quote(&arr.name)
        )
        .unwrap();
    }
    for r in &wq.removed {
        writeln!(out, "  // truncated: position {r}").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Quiver of a presentation with its relations as a comment block. Arrows of
/// positive degree are dashed when a grading is present.
pub fn presentation_dot(p: &Presentation, name: &str) -> String {
    let q = &p.quiver;
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in 0..q.num_vertices() {
        writeln!(out, "  v{} [label={}];", v, quote(&q.vertex_name(v))).unwrap();
    }
    for (a, arr) in q.arrows().iter().enumerate() {
        let dashed = p.degrees.as_ref().is_some_and(|d| d[a] > 0);
        let style = if dashed { "dashed" } else { "solid" };
        writeln!(out, "  v{} -> v{} [label={}, style={style}];", arr.source, arr.target, quote(&arr.name)).unwrap();
    }
    for r in p.render_relations() {
        writeln!(out, "  // relation: {r}").unwrap();
    }
    out.push_str("}\n");
    out
}

/// AR quiver of the family: nodes `(i,t)` with dimension vectors, irreducible
/// maps with their multiplicities, and the translation `(i,t-1) ⇢ (i,t)` dotted.
pub fn ar_quiver_dot(ad: &AuslanderData) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"AR\" {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    for (k, &(i, t)) in ad.pairs.iter().enumerate() {
        let dims: Vec<String> = ad.members[k].dims.iter().map(usize::to_string).collect();
        let label = format!("({i},{t})\\n[{}]", dims.join(","));
        writeln!(out, "  p{k} [label=\"{label}\"];").unwrap();
    }
    for arr in &ad.ar_arrows {
        if arr.multiplicity == 1 {
            writeln!(out, "  p{} -> p{};", arr.source, arr.target).unwrap();
        } else {
            writeln!(out, "  p{} -> p{} [label=\"x{}\"];", arr.source, arr.target, arr.multiplicity).unwrap();
        }
    }
    for (k, &(i, t)) in ad.pairs.iter().enumerate() {
        if let Some(prev) = ad.family.index(i, t.wrapping_sub(1)).filter(|_| t > 1) {
            writeln!(out, "  p{prev} -> p{k} [style=dotted, arrowhead=none, constraint=false];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::validate_cocsortable;
    use crate::fixtures;
    use crate::word_quiver::{build_gamma_presentation, jacobian_data};

    #[test]
    fn example_word_quiver_styles() {
        let q = fixtures::example_quiver();
        let sd = validate_cocsortable(&q, &fixtures::example_word()).unwrap();
        let jd = jacobian_data(&q, &sd).unwrap();
        let dot = word_quiver_dot(&jd.truncated, "Qw");
        let dashed = dot.matches("style=dashed").count();
        assert_eq!(dashed, jd.truncated.arrows_of_kind(ArrowKind::QStar).len());
        assert!(dot.starts_with("digraph \"Qw\" {"));
        let gamma = build_gamma_presentation(&sd).unwrap();
        let dot = presentation_dot(&gamma.presentation, "R");
        assert_eq!(dot.matches(" -> ").count(), gamma.presentation.quiver.num_arrows());
        assert!(!dot.contains("dashed"));
    }
}
