use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Path, PathVector, Presentation, Quiver, Vertex};
use crate::error::{Error, Result};
use crate::linalg::Rat;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Parses the line-oriented quiver format:
///
/// ```text
/// # comment
/// vertex 1 [label]
/// arrow a 1 2
/// ```
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut q = Quiver::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut col = 0;
        for part in content.split(' ') {
            if !part.trim().is_empty() {
                tokens.push((col + 1 + (part.len() - part.trim_start().len()), part.trim()));
            }
            col += part.len() + 1;
        }
        let Some(&(c0, kw)) = tokens.first() else { continue };
        match kw {
            "vertex" => {
                let &(c, id) = tokens.get(1).ok_or_else(|| syntax(line, c0, "vertex needs an id"))?;
                let id: i64 = id.parse().map_err(|_| syntax(line, c, format!("bad vertex id `{id}`")))?;
                let label = (tokens.len() > 2).then(|| tokens[2..].iter().map(|t| t.1).collect::<Vec<_>>().join(" "));
                q.add_vertex(id, label)?;
            }
            "arrow" => {
                if tokens.len() != 4 {
                    return Err(syntax(line, c0, "expected `arrow <name> <src> <tgt>`"));
                }
                let name = tokens[1].1;
                let mut ends = [0i64; 2];
                for (k, &(c, tok)) in tokens[2..4].iter().enumerate() {
                    ends[k] = tok.parse().map_err(|_| syntax(line, c, format!("bad vertex id `{tok}`")))?;
                }
                q.add_arrow(name, ends[0], ends[1])?;
            }
            other => return Err(syntax(line, c0, format!("unknown declaration `{other}`"))),
        }
    }
    Ok(q)
}

pub fn quiver_to_text(q: &Quiver) -> String {
    let mut out = String::new();
    for v in q.vertices() {
        match &v.label {
            Some(l) => out.push_str(&format!("vertex {} {}\n", v.id, l)),
            None => out.push_str(&format!("vertex {}\n", v.id)),
        }
    }
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.name, q.vertex_id(a.source), q.vertex_id(a.target)));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    name: String,
    source: i64,
    target: i64,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<ArrowJson>,
}

/// A term; `path` lists arrow names in traversal order (first arrow first).
#[derive(Serialize, Deserialize)]
struct TermJson {
    coefficient: Rat,
    path: Vec<String>,
    /// Vertex id of a trivial path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    quiver: QuiverJson,
    relations: Vec<Vec<TermJson>>,
    degrees: Option<BTreeMap<String, u32>>,
}

pub fn presentation_to_json(p: &Presentation) -> serde_json::Value {
    let q = &p.quiver;
    let doc = PresentationJson {
        quiver: QuiverJson {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson { name: a.name.clone(), source: q.vertex_id(a.source), target: q.vertex_id(a.target) })
                .collect(),
        },
        relations: p
            .relations
            .iter()
            .map(|r| {
                r.terms()
                    .rev()
                    .map(|(path, c)| TermJson {
                        coefficient: c.clone(),
                        path: path.arrows.iter().map(|&a| q.arrow(a).name.clone()).collect(),
                        vertex: path.is_trivial().then(|| q.vertex_id(path.source)),
                    })
                    .collect()
            })
            .collect(),
        degrees: p
            .degrees
            .as_ref()
            .map(|d| d.iter().enumerate().map(|(a, &x)| (q.arrow(a).name.clone(), x)).collect()),
    };
    serde_json::to_value(doc).expect("presentation serializes")
}

pub fn presentation_from_json(v: &serde_json::Value) -> Result<Presentation> {
    let doc: PresentationJson = serde_json::from_value(v.clone())?;
    let mut q = Quiver::new();
    for vx in doc.quiver.vertices {
        q.add_vertex(vx.id, vx.label)?;
    }
    for a in &doc.quiver.arrows {
        q.add_arrow(&a.name, a.source, a.target)?;
    }
    let mut relations = Vec::new();
    for r in doc.relations {
        let mut terms = Vec::new();
        for t in r {
            let path = if t.path.is_empty() {
                let id = t.vertex.ok_or_else(|| Error::Input("trivial path without vertex".into()))?;
                Path::trivial(q.index_of(id).ok_or_else(|| Error::Validation(format!("unknown vertex {id}")))?)
            } else {
                let ids = t
                    .path
                    .iter()
                    .map(|n| q.arrow_by_name(n).ok_or_else(|| Error::Validation(format!("unknown arrow `{n}`"))))
                    .collect::<Result<Vec<_>>>()?;
                Path::from_arrows(&q, &ids)?
            };
            terms.push((t.coefficient, path));
        }
        relations.push(PathVector::from_terms(terms)?);
    }
    let mut p = Presentation::new(q, relations)?;
    if let Some(d) = doc.degrees {
        let mut degrees = vec![0; p.quiver.num_arrows()];
        for (name, x) in d {
            let a = p.quiver.arrow_by_name(&name).ok_or_else(|| Error::Validation(format!("unknown arrow `{name}`")))?;
            degrees[a] = x;
        }
        p = p.with_degrees(degrees)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reports_positions() {
        let err = parse_quiver("vertex 1\nvertex 2\narow a 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, column: 1, .. }));
        let err = parse_quiver("vertex 1\n  vertex x\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 10, .. }), "{err:?}");
        let err = parse_quiver("vertex 1\narrow a 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn quiver_text_round_trip() {
        let text = "# sample\nvertex 1 source\nvertex 2\narrow a 1 2   # the arrow\narrow b 1 2\n";
        let q = parse_quiver(text).unwrap();
        assert_eq!(q.vertices()[0].label.as_deref(), Some("source"));
        assert_eq!(parse_quiver(&quiver_to_text(&q)).unwrap(), q);
    }

    #[test]
    fn presentation_json_round_trip() {
        let q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 2 3\n").unwrap();
        let mut r = PathVector::from_path(Path::from_arrows(&q, &[0, 1]).unwrap());
        r.add_term(&Rat::new(-3, 2), Path::from_arrows(&q, &[0, 2]).unwrap());
        let p = Presentation::new(q, vec![r]).unwrap().with_degrees(vec![0, 1, 1]).unwrap();
        let v = presentation_to_json(&p);
        assert_eq!(v["relations"][0][0]["coefficient"], "-3/2");
        assert_eq!(presentation_from_json(&v).unwrap(), p);
    }
}
