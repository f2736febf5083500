use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Rep;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat};
use crate::quiver::Quiver;

#[derive(Serialize, Deserialize)]
struct RepJson {
    /// Dimension per vertex id.
    dims: BTreeMap<i64, usize>,
    /// Matrix per arrow name, as rows; `dims[source] × dims[target]`.
    maps: BTreeMap<String, Vec<Vec<Rat>>>,
}

pub fn rep_to_json(q: &Quiver, x: &Rep) -> serde_json::Value {
    let doc = RepJson {
        dims: (0..q.num_vertices()).map(|v| (q.vertex_id(v), x.dims[v])).collect(),
        maps: q
            .arrows()
            .iter()
            .zip(&x.maps)
            .map(|(a, m)| (a.name.clone(), (0..m.rows()).map(|r| m.row(r).to_vec()).collect()))
            .collect(),
    };
    serde_json::to_value(doc).expect("representation serializes")
}

pub fn rep_from_json(q: &Quiver, v: &serde_json::Value) -> Result<Rep> {
    let doc: RepJson = serde_json::from_value(v.clone())?;
    let mut dims = vec![0; q.num_vertices()];
    for (id, d) in doc.dims {
        let i = q.index_of(id).ok_or_else(|| Error::Validation(format!("unknown vertex {id}")))?;
        dims[i] = d;
    }
    let mut maps = Vec::with_capacity(q.num_arrows());
    for a in q.arrows() {
        let (r, c) = (dims[a.source], dims[a.target]);
        let rows = doc.maps.get(&a.name).cloned().unwrap_or_default();
        let m = if rows.is_empty() {
            Mat::zeros(r, c)
        } else {
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Validation(format!("map of arrow `{}` should be {r}x{c}", a.name)));
            }
            Mat::from_rows(rows)
        };
        maps.push(m);
    }
    Ok(Rep { dims, maps })
}
