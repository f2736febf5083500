//! Coxeter words on a quiver: reducedness, co-c-sortable layer decompositions
//! and the support data derived from them.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Symmetric generalized Cartan matrix, indexed by vertex index.
pub fn cartan_gcm(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.num_vertices();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for ar in q.arrows() {
        if ar.source != ar.target {
            a[ar.source][ar.target] -= 1;
            a[ar.target][ar.source] -= 1;
        }
    }
    a
}

fn letter_indices(q: &Quiver, letters: &[i64]) -> Result<Vec<usize>> {
    letters
        .iter()
        .map(|&l| q.index_of(l).ok_or_else(|| Error::Validation(format!("letter {l} is not a vertex"))))
        .collect()
}

/// `w(v)` for `w = s_{u_1} … s_{u_k}` acting on root coordinates.
fn act(gcm: &[Vec<i64>], word: &[usize], v: &mut [BigInt]) {
    for &i in word.iter().rev() {
        let pairing: BigInt = (0..v.len()).map(|j| &v[j] * gcm[i][j]).sum();
        v[i] -= pairing;
    }
}

/// Reducedness via the root criterion: `w_{k-1}(α_{u_k})` must be a positive
/// root for every `k`.
pub fn is_reduced(q: &Quiver, letters: &[i64]) -> Result<bool> {
    if q.has_loops() {
        return Err(Error::Input("Coxeter group undefined for quivers with loops".into()));
    }
    let word = letter_indices(q, letters)?;
    let gcm = cartan_gcm(q);
    let n = q.num_vertices();
    for k in 0..word.len() {
        let mut v = vec![BigInt::zero(); n];
        v[word[k]] = BigInt::from(1);
        act(&gcm, &word[..k], &mut v);
        if v.iter().any(Signed::is_negative) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matrix of the group element in the root basis (columns are images of simple roots).
pub fn element_matrix(q: &Quiver, letters: &[i64]) -> Result<Vec<Vec<BigInt>>> {
    let word = letter_indices(q, letters)?;
    let gcm = cartan_gcm(q);
    let n = q.num_vertices();
    Ok((0..n)
        .map(|j| {
            let mut v = vec![BigInt::zero(); n];
            v[j] = BigInt::from(1);
            act(&gcm, &word, &mut v);
            v
        })
        .collect())
}

/// Layer decomposition `c^(m) | … | c^(1) | c^(0)`, leftmost layer first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SortableWord {
    /// Vertex ids, each layer sorted increasingly.
    pub layers: Vec<Vec<i64>>,
}

impl SortableWord {
    pub fn new(mut layers: Vec<Vec<i64>>) -> Result<SortableWord> {
        if layers.is_empty() {
            return Err(Error::Input("word has no layers".into()));
        }
        for (k, l) in layers.iter_mut().enumerate() {
            if l.is_empty() {
                return Err(Error::Input(format!("layer {} is empty", k + 1)));
            }
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Input(format!("layer {} repeats a vertex", k + 1)));
            }
        }
        Ok(SortableWord { layers })
    }

    /// Parses `3 | 2 3 | 1 2 3 | 1 2 3`.
    pub fn parse(s: &str) -> Result<SortableWord> {
        let mut layers = Vec::new();
        let mut offset = 0;
        for chunk in s.split('|') {
            let mut layer: Vec<i64> = Vec::new();
            let mut col = offset;
            for tok in chunk.split(' ') {
                let column = col + 1;
                col += tok.len() + 1;
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let v: i64 = tok.parse().map_err(|_| Error::Syntax {
                    line: 1,
                    column,
                    message: format!("expected a vertex id, found `{tok}`"),
                })?;
                if layer.contains(&v) {
                    return Err(Error::Syntax {
                        line: 1,
                        column,
                        message: format!("vertex {v} repeated inside a layer (missing `|`?)"),
                    });
                }
                layer.push(v);
            }
            if layer.is_empty() {
                return Err(Error::Syntax { line: 1, column: offset + 1, message: "empty layer".into() });
            }
            layers.push(layer);
            offset += chunk.len() + 1;
        }
        SortableWord::new(layers)
    }

    pub fn m(&self) -> usize {
        self.layers.len() - 1
    }

    /// `c^(t)` for `0 ≤ t ≤ m`.
    pub fn layer(&self, t: usize) -> &[i64] {
        &self.layers[self.m() - t]
    }

    pub fn contains(&self, i: i64, t: usize) -> bool {
        t <= self.m() && self.layer(t).contains(&i)
    }

    pub fn flatten(&self) -> Vec<i64> {
        self.layers.concat()
    }

    /// `w' = c^(m) … c^(1)`.
    pub fn prefix(&self) -> Vec<i64> {
        self.layers[..self.m()].concat()
    }

    pub fn relabel(&self, map: &BTreeMap<i64, i64>) -> SortableWord {
        SortableWord::new(self.layers.iter().map(|l| l.iter().map(|v| map[v]).collect()).collect()).unwrap()
    }
}

impl fmt::Display for SortableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.layers.iter().map(|l| l.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", parts.join(" | "))
    }
}

/// Data derived from a valid co-c-sortable word.
#[derive(Debug, Clone)]
pub struct SupportData {
    pub word: SortableWord,
    /// Full subquiver on the support of `c^(1)` (empty when `m = 0`).
    pub q1: Quiver,
    /// Index in the base quiver of each arrow of `q1`.
    pub q1_arrow_base: Vec<usize>,
    pub m: usize,
    /// `m_i` for each vertex id of `q1`.
    pub m_i: BTreeMap<i64, usize>,
    /// Last position (1-based) of each letter in `w`.
    pub l_i: BTreeMap<i64, usize>,
    pub len_w: usize,
    pub len_w_prime: usize,
    /// Pairs `(i, t)` with `t ≥ 1`, in the order of their positions in `w'`.
    pub pairs: Vec<(i64, usize)>,
}

impl SupportData {
    pub fn pair_index(&self, i: i64, t: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (i, t))
    }

    /// Position (1-based) in `w` of the letter `i` inside layer `c^(t)`.
    pub fn position(&self, i: i64, t: usize) -> usize {
        let w = &self.word;
        let before: usize = (t + 1..=w.m()).map(|s| w.layer(s).len()).sum();
        before + w.layer(t).iter().position(|&x| x == i).expect("letter in layer") + 1
    }
}

/// Vertex permutation applied to satisfy the orientation condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Renumbering {
    /// Original id -> new id.
    pub map: BTreeMap<i64, i64>,
}

/// Whether every arrow `i -> j` has `i < j`; returns the first offending arrow otherwise.
pub fn orientation_violation(q: &Quiver) -> Option<String> {
    q.arrows()
        .iter()
        .find(|a| q.vertex_id(a.source) >= q.vertex_id(a.target))
        .map(|a| format!("arrow {}: {} -> {}", a.name, q.vertex_id(a.source), q.vertex_id(a.target)))
}

/// Renumbers vertices along a topological order (stable on the original ids)
/// so that arrows increase, relabelling the word accordingly. Returns `None`
/// for the renumbering when the input already satisfies the condition.
pub fn normalize_numbering(q: &Quiver, w: &SortableWord) -> Result<(Quiver, SortableWord, Option<Renumbering>)> {
    if orientation_violation(q).is_none() {
        return Ok((q.clone(), w.clone(), None));
    }
    let mut ids: Vec<usize> = (0..q.num_vertices()).collect();
    ids.sort_by_key(|&v| q.vertex_id(v));
    let mut indeg = vec![0usize; q.num_vertices()];
    for a in q.arrows() {
        indeg[a.target] += 1;
    }
    let mut order = Vec::new();
    let mut done = vec![false; q.num_vertices()];
    while order.len() < ids.len() {
        let Some(&v) = ids.iter().find(|&&v| !done[v] && indeg[v] == 0) else {
            return Err(Error::Validation("quiver has an oriented cycle; no admissible numbering".into()));
        };
        done[v] = true;
        order.push(v);
        for a in q.arrows() {
            if a.source == v {
                indeg[a.target] -= 1;
            }
        }
    }
    let sorted: Vec<i64> = ids.iter().map(|&v| q.vertex_id(v)).collect();
    let map: BTreeMap<i64, i64> = order.iter().zip(&sorted).map(|(&v, &new)| (q.vertex_id(v), new)).collect();
    let mut nq = Quiver::new();
    let mut by_new: Vec<usize> = (0..q.num_vertices()).collect();
    by_new.sort_by_key(|&v| map[&q.vertex_id(v)]);
    for &v in &by_new {
        nq.add_vertex(map[&q.vertex_id(v)], q.vertices()[v].label.clone())?;
    }
    for a in q.arrows() {
        nq.add_arrow(&a.name, map[&q.vertex_id(a.source)], map[&q.vertex_id(a.target)])?;
    }
    for l in &w.layers {
        for v in l {
            if !map.contains_key(v) {
                return Err(Error::Validation(format!("letter {v} is not a vertex")));
            }
        }
    }
    Ok((nq, w.relabel(&map), Some(Renumbering { map })))
}

/// Checks the orientation condition, nesting of supports and reducedness, and
/// computes the support data.
pub fn validate_cocsortable(q: &Quiver, w: &SortableWord) -> Result<SupportData> {
    if let Some(a) = orientation_violation(q) {
        return Err(Error::Validation(format!("vertex numbering violates the orientation condition at {a}")));
    }
    for l in &w.layers {
        for &v in l {
            if q.index_of(v).is_none() {
                return Err(Error::Validation(format!("letter {v} is not a vertex")));
            }
        }
    }
    let m = w.m();
    for t in 0..m {
        let outer: BTreeSet<i64> = w.layer(t).iter().copied().collect();
        if let Some(v) = w.layer(t + 1).iter().find(|v| !outer.contains(v)) {
            return Err(Error::Validation(format!(
                "nesting violated: vertex {v} lies in layer c^({}) but not in c^({t})",
                t + 1
            )));
        }
    }
    let flat = w.flatten();
    if !is_reduced(q, &flat)? {
        return Err(Error::Validation(format!("flattened word {flat:?} is not reduced")));
    }
    let keep: Vec<usize> = if m >= 1 { w.layer(1).iter().map(|&v| q.index_of(v).unwrap()).collect() } else { Vec::new() };
    let q1 = q.full_subquiver(&keep).0;
    let q1_arrow_base: Vec<usize> = (0..q.num_arrows())
        .filter(|&a| keep.contains(&q.arrow(a).source) && keep.contains(&q.arrow(a).target))
        .collect();
    let mut m_i = BTreeMap::new();
    if m >= 1 {
        for &i in w.layer(1) {
            let mi = (1..=m).filter(|&t| w.contains(i, t)).max().unwrap();
            m_i.insert(i, mi);
        }
    }
    let mut l_i = BTreeMap::new();
    for (p, &v) in flat.iter().enumerate() {
        l_i.insert(v, p + 1);
    }
    let mut pairs = Vec::new();
    for t in (1..=m).rev() {
        for &i in w.layer(t) {
            pairs.push((i, t));
        }
    }
    Ok(SupportData {
        word: w.clone(),
        q1,
        q1_arrow_base,
        m,
        m_i,
        l_i,
        len_w: flat.len(),
        len_w_prime: w.prefix().len(),
        pairs,
    })
}

/// Splits an expression at its descents and checks nesting.
fn as_layers(letters: &[i64]) -> Option<SortableWord> {
    let mut layers: Vec<Vec<i64>> = vec![Vec::new()];
    for &x in letters {
        let cur = layers.last_mut().unwrap();
        if cur.last().is_some_and(|&y| y >= x) {
            layers.push(vec![x]);
        } else {
            cur.push(x);
        }
    }
    for k in 1..layers.len() {
        if !layers[k - 1].iter().all(|v| layers[k].contains(v)) {
            return None;
        }
    }
    SortableWord::new(layers).ok()
}

/// Breadth-first search over the commutation and braid orbit of a reduced
/// expression for one admitting a nested layer decomposition. Exponential in
/// general; intended for short words.
pub fn detect_cocsortable(q: &Quiver, letters: &[i64]) -> Result<Option<SortableWord>> {
    if !is_reduced(q, letters)? {
        return Err(Error::Precondition("word is not reduced".into()));
    }
    let gcm = cartan_gcm(q);
    let bond = |x: i64, y: i64| -> i64 { gcm[q.index_of(x).unwrap()][q.index_of(y).unwrap()] };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(letters.to_vec());
    queue.push_back(letters.to_vec());
    while let Some(w) = queue.pop_front() {
        if let Some(s) = as_layers(&w) {
            return Ok(Some(s));
        }
        let mut push = |v: Vec<i64>| {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        };
        for k in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[k], w[k + 1]);
            if x != y && bond(x, y) == 0 {
                let mut v = w.clone();
                v.swap(k, k + 1);
                push(v);
            }
            if k + 2 < w.len() && x != y && w[k + 2] == x && bond(x, y) == -1 {
                let mut v = w.clone();
                v[k] = y;
                v[k + 1] = x;
                v[k + 2] = y;
                push(v);
            }
        }
    }
    Ok(None)
}

/// Samples a co-c-sortable word with `1 ≤ m ≤ max_m` by drawing nested
/// random supports and keeping the first reduced candidate. The quiver must
/// already satisfy the orientation condition.
pub fn random_cocsortable_word<R: rand::Rng>(q: &Quiver, max_m: usize, rng: &mut R) -> Result<SortableWord> {
    const ATTEMPTS: usize = 500;
    if max_m == 0 || q.num_vertices() == 0 {
        return Err(Error::Input("need at least one vertex and max_m ≥ 1".into()));
    }
    let ids: Vec<i64> = {
        let mut v: Vec<i64> = q.vertices().iter().map(|v| v.id).collect();
        v.sort_unstable();
        v
    };
    for _ in 0..ATTEMPTS {
        let m = rng.gen_range(1..=max_m);
        let mut layers: Vec<Vec<i64>> = Vec::new();
        let mut support = ids.clone();
        for _ in 0..=m {
            let layer: Vec<i64> = support.iter().copied().filter(|_| rng.gen_bool(0.75)).collect();
            if layer.is_empty() {
                break;
            }
            support = layer.clone();
            layers.push(layer);
        }
        if layers.len() != m + 1 {
            continue;
        }
        layers.reverse();
        let w = SortableWord::new(layers)?;
        if validate_cocsortable(q, &w).is_ok() {
            return Ok(w);
        }
    }
    Err(Error::Input(format!("no co-c-sortable word with m ≤ {max_m} found after {ATTEMPTS} draws")))
}
