//! Built-in example data: the three-vertex quiver `1 -> 2 -> 3, 1 -> 3` with the
//! word `s3 s2 s3 s1 s2 s3 s1 s2 s3`, together with the presentations of the
//! algebras it produces, written with the customary single-letter arrow names.

use std::collections::BTreeMap;

use crate::coxeter::SortableWord;
use crate::error::Result;
use crate::linalg::Rat;
use crate::quiver::{parse_quiver, Path, PathVector, Presentation, Quiver};

pub const EXAMPLE_QUIVER: &str = "\
# 1 -> 2 -> 3 and 1 -> 3
vertex 1
vertex 2
vertex 3
arrow x 1 2
arrow y 2 3
arrow z 1 3
";

pub const EXAMPLE_WORD: &str = "3 | 2 3 | 1 2 3 | 1 2 3";

pub fn example_quiver() -> Quiver {
    parse_quiver(EXAMPLE_QUIVER).expect("fixture parses")
}

pub fn example_word() -> SortableWord {
    SortableWord::parse(EXAMPLE_WORD).expect("fixture parses")
}

/// Linear quiver `1 -> 2`.
pub fn a2() -> Quiver {
    Quiver::from_parts(&[1, 2], &[("a", 1, 2)]).unwrap()
}

/// Linear quiver `1 -> 2 -> 3`.
pub fn a3() -> Quiver {
    Quiver::from_parts(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap()
}

/// Builds a presentation from arrows `(name, source, target)` and relations
/// written right to left as `[(coefficient, "he"), ...]` with one-letter names.
pub fn presentation(vertices: &[i64], arrows: &[(&str, i64, i64)], relations: &[&[(i64, &str)]]) -> Result<Presentation> {
    let q = Quiver::from_parts(vertices, arrows)?;
    let mut rels = Vec::new();
    for r in relations {
        let mut terms = Vec::new();
        for &(c, word) in r.iter() {
            let ids: Vec<usize> =
                word.chars().rev().map(|ch| q.arrow_by_name(&ch.to_string()).expect("known arrow")).collect();
            terms.push((Rat::from_int(c), Path::from_arrows(&q, &ids)?));
        }
        rels.push(PathVector::from_terms(terms)?);
    }
    Presentation::new(q, rels)
}

/// The Auslander algebra of the example: arrows `a..h`, relations
/// `he − gd`, `fb − ec`, `ca`.
pub fn example_auslander() -> Presentation {
    presentation(
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
        &[&[(1, "he"), (-1, "gd")], &[(1, "fb"), (-1, "ec")], &[(1, "ca")]],
    )
    .unwrap()
}

/// The endomorphism algebra of the tilting module, vertices numbered like the
/// pairs `(3,3), (2,2), (3,2), (1,1), (2,1), (3,1)`; relations `rh − cp`, `rg`, `qc`, `pf`.
pub fn example_endomorphism() -> Presentation {
    presentation(
        &[1, 2, 3, 4, 5, 6],
        &[
            ("p", 5, 2),
            ("q", 3, 1),
            ("r", 6, 3),
            ("c", 2, 3),
            ("f", 4, 5),
            ("g", 4, 6),
            ("h", 5, 6),
        ],
        &[&[(1, "rh"), (-1, "cp")], &[(1, "rg")], &[(1, "qc")], &[(1, "pf")]],
    )
    .unwrap()
}

/// Customary names of the arrows of the truncated word quiver, keyed by the
/// generated names.
pub fn example_word_quiver_names() -> BTreeMap<String, String> {
    [
        ("y*_1_2", "a"),
        ("x*_2_4", "b"),
        ("y_2_3", "c"),
        ("z*_3_4", "d"),
        ("y*_3_5", "e"),
        ("x_4_5", "f"),
        ("z_4_6", "g"),
        ("y_5_6", "h"),
        ("l_5_2", "p"),
        ("l_3_1", "q"),
        ("l_6_3", "r"),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect()
}

/// The oriented three-cycle `1 -> 3 -> 2 -> 1` with the zero relation `ab`.
pub fn three_cycle() -> Presentation {
    presentation(&[1, 2, 3], &[("a", 2, 1), ("b", 3, 2), ("c", 1, 3)], &[&[(1, "ab")]]).unwrap()
}
