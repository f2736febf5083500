use proptest::prelude::*;
use qtilt::coxeter::{is_reduced, random_cocsortable_word, validate_cocsortable, SortableWord};
use qtilt::fixtures;
use qtilt::linalg::{Mat, Rat};
use qtilt::quiver::{parse_quiver, presentation_from_json, presentation_to_json, quiver_to_text, Quiver};
use qtilt::torsion::{auslander_algebra, build_torsion_family};
use qtilt::word_quiver::{build_gamma_presentation, jacobian_data};
use rand::SeedableRng;

fn rat() -> impl Strategy<Value = Rat> {
    (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rat::new(n, d))
}

fn quiver() -> impl Strategy<Value = Quiver> {
    (1usize..6).prop_flat_map(|n| {
        let arrows = prop::collection::vec((1..=n as i64, 1..=n as i64), 0..8);
        let labels = prop::collection::vec(prop::option::of("[a-z][a-z0-9]{0,4}( [a-z]{1,3})?"), n);
        (Just(n), arrows, labels).prop_map(|(n, arrows, labels)| {
            let mut q = Quiver::new();
            for (k, l) in labels.into_iter().enumerate().take(n) {
                q.add_vertex(k as i64 * 3 - 2, l).unwrap();
            }
            for (k, (s, t)) in arrows.into_iter().enumerate() {
                q.add_arrow(&format!("a{k}"), s * 3 - 5, t * 3 - 5).unwrap();
            }
            q
        })
    })
}

fn word() -> impl Strategy<Value = SortableWord> {
    prop::collection::vec(prop::collection::btree_set(-3i64..10, 1..5), 1..5)
        .prop_map(|ls| SortableWord::new(ls.into_iter().map(|s| s.into_iter().collect()).collect()).unwrap())
}

proptest! {
    #[test]
    fn rational_field_operations(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..6, data in prop::collection::vec(-3i64..4, 30)) {
        let m = Mat::from_vec(rows, cols, data[..rows * cols].iter().map(|&x| Rat::from_int(x)).collect());
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn quiver_text_round_trip(q in quiver()) {
        prop_assert_eq!(parse_quiver(&quiver_to_text(&q)).unwrap(), q);
    }

    #[test]
    fn word_text_round_trip(w in word()) {
        prop_assert_eq!(SortableWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn sampled_words_satisfy_the_support_invariants(seed in any::<u64>(), which in 0usize..3) {
        let q = [fixtures::a2(), fixtures::a3(), fixtures::example_quiver()][which].clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = random_cocsortable_word(&q, 3, &mut rng).unwrap();
        let sd = validate_cocsortable(&q, &w).unwrap();
        prop_assert!(is_reduced(&q, &w.flatten()).unwrap());
        prop_assert_eq!(sd.pairs.len(), sd.len_w - w.layer(0).len());
        prop_assert_eq!(sd.pairs.len(), sd.len_w_prime);
        for (&i, &mi) in &sd.m_i {
            prop_assert!((1..=sd.m).contains(&mi));
            prop_assert!(w.contains(i, mi) && !w.contains(i, mi + 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn presentation_json_round_trip(seed in any::<u64>(), which in 0usize..2) {
        let q = [fixtures::a3(), fixtures::example_quiver()][which].clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = random_cocsortable_word(&q, 3, &mut rng).unwrap();
        let sd = validate_cocsortable(&q, &w).unwrap();
        let gamma = build_gamma_presentation(&sd).unwrap().presentation;
        let jac = jacobian_data(&q, &sd).unwrap().presentation;
        let a = auslander_algebra(&build_torsion_family(&sd).unwrap()).unwrap().presentation;
        for p in [gamma, jac, a] {
            let back = presentation_from_json(&presentation_to_json(&p)).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
