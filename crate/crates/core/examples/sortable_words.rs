//! Validates a few layer decompositions and samples random ones.

use qtilt::coxeter::{random_cocsortable_word, validate_cocsortable, SortableWord};
use qtilt::fixtures;
use rand::SeedableRng;

fn main() -> qtilt::Result<()> {
    let q = fixtures::example_quiver();
    for text in ["3 | 2 3 | 1 2 3 | 1 2 3", "2 3 | 1 2 3", "1 2 3 | 1 2 3 | 1 2 3"] {
        let w = SortableWord::parse(text)?;
        match validate_cocsortable(&q, &w) {
            Ok(sd) => println!("{text}: m = {}, pairs {:?}", sd.m, sd.pairs),
            Err(e) => println!("{text}: {e}"),
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        println!("sampled: {}", random_cocsortable_word(&fixtures::a3(), 3, &mut rng)?);
    }
    Ok(())
}
