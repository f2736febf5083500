//! The family `T_(i,t)`, its torsion-class certificate and the Auslander algebra.

use qtilt::coxeter::validate_cocsortable;
use qtilt::dot::ar_quiver_dot;
use qtilt::fixtures;
use qtilt::torsion::{auslander_algebra, build_torsion_family, certify_torsion_class};

fn main() -> qtilt::Result<()> {
    let q = fixtures::example_quiver();
    let sd = validate_cocsortable(&q, &fixtures::example_word())?;
    let tf = build_torsion_family(&sd)?;
    for (p, d) in tf.pairs().iter().zip(tf.dimension_vectors()) {
        println!("T{p:?} = {d:?}");
    }
    println!("torsion class certified: {}", certify_torsion_class(&tf)?.passed());
    let ad = auslander_algebra(&tf)?;
    println!("dim A = {}, gl.dim A = {}", ad.algebra.dim(), ad.global_dimension);
    println!("relations: {:?}", ad.presentation.render_relations());
    print!("{}", ar_quiver_dot(&ad));
    Ok(())
}
