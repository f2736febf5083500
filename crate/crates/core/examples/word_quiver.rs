//! Builds the truncated word quiver, its potential and the presentation of Γ,
//! and prints the quiver in DOT form.

use qtilt::coxeter::validate_cocsortable;
use qtilt::dot::word_quiver_dot;
use qtilt::fixtures;
use qtilt::quiver::QuotientBasis;
use qtilt::word_quiver::{build_gamma_presentation, jacobian_data, verify_lemma_iso1};

fn main() -> qtilt::Result<()> {
    let q = fixtures::example_quiver();
    let sd = validate_cocsortable(&q, &fixtures::example_word())?;
    let jd = jacobian_data(&q, &sd)?;
    println!("W = {}", jd.potential.render(&jd.truncated.quiver));
    let gamma = build_gamma_presentation(&sd)?;
    println!("relations of Γ: {:?}", gamma.presentation.render_relations());
    println!("dim Γ = {}", QuotientBasis::new(&gamma.presentation)?.dim());
    let report = verify_lemma_iso1(&q, &sd)?;
    println!("degree-zero Jacobian part matches Γ: {}", report.passed());
    print!("{}", word_quiver_dot(&jd.truncated, "Qw"));
    Ok(())
}
