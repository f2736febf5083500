//! Presents End_A(M) and checks that G identifies it with Γ.

use qtilt::coxeter::validate_cocsortable;
use qtilt::fixtures;
use qtilt::quiver::match_up_to_rescaling;
use qtilt::tilting::{build_g_and_verify, build_tilting_module, endomorphism_presentation};
use qtilt::torsion::{auslander_algebra, build_torsion_family};
use qtilt::word_quiver::build_gamma_presentation;

fn main() -> qtilt::Result<()> {
    let q = fixtures::example_quiver();
    let sd = validate_cocsortable(&q, &fixtures::example_word())?;
    let ad = auslander_algebra(&build_torsion_family(&sd)?)?;
    let m = build_tilting_module(&ad)?;
    let end = endomorphism_presentation(&ad, &m)?;
    println!("End relations: {:?}", end.presentation.render_relations());
    let expected = fixtures::example_endomorphism();
    println!("matches rh-cp, rg, qc, pf up to rescaling: {}", match_up_to_rescaling(&expected, &end.presentation)?.is_some());
    let report = build_g_and_verify(&ad, &m, &build_gamma_presentation(&sd)?, &end)?;
    println!("dim Γ = {}, dim End = {}, G iso: {}", report.dim_gamma, report.dim_end, report.verdict);
    Ok(())
}
