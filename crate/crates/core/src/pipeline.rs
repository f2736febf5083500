//! Batch driver behind the `qtilt` binary: reads a quiver and a word, runs the
//! stages a command asks for, and assembles the JSON report and DOT output.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coxeter::{
    normalize_numbering, random_cocsortable_word, validate_cocsortable, Renumbering, SortableWord, SupportData,
};
use crate::dot;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::quiver::{match_up_to_rescaling, parse_quiver, presentation_to_json, Quiver, QuotientBasis, DEFAULT_LENGTH_CAP};
use crate::tilting::{
    build_g_and_verify, build_tilting_module, certify_tilting, check_2apr_conditions, derived_nakayama_check,
    endomorphism_presentation,
};
use crate::torsion::{auslander_algebra, build_torsion_family, certify_torsion_class};
use crate::word_quiver::{build_gamma_presentation, build_word_quiver, jacobian_data, verify_lemma_iso1_capped};

/// Largest `m` drawn when no word is given and one is sampled from the seed.
pub const RANDOM_MAX_M: usize = 3;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    CheckWord,
    Gamma,
    Jacobian,
    Auslander,
    Tilt,
    VerifyMain,
    DemoSec5,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::CheckWord,
        Command::Gamma,
        Command::Jacobian,
        Command::Auslander,
        Command::Tilt,
        Command::VerifyMain,
        Command::DemoSec5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckWord => "check-word",
            Command::Gamma => "gamma",
            Command::Jacobian => "jacobian",
            Command::Auslander => "auslander",
            Command::Tilt => "tilt",
            Command::VerifyMain => "verify-main",
            Command::DemoSec5 => "demo-sec5",
        }
    }

    fn stage(self) -> usize {
        match self {
            Command::CheckWord => 0,
            Command::Gamma => 1,
            Command::Jacobian => 2,
            Command::Auslander => 3,
            Command::Tilt => 4,
            Command::VerifyMain | Command::DemoSec5 => 5,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub quiver: Option<PathBuf>,
    /// Layer string, or a path to a file holding one. When absent a word is
    /// sampled from `seed`.
    pub word: Option<String>,
    pub json: Option<PathBuf>,
    pub dot: Option<PathBuf>,
    pub cap: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig { command, quiver: None, word: None, json: None, dot: None, cap: DEFAULT_LENGTH_CAP, seed: DEFAULT_SEED }
    }
}

/// Parsed and validated inputs, after renumbering.
#[derive(Debug, Clone)]
pub struct Inputs {
    pub original_word: SortableWord,
    pub quiver: Quiver,
    pub word: SortableWord,
    pub renumbering: Option<Renumbering>,
    pub support: SupportData,
    pub word_source: String,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// Word text from a file: the first line that is not blank or a comment.
fn word_from_file(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("")
        .to_string()
}

pub fn parse_inputs(cfg: &RunConfig) -> Result<Inputs> {
    let (q, word, source) = if cfg.command == Command::DemoSec5 {
        (fixtures::example_quiver(), Some(fixtures::example_word()), "built-in example".to_string())
    } else {
        let path = cfg.quiver.as_ref().ok_or_else(|| Error::Input("--quiver is required".into()))?;
        let q = parse_quiver(&read(path)?)?;
        match &cfg.word {
            Some(w) if Path::new(w).is_file() => {
                (q, Some(SortableWord::parse(&word_from_file(&read(Path::new(w))?))?), format!("file {w}"))
            }
            Some(w) => (q, Some(SortableWord::parse(w)?), "argument".to_string()),
            None => (q, None, format!("random (seed {})", cfg.seed)),
        }
    };
    if q.has_loops() {
        return Err(Error::Validation("quiver has a loop".into()));
    }
    if !q.is_acyclic() {
        return Err(Error::Validation("quiver has an oriented cycle".into()));
    }
    let word = match word {
        Some(w) => w,
        None => {
            let probe = SortableWord::new(vec![vec![q.vertex_id(0)]])?;
            let (nq, _, ren) = normalize_numbering(&q, &probe)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let w = random_cocsortable_word(&nq, RANDOM_MAX_M, &mut rng)?;
            match ren {
                Some(r) => {
                    let back: BTreeMap<i64, i64> = r.map.iter().map(|(&a, &b)| (b, a)).collect();
                    w.relabel(&back)
                }
                None => w,
            }
        }
    };
    let (quiver, normalized, renumbering) = normalize_numbering(&q, &word)?;
    let support = validate_cocsortable(&quiver, &normalized)?;
    if support.m == 0 {
        return Err(Error::Precondition(
            "m = 0: the word is a subword of c and has no pairs (i,t) with t ≥ 1; m ≥ 1 is required".into(),
        ));
    }
    Ok(Inputs { original_word: word, quiver, word: normalized, renumbering, support, word_source: source })
}

/// Report, DOT text and verdicts of one run.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub dot: String,
    /// Named theorem-level checks in evaluation order.
    pub checks: Vec<(String, bool)>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report data serializes")
}

fn pair_label((i, t): (i64, usize)) -> String {
    format!("({i},{t})")
}

/// Runs the stages of `cfg.command` without touching the file system beyond
/// reading inputs.
pub fn run_pipeline(cfg: &RunConfig) -> Result<Outcome> {
    let inputs = parse_inputs(cfg)?;
    let stage = cfg.command.stage();
    let q = &inputs.quiver;
    let sd = &inputs.support;
    let mut report = serde_json::Map::new();
    let mut dims = serde_json::Map::new();
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut dots: Vec<String> = Vec::new();

    report.insert("command".into(), json!(cfg.command.name()));
    report.insert(
        "word".into(),
        json!({
            "input": inputs.original_word.to_string(),
            "normalized": inputs.word.to_string(),
            "source": inputs.word_source,
            "m": sd.m,
            "pairs": sd.pairs.iter().map(|&p| pair_label(p)).collect::<Vec<_>>(),
            "m_i": sd.m_i,
            "w_prime": inputs.word.prefix(),
        }),
    );
    report.insert("renumbering".into(), inputs.renumbering.as_ref().map_or(Value::Null, |r| to_value(&r.map)));
    dims.insert("len_w".into(), json!(sd.len_w));
    dims.insert("len_w_prime".into(), json!(sd.len_w_prime));

    if stage == 0 {
        let wq = build_word_quiver(q, &inputs.word.flatten())?;
        report.insert("end_of_word_rule_used".into(), json!(wq.used_end_of_word()));
        dots.push(dot::word_quiver_dot(&wq, "Q_w"));
        return Ok(finish(report, dims, checks, dots));
    }

    let gamma = build_gamma_presentation(sd)?;
    let dim_gamma = QuotientBasis::with_cap(&gamma.presentation, cfg.cap)?.dim();
    dims.insert("gamma".into(), json!(dim_gamma));
    let mut gp = presentation_to_json(&gamma.presentation);
    gp["rendered_relations"] = json!(gamma.presentation.render_relations());
    report.insert("gamma_presentation".into(), gp);
    if stage == 1 {
        dots.push(dot::presentation_dot(&gamma.presentation, "R_w'"));
        return Ok(finish(report, dims, checks, dots));
    }

    let jd = jacobian_data(q, sd)?;
    let iso1 = verify_lemma_iso1_capped(q, sd, cfg.cap)?;
    checks.push(("lemma_iso1".into(), iso1.passed()));
    dims.insert("jacobian_degree_zero".into(), json!(iso1.dim_degree_zero));
    let mut jp = presentation_to_json(&jd.presentation);
    jp["rendered_relations"] = json!(jd.presentation.render_relations());
    report.insert(
        "jacobian".into(),
        json!({
            "potential": jd.potential.render(&jd.truncated.quiver),
            "presentation": jp,
            "removed_positions": jd.truncated.removed,
            "lemma_iso1": to_value(&iso1),
        }),
    );
    if stage == 2 {
        dots.push(dot::word_quiver_dot(&jd.truncated, "Q_w truncated"));
        return Ok(finish(report, dims, checks, dots));
    }

    let tf = build_torsion_family(sd)?;
    let torsion = certify_torsion_class(&tf)?;
    checks.push(("torsion_class".into(), torsion.passed()));
    report.insert("torsion".into(), to_value(&torsion));
    let ad = auslander_algebra(&tf)?;
    let alg = &ad.algebra;
    dims.insert("A".into(), json!(alg.dim()));
    dims.insert("family".into(), to_value(&tf.dimension_vectors()));
    dims.insert(
        "A_projectives".into(),
        json!((0..alg.num_vertices()).map(|v| alg.projective(v).dim()).collect::<Vec<_>>()),
    );
    dims.insert(
        "A_injectives".into(),
        json!((0..alg.num_vertices()).map(|v| alg.injective(v).dim()).collect::<Vec<_>>()),
    );
    let mut ap = presentation_to_json(&ad.presentation);
    ap["rendered_relations"] = json!(ad.presentation.render_relations());
    ap["global_dimension"] = json!(ad.global_dimension);
    report.insert("A_presentation".into(), ap);
    checks.push(("gl_dim_A_at_most_2".into(), ad.global_dimension <= 2));
    if stage == 3 {
        dots.push(dot::ar_quiver_dot(&ad));
        return Ok(finish(report, dims, checks, dots));
    }

    let m = build_tilting_module(&ad)?;
    report.insert(
        "M_summands".into(),
        Value::Array(
            m.summands
                .iter()
                .zip(&m.pairs)
                .map(|(s, &(i, t))| json!({ "pair": pair_label((i, t)), "shift": t - 1, "dims": s.dims() }))
                .collect(),
        ),
    );
    let grid = check_2apr_conditions(&ad)?;
    checks.push(("two_apr_grid".into(), grid.passed()));
    report.insert("two_apr_grid".into(), to_value(&grid));
    let verdict = certify_tilting(&ad, &m)?;
    checks.push(("tilting".into(), verdict.passed()));
    report.insert("tilting".into(), to_value(&verdict));
    let mut nakayama = Vec::new();
    for &(i, t) in &ad.pairs {
        for n in 1..t {
            nakayama.push(derived_nakayama_check(&ad, (i, t), n)?);
        }
    }
    checks.push(("nakayama_agreement".into(), nakayama.iter().all(|c| c.agrees)));
    report.insert("nakayama".into(), to_value(&nakayama));
    if stage == 4 {
        dots.push(dot::ar_quiver_dot(&ad));
        return Ok(finish(report, dims, checks, dots));
    }

    let end = endomorphism_presentation(&ad, &m)?;
    dims.insert("end".into(), json!(end.dim()));
    let mut ep = presentation_to_json(&end.presentation);
    ep["rendered_relations"] = json!(end.presentation.render_relations());
    ep["global_dimension"] = json!(end.global_dimension);
    report.insert("end_presentation".into(), ep);
    checks.push(("gl_dim_end_at_most_2".into(), end.global_dimension.is_some_and(|d| d <= 2)));
    let iso = build_g_and_verify(&ad, &m, &gamma, &end)?;
    checks.push(("g_isomorphism".into(), iso.verdict));
    report.insert("iso".into(), to_value(&iso));

    if cfg.command == Command::DemoSec5 {
        let a_match = match_up_to_rescaling(&fixtures::example_auslander(), &ad.presentation)?.is_some();
        let end_match = match_up_to_rescaling(&fixtures::example_endomorphism(), &end.presentation)?.is_some();
        checks.push(("example_A_relations".into(), a_match));
        checks.push(("example_end_relations".into(), end_match));
    }

    dots.push(dot::word_quiver_dot(&jd.truncated, "Q_w truncated"));
    dots.push(dot::presentation_dot(&gamma.presentation, "R_w'"));
    dots.push(dot::ar_quiver_dot(&ad));
    Ok(finish(report, dims, checks, dots))
}

fn finish(
    mut report: serde_json::Map<String, Value>,
    dims: serde_json::Map<String, Value>,
    checks: Vec<(String, bool)>,
    dots: Vec<String>,
) -> Outcome {
    report.insert("dims".into(), Value::Object(dims));
    let verdict = checks.iter().all(|(_, ok)| *ok);
    report.insert("checks".into(), Value::Object(checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect()));
    report.insert("verdict".into(), json!(verdict));
    Outcome { report: Value::Object(report), dot: dots.concat(), checks }
}

/// Runs the pipeline, writes the requested artifacts and prints a summary.
/// Returns the process exit status.
pub fn run(cfg: &RunConfig) -> i32 {
    let outcome = match run_pipeline(cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qtilt {}: {e}", cfg.command);
            return e.exit_code();
        }
    };
    if let Err(e) = write_artifacts(cfg, &outcome) {
        eprintln!("qtilt {}: {e}", cfg.command);
        return e.exit_code();
    }
    for (name, ok) in &outcome.checks {
        println!("{name}: {}", if *ok { "pass" } else { "FAIL" });
    }
    println!("verdict: {}", if outcome.passed() { "pass" } else { "FAIL" });
    if cfg.json.is_none() {
        print!("{}", outcome.json());
    }
    outcome.exit_code()
}

pub fn write_artifacts(cfg: &RunConfig, outcome: &Outcome) -> Result<()> {
    if let Some(p) = &cfg.json {
        std::fs::write(p, outcome.json())?;
    }
    if let Some(p) = &cfg.dot {
        std::fs::write(p, &outcome.dot)?;
    }
    Ok(())
}
