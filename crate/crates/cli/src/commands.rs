//! One function per verb. Each returns a [`Report`] carrying both the human
//! text and the `--json` form; domain failures that still produce a report
//! (an invalid diagram for `validate`, unmet hypotheses) set `ok = false`.

use std::fmt::Write as _;

use serde_json::{json, Value};
use trisect_core::diagram::DiagramError;
use trisect_core::moves::{
    orbit, orbit_genus2, word_to_diagram, word_to_torus, MoveError, OrbitGraph,
};
use trisect_core::theorem::{certify, Verdict};
use trisect_core::vertical::{FamilyMatch, VerticalError};
use trisect_core::{
    classify, lens_equiv, six_tuple, Equivalence, Execution, Int, InvariantVector, LensSpace,
    MoveWord, SixTuple, TorusDiagram,
};

use crate::document::{parse_decimal, render_document, Diagram};
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    Text,
    Dot,
}

fn int_json(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn invariant_json(i: &InvariantVector) -> Value {
    Value::Array(i.0.iter().map(int_json).collect())
}

/// Every problem with the diagram, one message per entry.
fn problems(d: &Diagram) -> Vec<String> {
    match d {
        Diagram::Torus(t) => match t.validate() {
            Ok(()) => Vec::new(),
            Err(v) => v.iter().map(|x| x.to_string()).collect(),
        },
        Diagram::Genus2 { diagram, sign } => {
            let mut out: Vec<String> = match diagram.validate() {
                Ok(()) => Vec::new(),
                Err(v) => v.iter().map(|x| x.to_string()).collect(),
            };
            if let Some(actual) = diagram.sign() {
                if actual != *sign {
                    out.push(format!(
                        "SignMismatch: sign field is {sign} but a1.b1 = {actual}"
                    ));
                }
            }
            if out.is_empty() {
                if let Err(e) = diagram.surgery_project() {
                    out.push(e.to_string());
                }
            }
            out
        }
    }
}

fn require_valid(d: &Diagram) -> Result<(), CliError> {
    let p = problems(d);
    if p.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invalid(p.join("\n")))
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

/// The surgered-torus diagram: the diagram itself, or the projection of a
/// genus-2 diagram.
fn torus_view(d: &Diagram) -> Result<TorusDiagram, CliError> {
    require_valid(d)?;
    match d {
        Diagram::Torus(t) => Ok(t.clone()),
        Diagram::Genus2 { diagram, .. } => diagram.surgery_project().map_err(domain),
    }
}

pub fn validate(d: &Diagram) -> Report {
    let p = problems(d);
    let text = if p.is_empty() {
        "valid\n".to_string()
    } else {
        p.iter().map(|l| format!("{l}\n")).collect()
    };
    Report {
        text,
        json: json!({"valid": p.is_empty(), "errors": p}),
        ok: p.is_empty(),
    }
}

pub fn invariant(d: &Diagram) -> Result<Report, CliError> {
    require_valid(d)?;
    let i = match d {
        Diagram::Torus(t) => t.invariant(),
        Diagram::Genus2 { diagram, .. } => diagram.invariant(),
    }
    .map_err(domain)?;
    Ok(Report::ok(
        format!("I = {i}\n"),
        json!({"invariant": invariant_json(&i)}),
    ))
}

/// Applies `word` and returns the rendered document.
pub fn apply_word(d: &Diagram, word: &str) -> Result<String, CliError> {
    let word: MoveWord = word.parse().map_err(|e| CliError::Parse(format!("{e}")))?;
    require_valid(d)?;
    let out = match d {
        Diagram::Torus(t) => Diagram::Torus(word_to_torus(t, &word).map_err(|e| match e {
            MoveError::Sigma1RequiresGenus2 => CliError::Invalid(e.to_string()),
            MoveError::Diagram(inner) => domain(inner),
        })?),
        Diagram::Genus2 { diagram, sign } => Diagram::Genus2 {
            diagram: word_to_diagram(diagram, &word).map_err(domain)?,
            sign: *sign,
        },
    };
    Ok(render_document(&out))
}

fn six_tuple_json(t: &SixTuple) -> Value {
    json!({
        "aa": t.aa.to_string(),
        "bb": t.bb.to_string(),
        "cc": t.cc.to_string(),
        "ba": t.ba.to_string(),
        "cb": t.cb.to_string(),
        "ac": t.ac.to_string(),
    })
}

fn vertical_err(e: VerticalError) -> CliError {
    domain(e)
}

pub fn six_tuple_report(d: &Diagram) -> Result<Report, CliError> {
    let t = six_tuple(&torus_view(d)?).map_err(vertical_err)?;
    Ok(Report::ok(
        t.to_string(),
        json!({"six_tuple": six_tuple_json(&t)}),
    ))
}

fn family_json(m: &FamilyMatch) -> Value {
    json!({
        "family": m.family,
        "q": m.q.as_ref().map(int_json),
        "epsilon": m.epsilon,
        "epsilon_determined": m.epsilon_determined,
        "reflected": m.reflected,
        "rotations": m.rotations,
    })
}

pub fn classify_report(d: &Diagram, mode: Equivalence) -> Result<Report, CliError> {
    let t = six_tuple(&torus_view(d)?).map_err(vertical_err)?;
    Ok(match classify(&t, mode) {
        Some(m) => {
            let mut text = format!("{m}\n");
            let _ = writeln!(
                text,
                "symmetry: reflected={} rotations={}",
                m.reflected, m.rotations
            );
            if !m.epsilon_determined {
                text.push_str(
                    "note: the sign of ε is not determined up to unoriented equivalence\n",
                );
            }
            Report::ok(text, json!({"match": family_json(&m)}))
        }
        None => Report {
            text: "no family matched\n".to_string(),
            json: json!({"match": null}),
            ok: false,
        },
    })
}

pub fn check_theorem(d: &Diagram) -> Result<Report, CliError> {
    let t = torus_view(d)?;
    let c = certify(&t).map_err(|e: DiagramError| domain(e))?;
    let h = &c.hypotheses;
    let mut text = String::new();
    let _ = writeln!(text, "hypothesis mu1 nontrivial: {}", h.mu_nontrivial);
    let _ = writeln!(
        text,
        "hypothesis b2 not parallel to c2: {}",
        h.b2_c2_not_parallel
    );
    let _ = writeln!(
        text,
        "hypothesis a2 not parallel to mu1^-1(c2): {}",
        h.a2_muinv_c2_not_parallel
    );
    let labels = ["I(V)", "I(sigma2 V)", "I(sigma2^2 V)"];
    for (label, i) in labels.iter().zip(&c.invariants) {
        let _ = writeln!(text, "{label} = {i}");
    }
    let verdict = match c.verdict {
        Verdict::Certified => "three pairwise-inequivalent diagrams certified".to_string(),
        Verdict::HypothesisFailed(h) => format!("hypotheses not met: {h}"),
        Verdict::NotSeparated { first, second } => {
            format!("not certified: diagrams {first} and {second} are not separated")
        }
    };
    let _ = writeln!(text, "verdict: {verdict}");
    let certified = c.verdict == Verdict::Certified;
    let json = json!({
        "hypotheses": {
            "mu_nontrivial": h.mu_nontrivial,
            "b2_c2_not_parallel": h.b2_c2_not_parallel,
            "a2_muinv_c2_not_parallel": h.a2_muinv_c2_not_parallel,
        },
        "invariants": c.invariants.iter().map(invariant_json).collect::<Vec<_>>(),
        "pairwise_inequivalent": c.pairwise_inequivalent,
        "verdict": verdict,
        "certified": certified,
    });
    Ok(Report {
        text,
        json,
        ok: certified,
    })
}

fn orbit_json(g: &OrbitGraph) -> Value {
    json!({
        "nodes": g.nodes.iter().map(|n| json!({
            "id": n.id,
            "depth": n.depth,
            "invariant": invariant_json(&n.invariant),
            "diagram": render_document(&Diagram::Torus(n.diagram.clone())),
        })).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({
            "from": e.from,
            "to": e.to,
            "generator": e.generator.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn orbit_report(
    d: &Diagram,
    depth: usize,
    format: GraphFormat,
    exec: Execution,
) -> Result<Report, CliError> {
    require_valid(d)?;
    let g = match d {
        Diagram::Torus(t) => orbit(t, depth, exec),
        Diagram::Genus2 { diagram, .. } => orbit_genus2(diagram, depth, exec),
    }
    .map_err(domain)?;
    let text = match format {
        GraphFormat::Text => g.to_text(),
        GraphFormat::Dot => g.to_dot(),
    };
    Ok(Report::ok(text, orbit_json(&g)))
}

fn lens_arg(s: &str) -> Result<Int, CliError> {
    parse_decimal(s).ok_or_else(|| CliError::Parse(format!("not an integer: {s:?}")))
}

pub fn lens_report(args: [&str; 4], mode: Equivalence) -> Result<Report, CliError> {
    let [p, q, p2, q2] = args.map(lens_arg);
    let first = LensSpace::from_pq(p?, q?).map_err(vertical_err)?;
    let second = LensSpace::from_pq(p2?, q2?).map_err(vertical_err)?;
    let equivalent = lens_equiv(&first, &second, mode);
    let mode_name = match mode {
        Equivalence::Unoriented => "unoriented",
        Equivalence::Oriented => "oriented",
    };
    let verdict = if equivalent {
        "equivalent"
    } else {
        "not equivalent"
    };
    Ok(Report::ok(
        format!("{first} and {second}: {verdict} ({mode_name})\n"),
        json!({
            "first": first.to_string(),
            "second": second.to_string(),
            "mode": mode_name,
            "equivalent": equivalent,
        }),
    ))
}
