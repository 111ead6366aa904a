//! Diagram files: UTF-8 JSON, one object per file.
//!
//! ```json
//! {
//!   "model": "torus",
//!   "sign": 1,
//!   "monodromy": {"type": "twist", "core": [-1, 1], "exponent": 1},
//!   "a2": [1, 0],
//!   "b2": [0, 1],
//!   "c2": [1, 1]
//! }
//! ```
//!
//! Genus-2 files add `a1`, `b1`, `c1`, use four coordinates per class, and
//! give only the `exponent` of a twist (the core is `a1 + b1 + c1`).
//! Integers are JSON numbers or decimal strings; the writer emits strings only
//! for values outside the 64-bit range.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use trisect_core::{Genus2Diagram, Int, Monodromy, Sign, TorusDiagram, Vec2, Vec4};

use crate::CliError;

/// A parsed diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Diagram {
    Torus(TorusDiagram),
    Genus2 {
        diagram: Genus2Diagram,
        /// The `sign` field as written; checked against `a1.b1` on validation.
        sign: Sign,
    },
}

struct JsonInt(Int);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                parse_decimal(v)
                    .map(JsonInt)
                    .ok_or_else(|| E::custom(format!("invalid decimal integer {v:?}")))
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

/// Optional sign, then ASCII digits only.
pub fn parse_decimal(s: &str) -> Option<Int> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<BigInt>().ok()
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Model {
    Torus,
    Genus2,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum RawMonodromy {
    Identity,
    Twist {
        core: Option<Vec<JsonInt>>,
        exponent: i64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    model: Model,
    sign: i64,
    monodromy: RawMonodromy,
    a1: Option<Vec<JsonInt>>,
    b1: Option<Vec<JsonInt>>,
    c1: Option<Vec<JsonInt>>,
    a2: Vec<JsonInt>,
    b2: Vec<JsonInt>,
    c2: Vec<JsonInt>,
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn vec2(name: &str, raw: Vec<JsonInt>) -> Result<Vec2, CliError> {
    match <[JsonInt; 2]>::try_from(raw) {
        Ok([x, y]) => Ok(Vec2::new(x.0, y.0)),
        Err(v) => Err(schema(format!(
            "{name}: expected 2 coordinates, got {}",
            v.len()
        ))),
    }
}

fn vec4(name: &str, raw: Option<Vec<JsonInt>>) -> Result<Vec4, CliError> {
    let raw = raw.ok_or_else(|| schema(format!("genus2 document is missing {name}")))?;
    match <[JsonInt; 4]>::try_from(raw) {
        Ok(v) => Ok(Vec4(v.map(|c| c.0))),
        Err(v) => Err(schema(format!(
            "{name}: expected 4 coordinates, got {}",
            v.len()
        ))),
    }
}

pub fn parse_document(text: &str) -> Result<Diagram, CliError> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| schema(format!("malformed diagram document: {e}")))?;
    let sign = Sign::from_value(raw.sign)
        .ok_or_else(|| schema(format!("sign must be 1 or -1, got {}", raw.sign)))?;
    match raw.model {
        Model::Torus => {
            if raw.a1.is_some() || raw.b1.is_some() || raw.c1.is_some() {
                return Err(schema("torus documents have no a1, b1, c1"));
            }
            let monodromy = match raw.monodromy {
                RawMonodromy::Identity => Monodromy::Identity,
                RawMonodromy::Twist { core, exponent } => {
                    let core = core.ok_or_else(|| schema("torus twist needs a core"))?;
                    Monodromy::twist(vec2("core", core)?, exponent)
                }
            };
            Ok(Diagram::Torus(TorusDiagram::new(
                vec2("a2", raw.a2)?,
                vec2("b2", raw.b2)?,
                vec2("c2", raw.c2)?,
                monodromy,
                sign,
            )))
        }
        Model::Genus2 => {
            let exponent = match raw.monodromy {
                RawMonodromy::Identity => 0,
                RawMonodromy::Twist { core: Some(_), .. } => {
                    return Err(schema("genus2 twist takes no core (it is a1 + b1 + c1)"));
                }
                RawMonodromy::Twist {
                    core: None,
                    exponent,
                } => exponent,
            };
            let diagram = Genus2Diagram {
                a1: vec4("a1", raw.a1)?,
                b1: vec4("b1", raw.b1)?,
                c1: vec4("c1", raw.c1)?,
                a2: vec4("a2", Some(raw.a2))?,
                b2: vec4("b2", Some(raw.b2))?,
                c2: vec4("c2", Some(raw.c2))?,
                exponent,
            };
            Ok(Diagram::Genus2 { diagram, sign })
        }
    }
}

fn int(out: &mut String, v: &Int) {
    match i64::try_from(v) {
        Ok(small) => write!(out, "{small}"),
        Err(_) => write!(out, "\"{v}\""),
    }
    .expect("writing to a String");
}

fn coords(out: &mut String, values: &[Int]) {
    out.push('[');
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        int(out, v);
    }
    out.push(']');
}

fn field(out: &mut String, name: &str, values: &[Int], last: bool) {
    let _ = write!(out, "  \"{name}\": ");
    coords(out, values);
    out.push_str(if last { "\n" } else { ",\n" });
}

/// Stable, diffable rendering; parsing it gives back the same diagram.
pub fn render_document(d: &Diagram) -> String {
    let mut out = String::from("{\n");
    match d {
        Diagram::Torus(t) => {
            let _ = writeln!(
                out,
                "  \"model\": \"torus\",\n  \"sign\": {},",
                t.sign.value()
            );
            match &t.monodromy {
                Monodromy::Identity => out.push_str("  \"monodromy\": {\"type\": \"identity\"},\n"),
                Monodromy::Twist { core, exponent } => {
                    out.push_str("  \"monodromy\": {\"type\": \"twist\", \"core\": ");
                    coords(&mut out, &[core.x.clone(), core.y.clone()]);
                    let _ = writeln!(out, ", \"exponent\": {exponent}}},");
                }
            }
            let classes = [("a2", &t.a2), ("b2", &t.b2), ("c2", &t.c2)];
            for (i, (name, v)) in classes.iter().enumerate() {
                field(&mut out, name, &[v.x.clone(), v.y.clone()], i == 2);
            }
        }
        Diagram::Genus2 { diagram: g, sign } => {
            let _ = writeln!(
                out,
                "  \"model\": \"genus2\",\n  \"sign\": {},",
                sign.value()
            );
            if g.exponent == 0 {
                out.push_str("  \"monodromy\": {\"type\": \"identity\"},\n");
            } else {
                let _ = writeln!(
                    out,
                    "  \"monodromy\": {{\"type\": \"twist\", \"exponent\": {}}},",
                    g.exponent
                );
            }
            let classes = [
                ("a1", &g.a1),
                ("b1", &g.b1),
                ("c1", &g.c1),
                ("a2", &g.a2),
                ("b2", &g.b2),
                ("c2", &g.c2),
            ];
            for (i, (name, v)) in classes.iter().enumerate() {
                field(&mut out, name, &v.0, i == 5);
            }
        }
    }
    out.push_str("}\n");
    out
}
