//! JSON loading and saving of qosets and operators, and DOT export.
//!
//! A qoset is `{"labels": [...], "leq_pairs": [[i, j], ...]}`; the relation is the
//! reflexive-transitive closure of the pairs. An operator is one of
//!
//! - `{"kind": "builtin", "name": "dm"}`
//! - `{"kind": "table", "images": {"<bitmask>": <bitmask>, ...}}`
//! - `{"kind": "generated", "family": [[0, 1], [2], ...]}`
//! - `{"kind": "convolve", "left": <op>, "right": <op>}`
//! - `{"kind": "order", "op": <op>, "dir": "up" | "down"}` for `c↑` and `c↓`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::convolution::{conv_order, convolve};
use crate::error::{Error, Result};
use crate::operator::{Builtin, PreclosureOp};
use crate::qoset::{Dir, Qoset};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub labels: Vec<String>,
    #[serde(default)]
    pub leq_pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum OpSpec {
    Builtin { name: String },
    Table { images: BTreeMap<String, u64> },
    Generated { family: Vec<Vec<usize>> },
    Convolve { left: Box<OpSpec>, right: Box<OpSpec> },
    Order { op: Box<OpSpec>, dir: Dir },
}

fn input<E: std::fmt::Display>(e: E) -> Error {
    Error::Input(e.to_string())
}

pub fn parse_poset(text: &str) -> Result<Qoset> {
    let file: PosetFile = serde_json::from_str(text).map_err(input)?;
    Qoset::new(file.labels, &file.leq_pairs)
}

/// The labels and every strict pair of the relation, so reloading gives the same qoset.
pub fn poset_file(q: &Qoset) -> PosetFile {
    PosetFile {
        labels: q.labels().to_vec(),
        leq_pairs: q.leq_pairs().into_iter().filter(|(i, j)| i != j).collect(),
    }
}

pub fn poset_to_json(q: &Qoset) -> String {
    serde_json::to_string_pretty(&poset_file(q)).expect("plain data serializes")
}

pub fn parse_op_spec(text: &str) -> Result<OpSpec> {
    serde_json::from_str(text).map_err(input)
}

/// Builds the operator described by `spec` on the carrier of `q`.
pub fn build_op(spec: &OpSpec, q: &Qoset) -> Result<PreclosureOp> {
    let n = q.size();
    match spec {
        OpSpec::Builtin { name } => Ok(PreclosureOp::builtin(Builtin::from_name(name)?, q)),
        OpSpec::Table { images } => {
            let size = 1u64.checked_shl(n as u32).ok_or_else(|| input("table carrier too large"))?;
            let mut table = vec![None; size as usize];
            for (key, &image) in images {
                let a: u64 = key.parse().map_err(|_| input(format!("table key `{key}` is not a bitmask")))?;
                if a >= size {
                    return Err(input(format!("table key {a} leaves the carrier")));
                }
                table[a as usize] = Some(Subset(image));
            }
            let images = table
                .into_iter()
                .enumerate()
                .map(|(a, img)| img.ok_or_else(|| input(format!("table has no image for {a}"))))
                .collect::<Result<Vec<_>>>()?;
            PreclosureOp::table(n, images)
        }
        OpSpec::Generated { family } => {
            let mut sets = Vec::with_capacity(family.len());
            for members in family {
                if let Some(&bad) = members.iter().find(|&&i| i >= n) {
                    return Err(Error::IndexOutOfRange { index: bad, size: n });
                }
                sets.push(members.iter().copied().collect());
            }
            PreclosureOp::generated(n, &sets)
        }
        OpSpec::Convolve { left, right } => convolve(&build_op(left, q)?, &build_op(right, q)?),
        OpSpec::Order { op, dir } => conv_order(&build_op(op, q)?, q, *dir),
    }
}

/// An explicit table spec for any operator on a small carrier.
pub fn op_to_spec(c: &PreclosureOp) -> Result<OpSpec> {
    let images = c.materialize()?.images()?;
    Ok(OpSpec::Table {
        images: images.iter().enumerate().map(|(a, s)| (a.to_string(), s.bits())).collect(),
    })
}

/// Hasse diagram of `q` in DOT. Equivalent elements share one node, named by the
/// class members.
pub fn to_dot(q: &Qoset) -> String {
    let mut out = String::from("digraph qoset {\n  rankdir=BT;\n");
    let mut seen = Subset::EMPTY;
    for x in 0..q.size() {
        let class = q.class(x);
        if class.first() != Some(x) {
            continue;
        }
        seen = seen.union(class);
        let names: Vec<&str> = class.iter().map(|i| q.label(i)).collect();
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", names.join(" ~ ").replace('"', "\\\""));
    }
    debug_assert_eq!(seen, q.full());
    for (a, b) in q.hasse_covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qoset::fixtures::*;

    #[test]
    fn poset_round_trip() {
        for q in [p4(), m4(), q2(), divisors(12).0] {
            assert_eq!(parse_poset(&poset_to_json(&q)).unwrap(), q);
        }
    }

    #[test]
    fn op_specs() {
        let q = p4();
        let spec = parse_op_spec(r#"{"kind":"builtin","name":"T"}"#).unwrap();
        let t = build_op(&spec, &q).unwrap();
        let back = build_op(&op_to_spec(&t).unwrap(), &q).unwrap();
        assert!(back.same_as(&t).unwrap());
        let conv = parse_op_spec(
            r#"{"kind":"convolve","left":{"kind":"builtin","name":"down"},"right":{"kind":"generated","family":[[2,3]]}}"#,
        )
        .unwrap();
        assert!(build_op(&conv, &q).is_ok());
        assert!(matches!(parse_op_spec(r#"{"kind":"nope"}"#), Err(Error::Input(_))));
        let bad = parse_op_spec(r#"{"kind":"generated","family":[[7]]}"#).unwrap();
        assert!(matches!(build_op(&bad, &q), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn dot_has_covers() {
        let dot = to_dot(&m4());
        assert!(dot.contains("n0 -> n1;") && dot.contains("n2 -> n3;") && !dot.contains("n0 -> n3;"));
    }
}
