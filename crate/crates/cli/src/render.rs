use std::fmt::Write as _;

use kummer_core::exact::IntegerMatrix;
use kummer_core::kummer::{ConstraintSet, KummerModel, SolutionRecord, VerificationReport};
use kummer_core::lattice::{HyperbolicSplit, ShortVector};
use kummer_core::{GroupName, IntegralLattice};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::Format;

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn either(fmt: Format, text: String, value: Value) -> String {
    match fmt {
        Format::Text => text,
        Format::Json => json_line(&value),
    }
}

pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `formal sum  (rank_sum=.., n_total=.., picard_lower_bound=..)`
pub fn solution_line(s: &SolutionRecord) -> String {
    format!(
        "{}  (rank_sum={}, n_total={}, picard_lower_bound={})",
        s.formal_sum, s.rank_sum, s.n_total, s.picard_lower_bound
    )
}

pub fn enumeration(fmt: Format, group: GroupName, constraints: ConstraintSet, solutions: &[SolutionRecord]) -> String {
    match fmt {
        Format::Text => solutions.iter().map(|s| solution_line(s) + "\n").collect(),
        Format::Json => json_line(&json!({
            "group": group,
            "constraints": constraints.to_string(),
            "solutions": solutions,
        })),
    }
}

pub fn group_info(fmt: Format, name: GroupName, model: &KummerModel) -> String {
    let g = model.group();
    let classes = g.conjugacy_classes();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    match fmt {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "group {name}").unwrap();
            writeln!(out, "order {}", g.order()).unwrap();
            let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
            writeln!(out, "class sizes {}", sizes.join(",")).unwrap();
            writeln!(out, "stabilizer classes:").unwrap();
            writeln!(out, "  {:<5} {:>3} {:<5} {:>5}", "kind", "m", "type", "count").unwrap();
            for s in model.stabilizer_classes() {
                writeln!(out, "  {:<5} {:>3} {:<5} {:>5}", s.kind.to_string(), s.index_m, s.sing_type.to_string(), s.class_size).unwrap();
            }
            out
        }
        Format::Json => {
            let classes: Vec<Value> = classes
                .iter()
                .map(|c| json!({ "representative": g.name(c[0]), "order": g.element_order(c[0]), "size": c.len() }))
                .collect();
            let stabilizers: Vec<Value> = model
                .stabilizer_classes()
                .iter()
                .map(|s| {
                    let names: Vec<&str> = s.subgroup.elements().iter().map(|&e| g.name(e)).collect();
                    json!({
                        "kind": s.kind,
                        "index_m": s.index_m,
                        "sing_type": s.sing_type,
                        "class_size": s.class_size,
                        "representative": names,
                    })
                })
                .collect();
            json_line(&json!({
                "group": name,
                "order": g.order(),
                "class_sizes": sizes,
                "classes": classes,
                "stabilizer_classes": stabilizers,
            }))
        }
    }
}

pub fn verification(fmt: Format, report: &VerificationReport) -> String {
    if fmt == Format::Json {
        return json_line(&json!(report));
    }
    let mut out = String::new();
    writeln!(out, "constraints: {}", report.constraints).unwrap();
    for row in &report.groups {
        let found: Vec<&str> = row.solutions.iter().map(|s| s.formal_sum.as_str()).collect();
        let picard: Vec<String> = row.solutions.iter().map(|s| s.picard_lower_bound.to_string()).collect();
        let status = if row.matches && row.picard_ok { "match" } else { "MISMATCH" };
        writeln!(
            out,
            "{:<4} {:<8} {}  [picard {}]",
            row.group.to_string(),
            status,
            if found.is_empty() { "(none)".to_string() } else { found.join(" | ") },
            picard.join(",")
        )
        .unwrap();
        if !row.matches {
            let unexpected: Vec<&str> = found.iter().copied().filter(|f| !row.expected.iter().any(|e| e == f)).collect();
            let missing: Vec<&str> =
                row.expected.iter().map(String::as_str).filter(|e| !found.contains(e)).collect();
            if !unexpected.is_empty() {
                writeln!(out, "       + unexpected: {}", unexpected.join(" | ")).unwrap();
            }
            if !missing.is_empty() {
                writeln!(out, "       - missing: {}", missing.join(" | ")).unwrap();
            }
        }
        if !row.picard_ok {
            writeln!(out, "       picard bound expected {:?}", row.expected_picard_bound).unwrap();
        }
    }
    let verdict = if report.passed() { "all groups match" } else { "verification FAILED" };
    writeln!(out, "{verdict}").unwrap();
    out
}

pub fn lattice(fmt: Format, l: &IntegralLattice) -> String {
    either(fmt, format!("{l}\n"), json!(l))
}

pub fn short_vectors(fmt: Format, vectors: &[ShortVector]) -> String {
    match fmt {
        Format::Text => vectors.iter().map(|v| format!("{} {}\n", v.norm, vector(&v.coords))).collect(),
        Format::Json => json_line(&json!({ "count": vectors.len(), "vectors": vectors })),
    }
}

pub fn isometry(fmt: Format, cert: Option<&IntegerMatrix>) -> String {
    match (fmt, cert) {
        (Format::Text, Some(s)) => format!("isometric\ncertificate {s}\n"),
        (Format::Text, None) => "not isometric\n".to_string(),
        (Format::Json, _) => json_line(&json!({ "isometric": cert.is_some(), "certificate": cert })),
    }
}

pub fn hyperbolic(fmt: Format, bound: u32, split: Option<&HyperbolicSplit>) -> String {
    match (fmt, split) {
        (Format::Text, Some(s)) => {
            format!("found e={} f={}\ncomplement {}\n", vector(&s.e), vector(&s.f), s.complement)
        }
        (Format::Text, None) => format!("not found within bound {bound}\n"),
        (Format::Json, _) => json_line(&json!({ "bound": bound, "found": split.is_some(), "split": split })),
    }
}
