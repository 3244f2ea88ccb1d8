//! Text and JSON renderings. Both are deterministic: maps are ordered and
//! exact values are strings.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::search::{BulkRefutation, SearchReport};
use super::{Classification, Family, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub enum Document<'a> {
    Verdict(&'a Verdict),
    Search(&'a SearchReport),
}

pub fn report_render(doc: Document<'_>, format: Format) -> String {
    match (doc, format) {
        (Document::Verdict(v), Format::Text) => verdict_text(v),
        (Document::Search(r), Format::Text) => search_text(r),
        (Document::Verdict(v), Format::Json) => pretty(&verdict_json(v)),
        (Document::Search(r), Format::Json) => pretty(&search_json(r)),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn family_json(f: &Family) -> Value {
    let expected = f.array();
    match *f {
        Family::OddGraph { m } => json!({
            "type": "oddGraph",
            "m": m,
            "label": f.label(),
            "identities": {
                "m": format!("2D + 1 = {m}"),
                "expectedArray": expected.to_string(),
                "valency": format!("k = D + 1 = {}", (m + 1) / 2),
            },
        }),
        Family::GeneralizedHexagon { s, t } => json!({
            "type": "generalizedHexagon",
            "s": s,
            "t": t,
            "label": f.label(),
            "identities": {
                "order": format!("(1, k - 1) = ({s}, {t})"),
                "expectedArray": expected.to_string(),
                "vertexCount": format!("2(t^2 + t + 1) = {}", 2 * (t * t + t + 1)),
            },
        }),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    let classification = match &v.classification {
        Classification::Family(f) => family_json(f),
        Classification::NotGirth6(c) => json!({"type": "notGirth6", "certificate": c.to_json()}),
        Classification::NotQPolynomialCandidate(c) => {
            json!({"type": "notQPolynomialCandidate", "certificate": c.to_json()})
        }
        Classification::Unresolved(n) => json!({"type": "unresolved", "notes": n}),
    };
    let mut out = json!({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "verdict",
        "array": v.array.to_string(),
        "girth": v.girth,
        "parity": v.parity,
        "classification": classification,
    });
    if let Some(g) = &v.graph {
        out["graph"] = json!({
            "vertexCount": g.vertex_count,
            "edgeCount": g.edge_count,
            "girth": g.girth,
            "bipartite": g.bipartite,
        });
    }
    out
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "array {}", v.array);
    let _ = writeln!(s, "girth {} ({})", v.girth, v.parity);
    if let Some(g) = &v.graph {
        let _ = writeln!(
            s,
            "graph: {} vertices, {} edges, BFS girth {}",
            g.vertex_count, g.edge_count, g.girth
        );
    }
    match &v.classification {
        Classification::Family(f) => {
            let _ = writeln!(s, "verdict: {}", f.label());
            let _ = writeln!(s, "  parameters match {}", f.array());
        }
        Classification::NotGirth6(c) => {
            let _ = writeln!(s, "verdict: not girth 6");
            let _ = writeln!(s, "  {}", c.to_string().replace('\n', "\n  "));
        }
        Classification::NotQPolynomialCandidate(c) => {
            let _ = writeln!(s, "verdict: not a Q-polynomial girth-6 candidate");
            let _ = writeln!(s, "  {}", c.to_string().replace('\n', "\n  "));
        }
        Classification::Unresolved(n) => {
            let _ = writeln!(s, "verdict: unresolved ({n})");
        }
    }
    s
}

fn bulk_json(b: &BulkRefutation) -> Value {
    json!({
        "diameter": b.diameter,
        "valency": b.valency,
        "firstNonzeroA": b.nonzero,
        "leaves": b.leaves,
        "infeasible": b.infeasible,
        "excluded": b.excluded,
        "unresolved": b.unresolved,
    })
}

fn search_json(r: &SearchReport) -> Value {
    let p = &r.params;
    let refutations: serde_json::Map<String, Value> = r
        .refutations
        .iter()
        .map(|(stage, g)| {
            let certs: Vec<Value> = g
                .certificates
                .iter()
                .map(|c| json!({"subject": c.subject.as_ref().map(|s| s.to_string()), "witnesses": c.witnesses()}))
                .collect();
            (
                stage.name().to_string(),
                json!({
                    "count": g.count,
                    "citation": stage.citation(),
                    "external": stage.is_external(),
                    "certificates": certs,
                }),
            )
        })
        .collect();
    json!({
        "schemaVersion": SCHEMA_VERSION,
        "kind": "search",
        "ranges": {"dMin": p.d_min, "dMax": p.d_max, "kMin": 3, "kMax": p.k_max},
        "externalStages": !p.no_external,
        "candidates": r.candidates,
        "candidatesByDiameter": r.candidates_by_diameter.iter().map(|(d, n)| (d.to_string(), json!(n))).collect::<serde_json::Map<_, _>>(),
        "survivors": r.survivors.iter().map(|s| json!({"array": s.array.to_string(), "family": family_json(&s.family)})).collect::<Vec<_>>(),
        "refutations": refutations,
        "bulkRefutations": r.bulk.iter().map(bulk_json).collect::<Vec<_>>(),
        "unresolved": r.unresolved.iter().map(|(a, n)| json!({"array": a.to_string(), "notes": n})).collect::<Vec<_>>(),
        "unresolvedBulk": r.unresolved_bulk,
        "recheck": {
            "certificates": r.recheck.certificates,
            "bulkBuckets": r.recheck.bulk_buckets,
            "sampledLeaves": r.recheck.sampled_leaves,
            "survivors": r.recheck.survivors,
        },
        "partitionHolds": r.partition_holds(),
    })
}

fn search_text(r: &SearchReport) -> String {
    let p = &r.params;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "search D = {}..{}, k = 3..{} (external stages {})",
        p.d_min,
        p.d_max,
        p.k_max,
        if p.no_external { "off" } else { "on" }
    );
    let _ = writeln!(s, "candidates: {}", r.candidates);
    for (d, n) in &r.candidates_by_diameter {
        let _ = writeln!(s, "  D = {d}: {n}");
    }
    let _ = writeln!(s, "survivors: {}", r.survivors.len());
    for sv in &r.survivors {
        let _ = writeln!(s, "  {}  {}", sv.array, sv.family.label());
    }
    let _ = writeln!(s, "refutations: {}", r.refuted());
    for (stage, g) in &r.refutations {
        let ext = if stage.is_external() { " [cited]" } else { "" };
        let _ = writeln!(s, "  {:<24} {:>12}{ext}  {}", stage.name(), g.count, stage.citation());
    }
    let _ = writeln!(s, "unresolved: {}", r.unresolved_count());
    for (a, n) in r.unresolved.iter().take(20) {
        let _ = writeln!(s, "  {a}  {n}");
    }
    if r.unresolved.len() > 20 {
        let _ = writeln!(s, "  ... {} more", r.unresolved.len() - 20);
    }
    if r.unresolved_bulk > 0 {
        let _ = writeln!(s, "  {} arrays neither bipartite nor almost bipartite (trichotomy off)", r.unresolved_bulk);
    }
    let _ = writeln!(
        s,
        "recheck: {} certificates, {} bulk buckets ({} sampled leaves), {} survivors re-verified",
        r.recheck.certificates, r.recheck.bulk_buckets, r.recheck.sampled_leaves, r.recheck.survivors
    );
    let _ = writeln!(
        s,
        "partition: {} + {} + {} = {} ({})",
        r.survivors.len(),
        r.refuted(),
        r.unresolved_count(),
        r.candidates,
        if r.partition_holds() { "ok" } else { "BROKEN" }
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_array, ClassifyOptions};

    #[test]
    fn odd_graph_text_and_json() {
        let v = classify_array(&"{4,3,3;1,1,2}".parse().unwrap(), ClassifyOptions::default()).unwrap();
        let t = report_render(Document::Verdict(&v), Format::Text);
        assert!(t.contains("Odd graph") && t.contains("m = 7"));
        let j = report_render(Document::Verdict(&v), Format::Json);
        assert_eq!(j, report_render(Document::Verdict(&v), Format::Json));
        let parsed: Value = serde_json::from_str(&j).unwrap();
        assert_eq!(parsed["schemaVersion"], 1);
        assert_eq!(parsed["classification"]["m"], 7);
    }
}
