//! JSON report emission. All real numbers are rounded to 12 significant
//! digits before serialization so reruns are byte identical.

use reeb_forest_core::graph::GraphApproxReport;
use reeb_forest_core::metric::MetricApproxReport;
use reeb_forest_core::reeb::PosetApproxReport;
use serde_json::{json, Map, Value};

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

pub fn num(x: f64) -> Value {
    json!(sig12(x))
}

pub fn poset_report(r: &PosetApproxReport) -> Value {
    json!({
        "distortion": num(r.distortion),
        "hyp_f": num(r.hyp_f),
        "MF": r.mf,
        "MF_mode": r.mf_mode.to_string(),
        "MF_fell_back": r.mf_fell_back,
        "bound": num(r.bound),
        "ok": r.ok,
        "identity_max_dev": num(r.identity_max_dev),
        "worst_pair": [r.worst_pair.0, r.worst_pair.1],
        "log_base": 2,
    })
}

pub fn graph_report(r: &GraphApproxReport) -> Value {
    json!({
        "base": r.base,
        "original_vertices": r.original_len,
        "regularized_vertices": r.regularized_len,
        "betti": r.betti,
        "hyp": num(r.hyp_full),
        "hyp_base": num(r.hyp_base),
        "distortion": num(r.distortion_original),
        "bound_graph": num(r.bound_graph),
        "bound_graph_base": num(r.bound_graph_base),
        "ok": r.ok,
        "poset": poset_report(&r.poset),
        "log_base": 2,
    })
}

pub fn metric_report(r: &MetricApproxReport) -> Value {
    let sweep: Vec<Value> = r
        .sweep
        .iter()
        .map(|e| {
            json!({
                "base": e.base,
                "bound": num(e.bound),
                "distortion": num(e.distortion),
            })
        })
        .collect();
    json!({
        "points": r.len,
        "distortion": num(r.distortion),
        "upsilon": num(r.upsilon),
        "phi": num(r.phi),
        "collapsed_pairs": r.collapsed_pairs,
        "four_point_defect": num(r.four_point_defect),
        "ok": r.ok,
        "base_sweep": sweep,
        "graph": graph_report(&r.graph),
        "log_base": 2,
    })
}

/// Stable pretty-printing with sorted keys (serde_json maps preserve
/// insertion order; we normalize for byte-identical output).
pub fn to_stable_string(v: &Value) -> String {
    fn sort(v: &Value) -> Value {
        match v {
            Value::Object(m) => {
                let mut sorted = Map::new();
                let mut keys: Vec<&String> = m.keys().collect();
                keys.sort();
                for k in keys {
                    sorted.insert(k.clone(), sort(&m[k]));
                }
                Value::Object(sorted)
            }
            Value::Array(a) => Value::Array(a.iter().map(sort).collect()),
            other => other.clone(),
        }
    }
    let mut s = serde_json::to_string_pretty(&sort(v)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_examples() {
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(6.0), 6.0);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
    }

    #[test]
    fn stable_output_sorts_keys() {
        let a = json!({"b": 1, "a": [ {"z": 1, "y": 2} ]});
        assert_eq!(
            to_stable_string(&a),
            "{\n  \"a\": [\n    {\n      \"y\": 2,\n      \"z\": 1\n    }\n  ],\n  \"b\": 1\n}\n"
        );
    }
}
