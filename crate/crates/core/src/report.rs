//! Serialisation of verification reports: a deterministic JSON document, a CSV
//! summary with one row per class, and a timing sidecar kept apart from both.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::value::RawValue;

use crate::graph6::emit_graph6;
use crate::search::{ExtremalReport, SearchConfig};
use crate::spectral::DEFAULT_TOLERANCE;

/// JSON number with 17 significant digits, or `null` when not finite.
pub fn float17(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

fn opt_float(x: Option<f64>) -> Option<Box<RawValue>> {
    x.map(float17)
}

/// Arbitrary-size integer as a bare JSON number.
pub fn integer_raw(digits: String) -> Box<RawValue> {
    RawValue::from_string(digits).expect("decimal digits are valid JSON")
}

#[derive(Serialize)]
struct ClassRecord {
    class: String,
    kind: &'static str,
    n: usize,
    value: usize,
    status: &'static str,
    unique: bool,
    matches_prediction: bool,
    revalidated: bool,
    verified: bool,
    prediction: Option<String>,
    predicted_graph6: Option<String>,
    maximizer_graph6: Option<String>,
    max_ee: Option<Box<RawValue>>,
    runner_up_gap: Option<Box<RawValue>>,
    near_maximizers: usize,
    graphs_scanned: u64,
    candidates_evaluated: u64,
}

impl ClassRecord {
    fn new(r: &ExtremalReport) -> Self {
        ClassRecord {
            class: r.class.to_string(),
            kind: r.class.kind.name(),
            n: r.class.n,
            value: r.class.value,
            status: r.status.name(),
            unique: r.unique,
            matches_prediction: r.matches_prediction,
            revalidated: r.revalidated,
            verified: r.verified(),
            prediction: r.prediction.clone(),
            predicted_graph6: r.predicted.as_ref().map(emit_graph6),
            maximizer_graph6: r.maximizer.as_ref().map(emit_graph6),
            max_ee: opt_float(r.max_ee),
            runner_up_gap: opt_float(r.runner_up_gap),
            near_maximizers: r.near_maximizers,
            graphs_scanned: r.graphs_scanned,
            candidates_evaluated: r.candidates_evaluated,
        }
    }
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    theorem: &'a str,
    n_min: usize,
    n_max: usize,
    prediction_rule: crate::families::JoinSplit,
    ranking: crate::search::Ranking,
    near_tie: Box<RawValue>,
    k_max: usize,
    eigen_tolerance: Box<RawValue>,
    verified: bool,
    classes: Vec<ClassRecord>,
}

/// Everything needed to render a verification run.
pub struct VerifyRun<'a> {
    pub theorem: &'a str,
    pub n_min: usize,
    pub n_max: usize,
    pub config: &'a SearchConfig,
    pub reports: &'a [ExtremalReport],
}

impl VerifyRun<'_> {
    pub fn verified(&self) -> bool {
        self.reports.iter().all(ExtremalReport::verified)
    }

    /// Byte-stable JSON: no durations, thread counts or timestamps.
    pub fn to_json(&self) -> String {
        let doc = VerifyDocument {
            theorem: self.theorem,
            n_min: self.n_min,
            n_max: self.n_max,
            prediction_rule: self.config.split,
            ranking: self.config.ranking,
            near_tie: float17(self.config.near_tie),
            k_max: self.config.k_max,
            eigen_tolerance: float17(DEFAULT_TOLERANCE),
            verified: self.verified(),
            classes: self.reports.iter().map(ClassRecord::new).collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "class,kind,n,value,status,unique,matches_prediction,revalidated,verified,prediction,\
             predicted_graph6,maximizer_graph6,max_ee,runner_up_gap,near_maximizers,graphs_scanned,\
             candidates_evaluated\n",
        );
        for r in self.reports {
            let c = ClassRecord::new(r);
            let raw = |x: &Option<Box<RawValue>>| x.as_ref().map(|v| v.get().to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "\"{}\",{},{},{},{},{},{},{},{},\"{}\",{},{},{},{},{},{},{}",
                c.class,
                c.kind,
                c.n,
                c.value,
                c.status,
                c.unique,
                c.matches_prediction,
                c.revalidated,
                c.verified,
                c.prediction.clone().unwrap_or_default(),
                c.predicted_graph6.clone().unwrap_or_default(),
                c.maximizer_graph6.clone().unwrap_or_default(),
                raw(&c.max_ee),
                raw(&c.runner_up_gap),
                c.near_maximizers,
                c.graphs_scanned,
                c.candidates_evaluated
            );
        }
        out
    }

    /// Wall-clock data, excluded from the deterministic payload.
    pub fn timing_json(&self, total: Duration, threads: usize) -> String {
        #[derive(Serialize)]
        struct Timing {
            class: String,
            scan_seconds: f64,
        }
        #[derive(Serialize)]
        struct Sidecar {
            threads: usize,
            total_seconds: f64,
            classes: Vec<Timing>,
        }
        let doc = Sidecar {
            threads,
            total_seconds: total.as_secs_f64(),
            classes: self
                .reports
                .iter()
                .map(|r| Timing { class: r.class.to_string(), scan_seconds: r.duration.as_secs_f64() })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("timing serialises");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 14.668_678_386_5, 1e-300, -2.5e17, 0.0] {
            let raw = float17(x);
            let back: f64 = raw.get().parse().unwrap();
            assert_eq!(back, x);
        }
        assert_eq!(float17(f64::NAN).get(), "null");
        assert_eq!(float17(1.5).get(), "1.5000000000000000e0");
    }

    #[test]
    fn big_integers_stay_exact() {
        let raw = integer_raw("123456789012345678901234567890".into());
        let v: serde_json::Value = serde_json::from_str(&format!("[{}]", raw.get())).unwrap();
        assert!(v.is_array());
    }
}
