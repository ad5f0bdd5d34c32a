//! Verification reports and their text, JSON and CSV encodings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use binomlab::{CheckResult, Status};
use serde::{Deserialize, Serialize};

use crate::Format;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub ill_posed: u64,
    pub inconclusive: u64,
}

impl Summary {
    pub fn tally(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::IllPosed => s.ill_posed += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    /// Success means no FAIL and no ILL_POSED; INCONCLUSIVE is tolerated.
    pub fn success(&self) -> bool {
        self.fail == 0 && self.ill_posed == 0
    }
}

/// Echo of the run configuration. Parallelism and the output path are left
/// out so that reports depend only on what was verified.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub family: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub config: ConfigEcho,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, results: Vec<CheckResult>) -> Self {
        let summary = Summary::tally(&results);
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: None,
            config,
            results,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.success() {
            0
        } else {
            1
        }
    }
}

fn render_params(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "family", "params", "status", "lhs", "rhs", "modulus", "witness", "note",
            ])
            .expect("in-memory write");
            for r in &report.results {
                let status = r.status.to_string();
                let params = render_params(&r.params);
                w.write_record([
                    r.family.as_str(),
                    params.as_str(),
                    status.as_str(),
                    r.lhs.as_str(),
                    r.rhs.as_str(),
                    r.modulus.as_str(),
                    r.witness.as_deref().unwrap_or(""),
                    r.note.as_deref().unwrap_or(""),
                ])
                .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
        Format::Text => {
            let mut out = String::new();
            for r in &report.results {
                let _ = write!(
                    out,
                    "{:<12} {} {}",
                    r.status.to_string(),
                    r.family,
                    render_params(&r.params)
                );
                if r.status != Status::Pass {
                    let _ = write!(out, " lhs={} rhs={} modulus={}", r.lhs, r.rhs, r.modulus);
                    if let Some(w) = &r.witness {
                        let _ = write!(out, " witness={w}");
                    }
                }
                if let Some(n) = &r.note {
                    let _ = write!(out, " ({n})");
                }
                out.push('\n');
            }
            let s = &report.summary;
            let _ = writeln!(
                out,
                "summary: pass={} fail={} ill_posed={} inconclusive={}",
                s.pass, s.fail, s.ill_posed, s.inconclusive
            );
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> CheckResult {
        let mut r = CheckResult::new("thm13").param("p", 3u64);
        r.status = status;
        r
    }

    #[test]
    fn empty_report_has_zero_summary() {
        let r = Report::new(ConfigEcho::default(), Vec::new());
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["summary"]["pass"], 0);
        assert_eq!(v["summary"]["fail"], 0);
        assert_eq!(v["summary"]["ill_posed"], 0);
        assert_eq!(v["summary"]["inconclusive"], 0);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn pass_status_serializes_in_caps() {
        let r = Report::new(ConfigEcho::default(), vec![sample(Status::Pass)]);
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["results"][0]["status"], "PASS");
        assert!(v["results"][0].get("witness").is_none());
    }

    #[test]
    fn mixed_summary_and_round_trip() {
        let results = vec![
            sample(Status::Pass),
            sample(Status::Fail),
            sample(Status::IllPosed),
            sample(Status::Inconclusive),
            sample(Status::Pass),
        ];
        let r = Report::new(ConfigEcho::default(), results);
        assert_eq!(
            r.summary,
            Summary {
                pass: 2,
                fail: 1,
                ill_posed: 1,
                inconclusive: 1
            }
        );
        assert_eq!(r.exit_code(), 1);
        let back: Report = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_has_header() {
        let r = Report::new(ConfigEcho::default(), vec![sample(Status::Pass)]);
        let text = String::from_utf8(emit_report(&r, Format::Csv)).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("family,params,status,lhs,rhs,modulus,witness,note")
        );
        assert!(lines.next().unwrap().starts_with("thm13,p=3,PASS"));
    }

    fn arb_result() -> impl proptest::strategy::Strategy<Value = CheckResult> {
        use proptest::prelude::*;
        (
            "[a-z0-9_]{1,8}",
            prop::collection::btree_map("[a-z]{1,3}", "-?[0-9]{1,30}", 0..4),
            0usize..4,
            "\\PC{0,20}",
            "\\PC{0,20}",
            "[0-9]{0,10}",
            prop::option::of("\\PC{0,10}"),
            prop::option::of("[ -~]{0,30}"),
        )
            .prop_map(|(family, params, s, lhs, rhs, modulus, witness, note)| {
                let mut r = CheckResult::new(&family);
                r.params = params;
                r.status = [
                    Status::Pass,
                    Status::Fail,
                    Status::IllPosed,
                    Status::Inconclusive,
                ][s];
                r.lhs = lhs;
                r.rhs = rhs;
                r.modulus = modulus;
                r.witness = witness;
                r.note = note;
                r
            })
    }

    proptest::proptest! {
        #[test]
        fn json_round_trip(results in proptest::collection::vec(arb_result(), 0..8)) {
            let r = Report::new(ConfigEcho::default(), results);
            let back: Report = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
            proptest::prop_assert_eq!(&back, &r);
            let total = r.summary.pass + r.summary.fail + r.summary.ill_posed + r.summary.inconclusive;
            proptest::prop_assert_eq!(total as usize, r.results.len());
            proptest::prop_assert_eq!(r.exit_code() == 0, r.summary.fail == 0 && r.summary.ill_posed == 0);
        }
    }
}
