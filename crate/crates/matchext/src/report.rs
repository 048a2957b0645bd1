// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Verification reports.
//!
//! JSON is the stable format: fields serialize in declaration order and all
//! graph lists are sorted graph6 strings. CSV has one row per exponent (per
//! property for characterization runs); text is for people.

use std::fmt::Write as _;

use serde::Serialize;

use matchext_core::thresholds::ThresholdReport;
use matchext_core::{PropertyKind, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    /// Nothing was scanned.
    Vacuous,
}

impl Verdict {
    pub fn from_counterexamples(scanned: usize, counterexamples: &[String]) -> Self {
        if scanned == 0 {
            Verdict::Vacuous
        } else if counterexamples.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Vacuous => "vacuous",
        }
    }

    /// `Fails` dominates `Holds`, which dominates `Vacuous`.
    pub fn merge(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Holds, _) | (_, Verdict::Holds) => Verdict::Holds,
            _ => Verdict::Vacuous,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub order: usize,
    pub alphas: Vec<f64>,
    pub graphs_scanned: usize,
    pub verdict: Verdict,
    /// Union over all exponents, sorted and deduplicated.
    pub counterexamples: Vec<String>,
    #[serde(flatten)]
    pub detail: Detail,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Detail {
    Theorem {
        theorem: TheoremId,
        results: Vec<TheoremOutcome>,
    },
    Characterization(CharacterizationOutcome),
    Monotonicity {
        results: Vec<MonotonicityOutcome>,
    },
}

/// Scan of one threshold at one exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdScan {
    pub threshold: f64,
    pub graphs_above_threshold: usize,
    /// Graphs above the threshold lacking the property that are isomorphic
    /// to an exempted graph.
    pub exceptional_matches: usize,
    pub counterexamples: Vec<String>,
    pub verdict: Verdict,
}

/// Which candidate threshold for the bipartite theorem equals the exact one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartiteAdjudication {
    /// The stated threshold.
    pub statement: f64,
    /// Maximum of the proof's convex function at its endpoints.
    pub proof_endpoint: f64,
    pub statement_is_sharp: bool,
    pub proof_endpoint_is_sharp: bool,
    /// No graph at or above the stated threshold lacks the property unless
    /// it is the exempted graph.
    pub statement_survives: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremOutcome {
    pub alpha: f64,
    pub threshold: ThresholdReport,
    /// Against the exact threshold; this decides the verdict.
    pub exact: ThresholdScan,
    /// Against the printed closed form, when the exponent is in its regime.
    pub closed_form: Option<ThresholdScan>,
    pub bipartite: Option<BipartiteAdjudication>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterizationOutcome {
    pub property: PropertyKind,
    /// Maximal graphs lacking the property, one per isomorphism class.
    pub maximal_found: Vec<String>,
    /// Family members, one per isomorphism class.
    pub family: Vec<String>,
    /// Family members not found maximal by the scan.
    pub missing: Vec<String>,
    /// Maximal graphs not isomorphic to any family member.
    pub unexpected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityOutcome {
    pub alpha: f64,
    /// `increasing`, `decreasing` or `plus_two` (`α = 1`).
    pub expected: &'static str,
    pub pairs_checked: usize,
    /// Non-edges skipped because an endpoint is isolated and `α < 0`.
    pub pairs_skipped: usize,
    pub min_delta: Option<f64>,
    pub max_delta: Option<f64>,
    pub counterexamples: Vec<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Summary rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.detail {
            Detail::Theorem { results, .. } => {
                out.push_str(
                    "subject,order,alpha,exact_threshold,closed_form,discrepancy,graphs_scanned,\
                     graphs_above_threshold,exceptional_matches,counterexamples,verdict,closed_form_verdict\n",
                );
                for r in results {
                    let closed = r.closed_form.as_ref();
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{},{},{}",
                        csv_field(&self.subject),
                        self.order,
                        r.alpha,
                        r.threshold.exact,
                        opt(r.threshold.closed_form),
                        opt(r.threshold.discrepancy),
                        self.graphs_scanned,
                        r.exact.graphs_above_threshold,
                        r.exact.exceptional_matches,
                        r.exact.counterexamples.len(),
                        r.exact.verdict.as_str(),
                        closed.map_or("", |c| c.verdict.as_str()),
                    );
                }
            }
            Detail::Characterization(c) => {
                out.push_str("subject,order,graphs_scanned,maximal_found,family,missing,unexpected,verdict\n");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&self.subject),
                    self.order,
                    self.graphs_scanned,
                    c.maximal_found.len(),
                    c.family.len(),
                    c.missing.len(),
                    c.unexpected.len(),
                    self.verdict.as_str(),
                );
            }
            Detail::Monotonicity { results } => {
                out.push_str("order,alpha,expected,pairs_checked,pairs_skipped,min_delta,max_delta,counterexamples,verdict\n");
                for r in results {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{}",
                        self.order,
                        r.alpha,
                        r.expected,
                        r.pairs_checked,
                        r.pairs_skipped,
                        opt(r.min_delta),
                        opt(r.max_delta),
                        r.counterexamples.len(),
                        r.verdict.as_str(),
                    );
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {} ({} graphs scanned)",
            self.subject,
            self.verdict.as_str(),
            self.graphs_scanned
        );
        match &self.detail {
            Detail::Theorem { results, .. } => {
                for r in results {
                    let _ = writeln!(
                        out,
                        "  alpha {}: exact threshold {} attained by {:?}, {} above, {} exempted, {} counterexamples",
                        r.alpha,
                        r.threshold.exact,
                        r.threshold.argmax_spec,
                        r.exact.graphs_above_threshold,
                        r.exact.exceptional_matches,
                        r.exact.counterexamples.len(),
                    );
                    if let Some(c) = &r.closed_form {
                        let _ = writeln!(
                            out,
                            "    closed form {} ({} above): {}",
                            c.threshold,
                            c.graphs_above_threshold,
                            c.verdict.as_str()
                        );
                    }
                    if let Some(b) = &r.bipartite {
                        let _ = writeln!(
                            out,
                            "    statement {} sharp={} survives={}; proof endpoint {} sharp={}",
                            b.statement,
                            b.statement_is_sharp,
                            b.statement_survives,
                            b.proof_endpoint,
                            b.proof_endpoint_is_sharp
                        );
                    }
                }
            }
            Detail::Characterization(c) => {
                let _ = writeln!(
                    out,
                    "  {} maximal classes found, {} family classes, {} missing, {} unexpected",
                    c.maximal_found.len(),
                    c.family.len(),
                    c.missing.len(),
                    c.unexpected.len()
                );
            }
            Detail::Monotonicity { results } => {
                for r in results {
                    let _ = writeln!(
                        out,
                        "  alpha {}: {} pairs, expected {}, {}",
                        r.alpha,
                        r.pairs_checked,
                        r.expected,
                        r.verdict.as_str()
                    );
                }
            }
        }
        for g in &self.counterexamples {
            let _ = writeln!(out, "  counterexample {g}");
        }
        out
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        assert_eq!(Verdict::from_counterexamples(0, &[]), Verdict::Vacuous);
        assert_eq!(Verdict::from_counterexamples(3, &[]), Verdict::Holds);
        assert_eq!(
            Verdict::from_counterexamples(3, &["A_".into()]),
            Verdict::Fails
        );
        assert_eq!(Verdict::Vacuous.merge(Verdict::Holds), Verdict::Holds);
        assert_eq!(Verdict::Holds.merge(Verdict::Fails), Verdict::Fails);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("nkd:1,1,1 (p=8)"), "\"nkd:1,1,1 (p=8)\"");
        assert_eq!(csv_field("pm (n=3)"), "pm (n=3)");
    }
}
