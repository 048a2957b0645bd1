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

use std::io::Write;
use std::process::{Command, Output};

fn matchext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchext"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn index_of_k4() {
    let o = matchext(&["index", "--alpha", "2", "--g6", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "36\n");
    let o = matchext(&["index", "--alpha", "-0.5", "--g6", "C~", "--format", "csv"]);
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..2], ["C~", "-0.5"]);
    assert!((row[2].parse::<f64>().unwrap() - 4.0 / 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn check_cycle() {
    let o = matchext(&["check", "--property", "ext:1", "--g6", "EhEG"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
    let o = matchext(&["check", "--property", "ext:2", "--g6", "EhEG"]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn verify_json_report() {
    let o = matchext(&[
        "verify",
        "--theorem",
        "pm",
        "--order",
        "6",
        "--alpha",
        "1,2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["check"], "theorem");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["graphs_scanned"], 112);
    assert_eq!(v["theorem"]["name"], "PerfectMatching");
    assert_eq!(v["results"][0]["threshold"]["exact"], 18.0);
    assert!(v.get("wall_time_ms").is_none());
    let text = stdout(&o);
    let at = |key: &str| text.find(&format!("\"{key}\"")).unwrap();
    assert!(
        at("closed_form") < at("exact")
            && at("exact") < at("argmax_spec")
            && at("argmax_spec") < at("discrepancy")
    );
}

#[test]
fn verify_csv_and_timing() {
    let o = matchext(&[
        "verify",
        "--theorem",
        "fc:1",
        "--order",
        "7",
        "--alpha",
        "1,2",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().ends_with(",holds,holds"));
    let o = matchext(&[
        "verify",
        "--theorem",
        "pm",
        "--order",
        "4",
        "--alpha",
        "1",
        "--format",
        "json",
        "--timing",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn verify_reads_graph6_streams() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // K6, K2 ∨ 4K1 and a 5-vertex graph outside scope
    writeln!(f, ">>graph6<<E~~w").unwrap();
    writeln!(f, "E}}r?").unwrap();
    writeln!(f, "D~{{").unwrap();
    let path = f.path().to_str().unwrap();
    let o = matchext(&[
        "verify",
        "--theorem",
        "pm",
        "--order",
        "6",
        "--alpha",
        "1",
        "--file",
        path,
        "--format",
        "json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs_scanned"], 2);
    assert_eq!(v["results"][0]["exact"]["exceptional_matches"], 1);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "E~~w\nE~").unwrap();
    let o = matchext(&[
        "verify",
        "--theorem",
        "pm",
        "--order",
        "6",
        "--alpha",
        "1",
        "--file",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn monotonicity_through_verify() {
    let o = matchext(&[
        "verify",
        "--theorem",
        "mono",
        "--order",
        "5",
        "--alpha",
        "-1,1,2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(",-1,decreasing,"));
    assert!(text.contains(",1,plus_two,"));
}

#[test]
fn construct_then_check_maximal() {
    let cases: &[(&str, usize)] = &[
        ("pm", 4),
        ("pm", 6),
        ("pm", 8),
        ("ext:1", 6),
        ("ext:2", 6),
        ("ext:1", 8),
        ("ext:2", 8),
        ("ext:3", 8),
        ("fc:2", 6),
        ("fc:1", 7),
        ("fc:3", 7),
        ("fc:2", 8),
        ("nkd:1,1,1", 8),
        ("bipext:0", 6),
        ("bipext:1", 6),
        ("bipext:2", 6),
        ("bipext:0", 8),
        ("bipext:1", 8),
        ("bipext:2", 8),
    ];
    for &(prop, p) in cases {
        let order = p.to_string();
        let o = matchext(&[
            "construct",
            "--property",
            prop,
            "--order",
            &order,
            "--compositions",
        ]);
        assert_eq!(o.status.code(), Some(0), "{prop} {p}");
        let members = stdout(&o);
        assert!(!members.is_empty());
        for g6 in members.lines() {
            let c = matchext(&["check", "--property", prop, "--maximal", "--g6", g6]);
            assert_eq!(stdout(&c), "true\n", "{prop} {g6}");
        }
    }
}

#[test]
fn construct_single_members_and_exceptions() {
    let o = matchext(&["construct", "--hub", "2", "--halves", "0,0,0,0"]);
    assert_eq!(stdout(&o), "E}r?\n");
    let o = matchext(&["construct", "--biclique", "3,1,2"]);
    let g = matchext_core::graph6::decode(stdout(&o).trim()).unwrap();
    assert_eq!(g.edge_count(), 7);
    let o = matchext(&[
        "construct",
        "--property",
        "pm",
        "--order",
        "6",
        "--exceptional",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn threshold_reports() {
    let o = matchext(&[
        "threshold",
        "--property",
        "ext:1",
        "--order",
        "8",
        "--alpha",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["closed_form"], 46.0);
    assert_eq!(v["exact"], 46.0);
    assert_eq!(v["discrepancy"], 0.0);
    let o = matchext(&[
        "threshold",
        "--property",
        "pm",
        "--order",
        "6",
        "--alpha",
        "1",
        "--branches",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["audits"][0]["branches"][0]["discrepancy"], -3.0);
    assert_eq!(v["corollary"]["discrepancy"], 9.0);
    let o = matchext(&[
        "threshold",
        "--property",
        "nkd:1,1,7",
        "--order",
        "16",
        "--alpha",
        "0.1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["closed_form"].is_null() && v["discrepancy"].is_null());
}

#[test]
fn maximal_and_enumerate() {
    let o = matchext(&[
        "maximal",
        "--property",
        "fc:1",
        "--order",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["check"], "characterization");
    assert_eq!(v["missing"].as_array().unwrap().len(), 0);
    let o = matchext(&["enumerate", "--order", "6", "--connected", "--count"]);
    assert_eq!(stdout(&o), "112\n");
    let o = matchext(&["enumerate", "--order", "6", "--bipartite", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    let o = matchext(&["enumerate", "--order", "3"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(matchext(&[]).status.code(), Some(2));
    assert_eq!(matchext(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        matchext(&["index", "--alpha", "1", "--g6", "C~", "--nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        matchext(&["index", "--alpha", "1", "--g6", "C~", "--file", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        matchext(&[
            "verify",
            "--theorem",
            "pm",
            "--order",
            "6",
            "--alpha",
            "1",
            "--format",
            "xml"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        matchext(&[
            "verify",
            "--theorem",
            "ext:1",
            "--order",
            "7",
            "--alpha",
            "1"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        matchext(&["verify", "--theorem", "pm", "--order", "12", "--alpha", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        matchext(&["check", "--property", "bipext:1", "--maximal", "--g6", "Bw"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(matchext(&["--help"]).status.code(), Some(0));
}
