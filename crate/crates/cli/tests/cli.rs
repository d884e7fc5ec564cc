use std::io::Write as _;
use std::process::{Command, Output};

use cfmonoid::Presentation;
use cfmonoid_cli::report::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfmonoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Parses the JSON output as `T` and checks that serializing it again gives
/// the same document.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let text = stdout(&o);
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    let original: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&value).unwrap(), original, "{args:?}");
    value
}

#[test]
fn documented_examples() {
    let o = run(&["--catalog", "M2", "normalize", "dab"]);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("1\n", 0));
    let o = run(&["--catalog", "M2", "normalize", "1"]);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("1\n", 0));
    let o = run(&["--catalog", "dehn-example", "confluence"]);
    assert_eq!(
        stdout(&o),
        "locally confluent: true, terminating: true, critical pairs: 0\n"
    );
    assert_eq!(code(&o), 0);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["--catalog", "M2", "equal", "dab", "1"])), 0);
    assert_eq!(code(&run(&["--catalog", "M2", "equal", "a", "b"])), 1);
    assert_eq!(code(&run(&["--catalog", "M2", "normalize", "xyz"])), 3);
    assert_eq!(
        code(&run(&["--catalog", "M2", "--frobnicate", "normalize", "a"])),
        3
    );
    assert_eq!(code(&run(&["normalize", "a"])), 3);
    assert_eq!(code(&run(&["--catalog", "M65", "normalize", "a"])), 3);
    assert_eq!(code(&run(&["--catalog", "M2", "witness", "aab"])), 3);
    assert_eq!(
        code(&run(&["--catalog", "dehn-example", "dehn", "a", "b"])),
        1
    );
    let limited = run(&[
        "--catalog",
        "dehn-example",
        "dehn",
        "aabb",
        "bbaa",
        "--max-nodes",
        "5",
    ]);
    assert_eq!(code(&limited), 2);
    let small = run(&["--catalog", "M2", "probe", "1", "a", "--radius", "1"]);
    assert_eq!(code(&small), 2, "{}", stdout(&small));
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn unresolved_critical_pairs_refute() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "generators: a b\nrelations:\naba = b\nbab = a").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["--presentation", path, "confluence"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("unresolved"));
    let summary: ConfluenceSummary = round_trip(&["--presentation", path, "confluence"]);
    assert!(!summary.locally_confluent);
    let o = run(&["--presentation", path, "complete"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn presentation_files_and_catalog_dump_agree() {
    let dump = stdout(&run(&["catalog", "dump", "dehn-example"]));
    let parsed = Presentation::parse(&dump).unwrap();
    assert_eq!(parsed, cfmonoid::catalog::build_dehn_example().presentation);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(dump.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let from_file = run(&["--presentation", path, "growth", "--max-len", "6"]);
    let from_catalog = run(&["--catalog", "dehn-example", "growth", "--max-len", "6"]);
    assert_eq!(from_file.stdout, from_catalog.stdout);
    let both = run(&[
        "--catalog",
        "M1",
        "--presentation",
        path,
        "growth",
        "--max-len",
        "2",
    ]);
    assert_eq!(code(&both), 3);
}

#[test]
fn bad_presentation_files_are_input_errors() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "generators: a b\nrelations:\nab = q").unwrap();
    let o = run(&["--presentation", f.path().to_str().unwrap(), "confluence"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = run(&["--presentation", "/nonexistent/file", "confluence"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &[
            "--catalog",
            "M2",
            "--seed",
            "7",
            "normalize",
            "adacabdab",
            "--strategy",
            "random",
        ],
        &[
            "--catalog",
            "M1",
            "--jobs",
            "3",
            "probe-all",
            "--seed-len",
            "2",
            "--radius",
            "6",
        ],
        &[
            "--catalog",
            "dehn-example",
            "--jobs",
            "2",
            "dehn-profile",
            "--n-max",
            "6",
        ],
        &[
            "--catalog",
            "dehn-example",
            "--format",
            "json",
            "probe",
            "b",
            "c",
            "--radius",
            "6",
            "--trace",
        ],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), 0, "{args:?}");
    }
    let one = run(&[
        "--catalog",
        "M1",
        "--jobs",
        "1",
        "--format",
        "csv",
        "probe-all",
        "--seed-len",
        "2",
        "--radius",
        "6",
    ]);
    let four = run(&[
        "--catalog",
        "M1",
        "--jobs",
        "4",
        "--format",
        "csv",
        "probe-all",
        "--seed-len",
        "2",
        "--radius",
        "6",
    ]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn json_outputs_round_trip() {
    let r: NormalizeReport = round_trip(&["--catalog", "M2", "normalize", "adacab"]);
    assert_eq!((r.normal_form.as_str(), r.steps), ("a", 2));
    let r: EqualReport = round_trip(&["--catalog", "M2", "equal", "dab", "1"]);
    assert!(r.equal);
    let r: ConfluenceSummary = round_trip(&["--catalog", "M3", "confluence"]);
    assert_eq!(r.critical_pair_count, 0);
    let r: CompletionReport = round_trip(&["--catalog", "M2", "complete"]);
    assert_eq!(r.rules.len(), 5);
    let r: EnumerationReport = round_trip(&["--catalog", "M1", "enumerate", "--max-len", "2"]);
    assert_eq!(r.words.len(), 17);
    let r: GrowthSeries = round_trip(&["--catalog", "M1", "growth", "--max-len", "2"]);
    assert_eq!(r.counts, vec![1, 4, 12]);
    let r: WitnessReport = round_trip(&["--catalog", "M2", "witness", "ada"]);
    assert_eq!((r.x.as_deref(), r.y.as_deref()), (Some("1"), Some("cabc")));
    assert_eq!(r.method, WitnessMethod::Constructive);
    let r: WitnessReport = round_trip(&["--catalog", "dehn-example", "witness", "a"]);
    assert_eq!(r.method, WitnessMethod::Search);
    let r: ProbeReport = round_trip(&[
        "--catalog",
        "M2",
        "probe",
        "1",
        "a",
        "--radius",
        "8",
        "--trace",
    ]);
    assert_eq!(r.status, ProbeStatusView::Collapsed);
    assert!(r.trace.is_some());
    let r: ProbeSummary = round_trip(&[
        "--catalog",
        "M1",
        "probe-all",
        "--seed-len",
        "1",
        "--radius",
        "5",
    ]);
    assert_eq!(r.undetermined, 0);
    let r: AreaReport = round_trip(&["--catalog", "dehn-example", "dehn", "aabb", "bbaa"]);
    assert_eq!(r.area, Some(4));
    assert_eq!(r.derivation.len(), 5);
    let r: DehnProfile = round_trip(&["--catalog", "M1", "dehn-profile", "--n-max", "4"]);
    assert_eq!(r.rows.len(), 4);
    let r: IdentityReport = round_trip(&["verify-paper", "--n", "3"]);
    assert_eq!(r.failed, 0);
    let r: CatalogListing = round_trip(&["catalog", "list"]);
    assert!(r.entries.iter().any(|e| e.name == "dehn-example"));
    let r: CatalogDump = round_trip(&["catalog", "dump", "M2"]);
    assert!(r.presentation.contains("dab = 1"));
}

#[test]
fn csv_outputs() {
    let o = run(&[
        "--catalog",
        "M1",
        "--format",
        "csv",
        "growth",
        "--max-len",
        "2",
    ]);
    assert_eq!(stdout(&o), "length,count\n0,1\n1,4\n2,12\n");
    let o = run(&[
        "--catalog",
        "M1",
        "--format",
        "csv",
        "dehn-profile",
        "--n-max",
        "3",
    ]);
    assert_eq!(stdout(&o), "n,D,limited_pairs\n1,0,0\n2,1,0\n3,1,0\n");
    let o = run(&[
        "--catalog",
        "M1",
        "--format",
        "csv",
        "probe-all",
        "--seed-len",
        "0",
        "--radius",
        "3",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("seed_u,seed_v,status,trace_len,truncated\n1,0,collapsed,"));
    assert_eq!(
        code(&run(&["--catalog", "M1", "--format", "csv", "confluence"])),
        3
    );
}

#[test]
fn verify_paper_text() {
    let o = run(&["verify-paper", "--n", "3"]);
    let text = stdout(&o);
    assert!(text.contains("PASS daab = 1"));
    assert!(text.contains("PASS aaab = 0"));
    assert_eq!(code(&o), 0);
}
