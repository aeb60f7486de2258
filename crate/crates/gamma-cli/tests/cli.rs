use std::path::PathBuf;
use std::process::{Command, Output};

use gamma_core::ordered_simplicial::SimplicialGroup;
use gamma_core::schema::{decode_ring, decode_vector, Certificate};
use gamma_core::sdp::{verify_sdp_witness, SdpWitness};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("gamma-k0-{}-{name}", std::process::id()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma-k0"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn k0_prints_rank_delta_and_unit_class() {
    let o = run(&["k0", &data("ring_m3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("rank = 1"));
    assert!(text.contains("Δ = {1}"));
    assert!(text.contains("[R] = (2Δ + xΔ)"));
    assert!(text.ends_with('\n'));
}

#[test]
fn realize_with_unit_flag_emits_m3() {
    let o = run(&["realize", &data("simplicial_z2.json"), "--unit", "[2,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("R = M3(F[Δ])(1, 1, x)"));

    let o = run(&["realize", &data("simplicial_z2.json"), "--unit", "[0,0]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sdp_certificate_closes_the_loop() {
    let cert_path = scratch("sdp.json");
    let o = run(&["sdp-witness", &data("relation_perforation.json"), "--cert", cert_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m = 2"));

    let text = std::fs::read_to_string(&cert_path).unwrap();
    let Certificate::SdpCertificate { space, rank, a, x, b, y } = Certificate::parse(&text).unwrap() else {
        panic!("wrong certificate kind");
    };
    assert_eq!(y.len(), 2);
    let space = space.build().unwrap();
    let group = SimplicialGroup::new(&space, rank);
    let a: Vec<_> = a.iter().map(|r| decode_ring(space.group(), r).unwrap()).collect();
    let x: Vec<_> = x.iter().map(|v| decode_vector(&group, v).unwrap()).collect();
    let witness = SdpWitness {
        b: b.iter().map(|row| row.iter().map(|r| decode_ring(space.group(), r).unwrap()).collect()).collect(),
        y: y.iter().map(|v| decode_vector(&group, v).unwrap()).collect(),
    };
    assert!(verify_sdp_witness(&group, &a, &x, &witness).is_valid());

    let o = run(&["verify", cert_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let _ = std::fs::remove_file(cert_path);
}

#[test]
fn every_certificate_reverifies() {
    let cases: [(&str, Vec<String>); 5] = [
        ("unperf", vec!["unperf-witness".into(), data("unperf.json")]),
        ("shen", vec!["shen".into(), data("hom_one_plus_x.json")]),
        ("realize", vec!["realize".into(), data("simplicial_z2.json")]),
        ("tower", vec!["realize-tower".into(), data("tower_one_plus_x.json")]),
        ("ext", vec!["extend".into(), data("extension_z.json")]),
    ];
    for (name, mut args) in cases {
        let path = scratch(&format!("{name}.json"));
        args.push("--cert".into());
        args.push(path.to_string_lossy().into_owned());
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = run(&refs);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let o = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name} certificate: {}", stdout(&o));
        let _ = std::fs::remove_file(path);
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let path = scratch("tampered.json");
    run(&["unperf-witness", &data("unperf.json"), "--cert", path.to_str().unwrap()]);
    let mut value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    value["b"][0][0] = serde_json::json!(5);
    std::fs::write(&path, value.to_string()).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let _ = std::fs::remove_file(path);
}

#[test]
fn unperforation_report() {
    let o = run(&["unperf-witness", &data("unperf.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x in cone: false"));
    assert!(text.contains("m = 2"));
    assert!(text.contains("no one-term witness within bound 4"));
}

#[test]
fn exit_codes_for_true_false_and_bad_input() {
    assert_eq!(run(&["graded-iso", &data("ring_m2_1x.json"), &data("ring_m2_x1.json")]).status.code(), Some(0));
    assert_eq!(run(&["graded-iso", &data("ring_d3_a.json"), &data("ring_d3_a2.json")]).status.code(), Some(1));
    assert_eq!(run(&["graded-iso", &data("ring_m3.json"), &data("ring_d3_a.json")]).status.code(), Some(2));
    assert_eq!(run(&["check-simplicial", &data("simplicial_not_unit.json")]).status.code(), Some(1));
    assert_eq!(run(&["colimit-eq", &data("tower_one_plus_x.json")]).status.code(), Some(0));
    assert_eq!(run(&["colimit-eq", &data("tower_identity.json"), "--horizon", "3"]).status.code(), Some(1));

    let bad = run(&["k0", &data("malformed.json")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("declares size 2"));
    assert_eq!(run(&["sdp-witness", &data("relation_nonzero.json")]).status.code(), Some(2));
    assert_eq!(run(&["k0", &data("does_not_exist.json")]).status.code(), Some(2));
    assert_eq!(run(&["shen", &data("ring_m3.json")]).status.code(), Some(2));
}

#[test]
fn group_reports() {
    let text = stdout(&run(&["check-simplicial", &data("d3_group.json")]));
    assert!(text.contains("Δ normal: false"));
    assert!(text.contains("stabilizer of ℤ[Γ/Δ]: {1}"));
    assert!(text.contains("normal closure of Δ: {1, a, a^2, b, ab, a^2b}"));
    let text = stdout(&run(&["check-simplicial", &data("z2_group.json")]));
    assert!(text.contains("|Γ| = 2"));
}

#[test]
fn json_reports_parse() {
    let o = run(&["k0", &data("ring_m3.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 1);
    assert_eq!(v["unit_class"], serde_json::json!([[2, 1]]));
    let o = run(&["extend", &data("extension_z.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness"]["verified"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["realize-tower".to_string(), data("tower_one_plus_x.json"), "--json".into()],
        vec!["sdp-witness".to_string(), data("relation_perforation.json")],
        vec!["extend".to_string(), data("extension_z.json")],
    ] {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&refs).stdout, run(&refs).stdout);
    }
}
