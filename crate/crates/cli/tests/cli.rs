use std::process::{Command, Output};

use serde_json::Value;

fn afflap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afflap"))
        .args(args)
        .env_remove(afflap_cli::JOBS_ENV)
        .output()
        .expect("run afflap")
}

fn json(args: &[&str]) -> Value {
    let out = afflap(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn spectrum_envelope() {
    let v = json(&["spectrum", "--k", "2", "--h-max", "2", "--format", "json"]);
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["k"], 2);
    assert!(v["config"].get("jobs").is_none());
    let h2 = &v["results"][2];
    assert_eq!(h2["h"], 2);
    assert_eq!(h2["blocks"], serde_json::json!([{"lambda": 1, "mult": 6}]));
}

#[test]
fn harmonic_chains_in_l0_degree_zero() {
    let v = json(&["spectrum", "--k", "0", "--h-max", "0", "--format", "json"]);
    let harmonic: Vec<&Value> = v["results"][0]["refinement"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|b| b.get("harmonic").and_then(Value::as_array).into_iter().flatten())
        .collect();
    assert_eq!(harmonic.len(), 2);
    assert_eq!(harmonic[1], &serde_json::json!([{"indices": [0], "coeff": "1"}]));
}

#[test]
fn homology_of_l2_by_chain_dimension() {
    let v = json(&["homology", "--k", "2", "--h-max", "6", "--format", "json"]);
    let rows = v["results"].as_array().unwrap();
    for q in 1..=3u64 {
        let total: u64 = rows.iter().filter(|r| r["q"] == q).map(|r| r["dim"].as_u64().unwrap()).sum();
        assert_eq!(total, 2 * q + 1);
    }
    assert!(rows.iter().all(|r| r["dim"] == r["expected"]));
}

#[test]
fn homology_of_l_minus_one() {
    let v = json(&["homology", "--k", "-1", "--h-max", "2", "--format", "json"]);
    let classes: Vec<_> = v["results"].as_array().unwrap().iter().map(|r| (r["q"].clone(), r["h"].clone())).collect();
    assert_eq!(classes, vec![(0.into(), 0.into()), (3.into(), 0.into())]);
}

#[test]
fn csv_rows_for_homology_of_l1() {
    let out = afflap(&["homology", "--k", "1", "--h-max", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "k,q,w,h,lambda,dim\n1,0,0,0,0,1\n1,1,1,0,0,1\n1,1,-1,1,0,1\n1,2,2,1,0,1\n");
}

#[test]
fn verify_outcomes() {
    let v = json(&["verify", "--id", "euler_pentagonal", "--order", "30", "--format", "json"]);
    assert_eq!(v["results"][0]["passed"], true);
    assert_eq!(afflap(&["verify", "--id", "nope"]).status.code(), Some(2));
    assert_eq!(afflap(&["verify", "--all", "--id", "jacobi_cube"]).status.code(), Some(2));
    let out = afflap(&["verify", "--all", "--order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().filter(|l| l.starts_with("pass")).count(), 16);
}

#[test]
fn singular_tables() {
    let v = json(&["singular", "--k", "2", "--h-max", "3", "--vectors", "--format", "json"]);
    let e4 = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["w"] == 1 && r["lambda"] == 0 && r["q"].is_null())
        .unwrap();
    assert_eq!(e4["dim"], 1);
    assert_eq!(e4["vectors"], serde_json::json!([[{"indices": [4], "coeff": "1"}]]));

    // λ-graded totals for L_{−1} against the per-weight singular series
    let v = json(&["singular", "--k", "-1", "--h-max", "1", "--format", "json"]);
    let report = afflap_core::verify_identity("thm_6_3", 4).unwrap();
    for r in v["results"].as_array().unwrap().iter().filter(|r| r["q"].is_null()) {
        let (w, lambda) = (r["w"].as_u64().unwrap() as usize, r["lambda"].as_u64().unwrap() as usize);
        if lambda < 4 && w < report.parts.len() {
            assert_eq!(r["dim"].to_string(), report.parts[w].lhs[lambda]);
        }
    }
    assert_eq!(afflap(&["singular", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn cg_vectors_are_reported() {
    let v = json(&["singular", "--k", "2", "--h-max", "0", "--cg", "2,4", "--format", "json"]);
    let cg: Vec<_> = v["results"].as_array().unwrap().iter().filter(|r| r.get("p").is_some()).collect();
    assert_eq!(cg.len(), 3);
    assert!(cg.iter().all(|r| r["annihilated"] == true));
}

#[test]
fn level_three_reports_factorizations() {
    let v = json(&["spectrum", "--k", "3", "--h-max", "5", "--format", "json"]);
    let found = v["results"].as_array().unwrap().iter().any(|r| {
        r["factors"].as_array().unwrap().iter().any(|f| f["factor"] == "t^2 - 6t + 7" && f["irreducible"] == true)
    });
    assert!(found);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(afflap(&["spectrum", "--k", "-2", "--h-max", "1"]).status.code(), Some(2));
    assert_eq!(afflap(&["spectrum"]).status.code(), Some(2));
    assert_eq!(afflap(&["bogus"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_afflap"))
        .args(["spectrum", "--k", "1", "--h-max", "1"])
        .env(afflap_cli::JOBS_ENV, "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("afflap-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spectrum.json");
    let path_s = path.to_str().unwrap();
    let out = afflap(&["spectrum", "--k", "1", "--h-max", "3", "--format", "json", "--out", path_s]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let stdout = afflap(&["spectrum", "--k", "1", "--h-max", "3", "--format", "json"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
