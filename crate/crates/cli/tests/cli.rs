use std::path::PathBuf;
use std::process::{Command, Output};

use macbax_cli::commands::family_poly;
use macbax_cli::job::{Family, Param};
use macbax_cli::json::{decode_coeff, decode_symfunc};
use macbax_core::gamma::gamma_qt_coeff;
use macbax_core::partition::Partition;
use macbax_core::ratfunc::{int, kappa, q, t};
use macbax_core::Var;
use serde_json::Value;

fn macbax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macbax")).args(args).env_remove("MACBAX_CACHE_DIR").output().unwrap()
}

fn json_of(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn p(v: &[i64]) -> Partition {
    Partition::new(v).unwrap()
}

fn temp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("macbax-{}-{}", tag, std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn expand_macdonald_row() {
    let v = json_of(&macbax(&["expand", "--family", "macdonald", "--partition", "2", "--rank", "2", "--symbolic"]));
    let f = decode_symfunc(&v["polynomial"], 2).unwrap();
    assert_eq!(f.terms().count(), 2);
    assert_eq!(f.coeff(&p(&[2])), int(1));
    let want = int(1).add(&q()).mul(&int(1).sub(&t())).div(&int(1).sub(&q().mul(&t())));
    assert_eq!(f.coeff(&p(&[1, 1])), want);
}

#[test]
fn expand_jack_and_qwhittaker() {
    let v = json_of(&macbax(&["expand", "--family", "jack", "--partition", "1,1", "--rank", "2"]));
    let f = decode_symfunc(&v["polynomial"], 2).unwrap();
    assert_eq!(f.terms().count(), 1);
    assert_eq!(f.coeff(&p(&[1, 1])), int(1));
    let v = json_of(&macbax(&["expand", "--family", "qwhittaker", "--partition", "1,0", "--rank", "2"]));
    let f = decode_symfunc(&v["polynomial"], 2).unwrap();
    assert_eq!(f.terms().count(), 1);
    assert_eq!(f.coeff(&p(&[1])), int(1).div(&int(1).sub(&q())));
}

#[test]
fn expand_round_trips() {
    let jobs: [(Family, &str, &str, usize, &[&str], Param); 5] = [
        (Family::Macdonald, "macdonald", "2,1", 3, &["--symbolic"], Param::Symbolic),
        (Family::Macdonald, "macdonald", "2,2", 2, &["--t-spec", "q^2"], Param::TPow(2)),
        (Family::Qwhittaker, "qwhittaker", "3,1", 3, &[], Param::Symbolic),
        (Family::Jack, "jack", "2,1", 3, &[], Param::Symbolic),
        (Family::Jack, "jack", "3", 2, &["--kappa", "3"], Param::Kappa(3)),
    ];
    for (fam, name, part, n, extra, param) in jobs {
        let ns = n.to_string();
        let mut args = vec!["expand", "--family", name, "--partition", part, "--rank", &ns];
        args.extend_from_slice(extra);
        let v = json_of(&macbax(&args));
        let parts: Vec<i64> = part.split(',').map(|x| x.parse().unwrap()).collect();
        let want = family_poly(fam, &p(&parts), n, param).unwrap();
        assert_eq!(decode_symfunc(&v["polynomial"], n).unwrap(), want, "{} {}", name, part);
    }
}

#[test]
fn terms_are_graded_lex() {
    let v = json_of(&macbax(&["expand", "--family", "macdonald", "--partition", "3,1", "--rank", "3"]));
    let parts: Vec<Vec<u64>> = v["polynomial"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["partition"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    assert_eq!(parts, vec![vec![3, 1], vec![2, 2], vec![2, 1, 1]]);
}

#[test]
fn eigen_table_rows() {
    let v = json_of(&macbax(&["table", "--family", "macdonald", "--rank", "2", "--max-weight", "2"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    // λ = 0: e₁(t, 1) = 1 + t
    assert_eq!(decode_coeff(&rows[0]["eigenvalues"][0]).unwrap(), int(1).add(&t()));
}

#[test]
fn baxter_table_is_row_coefficients() {
    let v = json_of(&macbax(&["baxter", "--family", "macdonald", "--rank", "1", "--gamma", "0", "--t-spec", "q^2", "--max-weight", "4"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for (m, row) in rows.iter().enumerate() {
        let want = gamma_qt_coeff(m as u32).subs_mono(Var::T, [4, 0, 0, 0]).unwrap();
        assert_eq!(decode_coeff(&row["value"]).unwrap(), want, "m={}", m);
    }
}

#[test]
fn sekiguchi_at_empty_partition() {
    let v = json_of(&macbax(&["table", "--family", "jack", "--rank", "2", "--partition", "0"]));
    let ev: Vec<_> = v["rows"][0]["eigenvalues"].as_array().unwrap().iter().map(|c| decode_coeff(c).unwrap()).collect();
    // X(X + κ)
    assert_eq!(ev, vec![int(0), kappa(), int(1)]);
}

#[test]
fn dual_baxter_z_coefficients() {
    let v = json_of(&macbax(&["baxter", "--family", "macdonald", "--rank", "2", "--partition", "0", "--z-order", "1"]));
    let cs = v["z_coefficients"].as_array().unwrap();
    assert_eq!(cs.len(), 2);
    let c1 = decode_symfunc(&cs[1], 2).unwrap();
    assert_eq!(c1.coeff(&p(&[1])), gamma_qt_coeff(1));
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn verify_is_deterministic() {
    let base = ["verify", "--suite", "eigen", "--family", "jack", "--rank", "3", "--max-weight", "3"];
    let run = |jobs: &str| {
        let mut a = base.to_vec();
        a.extend(["--jobs", jobs]);
        strip_timing(json_of(&macbax(&a)))
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("4"));
    assert_eq!(one["passed"], Value::Bool(true));
    let a = macbax(&["expand", "--family", "jack", "--partition", "2,1", "--rank", "3"]);
    let b = macbax(&["expand", "--family", "jack", "--partition", "2,1", "--rank", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_examples_pass() {
    let o = macbax(&["verify", "--suite", "pieri", "--family", "macdonald", "--rank", "3", "--max-weight", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = macbax(&["verify", "--suite", "gamma", "--q-order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = macbax(&["verify", "--suite", "mixed", "--family", "qwhittaker", "--rank", "3", "--partition", "2,1,0", "--q-order", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn perturbation_fails_with_witness() {
    for args in [
        vec!["verify", "--suite", "eigen", "--family", "macdonald", "--rank", "2", "--max-weight", "2", "--debug-perturb"],
        vec!["verify", "--suite", "branching", "--family", "jack", "--rank", "2", "--max-weight", "2", "--debug-perturb"],
        vec!["verify", "--suite", "gamma", "--q-order", "3", "--debug-perturb"],
    ] {
        let o = macbax(&args);
        assert_eq!(o.status.code(), Some(1), "{:?}", args);
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["passed"], Value::Bool(false));
        assert!(v["first_failure"]["witness"].is_string());
    }
}

#[test]
fn invalid_jobs_exit_2() {
    for args in [
        vec!["expand", "--family", "macdonald", "--partition", "3,0,1", "--rank", "3"],
        vec!["expand", "--family", "macdonald", "--partition", "1,1,1", "--rank", "2"],
        vec!["expand", "--family", "jack", "--partition", "1", "--rank", "1", "--t-spec", "q^2"],
        vec!["expand", "--family", "macdonald", "--partition", "1", "--rank", "1", "--kappa", "2", "--symbolic"],
        vec!["expand", "--partition", "1", "--rank", "1"],
        vec!["verify", "--suite", "baxter", "--family", "macdonald", "--rank", "2", "--max-weight", "2"],
        vec!["verify", "--suite", "gamma"],
        vec!["verify", "--suite", "cauchy", "--family", "jack", "--rank", "2"],
        vec!["verify", "--suite", "pieri", "--family", "jack", "--rank", "2", "--max-weight", "2", "--debug-perturb"],
        vec!["table", "--family", "macdonald", "--rank", "2", "--t-spec", "q^0", "--max-weight", "1"],
    ] {
        assert_eq!(macbax(&args).status.code(), Some(2), "{:?}", args);
    }
}

#[test]
fn cache_is_write_once_and_transparent() {
    let dir = temp_dir("cache");
    let args = ["expand", "--family", "macdonald", "--partition", "2,1", "--rank", "3", "--t-spec", "q^1"];
    let run = || Command::new(env!("CARGO_BIN_EXE_macbax")).args(args).env("MACBAX_CACHE_DIR", &dir).output().unwrap();
    let first = run();
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, macbax(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_flag_writes_file() {
    let dir = temp_dir("out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let o = macbax(&["table", "--family", "qwhittaker", "--rank", "2", "--max-weight", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
