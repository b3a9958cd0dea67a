use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wright-geom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Arguments for the four mapping panels.
fn panels() -> Vec<(&'static str, Vec<String>)> {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let r3 = (1.0 + 3f64.sqrt()).to_string();
    let (s2, s3) = (2f64.sqrt().to_string(), 3f64.sqrt().to_string());
    vec![
        (
            "panel_a.svg",
            s(&["plot", "--family", "confluent", "--b", "1.5", "--region", "disk"]),
        ),
        (
            "panel_b.svg",
            s(&["plot", "--family", "confluent", "--b", "1", "--region", "half"]),
        ),
        (
            "panel_c.svg",
            s(&["plot", "--family", "confluent", "--b", &r3, "--region", "half"]),
        ),
        (
            "panel_d.svg",
            s(&[
                "plot", "--family", "four", "--mu", "1", "--a", &s2, "--nu", "1", "--b", &s3, "--region", "half",
            ]),
        ),
    ]
}

#[test]
fn panels_match_golden() {
    let bless = std::env::var_os("WRIGHT_GEOM_BLESS").is_some();
    for (name, args) in panels() {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden_dir().join(name);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let want = std::fs::read(&path)
            .unwrap_or_else(|_| panic!("missing {}; rerun with WRIGHT_GEOM_BLESS=1", path.display()));
        assert!(want == out.stdout, "{name} differs from golden");
    }
}

#[test]
fn plot_and_sweep_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 3] = [
        &["plot", "--family", "confluent", "--b", "1.5"],
        &[
            "sweep",
            "--family",
            "two",
            "--vary",
            "nu",
            "--lo",
            "0.5",
            "--hi",
            "1.2",
            "--steps",
            "15",
            "--fix",
            "b=4",
            "--criterion",
            "kt2_convex_half",
            "--json",
        ],
        &[
            "sweep",
            "--family",
            "bessel",
            "--vary",
            "beta",
            "--lo",
            "1",
            "--hi",
            "2",
            "--steps",
            "6",
            "--criterion",
            "threshold_starlike",
            "--oracle",
            "--grid-radii",
            "8",
            "--grid-angles",
            "32",
        ],
    ];
    for (i, args) in cases.iter().enumerate() {
        let mut files = Vec::new();
        for k in 0..2 {
            let p = dir.path().join(format!("{i}_{k}"));
            let mut a: Vec<&str> = args.to_vec();
            a.extend(["--out", p.to_str().unwrap()]);
            let o = run(&a);
            assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
            files.push(std::fs::read(&p).unwrap());
        }
        assert!(!files[0].is_empty());
        assert_eq!(files[0], files[1], "case {i}");
    }
}

#[test]
fn criteria_exit_codes() {
    let o = run(&["criteria", "--mu", "1", "--a", "1", "--nu", "1", "--b", "2.5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let kt4 = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["theorem_id"] == "kt4_starlike_half")
        .unwrap();
    assert_eq!(kt4["verdict"], "Established");

    let o = run(&[
        "criteria",
        "--family",
        "bessel",
        "--beta",
        "1.4",
        "--criterion",
        "threshold_starlike",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "criteria",
        "--family",
        "confluent",
        "--b",
        "2.8",
        "--criterion",
        "threshold_convex_i",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["criteria", "--criterion", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_examples() {
    let o = run(&[
        "eval", "--family", "four", "--mu", "1", "--a", "1", "--nu", "1", "--b", "2", "--z", "0.5+0i", "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let p = wright_geom::Params64::new(1.0, 1.0, 1.0, 2.0).unwrap();
    let want = wright_geom::series::eval_wright4(&p, num_complex::Complex64::new(0.5, 0.0), 1e-12).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - want.value.re).abs() <= 1e-15 * want.value.re);
    assert!(v["tail_bound"].as_f64().unwrap() <= 1e-12);

    let o = run(&[
        "eval", "--family", "bessel", "--beta", "1.5", "--z", "0.25", "--tol", "1e-16", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // Γ(5/2) z^{1/4} J_{3/2}(1), J_{3/2}(1) = √(2/π)(sin 1 − cos 1)
    let j = (2.0 / std::f64::consts::PI).sqrt() * (1f64.sin() - 1f64.cos());
    let want = 0.75 * std::f64::consts::PI.sqrt() * 0.25f64.powf(0.25) * j;
    assert!((v["value"][0].as_f64().unwrap() - want).abs() <= 1e-14);

    let o = run(&["eval", "--family", "two", "--b", "2", "--nu", "1.5", "--z", "0"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("value: 0.0000000000000000e0 +0.0000000000000000e0i"));
    assert_eq!(run(&["eval", "--a", "0", "--z", "1"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let o = run(&[
        "verify",
        "--family",
        "four",
        "--b",
        "2.5",
        "--property",
        "starlike",
        "--region",
        "half",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["margin"].as_f64().unwrap() > 0.0);
    assert_eq!(v["grid"]["r_max"].as_f64(), Some(0.499));

    let o = run(&[
        "verify",
        "--family",
        "four",
        "--a",
        "14",
        "--b",
        "0.6",
        "--property",
        "convex",
        "--region",
        "half",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--family", "identity", "--property", "sp"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("margin: 5.000000000000e-1"));
    // a disk that is far from convex
    let o = run(&["verify", "--family", "confluent", "--b", "0.2", "--property", "convex"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "verify",
        "--family",
        "four",
        "--mu",
        "2",
        "--nu",
        "2",
        "--property",
        "half-plane",
        "--partial",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--property", "starlike", "--r-max", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn zeros_examples() {
    let o = run(&[
        "zeros",
        "--mu",
        "1.5",
        "--nu",
        "1.5",
        "--n",
        "8",
        "--exterior",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["min_modulus"].as_f64().unwrap() > 1.0);
    assert_eq!(v["roots"].as_array().unwrap().len(), 8);
    assert_eq!(v["exterior"], true);

    let o = run(&["zeros", "--a", "2", "--b", "2", "--n", "6", "--kind", "qfactor"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("kakeya_applicable: true"));
    // hypotheses of the raw theorem need μ, ν > 1
    let o = run(&["zeros", "--n", "6", "--exterior"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_json_keys_and_errors() {
    let o = run(&[
        "sweep",
        "--family",
        "confluent",
        "--vary",
        "b",
        "--lo",
        "1",
        "--hi",
        "4",
        "--steps",
        "7",
        "--criterion",
        "threshold_sp",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in ["family", "varying", "rows", "boundaries"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    let b = v["boundaries"][0]["value"].as_f64().unwrap();
    assert!((b - (5.0 + 89f64.sqrt()) / 4.0).abs() <= 1e-6);
    let o = run(&[
        "sweep",
        "--family",
        "bessel",
        "--vary",
        "b",
        "--lo",
        "1",
        "--hi",
        "2",
        "--criterion",
        "threshold_sp",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
