use std::process::{Command, Output};

fn hopfbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfbench")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn eval(p: &str, extra: &[&str], expr: &str) -> String {
    let mut args = vec!["eval", "--p", p];
    args.extend_from_slice(extra);
    args.push(expr);
    let o = hopfbench(&args);
    assert!(o.status.success(), "eval {expr:?} failed: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn del_z_is_its_normal_form() {
    for p in ["2", "3"] {
        let lhs = eval(p, &[], "del * z");
        assert_eq!(lhs, eval(p, &[], "(q - q^-1) + q^-2 z del"), "p = {p}");
        assert!(lhs.starts_with("(q − q^{-1})·1"), "{lhs}");
    }
    assert_eq!(eval("2", &[], "del * z"), "(q − q^{-1})·1 − z·del");
}

#[test]
fn e_acts_on_z_by_minus_q_z_squared() {
    assert_eq!(eval("3", &["--structure", "action"], "E |> z"), "−q·z^2");
    // z^2 = 0 at p = 2.
    assert_eq!(eval("2", &["--structure", "action"], "E |> z"), "0");
    assert_eq!(eval("3", &["--structure", "action", "--algebra", "hqsl2"], "E |> z"), "−q·z^2");
}

#[test]
fn smash_unit_and_exponent_normalization() {
    assert_eq!(eval("2", &[], "1 # 1"), "1");
    assert_eq!(eval("2", &[], "E^2"), "0");
    assert_eq!(eval("2", &[], "k k^-1"), "1");
    assert_eq!(eval("2", &[], "-q z"), eval("2", &[], "q^-1 z"));
    assert_eq!(eval("2", &[], "K E K^-1"), eval("2", &["--algebra", "uqsl2"], "q^2 E"));
}

#[test]
fn braiding_and_coaction_render() {
    let b = eval("2", &["--structure", "braiding"], "z ⊗ del");
    assert_eq!(b, eval("2", &["--structure", "braiding"], "z | del"));
    assert!(b.contains('⊗'), "{b}");
    let c = eval("2", &["--structure", "coaction"], "1");
    assert_eq!(c, "1 ⊗ 1");
}

#[test]
fn exit_codes() {
    let usage = hopfbench(&["verify", "--p", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    let parse = hopfbench(&["eval", "--p", "2", "z + * del"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("position 4"));
    assert_eq!(hopfbench(&["verify", "--p", "2", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(hopfbench(&["verify", "--p", "2", "--mode", "sample", "--sample-size", "0"]).status.code(), Some(2));
    assert_eq!(hopfbench(&["export", "--p", "2", "nothing"]).status.code(), Some(2));
    let ok = hopfbench(&["verify", "--p", "2", "--suite", "remarks", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));
    let mutations = hopfbench(&["verify", "--p", "2", "--suite", "mutations", "--jobs", "2"]);
    assert_eq!(mutations.status.code(), Some(1));
}

#[test]
fn export_import_export_is_byte_identical() {
    let dir = std::env::temp_dir().join(format!("hopfbench-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for object in ["uqsl2", "hqsl2", "chain(2)", "cqzd"] {
        let a = dir.join("a.json");
        let b = dir.join("b.json");
        let out = hopfbench(&["export", "--p", "2", object, "--out", a.to_str().unwrap()]);
        assert!(out.status.success(), "{object}: {}", String::from_utf8_lossy(&out.stderr));
        let back = hopfbench(&["import", a.to_str().unwrap(), "--out", b.to_str().unwrap()]);
        assert!(back.status.success(), "{object}: {}", String::from_utf8_lossy(&back.stderr));
        let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert_eq!(x, y, "{object}");
        if object == "uqsl2" {
            let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
            assert_eq!(v["dim"], 16);
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}
