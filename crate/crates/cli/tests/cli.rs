use std::process::{Command, Output};

fn cartan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cartan(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn field(text: &str, name: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(name).filter(|rest| rest.starts_with(' ')).map(|r| r.trim().to_string()))
        .unwrap_or_else(|| panic!("no field {name} in\n{text}"))
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn rootsystem_examples() {
    let f4 = stdout(&["rootsystem", "f4"]);
    assert_eq!(field(&f4, "highest_root"), "2,3,4,2");
    assert_eq!(field(&f4, "d_sq"), "2");
    assert_eq!(field(&stdout(&["rootsystem", "a1"]), "d_sq"), "1");
    assert_eq!(field(&stdout(&["rootsystem", "bc3"]), "root_count"), "24");
    let j = json(&["rootsystem", "e8"]);
    assert_eq!(j["root_count"], 240);
    assert_eq!(j["killing"]["delta_sq"], "1/30");
}

#[test]
fn rootsystem_bad_input_exits_2() {
    for kind in ["x9", "d3", "b1", "e9"] {
        assert_eq!(cartan(&["rootsystem", kind]).status.code(), Some(2), "{kind}");
    }
}

#[test]
fn space_examples() {
    let ai = stdout(&["space", "AI:n=4"]);
    assert!(field(&ai, "injectivity_radius").starts_with("pi*sqrt(4) "));
    assert!(field(&ai, "diameter").starts_with("pi*sqrt(8) "));
    let j = json(&["space", "BDI:p=2,q=5", "--canonical"]);
    assert_eq!(j["injectivity_radius"]["radicand"], "1/2");
    let j = json(&["space", "GROUP:e7"]);
    assert_eq!(j["injectivity_radius"]["radicand"], "36");
    assert_eq!(j["injectivity_radius"]["decimal"], "18.8495559215");
}

#[test]
fn space_metric_flags() {
    let eps = json(&["space", "FII", "--epsilon", "1/3"]);
    let ric = json(&["space", "FII", "--ric", "3/2"]);
    assert_eq!(eps, ric);
    assert_eq!(eps["diameter"]["radicand"], "6");
    let both = cartan(&["space", "FII", "--epsilon", "1", "--ric", "1"]);
    assert_eq!(both.status.code(), Some(2));
    assert_eq!(cartan(&["space", "FII", "--epsilon", "-1"]).status.code(), Some(2));
}

#[test]
fn space_exit_codes() {
    assert_eq!(cartan(&["space", "AI:n=3", "--canonical"]).status.code(), Some(3));
    assert_eq!(cartan(&["space", "AIII:p=3,q=2"]).status.code(), Some(2));
    assert_eq!(cartan(&["space", "nonsense"]).status.code(), Some(2));
}

#[test]
fn table_examples() {
    let t = stdout(&["table", "4.2", "--max-param", "4", "--format", "tsv"]);
    let mut lines = t.lines();
    assert_eq!(lines.next().unwrap(), "label\ttype\tspace\tcase\tsigma\tpsi_sq\ti\td");
    let spin8 = t.lines().find(|l| l.contains("Spin(8)")).unwrap();
    assert!(spin8.contains("\td4\t"));
    assert!(spin8.contains("pi*sqrt(12) ~"));
    let t = stdout(&["table", "4.1", "--max-param", "2"]);
    let fii = t.lines().find(|l| l.starts_with("FII ")).unwrap();
    assert_eq!(fii.matches("pi*sqrt(18) ~").count(), 2);
    for ex in ["EI ", "EIX ", "G "] {
        assert!(t.lines().any(|l| l.starts_with(ex)), "{ex}");
    }
}

#[test]
fn table_keeps_sub_case_rows() {
    let t = stdout(&["table", "4.1", "--max-param", "6", "--format", "tsv"]);
    for case in ["1=p<q", "2<=p<q", "4<=p=q", "p=q>=2", "p=1", "n even", "n odd"] {
        assert!(t.lines().any(|l| l.split('\t').nth(3) == Some(case)), "{case}");
    }
}

#[test]
fn cut_examples() {
    let c = stdout(&["cut", "AI:n=3", "--point", "0,0"]);
    assert_eq!(field(&c, "classification"), "Interior");
    // psi/(psi,psi) in Killing units: (psi,psi) = 1/3 and psi = a1 + a2.
    let c = stdout(&["cut", "AI:n=3", "--point", "3,3"]);
    assert_eq!(field(&c, "classification"), "OnCutFace");
    assert_eq!(field(&c, "conjugate"), "true");
    // The reflection of (3,3) in a1 is (0,3).
    let c = stdout(&["cut", "AI:n=3", "--point", "0,3"]);
    assert_eq!(field(&c, "classification"), "OnCutFace");
    assert_eq!(field(&c, "dominant"), "3,3");
    assert_eq!(cartan(&["cut", "AI:n=3", "--point", "1"]).status.code(), Some(2));
    assert_eq!(cartan(&["cut", "AI:n=3", "--point", "a,b"]).status.code(), Some(2));
}

#[test]
fn product_examples() {
    let p = stdout(&["product", "AI:n=4", "AI:n=4"]);
    assert!(field(&p, "diameter").starts_with("pi*sqrt(16) "));
    let single = json(&["product", "GROUP:g2"]);
    let space = json(&["space", "GROUP:g2"]);
    assert_eq!(single["injectivity_radius"], space["injectivity_radius"]);
    assert_eq!(single["diameter"], space["diameter"]);
    let mixed = json(&["product", "AI:n=4", "GROUP:g2"]);
    assert_eq!(mixed["injectivity_radius"]["radicand"], "4");
    assert_eq!(mixed["diameter"]["radicand"], "56/3");
    let scaled = json(&["product", "AI:n=4@1/2"]);
    assert_eq!(scaled["diameter"]["radicand"], "4");
    assert_eq!(cartan(&["product"]).status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["space", "EIII", "--format", "json"],
        vec!["rootsystem", "g2", "--format", "json"],
        vec!["table", "4.2", "--max-param", "4", "--format", "json"],
        vec!["cut", "G", "--point", "1,2", "--format", "json"],
    ] {
        let text = stdout(&args);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text, "{args:?}");
    }
}

#[test]
fn markdown_has_table_shape() {
    let md = stdout(&["space", "G", "--format", "markdown"]);
    let mut lines = md.lines();
    assert_eq!(lines.next().unwrap(), "| field | value |");
    assert_eq!(lines.next().unwrap(), "|---|---|");
}

#[test]
fn verify_is_deterministic_and_passes() {
    let args = ["verify", "--seed", "42", "--samples", "2000"];
    let a = cartan(&args);
    let b = cartan(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "name\texact\tnumeric\terror\tpass");
    assert!(text.lines().skip(1).all(|l| l.ends_with("\tPASS")));
    assert!(text.lines().any(|l| l.starts_with("table4.1/EVIII\t")));
    assert!(text.lines().any(|l| l.starts_with("closure_count/bc2\t12\t")));
}
