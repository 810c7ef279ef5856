use std::process::{Command, Output};

fn deutsch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deutsch"))
        .args(args)
        .env_remove("DEUTSCH_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_output_is_deterministic() {
    let a = deutsch(&["series", "phi0-t", "--order", "12"]);
    let b = deutsch(&["series", "phi0-t", "--order", "12"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().nth(7), Some("7\t17+13t+6t^2"));
}

#[test]
fn json_and_tsv_agree() {
    let tsv = stdout(&deutsch(&["series", "open", "--order", "10"]));
    let json = stdout(&deutsch(&["series", "open", "--order", "10", "--format", "json"]));
    let records: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    for (line, record) in tsv.lines().zip(&records) {
        let (key, value) = line.split_once('\t').unwrap();
        assert_eq!(record["key"], key);
        assert_eq!(record["values"][0], value);
    }
    assert_eq!(records.len(), 11);
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_deutsch"))
        .args(["count", "--length", "8"])
        .env("DEUTSCH_ENUM_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 6"));
}

#[test]
fn exit_codes() {
    assert_eq!(deutsch(&["series", "bogus", "--order", "3"]).status.code(), Some(2));
    assert_eq!(deutsch(&["count", "--length", "4", "--stanley", "--open"]).status.code(), Some(2));
    assert_eq!(deutsch(&["asymptotics", "--n", "0"]).status.code(), Some(2));
    assert_eq!(deutsch(&["verify", "--max-length", "0", "--max-order", "0"]).status.code(), Some(0));
    let faulty = deutsch(&["verify", "--max-length", "5", "--max-order", "8", "--inject-fault"]);
    assert_eq!(faulty.status.code(), Some(1));
    assert!(stdout(&faulty).contains("z^2"));
}

#[test]
fn default_verify_run_passes() {
    let o = deutsch(&["verify"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn asymptotics_report_lines() {
    let o = deutsch(&["asymptotics", "--n", "7", "--format", "json"]);
    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records[0]["key"], "7");
    let values: Vec<&str> = records[0]["values"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert!(values.contains(&"mean=25/36"));
    assert!(values.contains(&"total=36"));
    assert!(values.contains(&"weighted=25"));
}
