use std::io::Write;
use std::process::{Command, Output};

fn fibercheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibercheck"))
        .args(args)
        .output()
        .expect("run fibercheck")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn all_claims_pass() {
    let o = fibercheck(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("12/12 claims pass"), "{text}");
    assert!(text.contains("NOTE SKIP"));
}

#[test]
fn claim_report_json_is_one_object_per_claim() {
    let o = fibercheck(&["--json", "verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0]["id"], "C1");
    assert_eq!(lines[11]["id"], "C12");
    assert!(lines.iter().all(|l| l["verdict"] == "PASS"));
}

#[test]
fn single_claim_and_unknown_claim() {
    let o = fibercheck(&["verify-paper", "--claim", "C8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 claims pass"));
    let o = fibercheck(&["verify-paper", "--claim", "C13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("C1, C2"));
}

#[test]
fn mutated_scenario_exits_one() {
    let text = fibercheck::paperlab::SPHERE_MAP_SCENARIO.replace("z - 1/4\n", "z - 1/5\n");
    let mut file = tempfile_path("mutated.scn");
    file.1.write_all(text.as_bytes()).unwrap();
    let o = fibercheck(&["--scenario", file.0.to_str().unwrap(), "verify-paper"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}

fn tempfile_path(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    let f = std::fs::File::create(&path).unwrap();
    (path, f)
}

#[test]
fn groebner_basis_of_the_circle() {
    let o = fibercheck(&[
        "gb",
        "--field",
        "qsqrt:3",
        "--vars",
        "x,y,z",
        "--order",
        "grevlex",
        "x^2+y^2+z^2-z",
        "z-1/4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "{z - 1/4, x^2 + y^2 - 3/16}");
}

#[test]
fn ideal_subcommands() {
    let o = fibercheck(&["nf", "x^3", "x^2 - 2"]);
    assert_eq!(stdout(&o).trim(), "2*x");
    let o = fibercheck(&[
        "eliminate",
        "--drop",
        "t",
        "--vars",
        "t,x,y",
        "x - t^2",
        "y - t^3",
    ]);
    assert_eq!(stdout(&o).trim(), "{x^3 - y^2}");
    let o = fibercheck(&["dim", "x*y"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = fibercheck(&["member", "x^2", "x*y", "x - y"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = fibercheck(&["member", "x", "x^2"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = fibercheck(&["radical-member", "x", "x^2"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = fibercheck(&["min-primes", "x*y", "x*z", "y*z"]);
    assert_eq!(stdout(&o), "(y, x)\n(z, x)\n(z, y)\ncertified: true\n");
}

#[test]
fn map_subcommands() {
    let o = fibercheck(&["fiber", "--point", "0,0,0"]);
    assert_eq!(stdout(&o), "(0, 0, 0)\n(0, 0, 1)\n");
    let o = fibercheck(&["finite"]);
    assert!(stdout(&o).starts_with("true"));
    let o = fibercheck(&["--map", "proj", "finite"]);
    assert!(stdout(&o).starts_with("false"));
    let o = fibercheck(&["image", "z - 1/4"]);
    assert_eq!(stdout(&o).trim(), "{c - 3/16, a^2 + 4*b^2 - 3/64}");
    let o = fibercheck(&["preimage", "a", "b", "c"]);
    assert_eq!(o.status.code(), Some(0));
    let o = fibercheck(&["contract", "z - 3/4", "y", "x + s/4"]);
    assert_eq!(stdout(&o).trim(), "{c - 3/16, b, a - 1/8*s}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        fibercheck(&["gb", "--order", "bogus", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(fibercheck(&["gb", "x +"]).status.code(), Some(2));
    assert_eq!(
        fibercheck(&["gb", "--field", "qsqrt:4", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(fibercheck(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(fibercheck(&["gb", "w"]).status.code(), Some(2));
}
