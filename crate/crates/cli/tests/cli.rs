//! Golden outputs for the command-line front end. Set `UPDATE_GOLDEN=1` to
//! rewrite the expected files after an intended change.

use std::path::{Path, PathBuf};
use std::process::Command;

use zinbiel_core::free::{expand, parse_expr, Alphabet};

fn manifest() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> String {
    manifest().join("../core/tests/fixtures/rota_baxter").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_zinbiel")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn golden(name: &str, args: &[&str], code: i32) {
    let (stdout, stderr, status) = run(args);
    assert_eq!(status, code, "{name}: stderr {stderr}");
    let path: PathBuf = manifest().join("tests/golden").join(format!("{name}.txt"));
    // fixture paths are machine-specific
    let stdout = stdout.replace(&fixture(""), "<fixtures>/");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(stdout, expected, "{name}");
}

const XY: &str = "x:odd,y:even";

#[test]
fn free_algebra_commands() {
    golden("expand_commutator", &["expand", "--alphabet", XY, "[x,y]"], 0);
    golden("expand_anticommutator_odd", &["expand", "--alphabet", "x:odd,z:odd", "{x,z} - 1/2*x o z"], 0);
    golden("shuffle_mixed", &["shuffle", "--alphabet", XY, "x*y", "y*x"], 0);
    golden("pmap_word", &["pmap", "--alphabet", XY, "x*y*x*y"], 0);
    golden("is_special_bar", &["is-special", "--alphabet", XY, "bar(x*y*x*y)"], 0);
    golden("is_special_word", &["is-special", "--alphabet", XY, "x*y"], 1);
    golden(
        "ideal_check_exceptional",
        &["ideal-check", "--alphabet", XY, "--gens", "bar(y*y*x);y*x*x", "--degree", "x:2,y:2"],
        1,
    );
    golden("ideal_check_special", &["ideal-check", "--alphabet", XY, "--gens", "[x,y]", "--degree", "x:1,y:2"], 0);
    golden("ideal_check_json", &["--json", "ideal-check", "--alphabet", XY, "--gens", "bar(y*y*x);y*x*x", "--degree", "x:2,y:2"], 1);
}

#[test]
fn structure_constant_commands() {
    golden("catalog_family", &["catalog", "--entry", "T^9_{2|1}", "--envelope-generators", "0"], 0);
    golden("catalog_odd_square", &["catalog", "--entry", "T^2_{1|2}", "--envelope-generators", "2"], 1);
    golden("envelope_entry", &["envelope", "--entry", "T^4_{1|2}", "--parameter", "2", "--generators", "3"], 0);
    let alg = fixture("grassmann_unital.alg");
    golden("verify_identities", &["verify", "--algebra", &alg, "--identity", "super-commutative-associative,super-zinbiel"], 1);
    golden("verify_json", &["--json", "verify", "--algebra", &alg, "--identity", "super-anti-commutative"], 1);
}

#[test]
fn rota_baxter_commands() {
    let (alg, op) = (fixture("truncated_polynomials.alg"), fixture("truncated_polynomials.op"));
    golden("rb_tower_even", &["rb-tower", "--algebra", &alg, "--operator", &op, "--levels", "3"], 0);
    let (alg, op) = (fixture("grassmann_unital.alg"), fixture("grassmann_unital_odd.op"));
    golden("rb_tower_odd", &["rb-tower", "--algebra", &alg, "--operator", &op, "--levels", "0"], 0);
    // the identity is not Rota–Baxter on x K[x]/(x^4)
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("identity.op");
    std::fs::write(&bad, "parity even\n1 1 1\n2 2 1\n3 3 1\n").unwrap();
    let alg = fixture("truncated_polynomials.alg");
    golden("rb_tower_rejected", &["rb-tower", "--algebra", &alg, "--operator", bad.to_str().unwrap()], 1);
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    for args in [
        vec!["frobnicate"],
        vec!["expand", "--alphabet", XY, "[x,"],
        vec!["expand", "--alphabet", "x:sideways", "x"],
        vec!["expand", "--alphabet", XY, "q"],
        vec!["catalog", "--entry", "T^99_{2|1}"],
        vec!["verify", "--algebra", "/nonexistent", "--identity", "malcev"],
        vec!["envelope", "--entry", "T^9_{2|1}"],
        vec!["ideal-check", "--alphabet", XY, "--gens", "x*y", "--degree", "x:2,y:2"],
    ] {
        let (stdout, stderr, code) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty(), "{args:?}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
    let (_, stderr, code) = run(&["verify", "--algebra", &fixture("grassmann_ideal.alg"), "--identity", "frobenius"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown identity `frobenius`"));
}

#[test]
fn output_is_the_engine_result_and_is_stable() {
    let al = Alphabet::parse_inline("x:odd,y:even,z:odd").unwrap();
    for src in ["[[x,y],z]", "bar(x*y*z) + 2/3*[x,z]", "(x sh y) o z - x o (y sh z)", "{x,{y,z}}"] {
        let direct = al.format(&expand(&parse_expr(src).unwrap(), &al).unwrap());
        let (stdout, _, code) = run(&["expand", "--alphabet", "x:odd,y:even,z:odd", src]);
        assert_eq!(code, 0);
        assert_eq!(stdout, format!("{direct}\n"), "{src}");
    }
    let args = ["--json", "catalog", "--entry", "T^3_{1|2}", "--envelope-generators", "2"];
    assert_eq!(run(&args), run(&args));
    let parsed: serde_json::Value = serde_json::from_str(&run(&args).0).unwrap();
    assert_eq!(parsed["verdict"], "holds");
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 5);
}
