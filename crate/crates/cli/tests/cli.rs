mod common;

use std::process::{Command, Output};

use common::*;
use germforge_cli::report::labels;
use germforge_cli::{pair_subject, parse_germ_file, GermReport};

fn germforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germforge")).args(args).env_remove("GERMFORGE_LIMITS").output().unwrap()
}

fn path_str(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn tame_inner_map_exits_zero_under_strict() {
    let out = germforge(&["--strict", "tame-check", &path_str("untame_composite.germ"), "F"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn failed_condition_exits_one_only_under_strict() {
    let file = path_str("untame_composite.germ");
    assert_eq!(germforge(&["compose-check", &file, "F", "G"]).status.code(), Some(0));
    assert_eq!(germforge(&["--strict", "compose-check", &file, "F", "G"]).status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = std::env::temp_dir().join(format!("germforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.germ");
    std::fs::write(&bad, "vars x y;\nmap F : 2 -> 2 = [x];\n").unwrap();
    let out = germforge(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2:"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exhausted_budget_exits_three() {
    let out = germforge(&["--max-pairs", "1", "gb", "x^3 - y^2, x*y - z, y*z - x^2", "--order", "lex"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_limits_apply_and_flags_override_them() {
    let ideal = "x^3 - y^2, x*y - z, y*z - x^2";
    let bin = env!("CARGO_BIN_EXE_germforge");
    let env_only = Command::new(bin).args(["gb", ideal]).env("GERMFORGE_LIMITS", "max-pairs=1").output().unwrap();
    assert_eq!(env_only.status.code(), Some(3));
    let overridden = Command::new(bin).args(["--max-pairs", "100000", "gb", ideal]).env("GERMFORGE_LIMITS", "max-pairs=1").output().unwrap();
    assert_eq!(overridden.status.code(), Some(0));
}

#[test]
fn json_output_parses_back_to_the_same_report() {
    let out = germforge(&["--json", "-", "compose-check", &path_str("untame_composite.germ"), "F", "G"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let report: GermReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.to_json(), text.trim_end());
    assert!(!report.verdict(labels::TAMELY_COMPOSABLE, &pair_subject("F", "G")).unwrap().holds);
}

#[test]
fn json_file_is_written_alongside_text() {
    let dir = std::env::temp_dir().join(format!("germforge-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let out = germforge(&["--json", target.to_str().unwrap(), "tame-check", &path_str("id_cusp.germ"), "G"]);
    assert!(out.status.success());
    assert!(!out.stdout.is_empty());
    let report: GermReport = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert!(report.verdict(labels::TAME, "G").unwrap().holds);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn printing_then_parsing_is_the_identity_on_the_corpus() {
    for path in corpus() {
        let file = load(&path);
        let reparsed = parse_germ_file(&file.to_string()).unwrap();
        assert_eq!(reparsed.to_string(), file.to_string(), "{}", path.display());
    }
}

#[test]
fn tame_composite_implies_composable_across_the_corpus() {
    let subject = pair_subject("F", "G");
    for path in corpus() {
        let r = compose_check(&path);
        let composite_tame = r.verdict(labels::TAME, &subject).unwrap().holds;
        let g_tame = r.verdict(labels::TAME, "G").unwrap().holds;
        if composite_tame && g_tame {
            assert!(r.verdict(labels::TAMELY_COMPOSABLE, &subject).unwrap().holds, "{}", path.display());
        }
    }
}

#[test]
fn sufficient_condition_implies_composable_across_the_corpus() {
    let subject = pair_subject("F", "G");
    for path in corpus() {
        let r = compose_check(&path);
        if r.verdict(labels::COROLLARY, &subject).unwrap().holds {
            assert!(r.verdict(labels::TAMELY_COMPOSABLE, &subject).unwrap().holds, "{}", path.display());
        }
    }
}

#[test]
fn equivalent_forms_agree_across_the_corpus() {
    let subject = pair_subject("F", "G");
    for path in corpus() {
        let r = compose_check(&path);
        let composable = r.verdict(labels::TAMELY_COMPOSABLE, &subject).unwrap().holds;
        for label in [labels::WITH_SINGULAR_LOCUS, labels::IMAGE_FORM] {
            assert_eq!(r.verdict(label, &subject).unwrap().holds, composable, "{} {label}", path.display());
        }
    }
}

#[test]
fn gb_prints_the_reduced_basis() {
    let out = germforge(&["--json", "-", "gb", "x^2 - y, x*y - 1", "--vars", "x,y", "--order", "lex"]);
    assert!(out.status.success());
    let report: GermReport = serde_json::from_slice(&out.stdout).unwrap();
    let basis = report.basis.unwrap();
    assert_eq!(basis.colength, Some(3));
    assert_eq!(basis.basis.len(), 2);
}

#[test]
fn unknown_map_is_an_ordinary_error() {
    let out = germforge(&["tame-check", &path_str("id_cusp.germ"), "K"]);
    assert_eq!(out.status.code(), Some(1));
}
