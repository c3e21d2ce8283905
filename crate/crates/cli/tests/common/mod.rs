#![allow(dead_code)]

use std::path::{Path, PathBuf};

use germforge_cli::{parse_germ_file, run, Command, GermFile, GermReport, Options};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

/// Every `.germ` file in the corpus, sorted by name.
pub fn corpus() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "germ"))
        .collect();
    files.sort();
    files
}

pub fn load(path: &Path) -> GermFile {
    parse_germ_file(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn compose_check(path: &Path) -> GermReport {
    run(&Command::ComposeCheck { file: path.to_path_buf(), inner: "F".into(), outer: "G".into() }, &Options::default()).unwrap()
}

pub fn tame_check(path: &Path, map: &str) -> GermReport {
    run(&Command::TameCheck { file: path.to_path_buf(), map: map.into() }, &Options::default()).unwrap()
}

pub fn analyze(path: &Path) -> GermReport {
    run(&Command::Analyze { file: path.to_path_buf() }, &Options::default()).unwrap()
}

pub fn fiber_report(path: &Path, seed: u64) -> GermReport {
    let opts = Options { seed, ..Options::default() };
    run(&Command::FiberReport { file: path.to_path_buf(), inner: "F".into(), outer: "G".into() }, &opts).unwrap()
}

/// `F` is the identity when its components are its own variables, in order.
pub fn inner_is_identity(file: &GermFile) -> bool {
    let Some(f) = file.map_def("F") else { return false };
    f.components.len() == f.source.nvars() && f.components.iter().zip(f.source.vars()).all(|(c, v)| c.to_string() == *v)
}

pub fn outer_target_dim(file: &GermFile) -> usize {
    file.map_def("G").map_or(0, |g| g.components.len())
}
