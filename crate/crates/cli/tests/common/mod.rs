#![allow(dead_code)]

pub mod oracle;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use unavoid::construct::star_colouring;
use unavoid::generate::{
    cyclic_blowup, random_colouring, random_graph, random_tournament, transitive_tournament,
};
use unavoid::io;

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_unavoid")
}

pub fn run(args: &[String]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn run_threads(threads: usize, args: &[String]) -> Output {
    let mut full = vec!["--threads".to_string(), threads.to_string()];
    full.extend_from_slice(args);
    run(&full)
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

/// Directory holding the fixture files, written once per test binary.
pub fn fixtures() -> &'static Path {
    static DIR: OnceLock<PathBuf> = OnceLock::new();
    DIR.get_or_init(|| {
        let dir =
            Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("fixtures-{}", std::process::id()));
        std::fs::create_dir_all(&dir).expect("fixture dir");
        let files = [
            ("c3.txt", io::encode_tournament(&cyclic_blowup(1))),
            ("blowup2.txt", io::encode_tournament(&cyclic_blowup(2))),
            (
                "transitive8.txt",
                io::encode_tournament(&transitive_tournament(8)),
            ),
            (
                "random60.txt",
                io::encode_tournament(&random_tournament(60, 3)),
            ),
            (
                "colouring10.txt",
                io::encode_colouring(&random_colouring(10, 0.5, 1)),
            ),
            (
                "star8.txt",
                io::encode_colouring(&star_colouring(8).unwrap()),
            ),
            ("graph30.txt", io::encode_graph(&random_graph(30, 0.5, 2))),
        ];
        for (name, text) in files {
            std::fs::write(dir.join(name), text).expect("fixture write");
        }
        dir
    })
}

pub fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

pub struct Case {
    pub name: &'static str,
    pub schema: &'static str,
    pub args: Vec<String>,
}

fn case(name: &'static str, schema: &'static str, args: &[&str]) -> Case {
    let args = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(file) => fixture(file),
            None => a.to_string(),
        })
        .collect();
    Case { name, schema, args }
}

/// One invocation of every command and subcommand; `@name` expands to a
/// fixture path.
pub fn matrix() -> Vec<Case> {
    let witness_dir = fixtures().join("witnesses").display().to_string();
    let mut cases = vec![
        case(
            "detect-colouring",
            "detect",
            &[
                "detect",
                "--input",
                "@colouring10.txt",
                "--kind",
                "colouring",
                "--t",
                "2",
            ],
        ),
        case(
            "detect-star",
            "detect",
            &[
                "detect",
                "--input",
                "@star8.txt",
                "--kind",
                "colouring",
                "--t",
                "2",
            ],
        ),
        case(
            "detect-blowup",
            "detect",
            &[
                "detect",
                "--input",
                "@blowup2.txt",
                "--kind",
                "tournament",
                "--t",
                "2",
            ],
        ),
        case(
            "detect-transitive",
            "detect",
            &[
                "detect",
                "--input",
                "@transitive8.txt",
                "--kind",
                "tournament",
                "--t",
                "2",
            ],
        ),
        case(
            "farness-exact",
            "farness",
            &["farness", "--input", "@c3.txt", "--exact"],
        ),
        case(
            "farness-heuristic",
            "farness",
            &[
                "farness",
                "--input",
                "@random60.txt",
                "--heuristic",
                "--seed",
                "1",
                "--restarts",
                "4",
            ],
        ),
        case(
            "farness-colouring",
            "farness",
            &["farness", "--input", "@star8.txt"],
        ),
        case(
            "construct-coltight",
            "construct-coltight",
            &["construct", "coltight", "--n", "8", "--t", "3"],
        ),
        case(
            "construct-tourtight",
            "construct-tourtight",
            &["construct", "tourtight"],
        ),
        case(
            "construct-star",
            "construct-star",
            &["construct", "star", "--n", "8"],
        ),
        case(
            "construct-d2rec",
            "construct-d2rec",
            &["construct", "d2rec", "--depth", "2"],
        ),
        case(
            "construct-polarity",
            "construct-polarity",
            &["construct", "polarity", "--q", "3"],
        ),
        case(
            "construct-zarankiewicz",
            "construct-zarankiewicz",
            &[
                "construct",
                "zarankiewicz",
                "--n",
                "7",
                "--a",
                "2",
                "--b",
                "2",
            ],
        ),
        case(
            "lemma-long-step",
            "lemma-long-step",
            &[
                "lemma",
                "long-step",
                "--input",
                "@random60.txt",
                "--alpha",
                "1/100",
            ],
        ),
        case(
            "lemma-long-iter",
            "lemma-long-iter",
            &[
                "lemma",
                "long-iter",
                "--input",
                "@random60.txt",
                "--c",
                "1",
                "--r",
                "2",
            ],
        ),
        case(
            "lemma-density-inc",
            "lemma-density-inc",
            &[
                "lemma",
                "density-inc",
                "--input",
                "@random60.txt",
                "--i",
                "0..30",
                "--j",
                "30..60",
            ],
        ),
        case(
            "lemma-drc",
            "lemma-drc",
            &[
                "lemma",
                "drc",
                "--input",
                "@graph30.txt",
                "--k",
                "4",
                "--t",
                "2",
            ],
        ),
        case(
            "ramsey-exact-c",
            "ramsey-exact",
            &["ramsey", "exact", "--kind", "C", "--t", "2", "--n", "4,5,6"],
        ),
        case(
            "ramsey-mine-d",
            "ramsey-mine",
            &[
                "ramsey", "mine", "--kind", "D", "--t", "2", "--n", "7", "--target", "7",
                "--budget", "300",
            ],
        ),
        case(
            "ramsey-mine-c",
            "ramsey-mine",
            &[
                "ramsey", "mine", "--kind", "C", "--t", "3", "--n", "8", "--target", "12",
                "--budget", "300",
            ],
        ),
    ];
    let mut exact_d = case(
        "ramsey-exact-d",
        "ramsey-exact",
        &["ramsey", "exact", "--kind", "D", "--t", "2", "--n", "6,7"],
    );
    exact_d
        .args
        .extend(["--witness-dir".to_string(), witness_dir]);
    cases.push(exact_d);
    cases
}
