use std::path::PathBuf;
use std::process::Command;

use nilpoisson::catalog;
use nilpoisson::cli::{run, Outcome};

const COMMANDS: [&str; 9] = [
    "validate",
    "step",
    "dolbeault",
    "poisson",
    "potential",
    "d1",
    "check-degeneracy",
    "check-iso",
    "check-gerstenhaber",
];

fn nilpoisson(args: &[&str]) -> Outcome {
    run(std::iter::once("nilpoisson").chain(args.iter().copied()))
}

fn write_algebra(text: &str) -> tempfile::NamedTempFile {
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), text).unwrap();
    file
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn render(outcome: &Outcome) -> String {
    format!(
        "# exit {}\n{}{}",
        outcome.code, outcome.stdout, outcome.stderr
    )
}

/// Compares against `tests/golden/NAME`; set `UPDATE_GOLDEN=1` to rewrite.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn golden_tsv_over_catalog() {
    for entry in catalog::standard() {
        let source = format!("@{}", entry.name);
        for command in COMMANDS {
            let outcome = nilpoisson(&[command, &source, "--format=tsv"]);
            assert_golden(&format!("{}/{command}.tsv", entry.name), &render(&outcome));
        }
    }
}

#[test]
fn golden_human_kodaira() {
    for command in COMMANDS {
        let outcome = nilpoisson(&[command, "@kodaira"]);
        assert_golden(&format!("kodaira/{command}.txt"), &render(&outcome));
    }
}

#[test]
fn golden_catalog_listing() {
    assert_golden("catalog.txt", &render(&nilpoisson(&["catalog"])));
    assert_golden(
        "catalog.tsv",
        &render(&nilpoisson(&["catalog", "--format=tsv"])),
    );
    for entry in catalog::standard() {
        let outcome = nilpoisson(&["catalog", &entry.name]);
        assert_golden(&format!("{}/export.txt", entry.name), &render(&outcome));
    }
}

#[test]
fn kodaira_poisson_dimensions() {
    let outcome = nilpoisson(&["poisson", "@kodaira"]);
    assert_eq!(outcome.code, 0);
    assert_eq!(outcome.stdout, "k: 0 1 2 3 4\ndim: 1 3 4 3 1\n");
}

#[test]
fn kodaira_from_file() {
    let file = write_algebra("# Kodaira surface\nn 2\nA 2 1 1 1 0\n");
    let path = file.path().to_str().unwrap();
    let outcome = nilpoisson(&["poisson", path]);
    assert_eq!(outcome.stdout, "k: 0 1 2 3 4\ndim: 1 3 4 3 1\n");
    let outcome = nilpoisson(&["dolbeault", path, "--format=tsv"]);
    let dims: Vec<&str> = outcome
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.rsplit('\t').next().unwrap())
        .collect();
    assert_eq!(dims, ["1", "2", "1", "1", "2", "1", "1", "2", "1"]);
}

#[test]
fn potential_none_exits_zero() {
    let outcome = nilpoisson(&["potential", "@type-i-b1-c0"]);
    assert_eq!(outcome.code, 0);
    assert!(outcome.stdout.starts_with("none\n"));
    assert!(outcome.stdout.contains("obstruction"));
    let file = write_algebra("n 3\nA 2 1 1 1 0\nA 3 1 2 1 0\n");
    let outcome = nilpoisson(&["potential", file.path().to_str().unwrap(), "--format=tsv"]);
    assert_eq!(outcome.code, 0);
    assert!(outcome.stdout.starts_with("exists\tfalse\n"));
}

#[test]
fn potential_tsv_coefficients() {
    let outcome = nilpoisson(&["potential", "@type-i-b1-c1", "--format=tsv"]);
    assert_eq!(outcome.stdout, "exists\ttrue\nc1\t0\nc2\t1\nc3\t0\n");
    let outcome = nilpoisson(&["potential", "@kodaira-ci", "--format=tsv"]);
    assert_eq!(outcome.stdout, "exists\ttrue\nc1\t-1\nc2\t0\n");
}

#[test]
fn check_degeneracy_passes_on_catalog() {
    for entry in catalog::standard() {
        let outcome = nilpoisson(&["check-degeneracy", &format!("@{}", entry.name)]);
        assert_eq!(outcome.code, 0, "{}", entry.name);
        assert!(outcome.stdout.starts_with("PASS"));
    }
}

#[test]
fn checks_without_potential_fail() {
    for command in ["check-iso", "check-gerstenhaber"] {
        let outcome = nilpoisson(&[command, "@counterexample-as-intended"]);
        assert_eq!(outcome.code, 1);
        assert!(outcome.stdout.starts_with("FAIL"));
    }
}

#[test]
fn lambda_and_scaling_flags() {
    let zero = nilpoisson(&[
        "poisson",
        "@type-ii-a1-b-1_2-ci-d2",
        "--lambda=zero",
        "--format=tsv",
    ]);
    assert_eq!(zero.code, 0);
    let canonical = nilpoisson(&["poisson", "@type-ii-a1-b-1_2-ci-d2", "--format=tsv"]);
    for t in ["2", "0,1", "-1/3,2"] {
        let scaled = nilpoisson(&[
            "poisson",
            "@type-ii-a1-b-1_2-ci-d2",
            "--format=tsv",
            &format!("--t={t}"),
        ]);
        assert_eq!(scaled, canonical);
    }
    let d1 = nilpoisson(&["d1", "@counterexample-as-intended", "--lambda=zero"]);
    assert_eq!(d1.stdout, "d1 vanishes: yes\n");
    let outcome = nilpoisson(&["poisson", "@kodaira", "--t=0"]);
    assert_eq!(outcome.code, 2);
    let outcome = nilpoisson(&["poisson", "@kodaira", "--t=1/0"]);
    assert_eq!(outcome.code, 2);
}

#[test]
fn input_errors_exit_two() {
    let outcome = nilpoisson(&["frobnicate", "@kodaira"]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("Usage"));
    let outcome = nilpoisson(&[]);
    assert_eq!(outcome.code, 2);
    let outcome = nilpoisson(&["poisson", "@no-such-entry"]);
    assert_eq!(outcome.code, 2);
    let outcome = nilpoisson(&["poisson", "/nonexistent/algebra.txt"]);
    assert_eq!(outcome.code, 2);
    let outcome = nilpoisson(&["poisson", "@kodaira", "--format=xml"]);
    assert_eq!(outcome.code, 2);
}

#[test]
fn parse_errors_cite_line_and_column() {
    let file = write_algebra("n 2\nA 2 1 1 1 0\nA 2 1 1 2 0\n");
    let path = file.path().to_str().unwrap();
    let outcome = nilpoisson(&["validate", path]);
    assert_eq!(outcome.code, 2);
    assert_eq!(
        outcome.stderr,
        format!("{path}:3:1: duplicate entry A 2 1 1 (first given on line 2)\n")
    );
    let file = write_algebra("n 2\nA 2 3 1 1 0\n");
    let path = file.path().to_str().unwrap();
    let outcome = nilpoisson(&["step", path]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.starts_with(&format!("{path}:2:5: ")));
}

#[test]
fn invalid_algebras() {
    // support violation: validate reports FAIL, everything else refuses
    let file = write_algebra("n 2\nA 1 2 2 1 0\n");
    let path = file.path().to_str().unwrap();
    let outcome = nilpoisson(&["validate", path]);
    assert_eq!(outcome.code, 1);
    assert!(outcome
        .stdout
        .contains("ascending support violated at (1,2,2)"));
    let outcome = nilpoisson(&["poisson", path]);
    assert_eq!(outcome.code, 2);
    let file = write_algebra("n 1\n");
    let outcome = nilpoisson(&["potential", file.path().to_str().unwrap()]);
    assert_eq!(outcome.code, 2);
    assert!(outcome
        .stderr
        .contains("canonical Poisson structure undefined"));
}

#[test]
fn exported_entries_round_trip_through_files() {
    for entry in catalog::standard() {
        let export = nilpoisson(&["catalog", &entry.name]).stdout;
        let file = write_algebra(&export);
        let path = file.path().to_str().unwrap();
        for command in ["dolbeault", "poisson", "potential"] {
            let from_file = nilpoisson(&[command, path, "--format=tsv"]);
            let from_catalog = nilpoisson(&[command, &format!("@{}", entry.name), "--format=tsv"]);
            assert_eq!(from_file, from_catalog, "{} {command}", entry.name);
        }
    }
}

#[test]
fn binary_matches_in_process() {
    let exe = env!("CARGO_BIN_EXE_nilpoisson");
    for args in [
        vec!["poisson", "@kodaira"],
        vec![
            "check-degeneracy",
            "@counterexample-as-intended",
            "--format=tsv",
        ],
        vec!["check-iso", "@counterexample-as-intended"],
        vec!["frobnicate"],
    ] {
        let output = Command::new(exe).args(&args).output().unwrap();
        let expected = nilpoisson(&args);
        assert_eq!(output.status.code(), Some(expected.code), "{args:?}");
        assert_eq!(String::from_utf8(output.stdout).unwrap(), expected.stdout);
        assert_eq!(String::from_utf8(output.stderr).unwrap(), expected.stderr);
    }
}
