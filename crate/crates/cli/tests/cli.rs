use std::process::Command;

use unipotent_cli::run;
use unipotent_core::atlas::parse_atlas;

fn out(args: &[&str]) -> (i32, String) {
    let argv = std::iter::once("unipotent").chain(args.iter().copied());
    let o = run(argv);
    (o.code, o.stdout)
}

fn ok(args: &[&str]) -> String {
    let (code, stdout) = out(args);
    assert_eq!(code, 0, "{args:?}");
    stdout
}

#[test]
fn phi_orthogonal() {
    assert_eq!(
        ok(&["phi", "--family", "D", "--rank", "4", "--char", "good", "r=4,4;p="]),
        "5,3\n"
    );
    assert_eq!(
        ok(&["phi", "--family", "B", "--rank", "4", "r=;p=3,3,1,1"]),
        "3,3,1,1,1\n"
    );
}

#[test]
fn psi_exceptional_and_split() {
    assert_eq!(
        ok(&["psi", "--family", "F4", "--char", "good", "C_3(a_1)"]),
        "A_3+~A_1\n"
    );
    assert_eq!(
        ok(&["psi", "--family", "D", "--rank", "4", "4,4"]),
        "r=;p=4,4 [split]\n"
    );
    assert_eq!(
        ok(&["phi", "--family", "D", "--rank", "4", "r=;p=4,4"]),
        "4,4 [split]\n"
    );
}

#[test]
fn fiber_order() {
    assert_eq!(
        ok(&["fiber", "--family", "E7", "4A_1"]),
        "7A_1\n6A_1\n5A_1\n(4A_1)'\n"
    );
    assert_eq!(
        ok(&["fiber", "--family", "C", "--rank", "2", "2,2"]),
        "r=2,2;p=\nr=;p=2,2\n"
    );
    let records = ok(&[
        "fiber", "--family", "C", "--rank", "2", "--format", "records", "2,2",
    ]);
    assert_eq!(records, "unipotent=2,2\tclass=r=2,2;p=\tm=0\tsplit=0\nunipotent=2,2\tclass=r=;p=2,2\tm=1\tsplit=0\n");
}

#[test]
fn m_rho_pi_tau() {
    assert_eq!(ok(&["m", "--family", "E8", "E_8(a_8)"]), "0\n");
    assert_eq!(
        ok(&["m", "--family", "C", "--rank", "3", "r=;p=3,3"]),
        "1\n"
    );
    assert_eq!(
        ok(&["rho", "--family", "F4", "--char", "p2", "(B_2)_2"]),
        "B_2\n"
    );
    assert_eq!(
        ok(&["rho", "--family", "C", "--rank", "2", "--char", "p2", "2,2[2:0]"]),
        "2,2\n"
    );
    assert_eq!(
        ok(&["pi", "--family", "C", "--rank", "2", "--char", "p2", "2,2"]),
        "2,2[2:1]\n"
    );
    assert_eq!(
        ok(&["pi", "--family", "G2", "--char", "p3", "~A_1"]),
        "~A_1\n"
    );
    assert_eq!(ok(&["tau", "--family", "G2", "A_2"]), "θ′\n");
    assert_eq!(ok(&["tau", "--family", "E8", "D_4(a_1)"]), "1400_37\n");
    assert_eq!(
        ok(&["tau", "--family", "D", "--rank", "4", "r=;p=4,4"]),
        "y=2;z=2 [split]\n"
    );
}

#[test]
fn special_listing() {
    assert_eq!(
        ok(&["special", "--family", "C", "--rank", "2"]),
        "r=4;p= -> y=2;z=\nr=2,2;p= -> y=1;z=1\nr=;p=1,1,1,1 -> y=;z=1,1\n"
    );
    assert_eq!(ok(&["special", "--family", "E8"]).lines().count(), 46);
}

#[test]
fn characteristic_folding() {
    // 2 is a good prime for G2, so p2 reads the good table.
    assert_eq!(
        ok(&["phi", "--family", "G2", "--char", "p2", "~A_1"]),
        ok(&["phi", "--family", "G2", "--char", "good", "~A_1"])
    );
    assert_eq!(
        ok(&["phi", "--family", "G2", "--char", "p3", "~A_1"]),
        "(~A_1)_3\n"
    );
}

#[test]
fn verify_suites() {
    let (code, stdout) = out(&[
        "verify",
        "--suite",
        "theorem02",
        "--family",
        "C",
        "--rank",
        "6",
        "--char",
        "p2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("theorem02 [C_6 (p2)]: "), "{stdout}");
    assert!(stdout.trim_end().ends_with("pass"));
    let (code, stdout) = out(&[
        "verify", "--suite", "tables", "--family", "E8", "--char", "p2", "--format", "records",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("suite=tables\tcontext=E8 (p2)\t"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["phi", "--family", "X", "a"][..],
        &["phi", "--family", "C", "--rank", "2", "r=3;p="],
        &["phi", "--family", "C", "2"],
        &["psi", "--family", "F4", "B_9"],
        &["verify", "--suite", "nope", "--family", "C", "--rank", "2"],
        &[
            "fiber", "--family", "C", "--rank", "14", "--bound", "12", "2",
        ],
        &["frobnicate"],
        &[
            "phi", "--family", "C", "--rank", "2", "--char", "p5", "r=4;p=",
        ],
    ] {
        let o = run(std::iter::once("unipotent").chain(args.iter().copied()));
        assert_eq!(o.code, 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn atlas_is_deterministic_and_parses() {
    let args = ["atlas", "--family", "D", "--rank", "4", "--char", "p2"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let atlas = parse_atlas(&first).unwrap();
    assert_eq!(atlas.to_records(), first);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_unipotent");
    let o = Command::new(bin)
        .args(["phi", "--family", "D", "--rank", "4", "r=4,4;p="])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "5,3\n");
    let o = Command::new(bin)
        .args(["phi", "--family", "D"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
