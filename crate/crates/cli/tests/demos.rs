//! Demo outputs are pinned byte for byte against golden files.

use std::process::Command;

fn demo_output(name: &str) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hodt"))
        .args(["demo", name])
        .output()
        .expect("binary runs");
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

macro_rules! golden_demo {
    ($test:ident, $name:literal, $golden:literal) => {
        #[test]
        fn $test() {
            let (code, text) = demo_output($name);
            assert_eq!(code, Some(0));
            assert_eq!(text, include_str!($golden), "demo `{}` drifted", $name);
            // Byte stability: a second run is identical.
            let (_, again) = demo_output($name);
            assert_eq!(text, again);
        }
    };
}

golden_demo!(beaches_matches_golden, "beaches", "golden/demo_beaches.txt");
golden_demo!(wines_matches_golden, "wines", "golden/demo_wines.txt");
golden_demo!(honest_matches_golden, "honest", "golden/demo_honest.txt");
golden_demo!(judges_matches_golden, "judges", "golden/demo_judges.txt");
golden_demo!(
    coordination_matches_golden,
    "coordination",
    "golden/demo_coordination.txt"
);
golden_demo!(
    fixpoint_matches_golden,
    "fixpoint",
    "golden/demo_fixpoint.txt"
);

#[test]
fn unknown_demo_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_hodt"))
        .args(["demo", "volcano"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}
