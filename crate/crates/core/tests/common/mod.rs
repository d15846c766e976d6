use std::path::PathBuf;
use std::process::Command;

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "add",
        args: &[
            "add",
            "--s",
            "1",
            "--u",
            "0.5,0.1,-0.2",
            "--v",
            "0.3,-0.4,0.1",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "add_json",
        args: &["add", "--json", "inputs/add.json"],
        exit: 0,
    },
    GoldenCase {
        name: "add_outside",
        args: &["add", "--u", "1.5,0", "--v", "0,0"],
        exit: 2,
    },
    GoldenCase {
        name: "gyr",
        args: &[
            "gyr",
            "--s",
            "2",
            "--u",
            "0.9,0.3,-0.5",
            "--v",
            "-0.4,1.1,0.2",
            "--w",
            "1,0,0",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "mul",
        args: &["mul", "--r", "-2.5", "--v", "0.3,0.4"],
        exit: 0,
    },
    GoldenCase {
        name: "dist",
        args: &["dist", "--a", "0.2,-0.3", "--b", "-0.5,0.6"],
        exit: 0,
    },
    GoldenCase {
        name: "midpoint",
        args: &["midpoint", "--a", "0.2,-0.3", "--b", "-0.5,0.6"],
        exit: 0,
    },
    GoldenCase {
        name: "boundary",
        args: &["boundary", "--a", "0.2,-0.3", "--b", "-0.5,0.6"],
        exit: 0,
    },
    GoldenCase {
        name: "commass",
        args: &["commass", "--json", "inputs/commass.json"],
        exit: 0,
    },
    GoldenCase {
        name: "commass_mixed",
        args: &["commass", "--json", "inputs/commass_mixed.json"],
        exit: 0,
    },
    GoldenCase {
        name: "bary_eval",
        args: &["bary", "eval", "--json", "inputs/triangle.json"],
        exit: 0,
    },
    GoldenCase {
        name: "bary_solve",
        args: &["bary", "solve", "--json", "inputs/triangle.json"],
        exit: 0,
    },
    GoldenCase {
        name: "bary_classify",
        args: &["bary", "classify", "--json", "inputs/outside.json"],
        exit: 0,
    },
    GoldenCase {
        name: "check",
        args: &["check", "all", "--count", "25", "--seed", "7"],
        exit: 0,
    },
    GoldenCase {
        name: "plot",
        args: &["plot", "--json", "inputs/triangle.json"],
        exit: 0,
    },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn golden_path(case: &GoldenCase) -> PathBuf {
    let ext = if case.name == "plot" { "svg" } else { "json" };
    golden_dir().join(format!("{}.{ext}", case.name))
}

/// Runs the `gyro` binary from the golden directory; returns exit code and stdout.
pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_gyro"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("gyro binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// Compares each case against its golden file on two consecutive runs.
/// With `GYRO_BLESS` set the golden files are rewritten first.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("GYRO_BLESS").is_some();
    let mut problems = Vec::new();
    for case in GOLDEN_CASES {
        let (code1, first) = run_binary(case.args);
        let (code2, second) = run_binary(case.args);
        let path = golden_path(case);
        if bless {
            std::fs::write(&path, &first).expect("golden file is writable");
        }
        if code1 != case.exit || code2 != case.exit {
            problems.push(format!(
                "{}: exit codes {code1}, {code2}, expected {}",
                case.name, case.exit
            ));
        }
        if first != second {
            problems.push(format!("{}: two runs differ", case.name));
        }
        match std::fs::read(&path) {
            Ok(golden) if golden == first => {}
            Ok(_) => problems.push(format!(
                "{}: output differs from {}",
                case.name,
                path.display()
            )),
            Err(e) => problems.push(format!("{}: {e}", case.name)),
        }
    }
    problems
}
