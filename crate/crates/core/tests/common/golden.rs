//! Golden-file cases for the `quatlin` binary. Set `QUATLIN_BLESS=1` to
//! rewrite the checked-in files after an intentional output change.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "decompose_right_i_right_units", args: &["decompose", "--frame", "RIGHT_UNITS", "@right_i.json"], exit: 0 },
    Case { name: "decompose_identity_auto", args: &["decompose", "--frame", "AUTO", "@identity.json"], exit: 0 },
    Case { name: "decompose_general_auto", args: &["decompose", "--frame", "AUTO", "@general.json"], exit: 0 },
    Case { name: "decompose_general_mixed_sides", args: &["decompose", "--frame", "L:id R:A1 L:A2 L:A3", "@general.json"], exit: 3 },
    Case { name: "decompose_a1_paper_attempt", args: &["decompose", "--frame", "PAPER_ATTEMPT", "@a1.json"], exit: 3 },
    Case { name: "decompose_malformed", args: &["decompose", "--frame", "AUTO", "@malformed.json"], exit: 2 },
    Case { name: "decompose_bad_frame", args: &["decompose", "--frame", "L:id L:E9 L:A2 L:A3", "@a1.json"], exit: 2 },
    Case { name: "check_a1", args: &["check", "@a1.json"], exit: 0 },
    Case { name: "check_conj", args: &["check", "@conj.json"], exit: 0 },
    Case { name: "check_double_identity", args: &["check", "@double_identity.json"], exit: 0 },
    Case { name: "check_general", args: &["check", "@general.json"], exit: 0 },
    Case { name: "recover_a1", args: &["recover", "@a1.json"], exit: 0 },
    Case { name: "recover_identity", args: &["recover", "@identity.json"], exit: 0 },
    Case { name: "recover_conj_2357", args: &["recover", "@conj_2357.json"], exit: 0 },
    Case { name: "recover_conj", args: &["recover", "@conj.json"], exit: 4 },
    Case { name: "rank_paper_attempt", args: &["rank", "--spec", "L:id L:A1 L:A1A1 L:I"], exit: 0 },
    Case { name: "rank_id_conj", args: &["rank", "--spec", "L:id L:I"], exit: 0 },
    Case { name: "rank_right_units", args: &["rank", "--spec", "RIGHT_UNITS"], exit: 0 },
    Case { name: "rank_bad_spec", args: &["rank", "--spec", "Q:id"], exit: 2 },
    Case { name: "catalog", args: &["catalog"], exit: 0 },
    Case { name: "demo_default", args: &["demo"], exit: 0 },
    Case { name: "demo_i", args: &["demo", "--a", "0,1,0,0"], exit: 0 },
];

pub const MODES: [&str; 2] = ["pretty", "json"];

pub fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    manifest_dir().join("tests/fixtures").join(name)
}

pub fn golden_path(case: &Case, mode: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{}.{mode}.txt", case.name))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn transcript(&self) -> String {
        format!("exit: {}\n--- stdout\n{}--- stderr\n{}", self.code, self.stdout, self.stderr)
    }
}

pub fn run(args: &[&str], mode: &str) -> Run {
    let resolved: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => fixture(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_quatlin"))
        .args(&resolved)
        .env("QUATLIN_OUTPUT", mode)
        .output()
        .expect("run quatlin");
    // error messages may embed the absolute fixture path
    let scrub = |s: &[u8]| {
        String::from_utf8_lossy(s).replace(&fixture("").to_string_lossy().into_owned(), "<fixtures>/")
    };
    Run { code: out.status.code().unwrap_or(-1), stdout: scrub(&out.stdout), stderr: scrub(&out.stderr) }
}

/// Compares against (or, when blessing, rewrites) the golden transcript.
pub fn check_golden(case: &Case, mode: &str, transcript: &str) -> Result<(), String> {
    let path = golden_path(case, mode);
    if std::env::var_os("QUATLIN_BLESS").is_some() {
        std::fs::write(&path, transcript).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == transcript {
        Ok(())
    } else {
        Err(format!("{} differs from golden output:\n{transcript}", path.display()))
    }
}
