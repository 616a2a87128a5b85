use std::path::PathBuf;
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/kirchhoff.h")).unwrap();
    for name in [
        "typedef struct KirchhoffGraph KirchhoffGraph;",
        "KIRCHHOFF_STATUS_OK = 0",
        "KIRCHHOFF_STATUS_CAPACITY_ERROR = 3",
        "kirchhoff_graph_parse(",
        "kirchhoff_graph_free(",
        "kirchhoff_poincare(",
        "kirchhoff_theta(",
        "kirchhoff_last_error(",
    ] {
        assert!(header.contains(name), "missing `{name}`");
    }
}

// compiles and runs a C program against the header and the static library
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let target_dir = exe.ancestors().nth(3).unwrap();
    // `cargo test` links the rlib only; the archive needs its own build
    let built = Command::new(env!("CARGO"))
        .args(["build", "--quiet", "-p", "kirchhoff-ffi", "--lib", "--target-dir"])
        .arg(target_dir)
        .status()
        .expect("run cargo");
    assert!(built.success());
    let lib = target_dir.join("debug/libkirchhoff_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let tmp = tempfile::tempdir().unwrap();
    let bin = tmp.path().join("smoke");
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("run cc");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 3 6 10 11 6 1\ncomplexity 16\nduplicate\n");
}
