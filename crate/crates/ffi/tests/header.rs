use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/klcells.h")).unwrap();
    for name in [
        "kl_abi_version",
        "kl_last_error_message",
        "kl_permutation_parse",
        "kl_permutation_from_values",
        "kl_permutation_free",
        "kl_permutation_len",
        "kl_permutation_values",
        "kl_permutation_is_smooth",
        "kl_rs_insert",
        "kl_tableau_parse",
        "kl_tableau_free",
        "kl_tableau_to_string",
        "kl_tableau_classify",
        "kl_survey_run",
        "kl_survey_free",
        "kl_survey_cell_count",
        "kl_survey_cell",
        "kl_survey_cell_tableau",
        "kl_survey_to_json",
        "typedef struct KlPermutation KlPermutation;",
        "KL_STATUS_BUFFER_TOO_SMALL = 6",
        "KL_CLASSIFICATION_MIXED = 2",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}

/// target/<profile>, found from this test binary's location in deps/.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = profile_dir().join("libklcells_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
