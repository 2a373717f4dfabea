//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "flipdist.h"

int main(void) {
    FdInstance *inst = NULL;
    if (fd_instance_parse("m 6\ninit 0 2 2 4 0 4\nfinal 1 3 3 5 1 5\n", &inst) != FD_STATUS_OK) return 10;
    uint32_t d = 0;
    if (fd_distance(inst, &d) != FD_STATUS_OK) return 11;
    bool yes = true;
    if (fd_decide(inst, 3, &yes) != FD_STATUS_OK || yes) return 12;
    FdWitness *w = NULL;
    if (fd_witness(inst, &w) != FD_STATUS_OK) return 13;
    printf("%u %zu\n", d, fd_witness_len(w));
    fd_witness_free(w);
    fd_instance_free(inst);
    if (fd_instance_parse("m 4 init 0 2 1 3 final 1 3", &inst) == FD_STATUS_OK) return 14;
    printf("%s\n", fd_last_error_message());
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    // target/<profile>/deps/<test> -> target/<profile>
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libflipdist_ffi.a");
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let bin = tmp.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("4 4"));
    assert!(lines.next().unwrap().contains("cross"));
}
