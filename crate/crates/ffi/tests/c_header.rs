//! Compiles and runs a small C program against the generated header and
//! the static library. Skipped when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "sorani_fst.h"

int main(void) {
    SoraniGrammar *g = NULL;
    if (sorani_grammar_new_default(&g) != SORANI_STATUS_OK) return 10;
    char *out = NULL;
    size_t n = 0;
    if (sorani_analyze(g, "nawekan", &out, &n) != SORANI_STATUS_OK) return 11;
    if (n != 1 || strcmp(out, "naw<noun><DEF><PL>") != 0) return 12;
    sorani_string_free(out);
    if (sorani_generate(g, "naw<noun", &out, &n) != SORANI_STATUS_INVALID_ANALYSIS) return 13;
    if (sorani_last_error_message() == NULL) return 14;
    sorani_grammar_free(g);
    puts("ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libsorani_fst_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let work = std::env::temp_dir().join(format!("sorani-c-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("main.c");
    let bin = work.join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
    std::fs::remove_dir_all(work).unwrap();
}
