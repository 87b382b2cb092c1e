//! Compiles and runs a small C program against the generated header and
//! the static library, so the header is checked from the C side.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "eisenstein_descent.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    EdElement *a = NULL;
    CHECK(ed_element_parse("6+3*w", &a) == ED_STATUS_OK);
    enum EdVerdict v;
    CHECK(ed_classify(a, &v) == ED_STATUS_OK && v == ED_VERDICT_DESCENDS);

    EdElement *x = NULL, *y = NULL;
    CHECK(ed_solve(a, &x, &y) == ED_STATUS_OK);
    char *s = NULL;
    CHECK(ed_element_to_string(x, &s) == ED_STATUS_OK && strcmp(s, "2") == 0);
    ed_string_free(s);
    ed_element_free(x);
    ed_element_free(y);
    ed_element_free(a);

    EdElement *bad = NULL;
    CHECK(ed_element_parse("w^2", &bad) == ED_STATUS_PARSE && bad == NULL);
    CHECK(ed_last_error_message() != NULL);

    bool holds = false;
    CHECK(ed_verify(ED_LEMMA_NO_SOLUTION, 4, &holds, NULL) == ED_STATUS_OK && holds);
    uint64_t descends = 1;
    CHECK(ed_search("6,0,0,3", 5, &descends, NULL) == ED_STATUS_OK && descends == 0);
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // .../target/<profile>/deps/c_header-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let lib = target_dir().join("libeisenstein_descent_ffi.a");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: needs a C compiler and {}", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror"])
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
