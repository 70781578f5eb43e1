use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use sorani_fst::grammar::{GRAMMAR_SOURCE, SEED_LEXICON};
use sorani_fst::Transducer;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sorani-fst"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("sorani-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        TempDir(p)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn session_in_repl() {
    let input = "xwardim\n:mode\nxward<verb-transitive-past-stem><past-1s>\n:mode analyze\nqqq\n:quit\n";
    let o = run(&["repl"], input);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "analyze> xward<verb-transitive-past-stem><past-1s>\n\
         analyze> generate> xwardim\n\
         generate> analyze> no result for \"qqq\"\n\
         analyze> "
    );
}

#[test]
fn repl_starts_in_generate_mode_on_request() {
    let o = run(&["repl", "--mode", "generate"], "naw<noun><DEF><PL>\n");
    assert_eq!(stdout(&o), "generate> nawekan\ngenerate> \n");
}

#[test]
fn batch_tsv_rows() {
    let o = run(&["--format", "tsv", "analyze"], "naweke\nnawekan\nzzz\n");
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "naweke\tnaw<noun><DEF><SG>\nnawekan\tnaw<noun><DEF><PL>\nzzz\t\n"
    );
}

#[test]
fn batch_json_lines() {
    let o = run(&["--format", "json-lines", "generate"], "naw<noun><IND><SG>\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["input"], "naw<noun><IND><SG>");
    assert_eq!(v["results"], serde_json::json!(["nawêk"]));
}

#[test]
fn empty_input_gives_empty_output() {
    let o = run(&["analyze"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
}

#[test]
fn batch_is_deterministic_and_matches_repl() {
    let words = "dergakan\nnawan\nhełimnegirtbûnewe\nkewtin\n gułî \n";
    let a = run(&["analyze"], words);
    let b = run(&["analyze"], words);
    assert_eq!(a.stdout, b.stdout);
    let mut repl_input = words.to_string();
    repl_input.push_str(":quit\n");
    let r = run(&["repl"], &repl_input);
    let repl_lines: Vec<&str> = stdout(&r).split("analyze> ").flat_map(str::lines).collect();
    let batch_lines: Vec<&str> = stdout(&a).lines().collect();
    assert_eq!(repl_lines, batch_lines);
}

#[test]
fn malformed_analysis_warns_and_continues() {
    let o = run(&["generate", "naw<noun", "naw<noun>"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "no result for \"naw<noun\"\nnaw\n");
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn inflect_subcommands() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["inflect", "noun", "derga", "--form", "definite", "--number", "sg"],
            "dergake",
        ),
        (
            &[
                "inflect",
                "adj",
                "guł",
                "ciwan",
                "--izafa",
                "close",
                "--form",
                "indefinite",
                "--number",
                "sg",
            ],
            "gułe ciwanêk",
        ),
        (
            &["inflect", "noun", "naw", "--form", "demonstrative", "--number", "pl"],
            "em nawane",
        ),
        (&["inflect", "grade", "tund", "--degree", "superlative"], "tundtirîn"),
        (&["inflect", "adverb", "tund"], "tundane"),
        (&["inflect", "verb", "xwardin", "--person", "1"], "xwardim"),
        (
            &["inflect", "verb", "dîtin", "--person", "1", "--object", "2s"],
            "dîtimî",
        ),
        (&["inflect", "verb", "girtin", "--person", "1", "--negated"], "negirtim"),
        (
            &[
                "inflect",
                "verb",
                "xwardin",
                "--tense",
                "present",
                "--progressive",
                "--person",
                "1",
            ],
            "dexom",
        ),
    ];
    for (args, expected) in cases {
        let o = run(args, "");
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), format!("{expected}\n"), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["inflect", "noun", "naw", "--form", "absolute", "--number", "pl"][..],
        &["inflect", "verb", "naw"],
        &["inflect", "verb", "kewtin", "--object", "1s"],
        &["inflect", "noun", "naw", "--form", "vocative"],
        &["frobnicate"],
        &["--format", "xml", "analyze"],
    ] {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn load_errors_exit_3() {
    let o = run(&["--lexicon", "/nonexistent/seed.tsv", "analyze", "naw"], "");
    assert_eq!(o.status.code(), Some(3));
    let dir = TempDir::new("load");
    let bad_lex = dir.file("bad.tsv", "naw\tnoun\nnaw\tnoun\n");
    let o = run(&["--lexicon", path(&bad_lex), "selftest"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 2"));
    let bad_grammar = dir.file("bad.kfst", "$ROOT$ = $missing$\n");
    let o = run(&["--grammar", path(&bad_grammar), "analyze", "naw"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("missing"));
}

#[test]
fn selftest_passes_on_shipped_data() {
    let o = run(&["selftest"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("selftest passed\n"));
}

#[test]
fn selftest_detects_missing_definite_allomorph() {
    let dir = TempDir::new("fault");
    let faulty = GRAMMAR_SOURCE.replace("<DEF>:eke <SG>:<> | ", "");
    assert_ne!(faulty, GRAMMAR_SOURCE);
    let g = dir.file("faulty.kfst", &faulty);
    let o = run(&["--grammar", path(&g), "selftest"], "");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL naw<noun><DEF><SG>"), "{out}");
    assert!(out.ends_with("selftest FAILED\n"));
}

#[test]
fn explicit_data_paths_behave_like_defaults() {
    let dir = TempDir::new("paths");
    let g = dir.file("g.kfst", GRAMMAR_SOURCE);
    let l = dir.file("l.tsv", SEED_LEXICON);
    let o = run(
        &["--grammar", path(&g), "--lexicon", path(&l), "analyze", "dergayek"],
        "",
    );
    assert_eq!(stdout(&o), "derga<noun><IND><SG>\n");
}

#[test]
fn compile_emits_loadable_machine() {
    let dir = TempDir::new("compile");
    let out = dir.0.join("grammar.fst");
    let o = run(&["compile", "--output", path(&out)], "");
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let t = Transducer::from_text(&text).unwrap();
    let inverse = t.invert();
    let surface = sorani_fst::symbol::chars("dergakan");
    let analyses: Vec<String> = inverse
        .lookup(&surface)
        .iter()
        .map(|a| sorani_fst::symbol::format_symbols(a))
        .collect();
    assert_eq!(analyses, ["derga<noun><DEF><PL>"]);
    let piped = run(&["compile"], "");
    assert_eq!(stdout(&piped), text);
}
