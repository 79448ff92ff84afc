//! Guards the guide against drift: every Rust code block in book/src must
//! appear verbatim inside a doc comment of this crate, where it runs as a
//! doc-test.

use std::fs;
use std::path::Path;

/// Rust code blocks of a markdown file, excluding hidden doc-test lines.
fn rust_blocks(md: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current: Option<Vec<String>> = None;
    for line in md.lines() {
        let trimmed = line.trim_start();
        if let Some(block) = current.as_mut() {
            if trimmed.starts_with("```") {
                blocks.push(block.join("\n"));
                current = None;
            } else {
                block.push(line.trim_end().to_string());
            }
        } else if trimmed.starts_with("```rust") {
            current = Some(Vec::new());
        }
    }
    blocks
}

/// All doc-comment text of a source file with the comment markers and the
/// doc-test hidden lines (`# ` prefix) stripped.
fn doc_text(src: &str) -> String {
    let mut out = String::new();
    for line in src.lines() {
        let t = line.trim_start();
        let body = if let Some(rest) = t.strip_prefix("//! ") {
            rest
        } else if let Some(rest) = t.strip_prefix("/// ") {
            rest
        } else if t == "//!" || t == "///" {
            ""
        } else {
            continue;
        };
        if body == "#" || body.starts_with("# ") {
            continue; // hidden doc-test line
        }
        out.push_str(body.trim_end());
        out.push('\n');
    }
    out
}

#[test]
fn every_book_snippet_is_a_doc_test() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let book_src = root.join("../../book/src");
    let crate_src = root.join("src");

    let mut corpus = String::new();
    for entry in fs::read_dir(&crate_src).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "rs") {
            corpus.push_str(&doc_text(&fs::read_to_string(&path).unwrap()));
            corpus.push('\n');
        }
    }

    let mut checked = 0;
    for entry in fs::read_dir(&book_src).unwrap() {
        let path = entry.unwrap().path();
        if !path.extension().is_some_and(|e| e == "md") {
            continue;
        }
        let md = fs::read_to_string(&path).unwrap();
        for block in rust_blocks(&md) {
            assert!(
                corpus.contains(&block),
                "code block in {} has no matching doc-test:\n---\n{}\n---",
                path.display(),
                block
            );
            checked += 1;
        }
    }
    assert!(checked >= 6, "expected at least 6 book snippets, found {checked}");
}
