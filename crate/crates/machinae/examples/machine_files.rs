//! Machines on disk: the `.amd` text format, canonical serialization, and
//! how composites flatten into one file per part.
//!
//! ```sh
//! cargo run --example machine_files
//! ```

use machinae::amd::{load_machine, serialize_machine, write_machine};
use machinae::combinators::{comp_predicate, p_seq, rewriting};
use machinae::exec::run;
use machinae::word::Word;
use machinae::zoo;
use std::fs;

fn main() {
    let dir = std::env::temp_dir().join(format!("machinae-example-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();

    // A leaf machine serializes to a short, human-editable document.
    let doubler = zoo::unary_doubler();
    let text = serialize_machine(&doubler).unwrap();
    println!("--- doubler.amd ---\n{text}-------------------");

    // Parsing it back yields a machine that behaves identically, and
    // serialization is canonical: one more round trip is byte-identical.
    let path = dir.join("doubler.amd");
    fs::write(&path, &text).unwrap();
    let loaded = load_machine(&path).unwrap();
    let out = run(&loaded, &Word::parse("11"), 10_000).unwrap();
    assert_eq!(out.status.value().unwrap(), &Word::parse("1111"));
    assert_eq!(serialize_machine(&loaded).unwrap(), text);
    println!("round trip: same bytes, same behaviour");

    // Composites cannot live in one document — their parts are machines in
    // their own right — so writing one flattens it: the root document
    // references part files written next to it. A gated sequence has three
    // parts (outer machine, predicate, inner machine), hence four files.
    let gate = comp_predicate(&Word::parse("1111"), &doubler.output_alphabet()).unwrap();
    let echo = rewriting(&doubler.input_alphabet()).unwrap();
    let picky = p_seq(&echo, &gate, &doubler);
    let root = dir.join("picky.amd");
    let written = write_machine(&picky, &root).unwrap();
    println!("flattened into {} files:", written.len());
    for p in &written {
        println!("  {}", p.file_name().unwrap().to_string_lossy());
    }
    println!("--- picky.amd ---\n{}-----------------", fs::read_to_string(&root).unwrap());

    // Loading the root resolves the references relative to its own
    // directory and rebuilds the composite through the validating
    // constructors — a broken part file cannot sneak through.
    let reloaded = load_machine(&root).unwrap();
    let out = run(&reloaded, &Word::parse("11"), 10_000).unwrap();
    assert_eq!(out.status.value().unwrap(), &Word::parse("1111"));
    let out = run(&reloaded, &Word::parse("1"), 10_000).unwrap();
    assert!(out.status.value().is_none());
    println!("reloaded composite doubles 11 and wedges on 1, as built");

    fs::remove_dir_all(&dir).ok();
}
