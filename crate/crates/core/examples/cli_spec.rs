//! Driving the command-line front end from code.

use gsft::cli::{parse_spec, run_command, ParseError};

fn main() {
    let doc = br#"{"alphabet":{"kind":"vector_space","p":2,"dim":1},"sft":{"window":2,"generators":[[1]]}}"#;
    if let Err(ParseError::Invalid(v)) = parse_spec(doc) {
        for x in v {
            println!("{}: {}", x.pointer, x.message);
        }
    }
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/specs");
    let out = run_command(["gsft", "limit-set", &format!("{dir}/drop-ca.json"), &format!("{dir}/full-shift.json")]);
    println!("exit {}", out.code);
    print!("{}", out.stdout);
}
