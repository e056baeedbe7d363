//! Parses a hand-written structure, reports it as JSON and renders its Hasse
//! diagram as DOT. Pipe the DOT part into `dot -Tsvg` to draw it.
//!
//! cargo run --example parse_and_dot

use orthoposet::io::{export_dot, parse_poset, report_json};

const SQUARE: &str = "\
# The four-element Boolean algebra.
poset square
elements 0 a b 1
covers 0<a 0<b a<1 b<1
prime 0:1 a:b b:a 1:0
";

fn main() {
    let doc = parse_poset(SQUARE).unwrap();
    let op = doc.to_op_poset().unwrap();
    print!("{}", report_json(&doc.name, &op));
    print!("{}", export_dot(op.poset(), &doc.name));

    match parse_poset("poset broken\nelements 0 a 1\ncovers 0<a a<1 1<0\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("# rejected: {e}"),
    }
}
