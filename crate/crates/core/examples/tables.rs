//! Operation tables of ⊙ and → for the seven-element example, in all three
//! output formats.
//!
//! cargo run --example tables

use orthoposet::io::{render_table, TableFormat};
use orthoposet::{fixtures, op_tables};

fn main() {
    let op = fixtures::ex1();
    let (odot, arrow) = op_tables(&op).expect("ex1 is orthogonal, so both operations are total");
    println!("{}", render_table(&odot, op.poset(), TableFormat::Text));
    println!("{}", render_table(&arrow, op.poset(), TableFormat::Text));
    print!("{}", render_table(&odot, op.poset(), TableFormat::Csv));
}
