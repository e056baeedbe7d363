//! Counterexample search over small bounded structures, deduplicated up to
//! isomorphism.
//!
//! cargo run --release --example search

use orthoposet::enumeration::{dedupe_isomorphic, with_display_names};
use orthoposet::io::PosetDocument;
use orthoposet::{search, Flag, Property, SearchGoal};

fn run(title: &str, require: &[Flag], forbid: &[Flag], max_n: usize) {
    let goal = SearchGoal::new(require, forbid, max_n).unwrap();
    let found = search(&goal).unwrap();
    let classes = dedupe_isomorphic(found.clone());
    println!(
        "{title}: {} labeled, {} up to isomorphism",
        found.len(),
        classes.len()
    );
    if let Some(first) = classes.first() {
        print!(
            "{}",
            PosetDocument::from_op_poset("first", &with_display_names(first)).to_text()
        );
    }
}

fn main() {
    let s = Flag::Structural;
    run(
        "adjoint but not an involution, n <= 5",
        &[
            s(Property::Orthogonal),
            s(Property::Complemented),
            Flag::Adjoint,
        ],
        &[s(Property::Involution)],
        5,
    );
    run(
        "orthomodular but not adjoint, n <= 5",
        &[s(Property::Orthomodular)],
        &[Flag::Adjoint],
        5,
    );
    run(
        "complemented orthogonal, not adjoint, n <= 6",
        &[s(Property::Complemented), s(Property::Orthogonal)],
        &[Flag::Adjoint],
        6,
    );
}
