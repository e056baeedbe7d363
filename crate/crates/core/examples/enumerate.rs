//! Labeled poset counts and isomorphism classes of small bounded posets.
//!
//! cargo run --release --example enumerate

use std::collections::BTreeSet;

use orthoposet::{canonical_form, count_posets, enumerate_posets};

fn main() {
    for n in 1..=6 {
        let bounded: Vec<_> = enumerate_posets(n).unwrap().collect();
        let classes: BTreeSet<_> = bounded.iter().map(canonical_form).collect();
        println!(
            "n = {n}: {:>6} labeled posets, {:>5} bounded, {:>3} bounded up to isomorphism",
            count_posets(n).unwrap(),
            bounded.len(),
            classes.len()
        );
    }
}
