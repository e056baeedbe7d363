//! Sasaki projections p_a(x) = (x ∨ a') ∧ a on the Boolean cube, where they
//! reduce to x ∧ a, and on the seven-element example, where they do not.
//!
//! cargo run --example projection

use orthoposet::io::render_cell;
use orthoposet::sasaki::{check_projection_laws, sasaki_proj, SubsetSample};
use orthoposet::{fixtures, OpPoset};

fn show(name: &str, op: &OpPoset, a: &str) {
    let p = op.poset();
    let a = p.index_of(a).unwrap();
    let images: Vec<String> = (0..op.len())
        .map(|x| {
            format!(
                "{}->{}",
                p.name(x),
                render_cell(p, sasaki_proj(op, a, x).unwrap())
            )
        })
        .collect();
    println!("{name}: p_{} = {}", p.name(a), images.join(" "));
    let laws = check_projection_laws(op, SubsetSample::Exhaustive).unwrap();
    println!(
        "{name}: laws hold = {} (orthomodular clauses: {})",
        laws.report.holds, laws.orthomodular_checked
    );
}

fn main() {
    show("cube8", &fixtures::cube8(), "ab");
    show("ex1", &fixtures::ex1(), "c");
}
