//! (A1), (A2) and the six conditions characterizing them, on every
//! orthogonal fixture.
//!
//! cargo run --example adjointness

use orthoposet::io::describe_witness;
use orthoposet::{fixtures, is_adjoint_pair, Condition};

fn main() {
    let cases = [
        ("ex1", fixtures::ex1()),
        ("m3", fixtures::m3()),
        ("fig3", fixtures::fig3()),
        ("benzene", fixtures::benzene()),
        ("cube8", fixtures::cube8()),
    ];
    for (name, op) in cases {
        let report = is_adjoint_pair(&op).expect("fixtures are orthogonal");
        let conditions: Vec<String> = Condition::ALL
            .into_iter()
            .map(|c| format!("{c}={}", u8::from(report.condition(c).holds)))
            .collect();
        println!(
            "{name:<8} A1={} A2={} {}  adjoint: {}",
            u8::from(report.a1.holds),
            u8::from(report.a2.holds),
            conditions.join(" "),
            report.is_adjoint()
        );
        for r in [&report.a1, &report.a2] {
            if let Some(w) = &r.witness {
                println!(
                    "         {} fails at {}",
                    r.property,
                    describe_witness(op.poset(), w)
                );
            }
        }
        assert!(report.equivalence_violation().is_none());
    }
}
