//! Structural profile of every bundled fixture, with a witness for each
//! property that fails.
//!
//! cargo run --example properties

use orthoposet::fixtures;
use orthoposet::io::describe_witness;
use orthoposet::io::parse_poset;
use orthoposet::Property;

fn main() {
    for (file, text) in fixtures::ALL {
        let op = parse_poset(text).unwrap().to_op_poset().unwrap();
        println!("{file}");
        for property in Property::STRUCTURAL {
            let report = property.check(&op).unwrap();
            match report.witness {
                None => println!("  {property:<13} yes"),
                Some(w) => println!(
                    "  {property:<13} no   {} {}",
                    describe_witness(op.poset(), &w),
                    w.condition
                ),
            }
        }
    }
}
