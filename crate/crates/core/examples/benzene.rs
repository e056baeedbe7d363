//! The six-element benzene lattice O6 as an obstruction to adjointness:
//! present as a subalgebra in the benzene fixture, only as a sublattice
//! (not closed under ') in the orthomodular fig3 lattice.
//!
//! cargo run --example benzene

use orthoposet::adjoint::{closed_under_prime, find_o6_subalgebra, is_o6_sublattice};
use orthoposet::{fixtures, is_adjoint_pair};

fn main() {
    let benzene = fixtures::benzene();
    let found = find_o6_subalgebra(&benzene)
        .unwrap()
        .expect("benzene is O6 itself");
    let labels: Vec<&str> = found.iter().map(|&x| benzene.name(x)).collect();
    println!("benzene: O6 subalgebra {{{}}}", labels.join(", "));
    println!(
        "benzene: adjoint = {}",
        is_adjoint_pair(&benzene).unwrap().is_adjoint()
    );

    let fig3 = fixtures::fig3();
    let six = ["0", "c", "d", "a'", "f'", "1"].map(|l| fig3.poset().index_of(l).unwrap());
    println!(
        "fig3: {{0, c, d, a', f', 1}} sublattice = {}, closed under ' = {}",
        is_o6_sublattice(fig3.poset(), &six),
        closed_under_prime(&fig3, &six)
    );
    println!(
        "fig3: O6 subalgebra = {:?}",
        find_o6_subalgebra(&fig3).unwrap()
    );
    println!(
        "fig3: adjoint = {}",
        is_adjoint_pair(&fig3).unwrap().is_adjoint()
    );
}
