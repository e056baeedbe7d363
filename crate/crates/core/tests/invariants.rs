mod common;

use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{from_set, to_set, Naive, Set};
use orthoposet::adjoint::SasakiTables;
use orthoposet::enumeration::{canonical_form, canonical_form_op};
use orthoposet::io::{export_dot, parse_poset, PosetDocument};
use orthoposet::poset::numeric_names;
use orthoposet::properties::{is_lattice, is_modular, replay_witness, Property};
use orthoposet::{fixtures, OpPoset, Poset, Subset};

/// A bounded poset: `inner` random elements with random strict relations
/// `i < j` (for `i < j` only, so acyclic), plus a bottom and a top.
fn arb_poset() -> impl Strategy<Value = Poset> {
    (0usize..=6).prop_flat_map(|inner| {
        let slots = inner * inner.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let n = inner + 2;
            let (bottom, top) = (0, n - 1);
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 1..=inner {
                edges.push((bottom, i));
                edges.push((i, top));
                for j in i + 1..=inner {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            if inner == 0 {
                edges.push((bottom, top));
            }
            Poset::from_covers(numeric_names(n), &edges).unwrap()
        })
    })
}

fn arb_op() -> impl Strategy<Value = OpPoset> {
    arb_poset().prop_flat_map(|p| {
        let n = p.len();
        proptest::collection::vec(0..n, n)
            .prop_map(move |prime| OpPoset::new(p.clone(), prime).unwrap())
    })
}

fn arb_op_with_subsets() -> impl Strategy<Value = (OpPoset, Subset, Subset)> {
    arb_op().prop_flat_map(|op| {
        let n = op.len();
        let mask = (1u64 << n) - 1;
        (Just(op), any::<u64>(), any::<u64>()).prop_map(move |(op, a, b)| {
            (op, Subset::from_bits(a & mask), Subset::from_bits(b & mask))
        })
    })
}

/// Moves element `x` to position `perm[x]`.
fn permute(op: &OpPoset, perm: &[usize]) -> OpPoset {
    let p = op.poset();
    let n = p.len();
    let mut names = vec![String::new(); n];
    for x in 0..n {
        names[perm[x]] = p.name(x).to_string();
    }
    let edges: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (perm[a], perm[b]))
        .collect();
    let q = Poset::from_covers(names, &edges).unwrap();
    let mut prime = vec![0; n];
    for x in 0..n {
        prime[perm[x]] = perm[op.prime(x)];
    }
    OpPoset::new(q, prime).unwrap()
}

proptest! {
    #[test]
    fn bounds_of_unions_intersect((op, a, b) in arb_op_with_subsets()) {
        let p = op.poset();
        prop_assert_eq!(p.lower_set(a.union(b)), p.lower_set(a).intersection(p.lower_set(b)));
        prop_assert_eq!(p.upper_set(a.union(b)), p.upper_set(a).intersection(p.upper_set(b)));
    }

    #[test]
    fn lower_and_upper_form_a_galois_connection((op, a, b) in arb_op_with_subsets()) {
        let p = op.poset();
        prop_assert_eq!(a.is_subset_of(p.lower_set(b)), b.is_subset_of(p.upper_set(a)));
        prop_assert!(a.is_subset_of(p.lower_set(p.upper_set(a))));
        prop_assert_eq!(p.upper_set(p.lower_set(p.upper_set(a))), p.upper_set(a));
    }

    #[test]
    fn bound_sets_match_oracle((op, a, _b) in arb_op_with_subsets()) {
        let p = op.poset();
        let naive = Naive::new(&op);
        let set: Set = to_set(a);
        prop_assert_eq!(to_set(p.lower_set(a)), naive.lower(&set));
        prop_assert_eq!(to_set(p.upper_set(a)), naive.upper(&set));
        prop_assert_eq!(to_set(p.maximal(a)), naive.max(&set));
        prop_assert_eq!(to_set(p.minimal(a)), naive.min(&set));
        prop_assert_eq!(from_set(&naive.lower(&set)), p.lower_set(a));
    }

    #[test]
    fn operations_match_oracle(op in arb_op()) {
        let naive = Naive::new(&op);
        for x in 0..op.len() {
            for y in 0..op.len() {
                prop_assert_eq!(orthoposet::odot(&op, x, y).ok().map(to_set), naive.odot(x, y));
                prop_assert_eq!(orthoposet::arrow(&op, x, y).ok().map(to_set), naive.arrow(x, y));
            }
        }
    }

    #[test]
    fn structural_witnesses_replay(op in arb_op()) {
        for property in Property::STRUCTURAL {
            let report = property.check(&op).unwrap();
            prop_assert_eq!(report.holds, report.witness.is_none());
            if let Some(w) = report.witness {
                prop_assert_eq!(replay_witness(&op, property, &w), Some(true), "{} {:?}", property, w);
            }
        }
    }

    #[test]
    fn adjointness_witnesses_replay(op in arb_op()) {
        if let Ok(tables) = SasakiTables::new(&op) {
            let naive = Naive::new(&op);
            let (a1, a2) = naive.adjoint_directions().unwrap();
            for (report, holds) in [(tables.check_a1(), a1), (tables.check_a2(), a2)] {
                prop_assert_eq!(report.holds, holds);
                if let Some(w) = report.witness {
                    prop_assert_eq!(replay_witness(&op, report.property, &w), Some(true));
                }
            }
        }
    }

    #[test]
    fn modularity_on_lattices_is_the_classical_law(p in arb_poset()) {
        prop_assume!(is_lattice(&p).holds);
        let n = p.len();
        let classical = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| {
            !p.leq(x, z)
                || p.join(x, p.meet(y, z).unwrap()) == p.meet(p.join(x, y).unwrap(), z)
        })));
        prop_assert_eq!(is_modular(&p).holds, classical);
    }

    #[test]
    fn canonical_form_ignores_labels((op, seed) in (arb_op(), any::<u64>())) {
        let n = op.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let moved = permute(&op, &perm);
        prop_assert_eq!(canonical_form(op.poset()), canonical_form(moved.poset()));
        prop_assert_eq!(canonical_form_op(&op), canonical_form_op(&moved));
    }

    #[test]
    fn documents_round_trip(op in arb_op()) {
        let doc = PosetDocument::from_op_poset("random", &op);
        let reparsed = parse_poset(&doc.to_text()).unwrap();
        prop_assert_eq!(&reparsed, &doc);
        prop_assert_eq!(reparsed.to_op_poset().unwrap(), op);
    }

    #[test]
    fn dot_edges_are_the_transitive_reduction(p in arb_poset()) {
        let n = p.len();
        let mut naive = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let between = (0..n).any(|c| p.lt(a, c) && p.lt(c, b));
                if p.lt(a, b) && !between {
                    naive.push(format!("\"{}\" -> \"{}\";", p.name(a), p.name(b)));
                }
            }
        }
        let dot = export_dot(&p, "p");
        let mut edges: Vec<String> =
            dot.lines().filter(|l| l.contains("->")).map(|l| l.trim().to_string()).collect();
        edges.sort();
        naive.sort();
        prop_assert_eq!(edges, naive);
    }
}

#[test]
fn ex1_canonical_form_under_every_relabeling() {
    let op = fixtures::ex1();
    let key = canonical_form(op.poset());
    let key_op = canonical_form_op(&op);
    let perms: Vec<Vec<usize>> = (0..op.len()).permutations(op.len()).collect();
    assert_eq!(perms.len(), 5040);
    for perm in perms {
        let moved = permute(&op, &perm);
        assert_eq!(canonical_form(moved.poset()), key);
        assert_eq!(canonical_form_op(&moved), key_op);
    }
}

#[test]
fn canonical_form_separates_small_shapes() {
    let chain = Poset::chain(3).unwrap();
    let diamond = fixtures::m3();
    let square = Poset::from_covers(numeric_names(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let four_chain = Poset::chain(4).unwrap();
    assert_ne!(canonical_form(&square), canonical_form(&four_chain));
    assert_ne!(canonical_form(&chain), canonical_form(diamond.poset()));
    assert_ne!(
        canonical_form(fixtures::fig3().poset()),
        canonical_form(fixtures::ex1().poset())
    );
}

#[test]
fn fixtures_round_trip_through_text() {
    for (file, text) in fixtures::ALL {
        let doc = parse_poset(text).unwrap();
        let again = parse_poset(&doc.to_text()).unwrap();
        assert_eq!(doc, again, "{file}");
    }
}
