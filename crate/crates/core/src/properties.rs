//! Decision procedures for the structural properties of a poset with a
//! unary operation.
//!
//! Every check scans candidate tuples in lexicographic index order and stops
//! at the first violation, so witnesses are deterministic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::adjoint::Condition;
use crate::poset::{OpPoset, Poset};
use crate::subset::Subset;

/// Everything a [`PropertyReport`] can be about.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Saturated,
    Orthogonal,
    Complemented,
    Antitone,
    Involution,
    Orthomodular,
    Modular,
    Lattice,
    /// `1⊙x = x`, `0→x = 0'`, `x→0 = x'`, `x⊙0 = 0`.
    SasakiIdentities,
    /// Range, monotonicity and idempotence of the Sasaki projection.
    ProjectionLaws,
    A1,
    A2,
    Condition(Condition),
    /// Consequences of (A1)/(A2) for `x ∨ x'`, `x ∧ x'` and `x → y = 1`.
    AdjointLemma,
    /// Complemented orthogonal modular posets satisfy conditions (iii), (vi).
    ModularCorollary,
}

impl Property {
    /// The eight properties of the structure itself, in report order.
    pub const STRUCTURAL: [Property; 8] = [
        Property::Saturated,
        Property::Orthogonal,
        Property::Complemented,
        Property::Antitone,
        Property::Involution,
        Property::Orthomodular,
        Property::Modular,
        Property::Lattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Saturated => "saturated",
            Property::Orthogonal => "orthogonal",
            Property::Complemented => "complemented",
            Property::Antitone => "antitone",
            Property::Involution => "involution",
            Property::Orthomodular => "orthomodular",
            Property::Modular => "modular",
            Property::Lattice => "lattice",
            Property::SasakiIdentities => "sasaki_identities",
            Property::ProjectionLaws => "projection_laws",
            Property::A1 => "a1",
            Property::A2 => "a2",
            Property::Condition(c) => c.name(),
            Property::AdjointLemma => "adjoint_lemma",
            Property::ModularCorollary => "modular_corollary",
        }
    }

    /// Evaluates one of the [`STRUCTURAL`](Self::STRUCTURAL) properties.
    pub fn check(self, op: &OpPoset) -> Option<PropertyReport> {
        Some(match self {
            Property::Saturated => is_saturated(op.poset()),
            Property::Orthogonal => is_orthogonal(op),
            Property::Complemented => is_complementation(op),
            Property::Antitone => is_antitone(op),
            Property::Involution => is_involution(op),
            Property::Orthomodular => is_orthomodular(op),
            Property::Modular => is_modular(op.poset()),
            Property::Lattice => is_lattice(op.poset()),
            _ => return None,
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for Property {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let alias = match s {
            "complementation" => "complemented",
            "orthomodularity" => "orthomodular",
            other => other,
        };
        Property::STRUCTURAL
            .into_iter()
            .find(|p| p.name() == alias)
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

/// An element tuple (and, for set-valued laws, subsets) falsifying a named
/// clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Subset>,
    pub condition: &'static str,
}

impl Witness {
    pub fn new(elements: &[usize], condition: &'static str) -> Self {
        Witness {
            elements: elements.to_vec(),
            sets: Vec::new(),
            condition,
        }
    }

    pub fn with_sets(elements: &[usize], sets: &[Subset], condition: &'static str) -> Self {
        Witness {
            elements: elements.to_vec(),
            sets: sets.to_vec(),
            condition,
        }
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn pass(property: Property) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
        }
    }

    pub fn fail(property: Property, witness: Witness) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_scan(property: Property, witness: Option<Witness>) -> Self {
        PropertyReport {
            property,
            holds: witness.is_none(),
            witness,
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub fn is_saturated(p: &Poset) -> PropertyReport {
    let n = p.len();
    for (x, y) in pairs(n) {
        let lower = p.down_set(x).intersection(p.down_set(y));
        let tops = p.maximal(lower);
        if let Some(z) = lower.iter().find(|&z| !p.up_set(z).intersects(tops)) {
            return PropertyReport::fail(
                Property::Saturated,
                Witness::new(&[x, y, z], "lower bound below no maximal lower bound"),
            );
        }
        let upper = p.up_set(x).intersection(p.up_set(y));
        let bottoms = p.minimal(upper);
        if let Some(z) = upper.iter().find(|&z| !p.down_set(z).intersects(bottoms)) {
            return PropertyReport::fail(
                Property::Saturated,
                Witness::new(&[x, y, z], "upper bound above no minimal upper bound"),
            );
        }
    }
    PropertyReport::pass(Property::Saturated)
}

fn orthogonality_violation(op: &OpPoset) -> Option<Witness> {
    let p = op.poset();
    pairs(p.len()).find_map(|(a, b)| {
        if p.leq(a, b) && p.join(a, op.prime(b)).is_none() {
            return Some(Witness::new(&[a, b], "a <= b but a v b' undefined"));
        }
        if p.leq(op.prime(a), b) && p.meet(a, b).is_none() {
            return Some(Witness::new(&[a, b], "a' <= b but a ^ b undefined"));
        }
        None
    })
}

pub fn is_orthogonal(op: &OpPoset) -> PropertyReport {
    PropertyReport::from_scan(Property::Orthogonal, orthogonality_violation(op))
}

pub fn is_complementation(op: &OpPoset) -> PropertyReport {
    let p = op.poset();
    let witness = (0..p.len()).find_map(|x| {
        if p.join(x, op.prime(x)) != Some(p.top()) {
            Some(Witness::new(&[x], "x v x' != 1"))
        } else if p.meet(x, op.prime(x)) != Some(p.bottom()) {
            Some(Witness::new(&[x], "x ^ x' != 0"))
        } else {
            None
        }
    });
    PropertyReport::from_scan(Property::Complemented, witness)
}

pub fn is_antitone(op: &OpPoset) -> PropertyReport {
    let p = op.poset();
    let witness = pairs(p.len())
        .find(|&(x, y)| p.leq(x, y) && !p.leq(op.prime(y), op.prime(x)))
        .map(|(x, y)| Witness::new(&[x, y], "x <= y but y' not <= x'"));
    PropertyReport::from_scan(Property::Antitone, witness)
}

pub fn is_involution(op: &OpPoset) -> PropertyReport {
    let witness = (0..op.len())
        .find(|&x| op.prime(op.prime(x)) != x)
        .map(|x| Witness::new(&[x], "x'' != x"));
    PropertyReport::from_scan(Property::Involution, witness)
}

/// Antitone involutive complementation with `x <= y => y = x v (y' v x)'`,
/// where both joins must be defined.
pub fn is_orthomodular(op: &OpPoset) -> PropertyReport {
    for prerequisite in [is_involution(op), is_antitone(op), is_complementation(op)] {
        if let Some(mut w) = prerequisite.witness {
            w.condition = match prerequisite.property {
                Property::Involution => "not an involution",
                Property::Antitone => "not antitone",
                _ => "not a complementation",
            };
            return PropertyReport::fail(Property::Orthomodular, w);
        }
    }
    let p = op.poset();
    for (x, y) in pairs(p.len()) {
        if !p.leq(x, y) {
            continue;
        }
        let Some(inner) = p.join(op.prime(y), x) else {
            return PropertyReport::fail(
                Property::Orthomodular,
                Witness::new(&[x, y], "y' v x undefined"),
            );
        };
        match p.join(x, op.prime(inner)) {
            None => {
                return PropertyReport::fail(
                    Property::Orthomodular,
                    Witness::new(&[x, y], "x v (y' v x)' undefined"),
                )
            }
            Some(v) if v != y => {
                return PropertyReport::fail(
                    Property::Orthomodular,
                    Witness::new(&[x, y], "x v (y' v x)' != y"),
                )
            }
            _ => {}
        }
    }
    PropertyReport::pass(Property::Orthomodular)
}

/// `x <= z => L(U(x,y), z) = LU(x, L(y,z))` for all `x, y, z`.
pub fn is_modular(p: &Poset) -> PropertyReport {
    let n = p.len();
    for (x, z) in pairs(n) {
        if !p.leq(x, z) {
            continue;
        }
        for y in 0..n {
            let lhs = p.lower_set(p.upper_set(Subset::singleton(x).with(y)).with(z));
            let rhs = p.lower_set(p.upper_set(p.lower_set(Subset::singleton(y).with(z)).with(x)));
            if lhs != rhs {
                return PropertyReport::fail(
                    Property::Modular,
                    Witness::new(&[x, y, z], "L(U(x,y),z) != LU(x,L(y,z))"),
                );
            }
        }
    }
    PropertyReport::pass(Property::Modular)
}

pub fn is_lattice(p: &Poset) -> PropertyReport {
    let witness = pairs(p.len()).find_map(|(x, y)| {
        if p.join(x, y).is_none() {
            Some(Witness::new(&[x, y], "x v y undefined"))
        } else if p.meet(x, y).is_none() {
            Some(Witness::new(&[x, y], "x ^ y undefined"))
        } else {
            None
        }
    });
    PropertyReport::from_scan(Property::Lattice, witness)
}

/// Re-evaluates the clause a structural witness names and reports whether
/// the witness really falsifies it. `None` for properties without a replay
/// rule or witnesses of the wrong shape.
pub fn replay_witness(op: &OpPoset, property: Property, witness: &Witness) -> Option<bool> {
    let p = op.poset();
    let e = &witness.elements;
    let pr = |x: usize| op.prime(x);
    let arg = |i: usize| e.get(i).copied().filter(|&x| x < p.len());
    Some(match (property, witness.condition) {
        (Property::Orthogonal, "a <= b but a v b' undefined") => {
            let (a, b) = (arg(0)?, arg(1)?);
            p.leq(a, b) && p.join(a, pr(b)).is_none()
        }
        (Property::Orthogonal, "a' <= b but a ^ b undefined") => {
            let (a, b) = (arg(0)?, arg(1)?);
            p.leq(pr(a), b) && p.meet(a, b).is_none()
        }
        (Property::Complemented, "x v x' != 1") => {
            let x = arg(0)?;
            p.join(x, pr(x)) != Some(p.top())
        }
        (Property::Complemented, "x ^ x' != 0") => {
            let x = arg(0)?;
            p.meet(x, pr(x)) != Some(p.bottom())
        }
        (Property::Antitone, _) | (Property::Orthomodular, "not antitone") => {
            let (x, y) = (arg(0)?, arg(1)?);
            p.leq(x, y) && !p.leq(pr(y), pr(x))
        }
        (Property::Involution, _) | (Property::Orthomodular, "not an involution") => {
            let x = arg(0)?;
            pr(pr(x)) != x
        }
        (Property::Orthomodular, "not a complementation") => {
            let x = arg(0)?;
            p.join(x, pr(x)) != Some(p.top()) || p.meet(x, pr(x)) != Some(p.bottom())
        }
        (Property::Orthomodular, _) => {
            let (x, y) = (arg(0)?, arg(1)?);
            p.leq(x, y) && p.join(pr(y), x).and_then(|j| p.join(x, pr(j))) != Some(y)
        }
        (Property::Modular, _) => {
            let (x, y, z) = (arg(0)?, arg(1)?, arg(2)?);
            p.leq(x, z)
                && p.lower_set(p.upper_set(Subset::singleton(x).with(y)).with(z))
                    != p.lower_set(p.upper_set(p.lower_set(Subset::singleton(y).with(z)).with(x)))
        }
        (Property::Lattice, _) => {
            let (x, y) = (arg(0)?, arg(1)?);
            p.join(x, y).is_none() || p.meet(x, y).is_none()
        }
        (Property::Saturated, _) => {
            let (x, y, z) = (arg(0)?, arg(1)?, arg(2)?);
            let lower = p.down_set(x).intersection(p.down_set(y));
            let upper = p.up_set(x).intersection(p.up_set(y));
            (lower.contains(z) && !p.up_set(z).intersects(p.maximal(lower)))
                || (upper.contains(z) && !p.down_set(z).intersects(p.minimal(upper)))
        }
        (Property::A1 | Property::A2, _) => {
            let (x, y, z) = (arg(0)?, arg(1)?, arg(2)?);
            let prod = crate::sasaki::odot(op, x, y).ok()?;
            let imp = crate::sasaki::arrow(op, y, z).ok()?;
            let lhs = p.leq2(prod, Subset::singleton(z));
            let rhs = p.leq1(Subset::singleton(x), imp);
            if property == Property::A1 {
                lhs && !rhs
            } else {
                rhs && !lhs
            }
        }
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poset::numeric_names;

    fn labels(op: &OpPoset, w: &Witness) -> Vec<String> {
        w.elements.iter().map(|&x| op.name(x).to_string()).collect()
    }

    fn op_from(names: &[&str], covers: &[(usize, usize)], prime: &[usize]) -> OpPoset {
        let names = names.iter().map(|s| s.to_string()).collect();
        OpPoset::new(Poset::from_covers(names, covers).unwrap(), prime.to_vec()).unwrap()
    }

    fn two_chain() -> OpPoset {
        OpPoset::new(Poset::chain(2).unwrap(), vec![1, 0]).unwrap()
    }

    #[test]
    fn saturation_holds_on_finite_examples() {
        assert!(is_saturated(fixtures::ex1().poset()).holds);
        assert!(is_saturated(&Poset::chain(1).unwrap()).holds);
        assert!(is_saturated(fixtures::fig3().poset()).holds);
    }

    #[test]
    fn orthogonality() {
        assert!(is_orthogonal(&fixtures::ex1()).holds);
        assert!(is_orthogonal(&fixtures::m3()).holds);
        // 0 < a,b < c,d < 1 with c' = b
        let op = op_from(
            &["0", "a", "b", "c", "d", "1"],
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
            &[5, 0, 0, 2, 0, 0],
        );
        let report = is_orthogonal(&op);
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_eq!(labels(&op, &w), ["a", "c"]);
        assert_eq!(replay_witness(&op, Property::Orthogonal, &w), Some(true));
    }

    #[test]
    fn complementation() {
        assert!(is_complementation(&fixtures::ex1()).holds);
        assert!(is_complementation(&two_chain()).holds);
        let id = OpPoset::new(Poset::chain(3).unwrap(), vec![0, 1, 2]).unwrap();
        let report = is_complementation(&id);
        assert_eq!(report.witness.unwrap().elements, vec![0]);
    }

    #[test]
    fn antitone() {
        assert!(is_antitone(&fixtures::fig3()).holds);
        let constant_top = OpPoset::new(Poset::chain(3).unwrap(), vec![2, 2, 2]).unwrap();
        assert!(is_antitone(&constant_top).holds);
        assert!(!is_involution(&constant_top).holds);
        // every strict pair of ex1 maps into e <= e or below 1 = 0'
        assert!(is_antitone(&fixtures::ex1()).holds);
    }

    #[test]
    fn involution() {
        let ex1 = fixtures::ex1();
        let w = is_involution(&ex1).witness.unwrap();
        assert_eq!(labels(&ex1, &w), ["a"]);
        let m3 = fixtures::m3();
        let w = is_involution(&m3).witness.unwrap();
        assert_eq!(labels(&m3, &w), ["a"]);
        let id = OpPoset::new(Poset::chain(3).unwrap(), vec![0, 1, 2]).unwrap();
        assert!(is_involution(&id).holds);
    }

    #[test]
    fn orthomodularity() {
        assert!(is_orthomodular(&fixtures::fig3()).holds);
        assert!(is_orthomodular(&fixtures::cube8()).holds);
        let ex1 = fixtures::ex1();
        let report = is_orthomodular(&ex1);
        assert_eq!(
            report.witness.as_ref().unwrap().condition,
            "not an involution"
        );
        let benzene = fixtures::benzene();
        let w = is_orthomodular(&benzene).witness.unwrap();
        assert_eq!(labels(&benzene, &w), ["x", "z"]);
        assert_eq!(w.condition, "x v (y' v x)' != y");
        assert_eq!(
            replay_witness(&benzene, Property::Orthomodular, &w),
            Some(true)
        );
    }

    #[test]
    fn modularity() {
        assert!(is_modular(fixtures::m3().poset()).holds);
        assert!(is_modular(&Poset::chain(2).unwrap()).holds);
        let benzene = fixtures::benzene();
        let report = is_modular(benzene.poset());
        assert!(!report.holds);
        let w = report.witness.unwrap();
        assert_eq!(replay_witness(&benzene, Property::Modular, &w), Some(true));
        assert!(!is_modular(fixtures::ex1().poset()).holds);
    }

    #[test]
    fn lattices() {
        let ex1 = fixtures::ex1();
        let w = is_lattice(ex1.poset()).witness.unwrap();
        assert_eq!(labels(&ex1, &w), ["a", "b"]);
        assert!(is_lattice(fixtures::fig3().poset()).holds);
        assert!(is_lattice(&Poset::chain(5).unwrap()).holds);
        let names = numeric_names(4);
        let diamond = Poset::from_covers(names, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_lattice(&diamond).holds);
    }

    #[test]
    fn property_names_parse() {
        for p in Property::STRUCTURAL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!(
            "complementation".parse::<Property>().unwrap(),
            Property::Complemented
        );
        assert!("adjoint".parse::<Property>().is_err());
    }
}
