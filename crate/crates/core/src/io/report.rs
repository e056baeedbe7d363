//! Machine-readable structure reports.
//!
//! Key order is fixed by field order:
//! `{name, n, properties, adjoint: {a1, a2, witnesses}, conditions: {i..vi}}`.
//! `adjoint` and `conditions` are `null` for non-orthogonal structures, where
//! the Sasaki operations are not total.

use serde::Serialize;

use crate::adjoint::{Condition, SasakiTables};
use crate::poset::{OpPoset, Poset};
use crate::properties::{Property, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub n: usize,
    pub properties: PropertiesSection,
    pub adjoint: Option<AdjointSection>,
    pub conditions: Option<ConditionsSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertiesSection {
    pub saturated: bool,
    pub orthogonal: bool,
    pub complemented: bool,
    pub antitone: bool,
    pub involution: bool,
    pub orthomodular: bool,
    pub modular: bool,
    pub lattice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointSection {
    pub a1: bool,
    pub a2: bool,
    pub witnesses: WitnessSection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSection {
    pub a1: Option<Vec<String>>,
    pub a2: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionsSection {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
    pub vi: bool,
}

/// Labels of a witness's elements.
pub fn witness_labels(p: &Poset, w: &Witness) -> Vec<String> {
    w.elements.iter().map(|&x| p.name(x).to_string()).collect()
}

/// `(1, c, a)`, followed by any subsets as `{a,b}`.
pub fn describe_witness(p: &Poset, w: &Witness) -> String {
    let mut out = format!("({})", witness_labels(p, w).join(", "));
    for s in &w.sets {
        let labels: Vec<&str> = s.iter().map(|x| p.name(x)).collect();
        out.push_str(&format!(" {{{}}}", labels.join(",")));
    }
    out
}

pub fn build_report(name: &str, op: &OpPoset) -> Report {
    let holds = |p: Property| p.check(op).is_some_and(|r| r.holds);
    let properties = PropertiesSection {
        saturated: holds(Property::Saturated),
        orthogonal: holds(Property::Orthogonal),
        complemented: holds(Property::Complemented),
        antitone: holds(Property::Antitone),
        involution: holds(Property::Involution),
        orthomodular: holds(Property::Orthomodular),
        modular: holds(Property::Modular),
        lattice: holds(Property::Lattice),
    };
    let adjoint = properties
        .orthogonal
        .then(|| SasakiTables::new(op).and_then(|t| t.report()).ok())
        .flatten();
    let labels = |w: &Option<Witness>| w.as_ref().map(|w| witness_labels(op.poset(), w));
    Report {
        name: name.to_string(),
        n: op.len(),
        adjoint: adjoint.as_ref().map(|r| AdjointSection {
            a1: r.a1.holds,
            a2: r.a2.holds,
            witnesses: WitnessSection {
                a1: labels(&r.a1.witness),
                a2: labels(&r.a2.witness),
            },
        }),
        conditions: adjoint.as_ref().map(|r| {
            let c = |which| r.condition(which).holds;
            ConditionsSection {
                i: c(Condition::I),
                ii: c(Condition::II),
                iii: c(Condition::III),
                iv: c(Condition::IV),
                v: c(Condition::V),
                vi: c(Condition::VI),
            }
        }),
        properties,
    }
}

pub fn report_json(name: &str, op: &OpPoset) -> String {
    serde_json::to_string_pretty(&build_report(name, op)).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ex1_report() {
        let report = build_report("ex1", &fixtures::ex1());
        assert!(report.properties.orthogonal && !report.properties.involution);
        let adjoint = report.adjoint.unwrap();
        assert!(!adjoint.a2);
        assert!(adjoint.witnesses.a2.is_some());
        assert!(!report.conditions.unwrap().vi);
    }

    #[test]
    fn key_order_is_stable() {
        let json = report_json("m3", &fixtures::m3());
        let keys = [
            "\"name\"",
            "\"n\"",
            "\"properties\"",
            "\"adjoint\"",
            "\"conditions\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }
}
