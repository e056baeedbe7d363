//! Adjointness of the generalized Sasaki operations.
//!
//! The pair `(⊙, →)` is adjoint when both directions hold for all `x, y, z`:
//!
//! * (A1) `x ⊙ y <=_2 z` implies `x <=_1 y → z`
//! * (A2) `x <=_1 y → z` implies `x ⊙ y <=_2 z`
//!
//! Besides the direct triple scans, six two-variable conditions are
//! evaluated; on orthogonal structures (A1) agrees with (i)-(iii) and (A2)
//! with (iv)-(vi).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poset::{OpPoset, Poset};
use crate::properties::{
    is_complementation, is_lattice, is_modular, is_orthogonal, Property, PropertyReport, Witness,
};
use crate::sasaki::{op_tables, OpTable, SasakiError};
use crate::subset::Subset;

/// The two-variable characterizations of (A1) and (A2).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `Min U(x,y') = y' ∨ (Min U(x,y') ∧ y)`
    I,
    /// `Min U(x,y') <=_2 y' ∨ (Min U(x,y') ∧ y)`
    II,
    /// `x' <= y` implies `y = x' ∨ (y ∧ x)`
    III,
    /// `x ∧ (Max L(x,y) ∨ x') = Max L(x,y)`
    IV,
    /// `x ∧ (Max L(x,y) ∨ x') <=_1 Max L(x,y)`
    V,
    /// `x <= y` implies `x = (y' ∨ x) ∧ y`
    VI,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
        Condition::VI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::V => "v",
            Condition::VI => "vi",
        }
    }

    /// Conditions (i)-(iii) characterize (A1), (iv)-(vi) characterize (A2).
    pub fn characterizes_a1(self) -> bool {
        matches!(self, Condition::I | Condition::II | Condition::III)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({})", self.name()))
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown condition `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdjointError {
    #[error("not a lattice: {0} has no join or meet")]
    NotLattice(String),
    #[error("not complemented at {0}")]
    NotComplemented(String),
}

/// Precomputed `⊙`/`→` tables for repeated queries on one structure.
#[derive(Clone, Debug)]
pub struct SasakiTables<'a> {
    op: &'a OpPoset,
    odot: OpTable,
    arrow: OpTable,
}

impl<'a> SasakiTables<'a> {
    pub fn new(op: &'a OpPoset) -> Result<Self, SasakiError> {
        let (odot, arrow) = op_tables(op)?;
        Ok(SasakiTables { op, odot, arrow })
    }

    pub fn odot(&self) -> &OpTable {
        &self.odot
    }

    pub fn arrow(&self) -> &OpTable {
        &self.arrow
    }

    fn poset(&self) -> &Poset {
        self.op.poset()
    }

    pub fn check_a1(&self) -> PropertyReport {
        let p = self.poset();
        let n = p.len();
        for x in 0..n {
            for y in 0..n {
                let prod = self.odot.cell(x, y);
                for z in 0..n {
                    // x ⊙ y <=_2 {z}  and not  {x} <=_1 y → z
                    if prod.intersects(p.down_set(z))
                        && !self.arrow.cell(y, z).intersects(p.up_set(x))
                    {
                        return PropertyReport::fail(
                            Property::A1,
                            Witness::new(&[x, y, z], "x ⊙ y <=_2 z but not x <=_1 y → z"),
                        );
                    }
                }
            }
        }
        PropertyReport::pass(Property::A1)
    }

    pub fn check_a2(&self) -> PropertyReport {
        let p = self.poset();
        let n = p.len();
        for x in 0..n {
            for y in 0..n {
                let prod = self.odot.cell(x, y);
                for z in 0..n {
                    if self.arrow.cell(y, z).intersects(p.up_set(x))
                        && !prod.intersects(p.down_set(z))
                    {
                        return PropertyReport::fail(
                            Property::A2,
                            Witness::new(&[x, y, z], "x <=_1 y → z but not x ⊙ y <=_2 z"),
                        );
                    }
                }
            }
        }
        PropertyReport::pass(Property::A2)
    }

    /// `{with ∨ s : s ∈ set}`.
    fn join_all(
        &self,
        with: usize,
        set: Subset,
        x: usize,
        y: usize,
    ) -> Result<Subset, SasakiError> {
        let p = self.poset();
        set.iter().try_fold(Subset::EMPTY, |acc, s| {
            let v = p.join(with, s).ok_or(SasakiError::UndefinedJoin {
                left: x,
                right: y,
                bound: s,
                with,
            })?;
            Ok(acc.with(v))
        })
    }

    /// `{with ∧ s : s ∈ set}`.
    fn meet_all(
        &self,
        with: usize,
        set: Subset,
        x: usize,
        y: usize,
    ) -> Result<Subset, SasakiError> {
        let p = self.poset();
        set.iter().try_fold(Subset::EMPTY, |acc, s| {
            let v = p.meet(with, s).ok_or(SasakiError::UndefinedMeet {
                left: x,
                right: y,
                bound: s,
                with,
            })?;
            Ok(acc.with(v))
        })
    }

    pub fn check_condition(&self, which: Condition) -> Result<PropertyReport, SasakiError> {
        let op = self.op;
        let p = self.poset();
        let n = p.len();
        let fail = |x: usize, y: usize, what: &'static str| {
            Ok(PropertyReport::fail(
                Property::Condition(which),
                Witness::new(&[x, y], what),
            ))
        };
        for x in 0..n {
            for y in 0..n {
                let (xp, yp) = (op.prime(x), op.prime(y));
                match which {
                    Condition::I | Condition::II => {
                        let bounds = p.min_upper_bounds(x, yp);
                        // Min U(x,y') ∧ y is exactly x ⊙ y
                        let rhs = self.join_all(yp, self.odot.cell(x, y), x, y)?;
                        if which == Condition::I && bounds != rhs {
                            return fail(x, y, "Min U(x,y') != y' ∨ (Min U(x,y') ∧ y)");
                        }
                        if which == Condition::II && !p.leq2(bounds, rhs) {
                            return fail(x, y, "Min U(x,y') not <=_2 y' ∨ (Min U(x,y') ∧ y)");
                        }
                    }
                    Condition::III => {
                        if !p.leq(xp, y) {
                            continue;
                        }
                        let m = p.meet(y, x).ok_or(SasakiError::UndefinedMeet {
                            left: x,
                            right: y,
                            bound: y,
                            with: x,
                        })?;
                        let v = p.join(xp, m).ok_or(SasakiError::UndefinedJoin {
                            left: x,
                            right: y,
                            bound: m,
                            with: xp,
                        })?;
                        if v != y {
                            return fail(x, y, "x' <= y but y != x' ∨ (y ∧ x)");
                        }
                    }
                    Condition::IV | Condition::V => {
                        let bounds = p.max_lower_bounds(x, y);
                        // Max L(x,y) ∨ x' is exactly x → y
                        let lhs = self.meet_all(x, self.arrow.cell(x, y), x, y)?;
                        if which == Condition::IV && lhs != bounds {
                            return fail(x, y, "x ∧ (Max L(x,y) ∨ x') != Max L(x,y)");
                        }
                        if which == Condition::V && !p.leq1(lhs, bounds) {
                            return fail(x, y, "x ∧ (Max L(x,y) ∨ x') not <=_1 Max L(x,y)");
                        }
                    }
                    Condition::VI => {
                        if !p.leq(x, y) {
                            continue;
                        }
                        let j = p.join(yp, x).ok_or(SasakiError::UndefinedJoin {
                            left: x,
                            right: y,
                            bound: x,
                            with: yp,
                        })?;
                        let v = p.meet(j, y).ok_or(SasakiError::UndefinedMeet {
                            left: x,
                            right: y,
                            bound: j,
                            with: y,
                        })?;
                        if v != x {
                            return fail(x, y, "x <= y but x != (y' ∨ x) ∧ y");
                        }
                    }
                }
            }
        }
        Ok(PropertyReport::pass(Property::Condition(which)))
    }

    pub fn report(&self) -> Result<AdjointReport, SasakiError> {
        let conditions = Condition::ALL
            .into_iter()
            .map(|c| self.check_condition(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AdjointReport {
            a1: self.check_a1(),
            a2: self.check_a2(),
            conditions,
        })
    }
}

/// (A1), (A2) and all six conditions for one structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointReport {
    pub a1: PropertyReport,
    pub a2: PropertyReport,
    /// Indexed like [`Condition::ALL`].
    pub conditions: Vec<PropertyReport>,
}

impl AdjointReport {
    pub fn is_adjoint(&self) -> bool {
        self.a1.holds && self.a2.holds
    }

    pub fn condition(&self, which: Condition) -> &PropertyReport {
        &self.conditions[which as usize]
    }

    /// (A1) agrees with (i)-(iii) and (A2) with (iv)-(vi). Returns the first
    /// condition that disagrees.
    pub fn equivalence_violation(&self) -> Option<Condition> {
        Condition::ALL.into_iter().find(|&c| {
            let direction = if c.characterizes_a1() {
                &self.a1
            } else {
                &self.a2
            };
            self.condition(c).holds != direction.holds
        })
    }
}

pub fn check_a1(op: &OpPoset) -> Result<PropertyReport, SasakiError> {
    Ok(SasakiTables::new(op)?.check_a1())
}

pub fn check_a2(op: &OpPoset) -> Result<PropertyReport, SasakiError> {
    Ok(SasakiTables::new(op)?.check_a2())
}

pub fn check_condition(op: &OpPoset, which: Condition) -> Result<PropertyReport, SasakiError> {
    SasakiTables::new(op)?.check_condition(which)
}

pub fn is_adjoint_pair(op: &OpPoset) -> Result<AdjointReport, SasakiError> {
    SasakiTables::new(op)?.report()
}

/// Consequences of adjointness, checked as implications on one structure:
/// (A1) gives `x ∨ x' = 1`, (A2) gives `x ∧ x' = 0` and `x → y = {1}` exactly
/// when `x <= y`, and both together make `'` a complementation.
pub fn check_section4_lemma(op: &OpPoset) -> Result<PropertyReport, SasakiError> {
    let tables = SasakiTables::new(op)?;
    let p = op.poset();
    let (a1, a2) = (tables.check_a1().holds, tables.check_a2().holds);
    let fail = |e: &[usize], what| {
        Ok(PropertyReport::fail(
            Property::AdjointLemma,
            Witness::new(e, what),
        ))
    };
    for x in 0..op.len() {
        if a1 && p.join(x, op.prime(x)) != Some(p.top()) {
            return fail(&[x], "A1 holds but x ∨ x' != 1");
        }
        if a2 && p.meet(x, op.prime(x)) != Some(p.bottom()) {
            return fail(&[x], "A2 holds but x ∧ x' != 0");
        }
        if a2 {
            for y in 0..op.len() {
                let is_top = tables.arrow().cell(x, y) == Subset::singleton(p.top());
                if is_top != p.leq(x, y) {
                    return fail(&[x, y], "A2 holds but (x → y = 1) differs from x <= y");
                }
            }
        }
    }
    if a1 && a2 {
        if let Some(w) = is_complementation(op).witness {
            return fail(&w.elements, "adjoint but ' is not a complementation");
        }
    }
    Ok(PropertyReport::pass(Property::AdjointLemma))
}

/// Status of "complemented, orthogonal and modular implies (iii) and (vi)".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCorollaryReport {
    pub premise: bool,
    /// `(iii) ∧ (vi)`; evaluated whenever the structure is orthogonal.
    pub conclusion: Option<bool>,
    pub report: PropertyReport,
}

pub fn check_modular_corollary(op: &OpPoset) -> ModularCorollaryReport {
    let orthogonal = is_orthogonal(op).holds;
    let premise = orthogonal && is_complementation(op).holds && is_modular(op.poset()).holds;
    let mut witness = None;
    let conclusion = if orthogonal {
        let tables = SasakiTables::new(op).expect("orthogonal structures have total operations");
        let mut both = true;
        for c in [Condition::III, Condition::VI] {
            let r = tables
                .check_condition(c)
                .expect("orthogonal structures have total operations");
            if !r.holds {
                both = false;
                witness = witness.or(r.witness);
            }
        }
        Some(both)
    } else {
        None
    };
    let report = if premise && conclusion == Some(false) {
        let mut w = witness.expect("failed condition carries a witness");
        w.condition = "complemented orthogonal modular but (iii) or (vi) fails";
        PropertyReport::fail(Property::ModularCorollary, w)
    } else {
        PropertyReport::pass(Property::ModularCorollary)
    };
    ModularCorollaryReport {
        premise,
        conclusion,
        report,
    }
}

/// `[0, x, y, z, u, 1]` with `x < z` and `y < u`: two incomparable chains.
pub type O6 = [usize; 6];

/// Whether `cand` is an `O6`-shaped sublattice: the two middle chains
/// `x < z`, `y < u` are pairwise incomparable across, `0` and `1` are the
/// bounds of `p`, and all six elements are closed under join and meet.
pub fn is_o6_sublattice(p: &Poset, cand: &O6) -> bool {
    let [bot, x, y, z, u, top] = *cand;
    if bot != p.bottom() || top != p.top() {
        return false;
    }
    let mid = [x, y, z, u];
    if mid.iter().any(|&m| m == bot || m == top) {
        return false;
    }
    let set: Subset = cand.iter().copied().collect();
    if set.len() != 6 || !p.lt(x, z) || !p.lt(y, u) {
        return false;
    }
    if [(x, y), (x, u), (z, y), (z, u)]
        .iter()
        .any(|&(a, b)| p.comparable(a, b))
    {
        return false;
    }
    cand.iter().all(|&a| {
        cand.iter().all(|&b| {
            matches!(p.join(a, b), Some(j) if set.contains(j))
                && matches!(p.meet(a, b), Some(m) if set.contains(m))
        })
    })
}

pub fn closed_under_prime(op: &OpPoset, elements: &[usize]) -> bool {
    let set: Subset = elements.iter().copied().collect();
    elements.iter().all(|&x| set.contains(op.prime(x)))
}

/// Searches for a sub-structure `{0, x, y, z, u, 1}` shaped like `O6` that
/// is closed under join, meet and `'`. Requires a complemented lattice.
pub fn find_o6_subalgebra(op: &OpPoset) -> Result<Option<O6>, AdjointError> {
    let p = op.poset();
    let label = |w: &Witness| {
        w.elements
            .iter()
            .map(|&e| p.name(e))
            .collect::<Vec<_>>()
            .join(", ")
    };
    if let Some(w) = is_lattice(p).witness {
        return Err(AdjointError::NotLattice(format!("({})", label(&w))));
    }
    if let Some(w) = is_complementation(op).witness {
        return Err(AdjointError::NotComplemented(label(&w)));
    }
    let n = p.len();
    let inner: Vec<usize> = (0..n)
        .filter(|&e| e != p.bottom() && e != p.top())
        .collect();
    for &x in &inner {
        for &z in &inner {
            if !p.lt(x, z) {
                continue;
            }
            for &y in &inner {
                for &u in &inner {
                    let cand = [p.bottom(), x, y, z, u, p.top()];
                    if p.lt(y, u) && is_o6_sublattice(p, &cand) && closed_under_prime(op, &cand) {
                        return Ok(Some(cand));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sasaki::{arrow, odot};

    fn ix(op: &OpPoset, l: &str) -> usize {
        op.poset().index_of(l).unwrap()
    }

    #[test]
    fn adjoint_on_m3_and_fig3() {
        for op in [fixtures::m3(), fixtures::fig3(), fixtures::cube8()] {
            let report = is_adjoint_pair(&op).unwrap();
            assert!(report.is_adjoint());
            assert!(report.conditions.iter().all(|c| c.holds));
        }
        let one = OpPoset::new(Poset::chain(1).unwrap(), vec![0]).unwrap();
        assert!(check_a1(&one).unwrap().holds);
        assert!(check_a2(&one).unwrap().holds);
    }

    #[test]
    fn ex1_violates_a2() {
        let op = fixtures::ex1();
        let report = is_adjoint_pair(&op).unwrap();
        assert!(!report.is_adjoint());
        assert!(!report.a2.holds);
        assert_eq!(report.equivalence_violation(), None);
        assert!(!report.condition(Condition::VI).holds);

        // the triple (1, c, a)
        let (one, c, a) = (ix(&op, "1"), ix(&op, "c"), ix(&op, "a"));
        let p = op.poset();
        let to = arrow(&op, c, a).unwrap();
        assert_eq!(to, Subset::singleton(one));
        assert!(p.leq1(Subset::singleton(one), to));
        let prod = odot(&op, one, c).unwrap();
        assert_eq!(prod, Subset::singleton(c));
        assert!(!p.leq2(prod, Subset::singleton(a)));
    }

    #[test]
    fn benzene_is_not_adjoint() {
        let op = fixtures::benzene();
        let report = is_adjoint_pair(&op).unwrap();
        assert!(!report.is_adjoint());
        let w = report.a2.witness.clone().unwrap();
        let [x, y, z] = [w.elements[0], w.elements[1], w.elements[2]];
        let p = op.poset();
        assert!(p.leq1(Subset::singleton(x), arrow(&op, y, z).unwrap()));
        assert!(!p.leq2(odot(&op, x, y).unwrap(), Subset::singleton(z)));
    }

    #[test]
    fn m3_conditions() {
        let op = fixtures::m3();
        assert!(check_condition(&op, Condition::III).unwrap().holds);
        assert!(check_condition(&op, Condition::VI).unwrap().holds);
    }

    #[test]
    fn lemma_and_corollary_on_fixtures() {
        for op in [fixtures::m3(), fixtures::ex1(), fixtures::fig3()] {
            assert!(check_section4_lemma(&op).unwrap().holds);
        }
        let two = OpPoset::new(Poset::chain(2).unwrap(), vec![1, 0]).unwrap();
        assert!(check_section4_lemma(&two).unwrap().holds);

        let m3 = check_modular_corollary(&fixtures::m3());
        assert!(m3.premise && m3.conclusion == Some(true) && m3.report.holds);
        let ex1 = check_modular_corollary(&fixtures::ex1());
        assert!(!ex1.premise && ex1.report.holds);
        let cube = check_modular_corollary(&fixtures::cube8());
        assert!(cube.premise && cube.conclusion == Some(true));
    }

    #[test]
    fn o6_search() {
        let fig3 = fixtures::fig3();
        assert_eq!(find_o6_subalgebra(&fig3).unwrap(), None);
        let g = |l| ix(&fig3, l);
        let sub = [g("0"), g("c"), g("d"), g("a'"), g("f'"), g("1")];
        assert!(is_o6_sublattice(fig3.poset(), &sub));
        assert!(!closed_under_prime(&fig3, &sub));

        let benzene = fixtures::benzene();
        let found = find_o6_subalgebra(&benzene).unwrap().unwrap();
        let mut all = found.to_vec();
        all.sort();
        assert_eq!(all, (0..6).collect::<Vec<_>>());

        assert_eq!(find_o6_subalgebra(&fixtures::cube8()).unwrap(), None);
        assert!(matches!(
            find_o6_subalgebra(&fixtures::ex1()),
            Err(AdjointError::NotLattice(_))
        ));
    }

    #[test]
    fn condition_names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(c.name().parse::<Condition>().unwrap(), c);
            assert_eq!(c.to_string().parse::<Condition>().unwrap(), c);
        }
    }
}
