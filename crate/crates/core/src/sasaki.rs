//! Generalized Sasaki projection, its dual, and the set-valued operations
//! built from them:
//!
//! ```text
//! p_a(x)  = Min U(x, a') ∧ a        x ⊙ y = Min U(x, y') ∧ y = p_y(x)
//! p̄_a(x) = a' ∨ Max L(a, x)         x → y = x' ∨ Max L(x, y) = p̄_x(y)
//! ```
//!
//! `S ∧ a` means `{s ∧ a : s ∈ S}`. Results are kept as raw sets; they are
//! not reduced to antichains. Each meet or join is defined whenever the
//! structure is orthogonal; otherwise the first missing one is reported.

use serde::Serialize;
use thiserror::Error;

use crate::poset::OpPoset;
use crate::properties::{is_orthomodular, Property, PropertyReport, Witness};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SasakiError {
    /// `bound ∧ with` does not exist while evaluating `left ⊙ right`.
    #[error("meet of {bound} and {with} undefined while evaluating {left} ⊙ {right}")]
    UndefinedMeet {
        left: usize,
        right: usize,
        bound: usize,
        with: usize,
    },
    /// `with ∨ bound` does not exist while evaluating `left → right`.
    #[error("join of {with} and {bound} undefined while evaluating {left} → {right}")]
    UndefinedJoin {
        left: usize,
        right: usize,
        bound: usize,
        with: usize,
    },
    #[error("exhaustive subset sampling is limited to 10 elements, got {0}")]
    SampleTooLarge(usize),
}

/// `x ⊙ y = Min U(x, y') ∧ y`.
pub fn odot(op: &OpPoset, x: usize, y: usize) -> Result<Subset, SasakiError> {
    let p = op.poset();
    let mut out = Subset::EMPTY;
    for m in p.min_upper_bounds(x, op.prime(y)) {
        let v = p.meet(m, y).ok_or(SasakiError::UndefinedMeet {
            left: x,
            right: y,
            bound: m,
            with: y,
        })?;
        out.insert(v);
    }
    Ok(out)
}

/// `x → y = x' ∨ Max L(x, y)`.
pub fn arrow(op: &OpPoset, x: usize, y: usize) -> Result<Subset, SasakiError> {
    let p = op.poset();
    let xp = op.prime(x);
    let mut out = Subset::EMPTY;
    for m in p.max_lower_bounds(x, y) {
        let v = p.join(xp, m).ok_or(SasakiError::UndefinedJoin {
            left: x,
            right: y,
            bound: m,
            with: xp,
        })?;
        out.insert(v);
    }
    Ok(out)
}

/// `p_a(x) = Min U(x, a') ∧ a`.
pub fn sasaki_proj(op: &OpPoset, a: usize, x: usize) -> Result<Subset, SasakiError> {
    odot(op, x, a)
}

/// `p̄_a(x) = a' ∨ Max L(a, x)`.
pub fn sasaki_proj_dual(op: &OpPoset, a: usize, x: usize) -> Result<Subset, SasakiError> {
    arrow(op, a, x)
}

/// `p_a(A) = ⋃_{x ∈ A} p_a(x)`.
pub fn sasaki_proj_set(op: &OpPoset, a: usize, set: Subset) -> Result<Subset, SasakiError> {
    set.iter().try_fold(
        Subset::EMPTY,
        |acc, x| Ok(acc.union(sasaki_proj(op, a, x)?)),
    )
}

/// `p̄_a(A) = ⋃_{x ∈ A} p̄_a(x)`.
pub fn sasaki_proj_dual_set(op: &OpPoset, a: usize, set: Subset) -> Result<Subset, SasakiError> {
    set.iter().try_fold(Subset::EMPTY, |acc, x| {
        Ok(acc.union(sasaki_proj_dual(op, a, x)?))
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Odot,
    Arrow,
}

impl OpKind {
    pub fn symbol(self) -> &'static str {
        match self {
            OpKind::Odot => "⊙",
            OpKind::Arrow => "→",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Odot => "odot",
            OpKind::Arrow => "arrow",
        }
    }

    pub fn apply(self, op: &OpPoset, x: usize, y: usize) -> Result<Subset, SasakiError> {
        match self {
            OpKind::Odot => odot(op, x, y),
            OpKind::Arrow => arrow(op, x, y),
        }
    }
}

/// Full operation table: `cell(x, y)` is `x ⊙ y` or `x → y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    kind: OpKind,
    n: usize,
    cells: Vec<Subset>,
}

impl OpTable {
    pub fn build(op: &OpPoset, kind: OpKind) -> Result<Self, SasakiError> {
        let n = op.len();
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(kind.apply(op, x, y)?);
            }
        }
        Ok(OpTable { kind, n, cells })
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn cell(&self, x: usize, y: usize) -> Subset {
        self.cells[x * self.n + y]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Subset]> {
        self.cells.chunks(self.n.max(1))
    }
}

/// The `⊙` and `→` tables.
pub fn op_tables(op: &OpPoset) -> Result<(OpTable, OpTable), SasakiError> {
    Ok((
        OpTable::build(op, OpKind::Odot)?,
        OpTable::build(op, OpKind::Arrow)?,
    ))
}

/// `1⊙x = x`, `0→x = 0'`, `x→0 = x'` and `x⊙0 = 0`, each checked only
/// where the operation is defined.
pub fn check_lemma1(op: &OpPoset) -> PropertyReport {
    let p = op.poset();
    let (bot, top) = (p.bottom(), p.top());
    let fails = |r: Result<Subset, SasakiError>, expect: usize| matches!(r, Ok(s) if s != Subset::singleton(expect));
    for x in 0..op.len() {
        if fails(odot(op, top, x), x) {
            return PropertyReport::fail(
                Property::SasakiIdentities,
                Witness::new(&[x], "1 ⊙ x != x"),
            );
        }
        if fails(arrow(op, bot, x), op.prime(bot)) {
            return PropertyReport::fail(
                Property::SasakiIdentities,
                Witness::new(&[x], "0 → x != 0'"),
            );
        }
        if fails(arrow(op, x, bot), op.prime(x)) {
            return PropertyReport::fail(
                Property::SasakiIdentities,
                Witness::new(&[x], "x → 0 != x'"),
            );
        }
        if fails(odot(op, x, bot), bot) {
            return PropertyReport::fail(
                Property::SasakiIdentities,
                Witness::new(&[x], "x ⊙ 0 != 0"),
            );
        }
    }
    PropertyReport::pass(Property::SasakiIdentities)
}

/// Which subsets `A, B` the projection laws quantify over.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubsetSample {
    /// Every subset with at most two elements, plus the whole carrier.
    Small,
    /// All `2^n` subsets; only for `n <= 10`.
    Exhaustive,
}

impl SubsetSample {
    pub fn subsets(self, n: usize) -> Result<Vec<Subset>, SasakiError> {
        match self {
            SubsetSample::Small => {
                let mut out = vec![Subset::EMPTY];
                out.extend((0..n).map(Subset::singleton));
                for x in 0..n {
                    out.extend((x + 1..n).map(|y| Subset::singleton(x).with(y)));
                }
                if n > 2 {
                    out.push(Subset::full(n));
                }
                Ok(out)
            }
            SubsetSample::Exhaustive if n <= 10 => {
                Ok((0..1u64 << n).map(Subset::from_bits).collect())
            }
            SubsetSample::Exhaustive => Err(SasakiError::SampleTooLarge(n)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionLawsReport {
    pub report: PropertyReport,
    /// Whether the clauses that need orthomodularity were evaluated.
    pub orthomodular_checked: bool,
}

/// Checks, for every `a` and sampled `A <=_2 B`:
/// `p_a(A) ⊆ [0, a]`, `p_a(1) = a`, `p_a(A) <=_2 p_a(B)`; and, when the
/// structure is orthomodular, `p_a(a') = 0`, `p_a(x) = x` on `[0, a]` and
/// `p_a(p_a(A)) = p_a(A)`.
pub fn check_projection_laws(
    op: &OpPoset,
    sample: SubsetSample,
) -> Result<ProjectionLawsReport, SasakiError> {
    let p = op.poset();
    let n = op.len();
    let subsets = sample.subsets(n)?;
    let orthomodular = is_orthomodular(op).holds;
    let done = |report| ProjectionLawsReport {
        report,
        orthomodular_checked: orthomodular,
    };
    let fail = |elements: &[usize], sets: &[Subset], condition| {
        Ok(done(PropertyReport::fail(
            Property::ProjectionLaws,
            Witness::with_sets(elements, sets, condition),
        )))
    };

    for a in 0..n {
        let below_a = p.down_set(a);
        let images = subsets
            .iter()
            .map(|&s| sasaki_proj_set(op, a, s))
            .collect::<Result<Vec<_>, _>>()?;
        for (&s, &image) in subsets.iter().zip(&images) {
            if !image.is_subset_of(below_a) {
                return fail(&[a], &[s], "p_a(A) not within [0, a]");
            }
        }
        if sasaki_proj(op, a, p.top())? != Subset::singleton(a) {
            return fail(&[a], &[], "p_a(1) != a");
        }
        for (i, &sa) in subsets.iter().enumerate() {
            for (j, &sb) in subsets.iter().enumerate() {
                if p.leq2(sa, sb) && !p.leq2(images[i], images[j]) {
                    return fail(&[a], &[sa, sb], "A <=_2 B but p_a(A) not <=_2 p_a(B)");
                }
            }
        }
        if orthomodular {
            if sasaki_proj(op, a, op.prime(a))? != Subset::singleton(p.bottom()) {
                return fail(&[a], &[], "p_a(a') != 0");
            }
            for x in below_a {
                if sasaki_proj(op, a, x)? != Subset::singleton(x) {
                    return fail(&[a, x], &[], "p_a(x) != x on [0, a]");
                }
            }
            for (&s, &image) in subsets.iter().zip(&images) {
                if sasaki_proj_set(op, a, image)? != image {
                    return fail(&[a], &[s], "p_a(p_a(A)) != p_a(A)");
                }
            }
        }
    }
    Ok(done(PropertyReport::pass(Property::ProjectionLaws)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poset::Poset;

    fn ix(op: &OpPoset, l: &str) -> usize {
        op.poset().index_of(l).unwrap()
    }

    fn one(op: &OpPoset, l: &str) -> Subset {
        Subset::singleton(ix(op, l))
    }

    #[test]
    fn projections_on_ex1() {
        let op = fixtures::ex1();
        let (a, c) = (ix(&op, "a"), ix(&op, "c"));
        assert_eq!(sasaki_proj(&op, c, a).unwrap(), one(&op, "c"));
        assert_eq!(sasaki_proj_dual(&op, c, a).unwrap(), one(&op, "1"));
        let ab = one(&op, "a").union(one(&op, "b"));
        assert_eq!(sasaki_proj_set(&op, c, ab).unwrap(), one(&op, "c"));
        assert_eq!(
            sasaki_proj_set(&op, c, Subset::EMPTY).unwrap(),
            Subset::EMPTY
        );
        for x in 0..op.len() {
            let top = op.poset().top();
            assert_eq!(sasaki_proj(&op, x, top).unwrap(), Subset::singleton(x));
            assert_eq!(
                sasaki_proj_set(&op, x, Subset::singleton(top)).unwrap(),
                Subset::singleton(x)
            );
            let bot = op.poset().bottom();
            assert_eq!(
                sasaki_proj_dual(&op, x, bot).unwrap(),
                Subset::singleton(op.prime(x))
            );
            // complemented and orthogonal: a' v a = 1
            assert_eq!(
                sasaki_proj_dual(&op, x, top).unwrap(),
                Subset::singleton(top)
            );
        }
    }

    #[test]
    fn projection_of_complement_is_zero_when_orthomodular() {
        let op = fixtures::fig3();
        for a in 0..op.len() {
            assert_eq!(
                sasaki_proj(&op, a, op.prime(a)).unwrap(),
                Subset::singleton(op.poset().bottom())
            );
        }
    }

    #[test]
    fn operations_on_ex1() {
        let op = fixtures::ex1();
        let g = |l| ix(&op, l);
        assert_eq!(odot(&op, g("a"), g("b")).unwrap(), one(&op, "b"));
        assert_eq!(odot(&op, g("e"), g("a")).unwrap(), one(&op, "0"));
        assert_eq!(arrow(&op, g("e"), g("a")).unwrap(), one(&op, "c"));
        for x in 0..op.len() {
            assert_eq!(odot(&op, g("1"), x).unwrap(), Subset::singleton(x));
            assert_eq!(
                arrow(&op, x, g("0")).unwrap(),
                Subset::singleton(op.prime(x))
            );
            assert_eq!(arrow(&op, g("0"), x).unwrap(), one(&op, "1"));
        }
    }

    #[test]
    fn m3_spot_value() {
        let op = fixtures::m3();
        assert_eq!(
            arrow(&op, ix(&op, "c"), ix(&op, "a")).unwrap(),
            one(&op, "a")
        );
        let (odot_t, arrow_t) = op_tables(&op).unwrap();
        assert_eq!(odot_t.len(), 5);
        assert_eq!(arrow_t.cell(ix(&op, "c"), ix(&op, "a")), one(&op, "a"));
    }

    #[test]
    fn one_element_tables() {
        let op = OpPoset::new(Poset::chain(1).unwrap(), vec![0]).unwrap();
        let (o, a) = op_tables(&op).unwrap();
        assert_eq!(o.cell(0, 0), Subset::singleton(0));
        assert_eq!(a.cell(0, 0), Subset::singleton(0));
    }

    #[test]
    fn undefined_meet_is_reported() {
        // 0 < a,b < c,d < 1, not orthogonal
        let names = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
        let covers = [
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        let p = Poset::from_covers(names, &covers).unwrap();
        // c' = 0, so d ⊙ c = Min U(d, 0) ∧ c = d ∧ c
        let op = OpPoset::new(p, vec![5, 4, 3, 0, 5, 0]).unwrap();
        assert_eq!(
            odot(&op, 4, 3),
            Err(SasakiError::UndefinedMeet {
                left: 4,
                right: 3,
                bound: 4,
                with: 3
            })
        );
        // c → d = 0 ∨ {a, b}
        assert!(arrow(&op, 3, 4).is_ok());
    }

    #[test]
    fn odot_zero_is_zero_on_fixtures() {
        for op in [fixtures::ex1(), fixtures::fig3(), fixtures::m3()] {
            assert!(check_lemma1(&op).holds);
        }
    }

    #[test]
    fn projection_laws_on_fixtures() {
        let fig3 = check_projection_laws(&fixtures::fig3(), SubsetSample::Small).unwrap();
        assert!(fig3.report.holds && fig3.orthomodular_checked);
        let ex1 = check_projection_laws(&fixtures::ex1(), SubsetSample::Small).unwrap();
        assert!(ex1.report.holds && !ex1.orthomodular_checked);
        let ex1 = check_projection_laws(&fixtures::ex1(), SubsetSample::Exhaustive).unwrap();
        assert!(ex1.report.holds);
        let one = OpPoset::new(Poset::chain(1).unwrap(), vec![0]).unwrap();
        assert!(
            check_projection_laws(&one, SubsetSample::Small)
                .unwrap()
                .report
                .holds
        );
        assert_eq!(
            check_projection_laws(&fixtures::fig3(), SubsetSample::Exhaustive),
            Err(SasakiError::SampleTooLarge(14))
        );
    }

    #[test]
    fn small_sample_size() {
        // ∅, 5 singletons, 10 pairs, the carrier
        assert_eq!(SubsetSample::Small.subsets(5).unwrap().len(), 17);
        assert_eq!(SubsetSample::Small.subsets(1).unwrap().len(), 2);
    }
}
