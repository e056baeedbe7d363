//! The reproduction checklist behind `orthoposet verify-paper`: the bundled
//! examples, the brute-force sweeps over small structures and the enumeration
//! counts, each reduced to one pass/fail line.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoint::{
    check_modular_corollary, check_section4_lemma, closed_under_prime, find_o6_subalgebra,
    is_o6_sublattice, Condition, SasakiTables,
};
use crate::enumeration::{count_posets, enumerate_posets, enumerate_unary_ops, UnaryFilter};
use crate::fixtures;
use crate::io::render::render_cell;
use crate::io::report::describe_witness;
use crate::poset::{OpPoset, Poset};
use crate::properties::{
    is_involution, is_lattice, is_modular, is_orthogonal, is_orthomodular, is_saturated,
    replay_witness, Property, Witness,
};
use crate::sasaki::{check_projection_laws, op_tables, SubsetSample};
use crate::subset::Subset;

/// Rows of the two ex1 tables, row label first.
pub const EX1_ODOT: [&str; 7] = [
    "0 0 0 0 0 0 0 0",
    "a 0 a b c d 0 a",
    "b 0 a b c d 0 b",
    "c 0 a b c d 0 c",
    "d 0 a b c d e d",
    "e 0 0 0 0 0 e e",
    "1 0 a b c d e 1",
];

pub const EX1_ARROW: [&str; 7] = [
    "0 1 1 1 1 1 1 1",
    "a e 1 e 1 1 e 1",
    "b e e 1 1 1 e 1",
    "c e 1 1 1 1 e 1",
    "d e 1 1 1 1 e 1",
    "e c c c c c 1 1",
    "1 0 a b c d e 1",
];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest carrier in the orthogonal-complementation sweeps.
    pub sweep_max_n: usize,
    /// Largest carrier in the all-maps totality sweep.
    pub totality_max_n: usize,
    /// Random probes comparing optimized and from-scratch bound sets.
    pub probes: usize,
    pub seed: u64,
    /// Largest `n` for the poset counts.
    pub count_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sweep_max_n: 5,
            totality_max_n: 4,
            probes: 10_000,
            seed: 2024,
            count_max_n: 5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({}; {:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const TITLES: [&str; 12] = [
    "ex1 operation tables",
    "ex1 property profile",
    "M3 profile",
    "fig3 orthomodular lattice",
    "benzene obstruction",
    "A1/A2 equivalent to conditions (i)-(vi)",
    "orthomodular implies adjoint",
    "consequences of adjointness",
    "Sasaki projection laws",
    "totality of the operations equals orthogonality",
    "optimized vs from-scratch bound sets",
    "labeled poset counts",
];

/// Runs every criterion in order, reporting progress lines to `progress`.
pub fn run_all(options: &VerifyOptions, progress: &mut dyn FnMut(&str)) -> Vec<CriterionResult> {
    (1..=12)
        .map(|id| run_criterion(id, options, progress))
        .collect()
}

/// Runs criterion `id` (1 to 12).
pub fn run_criterion(
    id: u8,
    options: &VerifyOptions,
    progress: &mut dyn FnMut(&str),
) -> CriterionResult {
    assert!((1..=12).contains(&id), "criteria are numbered 1 to 12");
    let start = Instant::now();
    let outcome = match id {
        1 => ex1_tables(),
        2 => ex1_profile(),
        3 => m3_profile(),
        4 => fig3_profile(),
        5 => benzene_profile(),
        6 => sweep(options, progress, conditions_agree),
        7 => orthomodular_adjoint(options, progress),
        8 => sweep(options, progress, |op| {
            let r = check_section4_lemma(op).map_err(|e| e.to_string())?;
            r.holds.then_some(()).ok_or_else(|| describe(op, r.witness))
        }),
        9 => sweep(options, progress, |op| {
            let r = check_projection_laws(op, SubsetSample::Small).map_err(|e| e.to_string())?;
            r.report
                .holds
                .then_some(())
                .ok_or_else(|| describe(op, r.report.witness))
        }),
        10 => totality(options, progress),
        11 => probes(options),
        12 => counts(options, progress),
        _ => unreachable!(),
    };
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionResult {
        id,
        title: TITLES[id as usize - 1],
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn describe(op: &OpPoset, witness: Option<Witness>) -> String {
    let prime: Vec<&str> = op.prime_map().iter().map(|&x| op.name(x)).collect();
    let covers: Vec<String> = op
        .poset()
        .covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", op.name(a), op.name(b)))
        .collect();
    let w = witness
        .map(|w| format!("{:?} {}", w.elements, w.condition))
        .unwrap_or_default();
    format!(
        "covers {} prime {} witness {w}",
        covers.join(" "),
        prime.join(" ")
    )
}

fn ix(op: &OpPoset, label: &str) -> usize {
    op.poset().index_of(label).expect("fixture label")
}

fn ex1_tables() -> Outcome {
    let op = fixtures::ex1();
    let p = op.poset();
    let (odot, arrow) = op_tables(&op).map_err(|e| e.to_string())?;
    let mut singletons = 0;
    for (table, golden) in [(&odot, &EX1_ODOT), (&arrow, &EX1_ARROW)] {
        for line in golden.iter() {
            let mut cells = line.split(' ');
            let x = ix(&op, cells.next().unwrap());
            for (y, expected) in cells.enumerate() {
                let cell = table.cell(x, y);
                ensure(
                    render_cell(p, cell) == expected,
                    format!(
                        "{} row {} column {}",
                        table.kind().name(),
                        p.name(x),
                        p.name(y)
                    ),
                )?;
                singletons += usize::from(cell.as_singleton().is_some());
            }
        }
    }
    ensure(singletons == 98, format!("{singletons} singleton cells"))?;
    Ok("98 cells match".into())
}

fn ex1_profile() -> Outcome {
    let op = fixtures::ex1();
    let (a, c, one) = (ix(&op, "a"), ix(&op, "c"), ix(&op, "1"));
    ensure(is_saturated(op.poset()).holds, "saturated")?;
    ensure(is_orthogonal(&op).holds, "orthogonal")?;
    ensure(
        Property::Complemented.check(&op).unwrap().holds,
        "complemented",
    )?;
    let inv = is_involution(&op);
    ensure(
        !inv.holds && inv.witness.unwrap().elements == [a],
        "involution witness a",
    )?;
    ensure(op.prime(op.prime(a)) == c, "a'' = c")?;
    ensure(!is_lattice(op.poset()).holds, "not a lattice")?;
    let tables = SasakiTables::new(&op).map_err(|e| e.to_string())?;
    let a2 = tables.check_a2();
    ensure(!a2.holds, "A2 must fail")?;
    let w = a2.witness.unwrap();
    ensure(
        replay_witness(&op, Property::A2, &w) == Some(true),
        "returned A2 witness replays",
    )?;
    let given = Witness::new(&[one, c, a], w.condition);
    ensure(
        replay_witness(&op, Property::A2, &given) == Some(true),
        "(1, c, a) violates A2",
    )?;
    ensure(
        tables.arrow().cell(c, a) == Subset::singleton(one),
        "c → a = 1",
    )?;
    ensure(
        tables.odot().cell(one, c) == Subset::singleton(c),
        "1 ⊙ c = c",
    )?;
    Ok(format!(
        "A2 fails at {}; (1, c, a) replays",
        describe_witness(op.poset(), &w)
    ))
}

fn m3_profile() -> Outcome {
    let op = fixtures::m3();
    ensure(is_orthogonal(&op).holds, "orthogonal")?;
    ensure(is_saturated(op.poset()).holds, "saturated")?;
    ensure(
        Property::Complemented.check(&op).unwrap().holds,
        "complementation",
    )?;
    ensure(!is_involution(&op).holds, "not an involution")?;
    ensure(is_modular(op.poset()).holds, "modular")?;
    let report = SasakiTables::new(&op)
        .and_then(|t| t.report())
        .map_err(|e| e.to_string())?;
    ensure(report.condition(Condition::III).holds, "(iii)")?;
    ensure(report.condition(Condition::VI).holds, "(vi)")?;
    ensure(report.is_adjoint(), "adjoint")?;
    let cor = check_modular_corollary(&op);
    ensure(
        cor.premise && cor.conclusion == Some(true),
        "modular corollary",
    )?;
    Ok("adjoint, modular, (iii) and (vi) hold".into())
}

fn fig3_profile() -> Outcome {
    let op = fixtures::fig3();
    ensure(is_orthomodular(&op).holds, "orthomodular")?;
    let report = SasakiTables::new(&op)
        .and_then(|t| t.report())
        .map_err(|e| e.to_string())?;
    ensure(report.is_adjoint(), "adjoint")?;
    let cand = ["0", "c", "d", "a'", "f'", "1"].map(|l| ix(&op, l));
    ensure(
        is_o6_sublattice(op.poset(), &cand),
        "{0, c, d, a', f', 1} is an O6 sublattice",
    )?;
    ensure(
        !closed_under_prime(&op, &cand),
        "that sublattice is not closed under '",
    )?;
    let found = find_o6_subalgebra(&op).map_err(|e| e.to_string())?;
    ensure(found.is_none(), "no O6 subalgebra")?;
    Ok("adjoint; O6 sublattice present, no O6 subalgebra".into())
}

fn benzene_profile() -> Outcome {
    let op = fixtures::benzene();
    let found = find_o6_subalgebra(&op).map_err(|e| e.to_string())?;
    ensure(found.is_some(), "O6 subalgebra")?;
    let report = SasakiTables::new(&op)
        .and_then(|t| t.report())
        .map_err(|e| e.to_string())?;
    ensure(!report.is_adjoint(), "not adjoint")?;
    let (property, failed) = if report.a1.holds {
        (Property::A2, &report.a2)
    } else {
        (Property::A1, &report.a1)
    };
    let w = failed.witness.clone().unwrap();
    ensure(
        replay_witness(&op, property, &w) == Some(true),
        "adjointness witness replays",
    )?;
    let om = is_orthomodular(&op);
    ensure(!om.holds, "not orthomodular")?;
    ensure(
        replay_witness(&op, Property::Orthomodular, om.witness.as_ref().unwrap()) == Some(true),
        "orthomodularity witness replays",
    )?;
    Ok(format!(
        "{property} fails at {}",
        describe_witness(op.poset(), &w)
    ))
}

/// Every bounded poset up to `sweep_max_n` elements with every orthogonal
/// complementation on it.
fn population(max_n: usize, progress: &mut dyn FnMut(&str)) -> Result<Vec<OpPoset>, String> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let before = out.len();
        for p in enumerate_posets(n).map_err(|e| e.to_string())? {
            out.extend(enumerate_unary_ops(
                &p,
                UnaryFilter::OrthogonalComplementations,
            ));
        }
        progress(&format!(
            "n = {n}: {} orthogonal complemented structures",
            out.len() - before
        ));
    }
    Ok(out)
}

fn sweep(
    options: &VerifyOptions,
    progress: &mut dyn FnMut(&str),
    check: impl Fn(&OpPoset) -> Result<(), String>,
) -> Outcome {
    let ops = population(options.sweep_max_n, progress)?;
    for op in &ops {
        check(op)?;
    }
    Ok(format!("{} structures", ops.len()))
}

fn conditions_agree(op: &OpPoset) -> Result<(), String> {
    let report = SasakiTables::new(op)
        .and_then(|t| t.report())
        .map_err(|e| e.to_string())?;
    match report.equivalence_violation() {
        None => Ok(()),
        Some(c) => Err(format!("{c} disagrees: {}", describe(op, None))),
    }
}

fn orthomodular_adjoint(options: &VerifyOptions, progress: &mut dyn FnMut(&str)) -> Outcome {
    let mut ops: Vec<OpPoset> = population(options.sweep_max_n, progress)?
        .into_iter()
        .filter(|op| is_orthomodular(op).holds)
        .collect();
    ops.push(fixtures::fig3());
    ops.push(fixtures::cube8());
    for op in &ops {
        ensure(is_orthomodular(op).holds, describe(op, None))?;
        let report = SasakiTables::new(op)
            .and_then(|t| t.report())
            .map_err(|e| e.to_string())?;
        ensure(
            report.is_adjoint(),
            describe(op, report.a1.witness.or(report.a2.witness)),
        )?;
    }
    Ok(format!(
        "{} orthomodular structures, all adjoint",
        ops.len()
    ))
}

fn totality(options: &VerifyOptions, progress: &mut dyn FnMut(&str)) -> Outcome {
    let mut checked = 0usize;
    for n in 1..=options.totality_max_n {
        let before = checked;
        for p in enumerate_posets(n).map_err(|e| e.to_string())? {
            ensure(is_saturated(&p).holds, "finite posets are saturated")?;
            for op in enumerate_unary_ops(&p, UnaryFilter::All) {
                let total = op_tables(&op).is_ok();
                ensure(total == is_orthogonal(&op).holds, describe(&op, None))?;
                checked += 1;
            }
        }
        progress(&format!("n = {n}: {} maps", checked - before));
    }
    Ok(format!("{checked} structures"))
}

/// Bound sets and operations computed straight from the definitions.
mod naive {
    use crate::poset::{OpPoset, Poset};
    use crate::subset::Subset;

    pub fn lower(p: &Poset, a: Subset) -> Subset {
        (0..p.len())
            .filter(|&x| a.iter().all(|y| p.leq(x, y)))
            .collect()
    }

    pub fn upper(p: &Poset, a: Subset) -> Subset {
        (0..p.len())
            .filter(|&x| a.iter().all(|y| p.leq(y, x)))
            .collect()
    }

    pub fn max(p: &Poset, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| !a.iter().any(|y| p.lt(x, y)))
            .collect()
    }

    pub fn min(p: &Poset, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| !a.iter().any(|y| p.lt(y, x)))
            .collect()
    }

    fn sup(p: &Poset, a: Subset) -> Option<usize> {
        min(p, upper(p, a)).as_singleton()
    }

    fn inf(p: &Poset, a: Subset) -> Option<usize> {
        max(p, lower(p, a)).as_singleton()
    }

    pub fn odot(op: &OpPoset, x: usize, y: usize) -> Option<Subset> {
        let p = op.poset();
        let bounds = min(p, upper(p, Subset::singleton(x).with(op.prime(y))));
        bounds
            .iter()
            .map(|s| inf(p, Subset::singleton(s).with(y)))
            .collect()
    }

    pub fn arrow(op: &OpPoset, x: usize, y: usize) -> Option<Subset> {
        let p = op.poset();
        let bounds = max(p, lower(p, Subset::singleton(x).with(y)));
        bounds
            .iter()
            .map(|s| sup(p, Subset::singleton(s).with(op.prime(x))))
            .collect()
    }
}

fn probes(options: &VerifyOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let pools: Vec<Vec<Poset>> = (1..=5)
        .map(|n| enumerate_posets(n).expect("small n").collect())
        .collect();
    for i in 0..options.probes {
        let pool = &pools[rng.gen_range(0..pools.len())];
        let p = &pool[rng.gen_range(0..pool.len())];
        let n = p.len();
        let prime = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let op = OpPoset::new(p.clone(), prime).expect("images in range");
        let a = Subset::from_bits(rng.gen_range(0..1u64 << n));
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mismatch = |what: &str| format!("probe {i}: {what} on {}", describe(&op, None));
        ensure(p.lower_set(a) == naive::lower(p, a), mismatch("L"))?;
        ensure(p.upper_set(a) == naive::upper(p, a), mismatch("U"))?;
        ensure(p.maximal(a) == naive::max(p, a), mismatch("Max"))?;
        ensure(p.minimal(a) == naive::min(p, a), mismatch("Min"))?;
        ensure(
            crate::sasaki::odot(&op, x, y).ok() == naive::odot(&op, x, y),
            mismatch("⊙"),
        )?;
        ensure(
            crate::sasaki::arrow(&op, x, y).ok() == naive::arrow(&op, x, y),
            mismatch("→"),
        )?;
    }
    Ok(format!("{} probes, 0 mismatches", options.probes))
}

/// Counts reflexive antisymmetric transitive relations by brute force over
/// every relation on `n` points.
pub fn count_partial_orders_brute_force(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut count = 0;
    for mask in 0..1u64 << pairs.len() {
        let mut rel: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rel[x] |= 1 << y;
            }
        }
        let antisymmetric =
            (0..n).all(|x| (0..n).all(|y| x == y || rel[x] >> y & 1 == 0 || rel[y] >> x & 1 == 0));
        // transitive: everything reachable from x's successors is a successor of x
        let transitive = (0..n).all(|x| {
            Subset::from_bits(rel[x])
                .iter()
                .all(|y| rel[y] & !rel[x] == 0)
        });
        count += usize::from(antisymmetric && transitive);
    }
    count
}

fn counts(options: &VerifyOptions, progress: &mut dyn FnMut(&str)) -> Outcome {
    let mut seen = Vec::new();
    for n in 1..=options.count_max_n {
        let generated = count_posets(n).map_err(|e| e.to_string())?;
        let oracle = count_partial_orders_brute_force(n);
        progress(&format!(
            "n = {n}: {generated} generated, {oracle} by relation filter"
        ));
        ensure(
            generated == oracle,
            format!("n = {n}: {generated} != {oracle}"),
        )?;
        seen.push(generated.to_string());
    }
    Ok(seen.join(", "))
}
