//! Exhaustive generation of small labeled posets and unary operations, and
//! a flag-driven counterexample search on top of it.
//!
//! Labeled posets on `0..n` are grown one element at a time: the new
//! element `k` is inserted with a strict down-set `D` (an order ideal) and a
//! strict up-set `U` (an order filter) such that `D ∩ U = ∅` and every
//! member of `D` lies below every member of `U`. Each labeled poset on
//! `k + 1` elements arises from exactly one poset on `0..k` and one such
//! pair, so the stream is complete and duplicate-free.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::adjoint::{find_o6_subalgebra, SasakiTables};
use crate::poset::{numeric_names, OpPoset, Poset};
use crate::properties::{is_orthogonal, Property};
use crate::subset::Subset;

/// Largest carrier the enumerators accept.
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// Up to this size, `search` tries every unary map; above it, maps are sampled.
pub const EXHAUSTIVE_MAP_LIMIT: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("carrier size {0} outside 1..={MAX_ENUMERATION_SIZE}")]
    SizeOutOfRange(usize),
    #[error("flag `{0}` is both required and forbidden")]
    Conflict(Flag),
    #[error("unknown flag `{0}`")]
    UnknownFlag(String),
}

fn check_size(n: usize) -> Result<(), EnumerationError> {
    if (1..=MAX_ENUMERATION_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::SizeOutOfRange(n))
    }
}

/// Order relation on `0..k` as down-sets; `down[x]` includes `x`.
type Relation = Vec<u64>;

/// All `(D, U)` insertion slots for a new element above `D` and below `U`.
fn extensions(down: &Relation) -> Vec<(u64, u64)> {
    let k = down.len();
    let mut up = vec![0u64; k];
    for (x, &d) in down.iter().enumerate() {
        for y in Subset::from_bits(d) {
            up[y] |= 1 << x;
        }
    }
    let ideals: Vec<u64> = (0..1u64 << k)
        .filter(|&s| Subset::from_bits(s).iter().all(|x| down[x] & !s == 0))
        .collect();
    let filters: Vec<u64> = (0..1u64 << k)
        .filter(|&s| Subset::from_bits(s).iter().all(|x| up[x] & !s == 0))
        .collect();
    let mut out = Vec::new();
    for &d in &ideals {
        // everything in U must be above everything in D
        let above_all: u64 = Subset::from_bits(d)
            .iter()
            .fold(Subset::full(k).bits(), |acc, x| acc & up[x]);
        for &u in &filters {
            if u & d == 0 && u & !above_all == 0 {
                out.push((d, u));
            }
        }
    }
    out
}

fn extend(down: &Relation, (d, u): (u64, u64)) -> Relation {
    let k = down.len();
    let mut next = down.clone();
    let new_down = d | (1 << k);
    for x in Subset::from_bits(u) {
        next[x] |= new_down;
    }
    next.push(new_down);
    next
}

struct Frame {
    down: Relation,
    slots: Vec<(u64, u64)>,
    next: usize,
}

/// Depth-first stream of every order relation on `0..n`.
struct RelationStream {
    n: usize,
    stack: Vec<Frame>,
    done_empty: bool,
}

impl RelationStream {
    fn new(n: usize) -> Self {
        let root = Relation::new();
        let slots = if n == 0 {
            Vec::new()
        } else {
            extensions(&root)
        };
        RelationStream {
            n,
            stack: vec![Frame {
                down: root,
                slots,
                next: 0,
            }],
            done_empty: false,
        }
    }
}

impl Iterator for RelationStream {
    type Item = Relation;

    fn next(&mut self) -> Option<Relation> {
        if self.n == 0 {
            if self.done_empty {
                return None;
            }
            self.done_empty = true;
            return Some(Relation::new());
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.slots.len() {
                self.stack.pop();
                continue;
            }
            let slot = frame.slots[frame.next];
            frame.next += 1;
            let child = extend(&frame.down, slot);
            if child.len() == self.n {
                return Some(child);
            }
            let slots = extensions(&child);
            self.stack.push(Frame {
                down: child,
                slots,
                next: 0,
            });
        }
    }
}

fn to_poset(down: Relation) -> Poset {
    Poset::from_down_sets(
        numeric_names(down.len()),
        down.into_iter().map(Subset::from_bits).collect(),
    )
    .expect("generated relation is a partial order")
}

/// Every labeled poset on `n` elements, bounded or not. Unbounded posets
/// cannot be represented as [`Poset`], so they are yielded as down-set rows.
pub fn enumerate_relations(
    n: usize,
) -> Result<impl Iterator<Item = Vec<Subset>>, EnumerationError> {
    check_size(n)?;
    Ok(RelationStream::new(n).map(|r| r.into_iter().map(Subset::from_bits).collect()))
}

/// Number of labeled posets on `n` elements.
pub fn count_posets(n: usize) -> Result<usize, EnumerationError> {
    Ok(enumerate_relations(n)?.count())
}

/// Every labeled bounded poset on `n` elements, each exactly once.
///
/// Bottom and top labels are chosen first and an arbitrary labeled poset is
/// placed strictly between them.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>, EnumerationError> {
    check_size(n)?;
    let ends: Vec<(usize, usize)> = if n == 1 {
        vec![(0, 0)]
    } else {
        (0..n)
            .flat_map(|b| (0..n).filter(move |&t| t != b).map(move |t| (b, t)))
            .collect()
    };
    Ok(ends.into_iter().flat_map(move |(bot, top)| {
        let inner_labels: Vec<usize> = (0..n).filter(|&x| x != bot && x != top).collect();
        RelationStream::new(inner_labels.len()).map(move |inner| {
            if n == 1 {
                return to_poset(vec![1]);
            }
            let mut down = vec![0u64; n];
            down[bot] = 1 << bot;
            for (i, &row) in inner.iter().enumerate() {
                let mut d = 1u64 << bot;
                for j in Subset::from_bits(row) {
                    d |= 1 << inner_labels[j];
                }
                down[inner_labels[i]] = d;
            }
            down[top] = (1u64 << n) - 1;
            to_poset(down)
        })
    }))
}

/// Which unary operations [`enumerate_unary_ops`] yields.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum UnaryFilter {
    All,
    Complementations,
    OrthogonalComplementations,
}

/// Odometer over the product of per-element candidate lists.
struct MapStream {
    poset: Poset,
    candidates: Vec<Vec<usize>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for MapStream {
    type Item = OpPoset;

    fn next(&mut self) -> Option<OpPoset> {
        if self.done {
            return None;
        }
        let map: Vec<usize> = self
            .digits
            .iter()
            .zip(&self.candidates)
            .map(|(&d, c)| c[d])
            .collect();
        // advance, last element fastest
        self.done = true;
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.candidates[i].len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(OpPoset::new(self.poset.clone(), map).expect("candidates lie in the carrier"))
    }
}

fn map_stream(poset: &Poset, candidates: Vec<Vec<usize>>) -> MapStream {
    let done = candidates.iter().any(Vec::is_empty);
    MapStream {
        poset: poset.clone(),
        digits: vec![0; candidates.len()],
        candidates,
        done,
    }
}

/// All unary operations on `p`, in lexicographic order of the image vector,
/// restricted by `filter`.
///
/// Complementations are generated from per-element candidate lists (the
/// `y` with `x ∨ y = 1` and `x ∧ y = 0`), which yields exactly the maps that
/// pass `is_complementation`.
pub fn enumerate_unary_ops(p: &Poset, filter: UnaryFilter) -> Box<dyn Iterator<Item = OpPoset>> {
    let n = p.len();
    match filter {
        UnaryFilter::All => Box::new(map_stream(p, vec![(0..n).collect(); n])),
        UnaryFilter::Complementations => Box::new(map_stream(p, complement_candidates(p))),
        UnaryFilter::OrthogonalComplementations => {
            Box::new(map_stream(p, complement_candidates(p)).filter(|op| is_orthogonal(op).holds))
        }
    }
}

fn complement_candidates(p: &Poset) -> Vec<Vec<usize>> {
    (0..p.len())
        .map(|x| {
            (0..p.len())
                .filter(|&y| p.join(x, y) == Some(p.top()) && p.meet(x, y) == Some(p.bottom()))
                .collect()
        })
        .collect()
}

/// `count` seeded random unary maps on `p`.
pub fn sample_unary_ops(p: &Poset, count: usize, seed: u64) -> impl Iterator<Item = OpPoset> + '_ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = p.len();
    (0..count).map(move |_| {
        let map = (0..n).map(|_| rng.gen_range(0..n)).collect();
        OpPoset::new(p.clone(), map).expect("sampled images lie in the carrier")
    })
}

/// Every bounded poset with at most `max_n` elements crossed with every
/// orthogonal complementation on it.
pub fn orthogonal_complemented(
    max_n: usize,
) -> Result<impl Iterator<Item = OpPoset>, EnumerationError> {
    check_size(max_n)?;
    let mut sizes = Vec::new();
    for n in 1..=max_n {
        sizes.push(enumerate_posets(n)?);
    }
    Ok(sizes
        .into_iter()
        .flatten()
        .flat_map(|p| enumerate_unary_ops(&p, UnaryFilter::OrthogonalComplementations)))
}

/// Properties a search can require or forbid.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    Structural(Property),
    A1,
    A2,
    /// Orthogonal with both (A1) and (A2).
    Adjoint,
    /// Complemented lattice with an `O6` subalgebra.
    O6,
}

impl Flag {
    pub fn name(self) -> &'static str {
        match self {
            Flag::Structural(p) => p.name(),
            Flag::A1 => "a1",
            Flag::A2 => "a2",
            Flag::Adjoint => "adjoint",
            Flag::O6 => "o6",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Flag {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "a1" => Ok(Flag::A1),
            "a2" => Ok(Flag::A2),
            "adjoint" => Ok(Flag::Adjoint),
            "o6" => Ok(Flag::O6),
            other => other
                .parse::<Property>()
                .map(Flag::Structural)
                .map_err(|_| EnumerationError::UnknownFlag(other.to_string())),
        }
    }
}

/// Lazily evaluated flags of one candidate.
struct FlagCache<'a> {
    op: &'a OpPoset,
    orthogonal: Option<bool>,
    adjoint: Option<(bool, bool)>,
}

impl<'a> FlagCache<'a> {
    fn new(op: &'a OpPoset) -> Self {
        FlagCache {
            op,
            orthogonal: None,
            adjoint: None,
        }
    }

    fn orthogonal(&mut self) -> bool {
        *self
            .orthogonal
            .get_or_insert_with(|| is_orthogonal(self.op).holds)
    }

    fn directions(&mut self) -> (bool, bool) {
        if let Some(d) = self.adjoint {
            return d;
        }
        let d = if self.orthogonal() {
            let t =
                SasakiTables::new(self.op).expect("orthogonal structures have total operations");
            (t.check_a1().holds, t.check_a2().holds)
        } else {
            (false, false)
        };
        self.adjoint = Some(d);
        d
    }

    fn get(&mut self, flag: Flag) -> bool {
        match flag {
            Flag::Structural(Property::Orthogonal) => self.orthogonal(),
            Flag::Structural(p) => p.check(self.op).is_some_and(|r| r.holds),
            Flag::A1 => self.directions().0,
            Flag::A2 => self.directions().1,
            Flag::Adjoint => {
                let (a1, a2) = self.directions();
                a1 && a2
            }
            Flag::O6 => matches!(find_o6_subalgebra(self.op), Ok(Some(_))),
        }
    }
}

/// Evaluates a flag from scratch.
pub fn has_flag(op: &OpPoset, flag: Flag) -> bool {
    FlagCache::new(op).get(flag)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchGoal {
    pub require: BTreeSet<Flag>,
    pub forbid: BTreeSet<Flag>,
    pub max_n: usize,
    pub limit: Option<usize>,
    /// Unary maps tried per poset above [`EXHAUSTIVE_MAP_LIMIT`] elements,
    /// unless a complementation is required (then all are tried).
    pub samples_per_poset: usize,
    pub seed: u64,
}

impl SearchGoal {
    pub fn new(require: &[Flag], forbid: &[Flag], max_n: usize) -> Result<Self, EnumerationError> {
        let goal = SearchGoal {
            require: require.iter().copied().collect(),
            forbid: forbid.iter().copied().collect(),
            max_n,
            limit: None,
            samples_per_poset: 64,
            seed: 0,
        };
        goal.validate()?;
        Ok(goal)
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        check_size(self.max_n)?;
        if let Some(&f) = self.require.intersection(&self.forbid).next() {
            return Err(EnumerationError::Conflict(f));
        }
        Ok(())
    }

    fn needs_complementation(&self) -> bool {
        self.require
            .contains(&Flag::Structural(Property::Complemented))
            || self
                .require
                .contains(&Flag::Structural(Property::Orthomodular))
    }

    pub fn accepts(&self, op: &OpPoset) -> bool {
        let mut cache = FlagCache::new(op);
        self.require.iter().all(|&f| cache.get(f)) && !self.forbid.iter().any(|&f| cache.get(f))
    }
}

/// Bounded structures up to `goal.max_n` elements satisfying every required
/// flag and no forbidden one, in generation order (size, poset, map).
pub fn search(goal: &SearchGoal) -> Result<Vec<OpPoset>, EnumerationError> {
    goal.validate()?;
    let mut found = Vec::new();
    let limit = goal.limit.unwrap_or(usize::MAX);
    if limit == 0 {
        return Ok(found);
    }
    for n in 1..=goal.max_n {
        for (index, p) in enumerate_posets(n)?.enumerate() {
            let ops: Box<dyn Iterator<Item = OpPoset>> = if goal.needs_complementation() {
                enumerate_unary_ops(&p, UnaryFilter::Complementations)
            } else if n <= EXHAUSTIVE_MAP_LIMIT {
                enumerate_unary_ops(&p, UnaryFilter::All)
            } else {
                let seed = goal.seed ^ ((n as u64) << 32) ^ index as u64;
                Box::new(
                    sample_unary_ops(&p, goal.samples_per_poset, seed)
                        .collect::<Vec<_>>()
                        .into_iter(),
                )
            };
            for op in ops {
                if goal.accepts(&op) {
                    found.push(op);
                    if found.len() >= limit {
                        return Ok(found);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Label-independent key: equal exactly for isomorphic structures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    rows: Vec<Vec<u8>>,
}

/// Canonical form of a poset.
pub fn canonical_form(p: &Poset) -> CanonicalKey {
    Canonizer::new(p, None).run()
}

/// Canonical form of a poset together with its unary operation.
pub fn canonical_form_op(op: &OpPoset) -> CanonicalKey {
    Canonizer::new(op.poset(), Some(op.prime_map())).run()
}

/// Color refinement followed by a branch-and-bound search for the
/// lexicographically least relabeling among those that respect the colors.
struct Canonizer<'a> {
    p: &'a Poset,
    prime: Option<&'a [usize]>,
    colors: Vec<usize>,
    /// Position `i` of a relabeling must hold an element of color `slot_color[i]`.
    slot_color: Vec<usize>,
    best: Option<Vec<Vec<u8>>>,
}

impl<'a> Canonizer<'a> {
    fn new(p: &'a Poset, prime: Option<&'a [usize]>) -> Self {
        let colors = refine_colors(p, prime);
        let mut slot_color = colors.clone();
        slot_color.sort_unstable();
        Canonizer {
            p,
            prime,
            colors,
            slot_color,
            best: None,
        }
    }

    /// Relation of the element at `pos` to itself and everything placed before it.
    fn row(&self, perm: &[usize], pos: usize) -> Vec<u8> {
        let v = perm[pos];
        let code = |w: usize| {
            let mut bits = self.p.leq(w, v) as u8 | (self.p.leq(v, w) as u8) << 1;
            if let Some(pr) = self.prime {
                bits |= ((pr[w] == v) as u8) << 2 | ((pr[v] == w) as u8) << 3;
            }
            bits
        };
        perm[..=pos].iter().map(|&w| code(w)).collect()
    }

    fn run(mut self) -> CanonicalKey {
        let n = self.p.len();
        let mut perm = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.descend(&mut perm, &mut rows, &mut used);
        CanonicalKey {
            n,
            rows: self.best.unwrap_or_default(),
        }
    }

    fn descend(&mut self, perm: &mut Vec<usize>, rows: &mut Vec<Vec<u8>>, used: &mut [bool]) {
        let pos = perm.len();
        if pos == self.p.len() {
            if self.best.as_ref().is_none_or(|b| rows[..] < b[..]) {
                self.best = Some(rows.clone());
            }
            return;
        }
        let want = self.slot_color[pos];
        for v in 0..self.p.len() {
            if used[v] || self.colors[v] != want {
                continue;
            }
            perm.push(v);
            rows.push(self.row(perm, pos));
            let promising = self.best.as_ref().is_none_or(|b| rows[..] <= b[..=pos]);
            if promising {
                used[v] = true;
                self.descend(perm, rows, used);
                used[v] = false;
            }
            rows.pop();
            perm.pop();
        }
    }
}

/// Iterated refinement: start from (|down|, |up|, fixed point of prime) and
/// split classes by the multiset of colors strictly below and above, and of
/// the prime image, until stable. Colors are ranks of sorted signatures, so
/// they do not depend on labels.
fn refine_colors(p: &Poset, prime: Option<&[usize]>) -> Vec<usize> {
    let n = p.len();
    let initial: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let fixed = prime.is_some_and(|pr| pr[x] == x) as usize;
            vec![p.down_set(x).len(), p.up_set(x).len(), fixed]
        })
        .collect();
    let mut colors = rank(&initial);
    loop {
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = p
                    .down_set(x)
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| colors[y])
                    .collect();
                let mut above: Vec<usize> = p
                    .up_set(x)
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| colors[y])
                    .collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut sig = vec![colors[x], below.len()];
                sig.extend(below);
                sig.push(above.len());
                sig.extend(above);
                if let Some(pr) = prime {
                    sig.push(colors[pr[x]]);
                }
                sig
            })
            .collect();
        let next = rank(&signatures);
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank(signatures: &[Vec<usize>]) -> Vec<usize> {
    let distinct: BTreeSet<&Vec<usize>> = signatures.iter().collect();
    let order: Vec<&Vec<usize>> = distinct.into_iter().collect();
    signatures
        .iter()
        .map(|s| order.binary_search(&s).expect("present"))
        .collect()
}

/// Names elements `0`, `a`, `b`, ..., `1` (bottom, others, top) for display.
pub fn display_names(p: &Poset) -> Vec<String> {
    let mut letters = (b'a'..=b'z').map(|c| (c as char).to_string());
    (0..p.len())
        .map(|x| {
            if x == p.bottom() {
                "0".to_string()
            } else if x == p.top() {
                "1".to_string()
            } else {
                letters.next().unwrap_or_else(|| format!("e{x}"))
            }
        })
        .collect()
}

/// The same structure reordered as bottom, others, top and labeled with
/// [`display_names`].
pub fn with_display_names(op: &OpPoset) -> OpPoset {
    let p = op.poset();
    let (bottom, top) = (p.bottom(), p.top());
    let order: Vec<usize> = std::iter::once(bottom)
        .chain((0..p.len()).filter(|&x| x != bottom && x != top))
        .chain((top != bottom).then_some(top))
        .collect();
    let mut position = vec![0; p.len()];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let covers: Vec<(usize, usize)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (position[a], position[b]))
        .collect();
    let moved = Poset::from_covers(numeric_names(p.len()), &covers).expect("isomorphic copy");
    let poset = moved
        .relabeled(display_names(&moved))
        .expect("display names are distinct");
    let prime = order.iter().map(|&x| position[op.prime(x)]).collect();
    OpPoset::new(poset, prime).expect("same carrier")
}

/// Search hits with the same canonical form collapsed to the first one.
pub fn dedupe_isomorphic(ops: Vec<OpPoset>) -> Vec<OpPoset> {
    let mut seen = BTreeSet::new();
    ops.into_iter()
        .filter(|op| seen.insert(canonical_form_op(op)))
        .collect()
}
