//! Finite bounded posets and their bound-set primitives.
//!
//! Elements are dense indices `0..n`; labels only matter at the I/O boundary.
//! The order is stored twice as bit rows: `down[x]` holds every `y <= x` and
//! `up[x]` every `y >= x`, which turns `L`, `U`, `Max` and `Min` into a few
//! mask operations.

use std::collections::HashSet;

use thiserror::Error;

use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("{0} elements exceed the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("element label must be nonempty")]
    EmptyName,
    #[error("duplicate element label `{0}`")]
    DuplicateName(String),
    #[error("relation has {rows} rows for {n} elements")]
    Shape { n: usize, rows: usize },
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} <= {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
    #[error("{0} is not below {1}")]
    NotBelow(usize, usize),
    #[error("unary operation has {got} images for {n} elements")]
    PrimeNotTotal { n: usize, got: usize },
}

/// A finite bounded poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    names: Vec<String>,
    down: Vec<Subset>,
    up: Vec<Subset>,
    bottom: usize,
    top: usize,
}

impl Poset {
    /// Builds a poset from the full order relation, given as down-sets:
    /// `down[x]` must contain every `y` with `y <= x`.
    pub fn from_down_sets(names: Vec<String>, down: Vec<Subset>) -> Result<Self, PosetError> {
        let n = names.len();
        check_names(&names)?;
        if down.len() != n {
            return Err(PosetError::Shape {
                n,
                rows: down.len(),
            });
        }
        let full = Subset::full(n);
        for (x, &d) in down.iter().enumerate() {
            if !d.is_subset_of(full) {
                return Err(PosetError::OutOfRange(
                    d.difference(full).first().unwrap_or(0),
                ));
            }
            if !d.contains(x) {
                return Err(PosetError::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric(y.min(x), y.max(x)));
                }
                // y <= x and z <= y must give z <= x
                if let Some(z) = down[y].difference(down[x]).first() {
                    return Err(PosetError::NotTransitive(z, y, x));
                }
            }
        }
        Self::assemble(names, down)
    }

    /// Builds a poset from any generating set of strict relations
    /// (typically the cover relation) by reflexive-transitive closure.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = names.len();
        check_names(&names)?;
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in covers {
            if a >= n {
                return Err(PosetError::OutOfRange(a));
            }
            if b >= n {
                return Err(PosetError::OutOfRange(b));
            }
            down[b].insert(a);
        }
        // Warshall over bit rows.
        for k in 0..n {
            for x in 0..n {
                if down[x].contains(k) {
                    down[x] = down[x].union(down[k]);
                }
            }
        }
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric(y.min(x), y.max(x)));
                }
            }
        }
        Self::assemble(names, down)
    }

    /// Builds a poset from a `<=` predicate.
    pub fn from_relation(
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let n = names.len();
        let down = (0..n)
            .map(|x| (0..n).filter(|&y| leq(y, x)).collect())
            .collect();
        Self::from_down_sets(names, down)
    }

    /// The chain `0 < 1 < .. < n-1` with labels `0..n-1`.
    pub fn chain(n: usize) -> Result<Self, PosetError> {
        Self::from_relation(numeric_names(n), |x, y| x <= y)
    }

    fn assemble(names: Vec<String>, down: Vec<Subset>) -> Result<Self, PosetError> {
        let n = names.len();
        let mut up = vec![Subset::EMPTY; n];
        for (x, d) in down.iter().enumerate() {
            for y in d.iter() {
                up[y].insert(x);
            }
        }
        let full = Subset::full(n);
        let bottom = (0..n)
            .find(|&x| up[x] == full)
            .ok_or(PosetError::NoBottom)?;
        let top = (0..n).find(|&x| down[x] == full).ok_or(PosetError::NoTop)?;
        Ok(Poset {
            names,
            down,
            up,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: a poset has at least one element.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y | y <= x}`.
    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// `{y | x <= y}`.
    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// `L(A)`: common lower bounds. `L(∅)` is the whole carrier.
    pub fn lower_set(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.carrier(), |acc, x| acc.intersection(self.down[x]))
    }

    /// `U(A)`: common upper bounds. `U(∅)` is the whole carrier.
    pub fn upper_set(&self, a: Subset) -> Subset {
        a.iter()
            .fold(self.carrier(), |acc, x| acc.intersection(self.up[x]))
    }

    /// `Max A`.
    pub fn maximal(&self, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| self.up[x].intersection(a) == Subset::singleton(x))
            .collect()
    }

    /// `Min A`.
    pub fn minimal(&self, a: Subset) -> Subset {
        a.iter()
            .filter(|&x| self.down[x].intersection(a) == Subset::singleton(x))
            .collect()
    }

    /// `A <= B`: every member of `A` is below every member of `B`.
    pub fn leq_sets(&self, a: Subset, b: Subset) -> bool {
        a.iter().all(|x| b.is_subset_of(self.up[x]))
    }

    /// `A <=_1 B`: every member of `A` has an upper bound in `B`.
    pub fn leq1(&self, a: Subset, b: Subset) -> bool {
        a.iter().all(|x| self.up[x].intersects(b))
    }

    /// `A <=_2 B`: every member of `B` has a lower bound in `A`.
    pub fn leq2(&self, a: Subset, b: Subset) -> bool {
        b.iter().all(|y| self.down[y].intersects(a))
    }

    /// `Min U(x, y)`.
    pub fn min_upper_bounds(&self, x: usize, y: usize) -> Subset {
        self.minimal(self.up[x].intersection(self.up[y]))
    }

    /// `Max L(x, y)`.
    pub fn max_lower_bounds(&self, x: usize, y: usize) -> Subset {
        self.maximal(self.down[x].intersection(self.down[y]))
    }

    /// Least upper bound of `x` and `y`, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        if self.leq(x, y) {
            return Some(y);
        }
        if self.leq(y, x) {
            return Some(x);
        }
        self.min_upper_bounds(x, y).as_singleton()
    }

    /// Greatest lower bound of `x` and `y`, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        if self.leq(x, y) {
            return Some(x);
        }
        if self.leq(y, x) {
            return Some(y);
        }
        self.max_lower_bounds(x, y).as_singleton()
    }

    /// `[a, b] = {x | a <= x <= b}`.
    pub fn interval(&self, a: usize, b: usize) -> Result<Subset, PosetError> {
        if !self.leq(a, b) {
            return Err(PosetError::NotBelow(a, b));
        }
        Ok(self.up[a].intersection(self.down[b]))
    }

    /// Elements covered by nothing in between: `x < y` with no `x < z < y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let above = self.up[x].difference(Subset::singleton(x));
            let mut not_covers = Subset::EMPTY;
            for z in above.iter() {
                not_covers = not_covers.union(self.up[z].difference(Subset::singleton(z)));
            }
            out.extend(above.difference(not_covers).iter().map(|y| (x, y)));
        }
        out
    }

    /// Same order, new labels.
    pub fn relabeled(&self, names: Vec<String>) -> Result<Self, PosetError> {
        if names.len() != self.len() {
            return Err(PosetError::Shape {
                n: self.len(),
                rows: names.len(),
            });
        }
        check_names(&names)?;
        Ok(Poset {
            names,
            ..self.clone()
        })
    }
}

/// A bounded poset together with a total unary operation `'`.
///
/// Nothing is assumed about `'`; every law is checked by the `properties`
/// module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpPoset {
    poset: Poset,
    prime: Vec<usize>,
}

impl OpPoset {
    pub fn new(poset: Poset, prime: Vec<usize>) -> Result<Self, PosetError> {
        let n = poset.len();
        if prime.len() != n {
            return Err(PosetError::PrimeNotTotal {
                n,
                got: prime.len(),
            });
        }
        if let Some(&bad) = prime.iter().find(|&&y| y >= n) {
            return Err(PosetError::OutOfRange(bad));
        }
        Ok(OpPoset { poset, prime })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn prime(&self, x: usize) -> usize {
        self.prime[x]
    }

    pub fn prime_map(&self) -> &[usize] {
        &self.prime
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        self.poset.name(x)
    }
}

/// Labels `"0"`, `"1"`, ... for generated posets.
pub fn numeric_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_names(names: &[String]) -> Result<(), PosetError> {
    if names.is_empty() {
        return Err(PosetError::Empty);
    }
    if names.len() > MAX_ELEMENTS {
        return Err(PosetError::TooLarge(names.len()));
    }
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() {
            return Err(PosetError::EmptyName);
        }
        if !seen.insert(name.as_str()) {
            return Err(PosetError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}
