//! From-scratch oracles shared by the integration tests. Everything here
//! works on plain `bool` matrices and `BTreeSet`s, straight from the
//! definitions, and shares no code with the library beyond reading `<=`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use orthoposet::{OpPoset, Poset, Subset};

pub type Set = BTreeSet<usize>;

pub struct Naive {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    pub prime: Vec<usize>,
}

impl Naive {
    pub fn new(op: &OpPoset) -> Self {
        Self::from_poset(op.poset(), op.prime_map().to_vec())
    }

    pub fn from_poset(p: &Poset, prime: Vec<usize>) -> Self {
        let n = p.len();
        let le = (0..n)
            .map(|x| (0..n).map(|y| p.leq(x, y)).collect())
            .collect();
        Naive { n, le, prime }
    }

    fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le[x][y]
    }

    pub fn lower(&self, a: &Set) -> Set {
        (0..self.n)
            .filter(|&x| a.iter().all(|&y| self.le[x][y]))
            .collect()
    }

    pub fn upper(&self, a: &Set) -> Set {
        (0..self.n)
            .filter(|&x| a.iter().all(|&y| self.le[y][x]))
            .collect()
    }

    pub fn max(&self, a: &Set) -> Set {
        a.iter()
            .copied()
            .filter(|&x| !a.iter().any(|&y| self.lt(x, y)))
            .collect()
    }

    pub fn min(&self, a: &Set) -> Set {
        a.iter()
            .copied()
            .filter(|&x| !a.iter().any(|&y| self.lt(y, x)))
            .collect()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        single(&self.min(&self.upper(&pair(x, y))))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        single(&self.max(&self.lower(&pair(x, y))))
    }

    /// `Min U(x, y') ∧ y`, `None` when a meet is missing.
    pub fn odot(&self, x: usize, y: usize) -> Option<Set> {
        let bounds = self.min(&self.upper(&pair(x, self.prime[y])));
        bounds.iter().map(|&s| self.meet(s, y)).collect()
    }

    /// `x' ∨ Max L(x, y)`, `None` when a join is missing.
    pub fn arrow(&self, x: usize, y: usize) -> Option<Set> {
        let bounds = self.max(&self.lower(&pair(x, y)));
        bounds
            .iter()
            .map(|&s| self.join(self.prime[x], s))
            .collect()
    }

    /// Every element of `a` lies below some element of `b`.
    pub fn leq1(&self, a: &Set, b: &Set) -> bool {
        a.iter().all(|&x| b.iter().any(|&y| self.le[x][y]))
    }

    /// Every element of `b` lies above some element of `a`.
    pub fn leq2(&self, a: &Set, b: &Set) -> bool {
        b.iter().all(|&y| a.iter().any(|&x| self.le[x][y]))
    }

    /// (A1) and (A2) by definition, over all triples.
    pub fn adjoint_directions(&self) -> Option<(bool, bool)> {
        let (mut a1, mut a2) = (true, true);
        for x in 0..self.n {
            for y in 0..self.n {
                let prod = self.odot(x, y)?;
                for z in 0..self.n {
                    let imp = self.arrow(y, z)?;
                    let lhs = self.leq2(&prod, &pair(z, z));
                    let rhs = self.leq1(&pair(x, x), &imp);
                    a1 &= !lhs || rhs;
                    a2 &= !rhs || lhs;
                }
            }
        }
        Some((a1, a2))
    }

    pub fn is_orthogonal(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                (!self.le[a][b] || self.join(a, self.prime[b]).is_some())
                    && (!self.le[self.prime[a]][b] || self.meet(a, b).is_some())
            })
        })
    }

    pub fn is_complementation(&self, top: usize, bottom: usize) -> bool {
        (0..self.n).all(|x| {
            self.join(x, self.prime[x]) == Some(top) && self.meet(x, self.prime[x]) == Some(bottom)
        })
    }
}

pub fn pair(x: usize, y: usize) -> Set {
    [x, y].into_iter().collect()
}

fn single(s: &Set) -> Option<usize> {
    (s.len() == 1).then(|| *s.iter().next().unwrap())
}

pub fn to_set(s: Subset) -> Set {
    s.iter().collect()
}

pub fn from_set(s: &Set) -> Subset {
    s.iter().copied().collect()
}

/// Partial orders on `n` labeled points, by filtering all `2^(n(n-1))`
/// relations for antisymmetry and transitivity.
pub fn count_partial_orders(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut count = 0;
    for mask in 0u64..1 << off.len() {
        let mut r = vec![vec![false; n]; n];
        for (x, row) in r.iter_mut().enumerate() {
            row[x] = true;
        }
        for (i, &(x, y)) in off.iter().enumerate() {
            r[x][y] = mask >> i & 1 == 1;
        }
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(r[x][y] && r[y][x])));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(r[x][y] && r[y][z]) || r[x][z])));
        if antisymmetric && transitive {
            count += 1;
        }
    }
    count
}
