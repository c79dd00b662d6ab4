//! Finite monoids given by multiplication tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite monoid: an associative multiplication table with a two-sided
/// identity. Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct Monoid(Arc<MonoidData>);

struct MonoidData {
    size: usize,
    identity: usize,
    table: Vec<u8>,
    labels: Vec<String>,
    generators: Vec<usize>,
    /// Elements in breadth-first order from the identity over `generators`.
    word_order: Vec<usize>,
    /// For every non-identity `s`: `s = parent * gen`, `parent` earlier in `word_order`.
    word_parent: Vec<(usize, usize)>,
}

impl Monoid {
    /// Validates a multiplication table (`table[s][t] = s*t`) and identity.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::with_labels(table, identity, labels)
    }

    pub fn with_labels(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > 255 {
            return Err(Error::MonoidTooLarge(n));
        }
        if labels.len() != n {
            return Err(Error::Invalid(format!("{} labels for {} elements", labels.len(), n)));
        }
        if identity >= n {
            return Err(Error::OutOfRange { value: identity, size: n });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::BadShape { rows: n, cols: n });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::OutOfRange { value: v, size: n });
                }
                flat.push(v as u8);
            }
        }
        let mul = |s: usize, t: usize| flat[s * n + t] as usize;
        for s in 0..n {
            if mul(identity, s) != s || mul(s, identity) != s {
                return Err(Error::IdentityLawFails { s });
            }
        }
        for s in 0..n {
            for t in 0..n {
                let st = mul(s, t);
                for u in 0..n {
                    if mul(st, u) != mul(s, mul(t, u)) {
                        return Err(Error::NotAssociative { s, t, u });
                    }
                }
            }
        }
        let generators = irredundant_generators(n, identity, &flat);
        let (word_order, word_parent) = word_tree(n, identity, &flat, &generators);
        Ok(Monoid(Arc::new(MonoidData {
            size: n,
            identity,
            table: flat,
            labels,
            generators,
            word_order,
            word_parent,
        })))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.0.table[s * self.0.size + t] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, s: usize) -> &str {
        &self.0.labels[s]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size())
            .map(|s| (0..self.size()).map(|t| self.mul(s, t)).collect())
            .collect()
    }

    /// An irredundant generating set, never containing the identity (the
    /// trivial monoid has none).
    pub fn generators(&self) -> &[usize] {
        &self.0.generators
    }

    /// Elements in breadth-first order from the identity over
    /// [`generators`](Self::generators).
    pub fn word_order(&self) -> &[usize] {
        &self.0.word_order
    }

    /// `(p, g)` with `s = p * g`, `g` a generator and `p` earlier in
    /// [`word_order`](Self::word_order). Meaningless for the identity.
    pub fn word_parent(&self, s: usize) -> (usize, usize) {
        self.0.word_parent[s]
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&s| self.is_idempotent(s)).collect()
    }

    /// Whether some `t` has `s*t = 1`.
    pub fn is_right_invertible(&self, s: usize) -> bool {
        (0..self.size()).any(|t| self.mul(s, t) == self.identity())
    }

    pub fn is_left_invertible(&self, s: usize) -> bool {
        (0..self.size()).any(|t| self.mul(t, s) == self.identity())
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|s| self.is_right_invertible(s))
    }

    /// The monoid with reversed multiplication. Left ideals of `self` are the
    /// right ideals of the opposite.
    pub fn opposite(&self) -> Monoid {
        let n = self.size();
        let table = (0..n).map(|s| (0..n).map(|t| self.mul(t, s)).collect()).collect();
        Monoid::with_labels(table, self.identity(), self.0.labels.clone())
            .expect("opposite of a monoid is a monoid")
    }

    /// Same table and identity, ignoring labels.
    pub fn same_as(&self, other: &Monoid) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.identity == other.0.identity && self.0.table == other.0.table)
    }
}

impl PartialEq for Monoid {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Monoid {}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monoid")
            .field("size", &self.size())
            .field("identity", &self.identity())
            .field("table", &self.table())
            .finish()
    }
}

fn submonoid_closure(n: usize, identity: usize, table: &[u8], gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[identity] = true;
    let mut stack = vec![identity];
    while let Some(s) = stack.pop() {
        for &g in gens {
            let sg = table[s * n + g] as usize;
            if !seen[sg] {
                seen[sg] = true;
                stack.push(sg);
            }
        }
    }
    seen
}

/// Greedy choice of the element that enlarges the generated submonoid most,
/// followed by pruning of redundant generators.
fn irredundant_generators(n: usize, identity: usize, table: &[u8]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    loop {
        let covered = submonoid_closure(n, identity, table, &gens);
        if covered.iter().all(|&c| c) {
            break;
        }
        let best = (0..n)
            .filter(|&s| !covered[s])
            .max_by_key(|&s| {
                let mut trial = gens.clone();
                trial.push(s);
                let size = submonoid_closure(n, identity, table, &trial)
                    .iter()
                    .filter(|&&c| c)
                    .count();
                (size, std::cmp::Reverse(s))
            })
            .expect("some element is uncovered");
        gens.push(best);
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if submonoid_closure(n, identity, table, &rest).iter().all(|&c| c) {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens.sort_unstable();
    gens
}

fn word_tree(
    n: usize,
    identity: usize,
    table: &[u8],
    gens: &[usize],
) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut parent = vec![(identity, identity); n];
    let mut seen = vec![false; n];
    seen[identity] = true;
    let mut order = vec![identity];
    let mut head = 0;
    while head < order.len() {
        let s = order[head];
        head += 1;
        for &g in gens {
            let sg = table[s * n + g] as usize;
            if !seen[sg] {
                seen[sg] = true;
                parent[sg] = (s, g);
                order.push(sg);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    (order, parent)
}
