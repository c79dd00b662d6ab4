//! Finite right acts and their subacts.

use std::fmt;
use std::sync::Arc;

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::monoid::Monoid;

/// A finite right act `A_S`: a set with an action `a·s` such that `a·1 = a`
/// and `(a·s)·t = a·(st)`. Cloning is cheap.
#[derive(Clone)]
pub struct Act(Arc<ActData>);

struct ActData {
    monoid: Monoid,
    size: usize,
    action: Vec<u8>,
    labels: Vec<String>,
    cyclic: Vec<ElemSet>,
}

impl Act {
    /// Validates an action table with `action[a][s] = a·s`.
    pub fn new(monoid: &Monoid, action: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..action.len()).map(|i| i.to_string()).collect();
        Self::with_labels(monoid, action, labels)
    }

    pub fn with_labels(monoid: &Monoid, action: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let m = action.len();
        let n = monoid.size();
        if m == 0 {
            return Err(Error::Empty);
        }
        if m > MAX_ELEMENTS {
            return Err(Error::TooLarge(m));
        }
        if labels.len() != m {
            return Err(Error::Invalid(format!("{} labels for {} elements", labels.len(), m)));
        }
        let mut flat = Vec::with_capacity(m * n);
        for row in &action {
            if row.len() != n {
                return Err(Error::BadShape { rows: m, cols: n });
            }
            for &v in row {
                if v >= m {
                    return Err(Error::OutOfRange { value: v, size: m });
                }
                flat.push(v as u8);
            }
        }
        check_action(monoid, m, &flat)?;
        Ok(Self::from_parts(monoid.clone(), m, flat, labels))
    }

    /// Builds an act from a flat table already known to satisfy the axioms.
    pub(crate) fn from_valid_table(monoid: &Monoid, size: usize, action: Vec<u8>) -> Self {
        debug_assert!(check_action(monoid, size, &action).is_ok());
        let labels = (0..size).map(|i| i.to_string()).collect();
        Self::from_parts(monoid.clone(), size, action, labels)
    }

    pub(crate) fn from_valid_table_labeled(
        monoid: &Monoid,
        size: usize,
        action: Vec<u8>,
        labels: Vec<String>,
    ) -> Self {
        debug_assert!(check_action(monoid, size, &action).is_ok());
        Self::from_parts(monoid.clone(), size, action, labels)
    }

    fn from_parts(monoid: Monoid, size: usize, action: Vec<u8>, labels: Vec<String>) -> Self {
        let n = monoid.size();
        let cyclic = (0..size)
            .map(|a| (0..n).map(|s| action[a * n + s] as usize).collect())
            .collect();
        Act(Arc::new(ActData { monoid, size, action, labels, cyclic }))
    }

    /// Replaces the element labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::Invalid(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size()
            )));
        }
        Ok(Self::from_parts(
            self.monoid().clone(),
            self.size(),
            self.0.action.clone(),
            labels,
        ))
    }

    #[inline]
    pub fn monoid(&self) -> &Monoid {
        &self.0.monoid
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    /// `a·s`.
    #[inline]
    pub fn act(&self, a: usize, s: usize) -> usize {
        self.0.action[a * self.0.monoid.size() + s] as usize
    }

    /// The flat action table, row-major by element.
    pub fn raw_table(&self) -> &[u8] {
        &self.0.action
    }

    pub fn action_table(&self) -> Vec<Vec<usize>> {
        let n = self.monoid().size();
        (0..self.size())
            .map(|a| (0..n).map(|s| self.act(a, s)).collect())
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    /// The cyclic subact `aS`.
    #[inline]
    pub fn cyclic(&self, a: usize) -> ElemSet {
        self.0.cyclic[a]
    }

    pub fn cyclic_subacts(&self) -> &[ElemSet] {
        &self.0.cyclic
    }

    /// Smallest action-closed superset (empty stays empty).
    pub fn closure(&self, set: ElemSet) -> ElemSet {
        set.iter().fold(ElemSet::EMPTY, |acc, a| acc.union(self.cyclic(a)))
    }

    pub fn is_closed(&self, set: ElemSet) -> bool {
        set.is_subset(self.full()) && set.iter().all(|a| self.cyclic(a).is_subset(set))
    }

    /// Checks that `set` is a nonempty closed subset.
    pub fn subact(&self, set: ElemSet) -> Result<Subact> {
        if set.is_empty() {
            return Err(Error::EmptySubact);
        }
        if !self.is_closed(set) {
            return Err(Error::NotClosed);
        }
        Ok(Subact(set))
    }

    pub fn whole(&self) -> Subact {
        Subact(self.full())
    }

    /// The subact generated by `generators`, i.e. the union of their cyclic
    /// subacts.
    pub fn generated_subact(&self, generators: ElemSet) -> Result<Subact> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if !generators.is_subset(self.full()) {
            let bad = generators.difference(self.full()).first().unwrap_or(0);
            return Err(Error::OutOfRange { value: bad, size: self.size() });
        }
        Ok(Subact(self.closure(generators)))
    }

    /// One generator for each maximal cyclic subact (the least element
    /// generating it). This is an irredundant generating set; every minimal
    /// generating set has this size.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for a in 0..self.size() {
            let c = self.cyclic(a);
            let dominated = (0..self.size()).any(|b| c.is_proper_subset(self.cyclic(b)));
            if !dominated && !out.iter().any(|&g| self.cyclic(g) == c) {
                out.push(a);
            }
        }
        out
    }

    /// Elements fixed by every `s`.
    pub fn fixed_points(&self) -> ElemSet {
        (0..self.size()).filter(|&a| self.cyclic(a).len() == 1).collect()
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Same monoid and same table, ignoring labels.
    pub fn same_table(&self, other: &Act) -> bool {
        self.monoid().same_as(other.monoid()) && self.0.action == other.0.action
    }
}

impl PartialEq for Act {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.same_table(other)
    }
}

impl Eq for Act {}

impl fmt::Debug for Act {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Act")
            .field("size", &self.size())
            .field("labels", &self.labels())
            .field("action", &self.action_table())
            .finish()
    }
}

fn check_action(monoid: &Monoid, m: usize, flat: &[u8]) -> Result<()> {
    let n = monoid.size();
    let e = monoid.identity();
    let act = |a: usize, s: usize| flat[a * n + s] as usize;
    for a in 0..m {
        if act(a, e) != a {
            return Err(Error::IdentityActionFails { a });
        }
    }
    for a in 0..m {
        for s in 0..n {
            let as_ = act(a, s);
            for t in 0..n {
                if act(as_, t) != act(a, monoid.mul(s, t)) {
                    return Err(Error::CompatibilityFails { a, s, t });
                }
            }
        }
    }
    Ok(())
}

/// A nonempty action-closed subset of some act, obtained from
/// [`Act::subact`] and friends. A `Subact` does not remember its act; it is
/// only meaningful together with the act that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subact(ElemSet);

impl Subact {
    #[inline]
    pub fn set(self) -> ElemSet {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        false
    }

    #[inline]
    pub fn contains(self, a: usize) -> bool {
        self.0.contains(a)
    }

    pub(crate) fn new_unchecked(set: ElemSet) -> Self {
        debug_assert!(!set.is_empty());
        Subact(set)
    }
}

impl From<Subact> for ElemSet {
    fn from(s: Subact) -> ElemSet {
        s.0
    }
}

impl fmt::Debug for Subact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subact{:?}", self.0)
    }
}
