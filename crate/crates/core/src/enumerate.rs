//! Enumeration of all acts of a given size over a monoid, optionally one per
//! isomorphism class.
//!
//! An act is determined by how the generators of the monoid act. The search
//! assigns generator images point by point and rejects a partial assignment
//! as soon as two derivations of the same entry `a·s` disagree.

use std::collections::HashMap;

use crate::act::Act;
use crate::error::{Error, Result};
use crate::hom::homomorphisms;
use crate::monoid::Monoid;
use crate::par::{self, Execution};

const UNKNOWN: u8 = u8::MAX;

/// Every act on `{0..size-1}` over `monoid`, sorted by action table. With
/// `up_to_iso`, one canonical representative per isomorphism class.
pub fn enumerate_acts(monoid: &Monoid, size: usize, up_to_iso: bool) -> Vec<Act> {
    enumerate_acts_with(monoid, size, up_to_iso, Execution::default())
}

pub fn enumerate_acts_with(monoid: &Monoid, size: usize, up_to_iso: bool, exec: Execution) -> Vec<Act> {
    if size == 0 {
        return Vec::new();
    }
    let mut tables = raw_tables(monoid, size, up_to_iso);
    if up_to_iso {
        let canon: Vec<Vec<u8>> = par::map(exec, &tables, |t| canonical_table(monoid, size, t));
        let mut reps: Vec<Vec<u8>> = canon;
        reps.sort_unstable();
        reps.dedup();
        tables = reps;
    } else {
        tables.sort_unstable();
    }
    tables
        .into_iter()
        .map(|t| Act::from_valid_table(monoid, size, t))
        .collect()
}

/// The order in which [`enumerate_acts_ordered`] returns acts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedOrder {
    /// Sorted by action table.
    #[default]
    Lex,
    /// In the order the backtracking search finds them. Isomorphism classes
    /// appear where their first member is found, as canonical tables.
    Search,
}

impl std::str::FromStr for SeedOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(SeedOrder::Lex),
            "search" => Ok(SeedOrder::Search),
            _ => Err(Error::Invalid(format!("unknown seed order `{s}`"))),
        }
    }
}

pub fn enumerate_acts_ordered(monoid: &Monoid, size: usize, up_to_iso: bool, order: SeedOrder) -> Vec<Act> {
    if order == SeedOrder::Lex || size == 0 {
        return enumerate_acts(monoid, size, up_to_iso);
    }
    let mut tables = raw_tables(monoid, size, up_to_iso);
    if up_to_iso {
        let mut seen = std::collections::HashSet::new();
        tables = tables
            .iter()
            .map(|t| canonical_table(monoid, size, t))
            .filter(|c| seen.insert(c.clone()))
            .collect();
    }
    tables
        .into_iter()
        .map(|t| Act::from_valid_table(monoid, size, t))
        .collect()
}

/// Number of acts of `size` elements (no isomorphism reduction).
pub fn count_acts(monoid: &Monoid, size: usize) -> usize {
    raw_tables(monoid, size, false).len()
}

fn raw_tables(monoid: &Monoid, size: usize, first_appearance: bool) -> Vec<Vec<u8>> {
    let mut search = Search::new(monoid, size, first_appearance);
    let mut out = Vec::new();
    search.run(0, 0, &mut out);
    out
}

struct Search<'m> {
    monoid: &'m Monoid,
    size: usize,
    gens: Vec<usize>,
    /// `table[a * n + s] = a·s`, or `UNKNOWN`.
    table: Vec<u8>,
    /// Entries set so far, in order, for undoing.
    trail: Vec<usize>,
    queue: Vec<usize>,
    first_appearance: bool,
}

impl<'m> Search<'m> {
    fn new(monoid: &'m Monoid, size: usize, first_appearance: bool) -> Self {
        let n = monoid.size();
        let mut search = Search {
            monoid,
            size,
            gens: monoid.generators().to_vec(),
            table: vec![UNKNOWN; size * n],
            trail: Vec::new(),
            queue: Vec::new(),
            first_appearance,
        };
        for a in 0..size {
            search.table[a * n + monoid.identity()] = a as u8;
        }
        search
    }

    /// Tries every image for generator `var % k` at point `var / k`. When
    /// `first_appearance` is set, images are limited to the points seen so
    /// far plus the next one. Every act has a labelling of that shape (number
    /// points in the order they first turn up while reading rows), so the
    /// restricted search still meets every isomorphism class.
    fn run(&mut self, var: usize, high: usize, out: &mut Vec<Vec<u8>>) {
        let k = self.gens.len();
        if var == self.size * k {
            debug_assert!(self.table.iter().all(|&v| v != UNKNOWN));
            out.push(self.table.clone());
            return;
        }
        let point = var / k;
        let high = high.max(point);
        let entry = point * self.monoid.size() + self.gens[var % k];
        if self.table[entry] != UNKNOWN {
            self.run(var + 1, high, out);
            return;
        }
        let limit = if self.first_appearance { (high + 2).min(self.size) } else { self.size };
        for v in 0..limit {
            let mark = self.trail.len();
            if self.assign(entry, v as u8) {
                self.run(var + 1, high.max(v), out);
            }
            for &i in &self.trail[mark..] {
                self.table[i] = UNKNOWN;
            }
            self.trail.truncate(mark);
        }
    }

    /// Sets an entry and closes the table under `(a·s)·t = a·(st)`, failing
    /// on the first contradiction.
    fn assign(&mut self, entry: usize, v: u8) -> bool {
        self.queue.clear();
        if !self.set(entry, v) {
            return false;
        }
        let n = self.monoid.size();
        while let Some(i) = self.queue.pop() {
            let (a, s) = (i / n, i % n);
            let b = self.table[i] as usize;
            for t in 0..n {
                let c = self.table[b * n + t];
                if c != UNKNOWN && !self.set(a * n + self.monoid.mul(s, t), c) {
                    return false;
                }
            }
            for j in 0..self.table.len() {
                if self.table[j] as usize == a {
                    let (p, r) = (j / n, j % n);
                    if !self.set(p * n + self.monoid.mul(r, s), b as u8) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, i: usize, v: u8) -> bool {
        match self.table[i] {
            UNKNOWN => {
                self.table[i] = v;
                self.trail.push(i);
                self.queue.push(i);
                true
            }
            w => w == v,
        }
    }
}

/// Old colour, colours of the images, sorted `(colour, s)` preimages.
type Signature = (u32, Vec<u32>, Vec<(u32, usize)>);

/// Isomorphism-invariant colour refinement. An element's new colour ranks
/// its old colour, the colours of its images `a·s` and the multiset of
/// `(colour of a, s)` over its preimages `a·s`. Colours stay in `0..k` and
/// only ever split, keeping their relative order.
fn refine(n: usize, table: &[u8], preimages: &[Vec<(usize, usize)>], mut colors: Vec<u32>) -> Vec<u32> {
    let size = colors.len();
    let mut classes = distinct_count(&colors);
    loop {
        let sigs: Vec<Signature> = (0..size)
            .map(|a| {
                let img = (0..n).map(|s| colors[table[a * n + s] as usize]).collect();
                let mut pre: Vec<(u32, usize)> =
                    preimages[a].iter().map(|&(b, s)| (colors[b], s)).collect();
                pre.sort_unstable();
                (colors[a], img, pre)
            })
            .collect();
        let mut distinct: Vec<&Signature> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|sg| distinct.binary_search(&sg).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// The least relabeled table over the leaves of an individualization
/// search: refine, split the first non-singleton colour class by trying
/// each of its members first, and recurse until every colour is a single
/// element. Each leaf colouring is a relabeling, and since every step is
/// isomorphism-invariant the minimum depends only on the isomorphism class.
pub(crate) fn canonical_table(monoid: &Monoid, size: usize, table: &[u8]) -> Vec<u8> {
    let n = monoid.size();
    let mut preimages = vec![Vec::new(); size];
    for a in 0..size {
        for s in 0..n {
            preimages[table[a * n + s] as usize].push((a, s));
        }
    }
    let start = refine(n, table, &preimages, vec![0; size]);
    let mut best = None;
    individualize(n, table, &preimages, start, &mut best);
    best.expect("the search reaches at least one leaf")
}

fn individualize(
    n: usize,
    table: &[u8],
    preimages: &[Vec<(usize, usize)>],
    colors: Vec<u32>,
    best: &mut Option<Vec<u8>>,
) {
    let size = colors.len();
    let mut counts = vec![0usize; size];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let mut relabeled = vec![0u8; size * n];
        for a in 0..size {
            let new = colors[a] as usize;
            for s in 0..n {
                relabeled[new * n + s] = colors[table[a * n + s] as usize] as u8;
            }
        }
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            *best = Some(relabeled);
        }
        return;
    };
    for x in (0..size).filter(|&x| colors[x] as usize == target) {
        let split = (0..size)
            .map(|y| 2 * colors[y] + u32::from(colors[y] as usize == target && y != x))
            .collect();
        let refined = refine(n, table, preimages, split);
        individualize(n, table, preimages, refined, best);
    }
}

/// Canonical form of an act: equal for two acts exactly when they are
/// isomorphic (over the same monoid).
pub fn canonical_form(act: &Act) -> Vec<u8> {
    canonical_table(act.monoid(), act.size(), act.raw_table())
}

/// The canonical representative of the isomorphism class of `act`.
pub fn canonical_act(act: &Act) -> Act {
    Act::from_valid_table(act.monoid(), act.size(), canonical_form(act))
}

/// Whether a bijective homomorphism `a -> b` exists.
pub fn act_isomorphic(a: &Act, b: &Act) -> Result<bool> {
    if !a.monoid().same_as(b.monoid()) {
        return Err(Error::MixedMonoids);
    }
    Ok(a.size() == b.size() && canonical_form(a) == canonical_form(b))
}

/// Isomorphism by direct search over homomorphisms, independent of
/// canonical forms.
pub fn act_isomorphic_by_search(a: &Act, b: &Act) -> Result<bool> {
    if a.size() != b.size() {
        if !a.monoid().same_as(b.monoid()) {
            return Err(Error::MixedMonoids);
        }
        return Ok(false);
    }
    Ok(homomorphisms(a, b)?.iter().any(|h| h.is_mono()))
}

/// Groups acts by isomorphism class; keys are canonical forms.
pub fn classify(acts: &[Act]) -> HashMap<Vec<u8>, Vec<usize>> {
    let mut classes: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for (i, a) in acts.iter().enumerate() {
        classes.entry(canonical_form(a)).or_default().push(i);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::{regular, theta_power};

    /// Independent oracle: filter every table (identity column forced).
    fn brute_force_count(monoid: &Monoid, size: usize) -> usize {
        let n = monoid.size();
        let free: Vec<usize> = (0..n).filter(|&s| s != monoid.identity()).collect();
        let cells = size * free.len();
        let total = size.pow(cells as u32);
        let mut count = 0;
        let mut table = vec![0usize; size * n];
        for code in 0..total {
            let mut c = code;
            for a in 0..size {
                table[a * n + monoid.identity()] = a;
                for &s in &free {
                    table[a * n + s] = c % size;
                    c /= size;
                }
            }
            let ok = (0..size).all(|a| {
                (0..n).all(|s| {
                    (0..n).all(|t| table[table[a * n + s] * n + t] == table[a * n + monoid.mul(s, t)])
                })
            });
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn forced_and_trivial_cases() {
        let triv = catalog::trivial();
        assert_eq!(enumerate_acts(&triv, 2, false).len(), 1);
        assert_eq!(enumerate_acts(&catalog::s2(), 1, false).len(), 1);
    }

    #[test]
    fn s2_size_two_matches_oracle() {
        // the zero acts as an idempotent map of two points: 3 choices
        let m = catalog::s2();
        assert_eq!(brute_force_count(&m, 2), 3);
        assert_eq!(enumerate_acts(&m, 2, false).len(), 3);
        assert_eq!(enumerate_acts(&m, 2, true).len(), 2);
    }

    #[test]
    fn raw_counts_match_brute_force() {
        for e in catalog::desk_catalog() {
            let n = e.monoid.size();
            for size in 1..=9 {
                if size * n > 9 {
                    break;
                }
                assert_eq!(
                    count_acts(&e.monoid, size),
                    brute_force_count(&e.monoid, size),
                    "{} size {size}",
                    e.spec
                );
            }
        }
    }

    #[test]
    fn restricted_search_meets_every_class() {
        for e in catalog::desk_catalog().into_iter().filter(|e| e.monoid.size() <= 4) {
            for size in 1..=4 {
                let mut from_raw: Vec<Vec<u8>> = raw_tables(&e.monoid, size, false)
                    .iter()
                    .map(|t| canonical_table(&e.monoid, size, t))
                    .collect();
                from_raw.sort();
                from_raw.dedup();
                let reps: Vec<Vec<u8>> = enumerate_acts(&e.monoid, size, true)
                    .iter()
                    .map(|a| a.raw_table().to_vec())
                    .collect();
                assert_eq!(reps, from_raw, "{} size {size}", e.spec);
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let m = catalog::s2();
        let t2 = theta_power(&m, 2);
        let swapped = t2.relabeled(vec!["x".into(), "y".into()]).unwrap();
        assert!(act_isomorphic(&t2, &swapped).unwrap());
        assert!(!act_isomorphic(&t2, &regular(&m)).unwrap());
        assert!(act_isomorphic(&t2, &t2).unwrap());
        let other = theta_power(&catalog::cyclic_group(2), 2);
        assert_eq!(act_isomorphic(&t2, &other).unwrap_err(), Error::MixedMonoids);
    }

    #[test]
    fn canonical_form_agrees_with_search() {
        for e in catalog::desk_catalog().into_iter().filter(|e| e.monoid.size() <= 3) {
            let acts = enumerate_acts(&e.monoid, 3, false);
            for a in &acts {
                for b in &acts {
                    assert_eq!(
                        act_isomorphic(a, b).unwrap(),
                        act_isomorphic_by_search(a, b).unwrap()
                    );
                }
            }
        }
    }
}
