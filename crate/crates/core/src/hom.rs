//! Homomorphisms between acts over the same monoid.

use std::fmt;

use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::construct;
use crate::error::{Error, Result};

/// An equivariant map `f: A -> B`, `f(a·s) = f(a)·s`.
#[derive(Clone, PartialEq, Eq)]
pub struct Hom {
    source: Act,
    target: Act,
    map: Vec<u8>,
}

/// Largest `|B|^|A|` for which [`homomorphisms_exhaustive`] runs.
pub const EXHAUSTIVE_LIMIT: usize = 4096;

impl Hom {
    pub fn new(source: &Act, target: &Act, map: Vec<usize>) -> Result<Self> {
        if !source.monoid().same_as(target.monoid()) {
            return Err(Error::MixedMonoids);
        }
        if map.len() != source.size() {
            return Err(Error::BadShape { rows: source.size(), cols: 1 });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size()) {
            return Err(Error::OutOfRange { value: v, size: target.size() });
        }
        for a in 0..source.size() {
            for s in 0..source.monoid().size() {
                if map[source.act(a, s)] != target.act(map[a], s) {
                    return Err(Error::NotEquivariant { a, s });
                }
            }
        }
        Ok(Hom {
            source: source.clone(),
            target: target.clone(),
            map: map.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub(crate) fn new_unchecked(source: &Act, target: &Act, map: Vec<usize>) -> Self {
        let h = Hom {
            source: source.clone(),
            target: target.clone(),
            map: map.into_iter().map(|v| v as u8).collect(),
        };
        debug_assert!(Hom::new(source, target, h.map()).is_ok());
        h
    }

    pub fn identity(act: &Act) -> Self {
        Hom::new_unchecked(act, act, (0..act.size()).collect())
    }

    pub fn source(&self) -> &Act {
        &self.source
    }

    pub fn target(&self) -> &Act {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    pub fn image_of(&self, set: ElemSet) -> ElemSet {
        set.iter().map(|a| self.apply(a)).collect()
    }

    pub fn image(&self) -> Subact {
        Subact::new_unchecked(self.image_of(self.source.full()))
    }

    pub fn is_epi(&self) -> bool {
        self.image().set() == self.target.full()
    }

    pub fn is_mono(&self) -> bool {
        self.image().len() == self.source.size()
    }

    /// `f⁻¹(t)`, which is closed under the action and may be empty.
    pub fn preimage(&self, t: ElemSet) -> ElemSet {
        (0..self.source.size()).filter(|&a| t.contains(self.apply(a))).collect()
    }

    /// `f` restricted to the subact `b`, re-indexed onto `b` as an act in its
    /// own right (elements of `b` in increasing order).
    pub fn restrict(&self, b: Subact) -> Hom {
        let (sub, embed) = construct::induced(&self.source, b);
        let map = embed.iter().map(|&a| self.apply(a)).collect();
        Hom::new_unchecked(&sub, &self.target, map)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Hom) -> Result<Hom> {
        if self.target != *g.source() {
            return Err(Error::Invalid("homomorphisms do not compose".into()));
        }
        let map = (0..self.source.size()).map(|a| g.apply(self.apply(a))).collect();
        Ok(Hom::new_unchecked(&self.source, g.target(), map))
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hom").field("map", &self.map()).finish()
    }
}

/// Summary of a homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomQueries {
    pub is_epi: bool,
    pub is_mono: bool,
    pub image: Subact,
}

pub fn hom_queries(h: &Hom) -> HomQueries {
    HomQueries { is_epi: h.is_epi(), is_mono: h.is_mono(), image: h.image() }
}

/// Every homomorphism `source -> target`, sorted by map.
///
/// A homomorphism is determined by the images of a generating set of the
/// source; each choice of images is propagated along the action and kept
/// when it is consistent.
pub fn homomorphisms(source: &Act, target: &Act) -> Result<Vec<Hom>> {
    if !source.monoid().same_as(target.monoid()) {
        return Err(Error::MixedMonoids);
    }
    let gens = source.generating_set();
    let mut out = Vec::new();
    let mut partial: Vec<Option<usize>> = vec![None; source.size()];
    search(source, target, &gens, 0, &mut partial, &mut out);
    out.sort_by(|a: &Hom, b: &Hom| a.map.cmp(&b.map));
    Ok(out)
}

fn search(
    source: &Act,
    target: &Act,
    gens: &[usize],
    depth: usize,
    partial: &mut Vec<Option<usize>>,
    out: &mut Vec<Hom>,
) {
    if depth == gens.len() {
        let map: Vec<usize> = partial.iter().map(|v| v.expect("generators cover the act")).collect();
        out.push(Hom::new_unchecked(source, target, map));
        return;
    }
    let g = gens[depth];
    let n = source.monoid().size();
    for t in 0..target.size() {
        let mut assigned = Vec::new();
        let mut ok = true;
        for s in 0..n {
            let a = source.act(g, s);
            let v = target.act(t, s);
            match partial[a] {
                Some(w) if w != v => {
                    ok = false;
                    break;
                }
                Some(_) => {}
                None => {
                    partial[a] = Some(v);
                    assigned.push(a);
                }
            }
        }
        if ok {
            search(source, target, gens, depth + 1, partial, out);
        }
        for a in assigned {
            partial[a] = None;
        }
    }
}

/// Every homomorphism by filtering all `|target|^|source|` maps, or `None`
/// when that exceeds [`EXHAUSTIVE_LIMIT`]. Independent of [`homomorphisms`].
pub fn homomorphisms_exhaustive(source: &Act, target: &Act) -> Result<Option<Vec<Hom>>> {
    if !source.monoid().same_as(target.monoid()) {
        return Err(Error::MixedMonoids);
    }
    let (m, k) = (source.size(), target.size());
    let total = match k.checked_pow(m as u32) {
        Some(t) if t <= EXHAUSTIVE_LIMIT => t,
        _ => return Ok(None),
    };
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut map = vec![0usize; m];
        for slot in map.iter_mut().rev() {
            *slot = c % k;
            c /= k;
        }
        if let Ok(h) = Hom::new(source, target, map) {
            out.push(h);
        }
    }
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(Some(out))
}
