//! The instance corpus: acts and homomorphisms over a list of monoids.

use serde::Serialize;

use crate::act::{Act, Subact};
use crate::catalog::{desk_catalog, MonoidSpec};
use crate::construct::{induced, rees_quotient};
use crate::enumerate::enumerate_acts;
use crate::error::Result;
use crate::hom::{homomorphisms, Hom};
use crate::lattice::Lattice;
use crate::monoid::Monoid;

/// Which monoids and how large the acts over them get.
///
/// Acts up to `raw_max` elements are taken on every labelling; larger ones up
/// to `iso_max` one per isomorphism class. Homomorphisms run between class
/// representatives `A`, `C` with `|A|·|C| ≤ hom_product_max`, and also cover
/// every subact inclusion and Rees projection of a representative.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub monoids: Vec<(MonoidSpec, Monoid)>,
    pub raw_max: usize,
    pub iso_max: usize,
    pub hom_product_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub monoids: Vec<String>,
    pub raw_max_size: usize,
    pub iso_max_size: usize,
    pub up_to_iso: bool,
    pub hom_product_max: usize,
}

impl Corpus {
    /// Every catalog monoid, raw acts up to 5 elements, classes up to 6.
    pub fn desk() -> Self {
        Self::catalog(6)
    }

    pub fn catalog(max_size: usize) -> Self {
        let monoids = desk_catalog().into_iter().map(|e| (e.spec, e.monoid)).collect();
        Self::new(monoids, max_size)
    }

    pub fn from_specs(specs: &[MonoidSpec], max_size: usize) -> Result<Self> {
        let monoids = specs
            .iter()
            .map(|s| Ok((s.clone(), s.build()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(monoids, max_size))
    }

    /// Raw acts up to `min(max_size, 5)`, classes up to `max_size`.
    pub fn new(monoids: Vec<(MonoidSpec, Monoid)>, max_size: usize) -> Self {
        Corpus { monoids, raw_max: max_size.min(5), iso_max: max_size, hom_product_max: 20 }
    }

    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            monoids: self.monoids.iter().map(|(s, _)| s.to_string()).collect(),
            raw_max_size: self.raw_max,
            iso_max_size: self.iso_max,
            up_to_iso: self.iso_max > self.raw_max,
            hom_product_max: self.hom_product_max,
        }
    }

    /// Raw acts of every size up to `raw_max`, then representatives above it.
    pub fn acts(&self, m: &Monoid) -> Vec<Act> {
        let mut out = Vec::new();
        for n in 1..=self.iso_max {
            out.extend(enumerate_acts(m, n, n > self.raw_max));
        }
        out
    }

    /// One act per isomorphism class, every size up to `iso_max`.
    pub fn representatives(&self, m: &Monoid) -> Vec<Act> {
        (1..=self.iso_max).flat_map(|n| enumerate_acts(m, n, true)).collect()
    }

    pub fn homs(&self, m: &Monoid) -> Vec<Hom> {
        let reps = self.representatives(m);
        let mut out = Vec::new();
        for a in &reps {
            for c in &reps {
                if a.size() * c.size() <= self.hom_product_max {
                    out.extend(homomorphisms(a, c).expect("same monoid"));
                }
            }
        }
        for a in &reps {
            for b in Lattice::of(a).proper() {
                let b = Subact::new_unchecked(b);
                let (sub, embed) = induced(a, b);
                out.push(Hom::new_unchecked(&sub, a, embed));
                out.push(rees_quotient(a, b).1);
            }
        }
        out
    }
}
