use crate::act::Act;
use crate::bitset::MAX_ELEMENTS;
use crate::construct::{coproduct, induced, principal_right_ideal, regular};
use crate::enumerate::canonical_form;
use crate::hom::{homomorphisms, Hom};

use super::structure::components;
use super::{PropertyVerdict, Witness};

/// Projective: every indecomposable component is isomorphic to `eS` for an
/// idempotent `e`. The witness is the first component that is not.
pub fn is_projective(act: &Act) -> PropertyVerdict {
    let m = act.monoid();
    let ideals: Vec<(usize, Vec<u8>)> = m
        .idempotents()
        .into_iter()
        .map(|e| {
            let ideal = principal_right_ideal(m, e);
            (ideal.size(), canonical_form(&ideal))
        })
        .collect();
    for comp in components(act, act.full()) {
        let (sub, _) = induced(act, crate::act::Subact::new_unchecked(comp));
        let form = canonical_form(&sub);
        if !ideals.iter().any(|(size, f)| *size == sub.size() && *f == form) {
            return PropertyVerdict::no(Witness::subact(comp));
        }
    }
    PropertyVerdict::yes()
}

/// Projectivity as a lifting property: the epimorphism onto `act` from the
/// free act on its generating set has a section. `None` when that free act
/// is too large to build.
pub fn projective_by_splitting(act: &Act) -> Option<bool> {
    let m = act.monoid();
    let gens = act.generating_set();
    if gens.len() * m.size() > MAX_ELEMENTS {
        return None;
    }
    let copies = vec![regular(m); gens.len()];
    let (free, _) = coproduct(&copies).ok()?;
    let n = m.size();
    let onto: Vec<usize> = (0..free.size()).map(|x| act.act(gens[x / n], x % n)).collect();
    let pi = Hom::new(&free, act, onto).ok()?;
    let sections = homomorphisms(act, &free).ok()?;
    Some(sections.iter().any(|g| (0..act.size()).all(|a| pi.apply(g.apply(a)) == a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::{theta, theta_power};

    #[test]
    fn regular_act_is_projective() {
        for e in catalog::desk_catalog() {
            assert!(is_projective(&regular(&e.monoid)).holds, "{}", e.spec);
            assert_eq!(projective_by_splitting(&regular(&e.monoid)), Some(true));
        }
    }

    #[test]
    fn theta_depends_on_a_zero() {
        assert!(is_projective(&theta(&catalog::s2())).holds);
        assert!(is_projective(&theta_power(&catalog::s2(), 2)).holds);
        let c2 = catalog::cyclic_group(2);
        let v = is_projective(&theta(&c2));
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Subact { subact: vec![0] }));
        assert_eq!(projective_by_splitting(&theta(&c2)), Some(false));
    }
}
