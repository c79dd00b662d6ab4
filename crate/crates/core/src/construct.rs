//! Act-building operations: one-element acts, regular acts, induced
//! subacts, Rees quotients, coproducts and amalgams.

use crate::act::{Act, Subact};
use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::monoid::Monoid;

/// The one-element act `Θ`.
pub fn theta(monoid: &Monoid) -> Act {
    Act::from_valid_table_labeled(monoid, 1, vec![0; monoid.size()], vec!["θ".into()])
}

/// `Θ ⊔ .. ⊔ Θ` with `k` summands labelled `θ1..θk`.
pub fn theta_power(monoid: &Monoid, k: usize) -> Act {
    let n = monoid.size();
    let table = (0..k).flat_map(|a| std::iter::repeat_n(a as u8, n)).collect();
    let labels = (1..=k).map(|i| format!("θ{i}")).collect();
    Act::from_valid_table_labeled(monoid, k, table, labels)
}

/// `S` acting on itself by right multiplication.
pub fn regular(monoid: &Monoid) -> Act {
    let n = monoid.size();
    let table = (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .map(|(s, t)| monoid.mul(s, t) as u8)
        .collect();
    Act::from_valid_table_labeled(monoid, n, table, monoid.labels().to_vec())
}

/// The right ideal `eS` as an act.
pub fn principal_right_ideal(monoid: &Monoid, e: usize) -> Act {
    let s = regular(monoid);
    let sub = Subact::new_unchecked(s.cyclic(e));
    induced(&s, sub).0
}

/// The subact `c` as an act in its own right, with the embedding into `act`
/// (elements of `c` in increasing order).
pub fn induced(act: &Act, c: Subact) -> (Act, Vec<usize>) {
    let embed: Vec<usize> = c.set().to_vec();
    let mut index = vec![usize::MAX; act.size()];
    for (i, &a) in embed.iter().enumerate() {
        index[a] = i;
    }
    let n = act.monoid().size();
    let table = embed
        .iter()
        .flat_map(|&a| (0..n).map(move |s| (a, s)))
        .map(|(a, s)| index[act.act(a, s)] as u8)
        .collect();
    let labels = embed.iter().map(|&a| act.label(a).to_string()).collect();
    let sub = Act::from_valid_table_labeled(act.monoid(), embed.len(), table, labels);
    (sub, embed)
}

fn fresh_label(taken: &[String], base: &str) -> String {
    let mut l = base.to_string();
    while taken.contains(&l) {
        l.push('\'');
    }
    l
}

/// The Rees factor `A/B`: elements outside `B` keep their order and the
/// collapsed class of `B` is appended last. Returns the quotient and the
/// canonical projection.
pub fn rees_quotient(act: &Act, b: Subact) -> (Act, Hom) {
    let survivors: Vec<usize> = act.full().difference(b.set()).to_vec();
    let zero = survivors.len();
    let mut index = vec![zero; act.size()];
    for (i, &a) in survivors.iter().enumerate() {
        index[a] = i;
    }
    let n = act.monoid().size();
    let mut table = Vec::with_capacity((zero + 1) * n);
    for &a in &survivors {
        for s in 0..n {
            table.push(index[act.act(a, s)] as u8);
        }
    }
    table.extend(std::iter::repeat_n(zero as u8, n));
    let mut labels: Vec<String> = survivors.iter().map(|&a| act.label(a).to_string()).collect();
    labels.push(fresh_label(&labels, "θ"));
    let q = Act::from_valid_table_labeled(act.monoid(), zero + 1, table, labels);
    let pi = Hom::new_unchecked(act, &q, index);
    (q, pi)
}

/// `A/B` for a possibly-empty closed `b`; the empty quotient is `A` itself.
pub fn quotient_by_set(act: &Act, b: ElemSet) -> (Act, Hom) {
    if b.is_empty() {
        (act.clone(), Hom::identity(act))
    } else {
        rees_quotient(act, Subact::new_unchecked(b))
    }
}

/// Disjoint union with its coprojections. Summand `i` occupies a contiguous
/// block in order.
pub fn coproduct(acts: &[Act]) -> Result<(Act, Vec<Hom>)> {
    let first = acts.first().ok_or(Error::Empty)?;
    let monoid = first.monoid();
    if acts.iter().any(|a| !a.monoid().same_as(monoid)) {
        return Err(Error::MixedMonoids);
    }
    let total: usize = acts.iter().map(Act::size).sum();
    if total > MAX_ELEMENTS {
        return Err(Error::TooLarge(total));
    }
    let n = monoid.size();
    let all_labels: Vec<&String> = acts.iter().flat_map(|a| a.labels()).collect();
    let unique = {
        let mut v = all_labels.clone();
        v.sort();
        v.dedup();
        v.len() == all_labels.len()
    };
    let mut table = Vec::with_capacity(total * n);
    let mut labels = Vec::with_capacity(total);
    let mut offsets = Vec::with_capacity(acts.len());
    let mut offset = 0;
    for (i, a) in acts.iter().enumerate() {
        offsets.push(offset);
        for x in 0..a.size() {
            for s in 0..n {
                table.push((offset + a.act(x, s)) as u8);
            }
            labels.push(if unique {
                a.label(x).to_string()
            } else {
                format!("{}@{}", a.label(x), i + 1)
            });
        }
        offset += a.size();
    }
    let sum = Act::from_valid_table_labeled(monoid, total, table, labels);
    let injections = acts
        .iter()
        .zip(offsets)
        .map(|(a, off)| Hom::new_unchecked(a, &sum, (0..a.size()).map(|x| x + off).collect()))
        .collect();
    Ok((sum, injections))
}

/// The amalgam `A ⊔^B A`: two copies of `A` glued along the proper subact
/// `B`. Elements are ordered `B` first, then copy `a` of `A∖B`, then copy `b`.
pub fn amalgam(act: &Act, b: Subact) -> Result<Act> {
    if b.set() == act.full() {
        return Err(Error::NotProper);
    }
    let shared: Vec<usize> = b.set().to_vec();
    let rest: Vec<usize> = act.full().difference(b.set()).to_vec();
    let total = shared.len() + 2 * rest.len();
    if total > MAX_ELEMENTS {
        return Err(Error::TooLarge(total));
    }
    let mut shared_ix = vec![usize::MAX; act.size()];
    for (i, &x) in shared.iter().enumerate() {
        shared_ix[x] = i;
    }
    let mut rest_ix = vec![usize::MAX; act.size()];
    for (i, &x) in rest.iter().enumerate() {
        rest_ix[x] = i;
    }
    let place = |x: usize, copy: usize| -> usize {
        if b.contains(x) {
            shared_ix[x]
        } else {
            shared.len() + copy * rest.len() + rest_ix[x]
        }
    };
    let n = act.monoid().size();
    let mut table = Vec::with_capacity(total * n);
    for &x in &shared {
        for s in 0..n {
            table.push(place(act.act(x, s), 0) as u8);
        }
    }
    for copy in 0..2 {
        for &x in &rest {
            for s in 0..n {
                table.push(place(act.act(x, s), copy) as u8);
            }
        }
    }
    let mut labels: Vec<String> = shared.iter().map(|&x| act.label(x).to_string()).collect();
    for tag in ["a", "b"] {
        labels.extend(rest.iter().map(|&x| format!("{}_{tag}", act.label(x))));
    }
    Ok(Act::from_valid_table_labeled(act.monoid(), total, table, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::Lattice;

    #[test]
    fn rees_quotient_of_s2_by_zero() {
        let a = regular(&catalog::s2());
        let b = a.subact(ElemSet::singleton(1)).unwrap();
        let (q, pi) = rees_quotient(&a, b);
        assert_eq!(q.size(), 2);
        assert_eq!(q.labels(), &["1", "θ"]);
        assert_eq!(q.action_table(), a.action_table());
        assert_eq!(pi.map(), vec![0, 1]);
    }

    #[test]
    fn total_collapse_is_theta() {
        let a = theta_power(&catalog::s2(), 3);
        let (q, pi) = rees_quotient(&a, a.whole());
        assert_eq!(q.size(), 1);
        assert_eq!(pi.map(), vec![0, 0, 0]);
    }

    #[test]
    fn partial_collapse_of_three_thetas() {
        let m = catalog::s2();
        let a = theta_power(&m, 3);
        let b = a.subact(ElemSet::from_bits(0b011)).unwrap();
        let (q, _) = rees_quotient(&a, b);
        assert_eq!(q.action_table(), theta_power(&m, 2).action_table());
        assert_eq!(q.labels(), &["θ3", "θ"]);
    }

    #[test]
    fn coproduct_of_regular_and_theta() {
        let m = catalog::s2();
        let (sum, inj) = coproduct(&[regular(&m), theta(&m)]).unwrap();
        assert_eq!(sum.size(), 3);
        assert!(inj.iter().all(|h| h.is_mono()));
        let l = Lattice::of(&sum);
        // {0}, {θ}, {0, θ}, {1, 0}, all
        let expect: Vec<ElemSet> = vec![0b010, 0b100, 0b011, 0b110, 0b111]
            .into_iter()
            .map(ElemSet::from_bits)
            .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(l.subacts(), expect.as_slice());
    }

    #[test]
    fn coproduct_rejects_mixed_monoids() {
        let err = coproduct(&[theta(&catalog::s2()), theta(&catalog::cyclic_group(2))]).unwrap_err();
        assert_eq!(err, Error::MixedMonoids);
    }

    #[test]
    fn amalgam_of_s2_along_zero() {
        let a = regular(&catalog::s2());
        let b = a.subact(ElemSet::singleton(1)).unwrap();
        let am = amalgam(&a, b).unwrap();
        assert_eq!(am.labels(), &["0", "1_a", "1_b"]);
        // 1_x · 0 = 0
        assert_eq!(am.act(1, 1), 0);
        assert_eq!(am.act(2, 1), 0);
        assert!(Act::new(am.monoid(), am.action_table()).is_ok());
        assert_eq!(amalgam(&a, a.whole()).unwrap_err(), Error::NotProper);
    }

    #[test]
    fn amalgam_of_trivial_action() {
        let a = theta_power(&catalog::s2(), 2);
        let b = a.subact(ElemSet::singleton(0)).unwrap();
        let am = amalgam(&a, b).unwrap();
        assert_eq!(am.labels(), &["θ1", "θ2_a", "θ2_b"]);
        assert_eq!(am.fixed_points(), am.full());
    }

    #[test]
    fn induced_keeps_labels() {
        let a = theta_power(&catalog::s2(), 3);
        let (sub, embed) = induced(&a, a.subact(ElemSet::from_bits(0b110)).unwrap());
        assert_eq!(embed, vec![1, 2]);
        assert_eq!(sub.labels(), &["θ2", "θ3"]);
    }
}
