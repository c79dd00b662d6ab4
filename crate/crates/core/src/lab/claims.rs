//! The claim registry.
//!
//! A claim enumerates its instances from a [`Ctx`] as tuples of subacts
//! (named by [`Claim::names`]) and checks one tuple at a time. A failed
//! check returns a JSON detail of what went wrong; re-running the same
//! check on the same tuple reproduces it exactly, which is what makes
//! reported counterexamples replayable.

use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::ElemSet;
use crate::construct::{induced, regular};
use crate::hom::{homomorphisms, Hom};
use crate::lattice::Lattice;
use crate::predicates::{
    hollow_by_decomposition, hollow_by_locality, is_coessential, is_coessential_by_criterion,
    is_cover, is_hollow, is_projective, is_uniserial, local_monoid_report, minimal_generating_sets,
    projective_by_splitting, radical_as_union, radical_in, superfluous_by_maximals, supplement_by_criterion,
    supplement_in, supplemented_in, uniserial_by_hollow_subacts, uniserial_by_two_generated, SupplementReading,
};

use super::ctx::{co_uniform, coess, coess_under, hollow, local, rad, sup, sup_under, Ctx};

/// What a claim quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// The monoid itself (checked on its regular act).
    Monoid,
    /// An act and tuples of its subacts.
    Act,
    /// A homomorphism between acts and tuples of subacts of its source (or
    /// target, see [`Claim::on_target`]).
    Hom,
}

/// Whether a failure of the claim counts against the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpenQuestion {
    No,
    Always,
    /// Only the strict supplement reading is in question.
    StrictReading,
}

/// `None` for claims that do not involve supplements.
pub type Reading = Option<SupplementReading>;

type Tuples = fn(&Ctx, Reading) -> Vec<Vec<ElemSet>>;
type Check = fn(&Ctx, &[ElemSet], Reading) -> Option<Value>;

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    pub names: &'static [&'static str],
    /// Tuple members are subacts of the hom's target rather than its source.
    pub on_target: bool,
    pub reading_dependent: bool,
    pub open: OpenQuestion,
    tuples: Tuples,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish_non_exhaustive()
    }
}

impl Claim {
    pub fn is_open(&self, reading: Reading) -> bool {
        match self.open {
            OpenQuestion::No => false,
            OpenQuestion::Always => true,
            OpenQuestion::StrictReading => reading == Some(SupplementReading::Strict),
        }
    }

    pub fn tuples(&self, ctx: &Ctx, reading: Reading) -> Vec<Vec<ElemSet>> {
        (self.tuples)(ctx, reading)
    }

    pub fn check(&self, ctx: &Ctx, tuple: &[ElemSet], reading: Reading) -> Option<Value> {
        (self.check)(ctx, tuple, reading)
    }
}

pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

pub fn find(id: &str) -> Option<&'static Claim> {
    registry().iter().find(|c| c.id == id)
}

fn unit() -> Vec<Vec<ElemSet>> {
    vec![vec![]]
}

fn each(sets: impl IntoIterator<Item = ElemSet>) -> Vec<Vec<ElemSet>> {
    sets.into_iter().map(|b| vec![b]).collect()
}

/// `[B, C]` with `C ⊆ B`.
fn chains2(l: &Lattice) -> Vec<Vec<ElemSet>> {
    let mut out = Vec::new();
    for &b in l.subacts() {
        for c in l.below(b) {
            out.push(vec![b, c]);
        }
    }
    out
}

/// `[B, C, D]` with `D ⊆ C ⊆ B`.
fn chains3(l: &Lattice) -> Vec<Vec<ElemSet>> {
    let mut out = Vec::new();
    for &b in l.subacts() {
        for c in l.below(b) {
            for d in l.below(c) {
                out.push(vec![b, c, d]);
            }
        }
    }
    out
}

fn admits(l: &Lattice, c: ElemSet, reading: Reading) -> bool {
    reading != Some(SupplementReading::Strict) || c != l.top()
}

/// `[B, C]` with `B` proper, `C` allowed by the reading, `B ∪ C = A`.
fn covering_pairs(ctx: &Ctx, reading: Reading) -> Vec<Vec<ElemSet>> {
    let l = &ctx.lat;
    let mut out = Vec::new();
    for b in l.proper() {
        for &c in l.subacts() {
            if admits(l, c, reading) && b.union(c) == l.top() {
                out.push(vec![b, c]);
            }
        }
    }
    out
}

/// `[B, C]` where `C` is a supplement of `B` allowed by the reading.
fn supplement_pairs(ctx: &Ctx, reading: Reading) -> Vec<Vec<ElemSet>> {
    covering_pairs(ctx, reading)
        .into_iter()
        .filter(|t| supplement_in(&ctx.lat, t[0], t[1]).is_ok())
        .collect()
}

/// `[B, C]`, both proper, `C` a supplement of `B`.
fn proper_supplement_pairs(ctx: &Ctx) -> Vec<Vec<ElemSet>> {
    supplement_pairs(ctx, Some(SupplementReading::Strict))
}

fn reading_of(r: Reading) -> SupplementReading {
    r.unwrap_or(SupplementReading::Relaxed)
}

fn is_supplemented(l: &Lattice, r: Reading) -> bool {
    supplemented_in(l, reading_of(r)).is_none()
}

fn has_supplement(l: &Lattice, b: ElemSet, r: Reading) -> bool {
    l.subacts()
        .iter()
        .any(|&c| admits(l, c, r) && supplement_in(l, b, c).is_ok())
}

fn implies(p: bool, q: bool) -> bool {
    !p || q
}

fn fail(ok: bool, detail: Value) -> Option<Value> {
    if ok {
        None
    } else {
        Some(detail)
    }
}

fn set(s: ElemSet) -> Value {
    json!(s.to_vec())
}

fn if_map(ctx: &Ctx, pred: fn(&Hom) -> bool) -> Vec<Vec<ElemSet>> {
    if pred(&ctx.hom().f) {
        unit()
    } else {
        Vec::new()
    }
}

fn build() -> Vec<Claim> {
    use OpenQuestion::*;
    let mut v = vec![
        Claim {
            id: "L1.1",
            statement: "For a maximal subact M, A/M is finitely generated: [a] and the zero generate it for any a outside M",
            scope: Scope::Act,
            names: &["M"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.lat.maximals()),
            check: |c, t, _| {
                let q = c.quotient(t[0]);
                let zero = q.img(t[0]);
                let full = q.pi.target().full();
                let bad = c.top().difference(t[0]).iter().find(|&a| {
                    q.pi.target().closure(zero.with(q.pi.apply(a))) != full
                });
                bad.map(|a| json!({ "a": a }))
            },
        },
        Claim {
            id: "L2.2",
            statement: "B ≪ A (A covers A/B) iff every proper C meeting B has C ∪ B ≠ A",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.lat.subacts().to_vec()),
            check: |c, t, _| {
                let b = crate::act::Subact::new_unchecked(t[0]);
                let def = is_coessential(&c.act, b).holds;
                let crit = is_coessential_by_criterion(&c.act, b).holds;
                fail(def == crit, json!({ "definition": def, "criterion": crit }))
            },
        },
        Claim {
            id: "L2.3",
            statement: "A coessential subact of an indecomposable act is superfluous",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                if c.is_indecomposable(c.top()) {
                    each(c.lat.subacts().to_vec())
                } else {
                    Vec::new()
                }
            },
            check: |c, t, _| {
                let (ce, sp) = (coess(&c.lat, t[0]), sup(&c.lat, t[0]));
                fail(implies(ce, sp), json!({ "coessential": ce, "superfluous": sp }))
            },
        },
        Claim {
            id: "L2.4(i)",
            statement: "For C ⊆ B ⊆ A: B ≤ₛ A iff C ≤ₛ A and B/C ≤ₛ A/C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| chains2(&c.lat),
            check: |c, t, _| {
                let (b, cc) = (t[0], t[1]);
                let q = c.quotient(cc);
                let lhs = sup(&c.lat, b);
                let c_in_a = sup(&c.lat, cc);
                let quot = sup(&q.lat, q.img(b));
                fail(
                    lhs == (c_in_a && quot),
                    json!({ "B_in_A": lhs, "C_in_A": c_in_a, "B/C_in_A/C": quot }),
                )
            },
        },
        Claim {
            id: "L2.4(ii)",
            statement: "For C ⊆ B ⊆ A: C ≤ₛ B implies C ≤ₛ A",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| chains2(&c.lat),
            check: |c, t, _| {
                let in_b = sup(&c.within(t[0]), t[1]);
                let in_a = sup(&c.lat, t[1]);
                fail(implies(in_b, in_a), json!({ "C_in_B": in_b, "C_in_A": in_a }))
            },
        },
        Claim {
            id: "L2.4(iii)",
            statement: "If B ≤ₛ A and h: X → A has Im h ∪ B = A, then Im h = A",
            scope: Scope::Hom,
            names: &["B"],
            on_target: true,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.hom().target.subacts().to_vec()),
            check: |c, t, _| {
                let h = c.hom();
                let image = h.f.image_of(h.f.source().full());
                let top = h.target.top();
                let small = sup(&h.target, t[0]);
                let covers = image.union(t[0]) == top;
                fail(
                    !(small && covers) || image == top,
                    json!({ "B_in_A": small, "image": set(image) }),
                )
            },
        },
        Claim {
            id: "L2.4(iv)",
            statement: "For D ⊆ C ⊆ B ⊆ A: B/D ≤ₛ A/D iff B/C ≤ₛ A/C and C/D ≤ₛ A/D",
            scope: Scope::Act,
            names: &["B", "C", "D"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| chains3(&c.lat),
            check: |c, t, _| {
                let (b, cc, d) = (t[0], t[1], t[2]);
                let qd = c.quotient(d);
                let qc = c.quotient(cc);
                let bd = sup(&qd.lat, qd.img(b));
                let bc = sup(&qc.lat, qc.img(b));
                let cd = sup(&qd.lat, qd.img(cc));
                fail(bd == (bc && cd), json!({ "B/D": bd, "B/C": bc, "C/D": cd }))
            },
        },
        Claim {
            id: "L2.5(i)",
            statement: "For C ⊆ B ⊆ A: C ≪ B implies C ≪ A",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| chains2(&c.lat),
            check: |c, t, _| {
                let in_b = coess(&c.within(t[0]), t[1]);
                let in_a = coess(&c.lat, t[1]);
                fail(implies(in_b, in_a), json!({ "C_in_B": in_b, "C_in_A": in_a }))
            },
        },
        Claim {
            id: "L2.5(ii)",
            statement: "For C ⊆ B ⊆ A: B ≪ A implies C ≪ A and B/C ≪ A/C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| chains2(&c.lat),
            check: |c, t, _| {
                let b_in_a = coess(&c.lat, t[0]);
                if !b_in_a {
                    return None;
                }
                let q = c.quotient(t[1]);
                let c_in_a = coess(&c.lat, t[1]);
                let quot = coess(&q.lat, q.img(t[0]));
                fail(c_in_a && quot, json!({ "C_in_A": c_in_a, "B/C_in_A/C": quot }))
            },
        },
        Claim {
            id: "L2.5(iii)",
            statement: "For a monomorphism f: A → C, B ≪ A implies f(B) ≪ C and B ≤ₛ A implies f(B) ≤ₛ C",
            scope: Scope::Hom,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                if c.hom().f.is_mono() {
                    each(c.lat.subacts().to_vec())
                } else {
                    Vec::new()
                }
            },
            check: |c, t, _| {
                let h = c.hom();
                let fb = h.f.image_of(t[0]);
                let (ce, ce_img) = (coess(&c.lat, t[0]), coess(&h.target, fb));
                let (sp, sp_img) = (sup(&c.lat, t[0]), sup(&h.target, fb));
                fail(
                    implies(ce, ce_img) && implies(sp, sp_img),
                    json!({
                        "coessential": ce, "image_coessential": ce_img,
                        "superfluous": sp, "image_superfluous": sp_img,
                    }),
                )
            },
        },
        Claim {
            id: "L2.6",
            statement: "For proper B, C: B ∪ C ≤ₛ A iff B ≤ₛ A and C ≤ₛ A",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let proper: Vec<ElemSet> = c.lat.proper().collect();
                let mut out = Vec::new();
                for (i, &b) in proper.iter().enumerate() {
                    for &cc in &proper[i..] {
                        out.push(vec![b, cc]);
                    }
                }
                out
            },
            check: |c, t, _| {
                let u = sup(&c.lat, t[0].union(t[1]));
                let (b, cc) = (sup(&c.lat, t[0]), sup(&c.lat, t[1]));
                fail(u == (b && cc), json!({ "union": u, "B": b, "C": cc }))
            },
        },
        Claim {
            id: "L2.7(i)",
            statement: "With A the coproduct of its components A_i and B_i proper in A_i: ∐B_i ≤ₛ A iff every B_i ≤ₛ A_i",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| component_choices(c),
            check: |c, t, _| {
                let whole = sup(&c.lat, t[0]);
                let parts: Vec<bool> = c
                    .components(c.top())
                    .into_iter()
                    .map(|a_i| sup(&c.within(a_i), t[0].intersection(a_i)))
                    .collect();
                fail(whole == parts.iter().all(|&p| p), json!({ "coproduct": whole, "components": parts }))
            },
        },
        Claim {
            id: "L2.7(ii)",
            statement: "With A the coproduct of its components A_i and B_i proper in A_i: ∐B_i ≪ A implies every B_i ≪ A_i",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| component_choices(c),
            check: |c, t, _| {
                let whole = coess(&c.lat, t[0]);
                let parts: Vec<bool> = c
                    .components(c.top())
                    .into_iter()
                    .map(|a_i| coess(&c.within(a_i), t[0].intersection(a_i)))
                    .collect();
                fail(implies(whole, parts.iter().all(|&p| p)), json!({ "coproduct": whole, "components": parts }))
            },
        },
        Claim {
            id: "L2.7(iii)",
            statement: "For subacts A1, A2 and proper B_i ⊆ A_i: B_i ≤ₛ A_i (resp. ≪) for both i implies B1 ∪ B2 ≤ₛ A1 ∪ A2 (resp. ≪)",
            scope: Scope::Act,
            names: &["A1", "A2", "B1", "B2"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let subs = c.lat.subacts();
                let mut out = Vec::new();
                for (i, &a1) in subs.iter().enumerate() {
                    for &a2 in &subs[i..] {
                        for b1 in c.lat.below(a1).filter(|&b| b != a1) {
                            for b2 in c.lat.below(a2).filter(|&b| b != a2) {
                                out.push(vec![a1, a2, b1, b2]);
                            }
                        }
                    }
                }
                out
            },
            check: |c, t, _| {
                let (a1, a2, b1, b2) = (t[0], t[1], t[2], t[3]);
                let (l, au, bu) = (&c.lat, a1.union(a2), b1.union(b2));
                let sp = (sup_under(l, a1, b1), sup_under(l, a2, b2), sup_under(l, au, bu));
                let ce = (coess_under(l, a1, b1), coess_under(l, a2, b2), coess_under(l, au, bu));
                fail(
                    implies(sp.0 && sp.1, sp.2) && implies(ce.0 && ce.1, ce.2),
                    json!({
                        "superfluous": [sp.0, sp.1], "union_superfluous": sp.2,
                        "coessential": [ce.0, ce.1], "union_coessential": ce.2,
                    }),
                )
            },
        },
        Claim {
            id: "P3.2",
            statement: "An epimorphic image of a hollow (co-uniform) act is hollow (co-uniform)",
            scope: Scope::Hom,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if_map(c, Hom::is_epi),
            check: |c, _, _| {
                let h = c.hom();
                let (ho, ho_img) = (hollow(&c.lat), hollow(&h.target));
                let (cu, cu_img) = (co_uniform(&c.lat), co_uniform(&h.target));
                fail(
                    implies(ho, ho_img) && implies(cu, cu_img),
                    json!({ "hollow": [ho, ho_img], "co_uniform": [cu, cu_img] }),
                )
            },
        },
        Claim {
            id: "P3.3",
            statement: "Locally cyclic acts are hollow and indecomposable; cyclic acts are locally cyclic and hollow",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let cyc = c.is_cyclic(c.top());
                let lc = c.is_locally_cyclic(c.top());
                let ho = hollow(&c.lat);
                let ind = c.is_indecomposable(c.top());
                fail(
                    implies(lc, ho && ind) && implies(cyc, lc && ho),
                    json!({ "cyclic": cyc, "locally_cyclic": lc, "hollow": ho, "indecomposable": ind }),
                )
            },
        },
        Claim {
            id: "T3.4",
            statement: "A is hollow iff A is indecomposable and co-uniform",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let ho = hollow(&c.lat);
                let ind = c.is_indecomposable(c.top());
                let cu = co_uniform(&c.lat);
                fail(ho == (ind && cu), json!({ "hollow": ho, "indecomposable": ind, "co_uniform": cu }))
            },
        },
        Claim {
            id: "P3.5",
            statement: "A co-uniform act is indecomposable or a coproduct of two simple acts",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if co_uniform(&c.lat) { unit() } else { Vec::new() },
            check: |c, _, _| {
                let comps = c.components(c.top());
                let simple: Vec<bool> = comps.iter().map(|&a| c.within(a).is_simple()).collect();
                let ok = comps.len() == 1 || (comps.len() == 2 && simple.iter().all(|&s| s));
                fail(ok, json!({ "components": comps.len(), "simple": simple }))
            },
        },
        Claim {
            id: "T3.6",
            statement: "A is uniserial iff every subact is hollow iff every subact generated by two elements is hollow",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let subs = c.lat.subacts();
                let uni = subs
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| subs[i + 1..].iter().all(|&y| x.is_subset(y) || y.is_subset(x)));
                let all = subs.iter().all(|&x| hollow(&c.within(x)));
                let n = c.act.size();
                let two = (0..n).all(|a| {
                    (a..n).all(|b| hollow(&c.within(c.act.cyclic(a).union(c.act.cyclic(b)))))
                });
                fail(uni == all && all == two, json!({ "uniserial": uni, "all_hollow": all, "two_generated_hollow": two }))
            },
        },
        Claim {
            id: "P3.7(i)",
            statement: "An indecomposable co-uniform act with a minimal generating set is cyclic",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let premise = c.is_indecomposable(c.top())
                    && co_uniform(&c.lat)
                    && !minimal_generating_sets(&c.act).is_empty();
                if premise { unit() } else { Vec::new() }
            },
            check: |c, _, _| fail(c.is_cyclic(c.top()), json!({ "cyclic": false })),
        },
        Claim {
            id: "P3.7(ii)",
            statement: "A hollow act with a minimal generating set is cyclic",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                if hollow(&c.lat) && !minimal_generating_sets(&c.act).is_empty() { unit() } else { Vec::new() }
            },
            check: |c, _, _| fail(c.is_cyclic(c.top()), json!({ "cyclic": false })),
        },
        Claim {
            id: "P3.7(iii)",
            statement: "A finitely generated hollow act is cyclic",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if hollow(&c.lat) { unit() } else { Vec::new() },
            check: |c, _, _| fail(c.is_cyclic(c.top()), json!({ "cyclic": false })),
        },
        Claim {
            id: "L3.8",
            statement: "A cover of a hollow act is indecomposable",
            scope: Scope::Hom,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let h = c.hom();
                if hollow(&h.target) && is_cover(&h.f).holds { unit() } else { Vec::new() }
            },
            check: |c, _, _| {
                let comps = c.components(c.top());
                fail(comps.len() == 1, json!({ "components": comps.iter().map(|s| s.to_vec()).collect::<Vec<_>>() }))
            },
        },
        Claim {
            id: "L4.2",
            statement: "A cyclic act is simple or local",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if c.is_cyclic(c.top()) { unit() } else { Vec::new() },
            check: |c, _, _| {
                let max = c.lat.maximals().len();
                fail(c.lat.is_simple() || max == 1, json!({ "maximals": max }))
            },
        },
        Claim {
            id: "R4.3",
            statement: "A monoid is a group or local: the non-right-invertible elements are empty or the unique maximal right ideal, and right local agrees with left local",
            scope: Scope::Monoid,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let m = c.act.monoid();
                let r = local_monoid_report(m);
                let n = r.non_invertible;
                let group_ok = n.is_empty() == r.is_group;
                let ideal_ok = n.is_empty() || r.maximal_right_ideals == vec![n];
                let sides_ok = (r.maximal_right_ideals.len() == 1) == (r.maximal_left_ideals.len() == 1);
                fail(
                    group_ok && ideal_ok && sides_ok,
                    json!({
                        "non_invertible": set(n), "is_group": r.is_group,
                        "maximal_right_ideals": r.maximal_right_ideals.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                        "maximal_left_ideals": r.maximal_left_ideals.len(),
                    }),
                )
            },
        },
        Claim {
            id: "T4.4",
            statement: "hollow with a maximal subact / cyclic and local / finitely generated and local / every proper subact under a maximal and local / a superfluous maximal subact / a superfluous maximum subact are equivalent",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let l = &c.lat;
                let max = l.maximals();
                let loc = local(l);
                let v = [
                    hollow(l) && !max.is_empty(),
                    c.is_cyclic(c.top()) && loc,
                    loc,
                    l.proper().all(|p| max.iter().any(|&m| p.is_subset(m))) && loc,
                    max.iter().any(|&m| sup(l, m)),
                    l.proper()
                        .find(|&n| l.proper().all(|p| p.is_subset(n)))
                        .is_some_and(|n| sup(l, n)),
                ];
                fail(v.iter().all(|&x| x == v[0]), json!({ "verdicts": v }))
            },
        },
        Claim {
            id: "L4.5",
            statement: "If aS ∪ C = A then C = A or some maximal subact contains C but not a",
            scope: Scope::Act,
            names: &["aS", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let mut cyclic: Vec<ElemSet> = c.act.cyclic_subacts().to_vec();
                cyclic.sort_unstable();
                cyclic.dedup();
                let mut out = Vec::new();
                for &x in &cyclic {
                    for &cc in c.lat.subacts() {
                        if x.union(cc) == c.top() {
                            out.push(vec![x, cc]);
                        }
                    }
                }
                out
            },
            check: |c, t, _| {
                let (x, cc) = (t[0], t[1]);
                let ok = cc == c.top() || c.lat.maximals().iter().any(|&m| cc.is_subset(m) && !x.is_subset(m));
                fail(ok, json!({ "maximals": c.lat.maximals().iter().map(|s| s.to_vec()).collect::<Vec<_>>() }))
            },
        },
        Claim {
            id: "P4.6",
            statement: "Rad(A) is the union of the superfluous subacts",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let r = rad(&c.lat);
                let u = radical_as_union(&c.lat);
                fail(r == u, json!({ "radical": set(r), "union": set(u) }))
            },
        },
        Claim {
            id: "C4.7(i)",
            statement: "aS ≤ₛ A for every a in Rad(A)",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let bad = rad(&c.lat).iter().find(|&a| !sup(&c.lat, c.act.cyclic(a)));
                bad.map(|a| json!({ "a": a }))
            },
        },
        Claim {
            id: "C4.7(ii)",
            statement: "For a monomorphism f: A → B, f(Rad(A)) ⊆ Rad(B)",
            scope: Scope::Hom,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if_map(c, Hom::is_mono),
            check: |c, _, _| {
                let h = c.hom();
                let image = h.f.image_of(rad(&c.lat));
                let target = rad(&h.target);
                fail(image.is_subset(target), json!({ "image_of_radical": set(image), "radical": set(target) }))
            },
        },
        Claim {
            id: "C4.7(iii)",
            statement: "Rad(A) = A iff every finitely generated subact is superfluous",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let whole = rad(&c.lat) == c.top();
                let all = c.lat.subacts().iter().all(|&b| sup(&c.lat, b));
                fail(whole == all, json!({ "radical_is_whole": whole, "all_superfluous": all }))
            },
        },
        Claim {
            id: "C4.8",
            statement: "Every non-cyclic hollow subact lies in Rad(A)",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.lat.subacts().iter().copied().filter(|&b| hollow(&c.within(b)))),
            check: |c, t, _| {
                let cyclic = c.is_cyclic(t[0]);
                let r = rad(&c.lat);
                fail(cyclic || t[0].is_subset(r), json!({ "radical": set(r) }))
            },
        },
        Claim {
            id: "T4.9",
            statement: "Rad(A) ≤ₛ A iff every proper subact lies in a maximal subact",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let small = sup(&c.lat, rad(&c.lat));
                let max = c.lat.maximals();
                let under = c.lat.proper().all(|p| max.iter().any(|&m| p.is_subset(m)));
                fail(small == under, json!({ "radical_superfluous": small, "proper_under_maximal": under }))
            },
        },
        Claim {
            id: "P4.10",
            statement: "A is finitely generated iff A/Rad(A) is finitely generated and Rad(A) ≤ₛ A",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let small = sup(&c.lat, rad(&c.lat));
                fail(small, json!({ "radical_superfluous": small }))
            },
        },
        Claim {
            id: "L5.2",
            statement: "If A = B ∪ C and B ∩ C ≠ ∅, C is a supplement of B iff C ∩ B = ∅ or C ∩ B ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: true,
            open: Always,
            tuples: |c, r| covering_pairs(c, r).into_iter().filter(|t| !t[0].is_disjoint(t[1])).collect(),
            check: supplement_criterion,
        },
        Claim {
            id: "L5.2/unconditional",
            statement: "If A = B ∪ C, C is a supplement of B iff C ∩ B = ∅ or C ∩ B ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: true,
            open: Always,
            tuples: covering_pairs,
            check: supplement_criterion,
        },
        Claim {
            id: "P5.3",
            statement: "A co-uniform act is supplemented",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: true,
            open: StrictReading,
            tuples: |c, _| if co_uniform(&c.lat) { unit() } else { Vec::new() },
            check: |c, _, r| {
                let missing = supplemented_in(&c.lat, reading_of(r));
                missing.map(|b| json!({ "without_supplement": set(b) }))
            },
        },
        Claim {
            id: "P5.4(i)",
            statement: "If C is a supplement of B and D ∪ C = A for some D ⊆ B, then C is a supplement of D",
            scope: Scope::Act,
            names: &["B", "C", "D"],
            on_target: false,
            reading_dependent: false,
            open: Always,
            tuples: |c, _| {
                let mut out = Vec::new();
                for t in proper_supplement_pairs(c) {
                    for d in c.lat.below(t[0]) {
                        if d.union(t[1]) == c.top() {
                            out.push(vec![t[0], t[1], d]);
                        }
                    }
                }
                out
            },
            check: |c, t, _| {
                let ok = supplement_in(&c.lat, t[2], t[1]).is_ok();
                fail(ok, json!({ "supplement_of_D": ok }))
            },
        },
        Claim {
            id: "P5.4(ii)",
            statement: "If C is a supplement of B in a finitely generated act, C is finitely generated (generated by C outside B)",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| proper_supplement_pairs(c),
            check: |c, t, _| {
                let generated = c.act.closure(t[1].difference(t[0]));
                fail(generated == t[1], json!({ "generated_by_C_minus_B": set(generated) }))
            },
        },
        Claim {
            id: "P5.4(iii)",
            statement: "If C is a supplement of B and E ⊆ C with E ≤ₛ A, then E ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C", "E"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| {
                let mut out = Vec::new();
                for t in proper_supplement_pairs(c) {
                    for e in c.lat.below(t[1]) {
                        out.push(vec![t[0], t[1], e]);
                    }
                }
                out
            },
            check: |c, t, _| {
                let (in_a, in_c) = (sup(&c.lat, t[2]), sup(&c.within(t[1]), t[2]));
                fail(implies(in_a, in_c), json!({ "E_in_A": in_a, "E_in_C": in_c }))
            },
        },
        Claim {
            id: "P5.4(iv)",
            statement: "If C is a supplement of B and N ≤ₛ A, then N ∩ C ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C", "N"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: supplement_with_any,
            check: |c, t, _| {
                let meet = t[2].intersection(t[1]);
                let (in_a, in_c) = (sup(&c.lat, t[2]), sup(&c.within(t[1]), meet));
                fail(implies(in_a, in_c), json!({ "N_in_A": in_a, "meet": set(meet), "meet_in_C": in_c }))
            },
        },
        Claim {
            id: "P5.4(v)",
            statement: "If C is a supplement of B and N ≤ₛ A, then C is a supplement of N ∪ B",
            scope: Scope::Act,
            names: &["B", "C", "N"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: supplement_with_any,
            check: |c, t, _| {
                let small = sup(&c.lat, t[2]);
                let ok = supplement_in(&c.lat, t[2].union(t[0]), t[1]).is_ok();
                fail(implies(small, ok), json!({ "N_in_A": small, "supplement_of_union": ok }))
            },
        },
        Claim {
            id: "P5.4(vi)",
            statement: "If C is a supplement of B, then Rad(C) = C ∩ Rad(A)",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| proper_supplement_pairs(c),
            check: |c, t, _| {
                let rc = rad(&c.within(t[1]));
                let meet = t[1].intersection(rad(&c.lat));
                fail(rc == meet, json!({ "radical_of_C": set(rc), "C_meet_radical": set(meet) }))
            },
        },
        Claim {
            id: "P5.5",
            statement: "If P is projective and C a supplement of B in P, then C is projective or some epimorphism f: P → C has f(B) ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: true,
            open: StrictReading,
            tuples: |c, r| {
                if is_projective(&c.act).holds { supplement_pairs(c, r) } else { Vec::new() }
            },
            check: |c, t, _| {
                let (sub, _) = induced(&c.act, crate::act::Subact::new_unchecked(t[1]));
                if is_projective(&sub).holds {
                    return None;
                }
                let sub_lat = Lattice::of(&sub);
                let epis = homomorphisms(&c.act, &sub).unwrap_or_default();
                let epis: Vec<&Hom> = epis.iter().filter(|f| f.is_epi()).collect();
                let good = epis.iter().any(|f| sup(&sub_lat, f.image_of(t[0])));
                fail(good, json!({ "C_projective": false, "epimorphisms": epis.len() }))
            },
        },
        Claim {
            id: "T5.6",
            statement: "When Rad(A) ≤ₛ A: A is a union of hollow subacts iff every proper B with A/B finitely generated has a supplement iff every maximal subact has a supplement",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: true,
            open: StrictReading,
            tuples: |c, _| if sup(&c.lat, rad(&c.lat)) { unit() } else { Vec::new() },
            check: |c, _, r| {
                let l = &c.lat;
                let union = l
                    .subacts()
                    .iter()
                    .filter(|&&x| hollow(&l.within(x)))
                    .fold(ElemSet::EMPTY, |u, &x| u.union(x));
                let v = [
                    union == l.top(),
                    is_supplemented(l, r),
                    l.maximals().iter().all(|&m| has_supplement(l, m, r)),
                ];
                fail(v[0] == v[1] && v[1] == v[2], json!({ "verdicts": v }))
            },
        },
    ];
    v.extend(oracles());
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

fn supplement_criterion(c: &Ctx, t: &[ElemSet], _: Reading) -> Option<Value> {
    let (b, cc) = (t[0], t[1]);
    let def = supplement_in(&c.lat, b, cc).is_ok();
    let meet = cc.intersection(b);
    let crit = meet.is_empty() || sup(&c.within(cc), meet);
    fail(def == crit, json!({ "supplement": def, "criterion": crit }))
}

/// `[B, C, N]`: `C` a proper supplement of proper `B`, `N` any subact.
fn supplement_with_any(c: &Ctx, _: Reading) -> Vec<Vec<ElemSet>> {
    let mut out = Vec::new();
    for t in proper_supplement_pairs(c) {
        for &n in c.lat.subacts() {
            out.push(vec![t[0], t[1], n]);
        }
    }
    out
}

/// Every union of proper subacts `B_i ⊊ A_i`, one per component `A_i`.
fn component_choices(c: &Ctx) -> Vec<Vec<ElemSet>> {
    let mut acc = vec![ElemSet::EMPTY];
    for a_i in c.components(c.top()) {
        let options: Vec<ElemSet> = c.lat.below(a_i).filter(|&b| b != a_i).collect();
        acc = acc
            .iter()
            .flat_map(|&u| options.iter().map(move |&b| u.union(b)))
            .collect();
    }
    acc.sort_unstable();
    acc.into_iter().filter(|s| !s.is_empty()).map(|s| vec![s]).collect()
}

/// Definitional and characterization implementations that must agree.
fn oracles() -> Vec<Claim> {
    use OpenQuestion::*;
    vec![
        Claim {
            id: "oracle.superfluous",
            statement: "B ≤ₛ A by definition iff B lies in every maximal subact",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.lat.subacts().to_vec()),
            check: |c, t, _| {
                let (def, max) = (sup(&c.lat, t[0]), superfluous_by_maximals(&c.lat, t[0]));
                fail(def == max, json!({ "definition": def, "maximals": max }))
            },
        },
        Claim {
            id: "oracle.coessential",
            statement: "B ≪ A through the cover of A/B iff through the intersection criterion",
            scope: Scope::Act,
            names: &["B"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| each(c.lat.subacts().to_vec()),
            check: |c, t, _| {
                let b = crate::act::Subact::new_unchecked(t[0]);
                let def = is_coessential(&c.act, b).holds;
                let crit = coess(&c.lat, t[0]);
                fail(def == crit, json!({ "definition": def, "criterion": crit }))
            },
        },
        Claim {
            id: "oracle.hollow",
            statement: "hollow by definition iff indecomposable and co-uniform iff simple or cyclic and local",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let v = [is_hollow(&c.act).holds, hollow_by_decomposition(&c.act), hollow_by_locality(&c.act)];
                fail(v[0] == v[1] && v[1] == v[2], json!({ "verdicts": v }))
            },
        },
        Claim {
            id: "oracle.uniserial",
            statement: "uniserial by definition iff every subact hollow iff every two-generated subact hollow",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let v = [
                    is_uniserial(&c.act).holds,
                    uniserial_by_hollow_subacts(&c.act),
                    uniserial_by_two_generated(&c.act),
                ];
                fail(v[0] == v[1] && v[1] == v[2], json!({ "verdicts": v }))
            },
        },
        Claim {
            id: "oracle.radical",
            statement: "the radical as an intersection of maximals equals the union of superfluous subacts",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let r = radical_in(&c.lat);
                let u = radical_as_union(&c.lat);
                fail(r.subset == u, json!({ "radical": set(r.subset), "union": set(u), "is_whole": r.is_whole }))
            },
        },
        Claim {
            id: "oracle.supplement",
            statement: "given B ∪ C = A, C is a supplement of B iff C ∩ B = ∅ or C ∩ B ≤ₛ C",
            scope: Scope::Act,
            names: &["B", "C"],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| covering_pairs(c, Some(SupplementReading::Relaxed)),
            check: |c, t, _| {
                let def = supplement_in(&c.lat, t[0], t[1]).is_ok();
                let crit = supplement_by_criterion(&c.lat, t[0], t[1]);
                fail(def == crit, json!({ "definition": def, "criterion": crit }))
            },
        },
        Claim {
            id: "oracle.projective",
            statement: "components isomorphic to eS iff the free cover splits (acts below four elements)",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |c, _| if c.act.size() < 4 { unit() } else { Vec::new() },
            check: |c, _, _| {
                let by_ideals = is_projective(&c.act).holds;
                match projective_by_splitting(&c.act) {
                    Some(split) => fail(by_ideals == split, json!({ "ideals": by_ideals, "splitting": split })),
                    None => None,
                }
            },
        },
        Claim {
            id: "oracle.cyclic",
            statement: "on finite acts, locally cyclic iff cyclic",
            scope: Scope::Act,
            names: &[],
            on_target: false,
            reading_dependent: false,
            open: No,
            tuples: |_, _| unit(),
            check: |c, _, _| {
                let (cyc, lc) = (c.is_cyclic(c.top()), c.is_locally_cyclic(c.top()));
                fail(cyc == lc, json!({ "cyclic": cyc, "locally_cyclic": lc }))
            },
        },
    ]
}

/// The regular act used as the instance of a monoid-level claim.
pub(crate) fn monoid_instance(m: &crate::monoid::Monoid) -> Ctx {
    Ctx::new(regular(m), None)
}
