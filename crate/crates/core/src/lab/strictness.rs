//! Searching the corpus for acts that separate neighbouring properties.

use serde::Serialize;

use crate::act::Act;
use crate::bitset::ElemSet;
use crate::format::ActFile;
use crate::predicates::{supplemented_in, SupplementReading};

use super::corpus::Corpus;
use super::ctx::{co_uniform, coess, hollow, sup, Ctx};

/// The outcome for one non-implication `premise ⇏ conclusion`.
#[derive(Clone, Debug, Serialize)]
pub struct StrictnessEntry {
    pub implication: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monoid: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ActFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const NO_FINITE_WITNESS: &str = "no finite witness in corpus";

struct Target {
    implication: &'static str,
    /// Why the corpus cannot contain a witness, when that is known.
    expected_gap: Option<&'static str>,
    /// A separating subact (named `B`) or the whole act (`Some(None)`).
    test: fn(&Ctx) -> Option<Option<ElemSet>>,
}

fn whole(ok: bool) -> Option<Option<ElemSet>> {
    ok.then_some(None)
}

const TARGETS: &[Target] = &[
    Target {
        implication: "coessential ⇏ superfluous",
        expected_gap: None,
        test: |c| c.lat.subacts().iter().find(|&&b| coess(&c.lat, b) && !sup(&c.lat, b)).map(|&b| Some(b)),
    },
    Target {
        implication: "co-uniform ⇏ hollow",
        expected_gap: None,
        test: |c| whole(co_uniform(&c.lat) && !hollow(&c.lat)),
    },
    Target {
        implication: "indecomposable ⇏ hollow",
        expected_gap: None,
        test: |c| whole(c.is_indecomposable(c.top()) && !hollow(&c.lat)),
    },
    Target {
        implication: "supplemented ⇏ co-uniform",
        expected_gap: None,
        test: |c| {
            let supplemented = SupplementReading::ALL.iter().all(|&r| supplemented_in(&c.lat, r).is_none());
            whole(supplemented && !co_uniform(&c.lat))
        },
    },
    Target {
        implication: "hollow ⇏ locally cyclic",
        expected_gap: Some("finitely generated hollow acts are cyclic, so finite ones are locally cyclic"),
        test: |c| whole(hollow(&c.lat) && !c.is_locally_cyclic(c.top())),
    },
    Target {
        implication: "locally cyclic ⇏ cyclic",
        expected_gap: Some("a finite locally cyclic act is cyclic"),
        test: |c| whole(c.is_locally_cyclic(c.top()) && !c.is_cyclic(c.top())),
    },
];

/// For each non-implication, the first separating act in corpus order (one
/// representative per isomorphism class), or a note when there is none.
pub fn strictness_witness_search(corpus: &Corpus) -> Vec<StrictnessEntry> {
    let mut found: Vec<Option<(String, Act, Option<ElemSet>)>> = vec![None; TARGETS.len()];
    'outer: for (spec, m) in &corpus.monoids {
        for act in corpus.representatives(m) {
            let ctx = Ctx::new(act, None);
            for (slot, t) in found.iter_mut().zip(TARGETS) {
                if slot.is_none() {
                    if let Some(b) = (t.test)(&ctx) {
                        *slot = Some((spec.to_string(), ctx.act.clone(), b));
                    }
                }
            }
            if found.iter().all(Option::is_some) {
                break 'outer;
            }
        }
    }
    TARGETS
        .iter()
        .zip(found)
        .map(|(t, hit)| match hit {
            Some((monoid, act, b)) => {
                let mut file = ActFile::from_act(&act);
                if let Some(b) = b {
                    file = file.with_subset("B", &act, b);
                }
                StrictnessEntry {
                    implication: t.implication.to_string(),
                    found: true,
                    monoid: Some(monoid),
                    witness: Some(file),
                    note: None,
                }
            }
            None => StrictnessEntry {
                implication: t.implication.to_string(),
                found: false,
                monoid: None,
                witness: None,
                note: Some(match t.expected_gap {
                    Some(why) => format!("{NO_FINITE_WITNESS}: {why}"),
                    None => NO_FINITE_WITNESS.to_string(),
                }),
            },
        })
        .collect()
}
