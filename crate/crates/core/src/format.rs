//! The JSON act file format.
//!
//! ```json
//! {
//!   "monoid": { "elements": ["1", "0"], "identity": "1",
//!               "table": [["1", "0"], ["0", "0"]] },
//!   "act":    { "elements": ["1", "0"],
//!               "action": [["1", "0"], ["0", "0"]] },
//!   "subacts": { "I": ["0"] }
//! }
//! ```
//!
//! `table[s][t]` is `s·t`, listed in the order of `elements`. `action[a][s]`
//! is `a·s`, rows following the act's elements and columns following the
//! monoid's. `subacts` is optional. A file may also carry a second act over
//! the same monoid under `target` and a homomorphism into it under `hom`
//! (a map from source labels to target labels).

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::act::{Act, Subact};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::monoid::Monoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidBlock {
    pub elements: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActBlock {
    pub elements: Vec<String>,
    pub action: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActFile {
    pub monoid: MonoidBlock,
    pub act: ActBlock,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subacts: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<ActBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<BTreeMap<String, String>>,
    /// Named subacts of `target`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub target_subacts: BTreeMap<String, Vec<String>>,
}

/// An act file resolved into validated objects.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub monoid: Monoid,
    pub act: Act,
    pub subacts: BTreeMap<String, Subact>,
    pub target: Option<Act>,
    pub hom: Option<Hom>,
    pub target_subacts: BTreeMap<String, Subact>,
}

impl Loaded {
    pub fn subact(&self, name: &str) -> Result<Subact> {
        self.subacts
            .get(name)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("no subact named `{name}`")))
    }
}

fn index_of(labels: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::Invalid(format!("duplicate {what} label `{l}`")));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, usize>, label: &str, what: &str) -> Result<usize> {
    index
        .get(label)
        .copied()
        .ok_or_else(|| Error::Invalid(format!("unknown {what} label `{label}`")))
}

fn resolve_rows(
    rows: &[Vec<String>],
    index: &HashMap<String, usize>,
    expected: (usize, usize),
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    if rows.len() != expected.0 || rows.iter().any(|r| r.len() != expected.1) {
        return Err(Error::BadShape { rows: expected.0, cols: expected.1 });
    }
    rows.iter()
        .map(|r| r.iter().map(|l| lookup(index, l, what)).collect())
        .collect()
}

impl MonoidBlock {
    pub fn from_monoid(m: &Monoid) -> Self {
        let l = m.labels();
        MonoidBlock {
            elements: l.to_vec(),
            identity: l[m.identity()].clone(),
            table: (0..m.size())
                .map(|s| (0..m.size()).map(|t| l[m.mul(s, t)].clone()).collect())
                .collect(),
        }
    }

    pub fn build(&self) -> Result<Monoid> {
        let index = index_of(&self.elements, "monoid")?;
        let n = self.elements.len();
        let table = resolve_rows(&self.table, &index, (n, n), "monoid")?;
        let identity = lookup(&index, &self.identity, "monoid")?;
        Monoid::with_labels(table, identity, self.elements.clone())
    }
}

impl ActBlock {
    pub fn from_act(act: &Act) -> Self {
        let l = act.labels();
        let n = act.monoid().size();
        ActBlock {
            elements: l.to_vec(),
            action: (0..act.size())
                .map(|a| (0..n).map(|s| l[act.act(a, s)].clone()).collect())
                .collect(),
        }
    }

    pub fn build(&self, monoid: &Monoid) -> Result<Act> {
        let index = index_of(&self.elements, "act")?;
        let shape = (self.elements.len(), monoid.size());
        let action = resolve_rows(&self.action, &index, shape, "act")?;
        Act::with_labels(monoid, action, self.elements.clone())
    }
}

impl ActFile {
    pub fn from_act(act: &Act) -> Self {
        ActFile {
            monoid: MonoidBlock::from_monoid(act.monoid()),
            act: ActBlock::from_act(act),
            subacts: BTreeMap::new(),
            target: None,
            hom: None,
            target_subacts: BTreeMap::new(),
        }
    }

    /// Adds a named subset of the act (labels in element order).
    pub fn with_subset(mut self, name: &str, act: &Act, set: ElemSet) -> Self {
        let labels = set.iter().map(|a| act.label(a).to_string()).collect();
        self.subacts.insert(name.to_string(), labels);
        self
    }

    /// Adds a named subset of the target act. Call after [`with_hom`](Self::with_hom).
    pub fn with_target_subset(mut self, name: &str, target: &Act, set: ElemSet) -> Self {
        let labels = set.iter().map(|a| target.label(a).to_string()).collect();
        self.target_subacts.insert(name.to_string(), labels);
        self
    }

    pub fn with_hom(mut self, h: &Hom) -> Self {
        let (s, t) = (h.source(), h.target());
        self.target = Some(ActBlock::from_act(t));
        self.hom = Some(
            (0..s.size())
                .map(|a| (s.label(a).to_string(), t.label(h.apply(a)).to_string()))
                .collect(),
        );
        self
    }

    pub fn load(&self) -> Result<Loaded> {
        let monoid = self.monoid.build()?;
        let act = self.act.build(&monoid)?;
        let index = index_of(act.labels(), "act")?;
        let subacts = named_subacts(&act, &self.subacts, "act")?;
        let target = self.target.as_ref().map(|t| t.build(&monoid)).transpose()?;
        let target_subacts = match &target {
            Some(t) => named_subacts(t, &self.target_subacts, "target")?,
            None if self.target_subacts.is_empty() => BTreeMap::new(),
            None => return Err(Error::Invalid("`target_subacts` needs a `target` act".into())),
        };
        let hom = match (&self.hom, &target) {
            (None, _) => None,
            (Some(_), None) => return Err(Error::Invalid("`hom` needs a `target` act".into())),
            (Some(map), Some(t)) => {
                let t_index = index_of(t.labels(), "target")?;
                let mut images = vec![usize::MAX; act.size()];
                for (from, to) in map {
                    images[lookup(&index, from, "act")?] = lookup(&t_index, to, "target")?;
                }
                if let Some(a) = images.iter().position(|&x| x == usize::MAX) {
                    return Err(Error::Invalid(format!("`hom` misses `{}`", act.label(a))));
                }
                Some(Hom::new(&act, t, images)?)
            }
        };
        Ok(Loaded { monoid, act, subacts, target, hom, target_subacts })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("malformed act file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("act files always serialize")
    }
}

fn named_subacts(
    act: &Act,
    names: &BTreeMap<String, Vec<String>>,
    what: &str,
) -> Result<BTreeMap<String, Subact>> {
    let index = index_of(act.labels(), what)?;
    let mut out = BTreeMap::new();
    for (name, labels) in names {
        let set = labels
            .iter()
            .map(|l| lookup(&index, l, what))
            .collect::<Result<ElemSet>>()?;
        out.insert(name.clone(), act.subact(set)?);
    }
    Ok(out)
}

fn read(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

pub fn read_act_file(path: impl AsRef<Path>) -> Result<Loaded> {
    ActFile::parse(&read(path)?)?.load()
}

/// Reads a monoid from a JSON file holding either a bare monoid block or an
/// object with a `monoid` field (such as an act file).
pub fn read_monoid_file(path: impl AsRef<Path>) -> Result<Monoid> {
    let value: serde_json::Value = serde_json::from_str(&read(path)?)
        .map_err(|e| Error::Invalid(format!("malformed monoid file: {e}")))?;
    let block = value.get("monoid").cloned().unwrap_or(value);
    let block: MonoidBlock = serde_json::from_value(block)
        .map_err(|e| Error::Invalid(format!("malformed monoid block: {e}")))?;
    block.build()
}
