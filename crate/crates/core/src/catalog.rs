//! Named families of small monoids.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monoid::Monoid;

/// A recipe for a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidSpec {
    Trivial,
    CyclicGroup(usize),
    /// `<a | a^(index+period) = a^index>`, of size `index + period`.
    CyclicMonoid { index: usize, period: usize },
    ZeroAdjoined(Box<MonoidSpec>),
    /// `{1, r1..rn}` with `xy = y` on the non-identity part.
    RightZeroIdentity(usize),
    /// `{1, l1..ln}` with `xy = x` on the non-identity part.
    LeftZeroIdentity(usize),
    /// `{1..n}` under `min` with an identity `e` adjoined on top.
    MinChain(usize),
    /// All maps of `{0..n-1}`, composed left to right.
    FullTransformation(usize),
    /// A monoid block read from a JSON file.
    Table(String),
}

/// A catalog monoid together with its recipe.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: MonoidSpec,
    pub monoid: Monoid,
}

impl MonoidSpec {
    pub fn build(&self) -> Result<Monoid> {
        match self {
            MonoidSpec::Trivial => Ok(trivial()),
            MonoidSpec::CyclicGroup(n) => {
                if *n == 0 {
                    return Err(Error::Invalid("cyclic_group needs n >= 1".into()));
                }
                Ok(cyclic_group(*n))
            }
            MonoidSpec::CyclicMonoid { index, period } => {
                if *period == 0 || index + period > 255 {
                    return Err(Error::Invalid("cyclic_monoid needs period >= 1".into()));
                }
                Ok(cyclic_monoid(*index, *period))
            }
            MonoidSpec::ZeroAdjoined(base) => Ok(zero_adjoined(&base.build()?)),
            MonoidSpec::RightZeroIdentity(n) => Ok(right_zero_identity(*n)),
            MonoidSpec::LeftZeroIdentity(n) => Ok(left_zero_identity(*n)),
            MonoidSpec::MinChain(n) => Ok(min_chain(*n)),
            MonoidSpec::FullTransformation(n) => {
                if *n == 0 || *n > 3 {
                    return Err(Error::Invalid("full_transformation supports 1..=3".into()));
                }
                Ok(full_transformation(*n))
            }
            MonoidSpec::Table(path) => crate::format::read_monoid_file(path),
        }
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidSpec::Trivial => write!(f, "trivial"),
            MonoidSpec::CyclicGroup(n) => write!(f, "cyclic_group({n})"),
            MonoidSpec::CyclicMonoid { index, period } => write!(f, "cyclic_monoid({index},{period})"),
            MonoidSpec::ZeroAdjoined(b) => write!(f, "zero_adjoined({b})"),
            MonoidSpec::RightZeroIdentity(n) => write!(f, "right_zero_identity({n})"),
            MonoidSpec::LeftZeroIdentity(n) => write!(f, "left_zero_identity({n})"),
            MonoidSpec::MinChain(n) => write!(f, "min_chain({n})"),
            MonoidSpec::FullTransformation(n) => write!(f, "full_transformation({n})"),
            MonoidSpec::Table(p) => write!(f, "table({p})"),
        }
    }
}

impl FromStr for MonoidSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("unrecognised monoid spec `{s}`"));
        match s {
            "trivial" => return Ok(MonoidSpec::Trivial),
            "S2" => return Ok(MonoidSpec::CyclicMonoid { index: 1, period: 1 }),
            "T2" => return Ok(MonoidSpec::FullTransformation(2)),
            "T3" => return Ok(MonoidSpec::FullTransformation(3)),
            _ => {}
        }
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let name = &s[..open];
        let inner = &s[open + 1..s.len() - 1];
        let nums = || -> Result<Vec<usize>> {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let one = || -> Result<usize> {
            match nums()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad()),
            }
        };
        Ok(match name {
            "cyclic_group" => MonoidSpec::CyclicGroup(one()?),
            "cyclic_monoid" => match nums()?.as_slice() {
                [i, p] => MonoidSpec::CyclicMonoid { index: *i, period: *p },
                _ => return Err(bad()),
            },
            "zero_adjoined" => MonoidSpec::ZeroAdjoined(Box::new(inner.parse()?)),
            "right_zero_identity" => MonoidSpec::RightZeroIdentity(one()?),
            "left_zero_identity" => MonoidSpec::LeftZeroIdentity(one()?),
            "min_chain" => MonoidSpec::MinChain(one()?),
            "full_transformation" => MonoidSpec::FullTransformation(one()?),
            "table" => MonoidSpec::Table(inner.to_string()),
            _ => return Err(bad()),
        })
    }
}

/// The desk-scale catalog: every listed family up to size 4, plus `T2` and
/// `T3`, with isomorphic duplicates left out.
pub fn desk_catalog() -> Vec<CatalogEntry> {
    use MonoidSpec::*;
    let specs = vec![
        Trivial,
        CyclicGroup(2),
        CyclicGroup(3),
        CyclicGroup(4),
        CyclicMonoid { index: 1, period: 1 },
        CyclicMonoid { index: 2, period: 1 },
        CyclicMonoid { index: 1, period: 2 },
        CyclicMonoid { index: 3, period: 1 },
        CyclicMonoid { index: 2, period: 2 },
        CyclicMonoid { index: 1, period: 3 },
        ZeroAdjoined(Box::new(CyclicGroup(2))),
        ZeroAdjoined(Box::new(CyclicGroup(3))),
        RightZeroIdentity(2),
        LeftZeroIdentity(2),
        RightZeroIdentity(3),
        LeftZeroIdentity(3),
        MinChain(2),
        MinChain(3),
        FullTransformation(2),
        FullTransformation(3),
    ];
    specs
        .into_iter()
        .map(|spec| {
            let monoid = spec.build().expect("catalog recipes are valid");
            CatalogEntry { spec, monoid }
        })
        .collect()
}

fn labeled(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Monoid {
    Monoid::with_labels(table, identity, labels).expect("catalog recipe yields a monoid")
}

pub fn trivial() -> Monoid {
    labeled(vec![vec![0]], 0, vec!["1".into()])
}

/// `S2 = {1, 0}` with `0` absorbing; element 0 is `1`, element 1 is `0`.
pub fn s2() -> Monoid {
    cyclic_monoid(1, 1)
}

pub fn cyclic_group(n: usize) -> Monoid {
    let table = (0..n).map(|s| (0..n).map(|t| (s + t) % n).collect()).collect();
    let labels = (0..n)
        .map(|k| if k == 0 { "1".to_string() } else { format!("g{k}") })
        .collect();
    labeled(table, 0, labels)
}

pub fn cyclic_monoid(index: usize, period: usize) -> Monoid {
    let n = index + period;
    let reduce = |k: usize| if k < n { k } else { index + (k - index) % period };
    let table = (0..n).map(|s| (0..n).map(|t| reduce(s + t)).collect()).collect();
    let labels = if index == 1 && period == 1 {
        vec!["1".to_string(), "0".to_string()]
    } else {
        (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a{k}"),
            })
            .collect()
    };
    labeled(table, 0, labels)
}

pub fn zero_adjoined(base: &Monoid) -> Monoid {
    let n = base.size();
    let z = n;
    let table = (0..=n)
        .map(|s| {
            (0..=n)
                .map(|t| if s == z || t == z { z } else { base.mul(s, t) })
                .collect()
        })
        .collect();
    let mut labels = base.labels().to_vec();
    labels.push(if labels.iter().any(|l| l == "0") { "z".into() } else { "0".into() });
    labeled(table, base.identity(), labels)
}

fn zero_identity(n: usize, right: bool, prefix: &str) -> Monoid {
    let table = (0..=n)
        .map(|s| {
            (0..=n)
                .map(|t| match (s, t) {
                    (0, t) => t,
                    (s, 0) => s,
                    (s, t) => {
                        if right {
                            t
                        } else {
                            s
                        }
                    }
                })
                .collect()
        })
        .collect();
    let labels = std::iter::once("1".to_string())
        .chain((1..=n).map(|k| format!("{prefix}{k}")))
        .collect();
    labeled(table, 0, labels)
}

pub fn right_zero_identity(n: usize) -> Monoid {
    zero_identity(n, true, "r")
}

pub fn left_zero_identity(n: usize) -> Monoid {
    zero_identity(n, false, "l")
}

/// `{1..n} ∪ {e}` under `min`, `e` above everything. Element 0 is `e`,
/// element `k` is the number `k`.
pub fn min_chain(n: usize) -> Monoid {
    let table = (0..=n)
        .map(|s| {
            (0..=n)
                .map(|t| match (s, t) {
                    (0, t) => t,
                    (s, 0) => s,
                    (s, t) => s.min(t),
                })
                .collect()
        })
        .collect();
    let labels = std::iter::once("e".to_string())
        .chain((1..=n).map(|k| k.to_string()))
        .collect();
    labeled(table, 0, labels)
}

/// All self-maps of `{0..n-1}`; `s*t` applies `s` first. A map is encoded by
/// its image list read as a base-`n` number, least significant digit first.
pub fn full_transformation(n: usize) -> Monoid {
    let count = n.pow(n as u32);
    let decode = |code: usize| -> Vec<usize> {
        let mut c = code;
        (0..n)
            .map(|_| {
                let d = c % n;
                c /= n;
                d
            })
            .collect()
    };
    let encode = |img: &[usize]| img.iter().rev().fold(0, |acc, &d| acc * n + d);
    let maps: Vec<Vec<usize>> = (0..count).map(decode).collect();
    let table = maps
        .iter()
        .map(|s| {
            maps.iter()
                .map(|t| {
                    let st: Vec<usize> = s.iter().map(|&x| t[x]).collect();
                    encode(&st)
                })
                .collect()
        })
        .collect();
    let identity = encode(&(0..n).collect::<Vec<_>>());
    let labels = maps
        .iter()
        .map(|m| m.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    labeled(table, identity, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(s2().size(), 2);
        assert_eq!(cyclic_monoid(2, 2).size(), 4);
        assert_eq!(min_chain(3).size(), 4);
        assert_eq!(full_transformation(2).size(), 4);
        assert_eq!(full_transformation(3).size(), 27);
        assert_eq!(right_zero_identity(2).size(), 3);
        assert_eq!(zero_adjoined(&cyclic_group(2)).size(), 3);
    }

    #[test]
    fn s2_zero_is_absorbing() {
        let m = s2();
        assert_eq!(m.identity(), 0);
        assert_eq!(m.mul(1, 0), 1);
        assert_eq!(m.mul(0, 1), 1);
        assert_eq!(m.mul(1, 1), 1);
        assert_eq!(m.labels(), &["1", "0"]);
    }

    #[test]
    fn transformation_composition_is_left_to_right() {
        let t2 = full_transformation(2);
        let find = |l: &str| t2.labels().iter().position(|x| x == l).unwrap();
        // "10" swaps, "00" is constant 0: swap then const0 = const0; const0 then swap = const1
        assert_eq!(t2.mul(find("10"), find("00")), find("00"));
        assert_eq!(t2.mul(find("00"), find("10")), find("11"));
        assert_eq!(t2.identity(), find("01"));
    }

    #[test]
    fn spec_strings_roundtrip() {
        for e in desk_catalog() {
            let text = e.spec.to_string();
            assert_eq!(text.parse::<MonoidSpec>().unwrap(), e.spec);
        }
        assert_eq!("S2".parse::<MonoidSpec>().unwrap(), MonoidSpec::CyclicMonoid { index: 1, period: 1 });
        assert!("bogus(1)".parse::<MonoidSpec>().is_err());
        assert!("cyclic_monoid(1)".parse::<MonoidSpec>().is_err());
    }

    #[test]
    fn catalog_is_valid_and_pairwise_distinct_by_size_or_table() {
        let cat = desk_catalog();
        assert_eq!(cat.len(), 20);
        for e in &cat {
            assert!(e.monoid.size() <= 4 || matches!(e.spec, MonoidSpec::FullTransformation(3)));
        }
    }
}
