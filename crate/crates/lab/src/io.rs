//! JSON file formats: posets, topology dumps, filter literals and hom files.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use ordlab_core::library::by_name;
use ordlab_core::topology::FiniteTopology;
use ordlab_core::{ElementSet, Error as CoreError, Limits, Poset};
use serde::{Deserialize, Serialize};

use crate::error::{Context, LabError, LabResult};

/// `{"labels": [...], "covers": [[i, j], ...]}`, one pair per Hasse edge `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetFile {
    /// Covers come out sorted, so equal posets serialize identically.
    pub fn from_poset(p: &Poset) -> PosetFile {
        PosetFile {
            labels: p.labels().to_vec(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn build(&self, context: &str, limits: &Limits) -> LabResult<Poset> {
        let (size, limit) = (self.labels.len(), limits.relational_elements);
        if size > limit {
            let err = CoreError::LimitExceeded {
                what: "poset elements",
                size: size as u128,
                limit: limit as u128,
            };
            return Err(LabError::core(context, err));
        }
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Poset::from_covers(self.labels.clone(), &covers).context(context)
    }
}

/// Reads a file argument; `-` is standard input. Returns the text and, for
/// real files, the directory relative references resolve against.
pub fn read_source(arg: &str) -> LabResult<(String, Option<PathBuf>)> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| LabError::Read {
                path: "<stdin>".into(),
                source,
            })?;
        return Ok((text, None));
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|source| LabError::Read {
        path: path.into(),
        source,
    })?;
    Ok((text, path.parent().map(Path::to_path_buf)))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, context: &str) -> LabResult<T> {
    serde_json::from_str(text).map_err(|source| LabError::Json {
        context: context.into(),
        source,
    })
}

pub fn parse_poset(text: &str, context: &str, limits: &Limits) -> LabResult<Poset> {
    parse::<PosetFile>(text, context)?.build(context, limits)
}

/// A poset from a file, standard input, or a library name such as `2^3`,
/// `M3` or `chain4`. An existing file takes precedence over a name.
pub fn load_poset(arg: &str, limits: &Limits) -> LabResult<Poset> {
    load_poset_relative(arg, None, limits)
}

fn load_poset_relative(arg: &str, base: Option<&Path>, limits: &Limits) -> LabResult<Poset> {
    if arg != "-" {
        let path = match base {
            Some(dir) => dir.join(arg),
            None => PathBuf::from(arg),
        };
        if !path.exists() {
            if let Some(named) = by_name(arg, limits) {
                return named.context(arg);
            }
        }
        let (text, _) = read_source(path.to_str().unwrap_or(arg))?;
        return parse_poset(&text, arg, limits);
    }
    let (text, _) = read_source(arg)?;
    parse_poset(&text, "<stdin>", limits)
}

pub fn labels_of(p: &Poset, s: ElementSet) -> Vec<String> {
    s.iter().map(|x| p.label(x).to_string()).collect()
}

fn lookup(p: &Poset, label: &str, context: &str) -> LabResult<usize> {
    p.index_of(label)
        .ok_or_else(|| LabError::malformed(context, format!("unknown label {label:?}")))
}

/// `{"carrier": n, "opens": [[...], ...]}` with each open ascending and the
/// opens in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyDump {
    pub carrier: usize,
    pub opens: Vec<Vec<usize>>,
}

impl TopologyDump {
    pub fn of(t: &FiniteTopology, limits: &Limits) -> LabResult<TopologyDump> {
        let mut opens: Vec<Vec<usize>> = t
            .opens(limits)
            .context("topology")?
            .into_iter()
            .map(|o| o.to_vec())
            .collect();
        opens.sort();
        Ok(TopologyDump {
            carrier: t.carrier_size(),
            opens,
        })
    }
}

/// `{"generator": [labels...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterLiteral {
    pub generator: Vec<String>,
}

impl FilterLiteral {
    pub fn of(p: &Poset, generator: ElementSet) -> FilterLiteral {
        FilterLiteral {
            generator: labels_of(p, generator),
        }
    }
}

/// A generator given either as a filter literal or as comma-separated labels.
pub fn parse_generator(text: &str, p: &Poset) -> LabResult<ElementSet> {
    const CONTEXT: &str = "generator";
    let labels: Vec<String> = if text.trim_start().starts_with('{') {
        parse::<FilterLiteral>(text, CONTEXT)?.generator
    } else {
        text.split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    };
    if labels.is_empty() {
        return Err(LabError::core(CONTEXT, CoreError::EmptyFilter));
    }
    labels.iter().map(|l| lookup(p, l, CONTEXT)).collect()
}

/// Either a library name / relative path, or an inline poset object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetRef {
    Name(String),
    Inline(PosetFile),
}

/// `{"domain": ..., "codomain": ..., "map": {"domainLabel": "codomainLabel"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomFile {
    pub domain: PosetRef,
    pub codomain: PosetRef,
    pub map: BTreeMap<String, String>,
}

/// A hom file with both sides resolved and the map turned into indices.
pub struct LoadedHom {
    pub domain: Poset,
    pub codomain: Poset,
    pub map: Vec<usize>,
}

impl HomFile {
    pub fn inline(domain: &Poset, codomain: &Poset, map: &[usize]) -> HomFile {
        HomFile {
            domain: PosetRef::Inline(PosetFile::from_poset(domain)),
            codomain: PosetRef::Inline(PosetFile::from_poset(codomain)),
            map: map
                .iter()
                .enumerate()
                .map(|(x, &y)| (domain.label(x).to_string(), codomain.label(y).to_string()))
                .collect(),
        }
    }

    pub fn resolve(&self, base: Option<&Path>, limits: &Limits) -> LabResult<LoadedHom> {
        let side = |r: &PosetRef, which: &str| match r {
            PosetRef::Inline(f) => f.build(which, limits),
            PosetRef::Name(n) if n == "-" => Err(LabError::malformed(
                which,
                "standard input cannot be nested",
            )),
            PosetRef::Name(n) => load_poset_relative(n, base, limits),
        };
        let domain = side(&self.domain, "domain")?;
        let codomain = side(&self.codomain, "codomain")?;
        let mut map = vec![usize::MAX; domain.len()];
        for (from, to) in &self.map {
            map[lookup(&domain, from, "map")?] = lookup(&codomain, to, "map")?;
        }
        if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
            return Err(LabError::malformed(
                "map",
                format!("no image for {:?}", domain.label(x)),
            ));
        }
        Ok(LoadedHom {
            domain,
            codomain,
            map,
        })
    }
}

pub fn load_hom(arg: &str, limits: &Limits) -> LabResult<LoadedHom> {
    let (text, base) = read_source(arg)?;
    parse::<HomFile>(&text, arg)?.resolve(base.as_deref(), limits)
}

/// Compact JSON unless `pretty`.
pub fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.expect("output types serialize infallibly")
}
