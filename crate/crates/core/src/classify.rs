//! Equivalences by minor complexity and their decision procedures.
//!
//! `≃_cmr` is decided through [`CmrSignature`]: for a function with
//! `m >= 2` essential variables the signature is the lexicographically
//! smallest vector, over all relabellings of the variables, of the child
//! signatures of the minors `f_{i<-j}` listed by pair `j < i`. One
//! relabelling aligns every pair at once, so two functions have equal
//! signatures exactly when a single permutation matches all their minors.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;
use itertools::Itertools;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::partition::{partition_by_key, Partition, DEFAULT_SPACE_LIMIT};
use crate::reduce::{identify, minors_closure, nof};
use crate::table::{CatalogueCode, FunctionTable};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CmrSignature {
    /// Functions with `ess <= 1`; the payload is `ess`.
    Base(usize),
    /// Child signatures indexed by pairs `j < i`, minimized over relabellings.
    Node(Arc<[CmrSignature]>),
}

impl CmrSignature {
    pub fn ess(&self) -> usize {
        match self {
            CmrSignature::Base(e) => *e,
            CmrSignature::Node(ch) => {
                // len = m(m-1)/2
                let mut m = 2;
                while m * (m - 1) / 2 < ch.len() {
                    m += 1;
                }
                m
            }
        }
    }
}

impl fmt::Display for CmrSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmrSignature::Base(e) => write!(f, "{e}"),
            CmrSignature::Node(ch) => {
                write!(f, "[")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Shared memo of signatures keyed by canonical form.
#[derive(Debug, Default)]
pub struct SignatureCache {
    map: DashMap<CanonicalForm, CmrSignature>,
}

impl SignatureCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

pub fn cmr_signature(f: &FunctionTable) -> CmrSignature {
    cmr_signature_with(f, &SignatureCache::new())
}

pub fn cmr_signature_with(f: &FunctionTable, cache: &SignatureCache) -> CmrSignature {
    let form = canonical_form(f);
    if form.ess() <= 1 {
        return CmrSignature::Base(form.ess());
    }
    if let Some(sig) = cache.map.get(&form) {
        return sig.clone();
    }
    let sig = node_signature(form.table(), cache);
    cache.map.insert(form, sig.clone());
    sig
}

/// Signature of a table whose variables are all essential.
fn node_signature(g: &FunctionTable, cache: &SignatureCache) -> CmrSignature {
    let m = g.n();
    let mut child = vec![vec![None; m]; m];
    for (j, row) in child.iter_mut().enumerate() {
        for (i, slot) in row.iter_mut().enumerate().skip(j + 1) {
            *slot = Some(cmr_signature_with(&identify(g, i, j), cache));
        }
    }
    let at = |a: usize, b: usize| child[a.min(b)][a.max(b)].as_ref().expect("pair filled");
    let mut best: Option<Vec<&CmrSignature>> = None;
    for sigma in (0..m).permutations(m) {
        let row: Vec<&CmrSignature> = (0..m)
            .flat_map(|j| (j + 1..m).map(move |i| (j, i)))
            .map(|(j, i)| at(sigma[j], sigma[i]))
            .collect();
        if best.as_ref().is_none_or(|b| row < *b) {
            best = Some(row);
        }
    }
    let best = best.expect("m >= 2 has permutations");
    CmrSignature::Node(best.into_iter().cloned().collect())
}

pub fn cmr_equivalent(f: &FunctionTable, g: &FunctionTable) -> Result<bool> {
    same_radix(f, g)?;
    Ok(cmr_signature(f) == cmr_signature(g))
}

/// For each essential arity `m`, the number of `≃_cmr`-classes among the
/// minors of that arity, trailing zeros removed so that comparison is
/// equality of the zero-padded sequences.
///
/// Counting by `≃_cmr` rather than `≡` makes `f ≃_cmr g` imply equal
/// signatures: `x1x2^0` and `x1 ⊕ x2` are distinct under `≡` but share
/// their minor structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MnrSignature(pub Vec<usize>);

impl MnrSignature {
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }
}

pub fn mnr_signature(f: &FunctionTable) -> MnrSignature {
    mnr_signature_with(f, &SignatureCache::new())
}

pub fn mnr_signature_with(f: &FunctionTable, cache: &SignatureCache) -> MnrSignature {
    let minors = minors_closure(f);
    let mut levels: Vec<HashSet<CmrSignature>> = vec![HashSet::new(); minors.by_ess.len()];
    for form in &minors.classes {
        levels[form.ess()].insert(cmr_signature_with(form.table(), cache));
    }
    let mut counts: Vec<usize> = levels.iter().map(HashSet::len).collect();
    while counts.last() == Some(&0) {
        counts.pop();
    }
    MnrSignature(counts)
}

pub fn mnr_equivalent(f: &FunctionTable, g: &FunctionTable) -> Result<bool> {
    same_radix(f, g)?;
    Ok(mnr_signature(f) == mnr_signature(g))
}

/// Catalogue code of the diagonal `nof(f)` in `P_k^1`.
pub fn nof_signature(f: &FunctionTable) -> CatalogueCode {
    nof(f).encode()
}

pub fn nof_equivalent(f: &FunctionTable, g: &FunctionTable) -> Result<bool> {
    same_radix(f, g)?;
    Ok(nof(f) == nof(g))
}

fn same_radix(f: &FunctionTable, g: &FunctionTable) -> Result<()> {
    if f.k() != g.k() {
        Err(Error::RadixMismatch(f.k(), g.k()))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Cmr,
    Mnr,
    Nof,
    /// `≡`: permutation of variables and fictive variables.
    Equiv,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Cmr => "cmr",
            Relation::Mnr => "mnr",
            Relation::Nof => "nof",
            Relation::Equiv => "equiv",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cmr" => Ok(Relation::Cmr),
            "mnr" => Ok(Relation::Mnr),
            "nof" => Ok(Relation::Nof),
            "equiv" => Ok(Relation::Equiv),
            other => Err(format!("unknown relation {other:?} (cmr, mnr, nof, equiv)")),
        }
    }
}

pub fn partition_space(k: usize, n: usize, relation: Relation) -> Result<Partition> {
    partition_space_limited(k, n, relation, DEFAULT_SPACE_LIMIT)
}

pub fn partition_space_limited(
    k: usize,
    n: usize,
    relation: Relation,
    limit: u64,
) -> Result<Partition> {
    let tag = relation.as_str();
    match relation {
        Relation::Cmr => {
            let cache = SignatureCache::new();
            partition_by_key(k, n, tag, limit, |f| cmr_signature_with(f, &cache))
        }
        Relation::Mnr => {
            let cache = SignatureCache::new();
            partition_by_key(k, n, tag, limit, |f| mnr_signature_with(f, &cache))
        }
        Relation::Nof => partition_by_key(k, n, tag, limit, nof),
        Relation::Equiv => partition_by_key(k, n, tag, limit, canonical_form),
    }
}
