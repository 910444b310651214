//! Whole-space classifications and their CSV/JSON export.

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{space_size, FunctionTable};

/// Default limit on `k^(k^n)` for whole-space enumeration.
pub const DEFAULT_SPACE_LIMIT: u64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClass {
    /// One-based, in order of the smallest member code.
    pub id: usize,
    pub size: usize,
    pub representative: u64,
    /// Sorted member codes.
    pub members: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub k: usize,
    pub n: usize,
    pub relation: String,
    pub classes: Vec<PartitionClass>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Index into `classes` of the class holding `code`.
    pub fn class_of(&self, code: u64) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.members.binary_search(&code).is_ok())
    }

    /// Maps every code to its class index.
    pub fn labels(&self) -> HashMap<u64, usize> {
        let mut out = HashMap::new();
        for (idx, c) in self.classes.iter().enumerate() {
            for &m in &c.members {
                out.insert(m, idx);
            }
        }
        out
    }

    /// Keeps only members with `f(0, ..., 0) = 0`; class sizes still count
    /// the whole class.
    pub fn zero_preserving(&self) -> Partition {
        let rows = crate::table::row_count(self.k, self.n) as u32;
        let bound = (self.k as u64).pow(rows - 1);
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let members: Vec<u64> = c.members.iter().copied().filter(|&m| m < bound).collect();
                PartitionClass {
                    id: c.id,
                    size: c.size,
                    representative: members.first().copied().unwrap_or(c.representative),
                    members,
                }
            })
            .collect();
        Partition {
            k: self.k,
            n: self.n,
            relation: self.relation.clone(),
            classes,
        }
    }

    /// Columns `class_id,size,representative,members`, members joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["class_id", "size", "representative", "members"])
            .expect("in-memory write");
        for c in &self.classes {
            let members = c
                .members
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                c.id.to_string(),
                c.size.to_string(),
                c.representative.to_string(),
                members,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("partition serializes")
    }
}

/// Checks that `P_k^n` can be enumerated under `limit` and returns its size.
pub fn guard_space(k: usize, n: usize, limit: u64) -> Result<u64> {
    match space_size(k, n) {
        Some(size) if size <= limit => Ok(size),
        _ => Err(Error::SpaceTooLarge { k, n, limit }),
    }
}

/// Groups all of `P_k^n` by `key`. Keys are computed in parallel; grouping
/// walks codes in increasing order, so the result does not depend on
/// scheduling.
pub fn partition_by_key<K, F>(
    k: usize,
    n: usize,
    relation: &str,
    limit: u64,
    key: F,
) -> Result<Partition>
where
    K: Eq + Hash + Send,
    F: Fn(&FunctionTable) -> K + Sync,
{
    let size = guard_space(k, n, limit)?;
    let keys: Vec<K> = (0..size)
        .into_par_iter()
        .map(|code| key(&FunctionTable::from_code_u64(k, n, code).expect("code in range")))
        .collect();
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<u64>> = Vec::new();
    for (code, key) in keys.into_iter().enumerate() {
        let idx = *slot.entry(key).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(code as u64);
    }
    Ok(from_groups(k, n, relation, groups))
}

/// Builds a partition from member lists, sorting members and classes.
pub fn from_groups(k: usize, n: usize, relation: &str, mut groups: Vec<Vec<u64>>) -> Partition {
    for g in &mut groups {
        g.sort_unstable();
    }
    groups.sort_by_key(|g| g[0]);
    let classes = groups
        .into_iter()
        .enumerate()
        .map(|(i, members)| PartitionClass {
            id: i + 1,
            size: members.len(),
            representative: members[0],
            members,
        })
        .collect();
    Partition {
        k,
        n,
        relation: relation.to_string(),
        classes,
    }
}
