//! Minor decomposition trees, minor decision diagrams and the `cmr`
//! complexity.
//!
//! The tree expands every node with `m >= 2` essential variables into its
//! `m(m-1)/2` simple minors `f_{i<-j}`, `j < i`. The diagram merges nodes
//! with `≡`-equivalent labels and counts merged parallel edges as edge
//! multiplicities, so its non-root nodes are exactly the classes of `Mnr(f)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use dashmap::DashMap;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::reduce::{essential_pairs, identify, simple_minor_classes};
use crate::table::FunctionTable;

/// Default node limit for [`build_mdt`].
pub const DEFAULT_MDT_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct MdtNode {
    pub table: FunctionTable,
    pub ess: usize,
    /// `ess(root) - ess(node)`; 0 for the root.
    pub order: usize,
    /// The identification `(i, j)` producing this node from its parent.
    pub pair: Option<(usize, usize)>,
    pub children: Vec<usize>,
}

/// A minor decomposition tree stored as an arena; node 0 is the root.
#[derive(Clone, Debug)]
pub struct Mdt {
    pub nodes: Vec<MdtNode>,
}

impl Mdt {
    pub fn root(&self) -> &MdtNode {
        &self.nodes[0]
    }

    /// Node ids grouped by order; entry `i` lists the order-`i` minors.
    pub fn layers(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (id, node) in self.nodes.iter().enumerate().skip(1) {
            out.entry(node.order).or_default().push(id);
        }
        out
    }

    pub fn leaves(&self) -> impl Iterator<Item = &MdtNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }
}

pub fn build_mdt(f: &FunctionTable) -> Result<Mdt> {
    build_mdt_limited(f, DEFAULT_MDT_LIMIT)
}

pub fn build_mdt_limited(f: &FunctionTable, limit: usize) -> Result<Mdt> {
    let root_ess = f.ess();
    let mut nodes = vec![MdtNode {
        table: f.clone(),
        ess: root_ess,
        order: 0,
        pair: None,
        children: Vec::new(),
    }];
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        let pairs = essential_pairs(&nodes[id].table);
        for (i, j) in pairs {
            if nodes.len() >= limit {
                return Err(Error::TreeTooLarge(limit));
            }
            let table = identify(&nodes[id].table, i, j);
            let ess = table.ess();
            let child = nodes.len();
            nodes.push(MdtNode {
                table,
                ess,
                order: root_ess - ess,
                pair: Some((i, j)),
                children: Vec::new(),
            });
            nodes[id].children.push(child);
            stack.push(child);
        }
    }
    Ok(Mdt { nodes })
}

#[derive(Clone, Debug, Serialize)]
pub struct MddNode {
    pub form: CanonicalForm,
    pub is_root: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MddEdge {
    pub from: usize,
    pub to: usize,
    /// Number of tree edges merged into this one.
    pub multiplicity: usize,
}

/// A minor decision diagram. Nodes are sorted by canonical catalogue code
/// (ties broken by arity) and edges by `(from, to)`.
#[derive(Clone, Debug, Serialize)]
pub struct Mdd {
    pub k: usize,
    pub nodes: Vec<MddNode>,
    pub edges: Vec<MddEdge>,
    pub root: usize,
    /// The class of `nof(f)`; equal to `root` when `ess(f) <= 1`.
    pub terminal: usize,
}

pub fn build_mdd(f: &FunctionTable) -> Mdd {
    let root_form = canonical_form(f);
    let mut forms: Vec<CanonicalForm> = vec![root_form.clone()];
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut cursor = 0;
    while cursor < forms.len() {
        let children = simple_minor_classes(forms[cursor].table());
        for (child, mult) in children {
            let id = *index.entry(child.clone()).or_insert_with(|| {
                forms.push(child);
                forms.len() - 1
            });
            raw_edges.push((cursor, id, mult));
        }
        cursor += 1;
    }

    // Re-number by code so the output does not depend on discovery order.
    let mut order: Vec<usize> = (0..forms.len()).collect();
    order.sort_by(|&a, &b| {
        let (fa, fb) = (&forms[a], &forms[b]);
        (fa.code().code, fa.ess(), a != 0).cmp(&(fb.code().code, fb.ess(), b != 0))
    });
    let mut rank = vec![0usize; forms.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let nodes: Vec<MddNode> = order
        .iter()
        .map(|&old| MddNode {
            form: forms[old].clone(),
            is_root: old == 0,
        })
        .collect();
    let mut edges: Vec<MddEdge> = raw_edges
        .into_iter()
        .map(|(a, b, m)| MddEdge {
            from: rank[a],
            to: rank[b],
            multiplicity: m,
        })
        .collect();
    edges.sort_by_key(|e| (e.from, e.to));
    let root = rank[0];
    let terminal = if root_form.ess() <= 1 {
        root
    } else {
        nodes
            .iter()
            .position(|n| !n.is_root && n.form.ess() <= 1)
            .expect("every chain ends in a unary class")
    };
    Mdd {
        k: f.k(),
        nodes,
        edges,
        root,
        terminal,
    }
}

impl Mdd {
    /// Number of minor classes, i.e. nodes other than the root.
    pub fn mnr(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn children(&self, node: usize) -> impl Iterator<Item = &MddEdge> {
        self.edges.iter().filter(move |e| e.from == node)
    }

    /// `cmr` evaluated bottom-up over the diagram, weighting each child by
    /// its edge multiplicity.
    pub fn cmr(&self) -> u64 {
        fn go(d: &Mdd, v: usize, memo: &mut HashMap<usize, u64>) -> u64 {
            if let Some(&c) = memo.get(&v) {
                return c;
            }
            let c = match d.nodes[v].form.ess() {
                0 | 1 => 1,
                2 => 2,
                _ => d
                    .children(v)
                    .map(|e| e.multiplicity as u64 * go(d, e.to, memo))
                    .sum(),
            };
            memo.insert(v, c);
            c
        }
        go(self, self.root, &mut HashMap::new())
    }
}

/// Renders the diagram as a DOT digraph. Node labels carry the canonical
/// code and arity; edge labels carry multiplicities above one.
pub fn to_dot(mdd: &Mdd) -> String {
    let mut out = String::from("digraph mdd {\n");
    for (id, node) in mdd.nodes.iter().enumerate() {
        let shape = if id == mdd.terminal && !node.is_root {
            "box"
        } else if node.is_root {
            "doublecircle"
        } else {
            "ellipse"
        };
        let prefix = if node.is_root { "f: " } else { "" };
        writeln!(
            out,
            "  n{id} [label=\"{prefix}{}\\ness={}\", shape={shape}];",
            node.form.code(),
            node.form.ess()
        )
        .unwrap();
    }
    for e in &mdd.edges {
        if e.multiplicity > 1 {
            writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from, e.to, e.multiplicity
            )
            .unwrap();
        } else {
            writeln!(out, "  n{} -> n{};", e.from, e.to).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Memo table for `cmr`, keyed by canonical form. Safe to share between
/// threads; concurrent writers store equal values.
#[derive(Debug, Default)]
pub struct CmrCache {
    map: DashMap<CanonicalForm, u64>,
}

impl CmrCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, form: &CanonicalForm) -> Option<u64> {
        self.map.get(form).map(|v| *v)
    }
}

pub fn cmr(f: &FunctionTable) -> u64 {
    cmr_with(f, &CmrCache::new())
}

pub fn cmr_with(f: &FunctionTable, cache: &CmrCache) -> u64 {
    cmr_of_form(&canonical_form(f), cache)
}

pub fn cmr_of_form(form: &CanonicalForm, cache: &CmrCache) -> u64 {
    match form.ess() {
        0 | 1 => return 1,
        2 => return 2,
        _ => {}
    }
    if let Some(v) = cache.get(form) {
        return v;
    }
    let g = form.table();
    let value = essential_pairs(g)
        .into_iter()
        .map(|(i, j)| cmr_with(&identify(g, i, j), cache))
        .sum();
    cache.map.insert(form.clone(), value);
    value
}

/// Plain recursion on full-frame tables, with no canonicalization or
/// memoization.
pub fn cmr_uncached(f: &FunctionTable) -> u64 {
    match f.ess() {
        0 | 1 => 1,
        2 => 2,
        _ => essential_pairs(f)
            .into_iter()
            .map(|(i, j)| cmr_uncached(&identify(f, i, j)))
            .sum(),
    }
}
