//! Ordered decision diagrams of subfunctions and implementation counts.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::reduce::subfunction;
use crate::table::FunctionTable;

/// One root-to-terminal path: the assignments made, in order, and the
/// constant reached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Implementation {
    pub steps: Vec<(usize, u8)>,
    pub terminal: u8,
}

#[derive(Clone, Debug)]
pub enum OddNode {
    Terminal(u8),
    /// Queries `var`; `children[c]` is the node of `f(x_var = c)`.
    Decision {
        var: usize,
        children: Vec<usize>,
    },
}

/// Reduced ordered diagram: equal subfunctions share a node and variables
/// that are fictive at a node are skipped.
#[derive(Clone, Debug)]
pub struct OrderedDiagram {
    pub ordering: Vec<usize>,
    pub nodes: Vec<OddNode>,
    /// Subfunction labelling each node.
    pub labels: Vec<FunctionTable>,
    pub root: usize,
}

pub fn build_odd(f: &FunctionTable, ordering: &[usize]) -> Result<OrderedDiagram> {
    let ess = f.essential_vars();
    let as_set = ordering.iter().copied().collect();
    if ordering.len() != ess.len() || ess != as_set {
        return Err(Error::InvalidOrdering);
    }
    let mut diagram = OrderedDiagram {
        ordering: ordering.to_vec(),
        nodes: Vec::new(),
        labels: Vec::new(),
        root: 0,
    };
    let mut index = HashMap::new();
    diagram.root = insert(&mut diagram, &mut index, f.clone());
    Ok(diagram)
}

fn insert(
    d: &mut OrderedDiagram,
    index: &mut HashMap<FunctionTable, usize>,
    g: FunctionTable,
) -> usize {
    if let Some(&id) = index.get(&g) {
        return id;
    }
    let next = d.ordering.iter().copied().find(|&v| g.is_essential(v));
    let node = match next {
        None => OddNode::Terminal(g.values()[0]),
        Some(var) => {
            let children = (0..g.k() as u8)
                .map(|c| {
                    let h = subfunction(&g, var, c).expect("variable is essential");
                    insert(d, index, h)
                })
                .collect();
            OddNode::Decision { var, children }
        }
    };
    let id = d.nodes.len();
    d.nodes.push(node);
    d.labels.push(g.clone());
    index.insert(g, id);
    id
}

impl OrderedDiagram {
    pub fn paths(&self) -> Vec<Implementation> {
        let mut out = Vec::new();
        let mut steps = Vec::new();
        self.walk(self.root, &mut steps, &mut out);
        out
    }

    fn walk(&self, v: usize, steps: &mut Vec<(usize, u8)>, out: &mut Vec<Implementation>) {
        match &self.nodes[v] {
            OddNode::Terminal(c) => out.push(Implementation {
                steps: steps.clone(),
                terminal: *c,
            }),
            OddNode::Decision { var, children } => {
                for (c, &child) in children.iter().enumerate() {
                    steps.push((*var, c as u8));
                    self.walk(child, steps, out);
                    steps.pop();
                }
            }
        }
    }
}

/// Distinct implementation sequences over all orderings of the essential
/// variables. Constants have none.
pub fn implementations(f: &FunctionTable) -> BTreeSet<Implementation> {
    let ess: Vec<usize> = f.essential_vars().iter().collect();
    if ess.is_empty() {
        return BTreeSet::new();
    }
    ess.iter()
        .copied()
        .permutations(ess.len())
        .flat_map(|order| {
            build_odd(f, &order)
                .expect("ordering is a permutation of Ess(f)")
                .paths()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rse::parse;

    #[test]
    fn path_counts() {
        let g = parse("x1^0x2 + x1x3", 2, 3).unwrap();
        assert_eq!(build_odd(&g, &[0, 1, 2]).unwrap().paths().len(), 4);
        let f = parse("x1+x2+x3", 2, 3).unwrap();
        assert_eq!(build_odd(&f, &[2, 0, 1]).unwrap().paths().len(), 8);
        let u = parse("x1", 2, 1).unwrap();
        assert_eq!(build_odd(&u, &[0]).unwrap().paths().len(), 2);
    }

    #[test]
    fn bad_orderings() {
        let g = parse("x1x2", 2, 3).unwrap();
        assert!(build_odd(&g, &[0, 1, 2]).is_err());
        assert!(build_odd(&g, &[0, 0]).is_err());
        assert!(build_odd(&g, &[1, 0]).is_ok());
    }

    #[test]
    fn implementation_counts() {
        assert_eq!(implementations(&parse("x1+x2+x3", 2, 3).unwrap()).len(), 48);
        assert_eq!(
            implementations(&parse("x1^0x2 + x1x3", 2, 3).unwrap()).len(),
            28
        );
        assert_eq!(implementations(&parse("x1", 2, 1).unwrap()).len(), 2);
        assert!(implementations(&FunctionTable::constant(2, 2, 1).unwrap()).is_empty());
    }

    #[test]
    fn paths_evaluate_to_their_terminal() {
        let g = parse("x1^0x2 + x1x3", 2, 3).unwrap();
        for imp in implementations(&g) {
            let mut h = g.clone();
            for &(v, c) in &imp.steps {
                h = subfunction(&h, v, c).unwrap();
            }
            assert!(h.is_constant());
            assert_eq!(h.values()[0], imp.terminal);
        }
    }

    #[test]
    fn symmetric_functions_scale_by_orderings() {
        let maj = parse("x1x2 + x1x3 + x2x3", 2, 3).unwrap();
        let one = build_odd(&maj, &[0, 1, 2]).unwrap().paths().len();
        assert_eq!(implementations(&maj).len(), 6 * one);
    }
}
