//! Brute-force reference implementations, written against `evaluate` only.

#![allow(dead_code)]

use itertools::Itertools;
use kminor::FunctionTable;

pub fn points(k: usize, n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .map(|_| 0..k as u8)
        .multi_cartesian_product()
        .collect()
}

pub fn ess_vars(f: &FunctionTable) -> Vec<usize> {
    let (k, n) = (f.k(), f.n());
    (0..n)
        .filter(|&i| {
            points(k, n).iter().any(|p| {
                (0..k as u8).any(|c| {
                    let mut q = p.clone();
                    q[i] = c;
                    f.evaluate(&q).unwrap() != f.evaluate(p).unwrap()
                })
            })
        })
        .collect()
}

pub fn minor(f: &FunctionTable, i: usize, j: usize) -> FunctionTable {
    FunctionTable::from_fn(f.k(), f.n(), |p| {
        let mut q = p.to_vec();
        q[i] = q[j];
        f.evaluate(&q).unwrap()
    })
    .unwrap()
}

pub fn assign(f: &FunctionTable, i: usize, c: u8) -> FunctionTable {
    FunctionTable::from_fn(f.k(), f.n(), |p| {
        let mut q = p.to_vec();
        q[i] = c;
        f.evaluate(&q).unwrap()
    })
    .unwrap()
}

/// The values of `f` on its essential variables, in the order given.
fn restricted(f: &FunctionTable, vars: &[usize]) -> Vec<u8> {
    points(f.k(), vars.len())
        .iter()
        .map(|p| {
            let mut q = vec![0u8; f.n()];
            for (&v, &a) in vars.iter().zip(p) {
                q[v] = a;
            }
            f.evaluate(&q).unwrap()
        })
        .collect()
}

/// `≡` by trying every bijection between the essential sets.
pub fn equivalent(f: &FunctionTable, g: &FunctionTable) -> bool {
    let (ef, eg) = (ess_vars(f), ess_vars(g));
    if ef.len() != eg.len() {
        return false;
    }
    let target = restricted(f, &ef);
    eg.iter()
        .copied()
        .permutations(eg.len())
        .any(|order| restricted(g, &order) == target)
}

fn pairs(vars: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &j) in vars.iter().enumerate() {
        for &i in &vars[a + 1..] {
            out.push((i, j));
        }
    }
    out
}

pub fn cmr(f: &FunctionTable) -> u64 {
    let e = ess_vars(f);
    match e.len() {
        0 | 1 => 1,
        2 => 2,
        _ => pairs(&e)
            .into_iter()
            .map(|(i, j)| cmr(&minor(f, i, j)))
            .sum(),
    }
}

/// `≃_cmr` straight from the definition: a single permutation of the
/// essential positions must align every pair of minors.
pub fn cmr_equivalent(f: &FunctionTable, g: &FunctionTable) -> bool {
    let (ef, eg) = (ess_vars(f), ess_vars(g));
    if ef.len() != eg.len() {
        return false;
    }
    if ef.len() <= 1 {
        return true;
    }
    let m = ef.len();
    (0..m).permutations(m).any(|sigma| {
        (0..m).all(|b| {
            (0..b).all(|a| {
                let fm = minor(f, ef[b], ef[a]);
                let (x, y) = (eg[sigma[a]], eg[sigma[b]]);
                let gm = if x < y {
                    minor(g, y, x)
                } else {
                    minor(g, x, y)
                };
                cmr_equivalent(&fm, &gm)
            })
        })
    })
}

/// All minors reachable by one or more identifications, deduplicated by `≡`.
pub fn minor_classes(f: &FunctionTable) -> Vec<FunctionTable> {
    let mut classes: Vec<FunctionTable> = Vec::new();
    let mut frontier = vec![f.clone()];
    while let Some(g) = frontier.pop() {
        for (i, j) in pairs(&ess_vars(&g)) {
            let h = minor(&g, i, j);
            if !classes.iter().any(|c| equivalent(c, &h)) {
                classes.push(h.clone());
                frontier.push(h);
            }
        }
    }
    classes
}

/// `Sub(f)` by closure under constant assignment to essential variables.
pub fn subfunctions(f: &FunctionTable) -> Vec<FunctionTable> {
    let mut seen = vec![f.clone()];
    let mut idx = 0;
    while idx < seen.len() {
        let g = seen[idx].clone();
        for i in ess_vars(&g) {
            for c in 0..g.k() as u8 {
                let h = assign(&g, i, c);
                if !seen.contains(&h) {
                    seen.push(h);
                }
            }
        }
        idx += 1;
    }
    seen
}

pub fn separable(f: &FunctionTable) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = subfunctions(f)
        .iter()
        .map(ess_vars)
        .filter(|e| !e.is_empty())
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn all_tables(k: usize, n: usize) -> impl Iterator<Item = FunctionTable> {
    let total = (k as u64).pow((k as u32).pow(n as u32));
    (0..total).map(move |c| FunctionTable::from_code_u64(k, n, c).unwrap())
}
