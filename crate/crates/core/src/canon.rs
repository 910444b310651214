//! Equality up to renaming variables and adding or removing fictive ones.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{point_of, row_count, CatalogueCode, FunctionTable};

/// `g(a_1, ..., a_n) = f(a_{perm[0]}, ..., a_{perm[n-1]})`.
///
/// `perm` must be a permutation of `0..n`.
pub fn permute_vars(f: &FunctionTable, perm: &[usize]) -> Result<FunctionTable> {
    let n = f.n();
    if perm.len() != n || !is_permutation(perm) {
        return Err(Error::InvalidOrdering);
    }
    Ok(permute_unchecked(f, perm))
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

fn permute_unchecked(f: &FunctionTable, perm: &[usize]) -> FunctionTable {
    let (k, n) = (f.k(), f.n());
    let strides: Vec<usize> = (0..n).map(|i| f.stride(i)).collect();
    let mut point = vec![0u8; n];
    let values = (0..f.rows())
        .map(|idx| {
            point_of(k, idx, &mut point);
            let src: usize = (0..n).map(|i| point[perm[i]] as usize * strides[i]).sum();
            f.values()[src]
        })
        .collect();
    FunctionTable::from_raw(k, n, values)
}

/// Removes every fictive variable, keeping the essential ones in order.
pub fn drop_fictive(f: &FunctionTable) -> FunctionTable {
    let ess: Vec<usize> = f.essential_vars().iter().collect();
    if ess.len() == f.n() {
        return f.clone();
    }
    let k = f.k();
    let strides: Vec<usize> = ess.iter().map(|&i| f.stride(i)).collect();
    let mut point = vec![0u8; ess.len()];
    let values = (0..row_count(k, ess.len()))
        .map(|idx| {
            point_of(k, idx, &mut point);
            let src: usize = point
                .iter()
                .zip(&strides)
                .map(|(&a, &s)| a as usize * s)
                .sum();
            f.values()[src]
        })
        .collect();
    FunctionTable::from_raw(k, ess.len(), values)
}

/// Canonical representative of an `≡`-class: the fictive-free table with the
/// smallest catalogue code over all orderings of its variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    ess: usize,
    table: FunctionTable,
}

impl CanonicalForm {
    pub fn ess(&self) -> usize {
        self.ess
    }

    pub fn table(&self) -> &FunctionTable {
        &self.table
    }

    pub fn into_table(self) -> FunctionTable {
        self.table
    }

    pub fn code(&self) -> CatalogueCode {
        self.table.encode()
    }
}

/// Minimum of `f` over all variable permutations, compared by catalogue code.
///
/// Comparing codes of equal-length tables is the same as comparing the value
/// columns lexicographically, so no big integers are involved.
fn min_over_permutations(f: &FunctionTable) -> FunctionTable {
    let n = f.n();
    if n <= 1 {
        return f.clone();
    }
    let mut best: Option<FunctionTable> = None;
    for perm in (0..n).permutations(n) {
        let g = permute_unchecked(f, &perm);
        if best.as_ref().is_none_or(|b| g.values() < b.values()) {
            best = Some(g);
        }
    }
    best.expect("at least one permutation")
}

pub fn canonical_form(f: &FunctionTable) -> CanonicalForm {
    let reduced = drop_fictive(f);
    let ess = reduced.n();
    CanonicalForm {
        ess,
        table: min_over_permutations(&reduced),
    }
}

/// The relation `≡`.
pub fn equivalent(f: &FunctionTable, g: &FunctionTable) -> Result<bool> {
    if f.k() != g.k() {
        return Err(Error::RadixMismatch(f.k(), g.k()));
    }
    let (a, b) = (drop_fictive(f), drop_fictive(g));
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(a == b || canonical_form(&a) == canonical_form(&b))
}
