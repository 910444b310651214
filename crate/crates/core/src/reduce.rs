//! Subfunctions (assigning constants) and identification minors
//! (collapsing variables), with the quantities built from them.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::table::{point_of, row_count, FunctionTable};
use crate::varset::VarSet;

fn check_var(f: &FunctionTable, i: usize) -> Result<()> {
    if i >= f.n() {
        Err(Error::VariableOutOfRange { index: i, n: f.n() })
    } else {
        Ok(())
    }
}

/// `f(x_i = c)` on the full variable frame. `x_i` must be essential.
pub fn subfunction(f: &FunctionTable, i: usize, c: u8) -> Result<FunctionTable> {
    check_var(f, i)?;
    if c as usize >= f.k() {
        return Err(Error::ValueOutOfRange {
            value: c as usize,
            k: f.k(),
        });
    }
    if !f.is_essential(i) {
        return Err(Error::NotEssential(i));
    }
    Ok(assign(f, i, c))
}

fn assign(f: &FunctionTable, i: usize, c: u8) -> FunctionTable {
    let stride = f.stride(i);
    let k = f.k();
    let values = (0..f.rows())
        .map(|idx| {
            let digit = (idx / stride) % k;
            let src = idx - digit * stride + c as usize * stride;
            f.values()[src]
        })
        .collect();
    FunctionTable::from_raw(k, f.n(), values)
}

/// The identification minor `f_{i<-j}`: coordinate `i` is replaced by
/// coordinate `j`. Both variables must be essential and distinct.
pub fn minor(f: &FunctionTable, i: usize, j: usize) -> Result<FunctionTable> {
    check_var(f, i)?;
    check_var(f, j)?;
    if i == j {
        return Err(Error::SameVariable(i));
    }
    for v in [i, j] {
        if !f.is_essential(v) {
            return Err(Error::NotEssential(v));
        }
    }
    Ok(identify(f, i, j))
}

/// `result(a) = f(a with a_i := a_j)`, without precondition checks.
pub(crate) fn identify(f: &FunctionTable, i: usize, j: usize) -> FunctionTable {
    let k = f.k();
    let (si, sj) = (f.stride(i), f.stride(j));
    let values = (0..f.rows())
        .map(|idx| {
            let ai = (idx / si) % k;
            let aj = (idx / sj) % k;
            f.values()[idx - ai * si + aj * si]
        })
        .collect();
    FunctionTable::from_raw(k, f.n(), values)
}

/// All pairs `(i, j)` with `j < i` over the essential variables of `f`.
pub fn essential_pairs(f: &FunctionTable) -> Vec<(usize, usize)> {
    let ess: Vec<usize> = f.essential_vars().iter().collect();
    let mut pairs = Vec::with_capacity(ess.len() * ess.len().saturating_sub(1) / 2);
    for (a, &j) in ess.iter().enumerate() {
        for &i in &ess[a + 1..] {
            pairs.push((i, j));
        }
    }
    pairs
}

/// The diagonal `a -> f(a, ..., a)` as a member of `P_k^1`.
pub fn nof(f: &FunctionTable) -> FunctionTable {
    let k = f.k();
    let mut point = vec![0u8; f.n()];
    let values = (0..k as u8)
        .map(|a| {
            point.fill(a);
            f.evaluate(&point).expect("diagonal point is valid")
        })
        .collect();
    FunctionTable::from_raw(k, 1, values)
}

/// Ways of choosing the next identification in a reduction chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainStrategy {
    /// Lowest `(j, i)` pair first.
    First,
    /// Highest pair first.
    Last,
    /// Identify the larger index into the smaller one of the pair chosen by
    /// a fixed linear congruential sequence seeded with the value.
    Scrambled(u64),
}

/// Follows identification steps chosen by `pick` until at most one
/// essential variable is left, returning the terminal on the full frame.
///
/// `pick` receives the essential pairs `(i, j)` with `j < i` and returns an
/// ordered pair `(i, j)` to apply as `f_{i<-j}`; either orientation of an
/// offered pair is allowed.
pub fn reduce_chain_with(
    f: &FunctionTable,
    mut pick: impl FnMut(&FunctionTable, &[(usize, usize)]) -> (usize, usize),
) -> Result<FunctionTable> {
    let mut cur = f.clone();
    loop {
        let pairs = essential_pairs(&cur);
        if pairs.is_empty() {
            return Ok(cur);
        }
        let (i, j) = pick(&cur, &pairs);
        cur = minor(&cur, i, j)?;
    }
}

/// Terminal of one maximal identification chain. By the unique normal form
/// property the result is `≡` to [`nof`] whatever the strategy.
pub fn normal_form_via_chain(f: &FunctionTable, strategy: ChainStrategy) -> FunctionTable {
    let mut state = match strategy {
        ChainStrategy::Scrambled(seed) => seed,
        _ => 0,
    };
    reduce_chain_with(f, |_, pairs| match strategy {
        ChainStrategy::First => pairs[0],
        ChainStrategy::Last => pairs[pairs.len() - 1],
        ChainStrategy::Scrambled(_) => {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let (i, j) = pairs[(state >> 33) as usize % pairs.len()];
            if state & (1 << 20) != 0 {
                (j, i)
            } else {
                (i, j)
            }
        }
    })
    .expect("chain steps use essential pairs")
}

/// Terminals of every maximal identification chain, in both orientations of
/// every pair (`f_{i<-j}` and `f_{j<-i}`).
pub fn all_chain_terminals(f: &FunctionTable) -> Vec<FunctionTable> {
    fn walk(f: &FunctionTable, out: &mut Vec<FunctionTable>) {
        let pairs = essential_pairs(f);
        if pairs.is_empty() {
            out.push(f.clone());
            return;
        }
        for (i, j) in pairs {
            walk(&identify(f, i, j), out);
            walk(&identify(f, j, i), out);
        }
    }
    let mut out = Vec::new();
    walk(f, &mut out);
    out
}

/// `Sub(f)`: every table reachable by assigning constants to essential
/// variables, `f` included. Members are distinct as tables on the full frame.
#[derive(Clone, Debug)]
pub struct SubfunctionSet {
    pub members: Vec<FunctionTable>,
}

impl SubfunctionSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn all_subfunctions(f: &FunctionTable) -> SubfunctionSet {
    let mut seen: HashSet<FunctionTable> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(f.clone());
    queue.push_back(f.clone());
    while let Some(g) = queue.pop_front() {
        for i in g.essential_vars().iter() {
            for c in 0..g.k() as u8 {
                let h = assign(&g, i, c);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
    }
    let mut members: Vec<_> = seen.into_iter().collect();
    members.sort();
    SubfunctionSet { members }
}

/// `Sep(f)`: essential sets of the non-constant subfunctions, `Ess(f)` included.
pub fn separable_sets(f: &FunctionTable) -> BTreeSet<VarSet> {
    separable_sets_of(&all_subfunctions(f))
}

pub fn separable_sets_of(sub: &SubfunctionSet) -> BTreeSet<VarSet> {
    sub.members
        .iter()
        .map(FunctionTable::essential_vars)
        .filter(|s| !s.is_empty())
        .collect()
}

/// `SEss(f)`: variables some constant assignment removes alone.
pub fn strongly_essential(f: &FunctionTable) -> VarSet {
    let ess = f.essential_vars();
    ess.iter()
        .filter(|&i| (0..f.k() as u8).any(|c| assign(f, i, c).essential_vars() == ess.without(i)))
        .collect()
}

/// `ess(f)` minus the largest essential arity of a simple minor.
///
/// A maximum-arity minor is always a simple one, since further
/// identifications only lower the arity.
pub fn arity_gap(f: &FunctionTable) -> Result<usize> {
    let ess = f.ess();
    if ess < 2 {
        return Err(Error::GapUndefined(ess));
    }
    let best = essential_pairs(f)
        .into_iter()
        .map(|(i, j)| identify(f, i, j).ess())
        .max()
        .expect("ess >= 2 gives a pair");
    Ok(ess - best)
}

/// `Mnr(f)` up to `≡`: every class reachable by one or more identification
/// steps; `f` itself is excluded.
#[derive(Clone, Debug, Serialize)]
pub struct MinorSet {
    pub classes: BTreeSet<CanonicalForm>,
    /// `by_ess[m]` is `mnr_m(f)`.
    pub by_ess: Vec<usize>,
}

impl MinorSet {
    pub fn mnr(&self) -> usize {
        self.classes.len()
    }
}

/// Canonical classes of the simple minors of `f`, with multiplicities.
pub fn simple_minor_classes(f: &FunctionTable) -> BTreeMap<CanonicalForm, usize> {
    let mut out = BTreeMap::new();
    for (i, j) in essential_pairs(f) {
        *out.entry(canonical_form(&identify(f, i, j))).or_insert(0) += 1;
    }
    out
}

pub fn minors_closure(f: &FunctionTable) -> MinorSet {
    let mut classes = BTreeSet::new();
    let mut queue: VecDeque<CanonicalForm> = simple_minor_classes(f).into_keys().collect();
    for c in &queue {
        classes.insert(c.clone());
    }
    while let Some(c) = queue.pop_front() {
        for child in simple_minor_classes(c.table()).into_keys() {
            if classes.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    let mut by_ess = vec![0usize; f.ess().max(1)];
    for c in &classes {
        by_ess[c.ess()] += 1;
    }
    MinorSet { classes, by_ess }
}

/// `a0` on tuples with a repeated coordinate and
/// `coeffs[r]` on the `r`-th all-distinct tuple in row order.
pub fn distinct_family(k: usize, n: usize, a0: u8, coeffs: &[u8]) -> Result<FunctionTable> {
    if n > k {
        return Err(Error::InvalidFamily(format!(
            "n={n} exceeds k={k}: no tuple has pairwise distinct coordinates"
        )));
    }
    let rows = row_count(k, n);
    let mut point = vec![0u8; n];
    let mut values = Vec::with_capacity(rows);
    let mut next = 0usize;
    for idx in 0..rows {
        point_of(k, idx, &mut point);
        let distinct = (0..n).all(|a| (a + 1..n).all(|b| point[a] != point[b]));
        if distinct {
            let c = *coeffs.get(next).ok_or_else(|| {
                Error::InvalidFamily("fewer coefficients than all-distinct tuples".into())
            })?;
            values.push(c);
            next += 1;
        } else {
            values.push(a0);
        }
    }
    if next != coeffs.len() {
        return Err(Error::InvalidFamily(format!(
            "expected {next} coefficients, got {}",
            coeffs.len()
        )));
    }
    if std::iter::once(&a0).chain(coeffs).all(|&c| c == a0) {
        return Err(Error::InvalidFamily(
            "need at least two distinct coefficients".into(),
        ));
    }
    FunctionTable::new(k, n, values)
}

/// Number of all-distinct tuples in `Z_k^n`.
pub fn dis_count(k: usize, n: usize) -> usize {
    (0..n).map(|i| k.saturating_sub(i)).product()
}
