//! The restricted affine group acting on `P_k^n`,
//! `g(x) = f(xA ⊕ c) ⊕ aᵀx ⊕ d`, its named subgroups, output maps `ψ_σ`,
//! and orbit enumeration.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{from_groups, guard_space, Partition, DEFAULT_SPACE_LIMIT};
use crate::table::{point_of, row_count, FunctionTable};

/// `(A, c, a, d)`; `x` is a row vector, so `(xA)_j = Σ_i x_i A[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineMap {
    pub k: usize,
    pub matrix: Vec<Vec<u8>>,
    pub shift: Vec<u8>,
    pub linear: Vec<u8>,
    pub offset: u8,
}

impl AffineMap {
    pub fn identity(k: usize, n: usize) -> AffineMap {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as u8).collect())
            .collect();
        AffineMap {
            k,
            matrix,
            shift: vec![0; n],
            linear: vec![0; n],
            offset: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn with_matrix(mut self, matrix: Vec<Vec<u8>>) -> Self {
        self.matrix = matrix;
        self
    }

    pub fn with_shift(mut self, shift: Vec<u8>) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_linear(mut self, linear: Vec<u8>) -> Self {
        self.linear = linear;
        self
    }

    pub fn with_offset(mut self, d: u8) -> Self {
        self.offset = d;
        self
    }

    /// Shape, entry range and invertibility of `A` over `Z_k`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let k = self.k;
        if self.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self
                    .matrix
                    .iter()
                    .map(Vec::len)
                    .find(|&l| l != n)
                    .unwrap_or(n),
            });
        }
        for v in [&self.shift, &self.linear] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let entries = self
            .matrix
            .iter()
            .flatten()
            .chain(&self.shift)
            .chain(&self.linear)
            .chain(std::iter::once(&self.offset));
        if let Some(&v) = entries.into_iter().find(|&&v| v as usize >= k) {
            return Err(Error::ValueOutOfRange {
                value: v as usize,
                k,
            });
        }
        if gcd(determinant_mod(&self.matrix, k), k as u64) != 1 {
            return Err(Error::SingularMatrix(k));
        }
        Ok(())
    }

    /// The map applying `self` first and `then` second:
    /// `apply(then, apply(self, f)) == apply(self.compose(then), f)`.
    pub fn compose(&self, then: &AffineMap) -> AffineMap {
        let n = self.n();
        let k = self.k as u64;
        let (a1, a2) = (&self.matrix, &then.matrix);
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        ((0..n)
                            .map(|t| a2[i][t] as u64 * a1[t][j] as u64)
                            .sum::<u64>()
                            % k) as u8
                    })
                    .collect()
            })
            .collect();
        let shift = (0..n)
            .map(|j| {
                let s: u64 = (0..n).map(|t| then.shift[t] as u64 * a1[t][j] as u64).sum();
                ((s + self.shift[j] as u64) % k) as u8
            })
            .collect();
        let linear = (0..n)
            .map(|i| {
                let s: u64 = (0..n)
                    .map(|t| a2[i][t] as u64 * self.linear[t] as u64)
                    .sum();
                ((s + then.linear[i] as u64) % k) as u8
            })
            .collect();
        let dot: u64 = (0..n)
            .map(|t| self.linear[t] as u64 * then.shift[t] as u64)
            .sum();
        let offset = ((dot + self.offset as u64 + then.offset as u64) % k) as u8;
        AffineMap {
            k: self.k,
            matrix,
            shift,
            linear,
            offset,
        }
    }

    /// Precomputes the source row and additive output term of every row.
    pub fn action(&self) -> Result<AffineAction> {
        self.validate()?;
        let (k, n) = (self.k, self.n());
        let strides: Vec<usize> = (0..n).map(|i| row_count(k, n - 1 - i)).collect();
        let mut point = vec![0u8; n];
        let rows = row_count(k, n);
        let mut source = Vec::with_capacity(rows);
        let mut add = Vec::with_capacity(rows);
        for idx in 0..rows {
            point_of(k, idx, &mut point);
            let mut src = 0usize;
            for (j, stride) in strides.iter().enumerate() {
                let y: usize = (0..n)
                    .map(|i| point[i] as usize * self.matrix[i][j] as usize)
                    .sum::<usize>()
                    + self.shift[j] as usize;
                src += (y % k) * stride;
            }
            let lin: usize = (0..n)
                .map(|i| point[i] as usize * self.linear[i] as usize)
                .sum();
            source.push(src);
            add.push(((lin + self.offset as usize) % k) as u8);
        }
        Ok(AffineAction { k, n, source, add })
    }
}

/// An affine map compiled against the row order of `P_k^n`.
#[derive(Clone, Debug)]
pub struct AffineAction {
    k: usize,
    n: usize,
    source: Vec<usize>,
    add: Vec<u8>,
}

impl AffineAction {
    pub fn apply(&self, f: &FunctionTable) -> Result<FunctionTable> {
        if f.k() != self.k || f.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: f.n(),
            });
        }
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &FunctionTable) -> FunctionTable {
        let k = self.k as u8 as u16;
        let values = self
            .source
            .iter()
            .zip(&self.add)
            .map(|(&s, &a)| ((f.values()[s] as u16 + a as u16) % k) as u8)
            .collect();
        FunctionTable::from_raw(self.k, self.n, values)
    }

    fn apply_code(&self, code: u64) -> u64 {
        let f = FunctionTable::from_code_u64(self.k, self.n, code).expect("code in range");
        self.apply_unchecked(&f).code_u64().expect("code fits")
    }
}

pub fn apply_affine(m: &AffineMap, f: &FunctionTable) -> Result<FunctionTable> {
    if m.k != f.k() {
        return Err(Error::RadixMismatch(m.k, f.k()));
    }
    if m.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: m.n(),
        });
    }
    m.action()?.apply(f)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant reduced into `0..k`, by fraction-free elimination.
pub fn determinant_mod(matrix: &[Vec<u8>], k: usize) -> u64 {
    let n = matrix.len();
    if n == 0 {
        return 1 % k as u64;
    }
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..n - 1 {
        if m[p][p] == 0 {
            match (p + 1..n).find(|&r| m[r][p] != 0) {
                Some(r) => {
                    m.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            }
        }
        prev = m[p][p];
    }
    (sign * m[n - 1][n - 1]).rem_euclid(k as i128) as u64
}

/// Subgroups of the restricted affine group, by their constraints on
/// `(A, c, a, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubgroupKind {
    /// `A` invertible, everything else free.
    Rag,
    /// `A = P`, `a = 0`.
    Ge,
    /// `A = I`, `a = 0`, `c = 0`.
    Cf,
    /// `A = P`, `a = 0`, `d = 0`.
    G,
    /// `A = I`, `c = 0`, `d = 0`.
    Lf,
    /// `A = I`, `a = 0`, `d = 0`.
    Ca,
    /// `c = 0`, `a = 0`, `d = 0`.
    Lg,
    /// `A = P`, `c = 0`, `a = 0`, `d = 0`.
    S,
}

impl SubgroupKind {
    pub const ALL: [SubgroupKind; 8] = [
        SubgroupKind::Rag,
        SubgroupKind::Ge,
        SubgroupKind::Cf,
        SubgroupKind::G,
        SubgroupKind::Lf,
        SubgroupKind::Ca,
        SubgroupKind::Lg,
        SubgroupKind::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupKind::Rag => "RAG",
            SubgroupKind::Ge => "GE",
            SubgroupKind::Cf => "CF",
            SubgroupKind::G => "G",
            SubgroupKind::Lf => "LF",
            SubgroupKind::Ca => "CA",
            SubgroupKind::Lg => "LG",
            SubgroupKind::S => "S",
        }
    }

    /// Whether `m` satisfies this subgroup's constraints.
    pub fn admits(self, m: &AffineMap) -> bool {
        let zero = |v: &[u8]| v.iter().all(|&x| x == 0);
        let identity = m.matrix == AffineMap::identity(m.k, m.n()).matrix;
        let permutation = is_permutation_matrix(&m.matrix);
        let (c0, a0, d0) = (zero(&m.shift), zero(&m.linear), m.offset == 0);
        let invertible = m.validate().is_ok();
        invertible
            && match self {
                SubgroupKind::Rag => true,
                SubgroupKind::Ge => permutation && a0,
                SubgroupKind::Cf => identity && a0 && c0,
                SubgroupKind::G => permutation && a0 && d0,
                SubgroupKind::Lf => identity && c0 && d0,
                SubgroupKind::Ca => identity && a0 && d0,
                SubgroupKind::Lg => c0 && a0 && d0,
                SubgroupKind::S => permutation && c0 && a0 && d0,
            }
    }
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubgroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SubgroupKind::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group {s:?} (RAG, GE, CF, G, LF, CA, LG, S)"))
    }
}

fn is_permutation_matrix(m: &[Vec<u8>]) -> bool {
    let n = m.len();
    m.iter()
        .all(|r| r.iter().filter(|&&v| v == 1).count() == 1 && r.iter().all(|&v| v <= 1))
        && (0..n).all(|j| m.iter().filter(|r| r[j] == 1).count() == 1)
}

fn transpositions(k: usize, n: usize) -> Vec<AffineMap> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut m = AffineMap::identity(k, n);
            m.matrix.swap(i, i + 1);
            m
        })
        .collect()
}

fn unit_vectors(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..n).map(move |i| (0..n).map(|j| (i == j) as u8).collect())
}

fn argument_shifts(k: usize, n: usize) -> Vec<AffineMap> {
    unit_vectors(n)
        .map(|e| AffineMap::identity(k, n).with_shift(e))
        .collect()
}

fn linear_terms(k: usize, n: usize) -> Vec<AffineMap> {
    unit_vectors(n)
        .map(|e| AffineMap::identity(k, n).with_linear(e))
        .collect()
}

fn output_shift(k: usize, n: usize) -> Vec<AffineMap> {
    vec![AffineMap::identity(k, n).with_offset(1 % k as u8)]
}

/// Elementary matrices `I + E_ij` and unit scalings of the first row,
/// which together with transpositions generate `GL_n(Z_k)`.
fn linear_group(k: usize, n: usize) -> Vec<AffineMap> {
    let mut out = transpositions(k, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = AffineMap::identity(k, n);
                m.matrix[i][j] = 1;
                out.push(m);
            }
        }
    }
    if n > 0 {
        for u in 2..k {
            if gcd(u as u64, k as u64) == 1 {
                let mut m = AffineMap::identity(k, n);
                m.matrix[0][0] = u as u8;
                out.push(m);
            }
        }
    }
    out
}

/// A finite generating set for `kind` acting on `P_k^n`.
pub fn generators(kind: SubgroupKind, k: usize, n: usize) -> Vec<AffineMap> {
    let mut out = Vec::new();
    match kind {
        SubgroupKind::S => out.extend(transpositions(k, n)),
        SubgroupKind::Cf => out.extend(output_shift(k, n)),
        SubgroupKind::Ca => out.extend(argument_shifts(k, n)),
        SubgroupKind::Lf => out.extend(linear_terms(k, n)),
        SubgroupKind::Lg => out.extend(linear_group(k, n)),
        SubgroupKind::G => {
            out.extend(transpositions(k, n));
            out.extend(argument_shifts(k, n));
        }
        SubgroupKind::Ge => {
            out.extend(transpositions(k, n));
            out.extend(argument_shifts(k, n));
            out.extend(output_shift(k, n));
        }
        SubgroupKind::Rag => {
            out.extend(linear_group(k, n));
            out.extend(argument_shifts(k, n));
            out.extend(linear_terms(k, n));
            out.extend(output_shift(k, n));
        }
    }
    out
}

/// Number of distinct maps generated by `generators(kind, k, n)`.
pub fn group_order(kind: SubgroupKind, k: usize, n: usize, limit: usize) -> Result<usize> {
    let gens = generators(kind, k, n);
    let id = AffineMap::identity(k, n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = m.compose(g);
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(Error::TreeTooLarge(limit));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// Orbit partition of `P_k^n` under the subgroup, by union-find over codes.
pub fn orbits(k: usize, n: usize, kind: SubgroupKind) -> Result<Partition> {
    orbits_limited(k, n, kind, DEFAULT_SPACE_LIMIT)
}

pub fn orbits_limited(k: usize, n: usize, kind: SubgroupKind, limit: u64) -> Result<Partition> {
    let gens = generators(kind, k, n);
    orbits_with(k, n, kind.name(), &gens, limit)
}

/// Orbits of the group generated by `gens`. The result is independent of
/// the order of `gens`.
pub fn orbits_with(
    k: usize,
    n: usize,
    tag: &str,
    gens: &[AffineMap],
    limit: u64,
) -> Result<Partition> {
    let size = guard_space(k, n, limit)?;
    let actions = gens
        .iter()
        .map(AffineMap::action)
        .collect::<Result<Vec<_>>>()?;
    let mut uf: UnionFind<u32> = UnionFind::new(size as usize);
    for action in &actions {
        let images: Vec<u64> = (0..size)
            .into_par_iter()
            .map(|code| action.apply_code(code))
            .collect();
        for (code, image) in images.into_iter().enumerate() {
            uf.union(code as u32, image as u32);
        }
    }
    let labels = uf.into_labeling();
    let mut slot = std::collections::HashMap::new();
    let mut groups: Vec<Vec<u64>> = Vec::new();
    for (code, root) in labels.into_iter().enumerate() {
        let idx = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(code as u64);
    }
    Ok(from_groups(k, n, tag, groups))
}

/// The orbit of a single function, by closure under the generators.
pub fn orbit_of(
    f: &FunctionTable,
    kind: SubgroupKind,
    limit: usize,
) -> Result<HashSet<FunctionTable>> {
    let actions = generators(kind, f.k(), f.n())
        .iter()
        .map(AffineMap::action)
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::from([f.clone()]);
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(g) = queue.pop_front() {
        for a in &actions {
            let h = a.apply_unchecked(&g);
            if !seen.contains(&h) {
                if seen.len() >= limit {
                    return Err(Error::TreeTooLarge(limit));
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

/// `ψ_σ`: a total map on `Z_k` applied to function outputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OutputMap(pub Vec<u8>);

impl OutputMap {
    pub fn identity(k: usize) -> Self {
        OutputMap((0..k as u8).collect())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    /// All `k^k` maps `Z_k -> Z_k`.
    pub fn all(k: usize) -> Vec<OutputMap> {
        let total = k.pow(k as u32);
        (0..total)
            .map(|mut code| {
                let mut v = vec![0u8; k];
                for slot in v.iter_mut().rev() {
                    *slot = (code % k) as u8;
                    code /= k;
                }
                OutputMap(v)
            })
            .collect()
    }
}

pub fn apply_output(sigma: &OutputMap, f: &FunctionTable) -> Result<FunctionTable> {
    f.map_values(&sigma.0)
}
