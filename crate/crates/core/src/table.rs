//! Dense truth tables for functions `Z_k^n -> Z_k` and the catalogue codec.
//!
//! Rows are ordered lexicographically with `x1` as the most significant
//! coordinate, so the row of `(a_1, ..., a_n)` is `sum a_i * k^(n-i)`.
//! A catalogue code reads the value column top to bottom as a base-`k`
//! numeral: row 0 is the leading digit.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::varset::VarSet;

/// Largest supported radix; values are stored as bytes.
pub const MAX_RADIX: usize = 255;

/// A function in `P_k^n` stored as its full value column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctionTable {
    k: usize,
    n: usize,
    values: Vec<u8>,
}

fn check_radix(k: usize) -> Result<()> {
    if (2..=MAX_RADIX).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidRadix(k))
    }
}

/// `k^n` as a row count, panicking on absurd sizes.
pub fn row_count(k: usize, n: usize) -> usize {
    k.checked_pow(n as u32)
        .expect("truth table size overflows usize")
}

/// Row index of `point`; `x1` is the most significant coordinate.
pub fn index_of(k: usize, point: &[u8]) -> Result<usize> {
    let mut idx = 0usize;
    for &a in point {
        if a as usize >= k {
            return Err(Error::ValueOutOfRange {
                value: a as usize,
                k,
            });
        }
        idx = idx * k + a as usize;
    }
    Ok(idx)
}

/// Writes the coordinates of row `idx` into `out` (length `n`).
pub fn point_of(k: usize, mut idx: usize, out: &mut [u8]) {
    for slot in out.iter_mut().rev() {
        *slot = (idx % k) as u8;
        idx /= k;
    }
}

impl FunctionTable {
    pub fn new(k: usize, n: usize, values: Vec<u8>) -> Result<Self> {
        check_radix(k)?;
        let expected = row_count(k, n);
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                k,
                n,
                expected,
                got: values.len(),
            });
        }
        if let Some(&v) = values.iter().find(|&&v| v as usize >= k) {
            return Err(Error::ValueOutOfRange {
                value: v as usize,
                k,
            });
        }
        Ok(FunctionTable { k, n, values })
    }

    pub(crate) fn from_raw(k: usize, n: usize, values: Vec<u8>) -> Self {
        debug_assert_eq!(values.len(), row_count(k, n));
        debug_assert!(values.iter().all(|&v| (v as usize) < k));
        FunctionTable { k, n, values }
    }

    pub fn constant(k: usize, n: usize, c: u8) -> Result<Self> {
        check_radix(k)?;
        if c as usize >= k {
            return Err(Error::ValueOutOfRange {
                value: c as usize,
                k,
            });
        }
        Ok(FunctionTable {
            k,
            n,
            values: vec![c; row_count(k, n)],
        })
    }

    /// The projection `x_{i+1}` in `P_k^n`.
    pub fn variable(k: usize, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        Self::from_fn(k, n, |p| p[i])
    }

    /// Tabulates `f` over all points; results are reduced mod `k`.
    pub fn from_fn(k: usize, n: usize, mut f: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        check_radix(k)?;
        let rows = row_count(k, n);
        let mut point = vec![0u8; n];
        let mut values = Vec::with_capacity(rows);
        for idx in 0..rows {
            point_of(k, idx, &mut point);
            values.push((f(&point) as usize % k) as u8);
        }
        Ok(FunctionTable { k, n, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    pub fn rows(&self) -> usize {
        self.values.len()
    }

    /// Distance between rows differing by one in coordinate `i`.
    pub fn stride(&self, i: usize) -> usize {
        row_count(self.k, self.n - 1 - i)
    }

    pub fn evaluate(&self, point: &[u8]) -> Result<u8> {
        if point.len() != self.n {
            return Err(Error::PointArity {
                expected: self.n,
                got: point.len(),
            });
        }
        Ok(self.values[index_of(self.k, point)?])
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    /// Whether changing coordinate `i` alone can change the value.
    pub fn is_essential(&self, i: usize) -> bool {
        if i >= self.n {
            return false;
        }
        let stride = self.stride(i);
        let block = stride * self.k;
        for base in (0..self.values.len()).step_by(block) {
            for off in 0..stride {
                let first = self.values[base + off];
                for c in 1..self.k {
                    if self.values[base + off + c * stride] != first {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn essential_vars(&self) -> VarSet {
        (0..self.n).filter(|&i| self.is_essential(i)).collect()
    }

    pub fn ess(&self) -> usize {
        self.essential_vars().len()
    }

    /// Pointwise `sigma(f)`; `sigma[v]` is the image of `v`.
    pub fn map_values(&self, sigma: &[u8]) -> Result<Self> {
        if sigma.len() != self.k {
            return Err(Error::LengthMismatch {
                k: self.k,
                n: 1,
                expected: self.k,
                got: sigma.len(),
            });
        }
        if let Some(&v) = sigma.iter().find(|&&v| v as usize >= self.k) {
            return Err(Error::ValueOutOfRange {
                value: v as usize,
                k: self.k,
            });
        }
        let values = self.values.iter().map(|&v| sigma[v as usize]).collect();
        Ok(FunctionTable::from_raw(self.k, self.n, values))
    }

    /// `f(0, ..., 0) = 0`.
    pub fn preserves_zero(&self) -> bool {
        self.values[0] == 0
    }

    pub fn encode(&self) -> CatalogueCode {
        let mut code = BigUint::zero();
        for &v in &self.values {
            code = code * self.k + v;
        }
        CatalogueCode {
            k: self.k,
            n: self.n,
            code,
        }
    }

    /// Catalogue code as a machine integer, if it fits.
    pub fn code_u64(&self) -> Option<u64> {
        let mut code = 0u64;
        for &v in &self.values {
            code = code.checked_mul(self.k as u64)?.checked_add(v as u64)?;
        }
        Some(code)
    }

    pub fn from_code_u64(k: usize, n: usize, mut code: u64) -> Result<Self> {
        check_radix(k)?;
        let rows = row_count(k, n);
        let mut values = vec![0u8; rows];
        for slot in values.iter_mut().rev() {
            *slot = (code % k as u64) as u8;
            code /= k as u64;
        }
        if code != 0 {
            return Err(Error::CodeOutOfRange {
                code: "(u64)".into(),
                k,
                n,
            });
        }
        Ok(FunctionTable { k, n, values })
    }
}

impl fmt::Debug for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FunctionTable(k={}, n={}, ", self.k, self.n)?;
        for &v in &self.values {
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The integer whose base-`k` digits are the value column of a function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogueCode {
    pub k: usize,
    pub n: usize,
    pub code: BigUint,
}

impl CatalogueCode {
    pub fn new(k: usize, n: usize, code: BigUint) -> Result<Self> {
        check_radix(k)?;
        let c = CatalogueCode { k, n, code };
        c.decode()?;
        Ok(c)
    }

    pub fn from_u64(k: usize, n: usize, code: u64) -> Result<Self> {
        Self::new(k, n, BigUint::from(code))
    }

    /// Parses a decimal catalogue number.
    pub fn parse_decimal(k: usize, n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let code = BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| Error::InvalidCode(text.to_string()))?;
        Self::new(k, n, code)
    }

    /// Parses the value column written as `k^n` digits, row 0 first.
    pub fn parse_digits(k: usize, n: usize, text: &str) -> Result<Self> {
        check_radix(k)?;
        let text = text.trim();
        if k > 10 {
            return Err(Error::InvalidCode(format!(
                "digit strings need k <= 10, got k={k}"
            )));
        }
        let mut values = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::InvalidCode(text.to_string()))?;
            values.push(d as u8);
        }
        Ok(FunctionTable::new(k, n, values)?.encode())
    }

    pub fn decode(&self) -> Result<FunctionTable> {
        check_radix(self.k)?;
        let rows = row_count(self.k, self.n);
        let mut values = vec![0u8; rows];
        let mut rest = self.code.clone();
        let k = BigUint::from(self.k);
        for slot in values.iter_mut().rev() {
            if rest.is_zero() {
                break;
            }
            let digit = &rest % &k;
            *slot = digit.to_u8().expect("digit below radix");
            rest /= &k;
        }
        if !rest.is_zero() {
            return Err(Error::CodeOutOfRange {
                code: self.code.to_string(),
                k: self.k,
                n: self.n,
            });
        }
        Ok(FunctionTable::from_raw(self.k, self.n, values))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.code.to_u64()
    }
}

impl fmt::Display for CatalogueCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

/// Number of functions in `P_k^n`, if it fits in a `u64`.
pub fn space_size(k: usize, n: usize) -> Option<u64> {
    let rows = (k as u64).checked_pow(n as u32)?;
    (k as u64).checked_pow(u32::try_from(rows).ok()?)
}
