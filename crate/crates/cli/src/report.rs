use kminor::reduce::{separable_sets_of, strongly_essential};
use kminor::{
    all_subfunctions, arity_gap, cmr, format_miniterms, implementations, minors_closure, nof,
    FunctionTable,
};
use serde::{Deserialize, Serialize};

/// Every metric of one function. Codes are decimal strings because they
/// outgrow `u64` quickly; variable indices are one-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub k: usize,
    pub n: usize,
    pub code: String,
    /// Only for `k <= 10`.
    pub digits: Option<String>,
    pub rse: String,
    pub ess: usize,
    pub ess_vars: Vec<usize>,
    pub gap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap_reason: Option<String>,
    pub nof_code: String,
    pub cmr: u64,
    pub mnr: usize,
    pub mnr_m: Vec<usize>,
    pub strongly_essential: Vec<usize>,
    pub sub: Option<usize>,
    pub sep: Option<usize>,
    pub separable_sets: Option<Vec<Vec<usize>>>,
    pub imp: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Skip {
    pub imp: bool,
    pub sub: bool,
}

pub fn analyze(f: &FunctionTable, skip: Skip) -> AnalysisReport {
    let (gap, gap_reason) = match arity_gap(f) {
        Ok(g) => (Some(g), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let minors = minors_closure(f);
    let (sub, sep, separable) = if skip.sub {
        (None, None, None)
    } else {
        let subs = all_subfunctions(f);
        let sets = separable_sets_of(&subs);
        let listed = sets.iter().map(|s| s.to_numbers()).collect();
        (Some(subs.len()), Some(sets.len()), Some(listed))
    };
    AnalysisReport {
        k: f.k(),
        n: f.n(),
        code: f.encode().to_string(),
        digits: digits(f),
        rse: format_miniterms(f),
        ess: f.ess(),
        ess_vars: f.essential_vars().to_numbers(),
        gap,
        gap_reason,
        nof_code: nof(f).encode().to_string(),
        cmr: cmr(f),
        mnr: minors.mnr(),
        mnr_m: minors.by_ess,
        strongly_essential: strongly_essential(f).to_numbers(),
        sub,
        sep,
        separable_sets: separable,
        imp: (!skip.imp).then(|| implementations(f).len()),
    }
}

/// Base-k digits of the catalogue code, row 0 first.
pub fn digits(f: &FunctionTable) -> Option<String> {
    (f.k() <= 10).then(|| f.values().iter().map(|&v| char::from(b'0' + v)).collect())
}
