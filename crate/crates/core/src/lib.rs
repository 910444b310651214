//! Minor structure of finite functions `Z_k^n -> Z_k`: subfunctions,
//! identification minors, minor decision diagrams, classification of
//! `P_k^n` by minor complexity and orbits of the restricted affine group.

pub mod canon;
pub mod classify;
pub mod error;
pub mod groups;
pub mod mdd;
pub mod odd;
pub mod partition;
pub mod reduce;
pub mod rse;
pub mod table;
pub mod varset;

pub use canon::{canonical_form, drop_fictive, equivalent, permute_vars, CanonicalForm};
pub use classify::{
    cmr_equivalent, cmr_signature, mnr_equivalent, mnr_signature, nof_equivalent, partition_space,
    partition_space_limited, CmrSignature, MnrSignature, Relation,
};
pub use error::{Error, Result};
pub use groups::{
    apply_affine, apply_output, generators, group_order, orbit_of, orbits, AffineMap, OutputMap,
    SubgroupKind,
};
pub use mdd::{build_mdd, build_mdt, cmr, cmr_uncached, to_dot, CmrCache, Mdd, Mdt};
pub use odd::{build_odd, implementations, Implementation, OrderedDiagram};
pub use partition::{Partition, PartitionClass, DEFAULT_SPACE_LIMIT};
pub use reduce::{
    all_subfunctions, arity_gap, essential_pairs, minor, minors_closure, nof, separable_sets,
    strongly_essential, subfunction, MinorSet, SubfunctionSet,
};
pub use rse::{format_miniterms, parse, RseExpr};
pub use table::{CatalogueCode, FunctionTable};
pub use varset::VarSet;
