//! Exact ordinary character tables, p-blocks and principal-block invariants
//! of small finite permutation groups, with the partition and cyclic-defect
//! counting that goes with them.

pub mod blocks;
pub mod census;
pub mod chartab;
pub mod cli;
pub mod cyclic;
pub mod grp;
pub mod parts;
