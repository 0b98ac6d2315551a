//! Dade's count `k(B₀) = f + (|P| − 1)/f` for principal blocks with cyclic
//! Sylow subgroup `P` and inertial index `f`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::grp::{prime_factors, split_p_part};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("{0} is not a power of a prime")]
    NotAPrimePower(u64),
    #[error("inertial index {f} must divide p - 1 = {}", .p - 1)]
    BadInertialIndex { f: u64, p: u64 },
}

/// A cyclic Sylow order `|P| = p^a` and inertial index `f | p − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DadeDatum {
    pub p_order: u64,
    pub f: u64,
}

impl DadeDatum {
    pub fn new(p_order: u64, f: u64) -> Result<Self, CyclicError> {
        let p = prime_of(p_order)?;
        if f == 0 || (p - 1) % f != 0 || (p_order - 1) % f != 0 {
            return Err(CyclicError::BadInertialIndex { f, p });
        }
        Ok(DadeDatum { p_order, f })
    }

    pub fn prime(&self) -> u64 {
        prime_factors(self.p_order)[0]
    }

    pub fn k(&self) -> u64 {
        self.f + (self.p_order - 1) / self.f
    }
}

fn prime_of(p_order: u64) -> Result<u64, CyclicError> {
    match prime_factors(p_order).as_slice() {
        [p] if split_p_part(p_order, *p).1 == 1 => Ok(*p),
        _ => Err(CyclicError::NotAPrimePower(p_order)),
    }
}

pub fn dade_k(p_order: u64, f: u64) -> Result<u64, CyclicError> {
    Ok(DadeDatum::new(p_order, f)?.k())
}

/// Every admissible `f` with `dade_k(p_order, f) = k_target`.
pub fn solve_dade(k_target: u64, p_order: u64) -> Result<BTreeSet<u64>, CyclicError> {
    let p = prime_of(p_order)?;
    Ok((1..p)
        .filter(|f| (p - 1) % f == 0)
        .filter(|&f| dade_k(p_order, f) == Ok(k_target))
        .collect())
}
