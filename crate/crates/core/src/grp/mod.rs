//! Finite permutation groups small enough to enumerate.
//!
//! Everything here works on the full element list of a group: classes,
//! centralizers, normalizers, Sylow subgroups and quotients are found by
//! direct search. Groups up to a few tens of thousands of elements are fine.

mod classes;
mod construct;
mod group;
mod iso;
mod local;
mod parse;
mod perm;
mod quotient;
mod subgroups;

pub use classes::ConjClassSet;
pub use construct::{
    alternating, cyclic, dihedral, gl23_subgroup, linear_action, psl27, quaternion, semidirect,
    sl23, symmetric, AbelianPGroup, Gl23Subgroup, GL23_SUBGROUPS,
};
pub use group::{Group, DEFAULT_ENUMERATION_BOUND};
pub use iso::IsoType;
pub use local::{local_data, sylow_outer_index, LocalData};
pub use parse::parse_group;
pub use perm::Perm;
pub use quotient::{quotient, Quotient};
pub use subgroups::{
    center, centralizer, has_normal_p_complement, is_simple, normal_closure, normalizer, o_p_prime,
    sylow,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeds the enumeration bound of {bound} elements")]
    ClosureTooLarge { bound: usize },
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("generator degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("subgroup is not contained in the group")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),
    #[error("Sylow {p}-subgroup is nonabelian")]
    NonabelianSylow { p: u64 },
    #[error("bad automorphism data: {0}")]
    BadAction(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// `n` with every factor of `p` removed, and the removed `p`-part.
pub fn split_p_part(mut n: u64, p: u64) -> (u64, u64) {
    let mut pp = 1;
    while n % p == 0 {
        n /= p;
        pp *= p;
    }
    (pp, n)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
