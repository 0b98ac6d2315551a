//! `p`-blocks of irreducible characters.
//!
//! Two characters lie in the same block exactly when their central characters
//! `ω_χ(K) = |K|·χ(g_K)/χ(1)` agree modulo a maximal ideal over `p`. The ideal
//! is fixed by [`ResidueEmbedding`] at the exponent of the group, so every
//! class is reduced through one ring homomorphism.

mod residue;

pub use residue::{residue_embedding, ExtElem, ExtField, ResidueEmbedding};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{character_table, CharacterTable, ChartabError, Cyclotomic};
use crate::grp::{
    center, has_normal_p_complement, o_p_prime, quotient, split_p_part, sylow, Group, GroupError,
    IsoType,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error("central character of row {chi} is not integral at class {class}")]
    IntegralityFailure { chi: usize, class: usize },
}

/// `ω_χ` evaluated on every class sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    pub values: Vec<Cyclotomic>,
}

pub fn central_character(
    table: &CharacterTable,
    chi: usize,
) -> Result<CentralCharacter, BlockError> {
    let degree = table.degrees()[chi] as i64;
    let sizes = table.classes().sizes();
    let values = table.chars()[chi]
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.scale(sizes[i] as i64)
                .div_exact(degree)
                .ok_or(BlockError::IntegralityFailure { chi, class: i })
        })
        .collect::<Result<_, _>>()?;
    Ok(CentralCharacter { values })
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Irreducible characters grouped into `p`-blocks.
///
/// Blocks are listed by their smallest character index, so the principal
/// block (the one holding the trivial character, row 0) comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub p: u64,
    pub blocks: Vec<Vec<usize>>,
    pub defects: Vec<u32>,
    pub principal_index: usize,
    /// Height of each character within its block.
    pub heights: Vec<u32>,
    pub block_of: Vec<usize>,
    pub degrees: Vec<u64>,
}

impl BlockPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn k(&self, block: usize) -> usize {
        self.blocks[block].len()
    }

    pub fn k0(&self, block: usize) -> usize {
        self.blocks[block]
            .iter()
            .filter(|&&c| self.heights[c] == 0)
            .count()
    }

    pub fn principal(&self) -> &[usize] {
        &self.blocks[self.principal_index]
    }

    pub fn k_b0(&self) -> usize {
        self.k(self.principal_index)
    }

    pub fn k0_b0(&self) -> usize {
        self.k0(self.principal_index)
    }

    pub fn to_report(&self) -> BlockReport {
        BlockReport {
            p: self.p,
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(b, chars)| BlockEntry {
                    principal: b == self.principal_index,
                    defect: self.defects[b],
                    chars: chars.clone(),
                    degrees: chars.iter().map(|&c| self.degrees[c]).collect(),
                    heights: chars.iter().map(|&c| self.heights[c]).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub p: u64,
    pub blocks: Vec<BlockEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub principal: bool,
    pub defect: u32,
    pub chars: Vec<usize>,
    pub degrees: Vec<u64>,
    pub heights: Vec<u32>,
}

pub fn block_partition(table: &CharacterTable, p: u64) -> Result<BlockPartition, BlockError> {
    let embedding = residue_embedding(table.exponent() as u32, p);
    block_partition_with(table, &embedding)
}

/// Block partition computed through an explicit residue embedding, whose
/// conductor must be a multiple of the table's exponent.
pub fn block_partition_with(
    table: &CharacterTable,
    embedding: &ResidueEmbedding,
) -> Result<BlockPartition, BlockError> {
    let p = embedding.prime();
    let mut keys: Vec<Vec<ExtElem>> = Vec::with_capacity(table.len());
    for chi in 0..table.len() {
        let omega = central_character(table, chi)?;
        keys.push(omega.values.iter().map(|v| embedding.map(v)).collect());
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; table.len()];
    for chi in 0..table.len() {
        if block_of[chi] != usize::MAX {
            continue;
        }
        let b = blocks.len();
        let members: Vec<usize> = (chi..table.len())
            .filter(|&c| keys[c] == keys[chi])
            .collect();
        for &c in &members {
            block_of[c] = b;
        }
        blocks.push(members);
    }

    let a = valuation(table.group_order(), p);
    let degrees = table.degrees().to_vec();
    let defects: Vec<u32> = blocks
        .iter()
        .map(|b| a - b.iter().map(|&c| valuation(degrees[c], p)).min().unwrap())
        .collect();
    let heights = (0..table.len())
        .map(|c| valuation(degrees[c], p) - (a - defects[block_of[c]]))
        .collect();
    Ok(BlockPartition {
        p,
        blocks,
        defects,
        principal_index: block_of[0],
        heights,
        block_of,
        degrees,
    })
}

/// Principal block invariants `(k(B₀), k₀(B₀), defect, Sylow type)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalSummary {
    pub k_b0: usize,
    pub k0_b0: usize,
    pub defect: u32,
    pub sylow_iso: IsoType,
}

pub fn principal_summary(group: &Group, p: u64) -> Result<PrincipalSummary, BlockError> {
    if group.order() % p != 0 {
        return Ok(PrincipalSummary {
            k_b0: 1,
            k0_b0: 1,
            defect: 0,
            sylow_iso: IsoType::Trivial,
        });
    }
    let table = character_table(group)?;
    summary_from_table(group, &table, p)
}

pub fn summary_from_table(
    group: &Group,
    table: &CharacterTable,
    p: u64,
) -> Result<PrincipalSummary, BlockError> {
    let blocks = block_partition(table, p)?;
    Ok(PrincipalSummary {
        k_b0: blocks.k_b0(),
        k0_b0: blocks.k0_b0(),
        defect: blocks.defects[blocks.principal_index],
        sylow_iso: IsoType::of(&sylow(group, p)),
    })
}

/// Outcome of inflating `Irr(G/N)` into `Irr(G)` and comparing principal blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationReport {
    pub p: u64,
    pub k_b0: usize,
    pub k_b0_quotient: usize,
    /// Every inflated character of `G/N` is a row of the table of `G`.
    pub inflation_matches: bool,
    /// Inflated `Irr(B₀(G/N))` lies inside `Irr(B₀(G))`.
    pub inclusion: bool,
    /// Set equality, checked only when `p ∤ |N|`.
    pub equality: Option<bool>,
}

impl DominationReport {
    pub fn passed(&self) -> bool {
        self.inflation_matches && self.inclusion && self.equality.unwrap_or(true)
    }
}

pub fn verify_domination(
    group: &Group,
    normal: &Group,
    p: u64,
) -> Result<DominationReport, BlockError> {
    let q = quotient(group, normal)?;
    let table = character_table(group)?;
    let qtable = character_table(&q.group)?;
    let blocks = block_partition(&table, p)?;
    let qblocks = block_partition(&qtable, p)?;
    let classes = table.classes();

    // class of G/N containing the image of each class representative of G
    let image_class: Vec<usize> = classes
        .reps()
        .iter()
        .map(|r| {
            let gi = group.index_of(r).expect("class rep is an element");
            qtable.classes().class_of_index(q.map[gi])
        })
        .collect();

    let mut inflated_index = Vec::with_capacity(qtable.len());
    for row in qtable.chars() {
        let inflated: Vec<&Cyclotomic> = image_class.iter().map(|&c| &row[c]).collect();
        let found = table
            .chars()
            .iter()
            .position(|r| r.iter().zip(&inflated).all(|(a, b)| a == *b));
        inflated_index.push(found);
    }
    let inflation_matches = inflated_index.iter().all(Option::is_some);
    let principal: std::collections::BTreeSet<usize> = blocks.principal().iter().copied().collect();
    let from_quotient: std::collections::BTreeSet<usize> = qblocks
        .principal()
        .iter()
        .filter_map(|&c| inflated_index[c])
        .collect();
    let inclusion = inflation_matches && from_quotient.is_subset(&principal);
    let equality =
        (normal.order() % p != 0).then(|| inflation_matches && from_quotient == principal);
    Ok(DominationReport {
        p,
        k_b0: blocks.k_b0(),
        k_b0_quotient: qblocks.k_b0(),
        inflation_matches,
        inclusion,
        equality,
    })
}

/// Normal `p`-complement bound and the reduction modulo `O_{p'}(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementReport {
    pub p: u64,
    pub normal_p_complement: bool,
    /// `l(B₀) = 1`, known exactly when a normal `p`-complement exists.
    pub l_b0_is_one: bool,
    pub k_b0: usize,
    pub center_p_part: u64,
    /// `k(B₀) ≥ |Z(G)|_p`, asserted only with a normal `p`-complement.
    pub bound_holds: Option<bool>,
    pub o_p_prime_order: u64,
    pub k_b0_mod_o_p_prime: usize,
    pub domination: DominationReport,
}

impl ComplementReport {
    pub fn passed(&self) -> bool {
        self.bound_holds.unwrap_or(true)
            && self.k_b0 == self.k_b0_mod_o_p_prime
            && self.domination.passed()
    }
}

pub fn lemma31_check(group: &Group, p: u64) -> Result<ComplementReport, BlockError> {
    let npc = has_normal_p_complement(group, p);
    let table = character_table(group)?;
    let k_b0 = block_partition(&table, p)?.k_b0();
    let (center_p_part, _) = split_p_part(center(group).order(), p);
    let opp = o_p_prime(group, p);
    let domination = verify_domination(group, &opp, p)?;
    Ok(ComplementReport {
        p,
        normal_p_complement: npc,
        l_b0_is_one: npc,
        k_b0,
        center_p_part,
        bound_holds: npc.then_some(k_b0 as u64 >= center_p_part),
        o_p_prime_order: opp.order(),
        k_b0_mod_o_p_prime: domination.k_b0_quotient,
        domination,
    })
}
