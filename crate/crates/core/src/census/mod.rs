//! Theorem verification over a fixed corpus of small groups.
//!
//! Each corpus group is evaluated at every prime dividing its order. A
//! [`VerdictRecord`] compares the local prediction for `k(B₀) = 6` with the
//! observed principal block; [`SmallBlockRecord`]s do the same for the rows of the
//! small-block table that concern principal blocks.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::{summary_from_table, BlockError, PrincipalSummary};
use crate::chartab::{character_table, CharacterTable, ChartabError};
use crate::grp::{
    alternating, cyclic, dihedral, is_simple, local_data, prime_factors, psl27, quaternion,
    semidirect, sl23, sylow_outer_index, symmetric, AbelianPGroup, Group, GroupError, IsoType,
    LocalData, GL23_SUBGROUPS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error("{0}: construction check failed")]
    Validation(String),
    #[error("no corpus entry named {0}")]
    UnknownGroup(String),
}

/// How a corpus group is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    Quaternion,
    Sl23,
    /// Degree-8 action on the projective line, checked to be simple of order 168.
    Psl27,
    Semidirect {
        base: AbelianPGroup,
        auts: Vec<Vec<Vec<i64>>>,
    },
}

impl Recipe {
    pub fn build(&self) -> Result<Group, CensusError> {
        Ok(match self {
            Recipe::Symmetric(n) => symmetric(*n),
            Recipe::Alternating(n) => alternating(*n),
            Recipe::Cyclic(n) => cyclic(*n),
            Recipe::Dihedral(n) => dihedral(*n),
            Recipe::Quaternion => quaternion(),
            Recipe::Sl23 => sl23(),
            Recipe::Psl27 => {
                let g = psl27();
                if g.order() != 168 || !is_simple(&g) {
                    return Err(CensusError::Validation("psl27".into()));
                }
                g
            }
            Recipe::Semidirect { base, auts } => semidirect(*base, auts)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub description: String,
    pub recipe: Recipe,
}

impl CorpusEntry {
    fn new(name: &str, description: &str, recipe: Recipe) -> Self {
        CorpusEntry {
            name: name.to_string(),
            description: description.to_string(),
            recipe,
        }
    }

    pub fn build(&self) -> Result<Group, CensusError> {
        self.recipe.build()
    }
}

/// Primes tested for a group: the prime divisors of its order.
pub fn primes_to_test(group: &Group) -> Vec<u64> {
    prime_factors(group.order())
}

fn unit(u: i64) -> Vec<Vec<i64>> {
    vec![vec![u]]
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    use Recipe::*;
    let c = |p, k| AbelianPGroup::Cyclic { p, k };
    let mut out = vec![
        CorpusEntry::new("c2", "cyclic group of order 2", Cyclic(2)),
        CorpusEntry::new("c3", "cyclic group of order 3", Cyclic(3)),
        CorpusEntry::new("c4", "cyclic group of order 4", Cyclic(4)),
        CorpusEntry::new(
            "c2c2",
            "Klein four-group C2xC2",
            Semidirect {
                base: AbelianPGroup::Elementary { p: 2 },
                auts: vec![],
            },
        ),
        CorpusEntry::new("c5", "cyclic group of order 5", Cyclic(5)),
        CorpusEntry::new("c6", "cyclic group of order 6", Cyclic(6)),
        CorpusEntry::new("c7", "cyclic group of order 7", Cyclic(7)),
        CorpusEntry::new("s3", "symmetric group of degree 3", Symmetric(3)),
        CorpusEntry::new("d8", "dihedral group of order 8", Dihedral(4)),
        CorpusEntry::new("q8", "quaternion group of order 8", Quaternion),
        CorpusEntry::new(
            "sd16",
            "semidihedral group of order 16",
            Semidirect {
                base: c(2, 3),
                auts: vec![unit(3)],
            },
        ),
        CorpusEntry::new("a4", "alternating group of degree 4", Alternating(4)),
        CorpusEntry::new("sl23", "SL(2,3) acting on nonzero vectors of F_3^2", Sl23),
        CorpusEntry::new(
            "c5c4",
            "C5 x| C4, faithful action",
            Semidirect {
                base: c(5, 1),
                auts: vec![unit(2)],
            },
        ),
        CorpusEntry::new(
            "c7c3",
            "C7 x| C3, faithful action",
            Semidirect {
                base: c(7, 1),
                auts: vec![unit(2)],
            },
        ),
        CorpusEntry::new(
            "c7c6",
            "C7 x| C6, the holomorph of C7",
            Semidirect {
                base: c(7, 1),
                auts: vec![unit(3)],
            },
        ),
        CorpusEntry::new("psl27", "PSL(2,7) on the projective line over F_7", Psl27),
        CorpusEntry::new(
            "c9",
            "cyclic group of order 9",
            Semidirect {
                base: c(3, 2),
                auts: vec![],
            },
        ),
        CorpusEntry::new(
            "c9xc2",
            "C9 x| C2, C2 acting by inversion",
            Semidirect {
                base: c(3, 2),
                auts: vec![unit(-1)],
            },
        ),
    ];
    for sub in GL23_SUBGROUPS {
        out.push(CorpusEntry::new(
            &format!("c3c3_{}", sub.slug),
            &format!("(C3xC3) x| A for the GL(2,3) subgroup A = {}", sub.slug),
            Semidirect {
                base: AbelianPGroup::Elementary { p: 3 },
                auts: sub.matrices(),
            },
        ));
    }
    for n in 1..=7 {
        out.push(CorpusEntry::new(
            &format!("sym{n}"),
            &format!("symmetric group of degree {n}"),
            Symmetric(n),
        ));
    }
    for n in 3..=7 {
        out.push(CorpusEntry::new(
            &format!("alt{n}"),
            &format!("alternating group of degree {n}"),
            Alternating(n),
        ));
    }
    out
}

pub fn find_builtin(name: &str) -> Result<CorpusEntry, CensusError> {
    builtin_corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CensusError::UnknownGroup(name.to_string()))
}

/// One group and prime checked against the local characterization of `k(B₀) = 6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub group: String,
    pub p: u64,
    pub order: u64,
    pub class_count: usize,
    pub kb0: usize,
    pub k0b0: usize,
    pub sylow_order: u64,
    pub sylow_iso: String,
    /// `N_G(P)/C_G(P)`, when `P` is abelian.
    pub local_iso: Option<String>,
    pub fixed_point_free: Option<bool>,
    pub theorem_b_predicted: bool,
    pub theorem_b_observed: bool,
    pub agree: bool,
}

/// Local data at `p`, or `None` when the Sylow subgroup is nonabelian.
fn abelian_local(group: &Group, p: u64) -> Result<Option<LocalData>, CensusError> {
    match local_data(group, p) {
        Ok(l) => Ok(Some(l)),
        Err(GroupError::NonabelianSylow { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Whether the local structure at `p` is one of the two configurations
/// giving six characters in the principal block.
pub fn six_character_condition(sylow_iso: &IsoType, local: Option<&LocalData>) -> bool {
    let Some(l) = local else { return false };
    match sylow_iso {
        IsoType::C9 => l.inertial_index() == 2,
        IsoType::C3xC3 => {
            matches!(l.iso, IsoType::C4 | IsoType::Q8)
                || (l.iso == IsoType::C2 && l.fixed_point_free)
        }
        _ => false,
    }
}

fn verdict(
    name: &str,
    group: &Group,
    table: &CharacterTable,
    p: u64,
    summary: &PrincipalSummary,
    local: Option<&LocalData>,
) -> VerdictRecord {
    let predicted = six_character_condition(&summary.sylow_iso, local);
    let observed = summary.k_b0 == 6;
    VerdictRecord {
        group: name.to_string(),
        p,
        order: group.order(),
        class_count: table.len(),
        kb0: summary.k_b0,
        k0b0: summary.k0_b0,
        sylow_order: p.pow(summary.defect),
        sylow_iso: summary.sylow_iso.to_string(),
        local_iso: local.map(|l| l.iso.to_string()),
        fixed_point_free: local.map(|l| l.fixed_point_free),
        theorem_b_predicted: predicted,
        theorem_b_observed: observed,
        agree: predicted == observed,
    }
}

pub fn theorem_b_verify(name: &str, group: &Group, p: u64) -> Result<VerdictRecord, CensusError> {
    let table = character_table(group)?;
    verdict_with_table(name, group, &table, p)
}

fn verdict_with_table(
    name: &str,
    group: &Group,
    table: &CharacterTable,
    p: u64,
) -> Result<VerdictRecord, CensusError> {
    let summary = summary_from_table(group, table, p)?;
    let local = abelian_local(group, p)?;
    Ok(verdict(name, group, table, p, &summary, local.as_ref()))
}

/// Whether a row of the small-block table is an equivalence or only a
/// sufficient condition in the form checked here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    Iff,
    If,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallBlockRecord {
    pub row: usize,
    pub kind: RowKind,
    pub group: String,
    pub p: u64,
    pub kb0: usize,
    pub sylow_iso: String,
    /// `|N_G(P) : P·C_G(P)|`.
    pub outer_index: u64,
    pub condition: bool,
    pub observed: bool,
    pub agree: bool,
}

/// Principal-block rows `k(B₀) = 1, …, 7` of the small-block table.
pub const PRINCIPAL_ROWS: std::ops::RangeInclusive<usize> = 1..=7;

/// The local condition of a principal-block row, in terms of the Sylow type,
/// `|N_G(P) : P·C_G(P)|` and the local data for abelian `P`.
pub fn row_condition(
    row: usize,
    sylow_iso: &IsoType,
    outer: u64,
    local: Option<&LocalData>,
) -> bool {
    use IsoType::*;
    match row {
        1 => *sylow_iso == Trivial,
        2 => *sylow_iso == C2,
        3 => *sylow_iso == C3,
        4 => matches!(sylow_iso, C2xC2 | C4) || (*sylow_iso == C5 && outer == 2),
        5 => match sylow_iso {
            C5 => outer == 1 || outer == 4,
            C7 => outer == 2 || outer == 3,
            D8 => true,
            Q8 => outer == 1,
            _ => false,
        },
        6 => six_character_condition(sylow_iso, local),
        7 => *sylow_iso == C7 && outer == 6,
        _ => false,
    }
}

fn row_kind(row: usize) -> RowKind {
    // the k(B₀) = 7 row also fixes l(B₀), which is not computed here
    if row == 7 {
        RowKind::If
    } else {
        RowKind::Iff
    }
}

fn row_records_with(
    name: &str,
    group: &Group,
    p: u64,
    summary: &PrincipalSummary,
    local: Option<&LocalData>,
) -> Vec<SmallBlockRecord> {
    let outer = sylow_outer_index(group, p);
    PRINCIPAL_ROWS
        .map(|row| {
            let kind = row_kind(row);
            let condition = row_condition(row, &summary.sylow_iso, outer, local);
            let observed = summary.k_b0 == row;
            let agree = match kind {
                RowKind::Iff => condition == observed,
                RowKind::If => !condition || observed,
            };
            SmallBlockRecord {
                row,
                kind,
                group: name.to_string(),
                p,
                kb0: summary.k_b0,
                sylow_iso: summary.sylow_iso.to_string(),
                outer_index: outer,
                condition,
                observed,
                agree,
            }
        })
        .collect()
}

/// Table rows checked for one group at one prime.
pub fn row_records(
    name: &str,
    group: &Group,
    p: u64,
) -> Result<Vec<SmallBlockRecord>, CensusError> {
    let table = character_table(group)?;
    let summary = summary_from_table(group, &table, p)?;
    let local = abelian_local(group, p)?;
    Ok(row_records_with(name, group, p, &summary, local.as_ref()))
}

/// Named witnesses for the principal-block rows, with the prime each is read at.
pub const ROW_WITNESSES: [(&str, u64); 16] = [
    ("c2", 2),
    ("s3", 3),
    ("c3", 3),
    ("c2c2", 2),
    ("c4", 2),
    ("alt5", 5),
    ("c5", 5),
    ("c5c4", 5),
    ("c7c3", 7),
    ("d8", 2),
    ("q8", 2),
    ("sl23", 2),
    ("psl27", 7),
    ("c9xc2", 3),
    ("c3c3_q8", 3),
    ("c7c6", 7),
];

pub fn table1_verify() -> Result<Vec<SmallBlockRecord>, CensusError> {
    let per: Vec<Vec<SmallBlockRecord>> = ROW_WITNESSES
        .par_iter()
        .map(|&(name, p)| row_records(name, &find_builtin(name)?.build()?, p))
        .collect::<Result<_, _>>()?;
    Ok(per.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub verdicts: Vec<VerdictRecord>,
    pub rows: Vec<SmallBlockRecord>,
}

impl CensusReport {
    pub fn all_agree(&self) -> bool {
        self.verdicts.iter().all(|v| v.agree) && self.rows.iter().all(|r| r.agree)
    }

    /// Records where `k(B₀) = 6` without `|P| = 9`.
    pub fn six_without_order_nine(&self) -> Vec<&VerdictRecord> {
        self.verdicts
            .iter()
            .filter(|v| v.kb0 == 6 && v.sylow_order != 9)
            .collect()
    }

    pub fn disagreements(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.agree).count()
            + self.rows.iter().filter(|r| !r.agree).count()
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<12} {:>2} {:>6} {:>4} {:>4} {:>4} {:<8} {:<8} {:<5} {:<5} {:<5} agree",
            "group", "p", "|G|", "k", "kB0", "k0", "P", "N/C", "fpf", "pred", "obs"
        )?;
        for v in &self.verdicts {
            writeln!(
                f,
                "{:<12} {:>2} {:>6} {:>4} {:>4} {:>4} {:<8} {:<8} {:<5} {:<5} {:<5} {}",
                v.group,
                v.p,
                v.order,
                v.class_count,
                v.kb0,
                v.k0b0,
                v.sylow_iso,
                v.local_iso.as_deref().unwrap_or("-"),
                v.fixed_point_free
                    .map_or("-".to_string(), |b| b.to_string()),
                v.theorem_b_predicted,
                v.theorem_b_observed,
                if v.agree { "yes" } else { "NO" }
            )?;
        }
        let bad: Vec<&SmallBlockRecord> = self.rows.iter().filter(|r| !r.agree).collect();
        writeln!(
            f,
            "table rows: {} checks, {} disagreements",
            self.rows.len(),
            bad.len()
        )?;
        for r in bad {
            writeln!(
                f,
                "  row k(B0)={} {} at p={}: kB0={} P={} condition={}",
                r.row, r.group, r.p, r.kb0, r.sylow_iso, r.condition
            )?;
        }
        write!(
            f,
            "verdicts: {}, disagreements: {}",
            self.verdicts.len(),
            self.disagreements()
        )
    }
}

/// Verdicts and table-row checks for one group at every prime dividing its order.
pub fn evaluate_group(name: &str, group: &Group) -> Result<CensusReport, CensusError> {
    let table = character_table(group)?;
    let mut verdicts = Vec::new();
    let mut rows = Vec::new();
    for p in primes_to_test(group) {
        let summary = summary_from_table(group, &table, p)?;
        let local = abelian_local(group, p)?;
        verdicts.push(verdict(name, group, &table, p, &summary, local.as_ref()));
        rows.extend(row_records_with(name, group, p, &summary, local.as_ref()));
    }
    Ok(CensusReport { verdicts, rows })
}

/// Evaluates every group independently and concatenates the reports in input order.
pub fn run_census(groups: &[(String, Group)]) -> Result<CensusReport, CensusError> {
    let parts: Vec<CensusReport> = groups
        .par_iter()
        .map(|(name, g)| evaluate_group(name, g))
        .collect::<Result<_, _>>()?;
    let mut out = CensusReport {
        verdicts: Vec::new(),
        rows: Vec::new(),
    };
    for r in parts {
        out.verdicts.extend(r.verdicts);
        out.rows.extend(r.rows);
    }
    Ok(out)
}

pub fn build_corpus(entries: &[CorpusEntry]) -> Result<Vec<(String, Group)>, CensusError> {
    entries
        .par_iter()
        .map(|e| Ok((e.name.clone(), e.build()?)))
        .collect()
}

pub fn run_builtin_census() -> Result<CensusReport, CensusError> {
    run_census(&build_corpus(&builtin_corpus())?)
}
