use std::collections::{HashMap, HashSet};

use super::perm::lcm;
use super::{GroupError, Perm};

pub const DEFAULT_ENUMERATION_BOUND: usize = 50_000;

/// A permutation group with its full, lexicographically sorted element list.
///
/// The identity is always element 0. Groups are immutable once built.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl Group {
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        Group::generate_bounded(degree, gens, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn generate_bounded(
        degree: usize,
        gens: Vec<Perm>,
        bound: usize,
    ) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let set = extend_closure(HashSet::from([Perm::identity(degree)]), &gens, bound)?;
        Ok(Group::from_parts(degree, gens, set.into_iter().collect()))
    }

    pub fn trivial(degree: usize) -> Self {
        Group::from_parts(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    fn from_parts(degree: usize, gens: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Group {
            degree,
            gens,
            elements,
            index,
        }
    }

    /// Wraps an element set already known to be closed under multiplication,
    /// picking a small generating set greedily in element order.
    pub(crate) fn from_closed_set(degree: usize, elements: Vec<Perm>) -> Self {
        let mut sorted = elements;
        sorted.sort();
        let mut gens = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for x in &sorted {
            if span.len() == sorted.len() {
                break;
            }
            if !span.contains(x) {
                gens.push(x.clone());
                span = extend_closure(span, &gens, usize::MAX)
                    .expect("closure of a finite subset is bounded");
            }
        }
        debug_assert_eq!(span.len(), sorted.len());
        Group::from_parts(degree, gens, sorted)
    }

    /// Subgroup generated by `gens` inside the symmetric group of this degree.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Group {
        Group::generate_bounded(self.degree, gens, usize::MAX)
            .expect("subgroup of an enumerated group is bounded")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|g| g.order() == n)
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| lcm(acc, g.order()))
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// True iff `self` is a normal subgroup of `over`.
    pub fn is_normal_in(&self, over: &Group) -> bool {
        self.is_subgroup_of(over)
            && over
                .gens
                .iter()
                .all(|g| self.gens.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn same_elements(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn order_statistics(&self) -> Vec<(u64, u64)> {
        let mut counts = std::collections::BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.order()).or_insert(0u64) += 1;
        }
        counts.into_iter().collect()
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

/// Smallest set containing `start` and closed under right multiplication by
/// `gens`. When `start` is a subgroup this is the subgroup it generates with `gens`.
fn extend_closure(
    start: HashSet<Perm>,
    gens: &[Perm],
    bound: usize,
) -> Result<HashSet<Perm>, GroupError> {
    let mut seen = start;
    let mut queue: Vec<Perm> = seen.iter().cloned().collect();
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return Err(GroupError::ClosureTooLarge { bound });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s).unwrap()
    }

    #[test]
    fn cyclic_closure() {
        let g = Group::generate(3, vec![p(3, "(0 1 2)")]).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn sym3_closure_matches_brute_force() {
        let g = Group::generate(3, vec![p(3, "(0 1)"), p(3, "(0 1 2)")]).unwrap();
        // brute force: all 3! image lists are permutations, and all are reached
        let mut all = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    if let Ok(q) = Perm::from_images(vec![a, b, c]) {
                        all.push(q);
                    }
                }
            }
        }
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|q| g.contains(q)));
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = Group::generate(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn closure_bound_is_enforced() {
        let gens = vec![p(6, "(0 1)"), p(6, "(0 1 2 3 4 5)")];
        let err = Group::generate_bounded(6, gens, 100).unwrap_err();
        assert_eq!(err, GroupError::ClosureTooLarge { bound: 100 });
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = Group::generate(4, vec![p(3, "(0 1)")]).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }

    #[test]
    fn element_order_is_generator_independent() {
        let a = Group::generate(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap();
        let b = Group::generate(4, vec![p(4, "(2 3)"), p(4, "(1 2 3)"), p(4, "(0 1)")]).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert!(a.elements()[0].is_identity());
    }

    #[test]
    fn closed_set_generators_regenerate_the_set() {
        let g = Group::generate(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap();
        let h = Group::from_closed_set(4, g.elements().to_vec());
        let again = Group::generate(4, h.generators().to_vec()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }
}
